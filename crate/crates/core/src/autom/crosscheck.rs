//! Binomial expansion of `(m + n√D)^s` against field exponentiation.

use crate::gfp2::{GfElement, GfParams};
use crate::numtheory::{pow_mod, Modulus};

/// Row `s` of Pascal's triangle reduced mod `p`.
fn binomial_row(s: u64, p: u64) -> Vec<u64> {
    let mut row = vec![1u64];
    for _ in 0..s {
        let mut next = vec![1u64; row.len() + 1];
        for k in 1..row.len() {
            next[k] = (row[k - 1] + row[k]) % p;
        }
        row = next;
    }
    row
}

/// The `(M, N)` with `(m + n√D)^s = M + N√D`, summed term by term.
pub fn mn_sums(params: GfParams, base: GfElement, s: u64) -> (u64, u64) {
    let p = params.p();
    let modp = Modulus::new(p).expect("p is at least 3");
    let (m, n, d) = (base.a(), base.b(), params.d());
    let pw = |x: u64, e: u64| pow_mod(x, e, &modp);
    let row = binomial_row(s, p);
    let mut big_m = 0;
    let mut big_n = 0;
    for t in 0..=s / 2 {
        let term = row[2 * t as usize] * pw(m, s - 2 * t) % p * pw(n, 2 * t) % p * pw(d, t) % p;
        big_m = (big_m + term) % p;
    }
    for t in 0..s.div_ceil(2) {
        let term = row[2 * t as usize + 1] * pw(m, s - 2 * t - 1) % p * pw(n, 2 * t + 1) % p * pw(d, t) % p;
        big_n = (big_n + term) % p;
    }
    (big_m, big_n)
}

/// Whether the binomial sums agree with `base.pow(s)`.
pub fn mn_sum_crosscheck(params: GfParams, base: GfElement, s: u64) -> bool {
    let x = base.pow(s);
    mn_sums(params, base, s) == (x.a(), x.b())
}
