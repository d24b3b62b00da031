//! Modular arithmetic over `Z/mZ` for the small moduli that parameterise the
//! catalog: `p`, `p^2`, `q`, `q^2`.

use num_integer::Integer;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("no unit of order {order} modulo {modulus}")]
    NoSuchElement { order: u64, modulus: u64 },
    #[error("{residue} is not a unit modulo {modulus}")]
    NotAUnit { residue: u64, modulus: u64 },
}

/// A modulus together with its prime factorisation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Modulus {
    value: u64,
    factors: Vec<(u64, u32)>,
}

impl Modulus {
    /// Factor `value` by trial division. Catalog moduli are tiny.
    pub fn new(value: u64) -> Result<Self, NumError> {
        if value < 2 {
            return Err(NumError::BadModulus(value));
        }
        Ok(Modulus { value, factors: trial_factor(value) })
    }

    /// `p^k` without factoring. `p` must be prime.
    pub fn prime_power(p: u64, k: u32) -> Self {
        debug_assert!(is_prime(p) && k >= 1);
        Modulus { value: p.pow(k), factors: vec![(p, k)] }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Euler's totient from the stored factorisation.
    pub fn phi(&self) -> u64 {
        self.factors.iter().map(|&(p, k)| (p - 1) * p.pow(k - 1)).product()
    }

    /// Reduce a signed integer into `[0, m)`.
    pub fn reduce(&self, x: i64) -> u64 {
        x.rem_euclid(self.value as i64) as u64
    }
}

/// A residue coprime to its modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnitElement {
    residue: u64,
    modulus: Modulus,
}

impl UnitElement {
    pub fn new(residue: u64, modulus: &Modulus) -> Result<Self, NumError> {
        let r = residue % modulus.value;
        if r.gcd(&modulus.value) != 1 {
            return Err(NumError::NotAUnit { residue, modulus: modulus.value });
        }
        Ok(UnitElement { residue: r, modulus: modulus.clone() })
    }

    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn inverse(&self) -> UnitElement {
        let inv = inv_mod(self.residue, self.modulus.value).expect("unit elements are invertible");
        UnitElement { residue: inv, modulus: self.modulus.clone() }
    }

    pub fn pow(&self, e: u64) -> UnitElement {
        UnitElement { residue: pow_mod(self.residue, e, &self.modulus), modulus: self.modulus.clone() }
    }
}

fn trial_factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut k = 0;
            while n.is_multiple_of(d) {
                n /= d;
                k += 1;
            }
            out.push((d, k));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod_raw(base: u64, mut exp: u64, m: u64) -> u64 {
    let mut result = 1 % m;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = mul_mod(result, b, m);
        }
        b = mul_mod(b, b, m);
        exp >>= 1;
    }
    result
}

/// `base^exp mod m` by square-and-multiply.
pub fn pow_mod(base: u64, exp: u64, m: &Modulus) -> u64 {
    pow_mod_raw(base, exp, m.value)
}

/// Signed-base variant of [`pow_mod`].
pub fn pow_mod_signed(base: i64, exp: u64, m: &Modulus) -> u64 {
    pow_mod(m.reduce(base), exp, m)
}

pub fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let e = (a as i64).extended_gcd(&(m as i64));
    if e.gcd != 1 {
        return None;
    }
    Some(e.x.rem_euclid(m as i64) as u64)
}

// Jaeschke / Sinclair witness set, deterministic below 2^64.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod_raw(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Least `d >= 1` with `u^d = 1`.
pub fn multiplicative_order(u: &UnitElement) -> u64 {
    let m = &u.modulus;
    let mut order = m.phi();
    for (p, _) in trial_factor(order) {
        while order.is_multiple_of(p) && pow_mod(u.residue, order / p, m) == 1 {
            order /= p;
        }
    }
    order
}

/// The smallest residue `r > 1` of multiplicative order exactly `d`
/// (or `1` when `d = 1`).
pub fn element_of_order(d: u64, m: &Modulus) -> Result<UnitElement, NumError> {
    let no_such = || NumError::NoSuchElement { order: d, modulus: m.value };
    if d == 0 || !m.phi().is_multiple_of(d) {
        return Err(no_such());
    }
    if d == 1 {
        return UnitElement::new(1, m);
    }
    (2..m.value)
        .filter(|r| r.gcd(&m.value) == 1)
        .map(|r| UnitElement { residue: r, modulus: m.clone() })
        .find(|u| multiplicative_order(u) == d)
        .ok_or_else(no_such)
}

/// Smallest `D >= 2` that is not a square modulo the odd prime `p`.
pub fn smallest_nonresidue(p: u64) -> u64 {
    assert!(p > 2 && is_prime(p), "smallest_nonresidue needs an odd prime");
    let m = Modulus::prime_power(p, 1);
    (2..p).find(|&d| pow_mod(d, (p - 1) / 2, &m) == p - 1).expect("an odd prime has (p-1)/2 non-residues")
}

/// Euler criterion.
pub fn is_quadratic_residue(a: u64, p: u64) -> bool {
    let m = Modulus::prime_power(p, 1);
    a.is_multiple_of(p) || pow_mod(a, (p - 1) / 2, &m) == 1
}

/// Primes in `[lo, hi]`, ascending.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(2)..=hi).filter(|&n| is_prime(n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_order(r: u64, m: u64) -> u64 {
        let mut x = r % m;
        let mut d = 1;
        while x != 1 {
            x = x * r % m;
            d += 1;
        }
        d
    }

    fn trial_is_prime(n: u64) -> bool {
        n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(2));
        assert!(!is_prime(1));
        assert!(!is_prime(0));
        assert!(!is_prime(91));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to 2,3,5,7
        assert!(is_prime(18_446_744_073_709_551_557));
    }

    #[test]
    fn primality_agrees_with_trial_division() {
        for n in 0..5000 {
            assert_eq!(is_prime(n), trial_is_prime(n), "n = {n}");
        }
    }

    #[test]
    fn pow_mod_examples() {
        assert_eq!(pow_mod(2, 10, &Modulus::new(1000).unwrap()), 24);
        assert_eq!(pow_mod(17, 0, &Modulus::new(23).unwrap()), 1);
        assert_eq!(pow_mod(18, 3, &Modulus::new(49).unwrap()), 1);
        assert_eq!(pow_mod_signed(-1, 3, &Modulus::new(25).unwrap()), 24);
    }

    #[test]
    fn pow_mod_matches_repeated_multiplication() {
        for m in 2..=50u64 {
            let modulus = Modulus::new(m).unwrap();
            for base in 0..m {
                let mut naive = 1 % m;
                for exp in 0..=20u64 {
                    assert_eq!(pow_mod(base, exp, &modulus), naive, "{base}^{exp} mod {m}");
                    naive = naive * base % m;
                }
            }
        }
    }

    #[test]
    fn element_of_order_examples() {
        let m25 = Modulus::prime_power(5, 2);
        let m49 = Modulus::prime_power(7, 2);
        assert_eq!(element_of_order(2, &m25).unwrap().residue(), 24);
        // brute scan: first r in 2..49 with r^3 = 1 and r != 1
        let scan = (2..49u64).find(|&r| r * r * r % 49 == 1).unwrap();
        assert_eq!(scan, 18);
        assert_eq!(element_of_order(3, &m49).unwrap().residue(), 18);
        assert_eq!(
            element_of_order(5, &Modulus::prime_power(7, 1)),
            Err(NumError::NoSuchElement { order: 5, modulus: 7 })
        );
        assert_eq!(element_of_order(1, &m25).unwrap().residue(), 1);
    }

    #[test]
    fn element_of_order_has_that_order_and_is_smallest() {
        for p in primes_in(2, 23) {
            for k in 1..=2 {
                let m = Modulus::prime_power(p, k);
                let phi = m.phi();
                for d in (1..=phi).filter(|d| phi.is_multiple_of(*d)) {
                    let u = element_of_order(d, &m).unwrap();
                    assert_eq!(multiplicative_order(&u), d);
                    assert_eq!(brute_order(u.residue(), m.value()), d);
                    if d > 1 {
                        let first = (2..m.value())
                            .filter(|r| r.gcd(&m.value()) == 1)
                            .find(|&r| brute_order(r, m.value()) == d)
                            .unwrap();
                        assert_eq!(u.residue(), first);
                    }
                    assert_eq!(element_of_order(d, &m).unwrap(), u);
                }
            }
        }
    }

    #[test]
    fn multiplicative_order_examples() {
        let m25 = Modulus::prime_power(5, 2);
        let m49 = Modulus::prime_power(7, 2);
        assert_eq!(multiplicative_order(&UnitElement::new(24, &m25).unwrap()), 2);
        assert_eq!(multiplicative_order(&UnitElement::new(18, &m49).unwrap()), 3);
        assert_eq!(multiplicative_order(&UnitElement::new(1, &m25).unwrap()), 1);
        assert!(UnitElement::new(10, &m25).is_err());
    }

    #[test]
    fn nonresidue_examples_and_euler() {
        assert_eq!(smallest_nonresidue(3), 2);
        assert_eq!(smallest_nonresidue(5), 2);
        assert_eq!(smallest_nonresidue(7), 3);
        for p in primes_in(3, 200) {
            let d = smallest_nonresidue(p);
            let squares: Vec<u64> = (0..p).map(|x| x * x % p).collect();
            assert!(!squares.contains(&d));
            assert!((2..d).all(|x| squares.contains(&x)));
            assert_eq!(pow_mod(d, (p - 1) / 2, &Modulus::prime_power(p, 1)), p - 1);
        }
    }

    #[test]
    fn phi_from_factorisation() {
        assert_eq!(Modulus::new(36).unwrap().phi(), 12);
        assert_eq!(Modulus::prime_power(7, 2).phi(), 42);
        assert_eq!(Modulus::new(1), Err(NumError::BadModulus(1)));
    }
}
