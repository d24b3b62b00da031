//! Modular arithmetic helpers: orders of units, canonical parameters.
//!
//! cargo run --example number_theory -- 7 3

use p2q2::numtheory::{
    element_of_order, is_prime, multiplicative_order, primes_in, smallest_nonresidue, Modulus, UnitElement,
};

fn main() {
    let args: Vec<u64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let p = args.first().copied().unwrap_or(7);
    let q = args.get(1).copied().unwrap_or(3);
    assert!(is_prime(p) && is_prime(q), "both arguments must be prime");

    println!("primes below 30: {:?}", primes_in(2, 30));
    let m = Modulus::new(p * p).unwrap();
    println!("Z/{}: phi = {}, factors = {:?}", m.value(), m.phi(), m.factors());
    for r in 2..6.min(m.value()) {
        if let Ok(u) = UnitElement::new(r, &m) {
            println!("  ord({r}) = {}, inverse = {}", multiplicative_order(&u), u.inverse().residue());
        }
    }
    for d in [q, q * q] {
        match element_of_order(d, &m) {
            Ok(u) => println!("smallest unit of order {d} mod {}: {}", m.value(), u.residue()),
            Err(e) => println!("no unit of order {d} mod {}: {e}", m.value()),
        }
    }
    if p > 2 {
        println!("smallest non-residue mod {p}: {}", smallest_nonresidue(p));
    }
}
