//! Arithmetic in `GF(p^2)` written as `a + b*sqrt(D)` with `D` a quadratic
//! non-residue modulo the odd prime `p`.

use std::fmt;

use thiserror::Error;

use crate::numtheory::{is_prime, is_quadratic_residue, smallest_nonresidue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GfError {
    #[error("p = {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("D = {d} is a square modulo {p}")]
    ResidueD { p: u64, d: u64 },
    #[error("operands live in different fields")]
    ParamMismatch,
    #[error("zero has no multiplicative order")]
    ZeroElement,
    #[error("{k} does not divide p^2 - 1 = {group_order}")]
    NotDivisor { k: u64, group_order: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GfParams {
    p: u64,
    d: u64,
}

impl GfParams {
    pub fn new(p: u64, d: u64) -> Result<Self, GfError> {
        if p == 2 || !is_prime(p) {
            return Err(GfError::NotOddPrime(p));
        }
        let d = d % p;
        if is_quadratic_residue(d, p) {
            return Err(GfError::ResidueD { p, d });
        }
        Ok(GfParams { p, d })
    }

    /// `D` = smallest non-residue modulo `p`.
    pub fn canonical(p: u64) -> Result<Self, GfError> {
        if p == 2 || !is_prime(p) {
            return Err(GfError::NotOddPrime(p));
        }
        GfParams::new(p, smallest_nonresidue(p))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn d(&self) -> u64 {
        self.d
    }

    /// Order of the multiplicative group, `p^2 - 1`.
    pub fn unit_count(&self) -> u64 {
        self.p * self.p - 1
    }

    pub fn element(&self, a: u64, b: u64) -> GfElement {
        GfElement { a: a % self.p, b: b % self.p, params: *self }
    }

    pub fn one(&self) -> GfElement {
        self.element(1, 0)
    }

    pub fn zero(&self) -> GfElement {
        self.element(0, 0)
    }

    /// All `p^2` field elements, `a` outer and `b` inner, both ascending.
    pub fn elements(&self) -> impl Iterator<Item = GfElement> + '_ {
        (0..self.p).flat_map(move |a| (0..self.p).map(move |b| self.element(a, b)))
    }
}

/// `a + b*sqrt(D)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GfElement {
    a: u64,
    b: u64,
    params: GfParams,
}

impl fmt::Debug for GfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}√{} (mod {})", self.a, self.b, self.params.d, self.params.p)
    }
}

impl fmt::Display for GfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}√{}", self.a, self.b, self.params.d)
    }
}

impl GfElement {
    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn params(&self) -> GfParams {
        self.params
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_one(&self) -> bool {
        self.a == 1 && self.b == 0
    }

    pub fn add(&self, other: &GfElement) -> Result<GfElement, GfError> {
        if self.params != other.params {
            return Err(GfError::ParamMismatch);
        }
        Ok(self.params.element(self.a + other.a, self.b + other.b))
    }

    pub fn mul(&self, other: &GfElement) -> Result<GfElement, GfError> {
        if self.params != other.params {
            return Err(GfError::ParamMismatch);
        }
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &GfElement) -> GfElement {
        let p = self.params.p as u128;
        let (a, b, c, d) = (self.a as u128, self.b as u128, other.a as u128, other.b as u128);
        let dd = self.params.d as u128;
        GfElement { a: ((a * c + dd * (b * d % p)) % p) as u64, b: ((a * d + b * c) % p) as u64, params: self.params }
    }

    pub fn pow(&self, mut e: u64) -> GfElement {
        let mut result = self.params.one();
        let mut base = *self;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            base = base.mul_unchecked(&base);
            e >>= 1;
        }
        result
    }

    /// Least `d >= 1` with `x^d = 1`; always divides `p^2 - 1`.
    pub fn order(&self) -> Result<u64, GfError> {
        if self.is_zero() {
            return Err(GfError::ZeroElement);
        }
        let n = self.params.unit_count();
        let mut order = n;
        let mut rest = n;
        let mut f = 2;
        while rest > 1 {
            if rest.is_multiple_of(f) {
                while rest.is_multiple_of(f) {
                    rest /= f;
                }
                while order.is_multiple_of(f) && self.pow(order / f).is_one() {
                    order /= f;
                }
            }
            f += 1;
        }
        Ok(order)
    }
}

/// First element of order `p^2 - 1` in `(a, b)` lexicographic order.
pub fn primitive_root(params: GfParams) -> GfElement {
    let n = params.unit_count();
    params.elements().find(|x| !x.is_zero() && x.order() == Ok(n)).expect("GF(p^2)^* is cyclic")
}

/// `sigma^((p^2 - 1)/k)` for the canonical primitive root `sigma`; an element of
/// order exactly `k`.
pub fn subgroup_parameter(params: GfParams, k: u64) -> Result<GfElement, GfError> {
    let n = params.unit_count();
    if k == 0 || !n.is_multiple_of(k) {
        return Err(GfError::NotDivisor { k, group_order: n });
    }
    Ok(primitive_root(params).pow(n / k))
}
