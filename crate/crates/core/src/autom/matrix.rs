//! Automorphisms of `G = H ⋊ K` as matrices of maps `(α, β; γ, δ)`, where
//! `θ(h) = α(h)γ(h)` and `θ(k) = β(k)δ(k)`, and the five conditions that
//! characterise when such a matrix is an automorphism.
//!
//! Conjugation is `x^y = y^-1 x y`. With that convention the conditions read
//! (i) `α(hh') = α(h) · γ(h) α(h') γ(h)^-1` and `γ` is a homomorphism,
//! (ii) `β(kk') = β(k) · δ(k) β(k') δ(k)^-1` and `δ` is a homomorphism,
//! (iii) `γ(h^k) = γ(h)^δ(k)`,
//! (iv) `α(h^k)` is the `H`-part of `θ(h)^θ(k)`,
//! (v) `hk ↦ α(h)γ(h)β(k)δ(k)` is a bijection.

use std::fmt;

use serde::Serialize;

use super::Automorphism;
use crate::catalog::BuiltGroup;
use crate::group::PcGroup;

/// Generator-level data of a matrix of maps. `alpha` and `gamma` are indexed
/// by the `H` generators, `beta` and `delta` by the `K` generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutMatrix {
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    pub gamma: Vec<usize>,
    pub delta: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MatrixCondition {
    I,
    II,
    III,
    IV,
    V,
}

impl fmt::Display for MatrixCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MatrixCondition::I => "(i)",
            MatrixCondition::II => "(ii)",
            MatrixCondition::III => "(iii)",
            MatrixCondition::IV => "(iv)",
            MatrixCondition::V => "(v)",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixViolation {
    pub condition: MatrixCondition,
    pub detail: String,
}

impl fmt::Display for MatrixViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "condition {} fails: {}", self.condition, self.detail)
    }
}

// H is the index range [0, |H|) because K generators are most significant;
// K is the set of multiples of |H|.
struct Split<'a> {
    g: &'a PcGroup,
    k_count: usize,
    h_order: usize,
    k_order: usize,
}

impl<'a> Split<'a> {
    fn new(b: &'a BuiltGroup) -> Self {
        let g = &b.group;
        let k_count = b.k_count.expect("matrix form needs an H ⋊ K split");
        let h_order = if k_count == 0 { g.order() } else { g.strides()[k_count - 1] };
        Split { g, k_count, h_order, k_order: g.order() / h_order }
    }

    fn k_part(&self, x: usize) -> usize {
        x - x % self.h_order
    }

    /// `x = h k` with `h` in `H`, `k` in `K`.
    fn h_part(&self, x: usize) -> usize {
        self.g.mul(x, self.g.inv(self.k_part(x)))
    }

    fn in_h(&self, x: usize) -> bool {
        x < self.h_order
    }

    fn in_k(&self, x: usize) -> bool {
        x.is_multiple_of(self.h_order)
    }

    fn k_elem(&self, ordinal: usize) -> usize {
        ordinal * self.h_order
    }
}

/// Matrix of an automorphism given by generator images.
pub fn matrix_of(b: &BuiltGroup, theta: &Automorphism) -> AutMatrix {
    let s = Split::new(b);
    let n = b.group.gen_count();
    let mut m = AutMatrix { alpha: vec![], beta: vec![], gamma: vec![], delta: vec![] };
    for i in 0..n {
        let y = theta.image(i);
        if i < s.k_count {
            m.beta.push(s.h_part(y));
            m.delta.push(s.k_part(y));
        } else {
            m.alpha.push(s.h_part(y));
            m.gamma.push(s.k_part(y));
        }
    }
    m
}

fn violation(condition: MatrixCondition, detail: String) -> Result<(), MatrixViolation> {
    Err(MatrixViolation { condition, detail })
}

/// Check conditions (i) to (v) exhaustively; report the first that fails.
pub fn verify_aut_matrix(b: &BuiltGroup, m: &AutMatrix) -> Result<(), MatrixViolation> {
    use MatrixCondition::*;
    let s = Split::new(b);
    let g = s.g;
    let strides = g.strides();
    let fmt = |x: usize| g.format_element(x);
    if m.alpha.len() != g.gen_count() - s.k_count || m.beta.len() != s.k_count {
        return violation(V, "matrix shape does not match the generator split".into());
    }
    if let Some(&x) = m.alpha.iter().find(|&&x| !s.in_h(x)) {
        return violation(I, format!("alpha image {} is not in H", fmt(x)));
    }
    if let Some(&x) = m.gamma.iter().find(|&&x| !s.in_k(x)) {
        return violation(I, format!("gamma image {} is not in K", fmt(x)));
    }
    if let Some(&x) = m.beta.iter().find(|&&x| !s.in_h(x)) {
        return violation(II, format!("beta image {} is not in H", fmt(x)));
    }
    if let Some(&x) = m.delta.iter().find(|&&x| !s.in_k(x)) {
        return violation(II, format!("delta image {} is not in K", fmt(x)));
    }

    // extend along normal forms: h = h' g  =>  alpha(h) = alpha(h') . gamma(h') alpha(g) gamma(h')^-1
    let twist = |y: usize, by: usize| g.mul(g.mul(by, y), g.inv(by));
    let mut alpha = vec![0usize; s.h_order];
    let mut gamma = vec![0usize; s.h_order];
    for h in 1..s.h_order {
        let kk = g.last_generator(h);
        let prev = h - strides[kk];
        let j = kk - s.k_count;
        alpha[h] = g.mul(alpha[prev], twist(m.alpha[j], gamma[prev]));
        gamma[h] = g.mul(gamma[prev], m.gamma[j]);
    }
    let mut beta = vec![0usize; s.k_order];
    let mut delta = vec![0usize; s.k_order];
    for o in 1..s.k_order {
        let k = s.k_elem(o);
        let kk = g.last_generator(k);
        let prev = (k - strides[kk]) / s.h_order;
        beta[o] = g.mul(beta[prev], twist(m.beta[kk], delta[prev]));
        delta[o] = g.mul(delta[prev], m.delta[kk]);
    }

    for h in 0..s.h_order {
        for h2 in 0..s.h_order {
            let hh = g.mul(h, h2);
            if gamma[hh] != g.mul(gamma[h], gamma[h2]) {
                return violation(I, format!("gamma is not a homomorphism at ({}, {})", fmt(h), fmt(h2)));
            }
            if alpha[hh] != g.mul(alpha[h], twist(alpha[h2], gamma[h])) {
                return violation(I, format!("alpha fails at ({}, {})", fmt(h), fmt(h2)));
            }
        }
    }
    for o in 0..s.k_order {
        for o2 in 0..s.k_order {
            let kk = g.mul(s.k_elem(o), s.k_elem(o2)) / s.h_order;
            if delta[kk] != g.mul(delta[o], delta[o2]) {
                return violation(
                    II,
                    format!("delta is not a homomorphism at ({}, {})", fmt(s.k_elem(o)), fmt(s.k_elem(o2))),
                );
            }
            if beta[kk] != g.mul(beta[o], twist(beta[o2], delta[o])) {
                return violation(II, format!("beta fails at ({}, {})", fmt(s.k_elem(o)), fmt(s.k_elem(o2))));
            }
        }
    }
    for o in 0..s.k_order {
        let k = s.k_elem(o);
        let theta_k = g.mul(beta[o], delta[o]);
        for h in 0..s.h_order {
            let hk = g.conj(h, k);
            if gamma[hk] != g.conj(gamma[h], delta[o]) {
                return violation(III, format!("gamma fails on {}^{}", fmt(h), fmt(k)));
            }
            let theta_h = g.mul(alpha[h], gamma[h]);
            if alpha[hk] != s.h_part(g.conj(theta_h, theta_k)) {
                return violation(IV, format!("alpha fails on {}^{}", fmt(h), fmt(k)));
            }
        }
    }
    let mut seen = vec![false; g.order()];
    for h in 0..s.h_order {
        let theta_h = g.mul(alpha[h], gamma[h]);
        for o in 0..s.k_order {
            let y = g.mul(theta_h, g.mul(beta[o], delta[o]));
            if std::mem::replace(&mut seen[y], true) {
                return violation(V, format!("{} is hit twice", fmt(y)));
            }
        }
    }
    Ok(())
}
