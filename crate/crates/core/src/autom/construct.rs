//! Explicit `Aut(G) = Q ⋊ R` for the semidirect types 19 to 36.
//!
//! `R` collects the automorphisms with `β` trivial, parameterised by the
//! compatible pairs `(α, δ)`; `Q` those with `α` and `δ` the identity and `β`
//! ranging over the crossed maps `K -> H`. Every family member is checked to
//! be an automorphism before it is used.

use num_integer::Integer;

use super::{AutError, AutGroup, Automorphism};
use crate::catalog::BuiltGroup;
use crate::group::PcGroup;

#[derive(Debug, Clone)]
pub struct Construction {
    pub q: AutGroup,
    pub r: AutGroup,
    pub qr: AutGroup,
}

fn units(n: u64) -> impl Iterator<Item = u64> {
    (1..n).filter(move |x| x.gcd(&n) == 1)
}

struct Ctx<'a> {
    g: &'a PcGroup,
    type_id: u8,
}

impl Ctx<'_> {
    fn pw(&self, i: usize, e: u64) -> usize {
        self.g.pow(self.g.generator(i), e)
    }

    /// `g_i^e g_j^f`.
    fn pw2(&self, i: usize, e: u64, j: usize, f: u64) -> usize {
        self.g.mul(self.pw(i, e), self.pw(j, f))
    }

    fn m(&self, x: usize, y: usize) -> usize {
        self.g.mul(x, y)
    }

    fn gen(&self, i: usize) -> usize {
        self.g.generator(i)
    }

    fn auto(&self, label: &str, images: &[usize]) -> Result<Automorphism, AutError> {
        let a = Automorphism::from_images(images);
        if a.is_automorphism(self.g) {
            Ok(a)
        } else {
            let words: Vec<String> = images.iter().map(|&x| self.g.format_element(x)).collect();
            Err(AutError::ConstraintUnsatisfiable(format!(
                "type {}: {label} member [{}] is not an automorphism",
                self.type_id,
                words.join(", ")
            )))
        }
    }
}

fn gl2(p: u64) -> impl Iterator<Item = (u64, u64, u64, u64)> {
    (0..p).flat_map(move |i| {
        (0..p).flat_map(move |j| {
            (0..p).flat_map(move |l| {
                (0..p).filter(move |&k| !(i * k + p * p - j * l % p).is_multiple_of(p)).map(move |k| (i, j, l, k))
            })
        })
    })
}

/// `Q`, `R` and their join for a semidirect catalog group.
pub fn construct_qr(b: &BuiltGroup) -> Result<Construction, AutError> {
    let spec = &b.spec;
    let t = spec.type_id;
    if !(19..=36).contains(&t) {
        return Err(AutError::NotSemidirect(t));
    }
    let (p, q) = (spec.p, spec.q);
    let g = &b.group;
    let c = Ctx { g, type_id: t };
    let mut r_members = Vec::new();
    let mut q_members = Vec::new();
    let params = &spec.params;

    match t {
        19 | 20 => {
            let modq = if t == 19 { q } else { q * q };
            for i in units(p * p) {
                for j in units(q * q).filter(|j| j % modq == 1 % modq) {
                    r_members.push(c.auto("R", &[c.pw(0, j), c.pw(1, i)])?);
                }
            }
            for lam in 0..p * p {
                q_members.push(c.auto("Q", &[c.m(c.pw(1, lam), c.gen(0)), c.gen(1)])?);
            }
        }
        21 => {
            for s in units(p * p) {
                for j in 0..q {
                    for k in 1..q {
                        r_members.push(c.auto("R", &[c.pw2(0, 1, 1, j), c.pw(1, k), c.pw(2, s)])?);
                    }
                }
            }
            for lam in 0..p * p {
                q_members.push(c.auto("Q", &[c.m(c.pw(2, lam), c.gen(0)), c.gen(1), c.gen(2)])?);
            }
        }
        22..=32 => {
            let a_order = if t == 23 || t == 31 { 4 } else { q * q };
            let s_values =
                |modulus: u64, residue: u64| units(a_order).filter(move |s| s % modulus == residue % modulus);
            let mut push_r = |s: u64, bi: usize, ci: usize| -> Result<(), AutError> {
                r_members.push(c.auto("R", &[c.pw(0, s), bi, ci])?);
                Ok(())
            };
            match t {
                22 | 29 => {
                    let sv: Vec<u64> = if t == 22 { s_values(q, 1).collect() } else { vec![1] };
                    for (i, j, l, k) in gl2(p) {
                        for &s in &sv {
                            push_r(s, c.pw2(1, i, 2, j), c.pw2(1, l, 2, k))?;
                        }
                    }
                }
                23 | 24 | 27 | 28 => {
                    let sv: Vec<u64> = match t {
                        23 => vec![1, 3],
                        28 => s_values(q * q, 1).collect(),
                        _ => s_values(q, 1).collect(),
                    };
                    for i in 1..p {
                        for k in 1..p {
                            for &s in &sv {
                                push_r(s, c.pw(1, i), c.pw(2, k))?;
                            }
                        }
                    }
                }
                25 | 26 => {
                    let modq = if t == 25 { q } else { q * q };
                    for i in 1..p {
                        for k in 1..p {
                            for s in s_values(modq, 1) {
                                push_r(s, c.pw(1, i), c.pw(2, k))?;
                            }
                            for s in s_values(modq, modq - 1) {
                                push_r(s, c.pw(2, i), c.pw(1, k))?;
                            }
                        }
                    }
                }
                _ => {
                    let gf = params.gf.expect("gf parameters");
                    let ord_w = match t {
                        30 => q,
                        31 => 4,
                        _ => q * q,
                    };
                    let d = gf.d;
                    for (eps, res) in [(1u64, 1u64), (p - 1, ord_w - 1)] {
                        for i in 0..p {
                            for l in 0..p {
                                if i == 0 && l == 0 {
                                    continue;
                                }
                                let bi = c.pw2(1, i, 2, eps * l % p * d);
                                let ci = c.pw2(1, l, 2, eps * i);
                                for s in s_values(ord_w, res) {
                                    push_r(s, bi, ci)?;
                                }
                            }
                        }
                    }
                }
            }
            for lam in 0..p {
                for rho in 0..p {
                    if (t == 23 || t == 24) && lam != 0 {
                        continue;
                    }
                    let shift = c.m(c.pw2(1, lam, 2, rho), c.gen(0));
                    q_members.push(c.auto("Q", &[shift, c.gen(1), c.gen(2)])?);
                }
            }
        }
        33 | 36 => {
            let mut alphas = Vec::new();
            let mut b_exps = vec![1u64];
            if t == 33 {
                for (i, j, l, k) in gl2(p) {
                    alphas.push((c.pw2(2, i, 3, j), c.pw2(2, l, 3, k), 1));
                }
            } else {
                let d = params.gf.expect("gf parameters").d;
                b_exps.push(q - 1);
                for (eps, be) in [(1u64, 1u64), (p - 1, q - 1)] {
                    for i in 0..p {
                        for l in 0..p {
                            if i == 0 && l == 0 {
                                continue;
                            }
                            alphas.push((c.pw2(2, i, 3, eps * l % p * d), c.pw2(2, l, 3, eps * i), be));
                        }
                    }
                }
            }
            for &(ci, di, be) in &alphas {
                for m in 1..q {
                    for s in 0..q {
                        let bi = c.m(c.pw(0, s), c.pw(1, be));
                        r_members.push(c.auto("R", &[c.pw(0, m), bi, ci, di])?);
                    }
                }
            }
            for rho in 0..p {
                for nu in 0..p {
                    let bi = c.m(c.pw2(2, rho, 3, nu), c.gen(1));
                    q_members.push(c.auto("Q", &[c.gen(0), bi, c.gen(2), c.gen(3)])?);
                }
            }
        }
        34 => {
            for i in 1..p {
                for k in 1..p {
                    for s in 0..2 {
                        let bi = c.m(c.pw(0, s), c.gen(1));
                        r_members.push(c.auto("R", &[c.gen(0), bi, c.pw(2, i), c.pw(3, k)])?);
                    }
                }
            }
            for rho in 0..p {
                let bi = c.m(c.pw(2, rho), c.gen(1));
                q_members.push(c.auto("Q", &[c.gen(0), bi, c.gen(2), c.gen(3)])?);
            }
        }
        _ => {
            for i in 1..p {
                for k in 1..p {
                    r_members.push(c.auto("R", &[c.gen(0), c.gen(1), c.pw(2, i), c.pw(3, k)])?);
                    r_members.push(c.auto("R", &[c.gen(1), c.gen(0), c.pw(3, i), c.pw(2, k)])?);
                }
            }
            for lam in 0..p {
                for nu in 0..p {
                    let ai = c.m(c.pw(2, lam), c.gen(0));
                    let bi = c.m(c.pw(3, nu), c.gen(1));
                    q_members.push(c.auto("Q", &[ai, bi, c.gen(2), c.gen(3)])?);
                }
            }
        }
    }
    if r_members.is_empty() || q_members.is_empty() {
        return Err(AutError::ConstraintUnsatisfiable(format!("type {t}: empty family")));
    }
    let q_group = AutGroup::closure_greedy(g, &q_members);
    let r_group = AutGroup::closure_greedy(g, &r_members);
    let mut gens = q_group.generators().to_vec();
    gens.extend_from_slice(r_group.generators());
    let qr = AutGroup::closure(g, &gens);
    Ok(Construction { q: q_group, r: r_group, qr })
}

/// `Q` normal in `QR`, `Q ∩ R` trivial and `|QR| = |Q||R|`.
pub fn check_main_theorem(g: &PcGroup, q: &AutGroup, r: &AutGroup, qr: &AutGroup) -> bool {
    let q_gens = q.generating_set(g);
    let r_gens = r.generating_set(g);
    let normal = r_gens.iter().all(|x| {
        let xi = x.inverse(g);
        q_gens.iter().all(|y| q.contains(&xi.compose(&y.compose(x, g), g)))
    });
    let (small, large) = if q.order() <= r.order() { (q, r) } else { (r, q) };
    let meet = small.elements().iter().filter(|a| large.contains(a)).count();
    normal && meet == 1 && qr.order() == q.order() * r.order()
}
