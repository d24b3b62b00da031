//! The 36 isomorphism types of groups of order `p^2 q^2`: admissibility,
//! canonical parameters and presentations.
//!
//! For types 15 to 36 the generators of the Sylow `q`-subgroup `K` come first
//! and those of the normal Sylow `p`-subgroup `H` after them, so every group is
//! built as `H ⋊ K` with `K` acting by conjugation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::gfp2::{primitive_root, subgroup_parameter, GfError, GfParams};
use crate::group::{collect, GroupError, PcGroup, PcPresentation, CAYLEY_CAP};
use crate::numtheory::{element_of_order, inv_mod, is_prime, primes_in, Modulus, NumError};

pub const TYPE_COUNT: u8 = 36;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown type {0} (expected 1..=36)")]
    UnknownType(u32),
    #[error("type {type_id} is not admissible for p={p}, q={q}: {reason}")]
    Inadmissible { type_id: u8, p: u64, q: u64, reason: String },
    #[error("cannot parse group spec {0:?}; expected t<id>:p=<p>,q=<q>[,n=<k>]")]
    Parse(String),
    #[error("n = {n} is outside the allowed range for type {type_id} at q={q}")]
    NExpOutOfRange { type_id: u8, q: u64, n: u64 },
    #[error("type {0} takes no n parameter")]
    NExpNotApplicable(u8),
    #[error("parameter unavailable: {0}")]
    ParameterUnavailable(String),
    #[error("build check failed: {0}")]
    BuildAssertion(String),
    #[error(transparent)]
    Num(#[from] NumError),
    #[error(transparent)]
    Gf(#[from] GfError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Admissibility {
    Admissible,
    Inadmissible(String),
}

impl Admissibility {
    pub fn is_admissible(&self) -> bool {
        matches!(self, Admissibility::Admissible)
    }

    pub fn reason(&self) -> Option<&str> {
        match self {
            Admissibility::Admissible => None,
            Admissibility::Inadmissible(r) => Some(r),
        }
    }
}

/// `GF(p^2)` data behind the actions of types 30, 31, 32 and 36.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GfData {
    pub d: u64,
    pub sigma: (u64, u64),
    pub m: u64,
    pub n: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeParams {
    pub r: Option<u64>,
    pub n_exp: Option<u64>,
    pub gf: Option<GfData>,
    pub uv: Option<(u64, u64)>,
}

/// A fully parameterised catalog entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub type_id: u8,
    pub p: u64,
    pub q: u64,
    pub params: TypeParams,
}

fn divides(a: u64, b: u64) -> bool {
    b.is_multiple_of(a)
}

fn check_type(type_id: u32) -> Result<u8, CatalogError> {
    if (1..=TYPE_COUNT as u32).contains(&type_id) {
        Ok(type_id as u8)
    } else {
        Err(CatalogError::UnknownType(type_id))
    }
}

/// Whether `type_id` exists for the primes `(p, q)`; the reason names the
/// first failed condition.
pub fn admissible(type_id: u32, p: u64, q: u64) -> Result<Admissibility, CatalogError> {
    let t = check_type(type_id)?;
    use Admissibility::*;
    let fail = |s: &str| Ok(Inadmissible(s.to_string()));
    if !is_prime(p) || !is_prime(q) || p == q {
        return fail("p and q must be distinct primes");
    }
    if t <= 14 {
        return if p * q == 6 { Ok(Admissible) } else { fail("p^2 q^2 = 36 required") };
    }
    let q_pm1 = divides(q, p - 1);
    let q2_pm1 = divides(q * q, p - 1);
    let q_pp1 = divides(q, p + 1);
    let q2_pp1 = divides(q * q, p + 1);
    match t {
        15..=18 => Ok(Admissible),
        19 | 21 | 22 | 33 | 35 if !q_pm1 => fail("q | p-1 required"),
        20 | 26 | 29 if !q2_pm1 => fail("q^2 | p-1 required"),
        23 | 34 if q != 2 => fail("q = 2 required"),
        24 | 25 | 27 | 28 if q == 2 => fail("q ≠ 2 required"),
        24 | 25 | 27 if !q_pm1 => fail("q | p-1 required"),
        27 if q < 5 => fail("q ≥ 5 required (n range empty)"),
        28 if !q2_pm1 => fail("q^2 | p-1 required"),
        30 | 32 | 36 if q == 2 => fail("q odd required"),
        30 | 36 if !q_pp1 => fail("q | p+1 required"),
        32 if !q2_pp1 => fail("q^2 | p+1 required"),
        31 if q != 2 => fail("q = 2 required"),
        31 if p % 4 != 3 => fail("p ≡ 3 mod 4 required"),
        36 if p % q == 1 => fail("p ≢ 1 mod q required"),
        30..=32 | 36 if p == 2 => fail("p odd required"),
        _ => Ok(Admissible),
    }
}

/// Allowed values of the exponent `n` for types 27 and 28.
pub fn n_exp_range(type_id: u8, q: u64) -> Vec<u64> {
    match type_id {
        27 => (2..=(q.saturating_sub(1)) / 2).collect(),
        28 => {
            let mut v: Vec<u64> = (2..=(q * q - 1) / 2).collect();
            v.extend((q.div_ceil(2)..q).map(|m| m * q));
            v.sort_unstable();
            v.dedup();
            v
        }
        _ => Vec::new(),
    }
}

fn order_mod(d: u64, modulus: u64) -> Result<u64, CatalogError> {
    Ok(element_of_order(d, &Modulus::new(modulus)?)?.residue())
}

fn gf_data(p: u64, k: u64) -> Result<GfData, CatalogError> {
    let f = GfParams::canonical(p)?;
    let sigma = primitive_root(f);
    let x = subgroup_parameter(f, k)?;
    if x.b() == 0 {
        return Err(CatalogError::ParameterUnavailable(format!("sigma^((p^2-1)/{k}) lies in GF({p}), n = 0")));
    }
    Ok(GfData { d: f.d(), sigma: (sigma.a(), sigma.b()), m: x.a(), n: x.b() })
}

/// Canonical parameters of an admissible `(type_id, p, q)`.
pub fn derive_params(type_id: u32, p: u64, q: u64) -> Result<TypeParams, CatalogError> {
    let t = check_type(type_id)?;
    if let Admissibility::Inadmissible(reason) = admissible(type_id, p, q)? {
        return Err(CatalogError::Inadmissible { type_id: t, p, q, reason });
    }
    let mut params = TypeParams::default();
    match t {
        19 | 21 => params.r = Some(order_mod(q, p * p)?),
        20 => params.r = Some(order_mod(q * q, p * p)?),
        22 | 24 | 25 | 33 | 35 => params.r = Some(order_mod(q, p)?),
        26 | 29 => params.r = Some(order_mod(q * q, p)?),
        27 => {
            params.r = Some(order_mod(q, p)?);
            params.n_exp = Some(2);
        }
        28 => {
            params.r = Some(order_mod(q * q, p)?);
            params.n_exp = Some(2);
        }
        30 => params.gf = Some(gf_data(p, q)?),
        31 => params.gf = Some(gf_data(p, 4)?),
        32 => params.gf = Some(gf_data(p, q * q)?),
        36 => {
            let gf = gf_data(p, q)?;
            params.uv = Some((gf.m, gf.n));
            params.gf = Some(gf);
        }
        _ => {}
    }
    Ok(params)
}

impl GroupSpec {
    /// Spec with canonical parameters.
    pub fn new(type_id: u32, p: u64, q: u64) -> Result<Self, CatalogError> {
        let params = derive_params(type_id, p, q)?;
        Ok(GroupSpec { type_id: type_id as u8, p, q, params })
    }

    /// Spec for type 27 or 28 with an explicit exponent `n`.
    pub fn with_n_exp(type_id: u32, p: u64, q: u64, n: u64) -> Result<Self, CatalogError> {
        let mut spec = GroupSpec::new(type_id, p, q)?;
        if spec.params.n_exp.is_none() {
            return Err(CatalogError::NExpNotApplicable(spec.type_id));
        }
        if !n_exp_range(spec.type_id, q).contains(&n) {
            return Err(CatalogError::NExpOutOfRange { type_id: spec.type_id, q, n });
        }
        spec.params.n_exp = Some(n);
        Ok(spec)
    }

    pub fn order(&self) -> u64 {
        self.p * self.p * self.q * self.q
    }

    pub fn parse(s: &str) -> Result<Self, CatalogError> {
        let err = || CatalogError::Parse(s.to_string());
        let (head, rest) = s.trim().split_once(':').ok_or_else(err)?;
        let type_id: u32 = head.strip_prefix('t').ok_or_else(err)?.parse().map_err(|_| err())?;
        let (mut p, mut q, mut n) = (None, None, None);
        for field in rest.split(',') {
            let (key, value) = field.trim().split_once('=').ok_or_else(err)?;
            let value: u64 = value.trim().parse().map_err(|_| err())?;
            let slot = match key.trim() {
                "p" => &mut p,
                "q" => &mut q,
                "n" => &mut n,
                _ => return Err(err()),
            };
            if slot.replace(value).is_some() {
                return Err(err());
            }
        }
        let (p, q) = (p.ok_or_else(err)?, q.ok_or_else(err)?);
        match n {
            Some(n) => GroupSpec::with_n_exp(type_id, p, q, n),
            None => GroupSpec::new(type_id, p, q),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}:p={},q={}", self.type_id, self.p, self.q)?;
        if let Some(n) = self.params.n_exp {
            write!(f, ",n={n}")?;
        }
        Ok(())
    }
}

impl FromStr for GroupSpec {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GroupSpec::parse(s)
    }
}

impl Serialize for GroupSpec {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        GroupSpec::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// A built group together with its `H ⋊ K` split.
#[derive(Debug, Clone)]
pub struct BuiltGroup {
    pub spec: GroupSpec,
    pub group: PcGroup,
    /// Number of leading generators spanning `K`; `None` for the order-36 types.
    pub k_count: Option<usize>,
}

impl BuiltGroup {
    /// Element indices of the generators of `K`.
    pub fn k_generators(&self) -> Vec<usize> {
        let k = self.k_count.unwrap_or(0);
        (0..k).map(|i| self.group.generator(i)).collect()
    }

    /// Element indices of the generators of `H`.
    pub fn h_generators(&self) -> Vec<usize> {
        let k = self.k_count.unwrap_or(0);
        (k..self.group.gen_count()).map(|i| self.group.generator(i)).collect()
    }
}

fn power(pres: &PcPresentation, i: usize, e: u64) -> Vec<u32> {
    let o = pres.generators()[i].relative_order as u64;
    pres.normal_form(&[(i, (e % o) as u32)])
}

fn word2(pres: &PcPresentation, i: usize, e: u64, j: usize, f: u64) -> Vec<u32> {
    let (oi, oj) = (pres.generators()[i].relative_order as u64, pres.generators()[j].relative_order as u64);
    pres.normal_form(&[(i, (e % oi) as u32), (j, (f % oj) as u32)])
}

fn presentation_36(t: u8) -> PcPresentation {
    let mut pr;
    match t {
        1 => pr = PcPresentation::new(&[("a", 4), ("b", 9)]),
        2 => pr = PcPresentation::new(&[("a", 2), ("b", 2), ("c", 9)]),
        3 => pr = PcPresentation::new(&[("a", 2), ("b", 2), ("c", 3), ("d", 3)]),
        4 => pr = PcPresentation::new(&[("a", 4), ("b", 3), ("c", 3)]),
        5 => {
            pr = PcPresentation::new(&[("s", 2), ("z", 2), ("x", 3), ("w", 3)]);
            pr.set_conjugate(2, 0, power(&pr, 2, 2));
        }
        6 => {
            pr = PcPresentation::new(&[("s", 2), ("t", 2), ("x", 3), ("y", 3)]);
            pr.set_conjugate(2, 0, power(&pr, 2, 2));
            pr.set_conjugate(3, 1, power(&pr, 3, 2));
        }
        7 => {
            pr = PcPresentation::new(&[("t", 2), ("z", 2), ("v", 9)]);
            pr.set_conjugate(2, 0, power(&pr, 2, 8));
        }
        8 => {
            pr = PcPresentation::new(&[("t", 3), ("z", 3), ("x", 2), ("y", 2)]);
            pr.set_conjugate(2, 0, power(&pr, 3, 1));
            pr.set_conjugate(3, 0, word2(&pr, 2, 1, 3, 1));
        }
        9 => {
            pr = PcPresentation::new(&[("t", 2), ("r", 18)]);
            pr.set_conjugate(1, 0, power(&pr, 1, 17));
        }
        10 => {
            pr = PcPresentation::new(&[("a", 4), ("z", 3), ("b", 3)]);
            pr.set_conjugate(2, 0, power(&pr, 2, 2));
        }
        11 => {
            pr = PcPresentation::new(&[("t", 2), ("z", 2), ("x", 3), ("y", 3)]);
            pr.set_conjugate(2, 0, power(&pr, 2, 2));
            pr.set_conjugate(3, 0, power(&pr, 3, 2));
        }
        12 => {
            pr = PcPresentation::new(&[("c", 4), ("a", 3), ("b", 3)]);
            pr.set_conjugate(1, 0, power(&pr, 2, 1));
            pr.set_conjugate(2, 0, power(&pr, 1, 2));
        }
        13 => {
            pr = PcPresentation::new(&[("c", 9), ("a", 2), ("b", 2)]);
            pr.set_conjugate(1, 0, power(&pr, 2, 1));
            pr.set_conjugate(2, 0, word2(&pr, 1, 1, 2, 1));
        }
        14 => {
            pr = PcPresentation::new(&[("c", 4), ("a", 3), ("b", 3)]);
            pr.set_conjugate(1, 0, power(&pr, 1, 2));
            pr.set_conjugate(2, 0, power(&pr, 2, 2));
        }
        _ => unreachable!(),
    }
    pr
}

/// Generator names, relative orders and `(target, acting, rhs)` conjugation
/// rules of types 15 to 36; the first `k` generators span `K`.
fn presentation_pq(spec: &GroupSpec) -> (PcPresentation, usize) {
    let (p, q) = (spec.p as u32, spec.q as u32);
    let (p2, q2) = (p * p, q * q);
    let params = &spec.params;
    let r = params.r.unwrap_or(1);
    let pu = spec.p;
    let mut pr;
    let k;
    match spec.type_id {
        15 => {
            pr = PcPresentation::new(&[("a", q2), ("b", p2)]);
            k = 1;
        }
        16 => {
            pr = PcPresentation::new(&[("a", q), ("b", q), ("c", p2)]);
            k = 2;
        }
        17 => {
            pr = PcPresentation::new(&[("a", q2), ("b", p), ("c", p)]);
            k = 1;
        }
        18 => {
            pr = PcPresentation::new(&[("a", q), ("b", q), ("c", p), ("d", p)]);
            k = 2;
        }
        19 | 20 => {
            pr = PcPresentation::new(&[("a", q2), ("b", p2)]);
            pr.set_conjugate(1, 0, power(&pr, 1, r));
            k = 1;
        }
        21 => {
            pr = PcPresentation::new(&[("a", q), ("b", q), ("c", p2)]);
            pr.set_conjugate(2, 0, power(&pr, 2, r));
            k = 2;
        }
        22..=29 => {
            let a_order = if spec.type_id == 23 { 4 } else { q2 };
            pr = PcPresentation::new(&[("a", a_order), ("b", p), ("c", p)]);
            let (rb, rc) = match spec.type_id {
                22 | 29 => (r, r),
                23 => (1, pu - 1),
                24 => (1, r),
                25 | 26 => (r, inv_mod(r, pu).expect("r is a unit")),
                _ => (r, crate::numtheory::pow_mod(r, params.n_exp.unwrap_or(2), &Modulus::new(pu).unwrap())),
            };
            pr.set_conjugate(1, 0, power(&pr, 1, rb));
            pr.set_conjugate(2, 0, power(&pr, 2, rc));
            k = 1;
        }
        30..=32 => {
            let gf = params.gf.expect("gf parameters");
            let a_order = if spec.type_id == 31 { 4 } else { q2 };
            pr = PcPresentation::new(&[("a", a_order), ("b", p), ("c", p)]);
            let nd = gf.n * gf.d % pu;
            pr.set_conjugate(1, 0, word2(&pr, 1, gf.m, 2, nd));
            pr.set_conjugate(2, 0, word2(&pr, 1, gf.n, 2, gf.m));
            k = 1;
        }
        33..=36 => {
            let (qa, qb) = if spec.type_id == 34 { (2, 2) } else { (q, q) };
            pr = PcPresentation::new(&[("a", qa), ("b", qb), ("c", p), ("d", p)]);
            match spec.type_id {
                33 => {
                    pr.set_conjugate(2, 1, power(&pr, 2, r));
                    pr.set_conjugate(3, 1, power(&pr, 3, r));
                }
                34 => {
                    pr.set_conjugate(2, 1, power(&pr, 2, pu - 1));
                }
                35 => {
                    pr.set_conjugate(2, 0, power(&pr, 2, r));
                    pr.set_conjugate(3, 1, power(&pr, 3, r));
                }
                _ => {
                    let gf = params.gf.expect("gf parameters");
                    let (u, v) = params.uv.expect("uv parameters");
                    pr.set_conjugate(2, 1, word2(&pr, 2, u, 3, v * gf.d % pu));
                    pr.set_conjugate(3, 1, word2(&pr, 2, v, 3, u));
                }
            }
            k = 2;
        }
        _ => unreachable!(),
    }
    (pr, k)
}

// the original relations of the order-12 factor of type 11 hold for
// a = t, b = tx, c = ty
fn check_type11(g: &PcGroup) -> Result<(), CatalogError> {
    let (t, x, y) = (g.generator(0), g.generator(2), g.generator(3));
    let a = t;
    let b = g.mul(t, x);
    let c = g.mul(t, y);
    let abc = g.mul(g.mul(a, b), c);
    let checks = [(a, 2), (b, 2), (c, 2), (abc, 2), (g.mul(a, b), 3), (g.mul(a, c), 3)];
    for (w, e) in checks {
        if g.pow(w, e) != 0 {
            return Err(CatalogError::BuildAssertion(format!("type 11 relation fails for {}", g.format_element(w))));
        }
    }
    if crate::group::subgroup_closure(g, &[a, b, c]).order() != 18 {
        return Err(CatalogError::BuildAssertion("type 11 generators do not span the order-18 factor".into()));
    }
    Ok(())
}

/// The presentation of `spec` and the number of leading `K` generators.
pub fn presentation(spec: &GroupSpec) -> (PcPresentation, Option<usize>) {
    if spec.type_id <= 14 {
        (presentation_36(spec.type_id), None)
    } else {
        let (pr, k) = presentation_pq(spec);
        (pr, Some(k))
    }
}

/// Collect the presentation of `spec`.
pub fn build(spec: &GroupSpec) -> Result<BuiltGroup, CatalogError> {
    if let Admissibility::Inadmissible(reason) = admissible(spec.type_id as u32, spec.p, spec.q)? {
        return Err(CatalogError::Inadmissible { type_id: spec.type_id, p: spec.p, q: spec.q, reason });
    }
    let order = spec.order();
    if order > CAYLEY_CAP as u64 {
        return Err(GroupError::TooLarge { order: order as usize, cap: CAYLEY_CAP }.into());
    }
    let (pr, k_count) = presentation(spec);
    let group = collect(pr)?;
    if group.order() as u64 != order {
        return Err(CatalogError::BuildAssertion(format!("built order {} != {order}", group.order())));
    }
    if spec.type_id == 11 {
        check_type11(&group)?;
    }
    Ok(BuiltGroup { spec: spec.clone(), group, k_count })
}

/// Every admissible spec with `p <= p_max`, `q <= q_max` and `|G|` within
/// the Cayley cap, sorted by group order then `(p, q, type)`. The order-36
/// types appear once, under `(p, q) = (3, 2)` when that pair is in range.
pub fn enumerate_admissible(p_max: u64, q_max: u64) -> Vec<GroupSpec> {
    let mut out = Vec::new();
    let pairs: Vec<(u64, u64)> = primes_in(2, p_max)
        .into_iter()
        .flat_map(|p| primes_in(2, q_max).into_iter().map(move |q| (p, q)))
        .filter(|&(p, q)| p != q && p * p * q * q <= CAYLEY_CAP as u64)
        .collect();
    let small = if pairs.contains(&(3, 2)) {
        Some((3, 2))
    } else if pairs.contains(&(2, 3)) {
        Some((2, 3))
    } else {
        None
    };
    if let Some((p, q)) = small {
        for t in 1..=14 {
            out.push(GroupSpec::new(t, p, q).expect("order-36 types are admissible"));
        }
    }
    for &(p, q) in &pairs {
        for t in 15..=TYPE_COUNT as u32 {
            if let Ok(spec) = GroupSpec::new(t, p, q) {
                out.push(spec);
            }
        }
    }
    out.sort_by_key(|s| (s.order(), s.p, s.q, s.type_id));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TypeInfo {
    pub type_id: u8,
    pub structure: &'static str,
    pub relations: &'static str,
    pub condition: &'static str,
}

const TYPE_TABLE: [(&str, &str, &str); 36] = [
    ("Z36", "a^4 = b^9 = 1", "pq = 6"),
    ("Z18 x Z2", "a^2 = b^2 = c^9 = 1", "pq = 6"),
    ("Z6 x Z6", "a^2 = b^2 = c^3 = d^3 = 1", "pq = 6"),
    ("Z12 x Z3", "a^4 = b^3 = c^3 = 1", "pq = 6"),
    ("S3 x Z6", "s^2 = z^2 = x^3 = w^3 = 1, x^s = x^-1", "pq = 6"),
    ("S3 x S3", "s^2 = t^2 = x^3 = y^3 = 1, x^s = x^-1, y^t = y^-1", "pq = 6"),
    ("D18 x Z2", "t^2 = z^2 = v^9 = 1, v^t = v^-1", "pq = 6"),
    ("A4 x Z3", "t^3 = z^3 = x^2 = y^2 = 1, x^t = y, y^t = xy", "pq = 6"),
    ("D36", "t^2 = r^18 = 1, r^t = r^-1", "pq = 6"),
    ("(Z3 : Z4) x Z3", "a^4 = z^3 = b^3 = 1, b^a = b^-1", "pq = 6"),
    ("((Z3 x Z3) : Z2) x Z2", "t^2 = z^2 = x^3 = y^3 = 1, x^t = x^-1, y^t = y^-1", "pq = 6"),
    ("(Z3 x Z3) : Z4, faithful", "c^4 = a^3 = b^3 = 1, a^c = b, b^c = a^-1", "pq = 6"),
    ("(Z2 x Z2) : Z9", "c^9 = a^2 = b^2 = 1, a^c = b, b^c = ab", "pq = 6"),
    ("(Z3 x Z3) : Z4, inverting", "c^4 = a^3 = b^3 = 1, a^c = a^-1, b^c = b^-1", "pq = 6"),
    ("Z_{q^2} x Z_{p^2}", "a^{q^2} = b^{p^2} = 1", "none"),
    ("Z_q x Z_q x Z_{p^2}", "a^q = b^q = c^{p^2} = 1", "none"),
    ("Z_{q^2} x Z_p x Z_p", "a^{q^2} = b^p = c^p = 1", "none"),
    ("Z_q x Z_q x Z_p x Z_p", "a^q = b^q = c^p = d^p = 1", "none"),
    ("Z_{p^2} : Z_{q^2}", "a^{q^2} = b^{p^2} = 1, b^a = b^r, r of order q mod p^2", "q | p-1"),
    ("Z_{p^2} : Z_{q^2}", "a^{q^2} = b^{p^2} = 1, b^a = b^r, r of order q^2 mod p^2", "q^2 | p-1"),
    ("Z_{p^2} : (Z_q x Z_q)", "a^q = b^q = c^{p^2} = 1, c^a = c^r, r of order q mod p^2", "q | p-1"),
    ("(Z_p x Z_p) : Z_{q^2}", "a^{q^2} = b^p = c^p = 1, b^a = b^r, c^a = c^r, r of order q mod p", "q | p-1"),
    ("(Z_p x Z_p) : Z_4", "a^4 = b^p = c^p = 1, c^a = c^-1", "q = 2"),
    ("Z_p x (Z_p : Z_{q^2})", "a^{q^2} = b^p = c^p = 1, c^a = c^r, r of order q mod p", "q | p-1, q odd"),
    (
        "(Z_p x Z_p) : Z_{q^2}",
        "a^{q^2} = b^p = c^p = 1, b^a = b^r, c^a = c^{r^-1}, r of order q mod p",
        "q | p-1, q odd",
    ),
    ("(Z_p x Z_p) : Z_{q^2}", "a^{q^2} = b^p = c^p = 1, b^a = b^r, c^a = c^{r^-1}, r of order q^2 mod p", "q^2 | p-1"),
    (
        "(Z_p x Z_p) : Z_{q^2}",
        "a^{q^2} = b^p = c^p = 1, b^a = b^r, c^a = c^{r^n}, r of order q mod p",
        "q | p-1, q >= 5",
    ),
    (
        "(Z_p x Z_p) : Z_{q^2}",
        "a^{q^2} = b^p = c^p = 1, b^a = b^r, c^a = c^{r^n}, r of order q^2 mod p",
        "q^2 | p-1, q odd",
    ),
    ("(Z_p x Z_p) : Z_{q^2}", "a^{q^2} = b^p = c^p = 1, b^a = b^r, c^a = c^r, r of order q^2 mod p", "q^2 | p-1"),
    (
        "(Z_p x Z_p) : Z_{q^2}",
        "a^{q^2} = b^p = c^p = 1, b^a = b^m c^{nD}, c^a = b^n c^m, m + n√D of order q",
        "q | p+1, q odd",
    ),
    (
        "(Z_p x Z_p) : Z_4",
        "a^4 = b^p = c^p = 1, b^a = b^m c^{nD}, c^a = b^n c^m, m + n√D of order 4",
        "q = 2, p ≡ 3 mod 4",
    ),
    (
        "(Z_p x Z_p) : Z_{q^2}",
        "a^{q^2} = b^p = c^p = 1, b^a = b^m c^{nD}, c^a = b^n c^m, m + n√D of order q^2",
        "q^2 | p+1, q odd",
    ),
    ("((Z_p x Z_p) : Z_q) x Z_q", "a^q = b^q = c^p = d^p = 1, c^b = c^r, d^b = d^r, r of order q mod p", "q | p-1"),
    ("(Z_p : Z_2) x Z_p x Z_2", "a^2 = b^2 = c^p = d^p = 1, c^b = c^-1", "q = 2"),
    ("(Z_p : Z_q) x (Z_p : Z_q)", "a^q = b^q = c^p = d^p = 1, c^a = c^r, d^b = d^r, r of order q mod p", "q | p-1"),
    (
        "((Z_p x Z_p) : Z_q) x Z_q",
        "a^q = b^q = c^p = d^p = 1, c^b = c^u d^{vD}, d^b = c^v d^u, u + v√D of order q",
        "q | p+1, q odd, p ≢ 1 mod q",
    ),
];

pub fn type_info(type_id: u32) -> Result<TypeInfo, CatalogError> {
    let t = check_type(type_id)?;
    let (structure, relations, condition) = TYPE_TABLE[t as usize - 1];
    Ok(TypeInfo { type_id: t, structure, relations, condition })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{abelian_invariants, center, derived_subgroup, order_histogram};

    #[test]
    fn admissible_examples() {
        assert_eq!(admissible(19, 5, 2).unwrap(), Admissibility::Admissible);
        assert_eq!(admissible(24, 5, 2).unwrap(), Admissibility::Inadmissible("q ≠ 2 required".into()));
        assert_eq!(admissible(30, 5, 3).unwrap(), Admissibility::Admissible);
        assert_eq!(admissible(36, 5, 2).unwrap().reason(), Some("q odd required"));
        assert_eq!(admissible(31, 5, 2).unwrap().reason(), Some("p ≡ 3 mod 4 required"));
        assert_eq!(admissible(27, 7, 3).unwrap().reason(), Some("q ≥ 5 required (n range empty)"));
        assert!(admissible(27, 11, 5).unwrap().is_admissible());
        assert_eq!(admissible(37, 5, 2), Err(CatalogError::UnknownType(37)));
        assert!(!admissible(1, 5, 3).unwrap().is_admissible());
    }

    #[test]
    fn derive_params_examples() {
        assert_eq!(derive_params(19, 5, 2).unwrap().r, Some(24));
        assert_eq!(derive_params(22, 7, 3).unwrap().r, Some(2));
        let gf = derive_params(31, 3, 2).unwrap().gf.unwrap();
        assert_eq!((gf.d, gf.m, gf.n), (2, 0, 2));
        assert_eq!(derive_params(27, 11, 5).unwrap().n_exp, Some(2));
        assert!(derive_params(36, 5, 3).unwrap().uv.is_some());
    }

    #[test]
    fn spec_round_trip() {
        for s in ["t19:p=5,q=2", "t31:p=3,q=2", "t27:p=11,q=5,n=2", "t1:p=3,q=2"] {
            let spec: GroupSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!(GroupSpec::parse("t27:p=11,q=5,n=3").is_err());
        assert!(GroupSpec::parse("t19:p=5").is_err());
        assert!(GroupSpec::parse("x19:p=5,q=2").is_err());
        assert!(GroupSpec::parse("t19:p=5,q=2,n=2").is_err());
        let s = GroupSpec::with_n_exp(28, 13, 2, 2);
        assert!(s.is_err());
    }

    #[test]
    fn n_exp_ranges() {
        assert_eq!(n_exp_range(27, 5), vec![2]);
        assert_eq!(n_exp_range(27, 7), vec![2, 3]);
        // q = 3: 2..=4 and m*q for m = 2
        assert_eq!(n_exp_range(28, 3), vec![2, 3, 4, 6]);
    }

    #[test]
    fn build_examples() {
        let g = build(&GroupSpec::new(15, 5, 3).unwrap()).unwrap().group;
        assert_eq!(g.order(), 225);
        assert!(g.is_abelian());
        assert_eq!(abelian_invariants(&g), vec![9, 25]);

        let g = build(&GroupSpec::new(19, 5, 2).unwrap()).unwrap().group;
        assert_eq!(g.order(), 100);
        assert!(!g.is_abelian());
        let brute_center = (0..g.order()).filter(|&x| (0..g.order()).all(|y| g.mul(x, y) == g.mul(y, x))).count();
        assert_eq!(brute_center, 2);
        assert_eq!(center(&g).order(), 2);

        let b = build(&GroupSpec::new(36, 5, 3).unwrap()).unwrap();
        let d = derived_subgroup(&b.group);
        assert_eq!(d.order(), 25);
        assert!(b.h_generators().iter().all(|&h| d.contains(h)));
    }

    #[test]
    fn all_order_36_types_build() {
        let mut histograms = Vec::new();
        for t in 1..=14 {
            let g = build(&GroupSpec::new(t, 3, 2).unwrap()).unwrap().group;
            assert_eq!(g.order(), 36, "type {t}");
            for i in 0..g.gen_count() {
                let o = g.presentation().generators()[i].relative_order as u64;
                assert_eq!(g.element_order(g.generator(i)), o);
            }
            histograms.push(order_histogram(&g));
        }
        assert_ne!(histograms[11], histograms[13]);
        assert_eq!(histograms[6], histograms[8]);
    }
}
