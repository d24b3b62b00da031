//! Executable finite groups given by power/conjugation presentations over a
//! generating sequence `g_0, ..., g_{n-1}`.
//!
//! Every element has the unique normal form `g_0^e_0 g_1^e_1 ... g_{n-1}^e_{n-1}`
//! with `0 <= e_i < o_i`. Elements are addressed by the mixed-radix index of
//! their exponent vector (`g_0` most significant), so the identity is index 0
//! and generator `g_i` is index `stride_i`.
//!
//! The presentation is collected once into a full Cayley table; everything
//! downstream (subgroups, invariants, the automorphism search) works on table
//! lookups.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

/// Largest group order for which a Cayley table is materialised.
pub const CAYLEY_CAP: usize = 20_000;

/// Groups up to this order get an exhaustive associativity check.
const EXHAUSTIVE_ASSOC_LIMIT: usize = 400;
const ASSOC_SAMPLES: usize = 100_000;
const ASSOC_SEED: u64 = 0x7032_7132;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("group order {order} exceeds the Cayley table cap {cap}")]
    TooLarge { order: usize, cap: usize },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("inconsistent presentation: {0}")]
    InconsistentPresentation(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Generator {
    pub name: String,
    pub relative_order: u32,
}

/// Power and conjugation relations over an ordered generating sequence.
///
/// `power_rules[i]` is the normal form of `g_i^{o_i}` and
/// `conjugation_rules[i][j]` (for `i < j`) the normal form of `g_i^-1 g_j g_i`.
/// Right-hand sides may only involve generators after `g_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcPresentation {
    generators: Vec<Generator>,
    power_rules: Vec<Vec<u32>>,
    conjugation_rules: Vec<Vec<Vec<u32>>>,
}

impl PcPresentation {
    /// Presentation of the abelian group with the given cyclic factors; refine
    /// it with [`set_power`](Self::set_power) and
    /// [`set_conjugate`](Self::set_conjugate).
    pub fn new(generators: &[(&str, u32)]) -> Self {
        let n = generators.len();
        let unit = |j: usize| {
            let mut v = vec![0; n];
            v[j] = 1;
            v
        };
        PcPresentation {
            generators: generators
                .iter()
                .map(|&(name, relative_order)| Generator { name: name.to_string(), relative_order })
                .collect(),
            power_rules: vec![vec![0; n]; n],
            conjugation_rules: (0..n).map(|_| (0..n).map(unit).collect()).collect(),
        }
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn relative_orders(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.relative_order).collect()
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// Exponent vector with the given `(generator, exponent)` entries.
    pub fn normal_form(&self, entries: &[(usize, u32)]) -> Vec<u32> {
        let mut v = vec![0; self.len()];
        for &(i, e) in entries {
            v[i] = e % self.generators[i].relative_order;
        }
        v
    }

    /// `g_i^{o_i} = rhs`.
    pub fn set_power(&mut self, i: usize, rhs: Vec<u32>) -> &mut Self {
        self.power_rules[i] = rhs;
        self
    }

    /// `g_by^-1 g_j g_by = rhs`, `by < j`.
    pub fn set_conjugate(&mut self, j: usize, by: usize, rhs: Vec<u32>) -> &mut Self {
        assert!(by < j, "conjugation rules act on later generators");
        self.conjugation_rules[by][j] = rhs;
        self
    }

    pub fn power_rule(&self, i: usize) -> &[u32] {
        &self.power_rules[i]
    }

    pub fn conjugation_rule(&self, j: usize, by: usize) -> &[u32] {
        &self.conjugation_rules[by][j]
    }

    pub fn is_trivial_conjugate(&self, j: usize, by: usize) -> bool {
        let rule = &self.conjugation_rules[by][j];
        rule.iter().enumerate().all(|(m, &e)| if m == j { e == 1 } else { e == 0 })
    }

    /// Product of relative orders, or `None` on overflow.
    pub fn declared_order(&self) -> Option<usize> {
        self.generators.iter().try_fold(1usize, |acc, g| acc.checked_mul(g.relative_order as usize))
    }

    fn validate(&self) -> Result<(), GroupError> {
        let n = self.len();
        let bad = |msg: String| Err(GroupError::InvalidPresentation(msg));
        if n == 0 {
            return bad("no generators".into());
        }
        if n > u8::MAX as usize {
            return bad("too many generators".into());
        }
        for (i, g) in self.generators.iter().enumerate() {
            if g.relative_order < 2 {
                return bad(format!("generator {} has relative order {}", g.name, g.relative_order));
            }
            if self.generators[..i].iter().any(|h| h.name == g.name) {
                return bad(format!("duplicate generator name {}", g.name));
            }
        }
        let in_range = |v: &[u32]| v.len() == n && v.iter().zip(&self.generators).all(|(&e, g)| e < g.relative_order);
        for i in 0..n {
            let rule = &self.power_rules[i];
            if !in_range(rule) || rule[..=i].iter().any(|&e| e != 0) {
                return bad(format!("power rule of {} is not a word in later generators", self.generators[i].name));
            }
            for j in i + 1..n {
                let rule = &self.conjugation_rules[i][j];
                if !in_range(rule) || rule[..=i].iter().any(|&e| e != 0) {
                    return bad(format!(
                        "conjugate of {} by {} is not a word in later generators",
                        self.generators[j].name, self.generators[i].name
                    ));
                }
            }
        }
        Ok(())
    }

    /// `x := x * g_k^e` by collection.
    fn mul_gen_pow(&self, x: &mut [u32], k: usize, e: u32) {
        if e == 0 {
            return;
        }
        let n = x.len();
        let o = self.generators[k].relative_order;
        let power_trivial = self.power_rules[k].iter().all(|&v| v == 0);
        let commutes = (k + 1..n).all(|j| x[j] == 0 || self.is_trivial_conjugate(j, k));
        if commutes && power_trivial {
            x[k] = ((x[k] as u64 + e as u64) % o as u64) as u32;
            return;
        }
        for _ in 0..e {
            self.mul_gen(x, k);
        }
    }

    fn mul_gen(&self, x: &mut [u32], k: usize) {
        let n = x.len();
        let o = self.generators[k].relative_order;
        let suffix: Vec<(usize, u32)> = (k + 1..n).filter(|&j| x[j] != 0).map(|j| (j, x[j])).collect();
        let power_trivial = self.power_rules[k].iter().all(|&v| v == 0);
        if suffix.iter().all(|&(j, _)| self.is_trivial_conjugate(j, k)) && (power_trivial || x[k] + 1 < o) {
            x[k] = (x[k] + 1) % o;
            return;
        }
        for &(j, _) in &suffix {
            x[j] = 0;
        }
        x[k] += 1;
        if x[k] == o {
            x[k] = 0;
            self.mul_normal_form(x, &self.power_rules[k]);
        }
        for (j, e) in suffix {
            let word = &self.conjugation_rules[k][j];
            let mut letters = word.iter().enumerate().filter(|(_, &c)| c != 0);
            match (letters.next(), letters.next()) {
                (Some((m, &c)), None) if self.power_rules[m].iter().all(|&v| v == 0) => {
                    let om = self.generators[m].relative_order as u64;
                    self.mul_gen_pow(x, m, ((c as u64 * e as u64) % om) as u32);
                }
                _ => {
                    for _ in 0..e {
                        self.mul_normal_form(x, word);
                    }
                }
            }
        }
    }

    fn mul_normal_form(&self, x: &mut [u32], word: &[u32]) {
        for (m, &e) in word.iter().enumerate() {
            self.mul_gen_pow(x, m, e);
        }
    }

    /// Normal form of `x * y` by collection (no table).
    pub fn collect_product(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let mut out = x.to_vec();
        self.mul_normal_form(&mut out, y);
        out
    }
}

impl fmt::Display for PcPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let word = |v: &[u32]| {
            let parts: Vec<String> = v
                .iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .map(|(m, &e)| {
                    if e == 1 {
                        self.generators[m].name.clone()
                    } else {
                        format!("{}^{}", self.generators[m].name, e)
                    }
                })
                .collect();
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join(" ")
            }
        };
        let names: Vec<&str> = self.generators.iter().map(|g| g.name.as_str()).collect();
        let mut rels = Vec::new();
        for (i, g) in self.generators.iter().enumerate() {
            rels.push(format!("{}^{} = {}", g.name, g.relative_order, word(&self.power_rules[i])));
        }
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if !self.is_trivial_conjugate(j, i) {
                    rels.push(format!(
                        "{}^{} = {}",
                        self.generators[j].name,
                        self.generators[i].name,
                        word(&self.conjugation_rules[i][j])
                    ));
                }
            }
        }
        write!(f, "<{} | {}>", names.join(", "), rels.join(", "))
    }
}

/// A collected presentation with its Cayley table.
#[derive(Clone)]
pub struct PcGroup {
    presentation: PcPresentation,
    order: usize,
    strides: Vec<usize>,
    table: Vec<u16>,
    inverses: Vec<u16>,
    // position of the last non-zero exponent of each non-identity element
    last_gen: Vec<u8>,
}

impl fmt::Debug for PcGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PcGroup")
            .field("presentation", &self.presentation.to_string())
            .field("order", &self.order)
            .finish()
    }
}

/// Collect `pres` into a [`PcGroup`], checking consistency of the result.
pub fn collect(pres: PcPresentation) -> Result<PcGroup, GroupError> {
    pres.validate()?;
    let order = pres.declared_order().unwrap_or(usize::MAX);
    if order > CAYLEY_CAP {
        return Err(GroupError::TooLarge { order, cap: CAYLEY_CAP });
    }
    let n = pres.len();
    let rel = pres.relative_orders();
    let mut strides = vec![1usize; n];
    for i in (0..n - 1).rev() {
        strides[i] = strides[i + 1] * rel[i + 1] as usize;
    }
    let index_of = |v: &[u32]| v.iter().zip(&strides).map(|(&e, &s)| e as usize * s).sum::<usize>();
    let exps_of = |mut x: usize| {
        let mut v = vec![0u32; n];
        for i in (0..n).rev() {
            v[i] = (x % rel[i] as usize) as u32;
            x /= rel[i] as usize;
        }
        v
    };

    // right multiplication by each generator, by collection
    let mut gen_mul = vec![0u16; order * n];
    for x in 0..order {
        let base = exps_of(x);
        for k in 0..n {
            let mut v = base.clone();
            pres.mul_gen(&mut v, k);
            gen_mul[x * n + k] = index_of(&v) as u16;
        }
    }

    let mut last_gen = vec![0u8; order];
    for (y, last) in last_gen.iter_mut().enumerate().skip(1) {
        *last = (0..n).rev().find(|&i| !(y / strides[i]).is_multiple_of(rel[i] as usize)).unwrap() as u8;
    }

    // x * y = (x * y') * g_k where y = y' g_k in normal form
    let mut table = vec![0u16; order * order];
    for x in 0..order {
        let row = x * order;
        table[row] = x as u16;
        for y in 1..order {
            let k = last_gen[y] as usize;
            let prev = table[row + y - strides[k]] as usize;
            table[row + y] = gen_mul[prev * n + k];
        }
    }

    let mut group = PcGroup { presentation: pres, order, strides, table, inverses: vec![0; order], last_gen };
    group.check_latin_square()?;
    for x in 0..order {
        let row = &group.table[x * order..(x + 1) * order];
        let inv = row.iter().position(|&v| v == 0).unwrap();
        group.inverses[x] = inv as u16;
    }
    group.check_associativity()?;
    Ok(group)
}

impl PcGroup {
    fn check_latin_square(&self) -> Result<(), GroupError> {
        let n = self.order;
        let mut seen = vec![usize::MAX; n];
        for x in 0..n {
            for y in 0..n {
                let v = self.table[x * n + y] as usize;
                if seen[v] == x {
                    return Err(GroupError::InconsistentPresentation(format!("row {x} repeats {v}")));
                }
                seen[v] = x;
            }
        }
        seen.fill(usize::MAX);
        for y in 0..n {
            for x in 0..n {
                let v = self.table[x * n + y] as usize;
                if seen[v] == y {
                    return Err(GroupError::InconsistentPresentation(format!("column {y} repeats {v}")));
                }
                seen[v] = y;
            }
        }
        Ok(())
    }

    fn check_associativity(&self) -> Result<(), GroupError> {
        let n = self.order;
        let fail =
            |x, y, z| Err(GroupError::InconsistentPresentation(format!("associativity fails on ({x}, {y}, {z})")));
        if n <= EXHAUSTIVE_ASSOC_LIMIT {
            for x in 0..n {
                for y in 0..n {
                    let xy = self.mul(x, y);
                    for z in 0..n {
                        if self.mul(xy, z) != self.mul(x, self.mul(y, z)) {
                            return fail(x, y, z);
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(ASSOC_SEED);
            for _ in 0..ASSOC_SAMPLES {
                let (x, y, z) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if self.mul(self.mul(x, y), z) != self.mul(x, self.mul(y, z)) {
                    return fail(x, y, z);
                }
            }
        }
        Ok(())
    }

    pub fn presentation(&self) -> &PcPresentation {
        &self.presentation
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn gen_count(&self) -> usize {
        self.strides.len()
    }

    /// Element index of generator `g_i`.
    pub fn generator(&self, i: usize) -> usize {
        self.strides[i]
    }

    pub fn generators(&self) -> Vec<usize> {
        self.strides.clone()
    }

    pub fn strides(&self) -> &[usize] {
        &self.strides
    }

    /// Last generator with non-zero exponent in `x` (undefined for the identity).
    pub fn last_generator(&self, x: usize) -> usize {
        self.last_gen[x] as usize
    }

    #[inline]
    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y] as usize
    }

    #[inline]
    pub fn inv(&self, x: usize) -> usize {
        self.inverses[x] as usize
    }

    pub fn pow(&self, x: usize, e: u64) -> usize {
        let mut result = 0;
        let mut base = x;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// `y^-1 x y`.
    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.mul(self.inv(y), self.mul(x, y))
    }

    /// `[x, y] = x^-1 y^-1 x y`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn digit(&self, x: usize, i: usize) -> u32 {
        ((x / self.strides[i]) % self.presentation.generators[i].relative_order as usize) as u32
    }

    pub fn exponents(&self, x: usize) -> Vec<u32> {
        (0..self.gen_count()).map(|i| self.digit(x, i)).collect()
    }

    pub fn index_of(&self, exponents: &[u32]) -> usize {
        exponents
            .iter()
            .zip(&self.strides)
            .zip(self.presentation.generators.iter())
            .map(|((&e, &s), g)| (e % g.relative_order) as usize * s)
            .sum()
    }

    /// Element with the given `(generator, exponent)` normal-form entries.
    pub fn word(&self, entries: &[(usize, u64)]) -> usize {
        let mut v = vec![0u32; self.gen_count()];
        for &(i, e) in entries {
            let o = self.presentation.generators[i].relative_order as u64;
            v[i] = (e % o) as u32;
        }
        self.index_of(&v)
    }

    pub fn element_order(&self, x: usize) -> u64 {
        let mut y = x;
        let mut d = 1;
        while y != 0 {
            y = self.mul(y, x);
            d += 1;
        }
        d
    }

    pub fn element_orders(&self) -> Vec<u64> {
        (0..self.order).map(|x| self.element_order(x)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter().all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn format_element(&self, x: usize) -> String {
        let parts: Vec<String> = self
            .exponents(x)
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| {
                let name = &self.presentation.generators[i].name;
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join(" ")
        }
    }
}

/// A subgroup stored as a membership bitset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    members: FixedBitSet,
    generators: Vec<usize>,
    order: usize,
}

impl Subgroup {
    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> Vec<usize> {
        self.members.ones().collect()
    }

    pub fn is_normal_in(&self, g: &PcGroup) -> bool {
        g.generators().iter().all(|&t| self.generators.iter().all(|&s| self.contains(g.conj(s, t))))
    }
}

/// Smallest subgroup containing `gens`.
pub fn subgroup_closure(g: &PcGroup, gens: &[usize]) -> Subgroup {
    let mut members = FixedBitSet::with_capacity(g.order());
    members.insert(0);
    let mut queue = VecDeque::from([0usize]);
    let gens: Vec<usize> = gens.iter().copied().filter(|&x| x != 0).collect();
    while let Some(x) = queue.pop_front() {
        for &s in &gens {
            let y = g.mul(x, s);
            if !members.contains(y) {
                members.insert(y);
                queue.push_back(y);
            }
        }
    }
    let order = members.count_ones(..);
    Subgroup { members, generators: gens, order }
}

/// Smallest normal subgroup containing `gens`.
pub fn normal_closure(g: &PcGroup, gens: &[usize]) -> Subgroup {
    let mut sub = subgroup_closure(g, gens);
    loop {
        let extra: Vec<usize> = g
            .generators()
            .iter()
            .flat_map(|&t| sub.generators.iter().map(move |&s| (s, t)))
            .map(|(s, t)| g.conj(s, t))
            .filter(|&c| !sub.contains(c))
            .collect();
        if extra.is_empty() {
            return sub;
        }
        let mut all = sub.generators.clone();
        all.extend(extra);
        all.sort_unstable();
        all.dedup();
        sub = subgroup_closure(g, &all);
    }
}

pub fn center(g: &PcGroup) -> Subgroup {
    let gens = g.generators();
    let mut members = FixedBitSet::with_capacity(g.order());
    for x in 0..g.order() {
        if gens.iter().all(|&t| g.mul(x, t) == g.mul(t, x)) {
            members.insert(x);
        }
    }
    let order = members.count_ones(..);
    Subgroup { generators: members.ones().collect(), members, order }
}

/// `[G, G]` as the normal closure of commutators of generators.
pub fn derived_subgroup(g: &PcGroup) -> Subgroup {
    let gens = g.generators();
    let comms: Vec<usize> =
        gens.iter().flat_map(|&a| gens.iter().map(move |&b| (a, b))).map(|(a, b)| g.commutator(a, b)).collect();
    normal_closure(g, &comms)
}

/// Number of elements of each order.
pub fn order_histogram(g: &PcGroup) -> BTreeMap<u64, usize> {
    let mut hist = BTreeMap::new();
    for x in 0..g.order() {
        *hist.entry(g.element_order(x)).or_insert(0) += 1;
    }
    hist
}

/// Prime-power cyclic factors of an abelian group, given how many of its
/// elements have each order. Sorted ascending.
pub fn invariants_from_order_counts(counts: &BTreeMap<u64, usize>) -> Vec<u64> {
    let total: usize = counts.values().sum();
    let mut primes = Vec::new();
    let mut rest = total as u64;
    let mut f = 2;
    while rest > 1 {
        if rest.is_multiple_of(f) {
            primes.push(f);
            while rest.is_multiple_of(f) {
                rest /= f;
            }
        }
        f += 1;
    }
    let mut out = Vec::new();
    for l in primes {
        // omega[k] = #{x in the l-part : x^(l^k) = 1}
        let mut omega = vec![1usize];
        let mut lk = 1u64;
        loop {
            lk *= l;
            let c: usize = counts.iter().filter(|(&d, _)| lk.is_multiple_of(d)).map(|(_, &c)| c).sum();
            if c == *omega.last().unwrap() {
                break;
            }
            omega.push(c);
        }
        // number of factors with exponent >= k is log_l(omega[k] / omega[k-1])
        let mut at_least = Vec::new();
        for k in 1..omega.len() {
            let mut ratio = omega[k] / omega[k - 1];
            let mut r = 0;
            while ratio > 1 {
                ratio /= l as usize;
                r += 1;
            }
            at_least.push(r);
        }
        for (k, &cnt) in at_least.iter().enumerate() {
            let next = at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..cnt - next {
                out.push(l.pow(k as u32 + 1));
            }
        }
    }
    out.sort_unstable();
    out
}

/// Invariants of `G / [G, G]` as prime-power cyclic factors.
pub fn abelian_invariants(g: &PcGroup) -> Vec<u64> {
    let d = derived_subgroup(g);
    let mut counts = BTreeMap::new();
    for x in 0..g.order() {
        let mut y = x;
        let mut k = 1u64;
        while !d.contains(y) {
            y = g.mul(y, x);
            k += 1;
        }
        *counts.entry(k).or_insert(0usize) += 1;
    }
    for c in counts.values_mut() {
        *c /= d.order();
    }
    invariants_from_order_counts(&counts)
}

pub fn conjugacy_classes(g: &PcGroup) -> Vec<Vec<usize>> {
    let gens = g.generators();
    let mut seen = FixedBitSet::with_capacity(g.order());
    let mut classes = Vec::new();
    for x in 0..g.order() {
        if seen.contains(x) {
            continue;
        }
        seen.insert(x);
        let mut class = vec![x];
        let mut i = 0;
        while i < class.len() {
            let y = class[i];
            for &t in &gens {
                let z = g.conj(y, t);
                if !seen.contains(z) {
                    seen.insert(z);
                    class.push(z);
                }
            }
            i += 1;
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dihedral(n: u32) -> PcGroup {
        let mut p = PcPresentation::new(&[("s", 2), ("r", n)]);
        let inv = p.normal_form(&[(1, n - 1)]);
        p.set_conjugate(1, 0, inv);
        collect(p).unwrap()
    }

    fn quaternion() -> PcGroup {
        // a^2 = b^2, b^a = b^-1 via a pc sequence a(2), b(2), z(2)
        let mut p = PcPresentation::new(&[("a", 2), ("b", 2), ("z", 2)]);
        let z = p.normal_form(&[(2, 1)]);
        p.set_power(0, z.clone()).set_power(1, z);
        let bz = p.normal_form(&[(1, 1), (2, 1)]);
        p.set_conjugate(1, 0, bz);
        collect(p).unwrap()
    }

    fn brute_derived(g: &PcGroup) -> usize {
        let comms: Vec<usize> =
            (0..g.order()).flat_map(|x| (0..g.order()).map(move |y| (x, y))).map(|(x, y)| g.commutator(x, y)).collect();
        subgroup_closure(g, &comms).order()
    }

    #[test]
    fn cyclic_table_matches_addition() {
        let g = collect(PcPresentation::new(&[("a", 12)])).unwrap();
        for x in 0..12 {
            for y in 0..12 {
                assert_eq!(g.mul(x, y), (x + y) % 12);
            }
        }
        assert_eq!(g.element_order(8), 3);
    }

    #[test]
    fn cyclic_via_power_rule() {
        // Z9 as a(3), b(3) with a^3 = b
        let mut p = PcPresentation::new(&[("a", 3), ("b", 3)]);
        let b = p.normal_form(&[(1, 1)]);
        p.set_power(0, b);
        let g = collect(p).unwrap();
        assert_eq!(g.element_order(g.generator(0)), 9);
        assert!(g.is_abelian());
        assert_eq!(abelian_invariants(&g), vec![9]);
    }

    #[test]
    fn dihedral_facts() {
        for n in [3u32, 4, 5, 6, 9] {
            let g = dihedral(n);
            assert_eq!(g.order(), 2 * n as usize);
            let s = g.generator(0);
            let r = g.generator(1);
            assert_eq!(g.conj(r, s), g.inv(r));
            let z = center(&g).order();
            assert_eq!(z, if n % 2 == 0 { 2 } else { 1 });
            assert_eq!(derived_subgroup(&g).order(), brute_derived(&g));
            let classes = conjugacy_classes(&g);
            let expected = if n % 2 == 0 { n / 2 + 3 } else { (n - 1) / 2 + 2 };
            assert_eq!(classes.len(), expected as usize);
        }
    }

    #[test]
    fn quaternion_facts() {
        let g = quaternion();
        assert_eq!(g.order(), 8);
        let hist = order_histogram(&g);
        assert_eq!(hist.get(&4), Some(&6));
        assert_eq!(hist.get(&2), Some(&1));
        assert_eq!(center(&g).order(), 2);
        assert_eq!(abelian_invariants(&g), vec![2, 2]);
    }

    #[test]
    fn inconsistent_presentation_rejected() {
        // b^a = b^2 in a(2), b(5) is not an automorphism of order dividing 2
        let mut p = PcPresentation::new(&[("a", 2), ("b", 5)]);
        let b2 = p.normal_form(&[(1, 2)]);
        p.set_conjugate(1, 0, b2);
        assert!(matches!(collect(p), Err(GroupError::InconsistentPresentation(_))));
    }

    #[test]
    fn invalid_presentations() {
        let mut p = PcPresentation::new(&[("a", 2), ("b", 3)]);
        p.set_power(1, vec![1, 0]);
        assert!(matches!(collect(p), Err(GroupError::InvalidPresentation(_))));
        let p = PcPresentation::new(&[("a", 200), ("b", 200)]);
        assert_eq!(collect(p).unwrap_err(), GroupError::TooLarge { order: 40000, cap: CAYLEY_CAP });
    }

    #[test]
    fn invariants_of_abelian_products() {
        let g = collect(PcPresentation::new(&[("a", 4), ("b", 2), ("c", 9), ("d", 3)])).unwrap();
        assert_eq!(abelian_invariants(&g), vec![2, 3, 4, 9]);
        assert_eq!(invariants_from_order_counts(&order_histogram(&g)), vec![2, 3, 4, 9]);
    }

    #[test]
    fn collect_product_agrees_with_table() {
        let g = dihedral(7);
        let pres = g.presentation();
        for x in 0..g.order() {
            for y in 0..g.order() {
                let v = pres.collect_product(&g.exponents(x), &g.exponents(y));
                assert_eq!(g.index_of(&v), g.mul(x, y));
            }
        }
    }
}
