//! Automorphism groups of the catalog groups, three ways: exhaustive search,
//! explicit `Q ⋊ R` construction, and the closed-form predictions.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::catalog::CatalogError;
use crate::group::PcGroup;

pub mod brute;
pub mod construct;
pub mod crosscheck;
pub mod matrix;
pub mod predicted;
pub mod verify;

pub use brute::{brute_aut, brute_aut_with, BruteOptions, DEFAULT_BUDGET};
pub use construct::{check_main_theorem, construct_qr, Construction};
pub use crosscheck::mn_sum_crosscheck;
pub use matrix::{matrix_of, verify_aut_matrix, AutMatrix, MatrixCondition, MatrixViolation};
pub use predicted::{predicted, StructureExpr};
pub use verify::{verify, AutReport, Verdict, VerifyOptions};

/// Automorphisms are stored as generator images; no catalog group needs more.
pub const MAX_GENS: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("{0} generators exceed the supported maximum of 4")]
    TooManyGenerators(usize),
    #[error("type {0} is not a semidirect type (19..=36)")]
    NotSemidirect(u8),
    #[error("constraint unsatisfiable: {0}")]
    ConstraintUnsatisfiable(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// An automorphism given by the images of the presentation generators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    images: [u16; MAX_GENS],
    len: u8,
}

impl fmt::Debug for Automorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.images()).finish()
    }
}

impl Automorphism {
    /// Wrap a generator-image tuple. No check is made that it defines an
    /// automorphism; see [`is_automorphism`](Self::is_automorphism).
    pub fn from_images(images: &[usize]) -> Self {
        assert!(images.len() <= MAX_GENS, "too many generators");
        let mut arr = [0u16; MAX_GENS];
        for (slot, &x) in arr.iter_mut().zip(images) {
            *slot = u16::try_from(x).expect("element index fits u16");
        }
        Automorphism { images: arr, len: images.len() as u8 }
    }

    pub fn identity(g: &PcGroup) -> Self {
        Self::from_images(&g.generators())
    }

    pub fn images(&self) -> &[u16] {
        &self.images[..self.len as usize]
    }

    pub fn image(&self, i: usize) -> usize {
        self.images()[i] as usize
    }

    /// Packed image tuple, unique per automorphism of a fixed group.
    pub fn key(&self) -> u64 {
        self.images().iter().fold(0u64, |acc, &x| (acc << 16) | x as u64)
    }

    /// Image of an arbitrary element.
    pub fn apply(&self, g: &PcGroup, x: usize) -> usize {
        let mut out = 0;
        for (i, &img) in self.images().iter().enumerate() {
            let e = g.digit(x, i);
            if e != 0 {
                out = g.mul(out, g.pow(img as usize, e as u64));
            }
        }
        out
    }

    /// Images of all elements, built along normal forms.
    pub fn full_map(&self, g: &PcGroup) -> Vec<u16> {
        let mut map = vec![0u16; g.order()];
        let strides = g.strides();
        for x in 1..g.order() {
            let k = g.last_generator(x);
            map[x] = g.mul(map[x - strides[k]] as usize, self.images[k] as usize) as u16;
        }
        map
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Automorphism, g: &PcGroup) -> Automorphism {
        let mut out = *other;
        for slot in out.images[..out.len as usize].iter_mut() {
            *slot = self.apply(g, *slot as usize) as u16;
        }
        out
    }

    pub fn inverse(&self, g: &PcGroup) -> Automorphism {
        let map = self.full_map(g);
        let mut preimage = vec![0usize; g.order()];
        for (x, &y) in map.iter().enumerate() {
            preimage[y as usize] = x;
        }
        let images: Vec<usize> = g.generators().iter().map(|&s| preimage[s]).collect();
        Automorphism::from_images(&images)
    }

    pub fn is_identity(&self, g: &PcGroup) -> bool {
        self.images().iter().zip(g.generators()).all(|(&a, b)| a as usize == b)
    }

    /// Whether the images satisfy every presentation relation and generate `G`.
    pub fn is_automorphism(&self, g: &PcGroup) -> bool {
        let pres = g.presentation();
        let n = g.gen_count();
        if self.len as usize != n {
            return false;
        }
        let eval = |w: &[u32]| {
            w.iter()
                .enumerate()
                .filter(|(_, &e)| e != 0)
                .fold(0, |acc, (m, &e)| g.mul(acc, g.pow(self.image(m), e as u64)))
        };
        for i in 0..n {
            let o = pres.generators()[i].relative_order as u64;
            if g.pow(self.image(i), o) != eval(pres.power_rule(i)) {
                return false;
            }
            for j in i + 1..n {
                if g.conj(self.image(j), self.image(i)) != eval(pres.conjugation_rule(j, i)) {
                    return false;
                }
            }
        }
        let map = self.full_map(g);
        let mut seen = vec![false; g.order()];
        map.iter().all(|&y| !std::mem::replace(&mut seen[y as usize], true))
    }

    /// Multiplicative order inside `Aut(G)`.
    pub fn order(&self, g: &PcGroup) -> u64 {
        let map = self.full_map(g);
        let mut cur = *self;
        let mut k = 1;
        while !cur.is_identity(g) {
            for slot in cur.images[..cur.len as usize].iter_mut() {
                *slot = map[*slot as usize];
            }
            k += 1;
        }
        k
    }
}

/// A set of automorphisms closed under composition.
#[derive(Debug, Clone)]
pub struct AutGroup {
    elements: Vec<Automorphism>,
    keys: HashSet<u64>,
    generators: Vec<Automorphism>,
}

impl AutGroup {
    /// Wrap a set already known to be a group.
    pub fn from_elements(mut elements: Vec<Automorphism>, generators: Vec<Automorphism>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        let keys = elements.iter().map(Automorphism::key).collect();
        AutGroup { elements, keys, generators }
    }

    /// Subgroup of `Aut(G)` generated by `gens` (which must be automorphisms).
    pub fn closure(g: &PcGroup, gens: &[Automorphism]) -> Self {
        let id = Automorphism::identity(g);
        let maps: Vec<Vec<u16>> = gens.iter().map(|s| s.full_map(g)).collect();
        let mut keys = HashSet::from([id.key()]);
        let mut elements = vec![id];
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for map in &maps {
                let mut y = x;
                for slot in y.images[..y.len as usize].iter_mut() {
                    *slot = map[*slot as usize];
                }
                if keys.insert(y.key()) {
                    elements.push(y);
                    queue.push_back(y);
                }
            }
        }
        elements.sort_unstable();
        AutGroup { elements, keys, generators: gens.to_vec() }
    }

    /// Closure of a set by adding members one at a time, keeping only those
    /// that enlarge the subgroup as generators.
    pub fn closure_greedy(g: &PcGroup, members: &[Automorphism]) -> Self {
        let mut current = AutGroup::closure(g, &[]);
        let mut gens: Vec<Automorphism> = Vec::new();
        for m in members {
            if !current.contains(m) {
                gens.push(*m);
                current = AutGroup::closure(g, &gens);
            }
        }
        current
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: &Automorphism) -> bool {
        self.keys.contains(&a.key())
    }

    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn generators(&self) -> &[Automorphism] {
        &self.generators
    }

    /// Same elements, irrespective of generators.
    pub fn same_set(&self, other: &AutGroup) -> bool {
        self.order() == other.order() && self.elements.iter().all(|a| other.contains(a))
    }

    /// A generating set, chosen greedily in element order.
    pub fn generating_set(&self, g: &PcGroup) -> Vec<Automorphism> {
        if !self.generators.is_empty() {
            return self.generators.clone();
        }
        AutGroup::closure_greedy(g, &self.elements).generators
    }
}
