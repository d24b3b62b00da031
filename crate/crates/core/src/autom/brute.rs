//! Exhaustive automorphism search over generator images.
//!
//! Each generator may only go to an element of the same order. Generators
//! are assigned in decreasing (relative order, constraint count); a relation
//! is tested as soon as every generator it mentions has an image. Surviving
//! full assignments are automorphisms iff the induced map is injective.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use super::{AutError, AutGroup, Automorphism, MAX_GENS};
use crate::group::PcGroup;

pub const DEFAULT_BUDGET: u64 = 100_000_000;

// nodes are flushed to the shared counter in batches
const FLUSH_EVERY: u64 = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BruteOptions {
    /// Maximum number of partial assignments that survive pruning.
    pub budget: u64,
    /// Split the search over the first generator's candidates with rayon.
    pub parallel: bool,
}

impl Default for BruteOptions {
    fn default() -> Self {
        BruteOptions { budget: DEFAULT_BUDGET, parallel: true }
    }
}

#[derive(Debug, Clone)]
enum Relation {
    // x_i^{o_i} = w
    Power { i: usize, exp: u64, word: Vec<u32> },
    // x_by^-1 x_j x_by = w
    Conj { j: usize, by: usize, word: Vec<u32>, commute: bool },
}

struct Plan<'g> {
    g: &'g PcGroup,
    // generator index assigned at each depth
    sequence: Vec<usize>,
    candidates: Vec<Vec<u16>>,
    checks: Vec<Vec<Relation>>,
}

fn support(word: &[u32]) -> impl Iterator<Item = usize> + '_ {
    word.iter().enumerate().filter(|(_, &e)| e != 0).map(|(m, _)| m)
}

impl<'g> Plan<'g> {
    fn new(g: &'g PcGroup) -> Self {
        let pres = g.presentation();
        let n = g.gen_count();
        let orders = g.element_orders();

        let mut relations = Vec::new();
        for i in 0..n {
            let word = pres.power_rule(i).to_vec();
            if word.iter().any(|&e| e != 0) {
                let exp = pres.generators()[i].relative_order as u64;
                relations.push(Relation::Power { i, exp, word });
            }
            for j in i + 1..n {
                relations.push(Relation::Conj {
                    j,
                    by: i,
                    word: pres.conjugation_rule(j, i).to_vec(),
                    commute: pres.is_trivial_conjugate(j, i),
                });
            }
        }
        let involved = |r: &Relation| -> Vec<usize> {
            let mut v: Vec<usize> = match r {
                Relation::Power { i, word, .. } => std::iter::once(*i).chain(support(word)).collect(),
                Relation::Conj { j, by, word, .. } => [*j, *by].into_iter().chain(support(word)).collect(),
            };
            v.sort_unstable();
            v.dedup();
            v
        };
        let mut constraint_count = vec![0usize; n];
        for r in &relations {
            let nontrivial = !matches!(r, Relation::Conj { commute: true, .. });
            if nontrivial {
                for m in involved(r) {
                    constraint_count[m] += 1;
                }
            }
        }
        let mut sequence: Vec<usize> = (0..n).collect();
        let rel = pres.relative_orders();
        sequence.sort_by_key(|&i| (std::cmp::Reverse(rel[i]), std::cmp::Reverse(constraint_count[i]), i));
        let depth_of = |m: usize| sequence.iter().position(|&s| s == m).unwrap();

        let mut checks = vec![Vec::new(); n];
        for r in relations {
            let d = involved(&r).into_iter().map(depth_of).max().unwrap();
            checks[d].push(r);
        }
        let candidates = sequence
            .iter()
            .map(|&i| {
                let target = orders[g.generator(i)];
                (0..g.order()).filter(|&x| orders[x] == target).map(|x| x as u16).collect()
            })
            .collect();
        Plan { g, sequence, candidates, checks }
    }

    fn eval(&self, word: &[u32], imgs: &[u16; MAX_GENS]) -> usize {
        let g = self.g;
        word.iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .fold(0, |acc, (m, &e)| g.mul(acc, g.pow(imgs[m] as usize, e as u64)))
    }

    fn holds(&self, depth: usize, imgs: &[u16; MAX_GENS]) -> bool {
        let g = self.g;
        self.checks[depth].iter().all(|r| match r {
            Relation::Power { i, exp, word } => g.pow(imgs[*i] as usize, *exp) == self.eval(word, imgs),
            Relation::Conj { j, by, commute: true, .. } => {
                let (x, y) = (imgs[*j] as usize, imgs[*by] as usize);
                g.mul(x, y) == g.mul(y, x)
            }
            Relation::Conj { j, by, word, .. } => {
                g.conj(imgs[*j] as usize, imgs[*by] as usize) == self.eval(word, imgs)
            }
        })
    }
}

struct Worker<'p, 'g> {
    plan: &'p Plan<'g>,
    budget: u64,
    shared_nodes: &'p AtomicU64,
    abort: &'p AtomicBool,
    local_nodes: u64,
    // injectivity scratch
    map: Vec<u16>,
    stamp: Vec<u32>,
    leaf: u32,
    found: Vec<Automorphism>,
}

impl<'p, 'g> Worker<'p, 'g> {
    fn new(plan: &'p Plan<'g>, budget: u64, shared_nodes: &'p AtomicU64, abort: &'p AtomicBool) -> Self {
        let order = plan.g.order();
        Worker {
            plan,
            budget,
            shared_nodes,
            abort,
            local_nodes: 0,
            map: vec![0; order],
            stamp: vec![0; order],
            leaf: 0,
            found: Vec::new(),
        }
    }

    fn count_node(&mut self) -> bool {
        self.local_nodes += 1;
        if self.local_nodes >= FLUSH_EVERY {
            let total = self.shared_nodes.fetch_add(self.local_nodes, Ordering::Relaxed) + self.local_nodes;
            self.local_nodes = 0;
            if total > self.budget {
                self.abort.store(true, Ordering::Relaxed);
            }
        }
        !self.abort.load(Ordering::Relaxed)
    }

    fn finish(&mut self) {
        let total = self.shared_nodes.fetch_add(self.local_nodes, Ordering::Relaxed) + self.local_nodes;
        self.local_nodes = 0;
        if total > self.budget {
            self.abort.store(true, Ordering::Relaxed);
        }
    }

    fn injective(&mut self, imgs: &[u16; MAX_GENS]) -> bool {
        let g = self.plan.g;
        let strides = g.strides();
        self.leaf = self.leaf.wrapping_add(1);
        if self.leaf == 0 {
            self.stamp.fill(0);
            self.leaf = 1;
        }
        self.stamp[0] = self.leaf;
        for x in 1..g.order() {
            let k = g.last_generator(x);
            let y = g.mul(self.map[x - strides[k]] as usize, imgs[k] as usize);
            if self.stamp[y] == self.leaf {
                return false;
            }
            self.stamp[y] = self.leaf;
            self.map[x] = y as u16;
        }
        true
    }

    fn descend(&mut self, depth: usize, imgs: &mut [u16; MAX_GENS]) {
        let plan = self.plan;
        let n = plan.sequence.len();
        if depth == n {
            if self.injective(imgs) {
                self.found.push(Automorphism { images: *imgs, len: n as u8 });
            }
            return;
        }
        let gen = plan.sequence[depth];
        for &c in &plan.candidates[depth] {
            imgs[gen] = c;
            if !plan.holds(depth, imgs) {
                continue;
            }
            if !self.count_node() {
                return;
            }
            self.descend(depth + 1, imgs);
        }
    }
}

/// All automorphisms of `g`, or `BudgetExceeded`.
pub fn brute_aut(g: &PcGroup, budget: u64) -> Result<AutGroup, AutError> {
    brute_aut_with(g, &BruteOptions { budget, ..BruteOptions::default() })
}

pub fn brute_aut_with(g: &PcGroup, options: &BruteOptions) -> Result<AutGroup, AutError> {
    let n = g.gen_count();
    if n > MAX_GENS {
        return Err(AutError::TooManyGenerators(n));
    }
    let plan = Plan::new(g);
    let nodes = AtomicU64::new(0);
    let abort = AtomicBool::new(false);
    let first = plan.sequence[0];

    let run_subtree = |c: u16| -> Vec<Automorphism> {
        let mut w = Worker::new(&plan, options.budget, &nodes, &abort);
        let mut imgs = [0u16; MAX_GENS];
        imgs[first] = c;
        if plan.holds(0, &imgs) && w.count_node() {
            w.descend(1, &mut imgs);
        }
        w.finish();
        w.found
    };
    let found: Vec<Automorphism> = if options.parallel {
        plan.candidates[0].par_iter().flat_map_iter(|&c| run_subtree(c)).collect()
    } else {
        plan.candidates[0].iter().flat_map(|&c| run_subtree(c)).collect()
    };
    if abort.load(Ordering::Relaxed) {
        return Err(AutError::BudgetExceeded { budget: options.budget });
    }
    Ok(AutGroup::from_elements(found, Vec::new()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{collect, PcPresentation};

    fn cyclic(n: u32) -> PcGroup {
        collect(PcPresentation::new(&[("a", n)])).unwrap()
    }

    #[test]
    fn cyclic_groups_have_unit_group_automorphisms() {
        for (n, phi) in [(4u32, 2usize), (9, 6), (12, 4), (36, 12), (2, 1)] {
            assert_eq!(brute_aut(&cyclic(n), DEFAULT_BUDGET).unwrap().order(), phi, "Z{n}");
        }
    }

    #[test]
    fn elementary_abelian_gives_gl2() {
        let g = collect(PcPresentation::new(&[("a", 3), ("b", 3)])).unwrap();
        assert_eq!(brute_aut(&g, DEFAULT_BUDGET).unwrap().order(), 48);
    }

    #[test]
    fn s3_is_complete() {
        let mut p = PcPresentation::new(&[("s", 2), ("r", 3)]);
        let r2 = p.normal_form(&[(1, 2)]);
        p.set_conjugate(1, 0, r2);
        let g = collect(p).unwrap();
        let aut = brute_aut(&g, DEFAULT_BUDGET).unwrap();
        assert_eq!(aut.order(), 6);
        assert!(aut.elements().iter().all(|a| a.is_automorphism(&g)));
    }

    #[test]
    fn budget_is_reported_not_truncated() {
        let g = collect(PcPresentation::new(&[("a", 5), ("b", 5)])).unwrap();
        assert_eq!(brute_aut(&g, 10).unwrap_err(), AutError::BudgetExceeded { budget: 10 });
        let serial = brute_aut_with(&g, &BruteOptions { budget: DEFAULT_BUDGET, parallel: false }).unwrap();
        assert_eq!(serial.order(), 480);
    }
}
