//! One-spec verification: predicted order vs. exhaustive search vs. explicit
//! construction, summarised as an [`AutReport`].

use std::collections::BTreeMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::brute::{brute_aut_with, BruteOptions, DEFAULT_BUDGET};
use super::construct::{check_main_theorem, construct_qr, Construction};
use super::predicted::predicted;
use super::{AutError, AutGroup, Automorphism};
use crate::catalog::{build, BuiltGroup, CatalogError, GroupSpec};
use crate::group::{abelian_invariants, center, invariants_from_order_counts, order_histogram, GroupError, PcGroup};

/// Largest `|Aut(G)|` for which fingerprints of `Aut(G)` are computed.
pub const FINGERPRINT_CAP: usize = 20_000;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub budget: u64,
    pub parallel: bool,
    /// Run the explicit construction for types 19 to 36.
    pub construct: bool,
    pub fingerprint_cap: usize,
    /// Replace the tabulated order; only used to exercise the mismatch path.
    #[doc(hidden)]
    pub predicted_order_override: Option<u64>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: DEFAULT_BUDGET,
            parallel: true,
            construct: true,
            fingerprint_cap: FINGERPRINT_CAP,
            predicted_order_override: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Match,
    OrderMismatch,
    ConstructionIncomplete,
    Skipped,
}

impl Verdict {
    /// Whether the verdict counts as success for exit codes.
    pub fn is_ok(&self) -> bool {
        matches!(self, Verdict::Match | Verdict::Skipped)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedInfo {
    pub expr: String,
    pub order: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BruteInfo {
    pub order: u64,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructedInfo {
    pub q_order: u64,
    pub r_order: u64,
    pub qr_order: u64,
    pub main_theorem_ok: bool,
    pub equals_brute_set: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fingerprints {
    pub group_order_histogram: BTreeMap<u64, u64>,
    pub group_center_order: u64,
    pub group_abelian_invariants: Vec<u64>,
    pub aut_order_histogram: Option<BTreeMap<u64, u64>>,
    pub aut_center_order: Option<u64>,
    pub aut_abelian_invariants: Option<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AutReport {
    pub spec: GroupSpec,
    pub group_order: u64,
    pub predicted: PredictedInfo,
    pub brute: Option<BruteInfo>,
    pub constructed: Option<ConstructedInfo>,
    pub fingerprints: Option<Fingerprints>,
    pub verdict: Verdict,
    pub verdict_reason: Option<String>,
}

/// A report together with the objects it was computed from.
#[derive(Debug, Clone)]
pub struct Verification {
    pub report: AutReport,
    pub built: Option<BuiltGroup>,
    pub brute: Option<AutGroup>,
    pub construction: Option<Construction>,
}

fn compose_with_map(map: &[u16], x: &Automorphism) -> Automorphism {
    let images: Vec<usize> = x.images().iter().map(|&y| map[y as usize] as usize).collect();
    Automorphism::from_images(&images)
}

/// Order histogram, centre order and abelian invariants of `aut`.
pub fn aut_fingerprints(g: &PcGroup, aut: &AutGroup) -> (BTreeMap<u64, u64>, u64, Vec<u64>) {
    let mut hist = BTreeMap::new();
    for a in aut.elements() {
        *hist.entry(a.order(g)).or_insert(0) += 1;
    }
    let gens = aut.generating_set(g);
    let center =
        aut.elements().iter().filter(|a| gens.iter().all(|s| a.compose(s, g) == s.compose(a, g))).count() as u64;

    let comm = |x: &Automorphism, y: &Automorphism| {
        let (xi, yi) = (x.inverse(g), y.inverse(g));
        xi.compose(&yi.compose(&x.compose(y, g), g), g)
    };
    let mut derived_gens: Vec<Automorphism> =
        gens.iter().flat_map(|x| gens.iter().map(move |y| (x, y))).map(|(x, y)| comm(x, y)).collect();
    let mut derived = AutGroup::closure_greedy(g, &derived_gens);
    loop {
        let dg = derived.generating_set(g);
        let extra: Vec<Automorphism> = gens
            .iter()
            .flat_map(|s| dg.iter().map(move |d| (s, d)))
            .map(|(s, d)| s.inverse(g).compose(&d.compose(s, g), g))
            .filter(|c| !derived.contains(c))
            .collect();
        if extra.is_empty() {
            break;
        }
        derived_gens = dg;
        derived_gens.extend(extra);
        derived = AutGroup::closure_greedy(g, &derived_gens);
    }
    let mut counts = BTreeMap::new();
    for a in aut.elements() {
        let map = a.full_map(g);
        let mut cur = *a;
        let mut k = 1u64;
        while !derived.contains(&cur) {
            cur = compose_with_map(&map, &cur);
            k += 1;
        }
        *counts.entry(k).or_insert(0usize) += 1;
    }
    for c in counts.values_mut() {
        *c /= derived.order();
    }
    (hist, center, invariants_from_order_counts(&counts))
}

fn group_fingerprints(g: &PcGroup) -> Fingerprints {
    Fingerprints {
        group_order_histogram: order_histogram(g).into_iter().map(|(k, v)| (k, v as u64)).collect(),
        group_center_order: center(g).order() as u64,
        group_abelian_invariants: abelian_invariants(g),
        aut_order_histogram: None,
        aut_center_order: None,
        aut_abelian_invariants: None,
    }
}

/// Run every applicable route for `spec` and judge the outcome.
pub fn verify(spec: &GroupSpec, options: &VerifyOptions) -> AutReport {
    verify_detailed(spec, options).report
}

pub fn verify_detailed(spec: &GroupSpec, options: &VerifyOptions) -> Verification {
    let (expr, table_order) = predicted(spec).expect("catalog specs have a table row");
    let predicted_order = options.predicted_order_override.unwrap_or(table_order as u64);
    let mut report = AutReport {
        spec: spec.clone(),
        group_order: spec.order(),
        predicted: PredictedInfo { expr: expr.to_string(), order: predicted_order },
        brute: None,
        constructed: None,
        fingerprints: None,
        verdict: Verdict::Skipped,
        verdict_reason: None,
    };
    let mut out = Verification { report: report.clone(), built: None, brute: None, construction: None };

    let built = match build(spec) {
        Ok(b) => b,
        Err(CatalogError::Group(GroupError::TooLarge { order, cap })) => {
            report.verdict_reason = Some(format!("group order {order} exceeds Cayley cap {cap}"));
            out.report = report;
            return out;
        }
        Err(e) => {
            report.verdict = Verdict::ConstructionIncomplete;
            report.verdict_reason = Some(format!("build failed: {e}"));
            out.report = report;
            return out;
        }
    };
    let g = &built.group;
    let mut fingerprints = group_fingerprints(g);

    let started = Instant::now();
    let brute_opts = BruteOptions { budget: options.budget, parallel: options.parallel };
    let brute = match brute_aut_with(g, &brute_opts) {
        Ok(a) => a,
        Err(e) => {
            report.verdict_reason = Some(format!("oracle skipped: {e}"));
            report.fingerprints = Some(fingerprints);
            out.report = report;
            out.built = Some(built);
            return out;
        }
    };
    let brute_order = brute.order() as u64;
    report.brute = Some(BruteInfo { order: brute_order, elapsed_ms: started.elapsed().as_millis() as u64 });

    let mut construction_error: Option<AutError> = None;
    if options.construct && (19..=36).contains(&spec.type_id) {
        match construct_qr(&built) {
            Ok(c) => {
                report.constructed = Some(ConstructedInfo {
                    q_order: c.q.order() as u64,
                    r_order: c.r.order() as u64,
                    qr_order: c.qr.order() as u64,
                    main_theorem_ok: check_main_theorem(g, &c.q, &c.r, &c.qr),
                    equals_brute_set: c.qr.same_set(&brute),
                });
                out.construction = Some(c);
            }
            Err(e) => construction_error = Some(e),
        }
    }

    if brute.order() <= options.fingerprint_cap {
        let (hist, center_order, inv) = aut_fingerprints(g, &brute);
        fingerprints.aut_order_histogram = Some(hist);
        fingerprints.aut_center_order = Some(center_order);
        fingerprints.aut_abelian_invariants = Some(inv);
    }
    report.fingerprints = Some(fingerprints);

    let (verdict, reason) = if predicted_order != brute_order {
        (Verdict::OrderMismatch, Some(format!("predicted {predicted_order}, oracle {brute_order}")))
    } else if let Some(e) = construction_error {
        (Verdict::ConstructionIncomplete, Some(e.to_string()))
    } else if let Some(c) = &report.constructed {
        if c.qr_order != brute_order || !c.equals_brute_set {
            (Verdict::OrderMismatch, Some(format!("constructed QR has {} elements, oracle set differs", c.qr_order)))
        } else if !c.main_theorem_ok {
            (Verdict::OrderMismatch, Some("Q ⋊ R decomposition fails".to_string()))
        } else {
            (Verdict::Match, None)
        }
    } else {
        (Verdict::Match, None)
    };
    report.verdict = verdict;
    report.verdict_reason = reason;
    out.report = report;
    out.built = Some(built);
    out.brute = Some(brute);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_reports() {
        let r = verify(&GroupSpec::parse("t1:p=2,q=3").unwrap(), &VerifyOptions::default());
        assert_eq!(r.verdict, Verdict::Match);
        assert_eq!(r.brute.as_ref().unwrap().order, 12);
        let fp = r.fingerprints.unwrap();
        assert_eq!(fp.aut_abelian_invariants, Some(vec![2, 2, 3]));
        assert_eq!(fp.aut_center_order, Some(12));

        let r = verify(&GroupSpec::parse("t19:p=5,q=2").unwrap(), &VerifyOptions::default());
        assert_eq!(r.verdict, Verdict::Match, "{:?}", r.verdict_reason);
        assert_eq!(r.brute.unwrap().order, 1000);
    }

    #[test]
    fn override_forces_mismatch() {
        let opts = VerifyOptions { predicted_order_override: Some(13), ..VerifyOptions::default() };
        let r = verify(&GroupSpec::parse("t1:p=2,q=3").unwrap(), &opts);
        assert_eq!(r.verdict, Verdict::OrderMismatch);
    }

    #[test]
    fn tiny_budget_skips() {
        let opts = VerifyOptions { budget: 5, ..VerifyOptions::default() };
        let r = verify(&GroupSpec::parse("t19:p=5,q=2").unwrap(), &opts);
        assert_eq!(r.verdict, Verdict::Skipped);
        assert!(r.brute.is_none());
    }
}
