//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use plucker::blade::subsets;
use plucker::decomposability::{
    duality_identity_check, equation_count, factorize, from_factors, kernel_dimension,
    three_plane_check, ContractionMode, CountedCriterion, CriterionRegistry, DecomposableFamily,
    ThreePlaneBranch,
};
use plucker::exterior::{support_space, wedge, Multivector};
use plucker::random::{
    common_intersection_family, common_span_family, random_multivector, random_nonsimple,
    random_nonzero_multivector, random_rational_multivector, random_simple, rng_for, SeededRng,
};
use plucker::young::{dim_y, find_nonzero_probe, verify_star_star, TwoColumnShape};
use plucker::Rational;

const BOUND: i64 = 10;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn basis(n: usize, idx: &[usize]) -> Multivector {
    Multivector::basis(n, idx).unwrap()
}

/// Inputs for suites 1 and 9 at one `(n, s)`: dense random draws plus
/// simple and non-simple structured instances.
fn suite_inputs(n: usize, s: usize, seed: u64) -> Vec<Multivector> {
    let mut g: SeededRng = rng_for(seed, (n * 100 + s) as u64);
    let mut out = Vec::new();
    for _ in 0..1000 {
        out.push(random_multivector(&mut g, n, s, BOUND, false).unwrap());
    }
    for _ in 0..100 {
        out.push(random_simple(&mut g, n, s, BOUND).unwrap());
        out.push(random_nonsimple(&mut g, n, s, BOUND).unwrap());
    }
    out
}

/// Top-degree and codegree-1 inputs. Symbolic contraction to grade 2
/// expands `s − 2` generic covectors, so these stay at `n ≤ 6`.
fn top_and_codegree_one(seed: u64) -> Vec<(usize, usize, Multivector)> {
    let mut g: SeededRng = rng_for(seed, 999);
    let mut out = Vec::new();
    for n in 2..=6 {
        for s in [n, n - 1] {
            for _ in 0..25 {
                out.push((
                    n,
                    s,
                    random_multivector(&mut g, n, s, BOUND, false).unwrap(),
                ));
            }
        }
    }
    out
}

const SUITE_PAIRS: [(usize, usize); 5] = [(4, 2), (5, 2), (6, 3), (7, 3), (8, 4)];

fn ac1_and_ac9() -> (Outcome, Outcome) {
    let registry = CriterionRegistry::with_defaults(ContractionMode::Symbolic);
    let mut cases = 0usize;
    let mut disagreements = Vec::new();
    let mut kernel_cases = 0usize;
    let mut kernel_mismatches = Vec::new();
    let mut simple_count = 0usize;
    let inputs = SUITE_PAIRS
        .iter()
        .flat_map(|&(n, s)| suite_inputs(n, s, 1).into_iter().map(move |p| (n, s, p)))
        .chain(top_and_codegree_one(1));
    {
        for (n, s, p) in inputs {
            cases += 1;
            let reports = registry.evaluate_all(&p).expect("criteria run");
            let verdicts: Vec<bool> = reports.iter().map(|r| r.verdict).collect();
            if verdicts.iter().any(|&v| v != verdicts[0]) {
                let line: Vec<String> = reports
                    .iter()
                    .map(|r| format!("{}={}", r.criterion, r.verdict))
                    .collect();
                disagreements.push(format!("({n},{s}) {p}: {}", line.join(" ")));
            }
            if verdicts[0] {
                simple_count += 1;
            }
            if !p.is_zero() {
                kernel_cases += 1;
                let by_support = support_space(&p).rank() == p.grade();
                let by_kernel = kernel_dimension(&p) == p.grade();
                if by_support != by_kernel {
                    kernel_mismatches.push(format!("({n},{s}) {p}"));
                }
            }
        }
    }
    let ac1 = outcome(
        disagreements.is_empty(),
        format!(
            "{cases} inputs over {SUITE_PAIRS:?} and top/codegree-1 for n <= 6, {simple_count} simple, {} disagreements{}",
            disagreements.len(),
            disagreements
                .first()
                .map(|d| format!("; first: {d}"))
                .unwrap_or_default()
        ),
    );
    let ac9 = outcome(
        kernel_mismatches.is_empty(),
        format!(
            "{kernel_cases} nonzero inputs, {} mismatches",
            kernel_mismatches.len()
        ),
    );
    (ac1, ac9)
}

fn ac2() -> Outcome {
    let n = 7;
    let q = basis(n, &[2, 3, 4]).add(&basis(n, &[5, 6, 7])).unwrap();
    let p = wedge(&basis(n, &[1]), &q).unwrap();
    let square_zero = wedge(&p, &p).unwrap().is_zero();
    let registry = CriterionRegistry::with_defaults(ContractionMode::Symbolic);
    let improved = registry.evaluate("improved", &p).unwrap();
    let optimal = registry.evaluate("optimal", &p).unwrap();
    let oracle = registry.evaluate("oracle", &p).unwrap();
    let witnesses_sound = [&improved, &optimal]
        .iter()
        .all(|r| r.recheck_witness(&p).unwrap().is_some_and(|v| !v.is_zero()));
    let passed =
        square_zero && !improved.verdict && !optimal.verdict && !oracle.verdict && witnesses_sound;
    outcome(
        passed,
        format!(
            "P∧P zero: {square_zero}; improved {}, optimal {}, oracle {}; witnesses recheck nonzero: {witnesses_sound}",
            improved.verdict, optimal.verdict, oracle.verdict
        ),
    )
}

fn ac3() -> Outcome {
    let shape = TwoColumnShape::new(4, 4).unwrap();
    let mut failures = Vec::new();
    let mut worst = 0;
    let mut total = 0;
    for n in 5..=8 {
        let mut g = rng_for(3, n as u64);
        for i in 0..200 {
            total += 1;
            let p = random_nonzero_multivector(&mut g, n, 4, BOUND).unwrap();
            match find_nonzero_probe(&p, &shape, &mut g, 50, BOUND).unwrap() {
                Some(hit) => worst = worst.max(hit.attempt),
                None => failures.push(format!("n={n} form #{i}: {p}")),
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{total} random nonzero 4-forms, {} without a nonzero Y^(4,4) probe in 50 tries, most probes needed {worst}{}",
            failures.len(),
            failures.first().map(|f| format!("; first: {f}")).unwrap_or_default()
        ),
    )
}

fn ac4() -> Outcome {
    let mut failed = Vec::new();
    let mut checked = 0;
    for n in 1..=8 {
        for s in 1..=n {
            checked += 1;
            let report = verify_star_star(n, s).unwrap();
            if !report.passed() {
                failed.push(format!("(n={n}, s={s})"));
            }
        }
    }
    outcome(
        failed.is_empty(),
        format!("{checked} (n,s) pairs, failures: {failed:?}"),
    )
}

fn ac5() -> Outcome {
    let count = |n, s, c| equation_count(n, s, c).unwrap();
    let classical = count(8, 4, CountedCriterion::Classical);
    let improved = count(8, 4, CountedCriterion::Improved);
    let optimal = count(8, 4, CountedCriterion::Optimal);
    let hook = dim_y(8, &TwoColumnShape::new(6, 2).unwrap());
    let headline = classical == 3136
        && improved == 784
        && optimal == hook
        && optimal < improved
        && improved < classical;
    let mut violations = Vec::new();
    for s in 2..=4 {
        for n in 2 * s..=12 {
            let c = count(n, s, CountedCriterion::Classical);
            let i = count(n, s, CountedCriterion::Improved);
            let o = count(n, s, CountedCriterion::Optimal);
            if !(o < i && i < c) {
                violations.push(format!("(n={n},s={s}): {o} < {i} < {c}"));
            }
        }
    }
    outcome(
        headline && violations.is_empty(),
        format!(
            "n=8,s=4: Classical {classical}, Improved {improved}, Optimal {optimal} (hook-content {hook}); {} strict-order violations{}",
            violations.len(),
            if violations.is_empty() {
                String::new()
            } else {
                format!(": {}", violations.join(", "))
            }
        ),
    )
}

fn ac6() -> Outcome {
    let mut checked = 0usize;
    let mut failures = Vec::new();
    let mut check = |p: &Multivector, phi: &Multivector, psi: &Multivector| {
        checked += 1;
        if !duality_identity_check(p, phi, psi).unwrap() {
            failures.push(format!("P={p} Φ={phi} Ψ={psi}"));
        }
    };
    for (n, s) in [(4, 2), (5, 2)] {
        let blade = |b: plucker::Blade, dual| {
            Multivector::from_terms(n, b.grade(), dual, [(b, Rational::one())]).unwrap()
        };
        for p in subsets(n, s) {
            for phi in subsets(n, s - 1) {
                for psi in subsets(n, s + 1) {
                    check(&blade(p, false), &blade(phi, true), &blade(psi, true));
                }
            }
        }
    }
    for (n, s) in [(6, 3), (7, 3)] {
        let mut g = rng_for(6, n as u64);
        for _ in 0..10_000 {
            let p = random_rational_multivector(&mut g, n, s, 5, false).unwrap();
            let phi = random_rational_multivector(&mut g, n, s - 1, 5, true).unwrap();
            let psi = random_rational_multivector(&mut g, n, s + 1, 5, true).unwrap();
            check(&p, &phi, &psi);
        }
    }
    outcome(
        failures.is_empty(),
        format!("{checked} instances, {} failures", failures.len()),
    )
}

fn ac7() -> Outcome {
    let mut checked = 0;
    let mut failures = Vec::new();
    for (n, s) in SUITE_PAIRS {
        let mut g = rng_for(7, (n * 100 + s) as u64);
        for _ in 0..500 {
            checked += 1;
            let p = random_simple(&mut g, n, s, BOUND).unwrap();
            let ok = factorize(&p).is_some_and(|f| {
                f.len() == s && f.iter().all(|v| v.grade() == 1) && from_factors(&f).unwrap() == p
            });
            if !ok {
                failures.push(format!("({n},{s}) {p}"));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "{checked} simple instances, {} round-trip failures",
            failures.len()
        ),
    )
}

fn ac8() -> Outcome {
    let n = 6;
    let mut counts = [0usize; 3];
    let mut errors = Vec::new();
    for k in [2, 3] {
        let mut g = rng_for(8, k as u64);
        for pattern in 0..2 {
            for _ in 0..200 {
                let members = if pattern == 0 {
                    common_intersection_family(&mut g, n, k, 4, 5).unwrap()
                } else {
                    common_span_family(&mut g, n, k, 4, 5).unwrap()
                };
                let result =
                    DecomposableFamily::new(members).and_then(|fam| three_plane_check(&fam));
                match result {
                    Ok(r) => {
                        counts[match r.branch {
                            ThreePlaneBranch::SpanBound => 0,
                            ThreePlaneBranch::IntersectionBound => 1,
                            ThreePlaneBranch::Both => 2,
                        }] += 1
                    }
                    Err(e) => errors.push(format!("k={k} pattern {pattern}: {e}")),
                }
            }
        }
    }
    let family = |sets: &[&[usize]]| {
        DecomposableFamily::new(sets.iter().map(|s| basis(4, s)).collect()).unwrap()
    };
    let star = three_plane_check(&family(&[&[1, 2], &[1, 3], &[1, 4]]))
        .unwrap()
        .branch;
    let triangle = three_plane_check(&family(&[&[1, 2], &[1, 3], &[2, 3]]))
        .unwrap()
        .branch;
    let single = three_plane_check(&family(&[&[1, 2, 3]])).unwrap().branch;
    let examples = star == ThreePlaneBranch::IntersectionBound
        && triangle == ThreePlaneBranch::SpanBound
        && single == ThreePlaneBranch::Both;
    outcome(
        errors.is_empty() && examples,
        format!(
            "800 generated families: span {} / intersection {} / both {}, {} errors; examples: {star}, {triangle}, {single}{}",
            counts[0],
            counts[1],
            counts[2],
            errors.len(),
            errors.first().map(|e| format!("; first: {e}")).unwrap_or_default()
        ),
    )
}

fn main() -> ExitCode {
    let started = Instant::now();
    let mut all_passed = true;
    let mut report = |id: &str, title: &str, secs: f64, o: Outcome| {
        all_passed &= o.passed;
        println!(
            "{} AC{id} {title} ({secs:.1}s): {}",
            if o.passed { "PASS" } else { "FAIL" },
            o.detail
        );
    };

    let t = Instant::now();
    let (ac1, ac9) = ac1_and_ac9();
    let suite1_secs = t.elapsed().as_secs_f64();
    report("1", "criterion equivalence", suite1_secs, ac1);
    let t = Instant::now();
    let o = ac2();
    report("2", "v∧Q counterexample", t.elapsed().as_secs_f64(), o);
    let t = Instant::now();
    let o = ac3();
    report("3", "Y^(s,s) nonvanishing", t.elapsed().as_secs_f64(), o);
    let t = Instant::now();
    let o = ac4();
    report(
        "4",
        "decomposition identities",
        t.elapsed().as_secs_f64(),
        o,
    );
    let t = Instant::now();
    let o = ac5();
    report("5", "equation-count ordering", t.elapsed().as_secs_f64(), o);
    let t = Instant::now();
    let o = ac6();
    report("6", "duality identity", t.elapsed().as_secs_f64(), o);
    let t = Instant::now();
    let o = ac7();
    report(
        "7",
        "factorization round trip",
        t.elapsed().as_secs_f64(),
        o,
    );
    let t = Instant::now();
    let o = ac8();
    report("8", "three-plane lemma", t.elapsed().as_secs_f64(), o);
    report(
        "9",
        "kernel cross-oracle (run with suite 1)",
        suite1_secs,
        ac9,
    );

    println!("total {:.1}s", started.elapsed().as_secs_f64());
    if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
