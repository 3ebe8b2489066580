//! End-to-end acceptance: runs the suites at their defaults, prints one
//! PASS/FAIL line per criterion and exits nonzero if any fails. Window sizes
//! and expected counts are derived here independently of the suites.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use tkk_core::conformal::affine_window;
use tkk_core::lab::Root;
use tkk_core::twisted::PHI_SUBCASES;
use tkk_core::{tkk, twisted};
use tkk_verify::{run_suite, Report, Suite};

type Verdict = Result<(), String>;

struct Run {
    report: Report,
    elapsed: Duration,
}

fn run(suite: Suite) -> Run {
    let start = Instant::now();
    let report = run_suite(suite, suite.defaults()).expect("defaults are valid");
    Run { report, elapsed: start.elapsed() }
}

fn passed(r: &Report, checks: &[&str]) -> Verdict {
    for c in checks {
        if !r.check_passed(c) {
            let count = r.check(c).map(|n| format!("{}/{}", n.passed, n.attempted)).unwrap_or("missing".into());
            return Err(format!("{}: check {c} {count}", r.suite));
        }
    }
    Ok(())
}

fn attempted(r: &Report, check: &str, want: u64) -> Verdict {
    let got = r.check(check).map_or(0, |n| n.attempted);
    if got == want {
        Ok(())
    } else {
        Err(format!("{}: check {check} attempted {got}, expected {want}", r.suite))
    }
}

fn no_counterexamples(r: &Report) -> Verdict {
    match r.tally.counterexamples.first() {
        None => Ok(()),
        Some(c) => Err(format!("{}: counterexample in {}: {}", r.suite, c.check, c.detail)),
    }
}

fn within(run: &Run, limit: Duration) -> Verdict {
    if run.elapsed <= limit {
        Ok(())
    } else {
        Err(format!("{} took {:.1}s, limit {}s", run.report.suite, run.elapsed.as_secs_f64(), limit.as_secs()))
    }
}

fn note(r: &Report, name: &str, want: &str) -> Verdict {
    match r.tally.notes.get(name) {
        Some(v) if v == want => Ok(()),
        other => Err(format!("{}: note '{name}' is {other:?}, expected {want}", r.suite)),
    }
}

fn all(parts: Vec<Verdict>) -> Verdict {
    parts.into_iter().collect::<Result<Vec<()>, String>>().map(|_| ())
}

fn sq(n: usize) -> u64 {
    (n * n) as u64
}

/// Long roots ±2εᵢ have trace form 1 on (e_β, e_{−β}), the short ±(ε₁−ε₂) have 2.
fn c_beta(b: Root) -> u64 {
    match b {
        Root::P2e1 | Root::M2e1 | Root::P2e2 | Root::M2e2 => 1,
        Root::E1mE2 | Root::E2mE1 => 2,
    }
}

fn main() {
    let runs: BTreeMap<Suite, Run> = Suite::ALL.into_iter().map(|s| (s, run(s))).collect();
    let r = |s: Suite| &runs[&s].report;

    let mut criteria: Vec<(&str, Verdict)> = Vec::new();

    let tj = r(Suite::TkkJacobi);
    let n1 = tkk::basis_window(1).len();
    criteria.push((
        "TKK antisymmetry and Jacobi, exhaustive on [-1,1] and 10^4 seeded samples in [-4,4]",
        all(vec![
            passed(tj, &["antisymmetry", "jacobi", "jacobi-sampled"]),
            attempted(tj, "jacobi", (n1 * n1 * n1) as u64),
            attempted(tj, "jacobi-sampled", 10_000),
            no_counterexamples(tj),
            within(&runs[&Suite::TkkJacobi], Duration::from_secs(120)),
        ]),
    ));

    let ig = r(Suite::IgIso);
    criteria.push((
        "i_g is a bracket-preserving bijection on all symbol pairs with indices in [-2,2]",
        all(vec![
            passed(ig, &["bracket", "bijection", "bijection-inverse"]),
            attempted(ig, "bracket", sq(affine_window(2).len())),
            attempted(ig, "bijection", affine_window(2).len() as u64),
            no_counterexamples(ig),
        ]),
    ));

    let si = r(Suite::SigmaInvolution);
    let st = r(Suite::SigmaOnT);
    criteria.push((
        "sigma is an involution commuting with the derivation and n-products; induced table on |m|,|n| <= 3",
        all(vec![
            passed(si, &["involution", "commutes-with-partial", "preserves-products"]),
            passed(st, &["table", "automorphism"]),
            attempted(st, "table", tkk_core::toroidal::basis_window(3).len() as u64),
            no_counterexamples(si),
            no_counterexamples(st),
        ]),
    ));

    let pi = r(Suite::PhiIso);
    let subcases = PHI_SUBCASES.iter().map(|l| format!("subcase {l}")).chain(["subcase R4 centrality".to_string()]);
    let hits: Vec<Verdict> = subcases
        .map(|k| match pi.tally.stats.get(&k) {
            Some(&v) if v > 0 => Ok(()),
            v => Err(format!("{k} hit {v:?} times")),
        })
        .collect();
    criteria.push((
        "phi is a homomorphism on [-2,2] with every case of the bracket table hit at least once",
        all(vec![
            passed(pi, &["homomorphism", "subcase-coverage", "inverse", "inverse-twisted"]),
            attempted(pi, "homomorphism", sq(tkk::basis_window(2).len())),
            attempted(pi, "subcase-coverage", PHI_SUBCASES.len() as u64 + 1),
            all(hits),
            within(&runs[&Suite::PhiIso], Duration::from_secs(600)),
        ]),
    ));

    let gc = r(Suite::GradingCompat);
    criteria.push((
        "twisted grading of phi(s) is half the grading of s on every window symbol",
        all(vec![
            passed(gc, &["grading", "grading-inverse"]),
            attempted(gc, "grading", tkk::basis_window(3).len() as u64),
            attempted(gc, "grading-inverse", twisted::basis_window(3).len() as u64),
        ]),
    ));

    criteria.push((
        "field dictionary holds coefficient-wise for |m|,|n| <= 3, j in {0,1}",
        all(vec![passed(pi, &["field-dictionary"]), attempted(pi, "field-dictionary", 3 * 7 * 7 * 2)]),
    ));

    let se = r(Suite::Sl2Embeddings);
    // A(n), B(n) and I(beta,n) for six roots over |n| <= 2, plus a0 and a1.
    let kinds = 2 * 5 + 6 * 5 + 2;
    criteria.push((
        "all sl2-hat embeddings satisfy the relations on |m| <= 3 with their level scalings",
        all(vec![passed(se, &["relations"]), attempted(se, "relations", kinds), no_counterexamples(se)]),
    ));

    let vw = r(Suite::VacuumWindows);
    criteria.push((
        "sl2-hat vacuum: closure quotient and Gram ranks agree for levels 0..2, degrees <= 4; level 0 is trivial",
        all(vec![
            passed(vw, &["closure-vs-gram", "level-zero-trivial", "verma-count", "level-one-character"]),
            attempted(vw, "closure-vs-gram", 3),
            note(vw, "level 0 quotient", "1,0,0,0,0"),
        ]),
    ));

    let ig_r = r(Suite::Integrability);
    criteria.push((
        "integrability: window-expressible nilpotency coefficients annihilate the N = 2, band 2 window",
        all(vec![passed(ig_r, &["coefficients"]), no_counterexamples(ig_r)]),
    ));

    let hw = r(Suite::HwModule);
    criteria.push((
        "highest-weight vector: Cartan modes act by power sums, C2 by 0 and 2C1 by the level",
        all(vec![passed(hw, &["hw-action", "level", "c2-zero", "weight"]), no_counterexamples(hw)]),
    ));

    let iw = r(Suite::IdealWindow);
    let exponents: Vec<Verdict> = Root::ALL
        .into_iter()
        .map(|b| note(iw, &format!("exponent {}", b.name()), &(c_beta(b) + 1).to_string()))
        .collect();
    criteria.push((
        "ideal generators at level 1, |n| <= 2: sigma-invariant, exponents 2 for long roots and 3 for e1-e2",
        all(vec![
            passed(iw, &["sigma-invariance", "exponent"]),
            attempted(iw, "sigma-invariance", 6 * 5),
            all(exponents),
        ]),
    ));

    // Re-run on a pool of a different size so shard boundaries move as well.
    let pool = rayon::ThreadPoolBuilder::new().num_threads(3).build().unwrap();
    let reruns: Vec<Verdict> = pool.install(|| {
        Suite::ALL
            .into_iter()
            .map(|s| {
                let again = run_suite(s, s.defaults()).unwrap();
                if again.to_jsonl() == r(s).to_jsonl() {
                    Ok(())
                } else {
                    Err(format!("{s}: reports differ between runs"))
                }
            })
            .collect()
    });
    criteria.push(("every suite re-run with the same seed yields a byte-identical report", all(reruns)));

    let mut failed = 0;
    for (i, (name, verdict)) in criteria.iter().enumerate() {
        match verdict {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    for (s, run) in &runs {
        println!("     {s}: {:.2}s", run.elapsed.as_secs_f64());
    }
    assert_eq!(criteria.len(), 12);
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
