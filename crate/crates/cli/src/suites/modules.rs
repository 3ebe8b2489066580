//! Suites over module constructions: ŝl₂ embeddings, vacuum windows,
//! highest-weight modules, integrability and the ideal J(ℓ,0).

use std::str::FromStr;

use tkk_core::lab::vacuum::{ideal_exponent, sigma_check, vacuum_module};
use tkk_core::lab::verma::{
    build_verma_window, contravariance_failures, gram_rank_stabilized, integrability_on_vector, monomial_charge,
    monomial_degree, verma_module, ModuleWindow, Quotient, VSym, VermaModule,
};
use tkk_core::lab::{
    ideal_window as ideal_window_report, sl2_embedding, sl2_vacuum_windows, Root, Sl2Kind, WeightData,
};
use tkk_core::lattice::LatticePoint;
use tkk_core::pbw::Monomial;
use tkk_core::tkk::{self, TkkElement};
use tkk_core::{GaussRational, LinComb};

use super::{check, sweep};
use crate::identities::Outcome;
use crate::report::{Params, Tally};

/// Triples exercised by the hw-module suite.
pub const TESTED_TRIPLES: [&str; 3] = ["((1),(0),(1))", "((1),(1),(2))", "((1,0),(0,1),(2,1*I))"];
/// The triples of the integrability sweep.
pub const INTEGRABLE_TRIPLES: [&str; 2] = ["((1),(0),(1))", "((1),(1),(2))"];

/// Splits on commas outside parentheses.
fn split_top(s: &str) -> Vec<&str> {
    let (mut depth, mut start, mut out) = (0i32, 0, Vec::new());
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

fn unwrap_parens(s: &str) -> Option<&str> {
    s.trim().strip_prefix('(')?.strip_suffix(')')
}

fn parse_list<T: FromStr>(s: &str) -> Result<Vec<T>, String> {
    let body = unwrap_parens(s).ok_or_else(|| format!("expected a parenthesized list, got '{s}'"))?;
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    split_top(body).into_iter().map(|x| x.trim().parse().map_err(|_| format!("bad entry '{x}' in '{s}'"))).collect()
}

/// Parses `((λ₁,…),(μ₁,…),(c₁,…))`.
pub fn parse_triple(s: &str) -> Result<WeightData, String> {
    let body = unwrap_parens(s).ok_or_else(|| format!("expected ((λ),(μ),(c)), got '{s}'"))?;
    let parts = split_top(body);
    let [l, m, c] = parts.as_slice() else {
        return Err(format!("expected three lists in '{s}'"));
    };
    Ok(WeightData::new(parse_list(l)?, parse_list(m)?, parse_list(c)?))
}

/// Parses an embedding name as printed: `A(n)`, `B(n)`, `I(β,n)`, `a0`, `a1`.
pub fn parse_kind(s: &str) -> Result<Sl2Kind, String> {
    let s = s.trim();
    let bad = || format!("unknown embedding '{s}'");
    match s {
        "a0" => return Ok(Sl2Kind::A0),
        "a1" => return Ok(Sl2Kind::A1),
        _ => {}
    }
    let (head, rest) = s.split_at(1);
    let args = unwrap_parens(rest).ok_or_else(bad)?;
    match (head, split_top(args).as_slice()) {
        ("A", [n]) => Ok(Sl2Kind::A(n.trim().parse().map_err(|_| bad())?)),
        ("B", [n]) => Ok(Sl2Kind::B(n.trim().parse().map_err(|_| bad())?)),
        ("I", [b, n]) => {
            let root = Root::from_name(b.trim()).ok_or_else(bad)?;
            Ok(Sl2Kind::I(root, n.trim().parse().map_err(|_| bad())?))
        }
        _ => Err(bad()),
    }
}

/// The kinds checked for |n| ≤ r.
pub fn embedding_kinds(r: i64) -> Vec<Sl2Kind> {
    let mut out = Vec::new();
    for n in -r..=r {
        out.push(Sl2Kind::A(n));
        out.push(Sl2Kind::B(n));
        out.extend(Root::ALL.into_iter().map(|b| Sl2Kind::I(b, n)));
    }
    out.extend([Sl2Kind::A0, Sl2Kind::A1]);
    out
}

/// The level scaling each kind must carry: 2C₁, 4C₁, c_βk₁(−1), 2C₂, 4C₂ ↦ k,
/// with c_β = 1 on the long roots ±2εᵢ and 2 on ±(ε₁−ε₂).
pub fn expected_level_scale(kind: Sl2Kind) -> i64 {
    match kind {
        Sl2Kind::A(_) | Sl2Kind::A0 => 2,
        Sl2Kind::B(_) | Sl2Kind::A1 => 4,
        Sl2Kind::I(b, _) => root_c(b),
    }
}

/// c_β read off the root's shape.
pub fn root_c(b: Root) -> i64 {
    match b {
        Root::P2e1 | Root::M2e1 | Root::P2e2 | Root::M2e2 => 1,
        Root::E1mE2 | Root::E2mE1 => 2,
    }
}

pub fn embedding_relations(kind: Sl2Kind, r: i64) -> Outcome {
    let e = sl2_embedding(kind).map_err(|e| e.to_string())?;
    let want = expected_level_scale(kind);
    if e.level_scale != want.into() {
        return Err(format!("level scale {} ≠ {want}", e.level_scale));
    }
    let fails = e.relation_failures(r);
    if fails.is_empty() {
        Ok(())
    } else {
        Err(format!("{} relation failures, first: {}", fails.len(), fails[0]))
    }
}

pub fn sl2_embeddings(p: &Params) -> Tally {
    let kinds = embedding_kinds(p.bound);
    let mut t = sweep(&kinds, |t, &kind| {
        check(t, "relations", embedding_relations(kind, p.degree), || {
            vec![kind.to_string(), format!("m={}", p.degree)]
        });
    });
    t.note("window", format!("{} embeddings, |n| <= {}, relations on |m| <= {}", kinds.len(), p.bound, p.degree));
    t
}

/// Number of PBW monomials of degree d in 3 colours of modes t^{−k}, k ≥ 1:
/// the coefficients of Π_k (1 − q^k)^{−3}.
pub fn three_colour_partitions(cap: usize) -> Vec<usize> {
    let mut f = vec![0usize; cap + 1];
    f[0] = 1;
    for k in 1..=cap {
        for _ in 0..3 {
            for d in k..=cap {
                f[d] += f[d - k];
            }
        }
    }
    f
}

/// Graded dimensions of the level-one vacuum module: Σ_{n∈ℤ} p(d − n²).
pub fn level_one_character(cap: usize) -> Vec<usize> {
    let mut p = vec![0usize; cap + 1];
    p[0] = 1;
    for k in 1..=cap {
        for d in k..=cap {
            p[d] += p[d - k];
        }
    }
    (0..=cap)
        .map(|d| {
            let mut total = 0;
            let mut n: i64 = 0;
            while (n * n) as usize <= d {
                let ways = if n == 0 { 1 } else { 2 };
                total += ways * p[d - (n * n) as usize];
                n += 1;
            }
            total
        })
        .collect()
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn vacuum_level(level: u64, degree: i64) -> Vec<(&'static str, Outcome)> {
    let r = sl2_vacuum_windows(level, degree);
    let cap = degree as usize;
    let mut out = Vec::new();
    let agree = if r.agree() {
        Ok(())
    } else {
        Err(format!("closure {} vs gram {}", join(&r.closure_quotient), join(&r.gram_quotient)))
    };
    out.push(("closure-vs-gram", agree));
    let oracle = three_colour_partitions(cap);
    let verma = if r.verma == oracle {
        Ok(())
    } else {
        Err(format!("verma {} vs partitions {}", join(&r.verma), join(&oracle)))
    };
    out.push(("verma-count", verma));
    if level == 0 {
        let trivial = r.closure_quotient.iter().enumerate().all(|(d, &n)| n == usize::from(d == 0));
        let outcome = if trivial { Ok(()) } else { Err(format!("quotient {}", join(&r.closure_quotient))) };
        out.push(("level-zero-trivial", outcome));
    }
    if level == 1 {
        let oracle = level_one_character(cap);
        let outcome = if r.closure_quotient == oracle {
            Ok(())
        } else {
            Err(format!("quotient {} vs character {}", join(&r.closure_quotient), join(&oracle)))
        };
        out.push(("level-one-character", outcome));
    }
    out
}

pub fn vacuum_windows(p: &Params) -> Tally {
    let levels: Vec<u64> = (0..=p.bound as u64).collect();
    let mut t = sweep(&levels, |t, &level| {
        for (name, outcome) in vacuum_level(level, p.degree) {
            check(t, name, outcome, || vec![format!("level={level}"), format!("degree={}", p.degree)]);
        }
    });
    for &level in &levels {
        let r = sl2_vacuum_windows(level, p.degree);
        t.note(&format!("level {level} quotient"), join(&r.closure_quotient));
        t.note(&format!("level {level} verma"), join(&r.verma));
    }
    t
}

fn wrap(e: &TkkElement) -> LinComb<VSym> {
    e.iter().map(|(s, c)| (VSym(*s), c.clone())).collect()
}

fn int(k: i64) -> GaussRational {
    GaussRational::from_int(k)
}

/// Σ kᵢ cᵢ^m, computed directly from the triple.
fn power_sum(mult: &[u64], c: &[GaussRational], m: i64) -> Result<GaussRational, String> {
    let mut acc = int(0);
    for (k, ci) in mult.iter().zip(c) {
        let mut term = int(*k as i64);
        let base = if m >= 0 { ci.clone() } else { ci.inv().map_err(|e| e.to_string())? };
        for _ in 0..m.unsigned_abs() {
            term = &term * &base;
        }
        acc = &acc + &term;
    }
    Ok(acc)
}

/// The operators of 𝓗 whose action on v is prescribed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CartanOp {
    /// α∨(0,m) ↦ Σλᵢcᵢ^m.
    Alpha,
    /// 2C₁(0,2m) − α∨(0,2m) ↦ Σμᵢcᵢ^m.
    Mu,
    /// C₂ ↦ 0.
    C2,
    /// 2C₁ ↦ ℓ.
    Level,
}

impl CartanOp {
    pub const ALL: [CartanOp; 4] = [CartanOp::Alpha, CartanOp::Mu, CartanOp::C2, CartanOp::Level];

    pub fn name(self) -> &'static str {
        match self {
            CartanOp::Alpha => "alpha",
            CartanOp::Mu => "mu",
            CartanOp::C2 => "c2",
            CartanOp::Level => "level",
        }
    }

    pub fn from_name(s: &str) -> Option<CartanOp> {
        CartanOp::ALL.into_iter().find(|o| o.name() == s)
    }

    pub fn element(self, m: i64) -> TkkElement {
        let p = LatticePoint::new;
        match self {
            CartanOp::Alpha => tkk::h(p(0, m)),
            CartanOp::Mu => &tkk::central(1, p(0, 2 * m)).scaled(&int(2)) - &tkk::h(p(0, 2 * m)),
            CartanOp::C2 => tkk::central(2, p(0, 0)),
            CartanOp::Level => tkk::central(1, p(0, 0)).scaled(&int(2)),
        }
    }

    pub fn expected(self, w: &WeightData, m: i64) -> Result<GaussRational, String> {
        match self {
            CartanOp::Alpha => power_sum(&w.lambda, &w.c, m),
            CartanOp::Mu => power_sum(&w.mu, &w.c, m),
            CartanOp::C2 => Ok(int(0)),
            CartanOp::Level => Ok(int(w.level() as i64)),
        }
    }

    /// Whether the value depends on m at all.
    pub fn is_graded(self) -> bool {
        matches!(self, CartanOp::Alpha | CartanOp::Mu)
    }
}

pub fn hw_action(module: &VermaModule, w: &WeightData, op: CartanOp, m: i64) -> Outcome {
    let v = module.vacuum();
    let got = module.act(&wrap(&op.element(m)), &v);
    let want = v.scaled(&op.expected(w, m)?);
    if got == want {
        Ok(())
    } else {
        Err(format!("{} acts on v as {got}, expected {want}", op.element(m)))
    }
}

/// Checks on one window vector: 2C₁ by ℓ, C₂ by 0, α∨(0,0) by the block weight
/// and the monomial's degree and charge match its block.
pub fn vector_checks(
    module: &VermaModule,
    w: &WeightData,
    degree: i64,
    weight: i64,
    mono: &Monomial<VSym>,
) -> Vec<(&'static str, Outcome)> {
    let u: LinComb<Monomial<VSym>> = LinComb::basis(mono.clone());
    let scalar = |op: CartanOp, c: GaussRational| {
        let got = module.act(&wrap(&op.element(0)), &u);
        let want = u.scaled(&c);
        if got == want {
            Ok(())
        } else {
            Err(format!("{} acts as {got}, expected {want}", op.element(0)))
        }
    };
    let alpha = scalar(CartanOp::Alpha, int(weight));
    let labels = if monomial_degree(mono) == degree && monomial_charge(mono) + w.top_weight() == weight {
        Ok(())
    } else {
        Err(format!(
            "monomial labels ({}, {}) differ from block ({degree}, {weight})",
            monomial_degree(mono),
            monomial_charge(mono)
        ))
    };
    vec![
        ("level", scalar(CartanOp::Level, int(w.level() as i64))),
        ("c2-zero", scalar(CartanOp::C2, int(0))),
        ("weight", alpha.and(labels)),
    ]
}

/// Generators used for the contravariance check.
pub const CONTRAVARIANCE_RANGE: i64 = 1;

/// Degree cap of the X, Y monomials in the contravariance check.
pub const CONTRAVARIANCE_DEGREE: i64 = 1;

pub fn contravariance(w: &WeightData, g: tkk::TkkSymbol, window: &ModuleWindow) -> Outcome {
    let xs: Vec<Monomial<VSym>> =
        window.basis().filter(|(d, _, _)| *d <= CONTRAVARIANCE_DEGREE).map(|(_, _, m)| m.clone()).collect();
    let fails = contravariance_failures(w, &[g], &xs, &xs);
    match fails.first() {
        None => Ok(()),
        Some(f) => Err(format!("{} failures, first: {f}", fails.len())),
    }
}

pub fn hw_module(p: &Params) -> Tally {
    let triples: Vec<WeightData> = TESTED_TRIPLES.iter().map(|s| parse_triple(s).expect("valid triple")).collect();
    let mut t = sweep(&triples, |t, w| {
        let module = verma_module(w);
        let ws = w.to_string();
        for op in CartanOp::ALL {
            let ms: Vec<i64> = if op.is_graded() { (-p.bound..=p.bound).collect() } else { vec![0] };
            for m in ms {
                check(t, "hw-action", hw_action(&module, w, op, m), || {
                    vec![ws.clone(), format!("op={}", op.name()), format!("m={m}")]
                });
            }
        }
        let window = build_verma_window(w, p.degree, p.band);
        for (d, a, mono) in window.basis() {
            for (name, outcome) in vector_checks(&module, w, d, a, mono) {
                check(t, name, outcome, || {
                    vec![ws.clone(), format!("degree={}", p.degree), format!("band={}", p.band), mono.to_string()]
                });
            }
        }
        for g in tkk::basis_window(CONTRAVARIANCE_RANGE) {
            check(t, "contravariance", contravariance(w, g, &window), || {
                vec![ws.clone(), g.to_string(), format!("degree={}", p.degree), format!("band={}", p.band)]
            });
        }
        let bands: Vec<i64> = (0..=p.band).collect();
        for summary in gram_rank_stabilized(w, p.degree, &bands) {
            let ranks: Vec<usize> = summary.entries.iter().map(|e| e.gram_rank).collect();
            let d = summary.degree;
            let outcome = if summary.monotone { Ok(()) } else { Err(format!("ranks {} decrease", join(&ranks))) };
            check(t, "gram-monotone", outcome, || vec![ws.clone(), format!("degree={d}"), format!("band={}", p.band)]);
            t.note(&format!("{ws} degree {d} gram ranks over bands 0..={}", p.band), join(&ranks));
            if !summary.stabilized {
                t.inconclusive(format!("{ws} degree {d}: gram ranks {} not yet stable in the band", join(&ranks)));
            }
        }
    });
    t.note("window", format!("degree <= {}, band <= {}, action for |m| <= {}", p.degree, p.band, p.bound));
    t
}

/// The integrability checks on the window vector printed as `vector`.
pub fn integrability_vector(w: &WeightData, degree: i64, band: i64, vector: &str) -> Result<Outcome, String> {
    let window = build_verma_window(w, degree, band);
    let (d, a, mono) = window
        .basis()
        .find(|(_, _, m)| m.to_string() == vector)
        .ok_or_else(|| format!("{vector} is not in the window"))?;
    let mono = mono.clone();
    let mut q = Quotient::new(&window);
    let r = integrability_on_vector(&mut q, w.level(), d, a, &mono);
    Ok(match r.violations.first() {
        None => Ok(()),
        Some(v) => Err(format!("{}: {}", v.operator, v.detail)),
    })
}

pub fn integrability(p: &Params) -> Tally {
    let triples: Vec<WeightData> = INTEGRABLE_TRIPLES.iter().map(|s| parse_triple(s).expect("valid triple")).collect();
    sweep(&triples, |t, w| {
        let ws = w.to_string();
        let window = build_verma_window(w, p.degree, p.band);
        let mut q = Quotient::new(&window);
        let mut skipped = 0;
        let (mut witnessed, mut undetermined) = (0, 0);
        for (d, a, mono) in window.basis() {
            let r = integrability_on_vector(&mut q, w.level(), d, a, mono);
            t.add_counts("coefficients", r.coefficient_checks as u64, r.coefficient_passed as u64);
            for v in &r.violations {
                t.counterexamples.push(crate::report::Counterexample {
                    check: "coefficients".into(),
                    inputs: vec![
                        ws.clone(),
                        format!("degree={}", p.degree),
                        format!("band={}", p.band),
                        v.vector.clone(),
                    ],
                    detail: format!("{}: {}", v.operator, v.detail),
                });
            }
            skipped += r.coefficient_skipped as i64;
            witnessed += r.nilpotency_witnessed as i64;
            undetermined += r.nilpotency_undetermined as i64;
        }
        t.stat(&format!("{ws} window vectors"), window.len() as i64);
        t.stat(&format!("{ws} coefficients outside the window"), skipped);
        t.stat(&format!("{ws} nilpotency witnessed"), witnessed);
        t.stat(&format!("{ws} nilpotency undetermined"), undetermined);
    })
}

/// c_βℓ + 1 against the root shape, and c_β against tr(e_β e_{−β}).
pub fn ideal_exponent_check(b: Root, level: u64) -> Outcome {
    let c = root_c(b);
    if b.c() != c {
        return Err(format!("tr(e_β e_−β) = {} but {} has c = {c}", b.c(), b.name()));
    }
    let want = (c as u64 * level + 1) as usize;
    let got = ideal_exponent(b, level);
    if got == want {
        Ok(())
    } else {
        Err(format!("exponent {got} ≠ {want}"))
    }
}

pub fn ideal_sigma_check(b: Root, n: i64, level: u64, band: i64) -> Outcome {
    let module = vacuum_module(level);
    let c = sigma_check(&module, b, n, band);
    if c.ok {
        Ok(())
    } else {
        match c.image {
            Some((r, n2)) => {
                Err(format!("σ maps the generator to a non-multiple of the ({}, {n2}) generator", r.name()))
            }
            None => Err("σ image is not a single root vector".into()),
        }
    }
}

/// Loop band of the closure window in the ideal-window suite.
pub const IDEAL_CLOSURE_BAND: i64 = 1;

pub fn ideal_window(p: &Params) -> Tally {
    let level = p.bound as u64;
    let items: Vec<(Root, i64)> = Root::ALL.into_iter().flat_map(|b| (-p.band..=p.band).map(move |n| (b, n))).collect();
    let module = vacuum_module(level);
    let mut t = Tally::new();
    let mut out_of_band = 0;
    for &(b, n) in &items {
        let c = sigma_check(&module, b, n, p.band);
        out_of_band += i64::from(c.image.is_some() && !c.image_in_band);
        let outcome = if c.ok { Ok(()) } else { ideal_sigma_check(b, n, level, p.band) };
        check(&mut t, "sigma-invariance", outcome, || {
            vec![b.name().to_string(), format!("n={n}"), format!("level={level}"), format!("band={}", p.band)]
        });
    }
    t.stat("sigma images with |n| = band + 1", out_of_band);
    for b in Root::ALL {
        check(&mut t, "exponent", ideal_exponent_check(b, level), || {
            vec![b.name().to_string(), format!("level={level}")]
        });
        t.note(&format!("exponent {}", b.name()), ideal_exponent(b, level).to_string());
    }
    let band = IDEAL_CLOSURE_BAND.min(p.band);
    let r = ideal_window_report(level, p.degree, band);
    let proper = if r.vacuum_in_ideal {
        Err(format!("vacuum lies in the closed span, dims {}", join(&r.ideal)))
    } else {
        Ok(())
    };
    check(&mut t, "vacuum-outside-ideal", proper, || {
        vec![format!("level={level}"), format!("degree={}", p.degree), format!("band={band}")]
    });
    t.note("closure window", format!("degree <= {}, band <= {band}, length <= {}", p.degree, r.length_cap));
    t.note("window dims", join(&r.window));
    t.note("ideal lower bound", join(&r.ideal));
    t.note("quotient upper bound", join(&r.quotient_upper));
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triples_round_trip() {
        for s in TESTED_TRIPLES {
            let w = parse_triple(s).unwrap();
            assert_eq!(w.to_string(), s);
        }
        assert!(parse_triple("((1),(0))").is_err());
        assert!(parse_triple("((x),(0),(1))").is_err());
    }

    #[test]
    fn kinds_round_trip() {
        for k in embedding_kinds(2) {
            assert_eq!(parse_kind(&k.to_string()).unwrap(), k);
        }
        assert!(parse_kind("C(1)").is_err());
    }

    #[test]
    fn oracles() {
        assert_eq!(three_colour_partitions(4), vec![1, 3, 9, 22, 51]);
        assert_eq!(level_one_character(4), vec![1, 3, 4, 7, 13]);
        assert_eq!(root_c(Root::E1mE2), 2);
    }

    #[test]
    fn hw_action_detects_wrong_weight() {
        let w = parse_triple("((1),(0),(1))").unwrap();
        let module = verma_module(&w);
        assert!(hw_action(&module, &w, CartanOp::Alpha, 1).is_ok());
        let other = parse_triple("((1),(0),(2))").unwrap();
        assert!(hw_action(&module, &other, CartanOp::Alpha, 1).is_err());
        assert!(hw_action(&module, &w, CartanOp::Alpha, 0).is_ok());
    }
}
