//! Suites over the Lie and conformal structures: TKK, toroidal, conformal,
//! i_𝔤, σ and the twisted affinization.

use tkk_core::conformal::{self, AffineElement, ConformalElement, ConformalSymbol};
use tkk_core::sp4::Sp4Basis;
use tkk_core::tkk::{self, TkkElement};
use tkk_core::toroidal::{self, ToroidalElement};
use tkk_core::twisted::{self, TwistedElement};

use super::{check, pairs, sample_indices, sweep};
use crate::identities as id;
use crate::report::{Params, Tally};

/// Coordinate range of the sampled TKK triples.
pub const TKK_SAMPLE_RANGE: i64 = 4;
/// Coordinate range of the sampled toroidal triples.
pub const TOROIDAL_SAMPLE_RANGE: i64 = 3;

fn strings<T: ToString>(xs: &[&T]) -> Vec<String> {
    xs.iter().map(|x| x.to_string()).collect()
}

pub fn tkk_jacobi(p: &Params) -> Tally {
    let pair_window = tkk::basis_window(p.bound + 1);
    let mut t = sweep(&pairs(pair_window.len()), |t, &(i, j)| {
        let (a, b) = (pair_window[i], pair_window[j]);
        let inputs = || strings(&[&a, &b]);
        check(t, "antisymmetry", id::tkk_antisymmetry(&a.elem(), &b.elem()), inputs);
        check(t, "grading", id::tkk_grading(a, b), inputs);
        if a.is_central() {
            check(t, "centrality", id::tkk_centrality(a, b), inputs);
        }
        if a.triangular_part() == b.triangular_part() {
            check(t, "triangular", id::tkk_triangular(a, b), inputs);
        }
    });

    let w = tkk::basis_window(p.bound);
    let elems: Vec<TkkElement> = w.iter().map(|s| s.elem()).collect();
    let first: Vec<usize> = (0..w.len()).collect();
    t = t.merge(sweep(&first, |t, &i| {
        for j in 0..w.len() {
            for k in 0..w.len() {
                let outcome = id::tkk_jacobi(&elems[i], &elems[j], &elems[k]);
                check(t, "jacobi", outcome, || strings(&[&w[i], &w[j], &w[k]]));
            }
        }
    }));

    let big = tkk::basis_window(TKK_SAMPLE_RANGE);
    let samples = sample_indices(p.seed, big.len(), 3, p.samples);
    t = t.merge(sweep(&samples, |t, ix| {
        let (a, b, c) = (big[ix[0]], big[ix[1]], big[ix[2]]);
        let outcome = id::tkk_jacobi(&a.elem(), &b.elem(), &c.elem());
        check(t, "jacobi-sampled", outcome, || strings(&[&a, &b, &c]));
        check(t, "antisymmetry-sampled", id::tkk_antisymmetry(&a.elem(), &b.elem()), || strings(&[&a, &b]));
    }));
    t.note("jacobi-window", format!("{} symbols, coordinates in [-{1},{1}]", w.len(), p.bound));
    t.note("pair-window", format!("{} symbols, coordinates in [-{1},{1}]", pair_window.len(), p.bound + 1));
    t.note("sample-window", format!("{} symbols, coordinates in [-{1},{1}]", big.len(), TKK_SAMPLE_RANGE));
    t
}

pub fn toroidal_jacobi(p: &Params) -> Tally {
    let pair_window = toroidal::basis_window(p.bound + 1);
    let mut t = sweep(&pairs(pair_window.len()), |t, &(i, j)| {
        let (a, b) = (pair_window[i], pair_window[j]);
        let inputs = || strings(&[&a, &b]);
        check(t, "antisymmetry", id::toroidal_antisymmetry(&a.elem(), &b.elem()), inputs);
        check(t, "grading", id::toroidal_bidegree(a, b), inputs);
    });
    for &s in &pair_window {
        check(&mut t, "canonicalize-idempotent", id::canonicalize_idempotent(s), || strings(&[&s]));
    }
    for x in Sp4Basis::ALL {
        for y in Sp4Basis::ALL {
            check(&mut t, "trace-symmetric", id::trace_symmetric(x, y), || strings(&[&x, &y]));
            for z in Sp4Basis::ALL {
                check(&mut t, "trace-invariant", id::trace_invariant(x, y, z), || strings(&[&x, &y, &z]));
            }
        }
    }

    let w = toroidal::basis_window(p.bound);
    let elems: Vec<ToroidalElement> = w.iter().map(|s| s.elem()).collect();
    let first: Vec<usize> = (0..w.len()).collect();
    t = t.merge(sweep(&first, |t, &i| {
        for j in 0..w.len() {
            for k in 0..w.len() {
                let outcome = id::toroidal_jacobi(&elems[i], &elems[j], &elems[k]);
                check(t, "jacobi", outcome, || strings(&[&w[i], &w[j], &w[k]]));
            }
        }
    }));

    let big = toroidal::basis_window(TOROIDAL_SAMPLE_RANGE);
    let samples = sample_indices(p.seed, big.len(), 3, p.samples);
    t = t.merge(sweep(&samples, |t, ix| {
        let (a, b, c) = (big[ix[0]], big[ix[1]], big[ix[2]]);
        let outcome = id::toroidal_jacobi(&a.elem(), &b.elem(), &c.elem());
        check(t, "jacobi-sampled", outcome, || strings(&[&a, &b, &c]));
    }));
    t.note("jacobi-window", format!("{} symbols, |m1|,|m2| <= {}", w.len(), p.bound));
    t.note("sample-window", format!("{} symbols, |m1|,|m2| <= {}", big.len(), TOROIDAL_SAMPLE_RANGE));
    t
}

/// Generators with t₂-exponent at most `r` in absolute value, plus k₁.
fn conformal_generators(r: i64) -> Vec<ConformalElement> {
    let mut out: Vec<ConformalElement> = conformal::generator_window(r).into_iter().map(conformal::gen_elem).collect();
    out.push(ConformalSymbol::K1.elem());
    out
}

/// Products a₍ₙ₎b are checked for n up to this.
pub const SKEW_MAX_N: u32 = 3;
/// Jacobi is checked for 0 ≤ m, n ≤ this.
pub const JACOBI_MAX_N: u32 = 2;

pub fn conformal_axioms(p: &Params) -> Tally {
    let g = conformal_generators(p.bound);
    let mut t = sweep(&pairs(g.len()), |t, &(i, j)| {
        let (a, b) = (&g[i], &g[j]);
        for n in 0..=SKEW_MAX_N {
            let inputs = || vec![a.to_string(), b.to_string(), format!("n={n}")];
            check(t, "skew-symmetry", id::skew_symmetry(a, b, n), inputs);
            check(t, "partial-product", id::partial_product(a, b, n), inputs);
        }
    });

    let jr = (p.bound - 1).max(0);
    let gj = conformal_generators(jr);
    let first: Vec<usize> = (0..gj.len()).collect();
    t = t.merge(sweep(&first, |t, &i| {
        for b in &gj {
            for c in &gj {
                for m in 0..=JACOBI_MAX_N {
                    for n in 0..=JACOBI_MAX_N {
                        let a = &gj[i];
                        check(t, "jacobi", id::conformal_jacobi(a, b, c, m, n), || {
                            vec![a.to_string(), b.to_string(), c.to_string(), format!("m={m}"), format!("n={n}")]
                        });
                    }
                }
            }
        }
    }));

    let aw = conformal::affine_window(p.bound);
    let samples = sample_indices(p.seed, aw.len(), 3, p.samples);
    t = t.merge(sweep(&samples, |t, ix| {
        let [a, b, c] = [ix[0], ix[1], ix[2]].map(|k| aw[k].elem());
        check(t, "affine-jacobi-sampled", id::affine_jacobi(&a, &b, &c), || strings(&[&a, &b, &c]));
        let outcome = id::antisymmetry(conformal::affine_bracket, &a, &b);
        check(t, "affine-antisymmetry-sampled", outcome, || strings(&[&a, &b]));
    }));
    t.note("product-window", format!("{} generators, |exponent| <= {}, n <= {SKEW_MAX_N}", g.len(), p.bound));
    t.note("jacobi-window", format!("{} generators, |exponent| <= {jr}, m,n <= {JACOBI_MAX_N}", gj.len()));
    t.note("affine-sample-window", format!("{} symbols, |m|,|n| <= {}", aw.len(), p.bound));
    t
}

pub fn ig_iso(p: &Params) -> Tally {
    let aw = conformal::affine_window(p.bound);
    let elems: Vec<AffineElement> = aw.iter().map(|s| s.elem()).collect();
    let mut t = sweep(&pairs(aw.len()), |t, &(i, j)| {
        check(t, "bracket", id::ig_bracket(&elems[i], &elems[j]), || strings(&[&aw[i], &aw[j]]));
    });
    for &s in &aw {
        check(&mut t, "bijection", id::ig_bijection(s), || strings(&[&s]));
        check(&mut t, "grading", id::ig_grading(s), || strings(&[&s]));
    }
    let tw = toroidal::basis_window(p.bound);
    for &s in &tw {
        check(&mut t, "bijection-inverse", id::ig_inv_bijection(s), || strings(&[&s]));
    }
    t.note("window", format!("{} affine symbols, |m|,|n| <= {}", aw.len(), p.bound));
    t
}

/// Highest ∂-power in the σ symbol window.
pub const SIGMA_MAX_POWER: u32 = 2;
/// σ(a₍ₙ₎b) = σ(a)₍ₙ₎σ(b) is checked for n up to this.
pub const SIGMA_MAX_N: u32 = 2;

pub fn sigma_involution(p: &Params) -> Tally {
    let mut symbols = vec![ConformalSymbol::K1];
    for gen in conformal::generator_window(p.bound) {
        symbols.extend((0..=SIGMA_MAX_POWER).map(|power| ConformalSymbol::D { power, gen }));
    }
    let mut t = Tally::new();
    for &s in &symbols {
        let e = s.elem();
        check(&mut t, "involution", id::sigma_involution(&e), || strings(&[&s]));
        check(&mut t, "commutes-with-partial", id::sigma_partial(&e), || strings(&[&s]));
        check(&mut t, "graded", id::sigma_graded(s), || strings(&[&s]));
    }
    let g = conformal_generators(p.bound);
    t = t.merge(sweep(&pairs(g.len()), |t, &(i, j)| {
        for n in 0..=SIGMA_MAX_N {
            check(t, "preserves-products", id::sigma_product(&g[i], &g[j], n), || {
                vec![g[i].to_string(), g[j].to_string(), format!("n={n}")]
            });
        }
    }));
    t.note("window", format!("{} symbols, |exponent| <= {}, D-power <= {SIGMA_MAX_POWER}", symbols.len(), p.bound));
    t
}

pub fn sigma_on_t(p: &Params) -> Tally {
    let tw = toroidal::basis_window(p.bound);
    let mut t = sweep(&tw, |t, &s| check(t, "table", id::sigma_table(s), || strings(&[&s])));
    let ar = (p.bound - 2).max(1);
    let aw = conformal::affine_window(ar);
    let elems: Vec<AffineElement> = aw.iter().map(|s| s.elem()).collect();
    t = t.merge(sweep(&pairs(aw.len()), |t, &(i, j)| {
        let outcome = id::sigma_hat_automorphism(&elems[i], &elems[j]);
        check(t, "automorphism", outcome, || strings(&[&aw[i], &aw[j]]));
    }));
    t.note("table-window", format!("{} toroidal symbols, |m|,|n| <= {}", tw.len(), p.bound));
    t.note("automorphism-window", format!("{} affine symbols, |m|,|n| <= {ar}", aw.len()));
    t
}

pub fn twisted_jacobi(p: &Params) -> Tally {
    let w = twisted::basis_window(p.bound);
    let elems: Vec<TwistedElement> = w.iter().map(|s| s.elem()).collect();
    let mut t = sweep(&pairs(w.len()), |t, &(i, j)| {
        check(t, "antisymmetry", id::twisted_antisymmetry(&elems[i], &elems[j]), || strings(&[&w[i], &w[j]]));
    });
    let samples = sample_indices(p.seed, w.len(), 3, p.samples);
    t = t.merge(sweep(&samples, |t, ix| {
        let outcome = id::twisted_jacobi(&elems[ix[0]], &elems[ix[1]], &elems[ix[2]]);
        check(t, "jacobi-sampled", outcome, || strings(&[&w[ix[0]], &w[ix[1]], &w[ix[2]]]));
    }));
    t.note("window", format!("{} symbols, |n|,|index| <= {}", w.len(), p.bound));
    t
}
