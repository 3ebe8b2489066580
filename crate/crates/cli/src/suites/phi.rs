//! Suites for the isomorphism φ between ĝ(𝒥) and the twisted affinization.

use tkk_core::lattice::LatticePoint;
use tkk_core::tkk;
use tkk_core::twisted::{self, phi_subcase, PHI_SUBCASES};

use super::{check, pairs, sweep};
use crate::identities::{self as id, DICTIONARY};
use crate::report::{Params, Tally};

pub const CENTRALITY_CASE: &str = "R4 centrality";

fn subcase_stat(label: &str) -> String {
    format!("subcase {label}")
}

pub fn phi_iso(p: &Params) -> Tally {
    let w = tkk::basis_window(p.bound);
    let mut t = sweep(&pairs(w.len()), |t, &(i, j)| {
        let (a, b) = (w[i], w[j]);
        check(t, "homomorphism", id::phi_bracket(&a.elem(), &b.elem()), || vec![a.to_string(), b.to_string()]);
        t.stat(&subcase_stat(phi_subcase(a, b)), 1);
    });
    for label in PHI_SUBCASES.iter().copied().chain([CENTRALITY_CASE]) {
        let hits = t.stats.get(&subcase_stat(label)).copied().unwrap_or(0);
        t.stat(&subcase_stat(label), 0);
        let outcome = if hits > 0 { Ok(()) } else { Err(format!("no pair in the window hits {label}")) };
        check(&mut t, "subcase-coverage", outcome, || vec![label.to_string()]);
    }

    for &s in &w {
        check(&mut t, "inverse", id::phi_inverse(&s.elem()), || vec![s.to_string()]);
    }
    for s in twisted::basis_window(p.bound) {
        check(&mut t, "inverse-twisted", id::phi_inv_inverse(s), || vec![s.to_string()]);
    }
    for a in -p.bound..=p.bound {
        for b in -p.bound..=p.bound {
            let pt = LatticePoint::new(2 * a, 2 * b);
            check(&mut t, "central-relation", id::phi_central(pt), || {
                vec![format!("m={}", pt.m), format!("n={}", pt.n)]
            });
        }
    }

    let r = p.bound + 1;
    for x in DICTIONARY {
        for n in -r..=r {
            for m in -r..=r {
                for j in 0..2u8 {
                    check(&mut t, "field-dictionary", id::field_dictionary(x, n, m, j), || {
                        vec![x.to_string(), format!("n={n}"), format!("m={m}"), format!("j={j}")]
                    });
                }
            }
        }
    }
    t.note("window", format!("{} symbols, coordinates in [-{1},{1}]", w.len(), p.bound));
    t.note("dictionary-window", format!("|m|,|n| <= {r}, j in {{0,1}}"));
    t
}

pub fn grading_compat(p: &Params) -> Tally {
    let mut t = Tally::new();
    let w = tkk::basis_window(p.bound);
    for &s in &w {
        check(&mut t, "grading", id::phi_grading(s), || vec![s.to_string()]);
    }
    let tw = twisted::basis_window(p.bound);
    for &s in &tw {
        check(&mut t, "grading-inverse", id::phi_inv_grading(s), || vec![s.to_string()]);
    }
    t.note("window", format!("{} TKK and {} twisted symbols, bound {}", w.len(), tw.len(), p.bound));
    t
}
