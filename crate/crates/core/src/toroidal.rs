//! The 2-toroidal algebra 𝔱 = sp₄ ⊗ ℂ[t₁±¹, t₂±¹] ⊕ 𝒦 with canonicalized center.
//!
//! 𝒦 is spanned by t₁^{m₁}t₂^{m₂}kᵢ subject to m₁·t^m k₁ + m₂·t^m k₂ = 0.
//! Canonical central symbols: KA(m,s) = t₁^m t₂^s k₁ (s ≠ 0), KB(m) = t₁^m k₂,
//! and k₁ itself.

use std::fmt;

use crate::lincomb::LinComb;
use crate::scalars::{GaussRational, Rational};
use crate::sp4::{bracket_basis, trace_basis, Sp4Basis};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ToroidalSymbol {
    Loop { x: Sp4Basis, m1: i64, m2: i64 },
    KA { m: i64, s: i64 },
    KB { m: i64 },
    K1,
}

pub type ToroidalElement = LinComb<ToroidalSymbol>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    K1,
    K2,
}

impl ToroidalSymbol {
    pub fn is_central(self) -> bool {
        !matches!(self, ToroidalSymbol::Loop { .. })
    }

    /// The bidegree (m₁, m₂).
    pub fn bidegree(self) -> (i64, i64) {
        match self {
            ToroidalSymbol::Loop { m1, m2, .. } => (m1, m2),
            ToroidalSymbol::KA { m, s } => (m, s),
            ToroidalSymbol::KB { m } => (m, 0),
            ToroidalSymbol::K1 => (0, 0),
        }
    }

    pub fn elem(self) -> ToroidalElement {
        LinComb::basis(self)
    }
}

impl fmt::Display for ToroidalSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ToroidalSymbol::Loop { x, m1, m2 } => write!(f, "{x}*t1^{m1}*t2^{m2}"),
            ToroidalSymbol::KA { m, s } => write!(f, "ka({m},{s})"),
            ToroidalSymbol::KB { m } => write!(f, "k2@{m}"),
            ToroidalSymbol::K1 => f.write_str("k1"),
        }
    }
}

/// t₁^{m₁}t₂^{m₂}k₁ or t₁^{m₁}t₂^{m₂}k₂ in canonical form.
pub fn canonicalize_k(m1: i64, m2: i64, which: Which) -> ToroidalElement {
    match (which, m2 != 0) {
        (Which::K1, true) => ToroidalSymbol::KA { m: m1, s: m2 }.elem(),
        (Which::K1, false) if m1 == 0 => ToroidalSymbol::K1.elem(),
        (Which::K1, false) => ToroidalElement::zero(),
        (Which::K2, true) => ToroidalSymbol::KA { m: m1, s: m2 }.elem().scaled_rat(&Rational::new(-m1, m2)),
        (Which::K2, false) => ToroidalSymbol::KB { m: m1 }.elem(),
    }
}

/// Re-canonicalizes a central symbol (identity on canonical input).
pub fn canonical_symbol(s: ToroidalSymbol) -> ToroidalElement {
    match s {
        ToroidalSymbol::KA { m, s } => canonicalize_k(m, s, Which::K1),
        ToroidalSymbol::KB { m } => canonicalize_k(m, 0, Which::K2),
        ToroidalSymbol::K1 => canonicalize_k(0, 0, Which::K1),
        loop_sym => loop_sym.elem(),
    }
}

pub fn loop_elem(x: Sp4Basis, m1: i64, m2: i64) -> ToroidalElement {
    ToroidalSymbol::Loop { x, m1, m2 }.elem()
}

pub fn bracket_symbols(a: ToroidalSymbol, b: ToroidalSymbol) -> ToroidalElement {
    let (ToroidalSymbol::Loop { x, m1: a1, m2: a2 }, ToroidalSymbol::Loop { x: y, m1: b1, m2: b2 }) = (a, b) else {
        return ToroidalElement::zero();
    };
    let (s1, s2) = (a1 + b1, a2 + b2);
    let mut out = bracket_basis(x, y).flat_map(|z| loop_elem(*z, s1, s2));
    let tr = trace_basis(x, y);
    if tr != 0 {
        out.add_scaled(&canonicalize_k(s1, s2, Which::K1), &GaussRational::from_int(tr * a1));
        out.add_scaled(&canonicalize_k(s1, s2, Which::K2), &GaussRational::from_int(tr * a2));
    }
    out
}

pub fn toroidal_bracket(u: &ToroidalElement, v: &ToroidalElement) -> ToroidalElement {
    u.bilinear(v, |a, b| bracket_symbols(*a, *b))
}

/// −m₁ for every symbol.
pub fn toroidal_grading(s: ToroidalSymbol) -> i64 {
    -s.bidegree().0
}

/// Every canonical symbol with |m₁|, |m₂| ≤ r.
pub fn basis_window(r: i64) -> Vec<ToroidalSymbol> {
    let mut out = vec![ToroidalSymbol::K1];
    for m1 in -r..=r {
        out.push(ToroidalSymbol::KB { m: m1 });
        for m2 in -r..=r {
            if m2 != 0 {
                out.push(ToroidalSymbol::KA { m: m1, s: m2 });
            }
            for x in Sp4Basis::ALL {
                out.push(ToroidalSymbol::Loop { x, m1, m2 });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sp4Basis::*;

    #[test]
    fn canonicalize_examples() {
        assert!(canonicalize_k(2, 0, Which::K1).is_zero());
        assert_eq!(
            canonicalize_k(2, 4, Which::K2),
            ToroidalSymbol::KA { m: 2, s: 4 }.elem().scaled_rat(&Rational::new(-1, 2))
        );
        assert_eq!(canonicalize_k(0, 0, Which::K1), ToroidalSymbol::K1.elem());
        for s in basis_window(2) {
            if s.is_central() {
                assert_eq!(canonical_symbol(s), s.elem());
            }
        }
    }

    #[test]
    fn bracket_examples() {
        let r = toroidal_bracket(&loop_elem(E13, 1, 1), &loop_elem(E31, -1, -1));
        let want = &(&loop_elem(H1, 0, 0) + &ToroidalSymbol::K1.elem()) + &ToroidalSymbol::KB { m: 0 }.elem();
        assert_eq!(r, want);
        let r = toroidal_bracket(&loop_elem(E13, 2, 0), &loop_elem(E31, -2, 0));
        assert_eq!(r, &loop_elem(H1, 0, 0) + &ToroidalSymbol::K1.elem().scaled(&GaussRational::from_int(2)));
        assert!(toroidal_bracket(&ToroidalSymbol::K1.elem(), &loop_elem(E13, 2, 0)).is_zero());
        assert_eq!(toroidal_grading(ToroidalSymbol::Loop { x: E13, m1: 3, m2: 1 }), -3);
        assert_eq!(toroidal_grading(ToroidalSymbol::KA { m: -2, s: 5 }), 2);
        assert_eq!(toroidal_grading(ToroidalSymbol::K1), 0);
    }

    #[test]
    fn antisymmetry_jacobi_grading_small_window() {
        let basis = basis_window(1);
        for &a in &basis {
            for &b in &basis {
                let ab = bracket_symbols(a, b);
                assert_eq!(ab, -bracket_symbols(b, a));
                for (t, _) in ab.iter() {
                    assert_eq!(toroidal_grading(*t), toroidal_grading(a) + toroidal_grading(b));
                }
            }
        }
        let loops: Vec<_> = basis.iter().copied().filter(|s| !s.is_central()).collect();
        for &a in loops.iter().step_by(7) {
            for &b in &loops {
                for &c in loops.iter().step_by(5) {
                    let (ea, eb, ec) = (a.elem(), b.elem(), c.elem());
                    let j = &(&toroidal_bracket(&toroidal_bracket(&ea, &eb), &ec)
                        + &toroidal_bracket(&toroidal_bracket(&eb, &ec), &ea))
                        + &toroidal_bracket(&toroidal_bracket(&ec, &ea), &eb);
                    assert!(j.is_zero(), "{a} {b} {c}");
                }
            }
        }
    }
}
