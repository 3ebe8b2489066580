//! The baby TKK algebra ĝ(𝒥), presented by symbols x±(ρ), α∨(τ), C₁(υ), C₂(υ)
//! and relations (R1)–(R4), kept in a canonical form.
//!
//! Canonical central basis: (R4) reads (υ·e₁)C₁(υ) + (υ·e₂)C₂(υ) = 0 for
//! υ ∈ 2ℤ², so C₂(υ) is eliminated whenever υ₂ ≠ 0 and C₁(υ) vanishes when
//! υ = (2m, 0) with m ≠ 0. The surviving central symbols are C₁(2m,2n) with
//! n ≠ 0, C₁(0,0) and C₂(2m,0).

use std::fmt;

use thiserror::Error;

use crate::lattice::{omega_int, LatticePoint, Stratum};
use crate::lincomb::LinComb;
use crate::scalars::{GaussRational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TkkError {
    #[error("x± symbol at {0} is zero: the point lies in S⊥")]
    PointInSperp(LatticePoint),
    #[error("central symbol at {0} needs both coordinates even")]
    InvalidCentral(LatticePoint),
    #[error("symbol {0} is not in canonical form")]
    NonCanonical(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TkkKind {
    XPlus,
    XMinus,
    H,
    K1,
    K2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TkkSymbol {
    pub kind: TkkKind,
    pub point: LatticePoint,
}

pub type TkkElement = LinComb<TkkSymbol>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TriangularPart {
    Plus,
    Zero,
    Minus,
}

fn even(k: i64) -> bool {
    k.rem_euclid(2) == 0
}

impl TkkSymbol {
    /// A canonical basis symbol; rejects anything that is zero or rewritable.
    pub fn new(kind: TkkKind, point: LatticePoint) -> Result<Self, TkkError> {
        let s = TkkSymbol { kind, point };
        match kind {
            TkkKind::XPlus | TkkKind::XMinus if !point.in_s() => Err(TkkError::PointInSperp(point)),
            TkkKind::K1 | TkkKind::K2 if !(even(point.m) && even(point.n)) => Err(TkkError::InvalidCentral(point)),
            TkkKind::K1 if point.n == 0 && point.m != 0 => Err(TkkError::NonCanonical(s.to_string())),
            TkkKind::K2 if point.n != 0 => Err(TkkError::NonCanonical(s.to_string())),
            _ => Ok(s),
        }
    }

    pub fn is_central(self) -> bool {
        matches!(self.kind, TkkKind::K1 | TkkKind::K2)
    }

    pub fn elem(self) -> TkkElement {
        LinComb::basis(self)
    }

    /// Eigenvalues of ad d₁, ad d₂.
    pub fn grading_weights(self) -> (i64, i64) {
        (self.point.m, self.point.n)
    }

    /// The ℤ-degree −d₁.
    pub fn degree(self) -> i64 {
        -self.point.m
    }

    pub fn triangular_part(self) -> TriangularPart {
        let m = self.point.m;
        let sign = |strict_zero_is: TriangularPart| match m.signum() {
            1 => TriangularPart::Plus,
            -1 => TriangularPart::Minus,
            _ => strict_zero_is,
        };
        match self.kind {
            TkkKind::XPlus => sign(TriangularPart::Plus),
            TkkKind::XMinus => sign(TriangularPart::Minus),
            TkkKind::H | TkkKind::K1 | TkkKind::K2 => sign(TriangularPart::Zero),
        }
    }
}

impl fmt::Display for TkkSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            TkkKind::XPlus => "x+",
            TkkKind::XMinus => "x-",
            TkkKind::H => "h",
            TkkKind::K1 => "C1",
            TkkKind::K2 => "C2",
        };
        write!(f, "{name}{}", self.point)
    }
}

fn sym(kind: TkkKind, point: LatticePoint) -> TkkElement {
    LinComb::basis(TkkSymbol { kind, point })
}

/// x₊(ρ); zero for ρ ∈ S⊥.
pub fn x_plus(p: LatticePoint) -> TkkElement {
    if p.in_s() {
        sym(TkkKind::XPlus, p)
    } else {
        TkkElement::zero()
    }
}

/// x₋(ρ); zero for ρ ∈ S⊥.
pub fn x_minus(p: LatticePoint) -> TkkElement {
    if p.in_s() {
        sym(TkkKind::XMinus, p)
    } else {
        TkkElement::zero()
    }
}

pub fn h(p: LatticePoint) -> TkkElement {
    sym(TkkKind::H, p)
}

/// Rewrites Cᵢ(p), p ∈ 2ℤ², into the canonical central basis using (R4).
pub fn canonicalize_central(i: u8, p: LatticePoint) -> Result<TkkElement, TkkError> {
    if !(even(p.m) && even(p.n)) {
        return Err(TkkError::InvalidCentral(p));
    }
    Ok(match (i, p.n == 0) {
        (1, false) => sym(TkkKind::K1, p),
        (1, true) if p.m == 0 => sym(TkkKind::K1, p),
        (1, true) => TkkElement::zero(),
        (2, true) => sym(TkkKind::K2, p),
        (2, false) => sym(TkkKind::K1, p).scaled_rat(&Rational::new(-p.m, p.n)),
        _ => panic!("central index must be 1 or 2"),
    })
}

/// Cᵢ(υ) as it appears in the relations: zero unless υ ∈ S0.
pub fn central(i: u8, p: LatticePoint) -> TkkElement {
    if p.stratum() == Stratum::S0 {
        canonicalize_central(i, p).expect("S0 point")
    } else {
        TkkElement::zero()
    }
}

/// Σᵢ (ρ·eᵢ) Cᵢ(υ).
fn central_sum(rho: LatticePoint, u: LatticePoint) -> TkkElement {
    let mut out = central(1, u).scaled(&GaussRational::from_int(rho.m));
    out.add_scaled(&central(2, u), &GaussRational::from_int(rho.n));
    out
}

fn int(k: i64) -> GaussRational {
    GaussRational::from_int(k)
}

/// The bracket of two canonical basis symbols.
pub fn bracket_symbols(a: TkkSymbol, b: TkkSymbol) -> TkkElement {
    use TkkKind::*;
    if a.is_central() || b.is_central() {
        return TkkElement::zero();
    }
    let (rho, tau) = (a.point, b.point);
    let sum = rho + tau;
    match (a.kind, b.kind) {
        (H, H) => match (rho.in_s(), tau.in_s()) {
            (false, false) => central_sum(rho, sum).scaled(&int(-4)),
            (true, true) if sum.in_s() => central_sum(rho, sum).scaled(&int(4)),
            (false, true) | (true, true) => h(sum).scaled(&int(2 * omega_int(tau))),
            (true, false) => h(sum).scaled(&int(-2 * omega_int(rho))),
        },
        (H, XPlus) | (H, XMinus) => {
            let sign = if b.kind == XPlus { 1 } else { -1 };
            let x = if b.kind == XPlus { x_plus(sum) } else { x_minus(sum) };
            if rho.in_s() {
                x.scaled(&int(2 * sign))
            } else {
                x.scaled(&int(2 * omega_int(tau)))
            }
        }
        (XPlus, H) | (XMinus, H) => -bracket_symbols(b, a),
        (XPlus, XPlus) | (XMinus, XMinus) => TkkElement::zero(),
        (XPlus, XMinus) => {
            if sum.in_s() {
                &h(sum) + &central_sum(rho, sum).scaled(&int(2))
            } else {
                h(sum).scaled(&int(omega_int(tau)))
            }
        }
        (XMinus, XPlus) => -bracket_symbols(b, a),
        _ => unreachable!("central kinds handled above"),
    }
}

pub fn tkk_bracket(u: &TkkElement, v: &TkkElement) -> TkkElement {
    u.bilinear(v, |a, b| bracket_symbols(*a, *b))
}

/// The anti-involution used for contravariant forms:
/// x±(ρ) ↦ x∓(−ρ), α∨(ρ) ↦ ±α∨(−ρ) (minus sign exactly on S⊥), Cᵢ(υ) ↦ Cᵢ(−υ).
pub fn omega_anti(s: TkkSymbol) -> TkkElement {
    let p = -s.point;
    match s.kind {
        TkkKind::XPlus => x_minus(p),
        TkkKind::XMinus => x_plus(p),
        TkkKind::H if s.point.in_s() => h(p),
        TkkKind::H => -h(p),
        TkkKind::K1 => sym(TkkKind::K1, p),
        TkkKind::K2 => sym(TkkKind::K2, p),
    }
}

pub fn omega_anti_elem(u: &TkkElement) -> TkkElement {
    u.flat_map(|s| omega_anti(*s))
}

/// Every canonical basis symbol with both coordinates in [−r, r].
pub fn basis_window(r: i64) -> Vec<TkkSymbol> {
    let mut out = Vec::new();
    for kind in [TkkKind::XPlus, TkkKind::XMinus, TkkKind::H, TkkKind::K1, TkkKind::K2] {
        for m in -r..=r {
            for n in -r..=r {
                if let Ok(s) = TkkSymbol::new(kind, LatticePoint::new(m, n)) {
                    out.push(s);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::omega;

    fn p(m: i64, n: i64) -> LatticePoint {
        LatticePoint::new(m, n)
    }

    fn s(kind: TkkKind, m: i64, n: i64) -> TkkSymbol {
        TkkSymbol::new(kind, p(m, n)).unwrap()
    }

    #[test]
    fn central_examples() {
        let c1 = sym(TkkKind::K1, p(2, 4));
        assert_eq!(canonicalize_central(2, p(2, 4)).unwrap(), c1.scaled_rat(&Rational::new(-1, 2)));
        assert_eq!(canonicalize_central(2, p(4, 0)).unwrap(), sym(TkkKind::K2, p(4, 0)));
        assert_eq!(canonicalize_central(1, p(0, 0)).unwrap(), sym(TkkKind::K1, p(0, 0)));
        assert!(canonicalize_central(1, p(2, 0)).unwrap().is_zero());
        assert_eq!(canonicalize_central(1, p(1, 0)), Err(TkkError::InvalidCentral(p(1, 0))));
    }

    #[test]
    fn relation_r4_holds_in_canonical_form() {
        for m in -4..=4 {
            for n in -4..=4 {
                let u = p(2 * m, 2 * n);
                let mut rel = canonicalize_central(1, u).unwrap().scaled(&int(u.m));
                rel.add_scaled(&canonicalize_central(2, u).unwrap(), &int(u.n));
                assert!(rel.is_zero(), "{u}");
            }
        }
    }

    #[test]
    fn symbol_validation() {
        assert_eq!(TkkSymbol::new(TkkKind::XPlus, p(1, 1)), Err(TkkError::PointInSperp(p(1, 1))));
        assert!(TkkSymbol::new(TkkKind::H, p(1, 1)).is_ok());
        assert!(TkkSymbol::new(TkkKind::K2, p(2, 2)).is_err());
        assert!(TkkSymbol::new(TkkKind::K1, p(2, 0)).is_err());
        assert!(TkkSymbol::new(TkkKind::K1, p(0, 0)).is_ok());
    }

    #[test]
    fn bracket_examples() {
        let xp = s(TkkKind::XPlus, 1, 0).elem();
        let xm = s(TkkKind::XMinus, 1, 0).elem();
        // the C₁(2,0) term of (R3) vanishes by (R4)
        assert_eq!(tkk_bracket(&xp, &xm), h(p(2, 0)));
        assert_eq!(tkk_bracket(&xp, &s(TkkKind::XMinus, 0, 1).elem()), h(p(1, 1)));
        let h11 = h(p(1, 1));
        assert!(tkk_bracket(&h11, &h11).is_zero());
        assert_eq!(tkk_bracket(&h(p(0, 0)), &x_plus(p(0, 0))), x_plus(p(0, 0)).scaled(&int(2)));
        // (R3) with a surviving central term
        let r = tkk_bracket(&s(TkkKind::XPlus, 1, 2).elem(), &s(TkkKind::XMinus, 1, 0).elem());
        let mut want = h(p(2, 2));
        want.add_scaled(&sym(TkkKind::K1, p(2, 2)), &int(2));
        want.add_scaled(&canonicalize_central(2, p(2, 2)).unwrap(), &int(4));
        assert_eq!(r, want);
    }

    /// Independent oracle for (R1)–(R3), written case by case from the relations
    /// without the canonical-basis shortcuts.
    fn oracle(a: TkkSymbol, b: TkkSymbol) -> TkkElement {
        use TkkKind::*;
        let c = |i: u8, q: LatticePoint| {
            if q.m % 2 == 0 && q.n % 2 == 0 {
                canonicalize_central(i, q).unwrap()
            } else {
                TkkElement::zero()
            }
        };
        let csum = |r: LatticePoint, q: LatticePoint| &c(1, q).scaled(&int(r.m)) + &c(2, q).scaled(&int(r.n));
        let om = |q: LatticePoint| GaussRational::real(omega(q));
        let (r, t) = (a.point, b.point);
        let q = r + t;
        let xs = |k: TkkKind, q: LatticePoint| {
            if q.in_s() {
                sym(k, q)
            } else {
                TkkElement::zero()
            }
        };
        match (a.kind, b.kind) {
            (K1, _) | (K2, _) | (_, K1) | (_, K2) => TkkElement::zero(),
            (H, H) if !r.in_s() && !t.in_s() => csum(r, q).scaled(&int(-4)),
            (H, H) if r.in_s() && t.in_s() && q.in_s() => csum(r, q).scaled(&int(4)),
            (H, H) if t.in_s() => sym(H, q).scaled(&(&om(t) * &int(2))),
            (H, H) => sym(H, q).scaled(&(&om(r) * &int(-2))),
            (H, XPlus) if r.in_s() => xs(XPlus, q).scaled(&int(2)),
            (H, XMinus) if r.in_s() => xs(XMinus, q).scaled(&int(-2)),
            (H, k) => xs(k, q).scaled(&(&om(t) * &int(2))),
            (k, H) => -oracle(b, TkkSymbol { kind: k, point: r }),
            (XPlus, XMinus) if q.in_s() => &sym(H, q) + &csum(r, q).scaled(&int(2)),
            (XPlus, XMinus) => sym(H, q).scaled(&om(t)),
            (XMinus, XPlus) => -oracle(b, a),
            _ => TkkElement::zero(),
        }
    }

    #[test]
    fn bracket_matches_oracle() {
        let basis = basis_window(2);
        for &a in &basis {
            for &b in &basis {
                assert_eq!(bracket_symbols(a, b), oracle(a, b), "[{a}, {b}]");
            }
        }
    }

    #[test]
    fn antisymmetry_grading_and_parts() {
        let basis = basis_window(2);
        for &a in &basis {
            for &b in &basis {
                let ab = bracket_symbols(a, b);
                assert_eq!(ab, -bracket_symbols(b, a), "[{a}, {b}]");
                let (a1, a2) = a.grading_weights();
                let (b1, b2) = b.grading_weights();
                for (t, _) in ab.iter() {
                    assert_eq!(t.grading_weights(), (a1 + b1, a2 + b2));
                }
                let (pa, pb) = (a.triangular_part(), b.triangular_part());
                if pa == pb {
                    for (t, _) in ab.iter() {
                        assert_eq!(t.triangular_part(), pa, "[{a}, {b}] ∋ {t}");
                    }
                }
            }
        }
    }

    #[test]
    fn triangular_examples() {
        assert_eq!(s(TkkKind::XPlus, 0, 5).triangular_part(), TriangularPart::Plus);
        assert_eq!(s(TkkKind::XMinus, 0, 4).triangular_part(), TriangularPart::Minus);
        assert_eq!(s(TkkKind::H, 0, -3).triangular_part(), TriangularPart::Zero);
        assert_eq!(s(TkkKind::XMinus, 2, 1).triangular_part(), TriangularPart::Plus);
        assert_eq!(s(TkkKind::K2, 0, 0).triangular_part(), TriangularPart::Zero);
        assert_eq!(s(TkkKind::K2, 2, 0).triangular_part(), TriangularPart::Plus);
        assert_eq!(s(TkkKind::K1, 0, 4).triangular_part(), TriangularPart::Zero);
        assert_eq!(s(TkkKind::XPlus, 1, 0).degree(), -1);
    }

    #[test]
    fn omega_is_anti_automorphism() {
        let basis = basis_window(2);
        for &a in &basis {
            assert_eq!(omega_anti_elem(&omega_anti(a)), a.elem());
            for &b in &basis {
                let lhs = omega_anti_elem(&bracket_symbols(a, b));
                let rhs = tkk_bracket(&omega_anti(b), &omega_anti(a));
                assert_eq!(lhs, rhs, "ω[{a}, {b}]");
            }
        }
    }
}
