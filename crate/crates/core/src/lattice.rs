//! The semilattice S = ℤ² ∖ ((1,1) + 2ℤ²), the function Ω, and the Jordan algebra 𝒥.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::lincomb::LinComb;
use crate::scalars::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LatticePoint {
    pub m: i64,
    pub n: i64,
}

impl LatticePoint {
    pub const ORIGIN: LatticePoint = LatticePoint { m: 0, n: 0 };

    pub const fn new(m: i64, n: i64) -> Self {
        LatticePoint { m, n }
    }

    /// The Euclidean pairing `a·b = a₁b₁ + a₂b₂`.
    pub fn dot(self, other: LatticePoint) -> i64 {
        self.m * other.m + self.n * other.n
    }

    pub fn stratum(self) -> Stratum {
        in_semilattice(self)
    }

    pub fn in_s(self) -> bool {
        self.stratum() != Stratum::Sperp
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.m + o.m, self.n + o.n)
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.m - o.m, self.n - o.n)
    }
}

impl Neg for LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint::new(-self.m, -self.n)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.m, self.n)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Stratum {
    S0,
    S1,
    S2,
    Sperp,
}

/// Stratum by parity bits: S0 = 2ℤ², S1 = e₁ + 2ℤ², S2 = e₂ + 2ℤ², S⊥ = e₁ + e₂ + 2ℤ².
pub fn in_semilattice(p: LatticePoint) -> Stratum {
    match (p.m.rem_euclid(2), p.n.rem_euclid(2)) {
        (0, 0) => Stratum::S0,
        (1, 0) => Stratum::S1,
        (0, 1) => Stratum::S2,
        _ => Stratum::Sperp,
    }
}

/// Ω(m,n) = ½((−1)^m − (−1)^n).
pub fn omega_int(p: LatticePoint) -> i64 {
    match in_semilattice(p) {
        Stratum::S1 => -1,
        Stratum::S2 => 1,
        _ => 0,
    }
}

pub fn omega(p: LatticePoint) -> Rational {
    Rational::from_int(omega_int(p))
}

/// A monomial x^ρ of 𝒥; only constructed for ρ ∈ S.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JordanMonomial(LatticePoint);

impl JordanMonomial {
    pub fn new(p: LatticePoint) -> Option<Self> {
        p.in_s().then_some(JordanMonomial(p))
    }

    pub fn point(self) -> LatticePoint {
        self.0
    }
}

impl fmt::Display for JordanMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x^{}", self.0)
    }
}

pub type JordanElement = LinComb<JordanMonomial>;

/// x^ρ, or zero when ρ ∈ S⊥.
pub fn jordan_monomial(p: LatticePoint) -> JordanElement {
    JordanMonomial::new(p).map(LinComb::basis).unwrap_or_default()
}

pub fn jordan_mul(a: &JordanElement, b: &JordanElement) -> JordanElement {
    a.bilinear(b, |x, y| jordan_monomial(x.0 + y.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::GaussRational;

    fn p(m: i64, n: i64) -> LatticePoint {
        LatticePoint::new(m, n)
    }

    fn window(r: i64) -> impl Iterator<Item = LatticePoint> {
        (-r..=r).flat_map(move |m| (-r..=r).map(move |n| p(m, n)))
    }

    #[test]
    fn strata_examples() {
        assert_eq!(in_semilattice(p(0, 0)), Stratum::S0);
        assert_eq!(in_semilattice(p(1, 1)), Stratum::Sperp);
        assert_eq!(in_semilattice(p(-3, 2)), Stratum::S1);
        assert_eq!(in_semilattice(p(-2, -5)), Stratum::S2);
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_int(p(1, 0)), -1);
        assert_eq!(omega_int(p(0, 1)), 1);
        assert_eq!(omega_int(p(2, 2)), 0);
        assert_eq!(omega_int(p(-1, -1)), 0);
    }

    #[test]
    fn omega_matches_sign_formula() {
        for q in window(6) {
            let sign = |k: i64| if k.rem_euclid(2) == 0 { 1 } else { -1 };
            assert_eq!(2 * omega_int(q), sign(q.m) - sign(q.n));
            let s = in_semilattice(q);
            assert_eq!(omega_int(q) == 0, matches!(s, Stratum::S0 | Stratum::Sperp));
        }
    }

    #[test]
    fn semilattice_law() {
        for a in window(4).filter(|q| q.in_s()) {
            for b in window(4).filter(|q| q.in_s()) {
                assert!(p(2 * a.m - b.m, 2 * a.n - b.n).in_s(), "{a} {b}");
            }
        }
        assert!(p(0, 0).in_s());
    }

    #[test]
    fn product_examples() {
        let x = |m, n| jordan_monomial(p(m, n));
        assert_eq!(jordan_mul(&x(1, 0), &x(1, 2)), x(2, 2));
        assert!(jordan_mul(&x(1, 0), &x(0, 1)).is_zero());
        assert!(x(1, 1).is_zero());
        for q in window(3).filter(|q| q.in_s()) {
            assert_eq!(jordan_mul(&x(0, 0), &x(q.m, q.n)), x(q.m, q.n));
        }
    }

    #[test]
    fn commutative_and_jordan_identity() {
        let basis: Vec<_> = window(2).filter(|q| q.in_s()).map(jordan_monomial).collect();
        for a in &basis {
            let a2 = jordan_mul(a, a);
            for b in &basis {
                assert_eq!(jordan_mul(a, b), jordan_mul(b, a));
                let lhs = jordan_mul(&jordan_mul(&a2, b), a);
                let rhs = jordan_mul(&a2, &jordan_mul(b, a));
                assert_eq!(lhs, rhs);
            }
        }
        // the identity must also hold on non-monomial elements
        let two = GaussRational::from_int(2);
        for a in &basis {
            for c in &basis {
                let s = a + &c.scaled(&two);
                let s2 = jordan_mul(&s, &s);
                for b in basis.iter().step_by(3) {
                    assert_eq!(jordan_mul(&jordan_mul(&s2, b), &s), jordan_mul(&s2, &jordan_mul(b, &s)));
                }
            }
        }
    }
}
