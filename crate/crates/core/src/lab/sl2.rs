//! ŝl₂ subalgebras of ĝ(𝒥) and Ĉ_𝔤, and the vacuum modules of ŝl₂ itself.

use std::collections::BTreeMap;
use std::fmt;

use super::LabError;
use crate::conformal::{affine_bracket, AffineElement, AffineSymbol, Generator};
use crate::lattice::LatticePoint;
use crate::linalg::sparse_rank;
use crate::lincomb::LinComb;
use crate::pbw::{enumerate_monomials, Action, InducedAlgebra, InducedModule, Monomial};
use crate::scalars::{GaussRational, Rational};
use crate::sp4::{sp4_bracket, trace_basis, Sp4Basis, Sp4Element};
use crate::tkk::{self, canonicalize_central, central, TkkElement};

/// The roots Δ̇ = {±2ε₁, ±2ε₂, ±(ε₁−ε₂)} with their fixed root vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Root {
    P2e1,
    M2e1,
    P2e2,
    M2e2,
    E1mE2,
    E2mE1,
}

impl Root {
    pub const ALL: [Root; 6] = [Root::P2e1, Root::M2e1, Root::P2e2, Root::M2e2, Root::E1mE2, Root::E2mE1];

    /// e_{2εᵢ} = E_{i,i+2}, e_{−2εᵢ} = E_{i+2,i}, e_{εᵢ−εⱼ} = E_{ij} − E_{j+2,i+2}.
    pub fn vector(self) -> Sp4Basis {
        match self {
            Root::P2e1 => Sp4Basis::E13,
            Root::M2e1 => Sp4Basis::E31,
            Root::P2e2 => Sp4Basis::E24,
            Root::M2e2 => Sp4Basis::E42,
            Root::E1mE2 => Sp4Basis::E12mE43,
            Root::E2mE1 => Sp4Basis::E21mE34,
        }
    }

    pub fn negative(self) -> Root {
        match self {
            Root::P2e1 => Root::M2e1,
            Root::M2e1 => Root::P2e1,
            Root::P2e2 => Root::M2e2,
            Root::M2e2 => Root::P2e2,
            Root::E1mE2 => Root::E2mE1,
            Root::E2mE1 => Root::E1mE2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Root::P2e1 => "2e1",
            Root::M2e1 => "-2e1",
            Root::P2e2 => "2e2",
            Root::M2e2 => "-2e2",
            Root::E1mE2 => "e1-e2",
            Root::E2mE1 => "e2-e1",
        }
    }

    pub fn from_name(s: &str) -> Option<Root> {
        Root::ALL.into_iter().find(|r| r.name() == s)
    }

    pub fn from_vector(x: Sp4Basis) -> Option<Root> {
        Root::ALL.into_iter().find(|r| r.vector() == x)
    }

    /// c_β = tr(e_β e_{−β}).
    pub fn c(self) -> i64 {
        trace_basis(self.vector(), self.negative().vector())
    }

    /// β∨ = [e_β, e_{−β}].
    pub fn coroot(self) -> Sp4Element {
        sp4_bracket(&LinComb::basis(self.vector()), &LinComb::basis(self.negative().vector()))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sl2Kind {
    /// 𝒜₍ₙ₎: x₊(m,2n), x₋(m,−2n), α∨(m,0)+4nC₂(m,0); 2C₁ ↦ k.
    A(i64),
    /// ℬ₍ₙ₎: x₊(2m,2n+1), x₋(2m,−2n−1), α∨(2m,0)+(4n+2)C₂(2m,0); 4C₁ ↦ k.
    B(i64),
    /// 𝓘ⁿ_β ⊂ Ĉ_𝔤: (e_β⊗t₂ⁿ)(m), (e_{−β}⊗t₂^{−n})(m), (β∨+nc_βk₂)(m); c_βk₁(−1) ↦ k.
    I(Root, i64),
    /// 𝔞₀: x±(0,m), α∨(0,m); 2C₂ ↦ k.
    A0,
    /// 𝔞₁: x₋(1,2m), x₊(−1,2m), 2C₁(0,2m)−α∨(0,2m); 4C₂ ↦ k.
    A1,
}

impl fmt::Display for Sl2Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sl2Kind::A(n) => write!(f, "A({n})"),
            Sl2Kind::B(n) => write!(f, "B({n})"),
            Sl2Kind::I(b, n) => write!(f, "I({b},{n})"),
            Sl2Kind::A0 => f.write_str("a0"),
            Sl2Kind::A1 => f.write_str("a1"),
        }
    }
}

/// An element of the ambient algebra of an embedding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ambient {
    Tkk(TkkElement),
    Affine(AffineElement),
}

impl Ambient {
    pub fn bracket(&self, other: &Ambient) -> Ambient {
        match (self, other) {
            (Ambient::Tkk(a), Ambient::Tkk(b)) => Ambient::Tkk(tkk::tkk_bracket(a, b)),
            (Ambient::Affine(a), Ambient::Affine(b)) => Ambient::Affine(affine_bracket(a, b)),
            _ => panic!("mixed ambient algebras"),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Ambient::Tkk(a) => a.is_zero(),
            Ambient::Affine(a) => a.is_zero(),
        }
    }

    pub fn scaled(&self, c: i64) -> Ambient {
        let c = GaussRational::from_int(c);
        match self {
            Ambient::Tkk(a) => Ambient::Tkk(a.scaled(&c)),
            Ambient::Affine(a) => Ambient::Affine(a.scaled(&c)),
        }
    }

    pub fn sub(&self, other: &Ambient) -> Ambient {
        match (self, other) {
            (Ambient::Tkk(a), Ambient::Tkk(b)) => Ambient::Tkk(a - b),
            (Ambient::Affine(a), Ambient::Affine(b)) => Ambient::Affine(a - b),
            _ => panic!("mixed ambient algebras"),
        }
    }

    fn zero_like(&self) -> Ambient {
        match self {
            Ambient::Tkk(_) => Ambient::Tkk(LinComb::zero()),
            Ambient::Affine(_) => Ambient::Affine(LinComb::zero()),
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ambient::Tkk(a) => a.fmt(f),
            Ambient::Affine(a) => a.fmt(f),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Embedding {
    pub kind: Sl2Kind,
    /// The multiple of C₁, C₂ or k₁(−1) that plays k.
    pub level_scale: Rational,
}

fn pt(m: i64, n: i64) -> LatticePoint {
    LatticePoint::new(m, n)
}

fn c1_origin() -> TkkElement {
    canonicalize_central(1, pt(0, 0)).expect("origin")
}

fn c2_origin() -> TkkElement {
    canonicalize_central(2, pt(0, 0)).expect("origin")
}

fn loop_aff(x: &Sp4Element, n: i64, m: i64) -> AffineElement {
    x.flat_map(|b| AffineSymbol::Gen { gen: Generator::Loop { x: *b, n }, m }.elem())
}

fn int(k: i64) -> GaussRational {
    GaussRational::from_int(k)
}

impl Sl2Embedding {
    pub fn x_plus(&self, m: i64) -> Ambient {
        match self.kind {
            Sl2Kind::A(n) => Ambient::Tkk(tkk::x_plus(pt(m, 2 * n))),
            Sl2Kind::B(n) => Ambient::Tkk(tkk::x_plus(pt(2 * m, 2 * n + 1))),
            Sl2Kind::I(b, n) => Ambient::Affine(loop_aff(&LinComb::basis(b.vector()), n, m)),
            Sl2Kind::A0 => Ambient::Tkk(tkk::x_plus(pt(0, m))),
            Sl2Kind::A1 => Ambient::Tkk(tkk::x_minus(pt(1, 2 * m))),
        }
    }

    pub fn x_minus(&self, m: i64) -> Ambient {
        match self.kind {
            Sl2Kind::A(n) => Ambient::Tkk(tkk::x_minus(pt(m, -2 * n))),
            Sl2Kind::B(n) => Ambient::Tkk(tkk::x_minus(pt(2 * m, -2 * n - 1))),
            Sl2Kind::I(b, n) => Ambient::Affine(loop_aff(&LinComb::basis(b.negative().vector()), -n, m)),
            Sl2Kind::A0 => Ambient::Tkk(tkk::x_minus(pt(0, m))),
            Sl2Kind::A1 => Ambient::Tkk(tkk::x_plus(pt(-1, 2 * m))),
        }
    }

    pub fn alpha(&self, m: i64) -> Ambient {
        match self.kind {
            Sl2Kind::A(n) => Ambient::Tkk(&tkk::h(pt(m, 0)) + &central(2, pt(m, 0)).scaled(&int(4 * n))),
            Sl2Kind::B(n) => Ambient::Tkk(&tkk::h(pt(2 * m, 0)) + &central(2, pt(2 * m, 0)).scaled(&int(4 * n + 2))),
            Sl2Kind::I(b, n) => {
                let mut e = loop_aff(&b.coroot(), 0, m);
                e.add_scaled(&AffineSymbol::Gen { gen: Generator::K2, m }.elem(), &int(n * b.c()));
                Ambient::Affine(e)
            }
            Sl2Kind::A0 => Ambient::Tkk(tkk::h(pt(0, m))),
            Sl2Kind::A1 => {
                let c1 = canonicalize_central(1, pt(0, 2 * m)).expect("even point");
                Ambient::Tkk(&c1.scaled(&int(2)) - &tkk::h(pt(0, 2 * m)))
            }
        }
    }

    /// The image of k.
    pub fn k(&self) -> Ambient {
        let s = GaussRational::from(self.level_scale.clone());
        match self.kind {
            Sl2Kind::A(_) | Sl2Kind::B(_) => Ambient::Tkk(c1_origin().scaled(&s)),
            Sl2Kind::A0 | Sl2Kind::A1 => Ambient::Tkk(c2_origin().scaled(&s)),
            Sl2Kind::I(..) => Ambient::Affine(AffineSymbol::K1.elem().scaled(&s)),
        }
    }

    /// Every violated ŝl₂ relation among images with |m|, |m′| ≤ r.
    pub fn relation_failures(&self, r: i64) -> Vec<String> {
        let mut fails = Vec::new();
        let mut degenerate = Vec::new();
        let k = self.k();
        let zero = k.zero_like();
        let mut check = |name: String, lhs: Ambient, rhs: Ambient| {
            let diff = lhs.sub(&rhs);
            if !diff.is_zero() {
                fails.push(format!("{}: {name}: {lhs} ≠ {rhs}", self.kind));
            }
        };
        for m in -r..=r {
            for p in -r..=r {
                let delta = if m + p == 0 { 1 } else { 0 };
                let kterm = |c: i64| k.scaled(c * delta);
                let a = self.alpha(m + p);
                check(
                    format!("[x+({m}), x-({p})]"),
                    self.x_plus(m).bracket(&self.x_minus(p)),
                    Ambient::sub(&a, &kterm(-m)),
                );
                check(
                    format!("[h({m}), x+({p})]"),
                    self.alpha(m).bracket(&self.x_plus(p)),
                    self.x_plus(m + p).scaled(2),
                );
                check(
                    format!("[h({m}), x-({p})]"),
                    self.alpha(m).bracket(&self.x_minus(p)),
                    self.x_minus(m + p).scaled(-2),
                );
                check(format!("[h({m}), h({p})]"), self.alpha(m).bracket(&self.alpha(p)), kterm(2 * m));
                check(format!("[x+({m}), x+({p})]"), self.x_plus(m).bracket(&self.x_plus(p)), zero.clone());
                check(format!("[x-({m}), x-({p})]"), self.x_minus(m).bracket(&self.x_minus(p)), zero.clone());
            }
            for (name, e) in [("x+", self.x_plus(m)), ("x-", self.x_minus(m)), ("h", self.alpha(m))] {
                check(format!("[k, {name}({m})]"), k.bracket(&e), zero.clone());
                if name != "h" && e.is_zero() {
                    degenerate.push(format!("{}: {name}({m}) has zero image", self.kind));
                }
            }
        }
        if k.is_zero() {
            degenerate.push(format!("{}: k has zero image", self.kind));
        }
        fails.extend(degenerate);
        fails
    }
}

/// Builds an embedding and checks the ŝl₂ relations on |m| ≤ 3.
pub fn sl2_embedding(kind: Sl2Kind) -> Result<Sl2Embedding, LabError> {
    let level_scale = Rational::from_int(match kind {
        Sl2Kind::A(_) => 2,
        Sl2Kind::B(_) => 4,
        Sl2Kind::I(b, _) => b.c(),
        Sl2Kind::A0 => 2,
        Sl2Kind::A1 => 4,
    });
    let e = Sl2Embedding { kind, level_scale };
    match e.relation_failures(3).into_iter().next() {
        Some(f) => Err(LabError::RelationFailure(f)),
        None => Ok(e),
    }
}

/// Basis symbols of ŝl₂ = sl₂⊗ℂ[t,t⁻¹] ⊕ ℂk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sl2Sym {
    XPlus(i64),
    XMinus(i64),
    H(i64),
    K,
}

impl Sl2Sym {
    pub fn degree(self) -> i64 {
        match self {
            Sl2Sym::XPlus(m) | Sl2Sym::XMinus(m) | Sl2Sym::H(m) => -m,
            Sl2Sym::K => 0,
        }
    }

    pub fn charge(self) -> i64 {
        match self {
            Sl2Sym::XPlus(_) => 2,
            Sl2Sym::XMinus(_) => -2,
            _ => 0,
        }
    }
}

impl fmt::Display for Sl2Sym {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sl2Sym::XPlus(m) => write!(f, "x+({m})"),
            Sl2Sym::XMinus(m) => write!(f, "x-({m})"),
            Sl2Sym::H(m) => write!(f, "h({m})"),
            Sl2Sym::K => f.write_str("k"),
        }
    }
}

pub fn sl2_bracket(a: Sl2Sym, b: Sl2Sym) -> LinComb<Sl2Sym> {
    use Sl2Sym::*;
    let k = |c: i64, s: i64| {
        if s == 0 {
            LinComb::term(K, int(c))
        } else {
            LinComb::zero()
        }
    };
    match (a, b) {
        (XPlus(m), XMinus(n)) => &LinComb::basis(H(m + n)) + &k(m, m + n),
        (XMinus(m), XPlus(n)) => &LinComb::term(H(m + n), int(-1)) + &k(-n, m + n),
        (H(m), XPlus(n)) => LinComb::term(XPlus(m + n), int(2)),
        (H(m), XMinus(n)) => LinComb::term(XMinus(m + n), int(-2)),
        (XPlus(m), H(n)) => LinComb::term(XPlus(m + n), int(-2)),
        (XMinus(m), H(n)) => LinComb::term(XMinus(m + n), int(2)),
        (H(m), H(n)) => k(2 * m, m + n),
        _ => LinComb::zero(),
    }
}

/// ŝl₂ on V(ℓ,0): sl₂⊗ℂ[t] kills 𝟙, k acts by ℓ.
pub struct Sl2Vacuum {
    pub level: u64,
}

impl InducedAlgebra for Sl2Vacuum {
    type Sym = Sl2Sym;

    fn bracket(&self, a: &Sl2Sym, b: &Sl2Sym) -> LinComb<Sl2Sym> {
        sl2_bracket(*a, *b)
    }

    fn action(&self, s: &Sl2Sym) -> Action {
        match s {
            Sl2Sym::K => Action::Scalar(int(self.level as i64)),
            s if s.degree() > 0 => Action::Lower,
            _ => Action::Kill,
        }
    }

    fn omega(&self, s: &Sl2Sym) -> LinComb<Sl2Sym> {
        LinComb::basis(match *s {
            Sl2Sym::XPlus(m) => Sl2Sym::XMinus(-m),
            Sl2Sym::XMinus(m) => Sl2Sym::XPlus(-m),
            Sl2Sym::H(m) => Sl2Sym::H(-m),
            Sl2Sym::K => Sl2Sym::K,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2VacuumReport {
    pub level: u64,
    pub degree_cap: i64,
    pub verma: Vec<usize>,
    /// dim V − dim ⟨x₊(−1)^{ℓ+1}𝟙⟩ per degree.
    pub closure_quotient: Vec<usize>,
    /// Gram rank of the contravariant form per degree.
    pub gram_quotient: Vec<usize>,
    /// Whether x₊(−1)^{ℓ+1}𝟙 is annihilated by x₊(0) and all positive modes up to N.
    pub singular: bool,
}

impl Sl2VacuumReport {
    pub fn agree(&self) -> bool {
        self.closure_quotient == self.gram_quotient
    }
}

/// Graded dimensions of V_{ŝl₂}(ℓ,0) and of L_{ŝl₂}(ℓ,0) computed by closure and
/// by Gram rank.
pub fn sl2_vacuum_windows(level: u64, degree_cap: i64) -> Sl2VacuumReport {
    let module = InducedModule::new(Sl2Vacuum { level });
    let lowering: Vec<(Sl2Sym, i64, i64)> = (1..=degree_cap)
        .flat_map(|d| [Sl2Sym::XPlus(-d), Sl2Sym::XMinus(-d), Sl2Sym::H(-d)])
        .map(|s| (s, s.degree(), s.charge()))
        .collect();
    let mut blocks: BTreeMap<(i64, i64), Vec<Monomial<Sl2Sym>>> = BTreeMap::new();
    for d in 0..=degree_cap {
        for c in (-2 * d..=2 * d).step_by(2) {
            let monos = enumerate_monomials(&lowering, d, c, d.max(0) as usize);
            if !monos.is_empty() {
                blocks.insert((d, c), monos);
            }
        }
    }
    let per_degree = |f: &dyn Fn(&[Monomial<Sl2Sym>]) -> usize| -> Vec<usize> {
        (0..=degree_cap).map(|d| blocks.iter().filter(|((bd, _), _)| *bd == d).map(|(_, b)| f(b)).sum()).collect()
    };
    let verma = per_degree(&|b| b.len());
    let gram_quotient = per_degree(&|b| sparse_rank(&module.gram_rows(b, b)));

    let generator = module.word(&vec![Sl2Sym::XPlus(-1); level as usize + 1]);
    let mut raising = vec![Sl2Sym::XPlus(0)];
    for m in 1..=degree_cap.max(1) {
        raising.extend([Sl2Sym::XPlus(m), Sl2Sym::XMinus(m), Sl2Sym::H(m)]);
    }
    let singular = raising.iter().all(|g| module.act_symbol_on(g, &generator).is_zero());
    let mut ops = vec![Sl2Sym::XMinus(0), Sl2Sym::XPlus(0), Sl2Sym::H(0)];
    for m in 1..=degree_cap {
        ops.extend([Sl2Sym::XPlus(-m), Sl2Sym::XMinus(-m), Sl2Sym::H(-m)]);
        ops.extend([Sl2Sym::XPlus(m), Sl2Sym::XMinus(m), Sl2Sym::H(m)]);
    }
    let degree = |m: &Monomial<Sl2Sym>| m.0.iter().map(|s| s.degree()).sum::<i64>();
    let span = module.closure(&[generator], &ops, |m| degree(m) <= degree_cap);
    let mut sub = vec![0usize; degree_cap as usize + 1];
    for p in span.pivots() {
        sub[degree(p) as usize] += 1;
    }
    let closure_quotient = verma.iter().zip(&sub).map(|(v, s)| v - s).collect();
    Sl2VacuumReport { level, degree_cap, verma, closure_quotient, gram_quotient, singular }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots() {
        let c: Vec<i64> = Root::ALL.iter().map(|r| r.c()).collect();
        assert_eq!(c, vec![1, 1, 1, 1, 2, 2]);
        for r in Root::ALL {
            assert_eq!(r.negative().negative(), r);
            assert_eq!(Root::from_name(r.name()), Some(r));
            // [β∨, e_β] = 2e_β
            let b = sp4_bracket(&r.coroot(), &LinComb::basis(r.vector()));
            assert_eq!(b, LinComb::term(r.vector(), int(2)));
        }
    }

    #[test]
    fn embeddings_satisfy_relations() {
        let mut kinds = vec![Sl2Kind::A0, Sl2Kind::A1];
        for n in -2..=2 {
            kinds.extend([Sl2Kind::A(n), Sl2Kind::B(n)]);
            kinds.extend(Root::ALL.iter().map(|&b| Sl2Kind::I(b, n)));
        }
        for k in kinds {
            let e = sl2_embedding(k);
            assert!(e.is_ok(), "{e:?}");
        }
        assert_eq!(sl2_embedding(Sl2Kind::I(Root::E1mE2, 0)).unwrap().level_scale, Rational::from_int(2));
        assert_eq!(sl2_embedding(Sl2Kind::B(1)).unwrap().level_scale, Rational::from_int(4));
    }

    #[test]
    fn wrong_level_scale_is_caught() {
        let e = Sl2Embedding { kind: Sl2Kind::A(0), level_scale: Rational::from_int(1) };
        assert!(!e.relation_failures(1).is_empty());
    }

    #[test]
    fn sl2_bracket_is_lie() {
        let syms: Vec<Sl2Sym> =
            (-2..=2).flat_map(|m| [Sl2Sym::XPlus(m), Sl2Sym::XMinus(m), Sl2Sym::H(m)]).chain([Sl2Sym::K]).collect();
        let br = |u: &LinComb<Sl2Sym>, v: &LinComb<Sl2Sym>| u.bilinear(v, |a, b| sl2_bracket(*a, *b));
        for &a in &syms {
            for &b in &syms {
                assert_eq!(sl2_bracket(a, b), -sl2_bracket(b, a));
                for &c in &syms {
                    let (ea, eb, ec) = (LinComb::basis(a), LinComb::basis(b), LinComb::basis(c));
                    let j = &(&br(&br(&ea, &eb), &ec) + &br(&br(&eb, &ec), &ea)) + &br(&br(&ec, &ea), &eb);
                    assert!(j.is_zero());
                }
            }
        }
    }

    #[test]
    fn vacuum_dimensions() {
        let r0 = sl2_vacuum_windows(0, 4);
        assert_eq!(r0.verma, vec![1, 3, 9, 22, 51]);
        assert_eq!(r0.closure_quotient, vec![1, 0, 0, 0, 0]);
        assert!(r0.singular && r0.agree());
        let r1 = sl2_vacuum_windows(1, 4);
        assert_eq!(r1.gram_quotient, vec![1, 3, 4, 7, 13]);
        assert!(r1.singular && r1.agree());
    }
}
