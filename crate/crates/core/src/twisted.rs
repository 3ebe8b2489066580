//! The involution σ of C_𝔤, eigencomponents a^{(j)} = ½(a + (−1)^j σa), the
//! twisted affinization Ĉ_𝔤[σ], and the isomorphism φ : ĝ(𝒥) → Ĉ_𝔤[σ].

use std::fmt;

use thiserror::Error;

use crate::conformal::{
    gen_elem, i_g, i_g_inv, nth_product, partial_pow, product_bound, reduce_affine_elem, AffineElement, AffineSymbol,
    ConformalElement, ConformalSymbol, Generator,
};
use crate::lattice::{LatticePoint, Stratum};
use crate::lincomb::LinComb;
use crate::scalars::{binom, GaussRational, Rational};
use crate::sp4::Sp4Basis;
use crate::tkk::{self, TkkElement, TkkKind, TkkSymbol};
use crate::toroidal::{canonicalize_k, loop_elem, ToroidalElement, ToroidalSymbol, Which};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwistError {
    #[error("σ-fixed central input has no component at half-integer index {0}")]
    ParityMismatch(Half),
    #[error("index {q} does not match eigencomponent ({j})")]
    IndexParity { j: u8, q: Half },
    #[error("{0} is not a twisted basis symbol")]
    NonCanonical(String),
}

/// An element of ½ℤ, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Half(pub i64);

impl Half {
    pub fn int(m: i64) -> Self {
        Half(2 * m)
    }

    /// 0 for integers, 1 for half-odd integers.
    pub fn parity(self) -> u8 {
        self.0.rem_euclid(2) as u8
    }

    pub fn to_rational(self) -> Rational {
        Rational::new(self.0, 2)
    }

    pub fn to_int(self) -> Option<i64> {
        (self.parity() == 0).then_some(self.0 / 2)
    }
}

impl std::ops::Add for Half {
    type Output = Half;
    fn add(self, o: Half) -> Half {
        Half(self.0 + o.0)
    }
}

impl std::ops::Sub for Half {
    type Output = Half;
    fn sub(self, o: Half) -> Half {
        Half(self.0 - o.0)
    }
}

impl std::ops::Neg for Half {
    type Output = Half;
    fn neg(self) -> Half {
        Half(-self.0)
    }
}

impl fmt::Display for Half {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_int() {
            Some(k) => write!(f, "{k}"),
            None => write!(f, "{}/2", self.0),
        }
    }
}

fn int(k: i64) -> GaussRational {
    GaussRational::from_int(k)
}

fn half() -> GaussRational {
    GaussRational::ratio(1, 2)
}

fn lp(x: Sp4Basis, n: i64) -> ConformalElement {
    gen_elem(Generator::Loop { x, n })
}

/// Central correction in σ of the Cartan generators: k₂ for n = 0, (1/n)·D⊗t₂ⁿk₁ otherwise.
fn cartan_correction(n: i64) -> ConformalElement {
    if n == 0 {
        gen_elem(Generator::K2)
    } else {
        ConformalSymbol::D { power: 1, gen: Generator::TK1 { s: n } }.elem().scaled_rat(&Rational::new(1, n))
    }
}

pub fn sigma_gen(g: Generator) -> ConformalElement {
    use Sp4Basis::*;
    let Generator::Loop { x, n } = g else {
        return gen_elem(g);
    };
    match x {
        H1 => &(-lp(H2, n)) + &cartan_correction(n),
        H2 => &(-lp(H1, n)) + &cartan_correction(n),
        E12mE43 | E21mE34 => lp(x, n),
        E14pE23 => -lp(E41pE32, n + 1),
        E41pE32 => -lp(E14pE23, n - 1),
        E13 => lp(E42, n + 1),
        E31 => lp(E24, n - 1),
        E24 => lp(E31, n + 1),
        E42 => lp(E13, n - 1),
    }
}

pub fn sigma_symbol(s: ConformalSymbol) -> ConformalElement {
    match s {
        ConformalSymbol::D { power, gen } => partial_pow(&sigma_gen(gen), power),
        ConformalSymbol::K1 => s.elem(),
    }
}

pub fn sigma_c(e: &ConformalElement) -> ConformalElement {
    e.flat_map(|s| sigma_symbol(*s))
}

/// ½(e + (−1)^j σ(e)).
pub fn eigcomp(e: &ConformalElement, j: u8) -> ConformalElement {
    let s = sigma_c(e);
    let signed = if j.is_multiple_of(2) { s } else { -s };
    (e + &signed).scaled(&half())
}

/// Canonical basis symbols of Ĉ_𝔤[σ].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TwistedSymbol {
    /// ((x⊗t₂ⁿ)^{(j)})(q) for x in the six canonical families.
    Eigen {
        x: Sp4Basis,
        n: i64,
        j: u8,
        q: Half,
    },
    K2 {
        m: i64,
    },
    TK1 {
        s: i64,
        m: i64,
    },
    /// k₁(−1)
    K1,
}

pub type TwistedElement = LinComb<TwistedSymbol>;

/// Families kept in the twisted basis, with the eigencomponents they carry.
pub fn canonical_family(x: Sp4Basis) -> Option<&'static [u8]> {
    use Sp4Basis::*;
    match x {
        E13 | E31 | H1 | E14pE23 => Some(&[0, 1]),
        E12mE43 | E21mE34 => Some(&[0]),
        _ => None,
    }
}

impl TwistedSymbol {
    pub fn new_eigen(x: Sp4Basis, n: i64, j: u8, q: Half) -> Result<Self, TwistError> {
        let s = TwistedSymbol::Eigen { x, n, j, q };
        if q.parity() != j {
            return Err(TwistError::IndexParity { j, q });
        }
        match canonical_family(x) {
            Some(js) if js.contains(&j) => Ok(s),
            _ => Err(TwistError::NonCanonical(s.to_string())),
        }
    }

    pub fn elem(self) -> TwistedElement {
        LinComb::basis(self)
    }

    pub fn index(self) -> Half {
        match self {
            TwistedSymbol::Eigen { q, .. } => q,
            TwistedSymbol::K2 { m } | TwistedSymbol::TK1 { m, .. } => Half::int(m),
            TwistedSymbol::K1 => Half::int(-1),
        }
    }

    /// The conformal element a ∈ C_𝔤^{(j)} and index q with self = a(q).
    pub fn expand(self) -> (ConformalElement, Half) {
        match self {
            TwistedSymbol::Eigen { x, n, j, q } => (eigcomp(&lp(x, n), j), q),
            TwistedSymbol::K2 { m } => (gen_elem(Generator::K2), Half::int(m)),
            TwistedSymbol::TK1 { s, m } => (gen_elem(Generator::TK1 { s }), Half::int(m)),
            TwistedSymbol::K1 => (ConformalSymbol::K1.elem(), Half::int(-1)),
        }
    }
}

impl fmt::Display for TwistedSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwistedSymbol::Eigen { x, n, j, q } => write!(f, "tw({x},{n},{j})({q})"),
            TwistedSymbol::K2 { m } => write!(f, "k2({m})"),
            TwistedSymbol::TK1 { s, m } => write!(f, "tk1({s})({m})"),
            TwistedSymbol::K1 => f.write_str("K1c"),
        }
    }
}

/// (g)^{(j)}(q) for a generator g, rewritten in the canonical basis via
/// p^{(j)} = (−1)^j (σp)^{(j)}.
fn gen_eigen(g: Generator, j: u8, q: Half) -> TwistedElement {
    use Sp4Basis::*;
    debug_assert_eq!(q.parity(), j);
    let sign = if j == 0 { 1 } else { -1 };
    let eigen = |x, n| TwistedSymbol::Eigen { x, n, j, q }.elem();
    match g {
        Generator::K2 if j == 0 => TwistedSymbol::K2 { m: q.0 / 2 }.elem(),
        Generator::TK1 { s } if j == 0 => TwistedSymbol::TK1 { s, m: q.0 / 2 }.elem(),
        Generator::K2 | Generator::TK1 { .. } => TwistedElement::zero(),
        Generator::Loop { x, n } => match x {
            E13 | E31 | H1 | E14pE23 => eigen(x, n),
            E12mE43 | E21mE34 if j == 0 => eigen(x, n),
            E12mE43 | E21mE34 => TwistedElement::zero(),
            E42 => eigen(E13, n - 1).scaled(&int(sign)),
            E24 => eigen(E31, n + 1).scaled(&int(sign)),
            E41pE32 => eigen(E14pE23, n - 1).scaled(&int(-sign)),
            H2 => {
                let mut out = eigen(H1, n).scaled(&int(-sign));
                if j == 0 {
                    let c = cartan_correction(n);
                    for (s, k) in c.iter() {
                        out.add_scaled(&reduce_symbol(*s, 0, q), k);
                    }
                }
                out
            }
        },
    }
}

/// Component of a conformal symbol at index q (eigencomponent j = parity of q),
/// peeling D-powers by (∂a)(q) = −q·a(q−1).
fn reduce_symbol(s: ConformalSymbol, j: u8, q: Half) -> TwistedElement {
    match s {
        ConformalSymbol::K1 if j == 0 && q == Half::int(-1) => TwistedSymbol::K1.elem(),
        ConformalSymbol::K1 => TwistedElement::zero(),
        ConformalSymbol::D { power, gen } => {
            let mut c = if power % 2 == 0 { Rational::from_int(1) } else { Rational::from_int(-1) };
            for k in 0..power as i64 {
                c = &c * &(q - Half::int(k)).to_rational();
            }
            if c == Rational::from_int(0) {
                return TwistedElement::zero();
            }
            gen_eigen(gen, j, q - Half::int(power as i64)).scaled_rat(&c)
        }
    }
}

/// The class of a^{(j)}(q) in Ĉ_𝔤[σ], j being the parity of q.
pub fn twisted_reduce(a: &ConformalElement, q: Half) -> Result<TwistedElement, TwistError> {
    let j = q.parity();
    if j == 1 && !a.is_zero() && a.symbols().all(|s| s.is_central()) {
        return Err(TwistError::ParityMismatch(q));
    }
    Ok(a.flat_map(|s| reduce_symbol(*s, j, q)))
}

/// [a(q), b(q′)] = Σᵢ binom(q,i)·(aᵢb)(q+q′−i).
pub fn twisted_bracket_symbols(a: TwistedSymbol, b: TwistedSymbol) -> TwistedElement {
    let ((ea, qa), (eb, qb)) = (a.expand(), b.expand());
    let mut out = TwistedElement::zero();
    for i in 0..=product_bound(&ea, &eb) {
        let p = nth_product(&ea, i, &eb);
        if p.is_zero() {
            continue;
        }
        let c = binom(&qa.to_rational(), i);
        let r = twisted_reduce(&p, qa + qb - Half::int(i as i64)).expect("products respect the eigen-grading");
        out.add_scaled(&r, &c.into());
    }
    out
}

pub fn twisted_bracket(u: &TwistedElement, v: &TwistedElement) -> TwistedElement {
    u.bilinear(v, |a, b| twisted_bracket_symbols(*a, *b))
}

/// deg a(q) = n − 1 − q for a ∈ C_𝔤(n).
pub fn twisted_grading(s: TwistedSymbol) -> Half {
    match s {
        TwistedSymbol::Eigen { q, .. } => -q,
        TwistedSymbol::K2 { m } => Half::int(-m),
        TwistedSymbol::TK1 { m, .. } => Half::int(-1 - m),
        TwistedSymbol::K1 => Half(0),
    }
}

/// Splits a coordinate k as 2m + j with j ∈ {0,1}.
fn split(k: i64) -> (i64, u8) {
    (k.div_euclid(2), k.rem_euclid(2) as u8)
}

pub fn phi_symbol(s: TkkSymbol) -> TwistedElement {
    use Sp4Basis::*;
    let (_, j) = split(s.point.m);
    let (n, k) = split(s.point.n);
    let q = Half(s.point.m);
    let eig = |x, n, j| TwistedSymbol::Eigen { x, n, j, q }.elem();
    let i = GaussRational::i();
    match (s.kind, k) {
        (TkkKind::XPlus, 0) => eig(E13, n, j).scaled(&int(2)),
        (TkkKind::XPlus, _) => eig(E12mE43, n + 1, 0).scaled(&i),
        (TkkKind::XMinus, 0) => eig(E31, n, j).scaled(&int(2)),
        (TkkKind::XMinus, _) => eig(E21mE34, n, 0).scaled(&-i),
        (TkkKind::H, 0) => eig(H1, n, j).scaled(&int(2)),
        (TkkKind::H, _) => eig(E14pE23, n, j).scaled(&(&i * &int(2))),
        (TkkKind::K1, _) => phi_central(1, s.point),
        (TkkKind::K2, _) => phi_central(2, s.point),
    }
}

/// φ on Cᵢ(2m,2n) read directly from the defining table, canonical or not.
pub fn phi_central(i: u8, p: LatticePoint) -> TwistedElement {
    assert_eq!(p.stratum(), Stratum::S0, "central symbols live on 2ℤ²");
    let (m, n) = (p.m / 2, p.n / 2);
    let tk1 = |s: i64, m: i64| {
        if s == 0 {
            if m == -1 {
                TwistedSymbol::K1.elem()
            } else {
                TwistedElement::zero()
            }
        } else {
            TwistedSymbol::TK1 { s, m }.elem()
        }
    };
    match (i, n) {
        (1, _) => tk1(n, m - 1).scaled(&half()),
        (2, 0) => TwistedSymbol::K2 { m }.elem().scaled(&half()),
        (2, s) => tk1(s, m - 1).scaled_rat(&Rational::new(-m, 2 * s)),
        _ => panic!("central index must be 1 or 2"),
    }
}

pub fn phi(u: &TkkElement) -> TwistedElement {
    u.flat_map(|s| phi_symbol(*s))
}

pub fn phi_inv_symbol(s: TwistedSymbol) -> TkkElement {
    use Sp4Basis::*;
    let i = GaussRational::i();
    let at = |kind, m: i64, n: i64| TkkSymbol { kind, point: LatticePoint::new(m, n) }.elem();
    match s {
        TwistedSymbol::Eigen { x, n, q, .. } => match x {
            E13 => at(TkkKind::XPlus, q.0, 2 * n).scaled(&half()),
            E31 => at(TkkKind::XMinus, q.0, 2 * n).scaled(&half()),
            E12mE43 => at(TkkKind::XPlus, q.0, 2 * n - 1).scaled(&-i),
            E21mE34 => at(TkkKind::XMinus, q.0, 2 * n + 1).scaled(&i),
            H1 => at(TkkKind::H, q.0, 2 * n).scaled(&half()),
            E14pE23 => at(TkkKind::H, q.0, 2 * n + 1).scaled(&(&i * &GaussRational::ratio(-1, 2))),
            _ => panic!("non-canonical twisted family {x}"),
        },
        TwistedSymbol::K2 { m } => at(TkkKind::K2, 2 * m, 0).scaled(&int(2)),
        TwistedSymbol::TK1 { s, m } => at(TkkKind::K1, 2 * m + 2, 2 * s).scaled(&int(2)),
        TwistedSymbol::K1 => at(TkkKind::K1, 0, 0).scaled(&int(2)),
    }
}

pub fn phi_inv(v: &TwistedElement) -> TkkElement {
    v.flat_map(|s| phi_inv_symbol(*s))
}

/// φ⁻¹(a^{(r)}(m + r/2)): the coefficient of the twisted field of a generator
/// read through the TKK dictionary.
pub fn field_coeff(g: Generator, r: u8, m: i64) -> Result<TkkElement, TwistError> {
    let a = eigcomp(&gen_elem(g), r);
    Ok(phi_inv(&twisted_reduce(&a, Half(2 * m + r as i64))?))
}

/// The proof case a basis pair of ĝ(𝒥) falls into when checking that φ preserves
/// (R1)–(R4); mirrored pairs are classified by antisymmetry.
pub fn phi_subcase(a: TkkSymbol, b: TkkSymbol) -> &'static str {
    use TkkKind::*;
    if a.is_central() || b.is_central() {
        return "R4 centrality";
    }
    let (r, t) = (a.point, b.point);
    match (a.kind, b.kind) {
        (H, H) => match (r.in_s(), t.in_s()) {
            (false, true) if t.stratum() == Stratum::S2 => "R1(i) subcase 2",
            (false, true) => "R1(i) subcase 1",
            (true, false) if r.stratum() == Stratum::S2 => "R1(i) subcase 2",
            (true, false) => "R1(i) subcase 1",
            (false, false) => "R1(ii)",
            (true, true) if (r + t).in_s() => "R1(iii)",
            (true, true) => "R1(iv)",
        },
        (H, _) | (_, H) => {
            let (hp, xp) = if a.kind == H { (r, t) } else { (t, r) };
            match (hp.in_s(), xp.stratum()) {
                (true, _) => "R2(i)",
                (false, Stratum::S2) => "R2(ii) subcase 2",
                (false, _) => "R2(ii) subcase 1",
            }
        }
        (XPlus, XPlus) | (XMinus, XMinus) => "R3 first identity",
        _ => {
            let (pp, pm) = if a.kind == XPlus { (r, t) } else { (t, r) };
            match (pp.stratum(), pm.stratum()) {
                _ if (pp + pm).in_s() => "R3(ii)",
                (Stratum::S1, _) => "R3(i) subcase 1",
                _ => "R3(i) subcase 2",
            }
        }
    }
}

/// Every proof subcase label, in report order.
pub const PHI_SUBCASES: [&str; 12] = [
    "R1(i) subcase 1",
    "R1(i) subcase 2",
    "R1(ii)",
    "R1(iii)",
    "R1(iv)",
    "R2(i)",
    "R2(ii) subcase 1",
    "R2(ii) subcase 2",
    "R3 first identity",
    "R3(i) subcase 1",
    "R3(i) subcase 2",
    "R3(ii)",
];

/// Twisted basis symbols with |n| ≤ r and |index| ≤ r.
pub fn basis_window(r: i64) -> Vec<TwistedSymbol> {
    let mut out = vec![TwistedSymbol::K1];
    for q2 in -2 * r..=2 * r {
        let q = Half(q2);
        if let Some(m) = q.to_int() {
            out.push(TwistedSymbol::K2 { m });
        }
        for n in -r..=r {
            if let (Some(m), true) = (q.to_int(), n != 0) {
                out.push(TwistedSymbol::TK1 { s: n, m });
            }
            for x in Sp4Basis::ALL {
                if let Ok(s) = TwistedSymbol::new_eigen(x, n, q.parity(), q) {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// σ̂(a(m)) = σ(a)(m) on Ĉ_𝔤.
pub fn sigma_hat(s: AffineSymbol) -> AffineElement {
    match s {
        AffineSymbol::Gen { gen, m } => reduce_affine_elem(&sigma_gen(gen), m),
        AffineSymbol::K1 => s.elem(),
    }
}

/// i_𝔤σ̂i_𝔤⁻¹ on a toroidal symbol.
pub fn sigma_on_t(s: ToroidalSymbol) -> ToroidalElement {
    i_g(&i_g_inv(&s.elem()).flat_map(|a| sigma_hat(*a)))
}

/// The explicit action of σ on 𝔱: x⊗t₁^m t₂^n goes to its partner with t₂-degree
/// shifted, the Cartan elements swap up to sign and pick up t₁^m t₂^n k₂, and
/// 𝒦 is fixed.
pub fn sigma_t_table(s: ToroidalSymbol) -> ToroidalElement {
    use Sp4Basis::*;
    let ToroidalSymbol::Loop { x, m1: m, m2: n } = s else {
        return s.elem();
    };
    let cart = |y| &(-loop_elem(y, m, n)) + &canonicalize_k(m, n, Which::K2);
    match x {
        E12mE43 | E21mE34 => s.elem(),
        E14pE23 => -loop_elem(E41pE32, m, n + 1),
        E41pE32 => -loop_elem(E14pE23, m, n - 1),
        H1 => cart(H2),
        H2 => cart(H1),
        E13 => loop_elem(E42, m, n + 1),
        E24 => loop_elem(E31, m, n + 1),
        E31 => loop_elem(E24, m, n - 1),
        E42 => loop_elem(E13, m, n - 1),
    }
}

/// Independent check that R4 is respected: φ kills (υ·e₁)C₁(υ) + (υ·e₂)C₂(υ).
pub fn phi_kills_central_relation(p: LatticePoint) -> bool {
    let mut r = phi_central(1, p).scaled(&int(p.m));
    r.add_scaled(&phi_central(2, p), &int(p.n));
    r.is_zero() && phi(&tkk::canonicalize_central(2, p).expect("even point")) == phi_central(2, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conformal::affine_bracket_symbols;
    use Sp4Basis::*;

    fn g(x: Sp4Basis, n: i64) -> Generator {
        Generator::Loop { x, n }
    }

    #[test]
    fn sigma_examples() {
        assert_eq!(sigma_c(&lp(E13, 0)), lp(E42, 1));
        assert_eq!(sigma_c(&lp(H1, 0)), &(-lp(H2, 0)) + &gen_elem(Generator::K2));
        let d = ConformalSymbol::D { power: 1, gen: Generator::TK1 { s: 3 } }.elem();
        assert_eq!(sigma_c(&lp(H1, 3)), &(-lp(H2, 3)) + &d.scaled(&GaussRational::ratio(1, 3)));
        assert_eq!(sigma_c(&ConformalSymbol::K1.elem()), ConformalSymbol::K1.elem());
    }

    #[test]
    fn eigcomp_examples() {
        assert_eq!(eigcomp(&lp(E13, 0), 0), (&lp(E13, 0) + &lp(E42, 1)).scaled(&half()));
        assert!(eigcomp(&lp(E12mE43, 4), 1).is_zero());
        assert!(eigcomp(&gen_elem(Generator::K2), 1).is_zero());
        for gen in crate::conformal::generator_window(2) {
            let e = gen_elem(gen);
            let (e0, e1) = (eigcomp(&e, 0), eigcomp(&e, 1));
            assert_eq!(&e0 + &e1, e);
            assert_eq!(sigma_c(&e0), e0);
            assert_eq!(sigma_c(&e1), -e1.clone());
        }
    }

    #[test]
    fn reduce_examples() {
        let q = Half(3);
        let r = twisted_reduce(&eigcomp(&lp(E42, 2), 1), q).unwrap();
        assert_eq!(r, TwistedSymbol::Eigen { x: E13, n: 1, j: 1, q }.elem().scaled(&int(-1)));
        assert_eq!(twisted_reduce(&ConformalSymbol::K1.elem(), Half(3)), Err(TwistError::ParityMismatch(Half(3))));
        let h = twisted_reduce(&eigcomp(&lp(H1, 0), 1), Half(1)).unwrap();
        assert_eq!(h, TwistedSymbol::Eigen { x: H1, n: 0, j: 1, q: Half(1) }.elem());
    }

    #[test]
    fn bracket_examples() {
        let a = TwistedSymbol::Eigen { x: E14pE23, n: 0, j: 1, q: Half(1) };
        let b = TwistedSymbol::Eigen { x: H1, n: 0, j: 0, q: Half(0) };
        assert!(twisted_bracket_symbols(a, b).is_zero());
        assert!(twisted_bracket_symbols(TwistedSymbol::K1, b).is_zero());
        // cross-check against φ of the corresponding (R3) bracket
        let xp = TwistedSymbol::Eigen { x: E13, n: 0, j: 1, q: Half(1) };
        let xm = TwistedSymbol::Eigen { x: E31, n: 0, j: 1, q: Half(-1) };
        let lhs = twisted_bracket_symbols(xp, xm).scaled(&int(4));
        let p = |m, n| LatticePoint::new(m, n);
        let rhs = phi(&tkk::tkk_bracket(&tkk::x_plus(p(1, 0)), &tkk::x_minus(p(-1, 0))));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn grading_examples() {
        let s = TwistedSymbol::Eigen { x: E13, n: 0, j: 1, q: Half(1) };
        assert_eq!(twisted_grading(s), Half(-1));
        assert_eq!(twisted_grading(TwistedSymbol::K2 { m: 0 }), Half(0));
        assert_eq!(twisted_grading(TwistedSymbol::TK1 { s: 3, m: -1 }), Half(0));
    }

    #[test]
    fn phi_examples_and_inverse() {
        let p = |m, n| LatticePoint::new(m, n);
        let i = GaussRational::i();
        assert_eq!(
            phi(&tkk::x_plus(p(0, 0))),
            TwistedSymbol::Eigen { x: E13, n: 0, j: 0, q: Half(0) }.elem().scaled(&int(2))
        );
        assert_eq!(
            phi(&tkk::x_plus(p(2, 3))),
            TwistedSymbol::Eigen { x: E12mE43, n: 2, j: 0, q: Half(2) }.elem().scaled(&i)
        );
        assert_eq!(
            phi(&tkk::h(p(3, 1))),
            TwistedSymbol::Eigen { x: E14pE23, n: 0, j: 1, q: Half(3) }.elem().scaled(&(&i * &int(2)))
        );
        let c2 = tkk::canonicalize_central(2, p(2, 4)).unwrap();
        assert_eq!(phi(&c2), TwistedSymbol::TK1 { s: 2, m: 0 }.elem().scaled(&GaussRational::ratio(-1, 4)));
        let c1 = tkk::canonicalize_central(1, p(2, 4)).unwrap();
        assert_eq!(phi(&c1), TwistedSymbol::TK1 { s: 2, m: 0 }.elem().scaled(&half()));
        for s in tkk::basis_window(3) {
            assert_eq!(phi_inv(&phi_symbol(s)), s.elem(), "{s}");
            assert_eq!(phi_symbol(s).len(), 1);
        }
        for s in basis_window(3) {
            assert_eq!(phi(&phi_inv_symbol(s)), s.elem(), "{s}");
        }
        for m in -3..=3 {
            for n in -3..=3 {
                assert!(phi_kills_central_relation(p(2 * m, 2 * n)));
            }
        }
    }

    #[test]
    fn field_dictionary() {
        let p = |m, n| LatticePoint::new(m, n);
        for m in -3..=3 {
            for n in -3..=3 {
                for r in 0..2u8 {
                    let h = GaussRational::ratio(1, 2);
                    let k = 2 * m + r as i64;
                    assert_eq!(field_coeff(g(E13, n), r, m).unwrap(), tkk::x_plus(p(k, 2 * n)).scaled(&h));
                    let sign = if r == 0 { 1 } else { -1 };
                    let want = tkk::x_minus(p(k, 2 * n + 2)).scaled(&GaussRational::ratio(sign, 2));
                    assert_eq!(field_coeff(g(E24, n), r, m).unwrap(), want);
                    let want = tkk::x_plus(p(k, 2 * n - 2)).scaled(&GaussRational::ratio(sign, 2));
                    assert_eq!(field_coeff(g(E42, n), r, m).unwrap(), want);
                }
                assert!(field_coeff(g(E12mE43, n), 1, m).unwrap().is_zero());
            }
        }
    }

    /// i_𝔤σ̂i_𝔤⁻¹ against the explicit table on 𝔱.
    #[test]
    fn induced_sigma_on_t() {
        for s in crate::toroidal::basis_window(3) {
            assert_eq!(sigma_on_t(s), sigma_t_table(s), "{s}");
        }
        // σ̂ is an automorphism of Ĉ_𝔤
        let w = crate::conformal::affine_window(1);
        for a in &w {
            for b in &w {
                let lhs = affine_bracket_symbols(*a, *b).flat_map(|t| sigma_hat(*t));
                let rhs = crate::conformal::affine_bracket(&sigma_hat(*a), &sigma_hat(*b));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn phi_preserves_brackets_small_window() {
        let basis = tkk::basis_window(1);
        for &a in &basis {
            for &b in &basis {
                let lhs = phi(&tkk::bracket_symbols(a, b));
                let rhs = twisted_bracket(&phi_symbol(a), &phi_symbol(b));
                assert_eq!(lhs, rhs, "[{a}, {b}] ({})", phi_subcase(a, b));
            }
        }
    }
}
