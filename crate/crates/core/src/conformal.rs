//! The Lie conformal algebra C_𝔤 = ℂ[D]⊗𝔤 ⊕ ℂk₁ built on 𝔤 = sp₄⊗ℂ[t₂±¹] ⊕ ℂk₂ ⊕ Σ ℂt₂^s k₁,
//! its affinization Ĉ_𝔤, and the isomorphism i_𝔤 : Ĉ_𝔤 → 𝔱.

use std::fmt;

use crate::lincomb::LinComb;
use crate::scalars::{binom, GaussRational, Rational};
use crate::sp4::{bracket_basis, trace_basis, Sp4Basis};
use crate::toroidal::{ToroidalElement, ToroidalSymbol};

/// A generator of 𝔤: x⊗t₂ⁿ, k₂ or t₂^s k₁ (s ≠ 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    Loop { x: Sp4Basis, n: i64 },
    K2,
    TK1 { s: i64 },
}

impl Generator {
    pub fn is_central(self) -> bool {
        !matches!(self, Generator::Loop { .. })
    }

    /// Index k of the graded piece C_𝔤(k) containing D⁰⊗self.
    pub fn base_degree(self) -> i64 {
        match self {
            Generator::Loop { .. } | Generator::K2 => 1,
            Generator::TK1 { .. } => 0,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Loop { x, n } => write!(f, "{x}*t2^{n}"),
            Generator::K2 => f.write_str("k2"),
            Generator::TK1 { s } => write!(f, "tk1({s})"),
        }
    }
}

/// D^j⊗a, or the standalone k₁.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConformalSymbol {
    D { power: u32, gen: Generator },
    K1,
}

pub type ConformalElement = LinComb<ConformalSymbol>;

impl ConformalSymbol {
    pub fn gen(gen: Generator) -> Self {
        ConformalSymbol::D { power: 0, gen }
    }

    pub fn elem(self) -> ConformalElement {
        LinComb::basis(self)
    }

    pub fn is_central(self) -> bool {
        match self {
            ConformalSymbol::D { gen, .. } => gen.is_central(),
            ConformalSymbol::K1 => true,
        }
    }
}

impl fmt::Display for ConformalSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConformalSymbol::D { power: 0, gen } => write!(f, "{gen}"),
            ConformalSymbol::D { power, gen } => write!(f, "D^{power}({gen})"),
            ConformalSymbol::K1 => f.write_str("k1"),
        }
    }
}

pub fn gen_elem(g: Generator) -> ConformalElement {
    ConformalSymbol::gen(g).elem()
}

/// t₂^s k₁, reading s = 0 as the standalone k₁.
pub fn tk1(s: i64) -> ConformalElement {
    if s == 0 {
        ConformalSymbol::K1.elem()
    } else {
        gen_elem(Generator::TK1 { s })
    }
}

pub fn partial_symbol(s: ConformalSymbol) -> ConformalElement {
    match s {
        ConformalSymbol::D { power, gen } => ConformalSymbol::D { power: power + 1, gen }.elem(),
        ConformalSymbol::K1 => ConformalElement::zero(),
    }
}

pub fn partial(e: &ConformalElement) -> ConformalElement {
    e.flat_map(|s| partial_symbol(*s))
}

pub fn partial_pow(e: &ConformalElement, k: u32) -> ConformalElement {
    (0..k).fold(e.clone(), |acc, _| partial(&acc))
}

fn int(k: i64) -> GaussRational {
    GaussRational::from_int(k)
}

/// The n-product table on generators.
fn generator_product(a: Generator, n: u32, b: Generator) -> ConformalElement {
    let (Generator::Loop { x, n: m }, Generator::Loop { x: y, n: mp }) = (a, b) else {
        return ConformalElement::zero();
    };
    let total = m + mp;
    let tr = trace_basis(x, y);
    match n {
        0 => {
            let mut out = bracket_basis(x, y).flat_map(|z| gen_elem(Generator::Loop { x: *z, n: total }));
            if tr != 0 {
                if total != 0 {
                    let c = Rational::new(m * tr, total);
                    let d = ConformalSymbol::D { power: 1, gen: Generator::TK1 { s: total } }.elem();
                    out.add_scaled(&d, &c.into());
                } else {
                    out.add_scaled(&gen_elem(Generator::K2), &int(m * tr));
                }
            }
            out
        }
        1 => tk1(total).scaled(&int(tr)),
        _ => ConformalElement::zero(),
    }
}

/// a₍ₙ₎b on symbols, peeling D-powers by (∂a)ₙb = −n·a₍ₙ₋₁₎b and
/// aₙ(∂b) = ∂(aₙb) + n·a₍ₙ₋₁₎b.
pub fn product_symbols(a: ConformalSymbol, n: u32, b: ConformalSymbol) -> ConformalElement {
    let (ConformalSymbol::D { power: p, gen: g }, ConformalSymbol::D { power: q, gen: h }) = (a, b) else {
        return ConformalElement::zero();
    };
    if p > 0 {
        if n == 0 {
            return ConformalElement::zero();
        }
        let a1 = ConformalSymbol::D { power: p - 1, gen: g };
        return product_symbols(a1, n - 1, b).scaled(&int(-(n as i64)));
    }
    if q > 0 {
        let b1 = ConformalSymbol::D { power: q - 1, gen: h };
        let mut out = partial(&product_symbols(a, n, b1));
        if n > 0 {
            out.add_scaled(&product_symbols(a, n - 1, b1), &int(n as i64));
        }
        return out;
    }
    generator_product(g, n, h)
}

pub fn nth_product(a: &ConformalElement, n: u32, b: &ConformalElement) -> ConformalElement {
    a.bilinear(b, |x, y| product_symbols(*x, n, *y))
}

/// Largest n with a₍ₙ₎b possibly nonzero for symbols of these D-powers.
pub fn product_bound(a: &ConformalElement, b: &ConformalElement) -> u32 {
    let pow = |e: &ConformalElement| {
        e.symbols()
            .map(|s| match s {
                ConformalSymbol::D { power, .. } => *power,
                ConformalSymbol::K1 => 0,
            })
            .max()
            .unwrap_or(0)
    };
    1 + pow(a) + pow(b)
}

/// ℤ-degree: t₂ⁿk₁ has degree 0, D^{n−1}⊗a has degree n for a in the sp₄ part or k₂,
/// and D^n⊗t₂^s k₁ has degree n.
pub fn conformal_grading(s: ConformalSymbol) -> i64 {
    match s {
        ConformalSymbol::D { power, gen } => power as i64 + gen.base_degree(),
        ConformalSymbol::K1 => 0,
    }
}

/// A canonical symbol a(m) of Ĉ_𝔤, or k₁(−1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AffineSymbol {
    Gen { gen: Generator, m: i64 },
    K1,
}

pub type AffineElement = LinComb<AffineSymbol>;

impl AffineSymbol {
    pub fn elem(self) -> AffineElement {
        LinComb::basis(self)
    }

    pub fn is_central(self) -> bool {
        match self {
            AffineSymbol::Gen { gen, .. } => gen.is_central(),
            AffineSymbol::K1 => true,
        }
    }

    /// deg a(m′) = k − m′ − 1 for a ∈ C_𝔤(k).
    pub fn degree(self) -> i64 {
        match self {
            AffineSymbol::Gen { gen, m } => gen.base_degree() - m - 1,
            AffineSymbol::K1 => 0,
        }
    }
}

impl fmt::Display for AffineSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineSymbol::Gen { gen: g @ Generator::Loop { .. }, m } => write!(f, "({g})({m})"),
            AffineSymbol::Gen { gen, m } => write!(f, "{gen}({m})"),
            AffineSymbol::K1 => f.write_str("K1c"),
        }
    }
}

/// (D^j⊗a)(m) = (−1)^j m(m−1)⋯(m−j+1)·a(m−j); k₁(m) survives only at m = −1.
pub fn reduce_affine(s: ConformalSymbol, m: i64) -> AffineElement {
    match s {
        ConformalSymbol::K1 if m == -1 => AffineSymbol::K1.elem(),
        ConformalSymbol::K1 => AffineElement::zero(),
        ConformalSymbol::D { power, gen } => {
            let mut c: i64 = if power % 2 == 0 { 1 } else { -1 };
            for k in 0..power as i64 {
                c = c.checked_mul(m - k).expect("falling factorial overflow");
            }
            AffineSymbol::Gen { gen, m: m - power as i64 }.elem().scaled(&int(c))
        }
    }
}

pub fn reduce_affine_elem(e: &ConformalElement, m: i64) -> AffineElement {
    e.flat_map(|s| reduce_affine(*s, m))
}

/// a(m)-form of an affine symbol, as a conformal symbol plus index.
fn unaffine(s: AffineSymbol) -> (ConformalSymbol, i64) {
    match s {
        AffineSymbol::Gen { gen, m } => (ConformalSymbol::gen(gen), m),
        AffineSymbol::K1 => (ConformalSymbol::K1, -1),
    }
}

pub fn affine_bracket_symbols(a: AffineSymbol, b: AffineSymbol) -> AffineElement {
    let ((ca, m), (cb, n)) = (unaffine(a), unaffine(b));
    let (ea, eb) = (ca.elem(), cb.elem());
    let mut out = AffineElement::zero();
    for i in 0..=product_bound(&ea, &eb) {
        let p = nth_product(&ea, i, &eb);
        if p.is_zero() {
            continue;
        }
        let c = binom(&Rational::from_int(m), i);
        out.add_scaled(&reduce_affine_elem(&p, m + n - i as i64), &c.into());
    }
    out
}

pub fn affine_bracket(u: &AffineElement, v: &AffineElement) -> AffineElement {
    u.bilinear(v, |a, b| affine_bracket_symbols(*a, *b))
}

pub fn i_g_symbol(s: AffineSymbol) -> ToroidalSymbol {
    match s {
        AffineSymbol::Gen { gen: Generator::Loop { x, n }, m } => ToroidalSymbol::Loop { x, m1: m, m2: n },
        AffineSymbol::Gen { gen: Generator::K2, m } => ToroidalSymbol::KB { m },
        AffineSymbol::Gen { gen: Generator::TK1 { s }, m } => ToroidalSymbol::KA { m: m + 1, s },
        AffineSymbol::K1 => ToroidalSymbol::K1,
    }
}

pub fn i_g_inv_symbol(s: ToroidalSymbol) -> AffineSymbol {
    match s {
        ToroidalSymbol::Loop { x, m1, m2 } => AffineSymbol::Gen { gen: Generator::Loop { x, n: m2 }, m: m1 },
        ToroidalSymbol::KB { m } => AffineSymbol::Gen { gen: Generator::K2, m },
        ToroidalSymbol::KA { m, s } => AffineSymbol::Gen { gen: Generator::TK1 { s }, m: m - 1 },
        ToroidalSymbol::K1 => AffineSymbol::K1,
    }
}

pub fn i_g(u: &AffineElement) -> ToroidalElement {
    u.flat_map(|s| i_g_symbol(*s).elem())
}

pub fn i_g_inv(v: &ToroidalElement) -> AffineElement {
    v.flat_map(|s| i_g_inv_symbol(*s).elem())
}

/// Generators x⊗t₂ⁿ (|n| ≤ r), k₂ and t₂^s k₁ (0 < |s| ≤ r).
pub fn generator_window(r: i64) -> Vec<Generator> {
    let mut out = vec![Generator::K2];
    for n in -r..=r {
        if n != 0 {
            out.push(Generator::TK1 { s: n });
        }
        for x in Sp4Basis::ALL {
            out.push(Generator::Loop { x, n });
        }
    }
    out
}

/// Canonical Ĉ_𝔤 symbols with |m| ≤ r and |t₂-exponent| ≤ r.
pub fn affine_window(r: i64) -> Vec<AffineSymbol> {
    let mut out = vec![AffineSymbol::K1];
    for gen in generator_window(r) {
        for m in -r..=r {
            out.push(AffineSymbol::Gen { gen, m });
        }
    }
    out
}
