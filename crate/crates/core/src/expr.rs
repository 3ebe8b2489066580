//! Text syntax for elements of every algebra in the crate.
//!
//! `sum := ["+"|"-"] term (("+"|"-") term)*`, `term := [scalar "*"] symbol`,
//! `scalar := rational ["I"] | "(" rational ("+"|"-") rational "I" ")"`.
//! Symbols are the printed forms of each algebra's basis symbols, so
//! `parse(print(e)) = e` for every canonical element.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::conformal::{i_g, i_g_inv, AffineElement, AffineSymbol, ConformalElement, ConformalSymbol, Generator};
use crate::lattice::LatticePoint;
use crate::lincomb::LinComb;
use crate::scalars::{GaussRational, Rational};
use crate::sp4::Sp4Basis;
use crate::tkk::{self, canonicalize_central, TkkElement, TkkKind};
use crate::toroidal::{toroidal_bracket, ToroidalElement, ToroidalSymbol};
use crate::twisted::{phi, phi_inv, sigma_c, sigma_hat, twisted_bracket, Half, TwistedElement, TwistedSymbol};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at column {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("domain error at column {pos}: {msg}")]
    Domain { pos: usize, msg: String },
    #[error("algebra mismatch: {0}")]
    Mismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Algebra {
    Tkk,
    Toroidal,
    Conformal,
    Affine,
    Twisted,
}

impl Algebra {
    pub const ALL: [Algebra; 5] =
        [Algebra::Tkk, Algebra::Toroidal, Algebra::Conformal, Algebra::Affine, Algebra::Twisted];

    pub fn name(self) -> &'static str {
        match self {
            Algebra::Tkk => "tkk",
            Algebra::Toroidal => "toroidal",
            Algebra::Conformal => "conformal",
            Algebra::Affine => "affine",
            Algebra::Twisted => "twisted",
        }
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algebra {
    type Err = ExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algebra::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| ExprError::Mismatch(format!("unknown algebra '{s}'")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Element {
    Tkk(TkkElement),
    Toroidal(ToroidalElement),
    Conformal(ConformalElement),
    Affine(AffineElement),
    Twisted(TwistedElement),
}

impl Element {
    pub fn algebra(&self) -> Algebra {
        match self {
            Element::Tkk(_) => Algebra::Tkk,
            Element::Toroidal(_) => Algebra::Toroidal,
            Element::Conformal(_) => Algebra::Conformal,
            Element::Affine(_) => Algebra::Affine,
            Element::Twisted(_) => Algebra::Twisted,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Element::Tkk(e) => e.is_zero(),
            Element::Toroidal(e) => e.is_zero(),
            Element::Conformal(e) => e.is_zero(),
            Element::Affine(e) => e.is_zero(),
            Element::Twisted(e) => e.is_zero(),
        }
    }

    /// The Lie bracket of the ambient algebra. C_𝔤 has n-products rather than a
    /// bracket and is rejected.
    pub fn bracket(&self, other: &Element) -> Result<Element, ExprError> {
        Ok(match (self, other) {
            (Element::Tkk(a), Element::Tkk(b)) => Element::Tkk(tkk::tkk_bracket(a, b)),
            (Element::Toroidal(a), Element::Toroidal(b)) => Element::Toroidal(toroidal_bracket(a, b)),
            (Element::Affine(a), Element::Affine(b)) => Element::Affine(crate::conformal::affine_bracket(a, b)),
            (Element::Twisted(a), Element::Twisted(b)) => Element::Twisted(twisted_bracket(a, b)),
            (Element::Conformal(_), Element::Conformal(_)) => {
                return Err(ExprError::Unsupported("the conformal algebra has n-products, not a Lie bracket".into()))
            }
            (a, b) => return Err(ExprError::Mismatch(format!("cannot bracket {} with {}", a.algebra(), b.algebra()))),
        })
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Tkk(e) => e.fmt(f),
            Element::Toroidal(e) => e.fmt(f),
            Element::Conformal(e) => e.fmt(f),
            Element::Affine(e) => e.fmt(f),
            Element::Twisted(e) => e.fmt(f),
        }
    }
}

/// A parsed symbol before it is placed in an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Raw {
    Tkk(TkkKind, i64, i64),
    /// x⊗t₁^a t₂^b (toroidal) or x⊗t₂^b (conformal generator).
    Sp4 {
        x: Sp4Basis,
        t1: Option<i64>,
        t2: i64,
    },
    AffLoop {
        x: Sp4Basis,
        n: i64,
        m: i64,
    },
    Ka(i64, i64),
    KbAt(i64),
    /// `k1`: toroidal k₁ or conformal k₁.
    K1,
    K2Bare,
    K2At(i64),
    Tk1Bare(i64),
    Tk1At(i64, i64),
    D(u32, Box<Raw>),
    K1c,
    Tw {
        x: Sp4Basis,
        n: i64,
        j: u8,
        q: Half,
    },
}

impl Raw {
    fn algebras(&self) -> &'static [Algebra] {
        use Algebra::*;
        match self {
            Raw::Tkk(..) => &[Tkk],
            Raw::Sp4 { t1: Some(_), .. } | Raw::Ka(..) | Raw::KbAt(_) => &[Toroidal],
            Raw::Sp4 { t1: None, .. } | Raw::K2Bare | Raw::Tk1Bare(_) | Raw::D(..) => &[Conformal],
            Raw::K1 => &[Toroidal, Conformal],
            Raw::AffLoop { .. } => &[Affine],
            Raw::K2At(_) | Raw::Tk1At(..) | Raw::K1c => &[Affine, Twisted],
            Raw::Tw { .. } => &[Twisted],
        }
    }
}

struct Term {
    coeff: GaussRational,
    sym: Raw,
    pos: usize,
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(text: &str) -> Self {
        Cursor { chars: text.chars().collect(), pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax { pos: self.pos + 1, msg: msg.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn peek_at(&self, k: usize) -> Option<char> {
        self.chars.get(self.pos + k).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn at_end(&self) -> bool {
        self.pos >= self.chars.len()
    }

    fn looking_at(&self, s: &str) -> bool {
        s.chars().enumerate().all(|(k, c)| self.peek_at(k) == Some(c))
    }

    fn eat_str(&mut self, s: &str) -> bool {
        let ok = self.looking_at(s);
        if ok {
            self.pos += s.chars().count();
        }
        ok
    }

    fn expect(&mut self, s: &str) -> Result<(), ExprError> {
        self.skip_ws();
        if self.eat_str(s) {
            Ok(())
        } else {
            self.err(format!("expected '{s}'"))
        }
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn int(&mut self) -> Result<i64, ExprError> {
        self.skip_ws();
        let start = self.pos;
        let neg = match self.peek() {
            Some('-') => {
                self.pos += 1;
                true
            }
            Some('+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let d = self.digits();
        if d.is_empty() {
            self.pos = start;
            return self.err("expected an integer");
        }
        match d.parse::<i64>() {
            Ok(v) => Ok(if neg { -v } else { v }),
            Err(_) => {
                self.pos = start;
                self.err("integer out of range")
            }
        }
    }

    /// digits ["/" digits], without sign.
    fn rational(&mut self) -> Result<Rational, ExprError> {
        let start = self.pos;
        let mut s = self.digits();
        if s.is_empty() {
            return self.err("expected a number");
        }
        if self.peek() == Some('/') {
            self.pos += 1;
            let d = self.digits();
            if d.is_empty() {
                return self.err("expected a denominator");
            }
            s = format!("{s}/{d}");
        }
        s.parse::<Rational>().map_err(|e| ExprError::Syntax { pos: start + 1, msg: e.to_string() })
    }

    /// A scalar followed by `*`.
    fn scalar(&mut self) -> Result<GaussRational, ExprError> {
        let c = if self.eat_str("(") {
            self.skip_ws();
            let neg = self.eat_str("-") || {
                self.eat_str("+");
                false
            };
            self.skip_ws();
            let mut re = self.rational()?;
            if neg {
                re = -re;
            }
            self.skip_ws();
            let sign = match self.peek() {
                Some('+') => 1,
                Some('-') => -1,
                _ => return self.err("expected '+' or '-' in complex scalar"),
            };
            self.pos += 1;
            self.skip_ws();
            let im = self.rational()?;
            self.expect("I")?;
            self.expect(")")?;
            GaussRational::new(re, if sign < 0 { -im } else { im })
        } else {
            let r = self.rational()?;
            if self.eat_str("I") {
                GaussRational::new(Rational::from_int(0), r)
            } else {
                GaussRational::real(r)
            }
        };
        self.expect("*")?;
        Ok(c)
    }

    fn sp4(&mut self) -> Result<Sp4Basis, ExprError> {
        self.skip_ws();
        let unit = |c: &Cursor, k: usize| -> Option<String> {
            match (c.peek_at(k), c.peek_at(k + 1), c.peek_at(k + 2)) {
                (Some('E'), Some(a), Some(b)) if a.is_ascii_digit() && b.is_ascii_digit() => Some(format!("E{a}{b}")),
                _ => None,
            }
        };
        let Some(first) = unit(self, 0) else {
            return self.err("expected an sp4 basis name");
        };
        if let (Some(op @ ('+' | '-')), Some(second)) = (self.peek_at(3), unit(self, 4)) {
            if let Some(b) = Sp4Basis::from_name(&format!("{first}{op}{second}")) {
                self.pos += 7;
                return Ok(b);
            }
        }
        match Sp4Basis::from_name(&first) {
            Some(b) => {
                self.pos += 3;
                Ok(b)
            }
            None => self.err(format!("'{first}' is not an sp4 basis element")),
        }
    }

    fn half(&mut self) -> Result<Half, ExprError> {
        let k = self.int()?;
        if self.eat_str("/") {
            self.expect("2")?;
            Ok(Half(k))
        } else {
            Ok(Half::int(k))
        }
    }

    /// `x*t1^a*t2^b` or `x*t2^b`, after the basis name.
    fn loop_tail(&mut self, x: Sp4Basis) -> Result<Raw, ExprError> {
        self.expect("*")?;
        self.skip_ws();
        if self.eat_str("t1^") {
            let a = self.int()?;
            self.expect("*")?;
            self.expect("t2^")?;
            let b = self.int()?;
            Ok(Raw::Sp4 { x, t1: Some(a), t2: b })
        } else if self.eat_str("t2^") {
            Ok(Raw::Sp4 { x, t1: None, t2: self.int()? })
        } else {
            self.err("expected 't1^' or 't2^'")
        }
    }

    fn symbol(&mut self) -> Result<Raw, ExprError> {
        self.skip_ws();
        for (name, kind) in [
            ("x+(", TkkKind::XPlus),
            ("x-(", TkkKind::XMinus),
            ("h(", TkkKind::H),
            ("C1(", TkkKind::K1),
            ("C2(", TkkKind::K2),
        ] {
            if self.eat_str(name) {
                let m = self.int()?;
                self.expect(",")?;
                let n = self.int()?;
                self.expect(")")?;
                return Ok(Raw::Tkk(kind, m, n));
            }
        }
        if self.peek() == Some('E') {
            let x = self.sp4()?;
            return self.loop_tail(x);
        }
        if self.eat_str("tw(") {
            let x = self.sp4()?;
            self.expect(",")?;
            let n = self.int()?;
            self.expect(",")?;
            let jpos = self.pos;
            let j = self.int()?;
            if !(0..=1).contains(&j) {
                self.pos = jpos;
                return self.err("eigencomponent must be 0 or 1");
            }
            self.expect(")")?;
            self.expect("(")?;
            let q = self.half()?;
            self.expect(")")?;
            return Ok(Raw::Tw { x, n, j: j as u8, q });
        }
        if self.eat_str("tk1(") {
            let s = self.int()?;
            self.expect(")")?;
            if self.eat_str("(") {
                let m = self.int()?;
                self.expect(")")?;
                return Ok(Raw::Tk1At(s, m));
            }
            return Ok(Raw::Tk1Bare(s));
        }
        if self.eat_str("ka(") {
            let m = self.int()?;
            self.expect(",")?;
            let s = self.int()?;
            self.expect(")")?;
            return Ok(Raw::Ka(m, s));
        }
        if self.eat_str("k2@") {
            return Ok(Raw::KbAt(self.int()?));
        }
        if self.eat_str("k2(") {
            let m = self.int()?;
            self.expect(")")?;
            return Ok(Raw::K2At(m));
        }
        if self.eat_str("k2") {
            return Ok(Raw::K2Bare);
        }
        if self.eat_str("k1") {
            return Ok(Raw::K1);
        }
        if self.eat_str("K1c") {
            return Ok(Raw::K1c);
        }
        if self.eat_str("D^") {
            let start = self.pos;
            let p = self.digits();
            let p: u32 =
                p.parse().map_err(|_| ExprError::Syntax { pos: start + 1, msg: "expected a D power".into() })?;
            self.expect("(")?;
            let inner = self.symbol()?;
            if !matches!(inner, Raw::Sp4 { t1: None, .. } | Raw::K2Bare | Raw::Tk1Bare(_)) {
                self.pos = start;
                return self.err("D^p(...) takes a generator x*t2^n, k2 or tk1(s)");
            }
            self.expect(")")?;
            return Ok(Raw::D(p, Box::new(inner)));
        }
        if self.eat_str("(") {
            let x = self.sp4()?;
            self.expect("*")?;
            self.expect("t2^")?;
            let n = self.int()?;
            self.expect(")")?;
            self.expect("(")?;
            let m = self.int()?;
            self.expect(")")?;
            return Ok(Raw::AffLoop { x, n, m });
        }
        self.err("expected a basis symbol")
    }

    fn term(&mut self) -> Result<Term, ExprError> {
        self.skip_ws();
        let starts_scalar = match self.peek() {
            Some(c) if c.is_ascii_digit() => true,
            Some('(') => {
                let mut k = 1;
                while self.peek_at(k).is_some_and(char::is_whitespace) {
                    k += 1;
                }
                self.peek_at(k).is_some_and(|c| c.is_ascii_digit() || c == '-' || c == '+')
            }
            _ => false,
        };
        let coeff = if starts_scalar { self.scalar()? } else { GaussRational::from_int(1) };
        self.skip_ws();
        let pos = self.pos + 1;
        let sym = self.symbol()?;
        Ok(Term { coeff, sym, pos })
    }

    fn sum(&mut self) -> Result<Vec<Term>, ExprError> {
        self.skip_ws();
        if self.peek() == Some('0') && {
            let mut k = 1;
            while self.peek_at(k).is_some_and(char::is_whitespace) {
                k += 1;
            }
            self.peek_at(k).is_none()
        } {
            return Ok(Vec::new());
        }
        let mut terms = Vec::new();
        let mut negative = false;
        if self.eat_str("-") {
            negative = true;
        } else {
            self.eat_str("+");
        }
        loop {
            let mut t = self.term()?;
            if negative {
                t.coeff = -&t.coeff;
            }
            terms.push(t);
            self.skip_ws();
            if self.at_end() {
                return Ok(terms);
            }
            negative = match self.peek() {
                Some('+') => false,
                Some('-') => true,
                _ => return self.err("expected '+' or '-'"),
            };
            self.pos += 1;
        }
    }
}

fn domain<T>(pos: usize, msg: impl fmt::Display) -> Result<T, ExprError> {
    Err(ExprError::Domain { pos, msg: msg.to_string() })
}

fn nonzero_s(s: i64, pos: usize) -> Result<(), ExprError> {
    if s == 0 {
        domain(pos, "t2^s k1 needs s ≠ 0 (s = 0 is k1 itself)")
    } else {
        Ok(())
    }
}

fn conformal_gen(r: &Raw, pos: usize) -> Result<Generator, ExprError> {
    match *r {
        Raw::Sp4 { x, t1: None, t2 } => Ok(Generator::Loop { x, n: t2 }),
        Raw::K2Bare => Ok(Generator::K2),
        Raw::Tk1Bare(s) => {
            nonzero_s(s, pos)?;
            Ok(Generator::TK1 { s })
        }
        _ => unreachable!("checked by the parser"),
    }
}

fn to_tkk(r: &Raw, pos: usize) -> Result<TkkElement, ExprError> {
    let Raw::Tkk(kind, m, n) = *r else { unreachable!() };
    let p = LatticePoint::new(m, n);
    match kind {
        TkkKind::XPlus | TkkKind::XMinus if !p.in_s() => domain(pos, format!("{p} lies in S⊥, where x± vanishes")),
        TkkKind::XPlus => Ok(tkk::x_plus(p)),
        TkkKind::XMinus => Ok(tkk::x_minus(p)),
        TkkKind::H => Ok(tkk::h(p)),
        TkkKind::K1 => canonicalize_central(1, p).or_else(|e| domain(pos, e)),
        TkkKind::K2 => canonicalize_central(2, p).or_else(|e| domain(pos, e)),
    }
}

fn to_toroidal(r: &Raw, pos: usize) -> Result<ToroidalElement, ExprError> {
    Ok(match *r {
        Raw::Sp4 { x, t1: Some(m1), t2 } => ToroidalSymbol::Loop { x, m1, m2: t2 }.elem(),
        Raw::Ka(m, s) => {
            nonzero_s(s, pos)?;
            ToroidalSymbol::KA { m, s }.elem()
        }
        Raw::KbAt(m) => ToroidalSymbol::KB { m }.elem(),
        Raw::K1 => ToroidalSymbol::K1.elem(),
        _ => unreachable!(),
    })
}

fn to_conformal(r: &Raw, pos: usize) -> Result<ConformalElement, ExprError> {
    Ok(match r {
        Raw::K1 => ConformalSymbol::K1.elem(),
        Raw::D(power, inner) => ConformalSymbol::D { power: *power, gen: conformal_gen(inner, pos)? }.elem(),
        other => ConformalSymbol::gen(conformal_gen(other, pos)?).elem(),
    })
}

fn to_affine(r: &Raw, pos: usize) -> Result<AffineElement, ExprError> {
    let gen = |gen, m| AffineSymbol::Gen { gen, m }.elem();
    Ok(match *r {
        Raw::AffLoop { x, n, m } => gen(Generator::Loop { x, n }, m),
        Raw::K2At(m) => gen(Generator::K2, m),
        Raw::Tk1At(s, m) => {
            nonzero_s(s, pos)?;
            gen(Generator::TK1 { s }, m)
        }
        Raw::K1c => AffineSymbol::K1.elem(),
        _ => unreachable!(),
    })
}

fn to_twisted(r: &Raw, pos: usize) -> Result<TwistedElement, ExprError> {
    Ok(match *r {
        Raw::Tw { x, n, j, q } => TwistedSymbol::new_eigen(x, n, j, q).or_else(|e| domain(pos, e))?.elem(),
        Raw::K2At(m) => TwistedSymbol::K2 { m }.elem(),
        Raw::Tk1At(s, m) => {
            nonzero_s(s, pos)?;
            TwistedSymbol::TK1 { s, m }.elem()
        }
        Raw::K1c => TwistedSymbol::K1.elem(),
        _ => unreachable!(),
    })
}

fn assemble<S: Ord + Clone>(
    terms: &[Term],
    f: impl Fn(&Raw, usize) -> Result<LinComb<S>, ExprError>,
) -> Result<LinComb<S>, ExprError> {
    let mut out = LinComb::zero();
    for t in terms {
        out.add_scaled(&f(&t.sym, t.pos)?, &t.coeff);
    }
    Ok(out)
}

/// Parses `text` in the first of `candidates` that accepts every symbol.
pub fn parse_with(text: &str, candidates: &[Algebra]) -> Result<Element, ExprError> {
    let mut cur = Cursor::new(text);
    let terms = cur.sum()?;
    let alg =
        candidates.iter().copied().find(|a| terms.iter().all(|t| t.sym.algebras().contains(a))).ok_or_else(|| {
            let names: Vec<&str> = candidates.iter().map(|a| a.name()).collect();
            let bad = terms.iter().find(|t| !t.sym.algebras().iter().any(|a| candidates.contains(a)));
            match bad {
                Some(t) => ExprError::Mismatch(format!("symbol at column {} is not in {}", t.pos, names.join("/"))),
                None => ExprError::Mismatch(format!("symbols mix several algebras; expected {}", names.join("/"))),
            }
        })?;
    Ok(match alg {
        Algebra::Tkk => Element::Tkk(assemble(&terms, to_tkk)?),
        Algebra::Toroidal => Element::Toroidal(assemble(&terms, to_toroidal)?),
        Algebra::Conformal => Element::Conformal(assemble(&terms, to_conformal)?),
        Algebra::Affine => Element::Affine(assemble(&terms, to_affine)?),
        Algebra::Twisted => Element::Twisted(assemble(&terms, to_twisted)?),
    })
}

/// Parses an element, inferring its algebra from the symbols. Symbols shared by
/// several algebras resolve in the order tkk, toroidal, conformal, affine, twisted.
pub fn parse_element(text: &str) -> Result<Element, ExprError> {
    parse_with(text, &Algebra::ALL)
}

pub fn parse_in(alg: Algebra, text: &str) -> Result<Element, ExprError> {
    parse_with(text, &[alg])
}

pub fn eval_bracket(alg: Algebra, lhs: &str, rhs: &str) -> Result<Element, ExprError> {
    parse_in(alg, lhs)?.bracket(&parse_in(alg, rhs)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapName {
    Phi,
    PhiInv,
    Ig,
    IgInv,
    Sigma,
}

impl MapName {
    pub const ALL: [MapName; 5] = [MapName::Phi, MapName::PhiInv, MapName::Ig, MapName::IgInv, MapName::Sigma];

    pub fn name(self) -> &'static str {
        match self {
            MapName::Phi => "phi",
            MapName::PhiInv => "phi-inv",
            MapName::Ig => "ig",
            MapName::IgInv => "ig-inv",
            MapName::Sigma => "sigma",
        }
    }

    pub fn domain(self) -> &'static [Algebra] {
        match self {
            MapName::Phi => &[Algebra::Tkk],
            MapName::PhiInv => &[Algebra::Twisted],
            MapName::Ig => &[Algebra::Affine],
            MapName::IgInv => &[Algebra::Toroidal],
            MapName::Sigma => &[Algebra::Conformal, Algebra::Affine],
        }
    }
}

impl FromStr for MapName {
    type Err = ExprError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        MapName::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| ExprError::Mismatch(format!("unknown map '{s}'")))
    }
}

pub fn apply_map(map: MapName, text: &str) -> Result<Element, ExprError> {
    let e = parse_with(text, map.domain())?;
    Ok(match (map, e) {
        (MapName::Phi, Element::Tkk(u)) => Element::Twisted(phi(&u)),
        (MapName::PhiInv, Element::Twisted(v)) => Element::Tkk(phi_inv(&v)),
        (MapName::Ig, Element::Affine(u)) => Element::Toroidal(i_g(&u)),
        (MapName::IgInv, Element::Toroidal(v)) => Element::Affine(i_g_inv(&v)),
        (MapName::Sigma, Element::Conformal(c)) => Element::Conformal(sigma_c(&c)),
        (MapName::Sigma, Element::Affine(a)) => Element::Affine(a.flat_map(|s| sigma_hat(*s))),
        (m, e) => return Err(ExprError::Mismatch(format!("{} does not act on {}", m.name(), e.algebra()))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn show(r: Result<Element, ExprError>) -> String {
        r.unwrap().to_string()
    }

    #[test]
    fn tkk_parsing() {
        let e = parse_element("x+(1,0)").unwrap();
        assert_eq!(e.algebra(), Algebra::Tkk);
        assert_eq!(e.to_string(), "x+(1,0)");
        let e = parse_element("2*h(0,1) - (1/2+1I)*C1(2,4)").unwrap();
        let Element::Tkk(t) = &e else { panic!() };
        assert_eq!(t.len(), 2);
        assert_eq!(show(parse_element("C2(2,4)")), "-1/2*C1(2,4)");
    }

    #[test]
    fn error_kinds() {
        assert!(matches!(parse_element("x+(1,1)"), Err(ExprError::Domain { pos: 1, .. })));
        assert!(matches!(parse_element("h(0,1) + x-(3,5)"), Err(ExprError::Domain { pos: 10, .. })));
        assert!(matches!(parse_element("x+(1,0"), Err(ExprError::Syntax { pos: 7, .. })));
        assert!(matches!(parse_element("2*"), Err(ExprError::Syntax { pos: 3, .. })));
        assert!(matches!(parse_element("x+(1,0) h(0,0)"), Err(ExprError::Syntax { pos: 9, .. })));
        assert!(matches!(parse_element("C1(1,2)"), Err(ExprError::Domain { .. })));
        assert!(matches!(parse_element("x+(0,0) + k2(1)"), Err(ExprError::Mismatch(_))));
        assert!(matches!(parse_element("tw(E24,0,0)(0)"), Err(ExprError::Domain { .. })));
        assert!(matches!(parse_element("tw(E13,0,1)(0)"), Err(ExprError::Domain { .. })));
        assert!(matches!(parse_in(Algebra::Tkk, "k1"), Err(ExprError::Mismatch(_))));
    }

    #[test]
    fn brackets() {
        assert_eq!(show(eval_bracket(Algebra::Tkk, "x+(1,0)", "x-(0,1)")), "h(1,1)");
        assert_eq!(show(eval_bracket(Algebra::Tkk, "h(0,0)", "x+(0,0)")), "2*x+(0,0)");
        assert_eq!(show(eval_bracket(Algebra::Twisted, "tw(E14+E23,0,1)(1/2)", "tw(E11-E33,0,0)(0)")), "0");
        assert_eq!(show(eval_bracket(Algebra::Toroidal, "k1", "E13*t1^2*t2^0")), "0");
        assert_eq!(
            show(eval_bracket(Algebra::Toroidal, "E13*t1^2*t2^0", "E31*t1^-2*t2^0")),
            "E11-E33*t1^0*t2^0 + 2*k1"
        );
        assert!(matches!(eval_bracket(Algebra::Conformal, "k2", "k2"), Err(ExprError::Unsupported(_))));
    }

    #[test]
    fn maps() {
        assert_eq!(show(apply_map(MapName::Phi, "C1(2,4)")), "1/2*tk1(2)(0)");
        assert_eq!(show(apply_map(MapName::Sigma, "E13*t2^0")), "E42*t2^1");
        assert_eq!(show(apply_map(MapName::Ig, "k2(3)")), "k2@3");
        assert_eq!(show(apply_map(MapName::IgInv, "k2@3")), "k2(3)");
        assert!(matches!(apply_map(MapName::Phi, "k2@3"), Err(ExprError::Mismatch(_))));
    }

    #[test]
    fn round_trips() {
        for text in [
            "0",
            "x+(1,0) - x-(-2,3) + 1/3I*h(5,-1)",
            "(-1/2+3I)*C1(0,0) + C2(4,0)",
            "E11-E33*t1^0*t2^0 + 2*k1 - 3*ka(1,2) + k2@-4",
            "D^2(E14+E23*t2^-1) + k1 + tk1(3) - k2",
            "(E41+E32*t2^2)(-3) + tk1(-1)(4) + K1c",
            "tw(E13,1,1)(-3/2) + tw(E12-E43,0,0)(2) + k2(1) + tk1(2)(0) + K1c",
        ] {
            let e = parse_element(text).unwrap();
            let printed = e.to_string();
            let again = parse_with(&printed, &[e.algebra()]).unwrap();
            assert_eq!(again, e, "{text}");
            assert_eq!(again.to_string(), printed);
        }
    }
}
