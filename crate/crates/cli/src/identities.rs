//! The individual identities checked by the suites. Each returns `Err(detail)`
//! on failure so that a suite and `reproduce` evaluate exactly the same thing.

use std::fmt::Display;

use tkk_core::conformal::{
    affine_bracket, conformal_grading, i_g, i_g_inv, i_g_inv_symbol, i_g_symbol, nth_product, partial, partial_pow,
    product_bound, AffineElement, AffineSymbol, ConformalElement, ConformalSymbol, Generator,
};
use tkk_core::lattice::LatticePoint;
use tkk_core::sp4::{bracket_basis, trace_basis, trace_form, Sp4Basis};
use tkk_core::tkk::{self, tkk_bracket, TkkElement, TkkSymbol};
use tkk_core::toroidal::{self, canonical_symbol, toroidal_bracket, toroidal_grading, ToroidalElement, ToroidalSymbol};
use tkk_core::twisted::{
    self, field_coeff, phi, phi_inv, phi_kills_central_relation, sigma_c, sigma_hat, sigma_on_t, sigma_t_table,
    twisted_grading, Half, TwistedSymbol,
};
use tkk_core::{binom, GaussRational, LinComb, Rational};

pub type Outcome = Result<(), String>;

pub fn equal<S: Ord + Clone + Display>(lhs: &LinComb<S>, rhs: &LinComb<S>) -> Outcome {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{lhs} ≠ {rhs}"))
    }
}

pub fn antisymmetry<S, F>(br: F, a: &LinComb<S>, b: &LinComb<S>) -> Outcome
where
    S: Ord + Clone + Display,
    F: Fn(&LinComb<S>, &LinComb<S>) -> LinComb<S>,
{
    let s = br(a, b) + br(b, a);
    if s.is_zero() {
        Ok(())
    } else {
        Err(format!("[a,b] + [b,a] = {s}"))
    }
}

pub fn jacobi<S, F>(br: F, a: &LinComb<S>, b: &LinComb<S>, c: &LinComb<S>) -> Outcome
where
    S: Ord + Clone + Display,
    F: Fn(&LinComb<S>, &LinComb<S>) -> LinComb<S>,
{
    let mut s = br(&br(a, b), c);
    s.add_assign(&br(&br(b, c), a));
    s.add_assign(&br(&br(c, a), b));
    if s.is_zero() {
        Ok(())
    } else {
        Err(format!("[[a,b],c] + [[b,c],a] + [[c,a],b] = {s}"))
    }
}

fn fail_if(cond: bool, detail: impl FnOnce() -> String) -> Outcome {
    if cond {
        Err(detail())
    } else {
        Ok(())
    }
}

// TKK

pub fn tkk_grading(a: TkkSymbol, b: TkkSymbol) -> Outcome {
    let (wa, wb) = (a.grading_weights(), b.grading_weights());
    let want = (wa.0 + wb.0, wa.1 + wb.1);
    let br = tkk::bracket_symbols(a, b);
    let bad = br.symbols().find(|s| s.grading_weights() != want).copied();
    match bad {
        Some(s) => Err(format!("term {s} of [a,b] has weights {:?}, expected {want:?}", s.grading_weights())),
        None => Ok(()),
    }
}

pub fn tkk_centrality(c: TkkSymbol, x: TkkSymbol) -> Outcome {
    fail_if(!c.is_central(), || format!("{c} is not central"))?;
    let br = tkk::bracket_symbols(c, x);
    fail_if(!br.is_zero(), || format!("[c,x] = {br}"))
}

/// Both symbols in the same triangular part: their bracket stays in it.
pub fn tkk_triangular(a: TkkSymbol, b: TkkSymbol) -> Outcome {
    let part = a.triangular_part();
    fail_if(b.triangular_part() != part, || format!("{a} and {b} lie in different parts"))?;
    let br = tkk::bracket_symbols(a, b);
    let bad = br.symbols().find(|s| s.triangular_part() != part).copied();
    match bad {
        Some(s) => Err(format!("term {s} of [a,b] leaves the {part:?} part")),
        None => Ok(()),
    }
}

pub fn tkk_antisymmetry(a: &TkkElement, b: &TkkElement) -> Outcome {
    antisymmetry(tkk_bracket, a, b)
}

pub fn tkk_jacobi(a: &TkkElement, b: &TkkElement, c: &TkkElement) -> Outcome {
    jacobi(tkk_bracket, a, b, c)
}

// Toroidal

pub fn toroidal_antisymmetry(a: &ToroidalElement, b: &ToroidalElement) -> Outcome {
    antisymmetry(toroidal_bracket, a, b)
}

pub fn toroidal_jacobi(a: &ToroidalElement, b: &ToroidalElement, c: &ToroidalElement) -> Outcome {
    jacobi(toroidal_bracket, a, b, c)
}

/// Every term of [a,b] has t₁-degree and t₂-degree equal to the sums.
pub fn toroidal_bidegree(a: ToroidalSymbol, b: ToroidalSymbol) -> Outcome {
    let (pa, pb) = (a.bidegree(), b.bidegree());
    let want = (pa.0 + pb.0, pa.1 + pb.1);
    let br = toroidal::bracket_symbols(a, b);
    let bad = br.symbols().find(|s| s.bidegree() != want).copied();
    match bad {
        Some(s) => Err(format!("term {s} of [a,b] has bidegree {:?}, expected {want:?}", s.bidegree())),
        None => Ok(()),
    }
}

pub fn canonicalize_idempotent(s: ToroidalSymbol) -> Outcome {
    let once = canonical_symbol(s);
    let twice = once.flat_map(|t| canonical_symbol(*t));
    equal(&twice, &once)
}

pub fn trace_symmetric(x: Sp4Basis, y: Sp4Basis) -> Outcome {
    let (a, b) = (trace_basis(x, y), trace_basis(y, x));
    fail_if(a != b, || format!("tr({x}{y}) = {a} ≠ tr({y}{x}) = {b}"))
}

/// tr([x,y]z) = tr(x[y,z]).
pub fn trace_invariant(x: Sp4Basis, y: Sp4Basis, z: Sp4Basis) -> Outcome {
    let lhs = trace_form(bracket_basis(x, y), &LinComb::basis(z));
    let rhs = trace_form(&LinComb::basis(x), bracket_basis(y, z));
    fail_if(lhs != rhs, || format!("tr([x,y]z) = {lhs} ≠ tr(x[y,z]) = {rhs}"))
}

// Conformal

fn factorial(i: u32) -> i64 {
    (1..=i as i64).product()
}

/// aₙb = Σᵢ (−1)^{n+i+1} ∂ⁱ(b₍ₙ₊ᵢ₎a)/i!.
pub fn skew_symmetry(a: &ConformalElement, b: &ConformalElement, n: u32) -> Outcome {
    let lhs = nth_product(a, n, b);
    let mut rhs = ConformalElement::zero();
    for i in 0..=product_bound(b, a).saturating_sub(n) {
        let sign = if (n + i + 1).is_multiple_of(2) { 1 } else { -1 };
        let term = partial_pow(&nth_product(b, n + i, a), i);
        rhs.add_scaled(&term, &Rational::new(sign, factorial(i)).into());
    }
    equal(&lhs, &rhs)
}

/// a₍ₘ₎(b₍ₙ₎c) − b₍ₙ₎(a₍ₘ₎c) = Σᵢ binom(m,i)(a₍ᵢ₎b)₍ₘ₊ₙ₋ᵢ₎c.
pub fn conformal_jacobi(a: &ConformalElement, b: &ConformalElement, c: &ConformalElement, m: u32, n: u32) -> Outcome {
    let lhs = nth_product(a, m, &nth_product(b, n, c)) - nth_product(b, n, &nth_product(a, m, c));
    let mut rhs = ConformalElement::zero();
    for i in 0..=m {
        let coeff = binom(&Rational::from_int(m as i64), i);
        rhs.add_scaled(&nth_product(&nth_product(a, i, b), m + n - i, c), &coeff.into());
    }
    equal(&lhs, &rhs)
}

/// (∂a)₍ₙ₎b = −n·a₍ₙ₋₁₎b.
pub fn partial_product(a: &ConformalElement, b: &ConformalElement, n: u32) -> Outcome {
    let lhs = nth_product(&partial(a), n, b);
    let rhs = if n == 0 {
        ConformalElement::zero()
    } else {
        nth_product(a, n - 1, b).scaled(&GaussRational::from_int(-(n as i64)))
    };
    equal(&lhs, &rhs)
}

pub fn affine_jacobi(a: &AffineElement, b: &AffineElement, c: &AffineElement) -> Outcome {
    jacobi(affine_bracket, a, b, c)
}

// i_𝔤

pub fn ig_bracket(a: &AffineElement, b: &AffineElement) -> Outcome {
    equal(&i_g(&affine_bracket(a, b)), &toroidal_bracket(&i_g(a), &i_g(b)))
}

/// i_𝔤 sends a canonical symbol to a canonical symbol and i_𝔤⁻¹ undoes it.
pub fn ig_bijection(s: AffineSymbol) -> Outcome {
    let t = i_g_symbol(s);
    equal(&canonical_symbol(t), &t.elem())?;
    fail_if(i_g_inv_symbol(t) != s, || format!("i_g⁻¹(i_g({s})) = {}", i_g_inv_symbol(t)))
}

pub fn ig_inv_bijection(t: ToroidalSymbol) -> Outcome {
    let canon = canonical_symbol(t);
    equal(&i_g(&i_g_inv(&canon)), &canon)
}

/// deg a(m) on Ĉ_𝔤 equals the toroidal grading of its image.
pub fn ig_grading(s: AffineSymbol) -> Outcome {
    let t = i_g_symbol(s);
    let (d, g) = (s.degree(), toroidal_grading(t));
    fail_if(d != g, || format!("deg {s} = {d} ≠ grading of {t} = {g}"))
}

// σ

pub fn sigma_involution(a: &ConformalElement) -> Outcome {
    equal(&sigma_c(&sigma_c(a)), a)
}

pub fn sigma_partial(a: &ConformalElement) -> Outcome {
    equal(&sigma_c(&partial(a)), &partial(&sigma_c(a)))
}

pub fn sigma_product(a: &ConformalElement, b: &ConformalElement, n: u32) -> Outcome {
    equal(&sigma_c(&nth_product(a, n, b)), &nth_product(&sigma_c(a), n, &sigma_c(b)))
}

pub fn sigma_graded(s: ConformalSymbol) -> Outcome {
    let image = sigma_c(&s.elem());
    let d = conformal_grading(s);
    let bad = image.symbols().find(|t| conformal_grading(**t) != d).copied();
    match bad {
        Some(t) => Err(format!("σ({s}) has term {t} of degree {}, expected {d}", conformal_grading(t))),
        None => Ok(()),
    }
}

pub fn sigma_table(s: ToroidalSymbol) -> Outcome {
    equal(&sigma_on_t(s), &sigma_t_table(s))
}

pub fn sigma_hat_automorphism(a: &AffineElement, b: &AffineElement) -> Outcome {
    let sh = |e: &AffineElement| e.flat_map(|s| sigma_hat(*s));
    equal(&sh(&affine_bracket(a, b)), &affine_bracket(&sh(a), &sh(b)))
}

// φ

pub fn phi_bracket(a: &TkkElement, b: &TkkElement) -> Outcome {
    equal(&phi(&tkk_bracket(a, b)), &twisted::twisted_bracket(&phi(a), &phi(b)))
}

pub fn phi_inverse(a: &TkkElement) -> Outcome {
    equal(&phi_inv(&phi(a)), a)
}

pub fn phi_inv_inverse(s: TwistedSymbol) -> Outcome {
    equal(&phi(&phi_inv(&s.elem())), &s.elem())
}

pub fn phi_central(p: LatticePoint) -> Outcome {
    fail_if(!phi_kills_central_relation(p), || format!("φ does not kill the central relation at {p}"))
}

/// Every term of φ(s) has twisted degree deg(s)/2.
pub fn phi_grading(s: TkkSymbol) -> Outcome {
    let want = Half(s.degree());
    match phi(&s.elem()).symbols().find(|t| twisted_grading(**t) != want) {
        Some(t) => Err(format!("φ({s}) has term {t} of degree {}, expected {want}", twisted_grading(*t))),
        None => Ok(()),
    }
}

/// Every term of φ⁻¹(t) has degree twice the twisted degree of t.
pub fn phi_inv_grading(t: TwistedSymbol) -> Outcome {
    let want = twisted_grading(t).0;
    match phi_inv(&t.elem()).symbols().find(|s| s.degree() != want) {
        Some(s) => Err(format!("φ⁻¹({t}) has term {s} of degree {}, expected {want}", s.degree())),
        None => Ok(()),
    }
}

/// The generators whose twisted fields have a closed form in TKK terms.
pub const DICTIONARY: [Sp4Basis; 3] = [Sp4Basis::E13, Sp4Basis::E24, Sp4Basis::E42];

/// The closed form of φ⁻¹((x⊗t₂ⁿ)^{(j)}(m + j/2)) for x ∈ DICTIONARY.
pub fn dictionary_value(x: Sp4Basis, n: i64, m: i64, j: u8) -> Option<TkkElement> {
    let k = 2 * m + j as i64;
    let sign = if j == 0 { 1 } else { -1 };
    let p = LatticePoint::new;
    match x {
        Sp4Basis::E13 => Some(tkk::x_plus(p(k, 2 * n)).scaled(&GaussRational::ratio(1, 2))),
        Sp4Basis::E24 => Some(tkk::x_minus(p(k, 2 * n + 2)).scaled(&GaussRational::ratio(sign, 2))),
        Sp4Basis::E42 => Some(tkk::x_plus(p(k, 2 * n - 2)).scaled(&GaussRational::ratio(sign, 2))),
        _ => None,
    }
}

pub fn field_dictionary(x: Sp4Basis, n: i64, m: i64, j: u8) -> Outcome {
    let want = dictionary_value(x, n, m, j).ok_or_else(|| format!("no closed form for {x}"))?;
    let got = field_coeff(Generator::Loop { x, n }, j, m).map_err(|e| e.to_string())?;
    equal(&got, &want)
}

pub fn twisted_antisymmetry(a: &twisted::TwistedElement, b: &twisted::TwistedElement) -> Outcome {
    antisymmetry(twisted::twisted_bracket, a, b)
}

pub fn twisted_jacobi(
    a: &twisted::TwistedElement,
    b: &twisted::TwistedElement,
    c: &twisted::TwistedElement,
) -> Outcome {
    jacobi(twisted::twisted_bracket, a, b, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use tkk_core::tkk::TkkKind;

    fn sym(kind: TkkKind, m: i64, n: i64) -> TkkSymbol {
        TkkSymbol::new(kind, LatticePoint::new(m, n)).unwrap()
    }

    #[test]
    fn broken_bracket_is_caught() {
        // a bracket that is symmetric instead of antisymmetric
        let bad = |a: &TkkElement, b: &TkkElement| {
            if a.to_string() <= b.to_string() {
                tkk_bracket(a, b)
            } else {
                tkk_bracket(b, a)
            }
        };
        let a = sym(TkkKind::XPlus, 1, 0).elem();
        let b = sym(TkkKind::XMinus, 1, 0).elem();
        assert!(antisymmetry(bad, &a, &b).is_err());
        assert!(tkk_antisymmetry(&a, &b).is_ok());
        let c = sym(TkkKind::H, 0, 1).elem();
        assert!(tkk_jacobi(&a, &b, &c).is_ok());
        // doubling the brackets with x+(1,0) on the left breaks Jacobi
        let h = sym(TkkKind::H, 0, 0).elem();
        let m = sym(TkkKind::XMinus, 0, 0).elem();
        let lopsided = |x: &TkkElement, y: &TkkElement| {
            tkk_bracket(x, y).scaled(&GaussRational::from_int(if *x == a { 2 } else { 1 }))
        };
        assert!(jacobi(lopsided, &a, &h, &m).is_err());
        assert!(tkk_jacobi(&a, &h, &m).is_ok());
    }

    #[test]
    fn dictionary_examples() {
        assert!(field_dictionary(Sp4Basis::E13, 1, -2, 1).is_ok());
        assert!(field_dictionary(Sp4Basis::H1, 0, 0, 0).is_err());
        let v = dictionary_value(Sp4Basis::E24, 0, 0, 1).unwrap();
        assert_eq!(v.to_string(), "-1/2*x-(1,2)");
    }

    #[test]
    fn grading_and_triangular() {
        let a = sym(TkkKind::XPlus, 1, 0);
        let b = sym(TkkKind::XPlus, 1, 2);
        assert!(tkk_grading(a, b).is_ok());
        assert!(tkk_triangular(a, b).is_ok());
        assert!(tkk_triangular(a, sym(TkkKind::XMinus, -1, 0)).is_err());
        assert!(tkk_centrality(sym(TkkKind::K1, 0, 0), a).is_ok());
        assert!(tkk_centrality(a, a).is_err());
    }

    #[test]
    fn trace_and_conformal() {
        for x in Sp4Basis::ALL {
            for y in Sp4Basis::ALL {
                assert!(trace_symmetric(x, y).is_ok());
            }
        }
        let a = tkk_core::conformal::gen_elem(Generator::Loop { x: Sp4Basis::E13, n: 1 });
        let b = tkk_core::conformal::gen_elem(Generator::Loop { x: Sp4Basis::E31, n: -2 });
        for n in 0..3 {
            assert!(skew_symmetry(&a, &b, n).is_ok());
            assert!(partial_product(&a, &b, n).is_ok());
            assert!(sigma_product(&a, &b, n).is_ok());
        }
    }
}
