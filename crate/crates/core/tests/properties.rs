//! Randomized invariants on linear combinations, beyond the windows the
//! verification suites sweep.

use proptest::prelude::*;
use tkk_core::conformal::{affine_bracket, affine_window, i_g, i_g_inv, AffineElement};
use tkk_core::expr::{parse_in, Algebra, Element};
use tkk_core::tkk::{self, tkk_bracket, TkkElement};
use tkk_core::toroidal::{self, toroidal_bracket, ToroidalElement};
use tkk_core::twisted::{self, phi, phi_inv, twisted_bracket, TwistedElement};
use tkk_core::{GaussRational, LinComb};

fn scalar() -> impl Strategy<Value = GaussRational> {
    (-4i64..=4, 1i64..=3, -2i64..=2)
        .prop_map(|(n, d, i)| GaussRational::ratio(n, d) + GaussRational::from_int(i) * GaussRational::i())
}

/// Combinations of up to three symbols drawn from `window`.
fn combo<S: Ord + Clone + std::fmt::Display + std::fmt::Debug + 'static>(
    window: Vec<S>,
) -> impl Strategy<Value = LinComb<S>> {
    let n = window.len();
    prop::collection::vec((0..n, scalar()), 1..=3)
        .prop_map(move |terms| terms.into_iter().map(|(i, c)| (window[i].clone(), c)).collect())
}

fn tkk_elem() -> impl Strategy<Value = TkkElement> {
    combo(tkk::basis_window(5))
}

fn toroidal_elem() -> impl Strategy<Value = ToroidalElement> {
    combo(toroidal::basis_window(3))
}

fn affine_elem() -> impl Strategy<Value = AffineElement> {
    combo(affine_window(3))
}

fn twisted_elem() -> impl Strategy<Value = TwistedElement> {
    combo(twisted::basis_window(3))
}

fn jacobi<E: Clone>(br: impl Fn(&E, &E) -> E, add: impl Fn(E, E) -> E, a: &E, b: &E, c: &E) -> E {
    add(add(br(a, &br(b, c)), br(b, &br(c, a))), br(c, &br(a, b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn tkk_bracket_is_a_lie_bracket(a in tkk_elem(), b in tkk_elem(), c in tkk_elem()) {
        prop_assert!((tkk_bracket(&a, &b) + tkk_bracket(&b, &a)).is_zero());
        prop_assert!(jacobi(tkk_bracket, |x, y| x + y, &a, &b, &c).is_zero());
    }

    #[test]
    fn toroidal_bracket_is_a_lie_bracket(a in toroidal_elem(), b in toroidal_elem(), c in toroidal_elem()) {
        prop_assert!((toroidal_bracket(&a, &b) + toroidal_bracket(&b, &a)).is_zero());
        prop_assert!(jacobi(toroidal_bracket, |x, y| x + y, &a, &b, &c).is_zero());
    }

    #[test]
    fn twisted_bracket_is_a_lie_bracket(a in twisted_elem(), b in twisted_elem(), c in twisted_elem()) {
        prop_assert!((twisted_bracket(&a, &b) + twisted_bracket(&b, &a)).is_zero());
        prop_assert!(jacobi(twisted_bracket, |x, y| x + y, &a, &b, &c).is_zero());
    }

    #[test]
    fn phi_is_an_isomorphism(a in tkk_elem(), b in tkk_elem()) {
        prop_assert_eq!(phi(&tkk_bracket(&a, &b)), twisted_bracket(&phi(&a), &phi(&b)));
        prop_assert_eq!(phi_inv(&phi(&a)), a);
    }

    #[test]
    fn phi_inv_inverts(v in twisted_elem()) {
        prop_assert_eq!(phi(&phi_inv(&v)), v);
    }

    #[test]
    fn i_g_is_an_isomorphism(a in affine_elem(), b in affine_elem()) {
        prop_assert_eq!(i_g(&affine_bracket(&a, &b)), toroidal_bracket(&i_g(&a), &i_g(&b)));
        prop_assert_eq!(i_g_inv(&i_g(&a)), a);
    }

    #[test]
    fn printed_elements_parse_back(a in tkk_elem(), t in toroidal_elem(), f in affine_elem(), w in twisted_elem()) {
        let cases = [
            (Algebra::Tkk, Element::Tkk(a)),
            (Algebra::Toroidal, Element::Toroidal(t)),
            (Algebra::Affine, Element::Affine(f)),
            (Algebra::Twisted, Element::Twisted(w)),
        ];
        for (alg, e) in cases {
            prop_assert_eq!(parse_in(alg, &e.to_string()).unwrap(), e);
        }
    }
}
