//! Re-evaluation of a reported counterexample from its input strings.

use thiserror::Error;
use tkk_core::conformal::{AffineElement, AffineSymbol, ConformalElement, ConformalSymbol};
use tkk_core::expr::{parse_in, Algebra, Element, ExprError};
use tkk_core::lab::verma::{build_verma_window, gram_rank_stabilized, verma_module};
use tkk_core::lab::Root;
use tkk_core::lattice::LatticePoint;
use tkk_core::sp4::Sp4Basis;
use tkk_core::tkk::{TkkElement, TkkSymbol};
use tkk_core::toroidal::{ToroidalElement, ToroidalSymbol};
use tkk_core::twisted::{TwistedElement, TwistedSymbol};
use tkk_core::{GaussRational, LinComb};

use crate::identities::{self as id, Outcome};
use crate::suites::modules::{self as md, CartanOp};
use crate::suites::Suite;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReproError {
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error("bad input: {0}")]
    Input(String),
    #[error("check '{check}' of suite '{suite}' cannot be re-evaluated from its inputs")]
    Unsupported { suite: String, check: String },
}

type R<T> = Result<T, ReproError>;

fn bad(msg: impl Into<String>) -> ReproError {
    ReproError::Input(msg.into())
}

struct Inputs<'a>(&'a [String]);

impl Inputs<'_> {
    fn get(&self, i: usize) -> R<&str> {
        self.0.get(i).map(String::as_str).ok_or_else(|| bad(format!("missing input #{}", i + 1)))
    }

    /// The integer after `key=` among the inputs.
    fn int(&self, key: &str) -> R<i64> {
        let prefix = format!("{key}=");
        let v = self.0.iter().find_map(|s| s.strip_prefix(&prefix)).ok_or_else(|| bad(format!("missing {key}=")))?;
        v.parse().map_err(|_| bad(format!("{key}={v} is not an integer")))
    }

    fn uint(&self, key: &str) -> R<u32> {
        u32::try_from(self.int(key)?).map_err(|_| bad(format!("{key} must be nonnegative")))
    }

    fn parse(&self, i: usize, alg: Algebra) -> R<Element> {
        Ok(parse_in(alg, self.get(i)?)?)
    }

    fn tkk(&self, i: usize) -> R<TkkElement> {
        match self.parse(i, Algebra::Tkk)? {
            Element::Tkk(e) => Ok(e),
            _ => unreachable!("parse_in returns the requested algebra"),
        }
    }

    fn toroidal(&self, i: usize) -> R<ToroidalElement> {
        match self.parse(i, Algebra::Toroidal)? {
            Element::Toroidal(e) => Ok(e),
            _ => unreachable!("parse_in returns the requested algebra"),
        }
    }

    fn conformal(&self, i: usize) -> R<ConformalElement> {
        match self.parse(i, Algebra::Conformal)? {
            Element::Conformal(e) => Ok(e),
            _ => unreachable!("parse_in returns the requested algebra"),
        }
    }

    fn affine(&self, i: usize) -> R<AffineElement> {
        match self.parse(i, Algebra::Affine)? {
            Element::Affine(e) => Ok(e),
            _ => unreachable!("parse_in returns the requested algebra"),
        }
    }

    fn twisted(&self, i: usize) -> R<TwistedElement> {
        match self.parse(i, Algebra::Twisted)? {
            Element::Twisted(e) => Ok(e),
            _ => unreachable!("parse_in returns the requested algebra"),
        }
    }

    fn sp4(&self, i: usize) -> R<Sp4Basis> {
        let s = self.get(i)?;
        Sp4Basis::from_name(s).ok_or_else(|| bad(format!("unknown sp4 basis element '{s}'")))
    }

    fn root(&self, i: usize) -> R<Root> {
        let s = self.get(i)?;
        Root::from_name(s).ok_or_else(|| bad(format!("unknown root '{s}'")))
    }

    fn triple(&self, i: usize) -> R<tkk_core::lab::WeightData> {
        md::parse_triple(self.get(i)?).map_err(bad)
    }
}

/// The single basis symbol of an element written as one symbol.
fn single<S: Ord + Clone + Copy>(e: &LinComb<S>) -> R<S> {
    match e.iter().collect::<Vec<_>>().as_slice() {
        [(s, c)] if **c == GaussRational::from_int(1) => Ok(**s),
        _ => Err(bad("expected a single basis symbol")),
    }
}

fn tkk_sym(x: &Inputs, i: usize) -> R<TkkSymbol> {
    single(&x.tkk(i)?)
}

fn toroidal_sym(x: &Inputs, i: usize) -> R<ToroidalSymbol> {
    single(&x.toroidal(i)?)
}

fn affine_sym(x: &Inputs, i: usize) -> R<AffineSymbol> {
    single(&x.affine(i)?)
}

fn twisted_sym(x: &Inputs, i: usize) -> R<TwistedSymbol> {
    single(&x.twisted(i)?)
}

fn conformal_sym(x: &Inputs, i: usize) -> R<ConformalSymbol> {
    single(&x.conformal(i)?)
}

fn named(checks: Vec<(&'static str, Outcome)>, check: &str) -> Option<Outcome> {
    checks.into_iter().find(|(n, _)| *n == check).map(|(_, o)| o)
}

/// Re-evaluates `check` of `suite` on the inputs of a counterexample record.
/// `Ok(Err(detail))` means the failure reproduces.
pub fn reproduce(suite: Suite, check: &str, inputs: &[String]) -> R<Outcome> {
    let x = Inputs(inputs);
    let unsupported = || ReproError::Unsupported { suite: suite.name().to_string(), check: check.to_string() };
    let out = match (suite, check) {
        (Suite::TkkJacobi, "antisymmetry" | "antisymmetry-sampled") => id::tkk_antisymmetry(&x.tkk(0)?, &x.tkk(1)?),
        (Suite::TkkJacobi, "jacobi" | "jacobi-sampled") => id::tkk_jacobi(&x.tkk(0)?, &x.tkk(1)?, &x.tkk(2)?),
        (Suite::TkkJacobi, "grading") => id::tkk_grading(tkk_sym(&x, 0)?, tkk_sym(&x, 1)?),
        (Suite::TkkJacobi, "centrality") => id::tkk_centrality(tkk_sym(&x, 0)?, tkk_sym(&x, 1)?),
        (Suite::TkkJacobi, "triangular") => id::tkk_triangular(tkk_sym(&x, 0)?, tkk_sym(&x, 1)?),

        (Suite::ToroidalJacobi, "antisymmetry") => id::toroidal_antisymmetry(&x.toroidal(0)?, &x.toroidal(1)?),
        (Suite::ToroidalJacobi, "jacobi" | "jacobi-sampled") => {
            id::toroidal_jacobi(&x.toroidal(0)?, &x.toroidal(1)?, &x.toroidal(2)?)
        }
        (Suite::ToroidalJacobi, "grading") => id::toroidal_bidegree(toroidal_sym(&x, 0)?, toroidal_sym(&x, 1)?),
        (Suite::ToroidalJacobi, "canonicalize-idempotent") => id::canonicalize_idempotent(toroidal_sym(&x, 0)?),
        (Suite::ToroidalJacobi, "trace-symmetric") => id::trace_symmetric(x.sp4(0)?, x.sp4(1)?),
        (Suite::ToroidalJacobi, "trace-invariant") => id::trace_invariant(x.sp4(0)?, x.sp4(1)?, x.sp4(2)?),

        (Suite::ConformalAxioms, "skew-symmetry") => {
            id::skew_symmetry(&x.conformal(0)?, &x.conformal(1)?, x.uint("n")?)
        }
        (Suite::ConformalAxioms, "partial-product") => {
            id::partial_product(&x.conformal(0)?, &x.conformal(1)?, x.uint("n")?)
        }
        (Suite::ConformalAxioms, "jacobi") => {
            id::conformal_jacobi(&x.conformal(0)?, &x.conformal(1)?, &x.conformal(2)?, x.uint("m")?, x.uint("n")?)
        }
        (Suite::ConformalAxioms, "affine-jacobi-sampled") => {
            id::affine_jacobi(&x.affine(0)?, &x.affine(1)?, &x.affine(2)?)
        }
        (Suite::ConformalAxioms, "affine-antisymmetry-sampled") => {
            id::antisymmetry(tkk_core::conformal::affine_bracket, &x.affine(0)?, &x.affine(1)?)
        }

        (Suite::IgIso, "bracket") => id::ig_bracket(&x.affine(0)?, &x.affine(1)?),
        (Suite::IgIso, "bijection") => id::ig_bijection(affine_sym(&x, 0)?),
        (Suite::IgIso, "grading") => id::ig_grading(affine_sym(&x, 0)?),
        (Suite::IgIso, "bijection-inverse") => id::ig_inv_bijection(toroidal_sym(&x, 0)?),

        (Suite::SigmaInvolution, "involution") => id::sigma_involution(&x.conformal(0)?),
        (Suite::SigmaInvolution, "commutes-with-partial") => id::sigma_partial(&x.conformal(0)?),
        (Suite::SigmaInvolution, "graded") => id::sigma_graded(conformal_sym(&x, 0)?),
        (Suite::SigmaInvolution, "preserves-products") => {
            id::sigma_product(&x.conformal(0)?, &x.conformal(1)?, x.uint("n")?)
        }

        (Suite::SigmaOnT, "table") => id::sigma_table(toroidal_sym(&x, 0)?),
        (Suite::SigmaOnT, "automorphism") => id::sigma_hat_automorphism(&x.affine(0)?, &x.affine(1)?),

        (Suite::PhiIso, "homomorphism") => id::phi_bracket(&x.tkk(0)?, &x.tkk(1)?),
        (Suite::PhiIso, "inverse") => id::phi_inverse(&x.tkk(0)?),
        (Suite::PhiIso, "inverse-twisted") => id::phi_inv_inverse(twisted_sym(&x, 0)?),
        (Suite::PhiIso, "central-relation") => id::phi_central(LatticePoint::new(x.int("m")?, x.int("n")?)),
        (Suite::PhiIso, "field-dictionary") => {
            let j = u8::try_from(x.int("j")?).map_err(|_| bad("j must be 0 or 1"))?;
            id::field_dictionary(x.sp4(0)?, x.int("n")?, x.int("m")?, j)
        }

        (Suite::GradingCompat, "grading") => id::phi_grading(tkk_sym(&x, 0)?),
        (Suite::GradingCompat, "grading-inverse") => id::phi_inv_grading(twisted_sym(&x, 0)?),

        (Suite::TwistedJacobi, "antisymmetry") => id::twisted_antisymmetry(&x.twisted(0)?, &x.twisted(1)?),
        (Suite::TwistedJacobi, "jacobi-sampled") => id::twisted_jacobi(&x.twisted(0)?, &x.twisted(1)?, &x.twisted(2)?),

        (Suite::Sl2Embeddings, "relations") => {
            md::embedding_relations(md::parse_kind(x.get(0)?).map_err(bad)?, x.int("m")?)
        }

        (Suite::VacuumWindows, _) => {
            let level = u64::try_from(x.int("level")?).map_err(|_| bad("level must be nonnegative"))?;
            named(md::vacuum_level(level, x.int("degree")?), check).ok_or_else(unsupported)?
        }

        (Suite::HwModule, "hw-action") => {
            let w = x.triple(0)?;
            let op = x.0.iter().find_map(|s| s.strip_prefix("op=")).ok_or_else(|| bad("missing op="))?;
            let op = CartanOp::from_name(op).ok_or_else(|| bad(format!("unknown operator '{op}'")))?;
            md::hw_action(&verma_module(&w), &w, op, x.int("m")?)
        }
        (Suite::HwModule, "level" | "c2-zero" | "weight") => {
            let w = x.triple(0)?;
            let window = build_verma_window(&w, x.int("degree")?, x.int("band")?);
            let vector = x.get(3)?;
            let (d, a, mono) = window
                .basis()
                .find(|(_, _, m)| m.to_string() == vector)
                .ok_or_else(|| bad(format!("{vector} is not in the window")))?;
            named(md::vector_checks(&verma_module(&w), &w, d, a, mono), check).ok_or_else(unsupported)?
        }
        (Suite::HwModule, "contravariance") => {
            let w = x.triple(0)?;
            let g = tkk_sym(&x, 1)?;
            let window = build_verma_window(&w, x.int("degree")?, x.int("band")?);
            md::contravariance(&w, g, &window)
        }
        (Suite::HwModule, "gram-monotone") => {
            let w = x.triple(0)?;
            let d = x.int("degree")?;
            let bands: Vec<i64> = (0..=x.int("band")?).collect();
            let summary = gram_rank_stabilized(&w, d, &bands).pop().ok_or_else(|| bad("empty window"))?;
            if summary.monotone {
                Ok(())
            } else {
                Err("gram ranks decrease with the band".to_string())
            }
        }

        (Suite::Integrability, "coefficients") => {
            md::integrability_vector(&x.triple(0)?, x.int("degree")?, x.int("band")?, x.get(3)?).map_err(bad)?
        }

        (Suite::IdealWindow, "sigma-invariance") => {
            let level = u64::try_from(x.int("level")?).map_err(|_| bad("level must be nonnegative"))?;
            md::ideal_sigma_check(x.root(0)?, x.int("n")?, level, x.int("band")?)
        }
        (Suite::IdealWindow, "exponent") => {
            let level = u64::try_from(x.int("level")?).map_err(|_| bad("level must be nonnegative"))?;
            md::ideal_exponent_check(x.root(0)?, level)
        }
        (Suite::IdealWindow, "vacuum-outside-ideal") => {
            let level = u64::try_from(x.int("level")?).map_err(|_| bad("level must be nonnegative"))?;
            let r = tkk_core::lab::ideal_window(level, x.int("degree")?, x.int("band")?);
            if r.vacuum_in_ideal {
                Err("the vacuum lies in the ideal closure".to_string())
            } else {
                Ok(())
            }
        }
        _ => return Err(unsupported()),
    };
    Ok(out)
}
