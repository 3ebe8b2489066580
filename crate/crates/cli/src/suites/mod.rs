//! The named verification suites. Work items are generated up front (random
//! ones from a seeded ChaCha stream), sharded over the rayon pool, and the
//! shard tallies are merged; the report sorts everything before writing.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::identities::Outcome;
use crate::report::{Params, Report, Tally};

mod algebra;
pub mod modules;
mod phi;

pub use modules::{parse_kind, parse_triple, TESTED_TRIPLES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SuiteError {
    #[error("unknown suite '{0}' (expected one of: {list})", list = Suite::names().join(", "))]
    UnknownSuite(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    TkkJacobi,
    ToroidalJacobi,
    ConformalAxioms,
    IgIso,
    SigmaInvolution,
    SigmaOnT,
    PhiIso,
    GradingCompat,
    TwistedJacobi,
    Sl2Embeddings,
    VacuumWindows,
    HwModule,
    Integrability,
    IdealWindow,
}

impl Suite {
    pub const ALL: [Suite; 14] = [
        Suite::TkkJacobi,
        Suite::ToroidalJacobi,
        Suite::ConformalAxioms,
        Suite::IgIso,
        Suite::SigmaInvolution,
        Suite::SigmaOnT,
        Suite::PhiIso,
        Suite::GradingCompat,
        Suite::TwistedJacobi,
        Suite::Sl2Embeddings,
        Suite::VacuumWindows,
        Suite::HwModule,
        Suite::Integrability,
        Suite::IdealWindow,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::TkkJacobi => "tkk-jacobi",
            Suite::ToroidalJacobi => "toroidal-jacobi",
            Suite::ConformalAxioms => "conformal-axioms",
            Suite::IgIso => "ig-iso",
            Suite::SigmaInvolution => "sigma-involution",
            Suite::SigmaOnT => "sigma-on-t",
            Suite::PhiIso => "phi-iso",
            Suite::GradingCompat => "grading-compat",
            Suite::TwistedJacobi => "twisted-jacobi",
            Suite::Sl2Embeddings => "sl2-embeddings",
            Suite::VacuumWindows => "vacuum-windows",
            Suite::HwModule => "hw-module",
            Suite::Integrability => "integrability",
            Suite::IdealWindow => "ideal-window",
        }
    }

    pub fn names() -> Vec<&'static str> {
        Suite::ALL.iter().map(|s| s.name()).collect()
    }

    /// Default window parameters; see the README for what each suite reads.
    pub fn defaults(self) -> Params {
        let p = |bound, degree, band| Params { bound, degree, band, samples: 10_000, seed: 0 };
        match self {
            Suite::TkkJacobi | Suite::ToroidalJacobi | Suite::TwistedJacobi => p(1, 0, 0),
            Suite::ConformalAxioms | Suite::IgIso | Suite::SigmaInvolution | Suite::PhiIso => p(2, 0, 0),
            Suite::SigmaOnT | Suite::GradingCompat => p(3, 0, 0),
            Suite::Sl2Embeddings => p(2, 3, 0),
            Suite::VacuumWindows => p(2, 4, 0),
            Suite::HwModule => p(3, 1, 2),
            Suite::Integrability => p(0, 2, 2),
            Suite::IdealWindow => p(1, 2, 2),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| SuiteError::UnknownSuite(s.to_string()))
    }
}

pub fn validate(params: &Params) -> Result<(), SuiteError> {
    for (name, v) in [("bound", params.bound), ("degree", params.degree), ("band", params.band)] {
        if v < 0 {
            return Err(SuiteError::InvalidParams(format!("{name} must be nonnegative, got {v}")));
        }
    }
    Ok(())
}

pub fn run_suite(suite: Suite, params: Params) -> Result<Report, SuiteError> {
    validate(&params)?;
    let tally = match suite {
        Suite::TkkJacobi => algebra::tkk_jacobi(&params),
        Suite::ToroidalJacobi => algebra::toroidal_jacobi(&params),
        Suite::ConformalAxioms => algebra::conformal_axioms(&params),
        Suite::IgIso => algebra::ig_iso(&params),
        Suite::SigmaInvolution => algebra::sigma_involution(&params),
        Suite::SigmaOnT => algebra::sigma_on_t(&params),
        Suite::TwistedJacobi => algebra::twisted_jacobi(&params),
        Suite::PhiIso => phi::phi_iso(&params),
        Suite::GradingCompat => phi::grading_compat(&params),
        Suite::Sl2Embeddings => modules::sl2_embeddings(&params),
        Suite::VacuumWindows => modules::vacuum_windows(&params),
        Suite::HwModule => modules::hw_module(&params),
        Suite::Integrability => modules::integrability(&params),
        Suite::IdealWindow => modules::ideal_window(&params),
    };
    Ok(Report { suite: suite.name().to_string(), params, tally })
}

/// Records one outcome; `inputs` is only rendered on failure.
pub(crate) fn check(t: &mut Tally, name: &str, outcome: Outcome, inputs: impl FnOnce() -> Vec<String>) {
    t.record(name, outcome.err(), inputs);
}

/// Runs `f` over the items on the worker pool and merges the per-shard tallies.
pub(crate) fn sweep<T, F>(items: &[T], f: F) -> Tally
where
    T: Sync,
    F: Fn(&mut Tally, &T) + Sync + Send,
{
    items
        .par_iter()
        .fold(Tally::new, |mut t, x| {
            f(&mut t, x);
            t
        })
        .reduce(Tally::new, Tally::merge)
}

/// `count` tuples of `k` indices below `n`, drawn from the seeded stream.
pub(crate) fn sample_indices(seed: u64, n: usize, k: usize, count: u64) -> Vec<Vec<usize>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (0..k).map(|_| rng.gen_range(0..n)).collect()).collect()
}

/// Every ordered pair of indices below `n`.
pub(crate) fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
}
