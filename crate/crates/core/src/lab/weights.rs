//! Highest-weight data (λ, μ, c) and the action of 𝓗 on the highest-weight vector.

use std::fmt;

use num_traits::Zero;

use super::LabError;
use crate::lattice::LatticePoint;
use crate::scalars::GaussRational;
use crate::tkk::{TkkKind, TkkSymbol};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightData {
    pub lambda: Vec<u64>,
    pub mu: Vec<u64>,
    pub c: Vec<GaussRational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleCheck {
    pub valid: bool,
    pub diagnostics: Vec<String>,
}

impl WeightData {
    pub fn new(lambda: Vec<u64>, mu: Vec<u64>, c: Vec<GaussRational>) -> Self {
        WeightData { lambda, mu, c }
    }

    /// ℓ = Σ(λᵢ + μᵢ).
    pub fn level(&self) -> u64 {
        self.lambda.iter().chain(&self.mu).sum()
    }

    /// λ(α∨(0,0)) = Σλᵢ.
    pub fn top_weight(&self) -> i64 {
        self.lambda.iter().sum::<u64>() as i64
    }

    /// Σλᵢcᵢ^m.
    pub fn lambda_sum(&self, m: i64) -> GaussRational {
        power_sum(&self.lambda, &self.c, m)
    }

    /// Σμᵢcᵢ^m.
    pub fn mu_sum(&self, m: i64) -> GaussRational {
        power_sum(&self.mu, &self.c, m)
    }

    /// The weight λ∘ω: evaluation points inverted.
    pub fn dual(&self) -> WeightData {
        let c = self.c.iter().map(|c| c.inv().expect("evaluation points are nonzero")).collect();
        WeightData { lambda: self.lambda.clone(), mu: self.mu.clone(), c }
    }
}

fn power_sum(mult: &[u64], c: &[GaussRational], m: i64) -> GaussRational {
    let mut acc = GaussRational::zero();
    for (k, ci) in mult.iter().zip(c) {
        if *k != 0 {
            let p = ci.pow(m).expect("evaluation points are nonzero");
            acc += &p.scale(&(*k as i64).into());
        }
    }
    acc
}

fn list<T: fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for WeightData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}),({}),({}))", list(&self.lambda), list(&self.mu), list(&self.c))
    }
}

/// Membership of (λ, μ, c) in P_ℓ, with one diagnostic per failed condition.
pub fn validate_triple(w: &WeightData, level: u64) -> TripleCheck {
    let mut diagnostics = Vec::new();
    let r = w.c.len();
    if w.lambda.len() != r || w.mu.len() != r {
        diagnostics.push(format!("length mismatch: |λ| = {}, |μ| = {}, |c| = {r}", w.lambda.len(), w.mu.len()));
    }
    for (i, (l, m)) in w.lambda.iter().zip(&w.mu).enumerate() {
        if l + m == 0 {
            diagnostics.push(format!("λ{0} + μ{0} = 0", i + 1));
        }
    }
    if w.level() != level {
        diagnostics.push(format!("Σ(λᵢ+μᵢ) = {} ≠ ℓ = {level}", w.level()));
    }
    for (i, ci) in w.c.iter().enumerate() {
        if ci.is_zero() {
            diagnostics.push(format!("c{} = 0", i + 1));
        }
        for (j, cj) in w.c.iter().enumerate().skip(i + 1) {
            if ci == cj {
                diagnostics.push(format!("c{} = c{} = {ci}", i + 1, j + 1));
            }
        }
    }
    TripleCheck { valid: diagnostics.is_empty(), diagnostics }
}

/// Whether a permutation carries w1 to w2 componentwise. The cᵢ are distinct in
/// valid triples, so greedy matching decides this.
pub fn triples_equivalent(w1: &WeightData, w2: &WeightData) -> bool {
    if w1.c.len() != w2.c.len() || w1.lambda.len() != w2.lambda.len() || w1.mu.len() != w2.mu.len() {
        return false;
    }
    let mut used = vec![false; w2.c.len()];
    (0..w1.c.len()).all(|i| {
        let hit = (0..w2.c.len())
            .find(|&j| !used[j] && w1.c[i] == w2.c[j] && w1.lambda[i] == w2.lambda[j] && w1.mu[i] == w2.mu[j]);
        match hit {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        }
    })
}

/// Whether a canonical symbol lies in 𝓗 = span{α∨(0,m), C₁(0,2m), C₂}.
pub fn in_cartan(s: TkkSymbol) -> bool {
    s.point.m == 0 && matches!(s.kind, TkkKind::H | TkkKind::K1 | TkkKind::K2)
}

/// The scalar by which h ∈ 𝓗 acts on v:
/// α∨(0,m) ↦ Σλᵢcᵢ^m, C₁(0,2m) ↦ ½(Σλᵢcᵢ^{2m} + Σμᵢcᵢ^m), C₂ ↦ 0.
pub fn highest_weight_action(w: &WeightData, s: TkkSymbol) -> Result<GaussRational, LabError> {
    if !in_cartan(s) {
        return Err(LabError::NotInCartan(s.to_string()));
    }
    let LatticePoint { n, .. } = s.point;
    Ok(match s.kind {
        TkkKind::H => w.lambda_sum(n),
        TkkKind::K1 => {
            debug_assert!(n % 2 == 0);
            &(&w.lambda_sum(n) + &w.mu_sum(n / 2)) * &GaussRational::ratio(1, 2)
        }
        _ => GaussRational::zero(),
    })
}
