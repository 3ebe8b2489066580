//! The level-ℓ vacuum module V(ℓ,0) of Ĉ_𝔤 and windows of its ideal J(ℓ,0).

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::Zero;

use super::sl2::Root;
use crate::conformal::{affine_bracket_symbols, generator_window, AffineElement, AffineSymbol, Generator};
use crate::linalg::SparseEchelon;
use crate::lincomb::LinComb;
use crate::pbw::{enumerate_monomials, Action, InducedAlgebra, InducedModule, Monomial, Vector};
use crate::scalars::GaussRational;
use crate::sp4::{bracket_basis, Sp4Basis};
use crate::twisted::sigma_hat;

/// Matrix transpose on the sp₄ basis; every basis element transposes to another.
pub fn transpose(x: Sp4Basis) -> Sp4Basis {
    use Sp4Basis::*;
    match x {
        H1 => H1,
        H2 => H2,
        E13 => E31,
        E31 => E13,
        E24 => E42,
        E42 => E24,
        E12mE43 => E21mE34,
        E21mE34 => E12mE43,
        E14pE23 => E41pE32,
        E41pE32 => E14pE23,
    }
}

/// ad(H₁), ad(H₂) eigenvalues of a basis element.
pub fn sp4_weight(x: Sp4Basis) -> (i64, i64) {
    let w = |h| bracket_basis(h, x).coeff(&x).re.to_i64().expect("integral weight");
    (w(Sp4Basis::H1), w(Sp4Basis::H2))
}

/// ω on Ĉ_𝔤: (x⊗t₂ⁿ)(m) ↦ (xᵀ⊗t₂⁻ⁿ)(−m), k₂(m) ↦ k₂(−m), (t₂ˢk₁)(m) ↦ (t₂⁻ˢk₁)(−m−2), k₁ ↦ k₁.
pub fn omega_affine(s: AffineSymbol) -> AffineSymbol {
    match s {
        AffineSymbol::Gen { gen: Generator::Loop { x, n }, m } => {
            AffineSymbol::Gen { gen: Generator::Loop { x: transpose(x), n: -n }, m: -m }
        }
        AffineSymbol::Gen { gen: Generator::K2, m } => AffineSymbol::Gen { gen: Generator::K2, m: -m },
        AffineSymbol::Gen { gen: Generator::TK1 { s }, m } => {
            AffineSymbol::Gen { gen: Generator::TK1 { s: -s }, m: -m - 2 }
        }
        AffineSymbol::K1 => AffineSymbol::K1,
    }
}

/// Grading key of a symbol: (degree, H₁-weight, H₂-weight, t₂-degree).
pub fn affine_key(s: AffineSymbol) -> (i64, i64, i64, i64) {
    match s {
        AffineSymbol::Gen { gen: Generator::Loop { x, n }, .. } => {
            let (a, b) = sp4_weight(x);
            (s.degree(), a, b, n)
        }
        AffineSymbol::Gen { gen: Generator::TK1 { s: t }, .. } => (s.degree(), 0, 0, t),
        _ => (s.degree(), 0, 0, 0),
    }
}

pub fn monomial_key(m: &Monomial<AffineSymbol>) -> (i64, i64, i64, i64) {
    m.0.iter().fold((0, 0, 0, 0), |acc, s| {
        let k = affine_key(*s);
        (acc.0 + k.0, acc.1 + k.1, acc.2 + k.2, acc.3 + k.3)
    })
}

fn band_of(s: AffineSymbol) -> i64 {
    match s {
        AffineSymbol::Gen { gen: Generator::Loop { n, .. }, .. } => n.abs(),
        AffineSymbol::Gen { gen: Generator::TK1 { s }, .. } => s.abs(),
        _ => 0,
    }
}

/// Ĉ_𝔤 acting on V(ℓ,0): a(m) kills 𝟙 for m ≥ 0, k₁ acts by ℓ.
pub struct CVacuum {
    pub level: u64,
    brackets: RefCell<HashMap<(AffineSymbol, AffineSymbol), AffineElement>>,
}

impl CVacuum {
    pub fn new(level: u64) -> Self {
        CVacuum { level, brackets: RefCell::new(HashMap::new()) }
    }
}

impl InducedAlgebra for CVacuum {
    type Sym = AffineSymbol;

    fn bracket(&self, a: &AffineSymbol, b: &AffineSymbol) -> AffineElement {
        if let Some(v) = self.brackets.borrow().get(&(*a, *b)) {
            return v.clone();
        }
        let v = affine_bracket_symbols(*a, *b);
        self.brackets.borrow_mut().insert((*a, *b), v.clone());
        v
    }

    fn action(&self, s: &AffineSymbol) -> Action {
        match s {
            AffineSymbol::K1 => Action::Scalar(GaussRational::from_int(self.level as i64)),
            AffineSymbol::Gen { m, .. } if *m < 0 => Action::Lower,
            _ => Action::Kill,
        }
    }

    fn omega(&self, s: &AffineSymbol) -> AffineElement {
        omega_affine(*s).elem()
    }
}

pub type VacuumModule = InducedModule<CVacuum>;

pub fn vacuum_module(level: u64) -> VacuumModule {
    InducedModule::new(CVacuum::new(level))
}

/// σ̂ on V(ℓ,0): σ̂(y₁⋯y_k𝟙) = σ̂(y₁)⋯σ̂(y_k)𝟙.
pub fn sigma_vector(module: &VacuumModule, v: &Vector<AffineSymbol>) -> Vector<AffineSymbol> {
    let mut out = LinComb::zero();
    for (mono, c) in v.iter() {
        let mut cur = module.vacuum();
        for s in mono.0.iter().rev() {
            cur = module.act(&sigma_hat(*s), &cur);
        }
        out.add_scaled(&cur, c);
    }
    out
}

pub fn root_symbol(b: Root, n: i64, m: i64) -> AffineSymbol {
    AffineSymbol::Gen { gen: Generator::Loop { x: b.vector(), n }, m }
}

/// c_βℓ + 1.
pub fn ideal_exponent(b: Root, level: u64) -> usize {
    (b.c() as u64 * level + 1) as usize
}

/// ((e_β⊗t₂ⁿ)(−1))^{c_βℓ+1}𝟙.
pub fn ideal_generator(module: &VacuumModule, b: Root, n: i64) -> Vector<AffineSymbol> {
    module.word(&vec![root_symbol(b, n, -1); ideal_exponent(b, module.alg.level)])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealGenerator {
    pub root: Root,
    pub n: i64,
    pub exponent: usize,
    pub degree: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaCheck {
    pub root: Root,
    pub n: i64,
    /// The generator that σ̂ maps this one onto, when it is one.
    pub image: Option<(Root, i64)>,
    pub scale: GaussRational,
    pub image_in_band: bool,
    pub ok: bool,
}

/// σ̂ of a generator, compared with the generator it should be proportional to.
pub fn sigma_check(module: &VacuumModule, b: Root, n: i64, band: i64) -> SigmaCheck {
    let sym = sigma_hat(root_symbol(b, n, -1));
    let image = match sym.iter().collect::<Vec<_>>().as_slice() {
        [(AffineSymbol::Gen { gen: Generator::Loop { x, n: n2 }, m: -1 }, _)] => {
            Root::from_vector(*x).map(|r| (r, *n2))
        }
        _ => None,
    };
    let mut check =
        SigmaCheck { root: b, n, image, scale: GaussRational::from_int(0), image_in_band: false, ok: false };
    let Some((r, n2)) = image else {
        return check;
    };
    check.image_in_band = n2.abs() <= band;
    let got = sigma_vector(module, &ideal_generator(module, b, n));
    let want = ideal_generator(module, r, n2);
    let Some((lead, c)) = want.iter().next() else {
        return check;
    };
    let scale = got.coeff(lead).checked_div(c).expect("nonzero coefficient");
    check.ok = !scale.is_zero() && got == want.scaled(&scale);
    check.scale = scale;
    check
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealWindowReport {
    pub level: u64,
    pub degree_cap: i64,
    pub band: i64,
    pub length_cap: usize,
    pub generators: Vec<IdealGenerator>,
    pub sigma: Vec<SigmaCheck>,
    /// PBW monomials of V(ℓ,0) in the window, per degree.
    pub window: Vec<usize>,
    /// Closure of the in-window generators per degree: a lower bound on dim J.
    pub ideal: Vec<usize>,
    /// window − ideal: an upper bound on the quotient.
    pub quotient_upper: Vec<usize>,
    /// Whether 𝟙 lies in the closed span, i.e. the window sees J as improper.
    pub vacuum_in_ideal: bool,
}

impl IdealWindowReport {
    pub fn sigma_invariant(&self) -> bool {
        self.sigma.iter().all(|c| c.ok)
    }
}

/// Lowering symbols (e⊗t₂ⁿ)(m), k₂(m), (t₂ˢk₁)(m) of degree 0..=N with band ≤ W.
pub fn vacuum_lowering(degree_cap: i64, band: i64) -> Vec<AffineSymbol> {
    let mut out = Vec::new();
    for gen in generator_window(band) {
        for m in (-degree_cap - 1)..0 {
            let s = AffineSymbol::Gen { gen, m };
            if (0..=degree_cap).contains(&s.degree()) {
                out.push(s);
            }
        }
    }
    out.sort();
    out
}

/// Window monomials of V(ℓ,0) per degree.
pub fn vacuum_window_dims(degree_cap: i64, band: i64, length_cap: usize) -> Vec<usize> {
    let table: Vec<(AffineSymbol, i64, i64)> =
        vacuum_lowering(degree_cap, band).into_iter().map(|s| (s, s.degree(), 0)).collect();
    (0..=degree_cap).map(|d| enumerate_monomials(&table, d, 0, length_cap).len()).collect()
}

/// The span of the in-window generators of J(ℓ,0), closed under every a(m) with
/// |deg| ≤ N and band ≤ W, discarding images that leave the window.
pub fn ideal_span(module: &VacuumModule, degree_cap: i64, band: i64) -> SparseEchelon<Monomial<AffineSymbol>> {
    let length_cap = degree_cap as usize + 1;
    let mut seeds = Vec::new();
    for b in Root::ALL {
        let exponent = ideal_exponent(b, module.alg.level);
        if exponent as i64 <= degree_cap {
            seeds.extend((-band..=band).map(|n| ideal_generator(module, b, n)));
        }
    }
    let mut ops = Vec::new();
    for gen in generator_window(band) {
        for m in (-degree_cap - 1)..=degree_cap {
            let s = AffineSymbol::Gen { gen, m };
            if s.degree().abs() <= degree_cap {
                ops.push(s);
            }
        }
    }
    let keep = |m: &Monomial<AffineSymbol>| {
        m.len() <= length_cap && monomial_key(m).0 <= degree_cap && m.0.iter().all(|s| band_of(*s) <= band)
    };
    module.closure(&seeds, &ops, keep)
}

/// Generators of J(ℓ,0) for |n| ≤ W with their σ-images, and the graded
/// dimensions of the ideal slice and quotient slice in the degree ≤ N,
/// band ≤ W, length ≤ N+1 window.
pub fn ideal_window(level: u64, degree_cap: i64, band: i64) -> IdealWindowReport {
    let module = vacuum_module(level);
    let length_cap = degree_cap as usize + 1;
    let mut generators = Vec::new();
    let mut sigma = Vec::new();
    for b in Root::ALL {
        for n in -band..=band {
            let exponent = ideal_exponent(b, level);
            generators.push(IdealGenerator { root: b, n, exponent, degree: exponent as i64 });
            sigma.push(sigma_check(&module, b, n, band));
        }
    }
    let window = vacuum_window_dims(degree_cap, band, length_cap);
    let span = ideal_span(&module, degree_cap, band);
    let mut ideal = vec![0; degree_cap as usize + 1];
    for p in span.pivots() {
        ideal[monomial_key(p).0 as usize] += 1;
    }
    let quotient_upper = window.iter().zip(&ideal).map(|(w, i)| w - i).collect();
    let vacuum_in_ideal = span.contains(&module.vacuum());
    IdealWindowReport {
        level,
        degree_cap,
        band,
        length_cap,
        generators,
        sigma,
        window,
        ideal,
        quotient_upper,
        vacuum_in_ideal,
    }
}
