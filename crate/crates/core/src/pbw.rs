//! Induced modules U(𝔤) ⊗_{U(𝔭)} ℂv realized on PBW monomials.
//!
//! A monomial y₁y₂⋯y_k·v is stored as its nondecreasing factor list. Acting by
//! a symbol g straightens with g·y₁·rest = y₁·(g·rest) + [g, y₁]·rest, memoized
//! on (g, monomial).

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use num_traits::Zero;

use crate::linalg::SparseEchelon;
use crate::lincomb::LinComb;
use crate::scalars::GaussRational;

/// How a basis symbol acts on the generating vector v.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Action {
    /// A lowering generator: kept as a PBW factor.
    Lower,
    /// Annihilates v.
    Kill,
    /// Acts on v by a scalar.
    Scalar(GaussRational),
}

pub trait InducedAlgebra {
    type Sym: Ord + Clone + Hash + fmt::Debug + fmt::Display;

    fn bracket(&self, a: &Self::Sym, b: &Self::Sym) -> LinComb<Self::Sym>;
    fn action(&self, s: &Self::Sym) -> Action;
    /// The anti-involution defining the contravariant form.
    fn omega(&self, s: &Self::Sym) -> LinComb<Self::Sym>;
}

/// A PBW monomial y₁⋯y_k·v with y₁ ≤ ⋯ ≤ y_k.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial<S>(pub Vec<S>);

impl<S: fmt::Display> fmt::Display for Monomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{s}*")?;
        }
        f.write_str("v")
    }
}

impl<S> Monomial<S> {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

pub type Vector<S> = LinComb<Monomial<S>>;

type ActionCache<S> = HashMap<(S, Vec<S>), Vector<S>>;

pub struct InducedModule<A: InducedAlgebra> {
    pub alg: A,
    cache: RefCell<ActionCache<A::Sym>>,
}

impl<A: InducedAlgebra> InducedModule<A> {
    pub fn new(alg: A) -> Self {
        InducedModule { alg, cache: RefCell::new(HashMap::new()) }
    }

    pub fn vacuum(&self) -> Vector<A::Sym> {
        LinComb::basis(Monomial(Vec::new()))
    }

    /// g·(y₁⋯y_k v).
    pub fn act_symbol(&self, g: &A::Sym, mono: &[A::Sym]) -> Vector<A::Sym> {
        let key = (g.clone(), mono.to_vec());
        if let Some(v) = self.cache.borrow().get(&key) {
            return v.clone();
        }
        let action = self.alg.action(g);
        let out = match mono.split_first() {
            None => match action {
                Action::Lower => LinComb::basis(Monomial(vec![g.clone()])),
                Action::Kill => LinComb::zero(),
                Action::Scalar(c) => LinComb::term(Monomial(Vec::new()), c),
            },
            Some((y, _)) if action == Action::Lower && g <= y => {
                let mut v = Vec::with_capacity(mono.len() + 1);
                v.push(g.clone());
                v.extend_from_slice(mono);
                LinComb::basis(Monomial(v))
            }
            Some((y, rest)) => {
                let inner = self.act_symbol(g, rest);
                let mut out = self.act_symbol_on(y, &inner);
                for (c, k) in self.alg.bracket(g, y).iter() {
                    out.add_scaled(&self.act_symbol(c, rest), k);
                }
                out
            }
        };
        self.cache.borrow_mut().insert(key, out.clone());
        out
    }

    pub fn act_symbol_on(&self, g: &A::Sym, v: &Vector<A::Sym>) -> Vector<A::Sym> {
        let mut out = LinComb::zero();
        for (m, c) in v.iter() {
            out.add_scaled(&self.act_symbol(g, &m.0), c);
        }
        out
    }

    pub fn act(&self, x: &LinComb<A::Sym>, v: &Vector<A::Sym>) -> Vector<A::Sym> {
        let mut out = LinComb::zero();
        for (g, c) in x.iter() {
            out.add_scaled(&self.act_symbol_on(g, v), c);
        }
        out
    }

    /// y₁(y₂(⋯(y_k·v))) for an arbitrary (not necessarily ordered) word.
    pub fn word(&self, factors: &[A::Sym]) -> Vector<A::Sym> {
        factors.iter().rev().fold(self.vacuum(), |v, g| self.act_symbol_on(g, &v))
    }

    /// The coefficient of v in ω(Y)·u, with Y = y₁⋯y_k.
    pub fn pair(&self, u: &Vector<A::Sym>, y: &Monomial<A::Sym>) -> GaussRational {
        let mut cur = u.clone();
        for g in &y.0 {
            cur = self.act(&self.alg.omega(g), &cur);
            if cur.is_zero() {
                return GaussRational::zero();
            }
        }
        cur.coeff(&Monomial(Vec::new()))
    }

    /// ⟨u, Y⟩ for every Y in a sorted list, sharing the work on common prefixes.
    pub fn pair_many(&self, u: &Vector<A::Sym>, ys: &[Monomial<A::Sym>]) -> Vec<GaussRational> {
        debug_assert!(ys.windows(2).all(|p| p[0] <= p[1]));
        let mut out = vec![GaussRational::zero(); ys.len()];
        self.pair_rec(u, ys, 0, &mut out);
        out
    }

    fn pair_rec(&self, cur: &Vector<A::Sym>, ys: &[Monomial<A::Sym>], depth: usize, out: &mut [GaussRational]) {
        if cur.is_zero() {
            return;
        }
        let mut i = 0;
        while i < ys.len() && ys[i].0.len() == depth {
            out[i] = cur.coeff(&Monomial(Vec::new()));
            i += 1;
        }
        while i < ys.len() {
            let g = &ys[i].0[depth];
            let j = i + ys[i..].iter().take_while(|y| &y.0[depth] == g).count();
            let next = self.act(&self.alg.omega(g), cur);
            self.pair_rec(&next, &ys[i..j], depth + 1, &mut out[i..j]);
            i = j;
        }
    }

    /// Gram matrix G_ij = ⟨X_i v, Y_j⟩ as sparse rows; `cols` must be sorted.
    pub fn gram_rows(&self, rows: &[Monomial<A::Sym>], cols: &[Monomial<A::Sym>]) -> Vec<LinComb<usize>> {
        rows.iter()
            .map(|x| self.pair_many(&LinComb::basis(x.clone()), cols).into_iter().enumerate().collect())
            .collect()
    }

    pub fn gram_rank(&self, basis: &[Monomial<A::Sym>]) -> usize {
        crate::linalg::sparse_rank(&self.gram_rows(basis, basis))
    }

    /// Span of `seeds` closed under the given operators, discarding images with a
    /// monomial rejected by `keep`.
    pub fn closure(
        &self,
        seeds: &[Vector<A::Sym>],
        ops: &[A::Sym],
        keep: impl Fn(&Monomial<A::Sym>) -> bool,
    ) -> SparseEchelon<Monomial<A::Sym>> {
        let mut span = SparseEchelon::new();
        let mut queue = Vec::new();
        let admissible = |v: &Vector<A::Sym>| v.symbols().all(&keep);
        for s in seeds {
            if admissible(s) {
                let r = span.reduce(s);
                if span.insert(&r) {
                    queue.push(r);
                }
            }
        }
        while let Some(v) = queue.pop() {
            for g in ops {
                let w = self.act_symbol_on(g, &v);
                if w.is_zero() || !admissible(&w) {
                    continue;
                }
                let r = span.reduce(&w);
                if span.insert(&r) {
                    queue.push(r);
                }
            }
        }
        span
    }

    pub fn clear_cache(&self) {
        self.cache.borrow_mut().clear();
    }
}

/// Nondecreasing words over `symbols` (sorted ascending) with prescribed total
/// degree and charge and at most `max_len` factors.
pub fn enumerate_monomials<S: Ord + Clone>(
    symbols: &[(S, i64, i64)],
    degree: i64,
    charge: i64,
    max_len: usize,
) -> Vec<Monomial<S>> {
    let mut sorted: Vec<(S, i64, i64)> = symbols.to_vec();
    sorted.sort_by(|a, b| a.0.cmp(&b.0));
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec<S: Ord + Clone>(
        syms: &[(S, i64, i64)],
        start: usize,
        deg: i64,
        ch: i64,
        left: usize,
        cur: &mut Vec<S>,
        out: &mut Vec<Monomial<S>>,
    ) {
        if deg == 0 && ch == 0 {
            out.push(Monomial(cur.clone()));
        }
        if left == 0 {
            return;
        }
        for i in start..syms.len() {
            let (s, d, c) = &syms[i];
            if *d > deg {
                continue;
            }
            cur.push(s.clone());
            rec(syms, i, deg - d, ch - c, left - 1, cur, out);
            cur.pop();
        }
    }
    rec(&sorted, 0, degree, charge, max_len, &mut cur, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        let syms = vec![("a", 1, 0), ("b", 1, 0), ("c", 2, 0)];
        assert_eq!(enumerate_monomials(&syms, 2, 0, 5).len(), 4);
        assert_eq!(enumerate_monomials(&syms, 2, 0, 1).len(), 1);
        assert_eq!(enumerate_monomials(&syms, 0, 0, 5), vec![Monomial(vec![])]);
        let zero = vec![("z", 0, -2)];
        assert_eq!(enumerate_monomials(&zero, 0, -4, 5), vec![Monomial(vec!["z", "z"])]);
    }
}
