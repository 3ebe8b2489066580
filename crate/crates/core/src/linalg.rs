//! Exact linear algebra over ℚ(i): sparse incremental echelon forms and dense solves.

use std::collections::BTreeMap;
use std::ops::Bound;

use num_traits::{One, Zero};

use crate::lincomb::LinComb;
use crate::scalars::GaussRational;

/// Rows in echelon form keyed by pivot; each row has coefficient 1 at its
/// pivot, which is also its smallest key.
#[derive(Clone)]
pub struct SparseEchelon<K: Ord + Clone> {
    rows: BTreeMap<K, LinComb<K>>,
}

impl<K: Ord + Clone> Default for SparseEchelon<K> {
    fn default() -> Self {
        SparseEchelon { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> SparseEchelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` modulo the row span.
    pub fn reduce(&self, v: &LinComb<K>) -> LinComb<K> {
        let mut v = v.clone();
        let mut cursor: Option<K> = None;
        loop {
            let next = {
                let keys = v.symbols().filter(|k| match &cursor {
                    Some(c) => *k > c,
                    None => true,
                });
                let mut found = None;
                for k in keys {
                    if self.rows.contains_key(k) {
                        found = Some(k.clone());
                        break;
                    }
                }
                found
            };
            let Some(k) = next else { return v };
            let c = v.coeff(&k);
            v.add_scaled(&self.rows[&k], &-c);
            cursor = Some(k);
        }
    }

    pub fn contains(&self, v: &LinComb<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &LinComb<K>) -> bool {
        let r = self.reduce(v);
        let Some((k, c)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = c.inv().expect("nonzero leading coefficient");
        self.rows.insert(k, r.scaled(&inv));
        true
    }

    pub fn rows(&self) -> impl Iterator<Item = &LinComb<K>> {
        self.rows.values()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Pivots strictly above `k`, for callers walking the echelon in order.
    pub fn pivots_after(&self, k: &K) -> impl Iterator<Item = &K> {
        self.rows.range((Bound::Excluded(k.clone()), Bound::Unbounded)).map(|(k, _)| k)
    }
}

/// Rank of a list of sparse rows.
pub fn sparse_rank<K: Ord + Clone>(rows: &[LinComb<K>]) -> usize {
    let mut e = SparseEchelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Rank of a dense matrix by Gaussian elimination.
pub fn dense_rank(mut m: Vec<Vec<GaussRational>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = m[rank][col].inv().expect("nonzero pivot");
        for r in (rank + 1)..rows {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] * &inv;
            let (top, rest) = m.split_at_mut(r);
            for (x, p) in rest[0][col..].iter_mut().zip(&top[rank][col..]) {
                *x -= &(&f * p);
            }
        }
        rank += 1;
    }
    rank
}

/// Solves `a·x = b` for a dense `a` (rows × cols); `None` if inconsistent.
/// Free variables are set to zero.
pub fn solve(a: &[Vec<GaussRational>], b: &[GaussRational]) -> Option<Vec<GaussRational>> {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<GaussRational>> =
        a.iter().zip(b).map(|(r, v)| r.iter().cloned().chain([v.clone()]).collect()).collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = m[rank][col].inv().expect("nonzero pivot");
        for x in &mut m[rank][col..] {
            *x = &*x * &inv;
        }
        for r in 0..rows {
            if r == rank || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            let (row, pivot) = if r < rank {
                let (a, b) = m.split_at_mut(rank);
                (&mut a[r], &b[0])
            } else {
                let (a, b) = m.split_at_mut(r);
                (&mut b[0], &a[rank])
            };
            for (x, p) in row[col..].iter_mut().zip(&pivot[col..]) {
                *x -= &(&f * p);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    if m[rank..].iter().any(|r| !r[cols].is_zero()) {
        return None;
    }
    let mut x = vec![GaussRational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    Some(x)
}

pub fn identity(n: usize) -> Vec<Vec<GaussRational>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { GaussRational::one() } else { GaussRational::zero() }).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(n: i64) -> GaussRational {
        GaussRational::from_int(n)
    }

    #[test]
    fn small_ranks() {
        assert_eq!(dense_rank(identity(4)), 4);
        let m = vec![vec![g(1), g(2)], vec![g(2), g(4)]];
        assert_eq!(dense_rank(m), 1);
        let i = GaussRational::i();
        // rows (1, i) and (i, -1) are proportional over ℚ(i)
        assert_eq!(dense_rank(vec![vec![g(1), i.clone()], vec![i, g(-1)]]), 1);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = vec![vec![g(1), g(1)], vec![g(1), g(-1)], vec![g(2), g(0)]];
        assert_eq!(solve(&a, &[g(3), g(1), g(4)]).unwrap(), vec![g(2), g(1)]);
        assert!(solve(&a, &[g(3), g(1), g(5)]).is_none());
    }

    fn to_sparse(rows: &[Vec<GaussRational>]) -> Vec<LinComb<usize>> {
        rows.iter().map(|r| r.iter().cloned().enumerate().collect()).collect()
    }

    proptest! {
        #[test]
        fn sparse_and_dense_rank_agree(
            entries in proptest::collection::vec(-2i64..=2, 30),
            rows in 1usize..6,
        ) {
            let cols = 5;
            let m: Vec<Vec<GaussRational>> = (0..rows)
                .map(|r| (0..cols).map(|c| g(entries[(r * cols + c) % entries.len()])).collect())
                .collect();
            let d = dense_rank(m.clone());
            prop_assert_eq!(sparse_rank(&to_sparse(&m)), d);
            let mut e = SparseEchelon::new();
            for r in to_sparse(&m) {
                e.insert(&r);
            }
            for r in to_sparse(&m) {
                prop_assert!(e.contains(&r));
            }
        }
    }
}
