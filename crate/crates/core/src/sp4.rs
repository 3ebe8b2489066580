//! sp₄ in a fixed 10-element matrix basis. Brackets are computed as exact 4×4
//! commutators and re-expressed in the basis through a precomputed solve.

use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::linalg::solve;
use crate::lincomb::LinComb;
use crate::scalars::GaussRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sp4Basis {
    /// E11 − E33
    H1,
    /// E22 − E44
    H2,
    E13,
    E31,
    E24,
    E42,
    /// E12 − E43
    E12mE43,
    /// E21 − E34
    E21mE34,
    /// E14 + E23
    E14pE23,
    /// E41 + E32
    E41pE32,
}

pub type Sp4Element = LinComb<Sp4Basis>;
type Matrix = [[i64; 4]; 4];

impl Sp4Basis {
    pub const ALL: [Sp4Basis; 10] = [
        Sp4Basis::H1,
        Sp4Basis::H2,
        Sp4Basis::E13,
        Sp4Basis::E31,
        Sp4Basis::E24,
        Sp4Basis::E42,
        Sp4Basis::E12mE43,
        Sp4Basis::E21mE34,
        Sp4Basis::E14pE23,
        Sp4Basis::E41pE32,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Sp4Basis::H1 => "E11-E33",
            Sp4Basis::H2 => "E22-E44",
            Sp4Basis::E13 => "E13",
            Sp4Basis::E31 => "E31",
            Sp4Basis::E24 => "E24",
            Sp4Basis::E42 => "E42",
            Sp4Basis::E12mE43 => "E12-E43",
            Sp4Basis::E21mE34 => "E21-E34",
            Sp4Basis::E14pE23 => "E14+E23",
            Sp4Basis::E41pE32 => "E41+E32",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|b| b.name() == s)
    }

    /// Signed matrix units (row, col, sign), 1-based.
    fn entries(self) -> &'static [(usize, usize, i64)] {
        match self {
            Sp4Basis::H1 => &[(1, 1, 1), (3, 3, -1)],
            Sp4Basis::H2 => &[(2, 2, 1), (4, 4, -1)],
            Sp4Basis::E13 => &[(1, 3, 1)],
            Sp4Basis::E31 => &[(3, 1, 1)],
            Sp4Basis::E24 => &[(2, 4, 1)],
            Sp4Basis::E42 => &[(4, 2, 1)],
            Sp4Basis::E12mE43 => &[(1, 2, 1), (4, 3, -1)],
            Sp4Basis::E21mE34 => &[(2, 1, 1), (3, 4, -1)],
            Sp4Basis::E14pE23 => &[(1, 4, 1), (2, 3, 1)],
            Sp4Basis::E41pE32 => &[(4, 1, 1), (3, 2, 1)],
        }
    }

    pub fn matrix(self) -> Matrix {
        let mut m = [[0; 4]; 4];
        for &(r, c, v) in self.entries() {
            m[r - 1][c - 1] = v;
        }
        m
    }
}

impl fmt::Display for Sp4Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let mut out = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = (0..4).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn commutator(a: &Matrix, b: &Matrix) -> Matrix {
    let (ab, ba) = (mat_mul(a, b), mat_mul(b, a));
    let mut out = [[0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = ab[i][j] - ba[i][j];
        }
    }
    out
}

/// The symplectic form J = [[0, I₂], [−I₂, 0]].
fn symplectic_j() -> Matrix {
    [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]
}

/// Whether Xᵀ J + J X = 0.
pub fn is_symplectic(x: &Matrix) -> bool {
    let j = symplectic_j();
    let mut xt = [[0; 4]; 4];
    for i in 0..4 {
        for k in 0..4 {
            xt[i][k] = x[k][i];
        }
    }
    let (a, b) = (mat_mul(&xt, &j), mat_mul(&j, x));
    (0..4).all(|i| (0..4).all(|k| a[i][k] + b[i][k] == 0))
}

/// Coordinates of a matrix in the basis; `None` if it is not in sp₄.
pub fn express(m: &Matrix) -> Option<Sp4Element> {
    let a: Vec<Vec<GaussRational>> = (0..16)
        .map(|e| Sp4Basis::ALL.iter().map(|b| GaussRational::from_int(b.matrix()[e / 4][e % 4])).collect())
        .collect();
    let rhs: Vec<GaussRational> = (0..16).map(|e| GaussRational::from_int(m[e / 4][e % 4])).collect();
    let x = solve(&a, &rhs)?;
    Some(Sp4Basis::ALL.iter().copied().zip(x).collect())
}

struct Tables {
    bracket: Vec<Vec<Sp4Element>>,
    trace: [[i64; 10]; 10],
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        for b in Sp4Basis::ALL {
            assert!(is_symplectic(&b.matrix()), "{b} is not symplectic");
        }
        let mut trace = [[0; 10]; 10];
        let bracket = Sp4Basis::ALL
            .iter()
            .map(|a| {
                Sp4Basis::ALL
                    .iter()
                    .map(|b| {
                        let p = mat_mul(&a.matrix(), &b.matrix());
                        trace[a.index()][b.index()] = (0..4).map(|i| p[i][i]).sum();
                        express(&commutator(&a.matrix(), &b.matrix())).expect("sp4 is closed under brackets")
                    })
                    .collect()
            })
            .collect();
        Tables { bracket, trace }
    })
}

pub fn bracket_basis(a: Sp4Basis, b: Sp4Basis) -> &'static Sp4Element {
    &tables().bracket[a.index()][b.index()]
}

/// tr(ab) on basis elements.
pub fn trace_basis(a: Sp4Basis, b: Sp4Basis) -> i64 {
    tables().trace[a.index()][b.index()]
}

pub fn sp4_bracket(x: &Sp4Element, y: &Sp4Element) -> Sp4Element {
    x.bilinear(y, |a, b| bracket_basis(*a, *b).clone())
}

pub fn trace_form(x: &Sp4Element, y: &Sp4Element) -> GaussRational {
    let mut acc = GaussRational::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            let t = trace_basis(*a, *b);
            if t != 0 {
                acc += &(&(ca * cb) * &GaussRational::from_int(t));
            }
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sp4Basis::*;

    fn e(b: Sp4Basis) -> Sp4Element {
        LinComb::basis(b)
    }

    #[test]
    fn examples() {
        assert_eq!(sp4_bracket(&e(E13), &e(E31)), e(H1));
        assert_eq!(trace_basis(E13, E31), 1);
        assert_eq!(trace_basis(E12mE43, E21mE34), 2);
        assert_eq!(sp4_bracket(&e(E12mE43), &e(E21mE34)), &e(H1) - &e(H2));
    }

    #[test]
    fn basis_is_independent_and_symplectic() {
        let rows: Vec<Vec<GaussRational>> = Sp4Basis::ALL
            .iter()
            .map(|b| b.matrix().iter().flatten().map(|&v| GaussRational::from_int(v)).collect())
            .collect();
        assert_eq!(crate::linalg::dense_rank(rows), 10);
        for b in Sp4Basis::ALL {
            assert!(is_symplectic(&b.matrix()));
            assert_eq!(express(&b.matrix()).unwrap(), e(b));
            assert_eq!(Sp4Basis::from_name(b.name()), Some(b));
        }
        assert!(express(&[[1, 0, 0, 0], [0; 4], [0; 4], [0; 4]]).is_none());
    }

    #[test]
    fn lie_and_trace_axioms() {
        for a in Sp4Basis::ALL {
            for b in Sp4Basis::ALL {
                assert_eq!(sp4_bracket(&e(a), &e(b)), -sp4_bracket(&e(b), &e(a)));
                assert_eq!(trace_basis(a, b), trace_basis(b, a));
                for c in Sp4Basis::ALL {
                    let j = &(&sp4_bracket(&sp4_bracket(&e(a), &e(b)), &e(c))
                        + &sp4_bracket(&sp4_bracket(&e(b), &e(c)), &e(a)))
                        + &sp4_bracket(&sp4_bracket(&e(c), &e(a)), &e(b));
                    assert!(j.is_zero());
                    let lhs = trace_form(&sp4_bracket(&e(a), &e(b)), &e(c));
                    let rhs = trace_form(&e(a), &sp4_bracket(&e(b), &e(c)));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }
}
