//! Finite linear combinations of basis symbols with ℚ(i) coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalars::{GaussRational, Rational};

/// A sparse vector over ℚ(i), keyed by an ordered symbol type.
/// Zero coefficients are never stored, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<S: Ord> {
    terms: BTreeMap<S, GaussRational>,
}

impl<S: Ord> Default for LinComb<S> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<S: Ord + Clone> LinComb<S> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(s: S) -> Self {
        Self::term(s, GaussRational::one())
    }

    pub fn term(s: S, c: GaussRational) -> Self {
        let mut out = Self::zero();
        out.add_term(s, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, s: &S) -> GaussRational {
        self.terms.get(s).cloned().unwrap_or_else(GaussRational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&S, &GaussRational)> {
        self.terms.iter()
    }

    pub fn symbols(&self) -> impl Iterator<Item = &S> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, s: S, c: GaussRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(s) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + &c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &GaussRational) {
        if c.is_zero() {
            return;
        }
        for (s, v) in &other.terms {
            self.add_term(s.clone(), v * c);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        self.add_scaled(other, &GaussRational::one());
    }

    pub fn scaled(&self, c: &GaussRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb { terms: self.terms.iter().map(|(s, v)| (s.clone(), v * c)).collect() }
    }

    pub fn scaled_rat(&self, r: &Rational) -> Self {
        self.scaled(&GaussRational::real(r.clone()))
    }

    /// Linear extension of a map on symbols.
    pub fn flat_map<T: Ord + Clone>(&self, mut f: impl FnMut(&S) -> LinComb<T>) -> LinComb<T> {
        let mut out = LinComb::zero();
        for (s, c) in &self.terms {
            out.add_scaled(&f(s), c);
        }
        out
    }

    /// Fallible linear extension.
    pub fn try_flat_map<T: Ord + Clone, E>(
        &self,
        mut f: impl FnMut(&S) -> Result<LinComb<T>, E>,
    ) -> Result<LinComb<T>, E> {
        let mut out = LinComb::zero();
        for (s, c) in &self.terms {
            out.add_scaled(&f(s)?, c);
        }
        Ok(out)
    }

    /// Bilinear extension of a map on symbol pairs.
    pub fn bilinear<T: Ord + Clone, U: Ord + Clone>(
        &self,
        other: &LinComb<T>,
        mut f: impl FnMut(&S, &T) -> LinComb<U>,
    ) -> LinComb<U> {
        let mut out = LinComb::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_scaled(&f(a, b), &(ca * cb));
            }
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<S, GaussRational> {
        self.terms
    }
}

impl<S: Ord + Clone> FromIterator<(S, GaussRational)> for LinComb<S> {
    fn from_iter<I: IntoIterator<Item = (S, GaussRational)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (s, c) in iter {
            out.add_term(s, c);
        }
        out
    }
}

impl<S: Ord + Clone> Add for &LinComb<S> {
    type Output = LinComb<S>;
    fn add(self, rhs: &LinComb<S>) -> LinComb<S> {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl<S: Ord + Clone> Sub for &LinComb<S> {
    type Output = LinComb<S>;
    fn sub(self, rhs: &LinComb<S>) -> LinComb<S> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-GaussRational::one());
        out
    }
}

impl<S: Ord + Clone> Neg for &LinComb<S> {
    type Output = LinComb<S>;
    fn neg(self) -> LinComb<S> {
        self.scaled(&-GaussRational::one())
    }
}

impl<S: Ord + Clone> Add for LinComb<S> {
    type Output = LinComb<S>;
    fn add(self, rhs: LinComb<S>) -> LinComb<S> {
        &self + &rhs
    }
}

impl<S: Ord + Clone> Sub for LinComb<S> {
    type Output = LinComb<S>;
    fn sub(self, rhs: LinComb<S>) -> LinComb<S> {
        &self - &rhs
    }
}

impl<S: Ord + Clone> Neg for LinComb<S> {
    type Output = LinComb<S>;
    fn neg(self) -> LinComb<S> {
        -&self
    }
}

/// Writes `coef*sym` as the `idx`-th term of a sum, including the separator.
/// Unit coefficients are omitted; pure imaginary ones print as `rI`,
/// mixed ones as `(a+bI)`.
pub fn write_term(f: &mut impl fmt::Write, idx: usize, c: &GaussRational, sym: &str) -> fmt::Result {
    let (negative, body) = if c.im.is_zero() {
        (c.re.is_negative(), if c.re.abs().is_one() { String::new() } else { format!("{}*", c.re.abs()) })
    } else if c.re.is_zero() {
        (c.im.is_negative(), format!("{}I*", c.im.abs()))
    } else {
        let sign = if c.im.is_negative() { '-' } else { '+' };
        (false, format!("({}{}{}I)*", c.re, sign, c.im.abs()))
    };
    match (idx, negative) {
        (0, false) => {}
        (0, true) => f.write_str("-")?,
        (_, false) => f.write_str(" + ")?,
        (_, true) => f.write_str(" - ")?,
    }
    write!(f, "{body}{sym}")
}

impl<S: Ord + Clone + fmt::Display> fmt::Display for LinComb<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            write_term(f, i, c, &s.to_string())?;
        }
        Ok(())
    }
}

impl<S: Ord + Clone + fmt::Display> fmt::Debug for LinComb<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_removes_terms() {
        let mut a = LinComb::basis("x");
        a.add_term("x", GaussRational::from_int(-1));
        assert!(a.is_zero());
        assert_eq!(a.to_string(), "0");
    }

    #[test]
    fn printing() {
        let mut a = LinComb::basis("b");
        a.add_term("a", GaussRational::from_int(2));
        a.add_term("c", GaussRational::new(Rational::zero(), Rational::new(-1, 2)));
        a.add_term("d", GaussRational::new(Rational::new(1, 2), Rational::from_int(1)));
        assert_eq!(a.to_string(), "2*a + b - 1/2I*c + (1/2+1I)*d");
        assert_eq!((-&LinComb::basis("q")).to_string(), "-q");
    }
}
