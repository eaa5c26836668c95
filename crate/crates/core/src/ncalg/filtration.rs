//! The limit filtration on `D(Q, gamma)`: `u^i v^j w^e` sits in level
//! `(j + e, 2i + e)`, levels ordered lexicographically.

use std::ops::Add;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

use super::element::{Element, Monomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LimitDegree {
    pub a: u64,
    pub b: u64,
}

impl LimitDegree {
    pub fn new(a: u64, b: u64) -> Self {
        LimitDegree { a, b }
    }

    pub fn of(m: &Monomial) -> Self {
        LimitDegree { a: (m.j + m.k) as u64, b: (2 * m.i + m.k) as u64 }
    }
}

impl Add for LimitDegree {
    type Output = LimitDegree;
    fn add(self, rhs: LimitDegree) -> LimitDegree {
        LimitDegree { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl std::fmt::Display for LimitDegree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

pub fn degree_limit(x: &Element) -> Result<LimitDegree> {
    x.terms().map(|(m, _)| LimitDegree::of(m)).max().ok_or(Error::ZeroElement)
}

/// The monomial of top limit degree with its coefficient. For D-algebra
/// elements (`k <= 1`) each level holds exactly one monomial.
pub fn leading_term(x: &Element) -> Result<(Monomial, Scalar)> {
    x.terms()
        .max_by_key(|(m, _)| (LimitDegree::of(m), **m))
        .map(|(m, c)| (*m, c.clone()))
        .ok_or(Error::ZeroElement)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_degrees() {
        assert_eq!(degree_limit(&Element::u()).unwrap(), LimitDegree::new(0, 2));
        assert_eq!(degree_limit(&Element::w()).unwrap(), LimitDegree::new(1, 1));
        assert_eq!(degree_limit(&Element::monomial(3, 2, 1)).unwrap(), LimitDegree::new(3, 7));
        assert_eq!(degree_limit(&Element::zero()), Err(Error::ZeroElement));
    }

    #[test]
    fn lexicographic() {
        assert!(LimitDegree::new(1, 0) > LimitDegree::new(0, 100));
        let x = Element::monomial(5, 0, 0).add(&Element::monomial(0, 1, 0).scale(&Scalar::from_int(3)));
        assert_eq!(leading_term(&x).unwrap(), (Monomial::new(0, 1, 0), Scalar::from_int(3)));
    }
}
