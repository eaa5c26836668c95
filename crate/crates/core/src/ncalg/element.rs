use std::collections::BTreeMap;
use std::fmt;

use crate::poly::Poly;
use crate::scalar::Scalar;

/// Basis word `u^i v^j w^k`, always in u-then-v-then-w order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { i: 0, j: 0, k: 0 };

    pub const fn new(i: u32, j: u32, k: u32) -> Self {
        Monomial { i, j, k }
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }

    pub(crate) fn text(&self) -> String {
        crate::fmt::product(&[
            crate::fmt::power("u", self.i as usize),
            crate::fmt::power("v", self.j as usize),
            crate::fmt::power("w", self.k as usize),
        ])
    }
}

/// A finite linear combination of basis monomials with no zero
/// coefficients stored, so structural equality is equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Element {
    terms: BTreeMap<Monomial, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Element::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        Element::term(Monomial::ONE, c)
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(m, &c);
        e
    }

    pub fn monomial(i: u32, j: u32, k: u32) -> Self {
        Element::term(Monomial::new(i, j, k), Scalar::one())
    }

    pub fn u() -> Self {
        Element::monomial(1, 0, 0)
    }

    pub fn v() -> Self {
        Element::monomial(0, 1, 0)
    }

    pub fn w() -> Self {
        Element::monomial(0, 0, 1)
    }

    /// `f(u)`, already in normal form.
    pub fn poly_in_u(f: &Poly) -> Self {
        let mut e = Element::zero();
        for (i, c) in f.coeffs().iter().enumerate() {
            e.add_term(Monomial::new(i as u32, 0, 0), c);
        }
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(terms: I) -> Self {
        let mut e = Element::zero();
        for (m, c) in terms {
            e.add_term(m, &c);
        }
        e
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

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The value as a scalar, if no non-constant monomial appears.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// The element as a polynomial in `u`, if it lies in `C[u]`.
    pub fn as_poly_in_u(&self) -> Option<Poly> {
        if self.terms.keys().any(|m| m.j != 0 || m.k != 0) {
            return None;
        }
        let deg = self.terms.keys().map(|m| m.i as usize).max().unwrap_or(0);
        let mut coeffs = vec![Scalar::zero(); deg + 1];
        for (m, c) in &self.terms {
            coeffs[m.i as usize] = c.clone();
        }
        Some(Poly::from_coeffs(coeffs))
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let unit = c.is_one();
        for (m, a) in &other.terms {
            if unit {
                self.add_term(*m, a);
            } else {
                self.add_term(*m, &(a * c));
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element { terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &Scalar::one());
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        out.add_scaled(other, &-Scalar::one());
        out
    }

    pub fn neg(&self) -> Element {
        self.scale(&-Scalar::one())
    }

    /// Keeps the terms selected by `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&Monomial) -> bool) -> Element {
        Element { terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (*m, c.clone())).collect() }
    }
}

impl std::ops::Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        Element::add(self, rhs)
    }
}

impl std::ops::Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        Element::sub(self, rhs)
    }
}

impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::neg(self)
    }
}

/// Highest monomials first, e.g. `u^2*v-4*u*w+2*i`.
impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::fmt::write_terms(f, self.terms.iter().rev().map(|(m, c)| (c, m.text())))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
