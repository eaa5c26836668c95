//! Commutative Poisson algebras on `C[X, Y, Z]`: the Jacobian bracket
//! `{., .}_phi`, its quotient by `phi`, and principal symbols of algebra
//! elements.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ncalg::{Algebra, Element, Kind};
use crate::parse::{self, Evaluator};
use crate::scalar::Scalar;

/// Exponent triple `(a, b, c)` of `X^a Y^b Z^c`.
pub type Exp = (u32, u32, u32);

/// A polynomial in `X, Y, Z` with no zero coefficients stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct CPoly {
    terms: BTreeMap<Exp, Scalar>,
}

impl CPoly {
    pub fn zero() -> Self {
        CPoly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        CPoly::term((0, 0, 0), c)
    }

    pub fn term(e: Exp, c: Scalar) -> Self {
        let mut p = CPoly::zero();
        p.add_term(e, &c);
        p
    }

    pub fn monomial(a: u32, b: u32, c: u32) -> Self {
        CPoly::term((a, b, c), Scalar::one())
    }

    pub fn x() -> Self {
        CPoly::monomial(1, 0, 0)
    }

    pub fn y() -> Self {
        CPoly::monomial(0, 1, 0)
    }

    pub fn z() -> Self {
        CPoly::monomial(0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exp) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, e: Exp, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn scale(&self, c: &Scalar) -> CPoly {
        if c.is_zero() {
            return CPoly::zero();
        }
        CPoly { terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect() }
    }

    pub fn add(&self, rhs: &CPoly) -> CPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }

    pub fn sub(&self, rhs: &CPoly) -> CPoly {
        self.add(&rhs.scale(&-Scalar::one()))
    }

    pub fn mul(&self, rhs: &CPoly) -> CPoly {
        let mut out = CPoly::zero();
        for ((a, b, c), x) in &self.terms {
            for ((d, e, f), y) in &rhs.terms {
                out.add_term((a + d, b + e, c + f), &(x * y));
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> CPoly {
        (0..e).fold(CPoly::constant(Scalar::one()), |acc, _| acc.mul(self))
    }

    /// Partial derivative; `var` is 0, 1, 2 for `X, Y, Z`.
    pub fn partial(&self, var: usize) -> CPoly {
        let mut out = CPoly::zero();
        for (&(a, b, c), coeff) in &self.terms {
            let exps = [a, b, c];
            if exps[var] == 0 {
                continue;
            }
            let mut lowered = exps;
            lowered[var] -= 1;
            out.add_term((lowered[0], lowered[1], lowered[2]), &(coeff * &Scalar::from_int(exps[var] as i64)));
        }
        out
    }

    /// `max 4a + (2n-2)b + 2nc`, the weight matching the standard filtration.
    pub fn weighted_degree(&self, n: usize) -> Option<u64> {
        self.terms.keys().map(|e| weight(e, n)).max()
    }

    /// The part of weighted degree exactly `d`.
    pub fn component(&self, n: usize, d: u64) -> CPoly {
        CPoly { terms: self.terms.iter().filter(|(e, _)| weight(e, n) == d).map(|(e, c)| (*e, c.clone())).collect() }
    }
}

fn weight(&(a, b, c): &Exp, n: usize) -> u64 {
    let n = n as u64;
    4 * a as u64 + (2 * n - 2) * b as u64 + 2 * n * c as u64
}

impl fmt::Display for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = |&(a, b, c): &Exp| {
            crate::fmt::product(&[
                crate::fmt::power("X", a as usize),
                crate::fmt::power("Y", b as usize),
                crate::fmt::power("Z", c as usize),
            ])
        };
        crate::fmt::write_terms(f, self.terms.iter().rev().map(|(e, c)| (c, text(e))))
    }
}

impl fmt::Debug for CPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct CPolyEval;

impl Evaluator for CPolyEval {
    type Value = CPoly;
    fn scalar(&self, c: Scalar) -> CPoly {
        CPoly::constant(c)
    }
    fn var(&self, name: char) -> Option<CPoly> {
        match name {
            'X' | 'x' => Some(CPoly::x()),
            'Y' | 'y' => Some(CPoly::y()),
            'Z' | 'z' => Some(CPoly::z()),
            _ => None,
        }
    }
    fn add(&self, a: &CPoly, b: &CPoly) -> CPoly {
        a.add(b)
    }
    fn mul(&self, a: &CPoly, b: &CPoly) -> CPoly {
        a.mul(b)
    }
    fn scale(&self, a: &CPoly, c: &Scalar) -> CPoly {
        a.scale(c)
    }
    fn as_scalar(&self, a: &CPoly) -> Option<Scalar> {
        match a.terms.len() {
            0 => Some(Scalar::zero()),
            1 => a.terms.get(&(0, 0, 0)).cloned(),
            _ => None,
        }
    }
}

impl std::str::FromStr for CPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse::parse_with(&CPolyEval, s)
    }
}

/// `phi = X^n + X Y^2 + Z^2`.
pub fn phi_standard(n: usize) -> CPoly {
    CPoly::monomial(n as u32, 0, 0).add(&phi_limit())
}

/// `phi_0 = X Y^2 + Z^2`, whose quotient is the limit graded algebra.
pub fn phi_limit() -> CPoly {
    CPoly::monomial(1, 2, 0).add(&CPoly::monomial(0, 0, 2))
}

/// `{f, g}_phi`: `{X,Y} = phi_Z`, `{X,Z} = -phi_Y`, `{Y,Z} = phi_X`, extended
/// as a biderivation.
pub fn bracket_phi(f: &CPoly, g: &CPoly, phi: &CPoly) -> CPoly {
    let df: Vec<CPoly> = (0..3).map(|k| f.partial(k)).collect();
    let dg: Vec<CPoly> = (0..3).map(|k| g.partial(k)).collect();
    let minor = |a: usize, b: usize| df[a].mul(&dg[b]).sub(&df[b].mul(&dg[a]));
    phi.partial(2)
        .mul(&minor(0, 1))
        .sub(&phi.partial(1).mul(&minor(0, 2)))
        .add(&phi.partial(0).mul(&minor(1, 2)))
}

/// Reduces modulo `Z^2 + rest`, replacing `Z^2` by `-rest` until every
/// exponent of `Z` is 0 or 1. `rest` must not involve `Z`.
pub fn reduce_z_squared(f: &CPoly, rest: &CPoly) -> CPoly {
    let mut out = CPoly::zero();
    let mut pending = f.clone();
    while !pending.is_zero() {
        let mut next = CPoly::zero();
        for (&(a, b, c), coeff) in pending.terms() {
            if c < 2 {
                out.add_term((a, b, c), coeff);
                continue;
            }
            let head = CPoly::term((a, b, c - 2), -coeff.clone());
            next = next.add(&head.mul(rest));
        }
        pending = next;
    }
    out
}

/// The limit quotient `C[X,Y,Z]/(XY^2 + Z^2)` in canonical form.
pub fn reduce_limit(f: &CPoly) -> CPoly {
    reduce_z_squared(f, &CPoly::monomial(1, 2, 0))
}

/// Bracket on the limit graded algebra: `{X,Y} = 2Z`, `{X,Z} = -2XY`,
/// `{Y,Z} = Y^2`, reduced by `Z^2 = -XY^2`.
pub fn bracket_gr_limit(f: &CPoly, g: &CPoly) -> CPoly {
    reduce_limit(&bracket_phi(&reduce_limit(f), &reduce_limit(g), &phi_limit()))
}

/// `{x, .}^m (y)` in the limit quotient.
pub fn hamiltonian_iterate(x: &CPoly, y: &CPoly, m: usize) -> CPoly {
    (0..m).fold(reduce_limit(y), |acc, _| bracket_gr_limit(x, &acc))
}

/// The monomial `u^i v^j w^k` read as `X^i Y^j Z^k`.
pub fn commutative_image(x: &Element) -> CPoly {
    let mut out = CPoly::zero();
    for (m, c) in x.terms() {
        out.add_term((m.i, m.j, m.k), c);
    }
    out
}

/// Principal symbol for the standard filtration: the top-degree monomials
/// of `x` read commutatively.
pub fn principal_symbol(alg: &Algebra, x: &Element) -> Result<CPoly> {
    let d = alg.degree_standard(x)?;
    Ok(commutative_image(&x.filter(|m| alg.monomial_degree(m) == d)))
}

/// Checks `gr [x, y] = {gr x, gr y}_phi` with `phi = X^n + XY^2 + Z^2`: the
/// commutator has no terms above degree `deg x + deg y - 2`, and its
/// component in that degree equals the bracket of the symbols. For a
/// D-algebra the bracket is read in the quotient by `phi`.
pub fn semiclassical_check(alg: &Algebra, x: &Element, y: &Element) -> Result<bool> {
    let n = alg.spec().n();
    let (dx, dy) = (alg.degree_standard(x)?, alg.degree_standard(y)?);
    let target = dx + dy - 2;
    let phi = phi_standard(n);
    let mut bracket = bracket_phi(&principal_symbol(alg, x)?, &principal_symbol(alg, y)?, &phi);
    if alg.kind() == Kind::D {
        bracket = reduce_z_squared(&bracket, &CPoly::monomial(n as u32, 0, 0).add(&CPoly::monomial(1, 2, 0)));
    }
    let comm = alg.commutator(x, y);
    if comm.terms().any(|(m, _)| alg.monomial_degree(m) > target) {
        return Ok(false);
    }
    let top = commutative_image(&comm.filter(|m| alg.monomial_degree(m) == target));
    Ok(top == bracket)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::AlgebraSpec;
    use crate::poly::Poly;

    fn cp(s: &str) -> CPoly {
        s.parse().unwrap()
    }

    #[test]
    fn structure_constants() {
        let phi = phi_standard(3);
        assert_eq!(bracket_phi(&CPoly::x(), &CPoly::y(), &phi), cp("2*Z"));
        assert_eq!(bracket_phi(&CPoly::y(), &CPoly::z(), &phi), cp("3*X^2 + Y^2"));
        assert!(bracket_phi(&phi, &CPoly::x(), &phi).is_zero());
        assert_eq!(bracket_gr_limit(&CPoly::x(), &CPoly::y()), cp("2*Z"));
        assert_eq!(bracket_gr_limit(&CPoly::x(), &CPoly::z()), cp("-2*X*Y"));
        assert_eq!(bracket_gr_limit(&CPoly::y(), &CPoly::z()), cp("Y^2"));
        assert!(bracket_gr_limit(&CPoly::x(), &CPoly::x()).is_zero());
    }

    #[test]
    fn z_iterates_on_y() {
        for m in 0..=6u32 {
            let it = hamiltonian_iterate(&CPoly::z(), &CPoly::y(), m as usize);
            let terms: Vec<_> = it.terms().collect();
            assert_eq!(terms.len(), 1);
            assert_eq!(*terms[0].0, (0, m + 1, 0));
        }
    }

    #[test]
    fn monomial_brackets() {
        for (a, b, c, d) in [(1, 1, 2, 3), (2, 0, 1, 1), (3, 2, 0, 5)] {
            let got = bracket_gr_limit(&CPoly::monomial(a, b, 0), &CPoly::monomial(c, d, 0));
            let k = 2 * (a as i64 * d as i64 - b as i64 * c as i64);
            let want = if k == 0 { CPoly::zero() } else { CPoly::term((a + c - 1, b + d - 1, 1), Scalar::from_int(k)) };
            assert_eq!(got, want);
        }
        for m in 0..=8 {
            assert!(!hamiltonian_iterate(&cp("X*Y"), &CPoly::y(), m).is_zero());
        }
        let y3 = CPoly::monomial(0, 3, 0);
        let g = cp("X^2*Z + Y");
        assert_eq!(bracket_gr_limit(&y3, &g), reduce_limit(&cp("3*Y^2").mul(&bracket_gr_limit(&CPoly::y(), &g))));
    }

    #[test]
    fn display_round_trip() {
        let f = cp("X^2*Y - (1/2+i)*Z + 3");
        assert_eq!(f.to_string().parse::<CPoly>().unwrap(), f);
    }

    #[test]
    fn semiclassical_examples() {
        let alg = Algebra::new(AlgebraSpec::h(Poly::from_ints(&[8, 8, 3]), Scalar::from_int(2)).unwrap());
        let (u, v) = (Element::u(), Element::v());
        assert!(semiclassical_check(&alg, &u, &v).unwrap());
        assert!(semiclassical_check(&alg, &u, &alg.pow(&u, 2)).unwrap());
        let d = Algebra::new(AlgebraSpec::d(Poly::from_ints(&[0, 0, 0, 0, 1]), Scalar::one()).unwrap());
        let w = Element::w();
        assert!(semiclassical_check(&d, &w, &d.mul(&v, &w)).unwrap());
        assert_eq!(semiclassical_check(&d, &w, &Element::zero()), Err(Error::ZeroElement));
    }

    #[test]
    fn relation_symbol_is_phi() {
        let alg = Algebra::new(AlgebraSpec::h(Poly::from_ints(&[1, 0, 2, 4]), Scalar::from_int(3)).unwrap());
        let q = crate::poly::solve_q_from_p(alg.spec().p()).unwrap();
        let omega = alg.center_element(&q).unwrap();
        assert_eq!(principal_symbol(&alg, &omega).unwrap(), phi_standard(4));
    }
}
