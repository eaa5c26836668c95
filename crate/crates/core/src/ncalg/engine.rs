//! Normal-form multiplication.
//!
//! Products are built from one primitive, a basis monomial times a single
//! generator on the right, defined recursively through the relations
//!
//! ```text
//! v u = u v - 2w
//! w u = u w + 2u v - 2w - gamma
//! w v = v w - v^2 - P(u)
//! w w = -Q(u) - u v^2 + 2v w - 2v^2 - 2P(u) + gamma v      (D only)
//! ```
//!
//! and memoised per algebra. Monomial-by-monomial products are memoised on
//! top of that.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::poly::{self, OpPoly, Poly};
use crate::scalar::Scalar;

use super::element::{Element, Monomial};
use super::spec::{AlgebraSpec, Kind};
use super::Gen;

/// Intermediate results above this many terms indicate a bug, not a big input.
pub const TERM_LIMIT: usize = 1_000_000;

/// Products below this many term pairs are not worth splitting across threads.
const PAR_THRESHOLD: usize = 64;

type Cache<K> = RwLock<HashMap<K, Arc<Element>>>;

/// An algebra `H(P, gamma)` or `D(Q, gamma)` together with its product caches.
pub struct Algebra {
    spec: AlgebraSpec,
    exec: Exec,
    gen_cache: Cache<(Monomial, Gen)>,
    mono_cache: Cache<(Monomial, Monomial)>,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra::with_exec(self.spec.clone(), self.exec)
    }
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra({})", self.spec)
    }
}

fn lookup<K: std::hash::Hash + Eq>(cache: &Cache<K>, key: &K) -> Option<Arc<Element>> {
    cache.read().expect("cache lock poisoned").get(key).cloned()
}

fn store<K: std::hash::Hash + Eq>(cache: &Cache<K>, key: K, value: Element) -> Arc<Element> {
    let value = Arc::new(value);
    cache.write().expect("cache lock poisoned").entry(key).or_insert(value).clone()
}

fn guard(e: &Element) {
    assert!(e.len() <= TERM_LIMIT, "normal form exceeded {TERM_LIMIT} terms");
}

impl Algebra {
    pub fn new(spec: AlgebraSpec) -> Self {
        Algebra::with_exec(spec, Exec::default())
    }

    pub fn with_exec(spec: AlgebraSpec, exec: Exec) -> Self {
        Algebra { spec, exec, gen_cache: RwLock::default(), mono_cache: RwLock::default() }
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn exec(&self) -> Exec {
        self.exec
    }

    pub fn kind(&self) -> Kind {
        self.spec.kind()
    }

    fn gamma(&self) -> &Scalar {
        self.spec.gamma()
    }

    /// `u^i v^j w^k` times one generator, in normal form.
    pub fn mono_times_gen(&self, m: Monomial, g: Gen) -> Arc<Element> {
        let Monomial { i, j, k } = m;
        let trivial = match g {
            Gen::U => j == 0 && k == 0,
            Gen::V => k == 0,
            Gen::W => k == 0 || self.kind() == Kind::H,
        };
        if trivial {
            let next = match g {
                Gen::U => Monomial::new(i + 1, j, k),
                Gen::V => Monomial::new(i, j + 1, k),
                Gen::W => Monomial::new(i, j, k + 1),
            };
            return Arc::new(Element::term(next, Scalar::one()));
        }
        if let Some(hit) = lookup(&self.gen_cache, &(m, g)) {
            return hit;
        }
        let value = match g {
            Gen::U => self.mono_times_u(m),
            Gen::V => self.mono_times_v(m),
            Gen::W => self.mono_times_w(m),
        };
        guard(&value);
        store(&self.gen_cache, (m, g), value)
    }

    fn mono_times_u(&self, m: Monomial) -> Element {
        let Monomial { i, j, k } = m;
        let two = Scalar::from_int(2);
        if k > 0 {
            // m' (w u) = m' (u w + 2 u v - 2 w - gamma)
            let head = Monomial::new(i, j, k - 1);
            let hu = self.mono_times_gen(head, Gen::U);
            let mut out = self.elem_times_gen(&hu, Gen::W);
            out.add_scaled(&self.elem_times_gen(&hu, Gen::V), &two);
            out.add_term(m, &-&two);
            out.add_term(head, &-self.gamma());
            out
        } else {
            // m' (v u) = m' (u v - 2 w)
            let head = Monomial::new(i, j - 1, 0);
            let hu = self.mono_times_gen(head, Gen::U);
            let mut out = self.elem_times_gen(&hu, Gen::V);
            out.add_term(Monomial::new(i, j - 1, 1), &-&two);
            out
        }
    }

    fn mono_times_v(&self, m: Monomial) -> Element {
        // m' (w v) = m' (v w - v^2 - P(u))
        let Monomial { i, j, k } = m;
        let head = Monomial::new(i, j, k - 1);
        let hv = self.mono_times_gen(head, Gen::V);
        let mut out = self.elem_times_gen(&hv, Gen::W);
        out.add_scaled(&self.elem_times_gen(&hv, Gen::V), &-Scalar::one());
        out.add_scaled(&self.elem_times_poly_in_u(&Element::term(head, Scalar::one()), self.spec.p()), &-Scalar::one());
        out
    }

    fn mono_times_w(&self, m: Monomial) -> Element {
        // D only, k = 1: m' (w w) = m' (-Q(u) - u v^2 + 2 v w - 2 v^2 - 2 P(u) + gamma v)
        let Monomial { i, j, .. } = m;
        let head = Element::monomial(i, j, 0);
        let q = self.spec.q().expect("D-algebra carries Q");
        let two = Scalar::from_int(2);
        let shift = q + &self.spec.p().scale(&two);
        let mut out = self.elem_times_poly_in_u(&head, &shift).neg();
        let huv = self.elem_times_gen(&self.elem_times_gen(&self.elem_times_gen(&head, Gen::U), Gen::V), Gen::V);
        out.add_scaled(&huv, &-Scalar::one());
        out.add_term(Monomial::new(i, j + 1, 1), &two);
        out.add_term(Monomial::new(i, j + 2, 0), &-&two);
        out.add_term(Monomial::new(i, j + 1, 0), self.gamma());
        out
    }

    pub fn elem_times_gen(&self, x: &Element, g: Gen) -> Element {
        let mut out = Element::zero();
        for (m, c) in x.terms() {
            out.add_scaled(&self.mono_times_gen(*m, g), c);
        }
        guard(&out);
        out
    }

    /// `x * f(u)`.
    pub fn elem_times_poly_in_u(&self, x: &Element, f: &Poly) -> Element {
        let mut out = Element::zero();
        let mut power = x.clone();
        for (l, c) in f.coeffs().iter().enumerate() {
            if l > 0 {
                power = self.elem_times_gen(&power, Gen::U);
            }
            out.add_scaled(&power, c);
        }
        out
    }

    /// Product of two basis monomials.
    pub fn mono_times_mono(&self, a: Monomial, b: Monomial) -> Arc<Element> {
        if b.is_one() {
            return Arc::new(Element::term(a, Scalar::one()));
        }
        if a.is_one() {
            return Arc::new(Element::term(b, Scalar::one()));
        }
        if let Some(hit) = lookup(&self.mono_cache, &(a, b)) {
            return hit;
        }
        let mut x = Element::term(a, Scalar::one());
        for _ in 0..b.i {
            x = self.elem_times_gen(&x, Gen::U);
        }
        for _ in 0..b.j {
            x = self.elem_times_gen(&x, Gen::V);
        }
        for _ in 0..b.k {
            x = self.elem_times_gen(&x, Gen::W);
        }
        store(&self.mono_cache, (a, b), x)
    }

    /// Normal form of `x * y`.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        if let Some(c) = x.as_scalar() {
            return y.scale(&c);
        }
        if let Some(c) = y.as_scalar() {
            return x.scale(&c);
        }
        let left: Vec<(Monomial, Scalar)> = x.terms().map(|(m, c)| (*m, c.clone())).collect();
        let row = |(a, ca): &(Monomial, Scalar)| {
            let mut acc = Element::zero();
            for (b, cb) in y.terms() {
                acc.add_scaled(&self.mono_times_mono(*a, *b), &(ca * cb));
            }
            acc
        };
        let exec = if left.len() * y.len() >= PAR_THRESHOLD { self.exec } else { Exec::Sequential };
        let out = par::map_reduce(exec, &left, Element::zero, row, |mut a, b| {
            a.add_scaled(&b, &Scalar::one());
            a
        });
        guard(&out);
        out
    }

    /// Left-to-right product of a sequence.
    pub fn product<'a, I: IntoIterator<Item = &'a Element>>(&self, factors: I) -> Element {
        factors.into_iter().fold(Element::one(), |acc, f| self.mul(&acc, f))
    }

    pub fn pow(&self, x: &Element, e: u32) -> Element {
        let mut acc = Element::one();
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// `[x, y] = xy - yx`.
    pub fn commutator(&self, x: &Element, y: &Element) -> Element {
        self.mul(x, y).sub(&self.mul(y, x))
    }

    /// `f(x)` by Horner's scheme.
    pub fn eval_poly(&self, f: &Poly, x: &Element) -> Element {
        let mut acc = Element::zero();
        for c in f.coeffs().iter().rev() {
            acc = self.mul(&acc, x);
            acc.add_term(Monomial::ONE, c);
        }
        acc
    }

    /// Image of `x` under the homomorphism sending `u, v, w` to `images`,
    /// evaluated in this algebra.
    pub fn substitute(&self, x: &Element, images: &[Element; 3]) -> Element {
        let mut powers: [Vec<Element>; 3] = Default::default();
        let mut power = |slot: usize, e: u32| -> Element {
            let table = &mut powers[slot];
            if table.is_empty() {
                table.push(Element::one());
            }
            while table.len() <= e as usize {
                let next = self.mul(table.last().expect("non-empty"), &images[slot]);
                table.push(next);
            }
            table[e as usize].clone()
        };
        let mut out = Element::zero();
        for (m, c) in x.terms() {
            let (a, b, d) = (power(0, m.i), power(1, m.j), power(2, m.k));
            let term = self.mul(&self.mul(&a, &b), &d);
            out.add_scaled(&term, c);
        }
        out
    }

    /// `p(ad f, l_f)(x)`, where `ad f = [f, .]` and `l_f = f * .` commute.
    pub fn apply_op_poly(&self, p: &OpPoly, f: &Element, x: &Element) -> Element {
        let mut by_t: HashMap<usize, Vec<(usize, Scalar)>> = HashMap::new();
        for ((s_pow, t_pow), c) in p.terms() {
            by_t.entry(t_pow).or_default().push((s_pow, c.clone()));
        }
        let mut out = Element::zero();
        let max_t = by_t.keys().copied().max().unwrap_or(0);
        let mut left = x.clone();
        for t_pow in 0..=max_t {
            if t_pow > 0 {
                left = self.mul(f, &left);
            }
            let Some(row) = by_t.get(&t_pow) else { continue };
            let max_s = row.iter().map(|(s, _)| *s).max().unwrap_or(0);
            let mut adj = left.clone();
            for s_pow in 0..=max_s {
                if s_pow > 0 {
                    adj = self.commutator(f, &adj);
                }
                for (s, c) in row {
                    if *s == s_pow {
                        out.add_scaled(&adj, c);
                    }
                }
            }
        }
        out
    }

    /// `Omega = Q(u) + u v^2 + w^2 - 2 w v - gamma v` for any `Q` paired
    /// with this algebra's `P` up to an additive constant.
    pub fn center_element(&self, q: &Poly) -> Result<Element> {
        if !poly::satisfies_evenness(q, self.spec.p()) {
            return Err(Error::PolynomialMismatch);
        }
        let (u, v, w) = (Element::u(), Element::v(), Element::w());
        let mut omega = Element::poly_in_u(q);
        omega.add_scaled(&self.product([&u, &v, &v]), &Scalar::one());
        omega.add_scaled(&self.mul(&w, &w), &Scalar::one());
        omega.add_scaled(&self.mul(&w, &v), &Scalar::from_int(-2));
        omega.add_scaled(&v, &-self.gamma());
        Ok(omega)
    }

    /// True iff `x` commutes with `u` and `v` (and hence with `w = [u,v]/2`).
    pub fn is_central(&self, x: &Element) -> bool {
        self.commutator(x, &Element::u()).is_zero() && self.commutator(x, &Element::v()).is_zero()
    }

    /// `max 4i + (2n-2)j + 2nk` over the monomials of `x`.
    pub fn degree_standard(&self, x: &Element) -> Result<u64> {
        x.terms().map(|(m, _)| self.monomial_degree(m)).max().ok_or(Error::ZeroElement)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u64 {
        let n = self.spec.n() as u64;
        4 * m.i as u64 + (2 * n - 2) * m.j as u64 + 2 * n * m.k as u64
    }

    /// Parses the word grammar (`u v w`, or `U V W`) and evaluates it here.
    pub fn parse_element(&self, src: &str) -> Result<Element> {
        crate::parse::parse_with(self, src)
    }
}

impl crate::parse::Evaluator for Algebra {
    type Value = Element;
    fn scalar(&self, c: Scalar) -> Element {
        Element::scalar(c)
    }
    fn var(&self, name: char) -> Option<Element> {
        match name {
            'u' | 'U' => Some(Element::u()),
            'v' | 'V' => Some(Element::v()),
            'w' | 'W' => Some(Element::w()),
            _ => None,
        }
    }
    fn add(&self, a: &Element, b: &Element) -> Element {
        a.add(b)
    }
    fn mul(&self, a: &Element, b: &Element) -> Element {
        Algebra::mul(self, a, b)
    }
    fn scale(&self, a: &Element, c: &Scalar) -> Element {
        a.scale(c)
    }
    fn as_scalar(&self, a: &Element) -> Option<Scalar> {
        a.as_scalar()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::rewrite;

    fn cubic(a: i64, b: i64, c: i64, gamma: Scalar) -> Algebra {
        Algebra::new(AlgebraSpec::d(Poly::from_ints(&[c, b, a, 1]), gamma).unwrap())
    }

    fn el(alg: &Algebra, src: &str) -> Element {
        alg.parse_element(src).unwrap()
    }

    #[test]
    fn relations() {
        let alg = cubic(0, 0, 0, Scalar::from_int(5));
        let (u, v, w) = (Element::u(), Element::v(), Element::w());
        assert_eq!(alg.mul(&v, &u).to_string(), "u*v-2*w");
        assert_eq!(alg.commutator(&u, &v), el(&alg, "2*w"));
        assert_eq!(alg.commutator(&u, &w), el(&alg, "-2*u*v + 2*w + 5"));
        assert_eq!(alg.commutator(&v, &w), el(&alg, "v^2 + 3*u^2 + 8*u + 8"));
        assert!(alg.commutator(&u, &alg.pow(&u, 3)).is_zero());
    }

    #[test]
    fn v_times_u_squared() {
        let gamma = Scalar::gauss((1, 3), (2, 1));
        let alg = cubic(1, 2, 3, gamma);
        let got = alg.mul(&Element::v(), &alg.pow(&Element::u(), 2));
        assert_eq!(got, el(&alg, "u^2*v - 4*u*w - 4*u*v + 4*w + 2*(1/3+2*i)"));
    }

    #[test]
    fn d_relation_vanishes() {
        let alg = cubic(2, -1, 7, Scalar::i());
        let omega = alg.center_element(alg.spec().q().unwrap()).unwrap();
        assert!(omega.is_zero());
    }

    #[test]
    fn casimir_is_central_in_h() {
        for gamma in [0, 1] {
            let alg = Algebra::new(AlgebraSpec::h(Poly::from_ints(&[8, 8, 3]), Scalar::from_int(gamma)).unwrap());
            let omega = alg.center_element(&Poly::from_ints(&[0, 0, 0, 1])).unwrap();
            assert!(alg.is_central(&omega));
            assert!(alg.commutator(&omega, &Element::w()).is_zero());
            let want = el(&alg, &format!("u^3 + u*v^2 + w*w - 2*w*v - {gamma}*v"));
            assert_eq!(omega, want);
            let shifted = alg.center_element(&Poly::from_ints(&[5, 0, 0, 1])).unwrap();
            assert_eq!(shifted, omega.add(&Element::scalar(Scalar::from_int(5))));
        }
        let alg = Algebra::new(AlgebraSpec::h(Poly::from_ints(&[8, 8, 3]), Scalar::one()).unwrap());
        assert!(!alg.is_central(&Element::u()));
        assert!(alg.is_central(&Element::scalar(Scalar::gauss((7, 1), (3, 1)))));
        assert_eq!(alg.center_element(&Poly::from_ints(&[0, 1, 0, 1])), Err(Error::PolynomialMismatch));
    }

    #[test]
    fn f1_on_v() {
        let gamma = Scalar::gauss((-2, 5), (1, 1));
        let alg = cubic(3, 0, -1, gamma.clone());
        let u = Element::u();
        let got = alg.apply_op_poly(&poly::f_poly(1), &u, &Element::v());
        assert_eq!(got, Element::scalar(&gamma * &Scalar::from_int(2)));
        assert!(alg.apply_op_poly(&poly::f_product(1), &u, &Element::v()).is_zero());
        assert!(alg.apply_op_poly(&poly::f_poly(0), &u, &alg.pow(&u, 5)).is_zero());
    }

    #[test]
    fn f_squared_formula() {
        // f = iv/2 - u/2 - X/8 with X = 2A + 8
        let alg = cubic(3, 1, 0, Scalar::from_int(2));
        let f = el(&alg, "i*v/2 - u/2 - 14/8");
        let want = el(&alg, "-v^2/4 - (u + 14/4)*i*v/2 + i*w/2 + (u + 14/4)^2/4");
        assert_eq!(alg.mul(&f, &f), want);
    }

    #[test]
    fn degrees() {
        let alg = cubic(0, 0, 0, Scalar::zero());
        assert_eq!(alg.degree_standard(&Element::u()).unwrap(), 4);
        assert_eq!(alg.degree_standard(&Element::monomial(0, 1, 1)).unwrap(), 10);
        let quartic = Algebra::new(AlgebraSpec::d(Poly::from_ints(&[0, 0, 0, 0, 1]), Scalar::zero()).unwrap());
        assert_eq!(quartic.degree_standard(&Element::monomial(2, 1, 0)).unwrap(), 14);
        assert_eq!(alg.degree_standard(&Element::zero()), Err(Error::ZeroElement));
    }

    #[test]
    fn agrees_with_word_rewriting() {
        for spec in [
            AlgebraSpec::d(Poly::from_ints(&[1, 0, 2, 1]), Scalar::i()).unwrap(),
            AlgebraSpec::h(Poly::from_ints(&[1, 2, 3, 4]), Scalar::from_int(3)).unwrap(),
        ] {
            let alg = Algebra::new(spec.clone());
            let src = "w*v*u^2*w + (1/2+i)*v*w*u - 3*w^2*v";
            assert_eq!(alg.parse_element(src).unwrap(), rewrite::reduce_text(&spec, src).unwrap());
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let spec = AlgebraSpec::d(Poly::from_ints(&[0, 1, 0, 0, 1]), Scalar::frac(1, 2)).unwrap();
        let seq = Algebra::with_exec(spec.clone(), Exec::Sequential);
        let par = Algebra::with_exec(spec, Exec::Parallel);
        let src = "(u^3 + v^2*w + u*v + w + 2)^2";
        assert_eq!(seq.parse_element(src).unwrap(), par.parse_element(src).unwrap());
    }
}
