//! Seeded random inputs for property checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::iso::DParams;
use crate::ncalg::{Algebra, AlgebraSpec, Element, Kind, Monomial};
use crate::poisson::CPoly;
use crate::poly::Poly;
use crate::scalar::Scalar;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// `a/b` with `|a| <= 4`, `1 <= b <= 4`.
    pub fn rational(&mut self) -> Scalar {
        let a = self.rng.gen_range(-4..=4);
        let b = self.rng.gen_range(1..=4);
        Scalar::frac(a, b)
    }

    /// A small Gaussian rational; real about a third of the time.
    pub fn scalar(&mut self) -> Scalar {
        let re = self.rational();
        if self.rng.gen_ratio(1, 3) {
            return re;
        }
        &re + &(&self.rational() * &Scalar::i())
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let c = self.scalar();
            if !c.is_zero() {
                return c;
            }
        }
    }

    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        self.rng.gen_ratio(num, den)
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        items.choose(&mut self.rng).expect("non-empty choice")
    }

    /// Random coefficients below `t^degree`, plus the given leading one.
    pub fn poly_with_lead(&mut self, degree: usize, lead: Scalar) -> Poly {
        let mut coeffs: Vec<Scalar> = (0..degree).map(|_| self.scalar()).collect();
        coeffs.push(lead);
        Poly::from_coeffs(coeffs)
    }

    /// Degree at most `degree`, possibly zero.
    pub fn poly(&mut self, degree: usize) -> Poly {
        Poly::from_coeffs((0..=degree).map(|_| self.scalar()).collect())
    }

    pub fn monic(&mut self, n: usize) -> Poly {
        self.poly_with_lead(n, Scalar::one())
    }

    /// A valid `P` for `H`: leading term `n t^{n-1}`.
    pub fn h_poly(&mut self, n: usize) -> Poly {
        self.poly_with_lead(n - 1, Scalar::from_int(n as i64))
    }

    pub fn d_spec(&mut self, n: usize) -> AlgebraSpec {
        let q = self.monic(n);
        AlgebraSpec::d(q, self.scalar()).expect("monic of degree >= 3")
    }

    pub fn h_spec(&mut self, n: usize) -> AlgebraSpec {
        let p = self.h_poly(n);
        AlgebraSpec::h(p, self.scalar()).expect("leading term n t^(n-1)")
    }

    pub fn spec(&mut self, kind: Kind, n: usize) -> AlgebraSpec {
        match kind {
            Kind::H => self.h_spec(n),
            Kind::D => self.d_spec(n),
        }
    }

    pub fn d_params(&mut self, n: usize) -> DParams {
        let q = self.monic(n);
        DParams::new(q, self.scalar()).expect("monic of degree >= 3")
    }

    /// A cubic drawn evenly from the four automorphism strata: `k = gamma = 0`,
    /// `gamma = 0` only, `k = ±i gamma` with `gamma != 0`, and generic.
    pub fn stratified_cubic(&mut self) -> DParams {
        let (a, c) = (self.scalar(), self.scalar());
        let base = &(&(&a * &a) * &Scalar::frac(1, 4)) - &Scalar::from_int(4);
        let (k, gamma) = match self.rng.gen_range(0..5) {
            0 => (Scalar::zero(), Scalar::zero()),
            1 => (self.nonzero_scalar(), Scalar::zero()),
            2 => {
                let g = self.nonzero_scalar();
                (&g * &Scalar::i(), g)
            }
            3 => {
                let g = self.nonzero_scalar();
                (&g * &-Scalar::i(), g)
            }
            _ => (self.scalar(), self.scalar()),
        };
        DParams::cubic(a, &base + &k, c, gamma)
    }

    /// A sum of up to `terms` random basis monomials of standard degree at
    /// most `max_degree` (in `alg`), with random non-zero coefficients.
    pub fn element(&mut self, alg: &Algebra, max_degree: u64, terms: usize) -> Element {
        let max_k = if alg.kind() == Kind::D { 1 } else { u32::MAX };
        let mut pool = Vec::new();
        for i in 0..=max_degree / 4 {
            for j in 0..=max_degree {
                for k in 0..=max_degree.min(max_k as u64) {
                    let m = Monomial::new(i as u32, j as u32, k as u32);
                    if alg.monomial_degree(&m) <= max_degree {
                        pool.push(m);
                    }
                }
            }
        }
        let mut out = Element::zero();
        for _ in 0..terms {
            let m = *self.pick(&pool);
            out.add_term(m, &self.nonzero_scalar());
        }
        out
    }

    /// Like [`Sampler::element`], but never zero.
    pub fn nonzero_element(&mut self, alg: &Algebra, max_degree: u64, terms: usize) -> Element {
        loop {
            let x = self.element(alg, max_degree, terms.max(1));
            if !x.is_zero() {
                return x;
            }
        }
    }

    /// A random polynomial in `X, Y, Z` of total degree at most `degree`.
    pub fn cpoly(&mut self, degree: u32, terms: usize) -> CPoly {
        let mut out = CPoly::zero();
        for _ in 0..terms {
            let a = self.rng.gen_range(0..=degree);
            let b = self.rng.gen_range(0..=degree - a);
            let c = self.rng.gen_range(0..=degree - a - b);
            out.add_term((a, b, c), &self.nonzero_scalar());
        }
        out
    }
}
