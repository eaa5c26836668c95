//! Dense univariate polynomials over [`Scalar`] and the polynomial
//! transforms that tie the algebra presentations together: the
//! substitution `t -> -s(s+1)`, the odd/even splitting behind the
//! `P <-> Q` correspondence, the `alpha`/`beta` maps describing
//! `[f(u), v]`, and the binomial families `p_m`, `q_m`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Name of the formal variable. Display only; it takes no part in equality.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Var {
    #[default]
    T,
    S,
}

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::S => "s",
        }
    }
}

/// Dense polynomial; `coeffs[k]` is the coefficient of `x^k`.
///
/// The highest stored coefficient is non-zero; the zero polynomial has
/// no coefficients.
#[derive(Clone, Default)]
pub struct Poly {
    coeffs: Vec<Scalar>,
    var: Var,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}
impl Eq for Poly {}

impl std::hash::Hash for Poly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state);
    }
}

impl Poly {
    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs, var: Var::T }
    }

    /// Shorthand for integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| Scalar::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(c: Scalar, k: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); k];
        coeffs.push(c);
        Poly::from_coeffs(coeffs)
    }

    /// The variable itself.
    pub fn x() -> Self {
        Poly::monomial(Scalar::one(), 1)
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Scalar {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn lead(&self) -> Scalar {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Scalar::is_one)
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect()).with_var(self.var)
    }

    /// Drops the constant term.
    pub fn without_constant(&self) -> Poly {
        let mut coeffs = self.coeffs.clone();
        if let Some(c) = coeffs.first_mut() {
            *c = Scalar::zero();
        }
        Poly::from_coeffs(coeffs).with_var(self.var)
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * x) + c)
    }

    /// `self(inner)`, by Horner's scheme.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc.with_var(inner.var)
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::constant(Scalar::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc.with_var(self.var)
    }

    /// Coefficients shifted down by one power; requires zero constant term.
    fn div_by_x(&self) -> Poly {
        debug_assert!(self.coeff(0).is_zero());
        Poly::from_coeffs(self.coeffs.iter().skip(1).cloned().collect()).with_var(self.var)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect();
        Poly::from_coeffs(coeffs).with_var(self.var)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect();
        Poly::from_coeffs(coeffs).with_var(self.var)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero().with_var(self.var);
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Poly::from_coeffs(out).with_var(self.var)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect()).with_var(self.var)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = self.var.name();
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .map(|(k, c)| (c, crate::fmt::power(var, k)));
        crate::fmt::write_terms(f, terms)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Poly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_poly(s)
    }
}

/// `-s(s+1)` as a polynomial in `s`.
fn neg_s_s1() -> Poly {
    Poly::from_ints(&[0, -1, -1]).with_var(Var::S)
}

/// `f(-s(s+1))`, the embedding of `C[t]` into `C[s]`.
pub fn subst_neg_s_s1(f: &Poly) -> Poly {
    f.compose(&neg_s_s1())
}

/// Splits `f` into its even- and odd-exponent parts.
pub fn parity_split(f: &Poly) -> (Poly, Poly) {
    let pick = |parity: usize| {
        let coeffs = f
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == parity { c.clone() } else { Scalar::zero() })
            .collect();
        Poly::from_coeffs(coeffs).with_var(f.var)
    };
    (pick(0), pick(1))
}

/// Writes `g` (a polynomial in `s`) uniquely as `a(-s(s+1)) + s*b(-s(s+1))`.
///
/// The images of `t^k` and `s*t^k` have leading terms `(-1)^k s^{2k}` and
/// `(-1)^k s^{2k+1}`, so peeling off the top coefficient determines one
/// coefficient of `a` or `b` at a time.
pub fn tower_decompose(g: &Poly) -> (Poly, Poly) {
    let mut rest = g.clone().with_var(Var::S);
    let half = g.coeffs.len() / 2 + 1;
    let mut a = vec![Scalar::zero(); half];
    let mut b = vec![Scalar::zero(); half];
    let t_image = neg_s_s1();
    let s = Poly::x().with_var(Var::S);
    while let Some(d) = rest.degree() {
        let k = d / 2;
        let sign = if k % 2 == 0 { Scalar::one() } else { -Scalar::one() };
        let c = &rest.lead() * &sign;
        let mut image = t_image.pow(k as u32).scale(&c);
        if d % 2 == 0 {
            a[k] = c;
        } else {
            image = &s * &image;
            b[k] = c;
        }
        rest = &rest - &image;
        debug_assert!(rest.degree().is_none_or(|e| e < d));
    }
    (Poly::from_coeffs(a), Poly::from_coeffs(b))
}

fn check_degree(n: Option<usize>) -> Result<usize> {
    match n {
        Some(n) if n >= 3 => Ok(n),
        Some(n) => Err(Error::DegreeTooSmall { degree: n }),
        None => Err(Error::DegreeTooSmall { degree: 0 }),
    }
}

/// The odd-power coefficients of `Q(-s(s+1)) + (s+1) P(-s(s+1))`.
fn odd_defect(q: &Poly, p: &Poly) -> Poly {
    let s1 = Poly::from_ints(&[1, 1]).with_var(Var::S);
    let total = &subst_neg_s_s1(q) + &(&s1 * &subst_neg_s_s1(p));
    parity_split(&total).1
}

/// True when `Q(-s(s+1)) + (s+1) P(-s(s+1))` is even in `s`.
pub fn satisfies_evenness(q: &Poly, p: &Poly) -> bool {
    odd_defect(q, p).is_zero()
}

/// `(s+1) * (-s(s+1))^k`, whose top odd coefficient sits at `s^{2k+1}`.
fn shifted_power(k: usize) -> Poly {
    let s1 = Poly::from_ints(&[1, 1]).with_var(Var::S);
    &s1 * &neg_s_s1().pow(k as u32)
}

/// The unique `P` with `Q(-s(s+1)) + (s+1) P(-s(s+1))` even in `s`.
///
/// Requires `Q` monic of degree `n >= 3`; the result has leading term
/// `n t^{n-1}`. The `n` odd-coefficient equations are upper triangular in
/// the coefficients of `P`, solved from the top.
pub fn solve_p_from_q(q: &Poly) -> Result<Poly> {
    let n = check_degree(q.degree())?;
    if !q.is_monic() {
        return Err(Error::NotMonic(Box::new(q.lead())));
    }
    Ok(solve_p_from_q_scaled(q, n))
}

/// Same system without the monic restriction (the correspondence is linear
/// in `Q`). Used for rescaled presentations.
pub(crate) fn solve_p_from_q_scaled(q: &Poly, n: usize) -> Poly {
    let mut defect = parity_split(&subst_neg_s_s1(q)).1;
    let mut p = vec![Scalar::zero(); n];
    for k in (0..n).rev() {
        // coefficient of s^{2k+1} in (s+1)(-s(s+1))^k is (-1)^k
        let top = defect.coeff(2 * k + 1);
        let c = if k % 2 == 0 { -top } else { top };
        let contribution = parity_split(&shifted_power(k).scale(&c)).1;
        defect = &defect + &contribution;
        p[k] = c;
    }
    debug_assert!(defect.is_zero());
    Poly::from_coeffs(p)
}

/// The unique monic `Q` with zero constant term paired with `P`.
///
/// Requires `P` of degree `n - 1 >= 2` with leading coefficient `n`.
pub fn solve_q_from_p(p: &Poly) -> Result<Poly> {
    let n = check_degree(p.degree().map(|d| d + 1))?;
    let expected = Scalar::from_int(n as i64);
    if p.lead() != expected {
        return Err(Error::LeadingTerm { expected: n, found: Box::new(p.lead()) });
    }
    // start from Q = t^n and cancel the odd coefficients from s^{2n-3} down;
    // (-s(s+1))^k has s^{2k-1} coefficient (-1)^k k
    let mut defect = odd_defect(&Poly::monomial(Scalar::one(), n), p);
    let mut q = vec![Scalar::zero(); n + 1];
    q[n] = Scalar::one();
    debug_assert!(defect.coeff(2 * n - 1).is_zero());
    for k in (1..n).rev() {
        let top = defect.coeff(2 * k - 1);
        let diag = Scalar::from_int(if k % 2 == 0 { k as i64 } else { -(k as i64) });
        let c = -(&top / &diag);
        let contribution = parity_split(&neg_s_s1().pow(k as u32).scale(&c)).1;
        defect = &defect + &contribution;
        q[k] = c;
    }
    if !defect.is_zero() {
        // unreachable for a well-formed triangular system
        return Err(Error::PolynomialMismatch);
    }
    Ok(Poly::from_coeffs(q))
}

/// `(rho(p), mu(p))` with `rho(p) = (p(-s) - p(s)) / 2s` and
/// `mu(p) = (p(-(s+1)) - p(s+1)) / 2(s+1)`.
///
/// `p(-s) - p(s)` is minus twice the odd part, so `rho(p) = -odd(p)/s`, and
/// `mu(p)` is `rho(p)` evaluated at `s + 1`.
pub fn rho_mu(p: &Poly) -> (Poly, Poly) {
    let (_, odd) = parity_split(p);
    let rho = (-&odd).div_by_x().with_var(Var::S);
    let mu = rho.compose(&Poly::from_ints(&[1, 1]).with_var(Var::S));
    (rho, mu)
}

/// The pair `(alpha(f), beta(f))` determined by
/// `alpha(f)(-s(s+1)) - s beta(f)(-s(s+1)) = rho(f(-s(s+1)))`.
///
/// In either algebra `[f(u), v] = alpha(f)(u)[u,v] + beta(f)(u)[u,w]`.
pub fn alpha_beta(f: &Poly) -> (Poly, Poly) {
    let (rho, _) = rho_mu(&subst_neg_s_s1(f));
    let (a, b) = tower_decompose(&rho);
    (a, -&b)
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// The binomial-sum polynomials
/// `p_m = sum_{i <= (m-1)/2} C(m-i-1, i) (t/4)^i` and
/// `q_m = sum_{i <= m/2} (C(m-i, i) + C(m-i-1, i-1)) (t/4)^i`.
pub fn pq_polys(m: usize) -> Result<(Poly, Poly)> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("p_m, q_m need m >= 2, got {m}")));
    }
    let m = m as i64;
    let quarter_pow = |i: i64| BigRational::new(BigInt::one(), BigInt::from(4).pow(i as u32));
    let p = (0..=(m - 1) / 2)
        .map(|i| Scalar::from_rational(BigRational::from_integer(binomial(m - i - 1, i)) * quarter_pow(i)))
        .collect();
    let q = (0..=m / 2)
        .map(|i| {
            let c = binomial(m - i, i) + binomial(m - i - 1, i - 1);
            Scalar::from_rational(BigRational::from_integer(c) * quarter_pow(i))
        })
        .collect();
    Ok((Poly::from_coeffs(p), Poly::from_coeffs(q)))
}

/// Polynomial in two commuting operator slots, `coeffs[i][j]` being the
/// coefficient of `S^i T^j`. `S` stands for `ad f`, `T` for left
/// multiplication by `f`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OpPoly {
    coeffs: Vec<Vec<Scalar>>,
}

impl OpPoly {
    pub fn from_table(mut coeffs: Vec<Vec<Scalar>>) -> Self {
        for row in coeffs.iter_mut() {
            while row.last().is_some_and(Scalar::is_zero) {
                row.pop();
            }
        }
        while coeffs.last().is_some_and(Vec::is_empty) {
            coeffs.pop();
        }
        OpPoly { coeffs }
    }

    pub fn one() -> Self {
        OpPoly::from_table(vec![vec![Scalar::one()]])
    }

    pub fn coeff(&self, s_pow: usize, t_pow: usize) -> Scalar {
        self.coeffs.get(s_pow).and_then(|r| r.get(t_pow)).cloned().unwrap_or_default()
    }

    /// Degree in `S`; `None` for zero.
    pub fn s_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The coefficient `a_i(T)` of `S^i`, as a polynomial in `T`.
    pub fn s_coeff(&self, i: usize) -> Poly {
        Poly::from_coeffs(self.coeffs.get(i).cloned().unwrap_or_default())
    }

    /// Non-zero coefficients as `((s_pow, t_pow), c)`.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &Scalar)> {
        self.coeffs.iter().enumerate().flat_map(|(i, row)| {
            row.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(j, c)| ((i, j), c))
        })
    }

    pub fn mul(&self, rhs: &OpPoly) -> OpPoly {
        let rows = self.coeffs.len() + rhs.coeffs.len();
        let cols = self.coeffs.iter().map(Vec::len).max().unwrap_or(0)
            + rhs.coeffs.iter().map(Vec::len).max().unwrap_or(0);
        let mut out = vec![vec![Scalar::zero(); cols]; rows];
        for ((i, j), a) in self.terms() {
            for ((k, l), b) in rhs.terms() {
                out[i + k][j + l] += &(a * b);
            }
        }
        OpPoly::from_table(out)
    }
}

impl fmt::Display for OpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<_> = self
            .terms()
            .map(|((i, j), c)| (c, crate::fmt::product(&[crate::fmt::power("S", i), crate::fmt::power("T", j)])))
            .collect();
        terms.reverse();
        crate::fmt::write_terms(f, terms)
    }
}

/// `F_0 = S` and `F_m = S^2 - 2m^2 S + m^2(m^2 - 1) + 4m^2 T` for `m >= 1`.
pub fn f_poly(m: usize) -> OpPoly {
    if m == 0 {
        return OpPoly::from_table(vec![vec![], vec![Scalar::one()]]);
    }
    let m2 = (m * m) as i64;
    OpPoly::from_table(vec![
        vec![Scalar::from_int(m2 * (m2 - 1)), Scalar::from_int(4 * m2)],
        vec![Scalar::from_int(-2 * m2)],
        vec![Scalar::one()],
    ])
}

/// The expanded product `F_0 F_1 ... F_m`.
pub fn f_product(m: usize) -> OpPoly {
    (0..=m).fold(OpPoly::one(), |acc, i| acc.mul(&f_poly(i)))
}
