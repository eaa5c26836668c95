//! Exact Gaussian rationals, the coefficient field for every computation
//! in this crate.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An element `re + im*i` of the field of Gaussian rationals.
///
/// Both parts are stored as reduced fractions with positive denominators,
/// so derived equality is equality of field elements.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar::default()
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { re: BigRational::from_integer(n.into()), im: BigRational::zero() }
    }

    /// `num/den`, panicking on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        Scalar { re: BigRational::new(num.into(), den.into()), im: BigRational::zero() }
    }

    /// `re + im*i` from two small fractions given as `(num, den)`.
    pub fn gauss(re: (i64, i64), im: (i64, i64)) -> Self {
        Scalar {
            re: BigRational::new(re.0.into(), re.1.into()),
            im: BigRational::new(im.0.into(), im.1.into()),
        }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar { re: r, im: BigRational::zero() }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -&self.im }
    }

    /// `|z|^2 = re^2 + im^2`.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Scalar { re: &self.re / &n, im: -&self.im / &n })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Scalar::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// A square root inside the field, if one exists.
    ///
    /// Of the two roots, returns the one with positive real part, or with
    /// positive imaginary part when the real part vanishes.
    pub fn sqrt(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Scalar::zero());
        }
        let modulus = rational_sqrt(&self.norm_sqr())?;
        let two = BigRational::from_integer(2.into());
        let x = rational_sqrt(&((&modulus + &self.re) / &two))?;
        let y_abs = rational_sqrt(&((&modulus - &self.re) / &two))?;
        let root = if x.is_zero() {
            // z = -|z|, a negative real: root is y_abs * i
            Scalar { re: x, im: y_abs }
        } else {
            // 2xy = im fixes the sign of y
            let y = if self.im.is_negative() { -y_abs } else { y_abs };
            Scalar { re: x, im: y }
        };
        debug_assert_eq!(&(&root * &root), self);
        Some(root)
    }
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = int_sqrt(r.numer())?;
    let d = int_sqrt(r.denom())?;
    Some(BigRational::new(n, d))
}

fn int_sqrt(n: &BigInt) -> Option<BigInt> {
    let root = n.sqrt();
    (&root * &root == *n).then_some(root)
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::default()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::from_int(1)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return Scalar { re: &self.re * &rhs.re, im: BigRational::zero() };
        }
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::checked_div`] to get an error instead.
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -&self.re, im: -&self.im }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re, im: -self.im }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text: `3`, `-1/2`, `i`, `-3/4*i`, `1/2+3/4*i`, `1/2-i`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return fmt_rational(&self.re, f);
        }
        if !self.re.is_zero() {
            fmt_rational(&self.re, f)?;
            if self.im.is_positive() {
                f.write_str("+")?;
            }
        }
        let abs = self.im.abs();
        if self.im.is_negative() {
            f.write_str("-")?;
        }
        if !abs.is_one() {
            fmt_rational(&abs, f)?;
            f.write_str("*")?;
        }
        f.write_str("i")
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl std::str::FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_scalar(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modulus_identity() {
        let a = Scalar::gauss((1, 2), (1, 1));
        let b = Scalar::gauss((1, 2), (-1, 1));
        assert_eq!(&a * &b, Scalar::frac(5, 4));
    }

    #[test]
    fn inverse_of_i() {
        assert_eq!(Scalar::i().inv().unwrap(), -Scalar::i());
    }

    #[test]
    fn fractions_reduce() {
        let s = Scalar::frac(1, 3) + Scalar::frac(1, 6);
        assert_eq!(s, Scalar::frac(1, 2));
        assert_eq!(s.to_string(), "1/2");
    }

    #[test]
    fn zero_division_is_an_error() {
        assert!(matches!(Scalar::zero().inv(), Err(Error::DivisionByZero)));
        assert!(Scalar::one().checked_div(&Scalar::zero()).is_err());
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::i().to_string(), "i");
        assert_eq!((-Scalar::i()).to_string(), "-i");
        assert_eq!(Scalar::gauss((1, 2), (3, 4)).to_string(), "1/2+3/4*i");
        assert_eq!(Scalar::gauss((1, 2), (-1, 1)).to_string(), "1/2-i");
        assert_eq!(Scalar::gauss((0, 1), (-2, 1)).to_string(), "-2*i");
        assert_eq!(Scalar::zero().to_string(), "0");
    }

    #[test]
    fn square_roots() {
        assert_eq!(Scalar::from_int(-1).sqrt(), Some(Scalar::i()));
        assert_eq!(Scalar::frac(1, 4).sqrt(), Some(Scalar::frac(1, 2)));
        // (1+2i)^2 = -3+4i
        assert_eq!(Scalar::gauss((-3, 1), (4, 1)).sqrt(), Some(Scalar::gauss((1, 1), (2, 1))));
        assert_eq!(Scalar::gauss((-3, 1), (-4, 1)).sqrt(), Some(Scalar::gauss((1, 1), (-2, 1))));
        assert_eq!(Scalar::from_int(2).sqrt(), None);
        assert_eq!(Scalar::i().sqrt(), None);
    }

    #[test]
    fn pow_matches_repeated_product() {
        let z = Scalar::gauss((1, 3), (-2, 5));
        let mut acc = Scalar::one();
        for k in 0..7 {
            assert_eq!(z.pow(k), acc);
            acc = &acc * &z;
        }
    }
}
