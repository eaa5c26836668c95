//! Shared text rendering for linear combinations of monomials.

use std::fmt::{self, Write};

use num_traits::{One, Signed, Zero};

use crate::scalar::Scalar;

/// Writes `sum c_k * m_k` in the crate's re-parseable grammar. An empty
/// monomial string stands for the constant term.
pub(crate) fn write_terms<'a, I>(f: &mut dyn Write, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (&'a Scalar, String)>,
{
    let mut first = true;
    for (c, mono) in terms {
        if c.is_zero() {
            continue;
        }
        let (negative, body) = term_body(c, &mono);
        match (first, negative) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str("-")?,
            (false, false) => f.write_str("+")?,
        }
        f.write_str(&body)?;
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

fn term_body(c: &Scalar, mono: &str) -> (bool, String) {
    let join = |coeff: String| {
        if mono.is_empty() {
            coeff
        } else {
            format!("{coeff}*{mono}")
        }
    };
    if c.is_real() {
        let abs = c.re().abs();
        let negative = c.re().is_negative();
        if abs.is_one() && !mono.is_empty() {
            return (negative, mono.to_string());
        }
        return (negative, join(Scalar::from_rational(abs).to_string()));
    }
    if c.re().is_zero() {
        let abs = c.im().abs();
        let negative = c.im().is_negative();
        let coeff = if abs.is_one() {
            "i".to_string()
        } else {
            format!("{}*i", Scalar::from_rational(abs))
        };
        return (negative, join(coeff));
    }
    (false, join(format!("({c})")))
}

/// `x`, `x^k`, or the empty string for `k = 0`.
pub(crate) fn power(var: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => var.to_string(),
        _ => format!("{var}^{k}"),
    }
}

/// Joins non-empty factors with `*`.
pub(crate) fn product(factors: &[String]) -> String {
    let parts: Vec<&str> = factors.iter().map(String::as_str).filter(|s| !s.is_empty()).collect();
    parts.join("*")
}
