use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{self, Poly};
use crate::scalar::Scalar;

/// Which presentation: `H(P, gamma)` with basis `u^i v^j w^k`, or the
/// quotient `D(Q, gamma)` with basis `u^i v^j w^e`, `e` in `{0, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    H,
    D,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::H => "H",
            Kind::D => "D",
        })
    }
}

/// Presentation data for one algebra.
///
/// Relations: `[u,v] = 2w`, `[u,w] = -2uv + 2w + gamma`, `[v,w] = v^2 + P(u)`,
/// and for `D` additionally `Q(u) + uv^2 + w^2 - 2wv - gamma v = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraSpec {
    kind: Kind,
    p: Poly,
    q: Option<Poly>,
    gamma: Scalar,
    n: usize,
}

impl AlgebraSpec {
    /// `H(P, gamma)`; `P` must have leading term `n t^{n-1}` with `n >= 3`.
    pub fn h(p: Poly, gamma: Scalar) -> Result<Self> {
        let n = p.degree().map_or(0, |d| d + 1);
        if n < 3 {
            return Err(Error::DegreeTooSmall { degree: n });
        }
        if p.lead() != Scalar::from_int(n as i64) {
            return Err(Error::LeadingTerm { expected: n, found: Box::new(p.lead()) });
        }
        Ok(AlgebraSpec { kind: Kind::H, p, q: None, gamma, n })
    }

    /// `D(Q, gamma)` for monic `Q` of degree `n >= 3`; `P` is derived.
    pub fn d(q: Poly, gamma: Scalar) -> Result<Self> {
        let p = poly::solve_p_from_q(&q)?;
        let n = q.degree().expect("checked by solve_p_from_q");
        Ok(AlgebraSpec { kind: Kind::D, p, q: Some(q), gamma, n })
    }

    /// `D(Q, gamma)` for any non-zero leading coefficient, as reached by
    /// rescaling `v` and `w`.
    pub fn d_unnormalized(q: Poly, gamma: Scalar) -> Result<Self> {
        let n = q.degree().unwrap_or(0);
        if n < 3 {
            return Err(Error::DegreeTooSmall { degree: n });
        }
        let p = poly::solve_p_from_q_scaled(&q, n);
        Ok(AlgebraSpec { kind: Kind::D, p, q: Some(q), gamma, n })
    }

    /// Dispatches on `kind`: `poly` is `P` for `H` and `Q` for `D`.
    pub fn make(kind: Kind, poly: Poly, gamma: Scalar) -> Result<Self> {
        match kind {
            Kind::H => AlgebraSpec::h(poly, gamma),
            Kind::D => AlgebraSpec::d(poly, gamma),
        }
    }

    /// Skips every consistency check. Only for building deliberately
    /// inconsistent presentations in negative controls.
    #[doc(hidden)]
    pub fn unchecked(kind: Kind, p: Poly, q: Option<Poly>, gamma: Scalar) -> Self {
        let n = p.degree().map_or(0, |d| d + 1);
        AlgebraSpec { kind, p, q, gamma, n }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn p(&self) -> &Poly {
        &self.p
    }

    /// `Q` for a D-algebra.
    pub fn q(&self) -> Option<&Poly> {
        self.q.as_ref()
    }

    pub fn gamma(&self) -> &Scalar {
        &self.gamma
    }

    /// The degree parameter: `deg Q`, or `deg P + 1`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_d(&self) -> bool {
        self.kind == Kind::D
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.q {
            Some(q) if self.kind == Kind::D => write!(f, "D({q}, {})", self.gamma),
            _ => write!(f, "H({}, {})", self.p, self.gamma),
        }
    }
}
