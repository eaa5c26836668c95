//! Isomorphisms between the algebras `D(Q, gamma)`: the sign flip `Theta`,
//! the order-three map `Psi` in degree three, rescaling to monic `Q`, orbit
//! enumeration, automorphism groups, moduli invariants, and the induced
//! decision for `H(P, gamma)`.
//!
//! Every isomorphism is carried as an [`IsoWitness`] whose generator images
//! have been substituted into the source relations and reduced to zero in
//! the target.

use std::fmt;

use crate::error::{Error, Result};
use crate::ncalg::{Algebra, AlgebraSpec, Element, Kind};
use crate::poly::{self, Poly};
use crate::scalar::Scalar;

/// Parameters `(Q, gamma)` of `D(Q, gamma)`, `Q` monic of degree `n >= 3`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DParams {
    q: Poly,
    gamma: Scalar,
}

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn fr(n: i64, d: i64) -> Scalar {
    Scalar::frac(n, d)
}

impl DParams {
    pub fn new(q: Poly, gamma: Scalar) -> Result<Self> {
        let n = q.degree().unwrap_or(0);
        if n < 3 {
            return Err(Error::DegreeTooSmall { degree: n });
        }
        if !q.is_monic() {
            return Err(Error::NotMonic(Box::new(q.lead())));
        }
        Ok(DParams { q, gamma })
    }

    /// `t^3 + A t^2 + B t + C`.
    pub fn cubic(a: Scalar, b: Scalar, c: Scalar, gamma: Scalar) -> Self {
        DParams { q: Poly::from_coeffs(vec![c, b, a, Scalar::one()]), gamma }
    }

    pub fn q(&self) -> &Poly {
        &self.q
    }

    pub fn gamma(&self) -> &Scalar {
        &self.gamma
    }

    pub fn n(&self) -> usize {
        self.q.degree().expect("non-zero by construction")
    }

    /// Coefficient of `t^2` (the `A` of a cubic).
    pub fn a(&self) -> Scalar {
        self.q.coeff(2)
    }

    /// Coefficient of `t` (the `B` of a cubic).
    pub fn b(&self) -> Scalar {
        self.q.coeff(1)
    }

    /// Constant term (the `C` of a cubic).
    pub fn c(&self) -> Scalar {
        self.q.coeff(0)
    }

    /// `B - 4(A^2/16 - 1)`, the coordinate `Psi` rotates.
    pub fn k(&self) -> Scalar {
        let a = self.a();
        &(&self.b() - &(&a * &a).checked_div(&s(4)).expect("non-zero")) + &s(4)
    }

    /// The Dynkin type `D_{n+1}` of the singularity deformed.
    pub fn dynkin_rank(&self) -> usize {
        self.n() + 1
    }

    pub fn spec(&self) -> AlgebraSpec {
        AlgebraSpec::d(self.q.clone(), self.gamma.clone()).expect("validated parameters")
    }

    fn require_cubic(&self) -> Result<()> {
        match self.n() {
            3 => Ok(()),
            n => Err(Error::NotCubic(n)),
        }
    }
}

impl fmt::Display for DParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D({}, {})", self.q, self.gamma)
    }
}

/// Generator images certifying a homomorphism `source -> target`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub name: String,
    pub source: AlgebraSpec,
    pub target: AlgebraSpec,
    /// Images of `u, v, w`, as elements of the target.
    pub images: [Element; 3],
}

impl IsoWitness {
    /// Builds a witness after checking every source relation in the target.
    pub fn new(name: impl Into<String>, source: AlgebraSpec, target: AlgebraSpec, images: [Element; 3]) -> Result<Self> {
        let w = IsoWitness { name: name.into(), source, target, images };
        match failed_relation(&w) {
            None => Ok(w),
            Some(rel) => Err(Error::NotAHomomorphism(format!("{} for {}: {rel}", w.name, w.source))),
        }
    }

    /// Skips verification. Only for building negative controls.
    #[doc(hidden)]
    pub fn unverified(name: impl Into<String>, source: AlgebraSpec, target: AlgebraSpec, images: [Element; 3]) -> Self {
        IsoWitness { name: name.into(), source, target, images }
    }

    /// `other ∘ self`, reduced in the final target.
    pub fn then(&self, other: &IsoWitness) -> Result<IsoWitness> {
        if self.target != other.source {
            return Err(Error::InvalidArgument(format!(
                "cannot compose: {} maps to {}, but {} starts at {}",
                self.name, self.target, other.name, other.source
            )));
        }
        let alg = Algebra::new(other.target.clone());
        let images = self.images.clone().map(|x| alg.substitute(&x, &other.images));
        let name = match (self.name.as_str(), other.name.as_str()) {
            ("Id", n) | (n, "Id") => n.to_string(),
            (a, b) => format!("{b}∘{a}"),
        };
        IsoWitness::new(name, self.source.clone(), other.target.clone(), images)
    }
}

/// The first source relation that does not reduce to zero in the target
/// under the witness images, if any.
fn failed_relation(w: &IsoWitness) -> Option<&'static str> {
    let alg = Algebra::new(w.target.clone());
    let [f, g, h] = &w.images;
    let gamma = w.source.gamma();
    let two = s(2);
    let fg = alg.mul(f, g);
    let rel1 = alg.commutator(f, g).sub(&h.scale(&two));
    if !rel1.is_zero() {
        return Some("[u,v] = 2w");
    }
    let mut rhs = fg.scale(&-&two);
    rhs.add_scaled(h, &two);
    rhs.add_term(crate::ncalg::Monomial::ONE, gamma);
    if !alg.commutator(f, h).sub(&rhs).is_zero() {
        return Some("[u,w] = -2uv + 2w + gamma");
    }
    let g2 = alg.mul(g, g);
    let rhs = g2.add(&alg.eval_poly(w.source.p(), f));
    if !alg.commutator(g, h).sub(&rhs).is_zero() {
        return Some("[v,w] = v^2 + P(u)");
    }
    if let (Kind::D, Some(q)) = (w.source.kind(), w.source.q()) {
        let mut omega = alg.eval_poly(q, f);
        omega.add_scaled(&alg.mul(f, &g2), &Scalar::one());
        omega.add_scaled(&alg.mul(h, h), &Scalar::one());
        omega.add_scaled(&alg.mul(h, g), &-&two);
        omega.add_scaled(g, &-gamma);
        if !omega.is_zero() {
            return Some("Q(u) + uv^2 + w^2 - 2wv - gamma v = 0");
        }
    }
    None
}

/// True iff the images satisfy every defining relation of the source.
pub fn verify_homomorphism(w: &IsoWitness) -> bool {
    failed_relation(w).is_none()
}

/// `Theta: D(Q, gamma) -> D(Q, -gamma)`.
pub fn theta_params(p: &DParams) -> DParams {
    DParams { q: p.q.clone(), gamma: -p.gamma.clone() }
}

/// `Theta` with witness `u -> u, v -> -v, w -> -w`.
pub fn theta(p: &DParams) -> (DParams, IsoWitness) {
    let target = theta_params(p);
    let images = [Element::u(), Element::v().neg(), Element::w().neg()];
    let w = IsoWitness::new("Θ", p.spec(), target.spec(), images).expect("Theta is always a homomorphism");
    (target, w)
}

/// `A^2/16 - 1`.
fn a_shift(a: &Scalar) -> Scalar {
    &(a * a) * &fr(1, 16) - s(1)
}

/// Parameters of the `Psi` image of a cubic.
pub fn psi_params(p: &DParams) -> Result<DParams> {
    p.require_cubic()?;
    let (a, b, c, g) = (p.a(), p.b(), p.c(), p.gamma.clone());
    let i = Scalar::i();
    let e = a_shift(&a);
    let b2 = &(&(&e * &s(6)) + &(&(&i * &g) * &fr(3, 2))) - &(&b * &fr(1, 2));
    let c2 = &c - &(&a * &(&(&(&b * &fr(1, 4)) - &(&(&i * &g) * &fr(1, 4))) - &e));
    let g2 = &i * &(&(&(&e * &s(-2)) + &(&b * &fr(1, 2))) + &(&(&i * &g) * &fr(1, 2)));
    Ok(DParams::cubic(a, b2, c2, g2))
}

/// Parameters of the `Psi^{-1} = Psi^2` image of a cubic.
pub fn psi_inv_params(p: &DParams) -> Result<DParams> {
    p.require_cubic()?;
    let (a, b, c, g) = (p.a(), p.b(), p.c(), p.gamma.clone());
    let i = Scalar::i();
    let e = a_shift(&a);
    let b2 = &(&(&e * &s(6)) - &(&(&i * &g) * &fr(3, 2))) - &(&b * &fr(1, 2));
    let c2 = &c - &(&a * &(&(&(&b * &fr(1, 4)) + &(&(&i * &g) * &fr(1, 4))) - &e));
    let g2 = &(&i * &(&(&e * &s(2)) - &(&b * &fr(1, 2)))) - &(&g * &fr(1, 2));
    Ok(DParams::cubic(a, b2, c2, g2))
}

/// `(-sign) i v/2 - u/2 - c`, `-v/2 - sign(3i u/2 + i c)`, `w` with
/// `c = 1 + A/4`, in the algebra whose generators are `u, v, w`.
fn rotation_images(a: &Scalar, sign: i64) -> [Element; 3] {
    let c = &s(1) + &(a * &fr(1, 4));
    let si = &Scalar::i() * &s(sign);
    let (u, v) = (Element::u(), Element::v());
    let mut f = v.scale(&(&si * &fr(1, 2)));
    f.add_scaled(&u, &fr(-1, 2));
    f.add_term(crate::ncalg::Monomial::ONE, &-c.clone());
    let mut g = v.scale(&fr(-1, 2));
    g.add_scaled(&u, &(&si * &fr(3, 2)));
    g.add_term(crate::ncalg::Monomial::ONE, &(&si * &c));
    [f, g, Element::w()]
}

/// `Psi: D(Q, gamma) -> D(Q~, gamma~)` for cubic `Q`.
pub fn psi(p: &DParams) -> Result<(DParams, IsoWitness)> {
    let target = psi_params(p)?;
    let w = IsoWitness::new("Ψ", p.spec(), target.spec(), rotation_images(&p.a(), -1))?;
    Ok((target, w))
}

/// `Psi^{-1}: D(Q, gamma) -> D(Q^, gamma^)` for cubic `Q`.
pub fn psi_inv(p: &DParams) -> Result<(DParams, IsoWitness)> {
    let target = psi_inv_params(p)?;
    let w = IsoWitness::new("Ψ²", p.spec(), target.spec(), rotation_images(&p.a(), 1))?;
    Ok((target, w))
}

/// Rescales `D(Q, gamma)` with leading coefficient `c` to the monic
/// `D(xi^2 Q, xi gamma)`, `xi^2 = 1/c`, via `u -> u, v -> v/xi, w -> w/xi`.
/// Of the two square roots, `xi` has positive real part, or positive
/// imaginary part when the real part is zero.
pub fn normalize_monic(q: &Poly, gamma: &Scalar) -> Result<(DParams, Scalar, IsoWitness)> {
    let n = q.degree().unwrap_or(0);
    if n < 3 {
        return Err(Error::DegreeTooSmall { degree: n });
    }
    let lead = q.lead();
    let xi = lead.inv()?.sqrt().ok_or(Error::NotASquare(Box::new(lead)))?;
    let target = DParams::new(q.scale(&(&xi * &xi)), &xi * gamma)?;
    let inv = xi.inv()?;
    let images = [Element::u(), Element::v().scale(&inv), Element::w().scale(&inv)];
    let source = AlgebraSpec::d_unnormalized(q.clone(), gamma.clone())?;
    let w = IsoWitness::new(format!("Scale({xi})"), source, target.spec(), images)?;
    Ok((target, xi, w))
}

/// The six isomorphisms out of a cubic `D(Q, gamma)`, as words in `Psi`
/// and `Theta`. `ThetaPsi` applies `Psi` first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Id,
    Psi,
    Psi2,
    Theta,
    ThetaPsi,
    ThetaPsi2,
}

impl GroupElement {
    pub const ALL: [GroupElement; 6] = [
        GroupElement::Id,
        GroupElement::Psi,
        GroupElement::Psi2,
        GroupElement::Theta,
        GroupElement::ThetaPsi,
        GroupElement::ThetaPsi2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupElement::Id => "Id",
            GroupElement::Psi => "Ψ",
            GroupElement::Psi2 => "Ψ²",
            GroupElement::Theta => "Θ",
            GroupElement::ThetaPsi => "Θ∘Ψ",
            GroupElement::ThetaPsi2 => "Θ∘Ψ²",
        }
    }

    /// Image parameters. Elements other than `Id` and `Theta` need `n = 3`.
    pub fn apply(self, p: &DParams) -> Result<DParams> {
        Ok(match self {
            GroupElement::Id => p.clone(),
            GroupElement::Theta => theta_params(p),
            GroupElement::Psi => psi_params(p)?,
            GroupElement::Psi2 => psi_inv_params(p)?,
            GroupElement::ThetaPsi => theta_params(&psi_params(p)?),
            GroupElement::ThetaPsi2 => theta_params(&psi_inv_params(p)?),
        })
    }

    /// Image parameters with a verified witness.
    pub fn witness(self, p: &DParams) -> Result<(DParams, IsoWitness)> {
        let identity = || {
            let images = [Element::u(), Element::v(), Element::w()];
            IsoWitness::new("Id", p.spec(), p.spec(), images).map(|w| (p.clone(), w))
        };
        let then_theta = |(mid, w): (DParams, IsoWitness)| -> Result<(DParams, IsoWitness)> {
            let (target, t) = theta(&mid);
            Ok((target, w.then(&t)?))
        };
        match self {
            GroupElement::Id => identity(),
            GroupElement::Theta => Ok(theta(p)),
            GroupElement::Psi => psi(p),
            GroupElement::Psi2 => psi_inv(p),
            GroupElement::ThetaPsi => then_theta(psi(p)?),
            GroupElement::ThetaPsi2 => then_theta(psi_inv(p)?),
        }
    }
}

fn group_for(p: &DParams) -> &'static [GroupElement] {
    if p.n() == 3 {
        &GroupElement::ALL
    } else {
        &[GroupElement::Id, GroupElement::Theta]
    }
}

/// Distinct parameters isomorphic to `p`, with the first group element
/// reaching each.
pub fn orbit_params(p: &DParams) -> Vec<(GroupElement, DParams)> {
    let mut out: Vec<(GroupElement, DParams)> = Vec::new();
    for &g in group_for(p) {
        let image = g.apply(p).expect("group chosen by degree");
        if !out.iter().any(|(_, q)| *q == image) {
            out.push((g, image));
        }
    }
    out
}

/// Like [`orbit_params`], with a verified witness for every member.
pub fn orbit(p: &DParams) -> Result<Vec<(DParams, IsoWitness)>> {
    orbit_params(p).into_iter().map(|(g, _)| g.witness(p)).collect()
}

/// Group elements fixing `p`.
pub fn stabilizer(p: &DParams) -> Vec<GroupElement> {
    group_for(p).iter().copied().filter(|g| g.apply(p).expect("group chosen by degree") == *p).collect()
}

/// A witness `D(p1) -> D(p2)` when one exists. Both must be monic.
pub fn is_isomorphic_d(p1: &DParams, p2: &DParams) -> Result<Option<IsoWitness>> {
    if p1.n() != p2.n() {
        return Ok(None);
    }
    for &g in group_for(p1) {
        if g.apply(p1)? == *p2 {
            return Ok(Some(g.witness(p1)?.1));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AutGroup {
    Trivial,
    Z2Theta,
    Z2ThetaPsi,
    Z2ThetaPsi2,
    S3,
}

impl AutGroup {
    pub fn order(self) -> usize {
        match self {
            AutGroup::Trivial => 1,
            AutGroup::S3 => 6,
            _ => 2,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            AutGroup::Trivial => "trivial",
            AutGroup::Z2Theta => "Z2(Θ)",
            AutGroup::Z2ThetaPsi => "Z2(Θ∘Ψ)",
            AutGroup::Z2ThetaPsi2 => "Z2(Θ∘Ψ²)",
            AutGroup::S3 => "S3",
        }
    }
}

impl fmt::Display for AutGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// The automorphism group read off from `k = B - 4(A^2/16 - 1)` and
/// `gamma` for cubics, and from `gamma` alone in higher degree.
pub fn automorphism_group(p: &DParams) -> AutGroup {
    let gamma = &p.gamma;
    if p.n() >= 4 {
        return if gamma.is_zero() { AutGroup::Z2Theta } else { AutGroup::Trivial };
    }
    let k = p.k();
    let ig = &Scalar::i() * gamma;
    if gamma.is_zero() {
        if k.is_zero() {
            AutGroup::S3
        } else {
            AutGroup::Z2Theta
        }
    } else if k == ig {
        AutGroup::Z2ThetaPsi
    } else if k == -ig {
        AutGroup::Z2ThetaPsi2
    } else {
        AutGroup::Trivial
    }
}

/// A point of the moduli space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[allow(clippy::large_enum_variant)]
pub enum ModuliPoint {
    /// `(Q, gamma^2)` for `n >= 4`.
    High { q: Poly, gamma_sq: Scalar },
    /// `(k(k^2 + 9 gamma^2), k^2 - 3 gamma^2, 6C - AB, A)` for `n = 3`.
    Cubic([Scalar; 4]),
}

impl ModuliPoint {
    /// Coordinates as text.
    pub fn coordinates(&self) -> Vec<String> {
        match self {
            ModuliPoint::High { q, gamma_sq } => vec![q.to_string(), gamma_sq.to_string()],
            ModuliPoint::Cubic(xs) => xs.iter().map(Scalar::to_string).collect(),
        }
    }
}

pub fn moduli_invariants(p: &DParams) -> ModuliPoint {
    let g2 = &p.gamma * &p.gamma;
    if p.n() >= 4 {
        return ModuliPoint::High { q: p.q.clone(), gamma_sq: g2 };
    }
    let k = p.k();
    let k2 = &k * &k;
    let (a, b, c) = (p.a(), p.b(), p.c());
    ModuliPoint::Cubic([
        &k * &(&k2 + &(&g2 * &s(9))),
        &k2 - &(&g2 * &s(3)),
        &(&c * &s(6)) - &(&a * &b),
        a,
    ])
}

/// Which condition made two `H(P, gamma)` isomorphic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HCase {
    /// `n >= 4`: equal `P`, `gamma` up to sign.
    HighDegree,
    /// `n = 3`, via `Psi`.
    I,
    /// `n = 3`, via `Psi^{-1}`.
    II,
    /// `n = 3`, equal `P`, `gamma` up to sign.
    III,
}

impl HCase {
    pub fn label(self) -> &'static str {
        match self {
            HCase::HighDegree => "n>=4",
            HCase::I => "i",
            HCase::II => "ii",
            HCase::III => "iii",
        }
    }
}

fn plus_minus(a: &Scalar, b: &Scalar) -> bool {
    a == b || *a == -b.clone()
}

/// Decides `H(P1, gamma1) ≅ H(P2, gamma2)`; `Some(case)` when isomorphic,
/// naming the first case from [`h_cases`] that applies.
pub fn is_isomorphic_h(p1: &Poly, gamma1: &Scalar, p2: &Poly, gamma2: &Scalar) -> Result<Option<HCase>> {
    Ok(h_cases(p1, gamma1, p2, gamma2)?.into_iter().next())
}

/// Every case condition satisfied by the pair; the cases can overlap, e.g.
/// both `i` and `ii` hold when `gamma1 = 0` and the partners coincide.
///
/// For `P = 3t^2 + Xt + Y` the partner of `(Y, gamma)` under `Psi` is
/// `Y~ = 3X^2/32 + 3i gamma/2 - Y/2` with `gamma~ = ±(i(Y/2 - X^2/32) - gamma/2)`,
/// and under `Psi^{-1}` the same with `i` replaced by `-i`.
pub fn h_cases(p1: &Poly, gamma1: &Scalar, p2: &Poly, gamma2: &Scalar) -> Result<Vec<HCase>> {
    AlgebraSpec::h(p1.clone(), gamma1.clone())?;
    AlgebraSpec::h(p2.clone(), gamma2.clone())?;
    if p1.degree() != p2.degree() {
        return Ok(Vec::new());
    }
    if p1.degree() != Some(2) {
        let same = p1 == p2 && plus_minus(gamma1, gamma2);
        return Ok(if same { vec![HCase::HighDegree] } else { Vec::new() });
    }
    let (x, y1, y2) = (p1.coeff(1), p1.coeff(0), p2.coeff(0));
    if x != p2.coeff(1) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    if y1 == y2 && plus_minus(gamma1, gamma2) {
        out.push(HCase::III);
    }
    let x2_32 = &(&x * &x) * &fr(1, 32);
    for (case, sign) in [(HCase::I, 1), (HCase::II, -1)] {
        let si = &Scalar::i() * &s(sign);
        let y_partner = &(&(&x2_32 * &s(3)) + &(&(&si * gamma1) * &fr(3, 2))) - &(&y1 * &fr(1, 2));
        let g_partner = &(&si * &(&(&y1 * &fr(1, 2)) - &x2_32)) - &(gamma1 * &fr(1, 2));
        if y2 == y_partner && plus_minus(gamma2, &g_partner) {
            out.push(case);
        }
    }
    Ok(out)
}

/// The same question answered through the quotients: `Q_j` is the monic
/// zero-constant partner of `P_j`, and the algebras are isomorphic iff some
/// member of the orbit of `D(Q1, gamma1)` equals `D(Q2 + c, gamma2)` for a
/// constant `c`.
pub fn is_isomorphic_h_via_d(p1: &Poly, gamma1: &Scalar, p2: &Poly, gamma2: &Scalar) -> Result<bool> {
    if p1.degree() != p2.degree() {
        return Ok(false);
    }
    let d1 = DParams::new(poly::solve_q_from_p(p1)?, gamma1.clone())?;
    let q2 = poly::solve_q_from_p(p2)?;
    Ok(orbit_params(&d1).iter().any(|(_, p)| p.gamma == *gamma2 && p.q.without_constant() == q2))
}
