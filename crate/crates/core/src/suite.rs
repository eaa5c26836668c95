//! The acceptance suite: thirteen exact checks, each a pure function of a
//! seed, run independently and reported in index order.

use std::fmt;

use crate::error::Result;
use crate::iso::{self, AutGroup, DParams, GroupElement};
use crate::ncalg::{check_diamond, Algebra, AlgebraSpec, Element, Kind, Monomial};
use crate::par::{self, Exec};
use crate::poisson::{self, CPoly};
use crate::poly::{self, Poly};
use crate::sample::Sampler;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Largest standard degree of the random elements in the semiclassical check.
    pub max_degree: u64,
    pub exec: Exec,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { seed: 20240601, max_degree: 20, exec: Exec::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub index: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{verdict}] {:>2}. {}: {}", self.index, self.name, self.detail)
    }
}

type CheckFn = fn(&SuiteConfig, &mut Sampler) -> Result<std::result::Result<String, String>>;

pub const CHECKS: [(&str, CheckFn); 13] = [
    ("P-Q correspondence", check_pq),
    ("centrality of Omega", check_centrality),
    ("critical pairs resolve", check_basis),
    ("commutators with f(u)", check_ucomms),
    ("operator annihilation", check_fprod),
    ("product degree bounds", check_prodform),
    ("binomial polynomials", check_binomials),
    ("f^2 and g^2 formulas", check_squares),
    ("Theta and Psi witnesses", check_psi),
    ("automorphisms and orbits", check_classification),
    ("moduli invariants", check_moduli),
    ("H-level classification", check_h_level),
    ("semiclassical limit", check_semiclassical),
];

/// Runs check `index` (1-based).
pub fn run_check(config: &SuiteConfig, index: usize) -> CheckOutcome {
    let (name, check) = CHECKS[index - 1];
    let mut sampler = Sampler::new(config.seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(index as u64));
    let (passed, detail) = match check(config, &mut sampler) {
        Ok(Ok(detail)) => (true, detail),
        Ok(Err(detail)) => (false, detail),
        Err(e) => (false, format!("error: {e}")),
    };
    CheckOutcome { index, name, passed, detail }
}

/// Runs every check, in parallel under `config.exec`, returning results in
/// index order.
pub fn run_all(config: &SuiteConfig) -> Vec<CheckOutcome> {
    par::map_range(config.exec, CHECKS.len(), |i| run_check(config, i + 1))
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Ok(Err(format!($($msg)+)));
        }
    };
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn frac(n: i64, d: i64) -> Scalar {
    Scalar::frac(n, d)
}

/// `P` for monic `Q` of degrees 4 to 6, computed independently by brute
/// elimination over the odd coefficients and frozen here.
fn p_oracle() -> Vec<(Poly, Poly)> {
    let ints = Poly::from_ints;
    vec![
        (ints(&[0, 0, 0, 0, 1]), ints(&[56, 56, 20, 4])),
        (ints(&[0, 0, 0, 0, 0, 1]), ints(&[608, 608, 216, 40, 5])),
        (ints(&[0, 0, 0, 0, 0, 0, 1]), ints(&[9440, 9440, 3352, 616, 70, 6])),
    ]
}

/// Frozen oracle: `t^4 + At^3 + Bt^2 + Ct + D` gives
/// `4t^3 + (3A+20)t^2 + (8A+2B+56)t + (8A+2B+C+56)`.
fn quartic_p(a: &Scalar, b: &Scalar, c: &Scalar) -> Poly {
    let lin = &(&(a * &int(8)) + &(b * &int(2))) + &int(56);
    Poly::from_coeffs(vec![&lin + c, lin, &(a * &int(3)) + &int(20), int(4)])
}

/// `Q` for generic cubic `P`, frozen from the same oracle run in reverse.
fn q_oracle() -> Vec<(Poly, Poly)> {
    let g = Scalar::gauss;
    vec![
        (Poly::from_ints(&[5, -1, 2, 4]), Poly::from_coeffs(vec![int(0), int(6), frac(-9, 2), int(-6), int(1)])),
        (
            Poly::from_coeffs(vec![frac(5, 2), int(-1), g((1, 3), (2, 3)), int(4)]),
            Poly::from_coeffs(vec![int(0), frac(7, 2), g((-41, 18), (-8, 9)), g((-59, 9), (2, 9)), int(1)]),
        ),
    ]
}

fn check_pq(_: &SuiteConfig, rng: &mut Sampler) -> Result<std::result::Result<String, String>> {
    for _ in 0..200 {
        let (a, b, c) = (rng.scalar(), rng.scalar(), rng.scalar());
        let q = Poly::from_coeffs(vec![c, b.clone(), a.clone(), int(1)]);
        let p = poly::solve_p_from_q(&q)?;
        let want = Poly::from_coeffs(vec![&(&a * &int(2)) + &(&b + &int(8)), &(&a * &int(2)) + &int(8), int(3)]);
        ensure!(p == want, "P({q}) = {p}, expected {want}");
        ensure!(poly::solve_q_from_p(&p)? == q.without_constant(), "Q from P({q}) is not Q minus its constant");
        ensure!(poly::solve_p_from_q(&poly::solve_q_from_p(&p)?)? == p, "P -> Q -> P is not the identity for {p}");
    }
    for _ in 0..50 {
        let n = rng.range(4, 6);
        let q = rng.monic(n);
        let p = poly::solve_p_from_q(&q)?;
        ensure!(poly::satisfies_evenness(&q, &p), "evenness fails for Q = {q}");
        ensure!(p.degree() == Some(n - 1) && p.lead() == int(n as i64), "leading term of P({q}) is wrong");
        ensure!(poly::solve_q_from_p(&p)? == q.without_constant(), "round trip fails for Q = {q}");
    }
    for _ in 0..50 {
        let (a, b, c, d) = (rng.scalar(), rng.scalar(), rng.scalar(), rng.scalar());
        let q = Poly::from_coeffs(vec![d, c.clone(), b.clone(), a.clone(), int(1)]);
        ensure!(poly::solve_p_from_q(&q)? == quartic_p(&a, &b, &c), "P({q}) disagrees with the frozen quartic formula");
    }
    for (q, p) in p_oracle() {
        ensure!(poly::solve_p_from_q(&q)? == p, "P({q}) disagrees with the frozen value {p}");
    }
    for (p, q) in q_oracle() {
        ensure!(poly::solve_q_from_p(&p)? == q, "Q({p}) disagrees with the frozen value {q}");
    }
    Ok(Ok("200 cubics, 50 of degree 4-6, 50 quartics, 5 frozen values".into()))
}

fn check_centrality(_: &SuiteConfig, rng: &mut Sampler) -> Result<std::result::Result<String, String>> {
    for _ in 0..50 {
        let n = rng.range(3, 6);
        let q = rng.poly_with_lead(n, int(1));
        let spec = AlgebraSpec::h(poly::solve_p_from_q(&q)?, rng.scalar())?;
        let alg = Algebra::new(spec);
        let omega = alg.center_element(&q)?;
        for g in [Element::u(), Element::v(), Element::w()] {
            let c = alg.commutator(&omega, &g);
            ensure!(c.is_zero(), "[Omega, {g}] = {c} in {}", alg.spec());
        }
    }
    Ok(Ok("50 specs of degree 3-6".into()))
}

fn check_basis(_: &SuiteConfig, rng: &mut Sampler) -> Result<std::result::Result<String, String>> {
    let mut pairs = 0;
    for kind in [Kind::H, Kind::D] {
        for _ in 0..50 {
            let n = rng.range(3, 6);
            let spec = rng.spec(kind, n);
            let report = check_diamond(&spec);
            pairs += report.pairs.len();
            if let Some(bad) = report.pairs.iter().find(|p| !p.resolves()) {
                return Ok(Err(format!("{} does not resolve in {spec}", bad.word_text())));
            }
        }
    }
    let good = AlgebraSpec::d(Poly::from_ints(&[0, 0, 0, 1]), Scalar::zero())?;
    let corrupted = AlgebraSpec::unchecked(Kind::D, good.p() + &Poly::from_ints(&[1]), good.q().cloned(), Scalar::zero());
    ensure!(!check_diamond(&corrupted).all_resolve(), "negative control with P + 1 resolved");
    Ok(Ok(format!("{pairs} critical pairs in 100 specs; corrupted control fails")))
}

fn check_ucomms(_: &SuiteConfig, rng: &mut Sampler) -> Result<std::result::Result<String, String>> {
    for trial in 0..50 {
        let kind = if trial % 2 == 0 { Kind::H } else { Kind::D };
        let n = rng.range(3, 5);
        let alg = Algebra::new(rng.spec(kind, n));
        let deg = rng.range(0, 8);
        let f = rng.poly(deg);
        let (alpha, beta) = poly::alpha_beta(&f);
        let (u, v, w) = (Element::u(), Element::v(), Element::w());
        let fu = Element::poly_in_u(&f);
        let (uv, uw) = (alg.commutator(&u, &v), alg.commutator(&u, &w));
        let (a, b) = (Element::poly_in_u(&alpha), Element::poly_in_u(&beta));
        let lhs = alg.commutator(&fu, &v);
        let rhs = alg.mul(&a, &uv).add(&alg.mul(&b, &uw));
        ensure!(lhs == rhs, "[f(u), v] mismatch for f = {f} in {}", alg.spec());
        let lhs = alg.commutator(&fu, &w);
        let ub = alg.mul(&u, &b);
        let rhs = alg.mul(&ub, &uv).neg().add(&alg.mul(&a.add(&b), &uw));
        ensure!(lhs == rhs, "[f(u), w] mismatch for f = {f} in {}", alg.spec());
    }
    Ok(Ok("50 polynomials of degree <= 8, H and D".into()))
}

fn check_fprod(_: &SuiteConfig, rng: &mut Sampler) -> Result<std::result::Result<String, String>> {
    let mut count = 0;
    for n in 3..=5 {
        let alg = Algebra::new(rng.d_spec(n));
        let u = Element::u();
        for m in 0..=4u32 {
            let op = poly::f_product(m as usize);
            for a in 0..=m {
                for eps in 0..=1u32.min(a) {
                    let j = a - eps;
                    for i in 0..=2 {
                        let x = Element::monomial(i, j, eps);
                        let y = alg.apply_op_poly(&op, &u, &x);
                        ensure!(y.is_zero(), "product of F_0..F_{m} on {x} gives {y} in {}", alg.spec());
                        count += 1;
                    }
                }
            }
        }
        let f1 = alg.apply_op_poly(&poly::f_poly(1), &u, &Element::v());
        let want = Element::scalar(alg.spec().gamma() * &int(2));
        ensure!(f1 == want, "F_1(ad u, l_u)(v) = {f1}, expected {want}");
    }
    Ok(Ok(format!("{count} monomials annihilated; F_1(v) = 2 gamma")))
}

fn check_prodform(_: &SuiteConfig, _: &mut Sampler) -> Result<std::result::Result<String, String>> {
    for m in 0..=6 {
        let prod = poly::f_product(m);
        let top = 2 * m + 1;
        ensure!(prod.s_degree() == Some(top), "S-degree of the product up to F_{m} is not {top}");
        ensure!(prod.s_coeff(top) == Poly::constant(int(1)), "top coefficient for m = {m} is not 1");
        for i in 0..=top {
            let d = prod.s_coeff(top - i).degree();
            ensure!(d.is_none_or(|d| 2 * d <= i), "deg a_{} = {d:?} exceeds {i}/2 for m = {m}", top - i);
        }
    }
    Ok(Ok("m = 0..6".into()))
}

fn check_binomials(_: &SuiteConfig, _: &mut Sampler) -> Result<std::result::Result<String, String>> {
    let t4 = Poly::monomial(frac(1, 4), 1);
    let t2 = Poly::monomial(frac(1, 2), 1);
    let minus_one = int(-1);
    let table: Vec<(Poly, Poly)> = (2..=33).map(poly::pq_polys).collect::<Result<_>>()?;
    let p = |m: usize| &table[m - 2].0;
    let q = |m: usize| &table[m - 2].1;
    for m in 2..=32usize {
        let pow2 = int(2).pow(m as u32 - 1);
        ensure!(p(m).eval(&minus_one) == &int(m as i64) * &pow2.inv()?, "p_{m}(-1) != m/2^(m-1)");
        ensure!(q(m).eval(&minus_one) == pow2.inv()?, "q_{m}(-1) != 1/2^(m-1)");
        if m >= 3 {
            ensure!(*p(m + 1) == p(m) + &(&t4 * p(m - 1)), "p_{} != p_{m} + t p_{}/4", m + 1, m - 1);
            ensure!(*q(m + 1) == q(m) + &(&t4 * q(m - 1)), "q_{} != q_{m} + t q_{}/4", m + 1, m - 1);
            ensure!(*q(m) == p(m) + &(&t2 * p(m - 1)), "q_{m} != p_{m} + t p_{}/2", m - 1);
        }
    }
    Ok(Ok("m = 2..32".into()))
}

fn check_squares(_: &SuiteConfig, rng: &mut Sampler) -> Result<std::result::Result<String, String>> {
    for _ in 0..20 {
        let (a, b, c, gamma) = (rng.scalar(), rng.scalar(), rng.scalar(), rng.scalar());
        let alg = Algebra::new(DParams::cubic(a.clone(), b, c, gamma).spec());
        let i = Scalar::i();
        let x4 = &(&(&a * &int(2)) + &int(8)) * &frac(1, 4);
        let x8 = &x4 * &frac(1, 2);
        let (u, v, w) = (Element::u(), Element::v(), Element::w());
        let one = Element::one();
        let lin = |cu: Scalar, cv: Scalar, c0: Scalar| u.scale(&cu).add(&v.scale(&cv)).add(&one.scale(&c0));
        let f = lin(frac(-1, 2), &i * &frac(1, 2), -x8.clone());
        let g = lin(&i * &frac(3, 2), frac(-1, 2), &i * &x8);
        // u + X/4 and 3u + X/4
        let s1 = lin(int(1), int(0), x4.clone());
        let s3 = lin(int(3), int(0), x4.clone());
        let iv = v.scale(&i);
        let mut f2 = alg.mul(&v, &v).scale(&frac(-1, 4));
        f2.add_scaled(&alg.mul(&s1, &iv), &frac(-1, 2));
        f2.add_scaled(&w, &(&i * &frac(1, 2)));
        f2.add_scaled(&alg.mul(&s1, &s1), &frac(1, 4));
        ensure!(alg.mul(&f, &f) == f2, "f^2 formula fails in {}", alg.spec());
        let mut g2 = alg.mul(&v, &v).scale(&frac(1, 4));
        g2.add_scaled(&alg.mul(&s3, &iv), &frac(-1, 2));
        g2.add_scaled(&w, &(&i * &frac(3, 2)));
        g2.add_scaled(&alg.mul(&s3, &s3), &frac(-1, 4));
        ensure!(alg.mul(&g, &g) == g2, "g^2 formula fails in {}", alg.spec());
    }
    Ok(Ok("20 random cubics".into()))
}

fn check_psi(_: &SuiteConfig, rng: &mut Sampler) -> Result<std::result::Result<String, String>> {
    let mut witnesses = 0;
    for _ in 0..100 {
        let p = rng.d_params(3);
        for g in [GroupElement::Theta, GroupElement::Psi, GroupElement::Psi2] {
            let (_, w) = g.witness(&p)?;
            ensure!(iso::verify_homomorphism(&w), "{} witness fails for {p}", w.name);
            witnesses += 1;
        }
        let once = iso::psi_params(&p)?;
        let thrice = iso::psi_params(&iso::psi_params(&once)?)?;
        ensure!(thrice == p, "Psi^3 moves {p}");
        let conj = iso::theta_params(&iso::psi_params(&iso::theta_params(&p))?);
        ensure!(conj == iso::psi_inv_params(&p)?, "Theta Psi Theta != Psi^2 at {p}");
        ensure!(iso::theta_params(&iso::theta_params(&p)) == p, "Theta^2 moves {p}");
        // The rotation images taken in D(p) satisfy the relations of D(p~),
        // including [g,h] = g^2 + 3f^2 + (2A+8)f + (2A+B~+8).
        let (back, w) = iso::psi_inv(&once)?;
        ensure!(back == p, "Psi^-1 of Psi(p) is not p for {p}");
        let alg = Algebra::new(p.spec());
        let [f, g, h] = &w.images;
        let a2 = &p.a() * &int(2);
        let mut rhs = alg.mul(g, g).add(&alg.mul(f, f).scale(&int(3)));
        rhs.add_scaled(f, &(&a2 + &int(8)));
        rhs.add_term(Monomial::ONE, &(&(&a2 + &once.b()) + &int(8)));
        ensure!(alg.commutator(g, h) == rhs, "[g,h] relation fails for {p}");
    }
    Ok(Ok(format!("{witnesses} witnesses on 100 cubics; Psi^3 = Id, Theta Psi Theta = Psi^2")))
}

fn check_classification(_: &SuiteConfig, rng: &mut Sampler) -> Result<std::result::Result<String, String>> {
    let mut seen = std::collections::HashSet::new();
    for _ in 0..200 {
        let p = rng.stratified_cubic();
        let group = iso::automorphism_group(&p);
        seen.insert(group);
        let orbit = iso::orbit_params(&p).len();
        ensure!(group.order() * orbit == 6, "|Aut| = {} and |orbit| = {orbit} at {p}", group.order());
        let stab = iso::stabilizer(&p);
        ensure!(stab.len() == group.order(), "stabilizer {stab:?} disagrees with {group} at {p}");
        let expected = match group {
            AutGroup::Z2Theta => Some(GroupElement::Theta),
            AutGroup::Z2ThetaPsi => Some(GroupElement::ThetaPsi),
            AutGroup::Z2ThetaPsi2 => Some(GroupElement::ThetaPsi2),
            _ => None,
        };
        if let Some(g) = expected {
            ensure!(stab.contains(&g), "{group} at {p} but stabilizer is {stab:?}");
        }
    }
    ensure!(seen.len() == 5, "strata covered: {seen:?}");
    let cubic = |b: Scalar, g: i64| DParams::cubic(int(0), b, int(0), int(g));
    let examples = [
        (cubic(int(-4), 0), AutGroup::S3),
        (cubic(int(0), 0), AutGroup::Z2Theta),
        (cubic(Scalar::gauss((-4, 1), (1, 1)), 1), AutGroup::Z2ThetaPsi),
    ];
    for (p, want) in examples {
        ensure!(iso::automorphism_group(&p) == want, "{p} is not {want}");
    }
    Ok(Ok("200 cubics over all strata; examples classify".into()))
}

fn check_moduli(_: &SuiteConfig, rng: &mut Sampler) -> Result<std::result::Result<String, String>> {
    let mut isomorphic = 0;
    for n in [3, 4, 5] {
        let pairs = if n == 3 { 200 } else { 100 };
        for trial in 0..pairs {
            let p1 = if n == 3 { rng.stratified_cubic() } else { rng.d_params(n) };
            let p2 = if trial % 2 == 0 {
                let members = iso::orbit_params(&p1);
                rng.pick(&members).1.clone()
            } else if n == 3 {
                rng.stratified_cubic()
            } else {
                rng.d_params(n)
            };
            let same = iso::moduli_invariants(&p1) == iso::moduli_invariants(&p2);
            let witness = iso::is_isomorphic_d(&p1, &p2)?;
            if trial % 2 == 0 {
                ensure!(same, "invariants differ on the orbit of {p1}");
            }
            ensure!(same == witness.is_some(), "invariants and orbits disagree for {p1} and {p2}");
            if let Some(w) = witness {
                ensure!(w.target == p2.spec(), "witness for {p1} lands in {}", w.target);
                isomorphic += 1;
            }
        }
    }
    for _ in 0..100 {
        let p = rng.d_params(3);
        let t = iso::psi_params(&p)?;
        let (k, g, i) = (p.k(), p.gamma().clone(), Scalar::i());
        let k_want = &(&k * &frac(-1, 2)) + &(&(&i * &g) * &frac(3, 2));
        let g_want = &(&(&i * &k) * &frac(1, 2)) - &(&g * &frac(1, 2));
        ensure!(t.k() == k_want && *t.gamma() == g_want, "Psi does not rotate (k, gamma) at {p}");
        let x34 = |p: &DParams| (&(&p.c() * &int(6)) - &(&p.a() * &p.b()), p.a());
        ensure!(x34(&t) == x34(&p), "6C - AB or A moves at {p}");
    }
    Ok(Ok(format!(
        "400 pairs ({isomorphic} isomorphic); Psi maps k - gamma sqrt(3) to e^(-2 pi i/3) times itself"
    )))
}

fn check_h_level(_: &SuiteConfig, rng: &mut Sampler) -> Result<std::result::Result<String, String>> {
    use iso::HCase;
    let agree = |p1: &Poly, g1: &Scalar, p2: &Poly, g2: &Scalar| -> Result<std::result::Result<Vec<HCase>, String>> {
        let cases = iso::h_cases(p1, g1, p2, g2)?;
        let via_d = iso::is_isomorphic_h_via_d(p1, g1, p2, g2)?;
        if cases.is_empty() == via_d {
            return Ok(Err(format!("H({p1}, {g1}) vs H({p2}, {g2}): cases {cases:?} but quotient says {via_d}")));
        }
        Ok(Ok(cases))
    };
    let sign = |rng: &mut Sampler, g: &Scalar| if rng.chance(1, 2) { g.clone() } else { -g.clone() };
    for case in [HCase::I, HCase::II, HCase::III, HCase::HighDegree] {
        for _ in 0..50 {
            let n = if case == HCase::HighDegree { rng.range(4, 6) } else { 3 };
            let p1 = rng.h_poly(n);
            let g1 = rng.scalar();
            let d1 = DParams::new(poly::solve_q_from_p(&p1)?, g1.clone())?;
            let image = match case {
                HCase::I => iso::psi_params(&d1)?,
                HCase::II => iso::psi_inv_params(&d1)?,
                _ => d1.clone(),
            };
            let p2 = poly::solve_p_from_q(image.q())?;
            let g2 = sign(rng, image.gamma());
            match agree(&p1, &g1, &p2, &g2)? {
                Err(e) => return Ok(Err(e)),
                Ok(cases) => {
                    ensure!(cases.contains(&case), "expected case {} for H({p1}, {g1}) vs H({p2}, {g2}), got {cases:?}", case.label());
                }
            }
            // Unrelated partner, and a partner with perturbed constant term.
            let p3 = rng.h_poly(n);
            let g3 = rng.scalar();
            let p4 = &p2 + &Poly::constant(rng.nonzero_scalar());
            for (p, g) in [(&p3, &g3), (&p4, &g2)] {
                if let Err(e) = agree(&p1, &g1, p, g)? {
                    return Ok(Err(e));
                }
            }
        }
    }
    Ok(Ok("50 instances per case plus non-isomorphic controls".into()))
}

fn check_semiclassical(config: &SuiteConfig, rng: &mut Sampler) -> Result<std::result::Result<String, String>> {
    for trial in 0..100 {
        let kind = if trial % 2 == 0 { Kind::H } else { Kind::D };
        let n = 3 + trial % 4 / 2;
        let alg = Algebra::new(rng.spec(kind, n));
        let x = rng.nonzero_element(&alg, config.max_degree, 3);
        let y = rng.nonzero_element(&alg, config.max_degree, 3);
        ensure!(poisson::semiclassical_check(&alg, &x, &y)?, "gr[x,y] != {{gr x, gr y}} for x = {x}, y = {y} in {}", alg.spec());
    }
    for n in [3, 4] {
        let phi = poisson::phi_standard(n);
        for _ in 0..20 {
            let (f, g, h) = (rng.cpoly(4, 3), rng.cpoly(4, 3), rng.cpoly(4, 3));
            let br = |a: &CPoly, b: &CPoly| poisson::bracket_phi(a, b, &phi);
            let jacobi = br(&f, &br(&g, &h)).add(&br(&g, &br(&h, &f))).add(&br(&h, &br(&f, &g)));
            ensure!(jacobi.is_zero(), "Jacobi fails for {f}, {g}, {h}");
            ensure!(br(&phi, &f).is_zero(), "phi is not a Casimir against {f}");
            let lim = poisson::bracket_gr_limit;
            let jacobi = lim(&f, &lim(&g, &h)).add(&lim(&g, &lim(&h, &f))).add(&lim(&h, &lim(&f, &g)));
            ensure!(jacobi.is_zero(), "Jacobi fails in the limit quotient for {f}, {g}, {h}");
            let leibniz = lim(&f, &g.mul(&h)).sub(&lim(&f, &g).mul(&h).add(&g.mul(&lim(&f, &h))));
            ensure!(poisson::reduce_limit(&leibniz).is_zero(), "Leibniz fails in the limit quotient");
        }
    }
    Ok(Ok(format!("100 pairs up to degree {}; Jacobi, Casimir, Leibniz on 40 triples", config.max_degree)))
}
