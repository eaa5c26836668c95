//! The thirteen acceptance criteria at exact equality, one line each, plus
//! the closed-form instances they are anchored to.

use kleinian_core::iso::{self, AutGroup, DParams};
use kleinian_core::ncalg::{Algebra, AlgebraSpec, Element};
use kleinian_core::poly::{self, Poly};
use kleinian_core::suite::{self, SuiteConfig};
use kleinian_core::Scalar;
use std::io::Write;

#[test]
fn all_criteria() {
    let outcomes = suite::run_all(&SuiteConfig::default());
    // written to the stdout handle directly so the lines survive output capture
    let mut out = std::io::stdout().lock();
    for outcome in &outcomes {
        writeln!(out, "{outcome}").expect("stdout is writable");
    }
    drop(out);
    let failed: Vec<_> = outcomes.iter().filter(|o| !o.passed).map(|o| o.index).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

#[test]
fn cubic_p_coefficients() {
    // Q = t^3 + 2t^2 - 1: X = 2A + 8 = 12, Y = 2A + B + 8 = 12
    let p = poly::solve_p_from_q(&"t^3+2*t^2-1".parse().unwrap()).unwrap();
    assert_eq!(p.to_string(), "3*t^2+12*t+12");
    assert_eq!(poly::solve_p_from_q(&Poly::from_ints(&[0, 0, 0, 1])).unwrap(), Poly::from_ints(&[8, 8, 3]));
    assert_eq!(poly::solve_q_from_p(&Poly::from_ints(&[8, 8, 3])).unwrap(), Poly::from_ints(&[0, 0, 0, 1]));
}

#[test]
fn displayed_expansion_of_q() {
    let (a, b, c) = (int(2), int(-3), int(5));
    let q = Poly::from_coeffs(vec![c.clone(), b.clone(), a.clone(), int(1)]);
    let want = Poly::from_coeffs(vec![
        c,
        -b.clone(),
        &a - &b,
        &(&a * &int(2)) - &int(1),
        &a - &int(3),
        int(-3),
        int(-1),
    ]);
    assert_eq!(poly::subst_neg_s_s1(&q), want);
}

#[test]
fn binomial_values() {
    let (p5, q5) = poly::pq_polys(5).unwrap();
    assert_eq!(p5.eval(&int(-1)), Scalar::frac(5, 16));
    assert_eq!(q5.eval(&int(-1)), Scalar::frac(1, 16));
    assert_eq!(poly::pq_polys(3).unwrap().0, "1+t/4".parse().unwrap());
}

#[test]
fn defining_relations() {
    let alg = Algebra::new(AlgebraSpec::d(Poly::from_ints(&[0, 0, 0, 1]), Scalar::zero()).unwrap());
    let (u, v, w) = (Element::u(), Element::v(), Element::w());
    assert_eq!(alg.mul(&v, &u).to_string(), "u*v-2*w");
    assert_eq!(alg.commutator(&u, &v), w.scale(&int(2)));
    assert_eq!(alg.commutator(&v, &w), alg.parse_element("v^2+3*u^2+8*u+8").unwrap());
    let gamma = Scalar::gauss((1, 2), (-1, 1));
    let alg = Algebra::new(AlgebraSpec::d(Poly::from_ints(&[1, 0, 0, 1]), gamma.clone()).unwrap());
    let f1 = alg.apply_op_poly(&poly::f_poly(1), &u, &v);
    assert_eq!(f1, Element::scalar(&gamma * &int(2)));
}

#[test]
fn classification_examples() {
    let cubic = |b: Scalar, g: Scalar| DParams::cubic(int(0), b, int(0), g);
    assert_eq!(iso::automorphism_group(&cubic(int(-4), int(0))), AutGroup::S3);
    assert_eq!(iso::automorphism_group(&cubic(int(0), int(0))), AutGroup::Z2Theta);
    assert_eq!(iso::automorphism_group(&cubic(Scalar::gauss((-4, 1), (1, 1)), int(1))), AutGroup::Z2ThetaPsi);
    let q4 = |g: i64| DParams::new(Poly::from_ints(&[0, 0, 0, 0, 1]), int(g)).unwrap();
    let w = iso::is_isomorphic_d(&q4(1), &q4(-1)).unwrap().unwrap();
    assert_eq!(w.name, "Θ");
    let q5 = DParams::new(Poly::from_ints(&[0, 1, 0, 0, 0, 1]), int(3)).unwrap();
    let q5m = DParams::new(Poly::from_ints(&[0, 1, 0, 0, 0, 1]), int(-3)).unwrap();
    assert_eq!(iso::moduli_invariants(&q5), iso::moduli_invariants(&q5m));
    let p = Poly::from_ints(&[8, 8, 3]);
    assert_eq!(iso::is_isomorphic_h(&p, &int(2), &p, &int(-2)).unwrap(), Some(iso::HCase::III));
}
