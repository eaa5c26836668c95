use kleinian_core::ncalg::rewrite::{self, Rewriter, Strategy as Order, WordSum};
use kleinian_core::ncalg::{degree_limit, Algebra, AlgebraSpec, Element, Kind, LimitDegree, Monomial};
use kleinian_core::sample::Sampler;
use kleinian_core::Scalar;
use proptest::prelude::*;

fn algebra(rng: &mut Sampler, kind: Kind) -> Algebra {
    let n = rng.range(3, 4);
    Algebra::new(rng.spec(kind, n))
}

/// Random element with `j + k <= a` and `2i + k <= b`, so of limit degree
/// at most `(a, b)`.
fn bounded_element(rng: &mut Sampler, kind: Kind, terms: usize, (a, b): (usize, usize)) -> Element {
    let mut out = Element::zero();
    for _ in 0..terms {
        let k = rng.range(0, if kind == Kind::D { 1 } else { 2 }.min(a)) as u32;
        let j = rng.range(0, a - k as usize) as u32;
        let i = rng.range(0, (b - k as usize) / 2) as u32;
        out.add_term(Monomial::new(i, j, k), &rng.nonzero_scalar());
    }
    out
}

fn small_element(rng: &mut Sampler, kind: Kind, terms: usize) -> Element {
    bounded_element(rng, kind, terms, (4, 8))
}

fn kind() -> impl Strategy<Value = Kind> {
    prop_oneof![Just(Kind::H), Just(Kind::D)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn associative(seed in any::<u64>(), kind in kind()) {
        let mut rng = Sampler::new(seed);
        let alg = algebra(&mut rng, kind);
        let (x, y, z) = (small_element(&mut rng, kind, 2), small_element(&mut rng, kind, 2), small_element(&mut rng, kind, 2));
        prop_assert_eq!(alg.mul(&alg.mul(&x, &y), &z), alg.mul(&x, &alg.mul(&y, &z)));
    }

    #[test]
    fn commutator_antisymmetry_and_jacobi(seed in any::<u64>(), kind in kind()) {
        let mut rng = Sampler::new(seed);
        let alg = algebra(&mut rng, kind);
        let small = |rng: &mut Sampler| bounded_element(rng, kind, 2, (2, 4));
        let (x, y, z) = (small(&mut rng), small(&mut rng), small(&mut rng));
        prop_assert_eq!(alg.commutator(&x, &y), alg.commutator(&y, &x).neg());
        let c = |a: &Element, b: &Element| alg.commutator(a, b);
        let jacobi = c(&x, &c(&y, &z)).add(&c(&y, &c(&z, &x))).add(&c(&z, &c(&x, &y)));
        prop_assert!(jacobi.is_zero());
    }

    #[test]
    fn reduction_is_idempotent_and_matches_engine(seed in any::<u64>(), kind in kind()) {
        let mut rng = Sampler::new(seed);
        let alg = algebra(&mut rng, kind);
        let x = small_element(&mut rng, kind, 3);
        let rw = Rewriter::new(alg.spec());
        prop_assert_eq!(rw.reduce(&WordSum::from_element(&x), Order::Leftmost), x.clone());
        let x = bounded_element(&mut rng, kind, 2, (3, 6));
        let y = bounded_element(&mut rng, kind, 2, (3, 6));
        let text = format!("({y}) * ({x})");
        let words = rewrite::parse_words(&text).unwrap();
        let left = rw.reduce(&words, Order::Leftmost);
        prop_assert_eq!(&left, &rw.reduce(&words, Order::Rightmost));
        prop_assert_eq!(left, alg.mul(&y, &x));
    }

    #[test]
    fn standard_degree_is_submultiplicative(seed in any::<u64>(), kind in kind()) {
        let mut rng = Sampler::new(seed);
        let alg = algebra(&mut rng, kind);
        let x = rng.nonzero_element(&alg, 16, 3);
        let y = rng.nonzero_element(&alg, 16, 3);
        let (dx, dy) = (alg.degree_standard(&x).unwrap(), alg.degree_standard(&y).unwrap());
        let xy = alg.mul(&x, &y);
        prop_assert!(alg.degree_standard(&xy).unwrap() <= dx + dy);
        let c = alg.commutator(&x, &y);
        if !c.is_zero() {
            prop_assert!(alg.degree_standard(&c).unwrap() + 2 <= dx + dy);
        }
    }

    #[test]
    fn limit_degree_is_submultiplicative(seed in any::<u64>()) {
        let mut rng = Sampler::new(seed);
        let alg = algebra(&mut rng, Kind::D);
        let x = small_element(&mut rng, Kind::D, 3);
        let y = small_element(&mut rng, Kind::D, 3);
        prop_assume!(!x.is_zero() && !y.is_zero());
        let bound = degree_limit(&x).unwrap() + degree_limit(&y).unwrap();
        prop_assert!(degree_limit(&alg.mul(&x, &y)).unwrap() <= bound);
    }

    #[test]
    fn centralizer_of_u_is_polynomials_in_u(seed in any::<u64>(), kind in kind()) {
        let mut rng = Sampler::new(seed);
        let alg = algebra(&mut rng, kind);
        let deg = rng.range(0, 6);
        let f = Element::poly_in_u(&rng.poly(deg));
        prop_assert!(alg.commutator(&f, &Element::u()).is_zero());
        let j = rng.range(0, 3) as u32;
        let k = if j == 0 { 1 } else { rng.range(0, 1) as u32 };
        let perturbed = f.add(&Element::term(Monomial::new(rng.range(0, 3) as u32, j, k), rng.nonzero_scalar()));
        prop_assert!(!alg.commutator(&perturbed, &Element::u()).is_zero());
    }

    #[test]
    fn element_text_round_trip(seed in any::<u64>(), kind in kind()) {
        let mut rng = Sampler::new(seed);
        let alg = algebra(&mut rng, kind);
        let x = small_element(&mut rng, kind, 4);
        prop_assert_eq!(alg.parse_element(&x.to_string()).unwrap(), x);
    }
}

#[test]
fn operator_annihilation_in_degree_four() {
    let alg = Algebra::new(AlgebraSpec::d("t^4 - t + 2".parse().unwrap(), Scalar::gauss((1, 2), (1, 1))).unwrap());
    let op = kleinian_core::poly::f_product(2);
    for (j, k) in [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1)] {
        let x = Element::monomial(1, j, k);
        assert!(alg.apply_op_poly(&op, &Element::u(), &x).is_zero(), "u v^{j} w^{k}");
    }
    let x = Element::monomial(0, 3, 0);
    assert!(!alg.apply_op_poly(&op, &Element::u(), &x).is_zero());
}

#[test]
fn leading_term_is_unique_per_level() {
    let alg = Algebra::new(AlgebraSpec::d("t^3".parse().unwrap(), Scalar::zero()).unwrap());
    let x = alg.parse_element("w*v*u + u^3").unwrap();
    assert_eq!(degree_limit(&x).unwrap(), LimitDegree::new(2, 3));
    let (m, c) = kleinian_core::ncalg::leading_term(&x).unwrap();
    assert_eq!((m, c), (Monomial::new(1, 1, 1), Scalar::one()));
}
