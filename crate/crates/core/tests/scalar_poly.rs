use kleinian_core::poly::{self, Poly};
use kleinian_core::Scalar;
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=9, -20i64..=20, 1i64..=9).prop_map(|(a, b, c, d)| Scalar::gauss((a, b), (c, d)))
}

fn poly(max_degree: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(scalar(), 0..=max_degree + 1).prop_map(Poly::from_coeffs)
}

fn monic(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Poly> {
    n.prop_flat_map(|n| prop::collection::vec(scalar(), n)).prop_map(|mut c| {
        c.push(Scalar::one());
        Poly::from_coeffs(c)
    })
}

proptest! {
    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
        }
    }

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn square_roots_square_back(a in scalar()) {
        let sq = &a * &a;
        let root = sq.sqrt().unwrap();
        prop_assert_eq!(&root * &root, sq);
        prop_assert!(root == a || root == -a.clone());
    }

    #[test]
    fn poly_text_round_trip(p in poly(6)) {
        prop_assert_eq!(p.to_string().parse::<Poly>().unwrap(), p);
    }

    #[test]
    fn p_q_round_trips(q in monic(3..=7)) {
        let p = poly::solve_p_from_q(&q).unwrap();
        prop_assert!(poly::satisfies_evenness(&q, &p));
        let back = poly::solve_q_from_p(&p).unwrap();
        prop_assert_eq!(&back, &q.without_constant());
        prop_assert_eq!(poly::solve_p_from_q(&back).unwrap(), p);
    }

    #[test]
    fn alpha_beta_is_linear(f in poly(8), g in poly(8), c in scalar()) {
        let (af, bf) = poly::alpha_beta(&f);
        let (ag, bg) = poly::alpha_beta(&g);
        let (a, b) = poly::alpha_beta(&(&f + &g.scale(&c)));
        prop_assert_eq!(a, &af + &ag.scale(&c));
        prop_assert_eq!(b, &bf + &bg.scale(&c));
    }

    #[test]
    fn alpha_beta_defining_identity(f in poly(8)) {
        let (a, b) = poly::alpha_beta(&f);
        let s = Poly::x();
        let lhs = &poly::subst_neg_s_s1(&a) - &(&s * &poly::subst_neg_s_s1(&b));
        prop_assert_eq!(lhs, poly::rho_mu(&poly::subst_neg_s_s1(&f)).0);
    }

    #[test]
    fn parity_split_recombines(f in poly(9)) {
        let (even, odd) = poly::parity_split(&f);
        prop_assert_eq!(&even + &odd, f);
        prop_assert!(even.coeffs().iter().enumerate().all(|(i, c)| i % 2 == 0 || c.is_zero()));
        prop_assert!(odd.coeffs().iter().enumerate().all(|(i, c)| i % 2 == 1 || c.is_zero()));
    }
}

#[test]
fn alpha_beta_recurrence_up_to_twelve() {
    // alpha_{n+1} = t^n + t alpha_n + 2t beta_n, beta_{n+1} = (t-2) beta_n - 2 alpha_n
    let t = Poly::x();
    let (mut alpha, mut beta) = (Poly::from_ints(&[1]), Poly::zero());
    for n in 1..=12u32 {
        assert_eq!(poly::alpha_beta(&t.pow(n)), (alpha.clone(), beta.clone()), "n = {n}");
        let next_alpha = &(&t.pow(n) + &(&t * &alpha)) + &(&t * &beta).scale(&Scalar::from_int(2));
        let next_beta = &(&(&t - &Poly::from_ints(&[2])) * &beta) - &alpha.scale(&Scalar::from_int(2));
        alpha = next_alpha;
        beta = next_beta;
    }
}

#[test]
fn rho_of_powers_closed_form() {
    // rho_n = ((-s(s-1))^n - (-s(s+1))^n) / 2s
    let s = Poly::x();
    let minus = Poly::from_ints(&[0, 1, -1]);
    let plus = Poly::from_ints(&[0, -1, -1]);
    for n in 1..=12u32 {
        let rho = poly::rho_mu(&poly::subst_neg_s_s1(&Poly::x().pow(n))).0;
        let numerator = &minus.pow(n) - &plus.pow(n);
        assert_eq!(&(&rho * &s) * &Poly::from_ints(&[2]), numerator, "n = {n}");
    }
}
