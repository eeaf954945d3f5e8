use gk3::cohomology::CohClass;
use gk3::expr::parse_scalar;
use gk3::gcs::{b_transform, j_complex, j_zeta, TwoForm};
use gk3::harmonic::{contract_sigma, contract_sigma_inv, phi_homega, phi_ht, phi_t, HtClass};
use gk3::linalg::Subspace;
use gk3::scalar::{rat, GaussRational, Monomial, Scalar};
use gk3::spinor::{self, Spinor};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = (i64, i64)> {
    (-12i64..=12, 1i64..=7)
}

fn gauss() -> impl Strategy<Value = GaussRational> {
    (small_rat(), small_rat()).prop_map(|(re, im)| GaussRational::from_fracs(re, im))
}

fn nonzero_gauss() -> impl Strategy<Value = GaussRational> {
    gauss().prop_filter("nonzero", |g| !g.is_zero())
}

fn scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((gauss(), -2i32..=2, -2i32..=2, -2i32..=2), 0..4).prop_map(|terms| {
        terms.into_iter().fold(Scalar::zero(), |acc, (c, a, b, d)| acc + Scalar::monomial(c, Monomial::new(a, b, d)))
    })
}

fn coh_class() -> impl Strategy<Value = CohClass> {
    prop::array::uniform6(scalar()).prop_map(|[one, c, f, sigma, sigmabar, eta]| CohClass { one, c, f, sigma, sigmabar, eta })
}

fn ht_class() -> impl Strategy<Value = HtClass> {
    prop::array::uniform4(scalar()).prop_map(|[p, q_c, q_f, r]| HtClass::new(p, q_c, q_f, r))
}

fn real_two_form() -> impl Strategy<Value = TwoForm> {
    prop::array::uniform6(small_rat()).prop_map(|cs| {
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let terms: Vec<_> = pairs.iter().zip(cs).map(|(&(i, j), (n, d))| (i, j, GaussRational::real(rat(n, d)))).collect();
        TwoForm::from_terms(&terms)
    })
}

fn t_sample() -> impl Strategy<Value = num_rational::BigRational> {
    (2i64..=40, 1i64..=3).prop_map(|(n, d)| rat(n, d)).prop_filter("t > 1", |t| *t > rat(1, 1))
}

proptest! {
    #[test]
    fn scalar_display_reparses(s in scalar()) {
        prop_assert_eq!(parse_scalar(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn conj_is_an_involutive_ring_map(a in scalar(), b in scalar()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn re_and_im_recombine(a in scalar()) {
        let back = a.re() + a.im() * Scalar::i();
        prop_assert_eq!(back, a.clone());
        prop_assert_eq!(a.re().conj(), a.re());
    }

    #[test]
    fn phi_omega_is_an_isometry(x in coh_class(), y in coh_class()) {
        prop_assert_eq!(phi_homega(&x).mukai_pairing(&phi_homega(&y)), x.mukai_pairing(&y));
    }

    #[test]
    fn phi_omega_is_linear(x in coh_class(), y in coh_class(), c in scalar()) {
        let lhs = phi_homega(&(x.clone() + y.scale(&c)));
        prop_assert_eq!(lhs, phi_homega(&x) + phi_homega(&y).scale(&c));
    }

    #[test]
    fn contraction_round_trips(x in ht_class()) {
        prop_assert_eq!(contract_sigma_inv(&contract_sigma(&x)).unwrap(), x);
    }

    #[test]
    fn phi_t_differs_from_phi_ht_only_by_the_todd_shift(x in ht_class()) {
        let d = phi_t(&x).unwrap() - phi_ht(&x).unwrap();
        prop_assert!(d.p.is_zero() && d.q_c.is_zero());
    }

    #[test]
    fn wedge_is_associative(a in prop::array::uniform16(gauss()), b in prop::array::uniform16(gauss()), c in prop::array::uniform16(gauss())) {
        let (a, b, c) = (Spinor::from_coeffs(a), Spinor::from_coeffs(b), Spinor::from_coeffs(c));
        prop_assert_eq!(a.wedge(&b).wedge(&c), a.wedge(&b.wedge(&c)));
    }

    #[test]
    fn exp_of_a_sum_is_the_product(b1 in real_two_form(), b2 in real_two_form()) {
        let e = |w: &TwoForm| spinor::exp_two_form(&Spinor::<GaussRational>::from_two_form(w)).unwrap();
        prop_assert_eq!(e(&(&b1 + &b2)), e(&b1).wedge(&e(&b2)));
    }

    #[test]
    fn b_transforms_compose(b1 in real_two_form(), b2 in real_two_form()) {
        let j = j_complex();
        prop_assert_eq!(b_transform(&j, &(&b1 + &b2)), b_transform(&b_transform(&j, &b2), &b1));
    }

    #[test]
    fn annihilator_ignores_scaling(z in nonzero_gauss(), t in t_sample(), c in nonzero_gauss()) {
        let rho = spinor::family_spinor(&z, &GaussRational::real(t));
        prop_assert_eq!(spinor::clifford_annihilator(&rho.scale(&c)).unwrap(), spinor::clifford_annihilator(&rho).unwrap());
    }

    #[test]
    fn j_zeta_eigenspace_is_transverse_to_its_conjugate(z in gauss(), t in t_sample()) {
        let l = j_zeta(&z, &t).eigenspace_i();
        prop_assert_eq!(l.dim(), 4);
        prop_assert_eq!(l.intersection_dim(&l.conj()), 0);
    }

    #[test]
    fn subspace_join_contains_both(a in prop::collection::vec(prop::collection::vec(gauss(), 5), 1..3), b in prop::collection::vec(prop::collection::vec(gauss(), 5), 1..3)) {
        let (sa, sb) = (Subspace::from_spanning(5, a.clone()), Subspace::from_spanning(5, b.clone()));
        let j = sa.join(&sb);
        prop_assert!(a.iter().chain(&b).all(|v| j.contains(v)));
        prop_assert_eq!(j.dim() + sa.intersection_dim(&sb), sa.dim() + sb.dim());
    }
}
