use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use sextic::algebra::{is_square, q, squarefree_decomposition, squarefree_part, MultiPoly, Rational, UniPoly, Var};
use sextic::census::{enumerate_conductors, enumerate_conductors_serial};
use sextic::curve::{CurveModel, PairPoint, Point};
use sextic::families::{
    e160b1_curve, e160b1_point, e160b1_ramification, e2cyclic_2p_point, e2cyclic_curve, isog3_conductors,
    isog3_curve, isog3_point, Ramification,
};
use sextic::fibration::fiber_profile;
use sextic::numfield::{Automorphism, CubicElement, CyclicCubicField, FieldElement, Sigma, SexticElement, SexticField};
use sextic::s6::{delta_formula, delta_oracle, point_to_sextic_field, s6_model, twist_transport, twist_transport_inverse};
use sextic::Error;

fn rat() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| q(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rational> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn coprime_pair(max: i64) -> impl Strategy<Value = (i64, i64)> {
    (1..=max, 1..=max).prop_filter("coprime", |(m, n)| m.gcd(n) == 1)
}

fn cubic() -> impl Strategy<Value = UniPoly> {
    (nonzero_rat(), rat(), rat(), rat()).prop_map(|(a, b, c, d)| UniPoly::new(vec![d, c, b, a]))
}

fn k3() -> std::sync::Arc<CyclicCubicField> {
    CyclicCubicField::new(&UniPoly::from_ints(&[1, -3, 0, 1])).unwrap()
}

fn cubic_element() -> impl Strategy<Value = [Rational; 3]> {
    (rat(), rat(), rat()).prop_map(|(a, b, c)| [a, b, c])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cubic_discriminant_matches_resultant(p in cubic()) {
        // disc = (−1)^{n(n−1)/2} Res(p, p′) / lc, n = 3
        let res = p.resultant(&p.derivative());
        let expected = -(&res / &p.lead());
        prop_assert_eq!(p.cubic_discriminant().unwrap(), expected);
    }

    #[test]
    fn squarefree_part_differs_by_a_square(r in nonzero_rat()) {
        let s = Rational::from(squarefree_part(&r).unwrap());
        prop_assert!((&r / &s).sqrt().is_some());
    }

    #[test]
    fn is_square_iff_class_one(r in nonzero_rat()) {
        let r = r.abs();
        prop_assert_eq!(is_square(&r), squarefree_part(&r).unwrap() == BigInt::from(1));
    }

    #[test]
    fn squarefree_decomposition_reassembles(f in cubic(), g in cubic(), k in 1u32..3) {
        let p = &f * &g.pow(k);
        let dec = squarefree_decomposition(&p).unwrap();
        let rebuilt = dec.factors.iter().fold(UniPoly::constant(dec.content.clone()), |acc, (h, e)| &acc * &h.pow(*e));
        prop_assert_eq!(rebuilt, p);
    }

    #[test]
    fn delta_formula_matches_oracle(a in rat(), b in rat(), t in rat(), u in rat()) {
        let env = [(Var::A, a.clone()), (Var::B, b.clone()), (Var::T, t.clone()), (Var::U, u.clone())];
        prop_assert_eq!(delta_formula(&a, &b, &t, &u), delta_oracle().eval(&env).unwrap());
    }

    #[test]
    fn sigma_is_multiplicative(x in cubic_element(), y in cubic_element()) {
        let k = k3();
        let (x, y) = (CubicElement::new(&k, x), CubicElement::new(&k, y));
        prop_assert_eq!(x.mul(&y).sigma(), x.sigma().mul(&y.sigma()));
        prop_assert_eq!(x.sigma().sigma().sigma(), x);
    }

    #[test]
    fn rational_squares_in_k3_are_rational_squares(r in nonzero_rat()) {
        let k = k3();
        let has_root = CubicElement::from_rational(&k, &r).sqrt().is_some();
        prop_assert_eq!(has_root, r.sqrt().is_some());
    }

    #[test]
    fn rho_restricts_to_sigma(x in cubic_element(), r in rat(), d in prop::sample::select(vec![-26i64, -3, 2, 5, 17])) {
        let k = k3();
        let k6 = SexticField::new(&k, d).unwrap();
        let a = CubicElement::new(&k, x);
        prop_assert_eq!(SexticElement::from_cubic(&k6, a.clone()).rho(), SexticElement::from_cubic(&k6, a.sigma()));
        let s = SexticElement::from_rational(&k6, &r);
        prop_assert_eq!(s.rho().rho().rho(), s);
    }
}

/// Multiples of (3, 5) on y² = x³ − 2, a point of infinite order.
fn rank_one() -> (CurveModel, Point<Rational>) {
    (CurveModel::weierstrass(q(0, 1), q(-2, 1)).unwrap(), Point::affine(q(3, 1), q(5, 1)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn group_law_over_q(i in -4i64..=4, j in -4i64..=4, k in -4i64..=4) {
        let (e, p) = rank_one();
        let (a, b, c) = (e.mul(i, &p), e.mul(j, &p), e.mul(k, &p));
        prop_assert_eq!(e.add(&e.add(&a, &b), &c), e.add(&a, &e.add(&b, &c)));
        prop_assert!(e.add(&a, &e.neg(&a)).is_infinity());
        prop_assert!(e.contains(&e.add(&a, &b)));
        prop_assert_eq!(e.add(&a, &b), e.mul(i + j, &p));
    }

    #[test]
    fn rho_identities(i in -3i64..=3, j in -3i64..=3) {
        let (e, p) = rank_one();
        let (a, b) = (e.mul(i, &p), e.mul(j, &p));
        let pair = PairPoint::new(a.clone(), b.clone());
        prop_assert_eq!(e.rho_pow(2, &pair), PairPoint::new(e.sub(&b, &a), e.neg(&a)));
        prop_assert_eq!(e.rho_pow(3, &pair), PairPoint::new(e.neg(&a), e.neg(&b)));
        prop_assert_eq!(e.rho_pow(6, &pair), pair);
    }

    #[test]
    fn isog3_points_lie_on_the_surface(a in -6i64..=6, b in -6i64..=6, (m, n) in coprime_pair(12)) {
        let e = match isog3_curve(a, b) { Ok(e) => e, Err(_) => return Ok(()) };
        let p = isog3_point(a, b, m, n).unwrap();
        prop_assert!(s6_model(&e).contains(&p));
    }

    #[test]
    fn isog3_delta_is_the_quadratic_form(a in -6i64..=6, b in -6i64..=6, (m, n) in coprime_pair(9)) {
        let e = match isog3_curve(a, b) { Ok(e) => e, Err(_) => return Ok(()) };
        let c = match point_to_sextic_field(&e, &isog3_point(a, b, m, n).unwrap()) {
            Ok(c) => c,
            Err(err) => { prop_assert!(err.is_degenerate(), "{err}"); return Ok(()) }
        };
        let form = isog3_conductors(a, b, m, n).quad_disc;
        prop_assert_eq!(c.delta, squarefree_part(&Rational::from(form)).unwrap());
        prop_assert!(c.certificates.all(), "{:?}", c.certificates);
    }

    #[test]
    fn e160b1_points_lie_on_the_surface((m, n) in coprime_pair(30)) {
        prop_assert!(s6_model(&e160b1_curve()).contains(&e160b1_point(m, n).unwrap()));
    }

    #[test]
    fn e2cyclic_points_lie_on_the_surface(b in nonzero_rat(), c in rat(), t in rat()) {
        let e = match e2cyclic_curve(&b, &c) { Ok(e) => e, Err(_) => return Ok(()) };
        match e2cyclic_2p_point(&b, &c, &t) {
            Ok(p) => prop_assert!(s6_model(&e).contains(&p)),
            Err(Error::InvalidInput(_) | Error::DivisionByZero | Error::ChartBoundary) => {}
            Err(err) => prop_assert!(false, "{err}"),
        }
    }

    #[test]
    fn twist_roundtrip(delta in prop::sample::select(vec![-30i64, -26, -7, -3, -1, 2, 3, 5, 6, 67, 101]), (m, n) in coprime_pair(12)) {
        let e = isog3_curve(1, 1).unwrap();
        let p = isog3_point(1, 1, m, n).unwrap();
        let d = BigInt::from(delta);
        let tw = twist_transport_inverse(&e, &d, &p).unwrap();
        prop_assert!(s6_model(&e.twist(&Rational::from(delta)).unwrap()).contains(&tw));
        prop_assert_eq!(twist_transport(&e, &d, &tw).unwrap(), p);
    }

    #[test]
    fn reverse_eisenstein_at_simple_primes((m, n) in coprime_pair(40)) {
        let f = 3 * m * m + 25 * n * n;
        for (p, k) in sextic::algebra::factor(&BigInt::from(f)).unwrap() {
            let p: u64 = p.try_into().unwrap();
            if k == 1 && !matches!(p, 2 | 3 | 5) {
                prop_assert_eq!(e160b1_ramification(m, n, p), Ramification::Ramified, "p = {}", p);
            }
        }
    }

    #[test]
    fn fiber_degrees_add_to_24(a in nonzero_rat(), b in nonzero_rat()) {
        let prof = fiber_profile(&a, &b).unwrap();
        prop_assume!(prof.generic);
        let finite: u32 = prof.loci.iter().map(|l| l.multiplicity * l.locus.degree().unwrap_or(0) as u32).sum();
        prop_assert_eq!(finite, prof.disc_degree);
        prop_assert_eq!(prof.disc_degree + prof.at_infinity, 24);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn census_is_deterministic_and_monotone(a in 1i64..=5, b in 1i64..=5, limit in 1_000u64..200_000) {
        let par = enumerate_conductors(a, b, limit).unwrap();
        prop_assert_eq!(&par, &enumerate_conductors_serial(a, b, limit).unwrap());
        let smaller = enumerate_conductors(a, b, limit / 2 + 100).unwrap();
        prop_assert!(smaller.keys().all(|g| par.contains_key(g)));
    }

    #[test]
    fn galois_action_commutes_with_addition(k in 1i64..=3, l in 0i64..=2) {
        let e = e160b1_curve();
        let c = point_to_sextic_field(&e, &e160b1_point(3, 5).unwrap()).unwrap();
        let rho = |p: &Point<SexticElement>| p.map(|x| x.rho());
        let x = e.mul(k, &c.point);
        let y = e.mul(l, &rho(&rho(&c.point)));
        prop_assert_eq!(rho(&e.add(&x, &y)), e.add(&rho(&x), &rho(&y)));
    }
}

#[test]
fn sigma_is_an_automorphism_of_k3() {
    let k = k3();
    let a = CubicElement::alpha(&k);
    let s = a.sigma();
    assert_ne!(s, a);
    assert!(k.eval_poly(k.f(), &s).is_zero());
    assert_eq!(Sigma.apply(&a), s);
}

#[test]
fn multipoly_roundtrip() {
    let p = MultiPoly::from_upoly(&UniPoly::from_ints(&[1, 2, 3]), Var::T);
    assert_eq!(p.to_upoly(Var::T).unwrap(), UniPoly::from_ints(&[1, 2, 3]));
}
