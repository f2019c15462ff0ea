mod common;

use holext::algebra::CircPoly;
use holext::boundary::Mono2;
use holext::certifier::{certify, Certificate};
use holext::disc::{circle_point, disc_eval, disc_pullback, disc_pullback_symbolic, sphere_point, DiscParam};
use holext::expr::parse_poly;
use holext::moment::{moment, moment_symbolic, moments_vanish};
use holext::report::Report;
use holext::slicer::{slice_restrict, unit_vector, MonoN, SlicePlane};
use holext::{BPoly2, BPolyN, GComplex};
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

use common::q;

fn rat() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

fn gauss() -> impl Strategy<Value = GComplex> {
    (rat(), rat()).prop_map(|(re, im)| GComplex::new(re, im))
}

fn mono2(max_each: u32) -> impl Strategy<Value = Mono2> {
    (0..=max_each, 0..=max_each, 0..=max_each, 0..=max_each).prop_map(|(h, k, m, p)| Mono2::new(h, k, m, p))
}

fn poly2(max_each: u32, max_terms: usize) -> impl Strategy<Value = BPoly2> {
    prop::collection::vec((mono2(max_each), gauss()), 0..=max_terms).prop_map(BPoly2::from_terms)
}

fn normal2(max_each: u32, max_terms: usize) -> impl Strategy<Value = BPoly2> {
    poly2(max_each, max_terms).prop_map(|f| f.normal_form())
}

fn polyn(n: usize, max_each: u32, max_terms: usize) -> impl Strategy<Value = BPolyN> {
    let mono = (
        prop::collection::vec(0..=max_each, n),
        prop::collection::vec(0..=max_each, n),
    )
        .prop_map(|(hol, anti)| MonoN { hol, anti });
    prop::collection::vec((mono, gauss()), 0..=max_terms).prop_map(move |terms| {
        let mut f = BPolyN::zero(n);
        for (m, c) in terms {
            f.add_term(m, c);
        }
        f
    })
}

fn on_sphere() -> impl Strategy<Value = (GComplex, GComplex)> {
    (rat(), rat(), rat()).prop_map(|(a, b, c)| sphere_point(&a, &b, &c))
}

fn on_circle() -> impl Strategy<Value = GComplex> {
    rat().prop_map(|t| circle_point(&t))
}

fn unit_plane(n: usize) -> impl Strategy<Value = SlicePlane> {
    (
        prop::collection::vec(rat(), n - 1),
        prop::collection::vec(rat(), n - 2),
    )
        .prop_map(move |(phases, mixes)| {
            let mut v = unit_vector(&phases, &mixes);
            v.push(GComplex::zero());
            SlicePlane::new(v).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gaussian_field_laws(a in gauss(), b in gauss(), c in gauss()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a * &b).conj(), a.conj() * b.conj());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn circle_points_are_unimodular(t in rat()) {
        prop_assert!(circle_point(&t).norm_sqr().is_one());
    }

    #[test]
    fn sphere_points_are_on_the_sphere((z1, z2) in on_sphere()) {
        prop_assert!((z1.norm_sqr() + z2.norm_sqr()).is_one());
    }

    #[test]
    fn laurent_evaluation_is_multiplicative(
        f in prop::collection::vec((-4i64..=4, gauss()), 0..5),
        g in prop::collection::vec((-4i64..=4, gauss()), 0..5),
        tau in on_circle(),
    ) {
        let f = CircPoly::from_terms(f);
        let g = CircPoly::from_terms(g);
        prop_assert_eq!(f.mul(&g).eval(&tau), f.eval(&tau) * g.eval(&tau));
        prop_assert_eq!(f.add(&g).eval(&tau), f.eval(&tau) + g.eval(&tau));
    }

    #[test]
    fn polynomial_ring_laws(f in poly2(2, 4), g in poly2(2, 4), h in poly2(2, 3)) {
        prop_assert_eq!(f.mul(&g.add(&h)), f.mul(&g).add(&f.mul(&h)));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn normal_form_is_idempotent_and_agrees_on_sphere(f in poly2(3, 5), (z1, z2) in on_sphere()) {
        let nf = f.normal_form();
        prop_assert!(nf.is_normal());
        prop_assert_eq!(nf.normal_form(), nf.clone());
        prop_assert_eq!(nf.eval(&z1, &z2), f.eval(&z1, &z2));
    }

    #[test]
    fn pullback_is_a_ring_morphism(f in poly2(2, 3), g in poly2(2, 3), a in gauss()) {
        let d = DiscParam::new(a);
        prop_assert_eq!(
            disc_pullback(&f.mul(&g), &d),
            disc_pullback(&f, &d).mul(&disc_pullback(&g, &d))
        );
        prop_assert_eq!(
            disc_pullback(&f.add(&g), &d),
            disc_pullback(&f, &d).add(&disc_pullback(&g, &d))
        );
    }

    #[test]
    fn pullback_matches_pointwise(f in poly2(2, 4), a in gauss(), tau in on_circle()) {
        let d = DiscParam::new(a);
        let (z1, z2) = disc_eval(&d, &tau).unwrap();
        prop_assert!((z1.norm_sqr() + z2.norm_sqr()).is_one());
        prop_assert_eq!(disc_pullback(&f, &d).eval(&tau), f.eval(&z1, &z2));
    }

    #[test]
    fn symbolic_and_concrete_agree(f in poly2(2, 4), a in gauss(), n in 0u32..5) {
        let d = DiscParam::new(a.clone());
        prop_assert_eq!(disc_pullback_symbolic(&f).eval(&a), disc_pullback(&f, &d));
        prop_assert_eq!(moment_symbolic(&f, n).eval(&a), moment(&f, &a, n).mu);
    }

    #[test]
    fn moments_vanish_iff_holomorphic(f in normal2(2, 4)) {
        prop_assert_eq!(moments_vanish(&f), f.is_holomorphic().unwrap());
    }

    #[test]
    fn extension_matches_boundary_values(f in poly2(2, 4), (z1, z2) in on_sphere()) {
        match certify(&f).unwrap() {
            Certificate::Extends { extension } => {
                prop_assert!(extension.is_holomorphic().unwrap());
                prop_assert_eq!(extension.eval(&z1, &z2), f.eval(&z1, &z2));
            }
            Certificate::Obstructed(w) => prop_assert!(!w.coefficient().is_zero()),
        }
    }

    #[test]
    fn slices_commute_with_evaluation(
        f in polyn(3, 2, 4),
        plane in unit_plane(3),
        z1 in gauss(),
        z2 in gauss(),
    ) {
        let s = slice_restrict(&f, &plane).unwrap();
        prop_assert_eq!(s.eval(&z1, &z2), f.eval(&plane.embed(&z1, &z2)).unwrap());
    }

    #[test]
    fn slices_of_sphere_data_stay_on_the_sphere(plane in unit_plane(4), (z1, z2) in on_sphere()) {
        let z = plane.embed(&z1, &z2);
        let norm: BigRational = z.iter().map(GComplex::norm_sqr).sum();
        prop_assert!(norm.is_one());
    }

    #[test]
    fn print_parse_round_trip(f in polyn(3, 2, 5)) {
        let text = f.to_string();
        let back = parse_poly(&text, 3).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(back.to_string(), text);
    }

    #[test]
    fn report_round_trip(f in poly2(2, 4)) {
        let report = Report::from_certificate(&certify(&f).unwrap()).with_input(f.to_string());
        let text = report.to_json();
        let back = Report::from_json(&text).unwrap();
        prop_assert_eq!(&back, &report);
        prop_assert_eq!(back.to_json(), text);
    }
}
