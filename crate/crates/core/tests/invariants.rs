use num_traits::{One, Zero};
use proptest::prelude::*;

use schurq::partition::{enumerate_strict, StrictPartition};
use schurq::qschur::{eval_at_x, q_expand, q_lambda, XPoint};
use schurq::rational::{frac, int};
use schurq::rspec::{r_lambda, shipped_specs};
use schurq::tau::{tau_bkp, tau_kp};
use schurq::{BiSeries, OddSeries, RSpec, Rational, TauReport};

fn strict_partition(max_weight: u32) -> impl Strategy<Value = StrictPartition> {
    let all = enumerate_strict(max_weight);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

fn point(n: usize) -> impl Strategy<Value = XPoint> {
    prop::collection::vec((1i64..=9, 1i64..=7, any::<bool>()), n).prop_filter_map("distinct |x|", |v| {
        XPoint::new(v.into_iter().map(|(p, q, s)| frac(if s { p } else { -p }, q)).collect()).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn q_functions_are_homogeneous(lambda in strict_partition(9)) {
        let q = q_lambda(&lambda, 9).unwrap();
        prop_assert!(q.terms().all(|(m, _)| m.weight() == lambda.weight()));
    }

    #[test]
    fn q_expansion_of_q_is_a_unit_vector(lambda in strict_partition(7)) {
        let c = q_expand(&q_lambda(&lambda, 7).unwrap());
        prop_assert_eq!(c.len(), 1);
        prop_assert_eq!(&c[&lambda], &Rational::one());
    }

    #[test]
    fn q_vanishes_on_too_few_points(lambda in strict_partition(7), x in point(2)) {
        let value = eval_at_x(&q_lambda(&lambda, 7).unwrap(), &x);
        if lambda.len() > 2 {
            prop_assert!(value.is_zero());
        }
    }

    #[test]
    fn one_point_q_is_twice_a_power(n in 1u32..=8, x in point(1)) {
        let lambda = StrictPartition::new(vec![n]).unwrap();
        let value = eval_at_x(&q_lambda(&lambda, 8).unwrap(), &x);
        prop_assert_eq!(value, int(2) * schurq::rational::pow(&x.values()[0], n));
    }

    #[test]
    fn series_json_round_trip(lambda in strict_partition(8), c in -20i64..20) {
        let q = q_lambda(&lambda, 8).unwrap().scale(&frac(c, 3));
        let text = serde_json::to_string(&q).unwrap();
        prop_assert_eq!(serde_json::from_str::<OddSeries>(&text).unwrap(), q);
    }
}

#[test]
fn tau_is_balanced_with_unit_constant() {
    for spec in shipped_specs() {
        let tau = tau_bkp(&spec, 6, 6).unwrap();
        assert_eq!(tau.constant_term(), int(1), "{spec}");
        assert!(tau.terms().all(|((m, ms), _)| m.weight() == ms.weight()), "{spec}");
        let kp = tau_kp(&spec, 6, 6).unwrap();
        assert!(kp.terms().all(|((m, ms), _)| m.weight() == ms.weight()), "{spec}");
    }
}

#[test]
fn tau_slot_coefficients_factor() {
    // extracting Q_lambda in t and Q_mu in t* from tau leaves 2^{-l} r_lambda delta
    let spec: RSpec = "ratps:a=1/2,3;b=5/2".parse().unwrap();
    let w = 5;
    let tau = tau_bkp(&spec, w, w).unwrap();
    let shapes = enumerate_strict(w);
    let mut coeffs = std::collections::BTreeMap::new();
    for lambda in &shapes {
        let slice: Vec<_> = tau
            .terms()
            .filter(|((m, _), _)| m.weight() == lambda.weight())
            .map(|((m, ms), c)| (m.clone(), ms.clone(), c.clone()))
            .collect();
        coeffs.insert(lambda.clone(), slice);
    }
    for lambda in &shapes {
        let q = q_lambda(lambda, w).unwrap();
        let norm = schurq::qschur::scalar_product(&q, &q);
        for mu in &shapes {
            let p = q_lambda(mu, w).unwrap();
            let mut acc = Rational::zero();
            for (m, ms, c) in &coeffs[lambda] {
                let a = schurq::qschur::scalar_product(&q, &OddSeries::monomial(m.clone(), int(1), w));
                let b = schurq::qschur::scalar_product(&p, &OddSeries::monomial(ms.clone(), int(1), w));
                acc += c * a * b;
            }
            let expected = if lambda == mu {
                schurq::rational::pow2(-(lambda.len() as i64)) * r_lambda(&spec, lambda).unwrap() * &norm * &norm
            } else {
                Rational::zero()
            };
            assert_eq!(acc, expected, "{lambda} {mu}");
        }
    }
}

#[test]
fn bi_series_and_reports_round_trip() {
    let tau = tau_bkp(&"cutoff:M=3".parse().unwrap(), 4, 3).unwrap();
    let text = serde_json::to_string(&tau).unwrap();
    assert_eq!(serde_json::from_str::<BiSeries>(&text).unwrap(), tau);
    let report = schurq::tau::check_square(&RSpec::Ones, 4).unwrap();
    let text = serde_json::to_string(&report).unwrap();
    assert_eq!(serde_json::from_str::<TauReport>(&text).unwrap(), report);
    for spec in shipped_specs() {
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(serde_json::from_str::<RSpec>(&text).unwrap(), spec);
    }
}
