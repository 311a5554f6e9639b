use proptest::prelude::*;

use softrough::approx::{
    classical_lower, classical_upper, lower_soft, roughly_soft_equal, soft_rough, upper_soft,
};
use softrough::entropy::{forms, Beta, EntropyKind};
use softrough::fmt::g6;
use softrough::measures::{accuracy_pawlak, accuracy_yao, roughness_yao};
use softrough::oracle::{bell_numbers, restricted_growth_strings};
use softrough::{ElementSet, Partition, Ratio, SoftSet, SpecialClass, Universe};

/// A universe, a partition of it and a soft set over it.
fn instance() -> impl Strategy<Value = (Partition, SoftSet)> {
    (1usize..=7)
        .prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(0usize..n, n),
                prop::collection::vec(prop::collection::vec(any::<bool>(), n), 0..5),
            )
        })
        .prop_map(|(n, assignment, values)| {
            let u = Universe::indexed(n).unwrap();
            let p = Partition::from_assignment(&u, &assignment).unwrap();
            let attrs = values.into_iter().enumerate().map(|(i, bits)| {
                let set = ElementSet::from_indices(n, (0..n).filter(|&j| bits[j]));
                (format!("e{i}"), set)
            });
            let s = SoftSet::new(&u, attrs).unwrap();
            (p, s)
        })
}

proptest! {
    #[test]
    fn approximations_bracket_values((p, s) in instance()) {
        let rough = soft_rough(&p, &s).unwrap();
        for ((v, l), u) in s.values().zip(rough.lower.values()).zip(rough.upper.values()) {
            prop_assert!(l.is_subset(v));
            prop_assert!(v.is_subset(u));
            prop_assert!(p.is_composed(l));
            prop_assert!(p.is_composed(u));
        }
    }

    #[test]
    fn approximations_are_idempotent((p, s) in instance()) {
        let l = lower_soft(&p, &s).unwrap();
        let u = upper_soft(&p, &s).unwrap();
        prop_assert_eq!(lower_soft(&p, &l).unwrap(), l.clone());
        prop_assert_eq!(upper_soft(&p, &u).unwrap(), u.clone());
        prop_assert_eq!(upper_soft(&p, &l).unwrap(), l);
        prop_assert_eq!(lower_soft(&p, &u).unwrap(), u);
    }

    #[test]
    fn lower_and_upper_are_dual((p, s) in instance()) {
        let lc = lower_soft(&p, &s.complement()).unwrap();
        let uc = upper_soft(&p, &s).unwrap().complement();
        prop_assert_eq!(lc, uc);
    }

    #[test]
    fn classical_matches_single_attribute((p, s) in instance()) {
        for v in s.values() {
            let one = SoftSet::new(p.universe(), [("a", v.clone())]).unwrap();
            let rough = soft_rough(&p, &one).unwrap();
            prop_assert_eq!(rough.lower.get("a").unwrap(), &classical_lower(&p, v).unwrap());
            prop_assert_eq!(rough.upper.get("a").unwrap(), &classical_upper(&p, v).unwrap());
        }
    }

    #[test]
    fn rough_equality_is_reflexive_and_symmetric((p, s) in instance(), (_, f) in instance()) {
        prop_assert!(roughly_soft_equal(&p, &s, &s).unwrap());
        if let Ok(fwd) = roughly_soft_equal(&p, &s, &f) {
            prop_assert_eq!(fwd, roughly_soft_equal(&p, &f, &s).unwrap());
        }
    }

    #[test]
    fn measures_lie_in_unit_interval((p, s) in instance()) {
        let one = Ratio::from_integer(1);
        if let Ok(r) = accuracy_pawlak(&p, &s) {
            prop_assert!(r <= one);
        }
        if let Ok(r) = accuracy_yao(&p, &s) {
            prop_assert!(r <= one);
            prop_assert_eq!(roughness_yao(&p, &s).unwrap(), one - r);
        }
    }

    #[test]
    fn yao_accuracy_ignores_complement((p, s) in instance()) {
        if s.classify() == SpecialClass::Ordinary {
            prop_assert_eq!(
                accuracy_yao(&p, &s).unwrap(),
                accuracy_yao(&p, &s.complement()).unwrap()
            );
        }
    }

    #[test]
    fn discrete_partition_is_exact((p, s) in instance()) {
        let d = Partition::discrete(p.universe());
        prop_assert!(soft_rough(&d, &s).unwrap().is_exact());
        if let Ok(r) = accuracy_pawlak(&d, &s) {
            prop_assert_eq!(r, Ratio::from_integer(1));
        }
    }

    #[test]
    fn entropy_forms_symmetric_and_nonnegative(
        x in 0.0f64..=1.0,
        y in 0.0f64..=1.0,
        b in 1.01f64..20.0,
    ) {
        let beta = Beta::new(b).unwrap();
        for k in EntropyKind::ALL {
            let v = k.eval(x, y, beta);
            prop_assert!(v.is_finite() && v >= 0.0);
            if k.arity() == 2 {
                prop_assert!((v - k.eval(y, x, beta)).abs() <= 1e-12);
            }
        }
        prop_assert!(forms::ent_exp_prime(x, beta) <= 1.0f64.max(b / (std::f64::consts::E * b.ln())) + 1e-12);
    }

    #[test]
    fn g6_round_trips_to_six_digits(x in -1e9f64..1e9) {
        let back: f64 = g6(x).parse().unwrap();
        prop_assert!((back - x).abs() <= 1e-5 * x.abs().max(1e-300));
    }
}

#[test]
fn restricted_growth_strings_match_bell() {
    let bell = bell_numbers(8);
    for (n, &b) in bell.iter().enumerate().skip(1) {
        assert_eq!(restricted_growth_strings(n).len() as u64, b);
    }
}

mod grid {
    use super::*;
    use softrough::gridlab::{grid_partition, overlap_report, GridScene, Region, Shape};

    fn shape() -> impl Strategy<Value = Shape> {
        prop_oneof![
            (0i64..16, 0i64..16, 0i64..8, 0i64..8)
                .prop_map(|(x, y, w, h)| Shape::Rect([x, y, x + w, y + h])),
            (0i64..16, 0i64..16, 0i64..6).prop_map(|(x, y, r)| Shape::Disk([x, y, r])),
        ]
    }

    fn scene() -> impl Strategy<Value = GridScene> {
        (prop_oneof![Just(1usize), Just(2), Just(4), Just(8)], prop::collection::vec(shape(), 1..4))
            .prop_map(|(block, shapes)| GridScene {
                width: 16,
                height: 16,
                block,
                regions: shapes
                    .into_iter()
                    .enumerate()
                    .map(|(i, shape)| Region { name: format!("r{i}"), shape })
                    .collect(),
            })
    }

    proptest! {
        #[test]
        fn overlap_report_invariants(scene in scene()) {
            let r = overlap_report(&scene).unwrap();
            let p = grid_partition(16, 16, scene.block).unwrap();
            let mut uppers = ElementSet::empty(256);
            let mut lowers = ElementSet::empty(256);
            for m in &r.attributes {
                prop_assert!(m.lower.is_subset(&m.region) && m.region.is_subset(&m.upper));
                prop_assert!(p.is_composed(&m.lower) && p.is_composed(&m.upper));
                uppers.union_with(&m.upper);
                lowers.union_with(&m.lower);
            }
            prop_assert_eq!(&uppers, &r.union.upper);
            prop_assert!(lowers.is_subset(&r.union.lower));
            prop_assert!(r.overlap_cells.is_subset(&r.union.upper));
            prop_assert_eq!(r.soft_detects_overlap, !r.overlap_cells.is_empty());
            if scene.block == 1 {
                prop_assert!(!r.boundary_mismatch);
            }
        }
    }
}
