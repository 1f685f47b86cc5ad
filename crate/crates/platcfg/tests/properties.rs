//! Property tests over the one-parameter cevian family: invariants
//! that must hold for every valid build, regardless of parameters.

use proptest::prelude::*;

use platcfg::builder::{run_plan, Augmentation, BuildPlan, Placement};
use platcfg::incidence::{census, format_signature, levi_graph, verify_axioms, GeometricConfiguration};
use platcfg::io::{from_json, to_json};
use platcfg::motif::cevian_motif;
use platcfg::solids::{LayerSpec, SolidKind};
use platcfg::symmetry::{apply, rotation_group};
use platcfg::EPS;

// ---- strategies ----

/// Cevian parameters that keep the motif non-degenerate: inside
/// (0, 1/2) and away from the median position 1/3.
fn cevian_parameter() -> impl Strategy<Value = f64> {
    (0.05f64..0.45).prop_filter("tau too close to 1/3", |t| (t - 1.0 / 3.0).abs() > 0.01)
}

/// An index into the tetrahedron's rotation group.
fn rotation_index() -> impl Strategy<Value = usize> {
    0usize..12
}

fn cevian_build(tau: f64) -> GeometricConfiguration {
    let motif = cevian_motif(tau, "prop").expect("valid tau");
    let plan = BuildPlan {
        name: "prop".into(),
        placement: Placement::Faces,
        layers: LayerSpec { scales: vec![1.0] },
        augmentations: vec![Augmentation::EdgeLines { layer: 0 }],
        class_tag: "full".into(),
    };
    run_plan(SolidKind::Tetrahedron, &motif, &plan, EPS).expect("build")
}

proptest! {
    #[test]
    fn cevian_family_is_42_3_and_satisfies_axioms(tau in cevian_parameter()) {
        let config = cevian_build(tau);
        prop_assert_eq!(format_signature(&census(&config)), "(42_3)");
        prop_assert!(verify_axioms(&config, EPS).passes(EPS));
    }

    #[test]
    fn incidence_double_counting_holds(tau in cevian_parameter()) {
        let config = cevian_build(tau);
        let point_sum: usize = config.point_valences().iter().sum();
        let line_sum: usize = config.lines.iter().map(|l| l.point_ids.len()).sum();
        prop_assert_eq!(point_sum, line_sum);
        prop_assert_eq!(line_sum, levi_graph(&config).edges.len());
    }

    #[test]
    fn rotations_preserve_census_and_axioms(
        tau in cevian_parameter(),
        idx in rotation_index(),
    ) {
        let config = cevian_build(tau);
        let group = rotation_group(SolidKind::Tetrahedron).expect("group");
        let rotated = apply(&group.elements[idx], &config);
        prop_assert_eq!(
            format_signature(&census(&rotated)),
            format_signature(&census(&config))
        );
        prop_assert!(verify_axioms(&rotated, EPS).passes(EPS));
    }

    #[test]
    fn json_round_trip_is_byte_identical(tau in cevian_parameter()) {
        let config = cevian_build(tau);
        let json = to_json(&config);
        let parsed = from_json(&json).expect("parse back");
        prop_assert_eq!(to_json(&parsed), json);
    }

    #[test]
    fn builds_are_deterministic(tau in cevian_parameter()) {
        prop_assert_eq!(to_json(&cevian_build(tau)), to_json(&cevian_build(tau)));
    }
}
