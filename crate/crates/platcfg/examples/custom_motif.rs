//! Build a configuration from a parametric motif instead of a bundled
//! one: the cevian triangle motif, placed on the tetrahedron with the
//! solid edges added as lines.
//!
//! The motif stays valid for any cevian parameter in (0, 1/2) away
//! from 1/3 (where the cevians would be medians and extra concurrences
//! appear), so the same plan yields a one-parameter family of (42_3)
//! configurations.
//!
//! Run with: `cargo run --example custom_motif`

use platcfg::builder::{run_plan, Augmentation, BuildPlan, Placement};
use platcfg::incidence::{census, format_signature, verify_axioms};
use platcfg::motif::cevian_motif;
use platcfg::solids::{LayerSpec, SolidKind};
use platcfg::EPS;

fn main() {
    for tau in [0.2, 0.25, 0.4] {
        let motif = cevian_motif(tau, "cevian").expect("valid cevian parameter");
        let plan = BuildPlan {
            name: format!("cevian_tau_{tau}"),
            placement: Placement::Faces,
            layers: LayerSpec { scales: vec![1.0] },
            augmentations: vec![Augmentation::EdgeLines { layer: 0 }],
            class_tag: "full".into(),
        };
        let config = run_plan(SolidKind::Tetrahedron, &motif, &plan, EPS).expect("build");
        let report = verify_axioms(&config, EPS);
        println!(
            "tau={tau}: {} axioms={} max residual {:.2e}",
            format_signature(&census(&config)),
            report.passes(EPS),
            report.max_residual
        );
    }
}
