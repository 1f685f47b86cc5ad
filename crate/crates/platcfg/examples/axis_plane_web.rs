//! Web placement in axis-pair planes: a motif drawn in the skew basis
//! of two rotation axes is copied into every plane spanned by a pair
//! of 3-fold axes; anchor points on a shared axis merge between the
//! planes.
//!
//! The tetrahedron has four 3-fold axes, so six planes. One strut per
//! plane (joining the two on-axis anchors at radius 0.6) closes into
//! the complete graph on the four merged axis points: every point lies
//! on three struts.
//!
//! Run with: `cargo run --example axis_plane_web`

use nalgebra::Vector2;
use platcfg::builder::{axis_pairs, place_on_axis_planes, PlaneAnchor, PlaneMotif, PlaneMotifPoint};
use platcfg::incidence::{census, format_signature, is_connected, verify_axioms};
use platcfg::solids::{make_solid, SolidKind};
use platcfg::EPS;

fn main() {
    let solid = make_solid(SolidKind::Tetrahedron);
    let pairs = axis_pairs(&solid, 3);
    println!("3-fold axis pairs: {}", pairs.len());

    let motif = PlaneMotif {
        name: "strut".into(),
        points: vec![
            PlaneMotifPoint { ab: Vector2::zeros(), anchor: PlaneAnchor::AxisA(0.6) },
            PlaneMotifPoint { ab: Vector2::zeros(), anchor: PlaneAnchor::AxisB(0.6) },
        ],
        lines: vec![vec![0, 1]],
    };

    let config = place_on_axis_planes(&solid, &motif, &pairs, false, EPS).expect("placement");
    let report = verify_axioms(&config, EPS);
    println!(
        "web: {} points={} lines={} connected={} axioms={}",
        format_signature(&census(&config)),
        config.points.len(),
        config.lines.len(),
        is_connected(&config),
        report.passes(EPS)
    );
}
