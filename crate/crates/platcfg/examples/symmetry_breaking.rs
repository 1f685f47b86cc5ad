//! How placement choices decide the symmetry class.
//!
//! Three builds on the octahedron with closely related motifs:
//! a mirror-symmetric motif keeps the full group; a chiral motif with
//! mirror-closed edge anchors keeps only the rotations; and a chiral
//! motif whose anchors are not mirror-closed must alternate mirrored
//! copies across the two-colored faces, which breaks even the rotation
//! group.
//!
//! Run with: `cargo run --example symmetry_breaking`

use platcfg::catalog;
use platcfg::incidence::{census, format_signature};
use platcfg::solids::SolidKind;
use platcfg::symmetry::classify;
use platcfg::EPS;

fn main() {
    for (id, note) in [
        ("o4_pappus172", "dihedral motif, plain placement"),
        ("rot21_octa", "chiral motif, mirror-closed anchors"),
        ("a27_octa", "chiral motif, alternating mirrored copies"),
    ] {
        let config = catalog::build(id, None, EPS).expect("build");
        let class = classify(&config, SolidKind::Octahedron, EPS);
        println!(
            "{:<14} {:<42} -> {:<10} {}",
            id,
            note,
            class.tag(),
            format_signature(&census(&config))
        );
    }
}
