//! Every bundled planar motif: parse it, validate it against its
//! declared cyclic or dihedral symmetry, and print its shape.
//!
//! Run with: `cargo run --example motif_gallery`

use platcfg::catalog::{bundled_motif, bundled_motif_names};
use platcfg::motif::{Anchor, MotifSymmetry};

fn main() {
    for name in bundled_motif_names() {
        let motif = bundled_motif(name).expect("bundled motif");
        motif.validate(1e-9).expect("motif invariants");

        let mut vertex = 0;
        let mut edge = 0;
        let mut interior = 0;
        for p in &motif.points {
            match p.anchor {
                Anchor::Vertex(_) => vertex += 1,
                Anchor::Edge(_, _) => edge += 1,
                Anchor::Interior => interior += 1,
            }
        }
        let sym = match motif.symmetry {
            MotifSymmetry::Cyc => "cyclic",
            MotifSymmetry::Dih => "dihedral",
        };
        println!(
            "{:<8} m={} {:<9} {:>2} points ({} vertex, {} edge, {} interior), {:>2} lines",
            motif.name,
            motif.m,
            sym,
            motif.points.len(),
            vertex,
            edge,
            interior,
            motif.lines.len()
        );

        // Round-trip check: the text form is byte-stable.
        let text = motif.to_text();
        let reparsed = platcfg::motif::Motif::parse(&text).expect("reparse");
        assert_eq!(text, reparsed.to_text(), "{name}: text round-trip drifted");
    }
}
