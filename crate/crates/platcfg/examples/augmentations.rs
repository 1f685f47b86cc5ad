//! The augmentation pipeline, one step at a time: place a motif over
//! two concentric layers, then add edge lines and antipodal lines and
//! watch the census change after each step.
//!
//! Run with: `cargo run --example augmentations`

use platcfg::builder::{
    add_antipodal_lines, add_edge_lines, glue, place_on_faces, PointSelector, RawAssembly,
};
use platcfg::catalog::bundled_motif;
use platcfg::incidence::{census, format_signature, ConfigMeta, Provenance};
use platcfg::solids::{make_solid, SolidKind};
use platcfg::EPS;

fn main() {
    let kind = SolidKind::Cube;
    let solid = make_solid(kind);
    let motif = bundled_motif("grid4").expect("bundled motif");
    let scales = [1.0, 0.8];

    // Stage one motif copy per face, per layer, and merge shared edge
    // anchors into single points. The placement scales each copy.
    let mut raw = RawAssembly::new();
    for (layer, &scale) in scales.iter().enumerate() {
        raw.merge(place_on_faces(&solid.shape, &motif, layer as i32, scale).expect("placement"));
    }
    let meta = ConfigMeta {
        name: "augmentation_demo".into(),
        solid: kind.name().into(),
        layer_scales: scales.to_vec(),
        symmetry_class: "full".into(),
    };
    let mut config = glue(&raw, EPS, meta).expect("glue");
    println!("after placement:       {}", format_signature(&census(&config)));

    // Each solid edge (at each layer's scale) becomes one line through
    // the edge anchors sitting on it.
    for layer in 0..scales.len() as i32 {
        config = add_edge_lines(&config, &solid.shape, layer, EPS).expect("edge lines");
        println!("after edge lines ({layer}):   {}", format_signature(&census(&config)));
    }

    // Close the remaining 2-valent grid interiors with lines through
    // the center: each line joins two antipodal rays across both layers.
    let selector = PointSelector::by(Provenance::FaceInterior, 2);
    config = add_antipodal_lines(&config, &selector, false).expect("antipodal lines");
    println!("after antipodal lines: {}", format_signature(&census(&config)));
}
