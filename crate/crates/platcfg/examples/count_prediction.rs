//! Predicting point and line totals from per-element counts, then
//! checking the prediction against the actual builds.
//!
//! For a single-layer build whose pipeline is expressible as "x points
//! per vertex, y per edge, z per face; u lines per edge, v per face",
//! the totals are p = x*v + y*e + z*f and l = u*e + v*f. Entries that
//! place on the barycentric triangulation use the triangulated
//! complex's element counts.
//!
//! Run with: `cargo run --release --example count_prediction`

use platcfg::builder::predict_counts;
use platcfg::catalog::{self, placement_params};
use platcfg::EPS;

fn main() {
    for entry in catalog::entries() {
        let Some(spec) = entry.count_spec else { continue };
        for &kind in &entry.kinds {
            let params = placement_params(kind, entry.triangulates(kind));
            let (p, l) = predict_counts(&params, &spec);
            let config = catalog::build(entry.id, Some(kind), EPS).expect("build");
            let status = if (p, l) == (config.points.len(), config.lines.len()) {
                "ok"
            } else {
                "MISMATCH"
            };
            println!(
                "{:<18} {:<12} predicted p={:<4} l={:<4} actual p={:<4} l={:<4} {}",
                entry.id,
                kind.name(),
                p,
                l,
                config.points.len(),
                config.lines.len(),
                status
            );
        }
    }
}
