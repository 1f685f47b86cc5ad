//! Build every catalog entry on every admitted solid and print what
//! comes out: census signature, connectivity, symmetry class, and
//! whether the result matches the entry's verified expectation.
//!
//! Run with: `cargo run --release --example catalog_tour`

use platcfg::catalog;
use platcfg::incidence::{census, format_signature, is_connected, verify_axioms};
use platcfg::symmetry::classify;
use platcfg::EPS;

fn main() {
    for entry in catalog::entries() {
        for &kind in &entry.kinds {
            let config = catalog::build(entry.id, Some(kind), EPS).expect("catalog build");
            let expected = catalog::verified(entry.id, Some(kind)).expect("expectation");
            let signature = format_signature(&census(&config));
            let report = verify_axioms(&config, EPS);
            let class = classify(&config, kind, EPS);
            let status = if signature == expected.signature
                && class == expected.class
                && is_connected(&config) == expected.connected
                && report.passes(EPS)
            {
                "ok"
            } else {
                "MISMATCH"
            };
            println!(
                "{:<18} {:<12} {:<30} {:<10} connected={:<5} {}",
                entry.id,
                kind.name(),
                signature,
                class.tag(),
                is_connected(&config),
                status
            );
        }
    }
}
