//! One configuration, four external formats: the canonical JSON
//! document (byte-stable round trip), the Levi incidence text, the
//! Graphviz DOT rendering of the Levi graph, and a Wavefront OBJ
//! polyline model.
//!
//! Run with: `cargo run --example export_formats`

use platcfg::catalog;
use platcfg::incidence::{levi_dot, levi_text};
use platcfg::io::{from_json, to_json, to_obj};
use platcfg::EPS;

fn first_lines(text: &str, n: usize) -> String {
    text.lines().take(n).collect::<Vec<_>>().join("\n")
}

fn main() {
    let config = catalog::build("spiderweb_t24", None, EPS).expect("build");

    let json = to_json(&config);
    let reparsed = from_json(&json).expect("parse back");
    assert_eq!(json, to_json(&reparsed), "JSON round trip must be byte-identical");

    println!("--- json ({} bytes, round-trip stable) ---", json.len());
    println!("{}", first_lines(&json, 4));
    println!("--- levi text ---");
    println!("{}", first_lines(&levi_text(&config), 4));
    println!("--- dot ---");
    println!("{}", first_lines(&levi_dot(&config), 4));
    println!("--- obj ---");
    println!("{}", first_lines(&to_obj(&config), 4));
}
