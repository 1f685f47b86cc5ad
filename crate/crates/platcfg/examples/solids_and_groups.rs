//! The five canonical solids and their symmetry groups: element
//! counts, rotation axes by order, and the group sizes with and
//! without reflections.
//!
//! Run with: `cargo run --example solids_and_groups`

use platcfg::solids::{make_solid, SolidKind};
use platcfg::symmetry::{full_group, rotation_group};

fn main() {
    for kind in SolidKind::ALL {
        let solid = make_solid(kind);
        let p = solid.params;
        let rot = rotation_group(kind).expect("rotation group");
        let full = full_group(kind).expect("full group");

        let mut axis_orders: Vec<usize> = solid.axes.iter().map(|a| a.order).collect();
        axis_orders.sort_unstable();
        let mut counts = Vec::new();
        for order in [2usize, 3, 4, 5] {
            let n = axis_orders.iter().filter(|&&o| o == order).count();
            if n > 0 {
                counts.push(format!("{n} of order {order}"));
            }
        }

        println!("{} (v={}, e={}, f={}, {}-gonal faces)", kind.name(), p.v, p.e, p.f, p.m);
        println!("  axes: {}", counts.join(", "));
        println!(
            "  group orders: {} rotations, {} with reflections",
            rot.elements.len(),
            full.elements.len()
        );
        println!("  dual: {}", kind.dual().name());
    }
}
