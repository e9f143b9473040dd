//! Crossing the branch data of two maps: shared value orbits, pair classes,
//! and the local structure of the fiber product.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run -q --example pair_classes
//! ```
//!
//! The curve `f(x) = g(y)` lives over the value line both maps share.  Over
//! each value orbit `R`, every preimage `P` of `f` meets every preimage `Q`
//! of `g`; a *pair class* aggregates the pairs with equal indices
//! `(e_f, e_g)` and counts them across all roots of `R`.  These classes are
//! exactly what the genus formulas weigh and sum.

use fibergenus::field::Field;
use fibergenus::pairing::{
    fiber_point_structure, pair_classes, value_orbit_union, ValueSelector,
};
use fibergenus::parse::parse_map;

fn main() {
    let q = Field::rationals();
    let f = parse_map("x^2*(x - 1)", "x", &q).unwrap();
    let g = parse_map("y^2", "y", &q).unwrap();

    // Where can anything interesting happen?  Only over branch values.
    for (selector, name) in [
        (ValueSelector::BranchOfF, "branch values of f"),
        (ValueSelector::BranchOfG, "branch values of g"),
        (ValueSelector::Union, "their union"),
    ] {
        let orbits = value_orbit_union(&f, &g, selector, 0).unwrap();
        let labels: Vec<String> = orbits.iter().map(|v| v.label("t")).collect();
        println!("{name}: {{{}}}", labels.join(", "));
    }
    println!();

    // The classes over the union, with their pair counts.
    let orbits = value_orbit_union(&f, &g, ValueSelector::Union, 0).unwrap();
    let classes = pair_classes(&f, &g, &orbits, 0).unwrap();
    println!("pair classes of f = x^2(x - 1), g = y^2:");
    for class in &classes {
        println!(
            "  at {}: (e_f, e_g) = ({}, {}), {} pair(s)",
            class.value.label("t"),
            class.e_f,
            class.e_g,
            class.pair_count
        );
    }
    println!();

    // Over each pair of a class, the fiber product has gcd(e_f, e_g) points,
    // each ramified with index lcm(e_f, e_g) over the shared value.
    let f = parse_map("x^4", "x", &q).unwrap();
    let g = parse_map("y^6", "y", &q).unwrap();
    let orbits = value_orbit_union(&f, &g, ValueSelector::Union, 0).unwrap();
    let classes = pair_classes(&f, &g, &orbits, 0).unwrap();
    println!("local structure on x^4 = y^6:");
    for class in &classes {
        let s = fiber_point_structure(&f, &g, class).unwrap();
        println!(
            "  at {}: ({}, {}) -> {} point(s), indices {} over P, {} over Q, {} over the value",
            class.value.label("t"),
            class.e_f,
            class.e_g,
            s.point_count,
            s.e_over_a,
            s.e_over_b,
            s.e_over_d
        );
    }
}
