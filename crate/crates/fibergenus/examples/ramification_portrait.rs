//! The branch data of a single rational map: where it ramifies, how hard,
//! and over which values.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run -q --example ramification_portrait
//! ```
//!
//! A *portrait* lists every Galois orbit of points with ramification index
//! `e >= 2`, together with its image value orbit.  Points are never split
//! into algebraic conjugates: an orbit is a monic irreducible polynomial
//! over the ground field (or the point at infinity), and the index is
//! constant along it.

use fibergenus::field::Field;
use fibergenus::parse::parse_map;
use fibergenus::ramification::{critical_orbits, ram_index, PointOrbit};

fn main() {
    let q = Field::rationals();

    for src in ["x^3 - 3*x", "x^2*(x - 1)", "(x^2 + 1)/(x)"] {
        let map = parse_map(src, "x", &q).unwrap();
        let portrait = critical_orbits(&map, 0).unwrap();

        println!("f(x) = {}  (degree {})", map.display_with("x"), map.degree());
        println!("  separable: {}, tame: {}", portrait.separable, portrait.tame);
        for entry in &portrait.entries {
            println!(
                "  point {} : e = {} over value {}",
                entry.point.label("x"),
                entry.e,
                entry.value.label("t")
            );
        }
        let branch: Vec<String> = portrait
            .branch_values()
            .iter()
            .map(|v| v.label("t"))
            .collect();
        println!("  branch values: {}", branch.join(", "));
        println!();
    }

    // Indices can also be asked for pointwise, including at infinity.
    let map = parse_map("x^3 - 3*x", "x", &q).unwrap();
    let one = PointOrbit::rational_point(&q.from_i64(1));
    println!("e of x^3 - 3x at x = 1:  {}", ram_index(&map, &one));
    println!(
        "e of x^3 - 3x at infinity: {}",
        ram_index(&map, &PointOrbit::Infinity)
    );

    // In characteristic p the portrait flags wild ramification: indices
    // divisible by p.  x^5 - x over F_5 is unramified at every finite point
    // (its derivative is the constant -1) yet wildly ramified at infinity.
    let f5 = Field::prime(5);
    let map = parse_map("x^5 - x", "x", &f5).unwrap();
    let portrait = critical_orbits(&map, 0).unwrap();
    println!();
    println!("f(x) = x^5 - x over {f5}: tame = {}", portrait.tame);
    let wild: Vec<String> = portrait
        .wild_branch_values
        .iter()
        .map(|v| v.label("t"))
        .collect();
    println!("  wild branch values: {}", wild.join(", "));
}
