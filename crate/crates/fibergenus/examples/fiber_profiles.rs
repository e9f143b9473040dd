//! The shape of a fiber: how the preimages of one value split into
//! ramification classes.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run -q --example fiber_profiles
//! ```
//!
//! For a degree-`m` map, the preimages of any value carry multiplicities
//! that always add up to `m` per root of the value orbit — over branch
//! values some points coalesce (`e >= 2`), over generic values the fiber is
//! `m` simple points.  The profile never lists individual algebraic points,
//! only counts per index, which is all the genus formulas ever need.

use fibergenus::field::Field;
use fibergenus::parse::parse_map;
use fibergenus::ramification::{critical_orbits, fiber_profile, ValueOrbit};

fn print_profile(map_src: &str, profile: &fibergenus::ramification::FiberProfile) {
    println!(
        "fiber of {} over {} (orbit degree {}):",
        map_src,
        profile.value.label("t"),
        profile.degree_of_value_orbit
    );
    for entry in &profile.entries {
        println!(
            "  {} point(s) per root with e = {}",
            entry.points_per_root, entry.e
        );
    }
    println!("  mass per root: {}", profile.mass_per_root());
    println!();
}

fn main() {
    let q = Field::rationals();
    let map = parse_map("x^5 - x", "x", &q).unwrap();

    // Over a generic value the fiber is five simple points.
    let generic = ValueOrbit::rational_point(&q.from_i64(7));
    print_profile("x^5 - x", &fiber_profile(&map, &generic, 0).unwrap());

    // Over zero the five roots stay separate (x^5 - x is squarefree) ...
    let zero = ValueOrbit::rational_point(&q.zero());
    print_profile("x^5 - x", &fiber_profile(&map, &zero, 0).unwrap());

    // ... over infinity the whole fiber is one point of index five ...
    print_profile("x^5 - x", &fiber_profile(&map, &ValueOrbit::Infinity, 0).unwrap());

    // ... and over the critical values the splitting is mixed.  The four
    // critical values of x^5 - x are conjugate: one orbit of degree 4.
    let portrait = critical_orbits(&map, 0).unwrap();
    for value in portrait.branch_values() {
        if value != ValueOrbit::Infinity {
            print_profile("x^5 - x", &fiber_profile(&map, &value, 0).unwrap());
        }
    }

    // Fibers of rational maps work the same way; the denominator's roots
    // are the preimages of infinity.
    let joukowski = parse_map("(x^2 + 1)/(x)", "x", &q).unwrap();
    print_profile(
        "(x^2 + 1)/x",
        &fiber_profile(&joukowski, &ValueOrbit::Infinity, 0).unwrap(),
    );
    let two = ValueOrbit::rational_point(&q.from_i64(2));
    print_profile(
        "(x^2 + 1)/x",
        &fiber_profile(&joukowski, &two, 0).unwrap(),
    );
}
