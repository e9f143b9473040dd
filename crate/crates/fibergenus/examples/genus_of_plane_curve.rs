//! Total genus of the curve `f(x) = g(y)`, computed from ramification data
//! alone — the main entry point of the crate.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run -q --example genus_of_plane_curve
//! ```
//!
//! Three classics are evaluated below:
//!
//! * `y^2 = x^5 - x`, the standard genus-2 hyperelliptic curve;
//! * `y^2 = x^2(x - 1)`, a nodal cubic whose normalization is rational;
//! * `x^4 = y^6`, which splits into two components of genus 0.
//!
//! The engine reports `sum_chi`, the sum of `2*genus - 2` over the
//! normalized irreducible components.  When the component count `r` is
//! known — certified automatically for polynomial maps of coprime degrees,
//! or supplied by the caller — the sum resolves into actual genera.

use fibergenus::field::Field;
use fibergenus::genus::{evaluate, EvalOptions};
use fibergenus::parse::parse_map;

fn main() {
    let q = Field::rationals();

    let pairs = [
        ("x^5 - x", "y^2", None),
        ("x^2*(x - 1)", "y^2", None),
        // Not coprime in degree, so the engine will not guess r; we pass the
        // known component count (x^4 - y^6 = (x^2 - y^3)(x^2 + y^3)).
        ("x^4", "y^6", Some(2)),
    ];

    for (f_src, g_src, components) in pairs {
        let f = parse_map(f_src, "x", &q).unwrap();
        let g = parse_map(g_src, "y", &q).unwrap();
        let options = EvalOptions { components, ..EvalOptions::default() };
        let report = evaluate(&f, &g, &options).unwrap();

        println!("curve  {g_src} = {f_src}  over {q}");
        println!("  degrees          m = {}, n = {}", report.m, report.n);
        println!("  formula used     {}", report.formula_used);
        println!(
            "  total            sum of (2g - 2) over components = {}",
            report.sum_chi
        );

        // The ledger shows where the total comes from: one row per branch
        // value orbit, with the base term supplied by the degrees.
        println!("  base term        {}", report.base_term);
        for row in &report.ledger {
            println!(
                "  correction       {:+} at {} (orbit degree {})",
                row.contribution,
                row.value.label("t"),
                row.degree
            );
        }

        match &report.components {
            Some(c) => {
                let source = match c.source {
                    fibergenus::genus::ComponentsSource::User => "supplied",
                    fibergenus::genus::ComponentsSource::CoprimeDegreeCertificate => {
                        "certified: coprime degrees"
                    }
                };
                println!("  components       r = {} ({source})", c.r);
                println!("  genus total      {}", c.genus_sum);
                if let Some(genus) = report.genus() {
                    println!("  => irreducible curve of genus {genus}");
                }
            }
            None => {
                println!("  components       unknown (pass a count to resolve genera)");
            }
        }
        println!();
    }

    // The certificate in action: coprime degrees of polynomial maps force a
    // single component, so the genus needs no help from the caller.
    let f = parse_map("x^3 - 3*x", "x", &q).unwrap();
    let g = parse_map("y^2", "y", &q).unwrap();
    let report = evaluate(&f, &g, &EvalOptions::default()).unwrap();
    println!(
        "y^2 = x^3 - 3x: certified irreducible, genus {}",
        report.genus().unwrap()
    );
}
