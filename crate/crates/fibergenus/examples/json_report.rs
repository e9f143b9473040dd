//! The machine-readable output: a schema-stable JSON document per run,
//! identical to what the `fibergenus` binary prints under `--json`.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run -q --example json_report
//! ```
//!
//! Document shape (keys in emission order):
//!
//! ```text
//! field, f, g,
//! degrees { m, n },
//! hypotheses { f_tame, g_tame, f_separable, g_separable, wild_overlap },
//! formula_used,
//! ledger [ { value_orbit, degree, classes [ { e_f, e_g, count, contribution } ] } ],
//! sum_chi,
//! components { r, source } | null,
//! genus | null
//! ```
//!
//! Value orbits serialize as the coefficient list of their monic defining
//! polynomial (constant term first, as exact strings), or `"inf"`.

use fibergenus::cli::{run, InputSpec, OutputMode};

fn main() {
    // The full document for the genus-2 hyperelliptic curve y^2 = x^5 - x.
    let spec = InputSpec {
        field: "Q".to_string(),
        f_expr: "x^5 - x".to_string(),
        g_expr: "y^2".to_string(),
        components: None,
        output: OutputMode::Json,
        seed: 0,
        verbose: false,
    };
    print!("{}", run(&spec).unwrap());

    // The documents are data, not prose: pull single values back out with
    // any JSON reader.
    let doc: serde_json::Value = serde_json::from_str(&run(&spec).unwrap()).unwrap();
    println!("sum_chi   = {}", doc["sum_chi"]);
    println!("genus     = {}", doc["genus"]);
    println!("formula   = {}", doc["formula_used"]);
    println!();

    // Without a certified or supplied component count, `components` and
    // `genus` are null — the tool never guesses.
    let uncertified = InputSpec {
        field: "Q".to_string(),
        f_expr: "x^4".to_string(),
        g_expr: "y^6".to_string(),
        components: None,
        output: OutputMode::Json,
        seed: 0,
        verbose: false,
    };
    let doc: serde_json::Value = serde_json::from_str(&run(&uncertified).unwrap()).unwrap();
    println!("x^4 = y^6 without a component count:");
    println!("  components = {}", doc["components"]);
    println!("  genus      = {}", doc["genus"]);

    // Supplying r = 2 (the curve splits as two cuspidal pieces) resolves
    // the genus sum; genus itself stays null because the curve is not
    // irreducible.
    let with_r = InputSpec { components: Some(2), ..uncertified };
    let doc: serde_json::Value = serde_json::from_str(&run(&with_r).unwrap()).unwrap();
    println!("with --components 2:");
    println!("  components = {}", doc["components"]);
    println!("  genus      = {}", doc["genus"]);
}
