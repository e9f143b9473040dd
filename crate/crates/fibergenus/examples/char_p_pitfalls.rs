//! What changes in small characteristic: wild ramification, inseparable
//! maps, and the exact hypotheses under which each closed form stays true.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run -q --example char_p_pitfalls
//! ```
//!
//! Over the rationals every map is tame and both closed forms always apply.
//! Over `F_p` three things can go wrong, in increasing order of severity:
//!
//! 1. a ramification index divisible by `p` (*wild* ramification) breaks
//!    the tame form — the wild form still works;
//! 2. an identically-zero derivative (*inseparable* map) makes every value
//!    a wild branch value of that side — the wild form still works as long
//!    as the other side is everywhere tame;
//! 3. a value wildly ramified on *both* sides voids both forms — the
//!    engine refuses, with the offending orbit as a witness.

use fibergenus::field::Field;
use fibergenus::genus::{
    evaluate, sum_chi_tame, tame_form_rhs, EngineError, EvalOptions,
};
use fibergenus::parse::parse_map;

fn main() {
    // --- Pitfall 1: wildness breaks the tame form -----------------------
    //
    // The graph of any map has one component of genus 0, so the right
    // answer is always 2*0 - 2 = -2.  Take f = x^p - x, g = y over F_p:
    // f is unramified at every finite point but wildly ramified at
    // infinity.
    for p in [2u64, 3, 5] {
        let fp = Field::prime(p);
        let f = parse_map(&format!("x^{p} - x"), "x", &fp).unwrap();
        let g = parse_map("y", "y", &fp).unwrap();

        let report = evaluate(&f, &g, &EvalOptions::default()).unwrap();
        println!("f = x^{p} - x, g = y over {fp}:");
        println!("  wild form:          {}", report.sum_chi);

        // The tame form refuses: its hypothesis fails.
        match sum_chi_tame(&f, &g, 0) {
            Err(EngineError::NotTame { role }) => {
                println!("  tame form:          refused ({role} is wildly ramified)")
            }
            other => panic!("expected a tameness refusal, got {other:?}"),
        }

        // Evaluating the tame expression anyway shows WHY the hypothesis
        // matters: it produces a wrong answer, off by a p-dependent amount.
        let naive = tame_form_rhs(&f, &g, 0).unwrap();
        println!("  tame form, forced:  {naive}  (wrong: misses the wildness at infinity)");
        println!();
    }

    // --- Pitfall 2: inseparability on one side --------------------------
    //
    // Over F_3 the map x^3 is the Frobenius composed with nothing — its
    // derivative vanishes identically.  Branch data for that side does not
    // exist, but the wild form only needs the OTHER side's branch values.
    let f3 = Field::prime(3);
    let f = parse_map("x^3", "x", &f3).unwrap();
    let g = parse_map("y^2", "y", &f3).unwrap();
    let report = evaluate(&f, &g, &EvalOptions::default()).unwrap();
    println!("x^3 = y^2 over {f3} (f inseparable, g tame):");
    println!("  f separable: {}", report.hypotheses.f_separable);
    println!("  formula:     {}", report.formula_used);
    println!("  total:       {}", report.sum_chi);
    println!("  genus:       {:?}", report.genus());
    println!();

    // --- Pitfall 3: a common wild branch value is fatal ------------------
    //
    // For x^3 = y^3 over F_3, the value 0 (and infinity) is wildly
    // ramified on both sides.  No closed form applies; the engine
    // returns a hard error naming a witness orbit rather than guessing.
    let f = parse_map("x^3", "x", &f3).unwrap();
    let g = parse_map("y^3", "y", &f3).unwrap();
    match evaluate(&f, &g, &EvalOptions::default()) {
        Err(e @ EngineError::CommonWildBranchPoint { .. }) => {
            println!("x^3 = y^3 over {f3}:");
            println!("  refused: {e}");
        }
        other => panic!("expected a common-wild refusal, got {other:?}"),
    }
    println!();

    // The same pair over the rationals is perfectly fine — characteristic
    // zero has no wildness at all.
    let q = Field::rationals();
    let f = parse_map("x^3", "x", &q).unwrap();
    let g = parse_map("y^3", "y", &q).unwrap();
    let report = evaluate(&f, &g, &EvalOptions::default()).unwrap();
    println!(
        "the same x^3 = y^3 over {q}: total = {} ({})",
        report.sum_chi, report.formula_used
    );
}
