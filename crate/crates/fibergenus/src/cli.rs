//! Report emission and input plumbing shared by the command-line binary
//! and the examples: field tags, expression parsing on both sides, and the
//! two output documents (human report and machine-readable JSON).
//!
//! Everything here is a thin shell around [`crate::genus::evaluate`]; the
//! value of the module is the *stability* of what it emits.  The JSON
//! document's top-level keys are `field`, `f`, `g`, `degrees`,
//! `hypotheses`, `formula_used`, `ledger`, `sum_chi`, `components`,
//! `genus`, exactly; value orbits serialize as the coefficient list of
//! their monic defining polynomial (constant term first) or the string
//! `"inf"`.

use serde::Serialize;
use thiserror::Error;

use crate::field::Field;
use crate::genus::{evaluate, EngineError, EvalOptions, GenusReport};
use crate::parse::parse_map;
use crate::ramification::{critical_orbits, RamError, RationalMap, ValueOrbit};

/// How [`run`] should render its result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Report,
    Json,
}

/// One complete invocation, exactly as specified by the command-line
/// flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputSpec {
    /// Ground field tag: `"Q"`, or `"F<p>"` with `p` prime.
    pub field: String,
    /// Expression for `f` in the variable `x`.
    pub f_expr: String,
    /// Expression for `g` in the variable `y`.
    pub g_expr: String,
    /// Component count known to the caller, if any.
    pub components: Option<u64>,
    pub output: OutputMode,
    /// Seed for the randomized factorization steps; results do not depend
    /// on it.
    pub seed: u64,
    /// Include both ramification portraits in the human report.
    pub verbose: bool,
}

impl Default for InputSpec {
    fn default() -> Self {
        InputSpec {
            field: "Q".into(),
            f_expr: String::new(),
            g_expr: String::new(),
            components: None,
            output: OutputMode::Report,
            seed: 0,
            verbose: false,
        }
    }
}

/// Failure of a run, split by the exit status it maps to.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RunError {
    /// Malformed input: bad field tag, unparsable expression, or an
    /// impossible component count.  Exit status 1.
    #[error("{0}")]
    Input(String),
    /// The input is well-formed but no formula applies to it.  Exit
    /// status 2.
    #[error("{0}")]
    Hypothesis(String),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Input(_) => 1,
            RunError::Hypothesis(_) => 2,
        }
    }
}

fn parse_field_tag(tag: &str) -> Result<Field, RunError> {
    if tag == "Q" {
        return Ok(Field::rationals());
    }
    if let Some(digits) = tag.strip_prefix('F') {
        if let Ok(p) = digits.parse::<u64>() {
            if crate::field::is_prime_u64(p) {
                return Ok(Field::prime(p));
            }
            return Err(RunError::Input(format!(
                "--field: {p} is not prime; the field tag must be Q or F<p> \
                 with p prime"
            )));
        }
    }
    Err(RunError::Input(format!(
        "--field: unrecognized tag {tag:?}; expected Q or F<p> with p prime \
         (for example F7)"
    )))
}

/// Parses the inputs, evaluates the pair, and renders one document
/// (newline-terminated).  Errors carry the exit status of the failure
/// class and name the offending flag, token position, or orbit.
pub fn run(spec: &InputSpec) -> Result<String, RunError> {
    let field = parse_field_tag(&spec.field)?;
    let f = parse_map(&spec.f_expr, "x", &field)
        .map_err(|e| RunError::Input(format!("--f: {e}")))?;
    let g = parse_map(&spec.g_expr, "y", &field)
        .map_err(|e| RunError::Input(format!("--g: {e}")))?;

    let options = EvalOptions { components: spec.components, seed: spec.seed };
    let report = match evaluate(&f, &g, &options) {
        Ok(report) => report,
        Err(e @ EngineError::CommonWildBranchPoint { .. }) => {
            return Err(RunError::Hypothesis(e.to_string()));
        }
        Err(e @ EngineError::InvalidComponents { .. }) => {
            return Err(RunError::Input(format!("--components: {e}")));
        }
        Err(e) => return Err(RunError::Input(e.to_string())),
    };

    Ok(match spec.output {
        OutputMode::Json => json_document(spec, &f, &g, &report),
        OutputMode::Report => human_report(spec, &field, &f, &g, &report),
    })
}

// ---------------------------------------------------------------------
// JSON document
// ---------------------------------------------------------------------

#[derive(Serialize)]
struct JsonDocument {
    field: String,
    f: String,
    g: String,
    degrees: JsonDegrees,
    hypotheses: JsonHypotheses,
    formula_used: String,
    ledger: Vec<JsonLedgerRow>,
    sum_chi: i64,
    components: Option<JsonComponents>,
    genus: Option<i64>,
}

#[derive(Serialize)]
struct JsonDegrees {
    m: usize,
    n: usize,
}

#[derive(Serialize)]
struct JsonHypotheses {
    f_tame: bool,
    g_tame: bool,
    f_separable: bool,
    g_separable: bool,
    wild_overlap: bool,
}

#[derive(Serialize)]
struct JsonLedgerRow {
    value_orbit: serde_json::Value,
    degree: usize,
    classes: Vec<JsonClass>,
}

#[derive(Serialize)]
struct JsonClass {
    e_f: u32,
    e_g: u32,
    count: u64,
    contribution: i64,
}

#[derive(Serialize)]
struct JsonComponents {
    r: u64,
    source: String,
}

/// A value orbit as JSON: the coefficient list of its monic defining
/// polynomial (constant term first, coefficients as exact strings), or the
/// string `"inf"`.
fn orbit_json(orbit: &ValueOrbit) -> serde_json::Value {
    match orbit {
        ValueOrbit::Infinity => serde_json::Value::String("inf".into()),
        ValueOrbit::Finite(u) => serde_json::Value::Array(
            u.coeffs()
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        ),
    }
}

fn json_document(
    spec: &InputSpec,
    f: &RationalMap,
    g: &RationalMap,
    report: &GenusReport,
) -> String {
    let document = JsonDocument {
        field: spec.field.clone(),
        f: f.display_with("x"),
        g: g.display_with("y"),
        degrees: JsonDegrees { m: report.m, n: report.n },
        hypotheses: JsonHypotheses {
            f_tame: report.hypotheses.f_tame,
            g_tame: report.hypotheses.g_tame,
            f_separable: report.hypotheses.f_separable,
            g_separable: report.hypotheses.g_separable,
            wild_overlap: report.hypotheses.wild_overlap,
        },
        formula_used: report.formula_used.to_string(),
        ledger: report
            .ledger
            .iter()
            .map(|row| JsonLedgerRow {
                value_orbit: orbit_json(&row.value),
                degree: row.degree,
                classes: row
                    .classes
                    .iter()
                    .map(|c| JsonClass {
                        e_f: c.e_f,
                        e_g: c.e_g,
                        count: c.count,
                        contribution: c.contribution,
                    })
                    .collect(),
            })
            .collect(),
        sum_chi: report.sum_chi,
        components: report.components.map(|c| JsonComponents {
            r: c.r,
            source: c.source.to_string(),
        }),
        genus: report.genus(),
    };
    let mut text = serde_json::to_string_pretty(&document)
        .expect("the document contains no non-serializable values");
    text.push('\n');
    text
}

// ---------------------------------------------------------------------
// Human report
// ---------------------------------------------------------------------

/// Degree-one orbits read best as their root; larger ones as their
/// defining polynomial in `t`.
fn orbit_human(orbit: &ValueOrbit) -> String {
    match orbit.root() {
        Some(root) => root.to_string(),
        None => orbit.label("t"),
    }
}

fn signed(v: i64) -> String {
    if v >= 0 {
        format!("+{v}")
    } else {
        v.to_string()
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn push_portrait(out: &mut String, name: &str, var: &str, map: &RationalMap, seed: u64) {
    match critical_orbits(map, seed) {
        Ok(portrait) => {
            out.push_str(&format!("ramification portrait of {name}:\n"));
            if portrait.entries.is_empty() {
                out.push_str("  (unramified)\n");
            }
            for entry in &portrait.entries {
                out.push_str(&format!(
                    "  point {} : e = {} over value {}\n",
                    entry.point.label(var),
                    entry.e,
                    orbit_human(&entry.value),
                ));
            }
            if !portrait.wild_branch_values.is_empty() {
                let wild: Vec<String> = portrait
                    .wild_branch_values
                    .iter()
                    .map(orbit_human)
                    .collect();
                out.push_str(&format!(
                    "  wild branch values: {}\n",
                    wild.join(", ")
                ));
            }
        }
        Err(RamError::InseparableMap) => {
            out.push_str(&format!(
                "ramification portrait of {name}: inseparable; every value \
                 is a wild branch value\n"
            ));
        }
        Err(e) => {
            out.push_str(&format!("ramification portrait of {name}: {e}\n"));
        }
    }
}

fn human_report(
    spec: &InputSpec,
    field: &Field,
    f: &RationalMap,
    g: &RationalMap,
    report: &GenusReport,
) -> String {
    let mut out = String::new();
    out.push_str(&format!("field: {}\n", field.label()));
    out.push_str(&format!(
        "f(x) = {}   (degree m = {})\n",
        f.display_with("x"),
        report.m
    ));
    out.push_str(&format!(
        "g(y) = {}   (degree n = {})\n",
        g.display_with("y"),
        report.n
    ));
    out.push_str(
        "\nBoth maps run between genus-zero lines; the total below is the \
         sum of\n2*genus - 2 over the components of the normalized curve \
         f(x) = g(y).\n\n",
    );

    out.push_str("hypotheses:\n");
    out.push_str(&format!(
        "  f separable: {:<3}  g separable: {}\n",
        yes_no(report.hypotheses.f_separable),
        yes_no(report.hypotheses.g_separable),
    ));
    out.push_str(&format!(
        "  f tame:      {:<3}  g tame:      {}\n",
        yes_no(report.hypotheses.f_tame),
        yes_no(report.hypotheses.g_tame),
    ));
    out.push_str(&format!(
        "  wild overlap: {}\n",
        yes_no(report.hypotheses.wild_overlap)
    ));

    if spec.verbose {
        out.push('\n');
        push_portrait(&mut out, "f", "x", f, spec.seed);
        push_portrait(&mut out, "g", "y", g, spec.seed);
    }

    out.push_str(&format!(
        "\nformula used: {} (base term {})\n",
        report.formula_used, report.base_term
    ));
    if report.ledger.is_empty() {
        out.push_str("ledger: no contributing value orbits\n");
    } else {
        out.push_str("ledger of corrections by value orbit:\n");
        for row in &report.ledger {
            out.push_str(&format!(
                "  {}  (degree {}): {}\n",
                orbit_human(&row.value),
                row.degree,
                signed(row.contribution),
            ));
            for class in &row.classes {
                out.push_str(&format!(
                    "      e_f = {}, e_g = {}, pairs = {}  ->  {}\n",
                    class.e_f,
                    class.e_g,
                    class.count,
                    signed(class.contribution),
                ));
            }
        }
    }

    out.push_str(&format!("\nsum_chi = {}\n", report.sum_chi));
    match &report.components {
        Some(c) => {
            out.push_str(&format!(
                "components: r = {} (source: {})\n",
                c.r, c.source
            ));
            out.push_str(&format!("genus sum = {}\n", c.genus_sum));
            match report.genus() {
                Some(genus) => out.push_str(&format!("genus = {genus}\n")),
                None => out.push_str(
                    "genus: with r > 1 the individual genera are not \
                     determined by this total\n",
                ),
            }
        }
        None => {
            out.push_str(
                "components: unknown; pass --components <r> if the count is \
                 known by other means\n",
            );
        }
    }
    out
}
