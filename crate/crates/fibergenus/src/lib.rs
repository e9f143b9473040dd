//! Exact computation of the total genus of the plane curve `f(x) = g(y)`.
//!
//! Given two nonconstant rational maps `f` and `g` on the line, over the
//! rationals or over a prime field `F_p`, this crate computes
//!
//! ```text
//! sum over components of (2*genus - 2)
//! ```
//!
//! for the normalized curve cut out by `f(x) = g(y)` — exactly, from the
//! ramification of `f` and `g` alone, and without ever writing down the
//! curve.  Two independent closed forms are evaluated and cross-checked:
//! a *tame form* that iterates the branch values of one map, and a *wild
//! form* that iterates the common branch values and stays valid in small
//! characteristic as long as no value is wildly ramified on both sides.
//! When the component count `r` is known (supplied by the caller, or
//! certified automatically for polynomial maps of coprime degrees, where
//! `r = 1`), the total resolves into an actual genus.
//!
//! All arithmetic is exact: arbitrary-precision rationals and residues,
//! Galois orbits instead of floating-point roots, and integer answers with
//! no tolerances anywhere.
//!
//! # Quick start
//!
//! ```
//! use fibergenus::field::Field;
//! use fibergenus::genus::{evaluate, EvalOptions};
//! use fibergenus::parse::parse_map;
//!
//! // y^2 = x^5 - x is a genus-2 hyperelliptic curve.
//! let q = Field::rationals();
//! let f = parse_map("x^5 - x", "x", &q).unwrap();
//! let g = parse_map("y^2", "y", &q).unwrap();
//! let report = evaluate(&f, &g, &EvalOptions::default()).unwrap();
//! assert_eq!(report.sum_chi, 2);
//! assert_eq!(report.genus(), Some(2));
//! ```
//!
//! # Module map
//!
//! * [`field`] — exact ground fields (`Q`, `F_p`) and simple extensions,
//!   with arbitrary-precision elements.
//! * [`poly`] — dense univariate polynomials: division, gcd, resultants,
//!   squarefree decomposition.
//! * [`factor`] — complete factorization over `Q` (Hensel lifting with
//!   subset recombination) and over finite fields (seeded
//!   distinct-degree/equal-degree splitting).
//! * [`ramification`] — rational maps, Galois point orbits, ramification
//!   indices, branch portraits, and fiber profiles.
//! * [`pairing`] — matching the branch data of two maps: shared value
//!   orbits, pair classes, wild-overlap detection, and the local
//!   fiber-point structure.
//! * [`genus`] — the engine: both closed forms, hypothesis checks,
//!   cross-checked evaluation, component certificates, genus reports.
//! * [`parse`] — expression parser for maps (`"(x^2+1)/x"` and friends).
//! * [`cli`] — input plumbing and the two output documents (human report
//!   and schema-stable JSON); the `fibergenus` binary is a thin shell
//!   over this.
//! * [`validation`] — oracle families with independently known answers
//!   and the seeded random-instance generators used by the test suites.
//!
//! # Runnable examples
//!
//! Each major capability has a self-contained example under `examples/`:
//!
//! ```text
//! cargo run --example genus_of_plane_curve   # evaluate pairs, read reports
//! cargo run --example ramification_portrait  # branch data of single maps
//! cargo run --example fiber_profiles         # fibers over chosen values
//! cargo run --example pair_classes           # crossing two branch loci
//! cargo run --example factor_polynomials     # the factorization engine
//! cargo run --example field_towers           # exact field arithmetic
//! cargo run --example char_p_pitfalls        # wildness, inseparability
//! cargo run --example json_report            # the machine-readable output
//! ```
//!
//! The same computations are available from the command line:
//!
//! ```text
//! cargo run -- --field Q --f "x^5-x" --g "y^2" --json
//! ```

pub mod cli;
pub mod factor;
pub mod field;
pub mod genus;
pub mod pairing;
pub mod parse;
pub mod poly;
pub mod ramification;
pub mod validation;

pub use field::{Elem, Field};
pub use genus::{evaluate, EvalOptions, GenusReport};
pub use parse::parse_map;
pub use poly::Poly;
pub use ramification::{PointOrbit, RationalMap, ValueOrbit};
