//! The total-genus engine: evaluates the Euler-characteristic sum
//! `sum over components of (2*genus - 2)` for the normalized curve
//! `f(x) = g(y)` cut out by a pair of nonconstant rational maps on the
//! line, using two independent closed forms and cross-checking them.
//!
//! Both forms compute the same total from branch data alone:
//!
//! * the **tame form** requires `f` to be tamely ramified and charges
//!   `e_f - gcd(e_f, e_g)` to every geometric pair over a branch value of
//!   `f` (swapping the roles of `f` and `g` gives a second instance);
//! * the **wild form** requires only that no value orbit is a wildly
//!   ramified branch value of both maps, and charges
//!   `-((e_f - 1)(e_g - 1) + gcd(e_f, e_g) - 1)` to every pair over a
//!   common branch value.
//!
//! [`evaluate`] runs every form whose hypotheses hold, asserts that all of
//! them agree (a disagreement would be an engine bug, not an input error),
//! and reports one ledger.  When both maps are inseparable, or more
//! generally when some orbit is wildly branched on both sides, no form
//! applies and the engine refuses with a witness orbit.

use num_integer::Integer;
use thiserror::Error;

use crate::pairing::{
    common_wild_from_portraits, pair_classes, portrait_or_inseparable, union_from_portraits,
    ValueSelector,
};
use crate::ramification::{RamError, RamPortrait, RationalMap, ValueOrbit};

/// Genus of the source and target curves of both maps.  The engine is
/// specialized to maps between lines; this named constant keeps the base
/// terms of the formulas legible rather than burying bare `-2`s.
const GENUS_OF_LINE: i64 = 0;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EngineError {
    #[error("the two maps are defined over different fields: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error(
        "{role} is wildly ramified, so the tame form does not apply to this \
         orientation; use the wild form or swap the roles"
    )]
    NotTame { role: &'static str },
    #[error(
        "no formula applies: the value orbit {} is a wildly ramified branch \
         value of both maps",
        .orbit.label("t")
    )]
    CommonWildBranchPoint { orbit: ValueOrbit },
    #[error(
        "component count {r} is inconsistent with the computed total {sum_chi}: \
         the count must be at least 1, and each component contributes at \
         least -2 to the total"
    )]
    InvalidComponents { r: u64, sum_chi: i64 },
    #[error(transparent)]
    Ram(#[from] RamError),
}

/// Which closed form produced the reported ledger.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formula {
    /// Tame form iterating the branch values of `f`.
    TameF,
    /// Tame form with the roles swapped, iterating the branch values of `g`.
    TameG,
    /// Wild form iterating the common branch values.
    Wild,
    /// The tame and wild forms both applied and produced the same total;
    /// the ledger shown is the tame one.
    BothAgree,
}

impl std::fmt::Display for Formula {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        out.write_str(match self {
            Formula::TameF => "tame-f",
            Formula::TameG => "tame-g",
            Formula::Wild => "wild",
            Formula::BothAgree => "both-agree",
        })
    }
}

/// The hypothesis flags the engine checks before selecting formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Hypotheses {
    pub f_separable: bool,
    pub g_separable: bool,
    pub f_tame: bool,
    pub g_tame: bool,
    /// Some value orbit is a wildly ramified branch value of both maps.
    pub wild_overlap: bool,
}

/// One ramification-index pair within a ledger row, with its total charge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassContribution {
    pub e_f: u32,
    pub e_g: u32,
    /// Number of geometric pairs in the class (over all roots of the orbit).
    pub count: u64,
    pub contribution: i64,
}

/// One value orbit's worth of the correction sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LedgerEntry {
    pub value: ValueOrbit,
    pub degree: usize,
    pub classes: Vec<ClassContribution>,
    /// Sum of the class contributions of this row.
    pub contribution: i64,
}

/// How the component count was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentsSource {
    /// Supplied by the caller.
    User,
    /// Certified: two polynomial maps of coprime degrees cut out an
    /// irreducible curve, so the count is 1.
    CoprimeDegreeCertificate,
}

impl std::fmt::Display for ComponentsSource {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        out.write_str(match self {
            ComponentsSource::User => "user",
            ComponentsSource::CoprimeDegreeCertificate => "coprime-degree-certificate",
        })
    }
}

/// A known component count together with the genus total it implies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Components {
    pub r: u64,
    pub source: ComponentsSource,
    /// Sum of the genera of the components: `(sum_chi + 2r) / 2`.
    pub genus_sum: i64,
}

/// The full result of a genus computation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusReport {
    /// `sum over components of (2*genus - 2)` for the normalized curve.
    pub sum_chi: i64,
    pub formula_used: Formula,
    pub hypotheses: Hypotheses,
    /// Per-orbit correction rows of the formula named by `formula_used`
    /// (the tame rows when both forms agree).
    pub ledger: Vec<LedgerEntry>,
    /// Degree of `f`.
    pub m: usize,
    /// Degree of `g`.
    pub n: usize,
    /// Degree-weighted base term of the reported form, before corrections.
    pub base_term: i64,
    pub components: Option<Components>,
}

impl GenusReport {
    /// The genus of the curve itself — defined only when it is known to be
    /// irreducible.
    pub fn genus(&self) -> Option<i64> {
        self.components.as_ref().filter(|c| c.r == 1).map(|c| c.genus_sum)
    }
}

/// Options for [`evaluate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EvalOptions {
    /// A component count known to the caller by other means.
    pub components: Option<u64>,
    /// Seed for the randomized factorization steps; any value gives the
    /// same mathematical answers.
    pub seed: u64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { components: None, seed: 0 }
    }
}

/// Branch portraits of both sides (`None` marks an inseparable side) plus
/// the hypothesis flags, computed once per evaluation.
struct Prepared {
    portrait_f: Option<RamPortrait>,
    portrait_g: Option<RamPortrait>,
    hypotheses: Hypotheses,
}

fn prepare(f: &RationalMap, g: &RationalMap, seed: u64) -> Result<Prepared, EngineError> {
    if f.field() != g.field() {
        return Err(EngineError::FieldMismatch(
            f.field().label(),
            g.field().label(),
        ));
    }
    let portrait_f = portrait_or_inseparable(f, seed)?;
    let portrait_g = portrait_or_inseparable(g, seed)?;
    let hypotheses = Hypotheses {
        f_separable: portrait_f.is_some(),
        g_separable: portrait_g.is_some(),
        f_tame: portrait_f.as_ref().is_some_and(|p| p.tame),
        g_tame: portrait_g.as_ref().is_some_and(|p| p.tame),
        wild_overlap: common_wild_from_portraits(
            f,
            portrait_f.as_ref(),
            portrait_g.as_ref(),
        )
        .is_some(),
    };
    Ok(Prepared { portrait_f, portrait_g, hypotheses })
}

/// Per-pair charge of each form.  `e_first` is the index on the side whose
/// branch values the form iterates.
#[derive(Clone, Copy)]
enum FormWeight {
    Tame,
    Wild,
}

fn class_weight(kind: FormWeight, e_first: u32, e_second: u32) -> i64 {
    let d = e_first.gcd(&e_second) as i64;
    match kind {
        FormWeight::Tame => e_first as i64 - d,
        FormWeight::Wild => {
            -((e_first as i64 - 1) * (e_second as i64 - 1) + d - 1)
        }
    }
}

/// Builds one ledger row per orbit by crossing the fiber profiles of
/// `first` and `second`.  Rows are oriented with `first`'s index in the
/// `e_f` slot.
fn formula_rows(
    first: &RationalMap,
    second: &RationalMap,
    orbits: &[ValueOrbit],
    kind: FormWeight,
    seed: u64,
) -> Result<Vec<LedgerEntry>, EngineError> {
    let mut rows = Vec::with_capacity(orbits.len());
    for value in orbits {
        let classes: Vec<ClassContribution> =
            pair_classes(first, second, std::slice::from_ref(value), seed)?
                .into_iter()
                .map(|c| ClassContribution {
                    e_f: c.e_f,
                    e_g: c.e_g,
                    count: c.pair_count,
                    contribution: c.pair_count as i64 * class_weight(kind, c.e_f, c.e_g),
                })
                .collect();
        let contribution = classes.iter().map(|c| c.contribution).sum();
        rows.push(LedgerEntry {
            value: value.clone(),
            degree: value.degree(),
            classes,
            contribution,
        });
    }
    Ok(rows)
}

fn report_skeleton(
    f: &RationalMap,
    g: &RationalMap,
    prep: &Prepared,
    formula_used: Formula,
    base_term: i64,
    ledger: Vec<LedgerEntry>,
) -> GenusReport {
    let corrections: i64 = ledger.iter().map(|row| row.contribution).sum();
    GenusReport {
        sum_chi: base_term + corrections,
        formula_used,
        hypotheses: prep.hypotheses,
        ledger,
        m: f.degree(),
        n: g.degree(),
        base_term,
        components: None,
    }
}

fn tame_f_report(
    f: &RationalMap,
    g: &RationalMap,
    prep: &Prepared,
    seed: u64,
) -> Result<GenusReport, EngineError> {
    if !prep.hypotheses.f_tame {
        return Err(EngineError::NotTame { role: "f" });
    }
    let portrait = prep
        .portrait_f
        .as_ref()
        .expect("a tame map is separable and has a portrait");
    let orbits = portrait.branch_values();
    let ledger = formula_rows(f, g, &orbits, FormWeight::Tame, seed)?;
    let base_term = f.degree() as i64 * (2 * GENUS_OF_LINE - 2);
    Ok(report_skeleton(f, g, prep, Formula::TameF, base_term, ledger))
}

/// Total from the tame form applied with the roles of `f` and `g` swapped.
/// Only the sum is returned; a ledger in the swapped orientation would not
/// compose with the report's `(f, g)` orientation.
fn tame_g_sum(
    f: &RationalMap,
    g: &RationalMap,
    prep: &Prepared,
    seed: u64,
) -> Result<i64, EngineError> {
    if !prep.hypotheses.g_tame {
        return Err(EngineError::NotTame { role: "g" });
    }
    let portrait = prep
        .portrait_g
        .as_ref()
        .expect("a tame map is separable and has a portrait");
    let orbits = portrait.branch_values();
    let rows = formula_rows(g, f, &orbits, FormWeight::Tame, seed)?;
    let base_term = g.degree() as i64 * (2 * GENUS_OF_LINE - 2);
    Ok(base_term + rows.iter().map(|row| row.contribution).sum::<i64>())
}

fn wild_report(
    f: &RationalMap,
    g: &RationalMap,
    prep: &Prepared,
    seed: u64,
) -> Result<GenusReport, EngineError> {
    if let Some(orbit) =
        common_wild_from_portraits(f, prep.portrait_f.as_ref(), prep.portrait_g.as_ref())
    {
        return Err(EngineError::CommonWildBranchPoint { orbit });
    }
    let orbits = match union_from_portraits(
        ValueSelector::CommonBranch,
        prep.portrait_f.as_ref(),
        prep.portrait_g.as_ref(),
    ) {
        Ok(orbits) => orbits,
        Err(_) => unreachable!("a both-inseparable pair always has a common wild value"),
    };
    let ledger = formula_rows(f, g, &orbits, FormWeight::Wild, seed)?;
    let m = f.degree() as i64;
    let n = g.degree() as i64;
    let base_term = m * (2 * GENUS_OF_LINE - 2) + n * (2 * GENUS_OF_LINE - 2)
        - m * n * (2 * GENUS_OF_LINE - 2);
    Ok(report_skeleton(f, g, prep, Formula::Wild, base_term, ledger))
}

/// The tame form iterating the branch values of `f`.  Refuses with
/// [`EngineError::NotTame`] unless `f` is tamely ramified.
pub fn sum_chi_tame(
    f: &RationalMap,
    g: &RationalMap,
    seed: u64,
) -> Result<GenusReport, EngineError> {
    let prep = prepare(f, g, seed)?;
    tame_f_report(f, g, &prep, seed)
}

/// The wild form iterating the common branch values.  Refuses with
/// [`EngineError::CommonWildBranchPoint`] when some orbit is wildly
/// branched on both sides (in particular when both maps are inseparable).
pub fn sum_chi_wild(
    f: &RationalMap,
    g: &RationalMap,
    seed: u64,
) -> Result<GenusReport, EngineError> {
    let prep = prepare(f, g, seed)?;
    wild_report(f, g, &prep, seed)
}

/// The right-hand side of the tame form evaluated blindly, without the
/// tameness hypothesis.  A diagnostic: comparing it against the wild form's
/// answer shows how far the tame expression drifts once wild ramification
/// enters (`f = x^p - x`, `g = y` gives `-p - 1` against a true total of
/// `-2`).  Requires `f` separable so its branch values can be enumerated.
pub fn tame_form_rhs(
    f: &RationalMap,
    g: &RationalMap,
    seed: u64,
) -> Result<i64, EngineError> {
    let prep = prepare(f, g, seed)?;
    let portrait = prep
        .portrait_f
        .as_ref()
        .ok_or(EngineError::Ram(RamError::InseparableMap))?;
    let orbits = portrait.branch_values();
    let rows = formula_rows(f, g, &orbits, FormWeight::Tame, seed)?;
    let base_term = f.degree() as i64 * (2 * GENUS_OF_LINE - 2);
    Ok(base_term + rows.iter().map(|row| row.contribution).sum::<i64>())
}

/// Certifies the component count from degrees alone: two polynomial maps
/// of coprime degrees cut out an irreducible curve, so the count is 1.
pub fn coprime_degree_certificate(f: &RationalMap, g: &RationalMap) -> Option<u64> {
    if f.is_polynomial() && g.is_polynomial() && f.degree().gcd(&g.degree()) == 1 {
        Some(1)
    } else {
        None
    }
}

fn resolve_components(
    f: &RationalMap,
    g: &RationalMap,
    sum_chi: i64,
    requested: Option<u64>,
) -> Result<Option<Components>, EngineError> {
    assert!(
        sum_chi.rem_euclid(2) == 0,
        "the total Euler characteristic must be even; its parity is broken, \
         which is an engine bug"
    );
    match requested {
        Some(r) => {
            if r == 0 || sum_chi + 2 * (r as i64) < 0 {
                return Err(EngineError::InvalidComponents { r, sum_chi });
            }
            Ok(Some(Components {
                r,
                source: ComponentsSource::User,
                genus_sum: (sum_chi + 2 * r as i64) / 2,
            }))
        }
        None => Ok(coprime_degree_certificate(f, g).map(|r| {
            let genus_sum = (sum_chi + 2) / 2;
            assert!(
                genus_sum >= 0,
                "a certified irreducible curve must have nonnegative genus; \
                 this is an engine bug"
            );
            Components {
                r,
                source: ComponentsSource::CoprimeDegreeCertificate,
                genus_sum,
            }
        })),
    }
}

/// Runs every form whose hypotheses hold, asserts that all applicable
/// forms agree, and returns one report.
///
/// The reported ledger comes from the tame form when `f` is tame (tag
/// `both-agree`, since the wild form then also applies and is checked),
/// and from the wild form otherwise (tag `wild`).  The swapped tame form
/// participates in the cross-check whenever `g` is tame.  When no form
/// applies the error names a value orbit that is wildly branched on both
/// sides.  A component count is attached when supplied by the caller
/// (validated) or when the coprime-degree certificate applies.
pub fn evaluate(
    f: &RationalMap,
    g: &RationalMap,
    options: &EvalOptions,
) -> Result<GenusReport, EngineError> {
    let seed = options.seed;
    let prep = prepare(f, g, seed)?;

    let tame_f = if prep.hypotheses.f_tame {
        Some(tame_f_report(f, g, &prep, seed)?)
    } else {
        None
    };
    let tame_g = if prep.hypotheses.g_tame {
        Some(tame_g_sum(f, g, &prep, seed)?)
    } else {
        None
    };
    let wild = if prep.hypotheses.wild_overlap {
        None
    } else {
        Some(wild_report(f, g, &prep, seed)?)
    };

    if tame_f.is_none() && tame_g.is_none() && wild.is_none() {
        let orbit = common_wild_from_portraits(
            f,
            prep.portrait_f.as_ref(),
            prep.portrait_g.as_ref(),
        )
        .expect("only a wild overlap disables every form");
        return Err(EngineError::CommonWildBranchPoint { orbit });
    }

    let mut totals: Vec<(&str, i64)> = Vec::new();
    if let Some(r) = &tame_f {
        totals.push(("tame-f", r.sum_chi));
    }
    if let Some(s) = tame_g {
        totals.push(("tame-g", s));
    }
    if let Some(r) = &wild {
        totals.push(("wild", r.sum_chi));
    }
    assert!(
        totals.windows(2).all(|w| w[0].1 == w[1].1),
        "the applicable forms disagree for f = {f}, g = {g}: {totals:?}; \
         this is an engine bug"
    );

    let mut report = match (tame_f, wild) {
        (Some(mut tame), Some(_)) => {
            tame.formula_used = Formula::BothAgree;
            tame
        }
        (Some(tame), None) => tame,
        (None, Some(wild)) => wild,
        (None, None) => unreachable!(
            "a tame g forces an empty wild set on the g side, so the wild \
             form is applicable whenever only the swapped tame form is"
        ),
    };
    report.components = resolve_components(f, g, report.sum_chi, options.components)?;
    Ok(report)
}
