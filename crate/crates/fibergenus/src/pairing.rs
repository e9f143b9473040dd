//! Matching the branch structures of two maps `f` and `g` over shared value
//! orbits, and aggregating the pairs `(P, Q)` with `f(P) = g(Q)` into
//! classes.
//!
//! The genus formulas are double sums over all values of the line, but every
//! summand vanishes unless the value is a branch value of the relevant side,
//! so finite orbit lists suffice.  One [`PairClass`] stands for all
//! geometric pairs over one value orbit sharing the index pair
//! `(e_f, e_g)`; its `pair_count` makes the class-level sum equal the
//! geometric one.

use num_integer::Integer;
use thiserror::Error;

use crate::ramification::{
    critical_orbits, fiber_profile, RamError, RamPortrait, RationalMap, ValueOrbit,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PairError {
    #[error(
        "branch values of {side} cannot be enumerated: the map is \
         inseparable, so every value of the line is a wild branch value"
    )]
    InseparableSide { side: &'static str },
    #[error(
        "the characteristic divides gcd({e_f}, {e_g}), so the number of \
         fiber-product points over this pair is not determined"
    )]
    WildGcd { e_f: u32, e_g: u32 },
    #[error(transparent)]
    Ram(#[from] RamError),
}

/// Which value orbits to enumerate for a pair of maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueSelector {
    /// Branch values of the first map.
    BranchOfF,
    /// Branch values of the second map.
    BranchOfG,
    /// Branch values of either map.
    Union,
    /// Branch values of both maps (the set the wild-side formula iterates;
    /// an inseparable side branches everywhere, so the intersection is then
    /// the other side's list).
    CommonBranch,
}

/// All geometric pairs `(P, Q)` with `f(P) = g(Q)` lying over one value
/// orbit and sharing the ramification index pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairClass {
    pub value: ValueOrbit,
    pub e_f: u32,
    pub e_g: u32,
    /// Number of geometric pairs over ALL roots of the value orbit.
    pub pair_count: u64,
}

/// Local structure of the fiber product over one geometric pair `(P, Q)`,
/// valid when the characteristic does not divide `gcd(e_f, e_g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberPointStructure {
    /// Number of fiber-product points lying over the pair.
    pub point_count: u32,
    /// Ramification index of each such point over `P` (the source of `f`).
    pub e_over_a: u32,
    /// Ramification index over `Q` (the source of `g`).
    pub e_over_b: u32,
    /// Ramification index over the shared value; the least common multiple.
    pub e_over_d: u32,
}

/// The deduplicated value orbits selected from the branch loci of `f` and
/// `g`, in canonical order.
pub fn value_orbit_union(
    f: &RationalMap,
    g: &RationalMap,
    selector: ValueSelector,
    seed: u64,
) -> Result<Vec<ValueOrbit>, PairError> {
    assert_eq!(f.field(), g.field(), "maps must share a ground field");
    let pf = portrait_or_inseparable(f, seed)?;
    let pg = portrait_or_inseparable(g, seed)?;
    union_from_portraits(selector, pf.as_ref(), pg.as_ref())
}

/// `Some(portrait)` for a separable map, `None` for an inseparable one.
pub(crate) fn portrait_or_inseparable(
    map: &RationalMap,
    seed: u64,
) -> Result<Option<RamPortrait>, RamError> {
    match critical_orbits(map, seed) {
        Ok(p) => Ok(Some(p)),
        Err(RamError::InseparableMap) => Ok(None),
        Err(e) => Err(e),
    }
}

pub(crate) fn union_from_portraits(
    selector: ValueSelector,
    pf: Option<&RamPortrait>,
    pg: Option<&RamPortrait>,
) -> Result<Vec<ValueOrbit>, PairError> {
    let enumerate = |p: Option<&RamPortrait>, side| {
        p.map(|p| p.branch_values())
            .ok_or(PairError::InseparableSide { side })
    };
    let mut out = match selector {
        ValueSelector::BranchOfF => enumerate(pf, "f")?,
        ValueSelector::BranchOfG => enumerate(pg, "g")?,
        ValueSelector::Union => {
            let mut v = enumerate(pf, "f")?;
            v.extend(enumerate(pg, "g")?);
            v
        }
        ValueSelector::CommonBranch => match (pf, pg) {
            (None, None) => return Err(PairError::InseparableSide { side: "f" }),
            // An inseparable side branches everywhere: the intersection is
            // the other side's branch locus.
            (None, Some(pg)) => pg.branch_values(),
            (Some(pf), None) => pf.branch_values(),
            (Some(pf), Some(pg)) => {
                let of_g = pg.branch_values();
                pf.branch_values()
                    .into_iter()
                    .filter(|v| of_g.contains(v))
                    .collect()
            }
        },
    };
    out.sort_by(|a, b| a.canonical_cmp(b));
    out.dedup();
    Ok(out)
}

/// Crosses the fiber profiles of `f` and `g` over each given orbit: one
/// class per index pair, with `pair_count = deg(R) · (points per root on the
/// f side) · (points per root on the g side)`.
pub fn pair_classes(
    f: &RationalMap,
    g: &RationalMap,
    orbits: &[ValueOrbit],
    seed: u64,
) -> Result<Vec<PairClass>, RamError> {
    assert_eq!(f.field(), g.field(), "maps must share a ground field");
    let mut classes = Vec::new();
    for value in orbits {
        let prof_f = fiber_profile(f, value, seed)?;
        let prof_g = fiber_profile(g, value, seed)?;
        let d = value.degree() as u64;
        for ef in &prof_f.entries {
            for eg in &prof_g.entries {
                classes.push(PairClass {
                    value: value.clone(),
                    e_f: ef.e,
                    e_g: eg.e,
                    pair_count: d
                        * ef.points_per_root as u64
                        * eg.points_per_root as u64,
                });
            }
        }
    }
    Ok(classes)
}

/// Whether some value orbit is a wildly ramified branch value of both maps
/// (always false in characteristic zero).  An inseparable map counts as
/// wildly branched at every value.
pub fn wild_overlap(f: &RationalMap, g: &RationalMap, seed: u64) -> Result<bool, RamError> {
    Ok(common_wild_value(f, g, seed)?.is_some())
}

/// A witness orbit for [`wild_overlap`]: some value orbit wildly branched on
/// both sides, in canonical order where a choice exists, or `None` when the
/// maps have no common wild branch value.
pub fn common_wild_value(
    f: &RationalMap,
    g: &RationalMap,
    seed: u64,
) -> Result<Option<ValueOrbit>, RamError> {
    assert_eq!(f.field(), g.field(), "maps must share a ground field");
    if f.field().characteristic() == num_traits::Zero::zero() {
        return Ok(None);
    }
    let pf = portrait_or_inseparable(f, seed)?;
    let pg = portrait_or_inseparable(g, seed)?;
    Ok(common_wild_from_portraits(f, pf.as_ref(), pg.as_ref()))
}

pub(crate) fn common_wild_from_portraits(
    f: &RationalMap,
    pf: Option<&RamPortrait>,
    pg: Option<&RamPortrait>,
) -> Option<ValueOrbit> {
    match (pf, pg) {
        // Both inseparable: every value is a common wild branch value; name
        // the image of the origin as a concrete witness.
        (None, None) => Some(match f.value_at_element(&f.field().zero()) {
            Some(beta) => ValueOrbit::rational_point(&beta),
            None => ValueOrbit::Infinity,
        }),
        (None, Some(p)) | (Some(p), None) => p.wild_branch_values.first().cloned(),
        (Some(pf), Some(pg)) => pf
            .wild_branch_values
            .iter()
            .find(|v| pg.wild_branch_values.contains(v))
            .cloned(),
    }
}

/// The local structure of the fiber product over one geometric pair of a
/// class: how many points lie there and with which indices over each side.
///
/// Requires the characteristic not to divide `gcd(e_f, e_g)` (equivalently,
/// at least one side is tame at the pair); outside that hypothesis the
/// count is not determined by the indices alone and an error is returned.
pub fn fiber_point_structure(
    f: &RationalMap,
    g: &RationalMap,
    class: &PairClass,
) -> Result<FiberPointStructure, PairError> {
    assert_eq!(f.field(), g.field(), "maps must share a ground field");
    let n = class.e_f.gcd(&class.e_g);
    if crate::ramification::char_divides(f.field(), n) {
        return Err(PairError::WildGcd {
            e_f: class.e_f,
            e_g: class.e_g,
        });
    }
    Ok(FiberPointStructure {
        point_count: n,
        e_over_a: class.e_g / n,
        e_over_b: class.e_f / n,
        e_over_d: class.e_f / n * class.e_g,
    })
}
