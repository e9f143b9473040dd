//! Rational self-maps of the projective line and their ramification data:
//! degree, separability, ramification indices, critical orbits, branch
//! values, and fiber profiles.
//!
//! Points of the line over the algebraic closure are never materialized as
//! algebraic numbers.  A point (or value) is a Galois orbit: a monic
//! irreducible polynomial over the ground field, or the distinguished point
//! at infinity.  Every quantity the genus formulas consume — ramification
//! indices, fiber shapes, branch values — is constant along an orbit, so
//! per-orbit bookkeeping loses nothing and stays exact.
//!
//! To compute at a finite orbit `u`, the engine builds the quotient field
//! `K[z]/(u)` and works with the residue of `z` as a genuine root of `u`.
//! Degree-1 orbits take the same path (the quotient is a copy of `K`), which
//! keeps rational points and irrational orbits on one code path.

use std::cmp::Ordering;

use num_traits::Zero;
use thiserror::Error;

use crate::factor::{self, FactorError};
use crate::field::{Elem, Field};
use crate::poly::{resultant_x, Poly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("the denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("the map is constant after cancellation")]
    ConstantMap,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RamError {
    #[error(
        "the map is inseparable (its derivative vanishes identically), \
         so every point is wildly ramified and critical orbits cannot be \
         enumerated"
    )]
    InseparableMap,
    #[error(transparent)]
    Factor(#[from] FactorError),
}

/// A nonconstant rational self-map of the projective line, stored as a
/// reduced fraction `N/D` with `gcd(N, D) = 1` and `D` monic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMap {
    numer: Poly,
    denom: Poly,
}

impl RationalMap {
    /// Builds the map `numer/denom`, cancelling common factors and
    /// normalizing the denominator monic.
    ///
    /// # Panics
    /// Panics if the two polynomials live over different fields.
    pub fn new(numer: Poly, denom: Poly) -> Result<RationalMap, MapError> {
        assert_eq!(
            numer.field(),
            denom.field(),
            "numerator and denominator must share a coefficient field"
        );
        if denom.is_zero() {
            return Err(MapError::ZeroDenominator);
        }
        let g = numer.gcd(&denom);
        let (mut numer, mut denom) = if g.degree() == Some(0) {
            (numer, denom)
        } else {
            (numer.exact_div(&g), denom.exact_div(&g))
        };
        let scale = denom.lc().inv().expect("nonzero leading coefficient");
        numer = numer.mul_elem(&scale);
        denom = denom.mul_elem(&scale);
        let degree = numer.degree().unwrap_or(0).max(denom.degree().unwrap());
        if degree == 0 {
            return Err(MapError::ConstantMap);
        }
        Ok(RationalMap { numer, denom })
    }

    /// The polynomial map `p / 1`.
    pub fn from_polynomial(p: Poly) -> Result<RationalMap, MapError> {
        let one = Poly::one(p.field());
        RationalMap::new(p, one)
    }

    pub fn numer(&self) -> &Poly {
        &self.numer
    }

    pub fn denom(&self) -> &Poly {
        &self.denom
    }

    pub fn field(&self) -> &Field {
        self.numer.field()
    }

    /// The degree of the map: `max(deg N, deg D)`, always at least 1.
    pub fn degree(&self) -> usize {
        self.numer
            .degree()
            .unwrap_or(0)
            .max(self.denom.degree().unwrap())
    }

    /// Whether the denominator is trivial (the map is a polynomial).
    pub fn is_polynomial(&self) -> bool {
        self.denom.degree() == Some(0)
    }

    /// The numerator of the derivative of `N/D`, namely `N'D - ND'`.  The
    /// map is separable exactly when this is not the zero polynomial.
    pub fn derivative_numerator(&self) -> Poly {
        &(&self.numer.derivative() * &self.denom) - &(&self.numer * &self.denom.derivative())
    }

    /// False exactly when the map factors through the Frobenius power map
    /// (possible only in positive characteristic).
    pub fn is_separable(&self) -> bool {
        !self.derivative_numerator().is_zero()
    }

    /// The map `x -> self(1/x)`, which moves the point at infinity to the
    /// origin.  Reversal at the full degree keeps the degree unchanged.
    pub fn flip(&self) -> RationalMap {
        let m = self.degree();
        RationalMap::new(self.numer.reverse(m), self.denom.reverse(m))
            .expect("flip preserves nonconstancy")
    }

    /// The composite `self(inner(x))`.
    pub fn compose(&self, inner: &RationalMap) -> Result<RationalMap, MapError> {
        let field = self.field();
        assert_eq!(field, inner.field(), "composition needs one common field");
        let m = self.degree();
        // Homogenize: sum_k coeff_k * Ni^k * Di^(m-k) for both N and D.
        let mut ni_pow = vec![Poly::one(field)];
        let mut di_pow = vec![Poly::one(field)];
        for k in 1..=m {
            ni_pow.push(&ni_pow[k - 1] * &inner.numer);
            di_pow.push(&di_pow[k - 1] * &inner.denom);
        }
        let homogenize = |p: &Poly| {
            let mut acc = Poly::zero(field);
            for (k, c) in p.coeffs().iter().enumerate() {
                acc = &acc + &(&ni_pow[k] * &di_pow[m - k]).mul_elem(c);
            }
            acc
        };
        RationalMap::new(homogenize(&self.numer), homogenize(&self.denom))
    }

    /// Evaluates the map at a field element (possibly in an extension of the
    /// coefficient field); `None` at a pole.
    pub fn value_at_element(&self, zeta: &Elem) -> Option<Elem> {
        let target = zeta.field();
        let d = self.denom.coerce(target).eval(zeta);
        if d.is_zero() {
            return None;
        }
        Some(&self.numer.coerce(target).eval(zeta) / &d)
    }

    /// Renders the map with the given variable name, e.g. `x^2 - 1` or
    /// `(x^2 + 1)/(x - 2)`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_polynomial() {
            self.numer.display_with(var)
        } else {
            format!(
                "({})/({})",
                self.numer.display_with(var),
                self.denom.display_with(var)
            )
        }
    }
}

impl std::fmt::Display for RationalMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

/// A Galois orbit of points of the projective line over the algebraic
/// closure: a monic irreducible polynomial over the ground field, or the
/// point at infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointOrbit {
    Finite(Poly),
    Infinity,
}

/// Orbits in the target line (possible values of a map); same shape as
/// [`PointOrbit`], aliased for readability at call sites.
pub type ValueOrbit = PointOrbit;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrbitError {
    #[error("an orbit polynomial must be monic and nonconstant")]
    NotMonicNonconstant,
    #[error("the polynomial is reducible, so it defines several orbits")]
    Reducible,
    #[error(transparent)]
    Factor(#[from] FactorError),
}

impl PointOrbit {
    /// Checked constructor for a finite orbit: `u` must be monic and
    /// irreducible over its coefficient field.
    pub fn finite(u: Poly, seed: u64) -> Result<PointOrbit, OrbitError> {
        if !u.is_monic() || u.degree() == Some(0) {
            return Err(OrbitError::NotMonicNonconstant);
        }
        if u.degree() == Some(1) || factor::is_irreducible(&u, seed)? {
            Ok(PointOrbit::Finite(u))
        } else {
            Err(OrbitError::Reducible)
        }
    }

    /// The orbit of a single rational point `c`: the linear polynomial
    /// `z - c`.
    pub fn rational_point(c: &Elem) -> PointOrbit {
        PointOrbit::Finite(Poly::new(c.field(), vec![-c, c.field().one()]))
    }

    /// Internal constructor for polynomials already known irreducible
    /// (typically factors returned by the factorization engine).
    pub(crate) fn from_irreducible(u: Poly) -> PointOrbit {
        debug_assert!(u.is_monic() && u.degree().map_or(false, |d| d >= 1));
        PointOrbit::Finite(u)
    }

    /// Number of geometric points in the orbit (degree of the defining
    /// polynomial; 1 for infinity).
    pub fn degree(&self) -> usize {
        match self {
            PointOrbit::Finite(u) => u.degree().unwrap(),
            PointOrbit::Infinity => 1,
        }
    }

    /// For a degree-1 orbit `z - c`, the rational point `c`.
    pub fn root(&self) -> Option<Elem> {
        match self {
            PointOrbit::Finite(u) if u.degree() == Some(1) => Some(-&u.coeff(0)),
            _ => None,
        }
    }

    /// The defining polynomial rendered with the given variable, or `inf`.
    pub fn label(&self, var: &str) -> String {
        match self {
            PointOrbit::Finite(u) => u.display_with(var),
            PointOrbit::Infinity => "inf".to_string(),
        }
    }

    /// Total order used everywhere orbits are listed: finite orbits first
    /// (by degree, then coefficients), infinity last.
    pub fn canonical_cmp(&self, other: &PointOrbit) -> Ordering {
        match (self, other) {
            (PointOrbit::Finite(a), PointOrbit::Finite(b)) => a.canonical_cmp(b),
            (PointOrbit::Finite(_), PointOrbit::Infinity) => Ordering::Less,
            (PointOrbit::Infinity, PointOrbit::Finite(_)) => Ordering::Greater,
            (PointOrbit::Infinity, PointOrbit::Infinity) => Ordering::Equal,
        }
    }
}

/// One ramified orbit of a map: where, how hard, and onto which value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PortraitEntry {
    pub point: PointOrbit,
    pub e: u32,
    pub value: ValueOrbit,
}

/// The full ramification portrait of a separable map: every orbit with
/// ramification index at least 2, plus the derived classification flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamPortrait {
    pub entries: Vec<PortraitEntry>,
    /// Always true for portraits built by [`critical_orbits`]; inseparable
    /// maps have no finite portrait.
    pub separable: bool,
    /// True when the characteristic divides no ramification index anywhere
    /// (always true in characteristic zero).
    pub tame: bool,
    /// Images of the orbits whose index is divisible by the characteristic,
    /// deduplicated, in canonical order.
    pub wild_branch_values: Vec<ValueOrbit>,
}

impl RamPortrait {
    /// The branch values: images of all ramified orbits, deduplicated, in
    /// canonical order.
    pub fn branch_values(&self) -> Vec<ValueOrbit> {
        let mut vals: Vec<ValueOrbit> = self.entries.iter().map(|en| en.value.clone()).collect();
        sort_dedup_orbits(&mut vals);
        vals
    }
}

fn sort_dedup_orbits(vals: &mut Vec<ValueOrbit>) {
    vals.sort_by(|a, b| a.canonical_cmp(b));
    vals.dedup();
}

/// One ramification class of a fiber: all points sharing the index `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberEntry {
    pub e: u32,
    /// Number of geometric points with this index lying over EACH single
    /// root of the value orbit (fibers over conjugate roots are conjugate).
    pub points_per_root: usize,
}

/// The shape of the fiber of a map over one value orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberProfile {
    pub value: ValueOrbit,
    pub degree_of_value_orbit: usize,
    pub entries: Vec<FiberEntry>,
}

impl FiberProfile {
    /// Total multiplicity over one root of the value orbit; always equals
    /// the degree of the map.
    pub fn mass_per_root(&self) -> usize {
        self.entries
            .iter()
            .map(|en| en.e as usize * en.points_per_root)
            .sum()
    }
}

/// The ramification index of the map at the given point orbit (constant on
/// the orbit).  Unramified points give 1.
///
/// The index is the multiplicity of the point as a root of `N - f(P)·D` (of
/// `D` itself at a pole), computed by repeated exact division so that wild
/// indices in small characteristic come out right.
pub fn ram_index(map: &RationalMap, point: &PointOrbit) -> u32 {
    match point {
        PointOrbit::Infinity => {
            let flipped = map.flip();
            let origin = PointOrbit::from_irreducible(Poly::var(map.field()));
            ram_index(&flipped, &origin)
        }
        PointOrbit::Finite(u) => {
            let ku = Field::extend_unchecked(map.field(), u);
            let zeta = ku.adjoined_root();
            let dz = map.denom().coerce(&ku);
            if dz.eval(&zeta).is_zero() {
                return map.denom().multiplicity_at(&zeta);
            }
            let beta = map
                .value_at_element(&zeta)
                .expect("denominator is nonzero here");
            let shifted = &map.numer().coerce(&ku) - &dz.mul_elem(&beta);
            shifted.multiplicity_at(&zeta)
        }
    }
}

/// The image of a point orbit: the value orbit of `f(P)`.
///
/// For a finite orbit of degree at least 2, the image is read off the
/// resultant of `u(x)` and `N(x) - t·D(x)` with respect to `x`: its radical
/// is a power of a single irreducible polynomial in `t` (conjugate points
/// have conjugate values), and that polynomial defines the orbit.
pub fn image_value(
    map: &RationalMap,
    point: &PointOrbit,
    seed: u64,
) -> Result<ValueOrbit, RamError> {
    let field = map.field();
    match point {
        PointOrbit::Infinity => {
            let dn = map.numer().degree().unwrap_or(0);
            let dd = map.denom().degree().unwrap();
            Ok(match dn.cmp(&dd) {
                Ordering::Greater => ValueOrbit::Infinity,
                Ordering::Less => ValueOrbit::rational_point(&field.zero()),
                // D is monic, so the value at infinity is lc(N) itself.
                Ordering::Equal => ValueOrbit::rational_point(&map.numer().lc()),
            })
        }
        PointOrbit::Finite(u) => {
            if map.denom().divrem(u).1.is_zero() {
                return Ok(ValueOrbit::Infinity);
            }
            if let Some(zeta) = point.root() {
                let beta = map
                    .value_at_element(&zeta)
                    .expect("u does not divide the denominator");
                return Ok(ValueOrbit::rational_point(&beta));
            }
            // Entries of the Sylvester setup are polynomials in t: u(x) has
            // constant entries, N(x) - t·D(x) has linear ones.
            let t = Poly::var(field);
            let a: Vec<Poly> = u.coeffs().iter().map(|c| Poly::constant(c.clone())).collect();
            let b: Vec<Poly> = (0..=map.degree())
                .map(|i| {
                    &Poly::constant(map.numer().coeff(i)) - &(&t).mul_elem(&map.denom().coeff(i))
                })
                .collect();
            let res = resultant_x(&a, &b, field);
            assert!(!res.is_zero(), "resultant vanishes only on shared factors");
            let fac = factor::factor(&res, seed)?;
            assert_eq!(
                fac.factors.len(),
                1,
                "conjugate points must map onto a single value orbit"
            );
            Ok(ValueOrbit::from_irreducible(fac.factors[0].0.clone()))
        }
    }
}

/// The ramification portrait of a separable map: every orbit with index at
/// least 2, each with its image value orbit.
///
/// Finite candidates are the irreducible factors of `W·D` where `W` is the
/// derivative numerator: zeros of `W` catch all finite critical points with
/// index not divisible by the characteristic AND the wild ones (where the
/// local order of `W` is at least `e`), while factors of `D` cover multiple
/// poles uniformly.  Infinity is always probed directly.
pub fn critical_orbits(map: &RationalMap, seed: u64) -> Result<RamPortrait, RamError> {
    let w = map.derivative_numerator();
    if w.is_zero() {
        return Err(RamError::InseparableMap);
    }
    let candidates_poly = &w * map.denom();
    let mut entries = Vec::new();
    for (u, _) in factor::factor(&candidates_poly, seed)?.factors {
        let point = PointOrbit::from_irreducible(u);
        let e = ram_index(map, &point);
        if e >= 2 {
            let value = image_value(map, &point, seed)?;
            entries.push(PortraitEntry { point, e, value });
        }
    }
    let e_inf = ram_index(map, &PointOrbit::Infinity);
    if e_inf >= 2 {
        let value = image_value(map, &PointOrbit::Infinity, seed)?;
        entries.push(PortraitEntry {
            point: PointOrbit::Infinity,
            e: e_inf,
            value,
        });
    }
    entries.sort_by(|a, b| a.point.canonical_cmp(&b.point));
    let tame = entries.iter().all(|en| !char_divides(map.field(), en.e));
    let mut wild_branch_values: Vec<ValueOrbit> = entries
        .iter()
        .filter(|en| char_divides(map.field(), en.e))
        .map(|en| en.value.clone())
        .collect();
    sort_dedup_orbits(&mut wild_branch_values);
    Ok(RamPortrait {
        entries,
        separable: true,
        tame,
        wild_branch_values,
    })
}

/// The shape of the fiber of the map over a value orbit: how many points
/// carry each ramification index, per root of the orbit.
///
/// Over a finite orbit `w` with residue root `beta`, the fiber points are
/// the roots of `N - beta·D` over `K[z]/(w)`, grouped by multiplicity; the
/// point at infinity joins the fiber when the degree of `N - beta·D` drops
/// below the degree of the map.  Over infinity, the fiber is the zeros of
/// `D` plus possibly infinity itself.
pub fn fiber_profile(
    map: &RationalMap,
    value: &ValueOrbit,
    seed: u64,
) -> Result<FiberProfile, RamError> {
    let m = map.degree();
    let mut raw: Vec<(u32, usize)> = Vec::new();
    let degree_of_value_orbit = value.degree();
    match value {
        ValueOrbit::Infinity => {
            if map.denom().degree().unwrap() >= 1 {
                for (part, e) in factor::multiplicity_profile(map.denom(), seed)? {
                    raw.push((e, part.degree().unwrap()));
                }
            }
            let dn = map.numer().degree().unwrap_or(0);
            let dd = map.denom().degree().unwrap();
            if dn > dd {
                raw.push(((dn - dd) as u32, 1));
            }
        }
        ValueOrbit::Finite(w) => {
            let kw = Field::extend_unchecked(map.field(), w);
            let beta = kw.adjoined_root();
            let a = &map.numer().coerce(&kw) - &map.denom().coerce(&kw).mul_elem(&beta);
            assert!(!a.is_zero(), "a nonconstant map never collapses to a value");
            let deg_a = a.degree().unwrap_or(0);
            if deg_a >= 1 {
                for (part, e) in factor::multiplicity_profile(&a, seed)? {
                    raw.push((e, part.degree().unwrap()));
                }
            }
            if m > deg_a {
                raw.push(((m - deg_a) as u32, 1));
            }
        }
    }
    // Merge classes sharing an index (infinity may align with finite points).
    raw.sort_by_key(|&(e, _)| e);
    let mut entries: Vec<FiberEntry> = Vec::new();
    for (e, ppr) in raw {
        match entries.last_mut() {
            Some(last) if last.e == e => last.points_per_root += ppr,
            _ => entries.push(FiberEntry { e, points_per_root: ppr }),
        }
    }
    let profile = FiberProfile {
        value: value.clone(),
        degree_of_value_orbit,
        entries,
    };
    assert_eq!(
        profile.mass_per_root(),
        m,
        "fiber mass must equal the degree of the map"
    );
    Ok(profile)
}

/// Does the characteristic of the field divide `e`?  Always false in
/// characteristic zero; used by every tame/wild classification.
pub(crate) fn char_divides(field: &Field, e: u32) -> bool {
    let p = field.characteristic();
    if p.is_zero() {
        return false;
    }
    (num_bigint::BigUint::from(e) % &p).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q() -> Field {
        Field::rationals()
    }

    fn qmap(n: &[i64], d: &[i64]) -> RationalMap {
        let f = q();
        RationalMap::new(Poly::from_ints(&f, n), Poly::from_ints(&f, d)).unwrap()
    }

    fn rational_orbit(num: i64, den: i64) -> ValueOrbit {
        let f = q();
        ValueOrbit::rational_point(&f.from_ratio(BigRational::new(
            BigInt::from(num),
            BigInt::from(den),
        )))
    }

    #[test]
    fn construction_normalizes_and_rejects() {
        // (x^2 - 1)/(x - 1) cancels to x + 1.
        let m = qmap(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(m.numer(), &Poly::from_ints(&q(), &[1, 1]));
        assert!(m.is_polynomial());
        assert_eq!(m.degree(), 1);

        // 2x/2 normalizes the denominator monic.
        let m = qmap(&[0, 2], &[2]);
        assert_eq!(m.numer(), &Poly::from_ints(&q(), &[0, 1]));

        let f = q();
        assert_eq!(
            RationalMap::new(Poly::from_ints(&f, &[1]), Poly::zero(&f)),
            Err(MapError::ZeroDenominator)
        );
        assert_eq!(
            RationalMap::new(Poly::from_ints(&f, &[5]), Poly::one(&f)),
            Err(MapError::ConstantMap)
        );
        // x/x cancels to a constant.
        assert_eq!(
            RationalMap::new(Poly::var(&f), Poly::var(&f)),
            Err(MapError::ConstantMap)
        );
    }

    #[test]
    fn separability_detects_frobenius_factors() {
        let f3 = Field::prime(3);
        let cube = RationalMap::from_polynomial(Poly::from_ints(&f3, &[0, 0, 0, 1])).unwrap();
        assert!(!cube.is_separable());
        let artin = RationalMap::from_polynomial(Poly::from_ints(&f3, &[0, -1, 0, 1])).unwrap();
        assert!(artin.is_separable());
        let anything_rational = qmap(&[0, 0, 0, 1], &[1]);
        assert!(anything_rational.is_separable());
    }

    #[test]
    fn ram_index_worked_examples() {
        // f = x^2(x - 1) = x^3 - x^2.
        let f = qmap(&[0, 0, -1, 1], &[1]);
        let zero = PointOrbit::rational_point(&q().zero());
        let one = PointOrbit::rational_point(&q().one());
        assert_eq!(ram_index(&f, &zero), 2);
        assert_eq!(ram_index(&f, &one), 1);
        assert_eq!(ram_index(&f, &PointOrbit::Infinity), 3);

        // A double pole: 1/x^2 at the origin.
        let inv_sq = qmap(&[1], &[0, 0, 1]);
        assert_eq!(ram_index(&inv_sq, &zero), 2);
        assert_eq!(ram_index(&inv_sq, &PointOrbit::Infinity), 2);
    }

    #[test]
    fn ram_index_is_wild_degree_at_infinity_for_additive_maps() {
        for p in [2u64, 3, 5] {
            let fp = Field::prime(p);
            let x = Poly::var(&fp);
            let map = RationalMap::from_polynomial(&x.pow(p as u32) - &x).unwrap();
            assert_eq!(ram_index(&map, &PointOrbit::Infinity), p as u32);
        }
    }

    #[test]
    fn ram_index_at_quadratic_orbit() {
        // f = (x^2 - 2)^2 + 7 ramifies with index 2 along the orbit of
        // x^2 - 2 (both points +-sqrt(2) are double).
        let f = q();
        let u = Poly::from_ints(&f, &[-2, 0, 1]);
        let map = RationalMap::from_polynomial(&(&u * &u) + &Poly::from_ints(&f, &[7])).unwrap();
        let orbit = PointOrbit::finite(u, 0).unwrap();
        assert_eq!(ram_index(&map, &orbit), 2);
    }

    #[test]
    fn image_value_examples() {
        let f = q();
        let sq = qmap(&[0, 0, 1], &[1]);
        // Orbit of +-sqrt(2) maps to the rational value 2.
        let orbit2 = PointOrbit::finite(Poly::from_ints(&f, &[-2, 0, 1]), 0).unwrap();
        assert_eq!(image_value(&sq, &orbit2, 0).unwrap(), rational_orbit(2, 1));
        // Orbit of +-i maps to -1.
        let orbit_i = PointOrbit::finite(Poly::from_ints(&f, &[1, 0, 1]), 0).unwrap();
        assert_eq!(
            image_value(&sq, &orbit_i, 0).unwrap(),
            rational_orbit(-1, 1)
        );
        // 1/x: the origin is a pole; infinity maps to 0.
        let inv = qmap(&[1], &[0, 1]);
        let zero_orbit = PointOrbit::rational_point(&f.zero());
        assert_eq!(
            image_value(&inv, &zero_orbit, 0).unwrap(),
            ValueOrbit::Infinity
        );
        assert_eq!(
            image_value(&inv, &PointOrbit::Infinity, 0).unwrap(),
            rational_orbit(0, 1)
        );
        // Degree-balanced map: value at infinity is the leading coefficient.
        let balanced = qmap(&[1, 0, 2], &[0, 0, 1]);
        assert_eq!(
            image_value(&balanced, &PointOrbit::Infinity, 0).unwrap(),
            rational_orbit(2, 1)
        );
        assert_eq!(
            image_value(&sq, &PointOrbit::Infinity, 0).unwrap(),
            ValueOrbit::Infinity
        );
    }

    #[test]
    fn image_of_irrational_orbit_can_stay_irrational() {
        // f = x^5 - x at the critical orbit x^4 - 1/5: with z^4 = 1/5 the
        // value is -4z/5, whose fourth power is 256/3125.
        let f = q();
        let x = Poly::var(&f);
        let map = RationalMap::from_polynomial(&x.pow(5) - &x).unwrap();
        let u = Poly::new(
            &f,
            vec![
                f.from_ratio(BigRational::new(BigInt::from(-1), BigInt::from(5))),
                f.zero(),
                f.zero(),
                f.zero(),
                f.one(),
            ],
        );
        let orbit = PointOrbit::finite(u, 0).unwrap();
        let expected = Poly::new(
            &f,
            vec![
                f.from_ratio(BigRational::new(BigInt::from(-256), BigInt::from(3125))),
                f.zero(),
                f.zero(),
                f.zero(),
                f.one(),
            ],
        );
        assert_eq!(
            image_value(&map, &orbit, 0).unwrap(),
            ValueOrbit::Finite(expected)
        );
    }

    #[test]
    fn portrait_of_cubic_with_two_finite_critical_points() {
        // f = x^3 - 3x: critical points +-1 with values -+2, plus infinity.
        let map = qmap(&[0, -3, 0, 1], &[1]);
        let portrait = critical_orbits(&map, 0).unwrap();
        let f = q();
        let expect = vec![
            PortraitEntry {
                point: PointOrbit::Finite(Poly::from_ints(&f, &[-1, 1])),
                e: 2,
                value: rational_orbit(-2, 1),
            },
            PortraitEntry {
                point: PointOrbit::Finite(Poly::from_ints(&f, &[1, 1])),
                e: 2,
                value: rational_orbit(2, 1),
            },
            PortraitEntry {
                point: PointOrbit::Infinity,
                e: 3,
                value: ValueOrbit::Infinity,
            },
        ];
        assert_eq!(portrait.entries, expect);
        assert!(portrait.tame && portrait.separable);
        assert!(portrait.wild_branch_values.is_empty());
        // Canonical order compares defining polynomials: t - 2 sorts ahead
        // of t + 2.
        assert_eq!(
            portrait.branch_values(),
            vec![rational_orbit(2, 1), rational_orbit(-2, 1), ValueOrbit::Infinity]
        );
    }

    #[test]
    fn portrait_of_power_map() {
        let map = qmap(&[0, 0, 0, 0, 1], &[1]);
        let portrait = critical_orbits(&map, 0).unwrap();
        assert_eq!(portrait.entries.len(), 2);
        assert_eq!(portrait.entries[0].point, PointOrbit::Finite(Poly::var(&q())));
        assert_eq!(portrait.entries[0].e, 4);
        assert_eq!(portrait.entries[0].value, rational_orbit(0, 1));
        assert_eq!(portrait.entries[1].point, PointOrbit::Infinity);
        assert_eq!(portrait.entries[1].e, 4);
        assert_eq!(portrait.entries[1].value, ValueOrbit::Infinity);
    }

    #[test]
    fn portrait_flags_wild_ramification() {
        // x^3 - x over F_3 is unramified at finite points but totally wild
        // at infinity.
        let f3 = Field::prime(3);
        let map = RationalMap::from_polynomial(Poly::from_ints(&f3, &[0, -1, 0, 1])).unwrap();
        let portrait = critical_orbits(&map, 0).unwrap();
        assert_eq!(
            portrait.entries,
            vec![PortraitEntry {
                point: PointOrbit::Infinity,
                e: 3,
                value: ValueOrbit::Infinity,
            }]
        );
        assert!(!portrait.tame);
        assert_eq!(portrait.wild_branch_values, vec![ValueOrbit::Infinity]);
    }

    #[test]
    fn inseparable_maps_are_rejected() {
        let f3 = Field::prime(3);
        let cube = RationalMap::from_polynomial(Poly::from_ints(&f3, &[0, 0, 0, 1])).unwrap();
        assert_eq!(critical_orbits(&cube, 0), Err(RamError::InseparableMap));
    }

    #[test]
    fn fiber_profiles_worked_examples() {
        // f = x^2(x-1) over 0: a double point at 0 and a simple point at 1.
        let map = qmap(&[0, 0, -1, 1], &[1]);
        let over_zero = fiber_profile(&map, &rational_orbit(0, 1), 0).unwrap();
        assert_eq!(
            over_zero.entries,
            vec![
                FiberEntry { e: 1, points_per_root: 1 },
                FiberEntry { e: 2, points_per_root: 1 },
            ]
        );
        let over_inf = fiber_profile(&map, &ValueOrbit::Infinity, 0).unwrap();
        assert_eq!(
            over_inf.entries,
            vec![FiberEntry { e: 3, points_per_root: 1 }]
        );
        // g = y^2 over -4/27: squarefree fiber, two simple points.
        let sq = qmap(&[0, 0, 1], &[1]);
        let over_val = fiber_profile(&sq, &rational_orbit(-4, 27), 0).unwrap();
        assert_eq!(
            over_val.entries,
            vec![FiberEntry { e: 1, points_per_root: 2 }]
        );
        assert_eq!(over_val.degree_of_value_orbit, 1);
    }

    #[test]
    fn fiber_profile_over_a_degree_four_orbit() {
        // f = x^5 - x over its degree-4 branch orbit: per root, one double
        // point and three simple ones.
        let f = q();
        let x = Poly::var(&f);
        let map = RationalMap::from_polynomial(&x.pow(5) - &x).unwrap();
        let portrait = critical_orbits(&map, 0).unwrap();
        let w = portrait
            .entries
            .iter()
            .find(|en| matches!(en.point, PointOrbit::Finite(_)))
            .unwrap()
            .value
            .clone();
        assert_eq!(w.degree(), 4);
        let profile = fiber_profile(&map, &w, 0).unwrap();
        assert_eq!(
            profile.entries,
            vec![
                FiberEntry { e: 1, points_per_root: 3 },
                FiberEntry { e: 2, points_per_root: 1 },
            ]
        );
        assert_eq!(profile.degree_of_value_orbit, 4);
        assert_eq!(profile.mass_per_root(), 5);
    }

    #[test]
    fn fiber_profile_includes_infinity_when_degree_drops() {
        // f = (x^2 + 1)/x over the value 0: roots of x^2 + 1 only; over
        // infinity: simple pole at 0 plus the point at infinity itself.
        let map = qmap(&[1, 0, 1], &[0, 1]);
        let over_zero = fiber_profile(&map, &rational_orbit(0, 1), 0).unwrap();
        assert_eq!(
            over_zero.entries,
            vec![FiberEntry { e: 1, points_per_root: 2 }]
        );
        let over_inf = fiber_profile(&map, &ValueOrbit::Infinity, 0).unwrap();
        assert_eq!(
            over_inf.entries,
            vec![FiberEntry { e: 1, points_per_root: 2 }]
        );

        // Degree-1 map 1/x over 0: only the point at infinity lies there.
        let inv = qmap(&[1], &[0, 1]);
        let profile = fiber_profile(&inv, &rational_orbit(0, 1), 0).unwrap();
        assert_eq!(
            profile.entries,
            vec![FiberEntry { e: 1, points_per_root: 1 }]
        );
    }

    #[test]
    fn flip_consistency_at_infinity() {
        let map = qmap(&[3, 1, 0, 2], &[1, 0, 1]);
        let origin = PointOrbit::rational_point(&q().zero());
        assert_eq!(
            ram_index(&map, &PointOrbit::Infinity),
            ram_index(&map.flip(), &origin)
        );
    }

    #[test]
    fn composition_multiplies_degrees_and_indices() {
        let sq = qmap(&[0, 0, 1], &[1]);
        let cube = qmap(&[0, 0, 0, 1], &[1]);
        let sixth = sq.compose(&cube).unwrap();
        assert_eq!(sixth.degree(), 6);
        let zero = PointOrbit::rational_point(&q().zero());
        assert_eq!(ram_index(&sixth, &zero), 6);

        // Indices compose along a Moebius change of coordinates.
        let mobius = qmap(&[1, 2], &[3, 1]); // (2x + 1)/(x + 3)
        let f = qmap(&[0, 0, -1, 1], &[1]);
        let composed = f.compose(&mobius).unwrap();
        let at = q().from_i64(1);
        let moved = mobius.value_at_element(&at).unwrap();
        assert_eq!(
            ram_index(&composed, &PointOrbit::rational_point(&at)),
            ram_index(&f, &PointOrbit::rational_point(&moved))
        );
    }

    #[test]
    fn orbit_constructors_validate() {
        let f = q();
        let reducible = Poly::from_ints(&f, &[-1, 0, 1]);
        assert_eq!(
            PointOrbit::finite(reducible, 0),
            Err(OrbitError::Reducible)
        );
        let nonmonic = Poly::from_ints(&f, &[1, 2]);
        assert_eq!(
            PointOrbit::finite(nonmonic, 0),
            Err(OrbitError::NotMonicNonconstant)
        );
        let orbit = rational_orbit(-4, 27);
        assert_eq!(orbit.root(), Some(f.from_ratio(BigRational::new(
            BigInt::from(-4),
            BigInt::from(27),
        ))));
        assert_eq!(orbit.label("t"), "t + 4/27");
        assert_eq!(ValueOrbit::Infinity.label("t"), "inf");
        assert_eq!(orbit.degree(), 1);
    }

    #[test]
    fn display_round_trip_shapes() {
        let m = qmap(&[-1, 0, 1], &[2, 1]);
        assert_eq!(m.display_with("x"), "(x^2 - 1)/(x + 2)");
        let p = qmap(&[0, -3, 0, 1], &[1]);
        assert_eq!(p.display_with("x"), "x^3 - 3*x");
    }
}
