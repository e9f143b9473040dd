//! Exact arithmetic in the coefficient fields everything else is built on:
//! the rationals `Q`, prime fields `F_p`, and simple algebraic extensions
//! `K[z]/(v)` stacked on top of either.
//!
//! A [`Field`] is a cheap clonable handle (internally reference counted);
//! elements carry their field so mixing elements of different fields is
//! caught at the operation site.  Every representation is canonical:
//! fractions are reduced with positive denominator, residues live in
//! `[0, p)`, and extension elements are coefficient vectors reduced mod the
//! modulus with trailing zeros stripped.  Canonical forms make `==` plain
//! structural equality, which the rest of the crate relies on when it
//! deduplicates orbits.
//!
//! Extensions are towers: the base of an extension may itself be an
//! extension.  The genus machinery only ever builds height-1 towers over a
//! prime field, but arithmetic works at any height, which keeps the tests
//! honest.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::poly::Poly;

/// Errors surfaced by field construction and division.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    /// A nonzero element of `K[z]/(v)` had no inverse.  This can only happen
    /// when `v` is reducible, i.e. the "field" is not actually a field; the
    /// caller must not continue with the broken tower.
    #[error("nonzero element has no inverse; the extension modulus is reducible")]
    NotInvertible,
    #[error("extension modulus must be monic of degree at least 1 over the base field")]
    InvalidModulus,
    #[error("extension modulus is reducible over the base field")]
    ReducibleModulus,
    /// Irreducibility testing is not available over this base field (for
    /// example an extension of `Q`); use [`Field::extend_unchecked`] if the
    /// modulus is known to be irreducible.
    #[error("cannot verify irreducibility over this base field: {0}")]
    UndecidableBase(String),
}

#[derive(Debug)]
enum Kind {
    Rationals,
    /// `F_p`, `p` prime.
    Prime(BigUint),
    /// `base[z]/(modulus)`, `modulus` monic irreducible over `base`.
    Extension { base: Field, modulus: Poly },
}

/// Handle to a coefficient field.  Clones share the same underlying
/// descriptor; equality is structural, so two independently built copies of
/// `F_3[z]/(z^2 + 1)` compare equal.
#[derive(Debug, Clone)]
pub struct Field(Arc<Kind>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        match (&*self.0, &*other.0) {
            (Kind::Rationals, Kind::Rationals) => true,
            (Kind::Prime(p), Kind::Prime(q)) => p == q,
            (
                Kind::Extension { base: b1, modulus: m1 },
                Kind::Extension { base: b2, modulus: m2 },
            ) => b1 == b2 && m1 == m2,
            _ => false,
        }
    }
}

impl Eq for Field {}

impl Field {
    /// The field of rational numbers.
    pub fn rationals() -> Field {
        Field(Arc::new(Kind::Rationals))
    }

    /// The prime field `F_p`.
    ///
    /// # Panics
    /// Panics if `p` is not prime: a composite modulus does not give a field
    /// and every later inversion would be unsound.
    pub fn prime(p: u64) -> Field {
        assert!(is_prime_u64(p), "{p} is not prime, F_{p} is not a field");
        Field(Arc::new(Kind::Prime(BigUint::from(p))))
    }

    /// Builds `base[z]/(modulus)` after verifying that `modulus` is monic of
    /// degree >= 1 and irreducible over `base`.
    ///
    /// Linear moduli are allowed; `base[z]/(z - c)` is a copy of `base` whose
    /// adjoined root is `c`, which lets callers treat rational points and
    /// honest algebraic points uniformly.
    pub fn extend(base: &Field, modulus: &Poly) -> Result<Field, FieldError> {
        assert_eq!(
            modulus.field(),
            base,
            "modulus must have coefficients in the base field"
        );
        let deg = match modulus.degree() {
            Some(d) if d >= 1 => d,
            _ => return Err(FieldError::InvalidModulus),
        };
        if !modulus.lc().is_one() {
            return Err(FieldError::InvalidModulus);
        }
        if deg > 1 {
            match crate::factor::is_irreducible(modulus, 0) {
                Ok(true) => {}
                Ok(false) => return Err(FieldError::ReducibleModulus),
                Err(e) => return Err(FieldError::UndecidableBase(e.to_string())),
            }
        }
        Ok(Self::extend_unchecked(base, modulus))
    }

    /// Builds `base[z]/(modulus)` without the irreducibility check.
    ///
    /// The caller must guarantee that `modulus` is monic and irreducible over
    /// `base`; this is used on hot paths where the modulus just came out of a
    /// factorization and is already known to be irreducible.
    pub fn extend_unchecked(base: &Field, modulus: &Poly) -> Field {
        assert_eq!(modulus.field(), base);
        debug_assert!(modulus.degree().map_or(false, |d| d >= 1));
        debug_assert!(modulus.lc().is_one());
        Field(Arc::new(Kind::Extension {
            base: base.clone(),
            modulus: modulus.clone(),
        }))
    }

    /// The characteristic: zero for the `Q` tower, `p` for the `F_p` tower.
    pub fn characteristic(&self) -> BigUint {
        match &*self.0 {
            Kind::Rationals => BigUint::zero(),
            Kind::Prime(p) => p.clone(),
            Kind::Extension { base, .. } => base.characteristic(),
        }
    }

    /// Number of elements of a finite field (`p^k`), `None` in characteristic
    /// zero.
    pub fn order(&self) -> Option<BigUint> {
        let p = self.characteristic();
        if p.is_zero() {
            return None;
        }
        Some(p.pow(self.absolute_degree() as u32))
    }

    /// Product of the degrees of all moduli in the tower (1 for a prime
    /// field): the degree of the field over its prime field.
    pub fn absolute_degree(&self) -> u64 {
        match &*self.0 {
            Kind::Rationals | Kind::Prime(_) => 1,
            Kind::Extension { base, modulus } => {
                base.absolute_degree() * modulus.degree().unwrap() as u64
            }
        }
    }

    /// Number of extension steps above the prime field.
    pub fn tower_height(&self) -> usize {
        match &*self.0 {
            Kind::Rationals | Kind::Prime(_) => 0,
            Kind::Extension { base, .. } => base.tower_height() + 1,
        }
    }

    /// For an extension, the base field and modulus; `None` for prime fields.
    pub fn extension_parts(&self) -> Option<(&Field, &Poly)> {
        match &*self.0 {
            Kind::Extension { base, modulus } => Some((base, modulus)),
            _ => None,
        }
    }

    pub fn is_rationals(&self) -> bool {
        matches!(&*self.0, Kind::Rationals)
    }

    pub fn is_prime_field(&self) -> bool {
        !matches!(&*self.0, Kind::Extension { .. })
    }

    pub fn is_finite(&self) -> bool {
        !self.characteristic().is_zero()
    }

    /// Short human-readable name, e.g. `Q`, `F7`, `F3[z]/(z^2 + 1)`.
    pub fn label(&self) -> String {
        match &*self.0 {
            Kind::Rationals => "Q".to_string(),
            Kind::Prime(p) => format!("F{p}"),
            Kind::Extension { base, modulus } => {
                format!("{}[z]/({})", base.label(), modulus.display_with("z"))
            }
        }
    }

    pub fn zero(&self) -> Elem {
        let repr = match &*self.0 {
            Kind::Rationals => Repr::Rat(BigRational::zero()),
            Kind::Prime(_) => Repr::Res(BigUint::zero()),
            Kind::Extension { .. } => Repr::Ext(Vec::new()),
        };
        Elem { field: self.clone(), repr }
    }

    pub fn one(&self) -> Elem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Elem {
        self.from_bigint(&BigInt::from(v))
    }

    pub fn from_bigint(&self, v: &BigInt) -> Elem {
        let repr = match &*self.0 {
            Kind::Rationals => Repr::Rat(BigRational::from_integer(v.clone())),
            Kind::Prime(p) => {
                let m = BigInt::from(p.clone());
                Repr::Res(v.mod_floor(&m).to_biguint().unwrap())
            }
            Kind::Extension { base, .. } => {
                let c = base.from_bigint(v);
                return self.from_base_coeffs(vec![c]);
            }
        };
        Elem { field: self.clone(), repr }
    }

    /// A rational number as an element; only meaningful on the `Q` tower.
    ///
    /// # Panics
    /// Panics in positive characteristic (a fraction like 1/2 is not a
    /// well-defined residue without an explicit inversion).
    pub fn from_ratio(&self, r: BigRational) -> Elem {
        match &*self.0 {
            Kind::Rationals => Elem { field: self.clone(), repr: Repr::Rat(r) },
            Kind::Prime(_) => panic!("from_ratio is only defined in characteristic 0"),
            Kind::Extension { base, .. } => {
                let c = base.from_ratio(r);
                self.from_base_coeffs(vec![c])
            }
        }
    }

    /// Builds an extension element from base-field coefficients
    /// (constant-first).  Vectors of any length are accepted and reduced mod
    /// the modulus.
    pub fn from_base_coeffs(&self, coeffs: Vec<Elem>) -> Elem {
        let (base, modulus) = self
            .extension_parts()
            .expect("from_base_coeffs needs an extension field");
        for c in &coeffs {
            assert_eq!(c.field(), base, "coefficient outside the base field");
        }
        let deg = modulus.degree().unwrap();
        let mut v = coeffs;
        trim_zeros(&mut v);
        if v.len() > deg {
            let p = Poly::new(base, v);
            let (_, rem) = p.divrem(modulus);
            v = rem.into_coeffs();
        }
        Elem { field: self.clone(), repr: Repr::Ext(v) }
    }

    /// The residue of the generator `z`, i.e. the adjoined root of the
    /// modulus.  For a linear modulus `z - c` this reduces to `c`.
    pub fn adjoined_root(&self) -> Elem {
        let (base, _) = self
            .extension_parts()
            .expect("adjoined_root needs an extension field");
        self.from_base_coeffs(vec![base.zero(), base.one()])
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    Rat(BigRational),
    Res(BigUint),
    Ext(Vec<Elem>),
}

/// An element of a [`Field`].  Carries its field handle; arithmetic between
/// elements of different fields panics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elem {
    field: Field,
    repr: Repr,
}

fn trim_zeros(v: &mut Vec<Elem>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

impl Elem {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_zero(),
            Repr::Res(r) => r.is_zero(),
            Repr::Ext(v) => v.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_one(),
            Repr::Res(r) => r.is_one(),
            Repr::Ext(v) => v.len() == 1 && v[0].is_one(),
        }
    }

    /// The value as a reduced fraction (rational prime field only).
    pub fn as_ratio(&self) -> Option<&BigRational> {
        match &self.repr {
            Repr::Rat(r) => Some(r),
            _ => None,
        }
    }

    /// The canonical residue in `[0, p)` (finite prime field only).
    pub fn as_residue(&self) -> Option<&BigUint> {
        match &self.repr {
            Repr::Res(r) => Some(r),
            _ => None,
        }
    }

    /// Coefficients over the base field (extension elements only); trailing
    /// zeros are stripped, the zero element is the empty slice.
    pub fn ext_coeffs(&self) -> Option<&[Elem]> {
        match &self.repr {
            Repr::Ext(v) => Some(v),
            _ => None,
        }
    }

    fn assert_same_field(&self, other: &Elem, op: &str) {
        assert_eq!(
            self.field, other.field,
            "field descriptor mismatch in {op}: {} vs {}",
            self.field.label(),
            other.field.label()
        );
    }

    /// Multiplicative inverse.
    ///
    /// Fails with [`FieldError::DivisionByZero`] on zero.  On an extension
    /// element it runs the extended Euclidean algorithm against the modulus;
    /// a nonzero element with a nontrivial gcd signals a reducible modulus
    /// and surfaces as [`FieldError::NotInvertible`].
    pub fn inv(&self) -> Result<Elem, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match &self.repr {
            Repr::Rat(r) => Ok(Elem {
                field: self.field.clone(),
                repr: Repr::Rat(r.recip()),
            }),
            Repr::Res(r) => {
                let p = match &*self.field.0 {
                    Kind::Prime(p) => BigInt::from(p.clone()),
                    _ => unreachable!(),
                };
                let eg = BigInt::from(r.clone()).extended_gcd(&p);
                // p prime and r nonzero mod p, so the gcd is 1.
                debug_assert!(eg.gcd.is_one());
                let inv = eg.x.mod_floor(&p).to_biguint().unwrap();
                Ok(Elem { field: self.field.clone(), repr: Repr::Res(inv) })
            }
            Repr::Ext(v) => {
                let (base, modulus) = self.field.extension_parts().unwrap();
                let val = Poly::new(base, v.clone());
                let (g, s, _) = val.xgcd(modulus);
                if g.degree() != Some(0) {
                    return Err(FieldError::NotInvertible);
                }
                // xgcd returns g monic, so g = 1 and s is the inverse mod v.
                let (_, s) = s.divrem(modulus);
                Ok(self.field.from_base_coeffs(s.into_coeffs()))
            }
        }
    }

    /// `self^e` for an arbitrary-precision exponent (used by the finite-field
    /// machinery, where exponents like `(q^d - 1)/2` overflow native types).
    pub fn pow(&self, e: &BigUint) -> Elem {
        let mut acc = self.field.one();
        let bits = e.bits();
        for i in (0..bits).rev() {
            acc = &acc * &acc;
            if e.bit(i) {
                acc = &acc * self;
            }
        }
        acc
    }

    pub fn powi(&self, e: u64) -> Elem {
        self.pow(&BigUint::from(e))
    }

    /// Embeds the element into `target`, which must lie above `self.field()`
    /// in a tower (or equal it).
    ///
    /// # Panics
    /// Panics if `target` does not contain `self.field()` in its tower.
    pub fn embed(&self, target: &Field) -> Elem {
        if self.field == *target {
            return self.clone();
        }
        let (base, _) = target.extension_parts().unwrap_or_else(|| {
            panic!(
                "cannot embed an element of {} into {}",
                self.field.label(),
                target.label()
            )
        });
        let below = self.embed(base);
        target.from_base_coeffs(vec![below])
    }

    /// Total order used only to sort values deterministically (canonical
    /// report and factor ordering); it has no arithmetic meaning.
    pub fn canonical_cmp(&self, other: &Elem) -> Ordering {
        match (&self.repr, &other.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => a.cmp(b),
            (Repr::Res(a), Repr::Res(b)) => a.cmp(b),
            (Repr::Ext(a), Repr::Ext(b)) => a
                .len()
                .cmp(&b.len())
                .then_with(|| {
                    for (x, y) in a.iter().zip(b.iter()) {
                        let c = x.canonical_cmp(y);
                        if c != Ordering::Equal {
                            return c;
                        }
                    }
                    Ordering::Equal
                }),
            _ => panic!("canonical_cmp across different field kinds"),
        }
    }

    /// True when the canonical textual form starts with a minus sign
    /// (rational numbers only; residues and extension elements are unsigned).
    pub fn is_display_negative(&self) -> bool {
        match &self.repr {
            Repr::Rat(r) => r.is_negative(),
            _ => false,
        }
    }

    /// The element with the display sign stripped (absolute value over `Q`,
    /// identity elsewhere).  Used by the polynomial printer.
    pub fn display_abs(&self) -> Elem {
        match &self.repr {
            Repr::Rat(r) => Elem {
                field: self.field.clone(),
                repr: Repr::Rat(r.abs()),
            },
            _ => self.clone(),
        }
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rat(r) => write!(f, "{r}"),
            Repr::Res(r) => write!(f, "{r}"),
            Repr::Ext(v) => {
                let (base, _) = self.field.extension_parts().unwrap();
                write!(f, "{}", Poly::new(base, v.clone()).display_with("z"))
            }
        }
    }
}

impl std::ops::Add for &Elem {
    type Output = Elem;
    fn add(self, rhs: &Elem) -> Elem {
        self.assert_same_field(rhs, "+");
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a + b),
            (Repr::Res(a), Repr::Res(b)) => {
                let p = self.field.characteristic();
                Repr::Res((a + b) % &p)
            }
            (Repr::Ext(a), Repr::Ext(b)) => {
                let n = a.len().max(b.len());
                let base = self.field.extension_parts().unwrap().0;
                let zero = base.zero();
                let mut v = Vec::with_capacity(n);
                for i in 0..n {
                    let x = a.get(i).unwrap_or(&zero);
                    let y = b.get(i).unwrap_or(&zero);
                    v.push(x + y);
                }
                trim_zeros(&mut v);
                Repr::Ext(v)
            }
            _ => unreachable!(),
        };
        Elem { field: self.field.clone(), repr }
    }
}

impl std::ops::Sub for &Elem {
    type Output = Elem;
    fn sub(self, rhs: &Elem) -> Elem {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &Elem {
    type Output = Elem;
    fn neg(self) -> Elem {
        let repr = match &self.repr {
            Repr::Rat(a) => Repr::Rat(-a),
            Repr::Res(a) => {
                if a.is_zero() {
                    Repr::Res(BigUint::zero())
                } else {
                    Repr::Res(self.field.characteristic() - a)
                }
            }
            Repr::Ext(v) => Repr::Ext(v.iter().map(|c| -c).collect()),
        };
        Elem { field: self.field.clone(), repr }
    }
}

impl std::ops::Mul for &Elem {
    type Output = Elem;
    fn mul(self, rhs: &Elem) -> Elem {
        self.assert_same_field(rhs, "*");
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Rat(a), Repr::Rat(b)) => Repr::Rat(a * b),
            (Repr::Res(a), Repr::Res(b)) => {
                let p = self.field.characteristic();
                Repr::Res((a * b) % &p)
            }
            (Repr::Ext(a), Repr::Ext(b)) => {
                if a.is_empty() || b.is_empty() {
                    Repr::Ext(Vec::new())
                } else {
                    let (base, _) = self.field.extension_parts().unwrap();
                    let mut v = vec![base.zero(); a.len() + b.len() - 1];
                    for (i, x) in a.iter().enumerate() {
                        for (j, y) in b.iter().enumerate() {
                            v[i + j] = &v[i + j] + &(x * y);
                        }
                    }
                    return self.field.from_base_coeffs(v);
                }
            }
            _ => unreachable!(),
        };
        Elem { field: self.field.clone(), repr }
    }
}

impl std::ops::Div for &Elem {
    type Output = Elem;
    /// # Panics
    /// Panics on division by zero; use [`Elem::inv`] for a checked inverse.
    fn div(self, rhs: &Elem) -> Elem {
        self * &rhs.inv().expect("division by zero field element")
    }
}

/// Deterministic Miller-Rabin, valid for all `u64` inputs.
pub(crate) fn is_prime_u64(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powm = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in WITNESSES {
        let mut x = powm(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;

    fn q() -> Field {
        Field::rationals()
    }

    fn ratio(n: i64, d: i64) -> Elem {
        q().from_ratio(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    #[test]
    fn rational_inverse() {
        let x = ratio(2, 3);
        assert_eq!(x.inv().unwrap(), ratio(3, 2));
        assert_eq!(q().zero().inv(), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn rational_canonical_form() {
        // 2/4 and 1/2 must be structurally identical, -1/-2 likewise.
        assert_eq!(ratio(2, 4), ratio(1, 2));
        assert_eq!(ratio(-1, -2), ratio(1, 2));
        assert_eq!(ratio(1, -2), ratio(-1, 2));
    }

    #[test]
    fn prime_field_arithmetic() {
        let f5 = Field::prime(5);
        let a = f5.from_i64(3);
        let b = f5.from_i64(4);
        assert_eq!(&a * &b, f5.from_i64(2));
        assert_eq!(&a + &b, f5.from_i64(2));
        assert_eq!(-&a, f5.from_i64(2));
        assert_eq!(f5.from_i64(-7), f5.from_i64(3));
        // Fermat: a * a^(p-2) = 1.
        assert_eq!(&a * &a.inv().unwrap(), f5.one());
    }

    #[test]
    #[should_panic(expected = "not prime")]
    fn composite_modulus_rejected() {
        Field::prime(6);
    }

    #[test]
    fn extension_inverse_matches_brute_force() {
        // F_9 = F_3[z]/(z^2 + 1).  Brute-force the inverse of z by scanning
        // all nine elements, then check the extended-Euclid answer agrees.
        let f3 = Field::prime(3);
        let modulus = Poly::from_ints(&f3, &[1, 0, 1]);
        let f9 = Field::extend(&f3, &modulus).unwrap();
        let z = f9.adjoined_root();

        let mut found = Vec::new();
        for c0 in 0..3 {
            for c1 in 0..3 {
                let cand = f9.from_base_coeffs(vec![f3.from_i64(c0), f3.from_i64(c1)]);
                if (&cand * &z).is_one() {
                    found.push(cand);
                }
            }
        }
        assert_eq!(found.len(), 1, "inverse must be unique");
        // z * 2z = 2 z^2 = -2 = 1 mod 3.
        let two_z = f9.from_base_coeffs(vec![f3.zero(), f3.from_i64(2)]);
        assert_eq!(found[0], two_z);
        assert_eq!(z.inv().unwrap(), two_z);
    }

    #[test]
    fn reducible_modulus_rejected() {
        // z^2 + 1 = (z + 1)^2 over F_2.
        let f2 = Field::prime(2);
        let modulus = Poly::from_ints(&f2, &[1, 0, 1]);
        assert_eq!(
            Field::extend(&f2, &modulus),
            Err(FieldError::ReducibleModulus)
        );
    }

    #[test]
    fn reducible_modulus_breaks_inversion() {
        // Forcing the broken tower through the unchecked constructor, the
        // zero divisor (z + 1) must surface NotInvertible rather than a
        // silently wrong answer.
        let f2 = Field::prime(2);
        let modulus = Poly::from_ints(&f2, &[1, 0, 1]);
        let bogus = Field::extend_unchecked(&f2, &modulus);
        let zp1 = bogus.from_base_coeffs(vec![f2.one(), f2.one()]);
        assert_eq!(zp1.inv(), Err(FieldError::NotInvertible));
    }

    #[test]
    fn linear_modulus_gives_copy_of_base() {
        // Q[t]/(t - 1): the adjoined root is just 1.
        let f = q();
        let modulus = Poly::from_ints(&f, &[-1, 1]);
        let ext = Field::extend(&f, &modulus).unwrap();
        assert_eq!(ext.adjoined_root(), ext.one());
        assert_eq!(ext.absolute_degree(), 1);
    }

    #[test]
    fn extension_canonical_form_trims_and_reduces() {
        let f3 = Field::prime(3);
        let modulus = Poly::from_ints(&f3, &[1, 0, 1]);
        let f9 = Field::extend_unchecked(&f3, &modulus);
        // z^2 reduces to -1 = 2.
        let z_sq = f9.from_base_coeffs(vec![f3.zero(), f3.zero(), f3.one()]);
        assert_eq!(z_sq, f9.from_i64(2));
        // Trailing zeros are stripped so equality is structural.
        let padded = f9.from_base_coeffs(vec![f3.from_i64(2), f3.zero(), f3.zero()]);
        assert_eq!(padded, f9.from_i64(2));
    }

    #[test]
    fn embedding_and_tower_height() {
        let f3 = Field::prime(3);
        let modulus = Poly::from_ints(&f3, &[1, 0, 1]);
        let f9 = Field::extend_unchecked(&f3, &modulus);
        let two = f3.from_i64(2);
        let lifted = two.embed(&f9);
        assert_eq!(lifted, f9.from_i64(2));
        assert_eq!(f9.tower_height(), 1);
        assert_eq!(f9.order(), Some(BigUint::from(9u32)));
        assert_eq!(f9.characteristic(), BigUint::from(3u32));
    }

    #[test]
    fn frobenius_fixes_prime_field() {
        let f9 = {
            let f3 = Field::prime(3);
            Field::extend_unchecked(&f3, &Poly::from_ints(&f3, &[1, 0, 1]))
        };
        let z = f9.adjoined_root();
        // z^9 = z in F_9.
        assert_eq!(z.powi(9), z);
        // z^3 is the conjugate root of z^2 + 1, i.e. -z.
        assert_eq!(z.powi(3), -&z);
    }

    #[test]
    #[should_panic(expected = "field descriptor mismatch")]
    fn mixed_field_arithmetic_panics() {
        let a = Field::prime(5).from_i64(1);
        let b = Field::prime(7).from_i64(1);
        let _ = &a + &b;
    }

    #[test]
    fn primality_check() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(3));
        assert!(is_prime_u64(97));
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(0));
        assert!(!is_prime_u64(1));
        assert!(!is_prime_u64(91)); // 7 * 13
        assert!(!is_prime_u64(1_000_000_007u64 * 3));
    }
}
