//! Dense univariate polynomials over a [`Field`].
//!
//! Coefficients are stored constant-first with no trailing zeros, so the
//! zero polynomial is the empty vector and equality is structural.  The
//! algorithms here are the exact, field-agnostic workhorses everything else
//! leans on:
//!
//! * long division and the (extended) Euclidean algorithm, normalized so
//!   gcds are monic and unique;
//! * root multiplicity by repeated exact division — deliberately not by
//!   derivative counting, which undercounts in small characteristic;
//! * Yun's squarefree decomposition (characteristic zero only; positive
//!   characteristic goes through the factorization module);
//! * coefficient reversal, which turns questions about the point at
//!   infinity into questions about the origin;
//! * resultants by fraction-free (Bareiss) elimination on the Sylvester
//!   matrix, with entries in a polynomial ring: uniform over `Q` and
//!   small prime fields, no evaluation points needed.
//!
//! Euclidean steps run in plain field arithmetic with monic normalization
//! at each step.  Over `Q` this trades some intermediate coefficient swell
//! for uniformity — the same loop must serve number-field coefficients,
//! where pseudo-division content tricks do not apply — and at the degrees
//! this crate works at (tens, not thousands) the swell is a non-issue.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::field::{Elem, Field};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    /// Yun's algorithm divides by derivative gcds and is only valid in
    /// characteristic zero; positive characteristic must use the
    /// factorization route (`factor::multiplicity_profile`).
    #[error("squarefree decomposition by derivatives requires characteristic zero")]
    PositiveCharacteristic,
}

/// Dense univariate polynomial; constant coefficient first, trailing zeros
/// stripped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<Elem>,
}

impl Poly {
    /// Wraps a coefficient vector (constant-first), trimming trailing zeros.
    ///
    /// # Panics
    /// Panics if any coefficient lies in a different field.
    pub fn new(field: &Field, coeffs: Vec<Elem>) -> Poly {
        for c in &coeffs {
            assert_eq!(c.field(), field, "coefficient outside the stated field");
        }
        let mut coeffs = coeffs;
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    /// Convenience constructor from small integers, constant-first:
    /// `from_ints(&q, &[-1, 0, 1])` is `x^2 - 1`.
    pub fn from_ints(field: &Field, cs: &[i64]) -> Poly {
        Poly::new(field, cs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field.one())
    }

    /// The polynomial `x`.
    pub fn var(field: &Field) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    pub fn constant(c: Elem) -> Poly {
        let field = c.field().clone();
        Poly::new(&field, vec![c])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Elem> {
        self.coeffs
    }

    /// Leading coefficient.
    ///
    /// # Panics
    /// Panics on the zero polynomial.
    pub fn lc(&self) -> Elem {
        self.coeffs.last().cloned().expect("zero polynomial has no leading coefficient")
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| c.is_one())
    }

    pub fn eval(&self, at: &Elem) -> Elem {
        assert_eq!(at.field(), &self.field, "evaluation point outside the coefficient field");
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    /// Re-expresses the polynomial over an extension of its coefficient
    /// field by embedding every coefficient.
    pub fn coerce(&self, target: &Field) -> Poly {
        if &self.field == target {
            return self.clone();
        }
        Poly::new(target, self.coeffs.iter().map(|c| c.embed(target)).collect())
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero(&self.field);
        }
        let mut v = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            let k = self.field.from_i64(i as i64);
            v.push(&k * c);
        }
        Poly::new(&self.field, v)
    }

    pub fn mul_elem(&self, c: &Elem) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.field);
        }
        Poly::new(&self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn make_monic(&self) -> Poly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.mul_elem(&self.lc().inv().expect("leading coefficient is invertible"))
    }

    /// Quotient and remainder of division by `divisor`.
    ///
    /// # Panics
    /// Panics if `divisor` is zero.
    pub fn divrem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert_eq!(divisor.field(), &self.field, "divrem across fields");
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.lc().inv().unwrap();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(&self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); rem.len() - dd];
        while rem.len() > dd {
            let c = &(rem.last().unwrap().clone()) * &lc_inv;
            let k = rem.len() - 1 - dd;
            if !c.is_zero() {
                for (i, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] = &rem[k + i] - &(&c * dc);
                }
            }
            quot[k] = c;
            // The top coefficient cancels exactly.
            debug_assert!(rem.last().unwrap().is_zero());
            rem.pop();
            while rem.len() > dd && rem.last().map_or(false, |c| c.is_zero()) {
                rem.pop();
            }
        }
        (Poly::new(&self.field, quot), Poly::new(&self.field, rem))
    }

    /// Exact division; panics if the remainder is nonzero.  Internal helper
    /// for algorithms whose theory guarantees divisibility (Bareiss, Yun).
    pub(crate) fn exact_div(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.divrem(divisor);
        assert!(r.is_zero(), "exact division had a remainder");
        q
    }

    /// Monic greatest common divisor (Euclid with monic normalization each
    /// step; `gcd(0, 0) = 0`).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*self + t*other = g` and
    /// `g` the monic gcd.
    pub fn xgcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
            t0 = t1;
            t1 = t;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let c = r0.lc().inv().unwrap();
        (r0.mul_elem(&c), s0.mul_elem(&c), t0.mul_elem(&c))
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.field);
        for i in (0..32u32.saturating_sub(e.leading_zeros())).rev() {
            acc = &acc * &acc;
            if (e >> i) & 1 == 1 {
                acc = &acc * self;
            }
        }
        acc
    }

    /// Coefficient reversal at a stated degree: `x^target * self(1/x)`.
    /// This sends the behaviour of `self` at infinity to the origin.
    ///
    /// # Panics
    /// Panics if `target` is smaller than the degree of `self`.
    pub fn reverse(&self, target: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let d = self.degree().unwrap();
        assert!(target >= d, "reversal target below the degree");
        let mut v = vec![self.field.zero(); target + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[target - i] = c.clone();
        }
        Poly::new(&self.field, v)
    }

    /// Multiplicity of `zeta` as a root, by repeated exact division by
    /// `x - zeta`.  Counting via derivatives would be wrong in small positive
    /// characteristic (the derivative of `(x - z)^p` vanishes identically),
    /// and the ramification bookkeeping needs wild multiplicities exactly.
    ///
    /// The coefficients are coerced into the field of `zeta`, which must be
    /// an extension of (or equal to) the coefficient field.
    ///
    /// # Panics
    /// Panics on the zero polynomial.
    pub fn multiplicity_at(&self, zeta: &Elem) -> u32 {
        assert!(!self.is_zero(), "the zero polynomial vanishes everywhere");
        let target = zeta.field();
        let mut cur = self.coerce(target);
        let linear = Poly::new(target, vec![-zeta, target.one()]);
        let mut mult = 0u32;
        loop {
            let (q, r) = cur.divrem(&linear);
            if !r.is_zero() {
                return mult;
            }
            mult += 1;
            cur = q;
            if cur.is_zero() {
                // Can only happen after consuming the whole degree.
                return mult;
            }
        }
    }

    /// Yun's squarefree decomposition: returns pairwise-coprime monic
    /// squarefree `parts` with strictly increasing multiplicities such that
    /// `self = lc * prod part_i ^ mult_i`.  Characteristic zero only.
    pub fn squarefree_decomposition(&self) -> Result<Vec<(Poly, u32)>, PolyError> {
        if !num_traits::Zero::is_zero(&self.field.characteristic()) {
            return Err(PolyError::PositiveCharacteristic);
        }
        assert!(!self.is_zero(), "cannot decompose the zero polynomial");
        let a = self.make_monic();
        if a.degree() == Some(0) {
            return Ok(Vec::new());
        }
        let ap = a.derivative();
        let g = a.gcd(&ap);
        if g.degree() == Some(0) {
            return Ok(vec![(a, 1)]);
        }
        let mut c = a.exact_div(&g);
        let mut d = &ap.exact_div(&g) - &c.derivative();
        let mut out = Vec::new();
        let mut i = 1u32;
        while c.degree() != Some(0) {
            let p = c.gcd(&d);
            if p.degree() != Some(0) {
                out.push((p.clone(), i));
            }
            c = c.exact_div(&p);
            d = &d.exact_div(&p) - &c.derivative();
            i += 1;
        }
        Ok(out)
    }

    /// Renders with the given variable name, in a form the expression parser
    /// accepts back.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_display_negative();
            if first {
                if neg {
                    out.push_str("-");
                }
                first = false;
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mag = c.display_abs();
            let mag_str = mag.to_string();
            let needs_parens = mag.ext_coeffs().map_or(false, |v| v.len() > 1)
                || (mag_str.contains('/') && i > 0);
            let coeff_str = if needs_parens {
                format!("({mag_str})")
            } else {
                mag_str
            };
            if i == 0 {
                out.push_str(&coeff_str);
            } else {
                if !mag.is_one() {
                    out.push_str(&coeff_str);
                    out.push('*');
                }
                out.push_str(var);
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
        out
    }

    /// Deterministic total order for canonical sorting (degree, then
    /// coefficients from the constant term up).  No arithmetic meaning.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| {
                for (a, b) in self.coeffs.iter().zip(other.coeffs.iter()) {
                    let c = a.canonical_cmp(b);
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                Ordering::Equal
            })
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.field, rhs.field, "polynomial addition across fields");
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = self.field.zero();
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).unwrap_or(&zero);
            let b = rhs.coeffs.get(i).unwrap_or(&zero);
            v.push(a + b);
        }
        Poly::new(&self.field, v)
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(&self.field, self.coeffs.iter().map(|c| -c).collect())
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.field, rhs.field, "polynomial multiplication across fields");
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(&self.field);
        }
        let mut v = vec![self.field.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        Poly::new(&self.field, v)
    }
}

/// Resultant with respect to `x` of two polynomials whose `x`-coefficients
/// are themselves polynomials (in some other variable, over the same field).
///
/// `a` and `b` list the `x`-coefficients constant-first.  The determinant of
/// the Sylvester matrix is computed by Bareiss' fraction-free elimination:
/// every division along the way is exact in the coefficient ring, so the
/// routine works uniformly over `Q[t]` and `F_p[t]` without needing
/// interpolation nodes (which small prime fields may not have enough of).
///
/// # Panics
/// Panics if either input is identically zero.
pub fn resultant_x(a: &[Poly], b: &[Poly], field: &Field) -> Poly {
    let trim = |s: &[Poly]| -> Vec<Poly> {
        let mut v: Vec<Poly> = s.to_vec();
        while v.last().map_or(false, |p| p.is_zero()) {
            v.pop();
        }
        v
    };
    let a = trim(a);
    let b = trim(b);
    assert!(!a.is_empty() && !b.is_empty(), "resultant of a zero polynomial");
    let da = a.len() - 1;
    let db = b.len() - 1;
    if da == 0 {
        return a[0].pow(db as u32);
    }
    if db == 0 {
        return b[0].pow(da as u32);
    }

    let s = da + db;
    let zero = Poly::zero(field);
    let mut m = vec![vec![zero.clone(); s]; s];
    // db rows of a-coefficients (highest first), then da rows of b's.
    for r in 0..db {
        for (k, c) in a.iter().rev().enumerate() {
            m[r][r + k] = c.clone();
        }
    }
    for r in 0..da {
        for (k, c) in b.iter().rev().enumerate() {
            m[db + r][r + k] = c.clone();
        }
    }

    // Bareiss: after step k the bottom-right entry of the last step is the
    // determinant; divisions by the previous pivot are exact.
    let mut sign = false;
    let mut prev = Poly::one(field);
    for k in 0..s - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..s).find(|&i| !m[i][k].is_zero());
            match swap {
                Some(i) => {
                    m.swap(k, i);
                    sign = !sign;
                }
                None => return Poly::zero(field),
            }
        }
        for i in k + 1..s {
            for j in k + 1..s {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev);
            }
            m[i][k] = Poly::zero(field);
        }
        prev = m[k][k].clone();
    }
    let det = m[s - 1][s - 1].clone();
    if sign {
        -&det
    } else {
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::rationals()
    }

    #[test]
    fn divrem_examples() {
        let f = q();
        let a = Poly::from_ints(&f, &[5, 2, 0, 1]); // x^3 + 2x + 5
        let b = Poly::from_ints(&f, &[-1, 1]); // x - 1
        let (quo, rem) = a.divrem(&b);
        assert_eq!(quo, Poly::from_ints(&f, &[3, 1, 1])); // x^2 + x + 3
        assert_eq!(rem, Poly::from_ints(&f, &[8]));
        // Round trip.
        assert_eq!(&(&quo * &b) + &rem, a);
    }

    #[test]
    #[should_panic(expected = "zero polynomial")]
    fn division_by_zero_polynomial_panics() {
        let f = q();
        let a = Poly::from_ints(&f, &[1, 1]);
        let _ = a.divrem(&Poly::zero(&f));
    }

    #[test]
    fn gcd_is_monic_and_right() {
        let f = q();
        // gcd(x^4 - 1, x^6 - 1) = x^2 - 1.
        let a = Poly::from_ints(&f, &[-1, 0, 0, 0, 1]);
        let b = Poly::from_ints(&f, &[-1, 0, 0, 0, 0, 0, 1]);
        assert_eq!(a.gcd(&b), Poly::from_ints(&f, &[-1, 0, 1]));
        // Scaling does not change the (monic) gcd.
        let a3 = a.mul_elem(&f.from_i64(3));
        assert_eq!(a3.gcd(&b), Poly::from_ints(&f, &[-1, 0, 1]));
    }

    #[test]
    fn xgcd_bezout_identity() {
        let f = Field::prime(7);
        let a = Poly::from_ints(&f, &[3, 0, 1, 2]);
        let b = Poly::from_ints(&f, &[1, 5, 1]);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(&(&s * &a) + &(&t * &b), g);
        assert!(g.is_monic());
    }

    #[test]
    fn multiplicity_by_exact_division() {
        let f = q();
        // x^3 - 3x + 2 = (x - 1)^2 (x + 2).
        let a = Poly::from_ints(&f, &[2, -3, 0, 1]);
        assert_eq!(a.multiplicity_at(&f.from_i64(1)), 2);
        assert_eq!(a.multiplicity_at(&f.from_i64(-2)), 1);
        assert_eq!(a.multiplicity_at(&f.from_i64(0)), 0);
    }

    #[test]
    fn multiplicity_counts_wild_roots() {
        // (x - 1)^3 over F_3: the derivative vanishes identically, so any
        // derivative-based count would fail; repeated division must not.
        let f = Field::prime(3);
        let a = Poly::from_ints(&f, &[-1, 3, -3, 1]);
        assert_eq!(a.multiplicity_at(&f.from_i64(1)), 3);
    }

    #[test]
    fn multiplicity_in_linear_extension() {
        // Same value computed through the trivial extension Q[t]/(t - 1).
        let f = q();
        let a = Poly::from_ints(&f, &[2, -3, 0, 1]);
        let ext = Field::extend(&f, &Poly::from_ints(&f, &[-1, 1])).unwrap();
        assert_eq!(a.multiplicity_at(&ext.adjoined_root()), 2);
    }

    #[test]
    fn reverse_examples() {
        let f = q();
        let a = Poly::from_ints(&f, &[5, 3, 1]); // x^2 + 3x + 5
        assert_eq!(a.reverse(2), Poly::from_ints(&f, &[1, 3, 5]));
        let x3 = Poly::from_ints(&f, &[0, 0, 0, 1]);
        assert_eq!(x3.reverse(3), Poly::one(&f));
        // Padding target: x^2 + 1 at target 4 becomes x^4 + x^2.
        let c = Poly::from_ints(&f, &[1, 0, 1]);
        assert_eq!(c.reverse(4), Poly::from_ints(&f, &[0, 0, 1, 0, 1]));
    }

    #[test]
    fn yun_squarefree_decomposition() {
        let f = q();
        // a = x^3 (x + 1)^2 (x^2 + 1), multiplicities 1, 2, 3.
        let x = Poly::var(&f);
        let a = &(&x.pow(3) * &Poly::from_ints(&f, &[1, 1]).pow(2))
            * &Poly::from_ints(&f, &[1, 0, 1]);
        let parts = a.squarefree_decomposition().unwrap();
        assert_eq!(
            parts,
            vec![
                (Poly::from_ints(&f, &[1, 0, 1]), 1),
                (Poly::from_ints(&f, &[1, 1]), 2),
                (x.clone(), 3),
            ]
        );
        // Reassembly.
        let mut back = Poly::one(&f);
        for (p, m) in &parts {
            back = &back * &p.pow(*m);
        }
        assert_eq!(back, a);
    }

    #[test]
    fn yun_refuses_positive_characteristic() {
        let f = Field::prime(5);
        let a = Poly::from_ints(&f, &[1, 1]);
        assert_eq!(
            a.squarefree_decomposition(),
            Err(PolyError::PositiveCharacteristic)
        );
    }

    #[test]
    fn resultant_of_linear_factors() {
        // Res(x - a, x - b) = a - b (up to the classical sign convention:
        // here Res(f, g) = lc(f)^deg g * prod g(root of f) = g(a) = a - b).
        let f = q();
        let a = vec![Poly::from_ints(&f, &[-2]), Poly::one(&f)]; // x - 2
        let b = vec![Poly::from_ints(&f, &[-5]), Poly::one(&f)]; // x - 5
        let r = resultant_x(&a, &b, &f);
        assert_eq!(r, Poly::from_ints(&f, &[-3]));
    }

    #[test]
    fn resultant_detects_common_roots() {
        let f = q();
        // Res(x^2 - 1, x^2 - 3x + 2) = 0 because x = 1 is shared.
        let a = vec![
            Poly::from_ints(&f, &[-1]),
            Poly::zero(&f),
            Poly::one(&f),
        ];
        let b = vec![
            Poly::from_ints(&f, &[2]),
            Poly::from_ints(&f, &[-3]),
            Poly::one(&f),
        ];
        assert!(resultant_x(&a, &b, &f).is_zero());
    }

    #[test]
    fn resultant_with_polynomial_entries() {
        // Res_x(x^2 - t, x - 3) = 9 - t: substitute x = 3.
        let f = q();
        let minus_t = Poly::from_ints(&f, &[0, -1]);
        let a = vec![minus_t.clone(), Poly::zero(&f), Poly::one(&f)];
        let b = vec![Poly::from_ints(&f, &[-3]), Poly::one(&f)];
        let r = resultant_x(&a, &b, &f);
        assert_eq!(r, Poly::from_ints(&f, &[9, -1]));
    }

    #[test]
    fn resultant_is_multiplicative_in_one_slot() {
        let f = Field::prime(13);
        let to_entries = |p: &Poly| -> Vec<Poly> {
            p.coeffs().iter().map(|c| Poly::constant(c.clone())).collect()
        };
        let a = Poly::from_ints(&f, &[1, 2, 1, 3]);
        let b = Poly::from_ints(&f, &[4, 1, 1]);
        let c = Poly::from_ints(&f, &[2, 7, 5]);
        let bc = &b * &c;
        let r_bc = resultant_x(&to_entries(&a), &to_entries(&bc), &f);
        let r_b = resultant_x(&to_entries(&a), &to_entries(&b), &f);
        let r_c = resultant_x(&to_entries(&a), &to_entries(&c), &f);
        assert_eq!(r_bc, &r_b * &r_c);
    }

    #[test]
    fn display_round_trip_shapes() {
        let f = q();
        let a = Poly::new(
            &f,
            vec![
                f.from_ratio(num_rational::BigRational::new(4.into(), 27.into())),
                f.zero(),
                f.from_i64(-3),
                f.one(),
            ],
        );
        assert_eq!(a.display_with("t"), "t^3 - 3*t^2 + 4/27");
        let b = Poly::from_ints(&f, &[0, -1]);
        assert_eq!(b.display_with("x"), "-x");
    }
}
