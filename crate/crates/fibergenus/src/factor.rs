//! Complete factorization of univariate polynomials over the fields the
//! engine actually needs: `Q`, `F_p`, and extensions `F_{p^k}`.
//!
//! Finite fields use the classical squarefree / distinct-degree /
//! equal-degree pipeline.  The squarefree step must survive p-th-power
//! content (`a = b(x)^p` has derivative zero), which is peeled off by taking
//! p-th roots of coefficients through Frobenius.  Equal-degree splitting is
//! Cantor-Zassenhaus: the odd-characteristic split raises a random
//! polynomial to `(q^d - 1)/2`, the characteristic-2 variant uses the
//! absolute trace map.  The random choices come from a caller-injected seed
//! so runs are reproducible, and factor lists are sorted canonically so the
//! *result* does not depend on the seed at all.
//!
//! Rational factorization is Zassenhaus: reduce a primitive squarefree
//! integer polynomial modulo a good small prime (several are tried, keeping
//! the one with the fewest modular factors), Hensel-lift the modular factors
//! with quadratic steps past the Landau–Mignotte coefficient bound, then
//! search subsets of lifted factors for true divisors.  The subset search is
//! exponential in the number of modular factors, so it is capped (see
//! [`RECOMBINATION_CAP`]) and overflow is reported as an error rather than
//! silently ground through.
//!
//! Factorization over extensions of `Q` is deliberately not provided; the
//! callers in this crate are arranged so it is never needed (in
//! characteristic zero, exponent classes come from Yun's algorithm, which
//! needs only gcds).

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, RandBigInt};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::field::{Elem, Field};
use crate::poly::Poly;

/// Hard cap on the number of modular factors Zassenhaus recombination will
/// accept: beyond this the subset search is `2^count` products.
pub const RECOMBINATION_CAP: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FactorError {
    #[error("factorization over {0} is not supported (only Q and finite fields)")]
    UnsupportedField(String),
    #[error("irreducibility is only defined for nonconstant polynomials")]
    ConstantInput,
    #[error(
        "{count} modular factors exceeds the recombination cap of {cap}: \
         the subset search would need up to 2^{count} trial divisions"
    )]
    TooManyModularFactors { count: usize, cap: usize },
}

/// A complete factorization `a = unit * prod factors_i ^ mult_i` with monic
/// irreducible factors, sorted canonically (degree, then coefficients).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: Elem,
    pub factors: Vec<(Poly, u32)>,
}

impl Factorization {
    fn sorted(unit: Elem, mut factors: Vec<(Poly, u32)>) -> Factorization {
        factors.sort_by(|(a, ma), (b, mb)| a.canonical_cmp(b).then(ma.cmp(mb)));
        Factorization { unit, factors }
    }

    /// Multiplies the factorization back out.
    pub fn expand(&self) -> Poly {
        let mut acc = Poly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            acc = &acc * &f.pow(*m);
        }
        acc
    }
}

/// Factors over the coefficient field of `a`, dispatching on its kind.
pub fn factor(a: &Poly, seed: u64) -> Result<Factorization, FactorError> {
    let field = a.field();
    if field.is_finite() {
        Ok(factor_finite(a, seed))
    } else if field.is_rationals() {
        factor_rational(a, seed)
    } else {
        Err(FactorError::UnsupportedField(field.label()))
    }
}

/// Groups the irreducible factors of `a` by exponent, multiplying together
/// factors that share one: the result has the same shape as a squarefree
/// decomposition but is valid in every characteristic.
///
/// In characteristic zero the grouped factorization coincides with Yun's
/// decomposition, so over extensions of `Q` (where full factorization is
/// unavailable) the Yun route is used directly — gcds are all it needs.
pub fn multiplicity_profile(a: &Poly, seed: u64) -> Result<Vec<(Poly, u32)>, FactorError> {
    assert!(!a.is_zero(), "the zero polynomial has no multiplicity profile");
    let field = a.field();
    let factors = if field.is_finite() {
        factor_finite(a, seed).factors
    } else if field.is_rationals() {
        factor_rational(a, seed)?.factors
    } else {
        return Ok(a
            .squarefree_decomposition()
            .expect("characteristic-zero extension"));
    };
    let mut classes: BTreeMap<u32, Poly> = BTreeMap::new();
    for (f, m) in factors {
        classes
            .entry(m)
            .and_modify(|acc| *acc = &*acc * &f)
            .or_insert(f);
    }
    Ok(classes.into_iter().map(|(m, f)| (f, m)).collect())
}

/// Whether a nonconstant polynomial is irreducible over its coefficient
/// field.
pub fn is_irreducible(a: &Poly, seed: u64) -> Result<bool, FactorError> {
    match a.degree() {
        None | Some(0) => return Err(FactorError::ConstantInput),
        Some(_) => {}
    }
    let f = factor(a, seed)?;
    Ok(f.factors.len() == 1 && f.factors[0].1 == 1)
}

// ---------------------------------------------------------------------------
// Finite fields: squarefree split + distinct-degree + Cantor-Zassenhaus.
// ---------------------------------------------------------------------------

/// Factors over a finite field `F_p` or `F_p[z]/(v)`.
///
/// # Panics
/// Panics on characteristic-zero input or the zero polynomial.
pub fn factor_finite(a: &Poly, seed: u64) -> Factorization {
    let field = a.field().clone();
    assert!(field.is_finite(), "factor_finite needs positive characteristic");
    assert!(!a.is_zero(), "cannot factor the zero polynomial");
    let unit = a.lc();
    if a.degree() == Some(0) {
        return Factorization { unit, factors: Vec::new() };
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let monic = a.make_monic();
    let mut factors = Vec::new();
    for (sf, mult) in squarefree_parts_char_p(&monic) {
        for (prod, d) in distinct_degree_split(&sf) {
            for irr in equal_degree_split(&prod, d, &mut rng) {
                factors.push((irr, mult));
            }
        }
    }
    Factorization::sorted(unit, factors)
}

/// Squarefree decomposition valid in characteristic p: the Yun-style loop
/// handles multiplicities not divisible by p, and whatever remains is a
/// p-th power whose root is recovered coefficient-wise through Frobenius.
fn squarefree_parts_char_p(a: &Poly) -> Vec<(Poly, u32)> {
    debug_assert!(a.is_monic());
    let p: u32 = a
        .field()
        .characteristic()
        .to_u32()
        .expect("characteristic too large for multiplicity bookkeeping");
    if a.degree() == Some(0) {
        return Vec::new();
    }
    let d = a.derivative();
    if d.is_zero() {
        // a = b(x^p)^... : strip one Frobenius layer.
        return squarefree_parts_char_p(&frobenius_root(a))
            .into_iter()
            .map(|(f, m)| (f, m * p))
            .collect();
    }
    let mut c = a.gcd(&d);
    let mut w = a.exact_div(&c);
    let mut out = Vec::new();
    let mut i = 1u32;
    while w.degree() != Some(0) {
        let y = w.gcd(&c);
        let z = w.exact_div(&y);
        if z.degree() != Some(0) {
            out.push((z, i));
        }
        c = c.exact_div(&y);
        w = y;
        i += 1;
    }
    // Multiplicities divisible by p survive in c with their full exponent.
    if c.degree() != Some(0) {
        for (f, m) in squarefree_parts_char_p(&frobenius_root(&c)) {
            out.push((f, m * p));
        }
    }
    out
}

/// For `a` with identically-zero derivative (so `a = b(x)^p`), returns `b`.
/// The p-th root of a coefficient `c` in `F_q` is `c^(q/p)`.
fn frobenius_root(a: &Poly) -> Poly {
    let field = a.field();
    let p = field
        .characteristic()
        .to_usize()
        .expect("characteristic exceeds usize");
    let q = field.order().unwrap();
    let exp = &q / BigUint::from(p);
    let deg = a.degree().unwrap();
    debug_assert_eq!(deg % p, 0, "p-th power must have degree divisible by p");
    let mut coeffs = Vec::with_capacity(deg / p + 1);
    for i in 0..=deg / p {
        coeffs.push(a.coeff(p * i).pow(&exp));
    }
    Poly::new(field, coeffs)
}

/// Splits a monic squarefree polynomial into products of irreducibles of
/// equal degree, returning `(product, degree)` pairs.
fn distinct_degree_split(sf: &Poly) -> Vec<(Poly, usize)> {
    let field = sf.field();
    let q = field.order().unwrap();
    let x = Poly::var(field);
    let mut cur = sf.clone();
    let mut h = x.divrem(&cur).1;
    let mut out = Vec::new();
    let mut d = 0usize;
    while cur.degree().map_or(false, |deg| deg >= 1) {
        d += 1;
        let deg = cur.degree().unwrap();
        if 2 * d > deg {
            // Whatever is left is a single irreducible.
            out.push((cur.clone(), deg));
            break;
        }
        h = powmod(&h, &q, &cur);
        let g = (&h - &x.divrem(&cur).1).gcd(&cur);
        if g.degree().map_or(false, |dg| dg >= 1) {
            out.push((g.clone(), d));
            cur = cur.exact_div(&g);
            h = h.divrem(&cur).1;
        }
    }
    out
}

/// Cantor-Zassenhaus equal-degree splitting: `prod` is monic squarefree with
/// all irreducible factors of degree `d`.
fn equal_degree_split(prod: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Vec<Poly> {
    let deg = prod.degree().unwrap();
    if deg == d {
        return vec![prod.clone()];
    }
    let field = prod.field();
    let q = field.order().unwrap();
    let two = BigUint::from(2u32);
    loop {
        let u = random_poly_below(field, deg, rng);
        if u.degree().map_or(true, |du| du == 0) {
            continue;
        }
        // A shared factor with u is a free split.
        let g0 = u.gcd(prod);
        if let Some(dg) = g0.degree() {
            if dg >= 1 && dg < deg {
                let rest = prod.exact_div(&g0);
                let mut out = equal_degree_split(&g0, d, rng);
                out.extend(equal_degree_split(&rest, d, rng));
                return out;
            }
        }
        let w = if field.characteristic() == two {
            // Absolute trace map over F_2: sum of u^(2^i) for i below the
            // F_2-degree of the splitting field F_{q^d}.
            let rounds = field.absolute_degree() as usize * d;
            let mut v = u.divrem(prod).1;
            let mut acc = v.clone();
            for _ in 1..rounds {
                v = powmod(&v, &two, prod);
                acc = &acc + &v;
            }
            acc
        } else {
            let e = (q.pow(d as u32) - BigUint::one()) / &two;
            &powmod(&u, &e, prod) - &Poly::one(field)
        };
        let g = w.gcd(prod);
        if let Some(dg) = g.degree() {
            if dg >= 1 && dg < deg {
                let rest = prod.exact_div(&g);
                let mut out = equal_degree_split(&g, d, rng);
                out.extend(equal_degree_split(&rest, d, rng));
                return out;
            }
        }
    }
}

fn random_poly_below(field: &Field, deg: usize, rng: &mut ChaCha8Rng) -> Poly {
    let coeffs = (0..deg).map(|_| random_elem(field, rng)).collect();
    Poly::new(field, coeffs)
}

fn random_elem(field: &Field, rng: &mut ChaCha8Rng) -> Elem {
    if let Some((base, modulus)) = field.extension_parts() {
        let d = modulus.degree().unwrap();
        let coeffs = (0..d).map(|_| random_elem(base, rng)).collect();
        field.from_base_coeffs(coeffs)
    } else {
        let p = field.characteristic();
        assert!(!p.is_zero(), "random sampling needs a finite field");
        let r = rng.gen_biguint_below(&p);
        field.from_bigint(&BigInt::from(r))
    }
}

/// `b^e mod m` by square-and-multiply over the bits of `e`.
fn powmod(b: &Poly, e: &BigUint, m: &Poly) -> Poly {
    let field = b.field();
    let mut acc = Poly::one(field);
    let base = b.divrem(m).1;
    for i in (0..e.bits()).rev() {
        acc = (&acc * &acc).divrem(m).1;
        if e.bit(i) {
            acc = (&acc * &base).divrem(m).1;
        }
    }
    acc
}

// ---------------------------------------------------------------------------
// Rationals: Zassenhaus (good prime, quadratic Hensel, subset recombination).
// ---------------------------------------------------------------------------

/// Factors over `Q`.  The unit is the leading coefficient and every factor
/// is monic, e.g. `6x^2 - 5x + 1 = 6 (x - 1/2)(x - 1/3)`.
///
/// # Errors
/// [`FactorError::TooManyModularFactors`] when the chosen reduction has more
/// modular factors than the recombination cap allows.
///
/// # Panics
/// Panics if the coefficients are not rational numbers or `a` is zero.
pub fn factor_rational(a: &Poly, seed: u64) -> Result<Factorization, FactorError> {
    let field = a.field();
    assert!(field.is_rationals(), "factor_rational needs coefficients in Q");
    assert!(!a.is_zero(), "cannot factor the zero polynomial");
    let unit = a.lc();
    if a.degree() == Some(0) {
        return Ok(Factorization { unit, factors: Vec::new() });
    }
    let monic = a.make_monic();
    let mut factors = Vec::new();
    for (part, mult) in monic.squarefree_decomposition().unwrap() {
        let zx = clear_denominators(&part);
        for irr in zassenhaus_primitive(&zx, seed, RECOMBINATION_CAP)? {
            factors.push((zx_to_qpoly(field, &irr).make_monic(), mult));
        }
    }
    Ok(Factorization::sorted(unit, factors))
}

/// Monic rational polynomial -> primitive integer coefficient vector with
/// positive leading coefficient.
fn clear_denominators(a: &Poly) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in a.coeffs() {
        let r = c.as_ratio().unwrap();
        lcm = lcm.lcm(r.denom());
    }
    let ints: Vec<BigInt> = a
        .coeffs()
        .iter()
        .map(|c| {
            let r = c.as_ratio().unwrap();
            r.numer() * (&lcm / r.denom())
        })
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    ints.into_iter().map(|c| c / &content).collect()
}

fn zx_to_qpoly(field: &Field, v: &[BigInt]) -> Poly {
    Poly::new(field, v.iter().map(|c| field.from_bigint(c)).collect())
}

/// Factors a primitive squarefree integer polynomial (positive leading
/// coefficient) into primitive irreducible integer polynomials.
fn zassenhaus_primitive(
    a: &[BigInt],
    seed: u64,
    cap: usize,
) -> Result<Vec<Vec<BigInt>>, FactorError> {
    let n = a.len() - 1;
    if n == 1 {
        return Ok(vec![a.to_vec()]);
    }
    let (fp, modular) = choose_prime(a, seed);
    let r = modular.len();
    if r == 1 {
        return Ok(vec![a.to_vec()]);
    }
    if r > cap {
        return Err(FactorError::TooManyModularFactors { count: r, cap });
    }
    // Lift every modular factor to a common modulus past twice the
    // Landau-Mignotte bound, so true factors are recoverable from their
    // symmetric representatives.
    let target = BigInt::from(2) * mignotte_bound(a) + 1;
    let p_big = BigInt::from(fp.characteristic());
    let mut modulus = p_big.clone();
    while modulus < target {
        modulus = &modulus * &modulus;
    }
    let lifted = lift_all(a, &modular, &fp, &p_big, &modulus);
    Ok(recombine(a, lifted, &modulus))
}

/// Tries small primes and keeps the good reduction (squarefree, full degree)
/// with the fewest modular factors; fewer factors means a cheaper subset
/// search.  Returns the prime field and the monic modular factors.
fn choose_prime(a: &[BigInt], seed: u64) -> (Field, Vec<Poly>) {
    let lc = a.last().unwrap();
    let deg = a.len() - 1;
    let mut best: Option<(Field, Vec<Poly>)> = None;
    let mut inspected = 0usize;
    let mut p = 1u64;
    loop {
        p += 1;
        while !crate::field::is_prime_u64(p) {
            p += 1;
        }
        if (lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = Field::prime(p);
        let ap = zx_to_qpoly(&fp, a);
        if ap.degree() != Some(deg) {
            continue;
        }
        if ap.gcd(&ap.derivative()).degree() != Some(0) {
            continue; // not squarefree mod p
        }
        let fac = factor_finite(&ap.make_monic(), seed);
        let polys: Vec<Poly> = fac.factors.into_iter().map(|(f, _)| f).collect();
        let count = polys.len();
        if count == 1 {
            return (fp, polys);
        }
        if best.as_ref().map_or(true, |(_, b)| count < b.len()) {
            best = Some((fp, polys));
        }
        inspected += 1;
        if inspected >= 5 {
            return best.unwrap();
        }
    }
}

/// Landau-Mignotte style bound: coefficients of `lc(a) * h` for any monic
/// rational factor `h` of `a` are at most `sqrt(n+1) * 2^n * H(a) * |lc(a)|`.
fn mignotte_bound(a: &[BigInt]) -> BigInt {
    let n = a.len() - 1;
    let height = a.iter().map(|c| c.abs()).max().unwrap();
    let root = BigInt::from(BigUint::from(n as u64 + 1).sqrt() + BigUint::one());
    root * (BigInt::one() << n) * height * a.last().unwrap().abs()
}

/// Peels monic lifted factors off one at a time: each step lifts the pair
/// `(first factor, everything else)` from mod p to the full modulus with
/// quadratic Hensel steps, emits the monic factor, and recurses on the
/// cofactor.
fn lift_all(
    f: &[BigInt],
    modular: &[Poly],
    fp: &Field,
    p: &BigInt,
    modulus: &BigInt,
) -> Vec<Vec<BigInt>> {
    if modular.len() == 1 {
        // Last cofactor: normalize monic mod the full modulus.
        let lc_inv = mod_inverse(f.last().unwrap(), modulus);
        return vec![zp_scale(f, &lc_inv, modulus)];
    }
    let h0 = &modular[0];
    let mut g0 = Poly::constant(fp.from_bigint(f.last().unwrap()));
    for m in &modular[1..] {
        g0 = &g0 * m;
    }
    let (one, s0, t0) = g0.xgcd(h0);
    debug_assert!(one.degree() == Some(0));
    let (g, h) = lift_pair(
        f,
        fp_to_zx(&g0),
        fp_to_zx(h0),
        fp_to_zx(&s0),
        fp_to_zx(&t0),
        p,
        modulus,
    );
    let mut out = vec![h];
    out.extend(lift_all(&g, &modular[1..], fp, p, modulus));
    out
}

/// One classical quadratic Hensel chain: given `f = g*h (mod p)` with `h`
/// monic and a Bezout pair `s*g + t*h = 1 (mod p)`, doubles the modulus until
/// it reaches `modulus`, maintaining the factorization and the Bezout pair.
fn lift_pair(
    f: &[BigInt],
    g: Vec<BigInt>,
    h: Vec<BigInt>,
    s: Vec<BigInt>,
    t: Vec<BigInt>,
    p: &BigInt,
    modulus: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut m = p.clone();
    let (mut g, mut h, mut s, mut t) = (g, h, s, t);
    while &m < modulus {
        let m2 = &m * &m;
        let e = zp_sub(&zp_norm(f, &m2), &zp_mul(&g, &h, &m2), &m2);
        let se = zp_mul(&s, &e, &m2);
        let (q, r) = zp_divrem_monic(&se, &h, &m2);
        let g1 = zp_add(
            &zp_add(&g, &zp_mul(&t, &e, &m2), &m2),
            &zp_mul(&q, &g, &m2),
            &m2,
        );
        let h1 = zp_add(&h, &r, &m2);
        // Refresh the Bezout pair for the next doubling.
        let b = zp_sub(
            &zp_add(&zp_mul(&s, &g1, &m2), &zp_mul(&t, &h1, &m2), &m2),
            &[BigInt::one()],
            &m2,
        );
        let sb = zp_mul(&s, &b, &m2);
        let (c, d) = zp_divrem_monic(&sb, &h1, &m2);
        let s1 = zp_sub(&s, &d, &m2);
        let t1 = zp_sub(
            &zp_sub(&t, &zp_mul(&t, &b, &m2), &m2),
            &zp_mul(&c, &g1, &m2),
            &m2,
        );
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = m2;
    }
    (g, h)
}

/// Subset search over the lifted factors (von zur Gathen's recombination
/// loop): a subset is a true factor exactly when the symmetric representative
/// of `lc * product` divides what is left of `a`.
fn recombine(a: &[BigInt], lifted: Vec<Vec<BigInt>>, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    let mut fstar = a.to_vec();
    let mut pool: Vec<usize> = (0..lifted.len()).collect();
    let mut out = Vec::new();
    let mut size = 1usize;
    'sizes: while 2 * size <= pool.len() {
        let mut combo = Combinations::new(pool.len(), size);
        while let Some(pick) = combo.next() {
            let b = fstar.last().unwrap().clone();
            let mut cand = vec![b.mod_floor(modulus)];
            for &i in pick {
                cand = zp_mul(&cand, &lifted[pool[i]], modulus);
            }
            let cand = primitive_part(&zp_sym(&cand, modulus));
            if let Some(quot) = exact_zx_divide(&fstar, &cand) {
                out.push(cand);
                fstar = quot;
                let picked: Vec<usize> = pick.iter().map(|&i| pool[i]).collect();
                pool.retain(|i| !picked.contains(i));
                continue 'sizes;
            }
        }
        size += 1;
    }
    if fstar.len() > 1 {
        out.push(primitive_part(&fstar));
    }
    out
}

/// `a / b` over the integers when the division is exact, `None` otherwise.
fn exact_zx_divide(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if b.len() > a.len() || b.len() < 2 {
        return None;
    }
    let q = Field::rationals();
    let (quot, rem) = zx_to_qpoly(&q, a).divrem(&zx_to_qpoly(&q, b));
    if !rem.is_zero() {
        return None;
    }
    // Gauss: a primitive divisor of a primitive polynomial has an integer
    // cofactor.
    Some(
        quot.coeffs()
            .iter()
            .map(|c| {
                let r = c.as_ratio().unwrap();
                debug_assert!(r.denom().is_one());
                r.numer().clone()
            })
            .collect(),
    )
}

fn primitive_part(v: &[BigInt]) -> Vec<BigInt> {
    let mut content = BigInt::zero();
    for c in v {
        content = content.gcd(c);
    }
    if v.last().map_or(false, |c| c.is_negative()) {
        content = -content;
    }
    v.iter().map(|c| c / &content).collect()
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let eg = a.mod_floor(m).extended_gcd(m);
    debug_assert!(eg.gcd.is_one(), "leading coefficient not invertible mod p^k");
    eg.x.mod_floor(m)
}

fn fp_to_zx(a: &Poly) -> Vec<BigInt> {
    a.coeffs()
        .iter()
        .map(|c| BigInt::from(c.as_residue().unwrap().clone()))
        .collect()
}

// Plain integer-vector arithmetic mod m (constant-first, trailing zeros
// trimmed); enough ring structure for Hensel lifting.

fn zp_trim(v: &mut Vec<BigInt>) {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
}

fn zp_norm(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = a.iter().map(|c| c.mod_floor(m)).collect();
    zp_trim(&mut v);
    v
}

fn zp_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut v = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero);
        let y = b.get(i).unwrap_or(&zero);
        v.push((x + y).mod_floor(m));
    }
    zp_trim(&mut v);
    v
}

fn zp_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let mut v = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).unwrap_or(&zero);
        let y = b.get(i).unwrap_or(&zero);
        v.push((x - y).mod_floor(m));
    }
    zp_trim(&mut v);
    v
}

fn zp_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] += x * y;
        }
    }
    for c in &mut v {
        *c = c.mod_floor(m);
    }
    zp_trim(&mut v);
    v
}

fn zp_scale(a: &[BigInt], c: &BigInt, m: &BigInt) -> Vec<BigInt> {
    let mut v: Vec<BigInt> = a.iter().map(|x| (x * c).mod_floor(m)).collect();
    zp_trim(&mut v);
    v
}

/// Division by a monic divisor mod m.
fn zp_divrem_monic(a: &[BigInt], d: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    debug_assert!(d.last().map_or(false, |c| c.is_one()));
    let dd = d.len() - 1;
    let mut rem = zp_norm(a, m);
    if rem.len() <= dd {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    while rem.len() > dd {
        let c = rem.last().unwrap().clone();
        let k = rem.len() - 1 - dd;
        if !c.is_zero() {
            for i in 0..dd {
                rem[k + i] = (&rem[k + i] - &c * &d[i]).mod_floor(m);
            }
        }
        quot[k] = c;
        rem.pop();
        while rem.len() > dd && rem.last().map_or(false, |c| c.is_zero()) {
            rem.pop();
        }
    }
    zp_trim(&mut rem);
    (quot, rem)
}

/// Symmetric representative: each residue mapped into `(-m/2, m/2]`.
fn zp_sym(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half = m / BigInt::from(2);
    a.iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

/// Lexicographic subset iterator over `{0, .., n-1}` of fixed size `k`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    started: bool,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Combinations {
        Combinations {
            n,
            idx: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }

    fn next(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.idx);
        }
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.idx[i] != i + self.n - k {
                break;
            }
        }
        self.idx[i] += 1;
        for j in i + 1..k {
            self.idx[j] = self.idx[j - 1] + 1;
        }
        Some(&self.idx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    fn q() -> Field {
        Field::rationals()
    }

    fn ratio(n: i64, d: i64) -> Elem {
        q().from_ratio(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    #[test]
    fn rational_units_and_monic_factors() {
        // 6x^2 - 5x + 1 = 6 (x - 1/2)(x - 1/3).
        let f = q();
        let a = Poly::from_ints(&f, &[1, -5, 6]);
        let fac = factor_rational(&a, 0).unwrap();
        assert_eq!(fac.unit, f.from_i64(6));
        let half = Poly::new(&f, vec![-&ratio(1, 2), f.one()]);
        let third = Poly::new(&f, vec![-&ratio(1, 3), f.one()]);
        assert_eq!(fac.factors, vec![(half, 1), (third, 1)]);
        assert_eq!(fac.expand(), a);
    }

    #[test]
    fn rational_repeated_factors() {
        // (x^2 - 1)^2 = (x - 1)^2 (x + 1)^2.
        let f = q();
        let a = Poly::from_ints(&f, &[1, 0, -2, 0, 1]);
        let fac = factor_rational(&a, 0).unwrap();
        assert_eq!(
            fac.factors,
            vec![
                (Poly::from_ints(&f, &[-1, 1]), 2),
                (Poly::from_ints(&f, &[1, 1]), 2),
            ]
        );
    }

    #[test]
    fn x4_plus_1_is_irreducible_over_q() {
        // Splits modulo every prime, so this genuinely exercises
        // recombination of lifted modular factors.
        let f = q();
        let a = Poly::from_ints(&f, &[1, 0, 0, 0, 1]);
        let fac = factor_rational(&a, 0).unwrap();
        assert_eq!(fac.factors.len(), 1);
        assert_eq!(fac.factors[0], (a.clone(), 1));
        assert!(is_irreducible(&a, 0).unwrap());
    }

    #[test]
    fn x4_plus_1_mod_small_primes() {
        // 2: (x+1)^4; 3 and 5: two quadratics; 17: four linear factors.
        let counts = [(2u64, 1usize, 4u32), (3, 2, 1), (5, 2, 1), (17, 4, 1)];
        for (p, nfac, mult) in counts {
            let fp = Field::prime(p);
            let a = Poly::from_ints(&fp, &[1, 0, 0, 0, 1]);
            let fac = factor_finite(&a, 0);
            assert_eq!(fac.factors.len(), nfac, "mod {p}");
            assert!(fac.factors.iter().all(|(_, m)| *m == mult), "mod {p}");
            assert_eq!(fac.expand(), a, "mod {p}");
        }
    }

    #[test]
    fn field_equation_polynomial_splits_completely() {
        // x^9 - x over F_3 is the product of all monic irreducibles of
        // degree dividing 2: three linear and (9 - 3)/2 = 3 quadratic.
        let f3 = Field::prime(3);
        let x = Poly::var(&f3);
        let a = &x.pow(9) - &x;
        let fac = factor_finite(&a, 7);
        assert_eq!(fac.factors.len(), 6);
        let linear = fac.factors.iter().filter(|(f, _)| f.degree() == Some(1)).count();
        let quad = fac.factors.iter().filter(|(f, _)| f.degree() == Some(2)).count();
        assert_eq!((linear, quad), (3, 3));
        assert_eq!(fac.expand(), a);
    }

    #[test]
    fn char_2_trace_splitting() {
        // (x^3 + x + 1)(x^3 + x^2 + 1): both cubics irreducible over F_2,
        // so the degree-3 block must be split by the trace map.
        let f2 = Field::prime(2);
        let a = Poly::from_ints(&f2, &[1, 1, 0, 1]);
        let b = Poly::from_ints(&f2, &[1, 0, 1, 1]);
        let prod = &a * &b;
        let fac = factor_finite(&prod, 0);
        assert_eq!(fac.factors, vec![(b, 1), (a, 1)]);
    }

    #[test]
    fn frobenius_content_over_f2() {
        // x^4 + 1 = (x + 1)^4 over F_2: derivative is identically zero, the
        // squarefree step must peel two Frobenius layers.
        let f2 = Field::prime(2);
        let a = Poly::from_ints(&f2, &[1, 0, 0, 0, 1]);
        let fac = factor_finite(&a, 0);
        assert_eq!(fac.factors, vec![(Poly::from_ints(&f2, &[1, 1]), 4)]);
    }

    #[test]
    fn factoring_over_extension_field() {
        // Over F_9 = F_3[z]/(z^2 + 1), x^2 + 1 = (x - z)(x + z).
        let f3 = Field::prime(3);
        let f9 = Field::extend_unchecked(&f3, &Poly::from_ints(&f3, &[1, 0, 1]));
        let a = Poly::from_ints(&f9, &[1, 0, 1]);
        let fac = factor_finite(&a, 0);
        assert_eq!(fac.factors.len(), 2);
        assert!(fac.factors.iter().all(|(f, m)| f.degree() == Some(1) && *m == 1));
        assert_eq!(fac.expand(), a);
        let z = f9.adjoined_root();
        let roots: Vec<Elem> = fac.factors.iter().map(|(f, _)| -&f.coeff(0)).collect();
        assert!(roots.contains(&z) && roots.contains(&-&z));
    }

    #[test]
    fn profile_groups_by_exponent() {
        // x^3 (x + 1)^2 over F_3: the cube is wild (3 | 3), the square tame.
        let f3 = Field::prime(3);
        let x = Poly::var(&f3);
        let a = &x.pow(3) * &Poly::from_ints(&f3, &[1, 1]).pow(2);
        assert_eq!(
            multiplicity_profile(&a, 0).unwrap(),
            vec![(Poly::from_ints(&f3, &[1, 1]), 2), (x, 3)]
        );
    }

    #[test]
    fn profile_matches_yun_on_rationals() {
        let f = q();
        let x = Poly::var(&f);
        let a = &(&x.pow(3) * &Poly::from_ints(&f, &[1, 1]).pow(2))
            * &Poly::from_ints(&f, &[1, 0, 1]);
        assert_eq!(
            multiplicity_profile(&a, 0).unwrap(),
            a.squarefree_decomposition().unwrap()
        );
    }

    #[test]
    fn recombination_cap_is_enforced() {
        // x^4 + 1 has at least two modular factors for any good prime, so a
        // cap of 1 must trip the error.
        let a: Vec<BigInt> = [1, 0, 0, 0, 1].iter().map(|&c| BigInt::from(c)).collect();
        match zassenhaus_primitive(&a, 0, 1) {
            Err(FactorError::TooManyModularFactors { cap: 1, .. }) => {}
            other => panic!("expected cap error, got {other:?}"),
        }
    }

    #[test]
    fn factors_are_seed_independent() {
        let f5 = Field::prime(5);
        let x = Poly::var(&f5);
        let a = &(&x.pow(12) - &x) * &Poly::from_ints(&f5, &[3, 1, 4, 1]);
        let first = factor_finite(&a, 0);
        for seed in 1..6 {
            assert_eq!(factor_finite(&a, seed), first);
        }
    }

    #[test]
    fn unsupported_and_degenerate_inputs() {
        let f = q();
        let qi = Field::extend(&f, &Poly::from_ints(&f, &[1, 0, 1])).unwrap();
        let a = Poly::from_ints(&qi, &[1, 1]);
        assert!(matches!(
            is_irreducible(&a, 0),
            Err(FactorError::UnsupportedField(_))
        ));
        assert_eq!(
            is_irreducible(&Poly::from_ints(&f, &[7]), 0),
            Err(FactorError::ConstantInput)
        );
        let c = factor_rational(&Poly::from_ints(&f, &[5]), 0).unwrap();
        assert_eq!(c.unit, f.from_i64(5));
        assert!(c.factors.is_empty());
    }

    #[test]
    fn combination_iterator_is_exhaustive() {
        let mut c = Combinations::new(4, 2);
        let mut seen = Vec::new();
        while let Some(s) = c.next() {
            seen.push(s.to_vec());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
    }
}
