//! Oracle families and reproducible random-instance generators.
//!
//! The families pin the engine to answers that are known *independently*
//! of the formulas it implements — classical genus formulas, hand-expanded
//! closed forms, and elementary geometric facts.  Each case records which
//! kind of oracle backs its expectation, so a failure names both the
//! instance and the authority it contradicts.

use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::Field;
use crate::genus::{evaluate, EvalOptions};
use crate::poly::Poly;
use crate::ramification::RationalMap;

/// What pins a case's expected values.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    /// Hand evaluation of a closed form (recorded in the case label).
    ClosedForm,
    /// A classical formula from the literature, independent of this
    /// engine.
    Literature,
    /// An elementary geometric fact that needs no formula at all.
    Direct,
}

/// The registered oracle families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `x^m` against `y^n` over the rationals: the curve splits into
    /// `gcd(m, n)` rational components, so the total is `-2*gcd(m, n)`.
    Superelliptic,
    /// `x^m - x` against `y^2` over the rationals for odd `m`: a
    /// hyperelliptic curve with squarefree odd-degree branch polynomial,
    /// genus `(m - 1) / 2` by the classical count.
    HyperellipticOdd,
    /// `x^p - x` against `y` over `F_p`: the graph of a map is a line
    /// whatever the ramification does, so the total is `-2`.
    AdditiveGraph,
}

/// One oracle instance: the pair, the expected answers, and the authority
/// for them.
#[derive(Debug, Clone)]
pub struct FamilyCase {
    pub family: Family,
    /// Human-readable instantiation, e.g. `x^4 = y^6 over Q`.
    pub label: String,
    pub f: RationalMap,
    pub g: RationalMap,
    pub expected_sum_chi: i64,
    /// `None` when the case makes no claim about a single genus (the
    /// component count is not 1 or not certified).
    pub expected_genus: Option<i64>,
    pub oracle: OracleKind,
}

/// Outcome of evaluating one case.
#[derive(Debug, Clone)]
pub struct CaseResult {
    pub case: FamilyCase,
    /// `(sum_chi, genus)` on success, the error text otherwise.
    pub got: Result<(i64, Option<i64>), String>,
}

impl CaseResult {
    pub fn pass(&self) -> bool {
        match &self.got {
            Ok((sum_chi, genus)) => {
                *sum_chi == self.case.expected_sum_chi
                    && (self.case.expected_genus.is_none()
                        || *genus == self.case.expected_genus)
            }
            Err(_) => false,
        }
    }

    /// One line suitable for a test log, with the expected/actual diff.
    pub fn describe(&self) -> String {
        let verdict = if self.pass() { "pass" } else { "FAIL" };
        let expected = match self.case.expected_genus {
            Some(genus) => {
                format!("sum_chi {} genus {genus}", self.case.expected_sum_chi)
            }
            None => format!("sum_chi {}", self.case.expected_sum_chi),
        };
        let got = match &self.got {
            Ok((sum_chi, Some(genus))) => format!("sum_chi {sum_chi} genus {genus}"),
            Ok((sum_chi, None)) => format!("sum_chi {sum_chi}"),
            Err(e) => format!("error: {e}"),
        };
        format!("{}: expected {expected}, got {got} — {verdict}", self.case.label)
    }
}

fn case(
    family: Family,
    f: RationalMap,
    g: RationalMap,
    field_name: &str,
    expected_sum_chi: i64,
    expected_genus: Option<i64>,
    oracle: OracleKind,
) -> FamilyCase {
    let label = format!(
        "{} = {} over {field_name}",
        f.display_with("x"),
        g.display_with("y")
    );
    FamilyCase { family, label, f, g, expected_sum_chi, expected_genus, oracle }
}

/// The registered cases of one family.
pub fn family_cases(family: Family) -> Vec<FamilyCase> {
    let mut cases = Vec::new();
    match family {
        Family::Superelliptic => {
            let q = Field::rationals();
            for m in 2..=8u32 {
                for n in 2..=8u32 {
                    let d = m.gcd(&n) as i64;
                    let f = RationalMap::from_polynomial(Poly::var(&q).pow(m)).unwrap();
                    let g = RationalMap::from_polynomial(Poly::var(&q).pow(n)).unwrap();
                    let genus = (d == 1).then_some(0);
                    cases.push(case(
                        family,
                        f,
                        g,
                        "Q",
                        -2 * d,
                        genus,
                        OracleKind::ClosedForm,
                    ));
                }
            }
        }
        Family::HyperellipticOdd => {
            let q = Field::rationals();
            for m in [3u32, 5, 7, 9] {
                let x = Poly::var(&q);
                let f = RationalMap::from_polynomial(&x.pow(m) - &x).unwrap();
                let g = RationalMap::from_polynomial(x.pow(2)).unwrap();
                let genus = (m as i64 - 1) / 2;
                cases.push(case(
                    family,
                    f,
                    g,
                    "Q",
                    2 * genus - 2,
                    Some(genus),
                    OracleKind::Literature,
                ));
            }
        }
        Family::AdditiveGraph => {
            for p in [2u64, 3, 5] {
                let fp = Field::prime(p);
                let x = Poly::var(&fp);
                let f = RationalMap::from_polynomial(&x.pow(p as u32) - &x).unwrap();
                let g = RationalMap::from_polynomial(x).unwrap();
                cases.push(case(
                    family,
                    f,
                    g,
                    &fp.label(),
                    -2,
                    Some(0),
                    OracleKind::Direct,
                ));
            }
        }
    }
    cases
}

/// Evaluates every case of the family and reports exact comparisons.
pub fn run_family(family: Family, seed: u64) -> Vec<CaseResult> {
    family_cases(family)
        .into_iter()
        .map(|case| {
            let options = EvalOptions { components: None, seed };
            let got = evaluate(&case.f, &case.g, &options)
                .map(|report| (report.sum_chi, report.genus()))
                .map_err(|e| e.to_string());
            CaseResult { case, got }
        })
        .collect()
}

fn random_coeff(rng: &mut ChaCha8Rng) -> i64 {
    rng.gen_range(-9..=9)
}

fn random_poly(rng: &mut ChaCha8Rng, field: &Field, degree: usize) -> Poly {
    let mut coeffs: Vec<i64> = (0..degree).map(|_| random_coeff(rng)).collect();
    let mut lead = random_coeff(rng);
    while lead == 0 {
        lead = random_coeff(rng);
    }
    coeffs.push(lead);
    Poly::from_ints(field, &coeffs)
}

/// A reproducible pair of polynomial maps over the rationals with
/// coefficients in `[-9, 9]` and degrees in `[2, max_degree]`.
pub fn generate_random_pair(seed: u64, max_degree: usize) -> (RationalMap, RationalMap) {
    assert!(max_degree >= 2, "the degree range [2, max_degree] must be nonempty");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = Field::rationals();
    let mut side = || {
        let degree = rng.gen_range(2..=max_degree);
        RationalMap::from_polynomial(random_poly(&mut rng, &q, degree))
            .expect("a polynomial of degree >= 2 is a nonconstant map")
    };
    let f = side();
    let g = side();
    (f, g)
}

/// A reproducible rational map over the rationals (denominators allowed)
/// with coefficients in `[-9, 9]` and degree in `[1, max_degree]`.
pub fn random_rational_map(seed: u64, max_degree: usize) -> RationalMap {
    assert!(max_degree >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = Field::rationals();
    loop {
        let dn = rng.gen_range(0..=max_degree);
        let dd = rng.gen_range(0..=max_degree);
        let n = random_poly(&mut rng, &q, dn);
        let d = random_poly(&mut rng, &q, dd);
        // Cancellation can collapse the quotient to a constant; retry.
        if let Ok(map) = RationalMap::new(n, d) {
            return map;
        }
    }
}

/// A reproducible degree-one map `(a*x + b)/(c*x + d)` over the rationals
/// with a nonzero determinant — an automorphism of the line.
pub fn random_mobius(seed: u64) -> RationalMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q = Field::rationals();
    loop {
        let (a, b, c, d) = (
            random_coeff(&mut rng),
            random_coeff(&mut rng),
            random_coeff(&mut rng),
            random_coeff(&mut rng),
        );
        if a * d - b * c == 0 {
            continue;
        }
        let map = RationalMap::new(
            Poly::from_ints(&q, &[b, a]),
            Poly::from_ints(&q, &[d, c]),
        )
        .expect("a nonzero determinant keeps the map nonconstant");
        debug_assert_eq!(map.degree(), 1);
        return map;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn superelliptic_family_passes() {
        let results = run_family(Family::Superelliptic, 0);
        assert_eq!(results.len(), 49);
        for r in &results {
            assert!(r.pass(), "{}", r.describe());
        }
    }

    #[test]
    fn hyperelliptic_family_passes() {
        let results = run_family(Family::HyperellipticOdd, 0);
        assert_eq!(results.len(), 4);
        for r in &results {
            assert!(r.pass(), "{}", r.describe());
        }
        // The classical oracle values themselves.
        let genera: Vec<Option<i64>> =
            results.iter().map(|r| r.case.expected_genus).collect();
        assert_eq!(genera, vec![Some(1), Some(2), Some(3), Some(4)]);
    }

    #[test]
    fn additive_graph_family_passes() {
        let results = run_family(Family::AdditiveGraph, 0);
        assert_eq!(results.len(), 3);
        for r in &results {
            assert!(r.pass(), "{}", r.describe());
        }
    }

    #[test]
    fn case_descriptions_show_the_diff() {
        let mut result = run_family(Family::AdditiveGraph, 0).remove(0);
        assert!(result.describe().contains("pass"));
        assert!(result.describe().contains("x^2 + x = y over F2"));
        // Force a mismatch to see the failure shape.
        result.case.expected_sum_chi = 7;
        assert!(!result.pass());
        assert!(result.describe().contains("FAIL"));
        assert!(result.describe().contains("expected sum_chi 7"));
    }

    #[test]
    fn random_pairs_are_reproducible_and_in_range() {
        let (f1, g1) = generate_random_pair(1, 5);
        let (f2, g2) = generate_random_pair(1, 5);
        assert_eq!(f1, f2);
        assert_eq!(g1, g2);

        let (f3, g3) = generate_random_pair(2, 5);
        assert!(f1 != f3 || g1 != g3, "different seeds should vary the pair");

        for seed in 0..25 {
            let (f, g) = generate_random_pair(seed, 5);
            for map in [&f, &g] {
                assert!(map.is_polynomial());
                assert!((2..=5).contains(&map.degree()));
            }
        }
    }

    #[test]
    fn random_rational_maps_are_reproducible_and_nonconstant() {
        assert_eq!(random_rational_map(7, 4), random_rational_map(7, 4));
        for seed in 0..25 {
            let map = random_rational_map(seed, 4);
            assert!(map.degree() >= 1);
            assert!(map.degree() <= 4);
        }
    }

    #[test]
    fn mobius_maps_are_degree_one() {
        for seed in 0..25 {
            let mu = random_mobius(seed);
            assert_eq!(mu.degree(), 1);
        }
        assert_eq!(random_mobius(3), random_mobius(3));
    }
}
