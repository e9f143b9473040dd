//! The exact factorization engine: rationals via Hensel lifting, finite
//! fields via seeded distinct-degree and equal-degree splitting.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run -q --example factor_polynomials
//! ```
//!
//! Factorizations are what turn "points of the line over the algebraic
//! closure" into finite, exact data: a Galois orbit of points is a monic
//! irreducible factor.  The `seed` argument drives only the internal random
//! splitting choices over finite fields — the factorization itself is
//! deterministic data.

use fibergenus::factor::{factor, is_irreducible, multiplicity_profile};
use fibergenus::field::Field;
use fibergenus::poly::Poly;

fn show(a: &Poly) {
    let fact = factor(a, 0).unwrap();
    let parts: Vec<String> = fact
        .factors
        .iter()
        .map(|(p, m)| {
            let base = format!("({})", p.display_with("x"));
            if *m == 1 { base } else { format!("{base}^{m}") }
        })
        .collect();
    println!(
        "{} = {} * {}",
        a.display_with("x"),
        fact.unit,
        parts.join(" * ")
    );
}

fn main() {
    let q = Field::rationals();

    // Over the rationals: units are pulled out, factors are monic.
    show(&Poly::from_ints(&q, &[1, -5, 6])); // 6x^2 - 5x + 1
    show(&Poly::from_ints(&q, &[-2, 0, 1, 0, 0, 1])); // x^5 + x^2 - 2
    show(&Poly::from_ints(&q, &[1, 0, 0, 0, 1])); // x^4 + 1, irreducible

    // x^4 + 1 is irreducible over Q yet reducible modulo every prime.
    let a = Poly::from_ints(&q, &[1, 0, 0, 0, 1]);
    println!(
        "\nis x^4 + 1 irreducible over Q? {}",
        is_irreducible(&a, 0).unwrap()
    );
    for p in [2u64, 3, 5, 7, 17] {
        let fp = Field::prime(p);
        let ap = Poly::from_ints(&fp, &[1, 0, 0, 0, 1]);
        let fact = factor(&ap, 0).unwrap();
        let shape: Vec<String> = fact
            .factors
            .iter()
            .map(|(f, m)| format!("deg {}^{}", f.degree().unwrap(), m))
            .collect();
        println!("  mod {p}: splits as {}", shape.join(" * "));
    }

    // Finite fields: x^8 - x over F_2 collects every irreducible of degree
    // dividing 3 — the field equation of F_8.
    let f2 = Field::prime(2);
    let mut coeffs = vec![f2.zero(); 9];
    coeffs[1] = f2.one();
    coeffs[8] = f2.one();
    let field_eq = Poly::new(&f2, coeffs);
    println!();
    show(&field_eq);

    // In characteristic p, repeated factors can hide from the derivative
    // (x^2 + 1 = (x + 1)^2 over F_2 has derivative zero), so fiber
    // multiplicities go through the full factorization instead.
    let a = Poly::from_ints(&f2, &[1, 0, 1]);
    let profile = multiplicity_profile(&a, 0).unwrap();
    println!("\nmultiplicity profile of x^2 + 1 over {f2}:");
    for (part, mult) in &profile {
        println!("  ({})^{}", part.display_with("x"), mult);
    }

    // The same engine runs over extension fields: F_9 = F_3[z]/(z^2 + 1).
    let f3 = Field::prime(3);
    let f9 = Field::extend(&f3, &Poly::from_ints(&f3, &[1, 0, 1])).unwrap();
    let b = Poly::from_ints(&f9, &[1, 0, 1]); // x^2 + 1 gains its roots in F_9
    let fact = factor(&b, 0).unwrap();
    println!("\nx^2 + 1 over {f9}:");
    for (part, _) in &fact.factors {
        println!("  {}", part.display_with("x"));
    }
}
