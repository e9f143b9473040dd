//! Exact ground fields: the rationals, prime fields, and simple extensions
//! presented as quotient rings by an irreducible modulus.
//!
//! Run with:
//!
//! ```not_rust
//! cargo run -q --example field_towers
//! ```
//!
//! Every element is canonical — rationals in lowest terms, residues reduced,
//! extension elements reduced modulo the modulus — so equality is structural
//! and arithmetic is exact.  That exactness is what lets the genus engine
//! count coincidences (like orbit equality) with no tolerance knobs.

use fibergenus::field::{Field, FieldError};
use fibergenus::poly::Poly;
use num_bigint::BigInt;
use num_rational::BigRational;

fn main() {
    // The rationals: arbitrary precision, automatic reduction.
    let q = Field::rationals();
    let half = q.from_ratio(BigRational::new(BigInt::from(1), BigInt::from(2)));
    let third = q.from_ratio(BigRational::new(BigInt::from(1), BigInt::from(3)));
    println!("over {q}: 1/2 + 1/3 = {}", &half + &third);

    // Prime fields: residues, with inverses by the extended Euclid.
    let f7 = Field::prime(7);
    let three = f7.from_i64(3);
    println!("over {f7}: 3 * 4 = {}", &three * &f7.from_i64(4));
    println!("over {f7}: 3^-1  = {}", three.inv().unwrap());

    // A quadratic extension of the rationals: adjoin sqrt(2).
    let sqrt2_modulus = Poly::from_ints(&q, &[-2, 0, 1]); // z^2 - 2
    let q_sqrt2 = Field::extend(&q, &sqrt2_modulus).unwrap();
    let sqrt2 = q_sqrt2.adjoined_root();
    println!("\nover {q_sqrt2}:");
    println!("  sqrt2 * sqrt2       = {}", &sqrt2 * &sqrt2);
    let x = &q_sqrt2.from_i64(1) + &sqrt2; // 1 + sqrt2
    println!("  (1 + sqrt2)^-1      = {}", x.inv().unwrap());

    // Reducible moduli are rejected — silently working in a non-field would
    // corrupt every gcd downstream.
    let reducible = Poly::from_ints(&q, &[-1, 0, 1]); // z^2 - 1 = (z-1)(z+1)
    match Field::extend(&q, &reducible) {
        Err(FieldError::ReducibleModulus) => {
            println!("  z^2 - 1 rejected: reducible modulus");
        }
        other => panic!("expected a reducible-modulus error, got {other:?}"),
    }

    // A finite extension: F_9 = F_3[z]/(z^2 + 1), order 9, characteristic 3.
    let f3 = Field::prime(3);
    let f9 = Field::extend(&f3, &Poly::from_ints(&f3, &[1, 0, 1])).unwrap();
    let z = f9.adjoined_root();
    println!("\nover {f9} (order {}):", f9.order().unwrap());
    println!("  z * z     = {}", &z * &z);
    println!("  z^-1      = {}", z.inv().unwrap());

    // Frobenius is additive in characteristic p: (a + b)^p = a^p + b^p.
    let a = &z + &f9.from_i64(1);
    let b = &z + &f9.from_i64(2);
    let p = 3u64;
    println!(
        "  Frobenius: (a + b)^3 = {}, a^3 + b^3 = {}",
        (&a + &b).powi(p),
        &a.powi(p) + &b.powi(p)
    );
}
