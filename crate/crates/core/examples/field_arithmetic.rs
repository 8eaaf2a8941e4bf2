//! GF(2^7) arithmetic: XOR addition, table-driven multiplication,
//! inverses, powers and polynomials.
//!
//!     cargo run --example field_arithmetic

use rs_keychain::gf::{tables, Gf, GfPoly, ORDER, PRIMITIVE_POLY};

fn main() {
    println!("primitive polynomial: {PRIMITIVE_POLY:#b} ({PRIMITIVE_POLY})");

    let a = Gf::from_u7(114);
    let b = Gf::from_u7(12);
    println!("{a} + {b} = {}", a + b);
    println!("2 * 64 = {}", Gf::ALPHA * Gf::from_u7(64));
    println!("2^7 = {}", Gf::ALPHA.pow(7).unwrap());
    println!("inverse of 2 = {}", Gf::ALPHA.inv().unwrap());
    println!("inverse of 0: {}", Gf::ZERO.inv().unwrap_err());

    let t = tables();
    print!("first powers of α:");
    for e in &t.exp()[..10] {
        print!(" {e}");
    }
    println!();
    let order = (1..=ORDER)
        .find(|&k| Gf::ALPHA.pow(k as i64).unwrap() == Gf::ONE)
        .unwrap();
    println!("order of α: {order}");

    // (x + 1)^2 = x^2 + 1 in characteristic 2
    let p = GfPoly::new(vec![Gf::ONE, Gf::ONE]);
    let sq = &p * &p;
    println!("(1 + x)^2 coefficients: {:?}", sq.coeffs());
    println!("(1 + x)^2 at α: {}", sq.eval(Gf::ALPHA));
}
