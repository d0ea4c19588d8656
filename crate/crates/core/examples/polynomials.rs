//! Sparse polynomial arithmetic in the commutative and free algebras.
//!
//! ```text
//! cargo run -p triaut --example polynomials
//! ```

use triaut::{parse_polynomial, AlgebraMode, Result};

fn main() -> Result<()> {
    let p = parse_polynomial("x1 + 1/2*x2^2", AlgebraMode::Commutative, 2)?;
    let q = parse_polynomial("x1 - x2", AlgebraMode::Commutative, 2)?;
    println!("p       = {p}");
    println!("q       = {q}");
    println!("p + q   = {}", &p + &q);
    println!("p * q   = {}", &p * &q);
    println!("q^3     = {}", q.pow(3));
    println!("deg_x2  = {}", (&p * &q).degree_in_var(2)?);

    // In the free algebra x1*x2 and x2*x1 are different words.
    let a = parse_polynomial("x1*x2 - x2*x1", AlgebraMode::Free, 2)?;
    let b = parse_polynomial("x1 + x2", AlgebraMode::Free, 2)?;
    println!("[x1,x2] = {a}");
    println!("(x1 + x2)^2 = {}", b.pow(2));
    println!("abelianized commutator = {}", a.abelianize()?);

    // Substitution x1 -> x1 + x2^2, x2 -> x2 + 1.
    let images = [
        parse_polynomial("x1 + x2^2", AlgebraMode::Commutative, 2)?,
        parse_polynomial("x2 + 1", AlgebraMode::Commutative, 2)?,
    ];
    println!("p(x1 + x2^2, x2 + 1) = {}", p.substitute(&images)?);

    match parse_polynomial("x1 + x3", AlgebraMode::Commutative, 2) {
        Err(e) => println!("parse error: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
