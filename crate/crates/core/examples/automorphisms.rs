//! Composition, inversion, powers and commutators of triangular maps.
//!
//! Maps compose left to right: `x^(phi psi) = (x^phi)^psi`.

use triaut::document::{automorphism_json, parse_automorphism};
use triaut::parse::parse_endomorphism;
use triaut::{AlgebraMode, Result};

fn main() -> Result<()> {
    let phi = parse_endomorphism("(x1 + x2^2, x2 + 1)", AlgebraMode::Commutative)?;
    let psi = parse_endomorphism("(x1, 2*x2 - 3)", AlgebraMode::Commutative)?;

    println!("phi        = {phi}");
    println!("psi        = {psi}");
    println!("phi psi    = {}", phi.compose(&psi)?);
    println!("phi^-1     = {}", phi.inverse()?);
    println!("phi^3      = {}", phi.power(3)?);
    println!("[phi, psi] = {}", phi.commutator(&psi)?);
    let classes: Vec<_> = phi.classify().into_iter().map(|c| c.name()).collect();
    println!("classes    = {}", classes.join(", "));

    let (diag, uni) = phi.compose(&psi)?.split_triangular()?;
    println!("split      = {diag} * {uni}");

    let json = automorphism_json(&phi);
    println!("json       = {json}");
    assert_eq!(parse_automorphism(&json)?, phi);
    Ok(())
}
