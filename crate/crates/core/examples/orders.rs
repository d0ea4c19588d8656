//! Orders, diagonalization, pair classification and involutions.

use triaut::analysis::{classify_pair, diagonalize_elementary, element_order, fix_ifix_split, ia_level, Diagonalization};
use triaut::parse::{parse_elementary, parse_endomorphism};
use triaut::{parse_polynomial, AlgebraMode, Result};

fn main() -> Result<()> {
    let mode = AlgebraMode::Commutative;
    for text in ["sigma(1, -1; x2^2)", "sigma(1, 1; x2)", "sigma(2, 1/2; x1 + 1)"] {
        let e = parse_elementary(text, mode, 2)?;
        let order = element_order(&e);
        match diagonalize_elementary(&e)? {
            Diagonalization::Conjugator { c, d } => println!("{e}: {order}, c = {c}, d = {d}"),
            Diagonalization::NotDiagonalizable => println!("{e}: {order}, not diagonalizable"),
        }
    }

    let a = parse_elementary("sigma(1, 2; x2^3)", mode, 3)?;
    let b = parse_elementary("sigma(2, 1; 5)", mode, 3)?;
    println!("<{a}, {b}>: {}", classify_pair(&a, &b)?);

    let phi = parse_endomorphism("(x1 + x2^3, x2 + x3^3, x3)", mode)?;
    println!("{phi}: {}", ia_level(&phi)?);

    let swap = parse_endomorphism("(x2, x1)", mode)?;
    let f = parse_polynomial("x1^2 + x2", mode, 2)?;
    let (fix, ifix) = fix_ifix_split(&f, &swap)?;
    println!("{f} = ({fix}) + ({ifix})");
    Ok(())
}
