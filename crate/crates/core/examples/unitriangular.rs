//! Layer factorization and commutator expressions for unitriangular maps.

use triaut::parse::{parse_elementary, parse_endomorphism};
use triaut::scalar::int;
use triaut::structure::{express_as_single_commutator, express_in_layer_commutator, factorize_unitriangular};
use triaut::{AlgebraMode, Result};

fn main() -> Result<()> {
    let mode = AlgebraMode::Commutative;
    let phi = parse_endomorphism("(x1 + x2*x3, x2 + x3^2, x3 + 1)", mode)?;
    let layers = factorize_unitriangular(&phi)?;
    let factors: Vec<_> = layers.factors.iter().map(ToString::to_string).collect();
    println!("{phi} = {}", factors.join(" * "));
    assert_eq!(layers.recompose()?, phi);

    // An element of layer 1 as a commutator with sigma(2, 1; 1).
    let target = parse_elementary("sigma(1, 1; x2^2)", mode, 3)?;
    let (a, b) = express_in_layer_commutator(&target, 2, &int(1))?;
    println!("{target} = [{a}, {b}]");

    let omega = parse_endomorphism("(x1 + x2, x2, x3)", mode)?;
    let expr = express_as_single_commutator(&omega)?;
    println!("{omega} = [{}, {}]", expr.left, expr.right);
    assert_eq!(expr.evaluate()?, omega);
    Ok(())
}
