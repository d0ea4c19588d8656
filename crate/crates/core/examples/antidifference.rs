//! Solving `f(x_i + a) - f(x_i) = g` for polynomial `f`.

use triaut::scalar::int;
use triaut::structure::solve_difference;
use triaut::{parse_polynomial, AlgebraMode, Result};

fn main() -> Result<()> {
    let n = 3;
    for (g, i, a) in [("x1", 1, 1), ("x1^3 + x2", 1, 2), ("x3*x2^2 - 1", 2, -1)] {
        let g = parse_polynomial(g, AlgebraMode::Commutative, n)?;
        let f = solve_difference(&g, i, &int(a))?;
        println!("shift x{i} by {a}: g = {g}");
        println!("  f = {f}");
    }

    // Free mode: the shifted variable appears inside words.
    let g = parse_polynomial("x2*x1*x2", AlgebraMode::Free, 2)?;
    let f = solve_difference(&g, 1, &int(1))?;
    println!("free: g = {g}, f = {f}");
    Ok(())
}
