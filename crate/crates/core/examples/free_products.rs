//! Degree certificates for words in two elementary maps acting on
//! different variables.

use triaut::analysis::free_pair_check;
use triaut::group_word::GroupWord;
use triaut::parse::parse_elementary;
use triaut::{AlgebraMode, Result};

fn main() -> Result<()> {
    let mode = AlgebraMode::Commutative;
    let phi = parse_elementary("sigma(1, 1; x2^2)", mode, 2)?;
    let psi = parse_elementary("sigma(2, 1; x1^3)", mode, 2)?;
    for text in ["a b", "a^2 b^-1 a b", "b a^-1 b^2 a", "a b a^-1"] {
        let word = GroupWord::parse(text)?;
        match free_pair_check(&phi, &psi, &word) {
            Ok(c) => println!(
                "{word}: normalized {} via {}, deg_x1 = {} (expected {}), valid {}",
                c.normalized, c.conjugator, c.observed_degree, c.expected_degree, c.valid
            ),
            Err(e) => println!("{word}: {e}"),
        }
    }
    Ok(())
}
