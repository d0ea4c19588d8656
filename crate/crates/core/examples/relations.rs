//! The phi/tau generating set and random checks of its defining relations.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use triaut::parse::parse_elementary;
use triaut::presentation::{evaluate_b_word, random_instance, to_b_generators, RelationFamily};
use triaut::{AlgebraMode, Result};

fn main() -> Result<()> {
    let mode = AlgebraMode::Commutative;
    let n = 3;
    let e = parse_elementary("sigma(3, 2; x1^2 - x2)", mode, n)?;
    let word = to_b_generators(&e)?;
    println!("{e} = {word}");
    assert_eq!(evaluate_b_word(&word, mode, n)?, e.to_endomorphism());

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for family in RelationFamily::ALL {
        let Some(instance) = random_instance(&mut rng, family, mode, n, 2) else {
            continue;
        };
        let check = instance.check()?;
        println!("{}: holds = {}  ({} = {})", family.name(), check.holds, check.lhs, check.rhs);
    }
    Ok(())
}
