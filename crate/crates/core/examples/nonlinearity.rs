//! Iterated commutators whose constant term grows with the iteration depth.

use triaut::analysis::{nonlinearity_witness, value_at_zero};
use triaut::Result;

fn main() -> Result<()> {
    for (p, l, m) in [(2, 1, 2), (3, 1, 3), (4, 2, 4)] {
        let w = nonlinearity_witness(p, l, m)?;
        println!("p={p} l={l} m={m}: {w}");
        println!("  value at 0: {}", value_at_zero(&w)?);
    }
    Ok(())
}
