use std::fmt;

use crate::endomorphism::Endomorphism;
use crate::error::{Error, Result};
use crate::polynomial::Polynomial;
use crate::scalar::ratio;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IaLevel {
    /// Every difference `x_i^phi - x_i` lies in `R^(k+1)`, where `R` is the
    /// ideal of constant-free polynomials.
    Level(u32),
    NotIA,
    /// The identity, which lies in every level.
    Unbounded,
}

impl fmt::Display for IaLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IaLevel::Level(k) => write!(f, "level {k}"),
            IaLevel::NotIA => f.write_str("not IA"),
            IaLevel::Unbounded => f.write_str("unbounded"),
        }
    }
}

pub fn ia_level(phi: &Endomorphism) -> Result<IaLevel> {
    let mut lowest: Option<u32> = None;
    for i in 1..=phi.n() {
        let diff = phi.image(i).try_sub(&Polynomial::var(phi.mode(), phi.n(), i)?)?;
        if let Some(d) = diff.min_degree() {
            lowest = Some(lowest.map_or(d, |l| l.min(d)));
        }
    }
    Ok(match lowest {
        None => IaLevel::Unbounded,
        Some(d) if d <= 1 => IaLevel::NotIA,
        Some(d) => IaLevel::Level(d - 1),
    })
}

/// `f = f1 + f2` with `f1^phi = f1`, `f2^phi = -f2`, for an involution `phi`.
pub fn fix_ifix_split(f: &Polynomial, phi: &Endomorphism) -> Result<(Polynomial, Polynomial)> {
    if !phi.compose(phi)?.is_identity() {
        return Err(Error::NotInvolution);
    }
    let image = phi.apply(f)?;
    let half = ratio(1, 2);
    let f1 = f.try_add(&image)?.scale(&half);
    let f2 = f.try_sub(&image)?.scale(&half);
    Ok((f1, f2))
}
