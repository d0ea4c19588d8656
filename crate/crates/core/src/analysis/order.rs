use std::fmt;

use crate::endomorphism::{Elementary, Endomorphism};
use crate::error::{Error, Result};
use crate::scalar::{int, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementOrder {
    Finite(u64),
    Infinite,
}

impl fmt::Display for ElementOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ElementOrder::Finite(m) => write!(f, "finite {m}"),
            ElementOrder::Infinite => f.write_str("infinite"),
        }
    }
}

/// Order of `sigma(i, alpha, f)` over Q. The order of a nontrivial element
/// equals the multiplicative order of `alpha`, and the only roots of unity in
/// Q are `1` and `-1`; with `alpha = 1` and `f != 0` the powers
/// `sigma(i, 1, m f)` never return to the identity.
pub fn element_order(e: &Elementary) -> ElementOrder {
    if e.is_identity() {
        ElementOrder::Finite(1)
    } else if *e.alpha() == int(-1) {
        ElementOrder::Finite(2)
    } else {
        ElementOrder::Infinite
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagonalization {
    /// `d = c^-1 e c` is diagonal.
    Conjugator { c: Elementary, d: Endomorphism },
    /// `alpha = 1` and `f != 0`: no conjugate is diagonal.
    NotDiagonalizable,
}

/// Conjugates `sigma(i, alpha, f)` with `alpha != 1` to `x_i -> alpha x_i`
/// using `c = sigma(i, 1, -(alpha - 1)^-1 f)`.
pub fn diagonalize_elementary(e: &Elementary) -> Result<Diagonalization> {
    if e.is_identity() {
        return Err(Error::TrivialInput);
    }
    let one = int(1);
    if *e.alpha() == one {
        return Ok(Diagonalization::NotDiagonalizable);
    }
    let shift: Scalar = -(e.alpha() - &one).recip();
    let c = Elementary::unipotent(e.index(), e.f().scale(&shift))?;
    let d = e.to_endomorphism().conjugate(&c.to_endomorphism())?;
    if !d.images().iter().enumerate().all(|(k, img)| {
        let expected = if k + 1 == e.index() { e.alpha().clone() } else { one.clone() };
        img.num_terms() == 1 && img.linear_coefficient(k + 1) == expected
    }) {
        return Err(Error::CheckFailed(format!("conjugate {d} is not diagonal")));
    }
    Ok(Diagonalization::Conjugator { c, d })
}
