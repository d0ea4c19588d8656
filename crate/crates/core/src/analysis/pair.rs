use std::fmt;

use crate::endomorphism::Elementary;
use crate::error::{Error, Result};
use crate::scalar::int;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairClass {
    FreeProduct,
    Metabelian,
    ZxZ,
    Z,
    Undetermined,
}

impl PairClass {
    pub fn name(self) -> &'static str {
        match self {
            PairClass::FreeProduct => "free-product",
            PairClass::Metabelian => "metabelian",
            PairClass::ZxZ => "ZxZ",
            PairClass::Z => "Z",
            PairClass::Undetermined => "undetermined",
        }
    }
}

/// A class together with the criterion that decided it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairVerdict {
    pub class: PairClass,
    pub reason: String,
}

impl fmt::Display for PairVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.class.name(), self.reason)
    }
}

fn verdict(class: PairClass, reason: impl Into<String>) -> PairVerdict {
    PairVerdict {
        class,
        reason: reason.into(),
    }
}

/// Structure of the subgroup generated by two elementary automorphisms
/// with indices `(1, 1)` or `{1, 2}`.
pub fn classify_pair(e1: &Elementary, e2: &Elementary) -> Result<PairVerdict> {
    e1.f().same_space(e2.f())?;
    match (e1.index(), e2.index()) {
        (1, 1) => Ok(same_index(e1, e2)),
        (1, 2) => distinct_indices(e1, e2),
        (2, 1) => distinct_indices(e2, e1),
        (i, j) => Err(Error::UnsupportedIndices(i, j)),
    }
}

fn same_index(e1: &Elementary, e2: &Elementary) -> PairVerdict {
    let one = int(1);
    if *e1.alpha() != one || *e2.alpha() != one {
        return verdict(PairClass::Metabelian, "same index with alpha != 1 or beta != 1");
    }
    let (f, g) = (e1.f(), e2.f());
    match (f.is_zero(), g.is_zero()) {
        (true, true) => verdict(PairClass::Undetermined, "both generators are the identity"),
        (true, false) | (false, true) => verdict(PairClass::Z, "one generator is the identity"),
        (false, false) => match f.ratio_to(g) {
            Some(c) => verdict(PairClass::Z, format!("f = {c} * g with a rational factor")),
            None => verdict(PairClass::ZxZ, "unipotent, f and g not proportional over Q"),
        },
    }
}

/// `phi = sigma(1, alpha, f)`, `psi = sigma(2, beta, g)`.
fn distinct_indices(phi: &Elementary, psi: &Elementary) -> Result<PairVerdict> {
    if psi.f().is_constant() {
        return Ok(verdict(PairClass::Metabelian, "g is constant"));
    }
    if phi.f().is_constant() {
        return Ok(verdict(PairClass::Metabelian, "f is constant (symmetric case)"));
    }
    let (f, g) = match phi.mode() {
        crate::polynomial::AlgebraMode::Commutative => (phi.f().clone(), psi.f().clone()),
        crate::polynomial::AlgebraMode::Free => (phi.f().abelianize()?, psi.f().abelianize()?),
    };
    let p = f.degree_in_var(2)?.finite().unwrap_or(0) as u64;
    let q = g.degree_in_var(1)?.finite().unwrap_or(0) as u64;
    if p * q >= 2 {
        Ok(verdict(PairClass::FreeProduct, format!("deg_x2 f * deg_x1 g = {} >= 2", p * q)))
    } else {
        Ok(verdict(PairClass::Undetermined, format!("deg_x2 f * deg_x1 g = {} < 2", p * q)))
    }
}
