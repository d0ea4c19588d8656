use crate::endomorphism::Endomorphism;
use crate::error::{Error, Result};
use crate::parse::parse_polynomial;
use crate::polynomial::{AlgebraMode, Budget, Polynomial};
use crate::scalar::Scalar;

const P: AlgebraMode = AlgebraMode::Commutative;

fn map3(images: [&str; 3]) -> Endomorphism {
    let images = images
        .iter()
        .map(|s| parse_polynomial(s, P, 3).expect("fixed image parses"))
        .collect();
    Endomorphism::new(images).expect("three images")
}

pub fn nonlinearity_witness(p: u32, l: u32, m: u32) -> Result<Polynomial> {
    nonlinearity_witness_within(p, l, m, &Budget::UNLIMITED)
}

/// With `phi_p = (x1 + x2^p, x2, x3)`, `chi = (x1, x2 + x3, x3)` and
/// `psi = (x1, x2, x3 + 1)`, computes the iterated commutator
/// `[phi_p^l, _m [chi^l, psi^l]]` in `P_3` and returns `x1^w - x1`.
pub fn nonlinearity_witness_within(p: u32, l: u32, m: u32, budget: &Budget) -> Result<Polynomial> {
    if p == 0 || l == 0 || m == 0 {
        return Err(Error::BadIndices(format!("p, l, m must be positive, got ({p}, {l}, {m})")));
    }
    let phi = map3([&format!("x1 + x2^{p}"), "x2", "x3"]);
    let chi = map3(["x1", "x2 + x3", "x3"]);
    let psi = map3(["x1", "x2", "x3 + 1"]);
    let (l, budget) = (l as i64, budget);
    let inner = chi.power_within(l, budget)?.commutator_within(&psi.power_within(l, budget)?, budget)?;
    let mut w = phi.power_within(l, budget)?;
    for _ in 0..m {
        w = w.commutator_within(&inner, budget)?;
    }
    let x1 = Polynomial::var(P, 3, 1)?;
    w.image(1).try_sub(&x1)
}

/// Constant term after `x2 -> 0`, for a polynomial in `x2` alone.
pub fn value_at_zero(witness: &Polynomial) -> Result<Scalar> {
    let n = witness.n();
    let mut images: Vec<Polynomial> = (1..=n).map(|i| Polynomial::var(witness.mode(), n, i)).collect::<Result<_>>()?;
    images[1] = Polynomial::zero(witness.mode(), n);
    let at_zero = witness.substitute(&images)?;
    if !at_zero.is_constant() {
        return Err(Error::CheckFailed(format!("witness depends on more than x2: {witness}")));
    }
    Ok(at_zero.constant_term())
}
