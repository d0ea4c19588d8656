//! Constructive structure of the unitriangular group `U_n`.
//!
//! `U_n` is built from the abelian layers `G_i = { sigma(i, 1, f) : f =
//! f(x_{i+1}, ..., x_n) }`. This module solves difference equations, splits
//! a unitriangular automorphism into layer factors, and writes layer
//! elements and elements of the derived subgroup as single commutators.

use std::fmt;

use num_traits::{One, Zero};

use crate::endomorphism::{Elementary, Endomorphism};
use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::polynomial::{check_index, AlgebraMode, Polynomial};
use crate::scalar::{self, Scalar};

/// Finds `f` with `f(.., x_i + a, ..) - f(.., x_i, ..) = g`.
///
/// The solution is normalized so that every monomial of `f` involves `x_i`.
/// Each step removes the leading monomial `m = b1 x_i^k1 b2 ... x_i^ks b(s+1)`
/// of the remainder with `c/((k1 + 1) a) * b1 x_i^(k1+1) b2 ...`. Monomials
/// are ranked by degree in `x_i`, then syllable count, then the exponent
/// vector `(k1, ..., ks)` compared from its last entry; the leftover of each
/// step is strictly lower in that ranking.
pub fn solve_difference(g: &Polynomial, i: usize, a: &Scalar) -> Result<Polynomial> {
    check_index(i, g.n())?;
    if a.is_zero() {
        return Err(Error::ZeroShift);
    }
    let (mode, n) = (g.mode(), g.n());
    let var = i - 1;
    let mut shift: Vec<Polynomial> = (1..=n).map(|j| Polynomial::var(mode, n, j)).collect::<Result<_>>()?;
    shift[var] = &shift[var] + &Polynomial::constant(mode, n, a.clone());

    let mut remainder = g.clone();
    let mut f = Polynomial::zero(mode, n);
    while let Some((m, c)) = leading_term(&remainder, var) {
        let (raised, k1) = raise_first_syllable(&m, var);
        let coeff = c / (a * scalar::int(i64::from(k1) + 1));
        let piece = Polynomial::from_monomial(raised, coeff, n);
        let delta = &piece.substitute(&shift)? - &piece;
        remainder = &remainder - &delta;
        f = &f + &piece;
    }
    Ok(f)
}

fn leading_term(p: &Polynomial, var: usize) -> Option<(Monomial, Scalar)> {
    p.terms()
        .max_by(|(m1, _), (m2, _)| rank(m1, var).cmp(&rank(m2, var)))
        .map(|(m, c)| (m.clone(), c.clone()))
}

fn rank(m: &Monomial, var: usize) -> (u32, usize, Vec<u32>) {
    match m.syllable_profile(var) {
        Some(profile) => {
            let mut mu = profile.exponent_vector;
            mu.reverse();
            (profile.degree_in_var, profile.syllable_count, mu)
        }
        None => (m.degree_in(var), 0, Vec::new()),
    }
}

/// Adds one `x_i` to the first syllable (prepending when there is none).
/// Returns the new monomial and the old first exponent `k1`.
fn raise_first_syllable(m: &Monomial, var: usize) -> (Monomial, u32) {
    match m {
        Monomial::Commutative(e) => {
            let mut e = e.clone();
            let k = e[var];
            e[var] += 1;
            (Monomial::Commutative(e), k)
        }
        Monomial::Free(w) => {
            let letter = var as u32;
            match w.iter().position(|&l| l == letter) {
                None => {
                    let mut raised = Vec::with_capacity(w.len() + 1);
                    raised.push(letter);
                    raised.extend_from_slice(w);
                    (Monomial::Free(raised), 0)
                }
                Some(start) => {
                    let k = w[start..].iter().take_while(|&&l| l == letter).count() as u32;
                    let mut raised = w.clone();
                    raised.insert(start, letter);
                    (Monomial::Free(raised), k)
                }
            }
        }
    }
}

impl Elementary {
    /// Membership in the layer `G_i`: `sigma(i, 1, f)` with `f` depending
    /// only on `x_{i+1}, ..., x_n`.
    pub fn is_in_layer(&self, i: usize) -> bool {
        self.index() == i && self.alpha().is_one() && self.f().depends_only_on(|v| v > i)
    }
}

/// Layer factors `psi_k in G_{i_k}` with `i_k` strictly decreasing, whose
/// left-to-right product is the source automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerFactorization {
    pub mode: AlgebraMode,
    pub n: usize,
    pub factors: Vec<Elementary>,
}

impl LayerFactorization {
    pub fn recompose(&self) -> Result<Endomorphism> {
        let factors: Vec<Endomorphism> = self.factors.iter().map(Elementary::to_endomorphism).collect();
        Endomorphism::compose_all(self.mode, self.n, &factors)
    }
}

impl fmt::Display for LayerFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("identity");
        }
        for (k, factor) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{factor}")?;
        }
        Ok(())
    }
}

/// Splits a unitriangular automorphism into layers, `G_n` factor first.
///
/// Peels from the top: the `G_i` factor is read off the residual's image of
/// `x_i`, and the residual is replaced by `factor^-1 * residual`.
pub fn factorize_unitriangular(phi: &Endomorphism) -> Result<LayerFactorization> {
    if !phi.is_unitriangular() {
        return Err(Error::NotUnitriangular);
    }
    let (mode, n) = (phi.mode(), phi.n());
    let mut residual = phi.clone();
    let mut factors = Vec::new();
    for i in (1..=n).rev() {
        let tail = residual.image(i) - &Polynomial::var(mode, n, i)?;
        if tail.is_zero() {
            continue;
        }
        let factor = Elementary::unipotent(i, tail)?;
        residual = factor.inverse().to_endomorphism().compose(&residual)?;
        factors.push(factor);
    }
    debug_assert!(residual.is_identity());
    Ok(LayerFactorization { mode, n, factors })
}

/// Writes a layer element `sigma(i, 1, g)` as `[phi, psi]` with
/// `phi = sigma(i, 1, f) in G_i` and `psi = sigma(j, 1, h) in G_j`, `i < j`.
///
/// `[sigma(i,1,f), sigma(j,1,h)]` sends `x_i` to `x_i + f(.., x_j + h, ..) -
/// f(.., x_j, ..)`, so `f` is the antidifference of `g` in `x_j` with shift
/// `h`.
pub fn express_in_layer_commutator(target: &Elementary, j: usize, h: &Scalar) -> Result<(Elementary, Elementary)> {
    let (i, n) = (target.index(), target.n());
    if j <= i || j > n {
        return Err(Error::BadIndices(format!("need {i} < j <= {n}, got j = {j}")));
    }
    if !target.is_in_layer(i) {
        return Err(Error::LayerViolation(format!(
            "target must be sigma({i}, 1, g) with g in x{}..x{n}",
            i + 1
        )));
    }
    if h.is_zero() {
        return Err(Error::ZeroShift);
    }
    let f = solve_difference(target.f(), j, h)?;
    let phi = Elementary::unipotent(i, f)?;
    let psi = Elementary::unipotent(j, Polynomial::constant(target.mode(), n, h.clone()))?;
    Ok((phi, psi))
}

/// `omega = [left, right]` with `left = phi_n` and
/// `right = phi_1 * ... * phi_(n-1)`, each `phi_k in G_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorExpression {
    pub left: Endomorphism,
    pub right: Endomorphism,
    /// `phi_1, ..., phi_n`.
    pub parts: Vec<Elementary>,
}

impl CommutatorExpression {
    pub fn evaluate(&self) -> Result<Endomorphism> {
        self.left.commutator(&self.right)
    }

    pub fn parts_in_layers(&self) -> bool {
        self.parts.iter().enumerate().all(|(k, p)| p.is_in_layer(k + 1))
    }
}

/// Expresses an element of the derived subgroup `U_n'` (unitriangular and
/// fixing `x_n`) as a single commutator.
///
/// With `phi_n = sigma(n, 1, 1)` and `R = phi_1 ... phi_(n-1)`, the
/// commutator `[phi_n, R]` sends `x_k` to `x_k + f_k(Z) - f_k(Z + e_n)` where
/// `Z = (x_{k+1}^R, ..., x_n^R)`. The `f_k` are found from `k = n - 1` down:
/// rewriting `g_k` in the coordinates `Z` (substituting the inverse of the
/// already-built part of `R`) leaves a plain difference equation in `x_n`.
pub fn express_as_single_commutator(omega: &Endomorphism) -> Result<CommutatorExpression> {
    let (mode, n) = (omega.mode(), omega.n());
    if !omega.is_unitriangular() {
        return Err(Error::NotInDerivedSubgroup("not unitriangular".into()));
    }
    if !omega.image(n).is_var(n) {
        return Err(Error::NotInDerivedSubgroup(format!("x{n} is not fixed")));
    }
    let one = Scalar::one();
    let top = Elementary::unipotent(n, Polynomial::one(mode, n))?;
    // R_k = phi_(k+1) ... phi_(n-1)
    let mut tail = Endomorphism::identity(mode, n);
    let mut parts = Vec::with_capacity(n);
    for k in (1..n).rev() {
        let g = omega.image(k) - &Polynomial::var(mode, n, k)?;
        let in_z = tail.inverse()?.apply(&g)?;
        let f = -solve_difference(&in_z, n, &one)?;
        let part = Elementary::unipotent(k, f)?;
        tail = part.to_endomorphism().compose(&tail)?;
        parts.push(part);
    }
    parts.reverse();
    parts.push(top.clone());
    Ok(CommutatorExpression {
        left: top.to_endomorphism(),
        right: tail,
        parts,
    })
}
