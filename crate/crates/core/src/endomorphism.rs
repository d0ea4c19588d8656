//! Endomorphisms of `P_n` and `A_n`, given by the images of the variables.
//!
//! Composition is read left to right, matching exponent notation for the
//! action: `x^(phi psi) = (x^phi)^psi`, so `phi.compose(&psi)` first applies
//! `phi` and then substitutes `psi` into the result.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polynomial::{check_index, AlgebraMode, Budget, Polynomial};
use crate::scalar::{geometric_sum, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Endomorphism {
    mode: AlgebraMode,
    n: usize,
    images: Vec<Polynomial>,
}

/// The elementary automorphism `sigma(i, alpha, f)`: `x_i -> alpha x_i + f`,
/// where `f` does not involve `x_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Elementary {
    index: usize,
    alpha: Scalar,
    f: Polynomial,
}

/// `x_i -> alphas[i] x_i + fs[i](x_{i+1}, ..., x_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularShape {
    pub alphas: Vec<Scalar>,
    pub fs: Vec<Polynomial>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Class {
    Identity,
    Elementary,
    Diagonal,
    Permutation,
    Unitriangular,
    Triangular,
    Affine,
}

impl Class {
    pub fn name(self) -> &'static str {
        match self {
            Class::Identity => "identity",
            Class::Elementary => "elementary",
            Class::Diagonal => "diagonal",
            Class::Permutation => "permutation",
            Class::Unitriangular => "unitriangular",
            Class::Triangular => "triangular",
            Class::Affine => "affine",
        }
    }
}

impl Elementary {
    pub fn new(index: usize, alpha: Scalar, f: Polynomial) -> Result<Self> {
        check_index(index, f.n())?;
        if alpha.is_zero() {
            return Err(Error::ZeroAlpha);
        }
        if f.involves(index) {
            return Err(Error::VariableDependence(index));
        }
        Ok(Elementary { index, alpha, f })
    }

    /// `sigma(i, 1, f)`.
    pub fn unipotent(index: usize, f: Polynomial) -> Result<Self> {
        Self::new(index, Scalar::one(), f)
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    pub fn f(&self) -> &Polynomial {
        &self.f
    }

    pub fn mode(&self) -> AlgebraMode {
        self.f.mode()
    }

    pub fn n(&self) -> usize {
        self.f.n()
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_one() && self.f.is_zero()
    }

    pub fn to_endomorphism(&self) -> Endomorphism {
        let (mode, n) = (self.mode(), self.n());
        let mut images = identity_images(mode, n);
        images[self.index - 1] = &images[self.index - 1].scale(&self.alpha) + &self.f;
        Endomorphism { mode, n, images }
    }

    /// Closed form `sigma(i, alpha, f)^-1 = sigma(i, 1/alpha, -f/alpha)`.
    pub fn inverse(&self) -> Elementary {
        let inv = self.alpha.recip();
        Elementary {
            index: self.index,
            f: self.f.scale(&-&inv),
            alpha: inv,
        }
    }

    /// Reads `sigma(i, alpha, f)` back from an endomorphism, choosing the
    /// first slot that differs from the identity (slot 1 for the identity).
    pub fn from_endomorphism(phi: &Endomorphism) -> Result<Self> {
        let moved: Vec<usize> = (1..=phi.n).filter(|&i| !phi.images[i - 1].is_var(i)).collect();
        let index = match moved.as_slice() {
            [] => 1,
            [i] => *i,
            _ => return Err(Error::NotElementary),
        };
        let image = &phi.images[index - 1];
        let alpha = image.linear_coefficient(index);
        let var = Polynomial::var(phi.mode, phi.n, index)?;
        let f = image - &var.scale(&alpha);
        if alpha.is_zero() || f.involves(index) {
            return Err(Error::NotElementary);
        }
        Ok(Elementary { index, alpha, f })
    }
}

impl fmt::Display for Elementary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sigma({}, {}; {})", self.index, self.alpha, self.f)
    }
}

fn identity_images(mode: AlgebraMode, n: usize) -> Vec<Polynomial> {
    (1..=n)
        .map(|i| Polynomial::var(mode, n, i).expect("index in range"))
        .collect()
}

impl Endomorphism {
    pub fn new(images: Vec<Polynomial>) -> Result<Self> {
        let first = images
            .first()
            .ok_or_else(|| Error::Document("an endomorphism needs at least one variable".into()))?;
        let (mode, n) = (first.mode(), first.n());
        if images.len() != n {
            return Err(Error::ArityMismatch {
                left: n,
                right: images.len(),
            });
        }
        for img in &images {
            first.same_space(img)?;
        }
        Ok(Endomorphism { mode, n, images })
    }

    pub fn identity(mode: AlgebraMode, n: usize) -> Self {
        Endomorphism {
            mode,
            n,
            images: identity_images(mode, n),
        }
    }

    /// `sigma(i, alpha, f)` as an endomorphism.
    pub fn elementary(i: usize, alpha: Scalar, f: Polynomial) -> Result<Self> {
        Ok(Elementary::new(i, alpha, f)?.to_endomorphism())
    }

    /// `tau_ks`, swapping `x_k` and `x_s`.
    pub fn transposition(mode: AlgebraMode, n: usize, k: usize, s: usize) -> Result<Self> {
        check_index(k, n)?;
        check_index(s, n)?;
        if k == s {
            return Err(Error::EqualIndices(k));
        }
        let mut images = identity_images(mode, n);
        images.swap(k - 1, s - 1);
        Ok(Endomorphism { mode, n, images })
    }

    /// `x_i -> alphas[i] x_i`.
    pub fn diagonal(mode: AlgebraMode, alphas: &[Scalar]) -> Result<Self> {
        if alphas.iter().any(Zero::is_zero) {
            return Err(Error::ZeroAlpha);
        }
        let n = alphas.len();
        let images = identity_images(mode, n)
            .into_iter()
            .zip(alphas)
            .map(|(x, a)| x.scale(a))
            .collect();
        Ok(Endomorphism { mode, n, images })
    }

    pub fn mode(&self) -> AlgebraMode {
        self.mode
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// Image of `x_i`, 1-based.
    pub fn image(&self, i: usize) -> &Polynomial {
        &self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, p)| p.is_var(j + 1))
    }

    fn same_space(&self, other: &Endomorphism) -> Result<()> {
        if self.mode != other.mode {
            return Err(Error::ModeMismatch {
                left: self.mode,
                right: other.mode,
            });
        }
        if self.n != other.n {
            return Err(Error::ArityMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// `p^phi`: substitutes the images into `p`.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        p.substitute(&self.images)
    }

    pub fn apply_within(&self, p: &Polynomial, budget: &Budget) -> Result<Polynomial> {
        p.substitute_within(&self.images, budget)
    }

    /// `self * other` in left-to-right order: `x^(self other) = (x^self)^other`.
    pub fn compose(&self, other: &Endomorphism) -> Result<Endomorphism> {
        self.compose_within(other, &Budget::UNLIMITED)
    }

    pub fn compose_within(&self, other: &Endomorphism, budget: &Budget) -> Result<Endomorphism> {
        self.same_space(other)?;
        let images = self
            .images
            .iter()
            .map(|p| p.substitute_within(&other.images, budget))
            .collect::<Result<Vec<_>>>()?;
        Ok(Endomorphism {
            mode: self.mode,
            n: self.n,
            images,
        })
    }

    /// Left-to-right product of a sequence; the identity for an empty one.
    pub fn compose_all<'a>(
        mode: AlgebraMode,
        n: usize,
        factors: impl IntoIterator<Item = &'a Endomorphism>,
    ) -> Result<Endomorphism> {
        factors
            .into_iter()
            .try_fold(Endomorphism::identity(mode, n), |acc, phi| acc.compose(phi))
    }

    /// The upper triangular shape, if the map has it.
    pub fn triangular_shape(&self) -> Option<TriangularShape> {
        let mut alphas = Vec::with_capacity(self.n);
        let mut fs = Vec::with_capacity(self.n);
        for i in 1..=self.n {
            let (alpha, rest) = self.split_linear(i)?;
            if !rest.depends_only_on(|v| v > i) {
                return None;
            }
            alphas.push(alpha);
            fs.push(rest);
        }
        Some(TriangularShape { alphas, fs })
    }

    pub fn is_triangular(&self) -> bool {
        self.triangular_shape().is_some()
    }

    pub fn is_unitriangular(&self) -> bool {
        self.triangular_shape()
            .is_some_and(|s| s.alphas.iter().all(One::is_one))
    }

    /// Writes the image of `x_i` as `alpha x_i + rest` with `rest` free of
    /// `x_i`, when that is possible with `alpha != 0`.
    fn split_linear(&self, i: usize) -> Option<(Scalar, Polynomial)> {
        let image = &self.images[i - 1];
        let alpha = image.linear_coefficient(i);
        if alpha.is_zero() {
            return None;
        }
        let var = Polynomial::var(self.mode, self.n, i).ok()?;
        let rest = image - &var.scale(&alpha);
        (!rest.involves(i)).then_some((alpha, rest))
    }

    /// Inverse of an upper triangular automorphism, by back-substitution
    /// from `x_n` up to `x_1`.
    pub fn invert_triangular(&self) -> Result<Endomorphism> {
        if !self.is_triangular() {
            return Err(Error::NotTriangular);
        }
        self.invert_by_back_substitution()
            .ok_or(Error::NotTriangular)?
    }

    /// Inverse for any map that is triangular after reordering the variables
    /// (elementary, upper or lower triangular) or affine with an invertible
    /// linear part.
    pub fn inverse(&self) -> Result<Endomorphism> {
        if let Some(inv) = self.invert_by_back_substitution() {
            return inv;
        }
        if let Some(inv) = self.invert_affine() {
            return inv;
        }
        Err(Error::NotInvertible(
            "not triangular in any variable order and not affine".into(),
        ))
    }

    /// `None` when no variable order makes the map triangular.
    fn invert_by_back_substitution(&self) -> Option<Result<Endomorphism>> {
        let mut parts = Vec::with_capacity(self.n);
        for i in 1..=self.n {
            parts.push(self.split_linear(i)?);
        }
        // Kahn's algorithm: x_i can be solved once every variable in its
        // tail has been.
        let deps: Vec<Vec<usize>> = parts.iter().map(|(_, rest)| rest.variables()).collect();
        let mut solved = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        while order.len() < self.n {
            let next = (1..=self.n).find(|&i| !solved[i - 1] && deps[i - 1].iter().all(|&v| solved[v - 1]))?;
            solved[next - 1] = true;
            order.push(next);
        }
        let mut images = identity_images(self.mode, self.n);
        for i in order {
            let (alpha, rest) = &parts[i - 1];
            let tail = match rest.substitute(&images) {
                Ok(t) => t,
                Err(e) => return Some(Err(e)),
            };
            images[i - 1] = (&images[i - 1] - &tail).scale(&alpha.recip());
        }
        Some(Ok(Endomorphism {
            mode: self.mode,
            n: self.n,
            images,
        }))
    }

    fn invert_affine(&self) -> Option<Result<Endomorphism>> {
        let n = self.n;
        if self.images.iter().any(|p| p.total_degree().finite().unwrap_or(0) > 1) {
            return None;
        }
        // rows: x_i^phi = sum_j a[i][j] x_j + b_i
        let mut a: Vec<Vec<Scalar>> = self
            .images
            .iter()
            .map(|p| (1..=n).map(|j| p.linear_coefficient(j)).collect())
            .collect();
        let mut inv: Vec<Vec<Scalar>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let scale = a[col][col].recip();
            for j in 0..n {
                a[col][j] *= &scale;
                inv[col][j] *= &scale;
            }
            for r in 0..n {
                if r != col && !a[r][col].is_zero() {
                    let factor = a[r][col].clone();
                    for j in 0..n {
                        let (da, di) = (&factor * &a[col][j], &factor * &inv[col][j]);
                        a[r][j] -= da;
                        inv[r][j] -= di;
                    }
                }
            }
        }
        // x^psi = A^-1 (x - b)
        let shifted: Vec<Polynomial> = self
            .images
            .iter()
            .enumerate()
            .map(|(i, p)| {
                let x = Polynomial::var(self.mode, n, i + 1).expect("index in range");
                &x - &Polynomial::constant(self.mode, n, p.constant_term())
            })
            .collect();
        let images = (0..n)
            .map(|i| {
                (0..n).fold(Polynomial::zero(self.mode, n), |acc, j| &acc + &shifted[j].scale(&inv[i][j]))
            })
            .collect();
        Some(Ok(Endomorphism {
            mode: self.mode,
            n,
            images,
        }))
    }

    /// `k`-fold left-to-right power; negative `k` uses [`Self::inverse`].
    pub fn power(&self, k: i64) -> Result<Endomorphism> {
        self.power_within(k, &Budget::UNLIMITED)
    }

    pub fn power_within(&self, k: i64, budget: &Budget) -> Result<Endomorphism> {
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut result = Endomorphism::identity(self.mode, self.n);
        let mut square = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.compose_within(&square, budget)?;
            }
            e >>= 1;
            if e > 0 {
                square = square.compose_within(&square, budget)?;
            }
        }
        Ok(result)
    }

    /// `[self, other] = self^-1 other^-1 self other`.
    pub fn commutator(&self, other: &Endomorphism) -> Result<Endomorphism> {
        self.commutator_within(other, &Budget::UNLIMITED)
    }

    pub fn commutator_within(&self, other: &Endomorphism, budget: &Budget) -> Result<Endomorphism> {
        self.same_space(other)?;
        let (a_inv, b_inv) = (self.inverse()?, other.inverse()?);
        a_inv
            .compose_within(&b_inv, budget)?
            .compose_within(self, budget)?
            .compose_within(other, budget)
    }

    /// `by^-1 self by`.
    pub fn conjugate(&self, by: &Endomorphism) -> Result<Endomorphism> {
        self.same_space(by)?;
        by.inverse()?.compose(self)?.compose(by)
    }

    /// Every label that applies. The triangular labels refer to the upper
    /// shape `x_i -> a_i x_i + f_i(x_{i+1}, ..., x_n)`; a lower triangular map
    /// becomes upper after conjugating by the order-reversing permutation.
    pub fn classify(&self) -> BTreeSet<Class> {
        let mut labels = BTreeSet::new();
        if self.is_identity() {
            labels.insert(Class::Identity);
        }
        if Elementary::from_endomorphism(self).is_ok() {
            labels.insert(Class::Elementary);
        }
        let diagonal = (1..=self.n).all(|i| {
            let image = &self.images[i - 1];
            image.num_terms() == 1 && !image.linear_coefficient(i).is_zero()
        });
        if diagonal {
            labels.insert(Class::Diagonal);
        }
        if self.is_permutation() {
            labels.insert(Class::Permutation);
        }
        if let Some(shape) = self.triangular_shape() {
            labels.insert(Class::Triangular);
            if shape.alphas.iter().all(One::is_one) {
                labels.insert(Class::Unitriangular);
            }
        }
        if self.is_affine() {
            labels.insert(Class::Affine);
        }
        labels
    }

    fn is_permutation(&self) -> bool {
        let mut seen = vec![false; self.n];
        for image in &self.images {
            let Some(j) = (1..=self.n).find(|&j| image.is_var(j)) else {
                return false;
            };
            if std::mem::replace(&mut seen[j - 1], true) {
                return false;
            }
        }
        true
    }

    fn is_affine(&self) -> bool {
        self.images.iter().all(|p| p.total_degree().finite().unwrap_or(0) <= 1)
            && matches!(self.invert_affine(), Some(Ok(_)))
    }

    /// `phi = u d` with `u` unitriangular and `d` diagonal carrying the
    /// `alpha_i` of `phi`.
    pub fn split_triangular(&self) -> Result<(Endomorphism, Endomorphism)> {
        let shape = self.triangular_shape().ok_or(Error::NotTriangular)?;
        let d = Endomorphism::diagonal(self.mode, &shape.alphas)?;
        let u = self.compose(&d.inverse()?)?;
        debug_assert!(u.is_unitriangular());
        Ok((u, d))
    }

    /// `sigma(i, alpha, f)^m = sigma(i, alpha^m, (1 + ... + alpha^(m-1)) f)`.
    pub fn elementary_power(e: &Elementary, m: u32) -> Result<Endomorphism> {
        let alpha = num_traits::pow(e.alpha().clone(), m as usize);
        Endomorphism::elementary(e.index(), alpha, e.f().scale(&geometric_sum(e.alpha(), m)))
    }
}

/// `(x2^2 + x1, x2 + 1)`.
impl fmt::Display for Endomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (j, p) in self.images.iter().enumerate() {
            if j > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}
