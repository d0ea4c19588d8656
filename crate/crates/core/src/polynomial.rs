//! Sparse polynomials over the rationals, in either the polynomial algebra
//! `P_n = Q[x1..xn]` or the free associative algebra `A_n = Q<x1..xn>`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, SyllableProfile};
use crate::scalar::{self, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum AlgebraMode {
    /// The polynomial algebra `P_n`.
    #[serde(rename = "poly")]
    Commutative,
    /// The free associative algebra `A_n`.
    #[serde(rename = "free")]
    Free,
}

impl AlgebraMode {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraMode::Commutative => "poly",
            AlgebraMode::Free => "free",
        }
    }
}

/// Degree of a polynomial; the zero polynomial has degree `NegInfinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Degree {
    pub fn finite(self) -> Option<u32> {
        match self {
            Degree::Finite(d) => Some(d),
            Degree::NegInfinity => None,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Size limits for operations whose output can blow up (substitution and
/// everything built on it). `Budget::default()` is unlimited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    pub max_terms: Option<usize>,
    pub max_degree: Option<u32>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget {
        max_terms: None,
        max_degree: None,
    };

    pub fn terms(max_terms: usize) -> Self {
        Budget {
            max_terms: Some(max_terms),
            max_degree: None,
        }
    }

    pub fn check(&self, p: &Polynomial) -> Result<()> {
        if let Some(max) = self.max_terms {
            if p.num_terms() > max {
                return Err(Error::BudgetExceeded(format!(
                    "{} terms exceed the limit of {max}",
                    p.num_terms()
                )));
            }
        }
        if let (Some(max), Degree::Finite(d)) = (self.max_degree, p.total_degree()) {
            if d > max {
                return Err(Error::BudgetExceeded(format!("degree {d} exceeds the limit of {max}")));
            }
        }
        Ok(())
    }
}

/// Invariant: no stored coefficient is zero and every monomial matches
/// `mode` and `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    mode: AlgebraMode,
    n: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Polynomial {
    pub fn zero(mode: AlgebraMode, n: usize) -> Self {
        Polynomial {
            mode,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(mode: AlgebraMode, n: usize) -> Self {
        Self::constant(mode, n, Scalar::one())
    }

    pub fn constant(mode: AlgebraMode, n: usize, c: Scalar) -> Self {
        let mut p = Self::zero(mode, n);
        p.add_term(Self::unit_monomial(mode, n), c);
        p
    }

    /// The variable `x_i`, 1-based.
    pub fn var(mode: AlgebraMode, n: usize, i: usize) -> Result<Self> {
        check_index(i, n)?;
        Ok(Self::from_monomial(Self::var_monomial(mode, n, i - 1), Scalar::one(), n))
    }

    pub fn from_monomial(m: Monomial, c: Scalar, n: usize) -> Self {
        let mode = match m {
            Monomial::Commutative(ref e) => {
                assert_eq!(e.len(), n, "exponent vector length must equal n");
                AlgebraMode::Commutative
            }
            Monomial::Free(ref w) => {
                assert!(w.iter().all(|&l| (l as usize) < n), "letter out of range");
                AlgebraMode::Free
            }
        };
        let mut p = Self::zero(mode, n);
        p.add_term(m, c);
        p
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, merging
    /// duplicates and dropping zeros.
    pub fn from_terms(mode: AlgebraMode, n: usize, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut p = Self::zero(mode, n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn unit_monomial(mode: AlgebraMode, n: usize) -> Monomial {
        match mode {
            AlgebraMode::Commutative => Monomial::one_commutative(n),
            AlgebraMode::Free => Monomial::one_free(),
        }
    }

    /// 0-based variable.
    pub(crate) fn var_monomial(mode: AlgebraMode, n: usize, var: usize) -> Monomial {
        match mode {
            AlgebraMode::Commutative => {
                let mut e = vec![0; n];
                e[var] = 1;
                Monomial::Commutative(e)
            }
            AlgebraMode::Free => Monomial::Free(vec![var as u32]),
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn mode(&self) -> AlgebraMode {
        self.mode
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical order (highest degree first).
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Self::unit_monomial(self.mode, self.n))
    }

    /// Coefficient of the degree-one monomial `x_i` (1-based).
    pub fn linear_coefficient(&self, i: usize) -> Scalar {
        self.coefficient(&Self::var_monomial(self.mode, self.n, i - 1))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// True when `self == x_i` (1-based).
    pub fn is_var(&self, i: usize) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(m, c)| c.is_one() && *m == Self::var_monomial(self.mode, self.n, i - 1))
    }

    pub fn same_space(&self, other: &Polynomial) -> Result<()> {
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

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_space(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.mode, self.n));
        }
        let mut acc: HashMap<Monomial, Scalar> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                match acc.entry(m1.mul(m2)) {
                    std::collections::hash_map::Entry::Vacant(v) => {
                        v.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut o) => *o.get_mut() += c,
                }
            }
        }
        Ok(Polynomial {
            mode: self.mode,
            n: self.n,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.mode, self.n);
        }
        Polynomial {
            mode: self.mode,
            n: self.n,
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut result = Self::one(self.mode, self.n);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Largest exponent of `x_i` (1-based) over all monomials.
    pub fn degree_in_var(&self, i: usize) -> Result<Degree> {
        check_index(i, self.n)?;
        Ok(self
            .terms
            .keys()
            .map(|m| Degree::Finite(m.degree_in(i - 1)))
            .max()
            .unwrap_or(Degree::NegInfinity))
    }

    pub fn total_degree(&self) -> Degree {
        // canonical order puts the highest degree first
        self.terms
            .keys()
            .next()
            .map(|m| Degree::Finite(m.degree()))
            .unwrap_or(Degree::NegInfinity)
    }

    /// Smallest total degree of any monomial, `None` for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().last().map(Monomial::degree)
    }

    /// Whether `x_i` (1-based) occurs in some monomial.
    pub fn involves(&self, i: usize) -> bool {
        i >= 1 && i <= self.n && self.terms.keys().any(|m| m.involves(i - 1))
    }

    /// 1-based indices of the variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        let mut vars: Vec<usize> = self.terms.keys().flat_map(|m| m.support()).map(|v| v + 1).collect();
        vars.sort_unstable();
        vars.dedup();
        vars
    }

    /// True when every variable that occurs satisfies `allowed` (1-based).
    pub fn depends_only_on(&self, allowed: impl Fn(usize) -> bool) -> bool {
        self.variables().into_iter().all(allowed)
    }

    /// Syllable decomposition of a free monomial with respect to `x_i` (1-based).
    pub fn syllable_profile(m: &Monomial, i: usize) -> Result<SyllableProfile> {
        m.syllable_profile(i - 1).ok_or(Error::ModeMismatch {
            left: AlgebraMode::Commutative,
            right: AlgebraMode::Free,
        })
    }

    /// The quotient map `A_n -> P_n`.
    pub fn abelianize(&self) -> Result<Polynomial> {
        if self.mode != AlgebraMode::Free {
            return Err(Error::ModeMismatch {
                left: self.mode,
                right: AlgebraMode::Free,
            });
        }
        Ok(Self::from_terms(
            AlgebraMode::Commutative,
            self.n,
            self.terms.iter().map(|(m, c)| (m.abelianized(self.n), c.clone())),
        ))
    }

    /// Applies the algebra endomorphism `x_i -> images[i-1]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        self.substitute_within(images, &Budget::UNLIMITED)
    }

    pub fn substitute_within(&self, images: &[Polynomial], budget: &Budget) -> Result<Polynomial> {
        if images.len() != self.n {
            return Err(Error::ArityMismatch {
                left: self.n,
                right: images.len(),
            });
        }
        for img in images {
            self.same_space(img)?;
        }
        let target = self.n;
        let out = match self.mode {
            AlgebraMode::Commutative => self.substitute_commutative(images, target, budget)?,
            AlgebraMode::Free => self.substitute_free(images, target, budget)?,
        };
        budget.check(&out)?;
        Ok(out)
    }

    fn substitute_commutative(&self, images: &[Polynomial], target: usize, budget: &Budget) -> Result<Polynomial> {
        // Variables mapped to themselves are carried along as a monomial
        // factor; terms are grouped by their exponents in the moving
        // variables so each product of image powers is formed once.
        let moving: Vec<usize> = (0..self.n).filter(|&j| !images[j].is_var(j + 1)).collect();
        let mut groups: BTreeMap<Vec<u32>, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let Monomial::Commutative(e) = m else { unreachable!() };
            let key: Vec<u32> = moving.iter().map(|&j| e[j]).collect();
            let mut rest = e.clone();
            for &j in &moving {
                rest[j] = 0;
            }
            groups
                .entry(key)
                .or_insert_with(|| Self::zero(AlgebraMode::Commutative, target))
                .add_term(Monomial::Commutative(rest), c.clone());
        }
        let mut powers: Vec<Vec<Polynomial>> = moving
            .iter()
            .map(|_| vec![Self::one(AlgebraMode::Commutative, target)])
            .collect();
        let mut out = Self::zero(AlgebraMode::Commutative, target);
        for (key, rest) in groups {
            let mut product = Self::one(AlgebraMode::Commutative, target);
            for (t, &k) in key.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                while powers[t].len() <= k as usize {
                    let next = &powers[t][powers[t].len() - 1] * &images[moving[t]];
                    budget.check(&next)?;
                    powers[t].push(next);
                }
                product = &product * &powers[t][k as usize];
            }
            let piece = &product * &rest;
            for (m, c) in piece.terms {
                out.add_term(m, c);
            }
            budget.check(&out)?;
        }
        Ok(out)
    }

    fn substitute_free(&self, images: &[Polynomial], target: usize, budget: &Budget) -> Result<Polynomial> {
        let mut out = Self::zero(AlgebraMode::Free, target);
        for (m, c) in &self.terms {
            let Monomial::Free(w) = m else { unreachable!() };
            let mut acc = Self::constant(AlgebraMode::Free, target, c.clone());
            for &l in w {
                acc = &acc * &images[l as usize];
                budget.check(&acc)?;
            }
            for (m, c) in acc.terms {
                out.add_term(m, c);
            }
            budget.check(&out)?;
        }
        Ok(out)
    }

    /// If `self = c * other` for a rational `c`, returns `c`.
    pub fn ratio_to(&self, other: &Polynomial) -> Option<Scalar> {
        if self.mode != other.mode || self.n != other.n || other.is_zero() || self.terms.len() != other.terms.len() {
            return None;
        }
        let (m0, c0) = other.terms.iter().next()?;
        let ratio = self.terms.get(m0)? / c0;
        other
            .terms
            .iter()
            .all(|(m, c)| self.terms.get(m) == Some(&(c * &ratio)))
            .then_some(ratio)
    }
}

pub(crate) fn check_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i > n {
        Err(Error::IndexOutOfRange { index: i, n })
    } else {
        Ok(())
    }
}

/// Canonical text, e.g. `1/2*x1^2 - 1/2*x1`; parseable by [`crate::parse`].
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let shown = if idx == 0 {
                c.clone()
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
                c.abs()
            };
            if m.is_one() {
                write!(f, "{shown}")?;
            } else if shown.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{shown}*{m}")?;
            }
        }
        Ok(())
    }
}

// Operator forms panic on mixed spaces; the `try_*` methods report it.

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomials from different algebras")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomials from different algebras")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomials from different algebras")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Scalar::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

pub fn int_constant(mode: AlgebraMode, n: usize, c: i64) -> Polynomial {
    Polynomial::constant(mode, n, scalar::int(c))
}
