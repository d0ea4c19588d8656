//! The generators `phi(alpha, f) = sigma(1, alpha, f)` and the transpositions
//! `tau_ks`, words in them, and semantic checks of the relation families
//! among elementary automorphisms and among these generators.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::endomorphism::{Elementary, Endomorphism};
use crate::error::{Error, ParseError, Result};
use crate::parse::parse_polynomial;
use crate::polynomial::{check_index, AlgebraMode, Polynomial};
use crate::random;
use crate::scalar::{parse_scalar, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BGenerator {
    Phi { alpha: Scalar, f: Polynomial },
    Tau { k: usize, s: usize },
}

impl BGenerator {
    pub fn phi(alpha: Scalar, f: Polynomial) -> Result<Self> {
        if f.involves(1) {
            return Err(Error::VariableDependence(1));
        }
        if alpha == Scalar::from_integer(0.into()) {
            return Err(Error::ZeroAlpha);
        }
        Ok(BGenerator::Phi { alpha, f })
    }

    pub fn tau(k: usize, s: usize) -> Result<Self> {
        if k == s {
            return Err(Error::EqualIndices(k));
        }
        if k == 0 || s == 0 {
            return Err(Error::IndexOutOfRange { index: 0, n: k.max(s) });
        }
        Ok(BGenerator::Tau { k, s })
    }

    pub fn to_endomorphism(&self, mode: AlgebraMode, n: usize) -> Result<Endomorphism> {
        match self {
            BGenerator::Phi { alpha, f } => {
                if f.n() != n {
                    return Err(Error::ArityMismatch { left: f.n(), right: n });
                }
                if f.mode() != mode {
                    return Err(Error::ModeMismatch { left: f.mode(), right: mode });
                }
                Endomorphism::elementary(1, alpha.clone(), f.clone())
            }
            BGenerator::Tau { k, s } => Endomorphism::transposition(mode, n, *k, *s),
        }
    }
}

impl fmt::Display for BGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BGenerator::Phi { alpha, f: p } => write!(f, "phi({alpha}; {p})"),
            BGenerator::Tau { k, s } => write!(f, "t({k},{s})"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BWord(pub Vec<BGenerator>);

impl BWord {
    pub fn generators(&self) -> &[BGenerator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Parses whitespace-separated `t(k,s)` and `phi(alpha; poly)` tokens.
    pub fn parse(text: &str, mode: AlgebraMode, n: usize) -> Result<BWord> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let mut out = Vec::new();
        while pos < bytes.len() {
            if bytes[pos].is_ascii_whitespace() {
                pos += 1;
                continue;
            }
            let rest = &text[pos..];
            let (head, is_phi) = if rest.starts_with("phi(") {
                (4, true)
            } else if rest.starts_with("t(") {
                (2, false)
            } else {
                return Err(ParseError::new(pos + 1, "expected 't(' or 'phi('").into());
            };
            let body_start = pos + head;
            let close = text[body_start..]
                .find(')')
                .map(|c| body_start + c)
                .ok_or_else(|| ParseError::new(text.len() + 1, "missing ')'"))?;
            let body = &text[body_start..close];
            let generator = if is_phi {
                let semi = body
                    .find(';')
                    .ok_or_else(|| ParseError::new(body_start + 1, "expected 'alpha; poly'"))?;
                let alpha = parse_scalar(body[..semi].trim())
                    .ok_or_else(|| ParseError::new(body_start + 1, "invalid scalar"))?;
                let poly_start = body_start + semi + 1;
                let f = parse_polynomial(&body[semi + 1..], mode, n).map_err(|e| {
                    ParseError::new(poly_start + e.offset, e.message)
                })?;
                BGenerator::phi(alpha, f)?
            } else {
                let mut parts = body.split(',');
                let mut index = || -> Result<usize> {
                    let s = parts.next().unwrap_or("").trim();
                    let v: usize = s
                        .parse()
                        .map_err(|_| ParseError::new(body_start + 1, "expected 't(k,s)' with integer indices"))?;
                    check_index(v, n)?;
                    Ok(v)
                };
                let (k, s) = (index()?, index()?);
                if parts.next().is_some() {
                    return Err(ParseError::new(body_start + 1, "expected exactly two indices").into());
                }
                BGenerator::tau(k, s)?
            };
            out.push(generator);
            pos = close + 1;
        }
        Ok(BWord(out))
    }
}

impl fmt::Display for BWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// `sigma(i, alpha, f) = t(1,i) phi(alpha, f^t(1,i)) t(1,i)` for `i > 1`.
pub fn to_b_generators(e: &Elementary) -> Result<BWord> {
    if e.index() == 1 {
        return Ok(BWord(vec![BGenerator::phi(e.alpha().clone(), e.f().clone())?]));
    }
    let tau = Endomorphism::transposition(e.mode(), e.n(), 1, e.index())?;
    let f = e.f().substitute(tau.images())?;
    let t = BGenerator::tau(1, e.index())?;
    Ok(BWord(vec![t.clone(), BGenerator::phi(e.alpha().clone(), f)?, t]))
}

/// Left-to-right product of the generators.
pub fn evaluate_b_word(w: &BWord, mode: AlgebraMode, n: usize) -> Result<Endomorphism> {
    let factors = w
        .0
        .iter()
        .map(|g| g.to_endomorphism(mode, n))
        .collect::<Result<Vec<_>>>()?;
    Endomorphism::compose_all(mode, n, &factors)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationFamily {
    R1,
    R2_1,
    R2_2,
    R3,
    R4,
    R5,
    R6,
    R7,
}

impl RelationFamily {
    pub const ALL: [RelationFamily; 8] = [
        RelationFamily::R1,
        RelationFamily::R2_1,
        RelationFamily::R2_2,
        RelationFamily::R3,
        RelationFamily::R4,
        RelationFamily::R5,
        RelationFamily::R6,
        RelationFamily::R7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RelationFamily::R1 => "R1",
            RelationFamily::R2_1 => "R2_1",
            RelationFamily::R2_2 => "R2_2",
            RelationFamily::R3 => "R3",
            RelationFamily::R4 => "R4",
            RelationFamily::R5 => "R5",
            RelationFamily::R6 => "R6",
            RelationFamily::R7 => "R7",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name().eq_ignore_ascii_case(name))
    }

    /// Smallest `n` with an admissible instance.
    pub fn min_n(self) -> usize {
        match self {
            RelationFamily::R1 | RelationFamily::R5 => 1,
            RelationFamily::R2_2 | RelationFamily::R3 | RelationFamily::R4 | RelationFamily::R7 => 2,
            RelationFamily::R2_1 | RelationFamily::R6 => 3,
        }
    }
}

/// The three transposition identities grouped under R4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TauRelation {
    /// `t(k,s)^2 = 1`
    Involution { k: usize, s: usize },
    /// `t(k,s) t(l,m) = t(l,m) t(k,s)` for disjoint pairs
    Commute { k: usize, s: usize, l: usize, m: usize },
    /// `t(k,s) t(l,k) t(k,s) = t(l,s)` for distinct `k, s, l`
    Conjugate { k: usize, s: usize, l: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationInstance {
    /// `sigma(i,a,f) sigma(i,b,g) = sigma(i, ab, f + a g)`
    R1 { i: usize, alpha: Scalar, f: Polynomial, beta: Scalar, g: Polynomial },
    /// `t(k,s) sigma(i,a,f) t(k,s) = sigma(i, a, f^t(k,s))` with `k, s != i`
    R2_1 { k: usize, s: usize, i: usize, alpha: Scalar, f: Polynomial },
    /// `t(i,s) sigma(i,a,f) t(i,s) = sigma(s, a, f^t(i,s))`
    R2_2 { i: usize, s: usize, alpha: Scalar, f: Polynomial },
    /// `sigma(i,a,f)^-1 sigma(j,b,g) sigma(i,a,f) = sigma(j, b, g^sigma(i,a,f))`
    /// with `f` free of `x_i, x_j`
    R3 { i: usize, alpha: Scalar, f: Polynomial, j: usize, beta: Scalar, g: Polynomial },
    R4 { mode: AlgebraMode, n: usize, relation: TauRelation },
    /// `phi(a,f) phi(b,g) = phi(ab, a g + f)`
    R5 { alpha: Scalar, f: Polynomial, beta: Scalar, g: Polynomial },
    /// `t(k,s) phi(a,g) t(k,s) = phi(a, g^t(k,s))` with `k, s != 1`
    R6 { k: usize, s: usize, alpha: Scalar, g: Polynomial },
    /// `t(1,i) phi(a,g)^-1 t(1,i) phi(b,f) t(1,i) phi(a,g) t(1,i)
    ///   = phi(b, f^(t(1,i) phi(a,g) t(1,i)))` with `g` free of `x_1, x_i`
    R7 { i: usize, alpha: Scalar, g: Polynomial, beta: Scalar, f: Polynomial },
}

/// Both sides of a relation, evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationCheck {
    pub family: RelationFamily,
    pub holds: bool,
    pub lhs: Endomorphism,
    pub rhs: Endomorphism,
}

fn violated(msg: impl Into<String>) -> Error {
    Error::SideConditionViolated(msg.into())
}

fn index_in(i: usize, n: usize, name: &str) -> Result<()> {
    if i == 0 || i > n {
        return Err(violated(format!("{name} = {i} is outside 1..={n}")));
    }
    Ok(())
}

fn distinct(pairs: &[(&str, usize)]) -> Result<()> {
    for (a, (na, va)) in pairs.iter().enumerate() {
        for (nb, vb) in &pairs[a + 1..] {
            if va == vb {
                return Err(violated(format!("{na} and {nb} must differ")));
            }
        }
    }
    Ok(())
}

fn free_of(p: &Polynomial, var: usize, name: &str) -> Result<()> {
    if p.involves(var) {
        return Err(violated(format!("{name} must not involve x{var}")));
    }
    Ok(())
}

fn nonzero(c: &Scalar, name: &str) -> Result<()> {
    if *c == Scalar::from_integer(0.into()) {
        return Err(violated(format!("{name} must be nonzero")));
    }
    Ok(())
}

fn same_space(p: &Polynomial, q: &Polynomial) -> Result<()> {
    p.same_space(q)
}

fn sigma(i: usize, alpha: &Scalar, f: &Polynomial) -> Result<Endomorphism> {
    Endomorphism::elementary(i, alpha.clone(), f.clone())
}

fn product(mode: AlgebraMode, n: usize, factors: &[&Endomorphism]) -> Result<Endomorphism> {
    Endomorphism::compose_all(mode, n, factors.iter().copied())
}

impl RelationInstance {
    pub fn family(&self) -> RelationFamily {
        match self {
            RelationInstance::R1 { .. } => RelationFamily::R1,
            RelationInstance::R2_1 { .. } => RelationFamily::R2_1,
            RelationInstance::R2_2 { .. } => RelationFamily::R2_2,
            RelationInstance::R3 { .. } => RelationFamily::R3,
            RelationInstance::R4 { .. } => RelationFamily::R4,
            RelationInstance::R5 { .. } => RelationFamily::R5,
            RelationInstance::R6 { .. } => RelationFamily::R6,
            RelationInstance::R7 { .. } => RelationFamily::R7,
        }
    }

    /// Evaluates both sides after validating the side conditions.
    pub fn check(&self) -> Result<RelationCheck> {
        let (lhs, rhs) = self.sides()?;
        Ok(RelationCheck {
            family: self.family(),
            holds: lhs == rhs,
            lhs,
            rhs,
        })
    }

    fn sides(&self) -> Result<(Endomorphism, Endomorphism)> {
        match self {
            RelationInstance::R1 { i, alpha, f, beta, g } => {
                same_space(f, g)?;
                let n = f.n();
                index_in(*i, n, "i")?;
                nonzero(alpha, "alpha")?;
                nonzero(beta, "beta")?;
                free_of(f, *i, "f")?;
                free_of(g, *i, "g")?;
                let lhs = sigma(*i, alpha, f)?.compose(&sigma(*i, beta, g)?)?;
                let rhs = sigma(*i, &(alpha * beta), &(f + &g.scale(alpha)))?;
                Ok((lhs, rhs))
            }
            RelationInstance::R2_1 { k, s, i, alpha, f } => {
                let (mode, n) = (f.mode(), f.n());
                for (name, v) in [("k", *k), ("s", *s), ("i", *i)] {
                    index_in(v, n, name)?;
                }
                distinct(&[("k", *k), ("s", *s), ("i", *i)])?;
                nonzero(alpha, "alpha")?;
                free_of(f, *i, "f")?;
                let tau = Endomorphism::transposition(mode, n, *k, *s)?;
                let lhs = product(mode, n, &[&tau, &sigma(*i, alpha, f)?, &tau])?;
                let rhs = sigma(*i, alpha, &f.substitute(tau.images())?)?;
                Ok((lhs, rhs))
            }
            RelationInstance::R2_2 { i, s, alpha, f } => {
                let (mode, n) = (f.mode(), f.n());
                index_in(*i, n, "i")?;
                index_in(*s, n, "s")?;
                distinct(&[("i", *i), ("s", *s)])?;
                nonzero(alpha, "alpha")?;
                free_of(f, *i, "f")?;
                let tau = Endomorphism::transposition(mode, n, *i, *s)?;
                let lhs = product(mode, n, &[&tau, &sigma(*i, alpha, f)?, &tau])?;
                let rhs = sigma(*s, alpha, &f.substitute(tau.images())?)?;
                Ok((lhs, rhs))
            }
            RelationInstance::R3 { i, alpha, f, j, beta, g } => {
                same_space(f, g)?;
                let (mode, n) = (f.mode(), f.n());
                index_in(*i, n, "i")?;
                index_in(*j, n, "j")?;
                distinct(&[("i", *i), ("j", *j)])?;
                nonzero(alpha, "alpha")?;
                nonzero(beta, "beta")?;
                free_of(f, *i, "f")?;
                free_of(f, *j, "f")?;
                free_of(g, *j, "g")?;
                let a = sigma(*i, alpha, f)?;
                let lhs = product(mode, n, &[&a.inverse()?, &sigma(*j, beta, g)?, &a])?;
                let rhs = sigma(*j, beta, &g.substitute(a.images())?)?;
                Ok((lhs, rhs))
            }
            RelationInstance::R4 { mode, n, relation } => {
                let t = |k: usize, s: usize| Endomorphism::transposition(*mode, *n, k, s);
                match *relation {
                    TauRelation::Involution { k, s } => {
                        index_in(k, *n, "k")?;
                        index_in(s, *n, "s")?;
                        distinct(&[("k", k), ("s", s)])?;
                        let tau = t(k, s)?;
                        Ok((tau.compose(&tau)?, Endomorphism::identity(*mode, *n)))
                    }
                    TauRelation::Commute { k, s, l, m } => {
                        for (name, v) in [("k", k), ("s", s), ("l", l), ("m", m)] {
                            index_in(v, *n, name)?;
                        }
                        distinct(&[("k", k), ("s", s), ("l", l), ("m", m)])?;
                        let (a, b) = (t(k, s)?, t(l, m)?);
                        Ok((a.compose(&b)?, b.compose(&a)?))
                    }
                    TauRelation::Conjugate { k, s, l } => {
                        for (name, v) in [("k", k), ("s", s), ("l", l)] {
                            index_in(v, *n, name)?;
                        }
                        distinct(&[("k", k), ("s", s), ("l", l)])?;
                        let a = t(k, s)?;
                        Ok((product(*mode, *n, &[&a, &t(l, k)?, &a])?, t(l, s)?))
                    }
                }
            }
            RelationInstance::R5 { alpha, f, beta, g } => {
                same_space(f, g)?;
                nonzero(alpha, "alpha")?;
                nonzero(beta, "beta")?;
                free_of(f, 1, "f")?;
                free_of(g, 1, "g")?;
                let lhs = sigma(1, alpha, f)?.compose(&sigma(1, beta, g)?)?;
                let rhs = sigma(1, &(alpha * beta), &(&g.scale(alpha) + f))?;
                Ok((lhs, rhs))
            }
            RelationInstance::R6 { k, s, alpha, g } => {
                let (mode, n) = (g.mode(), g.n());
                index_in(*k, n, "k")?;
                index_in(*s, n, "s")?;
                distinct(&[("k", *k), ("s", *s), ("1", 1)])?;
                nonzero(alpha, "alpha")?;
                free_of(g, 1, "g")?;
                let tau = Endomorphism::transposition(mode, n, *k, *s)?;
                let lhs = product(mode, n, &[&tau, &sigma(1, alpha, g)?, &tau])?;
                let rhs = sigma(1, alpha, &g.substitute(tau.images())?)?;
                Ok((lhs, rhs))
            }
            RelationInstance::R7 { i, alpha, g, beta, f } => {
                same_space(f, g)?;
                let (mode, n) = (f.mode(), f.n());
                index_in(*i, n, "i")?;
                distinct(&[("i", *i), ("1", 1)])?;
                nonzero(alpha, "alpha")?;
                nonzero(beta, "beta")?;
                free_of(g, 1, "g")?;
                free_of(g, *i, "g")?;
                free_of(f, 1, "f")?;
                let tau = Endomorphism::transposition(mode, n, 1, *i)?;
                let phi_g = sigma(1, alpha, g)?;
                let phi_g_inv = phi_g.inverse()?;
                let phi_f = sigma(1, beta, f)?;
                let lhs = product(mode, n, &[&tau, &phi_g_inv, &tau, &phi_f, &tau, &phi_g, &tau])?;
                let c = product(mode, n, &[&tau, &phi_g, &tau])?;
                let rhs = sigma(1, beta, &f.substitute(c.images())?)?;
                Ok((lhs, rhs))
            }
        }
    }
}

fn pick_distinct<R: Rng + ?Sized>(rng: &mut R, pool: &[usize], count: usize) -> Vec<usize> {
    pool.choose_multiple(rng, count).copied().collect()
}

/// A random instance satisfying the family's side conditions, or `None`
/// when `n` is below [`RelationFamily::min_n`].
pub fn random_instance<R: Rng + ?Sized>(
    rng: &mut R,
    family: RelationFamily,
    mode: AlgebraMode,
    n: usize,
    max_degree: u32,
) -> Option<RelationInstance> {
    if n < family.min_n() {
        return None;
    }
    let all: Vec<usize> = (1..=n).collect();
    let without = |skip: &[usize]| -> Vec<usize> { all.iter().copied().filter(|v| !skip.contains(v)).collect() };
    let poly = |rng: &mut R, vars: &[usize]| random::polynomial(rng, mode, n, vars, max_degree, 3);
    let instance = match family {
        RelationFamily::R1 => {
            let i = rng.gen_range(1..=n);
            let vars = without(&[i]);
            RelationInstance::R1 {
                i,
                alpha: random::nonzero_scalar(rng),
                f: poly(rng, &vars),
                beta: random::nonzero_scalar(rng),
                g: poly(rng, &vars),
            }
        }
        RelationFamily::R2_1 => {
            let v = pick_distinct(rng, &all, 3);
            RelationInstance::R2_1 {
                k: v[0],
                s: v[1],
                i: v[2],
                alpha: random::nonzero_scalar(rng),
                f: poly(rng, &without(&[v[2]])),
            }
        }
        RelationFamily::R2_2 => {
            let v = pick_distinct(rng, &all, 2);
            RelationInstance::R2_2 {
                i: v[0],
                s: v[1],
                alpha: random::nonzero_scalar(rng),
                f: poly(rng, &without(&[v[0]])),
            }
        }
        RelationFamily::R3 => {
            let v = pick_distinct(rng, &all, 2);
            RelationInstance::R3 {
                i: v[0],
                alpha: random::nonzero_scalar(rng),
                f: poly(rng, &without(&[v[0], v[1]])),
                j: v[1],
                beta: random::nonzero_scalar(rng),
                g: poly(rng, &without(&[v[1]])),
            }
        }
        RelationFamily::R4 => {
            let relation = match rng.gen_range(0..3).min(n.saturating_sub(2)) {
                0 => {
                    let v = pick_distinct(rng, &all, 2);
                    TauRelation::Involution { k: v[0], s: v[1] }
                }
                1 if n < 4 => {
                    let v = pick_distinct(rng, &all, 3);
                    TauRelation::Conjugate { k: v[0], s: v[1], l: v[2] }
                }
                1 => {
                    let v = pick_distinct(rng, &all, 4);
                    TauRelation::Commute { k: v[0], s: v[1], l: v[2], m: v[3] }
                }
                _ => {
                    let v = pick_distinct(rng, &all, 3);
                    TauRelation::Conjugate { k: v[0], s: v[1], l: v[2] }
                }
            };
            RelationInstance::R4 { mode, n, relation }
        }
        RelationFamily::R5 => {
            let vars = without(&[1]);
            RelationInstance::R5 {
                alpha: random::nonzero_scalar(rng),
                f: poly(rng, &vars),
                beta: random::nonzero_scalar(rng),
                g: poly(rng, &vars),
            }
        }
        RelationFamily::R6 => {
            let v = pick_distinct(rng, &without(&[1]), 2);
            RelationInstance::R6 {
                k: v[0],
                s: v[1],
                alpha: random::nonzero_scalar(rng),
                g: poly(rng, &without(&[1])),
            }
        }
        RelationFamily::R7 => {
            let i = rng.gen_range(2..=n);
            RelationInstance::R7 {
                i,
                alpha: random::nonzero_scalar(rng),
                g: poly(rng, &without(&[1, i])),
                beta: random::nonzero_scalar(rng),
                f: poly(rng, &without(&[1])),
            }
        }
    };
    Some(instance)
}
