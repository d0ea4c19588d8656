use std::collections::HashMap;

use crate::analysis::order::{element_order, ElementOrder};
use crate::endomorphism::{Elementary, Endomorphism};
use crate::error::{Error, Result};
use crate::group_word::{Generator, GroupWord};
use crate::polynomial::{AlgebraMode, Budget, Polynomial};

/// Degree-growth evidence that a word in `phi = sigma(1, alpha, f)` and
/// `psi = sigma(2, beta, g)` is not the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreePairCertificate {
    /// `deg_x2 f`
    pub p: u32,
    /// `deg_x1 g`
    pub q: u32,
    /// The word as given.
    pub word: GroupWord,
    /// Exponents reduced by the element orders, cyclically reduced and
    /// rotated to start with `a` and end with `b`.
    pub normalized: GroupWord,
    /// `normalized = conjugator^-1 word conjugator`.
    pub conjugator: GroupWord,
    /// Number of `a b` syllable pairs in `normalized`.
    pub m: u32,
    pub observed_degree: u64,
    pub expected_degree: u64,
    pub valid: bool,
}

fn reduce_exponent(e: i64, order: ElementOrder) -> i64 {
    match order {
        ElementOrder::Finite(o) => {
            let r = e.rem_euclid(o as i64);
            if r == 0 {
                0
            } else {
                r
            }
        }
        ElementOrder::Infinite => e,
    }
}

/// Returns `(normalized, conjugator)` or an error if the word collapses into
/// a single factor.
fn normalize(word: &GroupWord, order_a: ElementOrder, order_b: ElementOrder) -> Result<(GroupWord, GroupWord)> {
    let order = |g: Generator| match g {
        Generator::A => order_a,
        Generator::B => order_b,
    };
    let mut syl: Vec<(Generator, i64)> = Vec::with_capacity(word.len());
    for (k, &(g, e)) in word.syllables().iter().enumerate() {
        let r = reduce_exponent(e, order(g));
        if r == 0 {
            return Err(Error::UnreducedWord(format!(
                "syllable {} is {}^{} which is trivial",
                k + 1,
                g.letter(),
                e
            )));
        }
        syl.push((g, r));
    }
    if syl.is_empty() {
        return Err(Error::UnreducedWord("the empty word is trivial".into()));
    }
    let mut conjugator: Vec<(Generator, i64)> = Vec::new();
    while syl.len() >= 2 && syl[0].0 == syl[syl.len() - 1].0 {
        let (g, e) = syl.remove(0);
        conjugator.push((g, e));
        let last = syl.last_mut().expect("nonempty");
        last.1 = reduce_exponent(last.1 + e, order(g));
        if last.1 == 0 {
            syl.pop();
        }
    }
    if syl.len() < 2 {
        return Err(Error::WordInCyclicFactor);
    }
    if syl[0].0 == Generator::B {
        let first = syl.remove(0);
        conjugator.push(first);
        syl.push(first);
    }
    Ok((GroupWord::reduced(syl), GroupWord::reduced(conjugator)))
}

/// `h` under the endomorphism of `word`, with `a -> phi`, `b -> psi`,
/// syllables applied left to right.
pub fn evaluate_word(phi: &Elementary, psi: &Elementary, word: &GroupWord, h: &Polynomial, budget: &Budget) -> Result<Polynomial> {
    let mut cache: HashMap<(Generator, i64), Endomorphism> = HashMap::new();
    let mut out = h.clone();
    for &(g, e) in word.syllables() {
        let power = match cache.get(&(g, e)) {
            Some(p) => p,
            None => {
                let base = if g == Generator::A { phi } else { psi };
                let base = if e < 0 { base.inverse() } else { base.clone() };
                let p = Endomorphism::elementary_power(&base, e.unsigned_abs() as u32)?;
                cache.entry((g, e)).or_insert(p)
            }
        };
        out = power.apply_within(&out, budget)?;
    }
    Ok(out)
}

/// `deg_x1` of `x1^w` with `x2, ..., xn` set to zero afterwards.
///
/// Works from the right end of the word on the pair `(x1^W, x2^W)` of a
/// suffix `W`, specialized; prepending `sigma(1, a, c f)` maps the pair to
/// `(a u + c f(v), v)`. Specialization only lowers the degree, and the
/// degree is at most `(pq)^m`, so reaching that bound settles it.
fn specialized_degree(phi: &Elementary, psi: &Elementary, word: &GroupWord, budget: &Budget) -> Result<u64> {
    let n = phi.n();
    let zero = Polynomial::zero(AlgebraMode::Commutative, n);
    let mut u = Polynomial::var(AlgebraMode::Commutative, n, 1)?;
    let mut v = zero.clone();
    for &(g, e) in word.syllables().iter().rev() {
        let base = if g == Generator::A { phi } else { psi };
        let base = if e < 0 { base.inverse() } else { base.clone() };
        let power = Elementary::from_endomorphism(&Endomorphism::elementary_power(&base, e.unsigned_abs() as u32)?)?;
        let mut images = vec![zero.clone(); n];
        images[0] = u.clone();
        images[1] = v.clone();
        let shift = power.f().substitute_within(&images, budget)?;
        let moved = if g == Generator::A { &mut u } else { &mut v };
        *moved = moved.scale(power.alpha()).try_add(&shift)?;
        budget.check(moved)?;
    }
    Ok(u.degree_in_var(1)?.finite().unwrap_or(0) as u64)
}

fn to_commutative(e: &Elementary) -> Result<Elementary> {
    match e.mode() {
        AlgebraMode::Commutative => Ok(e.clone()),
        AlgebraMode::Free => Elementary::new(e.index(), e.alpha().clone(), e.f().abelianize()?),
    }
}

pub fn free_pair_check(phi: &Elementary, psi: &Elementary, word: &GroupWord) -> Result<FreePairCertificate> {
    free_pair_check_within(phi, psi, word, &Budget::UNLIMITED)
}

/// Certificate for `phi = sigma(1, alpha, f)`, `psi = sigma(2, beta, g)`.
/// Free-algebra inputs are abelianized first.
pub fn free_pair_check_within(
    phi: &Elementary,
    psi: &Elementary,
    word: &GroupWord,
    budget: &Budget,
) -> Result<FreePairCertificate> {
    if phi.index() != 1 || psi.index() != 2 {
        return Err(Error::UnsupportedIndices(phi.index(), psi.index()));
    }
    let (phi, psi) = (to_commutative(phi)?, to_commutative(psi)?);
    phi.f().same_space(psi.f())?;
    let p = phi.f().degree_in_var(2)?.finite().unwrap_or(0);
    let q = psi.f().degree_in_var(1)?.finite().unwrap_or(0);
    let pq = p as u64 * q as u64;
    if pq < 2 {
        return Err(Error::DegreeTooSmall(pq));
    }
    let (normalized, conjugator) = normalize(word, element_order(&phi), element_order(&psi))?;
    let m = (normalized.len() / 2) as u32;
    let expected_degree = pq
        .checked_pow(m)
        .ok_or_else(|| Error::BudgetExceeded(format!("expected degree {pq}^{m} overflows")))?;
    let mut observed_degree = specialized_degree(&phi, &psi, &normalized, budget)?;
    if observed_degree != expected_degree {
        let x1 = Polynomial::var(AlgebraMode::Commutative, phi.n(), 1)?;
        let image = evaluate_word(&phi, &psi, &normalized, &x1, budget)?;
        observed_degree = image.degree_in_var(1)?.finite().unwrap_or(0) as u64;
    }
    Ok(FreePairCertificate {
        p,
        q,
        word: word.clone(),
        normalized,
        conjugator,
        m,
        observed_degree,
        expected_degree,
        valid: observed_degree == expected_degree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::scalar::int;

    fn e(i: usize, alpha: i64, f: &str) -> Elementary {
        Elementary::new(i, int(alpha), parse_polynomial(f, AlgebraMode::Commutative, 2).unwrap()).unwrap()
    }

    fn w(s: &str) -> GroupWord {
        GroupWord::parse(s).unwrap()
    }

    #[test]
    fn degree_growth_examples() {
        let c = free_pair_check(&e(1, 1, "x2^2"), &e(2, 1, "x1"), &w("a b")).unwrap();
        assert_eq!((c.p, c.q, c.m, c.observed_degree), (2, 1, 1, 2));
        assert!(c.valid);
        let c = free_pair_check(&e(1, 1, "x2^2"), &e(2, 1, "x1^2"), &w("a b a b")).unwrap();
        assert_eq!((c.observed_degree, c.expected_degree), (16, 16));
        assert!(matches!(
            free_pair_check(&e(1, 1, "x2"), &e(2, 1, "x1"), &w("a b")),
            Err(Error::DegreeTooSmall(1))
        ));
    }

    #[test]
    fn normalization_by_conjugation() {
        let c = free_pair_check(&e(1, 1, "x2^2"), &e(2, 1, "x1"), &w("b a^2 b^-1 a")).unwrap();
        assert_eq!(c.normalized.to_string(), "a^2 b^-1 a b");
        assert_eq!(c.conjugator.to_string(), "b");
        assert_eq!(c.conjugator.inverse().concat(&c.word).concat(&c.conjugator), c.normalized);
        assert!(c.valid);

        let c = free_pair_check(&e(1, 1, "x2^2"), &e(2, 1, "x1"), &w("a b a^-1")).unwrap_err();
        assert_eq!(c, Error::WordInCyclicFactor);
        let c = free_pair_check(&e(1, 1, "x2^2"), &e(2, 1, "x1"), &w("a b^2 a^3")).unwrap();
        assert_eq!((c.normalized.to_string(), c.conjugator.to_string()), ("a^4 b^2".to_string(), "a b^2".to_string()));
    }

    #[test]
    fn order_two_caps_exponents() {
        let phi = e(1, -1, "x2^2");
        let psi = e(2, 1, "x1");
        assert!(matches!(free_pair_check(&phi, &psi, &w("a^2 b")), Err(Error::UnreducedWord(_))));
        let c = free_pair_check(&phi, &psi, &w("a^-1 b a^3 b")).unwrap();
        assert_eq!(c.normalized.to_string(), "a b a b");
        assert_eq!(c.observed_degree, 4);
        assert_eq!(free_pair_check(&phi, &psi, &w("a b a^-1 b^-1 a")), Err(Error::WordInCyclicFactor));
    }

    #[test]
    fn unsupported_indices() {
        assert!(matches!(
            free_pair_check(&e(2, 1, "x1^2"), &e(1, 1, "x2"), &w("a b")),
            Err(Error::UnsupportedIndices(2, 1))
        ));
    }
}
