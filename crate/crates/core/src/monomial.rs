//! Monomials of the polynomial algebra (exponent vectors) and of the free
//! associative algebra (words in the variables).

use std::cmp::Ordering;
use std::fmt;

/// Variables are stored 0-based; `x1` is letter `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Monomial {
    /// One exponent per variable, always exactly `n` entries.
    Commutative(Vec<u32>),
    /// Letters in multiplication order.
    Free(Vec<u32>),
}

/// How a free monomial splits around one variable `x_i`: `b1 x_i^k1 b2 ... x_i^ks b(s+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyllableProfile {
    pub degree_in_var: u32,
    pub syllable_count: usize,
    pub exponent_vector: Vec<u32>,
}

impl Monomial {
    pub fn one_commutative(n: usize) -> Self {
        Monomial::Commutative(vec![0; n])
    }

    pub fn one_free() -> Self {
        Monomial::Free(Vec::new())
    }

    pub fn is_one(&self) -> bool {
        match self {
            Monomial::Commutative(e) => e.iter().all(|&k| k == 0),
            Monomial::Free(w) => w.is_empty(),
        }
    }

    /// Total degree (word length in the free case).
    pub fn degree(&self) -> u32 {
        match self {
            Monomial::Commutative(e) => e.iter().sum(),
            Monomial::Free(w) => w.len() as u32,
        }
    }

    /// Degree in the 0-based variable `var`.
    pub fn degree_in(&self, var: usize) -> u32 {
        match self {
            Monomial::Commutative(e) => e.get(var).copied().unwrap_or(0),
            Monomial::Free(w) => w.iter().filter(|&&l| l as usize == var).count() as u32,
        }
    }

    pub fn involves(&self, var: usize) -> bool {
        self.degree_in(var) > 0
    }

    /// Returns the variables (0-based) that occur in this monomial, ascending.
    pub fn support(&self) -> Vec<usize> {
        match self {
            Monomial::Commutative(e) => (0..e.len()).filter(|&j| e[j] > 0).collect(),
            Monomial::Free(w) => {
                let mut vars: Vec<usize> = w.iter().map(|&l| l as usize).collect();
                vars.sort_unstable();
                vars.dedup();
                vars
            }
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        match (self, other) {
            (Monomial::Commutative(a), Monomial::Commutative(b)) => {
                Monomial::Commutative(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (Monomial::Free(a), Monomial::Free(b)) => {
                let mut w = Vec::with_capacity(a.len() + b.len());
                w.extend_from_slice(a);
                w.extend_from_slice(b);
                Monomial::Free(w)
            }
            _ => panic!("multiplying monomials of different algebra modes"),
        }
    }

    /// Sorts a word into an exponent vector over `n` variables.
    pub fn abelianized(&self, n: usize) -> Monomial {
        match self {
            Monomial::Commutative(_) => self.clone(),
            Monomial::Free(w) => {
                let mut e = vec![0; n];
                for &l in w {
                    e[l as usize] += 1;
                }
                Monomial::Commutative(e)
            }
        }
    }

    /// Maximal runs of the letter `var`; `None` for commutative monomials.
    pub fn syllable_profile(&self, var: usize) -> Option<SyllableProfile> {
        let Monomial::Free(w) = self else {
            return None;
        };
        let mut exponents = Vec::new();
        let mut run = 0u32;
        for &l in w {
            if l as usize == var {
                run += 1;
            } else if run > 0 {
                exponents.push(run);
                run = 0;
            }
        }
        if run > 0 {
            exponents.push(run);
        }
        Some(SyllableProfile {
            degree_in_var: exponents.iter().sum(),
            syllable_count: exponents.len(),
            exponent_vector: exponents,
        })
    }

    /// Letters with multiplicity in canonical reading order. For exponent
    /// vectors this is the sorted expansion, e.g. `x1^2*x3 -> [0, 0, 2]`.
    fn letters(&self) -> Vec<u32> {
        match self {
            Monomial::Commutative(e) => e
                .iter()
                .enumerate()
                .flat_map(|(j, &k)| std::iter::repeat_n(j as u32, k as usize))
                .collect(),
            Monomial::Free(w) => w.clone(),
        }
    }
}

/// Canonical order, which is also the printing order: higher degree first,
/// then lexicographic on the letter sequence (so `x1^2 < x1*x2 < x2^2` in
/// iteration order, and for words `x1*x2` comes before `x2*x1`).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Monomial::Commutative(a), Monomial::Commutative(b)) => {
                let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
                // larger exponent vectors (graded lex) come first
                db.cmp(&da).then_with(|| b.cmp(a))
            }
            (Monomial::Free(a), Monomial::Free(b)) => b.len().cmp(&a.len()).then_with(|| a.cmp(b)),
            (Monomial::Commutative(_), Monomial::Free(_)) => Ordering::Less,
            (Monomial::Free(_), Monomial::Commutative(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Writes `x1^2*x2*x1`; the empty monomial prints as `1`.
impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters = self.letters();
        if letters.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < letters.len() {
            let l = letters[i];
            let mut j = i;
            while j < letters.len() && letters[j] == l {
                j += 1;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", l + 1)?;
            if j - i > 1 {
                write!(f, "^{}", j - i)?;
            }
            i = j;
        }
        Ok(())
    }
}
