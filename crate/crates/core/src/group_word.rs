//! Words in two abstract generators `a`, `b`, written `a^2 b^-1 a b^3`.

use std::fmt;

use crate::error::{Error, ParseError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    A,
    B,
}

impl Generator {
    pub fn letter(self) -> char {
        match self {
            Generator::A => 'a',
            Generator::B => 'b',
        }
    }
}

/// Reduced word: nonzero exponents, adjacent syllables on different generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupWord {
    syllables: Vec<(Generator, i64)>,
}

impl GroupWord {
    pub fn new(syllables: Vec<(Generator, i64)>) -> Result<Self> {
        for (k, &(g, e)) in syllables.iter().enumerate() {
            if e == 0 {
                return Err(Error::UnreducedWord(format!("syllable {} has exponent 0", k + 1)));
            }
            if k > 0 && syllables[k - 1].0 == g {
                return Err(Error::UnreducedWord(format!(
                    "syllables {} and {} are both powers of {}",
                    k,
                    k + 1,
                    g.letter()
                )));
            }
        }
        Ok(GroupWord { syllables })
    }

    /// Free reduction: merges neighbours and drops zero exponents.
    pub fn reduced(syllables: impl IntoIterator<Item = (Generator, i64)>) -> Self {
        let mut out: Vec<(Generator, i64)> = Vec::new();
        for (g, e) in syllables {
            if e == 0 {
                continue;
            }
            match out.last_mut() {
                Some(last) if last.0 == g => {
                    last.1 += e;
                    if last.1 == 0 {
                        out.pop();
                    }
                }
                _ => out.push((g, e)),
            }
        }
        GroupWord { syllables: out }
    }

    pub fn syllables(&self) -> &[(Generator, i64)] {
        &self.syllables
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn concat(&self, other: &GroupWord) -> GroupWord {
        GroupWord::reduced(self.syllables.iter().chain(&other.syllables).copied())
    }

    pub fn parse(text: &str) -> Result<GroupWord> {
        let mut syllables = Vec::new();
        let bytes = text.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            if bytes[pos].is_ascii_whitespace() {
                pos += 1;
                continue;
            }
            let g = match bytes[pos] {
                b'a' => Generator::A,
                b'b' => Generator::B,
                _ => return Err(ParseError::new(pos + 1, "expected generator 'a' or 'b'").into()),
            };
            pos += 1;
            let mut e = 1i64;
            if bytes.get(pos) == Some(&b'^') {
                pos += 1;
                let start = pos;
                if bytes.get(pos) == Some(&b'-') {
                    pos += 1;
                }
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                e = text[start..pos]
                    .parse()
                    .map_err(|_| ParseError::new(start + 1, "expected an integer exponent"))?;
            }
            if pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
                return Err(ParseError::new(pos + 1, "expected whitespace between syllables").into());
            }
            syllables.push((g, e));
        }
        GroupWord::new(syllables)
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (k, &(g, e)) in self.syllables.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", g.letter())?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::{A, B};

    #[test]
    fn parse_and_print() {
        let w = GroupWord::parse("a^2 b^-1 a b^3").unwrap();
        assert_eq!(w.syllables(), &[(A, 2), (B, -1), (A, 1), (B, 3)]);
        assert_eq!(w.to_string(), "a^2 b^-1 a b^3");
        assert_eq!(GroupWord::parse("").unwrap().to_string(), "1");
    }

    #[test]
    fn rejects_unreduced_and_garbage() {
        assert!(matches!(GroupWord::parse("a a"), Err(Error::UnreducedWord(_))));
        assert!(matches!(GroupWord::parse("a^0 b"), Err(Error::UnreducedWord(_))));
        match GroupWord::parse("a c") {
            Err(Error::Parse(e)) => assert_eq!(e.offset, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(GroupWord::parse("ab"), Err(Error::Parse(_))));
        assert!(matches!(GroupWord::parse("a^"), Err(Error::Parse(_))));
    }

    #[test]
    fn free_reduction() {
        let w = GroupWord::reduced([(A, 1), (B, 2), (B, -2), (A, 2)]);
        assert_eq!(w.syllables(), &[(A, 3)]);
        let u = GroupWord::parse("a b^2").unwrap();
        assert!(u.concat(&u.inverse()).is_empty());
    }
}
