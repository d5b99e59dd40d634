//! Braid words and free words in the fundamental group of the punctured disk.
//!
//! A braid word is a sequence of Artin generators of `B_n`; a free word is a
//! sequence of loop generators `x_1, ..., x_n`, one per puncture. Curves are
//! encoded downstream by free words, so both live here with no geometry.

use crate::error::{Error, Result};
use std::fmt;

/// One letter `sigma_i^(sign)` of a braid word. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidGen {
    pub index: usize,
    pub sign: i8,
}

/// A word in the Artin generators of `B_n`, read left to right as the
/// composition order of the diffeomorphisms applied to curves: the first
/// letter acts outermost, so `rho(uv) = rho(u) * rho(v)` on matrices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub n: usize,
    pub letters: Vec<BraidGen>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<BraidGen>) -> Result<Self> {
        if n < 2 {
            return Err(Error::Parse(format!("need at least 2 strands, got {n}")));
        }
        for g in &letters {
            if g.index == 0 || g.index > n - 1 {
                return Err(Error::IndexOutOfRange { index: g.index, n });
            }
            if g.sign != 1 && g.sign != -1 {
                return Err(Error::Parse(format!("bad sign {}", g.sign)));
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn identity(n: usize) -> Self {
        BraidWord { n, letters: vec![] }
    }

    /// Parse the text form "1 -2 1": signed generator indices, whitespace-separated.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in text.split_whitespace() {
            let v: i64 = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad token {tok:?}")))?;
            if v == 0 {
                return Err(Error::Parse("generator index 0 is not allowed".into()));
            }
            letters.push(BraidGen {
                index: v.unsigned_abs() as usize,
                sign: if v > 0 { 1 } else { -1 },
            });
        }
        BraidWord::new(n, letters)
    }

    /// Reversed word with flipped signs; `w * w.inverse()` cancels freely.
    pub fn inverse(&self) -> Self {
        BraidWord {
            n: self.n,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|g| BraidGen {
                    index: g.index,
                    sign: -g.sign,
                })
                .collect(),
        }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::StrandMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// The underlying permutation of punctures, as the map `k -> perm[k-1]`.
    ///
    /// The first letter composes outermost, matching the curve action.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (1..=self.n).collect();
        for g in self.letters.iter().rev() {
            for p in perm.iter_mut() {
                if *p == g.index {
                    *p = g.index + 1;
                } else if *p == g.index + 1 {
                    *p = g.index;
                }
            }
        }
        perm
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self
            .letters
            .iter()
            .map(|g| format!("{}", g.index as i64 * g.sign as i64))
            .collect();
        write!(f, "{}", toks.join(" "))
    }
}

/// A word in the free generators `x_1..x_n`; each letter is `(puncture, sign)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FreeWord(pub Vec<(usize, i8)>);

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord(Vec::new())
    }

    pub fn letter(k: usize, sign: i8) -> Self {
        FreeWord(vec![(k, sign)])
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Freely reduce; the result is empty iff the word represents the
    /// trivial loop of the punctured disk.
    pub fn reduce(&self) -> FreeWord {
        let mut stack: Vec<(usize, i8)> = Vec::with_capacity(self.0.len());
        for &(k, s) in &self.0 {
            if let Some(&(k2, s2)) = stack.last() {
                if k2 == k && s2 == -s {
                    stack.pop();
                    continue;
                }
            }
            stack.push((k, s));
        }
        FreeWord(stack)
    }

    pub fn is_reduced(&self) -> bool {
        self.0
            .windows(2)
            .all(|w| !(w[0].0 == w[1].0 && w[0].1 == -w[1].1))
    }

    /// Exponent sum: the total algebraic winding around all punctures.
    pub fn winding(&self) -> i64 {
        self.0.iter().map(|&(_, s)| s as i64).sum()
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord(self.0.iter().rev().map(|&(k, s)| (k, -s)).collect())
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        FreeWord(v)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let toks: Vec<String> = self
            .0
            .iter()
            .map(|&(k, s)| {
                if s > 0 {
                    format!("x{k}")
                } else {
                    format!("x{k}^-1")
                }
            })
            .collect();
        write!(f, "{}", toks.join("."))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(letters: &[(usize, i8)]) -> FreeWord {
        FreeWord(letters.to_vec())
    }

    #[test]
    fn free_reduce_cancellation() {
        assert!(fw(&[(1, 1), (1, -1)]).reduce().is_empty());
        assert_eq!(
            fw(&[(1, 1), (2, 1), (2, -1), (1, 1)]).reduce(),
            fw(&[(1, 1), (1, 1)])
        );
        assert!(fw(&[(2, 1), (1, -1), (1, 1), (2, -1)]).reduce().is_empty());
    }

    #[test]
    fn free_reduce_idempotent_and_shorter() {
        let words = [
            fw(&[(1, 1), (2, 1), (2, -1), (3, 1), (3, -1), (1, -1)]),
            fw(&[(1, 1), (1, 1), (2, -1)]),
            fw(&[]),
        ];
        for w in words {
            let r = w.reduce();
            assert_eq!(r.reduce(), r);
            assert!(r.len() <= w.len());
            assert_eq!(r.winding(), w.winding());
        }
    }

    #[test]
    fn winding_examples() {
        assert_eq!(fw(&[(1, 1), (2, 1)]).winding(), 2);
        assert_eq!(FreeWord::empty().winding(), 0);
        assert_eq!(fw(&[(1, 1), (2, -1)]).winding(), 0);
    }

    #[test]
    fn braid_inverse() {
        let w = BraidWord::parse(3, "1 -2").unwrap();
        let inv = w.inverse();
        assert_eq!(inv, BraidWord::parse(3, "2 -1").unwrap());
        assert_eq!(BraidWord::identity(3).inverse(), BraidWord::identity(3));
    }

    #[test]
    fn permutations() {
        let s1 = BraidWord::parse(3, "1").unwrap();
        assert_eq!(s1.permutation(), vec![2, 1, 3]);
        let sq = BraidWord::parse(3, "1 1").unwrap();
        assert_eq!(sq.permutation(), vec![1, 2, 3]);
        // first letter composes outermost: 1 -> 2, 2 -> 3, 3 -> 1
        let w = BraidWord::parse(3, "1 2").unwrap();
        assert_eq!(w.permutation(), vec![2, 3, 1]);
    }

    #[test]
    fn permutation_of_inverse_word_composes_to_identity() {
        let w = BraidWord::parse(4, "1 -2 3 3 -1").unwrap();
        let both = w.concat(&w.inverse()).unwrap();
        assert_eq!(both.permutation(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(BraidWord::parse(3, "0").is_err());
        assert!(BraidWord::parse(3, "3").is_err());
        assert!(BraidWord::parse(3, "x").is_err());
    }
}
