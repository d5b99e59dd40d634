//! Exact integer Laurent polynomials in `t` and the reduced Burau matrices.
//!
//! Coefficients are arbitrary-precision: they grow with word length and the
//! categorification check needs exact equality, so no fixed-width type is
//! safe here.

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// An element of Z[t, t^-1], stored as a sorted exponent -> coefficient map
/// with no zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0, 1)
    }

    /// `c * t^e`.
    pub fn monomial(exp: i64, c: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if c != 0 {
            coeffs.insert(exp, BigInt::from(c));
        }
        LaurentPoly { coeffs }
    }

    pub fn t() -> Self {
        LaurentPoly::monomial(1, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exp: i64, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, c);
        }
        out
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }

    /// Terms as `(exponent, coefficient)` pairs sorted by exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(e, c)| (*e, c))
    }

    /// JSON form: a list of `[exponent, coefficient]` pairs sorted by exponent.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms()
                .map(|(e, c)| serde_json::json!([e, c.to_string()]))
                .collect(),
        )
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().rev() {
            let (sign, mag) = if c.sign() == num::bigint::Sign::Minus {
                ("-", -c)
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let mag_one = mag.is_one();
            match (*e, mag_one) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}*t")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}

/// A square matrix over Z[t, t^-1]; rows and columns are 1-based in the API
/// to match generator indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    pub size: usize,
    entries: Vec<Vec<LaurentPoly>>,
}

impl LaurentMatrix {
    pub fn identity(size: usize) -> Self {
        let entries = (0..size)
            .map(|r| {
                (0..size)
                    .map(|c| {
                        if r == c {
                            LaurentPoly::one()
                        } else {
                            LaurentPoly::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        LaurentMatrix { size, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i - 1][j - 1]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly) {
        self.entries[i - 1][j - 1] = p;
    }

    pub fn mul(&self, other: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.size, other.size);
        let mut out = LaurentMatrix::identity(self.size);
        for r in 1..=self.size {
            for c in 1..=self.size {
                let mut acc = LaurentPoly::zero();
                for k in 1..=self.size {
                    acc = acc.add(&self.get(r, k).mul(other.get(k, c)));
                }
                out.set(r, c, acc);
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        *self == LaurentMatrix::identity(self.size)
    }

    /// Row-major JSON rendering, each entry a sorted `[exp, coeff]` list.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.entries
                .iter()
                .map(|row| serde_json::Value::Array(row.iter().map(|p| p.to_json()).collect()))
                .collect(),
        )
    }
}

impl fmt::Display for LaurentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 1..=self.size {
            write!(f, "[")?;
            for c in 1..=self.size {
                if c > 1 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// The reduced Burau matrix of one generator `sigma_i^(sign)` in `B_n`.
///
/// For the positive generator only row `i` differs from the identity:
/// `t` at `(i, i-1)`, `-t` at `(i, i)`, `1` at `(i, i+1)`, with the
/// out-of-range columns dropped at the edges. The inverse is the exact
/// matrix inverse: `1` at `(i, i-1)`, `-t^-1` at `(i, i)`, `t^-1` at
/// `(i, i+1)`.
pub fn burau_generator(n: usize, i: usize, sign: i8) -> Result<LaurentMatrix> {
    if n < 2 || i == 0 || i > n - 1 {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let mut m = LaurentMatrix::identity(n - 1);
    if sign > 0 {
        if i >= 2 {
            m.set(i, i - 1, LaurentPoly::monomial(1, 1));
        }
        m.set(i, i, LaurentPoly::monomial(1, -1));
        if i + 1 <= n - 1 {
            m.set(i, i + 1, LaurentPoly::one());
        }
    } else {
        if i >= 2 {
            m.set(i, i - 1, LaurentPoly::one());
        }
        m.set(i, i, LaurentPoly::monomial(-1, -1));
        if i + 1 <= n - 1 {
            m.set(i, i + 1, LaurentPoly::monomial(-1, 1));
        }
    }
    Ok(m)
}

/// The reduced Burau matrix of a braid word: the ordered product of the
/// generator matrices, left to right. Identity for the empty word.
pub fn burau_matrix(w: &BraidWord) -> LaurentMatrix {
    let mut m = LaurentMatrix::identity(w.n - 1);
    for g in &w.letters {
        let gm = burau_generator(w.n, g.index, g.sign).expect("validated word");
        m = m.mul(&gm);
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_arith() {
        let t = LaurentPoly::t();
        assert!(t.add(&t.neg()).is_zero());
        assert_eq!(t.neg().mul(&t.neg()), LaurentPoly::monomial(2, 1));
        assert_eq!(
            LaurentPoly::monomial(-1, 1).mul(&t),
            LaurentPoly::one()
        );
    }

    #[test]
    fn burau_generator_matrices() {
        // middle generator of B4: full 3x3 block
        let m = burau_generator(4, 2, 1).unwrap();
        assert_eq!(*m.get(1, 1), LaurentPoly::one());
        assert_eq!(*m.get(2, 1), LaurentPoly::t());
        assert_eq!(*m.get(2, 2), LaurentPoly::monomial(1, -1));
        assert_eq!(*m.get(2, 3), LaurentPoly::one());
        assert_eq!(*m.get(3, 3), LaurentPoly::one());
        assert_eq!(*m.get(1, 2), LaurentPoly::zero());

        // edge truncation at i = 1 in B3
        let m = burau_generator(3, 1, 1).unwrap();
        assert_eq!(*m.get(1, 1), LaurentPoly::monomial(1, -1));
        assert_eq!(*m.get(1, 2), LaurentPoly::one());
        assert_eq!(*m.get(2, 1), LaurentPoly::zero());
        assert_eq!(*m.get(2, 2), LaurentPoly::one());

        // 1x1 inverse in B2
        let m = burau_generator(2, 1, -1).unwrap();
        assert_eq!(*m.get(1, 1), LaurentPoly::monomial(-1, -1));
    }

    #[test]
    fn generator_times_inverse_is_identity() {
        for n in 2..=6 {
            for i in 1..n {
                let a = burau_generator(n, i, 1).unwrap();
                let b = burau_generator(n, i, -1).unwrap();
                assert!(a.mul(&b).is_identity(), "n={n} i={i}");
                assert!(b.mul(&a).is_identity(), "n={n} i={i}");
            }
        }
    }

    #[test]
    fn braid_relations_hold() {
        for n in 2..=6usize {
            for i in 1..n {
                for j in 1..n {
                    if i.abs_diff(j) >= 2 {
                        let a = burau_generator(n, i, 1).unwrap();
                        let b = burau_generator(n, j, 1).unwrap();
                        assert_eq!(a.mul(&b), b.mul(&a), "far commutation n={n} i={i} j={j}");
                    }
                }
                if i + 1 < n {
                    let a = burau_generator(n, i, 1).unwrap();
                    let b = burau_generator(n, i + 1, 1).unwrap();
                    assert_eq!(
                        a.mul(&b).mul(&a),
                        b.mul(&a).mul(&b),
                        "braid relation n={n} i={i}"
                    );
                }
            }
        }
    }

    #[test]
    fn burau_word_examples() {
        let empty = BraidWord::identity(3);
        assert!(burau_matrix(&empty).is_identity());

        let lhs = burau_matrix(&BraidWord::parse(3, "1 2 1").unwrap());
        let rhs = burau_matrix(&BraidWord::parse(3, "2 1 2").unwrap());
        assert_eq!(lhs, rhs);

        let m = burau_matrix(&BraidWord::parse(3, "1 2").unwrap());
        assert_eq!(*m.get(1, 1), LaurentPoly::zero());
        assert_eq!(*m.get(1, 2), LaurentPoly::monomial(1, -1));
        assert_eq!(*m.get(2, 1), LaurentPoly::t());
        assert_eq!(*m.get(2, 2), LaurentPoly::monomial(1, -1));
    }

    #[test]
    fn representation_property_random_words() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for n in 2..=5usize {
            for _ in 0..20 {
                let mut mk = |len: usize| {
                    let letters = (0..len)
                        .map(|_| crate::braid::BraidGen {
                            index: rng.gen_range(1..n),
                            sign: if rng.gen_bool(0.5) { 1 } else { -1 },
                        })
                        .collect();
                    BraidWord::new(n, letters).unwrap()
                };
                let u = mk(5);
                let v = mk(4);
                let uv = u.concat(&v).unwrap();
                assert_eq!(burau_matrix(&uv), burau_matrix(&u).mul(&burau_matrix(&v)));
                let winv = u.concat(&u.inverse()).unwrap();
                assert!(burau_matrix(&winv).is_identity());
            }
        }
    }
}
