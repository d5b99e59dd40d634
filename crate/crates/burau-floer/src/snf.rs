//! Smith normal form over the integers, for integral cohomology.

use num::bigint::BigInt;
use num::traits::{Signed, Zero};

/// Diagonalize an integer matrix; returns the invariant factors (positive,
/// each dividing the next). The rank is the number of factors.
pub fn smith_normal_form(mat: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = mat.len();
    let cols = if rows == 0 { 0 } else { mat[0].len() };
    let mut a: Vec<Vec<BigInt>> = mat.to_vec();
    let mut factors: Vec<BigInt> = Vec::new();
    let mut top = 0usize;

    while top < rows && top < cols {
        // minimal nonzero pivot in the remaining block
        let mut pivot: Option<(usize, usize)> = None;
        for r in top..rows {
            for c in top..cols {
                if !a[r][c].is_zero()
                    && pivot
                        .map(|(pr, pc)| a[r][c].abs() < a[pr][pc].abs())
                        .unwrap_or(true)
                {
                    pivot = Some((r, c));
                }
            }
        }
        let Some((pr, pc)) = pivot else { break };
        a.swap(top, pr);
        for row in a.iter_mut() {
            row.swap(top, pc);
        }

        let mut clean = true;
        for r in top + 1..rows {
            if !a[r][top].is_zero() {
                let q = &a[r][top] / &a[top][top];
                if !q.is_zero() {
                    for c in top..cols {
                        let sub = &q * &a[top][c];
                        a[r][c] -= sub;
                    }
                }
                if !a[r][top].is_zero() {
                    clean = false;
                    a.swap(top, r);
                }
            }
        }
        if !clean {
            continue;
        }
        for c in top + 1..cols {
            if !a[top][c].is_zero() {
                let q = &a[top][c] / &a[top][top];
                if !q.is_zero() {
                    for r in top..rows {
                        let sub = &q * &a[r][top];
                        a[r][c] -= sub;
                    }
                }
                if !a[top][c].is_zero() {
                    clean = false;
                    for row in a.iter_mut() {
                        row.swap(top, c);
                    }
                    break;
                }
            }
        }
        if !clean {
            continue;
        }
        factors.push(a[top][top].abs());
        top += 1;
    }

    // enforce the divisibility chain
    let mut i = 0;
    while i + 1 < factors.len() {
        if (&factors[i + 1] % &factors[i]).is_zero() {
            i += 1;
        } else {
            let g = gcd(factors[i].clone(), factors[i + 1].clone());
            let l = (&factors[i] * &factors[i + 1]) / &g;
            factors[i] = g;
            factors[i + 1] = l;
            i = 0;
        }
    }
    factors
}

fn gcd(mut a: BigInt, mut b: BigInt) -> BigInt {
    a = a.abs();
    b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    a
}

pub fn rank(mat: &[Vec<BigInt>]) -> usize {
    smith_normal_form(mat).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
            .collect()
    }

    #[test]
    fn snf_of_small_matrices() {
        assert_eq!(smith_normal_form(&m(&[&[2]])), vec![BigInt::from(2)]);
        assert_eq!(
            smith_normal_form(&m(&[&[2, 4], &[6, 8]])),
            vec![BigInt::from(2), BigInt::from(4)]
        );
        assert_eq!(
            smith_normal_form(&m(&[&[1, 0], &[0, 1]])),
            vec![BigInt::from(1), BigInt::from(1)]
        );
        assert!(smith_normal_form(&m(&[&[0, 0], &[0, 0]])).is_empty());
    }

    #[test]
    fn snf_divisibility_chain() {
        let f = smith_normal_form(&m(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 5]]));
        for w in f.windows(2) {
            assert!((&w[1] % &w[0]).is_zero(), "{f:?}");
        }
        assert_eq!(f.iter().product::<BigInt>(), BigInt::from(30));
    }
}
