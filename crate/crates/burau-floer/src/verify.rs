//! Cross-validation harnesses: the chain-level matrix oracle, the
//! categorification check, isotopy invariance, and trivial-braid detection.

use crate::braid::{BraidGen, BraidWord};
use crate::curve::Realization;
use crate::error::Result;
use crate::floer::{build_cell, homology, BigradedGroup, BraidCurves};
use crate::grading::{alexander_levels, crossing_sign};
use crate::laurent::{burau_matrix, LaurentMatrix, LaurentPoly};
use rand::Rng;

/// The matrix whose `(i, j)` entry is the signed count of wall crossings by
/// level: the intersection pairing computed on curves instead of by matrix
/// products.
pub fn geometric_burau(w: &BraidWord) -> Result<LaurentMatrix> {
    let curves = BraidCurves::new(w, true)?;
    let mut m = LaurentMatrix::identity(w.n - 1);
    for j in 1..w.n {
        let (arc, anchor_word) = curves.drawn(j)?;
        for i in 1..w.n {
            m.set(i, j, cell_pairing(&arc, &anchor_word, i));
        }
    }
    Ok(m)
}

fn cell_pairing(arc: &Realization, anchor_word: &crate::braid::FreeWord, i: usize) -> LaurentPoly {
    let levels = alexander_levels(arc, anchor_word, i);
    let mut p = LaurentPoly::zero();
    for (c, a) in arc.wall_crossings(i).iter().zip(levels) {
        p = p.add(&LaurentPoly::monomial(a, crossing_sign(c) as i64));
    }
    p
}

/// Per-cell comparison of the homological Euler characteristic with the
/// algebraic Burau entry.
#[derive(Debug, Clone)]
pub struct CellReport {
    pub i: usize,
    pub j: usize,
    pub geometric: LaurentPoly,
    pub algebraic: LaurentPoly,
    pub homology: BigradedGroup,
    pub matches: bool,
}

#[derive(Debug, Clone)]
pub struct CategorificationReport {
    pub n: usize,
    pub word: BraidWord,
    pub cells: Vec<CellReport>,
    pub pass: bool,
}

/// Build homology for every cell and compare graded Euler characteristics
/// with the Burau matrix, exactly.
pub fn check_categorification(w: &BraidWord) -> Result<CategorificationReport> {
    let alg = burau_matrix(w);
    let curves = BraidCurves::new(w, true)?;
    let mut cells = Vec::new();
    let mut pass = true;
    for i in 1..w.n {
        for j in 1..w.n {
            let complex = build_cell(&curves, i, j)?;
            let h = homology(&complex);
            let geometric = h.euler();
            let algebraic = alg.get(i, j).clone();
            let matches = geometric == algebraic && complex.euler() == algebraic;
            pass &= matches;
            cells.push(CellReport {
                i,
                j,
                geometric,
                algebraic,
                homology: h,
                matches,
            });
        }
    }
    Ok(CategorificationReport {
        n: w.n,
        word: w.clone(),
        cells,
        pass,
    })
}

/// Bigraded homology of every cell.
pub fn all_cell_homology(w: &BraidWord) -> Result<Vec<Vec<BigradedGroup>>> {
    let curves = BraidCurves::new(w, true)?;
    let mut rows = Vec::new();
    for i in 1..w.n {
        let mut row = Vec::new();
        for j in 1..w.n {
            row.push(homology(&build_cell(&curves, i, j)?));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// True when the two words have isomorphic bigraded homology in every cell.
pub fn invariance_check(w: &BraidWord, w2: &BraidWord) -> Result<bool> {
    if w.n != w2.n {
        return Ok(false);
    }
    Ok(all_cell_homology(w)? == all_cell_homology(w2)?)
}

/// Outcome of the faithfulness check.
#[derive(Debug, Clone)]
pub struct TrivialityReport {
    pub trivial: bool,
    /// first failing cell, if any
    pub witness: Option<(usize, usize)>,
}

/// Detect the trivial braid: every diagonal cell must be a single copy of Z
/// in bidegree (0, 0) and every off-diagonal cell must vanish. The bidegree
/// requirement is what rules out powers of the boundary twist, whose
/// crossing counts alone would pass.
pub fn detect_trivial(w: &BraidWord) -> Result<TrivialityReport> {
    let curves = BraidCurves::new(w, true)?;
    for i in 1..w.n {
        for j in 1..w.n {
            let h = homology(&build_cell(&curves, i, j)?);
            let ok = if i == j {
                h.is_identity_diagonal()
            } else {
                h.is_zero()
            };
            if !ok {
                return Ok(TrivialityReport {
                    trivial: false,
                    witness: Some((i, j)),
                });
            }
        }
    }
    Ok(TrivialityReport {
        trivial: true,
        witness: None,
    })
}

/// Uniform random word of exactly `len` letters.
pub fn random_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    let letters = (0..len)
        .map(|_| BraidGen {
            index: rng.gen_range(1..n),
            sign: if rng.gen_bool(0.5) { 1 } else { -1 },
        })
        .collect();
    BraidWord::new(n, letters).expect("generated letters are in range")
}

/// A word equal to `w` in the braid group, obtained by inserting cancelling
/// pairs, braid relators, and far commutations.
pub fn equivalent_word<R: Rng>(rng: &mut R, w: &BraidWord) -> BraidWord {
    let n = w.n;
    let mut letters = w.letters.clone();
    for _ in 0..rng.gen_range(1..4) {
        match rng.gen_range(0..3) {
            0 => {
                // insert sigma_k sigma_k^-1
                let k = rng.gen_range(1..n);
                let pos = rng.gen_range(0..=letters.len());
                let s: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
                letters.insert(pos, BraidGen { index: k, sign: -s });
                letters.insert(pos, BraidGen { index: k, sign: s });
            }
            1 => {
                // insert a braid relator sigma_i sigma_{i+1} sigma_i
                // (sigma_{i+1} sigma_i sigma_{i+1})^-1 when there is room
                if n >= 3 {
                    let i = rng.gen_range(1..n - 1);
                    let pos = rng.gen_range(0..=letters.len());
                    let relator = [
                        BraidGen { index: i, sign: 1 },
                        BraidGen { index: i + 1, sign: 1 },
                        BraidGen { index: i, sign: 1 },
                        BraidGen { index: i + 1, sign: -1 },
                        BraidGen { index: i, sign: -1 },
                        BraidGen { index: i + 1, sign: -1 },
                    ];
                    for g in relator.iter().rev() {
                        letters.insert(pos, *g);
                    }
                }
            }
            _ => {
                // swap one far-commuting adjacent pair
                let spots: Vec<usize> = letters
                    .windows(2)
                    .enumerate()
                    .filter(|(_, p)| p[0].index.abs_diff(p[1].index) >= 2)
                    .map(|(i, _)| i)
                    .collect();
                if !spots.is_empty() {
                    let i = spots[rng.gen_range(0..spots.len())];
                    letters.swap(i, i + 1);
                }
            }
        }
    }
    BraidWord::new(n, letters).expect("rewrites keep indices in range")
}

/// A random word representing the trivial braid: a product of conjugated
/// cancelling pairs and relators.
pub fn random_trivial_word<R: Rng>(rng: &mut R, n: usize) -> BraidWord {
    let mut w = BraidWord::identity(n);
    for _ in 0..rng.gen_range(1..4) {
        let conj_len = rng.gen_range(0..4);
        let conj = random_word(rng, n, conj_len);
        let middle = match rng.gen_range(0..2) {
            0 => {
                let k = rng.gen_range(1..n);
                let s: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
                BraidWord::new(
                    n,
                    vec![
                        BraidGen { index: k, sign: s },
                        BraidGen { index: k, sign: -s },
                    ],
                )
                .unwrap()
            }
            _ => {
                if n >= 3 {
                    let i = rng.gen_range(1..n - 1);
                    BraidWord::parse(
                        n,
                        &format!("{} {} {} -{} -{} -{}", i, i + 1, i, i + 1, i, i + 1),
                    )
                    .unwrap()
                } else {
                    BraidWord::parse(n, "1 -1").unwrap()
                }
            }
        };
        let piece = conj
            .concat(&middle)
            .unwrap()
            .concat(&conj.inverse())
            .unwrap();
        w = w.concat(&piece).unwrap();
    }
    w
}

/// A braid word in the kernel of the Burau representation of B5, used as a
/// stretch fixture. Its matrix is re-verified before use.
pub fn burau_kernel_word_b5() -> BraidWord {
    let n = 5;
    let psi1 = BraidWord::parse(n, "-3 2 1 1 2 4 4 4 3 2").unwrap();
    let psi2 = BraidWord::parse(n, "-4 3 2 -1 -1 2 1 1 2 2 1 4 4 4 4 4").unwrap();
    let mid = BraidWord::parse(n, "4").unwrap();
    let mid2 = BraidWord::parse(n, "4 3 2 1 1 2 3 4").unwrap();
    let a = psi1
        .inverse()
        .concat(&mid)
        .unwrap()
        .concat(&psi1)
        .unwrap();
    let b = psi2
        .inverse()
        .concat(&mid2)
        .unwrap()
        .concat(&psi2)
        .unwrap();
    a.concat(&b)
        .unwrap()
        .concat(&a.inverse())
        .unwrap()
        .concat(&b.inverse())
        .unwrap()
}
