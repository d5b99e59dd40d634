//! The bigraded cochain complex of a wall and an arc, its differential, and
//! integral bigraded cohomology.
//!
//! Generators are the wall crossings of the drawn arc. The differential
//! counts bigons: an ordered pair of crossings bounds one exactly when the
//! connecting loop along the arc and the wall is null-homotopic and both
//! corners are convex, and then the degrees differ by one in the Maslov
//! direction only.

use crate::braid::{BraidWord, FreeWord};
use crate::curve::{anchor_arc, base_arc, ArcEnd, CurveDiagram, Realization};
use crate::error::{Error, Result};
use crate::grading::{alexander_levels, crossing_sign, maslov_indices, synced_anchor_word};
use crate::laurent::LaurentPoly;
use crate::snf::smith_normal_form;
use num::bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// One generator of the complex: a graded intersection point.
#[derive(Debug, Clone)]
pub struct Generator {
    pub wall: usize,
    pub arc_index: usize,
    pub rank_on_wall: usize,
    pub position_on_arc: usize,
    pub alexander: i64,
    pub maslov: i64,
    pub sign: i8,
}

/// Bigraded cochain complex with integer differential `d[y][x]`.
#[derive(Debug, Clone)]
pub struct BigradedComplex {
    pub generators: Vec<Generator>,
    pub d: Vec<Vec<i64>>,
}

/// Bigraded cohomology: free ranks and invariant factors per bidegree
/// `(maslov, alexander)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BigradedGroup {
    pub ranks: BTreeMap<(i64, i64), usize>,
    pub torsion: BTreeMap<(i64, i64), Vec<BigInt>>,
}

impl BigradedGroup {
    pub fn total_rank(&self) -> usize {
        self.ranks.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.ranks.is_empty() && self.torsion.is_empty()
    }

    /// Rank one in bidegree (0,0), nothing else: the pattern of a diagonal
    /// cell of the identity braid.
    pub fn is_identity_diagonal(&self) -> bool {
        self.torsion.is_empty()
            && self.ranks.len() == 1
            && self.ranks.get(&(0, 0)) == Some(&1)
    }

    /// Graded Euler characteristic.
    pub fn euler(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (&(l, k), &r) in &self.ranks {
            let c = if l.rem_euclid(2) == 0 {
                r as i64
            } else {
                -(r as i64)
            };
            p = p.add(&LaurentPoly::monomial(k, c));
        }
        p
    }
}

impl fmt::Display for BigradedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(l, k), &r) in &self.ranks {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if r == 1 {
                write!(f, "Z[{l},{k}]")?;
            } else {
                write!(f, "Z^{r}[{l},{k}]")?;
            }
        }
        for (&(l, k), fs) in &self.torsion {
            for t in fs {
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                write!(f, "Z/{t}[{l},{k}]")?;
            }
        }
        Ok(())
    }
}

impl BigradedComplex {
    pub fn is_valid_differential(&self) -> bool {
        let n = self.generators.len();
        // degree: maslov +1, alexander fixed, entries in {-1, 0, 1}
        for y in 0..n {
            for x in 0..n {
                let v = self.d[y][x];
                if v == 0 {
                    continue;
                }
                if v.abs() > 1 {
                    return false;
                }
                let gx = &self.generators[x];
                let gy = &self.generators[y];
                if gy.maslov != gx.maslov + 1 || gy.alexander != gx.alexander {
                    return false;
                }
            }
        }
        // d o d = 0
        for z in 0..n {
            for x in 0..n {
                let mut acc = 0i64;
                for y in 0..n {
                    acc += self.d[z][y] * self.d[y][x];
                }
                if acc != 0 {
                    return false;
                }
            }
        }
        true
    }

    /// Chain-level graded Euler characteristic.
    pub fn euler(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for g in &self.generators {
            let c = if g.maslov.rem_euclid(2) == 0 { 1 } else { -1 };
            p = p.add(&LaurentPoly::monomial(g.alexander, c));
        }
        p
    }
}

/// Find all bigons between crossings of the arc with one wall.
///
/// `crossings` come from `grade`; `word` is the drawn word. Reports
/// `(from, to, sign)` index pairs into the crossing list.
pub fn find_bigons(
    gens: &[Generator],
    heights: &[crate::curve::Rat],
    dirs: &[i8],
    word: &FreeWord,
    letters_before: &[usize],
) -> Vec<(usize, usize, i8)> {
    let m = gens.len();
    let mut out = Vec::new();
    for x in 0..m {
        for y in 0..m {
            if x == y {
                continue;
            }
            if gens[y].alexander != gens[x].alexander || gens[y].maslov != gens[x].maslov + 1 {
                continue;
            }
            // the loop from x to y along the arc and back along the wall is
            // null-homotopic iff the enclosed letters cancel; the wall meets
            // no cut ray
            let (a, b) = if gens[x].position_on_arc <= gens[y].position_on_arc {
                (x, y)
            } else {
                (y, x)
            };
            let sub = FreeWord(word.0[letters_before[a]..letters_before[b]].to_vec());
            if !sub.reduce().is_empty() {
                continue;
            }
            // convex corners at both ends
            let arc_toward_y: i8 = if gens[y].position_on_arc >= gens[x].position_on_arc {
                dirs[x]
            } else {
                -dirs[x]
            };
            let wall_toward_y: i8 = if heights[y] < heights[x] { -1 } else { 1 };
            // cross((0, wall), (arc, 0)) = -wall * arc
            if -wall_toward_y * arc_toward_y <= 0 {
                continue;
            }
            let arc_toward_x: i8 = if gens[x].position_on_arc >= gens[y].position_on_arc {
                dirs[y]
            } else {
                -dirs[y]
            };
            let wall_toward_x: i8 = -wall_toward_y;
            // cross((arc, 0), (0, wall)) = arc * wall
            if arc_toward_x * wall_toward_x <= 0 {
                continue;
            }
            let eps: i8 = if heights[x] > heights[y] { 1 } else { -1 };
            out.push((x, y, eps));
        }
    }
    out
}

/// Data shared by the cells of one braid word: the evolved arcs and anchors.
pub struct BraidCurves {
    pub n: usize,
    pub arcs: Vec<CurveDiagram>,
    pub anchors: Vec<CurveDiagram>,
    reduce: bool,
}

impl BraidCurves {
    pub fn new(w: &BraidWord, reduce: bool) -> Result<Self> {
        let n = w.n;
        let mut arcs = Vec::with_capacity(n - 1);
        let mut anchors = Vec::with_capacity(n - 1);
        for j in 1..n {
            let (a, anc) = if reduce {
                (
                    base_arc(n, j)?.apply_braid(w)?,
                    anchor_arc(n, j)?.apply_braid(w)?,
                )
            } else {
                (
                    base_arc(n, j)?.apply_braid_unreduced(w)?,
                    anchor_arc(n, j)?.apply_braid_unreduced(w)?,
                )
            };
            arcs.push(a);
            anchors.push(anc);
        }
        Ok(BraidCurves {
            n,
            arcs,
            anchors,
            reduce,
        })
    }

    /// The drawn arc and the matching anchor word for grading.
    pub fn drawn(&self, j: usize) -> Result<(Realization, FreeWord)> {
        let arc = &self.arcs[j - 1];
        let anchor = &self.anchors[j - 1];
        if self.reduce {
            let (_, _, h) = arc.split_winds();
            let synced = synced_anchor_word(&anchor.word, arc.end, h);
            Ok((arc.canonicalize().realize()?, synced))
        } else {
            Ok((arc.realize()?, anchor.word.reduce()))
        }
    }
}

/// Insert a cancelling crossing pair of cut ray `k` into the arc's word at
/// letter position `pos`. The class is unchanged but the drawn diagram gains
/// a hairpin, with two extra wall crossings for every wall between the
/// insertion point and the ray.
pub fn insert_hairpin(arc: &CurveDiagram, k: usize, sign: i8, pos: usize) -> CurveDiagram {
    let mut letters = arc.word.0.clone();
    let at = pos.min(letters.len());
    letters.insert(at, (k, -sign));
    letters.insert(at, (k, sign));
    CurveDiagram {
        n: arc.n,
        start: arc.start,
        end: arc.end,
        word: crate::braid::FreeWord(letters),
    }
}

/// Build the bigraded complex for cell `(i, j)` of a braid word.
///
/// With `reduce` the arc is drawn in canonical form, where no bigon survives
/// and the differential vanishes; without it the outermost twist is drawn
/// raw, keeping its cancelling crossing pairs and a nontrivial differential.
pub fn build_complex(w: &BraidWord, i: usize, j: usize, reduce: bool) -> Result<BigradedComplex> {
    if i == 0 || i >= w.n || j == 0 || j >= w.n {
        return Err(Error::InvalidCell(i, j));
    }
    let curves = BraidCurves::new(w, reduce)?;
    build_cell(&curves, i, j)
}

pub fn build_cell(curves: &BraidCurves, i: usize, j: usize) -> Result<BigradedComplex> {
    let n = curves.n;
    if i == 0 || i >= n || j == 0 || j >= n {
        return Err(Error::InvalidCell(i, j));
    }
    let (arc, anchor_word) = curves.drawn(j)?;
    build_cell_with_arc(&arc, &anchor_word, i, j)
}

/// Build the complex of wall `i` against an explicitly drawn arc, with the
/// anchor word of the same representative. This is the entry point for
/// constructed diagrams such as hairpin insertions.
pub fn build_cell_with_arc(
    arc: &Realization,
    anchor_word: &FreeWord,
    i: usize,
    j: usize,
) -> Result<BigradedComplex> {
    let n = arc.n;
    if i == 0 || i >= n {
        return Err(Error::InvalidCell(i, j));
    }
    let crossings = arc.wall_crossings(i);
    let alex = alexander_levels(arc, anchor_word, i);
    let anchor_draw = CurveDiagram {
        n,
        start: ArcEnd::Basepoint,
        end: arc.end,
        word: anchor_word.clone(),
    };
    let mus = if crossings.is_empty() {
        Vec::new()
    } else {
        maslov_indices(arc, &anchor_draw.realize()?, i)?
    };

    let mut gens = Vec::with_capacity(crossings.len());
    let mut heights = Vec::with_capacity(crossings.len());
    let mut dirs = Vec::with_capacity(crossings.len());
    let mut letters_before = Vec::with_capacity(crossings.len());
    for (r, c) in crossings.iter().enumerate() {
        gens.push(Generator {
            wall: i,
            arc_index: j,
            rank_on_wall: r,
            position_on_arc: c.chord,
            alexander: alex[r],
            maslov: mus[r],
            sign: crossing_sign(c),
        });
        heights.push(c.pos.y);
        dirs.push(c.dir);
        letters_before.push(c.letters_before);
    }

    let m = gens.len();
    let mut d = vec![vec![0i64; m]; m];
    for (x, y, eps) in find_bigons(&gens, &heights, &dirs, &arc.word, &letters_before) {
        d[y][x] += eps as i64;
    }
    Ok(BigradedComplex { generators: gens, d })
}

/// One elimination step: remove the acyclic generator pair joined by a unit
/// differential entry, correcting the rest of the differential.
pub fn gaussian_eliminate_step(c: &BigradedComplex) -> Option<BigradedComplex> {
    let m = c.generators.len();
    let mut pivot = None;
    'search: for y in 0..m {
        for x in 0..m {
            if c.d[y][x].abs() == 1 {
                pivot = Some((x, y));
                break 'search;
            }
        }
    }
    let (x0, y0) = pivot?;
    let u = c.d[y0][x0]; // u is its own inverse
    let keep: Vec<usize> = (0..m).filter(|&k| k != x0 && k != y0).collect();
    let mut nd = vec![vec![0i64; keep.len()]; keep.len()];
    for (yi, &y) in keep.iter().enumerate() {
        for (xi, &x) in keep.iter().enumerate() {
            nd[yi][xi] = c.d[y][x] - c.d[y][x0] * u * c.d[y0][x];
        }
    }
    Some(BigradedComplex {
        generators: keep.iter().map(|&k| c.generators[k].clone()).collect(),
        d: nd,
    })
}

/// Crush unit pivots until none remains; the result is homotopy equivalent.
pub fn gaussian_eliminate(c: &BigradedComplex) -> BigradedComplex {
    let mut cur = c.clone();
    while let Some(next) = gaussian_eliminate_step(&cur) {
        cur = next;
    }
    cur
}

/// Integral bigraded cohomology via Smith normal form, after first crushing
/// unit pivots.
pub fn homology(c: &BigradedComplex) -> BigradedGroup {
    homology_of(&gaussian_eliminate(c))
}

/// Integral bigraded cohomology computed directly from the differential.
pub fn homology_of(c: &BigradedComplex) -> BigradedGroup {
    // split by alexander degree, then by maslov level
    let mut groups: BTreeMap<i64, BTreeMap<i64, Vec<usize>>> = BTreeMap::new();
    for (idx, g) in c.generators.iter().enumerate() {
        groups
            .entry(g.alexander)
            .or_default()
            .entry(g.maslov)
            .or_default()
            .push(idx);
    }
    let mut out = BigradedGroup::default();
    for (&k, levels) in &groups {
        let ls: Vec<i64> = levels.keys().copied().collect();
        for &l in &ls {
            let here = &levels[&l];
            let dim = here.len();
            let d_out = boundary_matrix(c, levels, l, l + 1);
            let d_in = boundary_matrix(c, levels, l - 1, l);
            let f_out = smith_normal_form(&d_out);
            let f_in = smith_normal_form(&d_in);
            let rank = dim - f_out.len() - f_in.len();
            if rank > 0 {
                out.ranks.insert((l, k), rank);
            }
            let tors: Vec<BigInt> = f_in
                .iter()
                .filter(|f| **f > BigInt::from(1))
                .cloned()
                .collect();
            if !tors.is_empty() {
                out.torsion.insert((l, k), tors);
            }
        }
    }
    out
}

fn boundary_matrix(
    c: &BigradedComplex,
    levels: &BTreeMap<i64, Vec<usize>>,
    from: i64,
    to: i64,
) -> Vec<Vec<BigInt>> {
    let src = levels.get(&from).cloned().unwrap_or_default();
    let dst = levels.get(&to).cloned().unwrap_or_default();
    if src.is_empty() || dst.is_empty() {
        return Vec::new();
    }
    dst.iter()
        .map(|&y| src.iter().map(|&x| BigInt::from(c.d[y][x])).collect())
        .collect()
}

/// Graded Euler characteristic of the cohomology; equals the chain-level one.
pub fn euler_characteristic(c: &BigradedComplex) -> LaurentPoly {
    c.euler()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::laurent::LaurentPoly;

    fn synthetic(gradings: &[(i64, i64)], d: Vec<Vec<i64>>) -> BigradedComplex {
        let generators = gradings
            .iter()
            .enumerate()
            .map(|(r, &(l, k))| Generator {
                wall: 1,
                arc_index: 1,
                rank_on_wall: r,
                position_on_arc: r,
                alexander: k,
                maslov: l,
                sign: if l.rem_euclid(2) == 0 { 1 } else { -1 },
            })
            .collect();
        BigradedComplex { generators, d }
    }

    #[test]
    fn identity_cells() {
        let w = BraidWord::identity(3);
        for i in 1..3 {
            for j in 1..3 {
                let c = build_complex(&w, i, j, true).unwrap();
                if i == j {
                    assert_eq!(c.generators.len(), 1);
                    assert_eq!(c.generators[0].alexander, 0);
                    assert_eq!(c.generators[0].maslov, 0);
                    assert!(homology(&c).is_identity_diagonal());
                } else {
                    assert!(c.generators.is_empty());
                    assert!(homology(&c).is_zero());
                }
                assert!(c.is_valid_differential());
            }
        }
    }

    #[test]
    fn acyclic_pair_eliminates() {
        let c = synthetic(&[(0, 0), (1, 0)], vec![vec![0, 0], vec![1, 0]]);
        let r = gaussian_eliminate(&c);
        assert!(r.generators.is_empty());
        assert!(homology_of(&c).is_zero());
    }

    #[test]
    fn elimination_with_correction_term() {
        // x, a in level 0; y, b in level 1; dx = y + b, da = y
        // eliminating (x, y) leaves the corrected map a -> -b
        let c = synthetic(
            &[(0, 0), (0, 0), (1, 0), (1, 0)],
            vec![
                vec![0, 0, 0, 0],
                vec![0, 0, 0, 0],
                vec![1, 1, 0, 0],
                vec![1, 0, 0, 0],
            ],
        );
        assert!(c.is_valid_differential());
        let step = gaussian_eliminate_step(&c).unwrap();
        assert_eq!(step.generators.len(), 2);
        let nonzero: Vec<i64> = step
            .d
            .iter()
            .flatten()
            .copied()
            .filter(|&v| v != 0)
            .collect();
        assert_eq!(nonzero, vec![-1]);
        // the corrected pair is acyclic too, so full elimination empties it
        assert!(gaussian_eliminate(&c).generators.is_empty());
        assert!(homology_of(&c).is_zero());
        assert!(homology(&c).is_zero());
    }

    #[test]
    fn torsion_survives() {
        let c = synthetic(&[(0, 0), (1, 0)], vec![vec![0, 0], vec![2, 0]]);
        let h = homology_of(&c);
        assert!(h.ranks.is_empty());
        assert_eq!(
            h.torsion.get(&(1, 0)),
            Some(&vec![num::bigint::BigInt::from(2)])
        );
        // no unit pivot: elimination leaves it alone
        let r = gaussian_eliminate(&c);
        assert_eq!(r.generators.len(), 2);
    }

    #[test]
    fn zero_differential_ranks_are_generator_counts() {
        let c = synthetic(&[(0, 1), (0, 1), (2, -1)], vec![vec![0; 3]; 3]);
        let h = homology_of(&c);
        assert_eq!(h.ranks.get(&(0, 1)), Some(&2));
        assert_eq!(h.ranks.get(&(2, -1)), Some(&1));
    }

    #[test]
    fn b2_generator_cell() {
        let w = BraidWord::parse(2, "1").unwrap();
        let c = build_complex(&w, 1, 1, true).unwrap();
        assert_eq!(c.generators.len(), 1);
        assert_eq!(
            (c.generators[0].maslov, c.generators[0].alexander),
            (1, 1)
        );
        let h = homology(&c);
        assert_eq!(h.ranks.get(&(1, 1)), Some(&1));
        assert_eq!(c.euler(), LaurentPoly::monomial(1, -1));
    }

    #[test]
    fn unreduced_build_of_a_trivial_word_is_still_identity() {
        let w = BraidWord::parse(2, "1 -1").unwrap();
        let c = build_complex(&w, 1, 1, false).unwrap();
        assert!(c.is_valid_differential(), "d^2 = 0 with graded entries");
        let h = homology(&c);
        assert!(h.is_identity_diagonal(), "homology matches the identity");
        assert_eq!(homology_of(&c), h, "fast path agrees with direct SNF");
    }

    #[test]
    fn hairpin_insertion_cancels_in_pairs() {
        // poke a finger from the straight arc p1 -> p2 under p3: two extra
        // crossings of the second wall joined by one bigon
        let arc = insert_hairpin(&crate::curve::base_arc(3, 1).unwrap(), 3, 1, 0);
        let drawn = arc.realize().unwrap();
        drawn.check_embedded().unwrap();
        let anchor = crate::curve::anchor_arc(3, 1).unwrap();
        let c = build_cell_with_arc(&drawn, &anchor.word, 2, 1).unwrap();
        assert_eq!(c.generators.len(), 2);
        let entries: Vec<i64> = c.d.iter().flatten().copied().filter(|&v| v != 0).collect();
        assert_eq!(entries.len(), 1, "exactly one bigon");
        assert_eq!(entries[0].abs(), 1);
        assert!(c.is_valid_differential());
        assert!(homology(&c).is_zero(), "cell (2,1) of the identity is zero");
        assert_eq!(homology_of(&c), homology(&c));

        // a finger from the second arc under p1: a pair on the first wall
        // plus the honest diagonal crossing of the second
        let arc2 = insert_hairpin(&crate::curve::base_arc(3, 2).unwrap(), 1, 1, 0);
        let drawn2 = arc2.realize().unwrap();
        drawn2.check_embedded().unwrap();
        let anchor2 = crate::curve::anchor_arc(3, 2).unwrap();
        let c12 = build_cell_with_arc(&drawn2, &anchor2.word, 1, 2).unwrap();
        assert_eq!(c12.generators.len(), 2);
        assert!(c12.is_valid_differential());
        assert!(homology(&c12).is_zero());
        let c22 = build_cell_with_arc(&drawn2, &anchor2.word, 2, 2).unwrap();
        assert!(c22.is_valid_differential());
        assert!(homology(&c22).is_identity_diagonal());
    }
}
