//! Arcs in the punctured disk, encoded combinatorially, and the braid action.
//!
//! An arc is stored as its crossing word with the system of vertical cut rays
//! hanging below the punctures: the disk minus the rays is simply connected,
//! so the freely reduced word classifies the arc up to homotopy rel
//! endpoints, and homotopic embedded arcs are isotopic. Winding around a
//! terminal puncture can be absorbed into the endpoint, which is exactly
//! stripping the matching outermost letters; we keep those letters on the
//! stored word (grading needs the rel-endpoints class) and strip them only
//! in the canonical view used for drawing and counting.
//!
//! A braid generator acts through the free group: apply the automorphism
//! induced on based loops, then fix up both ends by the connector loops of
//! the twisted reference paths.

mod itinerary;
mod order;
pub mod realize;
pub mod svg;

pub use itinerary::{Itinerary, LinePart, NodeKind, Transit};
pub use realize::{loop_word, Pt, Rat, Realization, WallCrossing};

use crate::braid::{BraidWord, FreeWord};
use crate::error::{Error, Result};

/// Where an arc ends: on the boundary basepoint or at a puncture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArcEnd {
    Basepoint,
    Puncture(usize),
}

/// Coordinates of the fixed model disk: punctures at `(k, 0)`, wall `W_i`
/// the vertical chord at `x = i + 1/2`, cut ray `C_k` hanging straight down
/// from `p_k`, basepoint on the top edge left of `p_1`.
#[derive(Debug, Clone, Copy)]
pub struct Ambient {
    pub n: usize,
}

impl Ambient {
    pub fn new(n: usize) -> Self {
        Ambient { n }
    }
    pub fn puncture(&self, k: usize) -> Pt {
        Pt::new(Rat::from_integer(k as i64), Rat::from_integer(0))
    }
    pub fn wall_x(&self, i: usize) -> Rat {
        Rat::new(2 * i as i64 + 1, 2)
    }
    pub fn basepoint(&self) -> Pt {
        Pt::new(Rat::new(1, 2), Rat::from_integer(2))
    }
    pub fn top(&self) -> Rat {
        Rat::from_integer(2)
    }
    pub fn bottom(&self) -> Rat {
        Rat::from_integer(-2)
    }
}

/// An isotopy class of embedded arc, as endpoints plus the cut-ray crossing
/// word. The stored word is freely reduced after every action but may carry
/// terminal winding letters; `canonicalize` strips those.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CurveDiagram {
    pub n: usize,
    pub start: ArcEnd,
    pub end: ArcEnd,
    pub word: FreeWord,
}

/// One maximal sub-arc between wall crossings, for the token view.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    Start,
    End,
    LeftWall,
    RightWall,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Passage {
    Above,
    Below,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Token {
    pub region: usize,
    pub entry: Boundary,
    pub exit: Boundary,
    pub passage: Passage,
}

/// The straight arc from `p_j` to `p_{j+1}`.
pub fn base_arc(n: usize, j: usize) -> Result<CurveDiagram> {
    if n < 2 || j == 0 || j > n - 1 {
        return Err(Error::IndexOutOfRange { index: j, n });
    }
    Ok(CurveDiagram {
        n,
        start: ArcEnd::Puncture(j),
        end: ArcEnd::Puncture(j + 1),
        word: FreeWord::empty(),
    })
}

/// The grading anchor: an arc from the basepoint to `p_{j+1}` running above
/// all punctures before it descends. Crosses no cut ray.
pub fn anchor_arc(n: usize, j: usize) -> Result<CurveDiagram> {
    if n < 2 || j == 0 || j > n - 1 {
        return Err(Error::IndexOutOfRange { index: j, n });
    }
    Ok(CurveDiagram {
        n,
        start: ArcEnd::Basepoint,
        end: ArcEnd::Puncture(j + 1),
        word: FreeWord::empty(),
    })
}

/// Image of one free generator under the automorphism of the positive or
/// negative half-twist swapping `p_i` and `p_{i+1}`.
fn artin_letter(i: usize, gen_sign: i8, k: usize, s: i8) -> Vec<(usize, i8)> {
    if gen_sign > 0 {
        if k == i {
            if s > 0 {
                vec![(i, 1), (i + 1, 1), (i, -1)]
            } else {
                vec![(i, 1), (i + 1, -1), (i, -1)]
            }
        } else if k == i + 1 {
            vec![(i, s)]
        } else {
            vec![(k, s)]
        }
    } else if k == i {
        vec![(i + 1, s)]
    } else if k == i + 1 {
        if s > 0 {
            vec![(i + 1, -1), (i, 1), (i + 1, 1)]
        } else {
            vec![(i + 1, -1), (i, -1), (i + 1, 1)]
        }
    } else {
        vec![(k, s)]
    }
}

/// Connector correction for an arc end at puncture `k`: the class of the
/// twisted reference path against the straight one. Chosen once; any other
/// representative differs by terminal winding, which gradings cannot see.
fn end_correction(i: usize, gen_sign: i8, k: usize) -> Vec<(usize, i8)> {
    if gen_sign > 0 {
        if k == i {
            vec![(i, 1)]
        } else {
            vec![]
        }
    } else if k == i + 1 {
        vec![(i + 1, -1)]
    } else {
        vec![]
    }
}

fn permute_end(end: ArcEnd, i: usize) -> ArcEnd {
    match end {
        ArcEnd::Basepoint => ArcEnd::Basepoint,
        ArcEnd::Puncture(k) => {
            if k == i {
                ArcEnd::Puncture(i + 1)
            } else if k == i + 1 {
                ArcEnd::Puncture(i)
            } else {
                ArcEnd::Puncture(k)
            }
        }
    }
}

impl CurveDiagram {
    fn apply_generator_inner(&self, i: usize, sign: i8, reduce: bool) -> Result<CurveDiagram> {
        if i == 0 || i > self.n - 1 {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        let mut letters: Vec<(usize, i8)> = Vec::with_capacity(3 * self.word.len() + 2);
        if let ArcEnd::Puncture(a) = self.start {
            // inverse of the start correction, letters reversed and flipped
            for &(k, s) in end_correction(i, sign, a).iter().rev() {
                letters.push((k, -s));
            }
        }
        for &(k, s) in &self.word.0 {
            letters.extend(artin_letter(i, sign, k, s));
        }
        if let ArcEnd::Puncture(b) = self.end {
            letters.extend(end_correction(i, sign, b));
        }
        let word = FreeWord(letters);
        let word = if reduce { word.reduce() } else { word };
        Ok(CurveDiagram {
            n: self.n,
            start: permute_end(self.start, i),
            end: permute_end(self.end, i),
            word,
        })
    }

    /// Act by one braid generator; the result is freely reduced.
    pub fn apply_generator(&self, i: usize, sign: i8) -> Result<CurveDiagram> {
        self.apply_generator_inner(i, sign, true)
    }

    /// Act by a braid word, first letter outermost.
    pub fn apply_braid(&self, w: &BraidWord) -> Result<CurveDiagram> {
        if w.n != self.n {
            return Err(Error::StrandMismatch(w.n, self.n));
        }
        let mut c = self.clone();
        for g in w.letters.iter().rev() {
            c = c.apply_generator(g.index, g.sign)?;
        }
        Ok(c)
    }

    /// Like `apply_braid` but the outermost generator image is left
    /// unreduced, so the drawn diagram keeps its cancelling crossing pairs.
    pub fn apply_braid_unreduced(&self, w: &BraidWord) -> Result<CurveDiagram> {
        if w.n != self.n {
            return Err(Error::StrandMismatch(w.n, self.n));
        }
        let mut c = self.clone();
        let m = w.letters.len();
        for (step, g) in w.letters.iter().rev().enumerate() {
            let last = step + 1 == m;
            c = c.apply_generator_inner(g.index, g.sign, !last)?;
        }
        Ok(c)
    }

    /// Split the reduced word as `x_a^g . core . x_b^h`: the terminal winding
    /// exponents at each puncture endpoint plus the stripped core.
    pub fn split_winds(&self) -> (i64, FreeWord, i64) {
        let w = self.word.reduce();
        let mut lo = 0usize;
        let mut hi = w.len();
        let mut g = 0i64;
        let mut h = 0i64;
        if let ArcEnd::Puncture(a) = self.start {
            while lo < hi && w.0[lo].0 == a {
                g += w.0[lo].1 as i64;
                lo += 1;
            }
        }
        if let ArcEnd::Puncture(b) = self.end {
            while hi > lo && w.0[hi - 1].0 == b {
                h += w.0[hi - 1].1 as i64;
                hi -= 1;
            }
        }
        (g, FreeWord(w.0[lo..hi].to_vec()), h)
    }

    /// Canonical form: freely reduced with terminal spirals stripped. After
    /// this no trivial hairpin and no terminal wind remains, and wall
    /// crossing counts realize the geometric intersection numbers.
    pub fn canonicalize(&self) -> CurveDiagram {
        let (_, core, _) = self.split_winds();
        CurveDiagram {
            n: self.n,
            start: self.start,
            end: self.end,
            word: core,
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.word.is_reduced() && {
            let (g, _, h) = self.split_winds();
            g == 0 && h == 0
        }
    }

    /// Same arc up to isotopy rel endpoints-at-punctures.
    pub fn is_isotopic(&self, other: &CurveDiagram) -> bool {
        self.n == other.n
            && self.start == other.start
            && self.end == other.end
            && self.canonicalize().word == other.canonicalize().word
    }

    /// Exact embedded drawing of the stored word.
    pub fn realize(&self) -> Result<Realization> {
        realize::realize(self)
    }

    /// Crossings with wall `W_i`, ordered top to bottom.
    pub fn wall_crossings(&self, i: usize) -> Result<Vec<WallCrossing>> {
        if i == 0 || i > self.n - 1 {
            return Err(Error::IndexOutOfRange { index: i, n: self.n });
        }
        let r = self.realize()?;
        Ok(r.wall_crossings(i))
    }

    /// Geometric intersection number with wall `W_i`.
    pub fn geometric_intersection(&self, i: usize) -> Result<usize> {
        Ok(self.canonicalize().wall_crossings(i)?.len())
    }

    /// Token view of the drawn diagram.
    pub fn tokens(&self) -> Result<Vec<Token>> {
        Ok(self.realize()?.tokens())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    fn arcs(n: usize) -> Vec<CurveDiagram> {
        (1..n).map(|j| base_arc(n, j).unwrap()).collect()
    }

    #[test]
    fn generator_then_inverse_is_identity_on_diagrams() {
        for n in 2..=4 {
            for j in 1..n {
                for i in 1..n {
                    for s in [1i8, -1] {
                        let c = base_arc(n, j).unwrap();
                        let there = c.apply_generator(i, s).unwrap();
                        let back = there.apply_generator(i, -s).unwrap();
                        assert!(back.is_isotopic(&c), "n={n} j={j} i={i} s={s}");
                        // exact inverse, not only up to winding
                        assert_eq!(back.word.reduce(), c.word.reduce());
                    }
                }
            }
        }
    }

    #[test]
    fn braid_relations_on_diagrams() {
        for n in 2..=5 {
            for j in 1..n {
                let c = base_arc(n, j).unwrap();
                let a = anchor_arc(n, j).unwrap();
                for i in 1..n.saturating_sub(1) {
                    let lhs = BraidWord::parse(n, &format!("{i} {} {i}", i + 1)).unwrap();
                    let rhs = BraidWord::parse(n, &format!("{} {i} {}", i + 1, i + 1)).unwrap();
                    for base in [&c, &a] {
                        let l = base.apply_braid(&lhs).unwrap();
                        let r = base.apply_braid(&rhs).unwrap();
                        assert!(l.is_isotopic(&r), "braid relation n={n} i={i} j={j}");
                    }
                }
                for i1 in 1..n {
                    for i2 in 1..n {
                        if i1.abs_diff(i2) >= 2 {
                            let lhs = BraidWord::parse(n, &format!("{i1} {i2}")).unwrap();
                            let rhs = BraidWord::parse(n, &format!("{i2} {i1}")).unwrap();
                            let l = c.apply_braid(&lhs).unwrap();
                            let r = c.apply_braid(&rhs).unwrap();
                            assert!(l.is_isotopic(&r), "far commutation n={n} {i1} {i2}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn endpoints_follow_the_permutation() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for n in 2..=5usize {
            for _ in 0..30 {
                let len = rng.gen_range(0..6);
                let letters = (0..len)
                    .map(|_| crate::braid::BraidGen {
                        index: rng.gen_range(1..n),
                        sign: if rng.gen_bool(0.5) { 1 } else { -1 },
                    })
                    .collect();
                let w = BraidWord::new(n, letters).unwrap();
                let perm = w.permutation();
                for j in 1..n {
                    let img = base_arc(n, j).unwrap().apply_braid(&w).unwrap();
                    assert_eq!(img.start, ArcEnd::Puncture(perm[j - 1]));
                    assert_eq!(img.end, ArcEnd::Puncture(perm[j]));
                }
            }
        }
    }

    #[test]
    fn b2_half_twist_maps_core_arc_to_itself_reversed() {
        let c = base_arc(2, 1).unwrap();
        let img = c.apply_generator(1, 1).unwrap();
        assert_eq!(img.start, ArcEnd::Puncture(2));
        assert_eq!(img.end, ArcEnd::Puncture(1));
        assert!(img.canonicalize().word.is_empty());
        // unstripped class keeps the terminal wind that records the twist
        assert_eq!(img.word.winding(), -1);
    }

    #[test]
    fn inverse_word_restores_all_base_arcs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for n in 2..=5usize {
            for _ in 0..20 {
                let len = rng.gen_range(1..5);
                let letters: Vec<_> = (0..len)
                    .map(|_| crate::braid::BraidGen {
                        index: rng.gen_range(1..n),
                        sign: if rng.gen_bool(0.5) { 1 } else { -1 },
                    })
                    .collect();
                let w = BraidWord::new(n, letters).unwrap();
                let ww = w.concat(&w.inverse()).unwrap();
                for c in arcs(n) {
                    let img = c.apply_braid(&ww).unwrap();
                    assert!(img.is_isotopic(&c));
                }
            }
        }
    }

    #[test]
    fn canonicalize_is_idempotent_and_strips_winds() {
        let c = CurveDiagram {
            n: 3,
            start: ArcEnd::Puncture(1),
            end: ArcEnd::Puncture(2),
            word: FreeWord(vec![(1, 1), (1, 1), (3, -1), (2, 1)]),
        };
        let k = c.canonicalize();
        assert_eq!(k.word, FreeWord(vec![(3, -1)]));
        assert_eq!(k.canonicalize(), k);
        assert!(k.is_canonical());
    }
}
