//! Expansion of a crossing word into the full line-crossing itinerary.
//!
//! The disk is cut by the full vertical line through each puncture: the cut
//! ray below (`Lower`) and the ray above (`Upper`). A taut arc crosses the
//! lower parts exactly at its word letters; the upper crossings are forced
//! by which side each letter enters and leaves. Consecutive crossings are
//! then joined by chords, each living in a single vertical slab.

use super::{ArcEnd, CurveDiagram};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LinePart {
    Upper,
    Lower,
}

/// One transversal crossing of the vertical line through a puncture.
/// `dir = +1` means west to east.
#[derive(Debug, Clone, Copy)]
pub struct Transit {
    pub line: usize,
    pub part: LinePart,
    pub dir: i8,
    pub letter: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeKind {
    Base,
    Corner(usize),
    Transit(usize),
}

/// Transits plus chord data. Node `0` is the start, node `i` is transit
/// `i - 1`, the last node is the end; chord `c` joins nodes `c` and `c + 1`.
#[derive(Debug, Clone)]
pub struct Itinerary {
    pub transits: Vec<Transit>,
    pub start: NodeKind,
    pub end: NodeKind,
    pub chord_slab: Vec<usize>,
}

impl Itinerary {
    pub fn node_count(&self) -> usize {
        self.transits.len() + 2
    }

    pub fn node_kind(&self, node: usize) -> NodeKind {
        if node == 0 {
            self.start
        } else if node <= self.transits.len() {
            NodeKind::Transit(node - 1)
        } else {
            self.end
        }
    }

    /// Number of word letters on chords strictly before chord `c`.
    pub fn letters_before_chord(&self, c: usize) -> usize {
        self.transits[..c].iter().filter(|t| t.letter.is_some()).count()
    }
}

const EAST: i8 = 1;
const WEST: i8 = -1;

struct Builder {
    transits: Vec<Transit>,
}

impl Builder {
    fn push_upper(&mut self, line: usize, dir: i8) {
        self.transits.push(Transit {
            line,
            part: LinePart::Upper,
            dir,
            letter: None,
        });
    }

    /// Emit the upper crossings of a taut run from side `s` of line `m` to
    /// side `want` of line `k`.
    fn travel(&mut self, m: usize, s: i8, k: usize, want: i8) {
        if m < k {
            let lo = if s == WEST { m } else { m + 1 };
            let hi = if want == EAST { k } else { k - 1 };
            for line in lo..=hi {
                self.push_upper(line, EAST);
            }
        } else if m > k {
            let hi = if s == EAST { m } else { m - 1 };
            let lo = if want == WEST { k } else { k + 1 };
            for line in (lo..=hi).rev() {
                self.push_upper(line, WEST);
            }
        } else if s != want {
            self.push_upper(m, want);
        }
    }
}

pub fn build(diag: &CurveDiagram) -> Result<Itinerary> {
    let n = diag.n;
    for &(k, _) in &diag.word.0 {
        if k == 0 || k > n {
            return Err(Error::IndexOutOfRange { index: k, n });
        }
    }
    let end_p = match diag.end {
        ArcEnd::Puncture(b) => b,
        ArcEnd::Basepoint => {
            return Err(Error::Unrealizable("arc must end at a puncture".into()))
        }
    };
    if let ArcEnd::Puncture(a) = diag.start {
        if a == end_p && diag.word.is_empty() {
            return Err(Error::Unrealizable("degenerate arc".into()));
        }
    }

    let mut b = Builder { transits: Vec::new() };
    // current position: adjacent to `line` on side `side`; None while still
    // at the start corner, whose leaving side is free
    let mut cur: Option<(usize, i8)> = match diag.start {
        ArcEnd::Basepoint => Some((1, WEST)),
        ArcEnd::Puncture(_) => None,
    };
    let start_corner = match diag.start {
        ArcEnd::Puncture(a) => Some(a),
        ArcEnd::Basepoint => None,
    };

    for (idx, &(k, e)) in diag.word.0.iter().enumerate() {
        let want = if e > 0 { WEST } else { EAST };
        match cur {
            Some((m, s)) => b.travel(m, s, k, want),
            None => {
                let a = start_corner.unwrap();
                if k > a {
                    b.travel(a, EAST, k, want);
                } else if k < a {
                    b.travel(a, WEST, k, want);
                }
                // k == a: leave the corner directly on the entry side
            }
        }
        b.transits.push(Transit {
            line: k,
            part: LinePart::Lower,
            dir: if e > 0 { EAST } else { WEST },
            letter: Some(idx),
        });
        cur = Some((k, if e > 0 { EAST } else { WEST }));
    }

    // travel to the end corner
    match cur {
        Some((m, s)) => {
            if m < end_p {
                b.travel(m, s, end_p, WEST);
            } else if m > end_p {
                b.travel(m, s, end_p, EAST);
            }
            // m == end_p: approach directly from side s
        }
        None => {
            let a = start_corner.unwrap();
            if a < end_p {
                b.travel(a, EAST, end_p, WEST);
            } else {
                b.travel(a, WEST, end_p, EAST);
            }
        }
    }

    let transits = b.transits;
    let start = match diag.start {
        ArcEnd::Basepoint => NodeKind::Base,
        ArcEnd::Puncture(a) => NodeKind::Corner(a),
    };
    let end = NodeKind::Corner(end_p);

    // slab of each chord, from the sides of its two transit endpoints
    let m = transits.len();
    let mut chord_slab = Vec::with_capacity(m + 1);
    for c in 0..=m {
        let left_hint: Option<usize> = if c == 0 {
            match start {
                NodeKind::Base => Some(0),
                _ => None,
            }
        } else {
            let t = &transits[c - 1];
            Some(if t.dir == EAST { t.line } else { t.line - 1 })
        };
        let right_hint: Option<usize> = if c == m {
            None
        } else {
            let t = &transits[c];
            Some(if t.dir == EAST { t.line - 1 } else { t.line })
        };
        let slab = match (left_hint, right_hint) {
            (Some(a), Some(b2)) => {
                if a != b2 {
                    return Err(Error::Unrealizable(format!(
                        "inconsistent chord {c}: slabs {a} vs {b2}"
                    )));
                }
                a
            }
            (Some(a), None) => a,
            (None, Some(b2)) => b2,
            (None, None) => {
                // single corner-to-corner chord
                let a = start_corner.unwrap();
                a.min(end_p)
            }
        };
        // a corner or base endpoint must lie on this slab's boundary
        if c == 0 {
            match start {
                NodeKind::Corner(a) => {
                    if slab != a && slab + 1 != a {
                        return Err(Error::Unrealizable(format!(
                            "start corner {a} not on slab {slab}"
                        )));
                    }
                }
                NodeKind::Base => {
                    if slab != 0 {
                        return Err(Error::Unrealizable(
                            "basepoint chord must start in the first slab".into(),
                        ));
                    }
                }
                _ => {}
            }
        }
        if c == m && (slab != end_p && slab + 1 != end_p) {
            return Err(Error::Unrealizable(format!(
                "end corner {end_p} not on slab {slab}"
            )));
        }
        chord_slab.push(slab);
    }

    Ok(Itinerary {
        transits,
        start,
        end,
        chord_slab,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::FreeWord;
    use crate::curve::{anchor_arc, base_arc, ArcEnd};

    #[test]
    fn base_arc_is_one_chord() {
        let it = build(&base_arc(4, 2).unwrap()).unwrap();
        assert!(it.transits.is_empty());
        assert_eq!(it.chord_slab, vec![2]);
    }

    #[test]
    fn far_base_arc_passes_above_intermediates() {
        let c = CurveDiagram {
            n: 4,
            start: ArcEnd::Puncture(1),
            end: ArcEnd::Puncture(4),
            word: FreeWord::empty(),
        };
        let it = build(&c).unwrap();
        let uppers: Vec<usize> = it.transits.iter().map(|t| t.line).collect();
        assert_eq!(uppers, vec![2, 3]);
        assert!(it
            .transits
            .iter()
            .all(|t| t.part == LinePart::Upper && t.dir == 1));
        assert_eq!(it.chord_slab, vec![1, 2, 3]);
    }

    #[test]
    fn anchor_crosses_uppers_only() {
        let it = build(&anchor_arc(4, 3).unwrap()).unwrap();
        let lines: Vec<usize> = it.transits.iter().map(|t| t.line).collect();
        assert_eq!(lines, vec![1, 2, 3]);
        assert!(it.transits.iter().all(|t| t.part == LinePart::Upper));
    }

    #[test]
    fn same_station_repeat_wraps_over_the_top() {
        // two successive positive crossings of the same cut ray, approached
        // from the east: each left-to-right pass costs one upper crossing
        let c = CurveDiagram {
            n: 2,
            start: ArcEnd::Puncture(2),
            end: ArcEnd::Puncture(1),
            word: FreeWord(vec![(1, 1), (1, 1)]),
        };
        let it = build(&c).unwrap();
        let kinds: Vec<(usize, LinePart, i8)> = it
            .transits
            .iter()
            .map(|t| (t.line, t.part, t.dir))
            .collect();
        assert_eq!(
            kinds,
            vec![
                (1, LinePart::Upper, -1),
                (1, LinePart::Lower, 1),
                (1, LinePart::Upper, -1),
                (1, LinePart::Lower, 1),
            ]
        );
    }

    #[test]
    fn cancelling_pair_makes_a_hairpin_chord() {
        let c = CurveDiagram {
            n: 3,
            start: ArcEnd::Puncture(1),
            end: ArcEnd::Puncture(2),
            word: FreeWord(vec![(2, 1), (2, -1)]),
        };
        let it = build(&c).unwrap();
        assert_eq!(it.transits.len(), 2);
        // both crossings on line 2, chord between them east of it
        assert_eq!(it.chord_slab, vec![1, 2, 1]);
    }

    #[test]
    fn entering_from_the_far_side_costs_an_upper_crossing() {
        // negative crossing of C2 approached from the west needs U2 first
        let c = CurveDiagram {
            n: 3,
            start: ArcEnd::Puncture(1),
            end: ArcEnd::Puncture(2),
            word: FreeWord(vec![(2, -1)]),
        };
        let it = build(&c).unwrap();
        let kinds: Vec<(usize, LinePart, i8)> = it
            .transits
            .iter()
            .map(|t| (t.line, t.part, t.dir))
            .collect();
        assert_eq!(
            kinds,
            vec![(2, LinePart::Upper, 1), (2, LinePart::Lower, -1)]
        );
    }
}
