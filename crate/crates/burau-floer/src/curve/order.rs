//! Depth order of transits along each cut line part.
//!
//! Two strands crossing the same part are ordered by following both eastward
//! until their itineraries diverge. Divergence is judged against the cyclic
//! boundary of the slab the germs currently occupy: chords out of a common
//! part are non-crossing exactly when their depth order matches the order of
//! their targets along the boundary walk that starts at the part's tip end.

use super::itinerary::{Itinerary, LinePart, NodeKind};
use std::cmp::Ordering;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Site {
    Part(usize, LinePart),
    Corner(usize),
    Base,
}

/// Counterclockwise boundary sites of a slab, starting from the bottom edge.
/// The flag records whether the CCW traversal meets the part tip-end first.
fn sites_ccw(slab: usize, n: usize) -> Vec<(Site, Option<bool>)> {
    let mut v = Vec::with_capacity(7);
    if slab + 1 <= n {
        v.push((Site::Part(slab + 1, LinePart::Lower), Some(false)));
        v.push((Site::Corner(slab + 1), None));
        v.push((Site::Part(slab + 1, LinePart::Upper), Some(true)));
    }
    if slab == 0 {
        v.push((Site::Base, None));
    }
    if slab >= 1 {
        v.push((Site::Part(slab, LinePart::Upper), Some(false)));
        v.push((Site::Corner(slab), None));
        v.push((Site::Part(slab, LinePart::Lower), Some(true)));
    }
    v
}

/// The walk away from the tip end of part `p` around the slab boundary.
/// Entries are `(site, tip_first)`; the part itself comes last, far end
/// first. Targets earlier in the walk belong to tip-closer chords.
fn walk(line: usize, part: LinePart, slab: usize, n: usize) -> Vec<(Site, bool)> {
    let sites = sites_ccw(slab, n);
    let len = sites.len();
    let p = sites
        .iter()
        .position(|s| s.0 == Site::Part(line, part))
        .expect("part on slab boundary");
    let ccw_tip = sites[p].1.unwrap();
    let mut out = Vec::with_capacity(len);
    for step in 1..len {
        let q = if ccw_tip {
            (p + len - step) % len
        } else {
            (p + step) % len
        };
        let flag = match sites[q].1 {
            Some(f) => {
                if ccw_tip {
                    !f
                } else {
                    f
                }
            }
            None => false,
        };
        out.push((sites[q].0, flag));
    }
    out.push((sites[p].0, false));
    out
}

#[derive(Debug, Clone, Copy)]
struct Germ {
    chord: usize,
    forward: bool,
}

fn germ_target_node(g: Germ) -> usize {
    if g.forward {
        g.chord + 1
    } else {
        g.chord
    }
}

fn continue_germ(g: Germ) -> Germ {
    let node = germ_target_node(g);
    if g.forward {
        Germ {
            chord: node,
            forward: true,
        }
    } else {
        Germ {
            chord: node - 1,
            forward: false,
        }
    }
}

fn site_of_node(it: &Itinerary, node: usize) -> Site {
    match it.node_kind(node) {
        NodeKind::Base => Site::Base,
        NodeKind::Corner(k) => Site::Corner(k),
        NodeKind::Transit(t) => Site::Part(it.transits[t].line, it.transits[t].part),
    }
}

fn east_germ(it: &Itinerary, t: usize) -> Germ {
    let node = t + 1;
    if it.transits[t].dir > 0 {
        Germ {
            chord: node,
            forward: true,
        }
    } else {
        Germ {
            chord: node - 1,
            forward: false,
        }
    }
}

/// Order two transits of the same part, tip-closest first.
pub fn cmp_transits(it: &Itinerary, n: usize, t1: usize, t2: usize) -> Ordering {
    debug_assert_eq!(it.transits[t1].line, it.transits[t2].line);
    debug_assert_eq!(it.transits[t1].part, it.transits[t2].part);
    if t1 == t2 {
        return Ordering::Equal;
    }
    let mut g1 = east_germ(it, t1);
    let mut g2 = east_germ(it, t2);
    let mut line = it.transits[t1].line;
    let mut part = it.transits[t1].part;
    let mut sense = true;
    loop {
        let slab = it.chord_slab[g1.chord];
        debug_assert_eq!(slab, it.chord_slab[g2.chord], "germs in different slabs");
        let n1 = germ_target_node(g1);
        let n2 = germ_target_node(g2);
        let s1 = site_of_node(it, n1);
        let s2 = site_of_node(it, n2);
        if s1 != s2 {
            let w = walk(line, part, slab, n);
            let r1 = w.iter().position(|e| e.0 == s1).expect("site in walk");
            let r2 = w.iter().position(|e| e.0 == s2).expect("site in walk");
            let ord = r1.cmp(&r2);
            return if sense { ord } else { ord.reverse() };
        }
        match s1 {
            Site::Part(l, p) => {
                let w = walk(line, part, slab, n);
                let r = w.iter().position(|e| e.0 == s1).expect("site in walk");
                if !w[r].1 {
                    sense = !sense;
                }
                g1 = continue_germ(g1);
                g2 = continue_germ(g2);
                line = l;
                part = p;
            }
            _ => unreachable!("two germs cannot share a terminal site"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::FreeWord;
    use crate::curve::itinerary::build;
    use crate::curve::{ArcEnd, CurveDiagram};

    #[test]
    fn walk_positions_make_sense() {
        // lower part of the west line of slab 1, in a 3 puncture disk
        let w = walk(1, LinePart::Lower, 1, 3);
        // first site away from the tip is the corner of the same line
        assert_eq!(w[0].0, Site::Corner(1));
        // the part itself comes last
        assert_eq!(w.last().unwrap().0, Site::Part(1, LinePart::Lower));
    }

    #[test]
    fn double_wrap_depths() {
        // word x1 x1 from p2 to p1: the two lower crossings of line 1 spiral
        // around the puncture; the later crossing is closer to the tip
        let c = CurveDiagram {
            n: 2,
            start: ArcEnd::Puncture(2),
            end: ArcEnd::Puncture(1),
            word: FreeWord(vec![(1, 1), (1, 1)]),
        };
        let it = build(&c).unwrap();
        let lowers: Vec<usize> = it
            .transits
            .iter()
            .enumerate()
            .filter(|(_, t)| t.part == LinePart::Lower)
            .map(|(i, _)| i)
            .collect();
        assert_eq!(lowers.len(), 2);
        let ord = cmp_transits(&it, 2, lowers[0], lowers[1]);
        assert_eq!(ord, Ordering::Greater, "second pass is the inner one");
    }
}
