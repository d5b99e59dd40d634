//! Exact rectilinear drawing of an arc from its itinerary.
//!
//! Transits get rational tracks along their line parts, ordered by the depth
//! comparator. Each chord is routed inside its slab parallel to the slab
//! boundary, at an offset graded by how deeply the chord nests among the
//! chords of that slab; nested offsets keep the drawing embedded. Every
//! edge is axis-parallel, so turning numbers are quarter-turn counts and all
//! crossings are exact.

use super::itinerary::{self, Itinerary, LinePart, NodeKind};
use super::order::cmp_transits;
use super::{ArcEnd, Boundary, CurveDiagram, Passage, Token};
use crate::braid::FreeWord;
use crate::error::{Error, Result};
use std::collections::BTreeMap;

pub type Rat = num::rational::Ratio<i64>;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(num, den)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pt {
    pub x: Rat,
    pub y: Rat,
}

impl Pt {
    pub fn new(x: Rat, y: Rat) -> Self {
        Pt { x, y }
    }
}

/// One transversal crossing of the drawn arc with a wall.
#[derive(Debug, Clone, Copy)]
pub struct WallCrossing {
    pub wall: usize,
    pub pos: Pt,
    /// chord index: the position of the crossing along the arc
    pub chord: usize,
    /// path segment carrying the crossing
    pub seg: usize,
    /// +1 when the arc heads east at the crossing
    pub dir: i8,
    /// word letters strictly before the crossing along the arc
    pub letters_before: usize,
}

#[derive(Debug, Clone)]
pub struct Realization {
    pub n: usize,
    pub start: ArcEnd,
    pub end: ArcEnd,
    /// the word as drawn (terminal winds and hairpins included, if any)
    pub word: FreeWord,
    pub path: Vec<Pt>,
    /// chord index per path segment
    pub seg_chord: Vec<usize>,
    /// all wall crossings in arc order
    pub crossings: Vec<WallCrossing>,
    /// base offset quantum of the drawing
    pub unit: Rat,
    pub itin: Itinerary,
}

const TOP: i64 = 2;

struct Layout {
    /// y coordinate of each transit point
    track: Vec<Rat>,
    /// per chord: nesting offset
    delta: Vec<Rat>,
    unit: Rat,
}

/// Boundary walk parameter of a node seen from a given slab. Rank runs
/// counterclockwise from the bottom edge; ties inside a feature are broken
/// by the rational coordinate.
fn walk_param(it: &Itinerary, track: &[Rat], node: usize, slab: usize) -> (u8, Rat) {
    match it.node_kind(node) {
        NodeKind::Base => (4, rat(-1, 2)),
        NodeKind::Corner(k) => {
            if k == slab + 1 {
                (2, rat(0, 1))
            } else {
                debug_assert_eq!(k, slab);
                (6, rat(0, 1))
            }
        }
        NodeKind::Transit(t) => {
            let tr = &it.transits[t];
            let y = track[t];
            if tr.line == slab + 1 {
                match tr.part {
                    LinePart::Lower => (1, y),
                    LinePart::Upper => (3, y),
                }
            } else {
                debug_assert_eq!(tr.line, slab);
                match tr.part {
                    LinePart::Upper => (5, -y),
                    LinePart::Lower => (7, -y),
                }
            }
        }
    }
}

fn endpoint_point(it: &Itinerary, track: &[Rat], node: usize, slab: usize) -> Pt {
    match it.node_kind(node) {
        NodeKind::Base => Pt::new(rat(1, 2), rat(TOP, 1)),
        NodeKind::Corner(k) => Pt::new(rat(k as i64, 1), rat(0, 1)),
        NodeKind::Transit(t) => {
            let tr = &it.transits[t];
            let _ = slab;
            Pt::new(rat(tr.line as i64, 1), track[t])
        }
    }
}

fn attach_point(param: (u8, Rat), slab: usize, delta: Rat) -> Pt {
    let s = rat(slab as i64, 1);
    let east = rat(slab as i64 + 1, 1);
    match param.0 {
        1 | 3 => Pt::new(east - delta, param.1),
        2 => Pt::new(east - delta, rat(0, 1)),
        4 => Pt::new(-param.1, rat(TOP, 1) - delta),
        5 | 7 => Pt::new(s + delta, -param.1),
        6 => Pt::new(s + delta, rat(0, 1)),
        _ => unreachable!(),
    }
}

/// Route one chord: endpoint, perpendicular attachment, boundary-parallel
/// walk with corner vertices at the two top corners of the slab, attachment,
/// endpoint.
fn chord_polyline(
    it: &Itinerary,
    track: &[Rat],
    chord: usize,
    slab: usize,
    delta: Rat,
) -> Vec<Pt> {
    let (na, nb) = (chord, chord + 1);
    let pa = walk_param(it, track, na, slab);
    let pb = walk_param(it, track, nb, slab);
    let (lo_node, lo, hi_node, hi, reversed) = if pa <= pb {
        (na, pa, nb, pb, false)
    } else {
        (nb, pb, na, pa, true)
    };
    let mut v: Vec<Pt> = Vec::with_capacity(6);
    v.push(endpoint_point(it, track, lo_node, slab));
    v.push(attach_point(lo, slab, delta));
    for r in lo.0..hi.0 {
        match r {
            3 => v.push(Pt::new(
                rat(slab as i64 + 1, 1) - delta,
                rat(TOP, 1) - delta,
            )),
            4 => v.push(Pt::new(rat(slab as i64, 1) + delta, rat(TOP, 1) - delta)),
            _ => {}
        }
    }
    v.push(attach_point(hi, slab, delta));
    v.push(endpoint_point(it, track, hi_node, slab));
    v.dedup();
    if reversed {
        v.reverse();
    }
    v
}

fn compute_layout(it: &Itinerary, n: usize) -> Result<Layout> {
    let m = it.transits.len();
    // group transits per part, sort by depth, assign tracks
    let mut groups: BTreeMap<(usize, LinePart), Vec<usize>> = BTreeMap::new();
    for (i, t) in it.transits.iter().enumerate() {
        groups.entry((t.line, t.part)).or_default().push(i);
    }
    let denom = m as i64 + 2;
    let mut track = vec![rat(0, 1); m];
    let mut base = 0i64;
    for ((_, part), members) in groups.iter_mut() {
        members.sort_by(|&a, &b| cmp_transits(it, n, a, b));
        for (rank, &t) in members.iter().enumerate() {
            let mag = rat(base + rank as i64 + 1, denom);
            track[t] = match part {
                LinePart::Upper => mag,
                LinePart::Lower => -mag,
            };
        }
        base += members.len() as i64;
    }

    // nesting depth of chords within each slab
    let chords = it.chord_slab.len();
    let mut by_slab: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for c in 0..chords {
        by_slab.entry(it.chord_slab[c]).or_default().push(c);
    }
    let mut delta = vec![rat(0, 1); chords];
    for (&slab, cs) in &by_slab {
        let mut intervals: Vec<(usize, (u8, Rat), (u8, Rat))> = Vec::new();
        for &c in cs {
            let a = walk_param(it, &track, c, slab);
            let b = walk_param(it, &track, c + 1, slab);
            let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
            intervals.push((c, lo, hi));
        }
        // laminarity: any two intervals nest or are disjoint
        for (i, x) in intervals.iter().enumerate() {
            for y in intervals.iter().skip(i + 1) {
                let cross = (x.1 < y.1 && y.1 < x.2 && x.2 < y.2)
                    || (y.1 < x.1 && x.1 < y.2 && y.2 < x.2);
                if cross {
                    return Err(Error::Unrealizable(format!(
                        "chords {} and {} interleave in slab {slab}",
                        x.0, y.0
                    )));
                }
            }
        }
        let mut depth: Vec<(usize, usize)> = intervals
            .iter()
            .map(|x| {
                let d = intervals
                    .iter()
                    .filter(|y| y.1 < x.1 && x.2 < y.2)
                    .count();
                (x.0, d)
            })
            .collect();
        // innermost chords hug the boundary closest
        depth.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let step = Rat::new(1, (cs.len() as i64 + 2) * (m as i64 + 3));
        for (pos, &(c, _)) in depth.iter().enumerate() {
            delta[c] = step * Rat::from_integer(pos as i64 + 1);
        }
    }

    let _ = n;
    Ok(Layout {
        track,
        delta,
        unit: Rat::new(1, m as i64 + 3),
    })
}

pub fn realize(diag: &CurveDiagram) -> Result<Realization> {
    let it = itinerary::build(diag)?;
    let layout = compute_layout(&it, diag.n)?;
    let chords = it.chord_slab.len();

    let mut path: Vec<Pt> = Vec::new();
    let mut seg_chord: Vec<usize> = Vec::new();
    for c in 0..chords {
        let verts = chord_polyline(&it, &layout.track, c, it.chord_slab[c], layout.delta[c]);
        if c == 0 {
            path.push(verts[0]);
        } else if *path.last().unwrap() != verts[0] {
            return Err(Error::Unrealizable(format!(
                "chord {c} does not continue the path"
            )));
        }
        for p in &verts[1..] {
            if *path.last().unwrap() != *p {
                path.push(*p);
                seg_chord.push(c);
            }
        }
    }

    // wall crossings: only horizontal segments can meet a wall
    let mut crossings = Vec::new();
    for (s, w) in path.windows(2).enumerate() {
        let (p, q) = (w[0], w[1]);
        if p.y != q.y {
            continue;
        }
        let (xmin, xmax) = if p.x < q.x { (p.x, q.x) } else { (q.x, p.x) };
        for wall in 1..diag.n {
            let wx = rat(2 * wall as i64 + 1, 2);
            if xmin < wx && wx < xmax {
                let chord = seg_chord[s];
                crossings.push(WallCrossing {
                    wall,
                    pos: Pt::new(wx, p.y),
                    chord,
                    seg: s,
                    dir: if q.x > p.x { 1 } else { -1 },
                    letters_before: it.letters_before_chord(chord),
                });
            }
        }
    }

    Ok(Realization {
        n: diag.n,
        start: diag.start,
        end: diag.end,
        word: diag.word.clone(),
        path,
        seg_chord,
        crossings,
        unit: layout.unit,
        itin: it,
    })
}

impl Realization {
    /// Crossings with wall `i`, ordered along the wall from top to bottom.
    pub fn wall_crossings(&self, i: usize) -> Vec<WallCrossing> {
        let mut v: Vec<WallCrossing> = self
            .crossings
            .iter()
            .filter(|c| c.wall == i)
            .copied()
            .collect();
        v.sort_by(|a, b| b.pos.y.cmp(&a.pos.y));
        v
    }

    /// Crossing word with the cut rays, read back from the geometry. Equals
    /// the drawn word; used as a round-trip check.
    pub fn cut_word(&self) -> Result<FreeWord> {
        path_cut_word(&self.path, self.n, false)
    }

    /// Token view: maximal pieces between wall crossings. In these drawings
    /// every crossing of a puncture line happens at a transit vertex, so the
    /// passage of a piece is read off its interior vertices.
    pub fn tokens(&self) -> Vec<Token> {
        let mut events: Vec<&WallCrossing> = self.crossings.iter().collect();
        events.sort_by_key(|c| c.seg);
        let mut tokens = Vec::new();
        let mut entry = Boundary::Start;
        let mut first_vertex = 1usize;
        for ev in &events {
            let region = if ev.dir > 0 { ev.wall } else { ev.wall + 1 };
            let exit = if ev.dir > 0 {
                Boundary::RightWall
            } else {
                Boundary::LeftWall
            };
            tokens.push(Token {
                region,
                entry,
                exit,
                passage: self.piece_passage(region, first_vertex, ev.seg),
            });
            entry = if ev.dir > 0 {
                Boundary::LeftWall
            } else {
                Boundary::RightWall
            };
            first_vertex = ev.seg + 1;
        }
        let region = match self.end {
            ArcEnd::Puncture(b) => b,
            ArcEnd::Basepoint => 1,
        };
        tokens.push(Token {
            region,
            entry,
            exit: Boundary::End,
            passage: self.piece_passage(region, first_vertex, self.path.len() - 2),
        });
        tokens
    }

    /// Passage of the piece whose interior vertices are
    /// `first_vertex ..= last_seg`, relative to the puncture of `region`.
    fn piece_passage(&self, region: usize, first_vertex: usize, last_seg: usize) -> Passage {
        let line = rat(region as i64, 1);
        for i in first_vertex..=last_seg {
            if i == 0 || i + 1 >= self.path.len() {
                continue;
            }
            let v = self.path[i];
            if v.x != line {
                continue;
            }
            let before = self.path[i - 1];
            let after = self.path[i + 1];
            if (before.x < line && line < after.x) || (after.x < line && line < before.x) {
                return if v.y > rat(0, 1) {
                    Passage::Above
                } else {
                    Passage::Below
                };
            }
        }
        Passage::None
    }

    /// No two non-adjacent segments intersect; adjacent ones only share the
    /// common endpoint.
    pub fn check_embedded(&self) -> Result<()> {
        let segs: Vec<(Pt, Pt)> = self.path.windows(2).map(|w| (w[0], w[1])).collect();
        for i in 0..segs.len() {
            for j in i + 1..segs.len() {
                let shared = if j == i + 1 { Some(segs[i].1) } else { None };
                if segments_conflict(segs[i], segs[j], shared) {
                    return Err(Error::Unrealizable(format!(
                        "segments {i} and {j} intersect"
                    )));
                }
            }
        }
        Ok(())
    }
}

fn between(v: Rat, a: Rat, b: Rat) -> bool {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    lo < v && v < hi
}

/// Axis-parallel segment intersection test; `allowed` is the single point
/// two adjacent segments may share.
fn segments_conflict(a: (Pt, Pt), b: (Pt, Pt), allowed: Option<Pt>) -> bool {
    let pts = overlap_points(a, b);
    match pts {
        Overlap::None => false,
        Overlap::Point(p) => Some(p) != allowed,
        Overlap::Many => true,
    }
}

enum Overlap {
    None,
    Point(Pt),
    Many,
}

fn overlap_points(a: (Pt, Pt), b: (Pt, Pt)) -> Overlap {
    let ah = a.0.y == a.1.y;
    let bh = b.0.y == b.1.y;
    fn span(u: Rat, v: Rat) -> (Rat, Rat) {
        if u <= v {
            (u, v)
        } else {
            (v, u)
        }
    }
    match (ah, bh) {
        (true, true) => {
            if a.0.y != b.0.y {
                return Overlap::None;
            }
            let (a0, a1) = span(a.0.x, a.1.x);
            let (b0, b1) = span(b.0.x, b.1.x);
            let lo = a0.max(b0);
            let hi = a1.min(b1);
            if lo > hi {
                Overlap::None
            } else if lo == hi {
                Overlap::Point(Pt::new(lo, a.0.y))
            } else {
                Overlap::Many
            }
        }
        (false, false) => {
            if a.0.x != b.0.x {
                return Overlap::None;
            }
            let (a0, a1) = span(a.0.y, a.1.y);
            let (b0, b1) = span(b.0.y, b.1.y);
            let lo = a0.max(b0);
            let hi = a1.min(b1);
            if lo > hi {
                Overlap::None
            } else if lo == hi {
                Overlap::Point(Pt::new(a.0.x, lo))
            } else {
                Overlap::Many
            }
        }
        (true, false) => cross_hv(a, b),
        (false, true) => cross_hv(b, a),
    }
}

fn cross_hv(h: (Pt, Pt), v: (Pt, Pt)) -> Overlap {
    let (hx0, hx1) = if h.0.x <= h.1.x {
        (h.0.x, h.1.x)
    } else {
        (h.1.x, h.0.x)
    };
    let (vy0, vy1) = if v.0.y <= v.1.y {
        (v.0.y, v.1.y)
    } else {
        (v.1.y, v.0.y)
    };
    if hx0 <= v.0.x && v.0.x <= hx1 && vy0 <= h.0.y && h.0.y <= vy1 {
        Overlap::Point(Pt::new(v.0.x, h.0.y))
    } else {
        Overlap::None
    }
}

/// Read the cut-ray crossing word of an arbitrary rectilinear path. With
/// `closed` the last point is joined back to the first. Crossings must be
/// transversal; ending on a ray or touching it without crossing is an error
/// unless the touch is at the path's first or last point.
pub fn path_cut_word(path: &[Pt], n: usize, closed: bool) -> Result<FreeWord> {
    let mut letters = Vec::new();
    let m = path.len();
    if m < 2 {
        return Ok(FreeWord::empty());
    }
    let seg = |i: usize| -> (Pt, Pt) {
        if i + 1 < m {
            (path[i], path[i + 1])
        } else {
            (path[m - 1], path[0])
        }
    };
    let nsegs = if closed { m } else { m - 1 };
    for i in 0..nsegs {
        let (p, q) = seg(i);
        if p.y == q.y {
            // interior crossings of vertical lines
            for k in 1..=n {
                let line = rat(k as i64, 1);
                if between(line, p.x, q.x) && p.y < rat(0, 1) {
                    letters.push((i, p.x, k, if q.x > p.x { 1i8 } else { -1 }, p.x.min(q.x)));
                }
            }
        }
        // vertex exactly on a line
        let vtx = q;
        let is_last_vertex = !closed && i + 1 == nsegs;
        if vtx.y < rat(0, 1) && vtx.x.is_integer() {
            let k = vtx.x.to_integer();
            if k >= 1 && k <= n as i64 {
                if is_last_vertex {
                    return Err(Error::NonTransverse(format!(
                        "path ends on cut ray {k}"
                    )));
                }
                let nxt = if i + 2 < m {
                    path[i + 2]
                } else {
                    path[(i + 2) % m]
                };
                let before = p;
                if before.x == vtx.x || nxt.x == vtx.x {
                    return Err(Error::NonTransverse(format!(
                        "path runs along cut ray {k}"
                    )));
                }
                if (before.x < vtx.x) == (vtx.x < nxt.x) {
                    letters.push((
                        i,
                        vtx.x,
                        k as usize,
                        if nxt.x > vtx.x { 1 } else { -1 },
                        vtx.x,
                    ));
                }
            }
        }
    }
    letters.sort_by_key(|&(i, _, _, _, _)| i);
    // order within one segment follows the traversal direction
    let mut out: Vec<(usize, i8)> = Vec::new();
    let mut i = 0usize;
    while i < letters.len() {
        let mut j = i;
        while j < letters.len() && letters[j].0 == letters[i].0 {
            j += 1;
        }
        let mut group: Vec<_> = letters[i..j].to_vec();
        let (p, q) = seg(letters[i].0);
        if q.x > p.x {
            group.sort_by(|a, b| a.1.cmp(&b.1));
        } else {
            group.sort_by(|a, b| b.1.cmp(&a.1));
        }
        for g in group {
            out.push((g.2, g.3));
        }
        i = j;
    }
    Ok(FreeWord(out))
}

/// The word of a closed loop read along the cut rays.
pub fn loop_word(path: &[Pt], n: usize) -> Result<FreeWord> {
    path_cut_word(path, n, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::curve::{anchor_arc, base_arc};

    #[test]
    fn base_arc_realization() {
        for n in 2..=5 {
            for j in 1..n {
                let r = base_arc(n, j).unwrap().realize().unwrap();
                r.check_embedded().unwrap();
                for i in 1..n {
                    let k = r.wall_crossings(i).len();
                    assert_eq!(k, usize::from(i == j), "n={n} j={j} i={i}");
                }
                assert!(r.cut_word().unwrap().is_empty());
            }
        }
    }

    #[test]
    fn anchor_arc_realization() {
        for n in 2..=5 {
            for j in 1..n {
                let r = anchor_arc(n, j).unwrap().realize().unwrap();
                r.check_embedded().unwrap();
                assert!(r.cut_word().unwrap().is_empty());
            }
        }
    }

    #[test]
    fn round_trip_on_braid_images() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for n in 2..=5usize {
            for _ in 0..25 {
                let len = rng.gen_range(0..7);
                let letters: Vec<_> = (0..len)
                    .map(|_| crate::braid::BraidGen {
                        index: rng.gen_range(1..n),
                        sign: if rng.gen_bool(0.5) { 1 } else { -1 },
                    })
                    .collect();
                let w = BraidWord::new(n, letters).unwrap();
                let j = rng.gen_range(1..n);
                let img = base_arc(n, j).unwrap().apply_braid(&w).unwrap();
                let r = img.realize().unwrap();
                r.check_embedded().unwrap();
                assert_eq!(r.cut_word().unwrap(), img.word, "w={w} j={j}");
                let canon = img.canonicalize().realize().unwrap();
                canon.check_embedded().unwrap();
                assert_eq!(canon.cut_word().unwrap(), img.canonicalize().word);
            }
        }
    }

    #[test]
    fn b2_twisted_arc_crosses_once_heading_west() {
        let img = base_arc(2, 1)
            .unwrap()
            .apply_generator(1, 1)
            .unwrap()
            .canonicalize();
        let r = img.realize().unwrap();
        let xs = r.wall_crossings(1);
        assert_eq!(xs.len(), 1);
        assert_eq!(xs[0].dir, -1);
    }

    #[test]
    fn tokens_of_base_arc() {
        let r = base_arc(3, 1).unwrap().realize().unwrap();
        let toks = r.tokens();
        assert_eq!(toks.len(), 2);
        assert_eq!(toks[0].entry, Boundary::Start);
        assert_eq!(toks[0].exit, Boundary::RightWall);
        assert_eq!(toks[0].region, 1);
        assert_eq!(toks[1].entry, Boundary::LeftWall);
        assert_eq!(toks[1].exit, Boundary::End);
        assert_eq!(toks[1].region, 2);
    }

    #[test]
    fn loop_word_of_small_cycle() {
        // counterclockwise rectangle around p1, dipping below it
        let pts = vec![
            Pt::new(rat(1, 2), rat(1, 2)),
            Pt::new(rat(1, 2), rat(-1, 2)),
            Pt::new(rat(3, 2), rat(-1, 2)),
            Pt::new(rat(3, 2), rat(1, 2)),
        ];
        let w = loop_word(&pts, 2).unwrap();
        assert_eq!(w, FreeWord(vec![(1, 1)]));
        let rev: Vec<Pt> = pts.iter().rev().copied().collect();
        assert_eq!(loop_word(&rev, 2).unwrap(), FreeWord(vec![(1, -1)]));
    }
}
