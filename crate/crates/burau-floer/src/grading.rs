//! Gradings of intersection points.
//!
//! The Alexander level of a crossing is read off the cut-ray crossing words:
//! the level of the lifted path that runs from the basepoint out along the
//! anchor and back along the arc to the crossing. The wall contributes
//! nothing since walls meet no cut ray. The Maslov index is the number of
//! half turns of the tangent along the closed loop through the anchor, the
//! arc and the wall; on rectilinear drawings this is an exact quarter-turn
//! count.

use crate::braid::FreeWord;
use crate::curve::realize::rat;
use crate::curve::{ArcEnd, Pt, Rat, Realization, WallCrossing};
use crate::error::{Error, Result};

/// Exact total turning of a closed polyline in half-turn units, computed
/// from the winding of the edge direction sequence. Quarter turns sum to an
/// integer number of half turns on any closed loop.
pub fn turning_number(path: &[Pt]) -> Result<i64> {
    if path.len() < 2 {
        return Err(Error::NonTransverse("turning of a point".into()));
    }
    let m = path.len();
    let mut dirs: Vec<(Rat, Rat)> = Vec::with_capacity(m);
    for i in 0..m {
        let p = path[i];
        let q = path[(i + 1) % m];
        let d = (q.x - p.x, q.y - p.y);
        if d.0 == rat(0, 1) && d.1 == rat(0, 1) {
            return Err(Error::NonTransverse(format!("zero-length edge at {i}")));
        }
        dirs.push(d);
    }
    let zero = rat(0, 1);
    let mut winding = 0i64;
    for i in 0..m {
        let u = dirs[i];
        let v = dirs[(i + 1) % m];
        let cross = u.0 * v.1 - u.1 * v.0;
        let dot = u.0 * v.0 + u.1 * v.1;
        if cross == zero && dot < zero {
            return Err(Error::NonTransverse(format!(
                "cusp: edge {i} reverses direction"
            )));
        }
        // signed crossings of the east direction by the short rotation u -> v
        if u.1 < zero && v.1 >= zero {
            if cross > zero {
                winding += 1;
            }
        } else if u.1 >= zero && v.1 < zero && cross < zero {
            winding -= 1;
        }
    }
    Ok(2 * winding)
}

/// Local intersection sign of the downward-oriented wall with the arc.
pub fn crossing_sign(c: &WallCrossing) -> i8 {
    // det of (wall direction, arc direction) with the wall pointing down
    c.dir
}

/// Alexander level of each crossing of `arc` with the wall, in wall order
/// (top to bottom). `anchor_word` must belong to the same representative of
/// the acting diffeomorphism as the drawn arc.
pub fn alexander_levels(arc: &Realization, anchor_word: &FreeWord, wall: usize) -> Vec<i64> {
    let anchor_tw = anchor_word.winding();
    let word_tw = arc.word.winding();
    arc.wall_crossings(wall)
        .iter()
        .map(|c| {
            let prefix: i64 = arc.word.0[..c.letters_before]
                .iter()
                .map(|&(_, s)| s as i64)
                .sum();
            anchor_tw - word_tw + prefix
        })
        .collect()
}

/// Anchor word synced to a canonical (stripped) arc: the stripping isotopy
/// that removes the arc's terminal winds drags the anchor with it.
pub fn synced_anchor_word(anchor_word: &FreeWord, end: ArcEnd, trailing_wind: i64) -> FreeWord {
    let b = match end {
        ArcEnd::Puncture(b) => b,
        ArcEnd::Basepoint => return anchor_word.reduce(),
    };
    let mut w = anchor_word.0.clone();
    let s: i8 = if trailing_wind > 0 { -1 } else { 1 };
    for _ in 0..trailing_wind.unsigned_abs() {
        w.push((b, s));
    }
    FreeWord(w).reduce()
}

// Calibration of the Maslov loop. MU_BASE is the half-turn count of the
// loop at the single crossing of the identity diagram, which has index 0.
const MU_BASE: i64 = calibration::MU_BASE;

mod calibration {
    pub const MU_BASE: i64 = 0;
}

/// Maslov index of each crossing with the wall, in wall order.
///
/// The loop runs from the basepoint along the anchor, docks onto the arc
/// just short of their shared endpoint, returns along the arc to the
/// crossing, climbs the wall and comes back to the basepoint along the top;
/// a fixed cap closes it up so the turning is a whole number of half turns.
/// On top of the loop count, every westbound crossing passed earlier along
/// the arc contributes one extra full turn: the reversal convention at the
/// junction unwinds exactly that much, and the differential's degree shift
/// pins the correction.
pub fn maslov_indices(
    arc: &Realization,
    anchor: &Realization,
    wall: usize,
) -> Result<Vec<i64>> {
    let crossings = arc.wall_crossings(wall);
    let mut out = Vec::with_capacity(crossings.len());
    for c in &crossings {
        let loop_path = mu_loop(arc, anchor, c)?;
        let half_turns = turning_number(&loop_path)?;
        if half_turns % 2 != 0 {
            return Err(Error::NonTransverse(
                "maslov loop turned an odd number of half turns".into(),
            ));
        }
        let w = half_turns / 2;
        let bit = i64::from(crossing_sign(c) < 0);
        out.push(2 * (w - MU_BASE) + bit);
    }
    Ok(out)
}

/// The closed loop whose turning computes the Maslov index of `c`.
#[doc(hidden)]
///
/// The anchor is rerouted just short of the terminal puncture onto the arc's
/// final run. When the two approach from opposite sides the anchor's tail is
/// swung over the top of the puncture first; swinging below would cross the
/// cut ray and change the class. The reversal onto the backward arc always
/// rotates the tangent through the upward direction.
pub fn mu_loop(arc: &Realization, anchor: &Realization, c: &WallCrossing) -> Result<Vec<Pt>> {
    if anchor.start != ArcEnd::Basepoint {
        return Err(Error::NonTransverse("anchor must start at the basepoint".into()));
    }
    if arc.end != anchor.end {
        return Err(Error::NonTransverse(
            "anchor and arc must share their terminal puncture".into(),
        ));
    }
    let apath = &anchor.path;
    let path = &arc.path;
    if apath.len() < 3 || path.len() < 3 {
        return Err(Error::NonTransverse("degenerate realization".into()));
    }
    let corner = *path.last().unwrap();
    let zero = rat(0, 1);

    let a_attach = apath[apath.len() - 2];
    let attach = path[path.len() - 2];
    if a_attach.y != zero || attach.y != zero {
        return Err(Error::NonTransverse("unexpected corner approach shape".into()));
    }
    // approach germs: +1 when heading east into the corner
    let g_anc: i8 = if a_attach.x < corner.x { 1 } else { -1 };
    let g_arc: i8 = if attach.x < corner.x { 1 } else { -1 };

    let u0 = arc.unit * anchor.unit * rat(1, 4);
    let half = |a: Rat, b: Rat| (a + b) * rat(1, 2);

    let mut v: Vec<Pt> = Vec::new();
    // anchor trimmed to a point short of the corner, keeping its horizontal germ
    v.extend_from_slice(&apath[..apath.len() - 1]);
    let q = Pt::new(half(a_attach.x, corner.x), zero);
    push_dedup(&mut v, q);

    // landing point on the arc's final run, heading backward after the turn
    let mut xb = half(attach.x, corner.x);
    let mut cur_x = q.x;
    let mut cur_dir = g_anc;

    if g_anc != g_arc {
        // swing the tail over the top of the puncture to the arc's side
        let z1 = u0 * rat(2, 1);
        let land = half(xb, corner.x);
        push_dedup(&mut v, Pt::new(cur_x, z1));
        push_dedup(&mut v, Pt::new(land, z1));
        push_dedup(&mut v, Pt::new(land, zero));
        cur_x = land;
        cur_dir = g_arc;
        if xb == cur_x {
            xb = half(attach.x, xb);
        }
    }
    // reversal through the upward direction onto the backward arc; the
    // extension point sits strictly between the two tracks and the corner
    let ext = if cur_dir > 0 {
        half(cur_x.max(xb), corner.x)
    } else {
        half(cur_x.min(xb), corner.x)
    };
    push_dedup(&mut v, Pt::new(ext, zero));
    push_dedup(&mut v, Pt::new(ext, u0));
    push_dedup(&mut v, Pt::new(xb, u0));
    push_dedup(&mut v, Pt::new(xb, zero));

    // backward along the arc to the crossing
    push_dedup(&mut v, attach);
    for i in (c.seg + 1..path.len() - 2).rev() {
        push_dedup(&mut v, path[i]);
    }
    push_dedup(&mut v, c.pos);
    // up the wall and back along the top
    let delta = rat(2, 1) - c.pos.y;
    let top_track = rat(2, 1) - delta * rat(1, 2);
    push_dedup(&mut v, Pt::new(c.pos.x, top_track));
    push_dedup(&mut v, Pt::new(rat(1, 2), top_track));
    // cap west of the basepoint, closing into the anchor's initial descent
    push_dedup(&mut v, Pt::new(rat(1, 4), top_track));
    push_dedup(&mut v, Pt::new(rat(1, 4), rat(9, 4)));
    push_dedup(&mut v, Pt::new(rat(1, 2), rat(9, 4)));
    Ok(v)
}

fn push_dedup(v: &mut Vec<Pt>, p: Pt) {
    if v.last() != Some(&p) {
        v.push(p);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::curve::{anchor_arc, base_arc};

    fn p(x: i64, y: i64) -> Pt {
        Pt::new(rat(x, 1), rat(y, 1))
    }

    #[test]
    fn turning_of_squares() {
        let sq = vec![p(0, 0), p(1, 0), p(1, 1), p(0, 1)];
        assert_eq!(turning_number(&sq).unwrap(), 2);
        let sq_cw: Vec<Pt> = sq.iter().rev().copied().collect();
        assert_eq!(turning_number(&sq_cw).unwrap(), -2);
    }

    #[test]
    fn turning_of_figure_eight() {
        let fig = vec![
            p(0, 0),
            p(2, 0),
            p(2, 1),
            p(1, 1),
            p(1, -1),
            p(0, -1),
        ];
        assert_eq!(turning_number(&fig).unwrap(), 0);
    }

    #[test]
    fn turning_rejects_degenerate_input() {
        assert!(turning_number(&[p(0, 0), p(0, 0), p(1, 0)]).is_err());
        assert!(turning_number(&[p(0, 0), p(1, 0), p(2, 0)]).is_err());
    }

    #[test]
    fn identity_gradings_are_zero() {
        for n in 2..=4 {
            for j in 1..n {
                let arc = base_arc(n, j).unwrap().realize().unwrap();
                let anchor = anchor_arc(n, j).unwrap().realize().unwrap();
                let a = alexander_levels(&arc, &anchor.word, j);
                assert_eq!(a, vec![0], "alexander n={n} j={j}");
                let mu = maslov_indices(&arc, &anchor, j).unwrap();
                assert_eq!(mu, vec![0], "maslov n={n} j={j}");
                let xs = arc.wall_crossings(j);
                assert_eq!(crossing_sign(&xs[0]), 1);
            }
        }
    }

    #[test]
    fn b2_half_twist_gradings() {
        let w = BraidWord::parse(2, "1").unwrap();
        let arc_code = base_arc(2, 1).unwrap().apply_braid(&w).unwrap();
        let anchor_code = anchor_arc(2, 1).unwrap().apply_braid(&w).unwrap();
        let (_, core, h) = arc_code.split_winds();
        let arc = arc_code.canonicalize().realize().unwrap();
        assert!(core.is_empty());
        let synced = synced_anchor_word(&anchor_code.word, arc_code.end, h);
        let a = alexander_levels(&arc, &synced, 1);
        assert_eq!(a, vec![1]);
        let xs = arc.wall_crossings(1);
        assert_eq!(crossing_sign(&xs[0]), -1);

        let anchor_draw = crate::curve::CurveDiagram {
            n: 2,
            start: crate::curve::ArcEnd::Basepoint,
            end: arc_code.end,
            word: synced,
        }
        .realize()
        .unwrap();
        let mu = maslov_indices(&arc, &anchor_draw, 1).unwrap();
        assert_eq!(mu, vec![1]);
    }

    #[test]
    fn b2_full_twist_gradings() {
        let w = BraidWord::parse(2, "1 1").unwrap();
        let arc_code = base_arc(2, 1).unwrap().apply_braid(&w).unwrap();
        let anchor_code = anchor_arc(2, 1).unwrap().apply_braid(&w).unwrap();
        let (_, core, h) = arc_code.split_winds();
        assert!(core.is_empty());
        let arc = arc_code.canonicalize().realize().unwrap();
        let synced = synced_anchor_word(&anchor_code.word, arc_code.end, h);
        let a = alexander_levels(&arc, &synced, 1);
        assert_eq!(a, vec![2]);
        let xs = arc.wall_crossings(1);
        assert_eq!(crossing_sign(&xs[0]), 1);

        let anchor_draw = crate::curve::CurveDiagram {
            n: 2,
            start: crate::curve::ArcEnd::Basepoint,
            end: arc_code.end,
            word: synced,
        }
        .realize()
        .unwrap();
        let mu = maslov_indices(&arc, &anchor_draw, 1).unwrap();
        assert_eq!(mu, vec![2]);
    }
}
