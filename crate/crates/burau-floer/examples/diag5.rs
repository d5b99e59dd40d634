use burau_floer::braid::FreeWord;
use burau_floer::curve::{anchor_arc, base_arc, ArcEnd, CurveDiagram};
use burau_floer::floer::insert_hairpin;
use burau_floer::grading::{alexander_levels, maslov_indices};
use rand::{Rng, SeedableRng};

fn main() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
    let mut hist: std::collections::BTreeMap<(i64, i8, i8, bool, bool), usize> = Default::default();
    let mut shown = 0;
    for _case in 0..4000 {
        let n = rng.gen_range(2..5usize);
        let j = rng.gen_range(1..n);
        // random braid image first
        let len = rng.gen_range(0..4);
        let mut w = Vec::new();
        for _ in 0..len {
            let idx = rng.gen_range(1..n);
            let s: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
            w.push((idx, s));
        }
        let braid = burau_floer::braid::BraidWord::new(
            n,
            w.iter()
                .map(|&(index, sign)| burau_floer::braid::BraidGen { index, sign })
                .collect(),
        )
        .unwrap();
        let arc0 = base_arc(n, j).unwrap().apply_braid(&braid).unwrap();
        let anchor0 = anchor_arc(n, j).unwrap().apply_braid(&braid).unwrap();
        let (_, core, h) = arc0.split_winds();
        let canon = arc0.canonicalize();
        let _ = core;
        let synced = burau_floer::grading::synced_anchor_word(&anchor0.word, arc0.end, h);
        // insert 1-2 hairpins at random positions
        let mut arc = canon.clone();
        for _ in 0..rng.gen_range(1..3) {
            let k = rng.gen_range(1..=n);
            let s: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
            let pos = rng.gen_range(0..=arc.word.len());
            arc = insert_hairpin(&arc, k, s, pos);
        }
        let Ok(drawn) = arc.realize() else { continue };
        if drawn.check_embedded().is_err() {
            continue;
        }
        let anchor_draw = CurveDiagram {
            n,
            start: ArcEnd::Basepoint,
            end: arc.end,
            word: synced.clone(),
        };
        let Ok(anchor_r) = anchor_draw.realize() else { continue };
        for wall in 1..n {
            let xs = drawn.wall_crossings(wall);
            if xs.len() < 2 {
                continue;
            }
            let alex = alexander_levels(&drawn, &synced, wall);
            let Ok(mus) = maslov_indices(&drawn, &anchor_r, wall) else { continue };
            // candidate bigons by subword + quadrants only
            for a in 0..xs.len() {
                for b in 0..xs.len() {
                    if a == b || alex[a] != alex[b] {
                        continue;
                    }
                    let (x, y) = (&xs[a], &xs[b]);
                    let (lo, hi) = if x.chord <= y.chord { (x, y) } else { (y, x) };
                    let sub = FreeWord(
                        drawn.word.0[lo.letters_before..hi.letters_before].to_vec(),
                    );
                    if !sub.reduce().is_empty() {
                        continue;
                    }
                    let arc_toward_y: i8 = if y.chord >= x.chord { x.dir } else { -x.dir };
                    let wall_toward_y: i8 = if y.pos.y < x.pos.y { -1 } else { 1 };
                    if -wall_toward_y * arc_toward_y <= 0 {
                        continue;
                    }
                    let arc_toward_x: i8 = if x.chord >= y.chord { y.dir } else { -y.dir };
                    let wall_toward_x: i8 = -wall_toward_y;
                    if arc_toward_x * wall_toward_x <= 0 {
                        continue;
                    }
                    // candidate bigon x -> y: true delta = +1
                    let d = mus[b] - mus[a];
                    let xfirst = x.chord < y.chord;
                    let xabove = x.pos.y > y.pos.y;
                    *hist
                        .entry((d, x.dir, y.dir, xfirst, xabove))
                        .or_default() += 1;
                    let _ = shown;
                }
            }
        }
    }
    println!("(delta, x.dir, y.dir, x_first, x_above) -> count");
    for (k, v) in &hist {
        println!("  {k:?} -> {v}");
    }
}
