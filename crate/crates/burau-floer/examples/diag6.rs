use burau_floer::braid::FreeWord;
use burau_floer::curve::{anchor_arc, base_arc, ArcEnd, CurveDiagram};
use burau_floer::floer::insert_hairpin;
use burau_floer::grading::{alexander_levels, maslov_indices};
use rand::{Rng, SeedableRng};

fn main() {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut printed = 0;
    for _case in 0..6000 {
        if printed > 40 {
            break;
        }
        let n = rng.gen_range(2..5usize);
        let j = rng.gen_range(1..n);
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
        let (_, _, h) = arc0.split_winds();
        let canon = arc0.canonicalize();
        let synced = burau_floer::grading::synced_anchor_word(&anchor0.word, arc0.end, h);
        let mut arc = canon.clone();
        for _ in 0..rng.gen_range(1..4) {
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
            if xs.len() < 3 {
                continue;
            }
            let alex = alexander_levels(&drawn, &synced, wall);
            let Ok(mus) = maslov_indices(&drawn, &anchor_r, wall) else { continue };
            // pairs
            let mut pairs = Vec::new();
            for a in 0..xs.len() {
                for b in 0..xs.len() {
                    if a == b || alex[a] != alex[b] {
                        continue;
                    }
                    let (x, y) = (&xs[a], &xs[b]);
                    let (lo, hi) = if x.chord <= y.chord { (x, y) } else { (y, x) };
                    let sub =
                        FreeWord(drawn.word.0[lo.letters_before..hi.letters_before].to_vec());
                    if !sub.reduce().is_empty() {
                        continue;
                    }
                    let arc_toward_y: i8 = if y.chord >= x.chord { x.dir } else { -x.dir };
                    let wall_toward_y: i8 = if y.pos.y < x.pos.y { -1 } else { 1 };
                    if -wall_toward_y * arc_toward_y <= 0 {
                        continue;
                    }
                    let arc_toward_x: i8 = if x.chord >= y.chord { y.dir } else { -y.dir };
                    if arc_toward_x * (-wall_toward_y) <= 0 {
                        continue;
                    }
                    pairs.push((a, b));
                }
            }
            if pairs.len() < 2 {
                continue;
            }
            printed += 1;
            // crossings in arc order with features
            let mut order: Vec<usize> = (0..xs.len()).collect();
            order.sort_by_key(|&i| xs[i].chord);
            println!("--- cell: n={n} j={j} wall={wall} word={}", drawn.word);
            for &i in &order {
                println!(
                    "  cross[{i}]: arcpos={} rank={} dir={} A={} mu={}",
                    xs[i].chord, i, xs[i].dir, alex[i], mus[i]
                );
            }
            for (a, b) in &pairs {
                println!(
                    "  pair {a}->{b}: delta_mu = {} (want 1)",
                    mus[*b] - mus[*a]
                );
            }
        }
    }
}
