// scratch diagnostic
use burau_floer::braid::BraidWord;
use burau_floer::curve::{ArcEnd, CurveDiagram};
use burau_floer::floer::BraidCurves;
use burau_floer::grading::{alexander_levels, maslov_indices};

fn main() {
    for k in -3i64..=4 {
        let txt = if k >= 0 {
            vec!["1"; k as usize].join(" ")
        } else {
            vec!["-1"; (-k) as usize].join(" ")
        };
        let w = BraidWord::parse(2, &txt).unwrap();
        let curves = BraidCurves::new(&w, true).unwrap();
        let (arc, anchor_word) = curves.drawn(1).unwrap();
        let a = alexander_levels(&arc, &anchor_word, 1);
        let anchor = CurveDiagram {
            n: 2,
            start: ArcEnd::Basepoint,
            end: arc.end,
            word: anchor_word.clone(),
        }
        .realize()
        .unwrap();
        let mu = maslov_indices(&arc, &anchor, 1).unwrap();
        let signs: Vec<i8> = arc.wall_crossings(1).iter().map(|c| c.dir).collect();
        println!(
            "k={k:+}: anchor_word={} A={a:?} mu={mu:?} dir={signs:?} (expect A=[{k}] mu=[{k}])",
            anchor_word
        );
    }
    // B3 diagonal cells of sigma_1
    for n in [3usize, 4] {
        for itxt in ["1", "2", "-1"] {
            let w = BraidWord::parse(n, itxt).unwrap();
            let curves = BraidCurves::new(&w, true).unwrap();
            for j in 1..n {
                let (arc, anchor_word) = curves.drawn(j).unwrap();
                let anchor = CurveDiagram {
                    n,
                    start: ArcEnd::Basepoint,
                    end: arc.end,
                    word: anchor_word.clone(),
                }
                .realize()
                .unwrap();
                for i in 1..n {
                    let xs = arc.wall_crossings(i);
                    if xs.is_empty() {
                        continue;
                    }
                    let a = alexander_levels(&arc, &anchor_word, i);
                    let mu = maslov_indices(&arc, &anchor, i).unwrap();
                    println!("n={n} w={itxt} cell({i},{j}): A={a:?} mu={mu:?}");
                }
            }
        }
    }
}
