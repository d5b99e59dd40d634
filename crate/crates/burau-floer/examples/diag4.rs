use burau_floer::curve::{anchor_arc, base_arc, ArcEnd, CurveDiagram};
use burau_floer::floer::insert_hairpin;
use burau_floer::grading::{mu_loop, turning_number};

fn show(label: &str, n: usize, j: usize, k: usize, wall: usize) {
    println!("=== {label} ===");
    let arc = insert_hairpin(&base_arc(n, j).unwrap(), k, 1, 0);
    let drawn = arc.realize().unwrap();
    let anchor = CurveDiagram {
        n,
        start: ArcEnd::Basepoint,
        end: drawn.end,
        word: anchor_arc(n, j).unwrap().word,
    }
    .realize()
    .unwrap();
    for c in drawn.wall_crossings(wall) {
        let lp = mu_loop(&drawn, &anchor, &c).unwrap();
        let h = turning_number(&lp).unwrap();
        println!(
            "crossing y={} dir={} chord={}: half-turns={}",
            c.pos.y, c.dir, c.chord, h
        );
        let dirs: Vec<String> = lp
            .windows(2)
            .map(|w| {
                let dx = w[1].x - w[0].x;
                let dy = w[1].y - w[0].y;
                if dx > num::rational::Ratio::new(0, 1) {
                    "E".into()
                } else if dx < num::rational::Ratio::new(0, 1) {
                    "W".into()
                } else if dy > num::rational::Ratio::new(0, 1) {
                    "U".into()
                } else {
                    "D".into()
                }
            })
            .collect();
        println!("  dirs: {}", dirs.join(""));
    }
}

fn main() {
    show("east finger: cell (2,1), arc p1->p2 + finger to line 3", 3, 1, 3, 2);
    show("west finger: cell (1,2), arc p2->p3 + finger to line 1", 3, 2, 1, 1);
}
