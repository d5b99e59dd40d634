use burau_floer::curve::{anchor_arc, base_arc, ArcEnd, CurveDiagram};
use burau_floer::floer::insert_hairpin;
use burau_floer::grading::{mu_loop, turning_number};

fn main() {
    let arc2 = insert_hairpin(&base_arc(3, 2).unwrap(), 1, 1, 0);
    let drawn = arc2.realize().unwrap();
    println!("arc path:");
    for p in &drawn.path {
        println!("  ({}, {})", p.x, p.y);
    }
    let anchor = CurveDiagram {
        n: 3,
        start: ArcEnd::Basepoint,
        end: drawn.end,
        word: anchor_arc(3, 2).unwrap().word,
    }
    .realize()
    .unwrap();
    println!("anchor path:");
    for p in &anchor.path {
        println!("  ({}, {})", p.x, p.y);
    }
    for c in drawn.wall_crossings(1) {
        let lp = mu_loop(&drawn, &anchor, &c).unwrap();
        println!("loop for crossing at y={} dir={}:", c.pos.y, c.dir);
        for p in &lp {
            println!("  ({}, {})", p.x, p.y);
        }
        println!("  half-turns: {}", turning_number(&lp).unwrap());
    }
}
