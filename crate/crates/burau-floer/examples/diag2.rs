use burau_floer::curve::{anchor_arc, base_arc};
use burau_floer::floer::{build_cell_with_arc, insert_hairpin};

fn main() {
    let arc2 = insert_hairpin(&base_arc(3, 2).unwrap(), 1, 1, 0);
    let drawn2 = arc2.realize().unwrap();
    println!("word: {}", drawn2.word);
    for c in drawn2.wall_crossings(1) {
        println!(
            "W1 crossing: y={} chord={} dir={} lb={}",
            c.pos.y, c.chord, c.dir, c.letters_before
        );
    }
    let anchor2 = anchor_arc(3, 2).unwrap();
    let c12 = build_cell_with_arc(&drawn2, &anchor2.word, 1, 2).unwrap();
    for g in &c12.generators {
        println!(
            "gen: rank={} pos={} A={} mu={} sign={}",
            g.rank_on_wall, g.position_on_arc, g.alexander, g.maslov, g.sign
        );
    }
    println!("d = {:?}", c12.d);
}
