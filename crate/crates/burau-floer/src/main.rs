//! Command line interface: Burau matrices, bigraded homology, the
//! categorification check, trivial-braid detection, diagrams and selftests.

use burau_floer::braid::BraidWord;
use burau_floer::curve::{base_arc, svg};
use burau_floer::floer::{build_complex, homology, BigradedGroup};
use burau_floer::laurent::burau_matrix;
use burau_floer::verify;
use clap::{Args, Parser, Subcommand};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "burau-floer", version, about = "bigraded intersection homology for braids")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct WordArgs {
    /// strand count
    #[arg(long)]
    n: usize,
    /// braid word, signed generator indices like "1 -2 1"
    #[arg(long, default_value = "")]
    word: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print the reduced Burau matrix of a braid word
    Burau {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        json: bool,
    },
    /// Print bigraded homology per cell with its Poincare polynomial
    Homology {
        #[command(flatten)]
        word: WordArgs,
        /// restrict to one cell "i,j"
        #[arg(long)]
        cell: Option<String>,
        /// keep the outermost twist unreduced
        #[arg(long)]
        unreduced: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check that every graded Euler characteristic equals the Burau entry
    CheckEuler {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether the braid word is trivial from its homology pattern
    DetectTrivial {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long)]
        json: bool,
    },
    /// Write an SVG of the image of a base arc under the braid
    Diagram {
        #[command(flatten)]
        word: WordArgs,
        /// index of the base arc to transport
        #[arg(long)]
        arc: usize,
        /// output path
        #[arg(long)]
        svg: String,
    },
    /// Run the built-in calibration and invariant checks
    Selftest,
}

fn parse_word(args: &WordArgs) -> Result<BraidWord, String> {
    BraidWord::parse(args.n, &args.word).map_err(|e| e.to_string())
}

fn parse_cell(s: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("bad cell {s:?}, expected \"i,j\""));
    }
    let i = parts[0].trim().parse().map_err(|_| format!("bad cell {s:?}"))?;
    let j = parts[1].trim().parse().map_err(|_| format!("bad cell {s:?}"))?;
    Ok((i, j))
}

fn poincare_polynomial(h: &BigradedGroup) -> String {
    if h.ranks.is_empty() {
        return "0".to_string();
    }
    let mut terms = Vec::new();
    for (&(l, k), &r) in &h.ranks {
        let mut t = String::new();
        if r != 1 {
            t.push_str(&r.to_string());
            t.push('*');
        }
        t.push_str(&format!("q^{l}*t^{k}"));
        terms.push(t);
    }
    terms.join(" + ")
}

fn homology_json(h: &BigradedGroup) -> serde_json::Value {
    let ranks: Vec<serde_json::Value> = h
        .ranks
        .iter()
        .map(|(&(l, k), &r)| serde_json::json!({"maslov": l, "alexander": k, "rank": r}))
        .collect();
    let torsion: Vec<serde_json::Value> = h
        .torsion
        .iter()
        .map(|(&(l, k), fs)| {
            serde_json::json!({
                "maslov": l,
                "alexander": k,
                "factors": fs.iter().map(|f| f.to_string()).collect::<Vec<_>>()
            })
        })
        .collect();
    serde_json::json!({"ranks": ranks, "torsion": torsion})
}

fn run() -> Result<i32, String> {
    let cli = Cli::parse();
    match cli.command {
        Command::Burau { word, json } => {
            let w = parse_word(&word)?;
            let m = burau_matrix(&w);
            if json {
                let out = serde_json::json!({
                    "command": "burau",
                    "n": w.n,
                    "word": w.to_string(),
                    "matrix": m.to_json(),
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                print!("{m}");
            }
            Ok(0)
        }
        Command::Homology {
            word,
            cell,
            unreduced,
            json,
        } => {
            let w = parse_word(&word)?;
            let cells: Vec<(usize, usize)> = match cell {
                Some(s) => vec![parse_cell(&s)?],
                None => (1..w.n)
                    .flat_map(|i| (1..w.n).map(move |j| (i, j)))
                    .collect(),
            };
            let mut rows = Vec::new();
            for (i, j) in cells {
                let c = build_complex(&w, i, j, !unreduced).map_err(|e| e.to_string())?;
                let h = homology(&c);
                if json {
                    rows.push(serde_json::json!({
                        "i": i,
                        "j": j,
                        "generators": c.generators.iter().map(|g| serde_json::json!({
                            "i": g.wall, "j": g.arc_index,
                            "rank_on_wall": g.rank_on_wall,
                            "alexander": g.alexander,
                            "maslov": g.maslov,
                            "sign": g.sign,
                        })).collect::<Vec<_>>(),
                        "differential": c.d.iter().enumerate().flat_map(|(y, row)| {
                            row.iter().enumerate().filter(|(_, v)| **v != 0)
                                .map(move |(x, v)| serde_json::json!([y, x, v]))
                        }).collect::<Vec<_>>(),
                        "homology": homology_json(&h),
                        "euler": h.euler().to_json(),
                    }));
                } else {
                    println!("cell ({i},{j}): {h}");
                    println!("  poincare: {}", poincare_polynomial(&h));
                    println!("  euler:    {}", h.euler());
                }
            }
            if json {
                let out = serde_json::json!({
                    "command": "homology",
                    "n": w.n,
                    "word": w.to_string(),
                    "cells": rows,
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            }
            Ok(0)
        }
        Command::CheckEuler { word, json } => {
            let w = parse_word(&word)?;
            let rep = verify::check_categorification(&w).map_err(|e| e.to_string())?;
            if json {
                let out = serde_json::json!({
                    "command": "check-euler",
                    "n": w.n,
                    "word": w.to_string(),
                    "pass": rep.pass,
                    "cells": rep.cells.iter().map(|c| serde_json::json!({
                        "i": c.i, "j": c.j,
                        "geometric": c.geometric.to_json(),
                        "algebraic": c.algebraic.to_json(),
                        "match": c.matches,
                    })).collect::<Vec<_>>(),
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else {
                for c in &rep.cells {
                    println!(
                        "cell ({},{}): {} = {} {}",
                        c.i,
                        c.j,
                        c.geometric,
                        c.algebraic,
                        if c.matches { "ok" } else { "MISMATCH" }
                    );
                }
                println!("{}", if rep.pass { "pass" } else { "fail" });
            }
            Ok(if rep.pass { 0 } else { 1 })
        }
        Command::DetectTrivial { word, json } => {
            let w = parse_word(&word)?;
            let rep = verify::detect_trivial(&w).map_err(|e| e.to_string())?;
            if json {
                let out = serde_json::json!({
                    "command": "detect-trivial",
                    "n": w.n,
                    "word": w.to_string(),
                    "trivial": rep.trivial,
                    "witness": rep.witness.map(|(i, j)| serde_json::json!([i, j])),
                });
                println!("{}", serde_json::to_string_pretty(&out).unwrap());
            } else if rep.trivial {
                println!("true");
            } else {
                let (i, j) = rep.witness.unwrap();
                println!("false (witness cell ({i},{j}))");
            }
            Ok(if rep.trivial { 0 } else { 1 })
        }
        Command::Diagram { word, arc, svg: path } => {
            let w = parse_word(&word)?;
            if arc == 0 || arc >= w.n {
                return Err(format!("arc index {arc} out of range"));
            }
            let img = base_arc(w.n, arc)
                .and_then(|c| c.apply_braid(&w))
                .map_err(|e| e.to_string())?
                .canonicalize();
            let r = img.realize().map_err(|e| e.to_string())?;
            std::fs::write(&path, svg::render(&r)).map_err(|e| e.to_string())?;
            println!("wrote {path}");
            Ok(0)
        }
        Command::Selftest => selftest(),
    }
}

fn selftest() -> Result<i32, String> {
    use burau_floer::grading::{alexander_levels, maslov_indices};
    let mut failures = 0;
    let mut check = |name: &str, ok: bool| {
        println!("{}: {}", name, if ok { "pass" } else { "FAIL" });
        if !ok {
            failures += 1;
        }
    };

    // algebraic relations
    let mut ok = true;
    for n in 2..=5usize {
        for i in 1..n.saturating_sub(1) {
            let a = BraidWord::parse(n, &format!("{i} {} {i}", i + 1)).unwrap();
            let b = BraidWord::parse(n, &format!("{} {i} {}", i + 1, i + 1)).unwrap();
            ok &= burau_matrix(&a) == burau_matrix(&b);
        }
    }
    check("burau braid relations", ok);

    // calibration: b11 of the positive half twist in B2
    let w = BraidWord::parse(2, "1").unwrap();
    let g = verify::geometric_burau(&w).map_err(|e| e.to_string())?;
    check(
        "b2 calibration b11 = -t",
        *g.get(1, 1) == burau_floer::laurent::LaurentPoly::monomial(1, -1),
    );

    // grading calibration on the b2 twists
    let mut ok = true;
    for (word, want_a, want_mu) in [("1", 1i64, 1i64), ("1 1", 2, 2)] {
        let w = BraidWord::parse(2, word).unwrap();
        let curves = burau_floer::floer::BraidCurves::new(&w, true).map_err(|e| e.to_string())?;
        let (arc, anchor_word) = curves.drawn(1).map_err(|e| e.to_string())?;
        let a = alexander_levels(&arc, &anchor_word, 1);
        let anchor = burau_floer::curve::CurveDiagram {
            n: 2,
            start: burau_floer::curve::ArcEnd::Basepoint,
            end: arc.end,
            word: anchor_word.clone(),
        }
        .realize()
        .map_err(|e| e.to_string())?;
        let mu = maslov_indices(&arc, &anchor, 1).map_err(|e| e.to_string())?;
        ok &= a == vec![want_a] && mu == vec![want_mu];
    }
    check("b2 grading calibration", ok);

    // euler characteristic against the matrix on all generators up to B4
    let mut ok = true;
    for n in 2..=4 {
        for i in 1..n {
            for s in ["", "-"] {
                let w = BraidWord::parse(n, &format!("{s}{i}")).unwrap();
                ok &= verify::check_categorification(&w)
                    .map_err(|e| e.to_string())?
                    .pass;
            }
        }
    }
    check("generator categorification", ok);

    // parity of every generator of a short corpus
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    let mut ok = true;
    for n in 2..=4usize {
        for _ in 0..5 {
            let w = verify::random_word(&mut rng, n, 4);
            for i in 1..n {
                for j in 1..n {
                    let c = build_complex(&w, i, j, true).map_err(|e| e.to_string())?;
                    for g in &c.generators {
                        ok &= (g.maslov.rem_euclid(2) == 0) == (g.sign == 1);
                    }
                }
            }
        }
    }
    check("parity of maslov index and sign", ok);

    if failures == 0 {
        println!("selftest: all checks passed");
        Ok(0)
    } else {
        println!("selftest: {failures} check(s) failed");
        Ok(1)
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(0) => ExitCode::from(0),
        Ok(code) => ExitCode::from(code as u8),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
