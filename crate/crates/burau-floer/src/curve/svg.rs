//! SVG export of a realized diagram: punctures, walls, cut rays and the arc.

use super::realize::{Pt, Realization};
use std::fmt::Write;

fn fx(v: num::rational::Ratio<i64>) -> String {
    let f = *v.numer() as f64 / *v.denom() as f64;
    format!("{:.4}", f * 60.0 + 80.0)
}

fn fy(v: num::rational::Ratio<i64>) -> String {
    let f = *v.numer() as f64 / *v.denom() as f64;
    format!("{:.4}", 200.0 - f * 60.0)
}

fn pt(p: Pt) -> String {
    format!("{},{}", fx(p.x), fy(p.y))
}

/// Byte-stable rendering for a fixed input.
pub fn render(r: &Realization) -> String {
    let n = r.n as i64;
    let mut s = String::new();
    let width = 60.0 * (n as f64 + 1.0) + 160.0;
    let _ = writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width:.0}\" height=\"400\" viewBox=\"0 0 {width:.0} 400\">"
    );
    let _ = writeln!(
        s,
        "  <rect x=\"{}\" y=\"{}\" width=\"{:.4}\" height=\"{:.4}\" fill=\"none\" stroke=\"#999\"/>",
        fx(num::rational::Ratio::new(0, 1)),
        fy(num::rational::Ratio::new(2, 1)),
        60.0 * (n as f64 + 1.0),
        240.0
    );
    for i in 1..n {
        let x = num::rational::Ratio::new(2 * i + 1, 2);
        let _ = writeln!(
            s,
            "  <line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#4a90d9\" stroke-width=\"1\"/>",
            fx(x),
            fy(num::rational::Ratio::new(2, 1)),
            fy(num::rational::Ratio::new(-2, 1))
        );
    }
    for k in 1..=n {
        let x = num::rational::Ratio::new(k, 1);
        let _ = writeln!(
            s,
            "  <line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"#bbb\" stroke-dasharray=\"3,3\"/>",
            fx(x),
            fy(num::rational::Ratio::new(0, 1)),
            fy(num::rational::Ratio::new(-2, 1))
        );
        let _ = writeln!(
            s,
            "  <circle cx=\"{}\" cy=\"{}\" r=\"3\" fill=\"#000\"/>",
            fx(x),
            fy(num::rational::Ratio::new(0, 1))
        );
    }
    let base = Pt::new(
        num::rational::Ratio::new(1, 2),
        num::rational::Ratio::new(2, 1),
    );
    let _ = writeln!(
        s,
        "  <circle cx=\"{}\" cy=\"{}\" r=\"2.5\" fill=\"#c0392b\"/>",
        fx(base.x),
        fy(base.y)
    );
    let points: Vec<String> = r.path.iter().map(|p| pt(*p)).collect();
    let _ = writeln!(
        s,
        "  <polyline points=\"{}\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"1.5\"/>",
        points.join(" ")
    );
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::base_arc;

    #[test]
    fn svg_is_deterministic() {
        let r = base_arc(3, 1).unwrap().realize().unwrap();
        let a = render(&r);
        let b = render(&r);
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.contains("polyline"));
    }
}
