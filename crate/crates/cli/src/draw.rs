//! Static SVG rendering of a quasi-diagram: a regular n-gon with sides
//! labeled 1..n counterclockwise from the top, one straight chord between
//! the midpoints of each matched pair of sides, and a dot on each isolated
//! side. Purely presentational; output is byte-deterministic in the
//! diagram and the size flag.

use std::fmt::Write;

use quasidiagram::QuasiDiagram;

struct Point {
    x: f64,
    y: f64,
}

pub fn render(d: &QuasiDiagram, size: u32) -> String {
    let n = d.degree();
    let s = size as f64;
    let center = s / 2.0;
    let radius = s * 0.42;
    let tau = std::f64::consts::TAU;

    let vertex = |k: usize| -> Point {
        let angle = -tau / 4.0 + tau * k as f64 / n as f64;
        Point {
            x: center + radius * angle.cos(),
            y: center + radius * angle.sin(),
        }
    };
    // Midpoint of side i (1-based), joining vertices i-1 and i mod n.
    let side_mid = |i: usize| -> Point {
        let a = vertex(i - 1);
        let b = vertex(i % n);
        Point {
            x: (a.x + b.x) / 2.0,
            y: (a.y + b.y) / 2.0,
        }
    };
    let label_pos = |i: usize| -> Point {
        let m = side_mid(i);
        Point {
            x: center + (m.x - center) * 1.14,
            y: center + (m.y - center) * 1.14,
        }
    };

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">"
    );
    let points: Vec<String> = (0..n)
        .map(|k| {
            let v = vertex(k);
            format!("{:.2},{:.2}", v.x, v.y)
        })
        .collect();
    let _ = writeln!(
        out,
        "  <polygon points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>",
        points.join(" ")
    );
    for i in 1..=n {
        let p = label_pos(i);
        let _ = writeln!(
            out,
            "  <text x=\"{:.2}\" y=\"{:.2}\" font-size=\"{:.2}\" text-anchor=\"middle\" dominant-baseline=\"middle\">{i}</text>",
            p.x,
            p.y,
            s * 0.035
        );
    }
    for (a, b) in d.chords() {
        let pa = side_mid(a);
        let pb = side_mid(b);
        let _ = writeln!(
            out,
            "  <line x1=\"{:.2}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"crimson\" stroke-width=\"1.5\"/>",
            pa.x, pa.y, pb.x, pb.y
        );
    }
    for i in d.isolated_points() {
        let p = side_mid(i);
        let _ = writeln!(
            out,
            "  <circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"{:.2}\" fill=\"black\"/>",
            p.x,
            p.y,
            s * 0.008
        );
    }
    out.push_str("</svg>\n");
    out
}
