//! SVG 1.1 drawing of the plane projection `(T_a(t), T_b(t))`, `t in [-2, 2]`,
//! with the under-strand broken at every crossing.

use std::fmt::Write;

use super::KnotDiagram;

#[derive(Clone, Debug)]
pub struct SvgOptions {
    /// output width and height in pixels
    pub size: f64,
    /// samples along the curve
    pub samples: usize,
    /// length of the break in the under-strand, in plot units
    pub gap: f64,
    pub stroke_width: f64,
    pub grid: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            size: 480.0,
            samples: 4000,
            gap: 0.12,
            stroke_width: 2.0,
            grid: true,
        }
    }
}

fn point(a: u64, b: u64, t: f64) -> (f64, f64) {
    let th = (t / 2.0).clamp(-1.0, 1.0).acos();
    (2.0 * (a as f64 * th).cos(), 2.0 * (b as f64 * th).cos())
}

// |d/dt (T_a, T_b)| away from the endpoints
fn speed(a: u64, b: u64, t: f64) -> f64 {
    let th = (t / 2.0).clamp(-1.0, 1.0).acos();
    let s = th.sin().max(1e-9);
    let dx = a as f64 * (a as f64 * th).sin() / s;
    let dy = b as f64 * (b as f64 * th).sin() / s;
    dx.hypot(dy)
}

/// SVG document for a diagram.
pub fn render_svg(d: &KnotDiagram, opts: &SvgOptions) -> String {
    let margin = 0.2;
    let scale = opts.size / (4.0 + 2.0 * margin);
    let to_px = |(x, y): (f64, f64)| ((x + 2.0 + margin) * scale, (2.0 + margin - y) * scale);

    // parameter windows removed around each under-visit
    let mut cuts: Vec<(f64, f64)> = Vec::new();
    for cr in &d.crossings {
        // the larger-parameter visit is over exactly when qc_sign = +1
        let t_larger = cr.t_param.lo() > cr.s_param.hi();
        let under = if (cr.qc_sign > 0) == t_larger {
            &cr.s_param
        } else {
            &cr.t_param
        };
        let t = under.mid().to_f64();
        let eps = opts.gap / 2.0 / speed(d.a, d.b, t);
        cuts.push((t - eps, t + eps));
    }

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = opts.size
    );
    let _ = writeln!(
        out,
        r#"<title>C({}, {}, {}, {})</title>"#,
        d.a, d.b, d.c, d.phi
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    if opts.grid {
        let (x0, y0) = to_px((-2.0, 2.0));
        let (x1, y1) = to_px((2.0, -2.0));
        let _ = writeln!(
            out,
            r##"<rect x="{x0:.2}" y="{y0:.2}" width="{:.2}" height="{:.2}" fill="none" stroke="#bbbbbb" stroke-width="1"/>"##,
            x1 - x0,
            y1 - y0
        );
    }

    let n = opts.samples.max(16);
    let mut segment: Vec<(f64, f64)> = Vec::new();
    let mut paths: Vec<Vec<(f64, f64)>> = Vec::new();
    for k in 0..=n {
        let t = -2.0 + 4.0 * k as f64 / n as f64;
        if cuts.iter().any(|&(lo, hi)| t > lo && t < hi) {
            if segment.len() > 1 {
                paths.push(std::mem::take(&mut segment));
            }
            segment.clear();
            continue;
        }
        segment.push(to_px(point(d.a, d.b, t)));
    }
    if segment.len() > 1 {
        paths.push(segment);
    }
    for p in paths {
        let mut data = String::new();
        for (k, (x, y)) in p.iter().enumerate() {
            let _ = write!(data, "{}{x:.2},{y:.2}", if k == 0 { "M" } else { " L" });
        }
        let _ = writeln!(
            out,
            r#"<path d="{data}" fill="none" stroke="black" stroke-width="{}" stroke-linecap="round" stroke-linejoin="round"/>"#,
            opts.stroke_width
        );
    }
    let _ = writeln!(out, "</svg>");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{compute_diagram, Phi};

    #[test]
    fn renders_breaks() {
        let d = compute_diagram(3, 4, 5, &"0".parse::<Phi>().unwrap()).unwrap();
        let s = render_svg(&d, &SvgOptions::default());
        assert!(s.starts_with("<?xml"));
        assert!(s.contains(r#"version="1.1""#));
        // three crossings break one long path into four pieces
        assert_eq!(s.matches("<path").count(), 4);
        assert!(s.trim_end().ends_with("</svg>"));
    }
}
