//! SVG rendering of arrangements and experiment plots.
//!
//! Rendering is presentation-only: coordinates are converted to floating
//! point for drawing, while all accuracy claims stay with the JSON/CSV
//! payloads. The viewBox is the input bounding box plus a 5% margin.

use num_traits::ToPrimitive;

use crate::arrangement::{TopLevel, XBound};
use crate::{Rat, Seg2};

fn f(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(0.0)
}

struct Frame {
    min_x: f64,
    min_y: f64,
    width: f64,
    height: f64,
}

impl Frame {
    fn around(xs: &[f64], ys: &[f64]) -> Frame {
        let (mut lo_x, mut hi_x) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut lo_y, mut hi_y) = (f64::INFINITY, f64::NEG_INFINITY);
        for &x in xs {
            lo_x = lo_x.min(x);
            hi_x = hi_x.max(x);
        }
        for &y in ys {
            lo_y = lo_y.min(y);
            hi_y = hi_y.max(y);
        }
        let margin_x = 0.05 * (hi_x - lo_x).max(1.0);
        let margin_y = 0.05 * (hi_y - lo_y).max(1.0);
        Frame {
            min_x: lo_x - margin_x,
            min_y: lo_y - margin_y,
            width: (hi_x - lo_x) + 2.0 * margin_x,
            height: (hi_y - lo_y) + 2.0 * margin_y,
        }
    }

    /// Flip y so larger y renders higher.
    fn y(&self, y: f64) -> f64 {
        2.0 * self.min_y + self.height - y
    }
}

/// Draw a segment family and, optionally, its top level as a thick
/// polyline.
pub fn render_arrangement(segments: &[Seg2], level: Option<&TopLevel<Rat>>) -> String {
    let xs: Vec<f64> = segments
        .iter()
        .flat_map(|s| [f(&s.a().x), f(&s.b().x)])
        .collect();
    let ys: Vec<f64> = segments
        .iter()
        .flat_map(|s| [f(&s.a().y), f(&s.b().y)])
        .collect();
    let frame = Frame::around(&xs, &ys);
    let stroke = (frame.width.max(frame.height) / 300.0).max(1e-6);

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"{:.6} {:.6} {:.6} {:.6}\">\n",
        frame.min_x, frame.min_y, frame.width, frame.height
    ));
    for s in segments {
        out.push_str(&format!(
            "  <line x1=\"{:.6}\" y1=\"{:.6}\" x2=\"{:.6}\" y2=\"{:.6}\" stroke=\"black\" stroke-width=\"{:.6}\"/>\n",
            f(&s.a().x),
            frame.y(f(&s.a().y)),
            f(&s.b().x),
            frame.y(f(&s.b().y)),
            stroke
        ));
    }
    if let Some(level) = level {
        let lo_x = frame.min_x;
        let hi_x = frame.min_x + frame.width;
        let mut pts: Vec<(f64, f64)> = Vec::new();
        for i in 0..level.piece_count() {
            let range = level.piece_range(i);
            let a = match &range.lo {
                XBound::Finite(x) => f(x).max(lo_x),
                _ => lo_x,
            };
            let b = match &range.hi {
                XBound::Finite(x) => f(x).min(hi_x),
                _ => hi_x,
            };
            if a > b {
                continue;
            }
            let line = &level.lines()[level.piece_lines()[i]];
            let y_at = |x: f64| -> f64 {
                let (la, lb, lc) = (f(&line.a), f(&line.b), f(&line.c));
                -(la * x + lc) / lb
            };
            if pts.is_empty() {
                pts.push((a, y_at(a)));
            }
            pts.push((b, y_at(b)));
        }
        let path: Vec<String> = pts
            .iter()
            .map(|(x, y)| format!("{:.6},{:.6}", x, frame.y(*y)))
            .collect();
        out.push_str(&format!(
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"black\" stroke-width=\"{:.6}\"/>\n",
            path.join(" "),
            4.0 * stroke
        ));
    }
    out.push_str("</svg>\n");
    out
}

/// One labelled series for the count plot.
pub struct Series<'a> {
    pub label: &'a str,
    pub color: &'a str,
    /// (n, count) samples.
    pub points: Vec<(usize, f64)>,
}

/// Plot edge counts against n.
pub fn render_counts(series: &[Series<'_>]) -> String {
    const W: f64 = 640.0;
    const H: f64 = 420.0;
    const PAD: f64 = 48.0;
    let all: Vec<(usize, f64)> = series.iter().flat_map(|s| s.points.clone()).collect();
    if all.is_empty() {
        return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 640 420\"/>\n".into();
    }
    let n_min = all.iter().map(|p| p.0).min().unwrap() as f64;
    let n_max = all.iter().map(|p| p.0).max().unwrap() as f64;
    let c_max = all.iter().map(|p| p.1).fold(0.0f64, f64::max).max(1.0);
    let sx = |n: f64| PAD + (n - n_min) / (n_max - n_min).max(1.0) * (W - 2.0 * PAD);
    let sy = |c: f64| H - PAD - c / c_max * (H - 2.0 * PAD);

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {W} {H}\">\n"
    ));
    out.push_str(&format!(
        "  <line x1=\"{PAD}\" y1=\"{:.2}\" x2=\"{:.2}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
        H - PAD,
        W - PAD,
        H - PAD
    ));
    out.push_str(&format!(
        "  <line x1=\"{PAD}\" y1=\"{PAD}\" x2=\"{PAD}\" y2=\"{:.2}\" stroke=\"black\"/>\n",
        H - PAD
    ));
    for (si, s) in series.iter().enumerate() {
        let mut pts: Vec<(f64, f64)> = s
            .points
            .iter()
            .map(|&(n, c)| (sx(n as f64), sy(c)))
            .collect();
        pts.sort_by(|a, b| a.0.total_cmp(&b.0));
        let path: Vec<String> = pts
            .iter()
            .map(|(x, y)| format!("{x:.2},{y:.2}"))
            .collect();
        out.push_str(&format!(
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>\n",
            path.join(" "),
            s.color
        ));
        for (x, y) in &pts {
            out.push_str(&format!(
                "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\" fill=\"{}\"/>\n",
                s.color
            ));
        }
        out.push_str(&format!(
            "  <text x=\"{:.2}\" y=\"{:.2}\" fill=\"{}\" font-size=\"14\">{}</text>\n",
            W - PAD + 4.0,
            PAD + 18.0 * si as f64,
            s.color,
            s.label
        ));
    }
    out.push_str("</svg>\n");
    out
}
