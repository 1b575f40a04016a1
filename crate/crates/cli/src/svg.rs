//! Deterministic SVG output: fixed element order and six-decimal coordinates.

use std::fmt::Write;

use hyperk::ApproxCircle;

pub const PANEL_WIDTH: f64 = 600.0;
pub const PANEL_HEIGHT: f64 = 300.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Geodesic,
    Horocycle,
    Hypercycle,
    Fault,
}

impl Style {
    fn stroke(self) -> (&'static str, &'static str) {
        match self {
            Style::Geodesic => ("#1f4e9c", ""),
            Style::Horocycle => ("#b03a2e", ""),
            Style::Hypercycle => ("#1e8449", ""),
            Style::Fault => ("#000000", " stroke-dasharray=\"6 4\""),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Panel {
    pub title: String,
    pub paths: Vec<(Vec<(f64, f64)>, Style)>,
    pub points: Vec<(f64, f64)>,
}

impl Panel {
    pub fn new(title: impl Into<String>) -> Self {
        Panel {
            title: title.into(),
            paths: Vec::new(),
            points: Vec::new(),
        }
    }

    /// Adds the part of `c` above the axis, split where it leaves the view.
    pub fn add_circle(&mut self, c: &ApproxCircle, style: Style, view: &View) {
        for run in trace(c, view) {
            self.paths.push((run, style));
        }
    }
}

/// Real-axis window and visible height.
#[derive(Clone, Copy, Debug)]
pub struct View {
    pub xmin: f64,
    pub xmax: f64,
    pub height: f64,
}

impl View {
    fn inside(&self, p: (f64, f64)) -> bool {
        let mx = (self.xmax - self.xmin) * 0.05;
        p.1 > 0.0 && p.1 <= self.height * 1.05 && p.0 >= self.xmin - mx && p.0 <= self.xmax + mx
    }

    fn px(&self, p: (f64, f64)) -> (f64, f64) {
        let x = (p.0 - self.xmin) / (self.xmax - self.xmin) * PANEL_WIDTH;
        let y = PANEL_HEIGHT - p.1 / self.height * (PANEL_HEIGHT - 20.0);
        (x, y)
    }
}

/// Points of `c` in the view, as maximal connected runs.
fn trace(c: &ApproxCircle, view: &View) -> Vec<Vec<(f64, f64)>> {
    const N: usize = 1440;
    let [a, b, cc, d] = c.coeffs();
    let pts: Vec<(f64, f64)> = if a.abs() < 1e-300 {
        // line b x + c y + d = 0
        let span = (view.xmax - view.xmin).max(view.height) * 4.0;
        let norm = (b * b + cc * cc).sqrt();
        let (nx, ny) = (b / norm, cc / norm);
        let base = (-d * nx / norm, -d * ny / norm);
        let dir = (-ny, nx);
        (0..=N)
            .map(|i| {
                let s = -span + 2.0 * span * i as f64 / N as f64;
                (base.0 + s * dir.0, base.1 + s * dir.1)
            })
            .collect()
    } else {
        let ((x0, y0), r) = match c.center_radius() {
            Some(v) => v,
            None => return Vec::new(),
        };
        (0..=N)
            .map(|i| {
                let t = std::f64::consts::TAU * i as f64 / N as f64;
                (x0 + r * t.cos(), y0 + r * t.sin())
            })
            .collect()
    };
    let mut runs: Vec<Vec<(f64, f64)>> = Vec::new();
    let mut cur: Vec<(f64, f64)> = Vec::new();
    for p in pts {
        if view.inside(p) {
            cur.push(p);
        } else if !cur.is_empty() {
            runs.push(std::mem::take(&mut cur));
        }
    }
    if !cur.is_empty() {
        runs.push(cur);
    }
    // a closed circle wholly inside the view starts and ends at the same run
    if runs.len() > 1 {
        let (first, last) = (runs[0][0], *runs.last().unwrap().last().unwrap());
        if (first.0 - last.0).abs() < 1e-12 && (first.1 - last.1).abs() < 1e-12 {
            let mut tail = runs.pop().unwrap();
            tail.extend(runs.remove(0));
            runs.insert(0, tail);
        }
    }
    runs.into_iter().filter(|r| r.len() > 1).collect()
}

fn f6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

pub fn render(panels: &[Panel], view: &View) -> String {
    let n = panels.len().max(1);
    let width = PANEL_WIDTH * n as f64;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\">",
        f6(width),
        f6(PANEL_HEIGHT + 20.0),
        f6(width),
        f6(PANEL_HEIGHT + 20.0)
    );
    let _ = writeln!(
        out,
        "<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>",
        f6(width),
        f6(PANEL_HEIGHT + 20.0)
    );
    let empty = [Panel::new("")];
    let list: &[Panel] = if panels.is_empty() { &empty } else { panels };
    for (k, panel) in list.iter().enumerate() {
        let _ = writeln!(
            out,
            "<g transform=\"translate({},0)\">",
            f6(PANEL_WIDTH * k as f64)
        );
        let (ax0, ay) = view.px((view.xmin, 0.0));
        let (ax1, _) = view.px((view.xmax, 0.0));
        let _ = writeln!(
            out,
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#555555\" stroke-width=\"1\"/>",
            f6(ax0),
            f6(ay),
            f6(ax1),
            f6(ay)
        );
        if !panel.title.is_empty() {
            let _ = writeln!(
                out,
                "<text x=\"10\" y=\"16\" font-family=\"sans-serif\" font-size=\"13\">{}</text>",
                escape(&panel.title)
            );
        }
        for (path, style) in &panel.paths {
            let (color, dash) = style.stroke();
            let d: Vec<String> = path
                .iter()
                .map(|&p| {
                    let (x, y) = view.px(p);
                    format!("{},{}", f6(x), f6(y))
                })
                .collect();
            let _ = writeln!(
                out,
                "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"{dash}/>",
                d.join(" ")
            );
        }
        for &p in &panel.points {
            let (x, y) = view.px(p);
            let _ = writeln!(
                out,
                "<circle cx=\"{}\" cy=\"{}\" r=\"2.5\" fill=\"#000000\"/>",
                f6(x),
                f6(y)
            );
        }
        let _ = writeln!(out, "</g>");
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}
