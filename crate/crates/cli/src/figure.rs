//! SVG rendering of an evaluated `.geo` program.
//!
//! The picture is fitted to the bounding box of the finite points plus a
//! 10% margin and scaled so the longer side is `SIZE` pixels. Points and
//! lines are emitted in declaration order. Ideal points, the line at
//! infinity and lines that miss the view go to a text legend.

use desargues::dsl::{EvalReport, Program, Statement, Value};
use desargues::projective::{to_affine, ProjLine, ProjPoint, Rational};
use num_traits::ToPrimitive;

const SIZE: f64 = 600.0;
const LEGEND_ROW: f64 = 16.0;

fn f(q: &Rational) -> f64 {
    q.to_f64().expect("finite rational")
}

fn xy(p: &ProjPoint) -> Option<(f64, f64)> {
    to_affine(p).ok().map(|(x, y)| (f(&x), f(&y)))
}

/// Fixed two-decimal form without a negative zero.
fn num(x: f64) -> String {
    let s = format!("{x:.2}");
    if s == "-0.00" {
        "0.00".into()
    } else {
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

struct View {
    x0: f64,
    x1: f64,
    y0: f64,
    y1: f64,
    scale: f64,
}

impl View {
    fn fit(points: &[(f64, f64)]) -> View {
        let (mut x0, mut x1, mut y0, mut y1) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
        for &(x, y) in points {
            x0 = x0.min(x);
            x1 = x1.max(x);
            y0 = y0.min(y);
            y1 = y1.max(y);
        }
        if points.is_empty() {
            (x0, x1, y0, y1) = (-1.0, 1.0, -1.0, 1.0);
        }
        // a flat box borrows a tenth of the other side, a single point gets unit size
        let extent = (x1 - x0).max(y1 - y0);
        let floor = if extent > 0.0 { extent * 0.1 } else { 1.0 };
        let (w, h) = ((x1 - x0).max(floor), (y1 - y0).max(floor));
        let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
        let (w, h) = (w * 1.2, h * 1.2);
        View {
            x0: cx - w / 2.0,
            x1: cx + w / 2.0,
            y0: cy - h / 2.0,
            y1: cy + h / 2.0,
            scale: SIZE / w.max(h),
        }
    }

    fn width(&self) -> f64 {
        (self.x1 - self.x0) * self.scale
    }

    fn height(&self) -> f64 {
        (self.y1 - self.y0) * self.scale
    }

    fn px(&self, (x, y): (f64, f64)) -> (f64, f64) {
        ((x - self.x0) * self.scale, (self.y1 - y) * self.scale)
    }

    /// The part of `l` inside the view, as two end points.
    fn clip(&self, l: &ProjLine) -> Option<((f64, f64), (f64, f64))> {
        let c = l.coords();
        let (a, b, c) = (c[0].to_f64()?, c[1].to_f64()?, c[2].to_f64()?);
        let mut hits: Vec<(f64, f64)> = Vec::new();
        let eps = 1e-9 * (self.x1 - self.x0 + self.y1 - self.y0);
        if b != 0.0 {
            for x in [self.x0, self.x1] {
                let y = -(a * x + c) / b;
                if y >= self.y0 - eps && y <= self.y1 + eps {
                    hits.push((x, y));
                }
            }
        }
        if a != 0.0 {
            for y in [self.y0, self.y1] {
                let x = -(b * y + c) / a;
                if x >= self.x0 - eps && x <= self.x1 + eps {
                    hits.push((x, y));
                }
            }
        }
        let mut best: Option<((f64, f64), (f64, f64))> = None;
        let mut best_len = eps;
        for i in 0..hits.len() {
            for j in i + 1..hits.len() {
                let d = (hits[i].0 - hits[j].0).hypot(hits[i].1 - hits[j].1);
                if d > best_len {
                    best_len = d;
                    best = Some((hits[i], hits[j]));
                }
            }
        }
        best
    }
}

/// Renders the declared points and lines of `program` using the values in
/// `report`. Names whose declaration failed are skipped.
pub fn render(program: &Program, report: &EvalReport) -> String {
    let finite: Vec<(f64, f64)> = report
        .bindings
        .values()
        .filter_map(|v| match v {
            Value::Point(p) => xy(p),
            Value::Line(_) => None,
        })
        .collect();
    let view = View::fit(&finite);
    let mut body = String::new();
    let mut legend: Vec<String> = Vec::new();

    for st in &program.statements {
        let (name, value) = match st {
            Statement::Point { name, .. } | Statement::Line { name, .. } => match report.bindings.get(&name.name) {
                Some(v) => (escape(&name.name), v),
                None => continue,
            },
            Statement::Assert { .. } => continue,
        };
        match value {
            Value::Point(p) => match xy(p) {
                Some(at) => {
                    let (x, y) = view.px(at);
                    body += &format!(
                        "  <circle class=\"point\" cx=\"{}\" cy=\"{}\" r=\"3\"><title>{name}</title></circle>\n",
                        num(x),
                        num(y)
                    );
                    body += &format!(
                        "  <text class=\"label\" x=\"{}\" y=\"{}\">{name}</text>\n",
                        num(x + 5.0),
                        num(y - 5.0)
                    );
                }
                None => {
                    let c = p.coords();
                    legend.push(format!("{name}: ideal point, direction ({}, {})", c[0], c[1]));
                }
            },
            Value::Line(l) if l.is_at_infinity() => legend.push(format!("{name}: line at infinity")),
            Value::Line(l) => match view.clip(l) {
                Some((u, v)) => {
                    let ((x1, y1), (x2, y2)) = (view.px(u), view.px(v));
                    body += &format!(
                        "  <line class=\"line\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"><title>{name}</title></line>\n",
                        num(x1),
                        num(y1),
                        num(x2),
                        num(y2)
                    );
                    let (mx, my) = ((x1 + x2) / 2.0, (y1 + y2) / 2.0);
                    body += &format!(
                        "  <text class=\"line-label\" x=\"{}\" y=\"{}\">{name}</text>\n",
                        num(mx + 4.0),
                        num(my + 12.0)
                    );
                }
                None => legend.push(format!("{name}: line {l}, outside the view")),
            },
        }
    }

    let (w, h) = (view.width(), view.height());
    let total_h = if legend.is_empty() {
        h
    } else {
        h + LEGEND_ROW * (legend.len() as f64 + 0.5)
    };
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{th}\" viewBox=\"0 0 {w} {th}\">\n",
        w = num(w),
        th = num(total_h)
    );
    out += "  <style>.point{fill:#000}.line{stroke:#3a5f9f;stroke-width:1}\
            .label,.line-label,.legend{font:12px sans-serif}.line-label{fill:#3a5f9f}</style>\n";
    out += &format!(
        "  <rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#fff\"/>\n",
        num(w),
        num(total_h)
    );
    out += &body;
    for (i, entry) in legend.iter().enumerate() {
        out += &format!(
            "  <text class=\"legend\" x=\"4\" y=\"{}\">{}</text>\n",
            num(h + LEGEND_ROW * (i as f64 + 1.0)),
            entry
        );
    }
    out += "</svg>\n";
    out
}
