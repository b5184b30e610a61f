//! Minimal SVG overlays. Every renderer takes columns parsed back out
//! of the CSV it illustrates, so deleting the SVG and re-rendering
//! reproduces it byte for byte.

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 440.0;
const LEFT: f64 = 64.0;
const RIGHT: f64 = 616.0;
const TOP: f64 = 44.0;
const BOTTOM: f64 = 392.0;
const TICKS: usize = 5;

const PALETTE: [&str; 6] = [
    "#4363d8", "#e6194b", "#3cb44b", "#911eb4", "#f58231", "#469990",
];

#[derive(Clone, Copy, PartialEq)]
pub enum Mark {
    Points,
    Line,
}

pub struct Series {
    pub label: String,
    pub mark: Mark,
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
}

impl Series {
    pub fn new(label: &str, mark: Mark, xs: Vec<f64>, ys: Vec<f64>) -> Self {
        assert_eq!(xs.len(), ys.len(), "series length mismatch");
        Self {
            label: label.to_string(),
            mark,
            xs,
            ys,
        }
    }

    /// Line series sorted by x, NaN pairs dropped.
    pub fn sorted_line(label: &str, xs: &[f64], ys: &[f64]) -> Self {
        let mut pairs: Vec<(f64, f64)> = xs
            .iter()
            .zip(ys)
            .filter(|(x, y)| x.is_finite() && y.is_finite())
            .map(|(&x, &y)| (x, y))
            .collect();
        pairs.sort_by(|a, b| a.partial_cmp(b).expect("finite sort"));
        Self::new(
            label,
            Mark::Line,
            pairs.iter().map(|p| p.0).collect(),
            pairs.iter().map(|p| p.1).collect(),
        )
    }
}

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for v in values.filter(|v| v.is_finite()) {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if lo > hi {
        return (0.0, 1.0);
    }
    if lo == hi {
        return (lo - 0.5, hi + 0.5);
    }
    let pad = 0.04 * (hi - lo);
    (lo - pad, hi + pad)
}

fn tick_label(v: f64) -> String {
    let s = format!("{v:.4}");
    let trimmed = s.trim_end_matches('0').trim_end_matches('.');
    if trimmed == "-0" {
        "0".to_string()
    } else {
        trimmed.to_string()
    }
}

fn escape_text(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn render(title: &str, x_label: &str, y_label: &str, series: &[Series]) -> String {
    let (x_lo, x_hi) = bounds(series.iter().flat_map(|s| s.xs.iter().copied()));
    let (y_lo, y_hi) = bounds(series.iter().flat_map(|s| s.ys.iter().copied()));
    let px = |x: f64| LEFT + (x - x_lo) / (x_hi - x_lo) * (RIGHT - LEFT);
    let py = |y: f64| BOTTOM - (y - y_lo) / (y_hi - y_lo) * (BOTTOM - TOP);

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH} {HEIGHT}\" \
         font-family=\"monospace\" font-size=\"12\">\n"
    ));
    svg.push_str(&format!(
        "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"#ffffff\"/>\n"
    ));
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
        (LEFT + RIGHT) / 2.0,
        escape_text(title)
    ));

    for i in 0..=TICKS {
        let f = i as f64 / TICKS as f64;
        let xv = x_lo + f * (x_hi - x_lo);
        let yv = y_lo + f * (y_hi - y_lo);
        let xq = px(xv);
        let yq = py(yv);
        svg.push_str(&format!(
            "<line x1=\"{xq:.2}\" y1=\"{BOTTOM}\" x2=\"{xq:.2}\" y2=\"{TOP}\" stroke=\"#e0e0e0\"/>\n"
        ));
        svg.push_str(&format!(
            "<line x1=\"{LEFT}\" y1=\"{yq:.2}\" x2=\"{RIGHT}\" y2=\"{yq:.2}\" stroke=\"#e0e0e0\"/>\n"
        ));
        svg.push_str(&format!(
            "<text x=\"{xq:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{}</text>\n",
            BOTTOM + 16.0,
            tick_label(xv)
        ));
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"end\">{}</text>\n",
            LEFT - 6.0,
            yq + 4.0,
            tick_label(yv)
        ));
    }
    svg.push_str(&format!(
        "<rect x=\"{LEFT}\" y=\"{TOP}\" width=\"{:.2}\" height=\"{:.2}\" fill=\"none\" stroke=\"#333333\"/>\n",
        RIGHT - LEFT,
        BOTTOM - TOP
    ));

    for (i, s) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        match s.mark {
            Mark::Line => {
                let mut d = String::new();
                let mut pen_down = false;
                for (&x, &y) in s.xs.iter().zip(&s.ys) {
                    if !(x.is_finite() && y.is_finite()) {
                        pen_down = false;
                        continue;
                    }
                    d.push_str(&format!(
                        "{}{:.2},{:.2} ",
                        if pen_down { "L" } else { "M" },
                        px(x),
                        py(y)
                    ));
                    pen_down = true;
                }
                svg.push_str(&format!(
                    "<path d=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n",
                    d.trim_end()
                ));
            }
            Mark::Points => {
                for (&x, &y) in s.xs.iter().zip(&s.ys) {
                    if !(x.is_finite() && y.is_finite()) {
                        continue;
                    }
                    svg.push_str(&format!(
                        "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"2.5\" fill=\"{color}\" fill-opacity=\"0.7\"/>\n",
                        px(x),
                        py(y)
                    ));
                }
            }
        }
    }

    for (i, s) in series.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let y = TOP + 14.0 + 16.0 * i as f64;
        svg.push_str(&format!(
            "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"10\" height=\"10\" fill=\"{color}\"/>\n",
            RIGHT - 150.0,
            y - 9.0
        ));
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{y:.2}\">{}</text>\n",
            RIGHT - 136.0,
            escape_text(&s.label)
        ));
    }

    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{}</text>\n",
        (LEFT + RIGHT) / 2.0,
        HEIGHT - 10.0,
        escape_text(x_label)
    ));
    svg.push_str(&format!(
        "<text x=\"16\" y=\"{:.2}\" text-anchor=\"middle\" transform=\"rotate(-90 16 {:.2})\">{}</text>\n",
        (TOP + BOTTOM) / 2.0,
        (TOP + BOTTOM) / 2.0,
        escape_text(y_label)
    ));
    svg.push_str("</svg>\n");
    svg
}
