//! A minimal SVG line plot of scan columns against `p`.

use std::fmt::Write;

pub struct Series {
    pub label: String,
    pub colour: &'static str,
    pub points: Vec<(f64, f64)>,
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 50.0;

fn bounds(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if !lo.is_finite() {
        (0.0, 1.0)
    } else if lo == hi {
        (lo - 1.0, hi + 1.0)
    } else {
        (lo, hi)
    }
}

/// Each series is scaled to its own vertical range; the legend records it.
pub fn line_plot(title: &str, series: &[Series]) -> String {
    let (x0, x1) = bounds(series.iter().flat_map(|s| s.points.iter().map(|p| p.0)));
    let sx = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(out, r#"<text x="{}" y="24" font-family="sans-serif" font-size="16" text-anchor="middle">{}</text>"#, WIDTH / 2.0, escape(title));
    let (bottom, top) = (HEIGHT - MARGIN, MARGIN);
    let _ = writeln!(
        out,
        r#"<path d="M{MARGIN} {top} V{bottom} H{}" stroke="black" fill="none"/>"#,
        WIDTH - MARGIN
    );
    let _ = writeln!(out, r#"<text x="{MARGIN}" y="{}" font-family="sans-serif" font-size="12">p = {x0}</text>"#, bottom + 18.0);
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" text-anchor="end">p = {x1}</text>"#,
        WIDTH - MARGIN,
        bottom + 18.0
    );
    for (k, s) in series.iter().enumerate() {
        let (y0, y1) = bounds(s.points.iter().map(|p| p.1));
        let sy = |y: f64| bottom - (y - y0) / (y1 - y0) * (bottom - top);
        let path: Vec<String> = s.points.iter().map(|&(x, y)| format!("{:.1},{:.1}", sx(x), sy(y))).collect();
        let _ = writeln!(
            out,
            r#"<polyline points="{}" stroke="{}" stroke-width="2" fill="none"/>"#,
            path.join(" "),
            s.colour
        );
        let _ = writeln!(
            out,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="12" fill="{}">{} [{y0}, {y1}]</text>"#,
            MARGIN + 10.0,
            top + 16.0 * (k as f64 + 1.0),
            s.colour,
            escape(&s.label)
        );
    }
    out.push_str("</svg>\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plot_has_one_polyline_per_series() {
        let s = |label: &str, c| Series { label: label.into(), colour: c, points: vec![(1.0, 2.0), (2.0, -2.0)] };
        let svg = line_plot("a < b", &[s("signature", "steelblue"), s("det", "firebrick")]);
        assert!(svg.starts_with("<svg"));
        assert_eq!(svg.matches("<polyline").count(), 2);
        assert!(svg.contains("a &lt; b"));
        assert!(line_plot("empty", &[]).ends_with("</svg>\n"));
    }
}
