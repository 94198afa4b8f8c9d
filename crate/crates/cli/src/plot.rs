use std::fmt::Write;

use cogfis::analysis::VariantId;

use crate::table::SweepCsv;

const WIDTH: f64 = 720.0;
const HEIGHT: f64 = 440.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 190.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;
const COLORS: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
];

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn series_name(key: &str) -> String {
    key.parse::<VariantId>()
        .map(|v| v.title().to_owned())
        .unwrap_or_else(|_| key.to_owned())
}

fn axis_name(key: &str) -> String {
    key.replace('_', " ")
}

fn span(lo: f64, hi: f64) -> (f64, f64) {
    if hi > lo {
        (lo, hi)
    } else {
        (lo - 1.0, hi + 1.0)
    }
}

/// Static line chart, one polyline per series.
pub fn line_chart(data: &SweepCsv, y_label: &str) -> String {
    let (x0, x1) = span(
        data.xs.iter().cloned().fold(f64::INFINITY, f64::min),
        data.xs.iter().cloned().fold(f64::NEG_INFINITY, f64::max),
    );
    let all_y = data.ys.iter().flatten().cloned();
    let (y0, y1) = span(
        all_y.clone().fold(f64::INFINITY, f64::min).min(0.0),
        all_y.fold(f64::NEG_INFINITY, f64::max).max(100.0),
    );
    let pw = WIDTH - LEFT - RIGHT;
    let ph = HEIGHT - TOP - BOTTOM;
    let sx = |x: f64| LEFT + (x - x0) / (x1 - x0) * pw;
    let sy = |y: f64| TOP + ph - (y - y0) / (y1 - y0) * ph;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        s,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        s,
        r#"<rect x="{LEFT}" y="{TOP}" width="{pw}" height="{ph}" fill="none" stroke="black"/>"#
    );
    for k in 0..=5 {
        let t = f64::from(k) / 5.0;
        let (xv, yv) = (x0 + t * (x1 - x0), y0 + t * (y1 - y0));
        let (px, py) = (sx(xv), sy(yv));
        let _ = writeln!(
            s,
            r#"<line x1="{px:.2}" y1="{b:.2}" x2="{px:.2}" y2="{b2:.2}" stroke="black"/><text x="{px:.2}" y="{ty:.2}" text-anchor="middle">{xv}</text>"#,
            b = TOP + ph,
            b2 = TOP + ph + 5.0,
            ty = TOP + ph + 20.0,
            xv = trim(xv),
        );
        let _ = writeln!(
            s,
            r#"<line x1="{l2:.2}" y1="{py:.2}" x2="{LEFT}" y2="{py:.2}" stroke="black"/><text x="{tx:.2}" y="{ty:.2}" text-anchor="end">{yv}</text>"#,
            l2 = LEFT - 5.0,
            tx = LEFT - 8.0,
            ty = py + 4.0,
            yv = trim(yv),
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
        LEFT + pw / 2.0,
        HEIGHT - 15.0,
        escape(&axis_name(&data.x_label))
    );
    let _ = writeln!(
        s,
        r#"<text x="18" y="{:.2}" text-anchor="middle" transform="rotate(-90 18 {:.2})">{}</text>"#,
        TOP + ph / 2.0,
        TOP + ph / 2.0,
        escape(&axis_name(y_label))
    );
    for (k, (name, ys)) in data.series.iter().zip(&data.ys).enumerate() {
        let color = COLORS[k % COLORS.len()];
        let points: Vec<String> = data
            .xs
            .iter()
            .zip(ys)
            .map(|(&x, &y)| format!("{:.2},{:.2}", sx(x), sy(y)))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline fill="none" stroke="{color}" stroke-width="2" points="{}"/>"#,
            points.join(" ")
        );
        let ly = TOP + 10.0 + 20.0 * k as f64;
        let lx = WIDTH - RIGHT + 15.0;
        let _ = writeln!(
            s,
            r#"<line x1="{lx}" y1="{ly}" x2="{:.1}" y2="{ly}" stroke="{color}" stroke-width="2"/><text x="{:.1}" y="{:.1}">{}</text>"#,
            lx + 25.0,
            lx + 30.0,
            ly + 4.0,
            escape(&series_name(name))
        );
    }
    s.push_str("</svg>\n");
    s
}

fn trim(v: f64) -> String {
    let s = format!("{v:.2}");
    s.trim_end_matches('0').trim_end_matches('.').to_owned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::parse_sweep_csv;

    #[test]
    fn one_polyline_per_series() {
        let data = parse_sweep_csv(
            "snr,gaussian-mamdani,triangular-mamdani,constant-sugeno,linear-sugeno\n10,1,2,3,4\n20,5,6,7,8\n",
        )
        .unwrap();
        let svg = line_chart(&data, "handoff_status");
        assert_eq!(svg.matches("<polyline").count(), 4);
        assert!(svg.contains("Triangular Mamdani"));
        assert!(svg.contains(">snr<"));
        assert!(svg.contains(">handoff status<"));
        assert!(!svg.contains("<script"));
    }

    #[test]
    fn flat_data_does_not_divide_by_zero() {
        let data = parse_sweep_csv("x,a\n5,50\n").unwrap();
        let svg = line_chart(&data, "y");
        assert!(!svg.contains("NaN") && !svg.contains("inf"));
    }
}
