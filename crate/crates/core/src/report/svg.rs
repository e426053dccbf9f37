use std::fmt::Write as _;

use crate::bayes::{information_threshold, ThresholdPoint};
use crate::error::Result;

use super::curve::CurveSample;

/// `id` of the dashed vertical line drawn at the threshold.
pub const THRESHOLD_MARKER_ID: &str = "threshold-marker";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SvgOptions {
    pub width: f64,
    pub height: f64,
    pub margin: f64,
    pub annotate_threshold: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            width: 640.0,
            height: 640.0,
            margin: 60.0,
            annotate_threshold: true,
        }
    }
}

struct Frame {
    left: f64,
    top: f64,
    w: f64,
    h: f64,
}

impl Frame {
    fn x(&self, phi: f64) -> f64 {
        self.left + phi * self.w
    }

    fn y(&self, rho: f64) -> f64 {
        self.top + (1.0 - rho) * self.h
    }

    fn points(&self, pts: &[(f64, f64)]) -> String {
        let mut s = String::new();
        for (i, &(phi, rho)) in pts.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            let _ = write!(s, "{:.3},{:.3}", self.x(phi), self.y(rho));
        }
        s
    }
}

/// Self-contained SVG 1.1 plot of the curve. The part left of the threshold
/// and the part right of it are drawn as separate polylines in different
/// styles; with `annotate_threshold` a dashed vertical marker sits at
/// `phi_e`.
pub fn render_curve_svg(sample: &CurveSample, opts: &SvgOptions) -> Result<String> {
    let threshold: ThresholdPoint = information_threshold(sample.rates)?;
    let phi_e = threshold.phi_e.value();
    let rho_e = threshold.rho_e.value();
    let frame = Frame {
        left: opts.margin,
        top: opts.margin,
        w: opts.width - 2.0 * opts.margin,
        h: opts.height - 2.0 * opts.margin,
    };

    let raw: Vec<(f64, f64)> = sample
        .points
        .iter()
        .map(|(p, r)| (p.value(), r.value()))
        .collect();
    let mut below: Vec<(f64, f64)> = raw.iter().copied().filter(|&(p, _)| p < phi_e).collect();
    let mut above: Vec<(f64, f64)> = raw.iter().copied().filter(|&(p, _)| p > phi_e).collect();
    below.push((phi_e, rho_e));
    above.insert(0, (phi_e, rho_e));

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = opts.width,
        h = opts.height
    );
    let _ = writeln!(
        s,
        "  <title>Posterior vs prior, a={} b={}</title>",
        sample.rates.tpr(),
        sample.rates.tnr()
    );
    let _ = writeln!(
        s,
        r#"  <rect x="{:.3}" y="{:.3}" width="{:.3}" height="{:.3}" fill="white" stroke="black" stroke-width="1"/>"#,
        frame.left, frame.top, frame.w, frame.h
    );
    for i in 0..=4 {
        let t = f64::from(i) / 4.0;
        let _ = writeln!(
            s,
            r#"  <text x="{:.3}" y="{:.3}" font-size="12" text-anchor="middle">{t}</text>"#,
            frame.x(t),
            frame.y(0.0) + 18.0
        );
        let _ = writeln!(
            s,
            r#"  <text x="{:.3}" y="{:.3}" font-size="12" text-anchor="end">{t}</text>"#,
            frame.x(0.0) - 8.0,
            frame.y(t) + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"  <text x="{:.3}" y="{:.3}" font-size="14" text-anchor="middle">prior</text>"#,
        frame.x(0.5),
        frame.y(0.0) + 40.0
    );
    let _ = writeln!(
        s,
        r#"  <text x="{:.3}" y="{:.3}" font-size="14" text-anchor="middle" transform="rotate(-90 {:.3} {:.3})">posterior</text>"#,
        frame.x(0.0) - 40.0,
        frame.y(0.5),
        frame.x(0.0) - 40.0,
        frame.y(0.5)
    );
    // prior + posterior = 1
    let _ = writeln!(
        s,
        r#"  <line class="sum-line" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="gray" stroke-width="1" stroke-dasharray="2 3"/>"#,
        frame.x(0.0),
        frame.y(1.0),
        frame.x(1.0),
        frame.y(0.0)
    );
    let _ = writeln!(
        s,
        r#"  <polyline class="below-threshold" fill="none" stroke="steelblue" stroke-width="2" stroke-dasharray="8 4" points="{}"/>"#,
        frame.points(&below)
    );
    let _ = writeln!(
        s,
        r#"  <polyline class="above-threshold" fill="none" stroke="black" stroke-width="2" points="{}"/>"#,
        frame.points(&above)
    );
    if opts.annotate_threshold {
        let x = frame.x(phi_e);
        let _ = writeln!(
            s,
            r#"  <line id="{THRESHOLD_MARKER_ID}" data-phi-e="{phi_e}" x1="{x:.3}" y1="{:.3}" x2="{x:.3}" y2="{:.3}" stroke="red" stroke-width="1.5" stroke-dasharray="6 4"/>"#,
            frame.y(0.0),
            frame.y(1.0)
        );
        let _ = writeln!(
            s,
            r#"  <circle cx="{x:.3}" cy="{:.3}" r="4" fill="red"/>"#,
            frame.y(rho_e)
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}
