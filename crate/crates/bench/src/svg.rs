//! Standalone SVG rendering of a performance profile.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{BenchError, ProfileError};
use crate::profile::ProfileTable;

const WIDTH: f64 = 680.0;
const HEIGHT: f64 = 420.0;
const LEFT: f64 = 60.0;
const RIGHT: f64 = 150.0;
const TOP: f64 = 20.0;
const BOTTOM: f64 = 50.0;
const COLORS: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf",
];

struct Axis {
    tau_max: f64,
    log: bool,
}

impl Axis {
    fn x(&self, tau: f64) -> f64 {
        let w = WIDTH - LEFT - RIGHT;
        let frac = if self.log {
            tau.ln() / self.tau_max.ln()
        } else {
            (tau - 1.0) / (self.tau_max - 1.0)
        };
        LEFT + w * frac.clamp(0.0, 1.0)
    }

    fn y(&self, rho: f64) -> f64 {
        TOP + (HEIGHT - TOP - BOTTOM) * (1.0 - rho)
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn ticks(axis: &Axis) -> Vec<f64> {
    if axis.log {
        let mut t = vec![1.0];
        let mut v = 2.0;
        while v < axis.tau_max {
            t.push(v);
            v *= 2.0;
        }
        t.push(axis.tau_max);
        t
    } else {
        (0..=5)
            .map(|i| 1.0 + (axis.tau_max - 1.0) * i as f64 / 5.0)
            .collect()
    }
}

/// Renders one step curve per solver over `τ ∈ [1, tau_max]`.
pub fn render_profile_svg(
    profile: &ProfileTable,
    tau_max: f64,
    log_scale: bool,
) -> Result<String, ProfileError> {
    if !(tau_max > 1.0 && tau_max.is_finite()) {
        return Err(ProfileError::InvalidTauMax(tau_max));
    }
    let axis = Axis {
        tau_max,
        log: log_scale,
    };
    let (x0, x1) = (axis.x(1.0), axis.x(tau_max));
    let (y0, y1) = (axis.y(0.0), axis.y(1.0));
    let mut s = String::new();
    // writes into a String cannot fail
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<path d="M{x0:.2},{y1:.2} L{x0:.2},{y0:.2} L{x1:.2},{y0:.2}" fill="none" stroke="black"/>"#
    );
    for tau in ticks(&axis) {
        let x = axis.x(tau);
        let _ = writeln!(
            s,
            r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            y0 + 16.0,
            format_tick(tau)
        );
    }
    for i in 0..=4 {
        let rho = i as f64 / 4.0;
        let y = axis.y(rho);
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{rho}</text>"#,
            x0 - 6.0,
            y + 4.0
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">τ</text>"#,
        (x0 + x1) / 2.0,
        HEIGHT - 12.0
    );
    let _ = writeln!(
        s,
        r#"<text x="16" y="{:.2}" text-anchor="middle" transform="rotate(-90 16 {:.2})">ρ_s(τ)</text>"#,
        (y0 + y1) / 2.0,
        (y0 + y1) / 2.0
    );

    for (i, curve) in profile.curves.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        let mut pts: Vec<(f64, f64)> = Vec::new();
        let mut level = 0.0;
        for &(tau, rho) in curve.points.iter().filter(|(t, _)| *t <= tau_max) {
            if let Some(&(_, prev)) = pts.last() {
                pts.push((axis.x(tau), prev));
            }
            pts.push((axis.x(tau), axis.y(rho)));
            level = rho;
        }
        if pts.is_empty() {
            pts.push((x0, axis.y(level)));
        }
        pts.push((x1, axis.y(level)));
        let coords: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
        let _ = writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"#,
            coords.join(" ")
        );
        let ly = TOP + 14.0 + 18.0 * i as f64;
        let lx = WIDTH - RIGHT + 16.0;
        let _ = writeln!(
            s,
            r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="1.5"/>"#,
            lx + 24.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}">{}</text>"#,
            lx + 30.0,
            ly + 4.0,
            escape(&curve.solver)
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

fn format_tick(tau: f64) -> String {
    if (tau - tau.round()).abs() < 1e-9 {
        format!("{}", tau.round())
    } else {
        format!("{tau:.2}")
    }
}

pub fn emit_profile_svg(
    profile: &ProfileTable,
    path: &Path,
    tau_max: f64,
    log_scale: bool,
) -> Result<(), BenchError> {
    let text = render_profile_svg(profile, tau_max, log_scale)?;
    std::fs::write(path, text).map_err(|source| BenchError::Io {
        path: path.to_path_buf(),
        source,
    })
}
