//! Output files: atomic CSV writes and minimal static SVG plots.

use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::{CliError, Result};

/// Writes `contents` to `path` through a temporary file in the same
/// directory followed by a rename.
pub fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d.to_path_buf(),
        _ => PathBuf::from("."),
    };
    fs::create_dir_all(&dir).map_err(|e| CliError::io(&dir, e))?;
    let mut tmp = tempfile::NamedTempFile::new_in(&dir).map_err(|e| CliError::io(&dir, e))?;
    tmp.write_all(contents.as_bytes())
        .map_err(|e| CliError::io(path, e))?;
    tmp.persist(path).map_err(|e| CliError::io(path, e.error))?;
    Ok(())
}

const W: f64 = 640.0;
const H: f64 = 400.0;
const PAD: f64 = 48.0;

fn frame(title: &str, x: (f64, f64), y: (f64, f64)) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="20" text-anchor="middle">{}</text>"#,
        W / 2.0,
        escape(title)
    );
    let _ = writeln!(
        s,
        r#"<path d="M{PAD} {PAD} V{} H{}" fill="none" stroke="black"/>"#,
        H - PAD,
        W - PAD
    );
    let _ = writeln!(
        s,
        r#"<text x="{PAD}" y="{}" text-anchor="middle">{}</text><text x="{}" y="{}" text-anchor="middle">{}</text>"#,
        H - PAD + 16.0,
        x.0,
        W - PAD,
        H - PAD + 16.0,
        x.1
    );
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="end">{}</text><text x="{}" y="{}" text-anchor="end">{}</text>"#,
        PAD - 4.0,
        H - PAD,
        trim(y.0),
        PAD - 4.0,
        PAD + 4.0,
        trim(y.1)
    );
    s
}

fn trim(v: f64) -> String {
    if v.fract() == 0.0 {
        format!("{v}")
    } else {
        format!("{v:.3}")
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

fn sx(v: f64, x: (f64, f64)) -> f64 {
    let span = (x.1 - x.0).max(f64::EPSILON);
    PAD + (v - x.0) / span * (W - 2.0 * PAD)
}

fn sy(v: f64, y: (f64, f64)) -> f64 {
    let span = (y.1 - y.0).max(f64::EPSILON);
    H - PAD - (v - y.0) / span * (H - 2.0 * PAD)
}

const COLORS: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

/// Bar histograms sharing one x axis. Each series is `(label, [(lower, count)])`.
pub fn histogram_svg(title: &str, series: &[(&str, Vec<(f64, usize)>)], bin_width: f64) -> String {
    let xs = series.iter().flat_map(|(_, b)| b.iter().map(|p| p.0));
    let (lo, hi) = xs.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| {
        (a.min(v), b.max(v))
    });
    let (lo, hi) = if lo.is_finite() {
        (lo, hi + bin_width)
    } else {
        (0.0, 1.0)
    };
    let top = series
        .iter()
        .flat_map(|(_, b)| b.iter().map(|p| p.1))
        .max()
        .unwrap_or(1) as f64;
    let (x, y) = ((lo, hi), (0.0, top));
    let mut s = frame(title, x, y);
    for (k, (label, bins)) in series.iter().enumerate() {
        let color = COLORS[k % COLORS.len()];
        for &(edge, count) in bins {
            let x0 = sx(edge, x);
            let x1 = sx(edge + bin_width, x);
            let y0 = sy(count as f64, y);
            let _ = writeln!(
                s,
                r#"<rect x="{x0:.2}" y="{y0:.2}" width="{:.2}" height="{:.2}" fill="{color}" fill-opacity="0.7"/>"#,
                (x1 - x0).max(0.5),
                (H - PAD - y0).max(0.0)
            );
        }
        legend(&mut s, k, label, color);
    }
    s.push_str("</svg>\n");
    s
}

/// Polylines over a shared x axis. Each series is `(label, [(x, y)])`.
pub fn line_svg(title: &str, series: &[(&str, Vec<(f64, f64)>)]) -> String {
    let pts = || series.iter().flat_map(|(_, p)| p.iter().copied());
    let bounds = |f: fn((f64, f64)) -> f64| {
        pts()
            .map(f)
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| {
                (a.min(v), b.max(v))
            })
    };
    let x = bounds(|p| p.0);
    let y = bounds(|p| p.1);
    let (x, y) = if x.0.is_finite() {
        (x, y)
    } else {
        ((0.0, 1.0), (0.0, 1.0))
    };
    let mut s = frame(title, x, y);
    for (k, (label, points)) in series.iter().enumerate() {
        let color = COLORS[k % COLORS.len()];
        let path: Vec<String> = points
            .iter()
            .map(|&(a, b)| format!("{:.2},{:.2}", sx(a, x), sy(b, y)))
            .collect();
        let _ = writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"#,
            path.join(" ")
        );
        legend(&mut s, k, label, color);
    }
    s.push_str("</svg>\n");
    s
}

fn legend(s: &mut String, k: usize, label: &str, color: &str) {
    let y = PAD + 16.0 * k as f64;
    let _ = writeln!(
        s,
        r#"<rect x="{}" y="{}" width="10" height="10" fill="{color}"/><text x="{}" y="{}">{}</text>"#,
        W - PAD - 150.0,
        y,
        W - PAD - 135.0,
        y + 9.0,
        escape(label)
    );
}
