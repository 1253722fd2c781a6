use std::fmt::Write as _;
use std::fs;
use std::io::Write;
use std::path::Path;

use super::{SummaryRow, TrialRecord};
use crate::error::{Error, Result};

pub const CSV_COLUMNS: [&str; 16] = [
    "q",
    "c",
    "n",
    "trial",
    "seed",
    "m",
    "orientable",
    "gap",
    "n1_core",
    "n2_core",
    "m_core",
    "n_core_plus",
    "largest_rigid_frac",
    "largest_connected_rigid_frac",
    "witness_size",
    "notes",
];

fn write_records<W: Write>(records: &[TrialRecord], out: W) -> std::result::Result<(), csv::Error> {
    let mut wtr = csv::WriterBuilder::new()
        .has_headers(false)
        .from_writer(out);
    wtr.write_record(CSV_COLUMNS)?;
    for r in records {
        wtr.serialize(r)?;
    }
    wtr.flush()?;
    Ok(())
}

/// Records as CSV text, header first. The header is written even when there
/// are no records.
pub fn csv_string(records: &[TrialRecord]) -> String {
    let mut buf = Vec::new();
    write_records(records, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("csv output is utf-8")
}

pub fn emit_csv(records: &[TrialRecord], path: &Path) -> Result<()> {
    let file = fs::File::create(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })?;
    write_records(records, file).map_err(|source| Error::Csv {
        path: path.to_path_buf(),
        source,
    })
}

pub fn read_csv(path: &Path) -> Result<Vec<TrialRecord>> {
    let csv_err = |source| Error::Csv {
        path: path.to_path_buf(),
        source,
    };
    let mut rdr = csv::Reader::from_path(path).map_err(csv_err)?;
    rdr.deserialize()
        .collect::<std::result::Result<_, _>>()
        .map_err(csv_err)
}

/// Writes `(measure, c, empirical, stderr, predicted)` rows for plotting.
pub fn emit_plotdata(summary: &[SummaryRow], path: &Path) -> Result<()> {
    let csv_err = |source| Error::Csv {
        path: path.to_path_buf(),
        source,
    };
    let mut wtr = csv::Writer::from_path(path).map_err(csv_err)?;
    wtr.write_record(["measure", "c", "empirical", "stderr", "predicted"])
        .map_err(csv_err)?;
    for row in summary {
        let predicted = row.predicted.map(|p| p.to_string()).unwrap_or_default();
        wtr.write_record([
            row.measure.clone(),
            row.c.to_string(),
            row.mean.to_string(),
            row.stderr.to_string(),
            predicted,
        ])
        .map_err(csv_err)?;
    }
    wtr.flush().map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

/// Line chart of every fraction-valued measure against `c`. Empirical means
/// are solid with markers, limits dashed.
pub fn render_svg(summary: &[SummaryRow]) -> String {
    const W: f64 = 720.0;
    const H: f64 = 440.0;
    const LEFT: f64 = 60.0;
    const RIGHT: f64 = 200.0;
    const TOP: f64 = 20.0;
    const BOTTOM: f64 = 50.0;

    let mut measures: Vec<&str> = Vec::new();
    for row in summary {
        if !measures.contains(&row.measure.as_str()) {
            measures.push(&row.measure);
        }
    }
    let (c_lo, c_hi) = summary
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), r| {
            (lo.min(r.c), hi.max(r.c))
        });
    let (c_lo, c_hi) = if c_lo.is_finite() && c_hi > c_lo {
        (c_lo, c_hi)
    } else if c_lo.is_finite() {
        (c_lo - 0.5, c_lo + 0.5)
    } else {
        (0.0, 1.0)
    };
    let y_hi = summary
        .iter()
        .flat_map(|r| [Some(r.mean), r.predicted])
        .flatten()
        .fold(1.0f64, f64::max);
    let px = |c: f64| LEFT + (c - c_lo) / (c_hi - c_lo) * (W - LEFT - RIGHT);
    let py = |y: f64| H - BOTTOM - y / y_hi * (H - TOP - BOTTOM);

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" font-family="sans-serif" font-size="11">"#
    );
    let _ = writeln!(svg, r#"<rect width="{W}" height="{H}" fill="white"/>"#);
    let (x0, x1, y0, y1) = (LEFT, W - RIGHT, py(0.0), py(y_hi));
    let _ = writeln!(
        svg,
        r#"<path d="M{x0},{y1} L{x0},{y0} L{x1},{y0}" stroke="black" fill="none"/>"#
    );
    for k in 0..=4 {
        let c = c_lo + (c_hi - c_lo) * k as f64 / 4.0;
        let y = y_hi * k as f64 / 4.0;
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">{c:.3}</text>"#,
            px(c),
            y0 + 16.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="end">{y:.2}</text>"#,
            x0 - 6.0,
            py(y) + 4.0
        );
    }
    let _ = writeln!(
        svg,
        r#"<text x="{:.1}" y="{:.1}" text-anchor="middle">c</text>"#,
        (x0 + x1) / 2.0,
        H - 12.0
    );

    for (k, measure) in measures.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let rows: Vec<&SummaryRow> = summary.iter().filter(|r| r.measure == *measure).collect();
        let line = |ys: &[(f64, f64)]| -> String {
            ys.iter()
                .enumerate()
                .map(|(i, &(c, y))| {
                    format!(
                        "{}{:.2},{:.2}",
                        if i == 0 { "M" } else { " L" },
                        px(c),
                        py(y)
                    )
                })
                .collect()
        };
        let empirical: Vec<(f64, f64)> = rows.iter().map(|r| (r.c, r.mean)).collect();
        let _ = writeln!(
            svg,
            r#"<path d="{}" stroke="{color}" fill="none" stroke-width="1.5"/>"#,
            line(&empirical)
        );
        for &(c, y) in &empirical {
            let _ = writeln!(
                svg,
                r#"<circle cx="{:.2}" cy="{:.2}" r="2.5" fill="{color}"/>"#,
                px(c),
                py(y)
            );
        }
        let predicted: Vec<(f64, f64)> = rows
            .iter()
            .filter_map(|r| r.predicted.map(|p| (r.c, p)))
            .collect();
        if !predicted.is_empty() {
            let _ = writeln!(
                svg,
                r#"<path d="{}" stroke="{color}" fill="none" stroke-dasharray="5,3"/>"#,
                line(&predicted)
            );
        }
        let ly = TOP + 16.0 * k as f64 + 8.0;
        let _ = writeln!(
            svg,
            r#"<line x1="{:.1}" y1="{ly:.1}" x2="{:.1}" y2="{ly:.1}" stroke="{color}" stroke-width="2"/>"#,
            x1 + 12.0,
            x1 + 30.0
        );
        let _ = writeln!(
            svg,
            r#"<text x="{:.1}" y="{:.1}">{measure}</text>"#,
            x1 + 36.0,
            ly + 4.0
        );
    }
    svg.push_str("</svg>\n");
    svg
}

pub fn emit_svg(summary: &[SummaryRow], path: &Path) -> Result<()> {
    fs::write(path, render_svg(summary)).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}
