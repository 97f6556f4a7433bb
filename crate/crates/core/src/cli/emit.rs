//! Matrix output formats.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::DenseMatrix;
use crate::scalar::C64;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Pretty,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "pretty" => Ok(Format::Pretty),
            other => Err(Error::invalid(format!("unknown format {other:?}"))),
        }
    }
}

/// Renders a matrix alone: JSON in the shared schema, CSV with one row per
/// line, or aligned text with small dyadic fractions.
pub fn emit(m: &DenseMatrix, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string(m).expect("matrix serializes"),
        Format::Csv => {
            let mut out = String::new();
            for i in 0..m.rows() {
                let line: Vec<String> = m.row(i).iter().map(|&z| csv_scalar(z)).collect();
                out.push_str(&line.join(","));
                out.push('\n');
            }
            out
        }
        Format::Pretty => {
            let cells: Vec<Vec<String>> = (0..m.rows())
                .map(|i| m.row(i).iter().map(|&z| pretty_scalar(z)).collect())
                .collect();
            let width = cells.iter().flatten().map(|c| c.chars().count()).max().unwrap_or(0);
            let mut out = String::new();
            for row in cells {
                let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                out.push_str(line.join("  ").trim_end());
                out.push('\n');
            }
            out
        }
    }
}

/// `re`, or `re+imj` / `re-imj` when the imaginary part is nonzero.
fn csv_scalar(z: C64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}-{}j", z.re, -z.im)
    } else {
        format!("{}+{}j", z.re, z.im)
    }
}

/// `p/q` for dyadic values with `q ≤ 4`, otherwise the shortest decimal.
fn pretty_real(x: f64) -> String {
    let q = x * 4.0;
    if q.fract() == 0.0 && q.abs() < 1e15 {
        let mut num = q as i64;
        let mut den = 4;
        while den > 1 && num % 2 == 0 {
            num /= 2;
            den /= 2;
        }
        if den == 1 {
            format!("{num}")
        } else {
            format!("{num}/{den}")
        }
    } else {
        format!("{x}")
    }
}

fn pretty_scalar(z: C64) -> String {
    if z.im == 0.0 {
        pretty_real(z.re)
    } else if z.im < 0.0 {
        format!("{}-{}i", pretty_real(z.re), pretty_real(-z.im))
    } else {
        format!("{}+{}i", pretty_real(z.re), pretty_real(z.im))
    }
}
