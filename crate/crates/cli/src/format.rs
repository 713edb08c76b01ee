//! Locale-free text output. Reals use 17 significant digits in scientific
//! notation; integral values in matrices are written as integers.

use std::fmt::Write as _;
use std::path::Path;

use whn_core::{DenseMatrix, WignerField};

use crate::error::{CliError, CliResult};

/// 17 significant digits, e.g. `2.5000000000000000e-1`. Negative zero prints
/// as zero so equal states dump identically.
pub fn sig17(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

/// Integers exactly (below 2^53), everything else as [`sig17`].
pub fn number(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 9.007_199_254_740_992e15 {
        format!("{}", x as i64)
    } else {
        sig17(x)
    }
}

/// CSV with a header row of column labels and a leading label column.
pub fn labelled_matrix(m: &DenseMatrix<f64>, row_prefix: &str, col_prefix: &str) -> String {
    let mut out = String::new();
    for j in 0..m.cols() {
        write!(out, ",{col_prefix}{}", j + 1).unwrap();
    }
    out.push('\n');
    for i in 0..m.rows() {
        out.push_str(&format!("{row_prefix}{}", i + 1));
        for &x in m.row(i) {
            out.push(',');
            out.push_str(&number(x));
        }
        out.push('\n');
    }
    out
}

/// Field as CSV: header `p\q` then the position centres; one line per
/// momentum row from the largest `p` down, led by that row's centre.
pub fn field_csv(w: &WignerField<f64>) -> String {
    let g = w.grid();
    let mut out = String::from("p\\q");
    for i in 0..g.n_q() {
        out.push(',');
        out.push_str(&number(g.q(i)));
    }
    out.push('\n');
    for j in (0..g.n_p()).rev() {
        out.push_str(&number(g.p(j)));
        for &x in w.row(j) {
            out.push(',');
            out.push_str(&number(x));
        }
        out.push('\n');
    }
    out
}

pub fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    std::fs::write(path, contents).map_err(|e| CliError::io(path, e))
}

pub fn create_dir(path: &Path) -> CliResult<()> {
    std::fs::create_dir_all(path).map_err(|e| CliError::io(path, e))
}

pub fn read_file(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialise");
    s.push('\n');
    s
}
