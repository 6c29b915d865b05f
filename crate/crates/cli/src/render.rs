use std::fmt::Write;
use std::str::FromStr;

use chainiso::ExactInt;
use serde_json::{Number, Value};

/// Full-precision JSON number.
pub fn number(v: &ExactInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integer literal"))
}

pub fn json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serialisable");
    s.push('\n');
    s
}

/// Right-aligned columns separated by two spaces, one line per row.
pub fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = (0..cols)
            .map(|c| format!("{:>w$}", r.get(c).map_or("", String::as_str), w = widths[c]))
            .collect();
        writeln!(out, "{}", line.join("  ").trim_end()).unwrap();
    }
    out
}

pub fn csv(rows: &[Vec<String>]) -> String {
    rows.iter().map(|r| r.join(",") + "\n").collect()
}

pub fn bfile(terms: impl IntoIterator<Item = (u64, ExactInt)>) -> String {
    terms
        .into_iter()
        .map(|(i, v)| format!("{i} {v}\n"))
        .collect()
}

/// Triangle rows `rows[n][k]` as a grid with `n` in front and the sum behind.
/// Cells beyond the diagonal stay empty.
pub fn triangle_grid(corner: &str, rows: &[Vec<ExactInt>], sums: &[ExactInt]) -> Vec<Vec<String>> {
    let width = rows.len();
    let mut grid = vec![std::iter::once(corner.to_string())
        .chain((0..width).map(|k| k.to_string()))
        .chain(std::iter::once("sum".to_string()))
        .collect::<Vec<_>>()];
    for (n, (row, sum)) in rows.iter().zip(sums).enumerate() {
        let mut line = vec![n.to_string()];
        line.extend((0..width).map(|k| row.get(k).map_or(String::new(), ToString::to_string)));
        line.push(sum.to_string());
        grid.push(line);
    }
    grid
}
