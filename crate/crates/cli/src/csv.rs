//! Trajectory CSV: one row per sample, nine significant digits.

use std::fmt::Write as _;
use std::io::{self, Write};

use bellcorr_core::{sort_correlations, BellDiagonalParams, Sample};

use crate::error::{CliError, Result};

pub const HEADER: &str = "t,c1,c2,c3,c_minus,c_zero,c_plus,qg,cg";

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CsvRow {
    pub t: f64,
    pub c: [f64; 3],
    pub c_minus: f64,
    pub c_zero: f64,
    pub c_plus: f64,
    pub qg: f64,
    pub cg: f64,
}

impl CsvRow {
    pub fn new(t: f64, c: &BellDiagonalParams) -> Self {
        let s = sort_correlations(c);
        Self {
            t,
            c: c.to_array(),
            c_minus: s.c_minus(),
            c_zero: s.c_zero(),
            c_plus: s.c_plus(),
            qg: s.c_zero(),
            cg: s.c_plus(),
        }
    }

    pub fn fields(&self) -> [f64; 9] {
        let [c1, c2, c3] = self.c;
        [
            self.t,
            c1,
            c2,
            c3,
            self.c_minus,
            self.c_zero,
            self.c_plus,
            self.qg,
            self.cg,
        ]
    }

    fn from_fields(f: [f64; 9]) -> Self {
        Self {
            t: f[0],
            c: [f[1], f[2], f[3]],
            c_minus: f[4],
            c_zero: f[5],
            c_plus: f[6],
            qg: f[7],
            cg: f[8],
        }
    }
}

impl From<&Sample> for CsvRow {
    fn from(s: &Sample) -> Self {
        Self {
            t: s.time,
            c: s.correlations.to_array(),
            c_minus: s.sorted.c_minus(),
            c_zero: s.sorted.c_zero(),
            c_plus: s.sorted.c_plus(),
            qg: s.quantum,
            cg: s.classical,
        }
    }
}

fn push_value(out: &mut String, x: f64) {
    // "-0" would make otherwise equal files differ
    let x = if x == 0.0 { 0.0 } else { x };
    write!(out, "{x:.8e}").expect("writing to a String");
}

/// Renders the header and rows with `\n` line endings.
pub fn to_csv_string(rows: &[CsvRow]) -> String {
    let mut out = String::with_capacity(HEADER.len() + 1 + rows.len() * 140);
    out.push_str(HEADER);
    out.push('\n');
    for row in rows {
        for (i, x) in row.fields().into_iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            push_value(&mut out, x);
        }
        out.push('\n');
    }
    out
}

pub fn write_csv<W: Write>(mut w: W, rows: &[CsvRow]) -> io::Result<()> {
    w.write_all(to_csv_string(rows).as_bytes())?;
    w.flush()
}

/// Parses text produced by [`to_csv_string`].
pub fn parse_csv(text: &str) -> Result<Vec<CsvRow>> {
    let err = |line: usize, message: String| CliError::Parse {
        origin: format!("csv line {line}"),
        message,
    };
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == HEADER => {}
        other => return Err(err(1, format!("expected header, found {other:?}"))),
    }
    lines
        .enumerate()
        .map(|(i, line)| {
            let mut fields = [0.0; 9];
            let mut n = 0;
            for part in line.split(',') {
                if n == 9 {
                    return Err(err(i + 2, "more than 9 fields".into()));
                }
                fields[n] = part
                    .parse()
                    .map_err(|e| err(i + 2, format!("{part:?}: {e}")))?;
                n += 1;
            }
            if n != 9 {
                return Err(err(i + 2, format!("{n} fields, expected 9")));
            }
            Ok(CsvRow::from_fields(fields))
        })
        .collect()
}
