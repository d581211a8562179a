//! Diagram serialization: JSON documents, `p,q,value` CSV, and a
//! Macaulay2-style text table.
//!
//! Values are exact rationals written as `a` or `a/b`; JSON and CSV round
//! trip without loss.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use clap::ValueEnum;
use num::Zero;
use serde::{Deserialize, Serialize};

use crate::diagram::BettiDiagram;
use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational, Rational};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramDocument {
    pub schema_version: String,
    pub entries: Vec<DocumentEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocumentEntry {
    pub p: usize,
    pub q: i64,
    pub value: String,
}

impl From<&BettiDiagram> for DiagramDocument {
    fn from(d: &BettiDiagram) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            entries: d
                .iter()
                .map(|(p, q, v)| DocumentEntry {
                    p,
                    q,
                    value: format_rational(v),
                })
                .collect(),
        }
    }
}

impl TryFrom<DiagramDocument> for BettiDiagram {
    type Error = Error;

    fn try_from(doc: DiagramDocument) -> Result<Self> {
        if doc.schema_version != SCHEMA_VERSION {
            return Err(Error::Parse(format!(
                "unsupported schema_version {:?}",
                doc.schema_version
            )));
        }
        collect_cells(
            doc.entries
                .into_iter()
                .map(|e| Ok((e.p, e.q, parse_rational(&e.value)?))),
        )
    }
}

fn collect_cells<I>(cells: I) -> Result<BettiDiagram>
where
    I: IntoIterator<Item = Result<(usize, i64, Rational)>>,
{
    let mut seen = BTreeSet::new();
    let mut d = BettiDiagram::new();
    for cell in cells {
        let (p, q, v) = cell?;
        if !seen.insert((p, q)) {
            return Err(Error::Parse(format!("duplicate cell ({p},{q})")));
        }
        if v.is_zero() {
            return Err(Error::Parse(format!("zero value at ({p},{q})")));
        }
        d.add_to(p, q, &v);
    }
    Ok(d)
}

pub fn parse_diagram(text: &str, format: Format) -> Result<BettiDiagram> {
    match format {
        Format::Json => {
            let doc: DiagramDocument =
                serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
            doc.try_into()
        }
        Format::Csv => parse_csv(text),
        Format::Table => Err(Error::Parse("the table format is output only".into())),
    }
}

fn parse_csv(text: &str) -> Result<BettiDiagram> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let csv_err = |e: csv::Error| Error::Parse(e.to_string());
    let mut records = reader.records();
    let mut rows = Vec::new();
    let mut first = true;
    for record in records.by_ref() {
        let record = record.map_err(csv_err)?;
        if record.len() != 3 {
            return Err(Error::Parse(format!(
                "expected 3 fields p,q,value, got {}",
                record.len()
            )));
        }
        // the header row is optional on input
        if first && &record[0] == "p" && &record[1] == "q" && &record[2] == "value" {
            first = false;
            continue;
        }
        first = false;
        let p = record[0]
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad column index {:?}", &record[0])))?;
        let q = record[1]
            .parse::<i64>()
            .map_err(|_| Error::Parse(format!("bad row index {:?}", &record[1])))?;
        rows.push(parse_rational(&record[2]).map(|v| (p, q, v)));
    }
    collect_cells(rows)
}

pub fn render_diagram(d: &BettiDiagram, format: Format) -> String {
    match format {
        Format::Json => {
            let doc = DiagramDocument::from(d);
            let mut s = serde_json::to_string_pretty(&doc).expect("document serializes");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut s = String::from("p,q,value\n");
            for (p, q, v) in d.iter() {
                writeln!(s, "{p},{q},{}", format_rational(v)).unwrap();
            }
            s
        }
        Format::Table => render_table(d),
    }
}

/// Rows `q` ascending, columns `p` ascending, `.` for zero, with a `total:` line.
fn render_table(d: &BettiDiagram) -> String {
    let (Ok(pdim), Some((qmin, qmax))) = (d.projective_dimension(), d.row_range()) else {
        return String::from("(empty diagram)\n");
    };
    let cell = |p: usize, q: i64| d.get(p, q).map_or(".".to_string(), format_rational);
    let labels: Vec<String> = std::iter::once("total:".to_string())
        .chain((qmin..=qmax).map(|q| format!("{q}:")))
        .collect();
    let label_width = labels.iter().map(String::len).max().unwrap_or(0);

    let columns: Vec<Vec<String>> = (0..=pdim)
        .map(|p| {
            let mut col = vec![p.to_string(), format_rational(&d.column_sum(p))];
            col.extend((qmin..=qmax).map(|q| cell(p, q)));
            col
        })
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .map(|c| c.iter().map(String::len).max().unwrap_or(1))
        .collect();

    let mut out = String::new();
    for line in 0..columns[0].len() {
        let label = if line == 0 { "" } else { &labels[line - 1] };
        write!(out, "{label:>label_width$}").unwrap();
        for (col, width) in columns.iter().zip(&widths) {
            write!(out, " {:>width$}", col[line]).unwrap();
        }
        out.push('\n');
    }
    out
}
