//! Text and JSON formats for matrices, posets and hereditary collections.
//!
//! Matrix text format: blank lines and lines starting with `#` are skipped;
//! the first line holds the row and column counts, each following line one
//! row of `0`, `1`, `g` symbols (whitespace between symbols is optional).
//!
//! ```text
//! 2 3
//! 1 0 g
//! 0 1 1
//! ```
//!
//! JSON shapes:
//!
//! * matrix: `{"rows": 2, "cols": 2, "entries": [["1", "g"], ["0", "1"]]}`
//!   with optional `row_labels` and `col_labels`;
//! * poset: `{"elements": ["a", "b"], "covers": [["a", "b"]]}`, where
//!   `covers` may be replaced by `le` (any generating relation) or `matrix`
//!   (rows of the 0/1 structure matrix as strings such as `"110"`);
//! * hereditary collection: `{"ground": ["1", "2"], "bases": [["1", "2"]]}`,
//!   or `family` listing every member.

use serde::{Deserialize, Serialize};

use crate::bits::{self, Mask};
use crate::hereditary::HeredCollection;
use crate::{Caps, Error, Poset, Result, SbMatrix, SbScalar};

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn json_error(e: serde_json::Error) -> Error {
    parse_error(e.line(), e.column(), e.to_string())
}

fn symbols(line: &str, line_no: usize) -> Result<Vec<SbScalar>> {
    line.char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| {
            SbScalar::from_symbol(c)
                .ok_or_else(|| parse_error(line_no, i + 1, format!("unexpected `{c}`")))
        })
        .collect()
}

pub fn parse_matrix_text(text: &str) -> Result<SbMatrix> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, 1, "empty input"))?;
    let dims: Vec<usize> = header
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| parse_error(line_no, 1, "expected `rows cols`"))?;
    let [rows, cols] = dims[..] else {
        return Err(parse_error(line_no, 1, "expected `rows cols`"));
    };
    let mut entries = Vec::with_capacity(rows * cols);
    let mut seen = 0;
    for (line_no, line) in lines {
        if seen == rows {
            return Err(parse_error(line_no, 1, format!("more than {rows} rows")));
        }
        let row = symbols(line, line_no)?;
        if row.len() != cols {
            return Err(parse_error(
                line_no,
                1,
                format!("expected {cols} entries, found {}", row.len()),
            ));
        }
        entries.extend(row);
        seen += 1;
    }
    if seen != rows {
        let last = text.lines().count().max(1);
        return Err(parse_error(
            last,
            1,
            format!("expected {rows} rows, found {seen}"),
        ));
    }
    SbMatrix::new(rows, cols, entries)
}

pub fn matrix_to_text(m: &SbMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|x| x.to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<SbScalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    row_labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    col_labels: Option<Vec<String>>,
}

pub fn parse_matrix_json(text: &str) -> Result<SbMatrix> {
    let raw: MatrixJson = serde_json::from_str(text).map_err(json_error)?;
    if raw.entries.len() != raw.rows {
        return Err(Error::Shape {
            rows: raw.rows,
            cols: raw.cols,
            found: raw.entries.iter().map(Vec::len).sum(),
        });
    }
    if let Some(bad) = raw.entries.iter().find(|r| r.len() != raw.cols) {
        return Err(Error::Shape {
            rows: raw.rows,
            cols: raw.cols,
            found: bad.len(),
        });
    }
    let m = SbMatrix::new(
        raw.rows,
        raw.cols,
        raw.entries.into_iter().flatten().collect(),
    )?;
    let row_labels = raw.row_labels.unwrap_or_else(|| m.row_labels().to_vec());
    let col_labels = raw.col_labels.unwrap_or_else(|| m.col_labels().to_vec());
    m.with_labels(row_labels, col_labels)
}

pub fn matrix_to_json(m: &SbMatrix) -> String {
    let raw = MatrixJson {
        rows: m.rows(),
        cols: m.cols(),
        entries: m.to_rows(),
        row_labels: Some(m.row_labels().to_vec()),
        col_labels: Some(m.col_labels().to_vec()),
    };
    serde_json::to_string_pretty(&raw).expect("serializable")
}

/// JSON if the input starts with `{`, text otherwise.
pub fn parse_matrix(text: &str) -> Result<SbMatrix> {
    if text.trim_start().starts_with('{') {
        parse_matrix_json(text)
    } else {
        parse_matrix_text(text)
    }
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PosetJson {
    elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    covers: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    le: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    matrix: Option<Vec<String>>,
}

fn lookup(labels: &[String], name: &str) -> Result<usize> {
    labels
        .iter()
        .position(|l| l == name)
        .ok_or_else(|| Error::UnknownLabel(name.to_string()))
}

fn pairs(labels: &[String], raw: &[(String, String)]) -> Result<Vec<(usize, usize)>> {
    raw.iter()
        .map(|(a, b)| Ok((lookup(labels, a)?, lookup(labels, b)?)))
        .collect()
}

/// Parses and validates a poset. A `matrix` is checked as given (it must be
/// reflexive, antisymmetric and transitive); `covers` and `le` are closed
/// reflexively and transitively.
pub fn parse_poset_json(text: &str) -> Result<Poset> {
    let raw: PosetJson = serde_json::from_str(text).map_err(json_error)?;
    let mut seen = std::collections::HashSet::new();
    if let Some(dup) = raw.elements.iter().find(|e| !seen.insert(*e)) {
        return Err(parse_error(0, 0, format!("duplicate element `{dup}`")));
    }
    match (&raw.covers, &raw.le, &raw.matrix) {
        (Some(c), None, None) => {
            Poset::from_covers(raw.elements.clone(), &pairs(&raw.elements, c)?)
        }
        (None, Some(le), None) => {
            Poset::from_le_pairs(raw.elements.clone(), &pairs(&raw.elements, le)?)
        }
        (None, None, Some(rows)) => {
            let rows = rows
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    symbols(r, 0).map_err(|e| match e {
                        Error::Parse {
                            column, message, ..
                        } => parse_error(0, column, format!("matrix[{i}]: {message}")),
                        other => other,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Poset::from_structure_matrix(raw.elements.clone(), SbMatrix::from_rows(rows)?)
        }
        _ => Err(parse_error(
            1,
            1,
            "expected exactly one of `covers`, `le`, `matrix`",
        )),
    }
}

pub fn poset_to_json(p: &Poset) -> String {
    let labels = p.labels();
    let raw = PosetJson {
        elements: labels.to_vec(),
        covers: Some(
            p.covering_relation()
                .iter()
                .map(|&(a, b)| (labels[a].clone(), labels[b].clone()))
                .collect(),
        ),
        le: None,
        matrix: None,
    };
    serde_json::to_string_pretty(&raw).expect("serializable")
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HeredJson {
    ground: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    bases: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family: Option<Vec<Vec<String>>>,
}

fn masks(ground: &[String], sets: &[Vec<String>]) -> Result<Vec<Mask>> {
    if ground.len() > bits::MAX_MASK_ELEMENTS {
        return Err(Error::TooManyElements {
            what: "hereditary ground set",
            size: ground.len(),
            limit: bits::MAX_MASK_ELEMENTS,
        });
    }
    sets.iter()
        .map(|s| s.iter().try_fold(0, |m, x| Ok(m | 1 << lookup(ground, x)?)))
        .collect()
}

pub fn parse_hered_json(text: &str, caps: &Caps) -> Result<HeredCollection> {
    let raw: HeredJson = serde_json::from_str(text).map_err(json_error)?;
    match (&raw.bases, &raw.family) {
        (Some(b), None) => {
            HeredCollection::from_bases(raw.ground.clone(), &masks(&raw.ground, b)?, caps)
        }
        (None, Some(f)) => HeredCollection::new(raw.ground.clone(), masks(&raw.ground, f)?, caps),
        _ => Err(parse_error(
            1,
            1,
            "expected exactly one of `bases`, `family`",
        )),
    }
}

pub fn hered_to_json(h: &HeredCollection) -> String {
    let ground = h.ground();
    let raw = HeredJson {
        ground: ground.to_vec(),
        bases: Some(
            h.bases()
                .into_iter()
                .map(|b| bits::iter(b).map(|x| ground[x].clone()).collect())
                .collect(),
        ),
        family: None,
    };
    serde_json::to_string_pretty(&raw).expect("serializable")
}
