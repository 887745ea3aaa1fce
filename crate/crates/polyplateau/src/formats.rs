//! JSON and CSV encodings. Every count is written as a decimal string so
//! that consumers never have to hold more than 64 bits in a number.

use std::io;

use num_bigint::{BigInt, BigUint};
use polyplateau_core::{
    CellSet2D, CellSetD, CountTable, DirectedPlateauPolyhypercube, Plateau, SeriesPrefix,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error(transparent)]
    Shape(#[from] polyplateau_core::Error),
}

/// `[[column, row], ...]` in lexicographic order.
pub fn cells_2d_to_json(c: &CellSet2D) -> String {
    let pairs: Vec<[i64; 2]> = c.iter().map(|(x, y)| [x, y]).collect();
    serde_json::to_string(&pairs).expect("integer arrays always serialize")
}

pub fn cells_2d_from_json(s: &str) -> Result<CellSet2D, FormatError> {
    let pairs: Vec<[i64; 2]> = serde_json::from_str(s)?;
    Ok(pairs.into_iter().map(|[x, y]| (x, y)).collect())
}

#[derive(Debug, Serialize, Deserialize)]
struct CellsJson {
    d: usize,
    cells: Vec<Vec<i64>>,
}

/// `{"d": d, "cells": [[x1, ..., xd], ...]}` in lexicographic order.
pub fn cells_d_to_json(c: &CellSetD) -> String {
    let doc = CellsJson {
        d: c.dimension(),
        cells: c.iter().map(<[i64]>::to_vec).collect(),
    };
    serde_json::to_string(&doc).expect("integer arrays always serialize")
}

pub fn cells_d_from_json(s: &str) -> Result<CellSetD, FormatError> {
    let doc: CellsJson = serde_json::from_str(s)?;
    Ok(CellSetD::new(doc.d, doc.cells)?)
}

#[derive(Debug, Serialize, Deserialize)]
struct StratumJson {
    extents: Vec<u32>,
    offsets: Vec<i64>,
}

#[derive(Debug, Serialize, Deserialize)]
struct StrataJson {
    d: usize,
    strata: Vec<StratumJson>,
}

/// `{"d": d, "strata": [{"extents": [...], "offsets": [...]}, ...]}`.
pub fn dpp_to_json(p: &DirectedPlateauPolyhypercube) -> String {
    let doc = StrataJson {
        d: p.dimension(),
        strata: p
            .strata()
            .iter()
            .map(|s| StratumJson {
                extents: s.extents().to_vec(),
                offsets: s.offsets().to_vec(),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("integer arrays always serialize")
}

pub fn dpp_from_json(s: &str) -> Result<DirectedPlateauPolyhypercube, FormatError> {
    let doc: StrataJson = serde_json::from_str(s)?;
    let strata = doc
        .strata
        .into_iter()
        .map(|s| Plateau::new(s.extents, s.offsets))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DirectedPlateauPolyhypercube::new(doc.d, strata)?)
}

fn parse_uint(s: &str) -> Result<BigUint, FormatError> {
    s.trim()
        .parse()
        .map_err(|_| FormatError::Malformed(format!("not a decimal integer: {s:?}")))
}

fn parse_int(s: &str) -> Result<BigInt, FormatError> {
    s.trim()
        .parse()
        .map_err(|_| FormatError::Malformed(format!("not a decimal integer: {s:?}")))
}

/// Header `k,0,1,...,n_max`, then one line per width starting with `k`.
pub fn table_to_csv(t: &CountTable) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header = std::iter::once("k".to_string()).chain((0..=t.n_max()).map(|n| n.to_string()));
    w.write_record(header).expect("in-memory write");
    for (k, row) in t.rows() {
        let record = std::iter::once(k.to_string()).chain(row.iter().map(|v| v.to_string()));
        w.write_record(record).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii output")
}

/// Parses [`table_to_csv`] output; the dimension is not part of the CSV.
pub fn table_from_csv(d: usize, s: &str) -> Result<CountTable, FormatError> {
    let mut r = csv::Reader::from_reader(s.as_bytes());
    let header = r.headers()?.clone();
    let n_values: Vec<usize> = header
        .iter()
        .skip(1)
        .map(|h| {
            h.parse()
                .map_err(|_| FormatError::Malformed(format!("bad header {h:?}")))
        })
        .collect::<Result<_, _>>()?;
    if n_values.iter().enumerate().any(|(i, &n)| i != n) {
        return Err(FormatError::Malformed(
            "header must list n = 0, 1, 2, ...".into(),
        ));
    }
    let mut rows = Vec::new();
    for (i, record) in r.records().enumerate() {
        let record = record?;
        let k = parse_uint(&record[0])?;
        if k != BigUint::from(i + 1) {
            return Err(FormatError::Malformed(format!("row {} has k = {k}", i + 1)));
        }
        rows.push(
            record
                .iter()
                .skip(1)
                .map(parse_uint)
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    Ok(CountTable::from_rows(d, rows)?)
}

#[derive(Debug, Serialize, Deserialize)]
struct TableRowJson {
    k: usize,
    counts: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct TableJson {
    d: usize,
    rows: Vec<TableRowJson>,
}

/// `{"d": d, "rows": [{"k": k, "counts": ["0", ...]}, ...]}`.
pub fn table_to_json(t: &CountTable) -> String {
    let doc = TableJson {
        d: t.dimension(),
        rows: t
            .rows()
            .map(|(k, row)| TableRowJson {
                k,
                counts: row.iter().map(|v| v.to_string()).collect(),
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("strings always serialize")
}

pub fn table_from_json(s: &str) -> Result<CountTable, FormatError> {
    let doc: TableJson = serde_json::from_str(s)?;
    let mut rows = Vec::with_capacity(doc.rows.len());
    for (i, row) in doc.rows.into_iter().enumerate() {
        if row.k != i + 1 {
            return Err(FormatError::Malformed(format!(
                "row {} has k = {}",
                i + 1,
                row.k
            )));
        }
        rows.push(
            row.counts
                .iter()
                .map(|c| parse_uint(c))
                .collect::<Result<Vec<_>, _>>()?,
        );
    }
    Ok(CountTable::from_rows(doc.d, rows)?)
}

#[derive(Debug, Serialize, Deserialize)]
struct SeriesJson {
    d: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    k: Option<usize>,
    order: usize,
    coeffs: Vec<String>,
}

/// `{"d": d, "k": k, "order": N, "coeffs": ["c0", ...]}`; `k` is omitted
/// for series over all widths.
pub fn series_to_json(d: usize, k: Option<usize>, s: &SeriesPrefix) -> String {
    let doc = SeriesJson {
        d,
        k,
        order: s.order(),
        coeffs: s.coeffs().iter().map(|c| c.to_string()).collect(),
    };
    serde_json::to_string(&doc).expect("strings always serialize")
}

/// Inverse of [`series_to_json`]: `(d, k, series)`.
pub fn series_from_json(s: &str) -> Result<(usize, Option<usize>, SeriesPrefix), FormatError> {
    let doc: SeriesJson = serde_json::from_str(s)?;
    let coeffs = doc
        .coeffs
        .iter()
        .map(|c| parse_int(c))
        .collect::<Result<Vec<_>, _>>()?;
    let series = SeriesPrefix::new(coeffs)?;
    if series.order() != doc.order {
        return Err(FormatError::Malformed(
            "order does not match coefficient count".into(),
        ));
    }
    Ok((doc.d, doc.k, series))
}

/// Coefficients separated by single spaces.
pub fn series_to_plain(s: &SeriesPrefix) -> String {
    s.coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
