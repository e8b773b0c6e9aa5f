//! Census JSON and CSV interchange.
//!
//! Big naturals are written as decimal strings and rationals as
//! `{"num", "den"}` pairs. Decoding is strict: every class record is
//! recomputed from its canonical matrix and every summary field from the
//! classes, and the document is rejected unless all of them agree. A decoded
//! document therefore re-serializes to exactly the same bytes.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::canonical::MAX_SEARCH_ROWS;
use crate::census::{Census, IsoClassRecord, VerifyReport, MAX_CELLS};
use crate::error::{Error, Result};
use crate::matrix::BinaryMatrix;
use crate::rational::ExactRational;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassDocument {
    pub canonical: String,
    pub orbit_size: String,
    pub stabilizer_order: String,
    pub deltas_rows: Vec<usize>,
    pub deltas_cols: Vec<usize>,
    pub delta_fact_product: String,
    pub row_degrees: Vec<usize>,
    pub col_degrees: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CensusDocument {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub num_classes: usize,
    pub binomial: String,
    pub paper_lhs: ExactRational,
    pub paper_rhs: ExactRational,
    pub residual: ExactRational,
    pub exact_partition_ok: bool,
    pub eq2_exact_ok: bool,
    pub mismatch_classes: Vec<String>,
    pub classes: Vec<ClassDocument>,
}

impl From<&IsoClassRecord> for ClassDocument {
    fn from(r: &IsoClassRecord) -> Self {
        Self {
            canonical: r.canonical.to_string(),
            orbit_size: r.orbit_size.to_string(),
            stabilizer_order: r.stabilizer_order.to_string(),
            deltas_rows: r.deltas_rows.clone(),
            deltas_cols: r.deltas_cols.clone(),
            delta_fact_product: r.delta_factorial_product.to_string(),
            row_degrees: r.row_degrees.clone(),
            col_degrees: r.col_degrees.clone(),
        }
    }
}

impl From<&Census> for CensusDocument {
    fn from(c: &Census) -> Self {
        Self {
            m: c.m,
            n: c.n,
            k: c.k,
            num_classes: c.num_classes(),
            binomial: c.binomial.to_string(),
            paper_lhs: c.paper_lhs.clone(),
            paper_rhs: c.paper_rhs.clone(),
            residual: c.residual.clone(),
            exact_partition_ok: c.exact_partition_ok,
            eq2_exact_ok: c.eq2_exact_ok,
            mismatch_classes: c.mismatch_classes.clone(),
            classes: c.classes.iter().map(ClassDocument::from).collect(),
        }
    }
}

/// Summary of one `(m, n, k)` verification, without the class list.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyDocument {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub num_classes: usize,
    pub binomial: String,
    pub paper_lhs: ExactRational,
    pub paper_rhs: ExactRational,
    pub residual: ExactRational,
    pub exact_partition_ok: bool,
    pub eq2_exact_ok: bool,
    pub mismatch_classes: Vec<String>,
}

impl From<&VerifyReport> for VerifyDocument {
    fn from(r: &VerifyReport) -> Self {
        Self {
            m: r.m,
            n: r.n,
            k: r.k,
            num_classes: r.num_classes,
            binomial: r.binomial.to_string(),
            paper_lhs: r.paper_lhs.clone(),
            paper_rhs: r.paper_rhs.clone(),
            residual: r.residual.clone(),
            exact_partition_ok: r.exact_partition_ok,
            eq2_exact_ok: r.eq2_exact_ok,
            mismatch_classes: r.mismatch_classes.clone(),
        }
    }
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedDocument(msg.into())
}

/// Parses a decimal natural in its shortest form.
fn natural(field: &str, s: &str) -> Result<BigUint> {
    let ok =
        !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && (s == "0" || !s.starts_with('0'));
    if !ok {
        return Err(malformed(format!(
            "{field}: {s:?} is not a decimal natural"
        )));
    }
    s.parse().map_err(|_| malformed(format!("{field}: {s:?}")))
}

impl CensusDocument {
    /// Checks the document against a full recomputation from its canonical
    /// matrices.
    pub fn into_census(self) -> Result<Census> {
        let (m, n, k) = (self.m, self.n, self.k);
        let supported = m > 0
            && n > 0
            && m <= MAX_SEARCH_ROWS
            && m.checked_mul(n)
                .is_some_and(|cells| cells <= MAX_CELLS && k <= cells);
        if !supported {
            return Err(malformed(format!("unsupported parameters ({m}, {n}, {k})")));
        }
        if self.num_classes != self.classes.len() {
            return Err(malformed("num_classes disagrees with the class list"));
        }
        let mut records = Vec::with_capacity(self.classes.len());
        for doc in &self.classes {
            let canonical: BinaryMatrix = doc
                .canonical
                .parse()
                .map_err(|e| malformed(format!("class {:?}: {e}", doc.canonical)))?;
            if canonical.num_rows() != m || canonical.num_cols() != n || canonical.count_ones() != k
            {
                return Err(malformed(format!(
                    "class {:?} has the wrong shape",
                    doc.canonical
                )));
            }
            natural("orbit_size", &doc.orbit_size)?;
            natural("stabilizer_order", &doc.stabilizer_order)?;
            natural("delta_fact_product", &doc.delta_fact_product)?;
            let rec = IsoClassRecord::from_representative(&canonical);
            if rec.canonical != canonical {
                return Err(malformed(format!(
                    "{:?} is not a canonical form",
                    doc.canonical
                )));
            }
            if ClassDocument::from(&rec) != *doc {
                return Err(malformed(format!(
                    "class {:?} has inconsistent fields",
                    doc.canonical
                )));
            }
            records.push(rec);
        }
        if records
            .windows(2)
            .any(|w| w[0].canonical.lex_cmp_unchecked(&w[1].canonical).is_ge())
        {
            return Err(malformed("classes are not strictly sorted"));
        }
        natural("binomial", &self.binomial)?;
        let census = Census::from_classes(m, n, k, records)?;
        if CensusDocument::from(&census) != self {
            return Err(malformed("summary fields disagree with the classes"));
        }
        Ok(census)
    }
}

pub fn census_to_json(census: &Census) -> String {
    let mut s = serde_json::to_string_pretty(&CensusDocument::from(census))
        .expect("census documents always serialize");
    s.push('\n');
    s
}

pub fn census_from_json(bytes: &[u8]) -> Result<Census> {
    let doc: CensusDocument =
        serde_json::from_slice(bytes).map_err(|e| malformed(e.to_string()))?;
    doc.into_census()
}

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// One row per class. Every cell is quoted; list cells hold space-separated
/// values.
pub fn census_to_csv(census: &Census) -> String {
    let mut w = csv::WriterBuilder::new()
        .quote_style(csv::QuoteStyle::Always)
        .from_writer(Vec::new());
    w.write_record([
        "canonical",
        "orbit_size",
        "stabilizer_order",
        "deltas_rows",
        "deltas_cols",
        "delta_fact_product",
        "row_degrees",
        "col_degrees",
    ])
    .expect("writing to memory");
    for c in &census.classes {
        w.write_record([
            c.canonical.to_string(),
            c.orbit_size.to_string(),
            c.stabilizer_order.to_string(),
            join(&c.deltas_rows),
            join(&c.deltas_cols),
            c.delta_factorial_product.to_string(),
            join(&c.row_degrees),
            join(&c.col_degrees),
        ])
        .expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::{enumerate_census, CensusOptions};

    fn census(m: usize, n: usize, k: usize) -> Census {
        enumerate_census(m, n, k, &CensusOptions::default()).unwrap()
    }

    #[test]
    fn json_roundtrip_is_byte_identical() {
        for (m, n, k) in [(1, 1, 1), (2, 2, 2), (3, 3, 4), (2, 4, 5)] {
            let c = census(m, n, k);
            let json = census_to_json(&c);
            let back = census_from_json(json.as_bytes()).unwrap();
            assert_eq!(back, c);
            assert_eq!(census_to_json(&back), json);
        }
    }

    #[test]
    fn json_layout() {
        let v: serde_json::Value = serde_json::from_str(&census_to_json(&census(2, 2, 2))).unwrap();
        assert_eq!(v["num_classes"], 3);
        assert_eq!(v["binomial"], "6");
        assert_eq!(v["residual"]["num"], "1");
        assert_eq!(v["residual"]["den"], "2");
        assert_eq!(v["mismatch_classes"][0], "01|10");
        assert_eq!(v["classes"][2]["canonical"], "01|10");
        assert_eq!(v["classes"][2]["delta_fact_product"], "1");
        assert_eq!(v["classes"][0]["deltas_rows"], serde_json::json!([1, 1]));
    }

    #[test]
    fn rejects_tampering() {
        let json = census_to_json(&census(2, 2, 2));
        let cases = [
            json.replace("\"num_classes\": 3", "\"num_classes\": 4"),
            json.replace("\"binomial\": \"6\"", "\"binomial\": \"06\""),
            json.replace("\"01|10\"", "\"10|01\""),
            json.replace("\"eq2_exact_ok\": true", "\"eq2_exact_ok\": false"),
            json.replace("\"stabilizer_order\": \"2\"", "\"stabilizer_order\": \"3\""),
            json.replace("\"k\": 2", "\"k\": 2, \"extra\": 1"),
            json[..json.len() / 2].to_string(),
            String::new(),
        ];
        for (i, bad) in cases.iter().enumerate() {
            assert!(census_from_json(bad.as_bytes()).is_err(), "case {i}");
        }
    }

    #[test]
    fn rejects_dropped_class() {
        let c = census(2, 2, 2);
        let mut doc = CensusDocument::from(&c);
        doc.classes.pop();
        doc.num_classes -= 1;
        assert!(doc.into_census().is_err());
    }

    #[test]
    fn csv_rows() {
        let csv = census_to_csv(&census(2, 2, 2));
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(
            lines[0],
            "\"canonical\",\"orbit_size\",\"stabilizer_order\",\"deltas_rows\",\"deltas_cols\",\"delta_fact_product\",\"row_degrees\",\"col_degrees\""
        );
        assert_eq!(lines[3], r#""01|10","2","2","1 1","1 1","1","1 1","1 1""#);
        assert_eq!(lines[2], r#""01|01","2","2","2","1 1","2","1 1","0 2""#);
        let mut r = csv::Reader::from_reader(csv.as_bytes());
        assert_eq!(r.records().count(), 3);
    }
}
