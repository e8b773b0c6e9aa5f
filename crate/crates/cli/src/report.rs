//! Text, JSON and CSV rendering. Rationals are always printed as exact
//! fractions.

use std::fmt::Write;

use bigraph::census::VerifyReport;
use bigraph::document::{census_to_csv, census_to_json, ClassDocument, VerifyDocument};
use bigraph::{BinaryMatrix, Census, IsoClassRecord, SweepSummary};

use crate::config::{Format, Mode};

fn join(xs: &[usize]) -> String {
    xs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn ok(flag: bool) -> &'static str {
    if flag {
        "ok"
    } else {
        "FAILED"
    }
}

fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| {
            rows.iter()
                .filter_map(|r| r.get(j))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for r in rows {
        let line: Vec<String> = r
            .iter()
            .enumerate()
            .map(|(j, cell)| format!("{cell:<w$}", w = widths[j]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

pub fn census(c: &Census, format: Format) -> String {
    match format {
        Format::Json => census_to_json(c),
        Format::Csv => census_to_csv(c),
        Format::Text => census_text(c),
    }
}

fn census_text(c: &Census) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "m = {}, n = {}, k = {}", c.m, c.n, c.k);
    let _ = writeln!(s, "classes:                 {}", c.num_classes());
    let _ = writeln!(s, "C(mn, k):                {}", c.binomial);
    let _ = writeln!(s, "sum 1/prod(delta!):      {}", c.paper_lhs);
    let _ = writeln!(s, "C(mn, k)/(m! n!):        {}", c.paper_rhs);
    let _ = writeln!(s, "residual:                {}", c.residual);
    let _ = writeln!(s, "orbit partition:         {}", ok(c.exact_partition_ok));
    let _ = writeln!(s, "stabilizer identity:     {}", ok(c.eq2_exact_ok));
    let _ = writeln!(
        s,
        "stabilizer != prod(d!):  {}",
        c.mismatch_classes.join(", ")
    );
    s.push('\n');
    let mut rows = vec![[
        "canonical",
        "orbit",
        "stabilizer",
        "deltas_rows",
        "deltas_cols",
        "prod(d!)",
        "row_degrees",
        "col_degrees",
    ]
    .map(String::from)
    .to_vec()];
    for r in &c.classes {
        rows.push(vec![
            r.canonical.to_string(),
            r.orbit_size.to_string(),
            r.stabilizer_order.to_string(),
            join(&r.deltas_rows),
            join(&r.deltas_cols),
            r.delta_factorial_product.to_string(),
            join(&r.row_degrees),
            join(&r.col_degrees),
        ]);
    }
    s.push_str(&table(&rows));
    s
}

pub fn verify(reports: &[VerifyReport], mode: Mode, format: Format) -> String {
    match format {
        Format::Json => {
            let docs: Vec<VerifyDocument> = reports.iter().map(VerifyDocument::from).collect();
            let mut s = serde_json::to_string_pretty(&docs).expect("reports serialize");
            s.push('\n');
            s
        }
        _ => verify_text(reports, mode),
    }
}

fn verify_text(reports: &[VerifyReport], mode: Mode) -> String {
    let mut header = vec!["m", "n", "k", "classes"];
    if mode.includes_paper() {
        header.extend(["sum 1/prod(d!)", "C(mn,k)/(m!n!)", "residual"]);
    }
    if mode.includes_exact() {
        header.extend(["partition", "stabilizer"]);
    }
    if mode.includes_paper() {
        header.push("stab != prod(d!)");
    }
    let mut rows = vec![header.into_iter().map(String::from).collect::<Vec<_>>()];
    for r in reports {
        let mut row = vec![
            r.m.to_string(),
            r.n.to_string(),
            r.k.to_string(),
            r.num_classes.to_string(),
        ];
        if mode.includes_paper() {
            row.extend([
                r.paper_lhs.to_string(),
                r.paper_rhs.to_string(),
                r.residual.to_string(),
            ]);
        }
        if mode.includes_exact() {
            row.extend([ok(r.exact_partition_ok).into(), ok(r.eq2_exact_ok).into()]);
        }
        if mode.includes_paper() {
            row.push(r.mismatch_classes.len().to_string());
        }
        rows.push(row);
    }
    let mut s = table(&rows);
    if mode.includes_paper() {
        for r in reports.iter().filter(|r| !r.mismatch_classes.is_empty()) {
            let _ = writeln!(
                s,
                "\nclasses of ({}, {}, {}) with stabilizer order != prod(d!):",
                r.m, r.n, r.k
            );
            for c in &r.mismatch_classes {
                let _ = writeln!(s, "  {c}");
            }
        }
    }
    let summary = SweepSummary::from_reports(reports.to_vec());
    let _ = write!(s, "\n{} parameter sets", reports.len());
    if mode.includes_paper() {
        let _ = write!(
            s,
            "; residual zero: {}, nonzero: {}",
            summary.zero_residuals, summary.nonzero_residuals
        );
    }
    if mode.includes_exact() {
        let _ = write!(
            s,
            "; partition failures: {}, stabilizer identity failures: {}",
            summary.partition_failures, summary.eq2_failures
        );
    }
    s.push('\n');
    s
}

pub fn class(matrix: &BinaryMatrix, r: &IsoClassRecord, format: Format) -> String {
    let doc = ClassDocument::from(r);
    match format {
        Format::Json => {
            let mut v = serde_json::to_value(&doc).expect("class documents serialize");
            v["matrix"] = matrix.to_string().into();
            let mut s = serde_json::to_string_pretty(&v).expect("values serialize");
            s.push('\n');
            s
        }
        _ => {
            let mut s = String::new();
            let _ = writeln!(s, "matrix:             {matrix}");
            let _ = writeln!(s, "canonical:          {}", doc.canonical);
            let _ = writeln!(s, "orbit_size:         {}", doc.orbit_size);
            let _ = writeln!(s, "stabilizer_order:   {}", doc.stabilizer_order);
            let _ = writeln!(s, "deltas_rows:        {}", join(&doc.deltas_rows));
            let _ = writeln!(s, "deltas_cols:        {}", join(&doc.deltas_cols));
            let _ = writeln!(s, "delta_fact_product: {}", doc.delta_fact_product);
            let _ = writeln!(s, "row_degrees:        {}", join(&doc.row_degrees));
            let _ = writeln!(s, "col_degrees:        {}", join(&doc.col_degrees));
            s
        }
    }
}
