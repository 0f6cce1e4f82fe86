//! Batch evaluation of presentations listed one per line as
//! `id<TAB>kind<TAB>payload`.

use crate::bounds::{braid_kappa_plus_lb, diagram_kappa_plus_lb, sqp_report, BoundReport};
use crate::families::{FamilySpec, Presentation};
use crate::{BandWord, BraidWord, HalfInteger, OrientedDiagram};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::HashSet;
use std::io;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RecordKind {
    Braid,
    Band,
    Pd,
    FamilySpec,
}

impl FromStr for RecordKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "braid" => Ok(RecordKind::Braid),
            "band" => Ok(RecordKind::Band),
            "pd" => Ok(RecordKind::Pd),
            "family-spec" => Ok(RecordKind::FamilySpec),
            other => Err(format!("unknown record kind `{other}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRecord {
    pub id: String,
    pub kind: RecordKind,
    pub payload: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ScanOptions {
    /// Fill `kappa_minus_lb` from the mirror presentation.
    pub mirror: bool,
    /// Add the unclamped `raw` and `raw_minus` columns.
    pub raw: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub id: String,
    pub kind: String,
    pub e: Option<i64>,
    pub n: Option<usize>,
    pub c: Option<usize>,
    pub w: Option<i64>,
    pub s: Option<usize>,
    pub s_minus: Option<usize>,
    pub kappa_plus_lb: Option<u64>,
    pub u_plus_lb: Option<u64>,
    pub kappa_minus_lb: Option<u64>,
    pub error: Option<String>,
    #[serde(skip)]
    pub raw: Option<HalfInteger>,
    #[serde(skip)]
    pub raw_minus: Option<HalfInteger>,
}

pub const COLUMNS: [&str; 12] = [
    "id", "kind", "e", "n", "c", "w", "s", "s_minus", "kappa_plus_lb", "u_plus_lb", "kappa_minus_lb", "error",
];

/// Splits the input into records. Blank lines are skipped; malformed lines
/// come back as `Err((id, kind, message))` so they still get a row.
pub fn parse_records(text: &str) -> Vec<Result<ScanRecord, (String, String, String)>> {
    let mut seen = HashSet::new();
    text.lines()
        .map(|line| line.strip_suffix('\r').unwrap_or(line))
        .filter(|line| !line.trim().is_empty())
        .map(|line| {
            let mut fields = line.splitn(3, '\t');
            let id = fields.next().unwrap_or("").to_string();
            let kind_text = fields.next().unwrap_or("").to_string();
            let fail = |msg: String| Err((id.clone(), kind_text.clone(), msg));
            let Some(payload) = fields.next() else {
                return fail("expected `id<TAB>kind<TAB>payload`".to_string());
            };
            if id.is_empty() {
                return fail("empty record id".to_string());
            }
            if !seen.insert(id.clone()) {
                return fail(format!("duplicate record id `{id}`"));
            }
            match kind_text.parse() {
                Ok(kind) => Ok(ScanRecord { id: id.clone(), kind, payload: payload.to_string() }),
                Err(msg) => fail(msg),
            }
        })
        .collect()
}

fn kind_name(kind: RecordKind) -> &'static str {
    match kind {
        RecordKind::Braid => "braid",
        RecordKind::Band => "band",
        RecordKind::Pd => "pd",
        RecordKind::FamilySpec => "family-spec",
    }
}

fn fill_braid(row: &mut ScanRow, w: &BraidWord) {
    let data = w.closure_diagram().seifert_data();
    row.e = Some(w.exponent_sum());
    row.n = Some(w.strands());
    row.c = Some(data.components);
    row.w = Some(data.writhe);
    row.s = Some(data.s);
    row.s_minus = Some(data.s_minus);
}

fn fill_diagram(row: &mut ScanRow, d: &OrientedDiagram) {
    let data = d.seifert_data();
    row.c = Some(data.components);
    row.w = Some(data.writhe);
    row.s = Some(data.s);
    row.s_minus = Some(data.s_minus);
}

fn fill_report(row: &mut ScanRow, plus: BoundReport, minus: Option<BoundReport>) {
    row.kappa_plus_lb = Some(plus.kappa_plus_lb);
    row.u_plus_lb = Some(plus.u_plus_lb);
    row.raw = Some(plus.raw);
    if let Some(m) = minus {
        row.kappa_minus_lb = Some(m.kappa_plus_lb);
        row.raw_minus = Some(m.raw);
    }
}

fn evaluate_braid(row: &mut ScanRow, w: &BraidWord, opts: ScanOptions) {
    fill_braid(row, w);
    let minus = opts.mirror.then(|| braid_kappa_plus_lb(&w.mirror()));
    fill_report(row, braid_kappa_plus_lb(w), minus);
}

fn evaluate_diagram(row: &mut ScanRow, d: &OrientedDiagram, opts: ScanOptions) {
    fill_diagram(row, d);
    let minus = opts.mirror.then(|| diagram_kappa_plus_lb(&d.mirror()));
    fill_report(row, diagram_kappa_plus_lb(d), minus);
}

fn evaluate_into(row: &mut ScanRow, record: &ScanRecord, opts: ScanOptions) -> Result<(), String> {
    let payload = record.payload.trim();
    match record.kind {
        RecordKind::Braid => {
            let w: BraidWord = payload.parse().map_err(|e| format!("{e}"))?;
            evaluate_braid(row, &w, opts);
        }
        RecordKind::Pd => {
            let d: OrientedDiagram = payload.parse().map_err(|e| format!("{e}"))?;
            evaluate_diagram(row, &d, opts);
        }
        RecordKind::Band => {
            let bw: BandWord = payload.parse().map_err(|e| format!("{e}"))?;
            let w = bw.expand();
            fill_braid(row, &w);
            let plus = sqp_report(&bw).map_err(|e| format!("{e}"))?;
            let minus = opts.mirror.then(|| braid_kappa_plus_lb(&w.mirror()));
            fill_report(row, plus, minus);
        }
        RecordKind::FamilySpec => {
            let spec: FamilySpec = payload.parse().map_err(|e| format!("{e}"))?;
            match spec.presentation().map_err(|e| format!("{e}"))? {
                Presentation::Braid(w) => evaluate_braid(row, &w, opts),
                Presentation::Diagram(d) => evaluate_diagram(row, &d, opts),
            }
        }
    }
    Ok(())
}

pub fn evaluate(record: &ScanRecord, opts: ScanOptions) -> ScanRow {
    let mut row = ScanRow {
        id: record.id.clone(),
        kind: kind_name(record.kind).to_string(),
        ..ScanRow::default()
    };
    if let Err(msg) = evaluate_into(&mut row, record, opts) {
        row = ScanRow { id: row.id, kind: row.kind, error: Some(msg), ..ScanRow::default() };
    }
    row
}

/// Evaluates every record in parallel; rows come back in input order.
pub fn scan(text: &str, opts: ScanOptions) -> Vec<ScanRow> {
    parse_records(text)
        .into_par_iter()
        .map(|record| match record {
            Ok(r) => evaluate(&r, opts),
            Err((id, kind, msg)) => ScanRow { id, kind, error: Some(msg), ..ScanRow::default() },
        })
        .collect()
}

fn cell<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(ToString::to_string).unwrap_or_default()
}

pub fn write_csv<W: io::Write>(rows: &[ScanRow], opts: ScanOptions, out: W) -> Result<(), csv::Error> {
    let mut writer = csv::Writer::from_writer(out);
    let mut header: Vec<&str> = COLUMNS.to_vec();
    if opts.raw {
        header.extend(["raw", "raw_minus"]);
    }
    writer.write_record(&header)?;
    for row in rows {
        let mut record = vec![
            row.id.clone(),
            row.kind.clone(),
            cell(&row.e),
            cell(&row.n),
            cell(&row.c),
            cell(&row.w),
            cell(&row.s),
            cell(&row.s_minus),
            cell(&row.kappa_plus_lb),
            cell(&row.u_plus_lb),
            cell(&row.kappa_minus_lb),
            cell(&row.error),
        ];
        if opts.raw {
            record.extend([cell(&row.raw), cell(&row.raw_minus)]);
        }
        writer.write_record(&record)?;
    }
    writer.flush()?;
    Ok(())
}

pub fn to_json(rows: &[ScanRow], opts: ScanOptions) -> serde_json::Value {
    rows.iter()
        .map(|row| {
            let mut v = serde_json::to_value(row).expect("rows serialize");
            if opts.raw {
                v["raw"] = serde_json::to_value(row.raw).expect("half-integers serialize");
                v["raw_minus"] = serde_json::to_value(row.raw_minus).expect("half-integers serialize");
            }
            v
        })
        .collect()
}
