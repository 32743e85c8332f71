use serde::{Deserialize, Serialize};

use super::cache::CACHE_VERSION;
use super::family::{FamilySpec, ScanRow};
use crate::seifert::OmegaPoint;
use crate::{Error, Result};

/// Version of the CSV column set and the JSON report layout.
pub const REPORT_SCHEMA: u32 = 1;

/// Column names of [`scan_csv`] for the given ω points.
pub fn scan_columns(omegas: &[OmegaPoint]) -> Vec<String> {
    let mut cols: Vec<String> = ["p", "length", "components", "signature", "determinant", "alexander"]
        .map(String::from)
        .to_vec();
    cols.extend(omegas.iter().map(|w| format!("sign_{w}")));
    cols.extend(["g4_lower", "g4_upper", "genus3_lower", "genus3_upper", "ref_determinant", "ref_alexander"].map(String::from));
    cols.extend(omegas.iter().filter(|w| matches!(w, OmegaPoint::Prime(_))).map(|w| format!("ref_abs_sign_{w}")));
    cols.extend(["expected_abs_signature", "pass", "error"].map(String::from));
    cols
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// One line per row, header first, LF line endings.
pub fn scan_csv(rows: &[ScanRow], omegas: &[OmegaPoint]) -> Result<String> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(scan_columns(omegas)).map_err(io)?;
    for r in rows {
        let prof = r.profile.as_ref();
        let reference = r.torus_reference.as_ref();
        let mut rec = vec![
            r.p.to_string(),
            r.length.to_string(),
            r.components.to_string(),
            r.signature.to_string(),
            opt(prof.map(|p| &p.determinant)),
            opt(prof.and_then(|p| p.alexander.as_ref()).map(|a| a.to_pairs())),
        ];
        rec.extend(omegas.iter().map(|w| opt(prof.and_then(|p| p.omega_signatures.get(w)))));
        rec.extend([
            opt(prof.map(|p| p.g4_lower)),
            opt(prof.and_then(|p| p.g4_upper)),
            opt(prof.and_then(|p| p.genus3_lower)),
            opt(prof.map(|p| p.genus3_upper)),
            opt(reference.map(|t| &t.determinant)),
            opt(reference.map(|t| t.alexander.to_pairs())),
        ]);
        rec.extend(
            omegas
                .iter()
                .filter(|w| matches!(w, OmegaPoint::Prime(_)))
                .map(|w| opt(reference.and_then(|t| t.omega_signatures.get(w)))),
        );
        rec.extend([opt(r.expected_abs_signature), opt(r.pass), r.error.clone().unwrap_or_default()]);
        w.write_record(&rec).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub rows: usize,
    pub passed: usize,
    pub failed: usize,
    pub unchecked: usize,
    pub precision_failures: usize,
    pub errors: usize,
}

impl Summary {
    pub fn of(rows: &[ScanRow]) -> Self {
        let mut s = Summary { rows: rows.len(), ..Default::default() };
        for r in rows {
            match r.pass {
                Some(true) => s.passed += 1,
                Some(false) => s.failed += 1,
                None => s.unchecked += 1,
            }
            s.precision_failures += r.profile.as_ref().map_or(0, |p| p.precision_failures());
            s.errors += usize::from(r.error.is_some());
        }
        s
    }

    pub fn ok(&self) -> bool {
        self.failed == 0 && self.precision_failures == 0 && self.errors == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScanReport {
    pub schema: u32,
    pub tool_version: String,
    pub cache_version: u32,
    pub spec: FamilySpec,
    /// Family scans are deterministic; sweeps record their seed here.
    pub seed: Option<u64>,
    pub tolerance: f64,
    pub rows: Vec<ScanRow>,
    pub summary: Summary,
}

pub fn scan_report(spec: &FamilySpec, rows: Vec<ScanRow>) -> ScanReport {
    ScanReport {
        schema: REPORT_SCHEMA,
        tool_version: env!("CARGO_PKG_VERSION").into(),
        cache_version: CACHE_VERSION,
        tolerance: spec.options.tolerance,
        spec: spec.clone(),
        seed: None,
        summary: Summary::of(&rows),
        rows,
    }
}
