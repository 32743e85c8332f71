//! Experiment orchestration: family scans, certificates, sweeps, an on-disk
//! cache, reports, and the acceptance suite behind `verify-paper`.

pub mod acceptance;
mod cache;
mod certificates;
mod family;
mod report;
mod sweeps;

pub use cache::{Cache, CACHE_VERSION};
pub use certificates::{
    gg_homogenization_table, zinfty_certificate, zinfty_primes, CrossCheck, GgRow, ZinftyCertificate,
};
pub use family::{family_scan, gg_value, FamilySpec, PostMap, Reference, ScanRow, TorusPairReference};
pub use report::{scan_columns, scan_csv, scan_report, ScanReport, Summary, REPORT_SCHEMA};
pub use sweeps::{
    all_words, defect_sweep, lipschitz_sweep, random_word, DefectReport, DefectRow, LipschitzReport, LipschitzRow,
    DEFECT_PAIR_BUDGET,
};
