//! Aggregate analysis of one tournament.

use serde::Serialize;

use crate::tournament::Tournament;
use crate::triads;

/// Key names are a stable machine-readable contract.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub in_degrees: Vec<usize>,
    pub out_degrees: Vec<usize>,
    pub signed_degrees: Vec<i64>,
    pub dr: u64,
    pub c3: u64,
    pub c3_fast: u64,
    /// `dr == 2·C(n+1,3) - 8·c3`, with `c3` from the enumerative count.
    pub prop3_holds: bool,
    pub is_transitive: bool,
    pub is_regular: bool,
}

pub fn analyze_report(t: &Tournament) -> AnalysisReport {
    let summary = t.degree_summary();
    let dr: u64 = summary.signed_degrees.iter().map(|&s| (s * s) as u64).sum();
    let c3 = triads::c3_enumerative(t);
    let formula = triads::max_directionality(t.n()) as i128 - 8 * c3 as i128;
    AnalysisReport {
        n: t.n(),
        dr,
        c3,
        c3_fast: triads::c3_fast(t),
        prop3_holds: formula == dr as i128,
        is_transitive: t.is_transitive(),
        is_regular: summary.signed_degrees.iter().all(|&s| s == 0),
        in_degrees: summary.in_degrees,
        out_degrees: summary.out_degrees,
        signed_degrees: summary.signed_degrees,
    }
}
