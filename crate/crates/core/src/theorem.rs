//! Full analysis of one divide and the identity checks run on it.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::divide_map::{
    classify, compute_faces_with, regions_contractible, DivideMap, DivideStats, FaceSet, SignNormalization,
};
use crate::dynkin::{body_euler, build_gamma, check_flag_edges, counts, Flag, Gamma, GammaCounts};
use crate::error::Result;
use crate::matrix::IntMatrix;
use crate::seifert::{
    matrix_n, monodromy_matrix, monodromy_report, newton_power_sums, seifert_matrix, trace_powers,
    Lefschetz, MonodromyReport,
};

pub const DEFAULT_DEPTH: usize = 12;
pub const MAX_DEPTH: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::NotApplicable => "n/a",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
}

impl Check {
    fn new(name: &str, applicable: bool, holds: impl FnOnce() -> bool) -> Check {
        let status = match (applicable, applicable && holds()) {
            (false, _) => CheckStatus::NotApplicable,
            (true, true) => CheckStatus::Pass,
            (true, false) => CheckStatus::Fail,
        };
        Check { name: name.to_string(), status }
    }
}

/// Everything computed for one divide under a fixed sign normalization.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub faces: FaceSet,
    pub stats: DivideStats,
    pub gamma: Gamma,
    pub counts: GammaCounts,
    pub chi_body: i64,
    pub n: IntMatrix,
    pub t: IntMatrix,
    pub monodromy: MonodromyReport,
    pub flag_violations: Vec<Flag>,
    pub checks: Vec<Check>,
    pub findings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub stats: DivideStats,
    pub counts: GammaCounts,
    pub chi_body: i64,
    pub lambda: Lefschetz,
    pub checks: Vec<Check>,
    pub findings: Vec<String>,
}

impl TheoremReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    pub fn status(&self, name: &str) -> Option<CheckStatus> {
        self.checks.iter().find(|c| c.name == name).map(|c| c.status)
    }
}

impl Analysis {
    pub fn lambda(&self) -> &BigInt {
        self.monodromy.lefschetz.value()
    }

    pub fn theorem_report(&self) -> TheoremReport {
        TheoremReport {
            stats: self.stats,
            counts: self.counts,
            chi_body: self.chi_body,
            lambda: self.monodromy.lefschetz.clone(),
            checks: self.checks.clone(),
            findings: self.findings.clone(),
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }
}

pub fn analyze(map: &DivideMap, normalization: SignNormalization, depth: usize) -> Result<Analysis> {
    let depth = depth.clamp(1, MAX_DEPTH);
    let faces = compute_faces_with(map, normalization)?;
    let stats = classify(map, &faces);
    let gamma = build_gamma(map, &faces);
    let counts = counts(&gamma);
    let chi_body = body_euler(map, &faces);
    let n = matrix_n(&gamma);
    let t = monodromy_matrix(&n)?;
    let monodromy = monodromy_report(&n, depth)?;
    let flag_violations = check_flag_edges(&gamma);

    let lam = &monodromy.lefschetz;
    let e = BigInt::from(counts.e);
    let f = BigInt::from(counts.f);
    let n_square_zero = monodromy.n_square_zero;
    let simple_cellular = stats.simple && stats.cellular;
    let euler = counts.mu as i64 - counts.e as i64 + counts.f as i64;

    let checks = vec![
        Check::new("n_cube_zero", true, || monodromy.n_cube_zero),
        Check::new("lefschetz_routes_agree", true, || lam.formula == lam.trace),
        Check::new("det_seifert_one", true, || seifert_matrix(&n).det().is_one()),
        Check::new("det_monodromy_one", true, || t.det().is_one()),
        Check::new("char_poly_reciprocal", true, || monodromy.char_poly.is_reciprocal()),
        Check::new("newton_matches_traces", true, || {
            let k = depth.min(DEFAULT_DEPTH);
            newton_power_sums(&monodromy.char_poly, k) == trace_powers(&t, k)
        }),
        Check::new("slalom_iff_no_flags", true, || n_square_zero == (counts.f == 0)),
        Check::new("cellular_entries_01", stats.cellular, || n.entries().all(|x| x.is_zero() || x.is_one())),
        Check::new("cellular_trace_tnn_eq_e", stats.cellular, || lam.tr_tnn == e),
        Check::new("cellular_trace_tn2n_eq_f", stats.cellular, || lam.tr_tn2n == f),
        Check::new("cellular_flag_edges_closed", stats.cellular, || flag_violations.is_empty()),
        Check::new("simple_body_euler_one", stats.simple, || chi_body == 1),
        Check::new("simple_cellular_euler_identity", simple_cellular, || euler == 1),
        Check::new("simple_cellular_lambda_zero", simple_cellular, || lam.formula.is_zero()),
        Check::new("slalom_lambda_zero", stats.simple && n_square_zero, || {
            lam.formula.is_zero() && lam.tr_tnn == BigInt::from(counts.mu) - 1
        }),
    ];

    let mut findings = Vec::new();
    if stats.connected && regions_contractible(map, &faces) == gamma.has_multi_edge() {
        findings.push(if gamma.has_multi_edge() {
            "cellular_with_multi_edge".to_string()
        } else {
            "non_cellular_without_multi_edge".to_string()
        });
    }

    Ok(Analysis { faces, stats, gamma, counts, chi_body, n, t, monodromy, flag_violations, checks, findings })
}

/// Runs the whole chain with the standard sign normalization.
pub fn verify_theorem(map: &DivideMap) -> Result<TheoremReport> {
    Ok(analyze(map, SignNormalization::Standard, DEFAULT_DEPTH)?.theorem_report())
}

/// Characteristic polynomial, traces, signature and Lefschetz number: the data that
/// must not depend on vertex numbering or sign convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub lambda: BigInt,
    pub traces: Vec<BigInt>,
    pub char_poly: crate::seifert::CharPoly,
    pub signature: i64,
}

pub fn invariants_of(n: &IntMatrix, depth: usize) -> Result<Invariants> {
    let report = monodromy_report(n, depth)?;
    Ok(Invariants {
        lambda: report.lefschetz.formula,
        traces: report.traces,
        char_poly: report.char_poly,
        signature: report.signature,
    })
}
