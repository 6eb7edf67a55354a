//! Input detection, per-divide reports and the corpus runner.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::divide_map::{DivideMap, DivideStats, MapDocument, SignNormalization, MAP_FORMAT};
use crate::dynkin::{Flag, GammaCounts};
use crate::error::{DivideError, Result};
use crate::generators::{from_chords, gen_chords, ChordSet, ChordsDocument, CHORDS_FORMAT};
use crate::seifert::{CharPoly, Lefschetz};
use crate::theorem::{analyze, Analysis, Check, CheckStatus};

pub const REPORT_FORMAT: &str = "divide-report/1";

pub const LATTICE_GENUS_NOTE: &str =
    "(mu - r + 1) / 2 computed from the Seifert lattice rank; not asserted to equal any fiber genus";

/// A parsed input file: either an abstract map or a chord arrangement with its map.
#[derive(Debug, Clone)]
pub enum Input {
    Map(DivideMap),
    Chords(ChordSet, DivideMap),
}

impl Input {
    pub fn map(&self) -> &DivideMap {
        match self {
            Input::Map(m) | Input::Chords(_, m) => m,
        }
    }

    pub fn format(&self) -> &'static str {
        match self {
            Input::Map(_) => MAP_FORMAT,
            Input::Chords(..) => CHORDS_FORMAT,
        }
    }
}

/// Parses either document kind, dispatching on the mandatory `format` field.
pub fn load_input(text: &str) -> Result<Input> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    let format = value
        .get("format")
        .and_then(|f| f.as_str())
        .ok_or_else(|| DivideError::Malformed("missing \"format\" field".into()))?
        .to_string();
    match format.as_str() {
        MAP_FORMAT => Ok(Input::Map(serde_json::from_value::<MapDocument>(value)?.into_map()?)),
        CHORDS_FORMAT => {
            let set = serde_json::from_value::<ChordsDocument>(value)?.into_chord_set()?;
            let map = from_chords(&set)?;
            Ok(Input::Chords(set, map))
        }
        _ => Err(DivideError::UnknownFormat(format)),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDescriptor {
    pub source: String,
    pub format: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DivideReport {
    pub format: String,
    pub input: InputDescriptor,
    pub stats: DivideStats,
    pub counts: GammaCounts,
    pub chi_body: i64,
    pub slalom: bool,
    pub n_cube_zero: bool,
    pub multi_edge: bool,
    pub lambda: Lefschetz,
    pub char_poly: CharPoly,
    pub signature: i64,
    pub lattice_genus: f64,
    pub lattice_genus_note: String,
    #[serde(with = "crate::bigint_serde::vec")]
    pub traces: Vec<BigInt>,
    #[serde(with = "crate::bigint_serde::vec")]
    pub lefschetz_iterates: Vec<BigInt>,
    pub flag_violations: Vec<Flag>,
    pub checks: Vec<Check>,
    pub findings: Vec<String>,
}

impl DivideReport {
    pub fn from_analysis(input: InputDescriptor, analysis: &Analysis) -> Self {
        let m = &analysis.monodromy;
        let mu = analysis.counts.mu as f64;
        DivideReport {
            format: REPORT_FORMAT.into(),
            input,
            stats: analysis.stats,
            counts: analysis.counts,
            chi_body: analysis.chi_body,
            slalom: m.n_square_zero,
            n_cube_zero: m.n_cube_zero,
            multi_edge: analysis.gamma.has_multi_edge(),
            lambda: m.lefschetz.clone(),
            char_poly: m.char_poly.clone(),
            signature: m.signature,
            lattice_genus: (mu - analysis.stats.r as f64 + 1.0) / 2.0,
            lattice_genus_note: LATTICE_GENUS_NOTE.into(),
            traces: m.traces.clone(),
            lefschetz_iterates: m.lefschetz_iterates.clone(),
            flag_violations: analysis.flag_violations.clone(),
            checks: analysis.checks.clone(),
            findings: analysis.findings.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn has_failures(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Fail)
    }

    pub fn to_text(&self) -> String {
        let yn = |b: bool| if b { "yes" } else { "no" };
        let join = |v: &[BigInt]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
        let s = &self.stats;
        let c = &self.counts;
        let mut out = String::new();
        writeln!(out, "input        {} ({})", self.input.source, self.input.format).unwrap();
        writeln!(out).unwrap();
        writeln!(out, "branches r   {:>6}    connected {:>4}", s.r, yn(s.connected)).unwrap();
        writeln!(out, "crossings    {:>6}    cellular  {:>4}", s.delta, yn(s.cellular)).unwrap();
        writeln!(out, "regions      {:>6}    simple    {:>4}", s.regions, yn(s.simple)).unwrap();
        writeln!(out, "                        slalom    {:>4}", yn(self.slalom)).unwrap();
        writeln!(out).unwrap();
        writeln!(out, "mu {}  e {}  f {}  mu-e+f {}  chi(body) {}", c.mu, c.e, c.f, c.mu as i64 - c.e as i64 + c.f as i64, self.chi_body).unwrap();
        writeln!(out, "Tr(tN N) {}  Tr(tN^2 N) {}  multi-edge {}", self.lambda.tr_tnn, self.lambda.tr_tn2n, yn(self.multi_edge)).unwrap();
        writeln!(out, "lefschetz    {}  (1 - Tr T = {})", self.lambda.formula, self.lambda.trace).unwrap();
        writeln!(out, "char poly    [{}]  (constant term first)", join(&self.char_poly.coeffs)).unwrap();
        writeln!(out, "signature    {}", self.signature).unwrap();
        writeln!(out, "lattice genus {}  ({})", self.lattice_genus, self.lattice_genus_note).unwrap();
        writeln!(out, "Tr T^k       {}", join(&self.traces)).unwrap();
        writeln!(out, "1 - Tr T^k   {}", join(&self.lefschetz_iterates)).unwrap();
        writeln!(out).unwrap();
        writeln!(out, "checks").unwrap();
        for ch in &self.checks {
            writeln!(out, "  {:<34} {}", ch.name, ch.status).unwrap();
        }
        if !self.findings.is_empty() {
            writeln!(out, "findings").unwrap();
            for f in &self.findings {
                writeln!(out, "  {f}").unwrap();
            }
        }
        out
    }
}

pub fn build_report(source: &str, input: &Input, depth: usize) -> Result<DivideReport> {
    let analysis = analyze(input.map(), SignNormalization::Standard, depth)?;
    let desc = InputDescriptor { source: source.to_string(), format: input.format().to_string() };
    Ok(DivideReport::from_analysis(desc, &analysis))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRow {
    pub seed: u64,
    pub n: usize,
    pub r: usize,
    pub delta: usize,
    pub regions: usize,
    pub connected: bool,
    pub cellular: bool,
    pub simple: bool,
    pub slalom: bool,
    pub mu: usize,
    pub e: u64,
    pub f: u64,
    pub chi_body: i64,
    #[serde(with = "crate::bigint_serde")]
    pub lambda: BigInt,
    pub checks_passed: usize,
    pub findings: Vec<String>,
}

pub const CORPUS_CSV_HEADER: &str =
    "seed,n,r,delta,regions,connected,cellular,simple,slalom,mu,e,f,chi_body,lambda,checks_passed,findings";

impl CorpusRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.seed,
            self.n,
            self.r,
            self.delta,
            self.regions,
            self.connected,
            self.cellular,
            self.simple,
            self.slalom,
            self.mu,
            self.e,
            self.f,
            self.chi_body,
            self.lambda,
            self.checks_passed,
            self.findings.join(";")
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub seed: u64,
    pub check: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub instances: usize,
    pub connected: usize,
    pub cellular: usize,
    pub simple: usize,
    pub slalom: usize,
    pub simple_cellular: usize,
    /// check name -> number of instances where it passed
    pub passed: BTreeMap<String, usize>,
    pub discrepancies: Vec<Discrepancy>,
    pub findings: Vec<Discrepancy>,
    pub wall_time_s: f64,
}

impl CorpusSummary {
    pub fn ok(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "instances {}  connected {}  cellular {}  simple {}  slalom {}  simple+cellular {}",
            self.instances, self.connected, self.cellular, self.simple, self.slalom, self.simple_cellular).unwrap();
        for (name, n) in &self.passed {
            writeln!(s, "  {name:<34} {n} passed").unwrap();
        }
        writeln!(s, "discrepancies {}  findings {}  wall time {:.3}s", self.discrepancies.len(), self.findings.len(), self.wall_time_s).unwrap();
        for d in &self.discrepancies {
            writeln!(s, "  FAIL seed {} {}", d.seed, d.check).unwrap();
        }
        for d in &self.findings {
            writeln!(s, "  finding seed {} {}", d.seed, d.check).unwrap();
        }
        s
    }
}

/// Checks specific to chord arrangements.
fn chord_checks(set: &ChordSet, analysis: &Analysis) -> Vec<Check> {
    let status = |ok: bool| if ok { CheckStatus::Pass } else { CheckStatus::Fail };
    let mut out = vec![Check {
        name: "chord_crossings_interleave".into(),
        status: status(analysis.stats.delta == set.interleaved_pairs()),
    }];
    out.push(Check {
        name: "chord_cellular_when_connected".into(),
        status: if analysis.stats.connected { status(analysis.stats.cellular) } else { CheckStatus::NotApplicable },
    });
    out
}

fn corpus_instance(n: usize, seed: u64, depth: usize) -> Result<(CorpusRow, Vec<Check>)> {
    let set = gen_chords(n, seed)?;
    let map = from_chords(&set)?;
    let analysis = analyze(&map, SignNormalization::Standard, depth)?;
    let mut checks = analysis.checks.clone();
    checks.extend(chord_checks(&set, &analysis));
    let s = analysis.stats;
    let row = CorpusRow {
        seed,
        n,
        r: s.r,
        delta: s.delta,
        regions: s.regions,
        connected: s.connected,
        cellular: s.cellular,
        simple: s.simple,
        slalom: analysis.monodromy.n_square_zero,
        mu: analysis.counts.mu,
        e: analysis.counts.e,
        f: analysis.counts.f,
        chi_body: analysis.chi_body,
        lambda: analysis.lambda().clone(),
        checks_passed: checks.iter().filter(|c| c.status == CheckStatus::Pass).count(),
        findings: analysis.findings.clone(),
    };
    Ok((row, checks))
}

/// Generates `count` chord divides with seeds `seed + i` and checks each one.
/// Rows come back in instance order.
pub fn run_corpus(count: usize, n: usize, seed: u64, depth: usize) -> Result<(Vec<CorpusRow>, CorpusSummary)> {
    let start = Instant::now();
    let results: Vec<(CorpusRow, Vec<Check>)> = (0..count as u64)
        .into_par_iter()
        .map(|i| corpus_instance(n, seed.wrapping_add(i), depth))
        .collect::<Result<_>>()?;
    let mut summary = CorpusSummary {
        instances: count,
        connected: 0,
        cellular: 0,
        simple: 0,
        slalom: 0,
        simple_cellular: 0,
        passed: BTreeMap::new(),
        discrepancies: Vec::new(),
        findings: Vec::new(),
        wall_time_s: 0.0,
    };
    let mut rows = Vec::with_capacity(count);
    for (row, checks) in results {
        summary.connected += row.connected as usize;
        summary.cellular += row.cellular as usize;
        summary.simple += row.simple as usize;
        summary.slalom += row.slalom as usize;
        summary.simple_cellular += (row.simple && row.cellular) as usize;
        for c in &checks {
            let entry = summary.passed.entry(c.name.clone()).or_insert(0);
            match c.status {
                CheckStatus::Pass => *entry += 1,
                CheckStatus::Fail => summary.discrepancies.push(Discrepancy { seed: row.seed, check: c.name.clone() }),
                CheckStatus::NotApplicable => {}
            }
        }
        for f in &row.findings {
            summary.findings.push(Discrepancy { seed: row.seed, check: f.clone() });
        }
        rows.push(row);
    }
    summary.wall_time_s = start.elapsed().as_secs_f64();
    Ok((rows, summary))
}

pub fn corpus_csv(rows: &[CorpusRow]) -> String {
    let mut s = String::from(CORPUS_CSV_HEADER);
    s.push('\n');
    for r in rows {
        s.push_str(&r.csv_line());
        s.push('\n');
    }
    s
}
