//! Traces of monodromy iterates next to closed-walk counts on the Dynkin diagram.
//!
//! No relation between the columns is assumed; the table is exploratory data.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::dynkin::Gamma;
use crate::error::Result;
use crate::matrix::IntMatrix;
use crate::seifert::{monodromy_matrix, trace_powers};
use crate::theorem::MAX_DEPTH;

/// Symmetric adjacency matrix of the diagram, with edge multiplicities.
pub fn adjacency(gamma: &Gamma) -> IntMatrix {
    let mut m = IntMatrix::zeros(gamma.mu());
    for e in &gamma.edges {
        m.add_at(e.ends.0, e.ends.1, 1);
        m.add_at(e.ends.1, e.ends.0, 1);
    }
    m
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkRow {
    pub k: usize,
    #[serde(with = "crate::bigint_serde")]
    pub tr_t: BigInt,
    #[serde(with = "crate::bigint_serde")]
    pub lefschetz: BigInt,
    #[serde(with = "crate::bigint_serde")]
    pub tr_m: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkTable {
    pub rows: Vec<WalkRow>,
}

pub const CSV_HEADER: &str = "k,tr_T_k,lefschetz_k,tr_M_k";

impl WalkTable {
    pub fn to_csv(&self) -> String {
        let mut s = String::from(CSV_HEADER);
        s.push('\n');
        for r in &self.rows {
            writeln!(s, "{},{},{},{}", r.k, r.tr_t, r.lefschetz, r.tr_m).unwrap();
        }
        s
    }
}

/// Rows `k = 1..=depth` (depth capped at 64).
pub fn walk_table(gamma: &Gamma, n: &IntMatrix, depth: usize) -> Result<WalkTable> {
    let depth = depth.clamp(1, MAX_DEPTH);
    let t = monodromy_matrix(n)?;
    let tr_t = trace_powers(&t, depth);
    let tr_m = trace_powers(&adjacency(gamma), depth);
    let rows = tr_t
        .into_iter()
        .zip(tr_m)
        .enumerate()
        .map(|(i, (tt, tm))| WalkRow { k: i + 1, lefschetz: BigInt::one() - &tt, tr_t: tt, tr_m: tm })
        .collect();
    Ok(WalkTable { rows })
}
