use super::DivideMap;
use crate::error::{DivideError, Result};

/// One immersed interval: the darts it runs along, from one endpoint to another.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Branch {
    pub darts: Vec<usize>,
    pub start: usize,
    pub end: usize,
}

impl Branch {
    /// Crossing vertices in the order the branch passes them (with repetition).
    pub fn crossings(&self, map: &DivideMap) -> Vec<usize> {
        self.darts.iter().skip(1).map(|&d| map.attach(d).vertex).collect()
    }
}

/// Follows every strand straight through the crossings (slot `i` in, slot `i + 2` out).
pub fn trace_branches(map: &DivideMap) -> Result<Vec<Branch>> {
    let n = map.divide_dart_count();
    let mut used = vec![false; n / 2];
    let mut branches = Vec::with_capacity(map.branch_count());
    for e in 0..map.endpoint_count() {
        let first = map.dart_at(e, 0);
        if used[first / 2] {
            continue;
        }
        let mut darts = Vec::new();
        let mut d = first;
        let end = loop {
            if used[d / 2] {
                return Err(DivideError::Internal("branch revisits an edge".into()));
            }
            used[d / 2] = true;
            darts.push(d);
            let arrive = map.attach(map.twin(d));
            if !map.is_crossing(arrive.vertex) {
                break arrive.vertex;
            }
            d = map.dart_at(arrive.vertex, (arrive.slot + 2) % 4);
        };
        branches.push(Branch { darts, start: e, end });
    }
    if let Some(k) = used.iter().position(|u| !u) {
        let v = map.edges()[k][0].vertex;
        return Err(DivideError::ClosedBranch(map.label(v).to_string()));
    }
    Ok(branches)
}
