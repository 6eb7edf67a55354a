//! Divides encoded as combinatorial planar maps relative to the disk boundary.
//!
//! A [`DivideMap`] stores endpoint vertices (in counterclockwise order along the
//! boundary circle), crossing vertices with four counterclockwise slots, and the
//! divide edges joining `(vertex, slot)` attachment points. Each divide edge `k`
//! carries two darts `2k` (leaving attachment `a`) and `2k + 1` (leaving `b`).
//!
//! Face tracing runs on the *augmented* map which also contains the boundary
//! arcs between consecutive endpoints. Boundary arc `j` joins endpoint `j` to
//! endpoint `j + 1` and owns the darts `2E + 2j` (leaving `j`) and `2E + 2j + 1`.

mod branches;
mod classify;
mod faces;
mod format;

pub use branches::{trace_branches, Branch};
pub use classify::{classify, is_connected, regions_contractible, separating_segments, DivideStats};
pub use faces::{compute_faces, compute_faces_with, Face, FaceKind, FaceSet, Segment, Sign, SignNormalization};
pub use format::{parse_divide, MapDocument, MAP_FORMAT};

use std::collections::HashMap;

use crate::error::{DivideError, Result};

/// A `(vertex, slot)` attachment point. Vertex indices put endpoints first, then crossings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Attach {
    pub vertex: usize,
    pub slot: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    Endpoint,
    Crossing,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivideMap {
    labels: Vec<String>,
    endpoints: usize,
    edges: Vec<[Attach; 2]>,
    /// dart leaving each attachment point, indexed `vertex * 4 + slot`
    slot_dart: Vec<usize>,
}

impl DivideMap {
    /// Validates and builds a map from labelled parts. Labels are canonicalized to
    /// dense indices in input order: endpoints `0..2r`, then crossings.
    pub fn new<S: AsRef<str>>(
        endpoints: &[S],
        crossings: &[S],
        edges: &[((S, i64), (S, i64))],
    ) -> Result<Self> {
        if endpoints.len() < 2 || endpoints.len() % 2 != 0 {
            return Err(DivideError::EndpointCount(endpoints.len()));
        }
        let labels: Vec<String> =
            endpoints.iter().chain(crossings).map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() {
                return Err(DivideError::Malformed("empty label".into()));
            }
            if index.insert(l.as_str(), i).is_some() {
                return Err(DivideError::DuplicateLabel(l.clone()));
            }
        }
        let n_end = endpoints.len();
        let resolve = |(label, slot): &(S, i64)| -> Result<Attach> {
            let label = label.as_ref();
            let &vertex = index.get(label).ok_or_else(|| DivideError::UnknownLabel(label.to_string()))?;
            let max = if vertex < n_end { 0 } else { 3 };
            if *slot < 0 || *slot > max {
                return Err(DivideError::InvalidSlot { label: label.to_string(), slot: *slot });
            }
            Ok(Attach { vertex, slot: *slot as u8 })
        };
        let mut resolved = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            resolved.push([resolve(a)?, resolve(b)?]);
        }
        Self::from_parts(labels, n_end, resolved)
    }

    /// Builds from already-indexed parts, running the full validation.
    pub(crate) fn from_parts(labels: Vec<String>, endpoints: usize, edges: Vec<[Attach; 2]>) -> Result<Self> {
        if endpoints < 2 || endpoints % 2 != 0 {
            return Err(DivideError::EndpointCount(endpoints));
        }
        let n_vert = labels.len();
        let mut slot_dart = vec![usize::MAX; n_vert * 4];
        for (k, e) in edges.iter().enumerate() {
            for (side, at) in e.iter().enumerate() {
                let cell = &mut slot_dart[at.vertex * 4 + at.slot as usize];
                if *cell != usize::MAX {
                    return Err(DivideError::SlotReuse { label: labels[at.vertex].clone(), slot: at.slot });
                }
                *cell = 2 * k + side;
            }
        }
        for v in 0..n_vert {
            let used = if v < endpoints { 1 } else { 4 };
            for s in 0..used {
                if slot_dart[v * 4 + s] == usize::MAX {
                    return Err(DivideError::UnusedSlot { label: labels[v].clone(), slot: s as u8 });
                }
            }
        }
        let map = DivideMap { labels, endpoints, edges, slot_dart };
        map.validate_topology()?;
        Ok(map)
    }

    fn validate_topology(&self) -> Result<()> {
        trace_branches(self)?;
        let walks = self.trace_augmented_faces();
        let v = self.vertex_count() as i64;
        let e = (self.edges.len() + self.endpoints) as i64;
        let chi = v - e + walks.len() as i64;
        if chi != 2 {
            return Err(DivideError::NotPlanar(chi));
        }
        let boundary_only = walks.iter().filter(|w| w.iter().all(|&d| self.is_arc(d))).count();
        if boundary_only != 1 {
            return Err(DivideError::BoundaryFace(boundary_only));
        }
        Ok(())
    }

    /// Number of branches `r`.
    pub fn branch_count(&self) -> usize {
        self.endpoints / 2
    }

    pub fn endpoint_count(&self) -> usize {
        self.endpoints
    }

    /// Number of double points `δ`.
    pub fn crossing_count(&self) -> usize {
        self.labels.len() - self.endpoints
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[[Attach; 2]] {
        &self.edges
    }

    pub fn label(&self, vertex: usize) -> &str {
        &self.labels[vertex]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn kind(&self, vertex: usize) -> VertexKind {
        if vertex < self.endpoints {
            VertexKind::Endpoint
        } else {
            VertexKind::Crossing
        }
    }

    pub fn is_crossing(&self, vertex: usize) -> bool {
        vertex >= self.endpoints
    }

    /// Index of a crossing vertex among the crossings.
    pub fn crossing_index(&self, vertex: usize) -> usize {
        debug_assert!(self.is_crossing(vertex));
        vertex - self.endpoints
    }

    pub fn crossing_vertex(&self, crossing: usize) -> usize {
        self.endpoints + crossing
    }

    /// Darts of divide edges: `0..2E`.
    pub fn divide_dart_count(&self) -> usize {
        2 * self.edges.len()
    }

    /// All darts of the augmented map: divide darts then boundary arc darts.
    pub fn dart_count(&self) -> usize {
        2 * self.edges.len() + 2 * self.endpoints
    }

    pub fn is_arc(&self, dart: usize) -> bool {
        dart >= self.divide_dart_count()
    }

    pub fn twin(&self, dart: usize) -> usize {
        dart ^ 1
    }

    /// Attachment point a divide dart leaves from.
    pub fn attach(&self, dart: usize) -> Attach {
        self.edges[dart / 2][dart % 2]
    }

    /// Divide dart leaving `(vertex, slot)`.
    pub fn dart_at(&self, vertex: usize, slot: u8) -> usize {
        self.slot_dart[vertex * 4 + slot as usize]
    }

    /// Origin vertex of any dart of the augmented map.
    pub fn origin(&self, dart: usize) -> usize {
        let base = self.divide_dart_count();
        if dart < base {
            self.attach(dart).vertex
        } else {
            let j = (dart - base) / 2;
            if (dart - base) % 2 == 0 {
                j
            } else {
                (j + 1) % self.endpoints
            }
        }
    }

    /// Next dart clockwise around the origin of `dart`.
    pub fn rotate_cw(&self, dart: usize) -> usize {
        let base = self.divide_dart_count();
        let m = self.endpoints;
        if dart < base {
            let at = self.attach(dart);
            if self.is_crossing(at.vertex) {
                return self.dart_at(at.vertex, (at.slot + 3) % 4);
            }
            // endpoint, ccw rotation [succ arc, divide, pred arc]
            return base + 2 * at.vertex;
        }
        let rel = dart - base;
        let j = rel / 2;
        if rel % 2 == 0 {
            // successor arc at endpoint j -> predecessor arc at j
            base + 2 * ((j + m - 1) % m) + 1
        } else {
            // predecessor arc at endpoint j + 1 -> divide edge there
            self.dart_at((j + 1) % m, 0)
        }
    }

    /// Face permutation: the dart following `dart` on the walk of the face to its left.
    pub fn face_next(&self, dart: usize) -> usize {
        self.rotate_cw(self.twin(dart))
    }

    /// Boundary walks of every face of the augmented map, each starting at its smallest dart.
    pub(crate) fn trace_augmented_faces(&self) -> Vec<Vec<usize>> {
        let n = self.dart_count();
        let mut seen = vec![false; n];
        let mut walks = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                walk.push(d);
                d = self.face_next(d);
            }
            walks.push(walk);
        }
        walks
    }
}

#[cfg(test)]
pub(crate) mod samples {
    use super::DivideMap;

    pub fn x1() -> DivideMap {
        DivideMap::new(
            &["e1", "e2", "e3", "e4"],
            &["c1"],
            &[
                (("e1", 0), ("c1", 0)),
                (("e2", 0), ("c1", 1)),
                (("e3", 0), ("c1", 2)),
                (("e4", 0), ("c1", 3)),
            ],
        )
        .unwrap()
    }

    pub fn lp() -> DivideMap {
        DivideMap::new(
            &["e1", "e2"],
            &["c1"],
            &[(("e1", 0), ("c1", 0)), (("c1", 1), ("c1", 2)), (("c1", 3), ("e2", 0))],
        )
        .unwrap()
    }

    pub fn lens() -> DivideMap {
        DivideMap::new(
            &["b2", "b1", "a1", "a2"],
            &["c1", "c2"],
            &[
                (("a1", 0), ("c1", 2)),
                (("c1", 0), ("c2", 2)),
                (("c2", 0), ("a2", 0)),
                (("b1", 0), ("c1", 1)),
                (("c1", 3), ("c2", 3)),
                (("c2", 1), ("b2", 0)),
            ],
        )
        .unwrap()
    }
}
