//! The geometric Dynkin diagram of a signed divide.
//!
//! Vertices are the region basepoints and the double points, numbered with the
//! `Minus` basepoints first, then the double points, then the `Plus` basepoints.
//! Every sector of a double point that lies in a region gives an edge to that
//! region's basepoint; every segment separating two regions gives an edge
//! between their basepoints.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::divide_map::{DivideMap, FaceSet, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GammaVertexKind {
    /// basepoint of a `Minus` region, by region rank
    MinusBase(usize),
    /// double point, by crossing index
    Double(usize),
    /// basepoint of a `Plus` region, by region rank
    PlusBase(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaVertex {
    pub kind: GammaVertexKind,
    /// 1-based position in the canonical numbering
    pub index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeSpecies {
    /// sector between `slots.0` and `slots.1` of a crossing
    Sector { crossing: usize, slots: (u8, u8) },
    /// divide edge separating two regions
    Segment { edge: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GammaEdge {
    pub species: EdgeSpecies,
    /// 0-based vertex positions, `ends.0 < ends.1`
    pub ends: (usize, usize),
}

/// A flag `(b, d, p)`: a `Minus` basepoint and a `Plus` basepoint both joined to a double point.
/// Indices are block-local.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flag {
    pub minus: usize,
    pub double: usize,
    pub plus: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaCounts {
    pub mu: usize,
    pub e: u64,
    pub f: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gamma {
    pub vertices: Vec<GammaVertex>,
    pub edges: Vec<GammaEdge>,
    /// `Minus` basepoints × double points, sector multiplicities
    pub a: Vec<Vec<u64>>,
    /// double points × `Plus` basepoints, sector multiplicities
    pub b: Vec<Vec<u64>>,
    /// `Minus` × `Plus` basepoints, segment multiplicities
    pub c: Vec<Vec<u64>>,
}

impl Gamma {
    pub fn minus_count(&self) -> usize {
        self.a.len()
    }

    pub fn double_count(&self) -> usize {
        self.b.len()
    }

    pub fn plus_count(&self) -> usize {
        self.vertices.len() - self.a.len() - self.b.len()
    }

    pub fn mu(&self) -> usize {
        self.vertices.len()
    }

    /// True when some pair of vertices is joined by more than one edge.
    pub fn has_multi_edge(&self) -> bool {
        self.a.iter().chain(&self.b).chain(&self.c).flatten().any(|&x| x > 1)
    }

    /// Relabels the vertices by the block-preserving permutation `perm`
    /// (`perm[i]` is the new 0-based position of vertex `i`).
    pub fn permuted(&self, perm: &[usize]) -> Gamma {
        let (nm, nd) = (self.minus_count(), self.double_count());
        let np = self.plus_count();
        for (i, &p) in perm.iter().enumerate() {
            let block = |x: usize| (x >= nm) as u8 + (x >= nm + nd) as u8;
            assert_eq!(block(i), block(p), "permutation must preserve blocks");
        }
        let mut vertices = self.vertices.clone();
        for (i, v) in self.vertices.iter().enumerate() {
            vertices[perm[i]] = GammaVertex { kind: v.kind, index: perm[i] + 1 };
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let (x, y) = (perm[e.ends.0], perm[e.ends.1]);
                GammaEdge { species: e.species, ends: (x.min(y), x.max(y)) }
            })
            .collect();
        let mut a = vec![vec![0; nd]; nm];
        let mut b = vec![vec![0; np]; nd];
        let mut c = vec![vec![0; np]; nm];
        for i in 0..nm {
            for j in 0..nd {
                a[perm[i]][perm[nm + j] - nm] = self.a[i][j];
            }
            for j in 0..np {
                c[perm[i]][perm[nm + nd + j] - nm - nd] = self.c[i][j];
            }
        }
        for i in 0..nd {
            for j in 0..np {
                b[perm[nm + i] - nm][perm[nm + nd + j] - nm - nd] = self.b[i][j];
            }
        }
        Gamma { vertices, edges, a, b, c }
    }
}

pub fn build_gamma(map: &DivideMap, faces: &FaceSet) -> Gamma {
    let regions = faces.regions();
    let minus: Vec<usize> =
        (0..regions.len()).filter(|&r| faces.faces[regions[r]].sign == Sign::Minus).collect();
    let plus: Vec<usize> = (0..regions.len()).filter(|&r| faces.faces[regions[r]].sign == Sign::Plus).collect();
    let (nm, nd, np) = (minus.len(), map.crossing_count(), plus.len());

    // face index -> (sign, block-local index)
    let mut base_of = vec![None; faces.faces.len()];
    for (i, &r) in minus.iter().enumerate() {
        base_of[regions[r]] = Some((Sign::Minus, i));
    }
    for (i, &r) in plus.iter().enumerate() {
        base_of[regions[r]] = Some((Sign::Plus, i));
    }
    let position = |sign: Sign, i: usize| match sign {
        Sign::Minus => i,
        Sign::Plus => nm + nd + i,
    };

    let mut vertices = Vec::with_capacity(nm + nd + np);
    vertices.extend(minus.iter().map(|&r| GammaVertexKind::MinusBase(r)));
    vertices.extend((0..nd).map(GammaVertexKind::Double));
    vertices.extend(plus.iter().map(|&r| GammaVertexKind::PlusBase(r)));
    let vertices = vertices.into_iter().enumerate().map(|(i, kind)| GammaVertex { kind, index: i + 1 }).collect();

    let mut a = vec![vec![0u64; nd]; nm];
    let mut b = vec![vec![0u64; np]; nd];
    let mut c = vec![vec![0u64; np]; nm];
    let mut edges = Vec::new();

    for d in 0..nd {
        let v = map.crossing_vertex(d);
        for slot in 0..4u8 {
            let Some((sign, i)) = base_of[faces.sector_face(map, v, slot)] else { continue };
            match sign {
                Sign::Minus => a[i][d] += 1,
                Sign::Plus => b[d][i] += 1,
            }
            let (x, y) = (position(sign, i), nm + d);
            edges.push(GammaEdge {
                species: EdgeSpecies::Sector { crossing: d, slots: (slot, (slot + 1) % 4) },
                ends: (x.min(y), x.max(y)),
            });
        }
    }
    for seg in faces.segments(map) {
        let (Some(l), Some(r)) = (base_of[seg.left], base_of[seg.right]) else { continue };
        let (m, p) = if l.0 == Sign::Minus { (l.1, r.1) } else { (r.1, l.1) };
        c[m][p] += 1;
        edges.push(GammaEdge { species: EdgeSpecies::Segment { edge: seg.edge }, ends: (m, nm + nd + p) });
    }
    Gamma { vertices, edges, a, b, c }
}

pub fn counts(gamma: &Gamma) -> GammaCounts {
    let sum = |m: &Vec<Vec<u64>>| m.iter().flatten().sum::<u64>();
    let f = (0..gamma.double_count())
        .map(|d| gamma.a.iter().map(|row| row[d]).sum::<u64>() * gamma.b[d].iter().sum::<u64>())
        .sum();
    GammaCounts { mu: gamma.mu(), e: sum(&gamma.a) + sum(&gamma.b) + sum(&gamma.c), f }
}

/// Euler characteristic of the body: double points, segments touching a region, regions.
pub fn body_euler(map: &DivideMap, faces: &FaceSet) -> i64 {
    let touching = faces
        .segments(map)
        .iter()
        .filter(|s| faces.faces[s.left].is_region() || faces.faces[s.right].is_region())
        .count();
    map.crossing_count() as i64 - touching as i64 + faces.region_count() as i64
}

/// Flags whose closing segment edge between the two basepoints is missing.
pub fn check_flag_edges(gamma: &Gamma) -> Vec<Flag> {
    let mut out = Vec::new();
    for (m, row) in gamma.a.iter().enumerate() {
        for (d, &ad) in row.iter().enumerate() {
            if ad == 0 {
                continue;
            }
            for (p, &bd) in gamma.b[d].iter().enumerate() {
                if bd > 0 && gamma.c[m][p] == 0 {
                    out.push(Flag { minus: m, double: d, plus: p });
                }
            }
        }
    }
    out
}

fn node_name(v: &GammaVertex) -> String {
    match v.kind {
        GammaVertexKind::MinusBase(_) => format!("m{}", v.index),
        GammaVertexKind::Double(_) => format!("d{}", v.index),
        GammaVertexKind::PlusBase(_) => format!("p{}", v.index),
    }
}

/// Graphviz rendering; sector edges solid, segment edges dashed.
pub fn gamma_to_dot(gamma: &Gamma) -> String {
    let mut s = String::from("graph gamma {\n");
    for v in &gamma.vertices {
        let attrs = match v.kind {
            GammaVertexKind::MinusBase(_) => "shape=box, label=\"-\"",
            GammaVertexKind::Double(_) => "shape=circle, label=\"\", width=0.15",
            GammaVertexKind::PlusBase(_) => "shape=box, label=\"+\"",
        };
        writeln!(s, "  {} [{}];", node_name(v), attrs).unwrap();
    }
    for e in &gamma.edges {
        let style = match e.species {
            EdgeSpecies::Sector { .. } => "solid",
            EdgeSpecies::Segment { .. } => "dashed",
        };
        let (x, y) = (&gamma.vertices[e.ends.0], &gamma.vertices[e.ends.1]);
        writeln!(s, "  {} -- {} [style={}];", node_name(x), node_name(y), style).unwrap();
    }
    s.push_str("}\n");
    s
}
