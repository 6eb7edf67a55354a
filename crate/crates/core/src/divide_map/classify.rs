use serde::{Deserialize, Serialize};

use super::{DivideMap, FaceKind, FaceSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivideStats {
    pub r: usize,
    pub delta: usize,
    pub regions: usize,
    pub connected: bool,
    pub cellular: bool,
    pub simple: bool,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a] = b;
        }
    }
}

fn components(map: &DivideMap, skip_edge: Option<usize>) -> Dsu {
    let mut dsu = Dsu::new(map.vertex_count());
    for (k, e) in map.edges().iter().enumerate() {
        if Some(k) != skip_edge {
            dsu.union(e[0].vertex, e[1].vertex);
        }
    }
    dsu
}

pub fn is_connected(map: &DivideMap) -> bool {
    let mut dsu = components(map, None);
    let root = dsu.find(0);
    (1..map.vertex_count()).all(|v| dsu.find(v) == root)
}

/// True when no region's boundary walk passes a vertex twice.
pub fn regions_contractible(map: &DivideMap, faces: &FaceSet) -> bool {
    faces.regions().iter().all(|&r| {
        let mut seen = vec![false; map.vertex_count()];
        faces.faces[r].walk.iter().all(|&d| !std::mem::replace(&mut seen[map.origin(d)], true))
    })
}

/// Segments with `Outer` faces on both sides whose removal splits the crossings
/// into two non-empty parts. Each one witnesses an arc that separates double points.
pub fn separating_segments(map: &DivideMap, faces: &FaceSet) -> Vec<usize> {
    let delta = map.crossing_count();
    let mut out = Vec::new();
    for seg in faces.segments(map) {
        if faces.faces[seg.left].kind != FaceKind::Outer || faces.faces[seg.right].kind != FaceKind::Outer {
            continue;
        }
        let mut dsu = components(map, Some(seg.edge));
        let e = map.edges()[seg.edge];
        let side = dsu.find(e[0].vertex);
        let on_side = (0..delta).filter(|&c| dsu.find(map.crossing_vertex(c)) == side).count();
        if on_side != 0 && on_side != delta {
            out.push(seg.edge);
        }
    }
    out
}

pub fn classify(map: &DivideMap, faces: &FaceSet) -> DivideStats {
    let connected = is_connected(map);
    let delta = map.crossing_count();
    DivideStats {
        r: map.branch_count(),
        delta,
        regions: faces.region_count(),
        connected,
        cellular: connected && regions_contractible(map, faces),
        simple: connected && delta >= 1 && separating_segments(map, faces).is_empty(),
    }
}
