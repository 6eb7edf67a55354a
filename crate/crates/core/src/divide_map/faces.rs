use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::DivideMap;
use crate::error::{DivideError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FaceKind {
    /// touches the boundary circle
    Outer,
    Region,
}

/// Which face of the checkerboard colouring receives `Minus`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SignNormalization {
    /// The first region (or, without regions, the face along the first boundary arc) is `Minus`.
    #[default]
    Standard,
    /// Every sign of `Standard` reversed.
    Flipped,
}

/// A complement component inside the disk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Face {
    /// darts of the augmented map, starting at the smallest
    pub walk: Vec<usize>,
    pub kind: FaceKind,
    pub sign: Sign,
}

impl Face {
    pub fn is_region(&self) -> bool {
        self.kind == FaceKind::Region
    }
}

/// A divide edge with the faces to its left (dart `2k`) and right (dart `2k + 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Segment {
    pub edge: usize,
    pub left: usize,
    pub right: usize,
}

/// The inside faces of a divide with their signs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceSet {
    pub faces: Vec<Face>,
    /// face index of every dart of the augmented map; `None` on the outside face
    face_of: Vec<Option<usize>>,
    /// face indices of regions, ordered by smallest dart on the walk
    regions: Vec<usize>,
}

impl FaceSet {
    pub fn face_of(&self, dart: usize) -> Option<usize> {
        self.face_of[dart]
    }

    pub fn regions(&self) -> &[usize] {
        &self.regions
    }

    pub fn region_count(&self) -> usize {
        self.regions.len()
    }

    /// Position of a face among the regions, if it is one.
    pub fn region_rank(&self, face: usize) -> Option<usize> {
        self.regions.iter().position(|&f| f == face)
    }

    pub fn segments(&self, map: &DivideMap) -> Vec<Segment> {
        (0..map.edge_count())
            .map(|k| Segment {
                edge: k,
                left: self.face_of[2 * k].expect("divide darts lie inside the disk"),
                right: self.face_of[2 * k + 1].expect("divide darts lie inside the disk"),
            })
            .collect()
    }

    /// Face in the sector between slots `slot` and `slot + 1` of a crossing.
    pub fn sector_face(&self, map: &DivideMap, vertex: usize, slot: u8) -> usize {
        self.face_of[map.dart_at(vertex, slot)].expect("sectors lie inside the disk")
    }
}

pub fn compute_faces(map: &DivideMap) -> Result<FaceSet> {
    compute_faces_with(map, SignNormalization::Standard)
}

pub fn compute_faces_with(map: &DivideMap, normalization: SignNormalization) -> Result<FaceSet> {
    let walks = map.trace_augmented_faces();
    let mut face_of = vec![None; map.dart_count()];
    let mut faces = Vec::with_capacity(walks.len());
    let mut outside = 0;
    for walk in walks {
        if walk.iter().all(|&d| map.is_arc(d)) {
            outside += 1;
            continue;
        }
        let touches_boundary = walk.iter().any(|&d| map.is_arc(d) || !map.is_crossing(map.origin(d)));
        let kind = if touches_boundary { FaceKind::Outer } else { FaceKind::Region };
        for &d in &walk {
            face_of[d] = Some(faces.len());
        }
        faces.push(Face { walk, kind, sign: Sign::Minus });
    }
    if outside != 1 {
        return Err(DivideError::BoundaryFace(outside));
    }
    // walks start at their smallest dart and are produced in increasing order of it
    let regions: Vec<usize> = (0..faces.len()).filter(|&f| faces[f].is_region()).collect();

    let anchor = match regions.first() {
        Some(&f) => f,
        None => face_of[map.divide_dart_count()].ok_or_else(|| DivideError::Internal("first arc outside".into()))?,
    };
    let anchor_sign = match normalization {
        SignNormalization::Standard => Sign::Minus,
        SignNormalization::Flipped => Sign::Plus,
    };

    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); faces.len()];
    for k in 0..map.edge_count() {
        let (l, r) = (face_of[2 * k].unwrap(), face_of[2 * k + 1].unwrap());
        if l == r {
            return Err(DivideError::Coloring(k));
        }
        adj[l].push((r, k));
        adj[r].push((l, k));
    }
    let mut sign: Vec<Option<Sign>> = vec![None; faces.len()];
    sign[anchor] = Some(anchor_sign);
    let mut queue = VecDeque::from([anchor]);
    while let Some(f) = queue.pop_front() {
        let s = sign[f].unwrap();
        for &(g, k) in &adj[f] {
            match sign[g] {
                None => {
                    sign[g] = Some(s.flip());
                    queue.push_back(g);
                }
                Some(t) if t == s => return Err(DivideError::Coloring(k)),
                Some(_) => {}
            }
        }
    }
    for (f, face) in faces.iter_mut().enumerate() {
        face.sign = sign[f].ok_or_else(|| DivideError::Internal(format!("face {f} not reached by colouring")))?;
    }
    Ok(FaceSet { faces, face_of, regions })
}
