//! Parametric divides built directly as rotation systems.

use crate::divide_map::{Attach, DivideMap};
use crate::error::{DivideError, Result};

/// A base chord crossed `n` times by a wiggling second branch.
///
/// The wiggle starts above the chord on the west side and crosses downward at
/// odd crossings, upward at even ones. Regions alternate below/above the chord.
pub fn zigzag(n: usize) -> DivideMap {
    assert!(n >= 1, "zigzag needs at least one crossing");
    // ccw from the east end of the chord
    let endpoints: &[&str] = if n % 2 == 0 { &["ae", "be", "bs", "aw"] } else { &["ae", "bs", "aw", "be"] };
    let crossings: Vec<String> = (1..=n).map(|i| format!("c{i}")).collect();
    let c = |i: usize| crossings[i - 1].as_str();
    // slot of the wiggle toward its previous / next vertex at crossing i
    let prev_slot = |i: usize| if i % 2 == 1 { 1 } else { 3 };
    let next_slot = |i: usize| if i % 2 == 1 { 3 } else { 1 };

    let mut edges = vec![(("aw", 0), (c(1), 2))];
    for i in 1..n {
        edges.push(((c(i), 0), (c(i + 1), 2)));
    }
    edges.push(((c(n), 0), ("ae", 0)));
    edges.push((("bs", 0), (c(1), prev_slot(1))));
    for i in 1..n {
        edges.push(((c(i), next_slot(i)), (c(i + 1), prev_slot(i + 1))));
    }
    edges.push(((c(n), next_slot(n)), ("be", 0)));
    let crossing_refs: Vec<&str> = crossings.iter().map(String::as_str).collect();
    DivideMap::new(endpoints, &crossing_refs, &edges).expect("zigzag rotation system is planar")
}

/// One branch running through `k` consecutive small loops, all on the same side.
pub fn coil(k: usize) -> DivideMap {
    assert!(k >= 1, "coil needs at least one loop");
    let crossings: Vec<String> = (1..=k).map(|i| format!("c{i}")).collect();
    let c = |i: usize| crossings[i - 1].as_str();
    let mut edges = vec![(("e1", 0), (c(1), 0))];
    for i in 1..=k {
        edges.push(((c(i), 1), (c(i), 2)));
        if i < k {
            edges.push(((c(i), 3), (c(i + 1), 0)));
        }
    }
    edges.push(((c(k), 3), ("e2", 0)));
    let crossing_refs: Vec<&str> = crossings.iter().map(String::as_str).collect();
    DivideMap::new(&["e1", "e2"], &crossing_refs, &edges).expect("coil rotation system is planar")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurlSide {
    /// into the face to the left of dart `2 * edge`
    Left,
    Right,
}

/// Inserts a small kink on divide edge `edge`, protruding into the face on `side`.
/// The new crossing is appended after the existing ones.
pub fn with_curl(map: &DivideMap, edge: usize, side: CurlSide) -> Result<DivideMap> {
    if edge >= map.edge_count() {
        return Err(DivideError::Malformed(format!("no edge {edge}")));
    }
    let mut labels = map.labels().to_vec();
    let mut name = format!("k{}", map.crossing_count() + 1);
    while labels.contains(&name) {
        name.push('\'');
    }
    labels.push(name);
    let kink = labels.len() - 1;
    let at = |slot| Attach { vertex: kink, slot };
    let mut edges = map.edges().to_vec();
    let [a, b] = edges[edge];
    edges[edge] = [a, at(0)];
    match side {
        CurlSide::Left => {
            edges.push([at(2), at(3)]);
            edges.push([at(1), b]);
        }
        CurlSide::Right => {
            edges.push([at(2), at(1)]);
            edges.push([at(3), b]);
        }
    }
    DivideMap::from_parts(labels, map.endpoint_count(), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::divide_map::{classify, compute_faces, FaceKind};
    use crate::dynkin::{build_gamma, counts};

    #[test]
    fn zigzag_shapes() {
        for n in 1..=8 {
            let m = zigzag(n);
            let fs = compute_faces(&m).unwrap();
            let s = classify(&m, &fs);
            assert_eq!((s.r, s.delta, s.regions), (2, n, n - 1));
            assert!(s.connected && s.cellular && s.simple, "zigzag({n})");
            assert_eq!(build_gamma(&m, &fs).mu(), 2 * n - 1);
        }
    }

    #[test]
    fn zigzag3_gamma_is_a_path() {
        let m = zigzag(3);
        let fs = compute_faces(&m).unwrap();
        let g = build_gamma(&m, &fs);
        let c = counts(&g);
        assert_eq!((c.mu, c.e, c.f), (5, 4, 0));
        let mut degree = vec![0; 5];
        for e in &g.edges {
            degree[e.ends.0] += 1;
            degree[e.ends.1] += 1;
        }
        degree.sort();
        assert_eq!(degree, vec![1, 1, 2, 2, 2]);
    }

    #[test]
    fn coil_shapes() {
        for k in 1..=5 {
            let m = coil(k);
            let fs = compute_faces(&m).unwrap();
            let s = classify(&m, &fs);
            assert_eq!((s.r, s.delta, s.regions), (1, k, k));
            assert_eq!(s.simple, k == 1);
            assert!(s.cellular);
        }
    }

    #[test]
    fn curl_sides() {
        let lens = zigzag(2);
        let fs = compute_faces(&lens).unwrap();
        let edge = (0..lens.edge_count()).find(|&k| fs.faces[fs.face_of(2 * k).unwrap()].kind == FaceKind::Region).unwrap();

        let inner = with_curl(&lens, edge, CurlSide::Left).unwrap();
        let ifs = compute_faces(&inner).unwrap();
        let s = classify(&inner, &ifs);
        assert_eq!((s.delta, s.regions), (3, 2));
        assert!(s.connected && !s.cellular && s.simple);
        assert!(build_gamma(&inner, &ifs).has_multi_edge());

        let outer = with_curl(&lens, edge, CurlSide::Right).unwrap();
        let ofs = compute_faces(&outer).unwrap();
        let s = classify(&outer, &ofs);
        assert_eq!((s.delta, s.regions), (3, 2));
        assert!(s.cellular);
        assert!(!build_gamma(&outer, &ofs).has_multi_edge());
    }
}
