//! Straight chord arrangements with exact rational geometry.
//!
//! A boundary point is given by its half-angle tangent `t`, the point
//! `((1 - t^2) / (1 + t^2), 2t / (1 + t^2))`; `t = ∞` is `(-1, 0)`. Increasing `t`
//! runs counterclockwise around the circle starting just after `(-1, 0)`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::divide_map::{Attach, DivideMap};
use crate::error::{DivideError, Result};

pub const CHORDS_FORMAT: &str = "divide-chords/1";
const GRID: i64 = 10_000;
const RESAMPLE_BUDGET: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Param {
    Finite(BigRational),
    Infinity,
}

impl Param {
    pub fn ratio(p: i64, q: i64) -> Param {
        Param::Finite(BigRational::new(p.into(), q.into()))
    }

    pub fn point(&self) -> Point {
        match self {
            Param::Infinity => (-BigRational::one(), BigRational::zero()),
            Param::Finite(t) => {
                let one = BigRational::one();
                let t2 = t * t;
                let den = &one + &t2;
                ((&one - &t2) / &den, (t + t) / den)
            }
        }
    }
}

impl PartialOrd for Param {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Param {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Param::Infinity, Param::Infinity) => Ordering::Equal,
            (Param::Infinity, _) => Ordering::Greater,
            (_, Param::Infinity) => Ordering::Less,
            (Param::Finite(a), Param::Finite(b)) => a.cmp(b),
        }
    }
}

pub type Point = (BigRational, BigRational);

fn sub(a: &Point, b: &Point) -> Point {
    (&a.0 - &b.0, &a.1 - &b.1)
}

fn cross(a: &Point, b: &Point) -> BigRational {
    &a.0 * &b.1 - &a.1 * &b.0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chord {
    pub s: Param,
    pub t: Param,
}

impl Chord {
    fn interval(&self) -> (&Param, &Param) {
        if self.s < self.t {
            (&self.s, &self.t)
        } else {
            (&self.t, &self.s)
        }
    }

    /// True when the endpoints of the two chords alternate around the circle.
    pub fn interleaves(&self, other: &Chord) -> bool {
        let (lo, hi) = self.interval();
        let inside = |p: &Param| lo < p && p < hi;
        inside(&other.s) != inside(&other.t)
    }
}

/// A crossing of two chords `i < j`, with its position along each of them
/// (0 at `s`, 1 at `t`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordCrossing {
    pub chords: (usize, usize),
    pub point: Point,
    pub along: (BigRational, BigRational),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordSet {
    chords: Vec<Chord>,
    crossings: Vec<ChordCrossing>,
    /// sampling attempts rejected before this set was accepted
    pub rejections: usize,
}

impl ChordSet {
    /// Checks general position: distinct boundary parameters and no three chords through a point.
    pub fn new(chords: Vec<Chord>) -> Result<Self> {
        if chords.is_empty() {
            return Err(DivideError::GeneralPosition("no chords".into()));
        }
        let mut params: Vec<&Param> = chords.iter().flat_map(|c| [&c.s, &c.t]).collect();
        params.sort();
        if params.windows(2).any(|w| w[0] == w[1]) {
            return Err(DivideError::GeneralPosition("repeated boundary point".into()));
        }
        let mut crossings = Vec::new();
        for i in 0..chords.len() {
            for j in i + 1..chords.len() {
                if !chords[i].interleaves(&chords[j]) {
                    continue;
                }
                let (si, ti) = (chords[i].s.point(), chords[i].t.point());
                let (sj, tj) = (chords[j].s.point(), chords[j].t.point());
                let (di, dj) = (sub(&ti, &si), sub(&tj, &sj));
                let den = cross(&di, &dj);
                let w = sub(&sj, &si);
                let u = cross(&w, &dj) / &den;
                let v = cross(&w, &di) / &den;
                let point = (&si.0 + &u * &di.0, &si.1 + &u * &di.1);
                crossings.push(ChordCrossing { chords: (i, j), point, along: (u, v) });
            }
        }
        for c in 0..chords.len() {
            let mut along: Vec<&BigRational> = crossings
                .iter()
                .filter_map(|x| match x.chords {
                    (i, _) if i == c => Some(&x.along.0),
                    (_, j) if j == c => Some(&x.along.1),
                    _ => None,
                })
                .collect();
            along.sort();
            if along.windows(2).any(|w| w[0] == w[1]) {
                return Err(DivideError::GeneralPosition(format!("three chords concurrent on chord {c}")));
            }
        }
        Ok(ChordSet { chords, crossings, rejections: 0 })
    }

    pub fn chords(&self) -> &[Chord] {
        &self.chords
    }

    /// Crossings ordered by chord pair.
    pub fn crossings(&self) -> &[ChordCrossing] {
        &self.crossings
    }

    /// Pairs of chords whose endpoints interleave, counted by brute force.
    pub fn interleaved_pairs(&self) -> usize {
        let n = self.chords.len();
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| self.chords[i].interleaves(&self.chords[j])).count()
    }
}

fn sample_param(rng: &mut ChaCha8Rng) -> Param {
    let p: i64 = rng.gen_range(-(GRID - 1)..=GRID - 1);
    Param::ratio(p, GRID - p.abs())
}

/// Random chords with parameters on a fixed rational grid, deterministic in `(n, seed)`.
pub fn gen_chords(n: usize, seed: u64) -> Result<ChordSet> {
    assert!(n >= 1, "need at least one chord");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..RESAMPLE_BUDGET {
        let chords: Vec<Chord> = (0..n).map(|_| Chord { s: sample_param(&mut rng), t: sample_param(&mut rng) }).collect();
        if let Ok(mut set) = ChordSet::new(chords) {
            set.rejections = attempt;
            return Ok(set);
        }
    }
    Err(DivideError::Exhausted(RESAMPLE_BUDGET))
}

impl ChordSet {
    /// Positions of the vertices of [`from_chords`]`(self)`, in vertex order.
    pub fn vertex_points(&self) -> Vec<Point> {
        let mut ends: Vec<&Param> = self.chords.iter().flat_map(|c| [&c.s, &c.t]).collect();
        ends.sort();
        ends.into_iter().map(Param::point).chain(self.crossings.iter().map(|x| x.point.clone())).collect()
    }
}

/// The divide of a chord arrangement.
pub fn from_chords(set: &ChordSet) -> Result<DivideMap> {
    let chords = set.chords();
    let n = chords.len();
    let mut ends: Vec<(&Param, usize, bool)> =
        chords.iter().enumerate().flat_map(|(i, c)| [(&c.s, i, false), (&c.t, i, true)]).collect();
    ends.sort();
    let mut labels: Vec<String> =
        ends.iter().map(|&(_, i, is_t)| format!("e{}{}", i, if is_t { 't' } else { 's' })).collect();
    let mut end_vertex = vec![[0usize; 2]; n];
    for (v, &(_, i, is_t)) in ends.iter().enumerate() {
        end_vertex[i][is_t as usize] = v;
    }
    let n_end = labels.len();

    // slots of each crossing: [toward t of chord i, ... ] in ccw order
    let mut forward = vec![[0u8; 2]; set.crossings().len()];
    for (k, x) in set.crossings().iter().enumerate() {
        let (i, j) = x.chords;
        labels.push(format!("x{i}_{j}"));
        let di = sub(&chords[i].t.point(), &chords[i].s.point());
        let dj = sub(&chords[j].t.point(), &chords[j].s.point());
        let turn = cross(&di, &dj);
        if turn.is_zero() {
            return Err(DivideError::GeneralPosition(format!("parallel chords {i} and {j}")));
        }
        // +i at slot 0, -i at slot 2; +j at 1 when it lies counterclockwise of +i
        forward[k] = [0, if turn.is_positive() { 1 } else { 3 }];
    }

    let mut edges = Vec::new();
    for c in 0..n {
        let mut along: Vec<(&BigRational, usize, usize)> = set
            .crossings()
            .iter()
            .enumerate()
            .filter_map(|(k, x)| match x.chords {
                (i, _) if i == c => Some((&x.along.0, k, 0)),
                (_, j) if j == c => Some((&x.along.1, k, 1)),
                _ => None,
            })
            .collect();
        along.sort();
        let mut prev = Attach { vertex: end_vertex[c][0], slot: 0 };
        for &(_, k, side) in &along {
            let out = forward[k][side];
            edges.push([prev, Attach { vertex: n_end + k, slot: (out + 2) % 4 }]);
            prev = Attach { vertex: n_end + k, slot: out };
        }
        edges.push([prev, Attach { vertex: end_vertex[c][1], slot: 0 }]);
    }
    DivideMap::from_parts(labels, n_end, edges)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamDocument {
    Ratio(i64, i64),
    Named(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChordDocument {
    pub s: ParamDocument,
    pub t: ParamDocument,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChordsDocument {
    pub format: String,
    pub chords: Vec<ChordDocument>,
}

impl ParamDocument {
    fn to_param(&self) -> Result<Param> {
        match self {
            ParamDocument::Ratio(_, 0) => Err(DivideError::Malformed("zero denominator".into())),
            ParamDocument::Ratio(p, q) => Ok(Param::ratio(*p, *q)),
            ParamDocument::Named(s) if s == "inf" => Ok(Param::Infinity),
            ParamDocument::Named(s) => Err(DivideError::Malformed(format!("bad chord parameter {s:?}"))),
        }
    }

    fn from_param(p: &Param) -> ParamDocument {
        match p {
            Param::Infinity => ParamDocument::Named("inf".into()),
            Param::Finite(r) => ParamDocument::Ratio(
                r.numer().to_i64().expect("parameter numerator fits in i64"),
                r.denom().to_i64().expect("parameter denominator fits in i64"),
            ),
        }
    }
}

impl ChordsDocument {
    pub fn into_chord_set(self) -> Result<ChordSet> {
        if self.format != CHORDS_FORMAT {
            return Err(DivideError::UnknownFormat(self.format));
        }
        let chords = self
            .chords
            .iter()
            .map(|c| Ok(Chord { s: c.s.to_param()?, t: c.t.to_param()? }))
            .collect::<Result<Vec<_>>>()?;
        ChordSet::new(chords)
    }
}

impl ChordSet {
    pub fn to_document(&self) -> ChordsDocument {
        ChordsDocument {
            format: CHORDS_FORMAT.into(),
            chords: self
                .chords
                .iter()
                .map(|c| ChordDocument { s: ParamDocument::from_param(&c.s), t: ParamDocument::from_param(&c.t) })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.to_document()).expect("chord documents always serialize");
        s.push('\n');
        s
    }
}

pub fn parse_chords(document: &str) -> Result<ChordSet> {
    serde_json::from_str::<ChordsDocument>(document)?.into_chord_set()
}

/// Denominator bound of sampled parameters.
pub fn grid_denominator() -> BigInt {
    BigInt::from(GRID)
}
