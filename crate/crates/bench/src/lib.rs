//! Shared inputs for the criterion benchmarks.

use divide_core::generators::{from_chords, gen_chords, zigzag};
use divide_core::DivideMap;

/// Chord divides with `n` chords, seeds `0..count`.
pub fn chord_maps(n: usize, count: u64) -> Vec<DivideMap> {
    (0..count).map(|s| from_chords(&gen_chords(n, s).expect("sampling")).expect("chord map")).collect()
}

pub fn zigzags(sizes: &[usize]) -> Vec<(usize, DivideMap)> {
    sizes.iter().map(|&n| (n, zigzag(n))).collect()
}
