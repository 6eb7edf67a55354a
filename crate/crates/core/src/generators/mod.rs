//! Divides for tests and corpora: chord arrangements, parametric families and fixtures.

mod chords;
mod families;
mod fixtures;

pub use chords::{
    from_chords, gen_chords, grid_denominator, parse_chords, Chord, ChordCrossing, ChordSet, ChordsDocument, Param,
    Point, CHORDS_FORMAT,
};
pub use families::{coil, with_curl, zigzag, CurlSide};
pub use fixtures::{fixture, fixture_names, fixtures};
