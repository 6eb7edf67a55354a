//! Named divides: small hand-built maps and the larger ones stored under `data/fixtures`.

use crate::divide_map::{parse_divide, DivideMap};
use crate::error::{DivideError, Result};

const FIG1: &str = include_str!("../../../../data/fixtures/fig1.json");
const FIG2A: &str = include_str!("../../../../data/fixtures/fig2a.json");
const FIG2B: &str = include_str!("../../../../data/fixtures/fig2b.json");

const NAMES: [&str; 6] = ["X1", "LOOP", "LENS", "FIG1", "FIG2A", "FIG2B"];

pub fn fixture_names() -> &'static [&'static str] {
    &NAMES
}

pub fn fixture(name: &str) -> Result<DivideMap> {
    match name {
        "X1" => DivideMap::new(
            &["e1", "e2", "e3", "e4"],
            &["c1"],
            &[(("e1", 0), ("c1", 0)), (("e2", 0), ("c1", 1)), (("e3", 0), ("c1", 2)), (("e4", 0), ("c1", 3))],
        ),
        "LOOP" => DivideMap::new(
            &["e1", "e2"],
            &["c1"],
            &[(("e1", 0), ("c1", 0)), (("c1", 1), ("c1", 2)), (("c1", 3), ("e2", 0))],
        ),
        // branch a runs west to east, branch b dips below it between c1 and c2
        "LENS" => DivideMap::new(
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
        ),
        "FIG1" => parse_divide(FIG1),
        "FIG2A" => parse_divide(FIG2A),
        "FIG2B" => parse_divide(FIG2B),
        _ => Err(DivideError::MissingFixture(name.to_string())),
    }
}

pub fn fixtures() -> Result<Vec<(&'static str, DivideMap)>> {
    NAMES.iter().map(|&n| Ok((n, fixture(n)?))).collect()
}
