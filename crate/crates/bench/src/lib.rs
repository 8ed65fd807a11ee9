//! Benchmark inputs.

use knotbound_core::diagram::{realize_dt, Diagram, DtCode};

/// DT codes of a few knots of increasing size.
pub const SAMPLES: &[(&str, &str)] = &[
    ("5_2", "4 8 10 2 6"),
    ("8_16", "6 8 14 12 4 16 2 10"),
    ("9_49", "6 -10 -14 12 -16 -2 18 -4 -8"),
    ("10_105", "4 12 16 20 18 2 8 6 10 14"),
];

pub fn sample(name: &str) -> Diagram {
    let (_, dt) = SAMPLES.iter().find(|(n, _)| *n == name).expect("known sample");
    realize_dt(&DtCode::parse(dt).expect("valid DT")).expect("realizable DT").with_name(name)
}
