//! Lower bounds for the positive and negative kinkiness and unknotting
//! numbers of oriented links.
//!
//! Links enter either as braid words ([`BraidWord`], [`BandWord`]) or as
//! oriented diagrams ([`OrientedDiagram`]). The [`bounds`] module turns
//! either presentation into a [`BoundReport`]; [`families`] supplies torus,
//! pretzel and twist knots together with closed-form invariants that the
//! bounds are checked against, and [`braiding`] converts a diagram into a
//! braid while keeping writhe and Seifert-circle count fixed.

pub mod bounds;
pub mod braid;
pub mod braiding;
pub mod diagram;
pub mod families;
mod half;
mod permutation;
pub mod planar;
pub mod poly;
pub mod scan;
pub mod seifert;

pub use bounds::{BoundReport, BoundSource, PositiveBraidProfile, SqpProfile};
pub use braid::{BandWord, BraidWord, ClosureInfo, Letter};
pub use braiding::{BraidedForm, BraidingError, VogelMove};
pub use diagram::{Crossing, DiagramError, DiagramStats, OrientedDiagram};
pub use half::HalfInteger;
pub use permutation::Permutation;
pub use seifert::SeifertData;

use std::fmt;

/// Sign of a braid letter or of a diagram crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// Errors raised while reading any of the text formats.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("malformed header: expected `{expected}`, found `{found}`")]
    Header { expected: &'static str, found: String },
    #[error("strand count must be at least 1, got {0}")]
    StrandCount(i64),
    #[error("braid letter 0 is not a generator")]
    ZeroLetter,
    #[error("generator index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: i64, strands: usize },
    #[error("band ({i},{j}) must satisfy 1 <= i < j <= {strands}")]
    BadBand { i: i64, j: i64, strands: usize },
    #[error("cannot parse `{0}` as an integer")]
    Integer(String),
    #[error("crossing record `{0}` is malformed")]
    Crossing(String),
    #[error("crossing record `{0}` has no sign")]
    MissingSign(String),
    #[error("arc {arc} appears {count} times (expected once incoming and once outgoing)")]
    ArcMultiplicity { arc: i64, count: usize },
    #[error("empty diagram; use `O 1` for a crossing-free unknot")]
    EmptyDiagram,
    #[error("unexpected token `{0}`")]
    Token(String),
}
