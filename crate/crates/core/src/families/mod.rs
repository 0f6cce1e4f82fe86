//! Torus, pretzel and twist knots with closed-form invariants.

pub mod builder;
mod pretzel;
mod torus;
mod twist;

pub use pretzel::{
    pretzel_classify, pretzel_diagram, pretzel_invariants, pretzel_seifert_matrix, PretzelFlags,
    PretzelInvariants, PretzelParams,
};
pub use torus::torus_braid;
pub use twist::{
    square_twist_generators, twist_invariants, twist_knot_diagram, twist_seifert_matrix, KappaProfile,
    TwistInvariants,
};

use crate::poly::LaurentPoly;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("torus parameters must be at least 2, got ({0}, {1})")]
    TorusRange(i64, i64),
    #[error("torus parameters ({0}, {1}) are not coprime")]
    NotCoprime(i64, i64),
    #[error("pretzel parameters must be odd, got ({0}, {1}, {2})")]
    EvenPretzel(i64, i64, i64),
    #[error("twist parameter must be at least 1, got {0}")]
    TwistRange(i64),
}

/// A 2×2 Seifert matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SmallSeifertMatrix(pub [[i64; 2]; 2]);

impl SmallSeifertMatrix {
    pub fn transpose(&self) -> Self {
        let [[a, b], [c, d]] = self.0;
        SmallSeifertMatrix([[a, c], [b, d]])
    }

    /// `V + Vᵀ`.
    pub fn symmetrized(&self) -> [[i64; 2]; 2] {
        let [[a, b], [c, d]] = self.0;
        [[2 * a, b + c], [b + c, 2 * d]]
    }

    pub fn det(&self) -> i64 {
        let [[a, b], [c, d]] = self.0;
        a * d - b * c
    }

    /// Signature of `V + Vᵀ` from the signs of its determinant and trace.
    pub fn signature(&self) -> i64 {
        let m = self.symmetrized();
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let trace = m[0][0] + m[1][1];
        match det.signum() {
            1 => 2 * trace.signum(),
            -1 => 0,
            // One zero eigenvalue: the other has the sign of the trace.
            _ => trace.signum(),
        }
    }

    /// `|det(V + Vᵀ)|`.
    pub fn knot_determinant(&self) -> u64 {
        let m = self.symmetrized();
        (m[0][0] * m[1][1] - m[0][1] * m[1][0]).unsigned_abs()
    }

    /// `det(V − t Vᵀ)`, normalized.
    pub fn alexander(&self) -> LaurentPoly {
        let v = self.0;
        let entry = |i: usize, j: usize| LaurentPoly::new(0, vec![v[i][j], -v[j][i]]);
        let raw = &(&entry(0, 0) * &entry(1, 1)) - &(&entry(0, 1) * &entry(1, 0));
        raw.normalized()
    }
}

/// A family member written as `torus p q`, `pretzel p q r` or `twist m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Torus(i64, i64),
    Pretzel(PretzelParams),
    Twist(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilySpecError {
    #[error("unknown family `{0}`; expected torus, pretzel or twist")]
    Unknown(String),
    #[error("`{family}` takes {expected} integer parameters")]
    Arity { family: &'static str, expected: usize },
    #[error("cannot parse `{0}` as an integer")]
    Integer(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

impl std::str::FromStr for FamilySpec {
    type Err = FamilySpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut tokens = s.split_whitespace();
        let name = tokens.next().unwrap_or("");
        let args = tokens
            .map(|t| t.parse::<i64>().map_err(|_| FamilySpecError::Integer(t.to_string())))
            .collect::<Result<Vec<_>, _>>()?;
        let arity = |family: &'static str, expected: usize| {
            if args.len() == expected {
                Ok(())
            } else {
                Err(FamilySpecError::Arity { family, expected })
            }
        };
        match name {
            "torus" => {
                arity("torus", 2)?;
                Ok(FamilySpec::Torus(args[0], args[1]))
            }
            "pretzel" => {
                arity("pretzel", 3)?;
                Ok(FamilySpec::Pretzel(PretzelParams::new(args[0], args[1], args[2])?))
            }
            "twist" => {
                arity("twist", 1)?;
                Ok(FamilySpec::Twist(args[0]))
            }
            other => Err(FamilySpecError::Unknown(other.to_string())),
        }
    }
}

/// A presentation produced by a family generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Presentation {
    Braid(crate::BraidWord),
    Diagram(crate::OrientedDiagram),
}

impl FamilySpec {
    pub fn presentation(&self) -> Result<Presentation, FamilyError> {
        Ok(match *self {
            FamilySpec::Torus(p, q) => Presentation::Braid(torus_braid(p, q)?),
            FamilySpec::Pretzel(params) => Presentation::Diagram(pretzel_diagram(params)),
            FamilySpec::Twist(m) => Presentation::Diagram(twist_knot_diagram(m)?),
        })
    }
}
