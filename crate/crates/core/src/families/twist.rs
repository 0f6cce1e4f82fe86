use super::builder::{vertical_band, Wiring, NE, NW, SE, SW};
use super::{FamilyError, SmallSeifertMatrix};
use crate::poly::LaurentPoly;
use crate::{OrientedDiagram, Sign};
use serde::Serialize;

fn check(m: i64) -> Result<(), FamilyError> {
    if m < 1 {
        return Err(FamilyError::TwistRange(m));
    }
    Ok(())
}

/// The twist knot `K_m`: a twist region of `2m` negative crossings closed
/// off by a clasp of two positive crossings. Changing every other twist
/// crossing, or one clasp crossing, unknots it.
pub fn twist_knot_diagram(m: i64) -> Result<OrientedDiagram, FamilyError> {
    check(m)?;
    let mut w = Wiring::new();
    let twist = vertical_band(&mut w, 2 * m as usize, Sign::Negative);
    let d0 = w.add_crossing(Sign::Positive);
    let d1 = w.add_crossing(Sign::Positive);
    w.connect((d0, NE), (d1, NW));
    w.connect((d0, SE), (d1, SW));
    w.connect(twist.top_right, (d0, NW));
    w.connect(twist.bottom_right, (d0, SW));
    w.connect(twist.top_left, (d1, NE));
    w.connect(twist.bottom_left, (d1, SE));
    Ok(w.build().diagram)
}

pub fn twist_seifert_matrix(m: i64) -> Result<SmallSeifertMatrix, FamilyError> {
    check(m)?;
    Ok(SmallSeifertMatrix([[-1, 1], [0, m]]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KappaProfile {
    pub kappa_plus: u64,
    pub kappa_minus: u64,
    pub unknotting: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistInvariants {
    pub seifert_matrix: SmallSeifertMatrix,
    pub alexander: LaurentPoly,
    pub determinant: u64,
    pub kappa_profile: KappaProfile,
}

pub fn twist_invariants(m: i64) -> Result<TwistInvariants, FamilyError> {
    let v = twist_seifert_matrix(m)?;
    Ok(TwistInvariants {
        seifert_matrix: v,
        alexander: v.alexander(),
        determinant: v.knot_determinant(),
        kappa_profile: KappaProfile { kappa_plus: 0, kappa_minus: 0, unknotting: 1 },
    })
}

/// All `m ≤ limit` with `4m + 1` a perfect square, i.e. `m = j(j + 1)`.
pub fn square_twist_generators(limit: u64) -> Vec<u64> {
    (1u64..).map(|j| j * (j + 1)).take_while(|&m| m <= limit).collect()
}
