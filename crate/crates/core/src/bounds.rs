//! Lower bounds for kinkiness and unknotting numbers.
//!
//! For a braid `β ∈ B_n` whose closure has `c` components,
//! `κ₊ ≥ 1 + (e(β) − n − c)/2`, and the same right-hand side bounds `u₊`.
//! For a diagram `D`, `κ₊ ≥ 1 + (w − s − c)/2 + s₋`. Reports keep the raw
//! right-hand side next to the clamped bound, which is the ceiling of the raw
//! value or zero when that is negative.

use crate::{BandWord, BraidWord, HalfInteger, OrientedDiagram, Sign};
use serde::Serialize;
use sha2::{Digest, Sha256};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundSource {
    /// Kinkiness bound of a closed braid.
    ClosedBraid,
    /// Positive unknotting bound of a closed braid.
    ClosedBraidUnknotting,
    /// Seifert-circle bound of an oriented diagram.
    Diagram,
    /// Slice genus of a strongly quasipositive band word.
    Sqp,
    /// Exact values for positive braid knots.
    PositiveBraid,
}

impl fmt::Display for BoundSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundSource::ClosedBraid => "closed-braid",
            BoundSource::ClosedBraidUnknotting => "closed-braid-unknotting",
            BoundSource::Diagram => "diagram",
            BoundSource::Sqp => "sqp",
            BoundSource::PositiveBraid => "positive-braid",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub source: BoundSource,
    /// The unclamped right-hand side.
    pub raw: HalfInteger,
    pub kappa_plus_lb: u64,
    pub u_plus_lb: u64,
    /// Filled in from the mirror presentation.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kappa_minus_lb: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub raw_minus: Option<HalfInteger>,
    pub presentation_digest: String,
    #[serde(skip)]
    pub presentation: String,
}

impl BoundReport {
    fn new(source: BoundSource, raw: HalfInteger, presentation: String) -> Self {
        let bound = clamp(raw);
        BoundReport {
            source,
            raw,
            kappa_plus_lb: bound,
            u_plus_lb: bound,
            kappa_minus_lb: None,
            raw_minus: None,
            presentation_digest: digest(&presentation),
            presentation,
        }
    }

    /// Adds the negative-kinkiness bound taken from the mirror's report.
    pub fn with_mirror(mut self, mirror: &BoundReport) -> Self {
        self.kappa_minus_lb = Some(mirror.kappa_plus_lb);
        self.raw_minus = Some(mirror.raw);
        self
    }
}

/// `max(0, ⌈raw⌉)`: kinkiness is a nonnegative integer.
pub fn clamp(raw: HalfInteger) -> u64 {
    raw.ceil().max(0) as u64
}

fn digest(presentation: &str) -> String {
    Sha256::digest(presentation.as_bytes())
        .iter()
        .take(8)
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BoundsError {
    #[error("closure has {0} components; a knot is required")]
    MultiComponent(usize),
    #[error("braid word is not positive")]
    NotPositive,
}

/// `1 + (e − n − c)/2`.
pub fn braid_rhs(w: &BraidWord) -> HalfInteger {
    let c = w.closure_components().components as i64;
    let numerator = w.exponent_sum() - w.strands() as i64 - c;
    // e ≡ k and k ≡ n − c (mod 2) by the parity of the induced permutation.
    assert!(numerator % 2 == 0, "e - n - c is even for every braid");
    HalfInteger::from_int(1) + HalfInteger::halve(numerator)
}

pub fn braid_kappa_plus_lb(w: &BraidWord) -> BoundReport {
    BoundReport::new(BoundSource::ClosedBraid, braid_rhs(w), w.to_string())
}

/// Same right-hand side, read as a bound on the positive unknotting number.
pub fn braid_u_plus_lb(w: &BraidWord) -> BoundReport {
    BoundReport::new(BoundSource::ClosedBraidUnknotting, braid_rhs(w), w.to_string())
}

/// κ₊ bound of `w` together with the κ₋ bound of its mirror.
pub fn braid_kappa_bounds(w: &BraidWord) -> BoundReport {
    braid_kappa_plus_lb(w).with_mirror(&braid_kappa_plus_lb(&w.mirror()))
}

/// Largest Euler characteristic `n − e + 2p` of an immersed surface bounding
/// the closure with `p` positive double points and no closed component.
pub fn chi_upper_bound(w: &BraidWord, positive_double_points: u64) -> i64 {
    w.strands() as i64 - w.exponent_sum() + 2 * positive_double_points as i64
}

/// `1 + (w − s − c)/2 + s₋`. Only meaningful for nontrivial links.
pub fn diagram_rhs(d: &OrientedDiagram) -> HalfInteger {
    let data = d.seifert_data();
    let numerator = data.writhe - data.s as i64 - data.components as i64;
    HalfInteger::from_int(1 + data.s_minus as i64) + HalfInteger::halve(numerator)
}

/// With no positive crossing the right-hand side is nonpositive for every
/// nontrivial link, but can reach 1 on unknot diagrams; the clamped bound is
/// then 0, which holds in both cases.
pub fn diagram_kappa_plus_lb(d: &OrientedDiagram) -> BoundReport {
    let mut report = BoundReport::new(BoundSource::Diagram, diagram_rhs(d), d.to_string());
    if d.stats().x_plus == 0 {
        report.kappa_plus_lb = 0;
        report.u_plus_lb = 0;
    }
    report
}

/// The κ₊ report of `d` with κ₋ filled in from `mirror(d)`.
pub fn diagram_kappa_minus_lb(d: &OrientedDiagram) -> BoundReport {
    diagram_kappa_plus_lb(d).with_mirror(&diagram_kappa_plus_lb(&d.mirror()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SqpProfile {
    pub slice_genus: u64,
    pub kappa_plus_lb: u64,
    pub u_plus_lb: u64,
}

/// For the closure of a strongly quasipositive word with `k` bands on `n`
/// strands: `g* = 1 + (k − n − 1)/2`, and `u₊ ≥ κ₊ ≥ g*`.
pub fn sqp_profile(bw: &BandWord) -> Result<SqpProfile, BoundsError> {
    let expanded = bw.expand();
    let c = expanded.closure_components().components;
    if c != 1 {
        return Err(BoundsError::MultiComponent(c));
    }
    let k = bw.band_count() as i64;
    let numerator = k - bw.strands() as i64 - 1;
    // k transpositions producing an n-cycle: k ≥ n − 1 and k ≡ n − 1 (mod 2).
    assert!(numerator % 2 == 0 && numerator >= -2, "band count is consistent with a knot");
    let genus = (1 + numerator / 2) as u64;
    Ok(SqpProfile { slice_genus: genus, kappa_plus_lb: genus, u_plus_lb: genus })
}

pub fn sqp_report(bw: &BandWord) -> Result<BoundReport, BoundsError> {
    let profile = sqp_profile(bw)?;
    Ok(BoundReport::new(
        BoundSource::Sqp,
        HalfInteger::from_int(profile.slice_genus as i64),
        bw.to_string(),
    ))
}

/// Exact invariants of a knot that closes a positive braid.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PositiveBraidProfile {
    pub genus: u64,
    pub unknotting: u64,
    pub u_plus: u64,
    pub u_minus: u64,
    pub kappa_plus: u64,
    pub kappa_minus: u64,
}

pub fn positive_braid_profile(w: &BraidWord) -> Result<PositiveBraidProfile, BoundsError> {
    if !w.is_positive() {
        return Err(BoundsError::NotPositive);
    }
    let c = w.closure_components().components;
    if c != 1 {
        return Err(BoundsError::MultiComponent(c));
    }
    let numerator = w.len() as i64 - w.strands() as i64 + 1;
    assert!(numerator % 2 == 0 && numerator >= 0, "k - n + 1 is even and nonnegative for a knot");
    let genus = (numerator / 2) as u64;
    Ok(PositiveBraidProfile {
        genus,
        unknotting: genus,
        u_plus: genus,
        u_minus: 0,
        kappa_plus: genus,
        kappa_minus: 0,
    })
}

pub fn positive_braid_report(w: &BraidWord) -> Result<BoundReport, BoundsError> {
    let profile = positive_braid_profile(w)?;
    let mut report = BoundReport::new(
        BoundSource::PositiveBraid,
        HalfInteger::from_int(profile.genus as i64),
        w.to_string(),
    );
    report.kappa_minus_lb = Some(0);
    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Audit {
    pub positive_changes: u64,
    pub negative_changes: u64,
    pub consistent: bool,
}

/// Checks an unknotting sequence against a report: `p` positive and `n`
/// negative changes can only unknot the link if `p ≥ κ₊` and `n ≥ κ₋`.
pub fn audit_crossing_change_sequence(changes: &[Sign], report: &BoundReport) -> Audit {
    let positive = changes.iter().filter(|s| s.is_positive()).count() as u64;
    let negative = changes.len() as u64 - positive;
    Audit {
        positive_changes: positive,
        negative_changes: negative,
        consistent: positive >= report.kappa_plus_lb && negative >= report.kappa_minus_lb.unwrap_or(0),
    }
}
