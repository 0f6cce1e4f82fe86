//! Turning a diagram into a closed braid.
//!
//! While the Seifert circles are not coherently nested there is a face whose
//! boundary carries two arcs of different circles running the same way round
//! it. Pushing one arc over the other across that face (a Reidemeister II
//! move) merges the two circles and creates a small new one, so the circle
//! count and the writhe are unchanged, and the number of incoherent circle
//! pairs drops by at least one. Once no incoherent pair is left the circles
//! are concentric and the braid is read off by sweeping around them.

use crate::diagram::{Crossing, OrientedDiagram};
use crate::planar::{self, CircleArrangement, FaceSide, Faces};
use crate::{BraidWord, Letter, SeifertData, Sign};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidingError {
    #[error("diagram is already a closed braid")]
    AlreadyBraided,
    #[error("diagram is not connected; braid each piece separately")]
    Disconnected,
    #[error("braiding did not finish within {0} moves")]
    IterationCap(usize),
    #[error("incoherent pair count did not decrease ({before} -> {after})")]
    NoProgress { before: usize, after: usize },
    #[error("internal error while reading the braid: {0}")]
    Reading(&'static str),
}

/// One Reidemeister II move, in the arc numbering of the diagram it was applied to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VogelMove {
    pub face: usize,
    pub over_arc: usize,
    pub under_arc: usize,
    pub face_on_left: bool,
    pub defect_before: usize,
    pub defect_after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraidedForm {
    pub braid: BraidWord,
    pub moves_applied: usize,
    pub crossings_added: usize,
    pub moves: Vec<VogelMove>,
    /// The braided diagram the word was read from.
    pub diagram: OrientedDiagram,
}

struct Layout {
    faces: Faces,
    seifert: SeifertData,
    arrangement: CircleArrangement,
}

impl Layout {
    fn of(d: &OrientedDiagram) -> Self {
        let faces = planar::faces(d);
        let seifert = d.seifert_data();
        let arrangement = planar::circle_arrangement(d, &faces, &seifert);
        Layout { faces, seifert, arrangement }
    }

    /// First face (by index) holding two same-side arcs of different circles,
    /// and the smallest such arc pair on it.
    fn defect(&self) -> Option<(usize, FaceSide, FaceSide)> {
        for (f, boundary) in self.faces.boundaries.iter().enumerate() {
            let mut best: Option<(FaceSide, FaceSide)> = None;
            for (i, x) in boundary.iter().enumerate() {
                for y in &boundary[i + 1..] {
                    if x.left != y.left
                        || self.seifert.circle_of_arc[x.arc] == self.seifert.circle_of_arc[y.arc]
                    {
                        continue;
                    }
                    let pair = if x.arc < y.arc { (*x, *y) } else { (*y, *x) };
                    if best.is_none_or(|b| (pair.0.arc, pair.1.arc) < (b.0.arc, b.1.arc)) {
                        best = Some(pair);
                    }
                }
            }
            if let Some((a, b)) = best {
                return Some((f, a, b));
            }
        }
        None
    }
}

/// The circles are concentric and coherently oriented.
pub fn is_braided_form(d: &OrientedDiagram) -> bool {
    Layout::of(d).arrangement.is_coherent()
}

/// Number of incoherent Seifert-circle pairs.
pub fn defect_measure(d: &OrientedDiagram) -> usize {
    Layout::of(d).arrangement.incoherent_pairs()
}

/// Applies one move on the first defect face.
pub fn vogel_step(d: &OrientedDiagram) -> Result<(OrientedDiagram, VogelMove), BraidingError> {
    if !d.is_connected() {
        return Err(BraidingError::Disconnected);
    }
    let layout = Layout::of(d);
    if layout.arrangement.is_coherent() {
        return Err(BraidingError::AlreadyBraided);
    }
    let (face, over, under) = layout
        .defect()
        .ok_or(BraidingError::Reading("incoherent arrangement without a defect face"))?;
    let next = push_over(d, over.arc, under.arc, over.left);
    let defect_before = layout.arrangement.incoherent_pairs();
    let defect_after = defect_measure(&next);
    Ok((
        next,
        VogelMove {
            face,
            over_arc: over.arc,
            under_arc: under.arc,
            face_on_left: over.left,
            defect_before,
            defect_after,
        },
    ))
}

/// Pushes a finger of arc `over` across the shared face and over arc `under`.
///
/// `over` becomes `over → X → a2 → Y → a3`, `under` becomes
/// `under → Y → b2 → X → b3`, where X and Y are the new crossings.
fn push_over(d: &OrientedDiagram, over: usize, under: usize, face_on_left: bool) -> OrientedDiagram {
    let mut crossings = d.crossings().to_vec();
    let base = d.arc_count();
    let (a2, a3, b2, b3) = (base, base + 1, base + 2, base + 3);
    for (arc, replacement) in [(over, a3), (under, b3)] {
        let c = &mut crossings[d.head(arc).crossing];
        if c.under_in == arc {
            c.under_in = replacement;
        } else {
            c.over_in = replacement;
        }
    }
    let (first, second) = if face_on_left {
        (Sign::Positive, Sign::Negative)
    } else {
        (Sign::Negative, Sign::Positive)
    };
    crossings.push(Crossing { under_in: b2, over_in: over, under_out: b3, over_out: a2, sign: first });
    crossings.push(Crossing { under_in: under, over_in: a2, under_out: b2, over_out: a3, sign: second });
    OrientedDiagram::from_crossings(crossings, 0).expect("a Reidemeister II move keeps arc incidences")
}

/// Braids a connected diagram, preserving writhe, Seifert-circle count and
/// component count.
pub fn braid_from_diagram(d: &OrientedDiagram) -> Result<BraidedForm, BraidingError> {
    if !d.is_connected() {
        return Err(BraidingError::Disconnected);
    }
    let mut current = d.clone();
    let mut moves = Vec::new();
    let mut layout = Layout::of(&current);
    let initial_defect = layout.arrangement.incoherent_pairs();
    // Each move removes at least one incoherent pair, so `initial_defect`
    // bounds the run; the crossing-based cap guards small diagrams.
    let cap = (10 * d.crossing_count() + 100).max(initial_defect);
    while !layout.arrangement.is_coherent() {
        if moves.len() >= cap {
            return Err(BraidingError::IterationCap(cap));
        }
        let (next, step) = vogel_step(&current)?;
        if step.defect_after >= step.defect_before {
            return Err(BraidingError::NoProgress { before: step.defect_before, after: step.defect_after });
        }
        moves.push(step);
        current = next;
        layout = Layout::of(&current);
    }
    let braid = read_braid(&current, &layout)?;
    Ok(BraidedForm {
        braid,
        moves_applied: moves.len(),
        crossings_added: 2 * moves.len(),
        moves,
        diagram: current,
    })
}

/// Reads a closed braid off a diagram with coherently nested circles.
fn read_braid(d: &OrientedDiagram, layout: &Layout) -> Result<BraidWord, BraidingError> {
    let arr = &layout.arrangement;
    let s = layout.seifert.s;
    if d.crossing_count() == 0 {
        return Ok(BraidWord::identity(s));
    }
    // Order circles along the nesting path, starting from an end region.
    let start = (0..arr.region_count)
        .filter(|&r| arr.entering(r).count() + arr.leaving(r).count() == 1)
        .min()
        .ok_or(BraidingError::Reading("no innermost region"))?;
    let mut order = Vec::with_capacity(s);
    let mut region = start;
    let mut used = vec![false; s];
    while order.len() < s {
        let circle = arr
            .entering(region)
            .chain(arr.leaving(region))
            .find(|&c| !used[c])
            .ok_or(BraidingError::Reading("circles are not nested along a path"))?;
        used[circle] = true;
        order.push(circle);
        let (right, left) = arr.sides[circle];
        region = if right == region { left } else { right };
    }
    let mut level_of_circle = vec![0; s];
    for (level, &c) in order.iter().enumerate() {
        level_of_circle[c] = level;
    }

    // Crossings met along each circle, in the circle's direction.
    let circle_of_arc = &layout.seifert.circle_of_arc;
    let mut sequences: Vec<Vec<usize>> = vec![Vec::new(); s];
    for (c, arcs) in layout.seifert.circles.iter().enumerate() {
        let start_arc = *arcs.iter().min().expect("listed circles have arcs");
        let mut a = start_arc;
        loop {
            sequences[level_of_circle[c]].push(d.head(a).crossing);
            a = d.smoothing_next(a);
            if a == start_arc {
                break;
            }
        }
    }
    // Level of a crossing: the lower of the two circle levels it joins.
    let mut level_of_crossing = vec![0; d.crossing_count()];
    for (x, c) in d.crossings().iter().enumerate() {
        let l1 = level_of_circle[circle_of_arc[c.under_in]];
        let l2 = level_of_circle[circle_of_arc[c.over_in]];
        if l1.abs_diff(l2) != 1 {
            return Err(BraidingError::Reading("crossing joins non-adjacent circles"));
        }
        level_of_crossing[x] = l1.min(l2);
    }

    // Cut every circle along one ray: circle i + 1 starts at the first
    // crossing of level i met on circle i after its cut.
    for i in 0..s - 1 {
        let first = sequences[i]
            .iter()
            .copied()
            .find(|&x| level_of_crossing[x] == i)
            .ok_or(BraidingError::Reading("consecutive circles share no crossing"))?;
        let seq = &mut sequences[i + 1];
        let at = seq.iter().position(|&x| x == first).expect("crossing lies on both circles");
        seq.rotate_left(at);
    }

    let mut cursor = vec![0usize; s];
    let mut letters = Vec::with_capacity(d.crossing_count());
    while letters.len() < d.crossing_count() {
        let level = (0..s - 1).find(|&i| {
            match (sequences[i].get(cursor[i]), sequences[i + 1].get(cursor[i + 1])) {
                (Some(&x), Some(&y)) => x == y && level_of_crossing[x] == i,
                _ => false,
            }
        });
        let i = level.ok_or(BraidingError::Reading("sweep is blocked"))?;
        let x = sequences[i][cursor[i]];
        cursor[i] += 1;
        cursor[i + 1] += 1;
        letters.push(Letter { index: i + 1, sign: d.crossings()[x].sign });
    }
    BraidWord::new(s, letters).map_err(|_| BraidingError::Reading("letter out of range"))
}
