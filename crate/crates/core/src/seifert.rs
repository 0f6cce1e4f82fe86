//! Seifert circles and the Euler-characteristic bookkeeping built on them.

use crate::diagram::{cycles_of, Crossing, DiagramError, OrientedDiagram};
use crate::HalfInteger;

/// Seifert-circle statistics of a diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertData {
    /// Arc cycles of the oriented smoothing; free loops are counted in `s`
    /// but have no arcs and are not listed.
    pub circles: Vec<Vec<usize>>,
    /// Circle index of every arc.
    pub circle_of_arc: Vec<usize>,
    /// Per listed circle: not adjacent to any positive crossing.
    pub strongly_negative: Vec<bool>,
    pub s: usize,
    pub s_minus: usize,
    pub x_plus: usize,
    pub x_minus: usize,
    pub writhe: i64,
    pub components: usize,
    pub chi_s: i64,
    /// `(s - s_-) - x_+`, only when there is a positive crossing.
    pub chi_q: Option<i64>,
}

pub(crate) fn seifert_data(d: &OrientedDiagram) -> SeifertData {
    let circles = cycles_of(d.arc_count(), |a| d.smoothing_next(a));
    let mut circle_of_arc = vec![0; d.arc_count()];
    for (i, circle) in circles.iter().enumerate() {
        for &a in circle {
            circle_of_arc[a] = i;
        }
    }
    let mut strongly_negative = vec![true; circles.len()];
    for c in d.crossings().iter().filter(|c| c.sign.is_positive()) {
        for a in c.arcs() {
            strongly_negative[circle_of_arc[a]] = false;
        }
    }
    let stats = d.stats();
    let s = circles.len() + d.free_loops();
    let s_minus = strongly_negative.iter().filter(|n| **n).count() + d.free_loops();
    let chi_s = s as i64 - (stats.x_plus + stats.x_minus) as i64;
    let chi_q = (stats.x_plus > 0).then(|| (s - s_minus) as i64 - stats.x_plus as i64);
    SeifertData {
        circles,
        circle_of_arc,
        strongly_negative,
        s,
        s_minus,
        x_plus: stats.x_plus,
        x_minus: stats.x_minus,
        writhe: stats.writhe,
        components: stats.components,
        chi_s,
        chi_q,
    }
}

pub(crate) struct UnionFind(Vec<usize>);

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

pub(crate) fn positive_core(d: &OrientedDiagram) -> Result<OrientedDiagram, DiagramError> {
    if d.stats().x_plus == 0 {
        return Err(DiagramError::NoPositiveCrossing);
    }
    // Smoothing a negative crossing joins under_in to over_out and over_in to under_out.
    let mut merged = UnionFind::new(d.arc_count());
    for c in d.crossings().iter().filter(|c| !c.sign.is_positive()) {
        merged.union(c.under_in, c.over_out);
        merged.union(c.over_in, c.under_out);
    }
    // Arc classes that no positive crossing touches close up into crossing-free
    // circles; they are dropped.
    let crossings: Vec<Crossing> = d
        .crossings()
        .iter()
        .filter(|c| c.sign.is_positive())
        .map(|c| Crossing {
            under_in: merged.find(c.under_in),
            over_in: merged.find(c.over_in),
            under_out: merged.find(c.under_out),
            over_out: merged.find(c.over_out),
            sign: c.sign,
        })
        .collect();
    Ok(OrientedDiagram::from_crossings(crossings, 0).expect("smoothing preserves arc incidences"))
}

/// Number of crossing-free circles produced by smoothing all negative crossings.
pub fn loops_after_negative_smoothing(d: &OrientedDiagram) -> usize {
    let mut merged = UnionFind::new(d.arc_count());
    for c in d.crossings().iter().filter(|c| !c.sign.is_positive()) {
        merged.union(c.under_in, c.over_out);
        merged.union(c.over_in, c.under_out);
    }
    let mut touched = vec![false; d.arc_count()];
    for c in d.crossings().iter().filter(|c| c.sign.is_positive()) {
        for a in c.arcs() {
            let r = merged.find(a);
            touched[r] = true;
        }
    }
    let mut roots: Vec<usize> = (0..d.arc_count()).map(|a| merged.find(a)).collect();
    roots.sort_unstable();
    roots.dedup();
    roots.into_iter().filter(|&r| !touched[r]).count() + d.free_loops()
}

/// Genus of the surface produced by Seifert's algorithm, `(2 - c - χ(S)) / 2`.
pub(crate) fn seifert_genus(d: &OrientedDiagram) -> Result<HalfInteger, DiagramError> {
    let data = seifert_data(d);
    let listed = data.circles.len();
    if data.s > 1 {
        // Free loops are isolated vertices of the Seifert graph.
        if d.free_loops() > 0 {
            return Err(DiagramError::DisconnectedSurface);
        }
        let mut graph = UnionFind::new(listed);
        for c in d.crossings() {
            graph.union(data.circle_of_arc[c.under_in], data.circle_of_arc[c.over_in]);
        }
        let root = graph.find(0);
        if (1..listed).any(|i| graph.find(i) != root) {
            return Err(DiagramError::DisconnectedSurface);
        }
    }
    Ok(HalfInteger::halve(2 - data.components as i64 - data.chi_s))
}
