//! Oriented link diagrams given as signed crossing records.
//!
//! A crossing lists its four arcs as `(under_in, over_in, under_out, over_out)`
//! together with its sign. The planar embedding is carried by the sign: going
//! counterclockwise around a positive crossing the arcs are
//! `under_in, over_out, under_out, over_in`, around a negative one
//! `under_in, over_in, under_out, over_out`. This matches the usual PD
//! convention (counterclockwise from the incoming under-strand) with the
//! over-strand direction recorded by the sign.

use crate::seifert::{self, SeifertData};
use crate::{HalfInteger, ParseError, Sign};
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Crossing {
    pub under_in: usize,
    pub over_in: usize,
    pub under_out: usize,
    pub over_out: usize,
    pub sign: Sign,
}

impl Crossing {
    /// Arcs in counterclockwise order starting at `under_in`.
    pub fn rotation(&self) -> [usize; 4] {
        match self.sign {
            Sign::Positive => [self.under_in, self.over_out, self.under_out, self.over_in],
            Sign::Negative => [self.under_in, self.over_in, self.under_out, self.over_out],
        }
    }

    /// Whether the arc at rotation position `k` enters the crossing.
    pub fn is_incoming_position(&self, k: usize) -> bool {
        match self.sign {
            Sign::Positive => k == 0 || k == 3,
            Sign::Negative => k == 0 || k == 1,
        }
    }

    pub fn arcs(&self) -> [usize; 4] {
        [self.under_in, self.over_in, self.under_out, self.over_out]
    }

    /// The arc leaving this crossing along the same strand as `incoming`.
    pub fn strand_successor(&self, incoming: usize) -> Option<usize> {
        if incoming == self.under_in {
            Some(self.under_out)
        } else if incoming == self.over_in {
            Some(self.over_out)
        } else {
            None
        }
    }

    /// The arc leaving this crossing along the oriented smoothing of `incoming`.
    pub fn smoothing_successor(&self, incoming: usize) -> Option<usize> {
        if incoming == self.under_in {
            Some(self.over_out)
        } else if incoming == self.over_in {
            Some(self.under_out)
        } else {
            None
        }
    }

    pub fn mirror(&self) -> Crossing {
        Crossing {
            under_in: self.over_in,
            over_in: self.under_in,
            under_out: self.over_out,
            over_out: self.under_out,
            sign: self.sign.flip(),
        }
    }

    fn map_arcs(&self, f: impl Fn(usize) -> usize) -> Crossing {
        Crossing {
            under_in: f(self.under_in),
            over_in: f(self.over_in),
            under_out: f(self.under_out),
            over_out: f(self.over_out),
            sign: self.sign,
        }
    }
}

/// Position of an arc end: crossing index and rotation position `0..4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart {
    pub crossing: usize,
    pub position: usize,
}

/// An oriented link diagram. Arc ids are dense, `0..2N` for `N` crossings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrientedDiagram {
    crossings: Vec<Crossing>,
    free_loops: usize,
    /// Per arc: the dart where it leaves a crossing, and where it enters one.
    tails: Vec<Dart>,
    heads: Vec<Dart>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiagramStats {
    pub x_plus: usize,
    pub x_minus: usize,
    pub writhe: i64,
    pub components: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("diagram has no positive crossing")]
    NoPositiveCrossing,
    #[error("the Seifert surface of the diagram is disconnected")]
    DisconnectedSurface,
}

impl OrientedDiagram {
    /// Validates and relabels arcs to `0..2N` in first-appearance order
    /// (fields read as under_in, over_in, under_out, over_out).
    pub fn from_crossings(crossings: Vec<Crossing>, free_loops: usize) -> Result<Self, ParseError> {
        let mut label: HashMap<usize, usize> = HashMap::new();
        for c in &crossings {
            for a in c.arcs() {
                let next = label.len();
                label.entry(a).or_insert(next);
            }
        }
        let crossings: Vec<Crossing> = crossings.iter().map(|c| c.map_arcs(|a| label[&a])).collect();
        let arc_count = label.len();
        let mut original: Vec<usize> = vec![0; arc_count];
        for (&orig, &dense) in &label {
            original[dense] = orig;
        }

        let mut incoming = vec![0usize; arc_count];
        let mut outgoing = vec![0usize; arc_count];
        for c in &crossings {
            incoming[c.under_in] += 1;
            incoming[c.over_in] += 1;
            outgoing[c.under_out] += 1;
            outgoing[c.over_out] += 1;
        }
        for a in 0..arc_count {
            if incoming[a] != 1 || outgoing[a] != 1 {
                return Err(ParseError::ArcMultiplicity {
                    arc: original[a] as i64,
                    count: incoming[a] + outgoing[a],
                });
            }
        }
        Ok(Self::assemble(crossings, free_loops))
    }

    fn assemble(crossings: Vec<Crossing>, free_loops: usize) -> Self {
        let arc_count = 2 * crossings.len();
        let placeholder = Dart { crossing: usize::MAX, position: 0 };
        let mut tails = vec![placeholder; arc_count];
        let mut heads = vec![placeholder; arc_count];
        for (x, c) in crossings.iter().enumerate() {
            for (k, &a) in c.rotation().iter().enumerate() {
                let dart = Dart { crossing: x, position: k };
                if c.is_incoming_position(k) {
                    heads[a] = dart;
                } else {
                    tails[a] = dart;
                }
            }
        }
        OrientedDiagram { crossings, free_loops, tails, heads }
    }

    /// A diagram of `k` disjoint crossing-free circles.
    pub fn unlink(k: usize) -> Self {
        Self::assemble(Vec::new(), k)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        self.tails.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn tail(&self, arc: usize) -> Dart {
        self.tails[arc]
    }

    pub fn head(&self, arc: usize) -> Dart {
        self.heads[arc]
    }

    /// The arc sitting at a dart.
    pub fn arc_at(&self, dart: Dart) -> usize {
        self.crossings[dart.crossing].rotation()[dart.position]
    }

    /// Next arc along the link component.
    pub fn strand_next(&self, arc: usize) -> usize {
        let head = self.heads[arc];
        self.crossings[head.crossing]
            .strand_successor(arc)
            .expect("head crossing records its incoming arc")
    }

    /// Next arc along the Seifert circle.
    pub fn smoothing_next(&self, arc: usize) -> usize {
        let head = self.heads[arc];
        self.crossings[head.crossing]
            .smoothing_successor(arc)
            .expect("head crossing records its incoming arc")
    }

    /// Link components, each an arc cycle; free loops are not listed.
    pub fn component_cycles(&self) -> Vec<Vec<usize>> {
        cycles_of(self.arc_count(), |a| self.strand_next(a))
    }

    pub fn component_count(&self) -> usize {
        self.component_cycles().len() + self.free_loops
    }

    pub fn stats(&self) -> DiagramStats {
        let x_plus = self.crossings.iter().filter(|c| c.sign.is_positive()).count();
        let x_minus = self.crossings.len() - x_plus;
        DiagramStats {
            x_plus,
            x_minus,
            writhe: x_plus as i64 - x_minus as i64,
            components: self.component_count(),
        }
    }

    pub fn writhe(&self) -> i64 {
        self.stats().writhe
    }

    pub fn is_all_positive(&self) -> bool {
        self.crossings.iter().all(|c| c.sign.is_positive())
    }

    /// Swap over and under at every crossing; every sign flips.
    pub fn mirror(&self) -> OrientedDiagram {
        Self::assemble(self.crossings.iter().map(Crossing::mirror).collect(), self.free_loops)
    }

    pub fn seifert_data(&self) -> SeifertData {
        seifert::seifert_data(self)
    }

    /// The all-positive diagram obtained by smoothing every negative crossing
    /// and discarding the circles that were strongly negative.
    pub fn positive_core(&self) -> Result<OrientedDiagram, DiagramError> {
        seifert::positive_core(self)
    }

    pub fn seifert_genus(&self) -> Result<HalfInteger, DiagramError> {
        seifert::seifert_genus(self)
    }

    /// Whether the crossings are linked into a single piece with no extra loops
    /// (a lone crossing-free circle also counts as connected).
    pub fn is_connected(&self) -> bool {
        if self.crossings.is_empty() {
            return self.free_loops == 1;
        }
        if self.free_loops > 0 {
            return false;
        }
        let n = self.crossings.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for a in self.crossings[x].arcs() {
                for y in [self.heads[a].crossing, self.tails[a].crossing] {
                    if !std::mem::replace(&mut seen[y], true) {
                        stack.push(y);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// PD text with arcs renumbered `1..2N` in first-appearance order.
    pub fn to_pd_string(&self) -> String {
        self.to_string()
    }
}

/// Cycles of a permutation given as a successor function on `0..n`.
pub(crate) fn cycles_of(n: usize, next: impl Fn(usize) -> usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut a = start;
        while !seen[a] {
            seen[a] = true;
            cycle.push(a);
            a = next(a);
        }
        out.push(cycle);
    }
    out
}

impl fmt::Display for OrientedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut label: HashMap<usize, usize> = HashMap::new();
        let mut records = Vec::with_capacity(self.crossings.len());
        for c in &self.crossings {
            let ids = c.arcs().map(|a| {
                let next = label.len() + 1;
                *label.entry(a).or_insert(next)
            });
            records.push(format!("X{}({},{},{},{})", c.sign, ids[0], ids[1], ids[2], ids[3]));
        }
        if self.free_loops > 0 {
            records.push(format!("O {}", self.free_loops));
        }
        f.write_str(&records.join(" "))
    }
}

impl FromStr for OrientedDiagram {
    type Err = ParseError;

    /// Parses whitespace-separated `X±(ui,oi,uo,oo)` records and `O k` lines.
    /// Text after `#` on a line is ignored.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let cleaned: String = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .collect::<Vec<_>>()
            .join(" ");
        let mut rest = cleaned.trim_start();
        let mut crossings = Vec::new();
        let mut free_loops = 0usize;
        while !rest.is_empty() {
            if let Some(after) = rest.strip_prefix('X') {
                let close = after
                    .find(')')
                    .ok_or_else(|| ParseError::Crossing(first_token(rest)))?;
                let record = &rest[..close + 2];
                let body = after[..close].trim_start();
                let (sign, body) = match body.chars().next() {
                    Some('+') => (Sign::Positive, &body[1..]),
                    Some('-') => (Sign::Negative, &body[1..]),
                    _ => return Err(ParseError::MissingSign(compact(record))),
                };
                let inner = body
                    .trim_start()
                    .strip_prefix('(')
                    .ok_or_else(|| ParseError::Crossing(compact(record)))?;
                let fields: Vec<&str> = inner.split(',').collect();
                if fields.len() != 4 {
                    return Err(ParseError::Crossing(compact(record)));
                }
                let mut ids = [0usize; 4];
                for (slot, field) in ids.iter_mut().zip(&fields) {
                    let v: i64 = field
                        .trim()
                        .parse()
                        .map_err(|_| ParseError::Integer(field.trim().to_string()))?;
                    *slot = usize::try_from(v).map_err(|_| ParseError::Crossing(compact(record)))?;
                }
                crossings.push(Crossing {
                    under_in: ids[0],
                    over_in: ids[1],
                    under_out: ids[2],
                    over_out: ids[3],
                    sign,
                });
                rest = after[close + 1..].trim_start();
            } else if let Some(after) = rest.strip_prefix('O') {
                let after = after.trim_start();
                let end = after.find(char::is_whitespace).unwrap_or(after.len());
                let k: i64 = after[..end]
                    .parse()
                    .map_err(|_| ParseError::Integer(after[..end].to_string()))?;
                free_loops += usize::try_from(k).map_err(|_| ParseError::Integer(k.to_string()))?;
                rest = after[end..].trim_start();
            } else {
                return Err(ParseError::Token(first_token(rest)));
            }
        }
        if crossings.is_empty() && free_loops == 0 {
            return Err(ParseError::EmptyDiagram);
        }
        OrientedDiagram::from_crossings(crossings, free_loops)
    }
}

fn first_token(s: &str) -> String {
    s.split_whitespace().next().unwrap_or("").to_string()
}

fn compact(s: &str) -> String {
    s.split_whitespace().collect()
}
