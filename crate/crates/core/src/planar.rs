//! Faces of a diagram and the arrangement of its Seifert circles.
//!
//! Faces are traced from the rotation data with the face on the left of the
//! walk. The Seifert circles cut the sphere into `s + 1` regions; recording,
//! for every circle, the region on its right and the region on its left gives
//! a directed tree whose shape decides whether the diagram is already a
//! closed braid.

use crate::diagram::{Dart, OrientedDiagram};
use crate::seifert::{SeifertData, UnionFind};

/// One side of an arc on a face boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct FaceSide {
    pub arc: usize,
    /// The face lies to the left of the arc's orientation.
    pub left: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Faces {
    /// Boundary of every face, in walk order.
    pub boundaries: Vec<Vec<FaceSide>>,
    /// Face containing the corner between rotation positions `k` and `k + 1`
    /// at each crossing, indexed `[crossing][k]`.
    pub corner_face: Vec<[usize; 4]>,
    /// Face on the left / right of each arc.
    pub left_of_arc: Vec<usize>,
    pub right_of_arc: Vec<usize>,
}

/// Traces the faces of the diagram's crossing graph (free loops ignored).
pub fn faces(d: &OrientedDiagram) -> Faces {
    let n = d.crossing_count();
    let mut face_of_dart = vec![[usize::MAX; 4]; n];
    let mut boundaries = Vec::new();
    let mut left_of_arc = vec![usize::MAX; d.arc_count()];
    let mut right_of_arc = vec![usize::MAX; d.arc_count()];
    for x in 0..n {
        for k in 0..4 {
            if face_of_dart[x][k] != usize::MAX {
                continue;
            }
            let face = boundaries.len();
            let mut boundary = Vec::new();
            let mut dart = Dart { crossing: x, position: k };
            while face_of_dart[dart.crossing][dart.position] == usize::MAX {
                face_of_dart[dart.crossing][dart.position] = face;
                let arc = d.arc_at(dart);
                let along = d.tail(arc) == dart;
                let far = if along { d.head(arc) } else { d.tail(arc) };
                boundary.push(FaceSide { arc, left: along });
                if along {
                    left_of_arc[arc] = face;
                } else {
                    right_of_arc[arc] = face;
                }
                dart = Dart { crossing: far.crossing, position: (far.position + 3) % 4 };
            }
            boundaries.push(boundary);
        }
    }
    // A walk leaving dart (x, k) arrived through position k + 1, so it owns
    // the corner between k and k + 1.
    let corner_face = face_of_dart;
    Faces { boundaries, corner_face, left_of_arc, right_of_arc }
}

/// `V - E + F` agrees with a sphere for every connected piece.
pub fn is_planar(d: &OrientedDiagram) -> bool {
    if d.crossing_count() == 0 {
        return true;
    }
    let f = faces(d).boundaries.len();
    let pieces = crossing_pieces(d);
    let v = d.crossing_count();
    let e = d.arc_count();
    v as i64 - e as i64 + f as i64 == 2 * pieces as i64
}

fn crossing_pieces(d: &OrientedDiagram) -> usize {
    let mut uf = UnionFind::new(d.crossing_count());
    for a in 0..d.arc_count() {
        uf.union(d.head(a).crossing, d.tail(a).crossing);
    }
    (0..d.crossing_count()).filter(|&x| uf.find(x) == x).count()
}

/// The regions cut out by the Seifert circles and which circles bound them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleArrangement {
    pub region_count: usize,
    /// Region of every face.
    pub region_of_face: Vec<usize>,
    /// Per Seifert circle: (region on its right, region on its left).
    pub sides: Vec<(usize, usize)>,
}

impl CircleArrangement {
    /// Circles having the region on their left.
    pub fn entering(&self, region: usize) -> impl Iterator<Item = usize> + '_ {
        self.sides
            .iter()
            .enumerate()
            .filter(move |(_, s)| s.1 == region)
            .map(|(i, _)| i)
    }

    /// Circles having the region on their right.
    pub fn leaving(&self, region: usize) -> impl Iterator<Item = usize> + '_ {
        self.sides
            .iter()
            .enumerate()
            .filter(move |(_, s)| s.0 == region)
            .map(|(i, _)| i)
    }

    /// Every region touches at most one circle from each side: the circles are
    /// concentric and coherently oriented.
    pub fn is_coherent(&self) -> bool {
        (0..self.region_count).all(|r| self.entering(r).count() <= 1 && self.leaving(r).count() <= 1)
    }

    fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.region_count];
        for (i, &(r, l)) in self.sides.iter().enumerate() {
            adj[r].push((l, i));
            adj[l].push((r, i));
        }
        adj
    }

    /// For every circle, whether the tree path from `from` to it runs in
    /// one direction, i.e. the two circles are parallel in the annulus they
    /// cobound.
    fn coherent_from(&self, from: usize, adj: &[Vec<(usize, usize)>]) -> Vec<bool> {
        let mut coherent = vec![false; self.sides.len()];
        coherent[from] = true;
        let (r, l) = self.sides[from];
        // Leaving through the left side, consistent circles keep the walk on
        // their left; leaving through the right side, on their right.
        let mut stack = vec![(l, from, true), (r, from, false)];
        while let Some((region, via, forward)) = stack.pop() {
            for &(next, edge) in &adj[region] {
                if edge == via {
                    continue;
                }
                let (er, el) = self.sides[edge];
                let ok = if forward { er == region && el == next } else { el == region && er == next };
                coherent[edge] = ok;
                if ok {
                    stack.push((next, edge, forward));
                }
            }
        }
        coherent
    }

    pub fn coherent_pair(&self, a: usize, b: usize) -> bool {
        self.coherent_from(a, &self.adjacency())[b]
    }

    /// Number of unordered incoherent circle pairs; zero exactly when braided.
    pub fn incoherent_pairs(&self) -> usize {
        let adj = self.adjacency();
        let s = self.sides.len();
        (0..s)
            .map(|a| self.coherent_from(a, &adj)[a + 1..].iter().filter(|ok| !**ok).count())
            .sum()
    }
}

/// Builds the circle arrangement of a connected diagram.
pub fn circle_arrangement(d: &OrientedDiagram, faces: &Faces, seifert: &SeifertData) -> CircleArrangement {
    if d.crossing_count() == 0 {
        // A lone circle: inside on its left, outside on its right.
        return CircleArrangement {
            region_count: 2,
            region_of_face: Vec::new(),
            sides: vec![(0, 1); d.free_loops()],
        };
    }
    let mut uf = UnionFind::new(faces.boundaries.len());
    for (x, c) in d.crossings().iter().enumerate() {
        // The corners between two incoming or two outgoing arcs open into
        // each other once the crossing is smoothed.
        let starts = if c.sign.is_positive() { [1, 3] } else { [0, 2] };
        uf.union(faces.corner_face[x][starts[0]], faces.corner_face[x][starts[1]]);
    }
    let mut dense = vec![usize::MAX; faces.boundaries.len()];
    let mut region_of_face = vec![0; faces.boundaries.len()];
    let mut region_count = 0;
    for (f, region) in region_of_face.iter_mut().enumerate() {
        let root = uf.find(f);
        if dense[root] == usize::MAX {
            dense[root] = region_count;
            region_count += 1;
        }
        *region = dense[root];
    }
    let sides = seifert
        .circles
        .iter()
        .map(|circle| {
            let a = circle[0];
            (region_of_face[faces.right_of_arc[a]], region_of_face[faces.left_of_arc[a]])
        })
        .collect();
    CircleArrangement { region_count, region_of_face, sides }
}

/// Convenience: the arrangement computed from scratch.
pub fn arrangement_of(d: &OrientedDiagram) -> CircleArrangement {
    circle_arrangement(d, &faces(d), &d.seifert_data())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::BraidWord;

    const RIGHT_TREFOIL: &str = "X+(1,4,2,5) X+(3,6,4,1) X+(5,2,6,3)";

    fn pd(text: &str) -> OrientedDiagram {
        text.parse().unwrap()
    }

    #[test]
    fn trefoil_faces() {
        let t = pd(RIGHT_TREFOIL);
        let f = faces(&t);
        assert_eq!(f.boundaries.len(), 5);
        let mut sizes: Vec<usize> = f.boundaries.iter().map(Vec::len).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![2, 2, 2, 3, 3]);
        assert!(is_planar(&t));
        assert!(is_planar(&t.mirror()));
    }

    #[test]
    fn kinks_are_planar() {
        assert!(is_planar(&pd("X-(1,2,2,1)")));
        assert!(is_planar(&pd("X+(1,2,2,1)")));
        let f = faces(&pd("X+(1,2,2,1)"));
        assert_eq!(f.boundaries.len(), 3);
    }

    #[test]
    fn every_arc_has_two_sides() {
        let d = "B4: 1 -2 3 -1 2 2 -3".parse::<BraidWord>().unwrap().closure_diagram();
        let f = faces(&d);
        assert!(f.left_of_arc.iter().all(|&x| x != usize::MAX));
        assert!(f.right_of_arc.iter().all(|&x| x != usize::MAX));
        assert!(is_planar(&d));
    }

    #[test]
    fn braid_closures_are_coherent() {
        for text in ["B2: 1 1 1", "B3: 1 -2 1 -2", "B4: 1 2 3 -1 -2 -3", "B2: -1"] {
            let d = text.parse::<BraidWord>().unwrap().closure_diagram();
            let arr = arrangement_of(&d);
            assert_eq!(arr.region_count, d.seifert_data().s + 1, "{text}");
            assert!(arr.is_coherent(), "{text}");
            assert_eq!(arr.incoherent_pairs(), 0, "{text}");
        }
    }

    #[test]
    fn unknot_is_coherent() {
        let arr = arrangement_of(&pd("O 1"));
        assert!(arr.is_coherent());
        assert_eq!(arr.incoherent_pairs(), 0);
    }
}
