use super::builder::{vertical_band, Wiring};
use super::{FamilyError, SmallSeifertMatrix};
use crate::poly::LaurentPoly;
use crate::{OrientedDiagram, Sign};
use serde::Serialize;

/// Parameters of the pretzel knot `K(p, q, r)`; all three odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PretzelParams {
    pub p: i64,
    pub q: i64,
    pub r: i64,
}

impl PretzelParams {
    pub fn new(p: i64, q: i64, r: i64) -> Result<Self, FamilyError> {
        if [p, q, r].iter().any(|t| t % 2 == 0) {
            return Err(FamilyError::EvenPretzel(p, q, r));
        }
        Ok(PretzelParams { p, q, r })
    }

    pub fn mirror(self) -> Self {
        PretzelParams { p: -self.p, q: -self.q, r: -self.r }
    }

    pub fn as_array(self) -> [i64; 3] {
        [self.p, self.q, self.r]
    }

    /// `pq + pr + qr`.
    pub fn pair_product_sum(self) -> i64 {
        let PretzelParams { p, q, r } = self;
        p * q + p * r + q * r
    }

    fn min_pair_sum(self) -> i64 {
        let PretzelParams { p, q, r } = self;
        (p + q).min(q + r).min(p + r)
    }
}

/// Two horizontal disks joined by three vertical twisted bands. A band with
/// parameter `t` carries `|t|` crossings of sign `−sign(t)`.
pub fn pretzel_diagram(params: PretzelParams) -> OrientedDiagram {
    let mut w = Wiring::new();
    let bands: Vec<_> = params
        .as_array()
        .iter()
        .map(|&t| {
            let sign = if t > 0 { Sign::Negative } else { Sign::Positive };
            vertical_band(&mut w, t.unsigned_abs() as usize, sign)
        })
        .collect();
    for i in 0..3 {
        let (a, b) = (bands[i], bands[(i + 1) % 3]);
        w.connect(a.top_right, b.top_left);
        w.connect(a.bottom_right, b.bottom_left);
    }
    let built = w.build();
    // Odd bands force the two strands of every band to run in opposite directions.
    for ports in &built.in_ports {
        assert!(
            matches!(ports, [1, 2] | [3, 0]),
            "pretzel band strands are antiparallel, got in-ports {ports:?}"
        );
    }
    built.diagram
}

/// Seifert matrix of the genus-one surface made of the two disks and three bands.
pub fn pretzel_seifert_matrix(params: PretzelParams) -> SmallSeifertMatrix {
    let PretzelParams { p, q, r } = params;
    let v = SmallSeifertMatrix([[(p + q) / 2, (q + 1) / 2], [(q - 1) / 2, (q + r) / 2]]);
    let s = v.symmetrized();
    assert_eq!(s[0][0] * s[1][1] - s[0][1] * s[1][0], params.pair_product_sum());
    v
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PretzelInvariants {
    pub seifert_matrix: SmallSeifertMatrix,
    pub alexander: LaurentPoly,
    pub signature: i64,
    pub determinant: u64,
    /// Genus of the two-disk, three-band surface.
    pub surface_genus: u64,
}

pub fn pretzel_invariants(params: PretzelParams) -> PretzelInvariants {
    let v = pretzel_seifert_matrix(params);
    PretzelInvariants {
        seifert_matrix: v,
        alexander: v.alexander(),
        signature: v.signature(),
        determinant: v.knot_determinant(),
        surface_genus: 1,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PretzelFlags {
    /// `{−1, 1} ⊂ {p, q, r}`.
    pub trivial: bool,
    /// `pq + pr + qr = −1`.
    pub alexander_trivial: bool,
    /// `min{p+q, q+r, p+r} > 0`.
    pub min_pair_sum_positive: bool,
    pub infinite_order: bool,
    pub not_positively_unknottable: bool,
    pub mirror_sqp: bool,
}

pub fn pretzel_classify(params: PretzelParams) -> PretzelFlags {
    let set = params.as_array();
    let positive = params.min_pair_sum() > 0;
    // The mirror of K(p,q,r) is K(−p,−q,−r): the same criterion on the
    // negated parameters also certifies infinite order.
    let mirror_positive = params.mirror().min_pair_sum() > 0;
    PretzelFlags {
        trivial: set.contains(&1) && set.contains(&-1),
        alexander_trivial: params.pair_product_sum() == -1,
        min_pair_sum_positive: positive,
        infinite_order: positive || mirror_positive,
        not_positively_unknottable: positive,
        mirror_sqp: positive,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planar::is_planar;

    fn k(p: i64, q: i64, r: i64) -> PretzelParams {
        PretzelParams::new(p, q, r).unwrap()
    }

    #[test]
    fn rejects_even() {
        assert_eq!(PretzelParams::new(2, 1, 1), Err(FamilyError::EvenPretzel(2, 1, 1)));
    }

    #[test]
    fn left_trefoil_diagram() {
        let d = pretzel_diagram(k(1, 1, 1));
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.stats().x_minus, 3);
        assert_eq!(d.component_count(), 1);
        assert!(is_planar(&d));
    }

    #[test]
    fn figure_two_diagram() {
        let d = pretzel_diagram(k(-3, 3, -3));
        assert_eq!((d.crossing_count(), d.writhe()), (9, 3));
        let data = d.seifert_data();
        assert_eq!(data.s, 2 + 2 + 2 + 2);
        assert_eq!(d.seifert_genus().unwrap().as_int(), Some(1));
    }

    #[test]
    fn seifert_matrix_examples() {
        let v = pretzel_seifert_matrix(k(1, 1, 1));
        assert_eq!(v.0, [[1, 1], [0, 1]]);
        assert_eq!(v.signature(), 2);
        let v = pretzel_seifert_matrix(k(-9, 5, -9));
        assert_eq!(v.symmetrized(), [[-4, 5], [5, -4]]);
        assert_eq!(v.signature(), 0);
        assert_eq!(k(5, 7, -3).pair_product_sum(), -1);
    }

    #[test]
    fn invariant_examples() {
        let inv = pretzel_invariants(k(1, 1, 1));
        assert!(inv.alexander.equivalent(&LaurentPoly::new(0, vec![1, -1, 1])));
        assert_eq!((inv.determinant, inv.signature), (3, 2));
        let slice = pretzel_invariants(k(5, 7, -3));
        assert_eq!((slice.alexander.clone(), slice.determinant), (LaurentPoly::constant(1), 1));
        let unknot = pretzel_invariants(k(-1, 1, 1));
        assert_eq!((unknot.alexander, unknot.determinant, unknot.signature), (LaurentPoly::constant(1), 1, 0));
    }

    #[test]
    fn classifier_examples() {
        let f = pretzel_classify(k(1, 1, 1));
        assert!(f.min_pair_sum_positive && f.infinite_order && f.not_positively_unknottable);
        let f = pretzel_classify(k(5, 7, -3));
        assert!(f.alexander_trivial && f.infinite_order && f.not_positively_unknottable && f.mirror_sqp);
        assert!(!f.trivial);
        let f = pretzel_classify(k(3, -1, 1));
        assert!(f.trivial && f.alexander_trivial && !f.infinite_order);
    }
}
