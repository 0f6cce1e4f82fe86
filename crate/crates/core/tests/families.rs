mod common;

use common::{coloring_determinant, pretzel_grid};
use kinkiness::families::{
    pretzel_classify, pretzel_diagram, pretzel_invariants, pretzel_seifert_matrix, square_twist_generators,
    twist_invariants, twist_knot_diagram, PretzelParams,
};
use kinkiness::planar::is_planar;
use kinkiness::poly::LaurentPoly;

#[test]
fn pretzel_diagrams_match_closed_forms() {
    for params in pretzel_grid(9) {
        let d = pretzel_diagram(params);
        let [p, q, r] = params.as_array();
        assert_eq!(d.component_count(), 1, "{params:?}");
        assert_eq!(d.crossing_count() as i64, p.abs() + q.abs() + r.abs());
        assert_eq!(d.writhe(), -(p + q + r));
        assert!(is_planar(&d));
        let data = d.seifert_data();
        assert_eq!(data.s as i64, 2 + (p.abs() - 1) + (q.abs() - 1) + (r.abs() - 1));
        assert_eq!(d.seifert_genus().unwrap().as_int(), Some(1));
        let inv = pretzel_invariants(params);
        assert_eq!(coloring_determinant(&d), inv.determinant, "{params:?}");
        assert_eq!(inv.determinant, params.pair_product_sum().unsigned_abs());
    }
}

#[test]
fn alexander_triviality_criterion() {
    for params in pretzel_grid(9) {
        let inv = pretzel_invariants(params);
        assert_eq!(inv.alexander.eval_unit(1), 1);
        assert!(inv.alexander.is_symmetric());
        let trivial = inv.alexander == LaurentPoly::constant(1);
        assert_eq!(trivial, params.pair_product_sum() == -1, "{params:?}");
        let v = pretzel_seifert_matrix(params);
        let s = v.symmetrized();
        assert_eq!(s[0][0] * s[1][1] - s[0][1] * s[1][0], params.pair_product_sum());
    }
}

#[test]
fn classifier_invariants() {
    for params in pretzel_grid(9) {
        let f = pretzel_classify(params);
        if f.min_pair_sum_positive {
            assert!(f.infinite_order && f.not_positively_unknottable && f.mirror_sqp);
        }
        if f.trivial {
            assert!(!f.infinite_order);
            assert_eq!(pretzel_invariants(params).determinant, 1);
        }
        let m = pretzel_classify(params.mirror());
        assert!(!(f.min_pair_sum_positive && m.min_pair_sum_positive));
        assert_eq!(f.infinite_order, m.infinite_order);
    }
}

#[test]
fn mirror_pretzel_is_mirror_diagram() {
    let p = PretzelParams::new(-3, 5, 1).unwrap();
    let d = pretzel_diagram(p);
    let m = pretzel_diagram(p.mirror());
    assert_eq!(d.writhe(), -m.writhe());
    assert_eq!(coloring_determinant(&d), coloring_determinant(&m));
}

#[test]
fn twist_diagrams_match_closed_forms() {
    for m in 1..=50 {
        let d = twist_knot_diagram(m).unwrap();
        assert_eq!(d.component_count(), 1);
        assert!(is_planar(&d));
        let inv = twist_invariants(m).unwrap();
        assert_eq!(inv.determinant, 4 * m as u64 + 1);
        assert_eq!(coloring_determinant(&d), inv.determinant, "m = {m}");
        assert_eq!(inv.alexander, LaurentPoly::new(-1, vec![-m, 2 * m + 1, -m]));
        assert_eq!(d.seifert_genus().unwrap().as_int(), Some(1));
    }
}

#[test]
fn square_generators_are_exact() {
    let brute: Vec<u64> = (1..=500u64)
        .filter(|m| {
            let v = 4 * m + 1;
            let r = (v as f64).sqrt().round() as u64;
            r * r == v
        })
        .collect();
    assert_eq!(square_twist_generators(500), brute);
}
