//! Proximity-model validation, precision and straight-line planarity.

use num_rational::Ratio;
use proptest::prelude::*;
use rand::Rng;
use udg_maxcut::gadget::{build_h, h_model};
use udg_maxcut::geometry::{Point, SquaredDistance};
use udg_maxcut::graph::Graph;
use udg_maxcut::model::{
    conflict_gap2, planarity_verdict, precision2, straight_line_crossings, validate_model,
    DrawingWitness, ModelError, PlanarityVerdict, ProximityModel,
};
use udg_maxcut::random::{rng, separated_model};

#[test]
fn gadget_model_matches_the_graph_on_all_pairs() {
    let m = h_model(Point::new(7, -3));
    let h = build_h();
    let mut pairs = 0;
    for u in 0..8 {
        for v in u + 1..8 {
            let close = udg_maxcut::geometry::dist2(m.point(u), m.point(v)) <= SquaredDistance::ONE;
            assert_eq!(close, h.has_edge(u, v), "pair {u} {v}");
            pairs += 1;
        }
    }
    assert_eq!(pairs, 28);
    assert_eq!(precision2(&m).unwrap(), SquaredDistance::HALF);
}

#[test]
fn tangent_disks_are_adjacent() {
    let pts = vec![Point::new(0, 0), Point::new(20, 0)];
    let m = ProximityModel::new(Graph::new(2, [(0, 1)]).unwrap(), pts.clone()).unwrap();
    assert!(validate_model(&m).unwrap().passes());
    let m = ProximityModel::new(Graph::empty(2), pts).unwrap();
    assert_eq!(validate_model(&m).unwrap().close_non_edges.len(), 1);
}

#[test]
fn precision_examples() {
    let far = ProximityModel::new(Graph::empty(2), vec![Point::mesh(0, 0), Point::mesh(10, 0)]).unwrap();
    assert_eq!(precision2(&far).unwrap(), SquaredDistance::from_ratio(100, 1));
    let one = ProximityModel::new(Graph::empty(1), vec![Point::origin()]).unwrap();
    assert_eq!(precision2(&one), Err(ModelError::UndefinedPrecision));
    assert_eq!(planarity_verdict(&one).unwrap(), PlanarityVerdict::PlanarByTheorem);
    assert!(ProximityModel::new(Graph::empty(2), vec![Point::origin(); 2]).is_err());
}

#[test]
fn gadget_diagonals_cross() {
    let m = h_model(Point::origin());
    let w = straight_line_crossings(&m);
    assert!(w.iter().any(|x| matches!(x, DrawingWitness::Crossing { e: (0, 2), f: (1, 3), .. })));
    assert_eq!(planarity_verdict(&m).unwrap(), PlanarityVerdict::NotPlanarDrawing);
    let single = ProximityModel::from_points(vec![Point::origin(), Point::new(20, 0)]).unwrap();
    assert!(straight_line_crossings(&single).is_empty());
}

#[test]
fn perturbed_grid_at_nine_sixteenths() {
    // 3/4-spaced grid stretched by random non-decreasing offsets per row and
    // column; the first two columns keep their exact spacing.
    let mut r = rng(4);
    let mut offsets = |len: usize, pin: bool| {
        let mut acc = 0i64;
        (0..len)
            .map(|i| {
                if i >= 2 || !pin {
                    acc += r.gen_range(0..=3);
                }
                15 * i as i64 + acc
            })
            .collect::<Vec<_>>()
    };
    let xs = offsets(8, true);
    let ys = offsets(8, false);
    let pts: Vec<Point> = xs.iter().flat_map(|&x| ys.iter().map(move |&y| Point::new(x, y))).collect();
    let m = ProximityModel::from_points(pts).unwrap();
    assert_eq!(precision2(&m).unwrap(), SquaredDistance::from_ratio(9, 16));
    assert!(straight_line_crossings(&m).is_empty());
    assert_eq!(planarity_verdict(&m).unwrap(), PlanarityVerdict::PlanarByTheorem);
}

#[test]
fn conflict_gap_examples() {
    assert_eq!(conflict_gap2(Ratio::new(1, 1)).unwrap(), Ratio::from_integer(1));
    assert_eq!(conflict_gap2(Ratio::new(1, 2)).unwrap(), Ratio::new(7, 4));
    assert_eq!(conflict_gap2(Ratio::new(1, 1000)).unwrap(), Ratio::new(1_999_999, 1_000_000));
    assert!(conflict_gap2(Ratio::from_integer(0)).is_err());
    assert!(conflict_gap2(Ratio::new(21, 20)).is_err());
    // strictly above 1 everywhere below the unit length
    assert!((1..20).all(|k| conflict_gap2(Ratio::new(k, 20)).unwrap() > Ratio::from_integer(1)));
}

#[test]
fn separated_random_models_are_plane() {
    let mut r = rng(99);
    for i in 0..100 {
        let (side, count) = if i % 2 == 0 { (40, 16) } else { (200, 120) };
        let m = separated_model(&mut r, side, count, SquaredDistance::HALF, 4000);
        assert!(validate_model(&m).unwrap().passes());
        if m.graph().n() >= 2 {
            assert!(precision2(&m).unwrap() > SquaredDistance::HALF);
        }
        assert!(straight_line_crossings(&m).is_empty(), "model {i}");
        assert_ne!(planarity_verdict(&m).unwrap(), PlanarityVerdict::NotPlanarDrawing);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn precise_models_never_cross(seed in any::<u64>(), side in 20i64..160) {
        let m = separated_model(&mut rng(seed), side, 80, SquaredDistance::HALF, 2000);
        prop_assert!(straight_line_crossings(&m).is_empty());
    }
}
