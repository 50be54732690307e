//! Properties of the graph core and the exact geometry.

use num_rational::Ratio;
use proptest::prelude::*;
use udg_maxcut::geometry::{dist2, segments_properly_cross, Point, Segment, SquaredDistance, SCALE};
use udg_maxcut::graph::{cut_size, disjoint_union, max_degree, named, subdivide_edge_twice, Graph};
use udg_maxcut::solvers::max_cut_bruteforce;

fn mc(g: &Graph) -> usize {
    max_cut_bruteforce(g).unwrap().0
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let len = pairs.len();
        proptest::collection::vec(any::<bool>(), len).prop_map(move |keep| {
            let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

#[test]
fn cut_size_examples() {
    // K4 split {0,1} | {2,3}: of the six edges only 01 and 23 stay inside.
    let k4 = named::complete(4);
    let expected = k4.edges().filter(|&(u, v)| (u < 2) != (v < 2)).count();
    assert_eq!(cut_size(&k4, &[0, 0, 1, 1]).unwrap(), expected);
    assert_eq!(expected, 4);
    assert_eq!(cut_size(&Graph::empty(3), &[0, 1, 0]).unwrap(), 0);
    assert_eq!(cut_size(&named::complete(2), &[0, 1]).unwrap(), 1);
    assert!(cut_size(&k4, &[0, 1]).is_err());
}

#[test]
fn subdivision_examples() {
    let (p, _) = subdivide_edge_twice(&named::complete(2), (0, 1)).unwrap();
    // 0 - 2 - 3 - 1
    assert_eq!(p, Graph::new(4, [(0, 2), (2, 3), (3, 1)]).unwrap());
    let k3 = named::complete(3);
    let (g, _) = subdivide_edge_twice(&k3, (1, 2)).unwrap();
    assert_eq!((g.n(), g.m()), (5, 5));
    assert_eq!((mc(&k3), mc(&g)), (2, 4));
    let k4 = named::complete(4);
    let (g, _) = subdivide_edge_twice(&k4, (0, 3)).unwrap();
    assert_eq!((mc(&k4), mc(&g)), (4, 6));
    assert!(subdivide_edge_twice(&named::path(3), (0, 2)).is_err());
}

#[test]
fn union_and_degree_examples() {
    let k4 = named::complete(4);
    assert_eq!(disjoint_union(&k4, &Graph::empty(0)), k4);
    let kk = disjoint_union(&named::complete(2), &named::complete(2));
    assert_eq!((kk.n(), kk.m()), (4, 2));
    assert_eq!(max_degree(&k4), 3);
    assert_eq!(max_degree(&named::complete(5)), 4);
    assert_eq!(max_degree(&named::path(3)), 2);
    assert_eq!(max_degree(&Graph::empty(4)), 0);
}

#[test]
fn text_format_round_trip_and_rejections() {
    let p = named::petersen();
    assert_eq!(p.to_text().parse::<Graph>().unwrap(), p);
    assert!("2 1\n0 0\n".parse::<Graph>().is_err());
    assert!("3 2\n0 1\n1 0\n".parse::<Graph>().is_err());
    assert!("2 1\n0 2\n".parse::<Graph>().is_err());
    assert!("2 2\n0 1\n".parse::<Graph>().is_err());
}

#[test]
fn gadget_coordinates() {
    let half = |x: i64, y: i64| Point::new(x * SCALE / 2, y * SCALE / 2);
    assert_eq!(dist2(half(1, 0), half(0, 1)), SquaredDistance::HALF);
    assert_eq!(dist2(half(1, 0), half(-1, 0)), SquaredDistance::ONE);
    assert_eq!(dist2(half(1, 0), Point::new(16, 16)), SquaredDistance::from_ratio(73, 100));
}

#[test]
fn segment_examples() {
    let s = |a: (i64, i64), b: (i64, i64)| Segment::new(Point::mesh(a.0, a.1), Point::mesh(b.0, b.1)).unwrap();
    let p = segments_properly_cross(&s((0, -1), (0, 1)), &s((-1, 0), (1, 0))).unwrap().unwrap();
    assert_eq!(p.to_grid(), Some(Point::origin()));
    assert_eq!(segments_properly_cross(&s((0, 0), (1, 0)), &s((0, 10), (1, 10))).unwrap(), None);
    assert_eq!(segments_properly_cross(&s((0, 0), (1, 0)), &s((1, 0), (1, 5))).unwrap(), None);
    assert!(segments_properly_cross(&s((0, 0), (3, 0)), &s((1, 0), (5, 0))).is_err());
}

/// Parameter of `p` along `s` when `p` lies on the supporting line.
fn parameter(s: &Segment, x: Ratio<i128>, y: Ratio<i128>) -> Option<Ratio<i128>> {
    let (ax, ay) = (Ratio::from_integer(s.a.x as i128), Ratio::from_integer(s.a.y as i128));
    let (dx, dy) = ((s.b.x - s.a.x) as i128, (s.b.y - s.a.y) as i128);
    let lambda = if dx != 0 { (x - ax) / dx } else { (y - ay) / dy };
    (ax + lambda * dx == x && ay + lambda * dy == y).then_some(lambda)
}

fn point() -> impl Strategy<Value = Point> {
    (-60i64..60, -60i64..60).prop_map(|(x, y)| Point::new(x, y))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn cut_size_is_flip_invariant(g in graph_strategy(9), bits in any::<u16>()) {
        let side: Vec<u8> = (0..g.n()).map(|v| (bits >> v & 1) as u8).collect();
        let flipped: Vec<u8> = side.iter().map(|s| 1 - s).collect();
        prop_assert_eq!(cut_size(&g, &side).unwrap(), cut_size(&g, &flipped).unwrap());
    }

    #[test]
    fn max_cut_is_additive_over_unions(g in graph_strategy(6), h in graph_strategy(6)) {
        prop_assert_eq!(mc(&disjoint_union(&g, &h)), mc(&g) + mc(&h));
    }

    #[test]
    fn double_subdivision_adds_two(g in graph_strategy(8), pick in any::<usize>()) {
        let edges: Vec<_> = g.edges().collect();
        prop_assume!(!edges.is_empty());
        let e = edges[pick % edges.len()];
        let (h, _) = subdivide_edge_twice(&g, e).unwrap();
        prop_assert_eq!(mc(&h), mc(&g) + 2);
    }

    #[test]
    fn dist2_is_symmetric_and_definite(p in point(), q in point()) {
        prop_assert_eq!(dist2(p, q), dist2(q, p));
        prop_assert_eq!(dist2(p, q) == SquaredDistance::from_raw(0), p == q);
    }

    #[test]
    fn proper_crossings_are_symmetric_and_interior(a in point(), b in point(), c in point(), d in point()) {
        prop_assume!(a != b && c != d);
        let (s, t) = (Segment::new(a, b).unwrap(), Segment::new(c, d).unwrap());
        let st = segments_properly_cross(&s, &t);
        let ts = segments_properly_cross(&t, &s);
        prop_assert_eq!(st.is_err(), ts.is_err());
        if let (Ok(Some(p)), Ok(Some(q))) = (st.clone(), ts.clone()) {
            prop_assert_eq!(p, q);
            let scale = Ratio::from_integer(SCALE as i128);
            let (x, y) = (p.x * scale, p.y * scale);
            for seg in [&s, &t] {
                let lambda = parameter(seg, x, y).expect("on the line");
                prop_assert!(lambda > Ratio::from_integer(0) && lambda < Ratio::from_integer(1));
            }
        } else {
            prop_assert_eq!(st.ok().flatten().is_none(), ts.ok().flatten().is_none());
        }
    }
}
