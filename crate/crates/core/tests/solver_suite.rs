//! Cross-checks between the two exact oracles.

use rand::Rng;
use udg_maxcut::gadget::build_h;
use udg_maxcut::graph::{cut_size, disjoint_union, named, Graph};
use udg_maxcut::random::{bounded_degree_graph, rng};
use udg_maxcut::solvers::{
    greedy_tree_decomposition, max_bisection_bruteforce, max_cut_bruteforce, max_cut_dp_with_cut,
    max_cut_treewidth_dp, solve_max_cut, Limits, Method, SolverError,
};

#[test]
fn dp_agrees_with_enumeration() {
    let mut r = rng(200);
    for _ in 0..200 {
        let n = r.gen_range(1..=12);
        let density = r.gen_range(0.1..0.9);
        let g = bounded_degree_graph(&mut r, n, n, density);
        let (brute, cut) = max_cut_bruteforce(&g).unwrap();
        assert_eq!(cut_size(&g, cut.side()).unwrap(), brute);
        let td = greedy_tree_decomposition(&g);
        td.validate(&g).unwrap();
        let (dp, cut) = max_cut_dp_with_cut(&g, &td, 12).unwrap();
        assert_eq!(dp, brute, "{g}");
        assert_eq!(cut_size(&g, cut.side()).unwrap(), dp);
    }
}

#[test]
fn complete_graphs_follow_the_closed_form() {
    for n in 1..=8 {
        assert_eq!(max_cut_bruteforce(&named::complete(n)).unwrap().0, n * n / 4);
    }
    assert_eq!(max_cut_bruteforce(&build_h()).unwrap().0, 10);
}

#[test]
fn doubling_doubles() {
    let mut r = rng(3);
    for _ in 0..20 {
        let n = r.gen_range(1..=7);
        let g = bounded_degree_graph(&mut r, n, 4, 0.6);
        let gg = disjoint_union(&g, &g);
        let mc = max_cut_bruteforce(&g).unwrap().0;
        assert_eq!(max_cut_bruteforce(&gg).unwrap().0, 2 * mc);
        let (b, cut) = max_bisection_bruteforce(&gg).unwrap();
        assert_eq!(b, 2 * mc);
        assert!(cut.is_bisection());
    }
}

#[test]
fn bisection_examples() {
    assert_eq!(max_bisection_bruteforce(&named::cycle(4)).unwrap().0, 4);
    let kk = disjoint_union(&named::complete(2), &named::complete(2));
    assert_eq!(max_bisection_bruteforce(&kk).unwrap().0, 2);
    assert_eq!(max_bisection_bruteforce(&Graph::empty(2)).unwrap().0, 0);
    let k4k4 = disjoint_union(&named::complete(4), &named::complete(4));
    assert_eq!(max_bisection_bruteforce(&k4k4).unwrap().0, 8);
    assert_eq!(max_bisection_bruteforce(&named::path(3)).unwrap_err(), SolverError::OddBisection(3));
}

#[test]
fn limits() {
    let big = named::path(30);
    assert!(matches!(max_cut_bruteforce(&big), Err(SolverError::TooLarge { n: 30, .. })));
    let s = solve_max_cut(&big, Method::Auto, Limits::default()).unwrap();
    assert_eq!((s.size, s.method, s.width), (29, Method::Dp, Some(1)));
    let k8 = named::complete(8);
    let td = greedy_tree_decomposition(&k8);
    assert!(matches!(
        udg_maxcut::solvers::max_cut_treewidth_dp_with_ceiling(&k8, &td, 5),
        Err(SolverError::WidthTooLarge { width: 7, ceiling: 5 })
    ));
    assert_eq!(max_cut_treewidth_dp(&named::path(10), &greedy_tree_decomposition(&named::path(10))).unwrap(), 9);
}

#[test]
fn worker_cap_does_not_change_the_answer() {
    // 22 vertices takes the chunked path; the answer and tie-break must not
    // depend on how many workers run.
    let g = bounded_degree_graph(&mut rng(5), 22, 4, 0.7);
    let all = max_cut_bruteforce(&g).unwrap();
    std::env::set_var(udg_maxcut::solvers::THREADS_ENV, "1");
    let one = max_cut_bruteforce(&g).unwrap();
    std::env::remove_var(udg_maxcut::solvers::THREADS_ENV);
    assert_eq!(all, one);
}
