//! The two exact oracles side by side.

use udg_maxcut::graph::{disjoint_union, named};
use udg_maxcut::solvers::{
    greedy_tree_decomposition, max_bisection_bruteforce, max_cut_bruteforce, max_cut_dp_with_cut,
};

fn main() {
    let p = named::petersen();
    let (size, cut) = max_cut_bruteforce(&p).unwrap();
    println!("Petersen by enumeration: {size}, sides {:?}", cut.side());

    let td = greedy_tree_decomposition(&p);
    let (dp, cut) = max_cut_dp_with_cut(&p, &td, 12).unwrap();
    println!("Petersen by DP (width {}): {dp}, recount {}", td.width(), cut.recount(&p).unwrap());

    let kk = disjoint_union(&named::complete(4), &named::complete(4));
    let (b, cut) = max_bisection_bruteforce(&kk).unwrap();
    println!("K4 + K4 max bisection: {b}, balanced: {}", cut.is_bisection());
}
