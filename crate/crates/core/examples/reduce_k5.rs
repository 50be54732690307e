//! End to end: compile K5 into a unit disk graph and recover mc(K5).

use std::time::Instant;

use udg_maxcut::graph::named;
use udg_maxcut::model::precision2;
use udg_maxcut::reduction::reduce;
use udg_maxcut::solvers::{greedy_tree_decomposition, max_cut_bruteforce, max_cut_treewidth_dp};

fn main() {
    let g = named::complete(5);
    let start = Instant::now();
    let r = reduce(&g).unwrap();
    let u = r.result();
    println!("U(K5): {} vertices, {} edges, k = {}, t = {}", u.n(), u.m(), r.k, r.t);
    println!("precision2 = {}", precision2(&r.model).unwrap());

    let td = greedy_tree_decomposition(u);
    let mc_u = max_cut_treewidth_dp(u, &td).unwrap();
    let recovered = r.recover(mc_u).unwrap();
    let direct = max_cut_bruteforce(&g).unwrap().0;
    println!("width {}, mc(U) = {mc_u}, mc(U) - 8k - t = {recovered}, mc(K5) = {direct}", td.width());
    println!("took {:?}", start.elapsed());
}
