//! The crossing gadget: its graph, exact model, and the +8 identity.

use udg_maxcut::gadget::{build_h, construct_h_on, h_model};
use udg_maxcut::geometry::{dist2, Point};
use udg_maxcut::graph::Graph;
use udg_maxcut::model::{precision2, validate_model};
use udg_maxcut::solvers::max_cut_bruteforce;

fn main() {
    let h = build_h();
    println!("H: {} vertices, {} edges, mc = {}", h.n(), h.m(), max_cut_bruteforce(&h).unwrap().0);

    let m = h_model(Point::origin());
    let p = m.points();
    println!("points: {}", p.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(" "));
    println!("dist2(v0, w0) = {}", dist2(p[0], p[4]));
    println!("dist2(w0, v2) = {}", dist2(p[4], p[2]));
    println!("model valid: {}", validate_model(&m).unwrap().passes());
    println!("precision2 = {}", precision2(&m).unwrap());

    // Planting H on two disjoint edges adds exactly 8 to the maximum cut.
    let g = Graph::new(6, [(0, 1), (2, 3), (1, 4), (3, 5)]).unwrap();
    let (g8, inst) = construct_h_on(&g, (0, 1), (2, 3)).unwrap();
    let (before, after) = (max_cut_bruteforce(&g).unwrap().0, max_cut_bruteforce(&g8).unwrap().0);
    println!("planted on v = {:?}, w = {:?}: mc {before} -> {after}", inst.v, inst.w);
}
