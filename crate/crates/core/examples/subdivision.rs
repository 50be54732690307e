//! Subdividing an edge twice raises the maximum cut by exactly 2.

use udg_maxcut::graph::{named, subdivide_edge_twice};
use udg_maxcut::solvers::{all_maximum_cuts, max_cut_bruteforce};

fn main() {
    for (name, g) in [("K2", named::complete(2)), ("K3", named::complete(3)), ("K4", named::complete(4))] {
        let (h, (a, b)) = subdivide_edge_twice(&g, (0, 1)).unwrap();
        let before = max_cut_bruteforce(&g).unwrap().0;
        let after = max_cut_bruteforce(&h).unwrap().0;
        println!("{name}: mc {before} -> {after} (new vertices {a}, {b})");
    }

    // The end edges of the new path need not both be cut: on K3 the result
    // is C5, and every edge of C5 is the uncut one in some maximum cut.
    let (c5, (a, _)) = subdivide_edge_twice(&named::complete(3), (0, 1)).unwrap();
    let (best, cuts) = all_maximum_cuts(&c5).unwrap();
    let uncut = cuts.iter().filter(|c| c.side()[0] == c.side()[a]).count();
    println!("C5: mc {best}, {} maximum cuts, {uncut} leave edge 0-{a} uncut", cuts.len());
}
