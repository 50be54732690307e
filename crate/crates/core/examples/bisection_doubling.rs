//! Two far-apart copies turn Max-Cut into Max-Bisection.

use udg_maxcut::gadget::h_model;
use udg_maxcut::geometry::Point;
use udg_maxcut::model::validate_model;
use udg_maxcut::reduction::double_model;
use udg_maxcut::solvers::{max_bisection_bruteforce, max_cut_bruteforce};

fn main() {
    let m = h_model(Point::origin());
    let d = double_model(&m);
    let mc = max_cut_bruteforce(m.graph()).unwrap().0;
    let (bis, cut) = max_bisection_bruteforce(d.graph()).unwrap();
    println!("doubled model valid: {}", validate_model(&d).unwrap().passes());
    println!("mc(H) = {mc}, max bisection of H + H = {bis}, sides {:?}", cut.side());
}
