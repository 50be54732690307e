//! Models with precision above 1/√2 draw without crossings; the gadget sits
//! exactly at 1/√2 and crosses.

use num_rational::Ratio;
use udg_maxcut::gadget::h_model;
use udg_maxcut::geometry::{Point, SquaredDistance};
use udg_maxcut::model::{conflict_gap2, planarity_verdict, precision2, straight_line_crossings};
use udg_maxcut::random::{rng, separated_model};

fn main() {
    let mut r = rng(12);
    for _ in 0..3 {
        let m = separated_model(&mut r, 80, 40, SquaredDistance::HALF, 2000);
        println!(
            "{} points, {} edges, precision2 {}: {:?}",
            m.graph().n(),
            m.graph().m(),
            precision2(&m).unwrap(),
            planarity_verdict(&m).unwrap()
        );
    }
    let h = h_model(Point::origin());
    println!("gadget: {:?}, first witness {:?}", planarity_verdict(&h).unwrap(), straight_line_crossings(&h)[0]);
    for x in [1, 10, 20] {
        let x = Ratio::new(x, 20);
        println!("conflict_gap2({x}) = {}", conflict_gap2(x).unwrap());
    }
}
