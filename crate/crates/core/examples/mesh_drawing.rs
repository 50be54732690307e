//! Mesh drawing of K5, standardization, and its crossing points.

use udg_maxcut::drawing::{crossings, mesh_draw, standardize_counting, validate_standard};
use udg_maxcut::graph::named;

fn main() {
    let g = named::complete(5);
    let d = mesh_draw(&g).unwrap();
    println!("placements: {:?}", d.placements().iter().map(|c| (c.x, c.y)).collect::<Vec<_>>());
    println!("raw drawing standard: {}", validate_standard(&d).all_pass());

    let (s, shifts) = standardize_counting(&d);
    let report = validate_standard(&s);
    println!("after {shifts} line shifts:");
    for c in &report.conditions {
        println!("  {:?}: {}", c.condition, if c.passed() { "ok" } else { "violated" });
    }
    let xs = crossings(&s).unwrap();
    println!("{} crossings", xs.len());
    for c in xs.crossings.iter().take(5) {
        println!("  at {}: horizontal {:?}, vertical {:?}", c.point, c.horizontal, c.vertical);
    }
    println!("idempotent: {}", standardize_counting(&s).0 == s);
}
