//! The randomized cut-identity suites, plus the relaxed negative control.

use udg_maxcut::certify::{certify_all, gadget_suite, CertifyConfig};

fn main() {
    for r in certify_all(&CertifyConfig::default()) {
        println!("{} {}: {} cases", if r.passed() { "PASS" } else { "FAIL" }, r.name, r.checked);
    }
    let relaxed = gadget_suite(1, 5, 8, true);
    let c = &relaxed.failures[0];
    println!("relaxed control on\n{}expected {}, got {}", c.graph, c.expected, c.got);
}
