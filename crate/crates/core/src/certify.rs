//! Randomized certification of the cut identities behind the reduction.
//!
//! * double subdivision: `mc(G') = mc(G) + 2`, and the new path contributes
//!   3 or 2 edges to every maximum cut depending on whether `uv` is cut;
//! * gadget planting: `mc(G*) = mc(G) + 8`, each gadget triangle holding
//!   exactly 2 cut edges in every maximum cut;
//! * end to end: `mc(U(G)) - 8k - t = mc(G)`, with `U(G)` solved by the
//!   decomposition DP and `G` by enumeration.
//!
//! A failure carries a serializable counterexample.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::gadget::{construct_h_on, construct_h_on_relaxed, GadgetInstance};
use crate::geometry::SquaredDistance;
use crate::graph::{canonical, named, subdivide_edge_twice, Edge, Graph};
use crate::model::{precision2, validate_model};
use crate::random::{random_instance, rng};
use crate::reduction::reduce;
use crate::solvers::{
    all_maximum_cuts, greedy_tree_decomposition, max_cut_bruteforce, max_cut_dp_with_cut,
    DEFAULT_WIDTH_CEILING,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Graph in the `n m / u v` text format.
    pub graph: String,
    pub detail: String,
    pub expected: usize,
    pub got: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<Counterexample>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checked: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, g: &Graph, detail: String, expected: usize, got: usize) {
        self.failures.push(Counterexample {
            graph: g.to_text(),
            detail,
            expected,
            got,
        });
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifyConfig {
    pub seed: u64,
    pub subdivision_cases: usize,
    pub gadget_cases: usize,
    /// Random graphs for the end-to-end check; the named graphs run whenever
    /// this is non-zero.
    pub reduction_cases: usize,
    /// Drop the cycle-edge precondition of the gadget suite (negative control).
    pub relax: bool,
}

impl Default for CertifyConfig {
    fn default() -> Self {
        Self {
            seed: 2024,
            subdivision_cases: 200,
            gadget_cases: 100,
            reduction_cases: 20,
            relax: false,
        }
    }
}

impl CertifyConfig {
    pub fn with_iterations(seed: u64, n: usize) -> Self {
        Self {
            seed,
            subdivision_cases: n,
            gadget_cases: n,
            reduction_cases: n,
            relax: false,
        }
    }
}

pub fn certify_all(cfg: &CertifyConfig) -> Vec<SuiteReport> {
    vec![
        subdivision_suite(cfg.seed, cfg.subdivision_cases, 9),
        gadget_suite(cfg.seed.wrapping_add(1), cfg.gadget_cases, 8, cfg.relax),
        reduction_suite(cfg.seed.wrapping_add(2), cfg.reduction_cases, 8),
    ]
}

fn brute(g: &Graph) -> usize {
    max_cut_bruteforce(g).expect("instance within the enumeration limit").0
}

/// Double subdivision of a random edge of random graphs with `n ≤ max_n`.
pub fn subdivision_suite(seed: u64, cases: usize, max_n: usize) -> SuiteReport {
    let mut rng = rng(seed);
    let mut report = SuiteReport::new("double subdivision adds 2");
    while report.checked < cases {
        let g = random_instance(&mut rng, 2, max_n.max(2), max_n);
        let edges: Vec<Edge> = g.edges().collect();
        let Some(&e) = edges.choose(&mut rng) else { continue };
        report.checked += 1;
        let (h, (a, b)) = subdivide_edge_twice(&g, e).expect("edge exists");
        let (before, after) = (brute(&g), brute(&h));
        if after != before + 2 {
            report.fail(&g, format!("subdividing {e:?}"), before + 2, after);
            continue;
        }
        // u - a - b - v: the path carries 3 cut edges when u, v differ, else 2.
        let (u, v) = e;
        let (_, cuts) = all_maximum_cuts(&h).expect("small");
        for cut in &cuts {
            let s = cut.side();
            let on_path = [(u, a), (a, b), (b, v)].iter().filter(|&&(x, y)| s[x] != s[y]).count();
            let want = if s[u] != s[v] { 3 } else { 2 };
            if on_path != want {
                report.fail(&h, format!("path edges of {e:?} in a maximum cut"), want, on_path);
                break;
            }
        }
        if !cuts.iter().any(|c| c.side()[u] != c.side()[a] && c.side()[b] != c.side()[v]) {
            report.fail(&h, format!("no maximum cut holds both end edges of {e:?}"), 1, 0);
        }
    }
    report
}

/// All orientations `((a, c), (b, d))` of non-incident edge pairs, optionally
/// restricted to those without the cycle edges `ab, bc, cd, da`.
fn gadget_sites(g: &Graph, strict: bool) -> Vec<(Edge, Edge)> {
    let edges: Vec<Edge> = g.edges().collect();
    let mut out = Vec::new();
    for (i, &(a, c)) in edges.iter().enumerate() {
        for &(b, d) in &edges[i + 1..] {
            if [b, d].contains(&a) || [b, d].contains(&c) {
                continue;
            }
            for (b, d) in [(b, d), (d, b)] {
                let cycle = [(a, b), (b, c), (c, d), (d, a)];
                if !strict || cycle.iter().all(|&(x, y)| !g.has_edge(x, y)) {
                    out.push(((a, c), (b, d)));
                }
            }
        }
    }
    out
}

/// Triangles of `inst` with a cut count other than 2 in some maximum cut.
fn bad_triangle(h: &Graph, inst: &GadgetInstance) -> Option<usize> {
    let (_, cuts) = all_maximum_cuts(h).expect("small");
    cuts.iter().find_map(|cut| {
        let s = cut.side();
        inst.triangles().iter().find_map(|t| {
            let n = [(t[0], t[1]), (t[1], t[2]), (t[2], t[0])]
                .iter()
                .filter(|&&(x, y)| s[x] != s[y])
                .count();
            (n != 2).then_some(n)
        })
    })
}

/// Plants `H` on random graphs with `n ≤ max_n`. With `relax`, the cycle-edge
/// precondition is dropped and `K4` is checked first; the identity then fails.
pub fn gadget_suite(seed: u64, cases: usize, max_n: usize, relax: bool) -> SuiteReport {
    let mut rng = rng(seed);
    let mut report = SuiteReport::new(if relax {
        "gadget adds 8 (precondition relaxed)"
    } else {
        "gadget adds 8"
    });
    let plant = |g: &Graph, e1: Edge, e2: Edge| {
        if relax {
            construct_h_on_relaxed(g, e1, e2)
        } else {
            construct_h_on(g, e1, e2)
        }
        .expect("site satisfies the checked preconditions")
    };
    let check = |report: &mut SuiteReport, g: &Graph, e1: Edge, e2: Edge| {
        report.checked += 1;
        let (h, inst) = plant(g, e1, e2);
        let (before, after) = (brute(g), brute(&h));
        if after != before + 8 {
            report.fail(g, format!("H on {e1:?} and {e2:?}"), before + 8, after);
        } else if let Some(n) = bad_triangle(&h, &inst) {
            report.fail(&h, "triangle cut count in a maximum cut".into(), 2, n);
        }
    };
    if relax && cases > 0 {
        check(&mut report, &named::complete(4), (0, 2), (1, 3));
    }
    while report.checked < cases {
        let g = random_instance(&mut rng, 4, max_n.max(4), 4);
        let sites = gadget_sites(&g, !relax);
        let Some(&(e1, e2)) = sites.choose(&mut rng) else { continue };
        check(&mut report, &g, e1, e2);
    }
    report
}

/// Everything checked about one reduced instance; `Err` describes the first
/// violated property.
pub fn check_reduction(g: &Graph) -> Result<(), (String, usize, usize)> {
    let r = reduce(g).map_err(|e| (format!("reduction failed: {e}"), 0, 0))?;
    let m = &r.model;
    if !validate_model(m).is_ok_and(|rep| rep.passes()) {
        return Err(("model violates the distance rule".into(), 0, 1));
    }
    if m.graph().n() >= 2 {
        let p = precision2(m).expect("two points");
        let ok = if r.k > 0 { p == SquaredDistance::HALF } else { p >= SquaredDistance::HALF };
        if !ok {
            return Err((format!("precision² {p} with k = {}", r.k), 0, 1));
        }
    }
    if let Some((e, &c)) = r.per_edge_subdivisions.iter().find(|(_, &c)| c % 2 == 1) {
        return Err((format!("odd subdivision count on {e:?}"), 0, c));
    }
    let td = greedy_tree_decomposition(r.result());
    let (mc_u, cut) = max_cut_dp_with_cut(r.result(), &td, DEFAULT_WIDTH_CEILING)
        .map_err(|e| (format!("decomposition solver: {e}"), DEFAULT_WIDTH_CEILING, td.width()))?;
    if cut.recount(r.result()).ok() != Some(mc_u) {
        return Err(("solver certificate does not recount".into(), mc_u, cut.size()));
    }
    let expected = brute(g);
    match r.recover(mc_u) {
        Ok(got) if got == expected => Ok(()),
        Ok(got) => Err((format!("mc(U) = {mc_u}, k = {}, t = {}", r.k, r.t), expected, got)),
        Err(e) => Err((e.to_string(), expected, 0)),
    }
}

/// The named graphs plus `cases` random graphs with `n ≤ max_n` and `Δ ≤ 4`.
pub fn reduction_suite(seed: u64, cases: usize, max_n: usize) -> SuiteReport {
    let mut rng = rng(seed);
    let mut report = SuiteReport::new("mc(U) - 8k - t = mc");
    if cases == 0 {
        return report;
    }
    let mut instances = vec![
        named::complete(4),
        named::complete(5),
        named::cycle(5),
        named::petersen(),
    ];
    instances.extend((0..cases).map(|_| random_instance(&mut rng, 1, max_n.max(1), 4)));
    for g in &instances {
        report.checked += 1;
        if let Err((detail, expected, got)) = check_reduction(g) {
            report.fail(g, detail, expected, got);
        }
    }
    report
}

/// `true` when `e` and `f` share no endpoint.
pub fn non_incident(e: Edge, f: Edge) -> bool {
    let (e, f) = (canonical(e.0, e.1), canonical(f.0, f.1));
    e.0 != f.0 && e.0 != f.1 && e.1 != f.0 && e.1 != f.1
}

/// Random `(graph, edge pair)` satisfying the gadget preconditions.
pub fn random_gadget_site(rng: &mut impl Rng, max_n: usize) -> (Graph, Edge, Edge) {
    loop {
        let g = random_instance(rng, 4, max_n.max(4), 4);
        if let Some(&(e1, e2)) = gadget_sites(&g, true).choose(rng) {
            return (g, e1, e2);
        }
    }
}
