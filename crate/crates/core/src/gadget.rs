//! The crossing gadget `H`: a `K4` on `v0..v3` plus, for each `i`, a
//! degree-two apex `wi` forming a triangle with `vi` and `v(i+1 mod 4)`.
//!
//! Planting `H` on two non-incident edges `v0v2`, `v1v3` of a host graph
//! raises the maximum cut by exactly 8: whatever sides the `v`s take, each
//! triangle `{wi, vi, v(i+1)}` contributes 2 once `wi` is placed optimally.

use thiserror::Error;

use crate::geometry::Point;
use crate::graph::{Edge, Graph, GraphError};
use crate::model::ProximityModel;

/// Offsets of `v0..v3` from the model centre, in 1/20 units: `(±1/2, 0)`, `(0, ±1/2)`.
pub const V_OFFSETS: [(i64, i64); 4] = [(10, 0), (0, 10), (-10, 0), (0, -10)];

/// Offsets of `w0..w3` from the model centre, in 1/20 units: `(±4/5, ±4/5)`.
pub const W_OFFSETS: [(i64, i64); 4] = [(16, 16), (-16, 16), (-16, -16), (16, -16)];

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error("edge {0}-{1} is not in the host graph")]
    MissingEdge(usize, usize),
    #[error("edges {0:?} and {1:?} share an endpoint")]
    IncidentEdges(Edge, Edge),
    #[error("host already contains the cycle edge {0}-{1}")]
    CycleEdgePresent(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Where a copy of `H` lives inside a host graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetInstance {
    /// Host ids of `v0..v3`.
    pub v: [usize; 4],
    /// Host ids of `w0..w3`.
    pub w: [usize; 4],
    /// Model centre, when the gadget has been placed in the plane.
    pub center: Option<Point>,
    /// Edges added to the host, in insertion order.
    pub added_edges: Vec<Edge>,
}

impl GadgetInstance {
    /// Triangles `(wi, vi, v(i+1))`.
    pub fn triangles(&self) -> [[usize; 3]; 4] {
        std::array::from_fn(|i| [self.w[i], self.v[i], self.v[(i + 1) % 4]])
    }
}

/// The 14 edges of `H` with `vi = i` and `wi = 4 + i`.
fn h_edges() -> impl Iterator<Item = Edge> {
    let core = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)));
    let apexes = (0..4).flat_map(|i| [(4 + i, i), (4 + i, (i + 1) % 4)]);
    core.chain(apexes)
}

/// `H` on vertices `v0..v3 = 0..3`, `w0..w3 = 4..7`.
pub fn build_h() -> Graph {
    Graph::new(8, h_edges()).expect("H is simple")
}

/// The exact proximity model of `H` centred at `center`.
pub fn h_model(center: Point) -> ProximityModel {
    let points = V_OFFSETS
        .iter()
        .chain(W_OFFSETS.iter())
        .map(|&(dx, dy)| center.translate(dx, dy))
        .collect();
    ProximityModel::new(build_h(), points).expect("gadget points are distinct")
}

/// Positions of `w0..w3` around `center`.
pub fn w_positions(center: Point) -> [Point; 4] {
    W_OFFSETS.map(|(dx, dy)| center.translate(dx, dy))
}

/// Positions of `v0..v3` around `center`.
pub fn v_positions(center: Point) -> [Point; 4] {
    V_OFFSETS.map(|(dx, dy)| center.translate(dx, dy))
}

/// Plants `H` on the edges `e1 = v0v2` and `e2 = v1v3` (orientation matters).
///
/// Requires both edges present, no shared endpoint, and none of the cycle
/// edges `v0v1, v1v2, v2v3, v3v0` already in the host. Fresh `w0..w3` get ids
/// `n..n+4`.
pub fn construct_h_on(g: &Graph, e1: Edge, e2: Edge) -> Result<(Graph, GadgetInstance), GadgetError> {
    let v = check_edges(g, e1, e2)?;
    for i in 0..4 {
        let (a, b) = (v[i], v[(i + 1) % 4]);
        if g.has_edge(a, b) {
            return Err(GadgetError::CycleEdgePresent(a, b));
        }
    }
    plant(g, v)
}

/// Like [`construct_h_on`] but tolerates cycle edges already present. The
/// `+8` identity does not hold for such hosts; this exists for negative
/// controls.
pub fn construct_h_on_relaxed(
    g: &Graph,
    e1: Edge,
    e2: Edge,
) -> Result<(Graph, GadgetInstance), GadgetError> {
    let v = check_edges(g, e1, e2)?;
    plant(g, v)
}

fn check_edges(g: &Graph, e1: Edge, e2: Edge) -> Result<[usize; 4], GadgetError> {
    for e in [e1, e2] {
        if !g.has_edge(e.0, e.1) {
            return Err(GadgetError::MissingEdge(e.0, e.1));
        }
    }
    if e1.0 == e2.0 || e1.0 == e2.1 || e1.1 == e2.0 || e1.1 == e2.1 {
        return Err(GadgetError::IncidentEdges(e1, e2));
    }
    Ok([e1.0, e2.0, e1.1, e2.1])
}

fn plant(g: &Graph, v: [usize; 4]) -> Result<(Graph, GadgetInstance), GadgetError> {
    let mut host = g.clone();
    let w: [usize; 4] = std::array::from_fn(|_| host.add_vertex());
    let mut added = Vec::new();
    for i in 0..4 {
        let (a, b) = (v[i], v[(i + 1) % 4]);
        if !host.has_edge(a, b) {
            host.insert_edge(a, b)?;
            added.push((a, b));
        }
    }
    for i in 0..4 {
        for u in [v[i], v[(i + 1) % 4]] {
            host.insert_edge(w[i], u)?;
            added.push((w[i], u));
        }
    }
    Ok((
        host,
        GadgetInstance {
            v,
            w,
            center: None,
            added_edges: added,
        },
    ))
}
