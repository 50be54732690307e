//! Mesh drawings of graphs with maximum degree 4.
//!
//! Vertices sit on mesh crosses (both coordinates integral) and every edge is
//! an axis-aligned polyline with integral corners. [`mesh_draw`] produces a
//! drawing, [`standardize`] stretches it until everything of interest is at
//! least [`STANDARD_SPACING`] apart, and [`crossings`] lists the crossing
//! points the reduction later replaces by gadgets.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{self, GeometryError, Point, Segment};
use crate::graph::{Edge, Graph};

/// Minimum spacing of a standard drawing, in mesh units.
pub const STANDARD_SPACING: i64 = 10;

/// Horizontal and vertical distance between consecutive initial placements.
pub const PLACEMENT_STEP: i64 = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DrawingError {
    #[error("vertex {vertex} has degree {degree}; mesh drawings need degree at most 4")]
    DegreeTooHigh { vertex: usize, degree: usize },
    #[error("drawing has {got} placements for {expected} vertices")]
    PlacementCount { expected: usize, got: usize },
    #[error("vertices {0} and {1} share the mesh cross {2}")]
    SharedPlacement(usize, usize, Cross),
    #[error("route list does not match the edge set")]
    RouteSet,
    #[error("route of edge {0:?} is malformed: {1}")]
    MalformedRoute(Edge, String),
    #[error("route of edge {0:?} passes through vertex {1}")]
    ThroughVertex(Edge, usize),
    #[error("routes of {0:?} and {1:?} touch at {2} without crossing")]
    Touch(Edge, Edge, Cross),
    #[error("routes of {0:?} and {1:?} overlap")]
    Overlap(Edge, Edge),
    #[error("route of edge {0:?} intersects itself at {1}")]
    SelfIntersection(Edge, Cross),
    #[error("more than two routes meet at {0}")]
    MultipleCrossing(Cross),
}

/// An integral mesh position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cross {
    pub x: i64,
    pub y: i64,
}

impl Cross {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }

    pub fn to_point(self) -> Point {
        Point::mesh(self.x, self.y)
    }

    pub fn dist2(self, other: Cross) -> i64 {
        let (dx, dy) = (self.x - other.x, self.y - other.y);
        dx * dx + dy * dy
    }
}

impl fmt::Display for Cross {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Polyline of one edge, listed from the smaller endpoint to the larger.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Route {
    pub edge: Edge,
    pub corners: Vec<Cross>,
}

impl Route {
    pub fn segments(&self) -> impl Iterator<Item = (Cross, Cross)> + '_ {
        self.corners.windows(2).map(|w| (w[0], w[1]))
    }

    /// Every mesh cross on the route, endpoints included, in route order.
    pub fn lattice_points(&self) -> Vec<Cross> {
        let mut out = vec![self.corners[0]];
        for (a, b) in self.segments() {
            let (dx, dy) = ((b.x - a.x).signum(), (b.y - a.y).signum());
            let mut p = a;
            while p != b {
                p = Cross::new(p.x + dx, p.y + dy);
                out.push(p);
            }
        }
        out
    }
}

/// A vertex placement plus one axis-aligned route per edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MeshDrawing {
    #[serde(skip)]
    graph: Graph,
    placements: Vec<Cross>,
    routes: Vec<Route>,
}

/// A crossing point with the two edges meeting there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Crossing {
    pub point: Cross,
    pub horizontal: Edge,
    pub vertical: Edge,
}

/// All crossing points of a drawing, sorted by position.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct CrossingReport {
    pub crossings: Vec<Crossing>,
}

impl CrossingReport {
    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }
}

impl MeshDrawing {
    /// Assembles and validates a drawing. `routes` may come in any order.
    pub fn new(
        graph: Graph,
        placements: Vec<Cross>,
        mut routes: Vec<Route>,
    ) -> Result<Self, DrawingError> {
        for r in &mut routes {
            if r.edge.0 > r.edge.1 {
                r.edge = (r.edge.1, r.edge.0);
                r.corners.reverse();
            }
        }
        routes.sort_by_key(|r| r.edge);
        let d = Self {
            graph,
            placements,
            routes,
        };
        d.analyze()?;
        Ok(d)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn placements(&self) -> &[Cross] {
        &self.placements
    }

    pub fn routes(&self) -> &[Route] {
        &self.routes
    }

    pub fn route(&self, e: Edge) -> Option<&Route> {
        self.routes
            .binary_search_by_key(&e, |r| r.edge)
            .ok()
            .map(|i| &self.routes[i])
    }

    /// Debug dump: placements and polylines in mesh coordinates.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("drawing serializes")
    }

    /// Checks every mesh-drawing invariant.
    pub fn validate(&self) -> Result<(), DrawingError> {
        self.analyze().map(|_| ())
    }

    fn analyze(&self) -> Result<Vec<Crossing>, DrawingError> {
        let g = &self.graph;
        if self.placements.len() != g.n() {
            return Err(DrawingError::PlacementCount {
                expected: g.n(),
                got: self.placements.len(),
            });
        }
        let mut seen: BTreeMap<Cross, usize> = BTreeMap::new();
        for (v, &p) in self.placements.iter().enumerate() {
            if let Some(&u) = seen.get(&p) {
                return Err(DrawingError::SharedPlacement(u, v, p));
            }
            seen.insert(p, v);
        }
        if self.routes.len() != g.m() || !self.routes.iter().map(|r| r.edge).eq(g.edges()) {
            return Err(DrawingError::RouteSet);
        }
        for r in &self.routes {
            self.check_route_shape(r)?;
        }

        // Every segment tagged with its route and position.
        let segs: Vec<(usize, usize, Segment)> = self
            .routes
            .iter()
            .enumerate()
            .flat_map(|(ri, r)| {
                r.segments().enumerate().map(move |(si, (a, b))| {
                    let s = Segment::new(a.to_point(), b.to_point()).expect("non-degenerate");
                    (ri, si, s)
                })
            })
            .collect();

        for &(ri, si, s) in &segs {
            let r = &self.routes[ri];
            let last = r.corners.len() - 2;
            for (v, p) in self.placements.iter().enumerate() {
                if !s.contains(p.to_point()) {
                    continue;
                }
                let at_start = si == 0 && v == r.edge.0 && *p == r.corners[0];
                let at_end = si == last && v == r.edge.1 && *p == r.corners[last + 1];
                if !(at_start || at_end) {
                    return Err(DrawingError::ThroughVertex(r.edge, v));
                }
            }
        }

        let mut crossings = Vec::new();
        let mut crossing_points = HashSet::new();
        for (i, &(ri, si, s)) in segs.iter().enumerate() {
            for &(rj, sj, t) in &segs[i + 1..] {
                if !geometry::segments_intersect(&s, &t) {
                    continue;
                }
                let (ei, ej) = (self.routes[ri].edge, self.routes[rj].edge);
                if ri == rj {
                    if sj == si + 1 {
                        continue;
                    }
                    let p = touch_point(&s, &t);
                    return Err(DrawingError::SelfIntersection(ei, p));
                }
                match geometry::segments_properly_cross(&s, &t) {
                    Err(GeometryError::DegenerateOverlap(..)) => {
                        return Err(DrawingError::Overlap(ei, ej))
                    }
                    Err(e) => unreachable!("{e}"),
                    Ok(Some(p)) => {
                        let p = p.to_grid().expect("axis-aligned crossing on grid");
                        let c = Cross::new(p.x / geometry::SCALE, p.y / geometry::SCALE);
                        if !crossing_points.insert(c) {
                            return Err(DrawingError::MultipleCrossing(c));
                        }
                        let (horizontal, vertical) = if s.a.y == s.b.y { (ei, ej) } else { (ej, ei) };
                        crossings.push(Crossing {
                            point: c,
                            horizontal,
                            vertical,
                        });
                    }
                    Ok(None) => {
                        // Only a shared endpoint vertex may be touched.
                        let p = touch_point(&s, &t);
                        let shared = [ei.0, ei.1]
                            .into_iter()
                            .any(|v| (v == ej.0 || v == ej.1) && self.placements[v] == p);
                        if !shared {
                            return Err(DrawingError::Touch(ei, ej, p));
                        }
                    }
                }
            }
        }
        for c in &crossings {
            if seen.contains_key(&c.point) {
                return Err(DrawingError::ThroughVertex(c.horizontal, seen[&c.point]));
            }
        }
        crossings.sort();
        Ok(crossings)
    }

    fn check_route_shape(&self, r: &Route) -> Result<(), DrawingError> {
        let bad = |msg: &str| Err(DrawingError::MalformedRoute(r.edge, msg.to_string()));
        if r.corners.len() < 2 {
            return bad("fewer than two corners");
        }
        if r.corners[0] != self.placements[r.edge.0]
            || *r.corners.last().unwrap() != self.placements[r.edge.1]
        {
            return bad("does not join its endpoints");
        }
        let mut prev_horizontal = None;
        for (a, b) in r.segments() {
            let horizontal = match (a.x == b.x, a.y == b.y) {
                (false, true) => true,
                (true, false) => false,
                (true, true) => return bad("zero-length segment"),
                (false, false) => return bad("segment is not axis-aligned"),
            };
            if prev_horizontal == Some(horizontal) {
                return bad("consecutive segments are parallel");
            }
            prev_horizontal = Some(horizontal);
        }
        Ok(())
    }
}

fn touch_point(s: &Segment, t: &Segment) -> Cross {
    let p = [s.a, s.b]
        .into_iter()
        .find(|&p| t.contains(p))
        .or_else(|| [t.a, t.b].into_iter().find(|&p| s.contains(p)))
        .expect("intersecting axis-aligned segments touch at an endpoint");
    Cross::new(p.x / geometry::SCALE, p.y / geometry::SCALE)
}

/// Lists every crossing point. Fails if the drawing is invalid.
pub fn crossings(d: &MeshDrawing) -> Result<CrossingReport, DrawingError> {
    Ok(CrossingReport {
        crossings: d.analyze()?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Port {
    Up,
    Left,
    Right,
    Down,
}

const PORTS: [Port; 4] = [Port::Up, Port::Left, Port::Right, Port::Down];

/// Corners from the vertex at `at` to the bottom of its port column, and the
/// column's x coordinate.
fn port_stub(at: Cross, port: Port) -> (Vec<Cross>, i64) {
    let Cross { x, y } = at;
    match port {
        Port::Up => (vec![at], x),
        Port::Left => (vec![at, Cross::new(x - 1, y)], x - 1),
        Port::Right => (vec![at, Cross::new(x + 1, y)], x + 1),
        Port::Down => (
            vec![at, Cross::new(x, y - 1), Cross::new(x + 2, y - 1)],
            x + 2,
        ),
    }
}

/// Draws a graph of maximum degree 4 on the mesh.
///
/// Vertex `i` goes to `(6i, 6i)`, so any two vertices differ by at least 6 in
/// both coordinates. Each vertex owns four private port columns at
/// `x - 1, x, x + 1, x + 2`; incident edges, ordered by neighbour id, take the
/// up, left, right and down ports in turn. Every edge climbs its two port
/// columns to a private horizontal track above all vertices. Tracks are
/// stacked by increasing horizontal span.
pub fn mesh_draw(g: &Graph) -> Result<MeshDrawing, DrawingError> {
    let adj = g.adjacency();
    if let Some((vertex, list)) = adj.iter().enumerate().find(|(_, l)| l.len() > 4) {
        return Err(DrawingError::DegreeTooHigh {
            vertex,
            degree: list.len(),
        });
    }
    let placements: Vec<Cross> = (0..g.n() as i64)
        .map(|i| Cross::new(PLACEMENT_STEP * i, PLACEMENT_STEP * i))
        .collect();
    let port_of = |v: usize, u: usize| PORTS[adj[v].binary_search(&u).expect("neighbour")];

    let mut stubs: Vec<(Edge, Vec<Cross>, Vec<Cross>, i64)> = g
        .edges()
        .map(|(u, v)| {
            let (su, cu) = port_stub(placements[u], port_of(u, v));
            let (sv, cv) = port_stub(placements[v], port_of(v, u));
            ((u, v), su, sv, (cu - cv).abs())
        })
        .collect();
    stubs.sort_by_key(|s| (s.3, s.0));

    let top = PLACEMENT_STEP * g.n().saturating_sub(1) as i64;
    let routes = stubs
        .into_iter()
        .enumerate()
        .map(|(rank, (edge, mut su, mut sv, _))| {
            let h = top + 1 + rank as i64;
            let cu = su.last().unwrap().x;
            let cv = sv.last().unwrap().x;
            su.push(Cross::new(cu, h));
            sv.push(Cross::new(cv, h));
            sv.reverse();
            su.extend(sv);
            Route { edge, corners: su }
        })
        .collect();
    MeshDrawing::new(g.clone(), placements, routes)
}

/// Conditions of a standard drawing. The first four bound distances between
/// crossings, vertices and parallel carrier lines; `Clearance` additionally
/// requires the x (and y) coordinates of all vertices and route corners to be
/// pairwise equal or at least the standard spacing apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum StandardCondition {
    CrossingCrossing,
    VertexVertex,
    VertexCrossing,
    ParallelLines,
    Clearance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Witness {
    Points(Cross, Cross),
    /// Two vertical (`x = first`, `x = second`) or horizontal lines.
    Lines { vertical: bool, first: i64, second: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub condition: StandardCondition,
    pub witness: Option<Witness>,
}

impl ConditionResult {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StandardReport {
    pub conditions: Vec<ConditionResult>,
}

impl StandardReport {
    pub fn all_pass(&self) -> bool {
        self.conditions.iter().all(ConditionResult::passed)
    }

    pub fn get(&self, c: StandardCondition) -> &ConditionResult {
        self.conditions
            .iter()
            .find(|r| r.condition == c)
            .expect("every condition is reported")
    }
}

fn first_close_pair(a: &[Cross], b: &[Cross], same: bool) -> Option<Witness> {
    let limit = STANDARD_SPACING * STANDARD_SPACING;
    for (i, &p) in a.iter().enumerate() {
        let rest = if same { &b[i + 1..] } else { b };
        if let Some(&q) = rest.iter().find(|&&q| p.dist2(q) < limit) {
            return Some(Witness::Points(p, q));
        }
    }
    None
}

/// Carrier lines: line coordinate to the set of edges with a segment on it.
fn carrier_lines(d: &MeshDrawing, vertical: bool) -> BTreeMap<i64, BTreeSet<Edge>> {
    let mut lines: BTreeMap<i64, BTreeSet<Edge>> = BTreeMap::new();
    for r in &d.routes {
        for (a, b) in r.segments() {
            if vertical && a.x == b.x {
                lines.entry(a.x).or_default().insert(r.edge);
            } else if !vertical && a.y == b.y {
                lines.entry(a.y).or_default().insert(r.edge);
            }
        }
    }
    lines
}

fn close_parallel_lines(d: &MeshDrawing, vertical: bool) -> Option<Witness> {
    let lines: Vec<_> = carrier_lines(d, vertical).into_iter().collect();
    for (i, (c1, e1)) in lines.iter().enumerate() {
        for (c2, e2) in &lines[i + 1..] {
            if c2 - c1 >= STANDARD_SPACING {
                break;
            }
            let different_edges = e1.len() > 1 || e2.len() > 1 || e1 != e2;
            if different_edges {
                return Some(Witness::Lines {
                    vertical,
                    first: *c1,
                    second: *c2,
                });
            }
        }
    }
    None
}

/// Sorted distinct coordinates of vertices and corners along one axis.
fn feature_coords(d: &MeshDrawing, vertical: bool) -> Vec<i64> {
    let pick = |c: &Cross| if vertical { c.x } else { c.y };
    let set: BTreeSet<i64> = d
        .placements
        .iter()
        .chain(d.routes.iter().flat_map(|r| r.corners.iter()))
        .map(pick)
        .collect();
    set.into_iter().collect()
}

fn first_tight_gap(coords: &[i64]) -> Option<(i64, i64)> {
    coords
        .windows(2)
        .find(|w| w[1] - w[0] < STANDARD_SPACING)
        .map(|w| (w[0], w[1]))
}

fn tight_gap_count(d: &MeshDrawing) -> usize {
    [true, false]
        .into_iter()
        .map(|axis| {
            feature_coords(d, axis)
                .windows(2)
                .filter(|w| w[1] - w[0] < STANDARD_SPACING)
                .count()
        })
        .sum()
}

/// Checks the standard-drawing conditions, reporting the first violating pair
/// of each. The drawing must be valid.
pub fn validate_standard(d: &MeshDrawing) -> StandardReport {
    let crossing_points: Vec<Cross> = d
        .analyze()
        .map(|cs| cs.into_iter().map(|c| c.point).collect())
        .unwrap_or_default();
    let vertices = &d.placements;
    let clearance = [true, false].into_iter().find_map(|vertical| {
        first_tight_gap(&feature_coords(d, vertical)).map(|(first, second)| Witness::Lines {
            vertical,
            first,
            second,
        })
    });
    let results = [
        (
            StandardCondition::CrossingCrossing,
            first_close_pair(&crossing_points, &crossing_points, true),
        ),
        (
            StandardCondition::VertexVertex,
            first_close_pair(vertices, vertices, true),
        ),
        (
            StandardCondition::VertexCrossing,
            first_close_pair(vertices, &crossing_points, false),
        ),
        (
            StandardCondition::ParallelLines,
            close_parallel_lines(d, true).or_else(|| close_parallel_lines(d, false)),
        ),
        (StandardCondition::Clearance, clearance),
    ];
    StandardReport {
        conditions: results
            .into_iter()
            .map(|(condition, witness)| ConditionResult { condition, witness })
            .collect(),
    }
}

/// Moves every vertex and corner with coordinate at most `line` (on the chosen
/// axis) by `-STANDARD_SPACING`; segments crossing the line stretch.
fn shift_below(d: &mut MeshDrawing, vertical: bool, line: i64) {
    let shift = |c: &mut Cross| {
        let coord = if vertical { &mut c.x } else { &mut c.y };
        if *coord <= line {
            *coord -= STANDARD_SPACING;
        }
    };
    d.placements.iter_mut().for_each(shift);
    for r in &mut d.routes {
        r.corners.iter_mut().for_each(shift);
    }
}

/// Standardizes a valid drawing, returning it with the number of line shifts
/// applied. Each shift separates one pair of consecutive feature coordinates
/// closer than the standard spacing and leaves all other gaps untouched, so
/// the number of shifts equals the initial number of tight gaps.
pub fn standardize_counting(d: &MeshDrawing) -> (MeshDrawing, usize) {
    let mut out = d.clone();
    let mut shifts = 0;
    for vertical in [true, false] {
        while let Some((below, _)) = first_tight_gap(&feature_coords(&out, vertical)) {
            shift_below(&mut out, vertical, below);
            shifts += 1;
        }
    }
    debug_assert!(out.validate().is_ok());
    (out, shifts)
}

/// Stretches a valid drawing into a standard one with the same abstract graph.
pub fn standardize(d: &MeshDrawing) -> MeshDrawing {
    standardize_counting(d).0
}

/// Number of pairs of consecutive feature coordinates closer than the
/// standard spacing.
pub fn tight_gaps(d: &MeshDrawing) -> usize {
    tight_gap_count(d)
}
