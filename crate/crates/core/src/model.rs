//! Proximity models of unit disk graphs: one exact point per vertex, with
//! `uv` an edge iff the points are at distance at most 1.

use std::collections::{BTreeSet, HashMap};

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::geometry::{self, GeometryError, Point, RationalPoint, Segment, SquaredDistance, SCALE};
use crate::graph::{canonical, Edge, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("model has {got} points for {expected} vertices")]
    PointCount { expected: usize, got: usize },
    #[error("vertices {0} and {1} share the point {2}")]
    CoincidentPoints(usize, usize, Point),
    #[error("precision is undefined for fewer than two points")]
    UndefinedPrecision,
    #[error("edge length {0} is outside (0, 1]")]
    EdgeLengthOutOfRange(Ratio<i64>),
    #[error("precision exceeds 1/2 but the straight-line drawing has a crossing: {0:?}")]
    TheoremViolation(DrawingWitness),
}

/// Distinct points in one-to-one correspondence with a graph's vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProximityModel {
    graph: Graph,
    points: Vec<Point>,
}

impl ProximityModel {
    pub fn new(graph: Graph, points: Vec<Point>) -> Result<Self, ModelError> {
        if points.len() != graph.n() {
            return Err(ModelError::PointCount {
                expected: graph.n(),
                got: points.len(),
            });
        }
        check_distinct(&points)?;
        Ok(Self { graph, points })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, v: usize) -> Point {
        self.points[v]
    }

    pub fn into_parts(self) -> (Graph, Vec<Point>) {
        (self.graph, self.points)
    }

    /// Model whose edges are exactly the pairs at distance at most 1.
    pub fn from_points(points: Vec<Point>) -> Result<Self, ModelError> {
        check_distinct(&points)?;
        let mut edges = Vec::new();
        for_each_close_pair(&points, |u, v, d| {
            if d <= SquaredDistance::ONE {
                edges.push((u, v));
            }
        });
        let graph = Graph::new(points.len(), edges).expect("close pairs are simple edges");
        Ok(Self { graph, points })
    }

    /// Minimum x and maximum x over all points, in internal units.
    pub fn x_extent(&self) -> Option<(i64, i64)> {
        let min = self.points.iter().map(|p| p.x).min()?;
        let max = self.points.iter().map(|p| p.x).max()?;
        Some((min, max))
    }
}

fn check_distinct(points: &[Point]) -> Result<(), ModelError> {
    let mut seen = HashMap::with_capacity(points.len());
    for (v, p) in points.iter().enumerate() {
        if let Some(u) = seen.insert(*p, v) {
            return Err(ModelError::CoincidentPoints(u, v, *p));
        }
    }
    Ok(())
}

fn cell_of(p: Point) -> (i64, i64) {
    (p.x.div_euclid(SCALE), p.y.div_euclid(SCALE))
}

/// Points bucketed into unit cells; any two points at distance at most one
/// mesh unit fall into cells that differ by at most one on each axis.
struct UnitGrid {
    cells: HashMap<(i64, i64), Vec<usize>>,
}

impl UnitGrid {
    fn new(keys: impl Iterator<Item = (i64, i64)>) -> Self {
        let mut cells: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
        for (i, k) in keys.enumerate() {
            cells.entry(k).or_default().push(i);
        }
        Self { cells }
    }

    /// Every unordered pair of items in the same or adjacent cells, once.
    fn for_each_near_pair(&self, mut f: impl FnMut(usize, usize)) {
        const FORWARD: [(i64, i64); 4] = [(1, -1), (1, 0), (1, 1), (0, 1)];
        for (&(cx, cy), items) in &self.cells {
            for (i, &a) in items.iter().enumerate() {
                for &b in &items[i + 1..] {
                    f(a, b);
                }
            }
            for (dx, dy) in FORWARD {
                if let Some(other) = self.cells.get(&(cx + dx, cy + dy)) {
                    for &a in items {
                        for &b in other {
                            f(a, b);
                        }
                    }
                }
            }
        }
    }

    /// Items in the 3x3 block of cells around `cell`.
    fn around(&self, (cx, cy): (i64, i64)) -> impl Iterator<Item = usize> + '_ {
        (-1..=1)
            .flat_map(move |dx| (-1..=1).map(move |dy| (cx + dx, cy + dy)))
            .filter_map(|c| self.cells.get(&c))
            .flatten()
            .copied()
    }
}

/// Calls `f(u, v, dist2)` with `u < v` for every pair at distance at most 1
/// (and possibly some farther pairs).
fn for_each_close_pair(points: &[Point], mut f: impl FnMut(usize, usize, SquaredDistance)) {
    let grid = UnitGrid::new(points.iter().map(|&p| cell_of(p)));
    grid.for_each_near_pair(|a, b| {
        let (u, v) = canonical(a, b);
        f(u, v, geometry::dist2(points[u], points[v]));
    });
}

/// A vertex pair with its exact squared distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct PairWitness {
    pub u: usize,
    pub v: usize,
    #[serde(serialize_with = "ser_dist2")]
    pub dist2: SquaredDistance,
}

fn ser_dist2<S: serde::Serializer>(d: &SquaredDistance, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&d.to_string())
}

/// Outcome of checking the distance rule on every vertex pair.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ModelReport {
    /// Edges whose endpoints are farther apart than 1.
    pub long_edges: Vec<PairWitness>,
    /// Non-adjacent pairs at distance at most 1.
    pub close_non_edges: Vec<PairWitness>,
}

impl ModelReport {
    pub fn passes(&self) -> bool {
        self.long_edges.is_empty() && self.close_non_edges.is_empty()
    }
}

/// Checks that adjacency coincides with distance at most 1 on every pair.
pub fn validate_model(m: &ProximityModel) -> Result<ModelReport, ModelError> {
    check_distinct(&m.points)?;
    let mut report = ModelReport::default();
    for (u, v) in m.graph.edges() {
        let d = geometry::dist2(m.points[u], m.points[v]);
        if d > SquaredDistance::ONE {
            report.long_edges.push(PairWitness { u, v, dist2: d });
        }
    }
    for_each_close_pair(&m.points, |u, v, d| {
        if d <= SquaredDistance::ONE && !m.graph.has_edge(u, v) {
            report.close_non_edges.push(PairWitness { u, v, dist2: d });
        }
    });
    report.close_non_edges.sort();
    Ok(report)
}

/// Squared precision: the minimum squared distance over all vertex pairs.
pub fn precision2(m: &ProximityModel) -> Result<SquaredDistance, ModelError> {
    precision_witness(m).map(|w| w.dist2)
}

/// A closest pair, smallest `(u, v)` among ties.
pub fn precision_witness(m: &ProximityModel) -> Result<PairWitness, ModelError> {
    if m.points.len() < 2 {
        return Err(ModelError::UndefinedPrecision);
    }
    fn better(w: PairWitness, best: Option<PairWitness>) -> bool {
        best.is_none_or(|b| (w.dist2, w.u, w.v) < (b.dist2, b.u, b.v))
    }
    let mut best: Option<PairWitness> = None;
    for_each_close_pair(&m.points, |u, v, dist2| {
        let w = PairWitness { u, v, dist2 };
        if better(w, best) {
            best = Some(w);
        }
    });
    if let Some(b) = best.filter(|b| b.dist2 <= SquaredDistance::ONE) {
        return Ok(b);
    }
    // No pair within one unit: the grid pass may have missed the minimum.
    for u in 0..m.points.len() {
        for v in u + 1..m.points.len() {
            let w = PairWitness {
                u,
                v,
                dist2: geometry::dist2(m.points[u], m.points[v]),
            };
            if better(w, best) {
                best = Some(w);
            }
        }
    }
    Ok(best.expect("at least one pair"))
}

/// Why the straight-line drawing of a model fails to be plane.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum DrawingWitness {
    /// Two edges without a common endpoint cross at an interior point.
    Crossing { e: Edge, f: Edge, at: (String, String) },
    /// Two edges lie on a common line and share more than one point.
    Overlap { e: Edge, f: Edge },
    /// An edge passes through the point of a vertex other than its endpoints.
    ThroughVertex { e: Edge, vertex: usize },
}

fn rational_pair(p: RationalPoint) -> (String, String) {
    (p.x.to_string(), p.y.to_string())
}

/// Every defect of the straight-line drawing that joins adjacent points by
/// segments. An empty result certifies the drawing is plane.
pub fn straight_line_crossings(m: &ProximityModel) -> Vec<DrawingWitness> {
    let edges: Vec<Edge> = m.graph.edges().collect();
    let segment = |(u, v): Edge| Segment::new(m.points[u], m.points[v]).expect("distinct points");
    let all_short = edges
        .iter()
        .all(|&(u, v)| geometry::dist2(m.points[u], m.points[v]) <= SquaredDistance::ONE);

    let mut out = Vec::new();
    let mut check_pair = |e: Edge, f: Edge| {
        if e.0 == f.0 || e.0 == f.1 || e.1 == f.0 || e.1 == f.1 {
            // Edges sharing an endpoint can only fail by overlapping.
            let (s, t) = (segment(e), segment(f));
            if geometry::orient(s.a, s.b, t.a) == std::cmp::Ordering::Equal
                && geometry::orient(s.a, s.b, t.b) == std::cmp::Ordering::Equal
            {
                let shared = [e.0, e.1].into_iter().find(|&v| v == f.0 || v == f.1).unwrap();
                let (oe, of) = (e.0 + e.1 - shared, f.0 + f.1 - shared);
                let p = m.points[shared];
                let (a, b) = (m.points[oe], m.points[of]);
                // Same direction from the shared endpoint means overlap.
                if (a.x - p.x).signum() == (b.x - p.x).signum()
                    && (a.y - p.y).signum() == (b.y - p.y).signum()
                {
                    out.push(DrawingWitness::Overlap { e, f });
                }
            }
            return;
        }
        match geometry::segments_properly_cross(&segment(e), &segment(f)) {
            Ok(Some(p)) => out.push(DrawingWitness::Crossing {
                e,
                f,
                at: rational_pair(p),
            }),
            Ok(None) => {}
            Err(GeometryError::DegenerateOverlap(..)) => out.push(DrawingWitness::Overlap { e, f }),
            Err(e) => unreachable!("{e}"),
        }
    };

    let midpoint_cell = |(u, v): Edge| {
        let (a, b) = (m.points[u], m.points[v]);
        ((a.x + b.x).div_euclid(2 * SCALE), (a.y + b.y).div_euclid(2 * SCALE))
    };
    if all_short {
        let grid = UnitGrid::new(edges.iter().map(|&e| midpoint_cell(e)));
        grid.for_each_near_pair(|i, j| check_pair(edges[i].min(edges[j]), edges[i].max(edges[j])));
    } else {
        for (i, &e) in edges.iter().enumerate() {
            for &f in &edges[i + 1..] {
                check_pair(e, f);
            }
        }
    }

    let vertex_grid = UnitGrid::new(m.points.iter().map(|&p| cell_of(p)));
    let mut through = BTreeSet::new();
    for &e in &edges {
        let s = segment(e);
        let candidates: Box<dyn Iterator<Item = usize>> = if all_short {
            Box::new(vertex_grid.around(midpoint_cell(e)))
        } else {
            Box::new(0..m.points.len())
        };
        for v in candidates {
            if v != e.0 && v != e.1 && s.contains(m.points[v]) {
                through.insert((e, v));
            }
        }
    }
    out.extend(
        through
            .into_iter()
            .map(|(e, vertex)| DrawingWitness::ThroughVertex { e, vertex }),
    );
    out.sort();
    out.dedup();
    out
}

/// How planarity of a model's straight-line drawing was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PlanarityVerdict {
    /// Precision exceeds `1/sqrt 2`; the drawing was also checked.
    PlanarByTheorem,
    /// Precision at most `1/sqrt 2`, but no crossing was found.
    PlanarByCheck,
    /// The straight-line drawing has a crossing or overlap.
    NotPlanarDrawing,
}

impl PlanarityVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::PlanarByTheorem => "planar_by_theorem",
            Self::PlanarByCheck => "planar_by_check",
            Self::NotPlanarDrawing => "not_planar_drawing",
        }
    }
}

/// Planarity verdict for a valid model. A crossing found despite precision
/// above one half is reported as [`ModelError::TheoremViolation`].
pub fn planarity_verdict(m: &ProximityModel) -> Result<PlanarityVerdict, ModelError> {
    let precise = match precision2(m) {
        Ok(p) => p > SquaredDistance::HALF,
        Err(ModelError::UndefinedPrecision) => true,
        Err(e) => return Err(e),
    };
    let witnesses = straight_line_crossings(m);
    match (precise, witnesses.into_iter().next()) {
        (true, None) => Ok(PlanarityVerdict::PlanarByTheorem),
        (true, Some(w)) => Err(ModelError::TheoremViolation(w)),
        (false, None) => Ok(PlanarityVerdict::PlanarByCheck),
        (false, Some(_)) => Ok(PlanarityVerdict::NotPlanarDrawing),
    }
}

/// `2 - x^2`: the squared lower bound on the distance between the two
/// regions of points farther than `1/sqrt 2` from both endpoints of an edge
/// of length `x`.
pub fn conflict_gap2(x: Ratio<i64>) -> Result<Ratio<i64>, ModelError> {
    if x <= Ratio::from_integer(0) || x > Ratio::from_integer(1) {
        return Err(ModelError::EdgeLengthOutOfRange(x));
    }
    Ok(Ratio::from_integer(2) - x * x)
}
