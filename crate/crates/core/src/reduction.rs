//! Compiles a graph of maximum degree 4 into a unit disk graph `U(G)` with an
//! exact proximity model of precision `1/√2`, such that
//! `mc(U(G)) = mc(G) + 8k + t`.
//!
//! The pipeline:
//!
//! 1. draw `G` on the mesh and standardize the drawing;
//! 2. put a subdivision vertex on every mesh cross interior to a route,
//!    except at crossing points;
//! 3. at each crossing `(x, y)`, give the vertical path a vertex at `(x, y)`
//!    and bend the horizontal path half a unit up through four new vertices;
//! 4. plant the gadget `H` on the two middle edges of the crossing;
//! 5. fix the parity of every path with an odd number of interior vertices
//!    by a small triangular detour on a straight horizontal stretch.
//!
//! `k` counts crossings and `t` the interior vertices of all original-edge
//! paths (gadget apexes excluded). Every path ends up with an even count.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;
use thiserror::Error;

use crate::drawing::{self, Cross, CrossingReport, DrawingError, MeshDrawing};
use crate::gadget::{self, GadgetError, GadgetInstance};
use crate::geometry::{Point, SquaredDistance, SCALE};
use crate::graph::{canonical, disjoint_union, subdivide_edge_once, Edge, Graph, GraphError};
use crate::model::{precision2, validate_model, ModelError, ProximityModel};

/// Mesh units of empty space left between the two copies of a doubled model.
pub const DOUBLING_GAP: i64 = 3;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReductionError {
    #[error("vertex {vertex} has degree {degree}; the reduction needs maximum degree 4")]
    Unsupported { vertex: usize, degree: usize },
    #[error("construction bug: {0}")]
    ConstructionBug(String),
    #[error("inconsistent counters: mc(U) = {mc_u} is below 8k + t = {bound}")]
    Inconsistent { mc_u: usize, bound: usize },
    #[error(transparent)]
    Drawing(#[from] DrawingError),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Original,
    Subdivision,
    GadgetW,
    DetourApex,
}

impl Role {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Original => "original",
            Self::Subdivision => "subdivision",
            Self::GadgetW => "gadget_w",
            Self::DetourApex => "detour_apex",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "original" => Self::Original,
            "subdivision" => Self::Subdivision,
            "gadget_w" => Self::GadgetW,
            "detour_apex" => Self::DetourApex,
            _ => return None,
        })
    }
}

/// What a vertex was created for. Crossing positions are in 1/20 units, like
/// every other coordinate in the output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Default)]
pub struct Origin {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub edge: Option<Edge>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub crossing: Option<(i64, i64)>,
}

impl Origin {
    fn vertex(v: usize) -> Self {
        Self {
            vertex: Some(v),
            ..Self::default()
        }
    }

    fn edge(e: Edge) -> Self {
        Self {
            edge: Some(e),
            ..Self::default()
        }
    }

    fn at_crossing(self, c: Cross) -> Self {
        Self {
            crossing: Some((c.x * SCALE, c.y * SCALE)),
            ..self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub role: Role,
    pub origin: Origin,
}

/// `U(G)` with its model and the counters that invert the cut identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub source: Graph,
    pub model: ProximityModel,
    /// Number of crossings, one gadget each.
    pub k: usize,
    /// Interior vertices over all original-edge paths.
    pub t: usize,
    pub provenance: Vec<Provenance>,
    /// Interior vertex count of each original edge's path.
    pub per_edge_subdivisions: BTreeMap<Edge, usize>,
    /// Vertex ids of each original edge's path, endpoints included.
    pub paths: BTreeMap<Edge, Vec<usize>>,
    pub gadgets: Vec<GadgetInstance>,
}

impl ReductionOutput {
    /// The graph `U(G)`.
    pub fn result(&self) -> &Graph {
        self.model.graph()
    }

    /// `mc(G)` from `mc(U(G))`.
    pub fn recover(&self, mc_u: usize) -> Result<usize, ReductionError> {
        recover_mc(mc_u, self.k, self.t)
    }
}

/// Intermediate models kept for inspection.
#[derive(Debug, Clone)]
pub struct ReductionTrace {
    pub drawing: MeshDrawing,
    pub crossings: CrossingReport,
    /// After subdividing routes; edges across a crossing point have length 2.
    pub subdivided: ProximityModel,
    /// After rerouting around each crossing, before the gadgets go in.
    pub rerouted: ProximityModel,
    pub rerouted_provenance: Vec<Provenance>,
    pub output: ReductionOutput,
}

/// `mc_u - 8k - t`, refusing a negative result.
pub fn recover_mc(mc_u: usize, k: usize, t: usize) -> Result<usize, ReductionError> {
    let bound = 8 * k + t;
    mc_u.checked_sub(bound)
        .ok_or(ReductionError::Inconsistent { mc_u, bound })
}

pub fn reduce(g: &Graph) -> Result<ReductionOutput, ReductionError> {
    reduce_traced(g).map(|trace| trace.output)
}

#[derive(Debug, Clone, Copy)]
struct Site {
    point: Point,
    prov: Provenance,
}

/// Vertex store for the steps before renumbering. Ids are creation order;
/// removed vertices stay in the store but are marked dead.
struct Builder {
    sites: Vec<Site>,
    alive: Vec<bool>,
    paths: BTreeMap<Edge, Vec<usize>>,
}

impl Builder {
    fn push(&mut self, point: Point, role: Role, origin: Origin) -> usize {
        self.sites.push(Site {
            point,
            prov: Provenance { role, origin },
        });
        self.alive.push(true);
        self.sites.len() - 1
    }

    /// Live vertices renumbered densely in creation order, edges along paths.
    fn assemble(&self) -> (Graph, Vec<Point>, Vec<Provenance>, BTreeMap<Edge, Vec<usize>>) {
        let mut id = vec![usize::MAX; self.sites.len()];
        let mut points = Vec::new();
        let mut prov = Vec::new();
        for (i, s) in self.sites.iter().enumerate() {
            if self.alive[i] {
                id[i] = points.len();
                points.push(s.point);
                prov.push(s.prov);
            }
        }
        let paths: BTreeMap<Edge, Vec<usize>> = self
            .paths
            .iter()
            .map(|(&e, p)| (e, p.iter().map(|&v| id[v]).collect()))
            .collect();
        let edges = paths.values().flat_map(|p| p.windows(2).map(|w| (w[0], w[1])));
        let graph = Graph::new(points.len(), edges).expect("paths are simple and disjoint");
        (graph, points, prov, paths)
    }
}

/// Runs the whole pipeline and keeps the intermediate models.
pub fn reduce_traced(g: &Graph) -> Result<ReductionTrace, ReductionError> {
    let degrees = g.degrees();
    if let Some((vertex, &degree)) = degrees.iter().enumerate().find(|(_, &d)| d > 4) {
        return Err(ReductionError::Unsupported { vertex, degree });
    }
    let bug = |msg: String| ReductionError::ConstructionBug(msg);

    let drawing = drawing::standardize(&drawing::mesh_draw(g)?);
    if !drawing::validate_standard(&drawing).all_pass() {
        return Err(bug("standardized drawing violates a standard condition".into()));
    }
    let report = drawing::crossings(&drawing)?;
    let crossing_at: HashSet<Cross> = report.crossings.iter().map(|c| c.point).collect();

    // Mesh subdivision.
    let mut b = Builder {
        sites: Vec::new(),
        alive: Vec::new(),
        paths: BTreeMap::new(),
    };
    for (v, c) in drawing.placements().iter().enumerate() {
        b.push(c.to_point(), Role::Original, Origin::vertex(v));
    }
    let mut at: HashMap<Cross, usize> = HashMap::new();
    for r in drawing.routes() {
        let lattice = r.lattice_points();
        let mut path = vec![r.edge.0];
        for &c in &lattice[1..lattice.len() - 1] {
            if crossing_at.contains(&c) {
                continue;
            }
            let id = b.push(c.to_point(), Role::Subdivision, Origin::edge(r.edge));
            at.insert(c, id);
            path.push(id);
        }
        path.push(r.edge.1);
        b.paths.insert(r.edge, path);
    }
    let (sub_graph, sub_points, _, _) = b.assemble();
    let subdivided = ProximityModel::new(sub_graph, sub_points)?;

    // Rerouting around crossings.
    let mut centers = Vec::with_capacity(report.len());
    for c in &report.crossings {
        let (x, y) = (c.point.x, c.point.y);
        let lookup = |p: Cross| at.get(&p).copied().ok_or_else(|| bug(format!("no vertex at {p}")));

        let below = lookup(Cross::new(x, y - 1))?;
        let above = lookup(Cross::new(x, y + 1))?;
        let mid = b.push(
            c.point.to_point(),
            Role::Subdivision,
            Origin::edge(c.vertical).at_crossing(c.point),
        );
        let vpath = b.paths.get_mut(&c.vertical).expect("route exists");
        splice(vpath, below, above, &[mid]).ok_or_else(|| bug(format!("vertical path misses {}", c.point)))?;

        let left = lookup(Cross::new(x - 1, y))?;
        let right = lookup(Cross::new(x + 1, y))?;
        let origin = Origin::edge(c.horizontal).at_crossing(c.point);
        let base = c.point.to_point();
        let bend: Vec<usize> = [-30, -10, 10, 30]
            .into_iter()
            .map(|dx| b.push(base.translate(dx, 10), Role::Subdivision, origin))
            .collect();
        let hpath = b.paths.get_mut(&c.horizontal).expect("route exists");
        replace_pair(hpath, left, right, &bend)
            .ok_or_else(|| bug(format!("horizontal path misses {}", c.point)))?;
        b.alive[left] = false;
        b.alive[right] = false;
        // v0 = (x + 1/2, y + 1/2), v1 = (x, y + 1), v2 = (x - 1/2, y + 1/2), v3 = (x, y)
        centers.push((c.point, [bend[2], above, bend[1], mid]));
    }
    let (graph, mut points, mut prov, mut paths) = b.assemble();
    let rerouted = ProximityModel::new(graph.clone(), points.clone())?;
    let rerouted_provenance = prov.clone();

    // Renumbering map from builder ids to assembled ids, for gadget corners.
    let mut id = vec![usize::MAX; b.sites.len()];
    let mut next = 0;
    for (i, &alive) in b.alive.iter().enumerate() {
        if alive {
            id[i] = next;
            next += 1;
        }
    }

    // Gadgets.
    let mut graph = graph;
    let mut gadgets = Vec::with_capacity(centers.len());
    for (cross, v) in centers {
        let v = v.map(|i| id[i]);
        let (next_graph, mut inst) = gadget::construct_h_on(&graph, (v[0], v[2]), (v[1], v[3]))?;
        graph = next_graph;
        let center = cross.to_point().translate(0, 10);
        for (w, p) in inst.w.iter().zip(gadget::w_positions(center)) {
            debug_assert_eq!(*w, points.len());
            points.push(p);
            prov.push(Provenance {
                role: Role::GadgetW,
                origin: Origin::default().at_crossing(cross),
            });
        }
        inst.center = Some(center);
        gadgets.push(inst);
    }

    // Parity detours.
    let original = |prov: &[Provenance], v: usize| prov[v].role == Role::Original;
    for (&e, path) in paths.iter_mut() {
        if (path.len() - 2) % 2 == 0 {
            continue;
        }
        let i = detour_site(&graph, &points, &prov, path)
            .ok_or_else(|| bug(format!("no detour site on the path of {e:?}")))?;
        let (a, c) = (path[i], path[i + 1]);
        debug_assert!(!original(&prov, a) && !original(&prov, c));
        let (lo, hi) = if points[a].x < points[c].x { (a, c) } else { (c, a) };
        let y = points[lo].y;
        let x = points[lo].x;
        points[lo] = Point::new(x - SCALE / 4, y);
        points[hi] = Point::new(x + SCALE + SCALE / 4, y);
        let apex = subdivide_edge_once(&mut graph, (a, c))?;
        points.push(Point::new(x + SCALE / 2, y + SCALE / 2));
        prov.push(Provenance {
            role: Role::DetourApex,
            origin: Origin::edge(e),
        });
        path.insert(i + 1, apex);
    }

    let per_edge_subdivisions: BTreeMap<Edge, usize> =
        paths.iter().map(|(&e, p)| (e, p.len() - 2)).collect();
    let t = per_edge_subdivisions.values().sum();
    let model = ProximityModel::new(graph, points)?;

    let check = validate_model(&model)?;
    if !check.passes() {
        return Err(bug(format!(
            "model fails the distance rule: {} long edges, {} close non-edges (first {:?})",
            check.long_edges.len(),
            check.close_non_edges.len(),
            check.long_edges.first().or(check.close_non_edges.first())
        )));
    }
    if model.graph().n() >= 2 && precision2(&model)? < SquaredDistance::HALF {
        return Err(bug("precision dropped below 1/√2".into()));
    }
    if per_edge_subdivisions.values().any(|c| c % 2 == 1) {
        return Err(bug("a path kept an odd number of interior vertices".into()));
    }

    let output = ReductionOutput {
        source: g.clone(),
        model,
        k: gadgets.len(),
        t,
        provenance: prov,
        per_edge_subdivisions,
        paths,
        gadgets,
    };
    Ok(ReductionTrace {
        drawing,
        crossings: report,
        subdivided,
        rerouted,
        rerouted_provenance,
        output,
    })
}

/// Inserts `new` between the adjacent entries `a` and `b` of `path`.
fn splice(path: &mut Vec<usize>, a: usize, b: usize, new: &[usize]) -> Option<()> {
    let i = path.windows(2).position(|w| (w[0] == a && w[1] == b) || (w[0] == b && w[1] == a))?;
    let mut new = new.to_vec();
    if path[i] == b {
        new.reverse();
    }
    path.splice(i + 1..i + 1, new);
    Some(())
}

/// Replaces adjacent entries `a, b` (in either order) by `new`, which runs
/// from the `a` side to the `b` side.
fn replace_pair(path: &mut Vec<usize>, a: usize, b: usize, new: &[usize]) -> Option<()> {
    let i = path.windows(2).position(|w| (w[0] == a && w[1] == b) || (w[0] == b && w[1] == a))?;
    let mut new = new.to_vec();
    if path[i] == b {
        new.reverse();
    }
    path.splice(i..i + 2, new);
    Some(())
}

/// First index `i` such that `path[i..=i+1]` is a unit horizontal edge in
/// the middle of six collinear unit-spaced plain subdivision vertices
/// `path[i-2..=i+3]`, the middle four of degree at most 2.
fn detour_site(g: &Graph, points: &[Point], prov: &[Provenance], path: &[usize]) -> Option<usize> {
    let plain = |v: usize| prov[v].role == Role::Subdivision && prov[v].origin.crossing.is_none();
    (2..path.len().saturating_sub(3)).find(|&i| {
        let window = &path[i - 2..=i + 3];
        let y = points[window[0]].y;
        let step = points[window[1]].x - points[window[0]].x;
        step.abs() == SCALE
            && window.iter().all(|&v| plain(v) && points[v].y == y)
            && window.windows(2).all(|w| points[w[1]].x - points[w[0]].x == step)
            && window[1..5].iter().all(|&v| g.degree(v) <= 2)
    })
}

/// Two disjoint copies of the model, the second shifted right past the first
/// by [`DOUBLING_GAP`] mesh units, so no pair across copies is adjacent.
pub fn double_model(m: &ProximityModel) -> ProximityModel {
    let shift = match m.x_extent() {
        Some((lo, hi)) => hi - lo + DOUBLING_GAP * SCALE,
        None => 0,
    };
    let graph = disjoint_union(m.graph(), m.graph());
    let points = m
        .points()
        .iter()
        .copied()
        .chain(m.points().iter().map(|p| p.translate(shift, 0)))
        .collect();
    ProximityModel::new(graph, points).expect("copies are disjoint")
}

/// The doubled instance whose maximum bisection is `2 · mc(U(G))`.
pub fn bisection_double(r: &ReductionOutput) -> ProximityModel {
    double_model(&r.model)
}

/// Original edge whose path contains `v` as an interior vertex.
pub fn owning_edge(r: &ReductionOutput, v: usize) -> Option<Edge> {
    r.provenance.get(v)?.origin.edge.map(|(a, b)| canonical(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;
    use crate::model::validate_model;
    use crate::solvers::{max_cut_bruteforce, max_cut_dp};

    #[test]
    fn single_edge_is_a_path() {
        let r = reduce(&complete(2)).unwrap();
        assert_eq!(r.k, 0);
        assert_eq!(r.t % 2, 0);
        let u = r.result();
        assert_eq!(u.n(), 2 + r.t);
        assert_eq!(u.m(), 1 + r.t);
        assert!(u.max_degree() <= 2);
        assert_eq!(max_cut_dp(u).unwrap(), 1 + r.t);
    }

    #[test]
    fn recover_examples() {
        assert_eq!(recover_mc(10, 1, 0).unwrap(), 2);
        assert_eq!(recover_mc(5, 0, 0).unwrap(), 5);
        assert_eq!(recover_mc(7, 0, 6).unwrap(), 1);
        assert!(matches!(
            recover_mc(3, 1, 0),
            Err(ReductionError::Inconsistent { mc_u: 3, bound: 8 })
        ));
    }

    #[test]
    fn degree_five_is_rejected() {
        assert_eq!(
            reduce(&star(5)).unwrap_err(),
            ReductionError::Unsupported { vertex: 0, degree: 5 }
        );
    }

    #[test]
    fn k5_round_trip() {
        let r = reduce(&complete(5)).unwrap();
        assert!(r.k >= 1);
        assert_eq!(r.gadgets.len(), r.k);
        assert!(r.per_edge_subdivisions.values().all(|c| c % 2 == 0));
        assert_eq!(precision2(&r.model).unwrap(), SquaredDistance::HALF);
        let mc = max_cut_dp(r.result()).unwrap();
        assert_eq!(r.recover(mc).unwrap(), max_cut_bruteforce(&complete(5)).unwrap().0);
    }

    #[test]
    fn subdivided_edges_are_unit_except_across_crossings() {
        let tr = reduce_traced(&complete(5)).unwrap();
        let rep = validate_model(&tr.subdivided).unwrap();
        assert!(rep.close_non_edges.is_empty());
        assert_eq!(rep.long_edges.len(), 2 * tr.crossings.len());
        assert!(rep.long_edges.iter().all(|w| w.dist2 == SquaredDistance::from_ratio(4, 1)));
    }

    #[test]
    fn rerouted_closeness_stays_inside_crossing_sites() {
        let tr = reduce_traced(&complete(5)).unwrap();
        let rep = validate_model(&tr.rerouted).unwrap();
        assert!(rep.long_edges.is_empty());
        assert!(!rep.close_non_edges.is_empty());
        let prov = &tr.rerouted_provenance;
        for w in &rep.close_non_edges {
            let (a, b) = (prov[w.u].origin.crossing, prov[w.v].origin.crossing);
            // the vertical path's vertex above the crossing keeps a plain origin
            let site = a.or(b).expect("one end belongs to a crossing site");
            let near = |v: usize| {
                prov[v].origin.crossing == Some(site)
                    || (tr.rerouted.point(v).x == site.0 && (tr.rerouted.point(v).y - site.1).abs() == SCALE)
            };
            assert!(near(w.u) && near(w.v), "{w:?}");
        }
    }

    #[test]
    fn doubling_keeps_copies_apart() {
        let m = crate::gadget::h_model(Point::origin());
        let d = double_model(&m);
        assert_eq!(d.graph().n(), 16);
        assert!(validate_model(&d).unwrap().passes());
        let single = ProximityModel::new(Graph::empty(1), vec![Point::origin()]).unwrap();
        let d = double_model(&single);
        assert_eq!(d.points()[1], Point::new(DOUBLING_GAP * SCALE, 0));
    }
}
