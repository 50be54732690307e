//! Simple undirected graphs, cuts, and the edge surgeries used by the
//! reduction (double subdivision, single subdivision, disjoint union).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// An unordered vertex pair stored canonically as `(min, max)`.
pub type Edge = (usize, usize);

/// Returns the canonical form `(min, max)` of an unordered pair.
#[inline]
pub fn canonical(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("edge {0}-{1} is not in the graph")]
    MissingEdge(usize, usize),
    #[error("side assignment has {got} entries, graph has {expected} vertices")]
    SideLength { expected: usize, got: usize },
    #[error("side of vertex {0} must be 0 or 1")]
    SideValue(usize),
    #[error("malformed graph text: {0}")]
    Parse(String),
}

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are kept as a sorted set of canonical pairs, so two graphs compare
/// equal exactly when their vertex counts and edge sets agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl Graph {
    /// Graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Self {
            n,
            edges: BTreeSet::new(),
        }
    }

    /// Builds a graph, rejecting loops, duplicates (in either orientation) and
    /// out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical sorted order.
    pub fn edges(&self) -> impl ExactSizeIterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&canonical(u, v))
    }

    /// Appends a fresh isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    /// Inserts `uv`; fails on loops, duplicates, or unknown endpoints.
    pub fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if u >= self.n || v >= self.n {
            return Err(GraphError::VertexOutOfRange(u, v, self.n));
        }
        if !self.edges.insert(canonical(u, v)) {
            let (a, b) = canonical(u, v);
            return Err(GraphError::DuplicateEdge(a, b));
        }
        Ok(())
    }

    /// Removes `uv`; fails if it is absent.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if !self.edges.remove(&canonical(u, v)) {
            let (a, b) = canonical(u, v);
            return Err(GraphError::MissingEdge(a, b));
        }
        Ok(())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Sorted adjacency lists.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Serializes in the `n m` / `u v` text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Maximum vertex degree; 0 for edgeless graphs.
pub fn max_degree(g: &Graph) -> usize {
    g.max_degree()
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for Graph {
    type Err = GraphError;

    /// Parses `n m` followed by `m` whitespace-separated pairs. Loops and
    /// duplicate edges are rejected.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut tokens = s.split_whitespace().map(|t| {
            t.parse::<usize>()
                .map_err(|_| GraphError::Parse(format!("not a vertex count or id: {t:?}")))
        });
        let mut next = |what: &str| {
            tokens
                .next()
                .unwrap_or_else(|| Err(GraphError::Parse(format!("missing {what}"))))
        };
        let n = next("vertex count")?;
        let m = next("edge count")?;
        let mut g = Graph::empty(n);
        for i in 0..m {
            let u = next(&format!("endpoint of edge {i}"))?;
            let v = next(&format!("endpoint of edge {i}"))?;
            g.insert_edge(u, v)?;
        }
        if let Some(extra) = tokens.next() {
            return Err(GraphError::Parse(format!(
                "trailing data after {m} edges: {:?}",
                extra.map(|v| v.to_string()).unwrap_or_else(|e| e.to_string())
            )));
        }
        Ok(g)
    }
}

/// Two-sided vertex partition with its cut size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    side: Vec<u8>,
    size: usize,
}

impl Cut {
    /// Builds a cut, computing its size from `g`.
    pub fn new(g: &Graph, side: Vec<u8>) -> Result<Self, GraphError> {
        let size = cut_size(g, &side)?;
        Ok(Self { side, size })
    }

    pub fn side(&self) -> &[u8] {
        &self.side
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// True when both parts have the same cardinality.
    pub fn is_bisection(&self) -> bool {
        let ones = self.side.iter().filter(|&&s| s == 1).count();
        2 * ones == self.side.len()
    }

    /// Number of `g`'s edges crossing between the two parts of this cut.
    pub fn recount(&self, g: &Graph) -> Result<usize, GraphError> {
        cut_size(g, &self.side)
    }
}

/// Counts the edges of `g` whose endpoints lie on different sides.
pub fn cut_size(g: &Graph, side: &[u8]) -> Result<usize, GraphError> {
    if side.len() != g.n() {
        return Err(GraphError::SideLength {
            expected: g.n(),
            got: side.len(),
        });
    }
    if let Some(v) = side.iter().position(|&s| s > 1) {
        return Err(GraphError::SideValue(v));
    }
    Ok(g.edges().filter(|&(u, v)| side[u] != side[v]).count())
}

/// Replaces `uv` by the path `u - a - b - v` with fresh vertices `a = n`,
/// `b = n + 1`. Returns the new graph together with `(a, b)`; `a` is adjacent
/// to the smaller endpoint of the canonical edge.
pub fn subdivide_edge_twice(g: &Graph, e: Edge) -> Result<(Graph, (usize, usize)), GraphError> {
    let (u, v) = canonical(e.0, e.1);
    if !g.has_edge(u, v) {
        return Err(GraphError::MissingEdge(u, v));
    }
    let mut out = g.clone();
    out.remove_edge(u, v)?;
    let a = out.add_vertex();
    let b = out.add_vertex();
    out.insert_edge(u, a)?;
    out.insert_edge(a, b)?;
    out.insert_edge(b, v)?;
    Ok((out, (a, b)))
}

/// Replaces `uv` by `u - c - v` in place and returns the fresh vertex `c`.
pub fn subdivide_edge_once(g: &mut Graph, e: Edge) -> Result<usize, GraphError> {
    g.remove_edge(e.0, e.1)?;
    let c = g.add_vertex();
    g.insert_edge(e.0, c)?;
    g.insert_edge(c, e.1)?;
    Ok(c)
}

/// Disjoint union; `h`'s vertex ids are shifted by `g.n()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let shift = g.n();
    let mut edges = g.edges.clone();
    edges.extend(h.edges().map(|(u, v)| (u + shift, v + shift)));
    Graph {
        n: g.n() + h.n(),
        edges,
    }
}

/// Small named graphs used across tests, examples and the certification run.
pub mod named {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Graph::new(n, edges).expect("complete graph is simple")
    }

    pub fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("cycle is simple")
    }

    /// Star with `leaves` leaves around centre 0.
    pub fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple")
    }

    /// Outer 5-cycle 0..5, inner pentagram 5..10, spokes i - i+5.
    pub fn petersen() -> Graph {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        Graph::new(10, outer.chain(inner).chain(spokes)).expect("petersen is simple")
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn k4_split_cuts_four_edges() {
        assert_eq!(cut_size(&complete(4), &[0, 0, 1, 1]).unwrap(), 4);
    }

    #[test]
    fn trivial_cut_sizes() {
        assert_eq!(cut_size(&Graph::empty(5), &[0, 1, 0, 1, 1]).unwrap(), 0);
        assert_eq!(cut_size(&complete(2), &[0, 1]).unwrap(), 1);
    }

    #[test]
    fn cut_size_rejects_short_side() {
        let err = cut_size(&complete(3), &[0, 1]).unwrap_err();
        assert_eq!(
            err,
            GraphError::SideLength {
                expected: 3,
                got: 2
            }
        );
        assert_eq!(
            cut_size(&complete(2), &[0, 2]).unwrap_err(),
            GraphError::SideValue(1)
        );
    }

    #[test]
    fn subdivide_single_edge_gives_p4() {
        let (g, (a, b)) = subdivide_edge_twice(&complete(2), (0, 1)).unwrap();
        assert_eq!((g.n(), g.m()), (4, 3));
        assert_eq!((a, b), (2, 3));
        assert!(g.has_edge(0, 2) && g.has_edge(2, 3) && g.has_edge(3, 1));
        assert!(!g.has_edge(0, 1));
    }

    #[test]
    fn subdivide_triangle_counts() {
        let (g, _) = subdivide_edge_twice(&cycle(3), (2, 0)).unwrap();
        assert_eq!((g.n(), g.m()), (5, 5));
    }

    #[test]
    fn subdivide_missing_edge_is_an_error() {
        let err = subdivide_edge_twice(&path(3), (0, 2)).unwrap_err();
        assert_eq!(err, GraphError::MissingEdge(0, 2));
    }

    #[test]
    fn union_with_empty_is_identity() {
        let g = petersen();
        assert_eq!(disjoint_union(&g, &Graph::empty(0)), g);
        let kk = disjoint_union(&complete(2), &complete(2));
        assert_eq!((kk.n(), kk.m()), (4, 2));
        assert!(kk.has_edge(2, 3));
    }

    #[test]
    fn max_degrees() {
        assert_eq!(max_degree(&complete(4)), 3);
        assert_eq!(max_degree(&complete(5)), 4);
        assert_eq!(max_degree(&path(3)), 2);
        assert_eq!(max_degree(&Graph::empty(3)), 0);
        assert_eq!(max_degree(&petersen()), 3);
    }

    #[test]
    fn text_format_parses_and_rejects() {
        let g: Graph = "3 2\n0 1\n1 2\n".parse().unwrap();
        assert_eq!(g, path(3));
        assert_eq!(g.to_text().parse::<Graph>().unwrap(), g);
        assert_eq!("2 1\n1 1\n".parse::<Graph>(), Err(GraphError::Loop(1)));
        assert_eq!(
            "3 2\n0 1\n1 0\n".parse::<Graph>(),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            "2 1\n0 5\n".parse::<Graph>(),
            Err(GraphError::VertexOutOfRange(..))
        ));
        assert!(matches!("3 2\n0 1\n".parse::<Graph>(), Err(GraphError::Parse(_))));
        assert!(matches!("3 1\n0 1 2\n".parse::<Graph>(), Err(GraphError::Parse(_))));
        assert!(matches!("x".parse::<Graph>(), Err(GraphError::Parse(_))));
    }

    #[test]
    fn cut_flags_bisection() {
        let c = Cut::new(&cycle(4), vec![0, 1, 0, 1]).unwrap();
        assert_eq!(c.size(), 4);
        assert!(c.is_bisection());
        let c = Cut::new(&cycle(4), vec![0, 1, 1, 1]).unwrap();
        assert!(!c.is_bisection());
    }
}
