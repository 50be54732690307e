//! Tree decompositions from min-fill elimination orderings.

use std::collections::{BTreeSet, HashSet};

use crate::graph::Graph;

use super::SolverError;

/// Bags plus the tree over bag indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    /// Sorted vertex lists.
    pub bags: Vec<Vec<usize>>,
    /// Undirected tree edges between bag indices.
    pub tree: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Largest bag size minus one; `0` for an empty decomposition.
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }

    /// Checks vertex and edge coverage, that `tree` is a tree, and that the
    /// bags holding any vertex form a connected subtree.
    pub fn validate(&self, g: &Graph) -> Result<(), SolverError> {
        let bad = |msg: String| Err(SolverError::InvalidDecomposition(msg));
        let k = self.bags.len();
        if k == 0 {
            return if g.n() == 0 { Ok(()) } else { bad("no bags".into()) };
        }
        if self.tree.len() != k - 1 {
            return bad(format!("{} tree edges for {k} bags", self.tree.len()));
        }
        let mut adj = vec![Vec::new(); k];
        for &(a, b) in &self.tree {
            if a >= k || b >= k || a == b {
                return bad(format!("bad tree edge {a}-{b}"));
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut seen = vec![false; k];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if seen.contains(&false) {
            return bad("tree is disconnected".into());
        }

        let mut count = vec![0usize; g.n()];
        for bag in &self.bags {
            for &v in bag {
                if v >= g.n() {
                    return bad(format!("bag holds unknown vertex {v}"));
                }
                count[v] += 1;
            }
        }
        if let Some(v) = count.iter().position(|&c| c == 0) {
            return bad(format!("vertex {v} is in no bag"));
        }
        let sets: Vec<HashSet<usize>> = self.bags.iter().map(|b| b.iter().copied().collect()).collect();
        let mut owners: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
        for (i, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                owners[v].push(i);
            }
        }
        for (u, v) in g.edges() {
            if !owners[u].iter().any(|&i| sets[i].contains(&v)) {
                return bad(format!("edge {u}-{v} is in no bag"));
            }
        }
        // In a tree, k nodes induce a connected subgraph iff they span k - 1 edges.
        let mut internal = vec![0usize; g.n()];
        for &(a, b) in &self.tree {
            let (small, large) = if sets[a].len() <= sets[b].len() { (a, b) } else { (b, a) };
            for &v in &self.bags[small] {
                if sets[large].contains(&v) {
                    internal[v] += 1;
                }
            }
        }
        if let Some(v) = (0..g.n()).find(|&v| internal[v] + 1 != count[v]) {
            return bad(format!("bags containing {v} are not connected"));
        }
        Ok(())
    }
}

/// Min-fill elimination ordering; ties prefer smaller degree, then smaller id.
pub fn min_fill_ordering(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut adj: Vec<HashSet<usize>> = g.adjacency().into_iter().map(|l| l.into_iter().collect()).collect();
    let fill = |adj: &[HashSet<usize>], v: usize| -> usize {
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        let mut missing = 0;
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !adj[a].contains(&b) {
                    missing += 1;
                }
            }
        }
        missing
    };
    let mut key: Vec<(usize, usize, usize)> = (0..n).map(|v| (fill(&adj, v), adj[v].len(), v)).collect();
    let mut queue: BTreeSet<(usize, usize, usize)> = key.iter().copied().collect();
    let mut eliminated = vec![false; n];
    let mut order = Vec::with_capacity(n);

    while let Some(&first) = queue.iter().next() {
        queue.remove(&first);
        let v = first.2;
        eliminated[v] = true;
        order.push(v);
        let nb: Vec<usize> = adj[v].iter().copied().collect();
        for (i, &a) in nb.iter().enumerate() {
            adj[a].remove(&v);
            for &b in &nb[i + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        let mut affected: BTreeSet<usize> = nb.iter().copied().collect();
        for &a in &nb {
            affected.extend(adj[a].iter().copied());
        }
        for u in affected {
            if eliminated[u] {
                continue;
            }
            let new_key = (fill(&adj, u), adj[u].len(), u);
            if new_key != key[u] {
                queue.remove(&key[u]);
                queue.insert(new_key);
                key[u] = new_key;
            }
        }
    }
    order
}

/// Decomposition induced by an elimination ordering: bag `i` is the `i`-th
/// eliminated vertex with its neighbours at elimination time, attached to the
/// bag of the earliest-eliminated of those neighbours.
pub fn decomposition_from_ordering(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut adj: Vec<HashSet<usize>> = g.adjacency().into_iter().map(|l| l.into_iter().collect()).collect();
    let mut bags = Vec::with_capacity(n);
    let mut tree = Vec::with_capacity(n.saturating_sub(1));
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let mut nb: Vec<usize> = adj[v].iter().copied().collect();
        nb.sort_unstable();
        for (j, &a) in nb.iter().enumerate() {
            adj[a].remove(&v);
            for &b in &nb[j + 1..] {
                adj[a].insert(b);
                adj[b].insert(a);
            }
        }
        match nb.iter().map(|&u| position[u]).min() {
            Some(parent) => tree.push((i, parent)),
            None => roots.push(i),
        }
        let mut bag = nb;
        bag.push(v);
        bag.sort_unstable();
        bags.push(bag);
    }
    for w in roots.windows(2) {
        tree.push((w[0], w[1]));
    }
    TreeDecomposition { bags, tree }
}

/// Tree decomposition from the min-fill heuristic.
pub fn greedy_tree_decomposition(g: &Graph) -> TreeDecomposition {
    decomposition_from_ordering(g, &min_fill_ordering(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn trees_have_width_one() {
        let td = greedy_tree_decomposition(&star(4));
        td.validate(&star(4)).unwrap();
        assert_eq!(td.width(), 1);
        let p = path(30);
        let td = greedy_tree_decomposition(&p);
        td.validate(&p).unwrap();
        assert_eq!(td.width(), 1);
    }

    #[test]
    fn clique_width() {
        let td = greedy_tree_decomposition(&complete(4));
        td.validate(&complete(4)).unwrap();
        assert_eq!(td.width(), 3);
    }

    #[test]
    fn cycle_and_petersen() {
        let c = cycle(8);
        let td = greedy_tree_decomposition(&c);
        td.validate(&c).unwrap();
        assert_eq!(td.width(), 2);
        let p = petersen();
        let td = greedy_tree_decomposition(&p);
        td.validate(&p).unwrap();
        assert!(td.width() >= 4 && td.width() <= 5);
    }

    #[test]
    fn disconnected_graphs_get_one_tree() {
        let g = Graph::new(5, [(0, 1), (3, 4)]).unwrap();
        let td = greedy_tree_decomposition(&g);
        td.validate(&g).unwrap();
        assert_eq!(td.bags.len(), 5);
    }

    #[test]
    fn validation_catches_broken_decompositions() {
        let g = path(3);
        let td = TreeDecomposition {
            bags: vec![vec![0, 1], vec![2]],
            tree: vec![(0, 1)],
        };
        assert!(td.validate(&g).is_err());
        let td = TreeDecomposition {
            bags: vec![vec![0, 1], vec![2], vec![1, 2]],
            tree: vec![(0, 1), (1, 2)],
        };
        // bags with vertex 1 are 0 and 2, joined only through bag 1
        assert!(td.validate(&g).is_err());
    }
}
