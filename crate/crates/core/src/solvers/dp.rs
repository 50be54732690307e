//! Exact Max-Cut over a tree decomposition.
//!
//! The decomposition is first rewritten into a nice one (leaf, introduce,
//! forget and binary join nodes, empty root). Each node keeps a table indexed
//! by the side assignment of its bag, bit `i` holding the side of `bag[i]`.
//! An edge is counted at the forget node of whichever endpoint leaves first;
//! the other endpoint is still in the bag at that point.

use crate::graph::{Cut, Graph};

use super::treewidth::TreeDecomposition;
use super::SolverError;

#[derive(Debug, Clone, Copy)]
enum Kind {
    Leaf,
    Introduce { child: usize, pos: usize },
    Forget { child: usize, pos: usize, vertex: usize },
    Join { left: usize, right: usize },
}

#[derive(Debug)]
struct Node {
    bag: Vec<usize>,
    kind: Kind,
}

/// Arena of nice nodes in topological order (children before parents); the
/// last node is the root.
struct Nice {
    nodes: Vec<Node>,
}

impl Nice {
    fn push(&mut self, bag: Vec<usize>, kind: Kind) -> usize {
        self.nodes.push(Node { bag, kind });
        self.nodes.len() - 1
    }

    /// Chain from node `from` to a node whose bag is `target`.
    fn morph(&mut self, mut from: usize, target: &[usize]) -> usize {
        let current = self.nodes[from].bag.clone();
        for &v in current.iter().filter(|v| target.binary_search(v).is_err()) {
            let bag = &self.nodes[from].bag;
            let pos = bag.binary_search(&v).expect("present");
            let mut next = bag.clone();
            next.remove(pos);
            from = self.push(next, Kind::Forget { child: from, pos, vertex: v });
        }
        for &v in target {
            let bag = &self.nodes[from].bag;
            if let Err(pos) = bag.binary_search(&v) {
                let mut next = bag.clone();
                next.insert(pos, v);
                from = self.push(next, Kind::Introduce { child: from, pos });
            }
        }
        from
    }

    fn build(td: &TreeDecomposition) -> Self {
        let mut nice = Nice { nodes: Vec::new() };
        let k = td.bags.len();
        if k == 0 {
            nice.push(Vec::new(), Kind::Leaf);
            return nice;
        }
        let mut adj = vec![Vec::new(); k];
        for &(a, b) in &td.tree {
            adj[a].push(b);
            adj[b].push(a);
        }
        let root = k - 1;
        // Iterative DFS preorder; reversed it visits children before parents.
        let mut parent = vec![usize::MAX; k];
        let mut order = Vec::with_capacity(k);
        let mut stack = vec![root];
        parent[root] = root;
        while let Some(x) = stack.pop() {
            order.push(x);
            for &y in &adj[x] {
                if parent[y] == usize::MAX {
                    parent[y] = x;
                    stack.push(y);
                }
            }
        }
        let mut top = vec![usize::MAX; k];
        let mut children: Vec<Vec<usize>> = vec![Vec::new(); k];
        for &x in &order {
            if x != root {
                children[parent[x]].push(x);
            }
        }
        for &x in order.iter().rev() {
            let bag = &td.bags[x];
            let mut branches = children[x].iter().map(|&c| top[c]).collect::<Vec<_>>().into_iter();
            let first = match branches.next() {
                Some(c) => nice.morph(c, bag),
                None => {
                    let leaf = nice.push(Vec::new(), Kind::Leaf);
                    nice.morph(leaf, bag)
                }
            };
            let mut acc = first;
            for c in branches {
                let right = nice.morph(c, bag);
                acc = nice.push(bag.clone(), Kind::Join { left: acc, right });
            }
            top[x] = acc;
        }
        nice.morph(top[root], &[]);
        nice
    }
}

#[inline]
fn remove_bit(mask: usize, pos: usize) -> usize {
    let low = mask & ((1 << pos) - 1);
    let high = (mask >> (pos + 1)) << pos;
    low | high
}

#[inline]
fn insert_bit(mask: usize, pos: usize, bit: usize) -> usize {
    let low = mask & ((1 << pos) - 1);
    let high = (mask >> pos) << (pos + 1);
    low | (bit << pos) | high
}

struct Tables {
    nice: Nice,
    tables: Vec<Vec<u32>>,
    /// For forget nodes: neighbours of the forgotten vertex as a mask over the parent bag.
    forget_nbrs: Vec<usize>,
}

fn run(g: &Graph, td: &TreeDecomposition, ceiling: usize) -> Result<Tables, SolverError> {
    td.validate(g)?;
    let width = td.width();
    if width > ceiling {
        return Err(SolverError::WidthTooLarge { width, ceiling });
    }
    let nice = Nice::build(td);
    let mut tables: Vec<Vec<u32>> = Vec::with_capacity(nice.nodes.len());
    let mut forget_nbrs = vec![0usize; nice.nodes.len()];
    for (i, node) in nice.nodes.iter().enumerate() {
        let size = 1usize << node.bag.len();
        let table = match node.kind {
            Kind::Leaf => vec![0],
            Kind::Introduce { child, pos } => {
                let c = &tables[child];
                (0..size).map(|m| c[remove_bit(m, pos)]).collect()
            }
            Kind::Forget { child, pos, vertex } => {
                let nbrs = node
                    .bag
                    .iter()
                    .enumerate()
                    .filter(|(_, &u)| g.has_edge(u, vertex))
                    .fold(0usize, |acc, (j, _)| acc | 1 << j);
                forget_nbrs[i] = nbrs;
                let c = &tables[child];
                (0..size)
                    .map(|m| {
                        let zero = c[insert_bit(m, pos, 0)] + (nbrs & m).count_ones();
                        let one = c[insert_bit(m, pos, 1)] + (nbrs & !m).count_ones();
                        zero.max(one)
                    })
                    .collect()
            }
            Kind::Join { left, right } => {
                let (l, r) = (&tables[left], &tables[right]);
                (0..size).map(|m| l[m] + r[m]).collect()
            }
        };
        tables.push(table);
    }
    Ok(Tables {
        nice,
        tables,
        forget_nbrs,
    })
}

/// Exact maximum cut size; `td` must be a valid decomposition of `g` with
/// width at most [`super::DEFAULT_WIDTH_CEILING`].
pub fn max_cut_treewidth_dp(g: &Graph, td: &TreeDecomposition) -> Result<usize, SolverError> {
    max_cut_treewidth_dp_with_ceiling(g, td, super::DEFAULT_WIDTH_CEILING)
}

pub fn max_cut_treewidth_dp_with_ceiling(
    g: &Graph,
    td: &TreeDecomposition,
    ceiling: usize,
) -> Result<usize, SolverError> {
    let t = run(g, td, ceiling)?;
    Ok(t.tables.last().expect("root")[0] as usize)
}

/// Exact maximum cut with an optimal side assignment recovered by traceback.
pub fn max_cut_dp_with_cut(
    g: &Graph,
    td: &TreeDecomposition,
    ceiling: usize,
) -> Result<(usize, Cut), SolverError> {
    let t = run(g, td, ceiling)?;
    let root = t.nice.nodes.len() - 1;
    let best = t.tables[root][0] as usize;
    let mut side = vec![0u8; g.n()];
    let mut stack = vec![(root, 0usize)];
    while let Some((i, m)) = stack.pop() {
        match t.nice.nodes[i].kind {
            Kind::Leaf => {}
            Kind::Introduce { child, pos } => stack.push((child, remove_bit(m, pos))),
            Kind::Forget { child, pos, vertex } => {
                let nbrs = t.forget_nbrs[i];
                let c = &t.tables[child];
                let zero = c[insert_bit(m, pos, 0)] + (nbrs & m).count_ones();
                let one = c[insert_bit(m, pos, 1)] + (nbrs & !m).count_ones();
                let s = usize::from(one > zero);
                side[vertex] = s as u8;
                stack.push((child, insert_bit(m, pos, s)));
            }
            Kind::Join { left, right } => {
                stack.push((left, m));
                stack.push((right, m));
            }
        }
    }
    let cut = Cut::new(g, side)?;
    debug_assert_eq!(cut.size(), best);
    Ok((best, cut))
}
