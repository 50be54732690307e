//! Exhaustive Max-Cut and Max-Bisection.
//!
//! Vertex 0 is pinned to side 0 and the remaining `n - 1` sides are walked in
//! Gray-code order, so each step flips one vertex and updates the cut size in
//! `O(1)` from packed adjacency masks. Large instances split the walk into
//! chunks on the high vertices; chunk winners are merged with the same
//! tie-break, so the result does not depend on the number of workers.

use crate::graph::{Cut, Graph};

use super::SolverError;

/// Largest vertex count the packed enumeration supports at all.
pub const HARD_LIMIT: usize = 40;

/// Environment variable capping the number of enumeration workers.
pub const THREADS_ENV: &str = "UDG_REDUCE_THREADS";

#[derive(Clone, Copy)]
enum Filter {
    Any,
    Balanced(u32),
}

struct Packed {
    n: usize,
    adj: Vec<u64>,
    deg: Vec<i64>,
}

impl Packed {
    fn new(g: &Graph) -> Self {
        let mut adj = vec![0u64; g.n()];
        for (u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let deg = adj.iter().map(|a| a.count_ones() as i64).collect();
        Self { n: g.n(), adj, deg }
    }

    fn cut_of(&self, mask: u64) -> i64 {
        (0..self.n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| (self.adj[v] & !mask).count_ones() as i64)
            .sum()
    }

    /// Lexicographic rank of a side vector: smaller key = smaller vector.
    fn key(&self, mask: u64) -> u64 {
        mask.reverse_bits() >> (64 - self.n.max(1))
    }
}

/// Best (size, mask) over one chunk; ties go to the smaller key.
fn scan_chunk(p: &Packed, high: u64, low_bits: usize, filter: Filter, collect: bool) -> (i64, u64, Vec<u64>) {
    let mut mask = high;
    let mut cut = p.cut_of(mask);
    let mut best = (i64::MIN, 0u64);
    let mut all = Vec::new();
    let accept = |mask: u64| match filter {
        Filter::Any => true,
        Filter::Balanced(k) => mask.count_ones() == k,
    };
    let mut visit = |mask: u64, cut: i64, best: &mut (i64, u64)| {
        if !accept(mask) {
            return;
        }
        if cut > best.0 || (cut == best.0 && p.key(mask) < p.key(best.1)) {
            if collect && cut > best.0 {
                all.clear();
            }
            *best = (cut, mask);
        }
        if collect && cut == best.0 {
            all.push(mask);
        }
    };
    visit(mask, cut, &mut best);
    for i in 1u64..(1u64 << low_bits) {
        let v = 1 + i.trailing_zeros() as usize;
        let same = if mask >> v & 1 == 1 {
            (p.adj[v] & mask).count_ones()
        } else {
            (p.adj[v] & !mask).count_ones()
        } as i64;
        cut += 2 * same - p.deg[v];
        mask ^= 1 << v;
        visit(mask, cut, &mut best);
    }
    (best.0, best.1, all)
}

fn worker_count() -> usize {
    let available = std::thread::available_parallelism().map_or(1, |n| n.get());
    std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .map_or(available, |cap| cap.clamp(1, available.max(1)))
}

fn enumerate(g: &Graph, limit: usize, filter: Filter) -> Result<(usize, Cut), SolverError> {
    let n = g.n();
    if n > limit.min(HARD_LIMIT) {
        return Err(SolverError::TooLarge {
            n,
            limit: limit.min(HARD_LIMIT),
        });
    }
    if n == 0 {
        return Ok((0, Cut::new(g, Vec::new())?));
    }
    let p = Packed::new(g);
    let free = n - 1;
    let workers = if free >= 20 { worker_count() } else { 1 };
    let chunk_bits = (usize::BITS - 1 - workers.max(1).leading_zeros()) as usize;
    let chunk_bits = chunk_bits.min(free.saturating_sub(1));
    let low_bits = free - chunk_bits;
    let chunks: Vec<u64> = (0..1u64 << chunk_bits).map(|j| j << (1 + low_bits)).collect();

    let results: Vec<(i64, u64)> = if chunks.len() == 1 {
        let (c, m, _) = scan_chunk(&p, chunks[0], low_bits, filter, false);
        vec![(c, m)]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = chunks
                .iter()
                .map(|&high| {
                    let p = &p;
                    s.spawn(move || {
                        let (c, m, _) = scan_chunk(p, high, low_bits, filter, false);
                        (c, m)
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker")).collect()
        })
    };
    let (best, mask) = results
        .into_iter()
        .filter(|&(c, _)| c != i64::MIN)
        .fold((i64::MIN, 0u64), |acc, (c, m)| {
            if c > acc.0 || (c == acc.0 && p.key(m) < p.key(acc.1)) {
                (c, m)
            } else {
                acc
            }
        });
    debug_assert!(best >= 0);
    let side = (0..n).map(|v| (mask >> v & 1) as u8).collect();
    let cut = Cut::new(g, side)?;
    debug_assert_eq!(cut.size() as i64, best);
    Ok((cut.size(), cut))
}

/// Exact maximum cut by enumeration. Ties resolve to the lexicographically
/// smallest side vector.
pub fn max_cut_bruteforce(g: &Graph) -> Result<(usize, Cut), SolverError> {
    max_cut_bruteforce_with_limit(g, super::DEFAULT_BRUTE_LIMIT)
}

pub fn max_cut_bruteforce_with_limit(g: &Graph, limit: usize) -> Result<(usize, Cut), SolverError> {
    enumerate(g, limit, Filter::Any)
}

/// Exact maximum bisection by enumeration over balanced assignments.
pub fn max_bisection_bruteforce(g: &Graph) -> Result<(usize, Cut), SolverError> {
    max_bisection_bruteforce_with_limit(g, super::DEFAULT_BRUTE_LIMIT)
}

pub fn max_bisection_bruteforce_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<(usize, Cut), SolverError> {
    if g.n() % 2 == 1 {
        return Err(SolverError::OddBisection(g.n()));
    }
    enumerate(g, limit, Filter::Balanced((g.n() / 2) as u32))
}

/// Every maximum cut with vertex 0 on side 0 (each unordered partition once).
pub fn all_maximum_cuts(g: &Graph) -> Result<(usize, Vec<Cut>), SolverError> {
    let n = g.n();
    if n > super::DEFAULT_BRUTE_LIMIT {
        return Err(SolverError::TooLarge {
            n,
            limit: super::DEFAULT_BRUTE_LIMIT,
        });
    }
    if n == 0 {
        return Ok((0, vec![Cut::new(g, Vec::new())?]));
    }
    let p = Packed::new(g);
    let (best, _, masks) = scan_chunk(&p, 0, n - 1, Filter::Any, true);
    let cuts = masks
        .into_iter()
        .map(|mask| Cut::new(g, (0..n).map(|v| (mask >> v & 1) as u8).collect()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok((best as usize, cuts))
}
