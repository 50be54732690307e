//! Exact Max-Cut and Max-Bisection oracles.

mod brute;
mod dp;
mod treewidth;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Cut, Graph, GraphError};

pub use brute::{
    all_maximum_cuts, max_bisection_bruteforce, max_bisection_bruteforce_with_limit,
    max_cut_bruteforce, max_cut_bruteforce_with_limit, HARD_LIMIT, THREADS_ENV,
};
pub use dp::{max_cut_dp_with_cut, max_cut_treewidth_dp, max_cut_treewidth_dp_with_ceiling};
pub use treewidth::{
    decomposition_from_ordering, greedy_tree_decomposition, min_fill_ordering, TreeDecomposition,
};

/// Default vertex limit for exhaustive search.
pub const DEFAULT_BRUTE_LIMIT: usize = 26;

/// Default width ceiling for the decomposition DP (`2^13` states per bag).
pub const DEFAULT_WIDTH_CEILING: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("{n} vertices exceed the brute-force limit {limit}; use the decomposition solver")]
    TooLarge { n: usize, limit: usize },
    #[error("a bisection needs an even number of vertices, got {0}")]
    OddBisection(usize),
    #[error("decomposition width {width} exceeds the ceiling {ceiling}")]
    WidthTooLarge { width: usize, ceiling: usize },
    #[error("invalid tree decomposition: {0}")]
    InvalidDecomposition(String),
    #[error("{0}")]
    Unsupported(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Brute,
    Dp,
    Auto,
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "brute" => Ok(Self::Brute),
            "dp" => Ok(Self::Dp),
            "auto" => Ok(Self::Auto),
            other => Err(format!("unknown method {other:?}; expected brute, dp or auto")),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Brute => "brute",
            Self::Dp => "dp",
            Self::Auto => "auto",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub brute_limit: usize,
    pub width_ceiling: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            brute_limit: DEFAULT_BRUTE_LIMIT,
            width_ceiling: DEFAULT_WIDTH_CEILING,
        }
    }
}

/// An optimum with the method that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub size: usize,
    pub cut: Cut,
    pub method: Method,
    /// Width of the decomposition used, when the DP ran.
    pub width: Option<usize>,
}

/// Maximum cut; `Auto` enumerates up to the brute-force limit and falls back
/// to the decomposition DP beyond it.
pub fn solve_max_cut(g: &Graph, method: Method, limits: Limits) -> Result<Solution, SolverError> {
    let use_brute = match method {
        Method::Brute => true,
        Method::Dp => false,
        Method::Auto => g.n() <= limits.brute_limit,
    };
    if use_brute {
        let (size, cut) = max_cut_bruteforce_with_limit(g, limits.brute_limit)?;
        return Ok(Solution {
            size,
            cut,
            method: Method::Brute,
            width: None,
        });
    }
    let td = greedy_tree_decomposition(g);
    let (size, cut) = max_cut_dp_with_cut(g, &td, limits.width_ceiling)?;
    Ok(Solution {
        size,
        cut,
        method: Method::Dp,
        width: Some(td.width()),
    })
}

/// Maximum bisection. Only exhaustive search is available.
pub fn solve_max_bisection(
    g: &Graph,
    method: Method,
    limits: Limits,
) -> Result<Solution, SolverError> {
    if method == Method::Dp {
        return Err(SolverError::Unsupported(
            "the decomposition solver handles Max-Cut only",
        ));
    }
    let (size, cut) = max_bisection_bruteforce_with_limit(g, limits.brute_limit)?;
    Ok(Solution {
        size,
        cut,
        method: Method::Brute,
        width: None,
    })
}

/// `mc(g)` by the decomposition DP with the default ceiling.
pub fn max_cut_dp(g: &Graph) -> Result<usize, SolverError> {
    max_cut_treewidth_dp(g, &greedy_tree_decomposition(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn auto_switches_on_size() {
        let limits = Limits {
            brute_limit: 8,
            width_ceiling: 12,
        };
        let small = solve_max_cut(&complete(5), Method::Auto, limits).unwrap();
        assert_eq!((small.size, small.method), (6, Method::Brute));
        let big = solve_max_cut(&petersen(), Method::Auto, limits).unwrap();
        assert_eq!((big.size, big.method), (12, Method::Dp));
        assert_eq!(big.cut.recount(&petersen()).unwrap(), 12);
    }

    #[test]
    fn gadget_graph_dp() {
        assert_eq!(max_cut_dp(&crate::gadget::build_h()).unwrap(), 10);
    }

    #[test]
    fn method_parsing() {
        assert_eq!("dp".parse::<Method>(), Ok(Method::Dp));
        assert!("fast".parse::<Method>().is_err());
    }

    #[test]
    fn bisection_parity() {
        assert_eq!(
            solve_max_bisection(&path(3), Method::Auto, Limits::default()).unwrap_err(),
            SolverError::OddBisection(3)
        );
    }
}
