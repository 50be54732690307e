//! Seeded generators for test instances. Everything is driven by ChaCha8 so
//! a seed reproduces the same instances on every platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{dist2, Point, SquaredDistance};
use crate::graph::{Edge, Graph};
use crate::model::ProximityModel;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random simple graph on `n` vertices with maximum degree at most
/// `max_degree`: pairs are visited in random order and each is kept with
/// probability `density` while both endpoints have room.
pub fn bounded_degree_graph(rng: &mut impl Rng, n: usize, max_degree: usize, density: f64) -> Graph {
    let mut pairs: Vec<Edge> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    let mut deg = vec![0usize; n];
    let mut edges = Vec::new();
    for (u, v) in pairs {
        if deg[u] < max_degree && deg[v] < max_degree && rng.gen_bool(density) {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
    }
    Graph::new(n, edges).expect("pairs are distinct")
}

/// A random graph with `n` drawn uniformly from `lo..=hi` and a random density.
pub fn random_instance(rng: &mut impl Rng, lo: usize, hi: usize, max_degree: usize) -> Graph {
    let n = rng.gen_range(lo..=hi);
    let density = rng.gen_range(0.2..0.9);
    bounded_degree_graph(rng, n, max_degree, density)
}

/// Rejection-samples integer points (1/20 units) in `[0, side]²` that are
/// pairwise strictly farther apart than `min_dist2`; stops at `count` points
/// or after `attempts` consecutive rejections. Edges follow the distance rule.
pub fn separated_model(
    rng: &mut impl Rng,
    side: i64,
    count: usize,
    min_dist2: SquaredDistance,
    attempts: usize,
) -> ProximityModel {
    let mut points: Vec<Point> = Vec::with_capacity(count);
    let mut misses = 0;
    while points.len() < count && misses < attempts {
        let p = Point::new(rng.gen_range(0..=side), rng.gen_range(0..=side));
        if points.iter().all(|&q| dist2(p, q) > min_dist2) {
            points.push(p);
            misses = 0;
        } else {
            misses += 1;
        }
    }
    ProximityModel::from_points(points).expect("accepted points are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{precision2, validate_model};

    #[test]
    fn degree_bound_and_reproducibility() {
        let a = bounded_degree_graph(&mut rng(7), 12, 4, 0.8);
        let b = bounded_degree_graph(&mut rng(7), 12, 4, 0.8);
        assert_eq!(a, b);
        assert!(a.max_degree() <= 4);
    }

    #[test]
    fn separated_models_respect_the_bound() {
        let m = separated_model(&mut rng(1), 40, 12, SquaredDistance::HALF, 500);
        assert!(m.graph().n() >= 2);
        assert!(precision2(&m).unwrap() > SquaredDistance::HALF);
        assert!(validate_model(&m).unwrap().passes());
    }
}
