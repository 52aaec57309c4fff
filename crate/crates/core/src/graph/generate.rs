//! Seeded random graph models and the caterpillar test.

use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{complete, cycle, Graph};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    /// Erdős–Rényi G(n, p).
    Gnp,
    /// Uniform labelled tree via a random Prüfer sequence.
    RandomTree,
    Complete,
    Cycle,
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gnp" => Ok(Model::Gnp),
            "tree" | "random-tree" => Ok(Model::RandomTree),
            "complete" => Ok(Model::Complete),
            "cycle" => Ok(Model::Cycle),
            other => Err(Error::InvalidArgument(format!("unknown model `{other}`"))),
        }
    }
}

/// Deterministic for a fixed `(model, n, p, seed)`.
pub fn generate(model: Model, n: usize, p: Option<f64>, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match model {
        Model::Gnp => {
            let p = p.ok_or_else(|| Error::InvalidArgument("gnp needs a probability".into()))?;
            check_probability(p)?;
            Ok(gnp(n, p, &mut rng))
        }
        Model::RandomTree => Ok(prufer_tree(n, &mut rng)),
        Model::Complete => Ok(complete(n)),
        Model::Cycle => {
            if n < 3 {
                return Err(Error::InvalidArgument("a cycle needs n >= 3".into()));
            }
            Ok(cycle(n))
        }
    }
}

/// Draws G(n, p) samples from one seeded stream until one is connected.
pub fn random_connected_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..10_000 {
        let g = gnp(n, p, &mut rng);
        if g.order() > 0 && g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::InvalidArgument(format!("no connected G({n}, {p}) sample in 10000 draws")))
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!("probability {p} outside [0, 1]")))
    }
}

fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("simple")
}

fn prufer_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    if n <= 2 {
        return Graph::from_edges(n, (1..n).map(|v| (0, v))).expect("simple");
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &s in &seq {
        let leaf = leaves.pop_first().expect("a Prüfer step always has a leaf");
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let rest: Vec<usize> = leaves.into_iter().collect();
    edges.push((rest[0], rest[1]));
    Graph::from_edges(n, edges).expect("simple")
}

/// Whether a tree is a caterpillar: deleting its leaves leaves a path (or
/// nothing). Errors on graphs that are not trees.
pub fn is_caterpillar(g: &Graph) -> Result<bool> {
    let n = g.order();
    if n == 0 || g.size() != n - 1 || !g.is_connected() {
        return Err(Error::Precondition("is_caterpillar expects a tree".into()));
    }
    let spine = g.set_of(g.vertices().filter(|&v| g.degree(v) > 1));
    let path_like = spine.iter().all(|v| g.adj(v).intersection_len(&spine) <= 2);
    Ok(path_like)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path, star};

    #[test]
    fn deterministic_for_seed() {
        let a = generate(Model::Gnp, 30, Some(0.2), 7).unwrap();
        let b = generate(Model::Gnp, 30, Some(0.2), 7).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, generate(Model::Gnp, 30, Some(0.2), 8).unwrap());
    }

    #[test]
    fn trees_are_trees() {
        for seed in 0..50 {
            for n in [1, 2, 3, 10, 40] {
                let t = generate(Model::RandomTree, n, None, seed).unwrap();
                assert_eq!(t.size(), n - 1);
                assert!(t.is_connected());
            }
        }
    }

    #[test]
    fn constructors() {
        let k4 = generate(Model::Complete, 4, None, 0).unwrap();
        assert!(k4.is_complete());
        assert_eq!(k4.size(), 6);
        assert!(generate(Model::Cycle, 2, None, 0).is_err());
        assert!(generate(Model::Gnp, 5, Some(1.5), 0).is_err());
        assert!(generate(Model::Gnp, 5, None, 0).is_err());
    }

    #[test]
    fn caterpillars() {
        assert!(is_caterpillar(&path(6)).unwrap());
        assert!(is_caterpillar(&star(5)).unwrap());
        // K1,3 with every edge subdivided.
        let spider = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert!(!is_caterpillar(&spider).unwrap());
        assert!(is_caterpillar(&cycle(4)).is_err());
    }
}
