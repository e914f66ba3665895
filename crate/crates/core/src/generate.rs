//! Graph generators: exhaustive isomorphism classes for tiny orders,
//! seeded random families for benchmarks and property tests.

use std::collections::BTreeSet;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{EdgePair, Graph, VertexSet};
use crate::obstruction::{AsteroidalWitness, AwKind};

/// Upper-triangle adjacency bits of `g` under the relabelling `perm`
/// (`perm[v]` is the new id of `v`).
fn code_under(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.n();
    let mut code = 0u64;
    for e in g.edges() {
        let (a, b) = (perm[e.u()].min(perm[e.v()]), perm[e.u()].max(perm[e.v()]));
        // position of (a, b) in row-major upper-triangle order
        let pos = a * n - a * (a + 1) / 2 + (b - a - 1);
        code |= 1 << pos;
    }
    code
}

/// A canonical code: equal for two graphs iff they are isomorphic.
/// Vertices are first split into cells by degree, then every order
/// within the cells is tried. Meant for `n <= 11`.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 11, "canonical codes are limited to 11 vertices");
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    });
    let key = |v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in by_degree {
        match cells.last_mut() {
            Some(cell) if key(cell[0]) == key(v) => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut best = u64::MAX;
    search_orders(g, &cells, 0, &mut order, &mut best);
    best
}

fn search_orders(g: &Graph, cells: &[Vec<usize>], i: usize, order: &mut Vec<usize>, best: &mut u64) {
    if i == cells.len() {
        let mut perm = vec![0; g.n()];
        for (pos, &v) in order.iter().enumerate() {
            perm[v] = pos;
        }
        *best = (*best).min(code_under(g, &perm));
        return;
    }
    let mut cell = cells[i].clone();
    permute(&mut cell, 0, &mut |p| {
        let before = order.len();
        order.extend_from_slice(p);
        search_orders(g, cells, i + 1, order, best);
        order.truncate(before);
    });
}

fn permute(items: &mut [usize], k: usize, visit: &mut dyn FnMut(&[usize])) {
    if k == items.len() {
        visit(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, visit);
        items.swap(k, i);
    }
}

/// One graph per isomorphism class on `n` vertices, ordered by edge count
/// then canonical code.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    let mut level: Vec<Graph> = vec![Graph::empty(0)];
    for size in 1..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u64..1 << (size - 1) {
                let mut edges: Vec<(usize, usize)> = g.edges().map(|e| e.ends()).collect();
                edges.extend(
                    (0..size - 1)
                        .filter(|v| mask >> v & 1 == 1)
                        .map(|v| (v, size - 1)),
                );
                let h = Graph::from_edges(size, edges).expect("valid extension");
                let code = canonical_code(&h);
                if seen.insert((h.m(), code)) {
                    next.push(((h.m(), code), h));
                }
            }
        }
        next.sort_by_key(|(key, _)| *key);
        level = next.into_iter().map(|(_, h)| h).collect();
    }
    level
}

pub fn connected_graphs(n: usize) -> Vec<Graph> {
    nonisomorphic_graphs(n)
        .into_iter()
        .filter(Graph::is_connected)
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for v in 0..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("simple by construction")
}

/// `G(n, p)` conditioned on being connected, by rejection.
pub fn random_connected(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    loop {
        let g = random_graph(n, p, rng);
        if g.is_connected() {
            return g;
        }
    }
}

/// Intersection graph of `n` random intervals with endpoints in
/// `0..2n`, conditioned on being connected.
pub fn random_interval(n: usize, rng: &mut impl Rng) -> Graph {
    loop {
        let ivs: Vec<(usize, usize)> = (0..n)
            .map(|_| {
                let a = rng.gen_range(0..2 * n);
                let len = rng.gen_range(1..=n.max(2) / 2 + 1);
                (a, a + len)
            })
            .collect();
        let mut edges = Vec::new();
        for v in 0..n {
            for u in 0..v {
                if ivs[u].0 <= ivs[v].1 && ivs[v].0 <= ivs[u].1 {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).expect("simple by construction");
        if g.is_connected() {
            return g;
        }
    }
}

/// `g` with `e` random non-edges added (fewer if there are not enough).
pub fn add_random_edges(g: &Graph, e: usize, rng: &mut impl Rng) -> Graph {
    let mut pool = g.non_edges();
    pool.shuffle(rng);
    pool.truncate(e);
    g.with_edges(&pool)
}

/// `g` with `e` random edges removed (fewer if there are not enough).
pub fn remove_random_edges(g: &Graph, e: usize, rng: &mut impl Rng) -> Graph {
    let mut keep: Vec<EdgePair> = g.edges().collect();
    keep.shuffle(rng);
    let drop = e.min(keep.len());
    Graph::from_edges(g.n(), keep[drop..].iter().map(|e| e.ends())).expect("subset of a simple graph")
}

/// A random graph on `n` vertices with a planted connected module that
/// is not a clique. Returns the graph and the module.
pub fn planted_module(n: usize, rng: &mut impl Rng) -> (Graph, VertexSet) {
    assert!(n >= 4, "need room for a module of size three and one more vertex");
    loop {
        let size = rng.gen_range(3..=(n - 1).min(4));
        let mut ids: Vec<usize> = (0..n).collect();
        ids.shuffle(rng);
        let module: Vec<usize> = ids[..size].to_vec();
        let outside: Vec<usize> = ids[size..].to_vec();
        let mut edges = Vec::new();
        // a spanning path keeps the module connected, one pair stays open
        for w in module.windows(2) {
            edges.push((w[0], w[1]));
        }
        for i in 0..size {
            for j in i + 2..size {
                if !(i == 0 && j == size - 1) && rng.gen_bool(0.5) {
                    edges.push((module[i], module[j]));
                }
            }
        }
        for (i, &x) in outside.iter().enumerate() {
            if rng.gen_bool(0.5) {
                edges.extend(module.iter().map(|&m| (m, x)));
            }
            for &y in &outside[i + 1..] {
                if rng.gen_bool(0.45) {
                    edges.push((x, y));
                }
            }
        }
        let g = Graph::from_edges(n, edges).expect("simple by construction");
        let m: VertexSet = module.into_iter().collect();
        if g.is_connected() && !g.is_clique(&m) {
            return (g, m);
        }
    }
}

/// A single-center witness with base of length 5 and a second shallow
/// terminal twin to the first. The two shallow terminals form a module
/// that is not connected. Returns the graph and that module.
pub fn disconnected_module_example() -> (Graph, VertexSet) {
    // s1=0, s2=1, c=2, l=3, base 4..=8, r=9
    let mut edges = vec![(0, 2), (1, 2), (3, 4), (8, 9)];
    for b in 4..=8 {
        edges.push((2, b));
        if b < 8 {
            edges.push((b, b + 1));
        }
    }
    (
        Graph::from_edges(10, edges).expect("simple"),
        [0, 1].into_iter().collect(),
    )
}

/// Benchmark families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cycle,
    SmallAw,
    LongAw,
    RandomIntervalPlus,
    RandomIntervalMinus,
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cycle" => Ok(Family::Cycle),
            "small-aw" => Ok(Family::SmallAw),
            "long-aw" => Ok(Family::LongAw),
            "random-interval-plus-e-edges" | "random-interval-plus" => Ok(Family::RandomIntervalPlus),
            "random-interval-minus-e-edges" | "random-interval-minus" => Ok(Family::RandomIntervalMinus),
            other => Err(format!(
                "unknown family {other:?}; expected cycle, small-aw, long-aw, \
                 random-interval-plus-e-edges or random-interval-minus-e-edges"
            )),
        }
    }
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Cycle,
        Family::SmallAw,
        Family::LongAw,
        Family::RandomIntervalPlus,
        Family::RandomIntervalMinus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::SmallAw => "small-aw",
            Family::LongAw => "long-aw",
            Family::RandomIntervalPlus => "random-interval-plus-e-edges",
            Family::RandomIntervalMinus => "random-interval-minus-e-edges",
        }
    }

    /// Instances named `family/parameter`. `sizes` means cycle length for
    /// cycles, base length for long witnesses (one instance per center
    /// count), vertex count for the random families and
    /// is ignored for small witnesses. Random families perturb by
    /// `edits` edges.
    pub fn instances(self, sizes: &[usize], edits: usize, seed: u64) -> Vec<(String, Graph)> {
        let mut r = rng(seed);
        match self {
            Family::Cycle => sizes
                .iter()
                .map(|&n| {
                    (
                        format!("cycle/{n}"),
                        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("n >= 3"),
                    )
                })
                .collect(),
            Family::SmallAw => AwKind::SMALL
                .into_iter()
                .map(|kind| (format!("small-aw/{kind}"), AsteroidalWitness::standard(kind).0))
                .collect(),
            Family::LongAw => sizes
                .iter()
                .flat_map(|&d| {
                    [AwKind::LongDagger(d), AwKind::LongDoubleDagger(d)]
                        .map(|kind| (format!("long-aw/{kind}"), AsteroidalWitness::standard(kind).0))
                })
                .collect(),
            Family::RandomIntervalPlus => sizes
                .iter()
                .map(|&n| {
                    let g = random_interval(n, &mut r);
                    (format!("interval-plus/{n}"), add_random_edges(&g, edits, &mut r))
                })
                .collect(),
            Family::RandomIntervalMinus => sizes
                .iter()
                .map(|&n| {
                    let g = random_interval(n, &mut r);
                    (
                        format!("interval-minus/{n}"),
                        remove_random_edges(&g, edits, &mut r),
                    )
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::interval::is_interval;

    #[test]
    fn class_counts() {
        let all: Vec<usize> = (1..=6).map(|n| nonisomorphic_graphs(n).len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn canonical_code_ignores_labels() {
        let a = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let b = Graph::from_edges(5, [(4, 2), (2, 0), (0, 3), (3, 1)]).unwrap();
        let star = Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        assert_ne!(canonical_code(&a), canonical_code(&star));
    }

    #[test]
    fn random_interval_graphs_are_interval() {
        let mut r = rng(5);
        for n in 3..12 {
            assert!(is_interval(&random_interval(n, &mut r)));
        }
    }

    #[test]
    fn planted_modules_hold() {
        let mut r = rng(9);
        for n in 4..=8 {
            let (g, m) = planted_module(n, &mut r);
            assert!(g.is_module(&m) && g.is_connected_set(&m) && !g.is_clique(&m));
        }
    }

    #[test]
    fn families_are_reproducible() {
        for f in Family::ALL {
            let a = f.instances(&[6, 7], 2, 1);
            let b = f.instances(&[6, 7], 2, 1);
            assert_eq!(a.len(), b.len());
            assert!(a.iter().zip(&b).all(|(x, y)| x.0 == y.0 && x.1 == y.1));
            assert_eq!(f.name().parse::<Family>(), Ok(f));
        }
    }

    #[test]
    fn disconnected_module_shape() {
        let (g, m) = disconnected_module_example();
        assert!(g.is_module(&m) && !g.is_connected_set(&m));
        assert!(!is_interval(&g));
    }
}
