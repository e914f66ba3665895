//! Brute-force ground truth. Everything here is deliberately naive: subset
//! enumeration over non-edges, checked by a recognizer, with no pruning
//! beyond stopping at the first feasible size.

use serde::Serialize;
use thiserror::Error;

use crate::chordal::is_chordal;
use crate::graph::{EdgePair, EdgeSet, Graph, VertexSet};
use crate::interval::is_interval;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    pub min_size: usize,
    pub one_witness: EdgeSet,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_minimum_supergraphs: Option<Vec<EdgeSet>>,
}

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("no interval completion with at most {kmax} edges")]
pub struct ExceedsKmax {
    pub kmax: usize,
}

/// Calls `visit` on every `size`-subset of `0..len` in lexicographic order
/// until it returns `true`. Returns whether it stopped early.
fn for_each_subset(len: usize, size: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    if size > len {
        return false;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        if visit(&idx) {
            return true;
        }
        let Some(i) = (0..size).rev().find(|&i| idx[i] != i + len - size) else {
            return false;
        };
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn is_completion(g: &Graph, pool: &[EdgePair], pick: &[usize], test: fn(&Graph) -> bool) -> bool {
    let h = g.with_edges(pick.iter().map(|&i| &pool[i]));
    test(&h)
}

/// Minimum interval completion by increasing-size subset enumeration.
pub fn brute_min_completion(g: &Graph, kmax: usize) -> Result<OracleResult, ExceedsKmax> {
    brute_min_completion_with(g, kmax, is_interval)
}

/// Same search, with the interval test swapped for the caller's.
pub fn brute_min_completion_with(
    g: &Graph,
    kmax: usize,
    test: fn(&Graph) -> bool,
) -> Result<OracleResult, ExceedsKmax> {
    let pool = g.non_edges();
    for size in 0..=kmax.min(pool.len()) {
        let mut found = None;
        for_each_subset(pool.len(), size, |pick| {
            if is_completion(g, &pool, pick, test) {
                found = Some(pick.iter().map(|&i| pool[i]).collect::<EdgeSet>());
                true
            } else {
                false
            }
        });
        if let Some(w) = found {
            return Ok(OracleResult {
                min_size: size,
                one_witness: w,
                all_minimum_supergraphs: None,
            });
        }
    }
    Err(ExceedsKmax { kmax })
}

/// Every edge set of minimum size whose insertion gives an interval graph,
/// in lexicographic order.
pub fn enumerate_minimum_supergraphs(g: &Graph) -> Vec<EdgeSet> {
    let pool = g.non_edges();
    for size in 0..=pool.len() {
        let mut all = Vec::new();
        for_each_subset(pool.len(), size, |pick| {
            if is_completion(g, &pool, pick, is_interval) {
                all.push(pick.iter().map(|&i| pool[i]).collect::<EdgeSet>());
            }
            false
        });
        if !all.is_empty() {
            return all;
        }
    }
    unreachable!("the complete graph is an interval graph")
}

/// Full oracle result including the list of all minimum supergraphs.
pub fn full_oracle(g: &Graph) -> OracleResult {
    let all = enumerate_minimum_supergraphs(g);
    OracleResult {
        min_size: all[0].len(),
        one_witness: all[0].clone(),
        all_minimum_supergraphs: Some(all),
    }
}

/// Every interval supergraph of `g` whose added edges avoid `avoid`, found
/// by exhaustive search over all subsets of the allowed non-edges. Only
/// usable for a handful of candidate pairs.
pub fn enumerate_interval_supergraphs_avoiding(g: &Graph, avoid: &EdgeSet) -> Vec<EdgeSet> {
    let pool: Vec<EdgePair> = g.non_edges().into_iter().filter(|e| !avoid.contains(e)).collect();
    assert!(pool.len() <= 24, "too many candidate pairs for exhaustive search");
    let mut out = Vec::new();
    for mask in 0u32..(1 << pool.len()) {
        let add: EdgeSet = (0..pool.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| pool[i])
            .collect();
        if is_interval(&g.with_edges(&add)) {
            out.push(add);
        }
    }
    out
}

/// All inclusion-minimal chord sets that make the cycle `hole` chordal,
/// by trying every subset of chords. Sorted.
pub fn brute_minimal_hole_fills(hole: &[usize]) -> Vec<EdgeSet> {
    let len = hole.len();
    assert!(len >= 4, "a hole has at least four vertices");
    assert!(
        len <= 9,
        "exhaustive fill enumeration is limited to nine vertices"
    );
    let cycle = Graph::from_edges(len, (0..len).map(|i| (i, (i + 1) % len))).unwrap();
    let chords = cycle.non_edges();
    let chordal_with = |mask: u64| {
        let add: Vec<EdgePair> = (0..chords.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| chords[i])
            .collect();
        is_chordal(&cycle.with_edges(&add))
    };
    let mut out = Vec::new();
    for mask in 0u64..(1 << chords.len()) {
        if !chordal_with(mask) {
            continue;
        }
        let minimal = (0..chords.len())
            .filter(|i| mask >> i & 1 == 1)
            .all(|i| !chordal_with(mask & !(1 << i)));
        if minimal {
            out.push(
                (0..chords.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| chords[i].map(|v| hole[v]))
                    .collect::<EdgeSet>(),
            );
        }
    }
    out.sort();
    out
}

/// Chordality by repeatedly deleting any simplicial vertex.
pub fn chordal_by_elimination(g: &Graph) -> bool {
    let mut alive = g.vertices();
    while !alive.is_empty() {
        let simplicial = alive.iter().find(|&v| {
            let nb = g.neighbors(v).intersection(&alive);
            g.is_clique(&nb)
        });
        match simplicial {
            Some(v) => {
                alive.remove(v);
            }
            None => return false,
        }
    }
    true
}

/// Whether some triple of pairwise nonadjacent vertices is asteroidal,
/// checked with one search per pair and third vertex.
pub fn has_asteroidal_triple_naive(g: &Graph) -> bool {
    let n = g.n();
    let joined = |a: usize, b: usize, c: usize| {
        let blocked = g.closed_neighbors(c);
        g.reach_avoiding(a, &blocked).contains(b)
    };
    for a in 0..n {
        for b in a + 1..n {
            if g.adjacent(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.adjacent(a, c) || g.adjacent(b, c) {
                    continue;
                }
                if joined(a, b, c) && joined(a, c, b) && joined(b, c, a) {
                    return true;
                }
            }
        }
    }
    false
}

/// Interval test that shares no code with the main recognizer.
pub fn independent_is_interval(g: &Graph) -> bool {
    chordal_by_elimination(g) && !has_asteroidal_triple_naive(g)
}

/// Whether `m` is a module of `g` plus `edges`, checked pair by pair.
pub fn is_module_after(g: &Graph, edges: &EdgeSet, m: &VertexSet) -> bool {
    g.with_edges(edges).is_module(m)
}
