//! Chordality via maximum cardinality search.

use crate::graph::{Graph, VertexSet};

/// Maximum cardinality search. Returns the vertices in the order they were
/// numbered; the reverse is a perfect elimination ordering iff the graph is
/// chordal. Ties go to the smallest id.
pub fn mcs_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut done = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !done[v])
            .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
            .expect("an unnumbered vertex remains");
        done[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            if !done[w] {
                weight[w] += 1;
            }
        }
    }
    order
}

/// True iff `elim` (first eliminated first) is a perfect elimination
/// ordering: each vertex's later neighbors form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, elim: &[usize]) -> bool {
    let n = g.n();
    if elim.len() != n {
        return false;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in elim.iter().enumerate() {
        if v >= n || pos[v] != usize::MAX {
            return false;
        }
        pos[v] = i;
    }
    // Tarjan–Yannakakis check: for v, let p be its earliest later neighbor;
    // the remaining later neighbors of v must all be neighbors of p.
    for &v in elim {
        let later: Vec<usize> = g.neighbors(v).iter().filter(|&w| pos[w] > pos[v]).collect();
        let Some(&parent) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if later.iter().any(|&w| w != parent && !g.adjacent(parent, w)) {
            return false;
        }
    }
    true
}

pub fn perfect_elimination_ordering(g: &Graph) -> Option<Vec<usize>> {
    let mut order = mcs_order(g);
    order.reverse();
    is_perfect_elimination_ordering(g, &order).then_some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    perfect_elimination_ordering(g).is_some()
}

pub fn is_simplicial(g: &Graph, v: usize) -> bool {
    g.is_clique(g.neighbors(v))
}

pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    (0..g.n()).filter(|&v| is_simplicial(g, v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{cycle, path};

    #[test]
    fn cycles_and_paths() {
        assert!(is_chordal(&cycle(3)));
        for n in 4..9 {
            assert!(!is_chordal(&cycle(n)));
        }
        assert!(is_chordal(&path(7)));
        assert!(is_chordal(&Graph::empty(0)));
    }

    #[test]
    fn peo_rejects_bad_orders() {
        let p3 = path(3);
        assert!(is_perfect_elimination_ordering(&p3, &[0, 1, 2]));
        assert!(!is_perfect_elimination_ordering(&p3, &[1, 0, 2]));
        assert!(!is_perfect_elimination_ordering(&p3, &[0, 0, 2]));
    }

    #[test]
    fn chord_makes_c4_chordal() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(is_chordal(&g));
        assert_eq!(simplicial_vertices(&g).to_vec(), vec![1, 3]);
    }
}
