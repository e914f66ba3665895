use super::{find_hole, AsteroidalWitness, AwKind, Obstruction, ObstructionError, Roles};
use crate::graph::{Graph, VertexSet};
use crate::interval::is_interval;

/// For every vertex `t`, the component labels of `G - N[t]`. Answers
/// "is this triple asteroidal" in constant time.
pub struct AtIndex {
    labels: Vec<Vec<usize>>,
}

impl AtIndex {
    pub fn new(g: &Graph) -> AtIndex {
        let labels = (0..g.n())
            .map(|t| g.component_labels_avoiding(&g.closed_neighbors(t)))
            .collect();
        AtIndex { labels }
    }

    fn joined(&self, a: usize, b: usize, avoiding: usize) -> bool {
        let l = &self.labels[avoiding];
        l[a] != usize::MAX && l[a] == l[b]
    }

    pub fn is_at(&self, a: usize, b: usize, c: usize) -> bool {
        // nonadjacency and distinctness are implied: a vertex in N[t] gets
        // no label in the labelling that avoids N[t]
        self.joined(a, b, c) && self.joined(a, c, b) && self.joined(b, c, a)
    }
}

pub fn is_at(g: &Graph, a: usize, b: usize, c: usize) -> bool {
    let joined = |x: usize, y: usize, z: usize| {
        let blocked = g.closed_neighbors(z);
        !blocked.contains(x) && g.reach_avoiding(x, &blocked).contains(y)
    };
    a != b && b != c && a != c && joined(a, b, c) && joined(a, c, b) && joined(b, c, a)
}

/// All asteroidal triples `a < b < c`, in lexicographic order.
pub fn asteroidal_triples(g: &Graph) -> Vec<[usize; 3]> {
    let idx = AtIndex::new(g);
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if g.adjacent(a, b) {
                continue;
            }
            for c in b + 1..n {
                if idx.is_at(a, b, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

/// The lexicographically first asteroidal triple, if any.
pub fn find_at(g: &Graph) -> Option<[usize; 3]> {
    let idx = AtIndex::new(g);
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            if g.adjacent(a, b) {
                continue;
            }
            for c in b + 1..n {
                if idx.is_at(a, b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// A witness for an asteroidal triple. When some witness has exactly these
/// terminals, the one with fewest vertices is returned (ties by vertex
/// list). Otherwise the union of the three defining paths is shrunk to a
/// minimal non-interval subgraph, whose terminals then differ from the
/// triple. That happens when a terminal hangs off the end of a longer leg.
pub fn aw_from_at(g: &Graph, triple: [usize; 3]) -> Result<AsteroidalWitness, ObstructionError> {
    let [a, b, c] = triple;
    if a.max(b).max(c) >= g.n() || !is_at(g, a, b, c) {
        return Err(ObstructionError::NotAnAt(a, b, c));
    }
    if let Some(w) = smallest(witnesses_for_triple(g, triple)) {
        return Ok(w);
    }
    let mut w = VertexSet::with_capacity(g.n());
    for (x, y, z) in [(b, c, a), (a, c, b), (a, b, c)] {
        let path = g
            .shortest_path_avoiding(x, y, &g.closed_neighbors(z))
            .expect("asteroidal triple has all three paths");
        w.extend(path);
    }
    for v in w.to_vec().into_iter().rev() {
        let mut smaller = w.clone();
        smaller.remove(v);
        if !is_interval(&g.induced(&smaller).expect("subset of vertices").graph) {
            w = smaller;
        }
    }
    let sub = g.induced(&w).expect("subset of vertices");
    let found = smallest(
        asteroidal_triples(&sub.graph)
            .into_iter()
            .flat_map(|t| witnesses_for_triple(&sub.graph, t)),
    );
    found
        .map(|x| x.map(|v| sub.original(v)))
        .ok_or_else(|| ObstructionError::Unclassified(w.to_vec()))
}

fn smallest(ws: impl IntoIterator<Item = AsteroidalWitness>) -> Option<AsteroidalWitness> {
    ws.into_iter().min_by_key(|w| (w.kind.order(), w.vertex_list()))
}

/// Every witness whose terminals are exactly `triple`. For the based shapes
/// there is one per choice of shallow terminal and centers, carrying the
/// shortest base available.
pub(crate) fn witnesses_for_triple(g: &Graph, triple: [usize; 3]) -> Vec<AsteroidalWitness> {
    let mut ts = triple;
    ts.sort_unstable();
    let mut out: Vec<AsteroidalWitness> = Vec::new();
    let nb = |v: usize| g.neighbors(v);
    let closed = |v: usize| g.closed_neighbors(v);
    let mut push = |w: AsteroidalWitness| {
        if w.matches(g) && !out.contains(&w) {
            out.push(w);
        }
    };

    // long claw: c - v_i - t_i
    let near = closed(ts[0]).union(&closed(ts[1])).union(&closed(ts[2]));
    for c in g.vertices().difference(&near).iter() {
        let legs: Vec<Vec<usize>> = (0..3)
            .map(|i| {
                let others = closed(ts[(i + 1) % 3]).union(&closed(ts[(i + 2) % 3]));
                nb(c).intersection(nb(ts[i])).difference(&others).to_vec()
            })
            .collect();
        for &v0 in &legs[0] {
            for &v1 in &legs[1] {
                for &v2 in &legs[2] {
                    push(AsteroidalWitness {
                        kind: AwKind::LongClaw,
                        roles: Roles::Claw {
                            c,
                            v: [v0, v1, v2],
                            t: ts,
                        },
                    });
                }
            }
        }
    }

    // whipping top: t1 sees c, u sees t2 and t3
    for i in 0..3 {
        let (t2, t3) = (
            ts[(i + 1) % 3].min(ts[(i + 2) % 3]),
            ts[(i + 1) % 3].max(ts[(i + 2) % 3]),
        );
        let t = [ts[i], t2, t3];
        let far = closed(t2).union(&closed(t3));
        for c in nb(t[0]).difference(&far).iter() {
            let us = nb(c)
                .intersection(nb(t2))
                .intersection(nb(t3))
                .difference(&closed(t[0]));
            for u in &us {
                let side = |me: usize, other: usize| {
                    nb(c)
                        .intersection(nb(u))
                        .intersection(nb(me))
                        .difference(&closed(other).union(&closed(t[0])))
                        .to_vec()
                };
                for &v2 in &side(t2, t3) {
                    for &v3 in &side(t3, t2) {
                        push(AsteroidalWitness {
                            kind: AwKind::WhippingTop,
                            roles: Roles::WhippingTop { c, u, v2, v3, t },
                        });
                    }
                }
            }
        }
    }

    // one or two centers, base found as a shortest path through their
    // common neighbors
    let everything = g.vertices();
    for i in 0..3 {
        let s = ts[i];
        let (l, r) = (
            ts[(i + 1) % 3].min(ts[(i + 2) % 3]),
            ts[(i + 1) % 3].max(ts[(i + 2) % 3]),
        );
        let centers = nb(s).to_vec();
        let mut with_centers = |c1: usize, c2: usize| {
            let mut allowed = nb(c1).intersection(nb(c2)).difference(&closed(s));
            allowed.extend([l, r]);
            let blocked = everything.difference(&allowed);
            let Some(path) = g.shortest_path_avoiding(l, r, &blocked) else {
                return;
            };
            let base = path[1..path.len() - 1].to_vec();
            if !base.is_empty() && (c1 != c2 || base.len() >= 2) {
                push(AsteroidalWitness::based(s, c1, c2, l, base, r));
            }
        };
        for &c in &centers {
            if !g.adjacent(c, l) && !g.adjacent(c, r) {
                with_centers(c, c);
            }
        }
        for &c1 in &centers {
            for &c2 in &centers {
                if c1 != c2
                    && g.adjacent(c1, c2)
                    && g.adjacent(c1, l)
                    && !g.adjacent(c1, r)
                    && g.adjacent(c2, r)
                    && !g.adjacent(c2, l)
                {
                    with_centers(c1, c2);
                }
            }
        }
    }
    out
}

/// The smallest small witness over all asteroidal triples of a chordal
/// graph, ties broken by vertex list. `None` if every witness is long.
pub fn find_small_aw(g: &Graph) -> Result<Option<AsteroidalWitness>, ObstructionError> {
    let mut small = Vec::new();
    for triple in asteroidal_triples(g) {
        let mut found = witnesses_for_triple(g, triple);
        if found.is_empty() {
            found.push(aw_from_at(g, triple)?);
        }
        small.extend(found.into_iter().filter(|w| w.kind.is_small()));
    }
    Ok(smallest(small))
}

/// A hole if there is one, else a small witness, else `None` (the graph
/// is reduced).
pub fn find_small_obstruction(g: &Graph) -> Result<Option<Obstruction>, ObstructionError> {
    if let Some(h) = find_hole(g) {
        return Ok(Some(Obstruction::Hole(h)));
    }
    Ok(find_small_aw(g)?.map(Obstruction::Aw))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::cycle;

    #[test]
    fn long_claw_terminals() {
        let (g, w) = AsteroidalWitness::standard(AwKind::LongClaw);
        assert_eq!(find_at(&g), Some([4, 5, 6]));
        let found = aw_from_at(&g, [4, 5, 6]).unwrap();
        assert_eq!(found, w);
    }

    #[test]
    fn standard_witnesses_round_trip() {
        for kind in AwKind::SMALL.into_iter().chain([
            AwKind::LongDagger(4),
            AwKind::LongDoubleDagger(4),
            AwKind::LongDagger(6),
        ]) {
            let (g, w) = AsteroidalWitness::standard(kind);
            let triples = asteroidal_triples(&g);
            assert_eq!(triples.len(), 1, "{kind}");
            let found = aw_from_at(&g, triples[0]).unwrap();
            assert_eq!(found.kind, kind);
            assert_eq!(found.vertices(), w.vertices());
            if !kind.is_small() {
                assert_eq!(found, w);
            }
        }
    }

    #[test]
    fn reduced_long_witness() {
        let (g, _) = AsteroidalWitness::standard(AwKind::LongDagger(4));
        assert_eq!(find_small_obstruction(&g).unwrap(), None);
        let (g, _) = AsteroidalWitness::standard(AwKind::Tent(1));
        match find_small_obstruction(&g).unwrap() {
            Some(Obstruction::Aw(w)) => assert_eq!(w.kind, AwKind::Tent(1)),
            other => panic!("expected a tent, got {other:?}"),
        }
        assert!(matches!(
            find_small_obstruction(&cycle(5)).unwrap(),
            Some(Obstruction::Hole(h)) if h.len() == 5
        ));
    }

    #[test]
    fn not_an_at() {
        let (g, _) = AsteroidalWitness::standard(AwKind::LongClaw);
        assert_eq!(aw_from_at(&g, [0, 5, 6]), Err(ObstructionError::NotAnAt(0, 5, 6)));
    }

    #[test]
    fn c6_has_asteroidal_triples() {
        let g = cycle(6);
        let [a, b, c] = find_at(&g).unwrap();
        assert!(is_at(&g, a, b, c));
        assert!(!is_interval(&g));
    }
}
