use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgePair, EdgeSet, Graph, VertexSet};
use crate::interval::is_interval;
use crate::modules::{is_simplicial_module, parked_components};
use crate::obstruction::Frame;

/// One node of the search: the current graph, the remaining budget, the
/// parked shallow terminals with the frame recorded for each parked
/// component, and the pairs that may no longer be inserted.
#[derive(Clone, Debug)]
pub struct SearchState {
    pub g: Graph,
    pub k: usize,
    pub u: VertexSet,
    /// Keyed by the smallest vertex of the parked component.
    pub frames: BTreeMap<usize, Frame>,
    pub avoid: EdgeSet,
    /// Insertions made since the root, in order.
    pub inserted: Vec<EdgePair>,
    /// For each parked component, how many insertions had been made when
    /// it was parked.
    pub parked_since: BTreeMap<usize, usize>,
}

/// Which executable invariant failed, and where.
#[derive(Clone, Debug, Error, PartialEq, Eq, Serialize)]
#[error("{condition} violated at parked component {key}: {detail}")]
pub struct Violation {
    pub condition: &'static str,
    pub key: usize,
    pub detail: String,
}

impl SearchState {
    pub fn root(g: Graph, k: usize) -> SearchState {
        SearchState::with_avoid(g, k, EdgeSet::new())
    }

    pub fn with_avoid(g: Graph, k: usize, avoid: EdgeSet) -> SearchState {
        SearchState {
            g,
            k,
            u: VertexSet::new(),
            frames: BTreeMap::new(),
            avoid,
            inserted: Vec::new(),
            parked_since: BTreeMap::new(),
        }
    }

    /// `k - |U|`; negative means the node is dead.
    pub fn measure(&self) -> isize {
        self.k as isize - self.u.len() as isize
    }

    /// Insert the pairs not already present. Refuses, leaving `self`
    /// untouched, if one of them is avoided or the budget is too small.
    pub fn insert(&mut self, pairs: impl IntoIterator<Item = EdgePair>) -> bool {
        let mut fresh: Vec<EdgePair> = pairs.into_iter().filter(|&e| !self.g.has_edge(e)).collect();
        fresh.sort_unstable();
        fresh.dedup();
        if fresh.len() > self.k || fresh.iter().any(|e| self.avoid.contains(e)) {
            return false;
        }
        self.g = self.g.with_edges(&fresh);
        self.k -= fresh.len();
        self.inserted.extend(fresh);
        true
    }

    /// Park `m` under `frame` and forbid the pairs that would change it.
    pub fn park(&mut self, m: &VertexSet, frame: Frame) {
        let key = m.first().expect("parked sets are nonempty");
        self.u.union_with(m);
        self.frames.insert(key, frame);
        self.parked_since.insert(key, self.inserted.len());
        self.avoid.extend(park_exclusions(m, &frame));
    }

    /// Drop a parked component and its frame.
    pub fn unpark(&mut self, key: usize, m: &VertexSet) {
        self.u.difference_with(m);
        self.frames.remove(&key);
        self.parked_since.remove(&key);
    }

    /// Run every condition that can be checked at a single node: the
    /// avoided pairs stay non-edges, and each parked component is a
    /// simplicial interval module with a well placed, unchangeable frame.
    pub fn check_invariants(&self) -> Result<(), Violation> {
        let fail = |condition, key, detail: String| {
            Err(Violation {
                condition,
                key,
                detail,
            })
        };
        if let Some(e) = self.avoid.iter().find(|&&e| self.g.has_edge(e)) {
            return fail(
                "A disjoint from E",
                0,
                format!("{e:?} is both avoided and present"),
            );
        }
        let comps = parked_components(&self.g, &self.u);
        if let Some(key) = self.frames.keys().find(|k| !comps.contains_key(k)) {
            return fail("C2", *key, "frame recorded for no parked component".into());
        }
        for (&key, m) in &comps {
            let Some(f) = self.frames.get(&key) else {
                return fail("C2", key, "no frame".into());
            };
            if !is_simplicial_module(&self.g, m) {
                return fail("C2", key, format!("{:?} is not a simplicial module", m.to_vec()));
            }
            if !is_interval(&self.g.induced(m).expect("parked vertices exist").graph) {
                return fail("C2", key, "does not induce an interval graph".into());
            }
            let since = self.parked_since.get(&key).copied().unwrap_or(0);
            if let Some(e) = self.inserted[since..]
                .iter()
                .find(|e| m.contains(e.u()) != m.contains(e.v()))
            {
                return fail("C3", key, format!("{e:?} inserted while parked"));
            }
            if let Some(e) = park_exclusions(m, f)
                .into_iter()
                .find(|e| !self.avoid.contains(e))
            {
                return fail("C4", key, format!("{e:?} is not avoided"));
            }
            let in_m: Vec<usize> = f.vertices().iter().filter(|&v| m.contains(v)).collect();
            if in_m != [f.s] {
                return fail(
                    "C5",
                    key,
                    format!("frame vertices inside the component: {in_m:?}"),
                );
            }
            if [f.c1, f.c2, f.h, f.t].iter().any(|&v| self.u.contains(v)) {
                return fail("C5", key, "a center or base end is parked".into());
            }
            let boundary = self.g.open_neighborhood(m);
            if let Some(x) = boundary
                .difference(&self.u)
                .iter()
                .find(|&x| !self.g.adjacent(x, f.h) || !self.g.adjacent(x, f.t))
            {
                return fail("C6", key, format!("neighbor {x} misses h or t"));
            }
            if self.g.shortest_path_avoiding(f.h, f.t, &boundary).is_none() {
                return fail("C7", key, "no h-t path avoiding N(M)".into());
            }
        }
        Ok(())
    }
}

/// `{l c2, c1 r, h t} ∪ {x h, x t | x ∈ M}`.
pub fn park_exclusions(m: &VertexSet, f: &Frame) -> EdgeSet {
    let mut out: EdgeSet = [
        EdgePair::new(f.l, f.c2),
        EdgePair::new(f.c1, f.r),
        EdgePair::new(f.h, f.t),
    ]
    .into_iter()
    .collect();
    for x in m {
        out.insert(EdgePair::new(x, f.h));
        out.insert(EdgePair::new(x, f.t));
    }
    out
}
