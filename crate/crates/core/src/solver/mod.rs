//! The bounded search for interval completion.
//!
//! A node first breaks holes and small witnesses outside the parked set.
//! Once that part is reduced it either merges everything (when it is an
//! interval graph) or deals with one component of shallow terminals: a
//! forced insertion if some parked frame has a common base neighbor,
//! otherwise a nested minimum search on the module when needed, followed
//! by a six-way branch on a locally minimal long witness.

mod state;
mod stats;

use std::sync::atomic::{AtomicBool, Ordering};
use web_time::Instant;

use thiserror::Error;

pub use state::{park_exclusions, SearchState, Violation};
pub use stats::SearchStats;
use stats::{bump, Counters};

use crate::graph::{cross, EdgePair, EdgeSet, Graph, VertexSet};
use crate::interval::{best_cut_point_by, clique_at, recognize, verify_model, IntervalModel};
use crate::modules::{expand_shallow_module, parked_components, st_components, ModuleError};
use crate::obstruction::{
    common_base_neighbor, find_small_obstruction, locally_minimal_aw, long_aw_branch_edges,
    minimal_hole_fills, shallow_terminals, small_aw_branch_edges, Obstruction, ObstructionError,
};

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Explore sibling subtrees on the rayon pool. The answer and the
    /// minimum size do not depend on it; the witness may.
    pub parallel: bool,
    /// Check the node invariants at every expanded node.
    pub check_invariants: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            parallel: false,
            check_invariants: cfg!(debug_assertions),
        }
    }
}

/// An interval supergraph: the inserted pairs and a model certifying it.
#[derive(Clone, Debug, PartialEq, serde::Serialize)]
pub struct Completion {
    pub edges: EdgeSet,
    pub model: IntervalModel,
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub completion: Option<Completion>,
    pub stats: SearchStats,
}

/// Result of the iterative-deepening driver.
#[derive(Clone, Debug)]
pub struct Minimum {
    pub completion: Completion,
    /// Statistics of the successful round alone.
    pub last: SearchStats,
    /// Statistics summed over all rounds.
    pub total: SearchStats,
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolveError {
    #[error("invariant check failed: {0}")]
    Invariant(#[from] Violation),
    #[error("obstruction engine: {0}")]
    Obstruction(#[from] ObstructionError),
    #[error("module analysis: {0}")]
    Module(#[from] ModuleError),
    #[error("internal error: {0}")]
    Internal(String),
}

/// What a node does after the reduction step found nothing to break.
enum Step {
    Branch(Vec<SearchState>),
    Merge,
    Dead,
}

/// Shared context of one search tree. Nested searches on modules get a
/// fresh `found` flag but report into the same counters.
struct Search<'a> {
    cfg: &'a SolverConfig,
    counters: &'a Counters,
    found: AtomicBool,
}

pub fn solve(g: &Graph, k: usize) -> Result<Outcome, SolveError> {
    solve_with(g, k, &SolverConfig::default())
}

/// Decide whether at most `k` insertions make `g` an interval graph.
/// Disconnected graphs are handled component by component: each is
/// solved to optimality and the minima are summed.
pub fn solve_with(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<Outcome, SolveError> {
    let start = Instant::now();
    if let Some(model) = recognize(g) {
        let stats = SearchStats {
            nodes: 1,
            leaves: 1,
            ms: elapsed_ms(start),
            ..SearchStats::default()
        };
        let completion = Completion {
            edges: EdgeSet::new(),
            model,
        };
        return Ok(Outcome {
            completion: Some(completion),
            stats,
        });
    }
    if k == 0 {
        let stats = SearchStats {
            nodes: 1,
            leaves: 1,
            ms: elapsed_ms(start),
            ..SearchStats::default()
        };
        return Ok(Outcome {
            completion: None,
            stats,
        });
    }
    let comps = g.connected_components();
    if comps.len() == 1 {
        let counters = Counters::default();
        let edges = Search::new(cfg, &counters).run(SearchState::root(g.clone(), k))?;
        let completion = edges.map(|e| finish(g, e)).transpose()?;
        return Ok(Outcome {
            completion,
            stats: counters.snapshot(elapsed_ms(start)),
        });
    }
    let mut stats = SearchStats::default();
    let mut edges = EdgeSet::new();
    let mut left = k;
    for comp in comps {
        let sub = g.induced(&comp).expect("component vertices exist");
        match minimum_within(&sub.graph, &EdgeSet::new(), 0, left, cfg, &mut stats)? {
            Some(found) => {
                left -= found.len();
                edges.extend(found.into_iter().map(|e| sub.lift_edge(e)));
            }
            None => {
                stats.ms = elapsed_ms(start);
                return Ok(Outcome {
                    completion: None,
                    stats,
                });
            }
        }
    }
    stats.ms = elapsed_ms(start);
    Ok(Outcome {
        completion: Some(finish(g, edges)?),
        stats,
    })
}

/// Smallest completion, found by trying `k = 0, 1, 2, ...`.
pub fn minimum_completion(g: &Graph) -> Result<Minimum, SolveError> {
    minimum_completion_with(g, &SolverConfig::default())
}

pub fn minimum_completion_with(g: &Graph, cfg: &SolverConfig) -> Result<Minimum, SolveError> {
    let mut total = SearchStats::default();
    for k in 0.. {
        let out = solve_with(g, k, cfg)?;
        total.absorb(&out.stats);
        if let Some(completion) = out.completion {
            return Ok(Minimum {
                completion,
                last: out.stats,
                total,
            });
        }
    }
    unreachable!("the complete graph is an interval graph")
}

/// Run a prepared state to the end. The state must satisfy the node
/// invariants; edges in the result are relative to `st.g`.
pub fn solve_state(st: SearchState, cfg: &SolverConfig) -> Result<Outcome, SolveError> {
    let start = Instant::now();
    let counters = Counters::default();
    let g = st.g.clone();
    let edges = Search::new(cfg, &counters).run(st)?;
    Ok(Outcome {
        completion: edges.map(|e| finish(&g, e)).transpose()?,
        stats: counters.snapshot(elapsed_ms(start)),
    })
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn finish(g: &Graph, edges: EdgeSet) -> Result<Completion, SolveError> {
    let h = g.with_edges(&edges);
    let model = recognize(&h)
        .ok_or_else(|| SolveError::Internal("search returned a non-interval supergraph".into()))?;
    debug_assert!(verify_model(&h, &model));
    Ok(Completion { edges, model })
}

/// Minimum insertion set for `g` avoiding `avoid`, trying budgets from
/// `from` up to `to`. `None` if the minimum exceeds `to`.
fn minimum_within(
    g: &Graph,
    avoid: &EdgeSet,
    from: usize,
    to: usize,
    cfg: &SolverConfig,
    stats: &mut SearchStats,
) -> Result<Option<EdgeSet>, SolveError> {
    for k in from..=to {
        let counters = Counters::default();
        let start = Instant::now();
        let found = Search::new(cfg, &counters).run(SearchState::with_avoid(g.clone(), k, avoid.clone()))?;
        stats.absorb(&counters.snapshot(elapsed_ms(start)));
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

impl<'a> Search<'a> {
    fn new(cfg: &'a SolverConfig, counters: &'a Counters) -> Self {
        Search {
            cfg,
            counters,
            found: AtomicBool::new(false),
        }
    }

    fn run(&self, st: SearchState) -> Result<Option<EdgeSet>, SolveError> {
        let out = self.expand(st, 0)?;
        Ok(out)
    }

    fn leaf(&self) -> Result<Option<EdgeSet>, SolveError> {
        bump(&self.counters.leaves);
        Ok(None)
    }

    fn expand(&self, st: SearchState, depth: usize) -> Result<Option<EdgeSet>, SolveError> {
        if self.found.load(Ordering::Relaxed) {
            return Ok(None);
        }
        self.counters.enter(depth);
        if st.k < st.u.len() {
            return self.leaf();
        }
        if self.cfg.check_invariants {
            st.check_invariants()?;
        }
        let children = match self.procedure1(&st) {
            Some(children) => children,
            None => match self.procedure2(&st)? {
                Step::Branch(children) => children,
                Step::Merge => {
                    bump(&self.counters.leaves);
                    let out = self.phase2(&st)?;
                    if out.is_some() {
                        self.found.store(true, Ordering::Relaxed);
                    }
                    return Ok(out);
                }
                Step::Dead => return self.leaf(),
            },
        };
        let children: Vec<SearchState> = children
            .into_iter()
            .filter(|c| {
                let alive = c.k >= c.u.len();
                if !alive {
                    bump(&self.counters.pruned);
                }
                alive
            })
            .collect();
        if self.cfg.check_invariants {
            for c in &children {
                self.check_growth(&st, c)?;
            }
        }
        if children.is_empty() {
            return self.leaf();
        }
        #[cfg(feature = "parallel")]
        if self.cfg.parallel && depth < 4 && children.len() > 1 {
            use rayon::prelude::*;
            let hit = children
                .into_par_iter()
                .map(|c| self.expand(c, depth + 1))
                .find_map_first(|r| match r {
                    Ok(None) => None,
                    other => Some(other),
                });
            return hit.unwrap_or(Ok(None));
        }
        for c in children {
            if let Some(found) = self.expand(c, depth + 1)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    /// Edges and avoided pairs only grow, stay disjoint, and every
    /// insertion is paid for.
    fn check_growth(&self, parent: &SearchState, child: &SearchState) -> Result<(), SolveError> {
        let grown = parent.g.edges().all(|e| child.g.has_edge(e))
            && parent.avoid.is_subset(&child.avoid)
            && parent.g.m() + parent.k == child.g.m() + child.k;
        if grown {
            Ok(())
        } else {
            Err(SolveError::Internal(
                "child state does not extend its parent".into(),
            ))
        }
    }

    /// Break a hole or small witness outside the parked set. `None` when
    /// that part is already reduced.
    pub(crate) fn procedure1(&self, st: &SearchState) -> Option<Vec<SearchState>> {
        let rest = st.g.without(&st.u);
        let found = find_small_obstruction(&rest.graph).expect("the obstruction engine accepts any graph")?;
        let options: Vec<EdgeSet> = match found {
            Obstruction::Hole(h) => {
                bump(&self.counters.holes);
                minimal_hole_fills(&h.map(|v| rest.original(v)))
            }
            Obstruction::Aw(w) => {
                bump(&self.counters.small_aws);
                let w = w.map(|v| rest.original(v));
                small_aw_branch_edges(&w)
                    .expect("small witness")
                    .into_iter()
                    .map(|e| EdgeSet::from([e]))
                    .collect()
            }
        };
        Some(
            options
                .into_iter()
                .filter_map(|fill| {
                    let mut child = st.clone();
                    child.insert(fill).then_some(child)
                })
                .collect(),
        )
    }

    fn procedure2(&self, st: &SearchState) -> Result<Step, SolveError> {
        let rest = st.g.without(&st.u);
        let comps = st_components(&rest.graph)?;
        let Some(first) = comps.first() else {
            return Ok(Step::Merge);
        };
        let m_prime = rest.lift_set(&first.vertices);
        let touching = st.g.open_neighborhood(&m_prime);
        let parked = parked_components(&st.g, &st.u);

        // a parked frame whose base ends have a common neighbor forces
        // that neighbor onto the whole parked component
        for (&key, comp) in &parked {
            if comp.is_disjoint(&touching) {
                continue;
            }
            let frame = st.frames.get(&key).ok_or(ModuleError::MissingFrame(key))?;
            if let Some(x) = common_base_neighbor(&st.g, frame) {
                bump(&self.counters.case1);
                let mut child = st.clone();
                child.unpark(key, comp);
                if !child.insert(cross(&VertexSet::singleton(x), comp)) {
                    return Ok(Step::Dead);
                }
                return Ok(Step::Branch(vec![child]));
            }
        }

        let (m, keys) = expand_shallow_module(&st.g, &st.u, &m_prime, &st.frames)?;
        let mut st = st.clone();
        let parked_in_m = m.intersection(&st.u);
        let sub = st.g.induced(&m).expect("module vertices exist");
        if recognize(&sub.graph).is_none() {
            bump(&self.counters.recursions);
            let mut inner = SearchState::with_avoid(
                sub.graph.clone(),
                0,
                st.avoid.iter().filter_map(|&e| sub.lower_edge(e)).collect(),
            );
            inner.u = sub.lower_set(&parked_in_m);
            for &key in &keys {
                let local = sub.local(key).expect("parked component inside the module");
                inner.frames.insert(
                    local,
                    st.frames[&key].map(|v| sub.local(v).expect("frame inside the module")),
                );
                inner.parked_since.insert(local, 0);
            }
            let Some(edges) = self.minimum_for(inner, st.k)? else {
                return Ok(Step::Dead);
            };
            if !st.insert(edges.into_iter().map(|e| sub.lift_edge(e))) {
                return Err(SolveError::Internal("module fill uses an avoided pair".into()));
            }
        } else if !parked_in_m.is_empty() {
            return Err(SolveError::Internal(
                "merged module with parked vertices induces an interval graph".into(),
            ));
        }
        for (&key, comp) in &parked {
            if keys.contains(&key) {
                st.unpark(key, comp);
            }
        }

        let rest = st.g.without(&st.u);
        let st_set = shallow_terminals(&rest.graph)?;
        let s = rest
            .local(m.first().expect("module is nonempty"))
            .expect("module lies outside U");
        let w = locally_minimal_aw(&rest.graph, s, &st_set)?.map(|v| rest.original(v));
        let frame = w
            .frame()
            .ok_or_else(|| SolveError::Internal(format!("{} has no frame", w.kind)))?;
        debug_assert!(long_aw_branch_edges(&frame, w.base()).is_ok());
        bump(&self.counters.long_aws);

        let mut children = Vec::with_capacity(6);
        for e in [
            EdgePair::new(frame.l, frame.c2),
            EdgePair::new(frame.c1, frame.r),
            EdgePair::new(frame.h, frame.t),
        ] {
            let mut child = st.clone();
            if child.insert([e]) {
                children.push(child);
            }
        }
        for x in [frame.h, frame.t] {
            let mut child = st.clone();
            if child.insert(cross(&VertexSet::singleton(x), &m)) {
                children.push(child);
            }
        }
        let mut park = st;
        if park_exclusions(&m, &frame).iter().any(|&e| park.g.has_edge(e)) {
            return Err(SolveError::Internal(
                "frame exclusions are not all non-edges".into(),
            ));
        }
        park.park(&m, frame);
        bump(&self.counters.parks);
        children.push(park);
        Ok(Step::Branch(children))
    }

    /// Minimum fill of a module, searched with its own found flag.
    fn minimum_for(&self, inner: SearchState, cap: usize) -> Result<Option<EdgeSet>, SolveError> {
        let from = inner.u.len().max(1);
        for k in from..=cap {
            let nested = Search::new(self.cfg, self.counters);
            let mut attempt = inner.clone();
            attempt.k = k;
            if let Some(edges) = nested.run(attempt)? {
                return Ok(Some(edges));
            }
        }
        Ok(None)
    }

    /// Put every parked component back at the cheapest point between its
    /// frame's base ends.
    fn phase2(&self, st: &SearchState) -> Result<Option<EdgeSet>, SolveError> {
        bump(&self.counters.merges);
        let rest = st.g.without(&st.u);
        let model = recognize(&rest.graph)
            .ok_or_else(|| SolveError::Internal("merge reached with a non-interval remainder".into()))?;
        let mut added = EdgeSet::new();
        for (key, comp) in parked_components(&st.g, &st.u) {
            let frame = st.frames.get(&key).ok_or(ModuleError::MissingFrame(key))?;
            let local = |v| rest.local(v).expect("frame base ends lie outside U");
            let blocked = |x: usize| {
                let x = rest.original(x);
                comp.iter().any(|y| st.avoid.contains(&EdgePair::new(x, y)))
            };
            let Some(p) = best_cut_point_by(&model, local(frame.h), local(frame.t), blocked) else {
                return Ok(None);
            };
            let clique = rest.lift_set(&clique_at(&model, p));
            let outside = clique.difference(&st.g.open_neighborhood(&comp));
            added.extend(cross(&comp, &outside));
            if added.len() > st.k {
                return Ok(None);
            }
        }
        let merged = st.g.with_edges(&added);
        if recognize(&merged).is_none() {
            bump(&self.counters.rejected_merges);
            return Ok(None);
        }
        let mut all: EdgeSet = st.inserted.iter().copied().collect();
        all.extend(added);
        Ok(Some(all))
    }
}

#[cfg(test)]
mod tests;
