//! Simplicial modules and the shallow-terminal components of reduced graphs.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexSet};
use crate::obstruction::{shallow_terminals, Frame, ObstructionError};

/// A connected module whose neighborhood is a clique.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimplicialModule {
    pub vertices: VertexSet,
    pub boundary: VertexSet,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModuleError {
    #[error(transparent)]
    Obstruction(#[from] ObstructionError),
    #[error("frame of the parked component keyed {key} has vertex {vertex} outside the merged module")]
    FrameOutside { key: usize, vertex: usize },
    #[error("merged set {0:?} is not a simplicial module")]
    NotSimplicial(Vec<usize>),
    #[error("no frame recorded for the parked component keyed {0}")]
    MissingFrame(usize),
}

pub fn is_simplicial_module(g: &Graph, m: &VertexSet) -> bool {
    !m.is_empty() && g.is_connected_set(m) && g.is_module(m) && g.is_clique(&g.open_neighborhood(m))
}

/// Components of `g[ST(g)]` with their boundaries, ordered by smallest
/// vertex. Empty when `g` is an interval graph.
pub fn st_components(g: &Graph) -> Result<Vec<SimplicialModule>, ObstructionError> {
    let st = shallow_terminals(g)?;
    Ok(g.components_within(&st)
        .into_iter()
        .map(|vertices| SimplicialModule {
            boundary: g.open_neighborhood(&vertices),
            vertices,
        })
        .collect())
}

/// Components of `g[u]`, keyed by their smallest vertex.
pub fn parked_components(g: &Graph, u: &VertexSet) -> BTreeMap<usize, VertexSet> {
    g.components_within(u)
        .into_iter()
        .map(|c| (c.first().expect("components are nonempty"), c))
        .collect()
}

/// Grow a shallow-terminal component of `g - u` by the parked components
/// that touch it. Returns the merged set and the keys of the components
/// absorbed. Every absorbed frame must end up inside the merged set.
pub fn expand_shallow_module(
    g: &Graph,
    u: &VertexSet,
    m_prime: &VertexSet,
    frames: &BTreeMap<usize, Frame>,
) -> Result<(VertexSet, Vec<usize>), ModuleError> {
    let touching = g.open_neighborhood(m_prime);
    let mut merged = m_prime.clone();
    let mut keys = Vec::new();
    for (key, comp) in parked_components(g, u) {
        if comp.is_disjoint(&touching) {
            continue;
        }
        merged.union_with(&comp);
        keys.push(key);
    }
    for &key in &keys {
        let frame = frames.get(&key).ok_or(ModuleError::MissingFrame(key))?;
        if let Some(vertex) = frame.vertices().iter().find(|&v| !merged.contains(v)) {
            return Err(ModuleError::FrameOutside { key, vertex });
        }
    }
    if !is_simplicial_module(g, &merged) {
        return Err(ModuleError::NotSimplicial(merged.to_vec()));
    }
    Ok((merged, keys))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{cycle, path};
    use crate::obstruction::{AsteroidalWitness, AwKind};

    #[test]
    fn definition_examples() {
        let (g, _) = AsteroidalWitness::standard(AwKind::LongDagger(4));
        assert!(is_simplicial_module(&g, &VertexSet::singleton(0)));
        let c4 = cycle(4);
        assert!(!is_simplicial_module(&c4, &[0, 2].into_iter().collect()));
        assert!(is_simplicial_module(&path(4), &VertexSet::singleton(0)));
        assert!(!is_simplicial_module(&path(4), &VertexSet::new()));
    }

    #[test]
    fn single_dagger_component() {
        let (g, _) = AsteroidalWitness::standard(AwKind::LongDagger(4));
        let comps = st_components(&g).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].vertices.to_vec(), vec![0]);
        assert_eq!(comps[0].boundary.to_vec(), vec![1]);
    }

    #[test]
    fn two_daggers_joined_by_a_path() {
        // second copy shifted by 8, its l joined to the first copy's r
        let (g, _) = AsteroidalWitness::standard(AwKind::LongDagger(4));
        let mut edges: Vec<(usize, usize)> = g.edges().map(|e| e.ends()).collect();
        edges.extend(g.edges().map(|e| (e.u() + 8, e.v() + 8)));
        edges.push((7, 10));
        let g = Graph::from_edges(16, edges).unwrap();
        let comps = st_components(&g).unwrap();
        let sets: Vec<Vec<usize>> = comps.iter().map(|c| c.vertices.to_vec()).collect();
        assert_eq!(sets, vec![vec![0], vec![8]]);
        assert!(comps.iter().all(|c| is_simplicial_module(&g, &c.vertices)));
    }

    #[test]
    fn twin_shallow_vertices_form_one_component() {
        let (g, _) = AsteroidalWitness::standard(AwKind::LongDagger(4));
        let mut edges: Vec<(usize, usize)> = g.edges().map(|e| e.ends()).collect();
        edges.extend([(0, 8), (1, 8)]);
        let g = Graph::from_edges(9, edges).unwrap();
        let comps = st_components(&g).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].vertices.to_vec(), vec![0, 8]);
    }

    #[test]
    fn expansion_without_parked_vertices() {
        let (g, _) = AsteroidalWitness::standard(AwKind::LongDagger(4));
        let m = VertexSet::singleton(0);
        let (merged, keys) = expand_shallow_module(&g, &VertexSet::new(), &m, &BTreeMap::new()).unwrap();
        assert_eq!(merged, m);
        assert!(keys.is_empty());
    }

    #[test]
    fn missing_frame_is_reported() {
        let (g, _) = AsteroidalWitness::standard(AwKind::LongDagger(4));
        let mut edges: Vec<(usize, usize)> = g.edges().map(|e| e.ends()).collect();
        edges.extend([(0, 8), (1, 8)]);
        let g = Graph::from_edges(9, edges).unwrap();
        let err = expand_shallow_module(
            &g,
            &VertexSet::singleton(8),
            &VertexSet::singleton(0),
            &BTreeMap::new(),
        );
        assert_eq!(err, Err(ModuleError::MissingFrame(8)));
    }
}
