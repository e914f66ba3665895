//! Simple undirected graphs over dense vertex ids, plus the vertex and
//! edge set types the rest of the crate is written against.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};
use smallvec::SmallVec;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
}

/// Ordered set of vertex ids backed by a bitset.
///
/// Iteration is always in increasing id order, which is what keeps every
/// search in this crate deterministic.
#[derive(Clone, Default)]
pub struct VertexSet {
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(n: usize) -> Self {
        let mut words = SmallVec::new();
        words.resize(n.div_ceil(64), 0);
        VertexSet { words }
    }

    /// The set {0, .., n-1}.
    pub fn full(n: usize) -> Self {
        let mut s = Self::with_capacity(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            let hi = (lo + 64).min(n);
            *w = if hi - lo == 64 {
                u64::MAX
            } else {
                (1u64 << (hi - lo)) - 1
            };
        }
        s
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = Self::new();
        s.insert(v);
        s
    }

    pub fn insert(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        if w >= self.words.len() {
            self.words.resize(w + 1, 0);
        }
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    pub fn remove(&mut self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        if w >= self.words.len() {
            return false;
        }
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        let (w, b) = (v / 64, v % 64);
        w < self.words.len() && self.words[w] & (1 << b) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn word(&self, i: usize) -> u64 {
        self.words.get(i).copied().unwrap_or(0)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        if other.words.len() > self.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (i, a) in self.words.iter_mut().enumerate() {
            *a &= other.word(i);
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (i, a) in self.words.iter_mut().enumerate() {
            *a &= !other.word(i);
        }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut s = self.clone();
        s.difference_with(other);
        s
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & !other.word(i) == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &w)| w & other.word(i) == 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .enumerate()
            .map(|(i, &w)| (w & other.word(i)).count_ones() as usize)
            .sum()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let b = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + b);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;
    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = std::vec::IntoIter<usize>;
    fn into_iter(self) -> Self::IntoIter {
        self.to_vec().into_iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl Extend<usize> for VertexSet {
    fn extend<I: IntoIterator<Item = usize>>(&mut self, iter: I) {
        for v in iter {
            self.insert(v);
        }
    }
}

impl VertexSet {
    fn trimmed(&self) -> &[u64] {
        let len = self.words.iter().rposition(|&w| w != 0).map_or(0, |i| i + 1);
        &self.words[..len]
    }
}

impl PartialEq for VertexSet {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for VertexSet {}

impl std::hash::Hash for VertexSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

/// An unordered vertex pair, stored with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgePair {
    u: usize,
    v: usize,
}

impl EdgePair {
    /// Panics on `u == v`; use [`EdgePair::try_new`] for untrusted input.
    pub fn new(u: usize, v: usize) -> Self {
        Self::try_new(u, v).expect("edge endpoints must differ")
    }

    pub fn try_new(u: usize, v: usize) -> Result<Self, GraphError> {
        match u.cmp(&v) {
            Ordering::Less => Ok(EdgePair { u, v }),
            Ordering::Greater => Ok(EdgePair { u: v, v: u }),
            Ordering::Equal => Err(GraphError::SelfLoop(u)),
        }
    }

    pub fn u(self) -> usize {
        self.u
    }

    pub fn v(self) -> usize {
        self.v
    }

    pub fn ends(self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn map(self, f: impl Fn(usize) -> usize) -> EdgePair {
        EdgePair::new(f(self.u), f(self.v))
    }
}

impl fmt::Debug for EdgePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl Serialize for EdgePair {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(serializer)
    }
}

pub type EdgeSet = BTreeSet<EdgePair>;

/// `a × b` as a set of pairs, skipping pairs with equal ends.
pub fn cross(a: &VertexSet, b: &VertexSet) -> EdgeSet {
    let mut out = EdgeSet::new();
    for x in a {
        for y in b {
            if x != y {
                out.insert(EdgePair::new(x, y));
            }
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::with_capacity(n); n],
            m: 0,
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Like [`Graph::from_edges`] but tolerates repeated pairs.
    pub fn from_edges_lenient<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            match g.try_add_edge(u, v) {
                Ok(()) | Err(GraphError::DuplicateEdge(..)) => {}
                Err(e) => return Err(e),
            }
        }
        Ok(g)
    }

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
        Ok(())
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> bool {
        debug_assert!(u != v && u < self.n() && v < self.n());
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.m += 1;
            true
        } else {
            false
        }
    }

    /// A new graph with `edges` inserted. Pairs already present are ignored.
    pub fn with_edges<'a, I>(&self, edges: I) -> Graph
    where
        I: IntoIterator<Item = &'a EdgePair>,
    {
        let mut g = self.clone();
        for e in edges {
            g.add_edge(e.u, e.v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges, `||G||`.
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn has_edge(&self, e: EdgePair) -> bool {
        self.adjacent(e.u, e.v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// `N(S)`: vertices outside `s` with a neighbor in `s`.
    pub fn open_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::with_capacity(self.n());
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(s);
        out
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgePair> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| EdgePair { u, v })
        })
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }

    /// Vertex pairs that are not edges, in lexicographic order.
    pub fn non_edges(&self) -> Vec<EdgePair> {
        let n = self.n();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !self.adj[u].contains(v) {
                    out.push(EdgePair { u, v });
                }
            }
        }
        out
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// `G[S]` with vertices renumbered `0..|S|` in increasing id order.
    pub fn induced(&self, s: &VertexSet) -> Result<Induced, GraphError> {
        let n = self.n();
        if let Some(bad) = s.iter().find(|&v| v >= n) {
            return Err(GraphError::VertexOutOfRange { vertex: bad, n });
        }
        let to_original = s.to_vec();
        let mut to_local = vec![usize::MAX; n];
        for (i, &v) in to_original.iter().enumerate() {
            to_local[v] = i;
        }
        let mut g = Graph::empty(to_original.len());
        for (i, &v) in to_original.iter().enumerate() {
            for w in self.adj[v].iter() {
                let j = to_local[w];
                if j != usize::MAX && j > i {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(Induced {
            graph: g,
            to_original,
            to_local,
        })
    }

    /// `G - S`.
    pub fn without(&self, s: &VertexSet) -> Induced {
        self.induced(&self.vertices().difference(s))
            .expect("complement of a vertex set is in range")
    }

    /// Vertices reachable from `start` without entering `blocked`.
    pub fn reach_avoiding(&self, start: usize, blocked: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::with_capacity(self.n());
        if blocked.contains(start) {
            return seen;
        }
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in self.adj[v].iter() {
                if !blocked.contains(w) && seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen
    }

    /// Shortest `from`-`to` path avoiding `blocked`, neighbors explored in
    /// increasing id order. Both ends must lie outside `blocked`.
    pub fn shortest_path_avoiding(&self, from: usize, to: usize, blocked: &VertexSet) -> Option<Vec<usize>> {
        if blocked.contains(from) || blocked.contains(to) {
            return None;
        }
        let n = self.n();
        let mut parent = vec![usize::MAX; n];
        parent[from] = from;
        let mut queue = std::collections::VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = parent[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for w in self.adj[v].iter() {
                if parent[w] == usize::MAX && !blocked.contains(w) {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        None
    }

    /// Component labels of `G - blocked`; blocked vertices get `usize::MAX`.
    pub fn component_labels_avoiding(&self, blocked: &VertexSet) -> Vec<usize> {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..n {
            if label[s] != usize::MAX || blocked.contains(s) {
                continue;
            }
            label[s] = next;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for w in self.adj[v].iter() {
                    if label[w] == usize::MAX && !blocked.contains(w) {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Maximal connected vertex sets, ordered by minimum id.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// Components of `G[S]`, ordered by minimum id.
    pub fn components_within(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = s.clone();
        let mut out = Vec::new();
        while let Some(v) = remaining.first() {
            let outside = self.vertices().difference(&remaining);
            let comp = self.reach_avoiding(v, &outside);
            remaining.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.reach_avoiding(0, &VertexSet::new()).len() == self.n()
    }

    pub fn is_connected_set(&self, s: &VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => {
                let outside = self.vertices().difference(s);
                self.reach_avoiding(v, &outside).len() == s.len()
            }
        }
    }

    /// True iff every vertex outside `m` sees all of `m` or none of it.
    pub fn is_module(&self, m: &VertexSet) -> bool {
        let Some(first) = m.first() else {
            return true;
        };
        let outside = self.adj[first].difference(m);
        m.iter().all(|v| self.adj[v].difference(m) == outside)
    }

    /// Debug validation pass: symmetric, irreflexive, edge count consistent.
    pub fn validate(&self) -> bool {
        let n = self.n();
        let mut deg_sum = 0;
        for u in 0..n {
            if self.adj[u].contains(u) || self.adj[u].iter().any(|v| v >= n) {
                return false;
            }
            if self.adj[u].iter().any(|v| !self.adj[v].contains(u)) {
                return false;
            }
            deg_sum += self.adj[u].len();
        }
        deg_sum == 2 * self.m
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e:?}")?;
        }
        write!(f, "])")
    }
}

/// An induced subgraph together with the id maps back and forth.
#[derive(Clone, Debug)]
pub struct Induced {
    pub graph: Graph,
    pub to_original: Vec<usize>,
    to_local: Vec<usize>,
}

impl Induced {
    pub fn original(&self, local: usize) -> usize {
        self.to_original[local]
    }

    pub fn local(&self, original: usize) -> Option<usize> {
        match self.to_local.get(original) {
            Some(&i) if i != usize::MAX => Some(i),
            _ => None,
        }
    }

    pub fn lift_set(&self, s: &VertexSet) -> VertexSet {
        s.iter().map(|v| self.to_original[v]).collect()
    }

    pub fn lower_set(&self, s: &VertexSet) -> VertexSet {
        s.iter().filter_map(|v| self.local(v)).collect()
    }

    pub fn lift_edge(&self, e: EdgePair) -> EdgePair {
        e.map(|v| self.to_original[v])
    }

    pub fn lower_edge(&self, e: EdgePair) -> Option<EdgePair> {
        Some(EdgePair::new(self.local(e.u())?, self.local(e.v())?))
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    fn brute_is_module(g: &Graph, m: &VertexSet) -> bool {
        for x in 0..g.n() {
            if m.contains(x) {
                continue;
            }
            let hits = m.iter().filter(|&v| g.adjacent(x, v)).count();
            if hits != 0 && hits != m.len() {
                return false;
            }
        }
        true
    }

    #[test]
    fn vertex_set_basics() {
        let mut s: VertexSet = [3, 70, 1].into_iter().collect();
        assert_eq!(s.to_vec(), vec![1, 3, 70]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(70));
        assert!(!s.contains(64));
        s.remove(3);
        assert_eq!(s.first(), Some(1));
        let t: VertexSet = [1, 2].into_iter().collect();
        assert_eq!(s.intersection(&t).to_vec(), vec![1]);
        assert_eq!(s.union(&t).to_vec(), vec![1, 2, 70]);
        assert_eq!(VertexSet::full(65).len(), 65);
        assert!(VertexSet::full(3).is_subset(&VertexSet::full(4)));
        // trailing zero words must not break equality semantics for subset tests
        let mut big = VertexSet::with_capacity(200);
        big.insert(5);
        assert!(big.is_subset(&VertexSet::singleton(5)));
        assert_eq!(big, VertexSet::singleton(5));
    }

    #[test]
    fn edge_pair_normalizes() {
        assert_eq!(EdgePair::new(5, 2).ends(), (2, 5));
        assert!(EdgePair::try_new(1, 1).is_err());
    }

    #[test]
    fn self_loop_and_duplicate_rejected() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(2, [(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn induced_on_cycle() {
        let c5 = cycle(5);
        let p = c5.induced(&[1, 2, 3].into_iter().collect()).unwrap();
        assert_eq!(p.graph, path(3));
        assert_eq!(p.to_original, vec![1, 2, 3]);
        assert_eq!(p.local(3), Some(2));
        assert_eq!(p.local(0), None);
        let all = c5.induced(&c5.vertices()).unwrap();
        assert_eq!(all.graph, c5);
        assert!(c5.induced(&VertexSet::singleton(9)).is_err());
    }

    #[test]
    fn module_examples() {
        let c4 = cycle(4);
        assert!(c4.is_module(&VertexSet::singleton(2)));
        assert!(c4.is_module(&[0, 2].into_iter().collect()));
        let p4 = path(4);
        assert!(!p4.is_module(&[1, 2].into_iter().collect()));
    }

    #[test]
    fn components() {
        assert_eq!(cycle(4).connected_components(), vec![VertexSet::full(4)]);
        let two = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(two.connected_components().len(), 2);
        let e3 = Graph::empty(3);
        let comps = e3.connected_components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 1));
        assert_eq!(comps[2].to_vec(), vec![2]);
    }

    #[test]
    fn module_check_matches_brute_force_on_all_small_graphs() {
        // every labeled graph on 5 vertices, every vertex subset
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        for mask in 0u32..(1 << pairs.len()) {
            let g = Graph::from_edges(
                5,
                pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &e)| e),
            )
            .unwrap();
            assert!(g.validate());
            for sub in 1u32..32 {
                let m: VertexSet = (0..5).filter(|i| sub >> i & 1 == 1).collect();
                assert_eq!(g.is_module(&m), brute_is_module(&g, &m));
            }
        }
    }

    #[test]
    fn shortest_path_is_lexicographic_bfs() {
        let c6 = cycle(6);
        let p = c6.shortest_path_avoiding(0, 3, &VertexSet::new()).unwrap();
        assert_eq!(p, vec![0, 1, 2, 3]);
        let blocked = VertexSet::singleton(1);
        assert_eq!(
            c6.shortest_path_avoiding(0, 3, &blocked).unwrap(),
            vec![0, 5, 4, 3]
        );
    }
}
