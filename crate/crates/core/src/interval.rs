//! Interval graph recognition with certificate models, plus the point and
//! clique queries that the merge phase of the solver relies on.
//!
//! Recognition goes through the complement: a chordal graph is an interval
//! graph iff its complement is transitively orientable, and any transitive
//! orientation of that complement is an interval order whose predecessor
//! sets form a chain. The chain positions give the model directly.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::chordal::is_chordal;
use crate::graph::{Graph, VertexSet};

/// A closed interval with integer endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Interval {
    pub left: usize,
    pub right: usize,
}

/// A position strictly between two integers, stored doubled: `g + 1/2`
/// is held as `2g + 1`. Whole numbers are allowed too but never produced
/// by the cut search.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub twice: usize,
}

impl Point {
    pub fn after(g: usize) -> Point {
        Point { twice: 2 * g + 1 }
    }

    pub fn as_f64(self) -> f64 {
        self.twice as f64 / 2.0
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice.is_multiple_of(2) {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}.5", self.twice / 2)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntervalModel {
    pub intervals: Vec<Interval>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModelError {
    #[error("vertex {0} is not adjacent-free from the separator endpoints")]
    AdjacentEnds(usize),
    #[error("separator endpoint {0} lies inside the separator")]
    EndInSeparator(usize),
    #[error("vertex {0} is not covered by the model")]
    Uncovered(usize),
}

impl IntervalModel {
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn left(&self, v: usize) -> usize {
        self.intervals[v].left
    }

    pub fn right(&self, v: usize) -> usize {
        self.intervals[v].right
    }

    pub fn contains(&self, v: usize, p: Point) -> bool {
        let iv = self.intervals[v];
        2 * iv.left <= p.twice && p.twice <= 2 * iv.right
    }

    /// True iff all `2n` endpoints are distinct, lie in `1..=2n`, and every
    /// interval is proper.
    pub fn is_normalized(&self) -> bool {
        let n = self.len();
        let mut seen = vec![false; 2 * n + 1];
        for iv in &self.intervals {
            if iv.left >= iv.right {
                return false;
            }
            for e in [iv.left, iv.right] {
                if e == 0 || e > 2 * n || seen[e] {
                    return false;
                }
                seen[e] = true;
            }
        }
        true
    }

    /// One line per vertex: `v left right`.
    pub fn to_lines(&self) -> String {
        let mut s = String::new();
        for (v, iv) in self.intervals.iter().enumerate() {
            s.push_str(&format!("{v} {} {}\n", iv.left, iv.right));
        }
        s
    }
}

fn overlap(a: Interval, b: Interval) -> bool {
    a.left <= b.right && b.left <= a.right
}

pub fn verify_model(g: &Graph, m: &IntervalModel) -> bool {
    let n = g.n();
    if m.len() != n || m.intervals.iter().any(|iv| iv.left > iv.right) {
        return false;
    }
    for u in 0..n {
        for v in u + 1..n {
            if g.adjacent(u, v) != overlap(m.intervals[u], m.intervals[v]) {
                return false;
            }
        }
    }
    true
}

/// Rewrite endpoints to the distinct integers `1..=2n`, keeping the order
/// of endpoints and putting left ends before right ends at ties so that
/// touching intervals still meet.
pub fn normalize(m: &IntervalModel) -> IntervalModel {
    let mut ends: Vec<(usize, u8, usize)> = Vec::with_capacity(2 * m.len());
    for (v, iv) in m.intervals.iter().enumerate() {
        ends.push((iv.left, 0, v));
        ends.push((iv.right, 1, v));
    }
    ends.sort_unstable();
    let mut out = vec![Interval { left: 0, right: 0 }; m.len()];
    for (i, &(_, side, v)) in ends.iter().enumerate() {
        if side == 0 {
            out[v].left = i + 1;
        } else {
            out[v].right = i + 1;
        }
    }
    IntervalModel { intervals: out }
}

/// A transitive orientation of the complement of `g`, as a matrix where
/// `before[u][v]` means `u` is oriented towards `v`. `None` when the
/// complement is not a comparability graph.
fn orient_complement(g: &Graph) -> Option<Vec<Vec<bool>>> {
    let n = g.n();
    // alive[u][v]: pair is a complement edge not yet assigned to a class
    let mut alive: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| u != v && !g.adjacent(u, v)).collect())
        .collect();
    let mut before = vec![vec![false; n]; n];
    let mut in_class = vec![vec![false; n]; n];
    while let Some((a, b)) = (0..n)
        .flat_map(|u| (0..n).map(move |v| (u, v)))
        .find(|&(u, v)| alive[u][v])
    {
        // Implication class of (a, b) in the current remaining edge set.
        let mut class = vec![(a, b)];
        in_class[a][b] = true;
        let mut i = 0;
        while i < class.len() {
            let (x, y) = class[i];
            i += 1;
            if in_class[y][x] {
                return None;
            }
            for z in 0..n {
                // (x, y) forces (x, z) when x z is an edge and y z is not
                if z != y && alive[x][z] && !alive[y][z] && !in_class[x][z] {
                    in_class[x][z] = true;
                    class.push((x, z));
                }
                // and (z, y) when z y is an edge and z x is not
                if z != x && alive[z][y] && !alive[z][x] && !in_class[z][y] {
                    in_class[z][y] = true;
                    class.push((z, y));
                }
            }
        }
        for &(x, y) in &class {
            if in_class[y][x] {
                return None;
            }
        }
        for &(x, y) in &class {
            before[x][y] = true;
            alive[x][y] = false;
            alive[y][x] = false;
            in_class[x][y] = false;
        }
    }
    Some(before)
}

/// Build the model of an interval order given as `before[u][v]`.
fn model_from_order(before: &[Vec<bool>]) -> IntervalModel {
    let n = before.len();
    let preds: Vec<VertexSet> = (0..n)
        .map(|v| (0..n).filter(|&u| before[u][v]).collect())
        .collect();
    let mut chain: Vec<VertexSet> = preds.clone();
    chain.sort_by_key(|s| s.len());
    chain.dedup();
    let rank = |s: &VertexSet| chain.iter().position(|c| c == s).expect("set in chain");
    let top = chain.len();
    let intervals = (0..n)
        .map(|v| {
            let left = rank(&preds[v]);
            let right = (0..top).find(|&i| chain[i].contains(v)).map_or(top, |i| i - 1);
            Interval {
                left: 2 * left + 1,
                right: 2 * right + 1,
            }
        })
        .collect();
    IntervalModel { intervals }
}

/// An interval model of `g` with normalized endpoints, or `None` if `g` is
/// not an interval graph.
pub fn recognize(g: &Graph) -> Option<IntervalModel> {
    if !is_chordal(g) {
        return None;
    }
    let order = orient_complement(g)?;
    let model = normalize(&model_from_order(&order));
    if verify_model(g, &model) {
        Some(model)
    } else {
        debug_assert!(false, "orientation of a chordal complement gave a bad model");
        None
    }
}

pub fn is_interval(g: &Graph) -> bool {
    recognize(g).is_some()
}

/// `K_p`: the vertices whose interval contains `p`.
pub fn clique_at(m: &IntervalModel, p: Point) -> VertexSet {
    (0..m.len()).filter(|&v| m.contains(v, p)).collect()
}

/// Separator test read off a model: `x` separates `u` from `v` iff some point
/// between their intervals has its whole clique inside `x`.
pub fn is_separator_certificate(
    g: &Graph,
    m: &IntervalModel,
    x: &VertexSet,
    u: usize,
    v: usize,
) -> Result<bool, ModelError> {
    for w in [u, v] {
        if w >= m.len() {
            return Err(ModelError::Uncovered(w));
        }
        if x.contains(w) {
            return Err(ModelError::EndInSeparator(w));
        }
    }
    if g.adjacent(u, v) || u == v {
        return Err(ModelError::AdjacentEnds(u));
    }
    let (a, b) = if m.right(u) < m.left(v) { (u, v) } else { (v, u) };
    Ok((m.right(a)..m.left(b)).any(|gap| clique_at(m, Point::after(gap)).is_subset(x)))
}

/// Scan the gaps strictly between `h` and `t` and return the point whose
/// clique is smallest among those not containing a `blocked` vertex.
/// Ties go to the leftmost point.
pub fn best_cut_point_by(
    m: &IntervalModel,
    h: usize,
    t: usize,
    blocked: impl Fn(usize) -> bool,
) -> Option<Point> {
    let (h, t) = if m.right(h) < m.left(t) { (h, t) } else { (t, h) };
    debug_assert!(m.right(h) < m.left(t), "h and t must not overlap");
    let mut best: Option<(usize, Point)> = None;
    for gap in m.right(h)..m.left(t) {
        let p = Point::after(gap);
        let k = clique_at(m, p);
        if k.iter().any(&blocked) {
            continue;
        }
        if best.as_ref().is_none_or(|&(size, _)| k.len() < size) {
            best = Some((k.len(), p));
        }
    }
    best.map(|(_, p)| p)
}

/// [`best_cut_point_by`] where a point is unusable if some pair in
/// `K_p × M` is in `avoid`.
pub fn best_cut_point(
    m: &IntervalModel,
    h: usize,
    t: usize,
    module: &VertexSet,
    avoid: &crate::graph::EdgeSet,
) -> Option<Point> {
    best_cut_point_by(m, h, t, |x| {
        module
            .iter()
            .any(|y| x != y && avoid.contains(&crate::graph::EdgePair::new(x, y)))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::{cycle, path};
    use crate::graph::{EdgePair, EdgeSet};

    #[test]
    fn p3_model() {
        let m = recognize(&path(3)).unwrap();
        assert!(m.is_normalized());
        assert!(overlap(m.intervals[0], m.intervals[1]));
        assert!(overlap(m.intervals[2], m.intervals[1]));
        assert!(!overlap(m.intervals[0], m.intervals[2]));
    }

    #[test]
    fn non_interval_examples() {
        assert!(recognize(&cycle(4)).is_none());
        // long claw: chordal but has an asteroidal triple
        let claw = Graph::from_edges(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert!(recognize(&claw).is_none());
    }

    #[test]
    fn hand_models() {
        let p3 = path(3);
        let iv = |l, r| Interval { left: l, right: r };
        let good = IntervalModel {
            intervals: vec![iv(1, 3), iv(2, 5), iv(4, 6)],
        };
        assert!(verify_model(&p3, &good));
        let bad = IntervalModel {
            intervals: vec![iv(1, 2), iv(3, 5), iv(4, 6)],
        };
        assert!(!verify_model(&p3, &bad));
        assert_eq!(clique_at(&good, Point::after(2)).to_vec(), vec![0, 1]);
        assert!(clique_at(&good, Point { twice: 1 }).is_empty());
    }

    #[test]
    fn separators_on_paths() {
        let p3 = path(3);
        let m = recognize(&p3).unwrap();
        assert_eq!(
            is_separator_certificate(&p3, &m, &VertexSet::singleton(1), 0, 2),
            Ok(true)
        );
        let p4 = path(4);
        let m = recognize(&p4).unwrap();
        assert_eq!(
            is_separator_certificate(&p4, &m, &VertexSet::singleton(1), 0, 3),
            Ok(true)
        );
        assert_eq!(
            is_separator_certificate(&p4, &m, &VertexSet::new(), 0, 3),
            Ok(false)
        );
        assert!(is_separator_certificate(&p4, &m, &VertexSet::new(), 0, 1).is_err());
    }

    #[test]
    fn cut_point_on_p4() {
        let p4 = path(4);
        let m = recognize(&p4).unwrap();
        let module = VertexSet::singleton(99);
        let p = best_cut_point(&m, 0, 3, &module, &EdgeSet::new()).unwrap();
        assert_eq!(clique_at(&m, p).len(), 1);
        // exhaustive scan agrees
        let best = (m.right(0)..m.left(3))
            .map(|g| clique_at(&m, Point::after(g)).len())
            .min()
            .unwrap();
        assert_eq!(best, 1);
        let all: EdgeSet = (0..4).map(|x| EdgePair::new(x, 99)).collect();
        assert_eq!(best_cut_point(&m, 3, 0, &module, &all), None);
    }
}
