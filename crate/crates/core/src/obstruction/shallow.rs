use std::collections::BTreeMap;

use super::{asteroidal_triples, aw_from_at, AsteroidalWitness, Frame, ObstructionError, Roles};
use crate::chordal::is_chordal;
use crate::graph::{Graph, VertexSet};

/// Shallow terminal of every asteroidal triple of a reduced graph, each
/// paired with the first witness found for it.
pub(crate) fn shallow_witnesses(g: &Graph) -> Result<BTreeMap<usize, AsteroidalWitness>, ObstructionError> {
    if !is_chordal(g) {
        return Err(ObstructionError::NotReduced("the graph has a hole".into()));
    }
    let mut out = BTreeMap::new();
    for triple in asteroidal_triples(g) {
        let w = aw_from_at(g, triple)?;
        if w.kind.is_small() {
            return Err(ObstructionError::NotReduced(format!(
                "{} on {:?}",
                w.kind,
                w.vertex_list()
            )));
        }
        let s = w.shallow().expect("long witnesses have a shallow terminal");
        out.entry(s).or_insert(w);
    }
    Ok(out)
}

/// `ST(G)`: all shallow terminals of a reduced graph. Empty iff the graph
/// is an interval graph.
pub fn shallow_terminals(g: &Graph) -> Result<VertexSet, ObstructionError> {
    Ok(shallow_witnesses(g)?.into_keys().collect())
}

/// How a neighbor of the shallow terminal sees the base of a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Category {
    /// Adjacent to the whole base.
    Full,
    /// Adjacent to part of the base; carries a witness with the same
    /// shallow terminal, this vertex as a center, and a shorter base.
    Partial(AsteroidalWitness),
    /// Adjacent to no base vertex; carries the witness with this vertex in
    /// place of the shallow terminal.
    None(AsteroidalWitness),
}

fn mirrored(w: &AsteroidalWitness) -> AsteroidalWitness {
    match &w.roles {
        Roles::Based {
            s,
            c1,
            c2,
            l,
            r,
            base,
        } => {
            let mut rev = base.clone();
            rev.reverse();
            AsteroidalWitness::based(*s, *c2, *c1, *r, rev, *l)
        }
        _ => w.clone(),
    }
}

fn checked(g: &Graph, w: AsteroidalWitness) -> Result<AsteroidalWitness, ObstructionError> {
    if w.matches(g) {
        Ok(w)
    } else {
        Err(ObstructionError::NotReduced(format!(
            "replacement witness on {:?} is not induced",
            w.vertex_list()
        )))
    }
}

pub fn neighbor_category(g: &Graph, x: usize, w: &AsteroidalWitness) -> Result<Category, ObstructionError> {
    let Roles::Based { s, .. } = &w.roles else {
        return Err(ObstructionError::NoShallowTerminal(w.kind.name()));
    };
    let s = *s;
    if !g.adjacent(x, s) {
        return Err(ObstructionError::NotAdjacentToShallow(x));
    }
    let base = w.base();
    let seen = base.iter().filter(|&&b| g.adjacent(x, b)).count();
    if seen == base.len() {
        let mut others = g.neighbors(s).clone();
        others.remove(x);
        if !others.is_subset(&g.closed_neighbors(x)) {
            return Err(ObstructionError::NotReduced(format!(
                "vertex {x} sees the whole base but not all of N({s})"
            )));
        }
        return Ok(Category::Full);
    }
    let Roles::Based { c1, c2, l, r, .. } = &w.roles else {
        unreachable!()
    };
    if seen == 0 {
        let swapped = AsteroidalWitness::based(x, *c1, *c2, *l, base.to_vec(), *r);
        return Ok(Category::None(checked(g, swapped)?));
    }
    let w = if g.adjacent(x, *r) { mirrored(w) } else { w.clone() };
    let Roles::Based { c2, l, r, base, .. } = &w.roles else {
        unreachable!()
    };
    if g.adjacent(x, *r) {
        return Err(ObstructionError::NotReduced(format!(
            "vertex {x} sees both base terminals"
        )));
    }
    // path b_0 = l, b_1..b_d, b_{d+1} = r
    let mut path = vec![*l];
    path.extend(base);
    path.push(*r);
    let p = (0..path.len())
        .find(|&i| g.adjacent(x, path[i]))
        .expect("x sees some base vertex");
    let q = (p + 1..path.len())
        .find(|&i| !g.adjacent(x, path[i]))
        .expect("x does not see r");
    let replacement = if p == 0 {
        AsteroidalWitness::based(s, x, *c2, *l, path[1..q].to_vec(), path[q])
    } else {
        AsteroidalWitness::based(s, x, x, path[p - 1], path[p..q].to_vec(), path[q])
    };
    Ok(Category::Partial(checked(g, replacement)?))
}

/// A witness with shallow terminal `s` whose base is completely joined to
/// `N(s) \ st`.
pub fn locally_minimal_aw(
    g: &Graph,
    s: usize,
    st: &VertexSet,
) -> Result<AsteroidalWitness, ObstructionError> {
    locally_minimal_aw_traced(g, s, st).map(|(w, _)| w)
}

/// [`locally_minimal_aw`] also reporting how many replacement steps the
/// descent took.
pub fn locally_minimal_aw_traced(
    g: &Graph,
    s: usize,
    st: &VertexSet,
) -> Result<(AsteroidalWitness, usize), ObstructionError> {
    if !st.contains(s) {
        return Err(ObstructionError::NotShallow(s));
    }
    let start = first_witness_with_shallow(g, s)?;
    let mut w = start;
    let mut steps = 0;
    let candidates = g.neighbors(s).difference(st);
    'descent: loop {
        for x in &candidates {
            match neighbor_category(g, x, &w)? {
                Category::Full => {}
                Category::Partial(shorter) => {
                    debug_assert!(shorter.base().len() < w.base().len());
                    w = shorter;
                    steps += 1;
                    continue 'descent;
                }
                Category::None(_) => {
                    return Err(ObstructionError::NotReduced(format!(
                        "vertex {x} is a shallow terminal missing from the given set"
                    )));
                }
            }
        }
        return Ok((w, steps));
    }
}

fn first_witness_with_shallow(g: &Graph, s: usize) -> Result<AsteroidalWitness, ObstructionError> {
    for [a, b, c] in asteroidal_triples(g) {
        if a != s && b != s && c != s {
            continue;
        }
        let w = aw_from_at(g, [a, b, c])?;
        if w.shallow() == Some(s) {
            return Ok(w);
        }
    }
    Err(ObstructionError::NotShallow(s))
}

/// Some `x` adjacent to both `h` and `t` but not to `s`; the smallest such.
pub fn common_base_neighbor(g: &Graph, f: &Frame) -> Option<usize> {
    g.neighbors(f.h)
        .intersection(g.neighbors(f.t))
        .iter()
        .find(|&x| x != f.s && !g.adjacent(x, f.s))
}

#[cfg(test)]
mod tests {
    use super::super::AwKind;
    use super::*;
    use crate::graph::EdgePair;

    /// Standard single-center witness with d = 4 plus one extra vertex 8.
    fn dagger_plus(neighbors: &[usize]) -> Graph {
        let (g, _) = AsteroidalWitness::standard(AwKind::LongDagger(4));
        let mut edges: Vec<(usize, usize)> = g.edges().map(|e| e.ends()).collect();
        edges.extend(neighbors.iter().map(|&v| (v, 8)));
        Graph::from_edges(9, edges).unwrap()
    }

    #[test]
    fn dagger_shallow_terminal() {
        let (g, w) = AsteroidalWitness::standard(AwKind::LongDagger(4));
        assert_eq!(shallow_terminals(&g).unwrap().to_vec(), vec![0]);
        let st = shallow_terminals(&g).unwrap();
        assert_eq!(locally_minimal_aw(&g, 0, &st).unwrap(), w);
        assert!(locally_minimal_aw(&g, 2, &st).is_err());
        assert_eq!(common_base_neighbor(&g, &w.frame().unwrap()), None);
    }

    #[test]
    fn two_shallow_vertices() {
        // second shallow vertex 8 hanging off the center
        let g = dagger_plus(&[1]);
        assert_eq!(shallow_terminals(&g).unwrap().to_vec(), vec![0, 8]);
    }

    #[test]
    fn categories() {
        // s=0, c=1, l=2, b1..b4 = 3..6, r=7
        let (_, w) = AsteroidalWitness::standard(AwKind::LongDagger(4));
        let full = dagger_plus(&[0, 1, 3, 4, 5, 6]);
        assert_eq!(neighbor_category(&full, 8, &w).unwrap(), Category::Full);

        let none = dagger_plus(&[0, 1]);
        match neighbor_category(&none, 8, &w).unwrap() {
            Category::None(x) => {
                assert_eq!(x.shallow(), Some(8));
                assert_eq!(x.base(), w.base());
            }
            other => panic!("{other:?}"),
        }

        assert_eq!(
            neighbor_category(&none, 3, &w),
            Err(ObstructionError::NotAdjacentToShallow(3))
        );
    }

    #[test]
    fn partial_category_on_long_base() {
        // d = 8 so that a partial neighbor still leaves a long witness:
        // s=0, c=1, l=2, b1..b8 = 3..10, r=11, x=12 sees s, c and b2..b6
        let (g, w) = AsteroidalWitness::standard(AwKind::LongDagger(8));
        let mut edges: Vec<(usize, usize)> = g.edges().map(|e| e.ends()).collect();
        edges.extend([0, 1, 4, 5, 6, 7, 8].map(|v| (v, 12)));
        let g = Graph::from_edges(13, edges).unwrap();
        match neighbor_category(&g, 12, &w).unwrap() {
            Category::Partial(x) => {
                assert_eq!(x.base(), &[4, 5, 6, 7, 8]);
                let f = x.frame().unwrap();
                assert_eq!((f.c1, f.l, f.r), (12, 3, 9));
                assert!(x.matches(&g));
            }
            other => panic!("{other:?}"),
        }
        let st = shallow_terminals(&g).unwrap();
        let (lm, _) = locally_minimal_aw_traced(&g, 0, &st).unwrap();
        assert!(lm.base().len() <= 5);
        for x in g.neighbors(0).difference(&st) {
            assert!(lm.base().iter().all(|&b| g.adjacent(x, b)));
        }
    }

    #[test]
    fn common_neighbor_of_h_and_t() {
        let (_, w) = AsteroidalWitness::standard(AwKind::LongDagger(4));
        let f = w.frame().unwrap();
        let g = dagger_plus(&[3, 6]);
        assert_eq!(common_base_neighbor(&g, &f), Some(8));
        let g = g.with_edges(&[EdgePair::new(0, 8)]);
        assert_eq!(common_base_neighbor(&g, &f), None);
    }
}
