use super::{AsteroidalWitness, Frame, ObstructionError, Roles};
use crate::graph::{EdgePair, EdgeSet, Graph, VertexSet};

/// The branching set of a small witness: every interval supergraph of the
/// host contains at least one of these pairs.
pub fn small_aw_branch_edges(w: &AsteroidalWitness) -> Result<EdgeSet, ObstructionError> {
    if !w.kind.is_small() {
        return Err(ObstructionError::NotSmall(w.kind.to_string()));
    }
    let e = EdgePair::new;
    let set: Vec<EdgePair> = match &w.roles {
        Roles::Claw { c, v, t } => vec![
            e(t[0], *c),
            e(t[1], *c),
            e(t[2], *c),
            e(v[0], v[1]),
            e(v[0], v[2]),
            e(v[1], v[2]),
        ],
        Roles::WhippingTop { c, u, v2, v3, t } => {
            vec![e(t[0], *u), e(t[1], *c), e(t[2], *c), e(*v2, *v3)]
        }
        Roles::Based {
            s,
            c1,
            c2,
            l,
            r,
            base,
        } => {
            let (h, t) = (base[0], base[base.len() - 1]);
            let mut out = vec![e(*l, *c2), e(*c1, *r)];
            match (c1 == c2, base.len()) {
                (true, 2) => out.extend([e(*s, h), e(*s, t), e(*l, t), e(h, *r)]),
                (false, 1) => out.push(e(*s, h)),
                (false, 2) => out.extend([e(*s, h), e(*s, t)]),
                _ => {
                    out.push(e(h, t));
                    out.extend(base.iter().map(|&b| e(*s, b)));
                }
            }
            out
        }
    };
    Ok(set.into_iter().collect())
}

/// `{l c2, c1 r, h t, s h, s t} ∪ {s b_i | 1 < i < d}` for a long witness.
pub fn long_aw_branch_edges(f: &Frame, base: &[usize]) -> Result<EdgeSet, ObstructionError> {
    let d = base.len();
    if d <= 3 {
        return Err(ObstructionError::BaseTooShort(d));
    }
    let mut out: EdgeSet = f.exclusion_edges().into_iter().collect();
    out.extend(base[1..d - 1].iter().map(|&b| EdgePair::new(f.s, b)));
    Ok(out)
}

/// Pairs that could break the asteroidal triple of `w` inside `g[W]`: a
/// terminal joined to a vertex of the path between the other two that
/// avoids its neighborhood.
pub fn eligible_edges(g: &Graph, w: &AsteroidalWitness) -> EdgeSet {
    let vs = w.vertices();
    let outside = g.vertices().difference(&vs);
    let [a, b, c] = w.terminals();
    let mut out = EdgeSet::new();
    for (x, y, z) in [(a, b, c), (b, a, c), (c, a, b)] {
        let blocked: VertexSet = g.closed_neighbors(x).union(&outside);
        let path = g
            .shortest_path_avoiding(y, z, &blocked)
            .expect("witness terminals are asteroidal");
        out.extend(
            path.into_iter()
                .filter(|&p| !g.adjacent(x, p))
                .map(|p| EdgePair::new(x, p)),
        );
    }
    out
}
