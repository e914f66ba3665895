//! Minimal forbidden induced subgraphs of interval graphs: holes and
//! asteroidal witnesses, how to find them, and which edge sets break them.

mod branch;
mod hole;
mod shallow;
mod witness;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgePair, Graph, VertexSet};

pub use branch::{eligible_edges, long_aw_branch_edges, small_aw_branch_edges};
pub use hole::{find_hole, minimal_hole_fills};
pub use shallow::{
    common_base_neighbor, locally_minimal_aw, locally_minimal_aw_traced, neighbor_category,
    shallow_terminals, Category,
};
pub use witness::{
    asteroidal_triples, aw_from_at, find_at, find_small_aw, find_small_obstruction, is_at, AtIndex,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ObstructionError {
    #[error("({0}, {1}, {2}) is not an asteroidal triple")]
    NotAnAt(usize, usize, usize),
    #[error("could not classify the witness on {0:?}")]
    Unclassified(Vec<usize>),
    #[error("{0} is not a small witness")]
    NotSmall(String),
    #[error("a base of length {0} is too short for the long-witness branching rule")]
    BaseTooShort(usize),
    #[error("the graph is not reduced: {0}")]
    NotReduced(String),
    #[error("vertex {0} is not adjacent to the shallow terminal")]
    NotAdjacentToShallow(usize),
    #[error("vertex {0} is not a shallow terminal")]
    NotShallow(usize),
    #[error("witness kind {0} has no shallow terminal")]
    NoShallowTerminal(&'static str),
    #[error("{0:?} is not an induced cycle of length at least four")]
    NotAHole(Vec<usize>),
}

/// An induced cycle on at least four vertices, stored starting from its
/// smallest vertex and continuing towards the smaller of its two
/// neighbors on the cycle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Hole {
    cycle: Vec<usize>,
}

impl Hole {
    pub fn new(g: &Graph, cycle: Vec<usize>) -> Result<Hole, ObstructionError> {
        let len = cycle.len();
        let set: VertexSet = cycle.iter().copied().collect();
        let induced = len >= 4
            && set.len() == len
            && cycle.iter().all(|&v| v < g.n())
            && (0..len).all(|i| {
                let v = cycle[i];
                let prev = cycle[(i + len - 1) % len];
                let next = cycle[(i + 1) % len];
                g.neighbors(v).intersection(&set) == [prev, next].into_iter().collect()
            });
        if !induced {
            return Err(ObstructionError::NotAHole(cycle));
        }
        Ok(Hole {
            cycle: canonical_rotation(&cycle),
        })
    }

    /// A hole on the cycle `0, 1, .., len-1` with no host graph check.
    pub fn standard(len: usize) -> Hole {
        assert!(len >= 4);
        Hole {
            cycle: (0..len).collect(),
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.cycle
    }

    pub fn len(&self) -> usize {
        self.cycle.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycle.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.cycle.iter().copied().collect()
    }

    pub fn map(&self, f: impl Fn(usize) -> usize) -> Hole {
        Hole {
            cycle: canonical_rotation(&self.cycle.iter().map(|&v| f(v)).collect::<Vec<_>>()),
        }
    }
}

pub(crate) fn canonical_rotation(cycle: &[usize]) -> Vec<usize> {
    let len = cycle.len();
    let start = (0..len).min_by_key(|&i| cycle[i]).unwrap_or(0);
    let fwd: Vec<usize> = (0..len).map(|i| cycle[(start + i) % len]).collect();
    let bwd: Vec<usize> = (0..len).map(|i| cycle[(start + len - i) % len]).collect();
    fwd.min(bwd)
}

/// The shapes of asteroidal witnesses. Single-center witnesses with base
/// length `d` are nets for `d <= 3`; two-center ones are tents.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AwKind {
    LongClaw,
    WhippingTop,
    Net(usize),
    Tent(usize),
    LongDagger(usize),
    LongDoubleDagger(usize),
}

impl AwKind {
    pub fn based(two_centers: bool, d: usize) -> AwKind {
        match (two_centers, d <= 3) {
            (false, true) => AwKind::Net(d),
            (true, true) => AwKind::Tent(d),
            (false, false) => AwKind::LongDagger(d),
            (true, false) => AwKind::LongDoubleDagger(d),
        }
    }

    pub fn is_small(self) -> bool {
        !matches!(self, AwKind::LongDagger(_) | AwKind::LongDoubleDagger(_))
    }

    pub fn base_len(self) -> Option<usize> {
        match self {
            AwKind::Net(d) | AwKind::Tent(d) | AwKind::LongDagger(d) | AwKind::LongDoubleDagger(d) => Some(d),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            AwKind::LongClaw => "long_claw",
            AwKind::WhippingTop => "whipping_top",
            AwKind::Net(_) => "net",
            AwKind::Tent(_) => "tent",
            AwKind::LongDagger(_) => "long_dagger",
            AwKind::LongDoubleDagger(_) => "long_double_dagger",
        }
    }

    /// Number of vertices of a witness of this kind.
    pub fn order(self) -> usize {
        match self {
            AwKind::LongClaw | AwKind::WhippingTop => 7,
            AwKind::Net(d) | AwKind::LongDagger(d) => d + 4,
            AwKind::Tent(d) | AwKind::LongDoubleDagger(d) => d + 5,
        }
    }

    /// Every small kind, in a fixed order.
    pub const SMALL: [AwKind; 7] = [
        AwKind::LongClaw,
        AwKind::WhippingTop,
        AwKind::Net(2),
        AwKind::Net(3),
        AwKind::Tent(1),
        AwKind::Tent(2),
        AwKind::Tent(3),
    ];
}

impl std::fmt::Display for AwKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.base_len() {
            Some(d) => write!(f, "{}({d})", self.name()),
            None => write!(f, "{}", self.name()),
        }
    }
}

impl Serialize for AwKind {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// Role assignment of a witness.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Roles {
    /// Center `c`, middle vertices `v[i]`, terminals `t[i]`, each leg
    /// being `c - v[i] - t[i]`.
    Claw { c: usize, v: [usize; 3], t: [usize; 3] },
    /// `t1 - c`, `t2 - v2`, `t3 - v3`, with `c` and `u` both seeing
    /// `v2, v3`, and `u` also seeing `c, t2, t3`.
    WhippingTop {
        c: usize,
        u: usize,
        v2: usize,
        v3: usize,
        t: [usize; 3],
    },
    /// Shallow terminal `s`, centers `c1, c2` (equal for one center),
    /// base terminals `l, r` and base path `base` from `l` side to `r`.
    Based {
        s: usize,
        c1: usize,
        c2: usize,
        l: usize,
        r: usize,
        base: Vec<usize>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AsteroidalWitness {
    pub kind: AwKind,
    pub roles: Roles,
}

/// The frame `(s: c1, c2: l, h; t, r)` of a long witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Frame {
    pub s: usize,
    pub c1: usize,
    pub c2: usize,
    pub l: usize,
    pub h: usize,
    pub t: usize,
    pub r: usize,
}

impl Frame {
    /// `{l c2, c1 r, h t, s h, s t}`: inserting none of these leaves the
    /// frame untouched in a minimum supergraph.
    pub fn exclusion_edges(&self) -> [EdgePair; 5] {
        [
            EdgePair::new(self.l, self.c2),
            EdgePair::new(self.c1, self.r),
            EdgePair::new(self.h, self.t),
            EdgePair::new(self.s, self.h),
            EdgePair::new(self.s, self.t),
        ]
    }

    pub fn vertices(&self) -> VertexSet {
        [self.s, self.c1, self.c2, self.l, self.h, self.t, self.r]
            .into_iter()
            .collect()
    }

    pub fn map(&self, f: impl Fn(usize) -> usize) -> Frame {
        Frame {
            s: f(self.s),
            c1: f(self.c1),
            c2: f(self.c2),
            l: f(self.l),
            h: f(self.h),
            t: f(self.t),
            r: f(self.r),
        }
    }
}

impl AsteroidalWitness {
    /// A single- or two-center witness. Kind follows from the base length
    /// and whether the centers differ.
    pub fn based(s: usize, c1: usize, c2: usize, l: usize, base: Vec<usize>, r: usize) -> Self {
        AsteroidalWitness {
            kind: AwKind::based(c1 != c2, base.len()),
            roles: Roles::Based {
                s,
                c1,
                c2,
                l,
                r,
                base,
            },
        }
    }

    pub fn vertex_list(&self) -> Vec<usize> {
        let mut vs = match &self.roles {
            Roles::Claw { c, v, t } => {
                let mut vs = vec![*c];
                vs.extend(v);
                vs.extend(t);
                vs
            }
            Roles::WhippingTop { c, u, v2, v3, t } => {
                let mut vs = vec![*c, *u, *v2, *v3];
                vs.extend(t);
                vs
            }
            Roles::Based {
                s,
                c1,
                c2,
                l,
                r,
                base,
            } => {
                let mut vs = vec![*s, *c1, *c2, *l, *r];
                vs.extend(base);
                vs
            }
        };
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn vertices(&self) -> VertexSet {
        self.vertex_list().into_iter().collect()
    }

    pub fn terminals(&self) -> [usize; 3] {
        match &self.roles {
            Roles::Claw { t, .. } | Roles::WhippingTop { t, .. } => *t,
            Roles::Based { s, l, r, .. } => [*s, *l, *r],
        }
    }

    pub fn shallow(&self) -> Option<usize> {
        match &self.roles {
            Roles::Based { s, .. } => Some(*s),
            _ => None,
        }
    }

    pub fn base(&self) -> &[usize] {
        match &self.roles {
            Roles::Based { base, .. } => base,
            _ => &[],
        }
    }

    /// Frame of a single- or two-center witness.
    pub fn frame(&self) -> Option<Frame> {
        match &self.roles {
            Roles::Based {
                s,
                c1,
                c2,
                l,
                r,
                base,
            } => Some(Frame {
                s: *s,
                c1: *c1,
                c2: *c2,
                l: *l,
                h: *base.first()?,
                t: *base.last()?,
                r: *r,
            }),
            _ => None,
        }
    }

    /// The edge set a graph on exactly these vertices must have.
    pub fn template_edges(&self) -> Vec<EdgePair> {
        let e = EdgePair::new;
        match &self.roles {
            Roles::Claw { c, v, t } => (0..3).flat_map(|i| [e(*c, v[i]), e(v[i], t[i])]).collect(),
            Roles::WhippingTop { c, u, v2, v3, t } => vec![
                e(t[0], *c),
                e(t[1], *v2),
                e(t[1], *u),
                e(t[2], *v3),
                e(t[2], *u),
                e(*c, *v2),
                e(*c, *v3),
                e(*c, *u),
                e(*u, *v2),
                e(*u, *v3),
            ],
            Roles::Based {
                s,
                c1,
                c2,
                l,
                r,
                base,
            } => {
                let mut out = vec![e(*s, *c1)];
                let mut path = vec![*l];
                path.extend(base);
                path.push(*r);
                out.extend(path.windows(2).map(|w| e(w[0], w[1])));
                out.extend(base.iter().map(|&b| e(*c1, b)));
                if c1 != c2 {
                    out.push(e(*s, *c2));
                    out.push(e(*c1, *c2));
                    out.push(e(*c1, *l));
                    out.push(e(*c2, *r));
                    out.extend(base.iter().map(|&b| e(*c2, b)));
                }
                out.sort_unstable();
                out
            }
        }
    }

    /// True iff `g` induces exactly the template on these vertices.
    pub fn matches(&self, g: &Graph) -> bool {
        let vs = self.vertex_list();
        if vs.len() != self.kind.order() || vs.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut want = self.template_edges();
        want.sort_unstable();
        let mut have = Vec::new();
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if g.adjacent(a, b) {
                    have.push(EdgePair::new(a, b));
                }
            }
        }
        have.sort_unstable();
        have == want
    }

    pub fn map(&self, f: impl Fn(usize) -> usize) -> AsteroidalWitness {
        let roles = match &self.roles {
            Roles::Claw { c, v, t } => Roles::Claw {
                c: f(*c),
                v: v.map(&f),
                t: t.map(&f),
            },
            Roles::WhippingTop { c, u, v2, v3, t } => Roles::WhippingTop {
                c: f(*c),
                u: f(*u),
                v2: f(*v2),
                v3: f(*v3),
                t: t.map(&f),
            },
            Roles::Based {
                s,
                c1,
                c2,
                l,
                r,
                base,
            } => Roles::Based {
                s: f(*s),
                c1: f(*c1),
                c2: f(*c2),
                l: f(*l),
                r: f(*r),
                base: base.iter().map(|&b| f(b)).collect(),
            },
        };
        AsteroidalWitness {
            kind: self.kind,
            roles,
        }
    }

    /// Named roles, for reports.
    pub fn role_list(&self) -> Vec<(String, usize)> {
        let mut out: Vec<(String, usize)> = Vec::new();
        match &self.roles {
            Roles::Claw { c, v, t } => {
                out.push(("c".into(), *c));
                for (i, x) in v.iter().enumerate() {
                    out.push((format!("v{}", i + 1), *x));
                }
                for (i, x) in t.iter().enumerate() {
                    out.push((format!("t{}", i + 1), *x));
                }
            }
            Roles::WhippingTop { c, u, v2, v3, t } => {
                out.push(("c".into(), *c));
                out.push(("u".into(), *u));
                out.push(("v2".into(), *v2));
                out.push(("v3".into(), *v3));
                for (i, x) in t.iter().enumerate() {
                    out.push((format!("t{}", i + 1), *x));
                }
            }
            Roles::Based {
                s,
                c1,
                c2,
                l,
                r,
                base,
            } => {
                out.push(("s".into(), *s));
                if c1 == c2 {
                    out.push(("c".into(), *c1));
                } else {
                    out.push(("c1".into(), *c1));
                    out.push(("c2".into(), *c2));
                }
                out.push(("l".into(), *l));
                for (i, &b) in base.iter().enumerate() {
                    out.push((format!("b{}", i + 1), b));
                }
                out.push(("r".into(), *r));
                if let (Some(&h), Some(&t)) = (base.first(), base.last()) {
                    out.push(("h".into(), h));
                    out.push(("t".into(), t));
                }
            }
        }
        out
    }

    /// A bare witness of `kind` on vertices `0..order`, labelled in the
    /// order: shallow terminal, centers, `l`, base, `r` (or for the two
    /// special kinds: center, middle vertices, terminals).
    pub fn standard(kind: AwKind) -> (Graph, AsteroidalWitness) {
        let w = match kind {
            AwKind::LongClaw => AsteroidalWitness {
                kind,
                roles: Roles::Claw {
                    c: 0,
                    v: [1, 2, 3],
                    t: [4, 5, 6],
                },
            },
            AwKind::WhippingTop => AsteroidalWitness {
                kind,
                roles: Roles::WhippingTop {
                    c: 0,
                    u: 1,
                    v2: 2,
                    v3: 3,
                    t: [4, 5, 6],
                },
            },
            AwKind::Net(d) | AwKind::LongDagger(d) => {
                assert!(d >= 2, "single-center witnesses need a base of two or more");
                AsteroidalWitness::based(0, 1, 1, 2, (3..3 + d).collect(), 3 + d)
            }
            AwKind::Tent(d) | AwKind::LongDoubleDagger(d) => {
                assert!(d >= 1, "two-center witnesses need a nonempty base");
                AsteroidalWitness::based(0, 1, 2, 3, (4..4 + d).collect(), 4 + d)
            }
        };
        assert_eq!(w.kind, kind, "base length does not fit the requested kind");
        let g = Graph::from_edges(kind.order(), w.template_edges().iter().map(|e| e.ends()))
            .expect("templates are simple graphs");
        (g, w)
    }
}

/// Either kind of obstruction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    Hole(Hole),
    Aw(AsteroidalWitness),
}

impl Obstruction {
    pub fn vertices(&self) -> VertexSet {
        match self {
            Obstruction::Hole(h) => h.vertex_set(),
            Obstruction::Aw(w) => w.vertices(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::cycle;
    use crate::interval::is_interval;

    #[test]
    fn standard_witness_sizes() {
        let expect = [
            (AwKind::LongClaw, 7, 6),
            (AwKind::WhippingTop, 7, 10),
            (AwKind::Net(2), 6, 6),
            (AwKind::Net(3), 7, 8),
            (AwKind::Tent(1), 6, 9),
            (AwKind::Tent(2), 7, 12),
            (AwKind::Tent(3), 8, 15),
            (AwKind::LongDagger(4), 8, 10),
            (AwKind::LongDoubleDagger(4), 9, 18),
        ];
        for (kind, n, m) in expect {
            let (g, w) = AsteroidalWitness::standard(kind);
            assert_eq!((g.n(), g.m()), (n, m), "{kind}");
            assert!(w.matches(&g));
            assert!(!is_interval(&g), "{kind}");
            for v in 0..n {
                let sub = g.without(&VertexSet::singleton(v));
                assert!(is_interval(&sub.graph), "{kind} minus {v}");
            }
        }
    }

    #[test]
    fn dagger_frame_graph() {
        let (g, w) = AsteroidalWitness::standard(AwKind::LongDagger(4));
        let f = w.frame().unwrap();
        let frame = g.induced(&f.vertices()).unwrap();
        // s-c, l-h, t-r, c-h, c-t, plus nothing between h and t
        assert_eq!(frame.graph.n(), 6);
        assert_eq!(frame.graph.m(), 5);
        // the frame of a single-center witness has c1 == c2, so with the
        // base interior added back we get every edge incident to c
        let with_inner = g
            .induced(&f.vertices().union(&w.base().iter().copied().collect()))
            .unwrap();
        assert_eq!(with_inner.graph.m(), 10);
        for e in f.exclusion_edges() {
            assert!(!g.has_edge(e));
        }
    }

    #[test]
    fn hole_validation_and_rotation() {
        let c5 = cycle(5);
        let h = Hole::new(&c5, vec![3, 2, 1, 0, 4]).unwrap();
        assert_eq!(h.vertices(), &[0, 1, 2, 3, 4]);
        assert!(Hole::new(&c5, vec![0, 1, 2]).is_err());
        let chorded = c5.with_edges(&[EdgePair::new(0, 2)]);
        assert!(Hole::new(&chorded, vec![0, 1, 2, 3, 4]).is_err());
        assert_eq!(canonical_rotation(&[5, 9, 2, 7]), vec![2, 7, 5, 9]);
    }
}
