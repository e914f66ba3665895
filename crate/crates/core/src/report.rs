//! Serializable summaries shared by the command line tool and the browser
//! demo.

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::graph::{EdgeSet, Graph};
use crate::interval::recognize;
use crate::obstruction::{
    aw_from_at, find_at, find_hole, find_small_aw, long_aw_branch_edges, minimal_hole_fills,
    small_aw_branch_edges, AsteroidalWitness, AwKind,
};
use crate::oracle::OracleResult;
use crate::solver::{Minimum, Outcome, SearchStats};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StatsReport {
    pub nodes: u64,
    pub leaves: u64,
    pub depth: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ms: Option<f64>,
}

impl StatsReport {
    pub fn new(s: &SearchStats, timing: bool) -> Self {
        StatsReport {
            nodes: s.nodes,
            leaves: s.leaves,
            depth: s.max_depth,
            ms: timing.then_some(round_ms(s.ms)),
        }
    }
}

fn round_ms(ms: f64) -> f64 {
    (ms * 1000.0).round() / 1000.0
}

pub fn edge_list(edges: &EdgeSet) -> Vec<[usize; 2]> {
    edges.iter().map(|e| [e.u(), e.v()]).collect()
}

/// `{answer, k_used, inserted_edges, stats}`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolveReport {
    pub answer: &'static str,
    pub k_used: Option<usize>,
    pub inserted_edges: Vec<[usize; 2]>,
    pub stats: StatsReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub all_minimum: Option<usize>,
}

impl SolveReport {
    pub fn from_outcome(out: &Outcome, timing: bool) -> Self {
        let edges = out.completion.as_ref().map(|c| edge_list(&c.edges));
        SolveReport {
            answer: if edges.is_some() { "yes" } else { "no" },
            k_used: edges.as_ref().map(Vec::len),
            inserted_edges: edges.unwrap_or_default(),
            stats: StatsReport::new(&out.stats, timing),
            all_minimum: None,
        }
    }

    pub fn from_minimum(min: &Minimum, timing: bool) -> Self {
        SolveReport {
            answer: "yes",
            k_used: Some(min.completion.edges.len()),
            inserted_edges: edge_list(&min.completion.edges),
            stats: StatsReport::new(&min.total, timing),
            all_minimum: None,
        }
    }

    pub fn from_oracle(res: &OracleResult, ms: Option<f64>) -> Self {
        SolveReport {
            answer: "yes",
            k_used: Some(res.min_size),
            inserted_edges: edge_list(&res.one_witness),
            stats: StatsReport {
                nodes: 0,
                leaves: 0,
                depth: 0,
                ms: ms.map(round_ms),
            },
            all_minimum: res.all_minimum_supergraphs.as_ref().map(Vec::len),
        }
    }
}

/// Role names in witness order, serialized as a JSON object.
#[derive(Clone, Debug, PartialEq)]
pub struct RoleMap(pub Vec<(String, usize)>);

impl Serialize for RoleMap {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (name, v) in &self.0 {
            map.serialize_entry(name, v)?;
        }
        map.end()
    }
}

/// Proof of either answer to "is this an interval graph".
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    Model {
        intervals: Vec<[usize; 2]>,
    },
    Hole {
        vertices: Vec<usize>,
        minimal_fills: usize,
    },
    Aw {
        kind: AwKind,
        #[serde(skip_serializing_if = "Option::is_none")]
        d: Option<usize>,
        vertices: Vec<usize>,
        roles: RoleMap,
        terminals: [usize; 3],
        branch_edges: Vec<[usize; 2]>,
    },
}

impl Certificate {
    pub fn from_witness(w: &AsteroidalWitness) -> Certificate {
        let branch = if w.kind.is_small() {
            small_aw_branch_edges(w).ok()
        } else {
            w.frame().and_then(|f| long_aw_branch_edges(&f, w.base()).ok())
        };
        Certificate::Aw {
            kind: w.kind,
            d: w.kind.base_len(),
            vertices: w.vertices().to_vec(),
            roles: RoleMap(w.role_list()),
            terminals: w.terminals(),
            branch_edges: branch.map(|b| edge_list(&b)).unwrap_or_default(),
        }
    }
}

/// A model when `g` is interval; otherwise a shortest hole, else the
/// smallest small witness, else a witness for the first asteroidal
/// triple.
pub fn certify(g: &Graph) -> Certificate {
    if let Some(m) = recognize(g) {
        return Certificate::Model {
            intervals: m.intervals.iter().map(|i| [i.left, i.right]).collect(),
        };
    }
    if let Some(h) = find_hole(g) {
        return Certificate::Hole {
            minimal_fills: minimal_hole_fills(&h).len(),
            vertices: h.vertices().to_vec(),
        };
    }
    let w = find_small_aw(g)
        .ok()
        .flatten()
        .or_else(|| find_at(g).and_then(|t| aw_from_at(g, t).ok()))
        .expect("a chordal graph that is not interval has an asteroidal witness");
    Certificate::from_witness(&w)
}
