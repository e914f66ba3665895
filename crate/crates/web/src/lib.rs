//! Browser bindings. Each export takes text and returns a JSON string; the
//! plain Rust versions in [`api`] are what the exports call and what the
//! tests exercise natively.

use wasm_bindgen::prelude::*;

pub mod api {
    use interval_completion::io::{detect_format, parse_graph, to_edge_list};
    use interval_completion::obstruction::{minimal_hole_fills, AsteroidalWitness, AwKind, Hole};
    use interval_completion::report::{certify as certificate, edge_list, SolveReport};
    use interval_completion::solver::{minimum_completion_with, SolverConfig};
    use interval_completion::Graph;
    use serde::Serialize;

    /// Larger inputs can keep a browser tab busy for a long time.
    pub const MAX_SOLVE_VERTICES: usize = 40;
    pub const MAX_HOLE: usize = 11;

    #[derive(Serialize)]
    struct GraphJson {
        n: usize,
        edges: Vec<[usize; 2]>,
    }

    impl GraphJson {
        fn of(g: &Graph) -> GraphJson {
            GraphJson {
                n: g.n(),
                edges: g.edges().map(|e| [e.u(), e.v()]).collect(),
            }
        }
    }

    fn read(text: &str) -> Result<Graph, String> {
        parse_graph(text, detect_format(text)).map_err(|e| e.to_string())
    }

    fn to_json(value: &impl Serialize) -> Result<String, String> {
        serde_json::to_string(value).map_err(|e| e.to_string())
    }

    pub fn certify(text: &str) -> Result<String, String> {
        let g = read(text)?;
        #[derive(Serialize)]
        struct Out<C> {
            graph: GraphJson,
            certificate: C,
        }
        to_json(&Out {
            graph: GraphJson::of(&g),
            certificate: certificate(&g),
        })
    }

    pub fn solve_min(text: &str) -> Result<String, String> {
        let g = read(text)?;
        if g.n() > MAX_SOLVE_VERTICES {
            return Err(format!(
                "the demo solves graphs with at most {MAX_SOLVE_VERTICES} vertices"
            ));
        }
        let min = minimum_completion_with(&g, &SolverConfig::default()).map_err(|e| e.to_string())?;
        #[derive(Serialize)]
        struct Out {
            graph: GraphJson,
            report: SolveReport,
            intervals: Vec<[usize; 2]>,
        }
        to_json(&Out {
            graph: GraphJson::of(&g),
            report: SolveReport::from_minimum(&min, true),
            intervals: min
                .completion
                .model
                .intervals
                .iter()
                .map(|i| [i.left, i.right])
                .collect(),
        })
    }

    pub fn hole_fills(len: usize) -> Result<String, String> {
        if !(4..=MAX_HOLE).contains(&len) {
            return Err(format!("hole length must be between 4 and {MAX_HOLE}"));
        }
        let fills = minimal_hole_fills(&Hole::standard(len));
        #[derive(Serialize)]
        struct Out {
            len: usize,
            count: usize,
            fills: Vec<Vec<[usize; 2]>>,
        }
        to_json(&Out {
            len,
            count: fills.len(),
            fills: fills.iter().map(edge_list).collect(),
        })
    }

    /// Edge list of a named sample graph for the page's preset menu.
    pub fn sample(name: &str) -> Result<String, String> {
        let cycle = |n: usize| Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle");
        let g = match name {
            "c5" => cycle(5),
            "c6" => cycle(6),
            "long-claw" => AsteroidalWitness::standard(AwKind::LongClaw).0,
            "whipping-top" => AsteroidalWitness::standard(AwKind::WhippingTop).0,
            "net" => AsteroidalWitness::standard(AwKind::Net(2)).0,
            "tent" => AsteroidalWitness::standard(AwKind::Tent(1)).0,
            "long-dagger" => AsteroidalWitness::standard(AwKind::LongDagger(5)).0,
            "long-double-dagger" => AsteroidalWitness::standard(AwKind::LongDoubleDagger(4)).0,
            "path" => Graph::from_edges(5, (0..4).map(|i| (i, i + 1))).expect("valid path"),
            other => return Err(format!("no sample called `{other}`")),
        };
        Ok(to_edge_list(&g))
    }
}

fn js(r: Result<String, String>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e))
}

/// Interval model, shortest hole or asteroidal witness for the graph.
#[wasm_bindgen]
pub fn certify(text: &str) -> Result<String, JsError> {
    js(api::certify(text))
}

/// Minimum set of edges whose insertion makes the graph interval.
#[wasm_bindgen]
pub fn solve_min(text: &str) -> Result<String, JsError> {
    js(api::solve_min(text))
}

/// All minimal fills of the hole on vertices 0..len.
#[wasm_bindgen]
pub fn hole_fills(len: usize) -> Result<String, JsError> {
    js(api::hole_fills(len))
}

#[wasm_bindgen]
pub fn sample(name: &str) -> Result<String, JsError> {
    js(api::sample(name))
}
