use super::*;
use crate::graph::fixtures::{cycle, path};
use crate::obstruction::{AsteroidalWitness, AwKind};
use crate::oracle::brute_min_completion;

fn checked() -> SolverConfig {
    SolverConfig {
        parallel: false,
        check_invariants: true,
    }
}

fn min_size(g: &Graph) -> usize {
    minimum_completion_with(g, &checked())
        .unwrap()
        .completion
        .edges
        .len()
}

#[test]
fn interval_input_needs_nothing() {
    let out = solve(&path(5), 0).unwrap();
    assert!(out.completion.unwrap().edges.is_empty());
}

#[test]
fn five_cycle_needs_two() {
    assert!(solve_with(&cycle(5), 1, &checked()).unwrap().completion.is_none());
    let c = solve_with(&cycle(5), 2, &checked()).unwrap().completion.unwrap();
    assert_eq!(c.edges.len(), 2);
}

#[test]
fn small_witnesses_need_one() {
    for kind in [
        AwKind::LongClaw,
        AwKind::Net(2),
        AwKind::Tent(1),
        AwKind::LongDagger(4),
    ] {
        let (g, _) = AsteroidalWitness::standard(kind);
        let c = solve_with(&g, 1, &checked()).unwrap().completion.unwrap();
        assert_eq!(c.edges.len(), 1, "{kind}");
    }
}

#[test]
fn long_witness_root_branches_six_ways() {
    let (g, _) = AsteroidalWitness::standard(AwKind::LongDagger(4));
    let out = solve_with(&g, 1, &checked()).unwrap();
    assert_eq!(out.stats.long_aws, 1);
    assert!(out.stats.leaves <= 6);
}

#[test]
fn agrees_with_oracle_on_witness_shapes() {
    let kinds = AwKind::SMALL.into_iter().chain([
        AwKind::LongDagger(4),
        AwKind::LongDoubleDagger(4),
        AwKind::LongDagger(5),
    ]);
    for kind in kinds {
        let (g, _) = AsteroidalWitness::standard(kind);
        let want = brute_min_completion(&g, 4).unwrap().min_size;
        assert_eq!(min_size(&g), want, "{kind}");
    }
}

#[test]
fn disconnected_input_sums_component_minima() {
    let mut edges: Vec<(usize, usize)> = cycle(5).edges().map(|e| e.ends()).collect();
    edges.extend(cycle(4).edges().map(|e| (e.u() + 5, e.v() + 5)));
    let g = Graph::from_edges(9, edges).unwrap();
    assert!(solve(&g, 2).unwrap().completion.is_none());
    assert_eq!(solve(&g, 3).unwrap().completion.unwrap().edges.len(), 3);
}

#[test]
fn budget_below_parked_count_is_dead() {
    let (g, w) = AsteroidalWitness::standard(AwKind::LongDagger(4));
    let mut st = SearchState::root(g, 0);
    st.park(&VertexSet::singleton(0), w.frame().unwrap());
    let out = solve_state(st, &checked()).unwrap();
    assert!(out.completion.is_none());
    assert_eq!((out.stats.nodes, out.stats.leaves), (1, 1));
}

#[test]
fn parked_state_passes_checks_and_merges() {
    let (g, w) = AsteroidalWitness::standard(AwKind::LongDagger(4));
    let mut st = SearchState::root(g, 1);
    assert_eq!(st.check_invariants(), Ok(()));
    st.park(&VertexSet::singleton(0), w.frame().unwrap());
    assert_eq!(st.check_invariants(), Ok(()));
    assert_eq!(st.avoid.len(), 5);
    let out = solve_state(st, &checked()).unwrap();
    let c = out.completion.unwrap();
    assert_eq!(c.edges.len(), 1);
    let e = c.edges.first().unwrap();
    // s = 0 joins b2 or b3
    assert!(e.u() == 0 && (e.v() == 4 || e.v() == 5), "{e:?}");
    let (h, t, s) = (c.model.intervals[3], c.model.intervals[6], c.model.intervals[0]);
    let (a, b) = if h.right < t.left { (h, t) } else { (t, h) };
    assert!(a.right < s.left && s.right < b.left);
}

#[test]
fn missing_frame_is_a_violation() {
    let (g, w) = AsteroidalWitness::standard(AwKind::LongDagger(4));
    let mut st = SearchState::root(g, 1);
    st.park(&VertexSet::singleton(0), w.frame().unwrap());
    st.frames.clear();
    assert_eq!(st.check_invariants().unwrap_err().condition, "C2");
}

#[test]
fn blocked_merge_answers_no() {
    let (g, w) = AsteroidalWitness::standard(AwKind::LongDagger(4));
    let mut st = SearchState::root(g, 3);
    st.park(&VertexSet::singleton(0), w.frame().unwrap());
    st.avoid.extend([EdgePair::new(0, 4), EdgePair::new(0, 5)]);
    let out = solve_state(st, &checked()).unwrap();
    assert!(out.completion.is_none());
}

#[test]
fn random_small_graphs_match_oracle() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
    for _ in 0..150 {
        let n = rng.gen_range(4..=7);
        let mut edges = Vec::new();
        for v in 0..n {
            for u in 0..v {
                if rng.gen_bool(0.4) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).unwrap();
        let want = brute_min_completion(&g, 10).unwrap().min_size;
        let got = minimum_completion_with(&g, &checked()).unwrap();
        assert_eq!(got.completion.edges.len(), want, "{:?}", g.edge_set());
        assert!(got.last.leaves <= 6u64.pow(want as u32).max(1));
    }
}

/// An inner single-center witness whose eight vertices all see the center
/// of an outer one, so the outer shallow terminal set is the inner graph.
fn nested_witnesses() -> Graph {
    let (inner, _) = AsteroidalWitness::standard(AwKind::LongDagger(4));
    let mut edges: Vec<(usize, usize)> = inner.edges().map(|e| e.ends()).collect();
    edges.extend((0..8).map(|x| (x, 8)));
    edges.extend([(9, 10), (10, 11), (11, 12), (12, 13), (13, 14)]);
    edges.extend((10..=13).map(|b| (8, b)));
    Graph::from_edges(15, edges).unwrap()
}

#[test]
fn non_interval_module_is_filled_recursively() {
    let g = nested_witnesses();
    let st = crate::obstruction::shallow_terminals(&g).unwrap();
    assert_eq!(st.to_vec(), (0..8).collect::<Vec<_>>());
    let got = minimum_completion_with(&g, &checked()).unwrap();
    assert_eq!(got.completion.edges.len(), 2);
    assert!(got.last.recursions >= 1);
    assert_eq!(brute_min_completion(&g, 2).unwrap().min_size, 2);
}

#[test]
fn common_base_neighbor_is_joined_to_the_parked_component() {
    // 8 sees the center and the whole base but not s; 9 hangs off s and c
    let (g, w) = AsteroidalWitness::standard(AwKind::LongDagger(4));
    let mut edges: Vec<(usize, usize)> = g.edges().map(|e| e.ends()).collect();
    edges.extend([(1, 8), (3, 8), (4, 8), (5, 8), (6, 8), (0, 9), (1, 9)]);
    let g = Graph::from_edges(10, edges).unwrap();
    let mut st = SearchState::root(g.clone(), 4);
    st.park(&VertexSet::singleton(0), w.frame().unwrap());
    let avoid = st.avoid.clone();
    let cfg = SolverConfig {
        parallel: false,
        check_invariants: false,
    };
    let out = solve_state(st, &cfg).unwrap();
    assert!(out.stats.case1 >= 1);
    let c = out.completion.unwrap();
    assert!(c.edges.contains(&EdgePair::new(0, 8)));
    assert!(c.edges.iter().all(|e| !avoid.contains(e) && !g.has_edge(*e)));
    assert!(crate::interval::is_interval(
        &g.with_edges(&c.edges.iter().copied().collect::<Vec<_>>())
    ));
}
