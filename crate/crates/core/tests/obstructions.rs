use interval_completion::interval::is_interval;
use interval_completion::obstruction::{
    asteroidal_triples, aw_from_at, find_small_obstruction, shallow_terminals, AsteroidalWitness, AwKind,
    Obstruction,
};
use interval_completion::{Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

fn set_of(mask: u64, n: usize) -> VertexSet {
    (0..n).filter(|v| mask >> v & 1 == 1).collect()
}

/// Masks of the induced subgraphs that are minimal non-interval graphs.
fn minimal_non_interval_masks(g: &Graph) -> Vec<u64> {
    let n = g.n();
    let bad: Vec<bool> = (0u64..1 << n)
        .map(|mask| mask != 0 && !is_interval(&g.induced(&set_of(mask, n)).unwrap().graph))
        .collect();
    (1u64..1 << n)
        .filter(|&mask| {
            bad[mask as usize] && (0..n).all(|v| mask >> v & 1 == 0 || !bad[(mask & !(1 << v)) as usize])
        })
        .collect()
}

/// Brute force: does `g` contain a hole or a small witness as an induced
/// subgraph? The only long witness on at most 8 vertices has 10 edges.
fn brute_has_small_obstruction(g: &Graph) -> bool {
    minimal_non_interval_masks(g).into_iter().any(|mask| {
        let sub = g.induced(&set_of(mask, g.n())).unwrap().graph;
        sub.n() < 8 || (sub.n() == 8 && sub.m() != 10)
    })
}

/// Brute force shallow terminals: the shallow terminal of every minimal
/// non-interval induced subgraph.
fn brute_shallow_terminals(g: &Graph) -> VertexSet {
    let mut out = VertexSet::new();
    for mask in minimal_non_interval_masks(g) {
        let ind = g.induced(&set_of(mask, g.n())).unwrap();
        let triples = asteroidal_triples(&ind.graph);
        assert!(
            !triples.is_empty(),
            "chordal minimal non-interval graph without AT"
        );
        for t in triples {
            let w = aw_from_at(&ind.graph, t).unwrap();
            assert_eq!(w.vertices().len(), ind.graph.n());
            if let Some(x) = w.shallow() {
                out.insert(ind.original(x));
            }
        }
    }
    out
}

#[test]
fn every_triple_in_small_chordal_graphs_yields_a_witness() {
    for n in 6..=7 {
        for g in all_graphs(n) {
            if !interval_completion::chordal::is_chordal(&g) {
                continue;
            }
            for t in asteroidal_triples(&g) {
                let w = aw_from_at(&g, t).unwrap_or_else(|e| panic!("{e} on {:?}", g.edge_set()));
                assert!(w.matches(&g));
                assert!(!is_interval(&g.induced(&w.vertices()).unwrap().graph));
            }
        }
    }
}

#[test]
fn small_obstruction_search_agrees_with_brute_force() {
    for g in all_graphs(6) {
        let fast = find_small_obstruction(&g).unwrap().is_some();
        assert_eq!(fast, brute_has_small_obstruction(&g), "{:?}", g.edge_set());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..400 {
        let n = rng.gen_range(7..=9);
        let p = rng.gen_range(0.2..0.6);
        let g = grow(&Graph::empty(0), n, &mut rng, p);
        let fast = find_small_obstruction(&g).unwrap().is_some();
        assert_eq!(fast, brute_has_small_obstruction(&g), "{:?}", g.edge_set());
    }
}

fn grow(base: &Graph, extra: usize, rng: &mut ChaCha8Rng, p: f64) -> Graph {
    let n = base.n() + extra;
    let mut edges: Vec<(usize, usize)> = base.edges().map(|e| e.ends()).collect();
    for v in base.n()..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

#[test]
fn shallow_terminals_agree_with_brute_force_on_reduced_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    let mut shapes = 0;
    for kind in [
        AwKind::LongDagger(4),
        AwKind::LongDoubleDagger(4),
        AwKind::LongDagger(5),
    ] {
        let (base, _) = AsteroidalWitness::standard(kind);
        for _ in 0..600 {
            let g = grow(&base, rng.gen_range(1..=3), &mut rng, 0.3);
            if g.n() > 11 || !interval_completion::chordal::is_chordal(&g) {
                continue;
            }
            if find_small_obstruction(&g).unwrap().is_some() {
                continue;
            }
            let st = shallow_terminals(&g).unwrap();
            assert_eq!(st, brute_shallow_terminals(&g), "{:?}", g.edge_set());
            checked += 1;
            shapes += usize::from(st.len() > 1);
        }
    }
    assert!(checked > 100, "only {checked} reduced graphs generated");
    assert!(shapes > 0);
}

#[test]
fn obstruction_kinds_are_found() {
    for kind in AwKind::SMALL {
        let (g, _) = AsteroidalWitness::standard(kind);
        match find_small_obstruction(&g).unwrap() {
            Some(Obstruction::Aw(w)) => assert_eq!(w.kind, kind),
            other => panic!("{kind}: {other:?}"),
        }
    }
}
