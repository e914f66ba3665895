use std::collections::HashMap;

use super::{canonical_rotation, Hole};
use crate::chordal::is_chordal;
use crate::graph::{EdgePair, EdgeSet, Graph};

/// A shortest hole of `g`, or `None` when `g` is chordal.
///
/// Every hole passes through some path `h1 - h2 - h3`; the rest of it is a
/// shortest `h1`-`h3` path avoiding the other neighbors of `h2`. Among all
/// holes found that way the shortest wins, then the smallest canonical
/// vertex sequence.
pub fn find_hole(g: &Graph) -> Option<Hole> {
    if is_chordal(g) {
        return None;
    }
    let mut best: Option<Vec<usize>> = None;
    for h2 in 0..g.n() {
        let nb = g.neighbors(h2).to_vec();
        for (i, &h1) in nb.iter().enumerate() {
            for &h3 in &nb[i + 1..] {
                if g.adjacent(h1, h3) {
                    continue;
                }
                let mut blocked = g.closed_neighbors(h2);
                blocked.remove(h1);
                blocked.remove(h3);
                let Some(path) = g.shortest_path_avoiding(h1, h3, &blocked) else {
                    continue;
                };
                if let Some(b) = &best {
                    if path.len() + 1 > b.len() {
                        continue;
                    }
                }
                let mut cycle = vec![h2];
                cycle.extend(path);
                let cycle = canonical_rotation(&cycle);
                let better = match &best {
                    None => true,
                    Some(b) => (cycle.len(), &cycle) < (b.len(), b),
                };
                if better {
                    best = Some(cycle);
                }
            }
        }
    }
    let cycle = best.expect("a graph that is not chordal has a hole");
    Some(Hole::new(g, cycle).expect("search only produces induced cycles"))
}

type Chords = Vec<(usize, usize)>;

/// Triangulations of the polygon on positions `i..=j`, with the side
/// `i - j` already present.
fn triangulations(i: usize, j: usize, memo: &mut HashMap<(usize, usize), Vec<Chords>>) -> Vec<Chords> {
    if j - i < 2 {
        return vec![Vec::new()];
    }
    if let Some(done) = memo.get(&(i, j)) {
        return done.clone();
    }
    let mut out = Vec::new();
    for k in i + 1..j {
        let left = triangulations(i, k, memo);
        let right = triangulations(k, j, memo);
        for a in &left {
            for b in &right {
                let mut chords = Vec::with_capacity(a.len() + b.len() + 2);
                if k - i >= 2 {
                    chords.push((i, k));
                }
                if j - k >= 2 {
                    chords.push((k, j));
                }
                chords.extend(a);
                chords.extend(b);
                out.push(chords);
            }
        }
    }
    memo.insert((i, j), out.clone());
    out
}

/// Every inclusion-minimal set of chords that makes the hole chordal.
/// These are exactly the triangulations of the cycle, so each has
/// `|H| - 3` chords and there are Catalan(`|H| - 2`) of them. Sorted.
pub fn minimal_hole_fills(h: &Hole) -> Vec<EdgeSet> {
    let vs = h.vertices();
    let mut memo = HashMap::new();
    let mut out: Vec<EdgeSet> = triangulations(0, vs.len() - 1, &mut memo)
        .into_iter()
        .map(|chords| {
            chords
                .into_iter()
                .map(|(a, b)| EdgePair::new(vs[a], vs[b]))
                .collect()
        })
        .collect();
    out.sort();
    out.dedup();
    out
}
