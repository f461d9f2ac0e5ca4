//! Interval graph recognition: Lex-BFS gives a perfect elimination order
//! when the graph is chordal, the elimination order yields the maximal
//! cliques, and a PQ-tree orders them so every vertex's cliques are
//! consecutive. The clique positions double as an interval model.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use pq_tree::PQTree;

/// Lex-BFS visit order, ties broken by smallest vertex id.
pub fn lex_bfs(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut slices: Vec<Vec<usize>> = if n == 0 { vec![] } else { vec![(0..n).collect()] };
    let mut order = Vec::with_capacity(n);
    while let Some(first) = slices.first_mut() {
        let v = first.remove(0);
        order.push(v);
        let mut next = Vec::with_capacity(slices.len() + 1);
        for slice in slices.into_iter() {
            let (hit, miss): (Vec<usize>, Vec<usize>) =
                slice.into_iter().partition(|&u| g.has_edge(u, v));
            if !hit.is_empty() {
                next.push(hit);
            }
            if !miss.is_empty() {
                next.push(miss);
            }
        }
        slices = next;
    }
    order
}

/// Checks that eliminating in `elim` order only ever removes simplicial
/// vertices, i.e. that `elim` is a perfect elimination ordering.
fn is_perfect_elimination(g: &Graph, elim: &[usize]) -> bool {
    let n = g.n();
    let mut later = VertexSet::full(n);
    let mut index = vec![0usize; n];
    for (i, &v) in elim.iter().enumerate() {
        index[v] = i;
    }
    for &v in elim {
        later.remove(v);
        let right = g.neighbors(v).intersection(&later);
        if let Some(parent) = right.iter().min_by_key(|&w| index[w]) {
            let mut rest = right;
            rest.remove(parent);
            if !rest.is_subset(g.neighbors(parent)) {
                return false;
            }
        }
    }
    true
}

/// Maximal cliques of a chordal graph from a perfect elimination order.
fn chordal_maximal_cliques(g: &Graph, elim: &[usize]) -> Vec<VertexSet> {
    let n = g.n();
    let mut later = VertexSet::full(n);
    let mut candidates = Vec::with_capacity(n);
    for &v in elim {
        later.remove(v);
        let mut c = g.neighbors(v).intersection(&later);
        c.insert(v);
        candidates.push(c);
    }
    candidates.sort_by_key(|c| std::cmp::Reverse(c.count()));
    let mut cliques: Vec<VertexSet> = Vec::new();
    for c in candidates {
        if !cliques.iter().any(|k| c.is_subset(k)) {
            cliques.push(c);
        }
    }
    cliques
}

/// An interval model realizing `g` exactly, or `None` when `g` is not an
/// interval graph. Endpoints are clique positions, so all values lie in
/// `0..#cliques`.
pub fn interval_model(g: &Graph) -> Option<Vec<(i64, i64)>> {
    let n = g.n();
    if n == 0 {
        return Some(vec![]);
    }
    let mut elim = lex_bfs(g);
    elim.reverse();
    if !is_perfect_elimination(g, &elim) {
        return None;
    }
    let cliques = chordal_maximal_cliques(g, &elim);
    let mut tree = PQTree::from_leaves(&(0..cliques.len()).collect::<Vec<usize>>()).unwrap();
    for v in 0..n {
        let owning: Vec<usize> =
            (0..cliques.len()).filter(|&i| cliques[i].contains(v)).collect();
        tree = match tree.reduction(&owning) {
            Ok(t) => t,
            Err(_) => return None,
        };
    }
    tree.sort_lexicographically();
    let mut position = vec![0usize; cliques.len()];
    for (pos, c) in tree.frontier().into_iter().enumerate() {
        position[c] = pos;
    }
    let model: Vec<(i64, i64)> = (0..n)
        .map(|v| {
            let ps: Vec<i64> = (0..cliques.len())
                .filter(|&i| cliques[i].contains(v))
                .map(|i| position[i] as i64)
                .collect();
            (*ps.iter().min().unwrap(), *ps.iter().max().unwrap())
        })
        .collect();
    for u in 0..n {
        for v in u + 1..n {
            let meet = model[u].0 <= model[v].1 && model[v].0 <= model[u].1;
            assert_eq!(meet, g.has_edge(u, v), "clique order does not realize the graph");
        }
    }
    Some(model)
}

pub fn is_interval(g: &Graph) -> bool {
    interval_model(g).is_some()
}

/// Whether the subgraph induced by `x` is an interval graph.
pub fn is_interval_within(g: &Graph, x: &VertexSet) -> bool {
    is_interval(&g.induced_subgraph(x))
}
