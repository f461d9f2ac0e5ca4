//! Covering parameters that bound the modular cardinalities: the
//! neighborhood-type partition, exact twin-cover, and exact vertex cover.

use crate::bitset::VertexSet;
use crate::error::{check_guard, Result};
use crate::graph::Graph;

/// Same neighborhood type: `N(u) \ {v} = N(v) \ {u}`, i.e. `{u, v}` is a
/// module. This is an equivalence; the classes form the coarsest
/// neighborhood partition.
fn same_type(g: &Graph, u: usize, v: usize) -> bool {
    let mut a = g.neighbors(u).clone();
    a.remove(v);
    let mut b = g.neighbors(v).clone();
    b.remove(u);
    a == b
}

/// The neighborhood partition and its size, `nd(G)`.
pub fn neighborhood_diversity(g: &Graph) -> (usize, Vec<VertexSet>) {
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut reps: Vec<usize> = Vec::new();
    for v in g.vertices() {
        match reps.iter().position(|&r| same_type(g, r, v)) {
            Some(i) => classes[i].insert(v),
            None => {
                reps.push(v);
                classes.push(VertexSet::singleton(g.n(), v));
            }
        }
    }
    (classes.len(), classes)
}

/// True twins share a closed neighborhood.
pub fn are_twins(g: &Graph, a: usize, b: usize) -> bool {
    let mut na = g.neighbors(a).clone();
    na.insert(a);
    let mut nb = g.neighbors(b).clone();
    nb.insert(b);
    na == nb
}

/// A twin-cover hits every edge whose endpoints are not true twins.
pub fn is_twin_cover(g: &Graph, x: &VertexSet) -> bool {
    g.edges()
        .iter()
        .all(|&(a, b)| x.contains(a) || x.contains(b) || are_twins(g, a, b))
}

pub fn is_vertex_cover(g: &Graph, x: &VertexSet) -> bool {
    g.edges().iter().all(|&(a, b)| x.contains(a) || x.contains(b))
}

/// Minimum twin-cover by subset enumeration in increasing size; returns
/// the lexicographically least one of minimum size.
pub fn twin_cover_exact(g: &Graph, force: bool) -> Result<VertexSet> {
    check_guard("twin_cover_exact", g.n(), 16, force)?;
    let n = g.n();
    // Only edges between non-twins constrain the cover.
    let hard: Vec<(usize, usize)> =
        g.edges().into_iter().filter(|&(a, b)| !are_twins(g, a, b)).collect();
    if hard.is_empty() {
        return Ok(VertexSet::empty(n));
    }
    for size in 1..=n {
        let mut pick = Vec::with_capacity(size);
        if let Some(found) = combos_first(n, size, 0, &mut pick, &mut |chosen: &[usize]| {
            let x = VertexSet::from_vertices(n, chosen);
            hard.iter().all(|&(a, b)| x.contains(a) || x.contains(b))
        }) {
            return Ok(VertexSet::from_vertices(n, &found));
        }
    }
    unreachable!("the full vertex set is always a twin-cover")
}

/// First k-combination (in lexicographic order) satisfying `ok`.
fn combos_first(
    n: usize,
    size: usize,
    from: usize,
    pick: &mut Vec<usize>,
    ok: &mut impl FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    if pick.len() == size {
        return ok(pick).then(|| pick.clone());
    }
    for v in from..n {
        if n - v < size - pick.len() {
            break;
        }
        pick.push(v);
        if let Some(found) = combos_first(n, size, v + 1, pick, ok) {
            return Some(found);
        }
        pick.pop();
    }
    None
}

/// Minimum vertex cover by branching on an uncovered edge.
pub fn vertex_cover_exact(g: &Graph, force: bool) -> Result<VertexSet> {
    check_guard("vertex_cover_exact", g.n(), 20, force)?;
    let edges = g.edges();
    let mut best: Option<VertexSet> = None;
    let mut current = VertexSet::empty(g.n());
    branch_vc(&edges, &mut current, 0, &mut best);
    Ok(best.unwrap_or_else(|| VertexSet::empty(g.n())))
}

fn branch_vc(
    edges: &[(usize, usize)],
    current: &mut VertexSet,
    covered_upto: usize,
    best: &mut Option<VertexSet>,
) {
    if let Some(b) = best {
        if current.count() >= b.count() {
            return;
        }
    }
    let next = edges[covered_upto..]
        .iter()
        .position(|&(a, b)| !current.contains(a) && !current.contains(b));
    match next {
        None => *best = Some(current.clone()),
        Some(off) => {
            let (a, b) = edges[covered_upto + off];
            for v in [a, b] {
                current.insert(v);
                branch_vc(edges, current, covered_upto + off, best);
                current.remove(v);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn neighborhood_diversity_values() {
        assert_eq!(neighborhood_diversity(&generators::c_copies_k2(4)).0, 4);
        assert_eq!(neighborhood_diversity(&generators::complete_bipartite(3, 3)).0, 2);
        assert_eq!(neighborhood_diversity(&generators::complete(1)).0, 1);
        assert_eq!(neighborhood_diversity(&generators::path(4)).0, 4);
    }

    #[test]
    fn twin_cover_values() {
        let k33 = generators::complete_bipartite(3, 3);
        assert_eq!(twin_cover_exact(&k33, false).unwrap().count(), 3);
        assert_eq!(twin_cover_exact(&generators::path(4), false).unwrap().count(), 2);
        assert_eq!(twin_cover_exact(&generators::complete(6), false).unwrap().count(), 0);
        assert_eq!(twin_cover_exact(&generators::c_copies_k2(3), false).unwrap().count(), 0);
    }

    #[test]
    fn vertex_cover_values() {
        assert_eq!(vertex_cover_exact(&Graph::edgeless(5), false).unwrap().count(), 0);
        assert_eq!(vertex_cover_exact(&generators::complete(5), false).unwrap().count(), 4);
        let p4 = generators::path(4);
        let vc = vertex_cover_exact(&p4, false).unwrap();
        assert_eq!(vc.count(), 2);
        assert!(is_vertex_cover(&p4, &vc));
    }

    #[test]
    fn covers_validate() {
        let g = generators::complete_bipartite(2, 3);
        let tc = twin_cover_exact(&g, false).unwrap();
        assert!(is_twin_cover(&g, &tc));
        let vc = vertex_cover_exact(&g, false).unwrap();
        assert!(is_vertex_cover(&g, &vc));
        assert!(tc.count() <= vc.count());
    }
}
