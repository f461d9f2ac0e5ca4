//! Exact thinness via incompatibility graphs, and the interval-modular
//! kernel that preserves it.
//!
//! For a fixed vertex order, two vertices that some later witness
//! distinguishes cannot share a class; those forced pairs form the
//! incompatibility graph, and the thinness of the order is its chromatic
//! number. The exact search minimizes over all orders with canonical
//! prefix pruning.

use crate::bitset::VertexSet;
use crate::coloring::{greedy_clique, mask_chromatic, mask_color_with, mask_rows};
use crate::error::{check_guard, Error, Result};
use crate::graph::Graph;
use crate::interval::is_interval;
use crate::modular_partition::interval_mc;

/// A vertex order together with a partition into classes; the witness
/// object for thinness.
#[derive(Clone, Debug)]
pub struct ConsistentSolution {
    /// `order[i]` is the vertex at position `i` (smallest first).
    pub order: Vec<usize>,
    pub classes: Vec<VertexSet>,
}

fn assert_permutation(n: usize, order: &[usize]) {
    assert_eq!(order.len(), n, "order must cover every vertex");
    let mut seen = vec![false; n];
    for &v in order {
        assert!(v < n && !seen[v], "order is not a permutation");
        seen[v] = true;
    }
}

/// The incompatibility graph of `g` under `order`: vertices `u`, `v` are
/// joined when some later `w` is adjacent to the earlier one but not the
/// other, so they can never share a class.
pub fn incompatibility_graph(g: &Graph, order: &[usize]) -> Graph {
    let n = g.n();
    assert_permutation(n, order);
    let mut inc = Graph::edgeless(n);
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let (u, v, w) = (order[i], order[j], order[k]);
                if g.has_edge(u, w) && !g.has_edge(v, w) {
                    let _ = inc.add_edge(u, v);
                }
            }
        }
    }
    inc
}

/// Direct triple check of the consistency condition; deliberately not
/// routed through [`incompatibility_graph`] so the two stay independent.
pub fn is_consistent(g: &Graph, sol: &ConsistentSolution) -> bool {
    let n = g.n();
    if sol.order.len() != n {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in &sol.order {
        if v >= n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    let mut class_of = vec![usize::MAX; n];
    for (c, part) in sol.classes.iter().enumerate() {
        for v in part.iter() {
            if class_of[v] != usize::MAX {
                return false;
            }
            class_of[v] = c;
        }
    }
    if class_of.contains(&usize::MAX) {
        return false;
    }
    for i in 0..n {
        for j in i + 1..n {
            let (u, v) = (sol.order[i], sol.order[j]);
            if class_of[u] != class_of[v] {
                continue;
            }
            for k in j + 1..n {
                let w = sol.order[k];
                if g.has_edge(u, w) && !g.has_edge(v, w) {
                    return false;
                }
            }
        }
    }
    true
}

struct ThinSearch {
    adj: Vec<u64>,
    n: usize,
    /// Incompatibility edges among placed vertices, grown incrementally.
    inc: Vec<u64>,
    placed: Vec<usize>,
    best: u32,
    witness: Vec<usize>,
}

impl ThinSearch {
    /// Adds `w` at the end of the prefix; returns the new edges for undo.
    fn push(&mut self, w: usize) -> Vec<(usize, usize)> {
        let mut added = Vec::new();
        for i in 0..self.placed.len() {
            let u = self.placed[i];
            if self.adj[u] >> w & 1 == 0 {
                continue;
            }
            for &v in &self.placed[i + 1..] {
                if self.adj[v] >> w & 1 == 0 && self.inc[u] >> v & 1 == 0 {
                    self.inc[u] |= 1 << v;
                    self.inc[v] |= 1 << u;
                    added.push((u, v));
                }
            }
        }
        self.placed.push(w);
        added
    }

    fn pop(&mut self, added: Vec<(usize, usize)>) {
        self.placed.pop();
        for (u, v) in added {
            self.inc[u] &= !(1u64 << v);
            self.inc[v] &= !(1u64 << u);
        }
    }

    fn placed_mask(&self) -> u64 {
        self.placed.iter().fold(0u64, |m, &v| m | 1 << v)
    }

    fn dfs(&mut self) {
        if self.placed.len() == self.n {
            let chi = mask_chromatic(&self.inc, self.placed_mask());
            if chi < self.best {
                self.best = chi;
                self.witness = self.placed.clone();
            }
            return;
        }
        // Incompatibility edges only accumulate as the prefix grows, so a
        // clique among placed vertices bounds every completion from below.
        if greedy_clique(&self.inc, self.placed_mask()) >= self.best {
            return;
        }
        let used = self.placed_mask();
        for w in 0..self.n {
            if used >> w & 1 == 0 {
                let added = self.push(w);
                self.dfs();
                self.pop(added);
            }
        }
    }
}

/// Exact thinness with a consistent witness: the minimum over all vertex
/// orders of the chromatic number of the incompatibility graph. The
/// returned order is the lexicographically least optimal one.
pub fn thinness_exact(g: &Graph, force: bool) -> Result<(usize, ConsistentSolution)> {
    if g.n() == 0 {
        return Err(Error::InvalidArgument("thinness of the empty graph".into()));
    }
    check_guard("thinness_exact", g.n(), 9, force)?;
    if g.n() > 64 {
        return Err(Error::InvalidArgument("thinness search supports n <= 64".into()));
    }
    let n = g.n();
    let adj = mask_rows(g);
    let mut search = ThinSearch {
        adj,
        n,
        inc: vec![0; n],
        placed: Vec::with_capacity(n),
        best: n as u32 + 1,
        witness: Vec::new(),
    };
    search.dfs();
    let k = search.best;
    let order = search.witness;

    // Rebuild the incompatibility graph of the winning order and take the
    // lexicographically least proper k-coloring as the class partition.
    let inc = incompatibility_graph(g, &order);
    let colors = mask_color_with(&mask_rows(&inc), n, k).expect("optimal order must color");
    let mut classes = vec![VertexSet::empty(n); k as usize];
    for (v, &c) in colors.iter().enumerate() {
        classes[c as usize].insert(v);
    }
    let sol = ConsistentSolution { order, classes };
    debug_assert!(is_consistent(g, &sol));
    Ok((k as usize, sol))
}

/// Shrinks a module inducing an interval graph without changing the
/// thinness: complete modules contract to one vertex, others keep just
/// their lexicographically least nonadjacent pair.
pub fn reduce_interval_module(g: &Graph, h: &VertexSet) -> Result<Graph> {
    if h.is_empty() || !g.is_module(h) {
        return Err(Error::InvalidArgument("reduce_interval_module: not a module".into()));
    }
    if !is_interval(&g.induced_subgraph(h)) {
        return Err(Error::InvalidArgument(
            "reduce_interval_module: module does not induce an interval graph".into(),
        ));
    }
    if g.is_complete_within(h) {
        return g.contract_module(h);
    }
    let (a, b) = least_nonadjacent_pair(g, h).expect("non-complete module has one");
    let mut keep = h.complement();
    keep.insert(a);
    keep.insert(b);
    Ok(g.induced_subgraph(&keep))
}

fn least_nonadjacent_pair(g: &Graph, within: &VertexSet) -> Option<(usize, usize)> {
    let members: Vec<usize> = within.iter().collect();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            if !g.has_edge(a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// The linear thinness kernel: every part of an optimal interval-modular
/// partition shrinks to one vertex (complete parts) or a nonadjacent pair,
/// so the kernel has at most twice as many vertices as the partition has
/// parts, and the same thinness.
pub fn thinness_kernel(g: &Graph) -> Result<Graph> {
    let (_, partition) = interval_mc(g)?;
    let mut keep = VertexSet::empty(g.n());
    for part in &partition.parts {
        if g.is_complete_within(part) {
            keep.insert(part.first().unwrap());
        } else {
            let (a, b) = least_nonadjacent_pair(g, part).expect("non-complete part");
            keep.insert(a);
            keep.insert(b);
        }
    }
    Ok(g.induced_subgraph(&keep))
}

/// Is there a clique of the given size in the incompatibility graph whose
/// members all have a later non-neighbor in `g`?
pub fn irreducible_clique_exists(g: &Graph, order: &[usize], size: usize) -> bool {
    let n = g.n();
    assert_permutation(n, order);
    if size == 0 {
        return true;
    }
    let inc = incompatibility_graph(g, order);
    let mut position = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let eligible: Vec<usize> = (0..n)
        .filter(|&v| {
            order[position[v] + 1..].iter().any(|&w| !g.has_edge(v, w))
        })
        .collect();
    // Search for a clique of the required size among eligible vertices.
    fn grow(inc: &Graph, cand: &[usize], need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if cand.len() < need {
            return false;
        }
        for (i, &v) in cand.iter().enumerate() {
            let next: Vec<usize> =
                cand[i + 1..].iter().copied().filter(|&u| inc.has_edge(u, v)).collect();
            if grow(inc, &next, need - 1) {
                return true;
            }
        }
        false
    }
    grow(&inc, &eligible, size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn incompatibility_of_c4_cycle_order() {
        let c4 = generators::cycle(4);
        let inc = incompatibility_graph(&c4, &[0, 1, 2, 3]);
        assert_eq!(inc.edges(), vec![(0, 1)]);

        let p3 = generators::path(3);
        assert!(incompatibility_graph(&p3, &[0, 1, 2]).is_edgeless());

        let k4 = generators::complete(4);
        assert!(incompatibility_graph(&k4, &[2, 0, 3, 1]).is_edgeless());
    }

    #[test]
    fn consistency_matches_coloring_of_incompatibility() {
        let c4 = generators::cycle(4);
        let bad = ConsistentSolution {
            order: vec![0, 1, 2, 3],
            classes: vec![
                VertexSet::from_vertices(4, &[0, 1]),
                VertexSet::from_vertices(4, &[2, 3]),
            ],
        };
        assert!(!is_consistent(&c4, &bad));
        let good = ConsistentSolution {
            order: vec![0, 1, 2, 3],
            classes: vec![
                VertexSet::from_vertices(4, &[0, 2]),
                VertexSet::from_vertices(4, &[1, 3]),
            ],
        };
        assert!(is_consistent(&c4, &good));
    }

    #[test]
    fn thinness_of_named_graphs() {
        assert_eq!(thinness_exact(&generators::path(5), false).unwrap().0, 1);
        assert_eq!(thinness_exact(&generators::complete(4), false).unwrap().0, 1);
        assert_eq!(thinness_exact(&generators::cycle(4), false).unwrap().0, 2);

        // Union takes the max, join of non-complete graphs adds.
        let u = generators::cycle(4).disjoint_union(&generators::path(4));
        assert_eq!(thinness_exact(&u, false).unwrap().0, 2);
        let j = generators::c_copies_k2(2).join(&generators::c_copies_k2(2));
        assert_eq!(thinness_exact(&j, false).unwrap().0, 2);
    }

    #[test]
    fn thinness_witness_is_consistent_and_lex_least() {
        let g = generators::cycle(4);
        let (k, sol) = thinness_exact(&g, false).unwrap();
        assert_eq!(k, 2);
        assert!(is_consistent(&g, &sol));
        assert_eq!(sol.order, vec![0, 1, 2, 3], "identity order is optimal for C_4");
        assert_eq!(sol.classes.len(), 2);
    }

    #[test]
    fn guard_is_overridable() {
        let g = generators::path(10);
        assert!(thinness_exact(&g, false).is_err());
        assert_eq!(thinness_exact(&g, true).unwrap().0, 1);
    }

    #[test]
    fn kernel_of_k33_is_c4() {
        let k33 = generators::complete_bipartite(3, 3);
        let kernel = thinness_kernel(&k33).unwrap();
        assert_eq!(kernel.n(), 4);
        assert_eq!(kernel.edge_count(), 4);
        assert_eq!(thinness_exact(&kernel, false).unwrap().0, 2);
        assert_eq!(thinness_exact(&k33, false).unwrap().0, 2);

        assert_eq!(thinness_kernel(&generators::complete(5)).unwrap().n(), 1);
    }

    #[test]
    fn module_reduction_keeps_thinness_on_k33() {
        let k33 = generators::complete_bipartite(3, 3);
        let side = VertexSet::from_vertices(6, &[0, 1, 2]);
        let g = reduce_interval_module(&k33, &side).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(thinness_exact(&g, false).unwrap().0, 2);

        // Complete module contracts to a single vertex.
        let host = generators::complete(4);
        let x = VertexSet::from_vertices(4, &[1, 2]);
        assert_eq!(reduce_interval_module(&host, &x).unwrap().n(), 3);

        // Non-interval module is rejected.
        let host = generators::cycle(4).join(&generators::complete(1));
        let x = VertexSet::from_vertices(5, &[0, 1, 2, 3]);
        assert!(reduce_interval_module(&host, &x).is_err());
    }

    #[test]
    fn irreducible_cliques() {
        let c4 = generators::cycle(4);
        assert!(irreducible_clique_exists(&c4, &[0, 1, 2, 3], 2));
        let k4 = generators::complete(4);
        assert!(!irreducible_clique_exists(&k4, &[0, 1, 2, 3], 1));
    }
}
