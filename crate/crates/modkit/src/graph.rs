//! Simple undirected graphs on dense vertex ids `0..n` with bitset
//! adjacency rows, plus the module surgery (contraction, replacement,
//! substitution) everything else is built on.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        Graph { n, adj: vec![VertexSet::empty(n); n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::edgeless(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidArgument(format!(
                "edge ({u}, {v}) out of range for n = {}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.count()).sum::<usize>() / 2
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_edgeless(&self) -> bool {
        self.adj.iter().all(|s| s.is_empty())
    }

    pub fn is_complete(&self) -> bool {
        self.adj.iter().all(|s| s.count() == self.n - 1)
    }

    /// Completeness of an induced subgraph without extracting it.
    pub fn is_complete_within(&self, x: &VertexSet) -> bool {
        let k = x.count();
        x.iter().all(|v| self.adj[v].intersection(x).count() == k - 1)
    }

    pub fn complement(&self) -> Graph {
        let mut adj = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut row = self.adj[v].complement();
            row.remove(v);
            adj.push(row);
        }
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on `keep`, compacting ids in ascending order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Graph {
        self.induced_subgraph_with_map(keep).0
    }

    /// Also returns the old id of each new vertex.
    pub fn induced_subgraph_with_map(&self, keep: &VertexSet) -> (Graph, Vec<usize>) {
        let old_ids: Vec<usize> = keep.iter().collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        let m = old_ids.len();
        let mut g = Graph::edgeless(m);
        for (i, &v) in old_ids.iter().enumerate() {
            for w in self.adj[v].intersection(keep).iter() {
                if new_id[w] > i {
                    g.adj[i].insert(new_id[w]);
                    g.adj[new_id[w]].insert(i);
                }
            }
        }
        (g, old_ids)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::edgeless(n);
        for (u, v) in self.edges() {
            g.add_edge(u, v).unwrap();
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v).unwrap();
        }
        g
    }

    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in self.n..self.n + other.n {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    /// Connected components, sorted by minimum vertex.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        self.components_within(&VertexSet::full(self.n))
    }

    /// Components of the subgraph induced by `within`, sorted by minimum vertex.
    pub fn components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = within.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = VertexSet::empty(self.n);
            let mut stack = vec![start];
            comp.insert(start);
            remaining.remove(start);
            while let Some(v) = stack.pop() {
                let fresh = self.adj[v].intersection(&remaining);
                for w in fresh.iter() {
                    comp.insert(w);
                    remaining.remove(w);
                    stack.push(w);
                }
            }
            out.push(comp);
        }
        out
    }

    /// Components of the complement of the subgraph induced by `within`,
    /// found without materializing the complement.
    pub fn co_components_within(&self, within: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = within.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = VertexSet::empty(self.n);
            let mut stack = vec![start];
            comp.insert(start);
            remaining.remove(start);
            while let Some(v) = stack.pop() {
                let mut fresh = remaining.difference(&self.adj[v]);
                fresh.remove(v);
                for w in fresh.iter() {
                    comp.insert(w);
                    remaining.remove(w);
                    stack.push(w);
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.connected_components().len() == 1
    }

    /// A module: every vertex outside `x` sees all of `x` or none of it.
    ///
    /// Panics if `x` is empty or exceeds the vertex range.
    pub fn is_module(&self, x: &VertexSet) -> bool {
        assert!(!x.is_empty(), "is_module: empty vertex set");
        assert!(x.capacity() == self.n, "is_module: capacity mismatch");
        let k = x.count();
        for v in x.complement().iter() {
            let seen = self.adj[v].intersection(x).count();
            if seen != 0 && seen != k {
                return false;
            }
        }
        true
    }

    /// Contracts the module `x` into a single fresh vertex.
    ///
    /// Untouched vertices keep their relative order and are compacted to
    /// `0..n-|x|`; the fresh vertex gets the last id and is adjacent to
    /// exactly the former neighbors of `x`.
    pub fn contract_module(&self, x: &VertexSet) -> Result<Graph> {
        if !self.is_module(x) {
            return Err(Error::InvalidArgument("contract_module: not a module".into()));
        }
        let outside = x.complement();
        let rep = x.first().unwrap();
        let m = outside.count() + 1;
        let mut g = Graph::edgeless(m);
        let old_ids: Vec<usize> = outside.iter().collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        for (i, &v) in old_ids.iter().enumerate() {
            for w in self.adj[v].intersection(&outside).iter() {
                if new_id[w] > i {
                    g.add_edge(i, new_id[w]).unwrap();
                }
            }
            if self.adj[rep].contains(v) {
                g.add_edge(i, m - 1).unwrap();
            }
        }
        Ok(g)
    }

    /// Replaces the module `x` by the graph `h`: former neighbors of `x`
    /// become adjacent to all of `h`, and `h` keeps its internal edges.
    ///
    /// Untouched vertices are compacted in order; `h`'s vertices follow.
    pub fn replace_module(&self, x: &VertexSet, h: &Graph) -> Result<Graph> {
        if !self.is_module(x) {
            return Err(Error::InvalidArgument("replace_module: not a module".into()));
        }
        let outside = x.complement();
        let rep = x.first().unwrap();
        let base = outside.count();
        let mut g = Graph::edgeless(base + h.n);
        let old_ids: Vec<usize> = outside.iter().collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in old_ids.iter().enumerate() {
            new_id[v] = i;
        }
        for (i, &v) in old_ids.iter().enumerate() {
            for w in self.adj[v].intersection(&outside).iter() {
                if new_id[w] > i {
                    g.add_edge(i, new_id[w]).unwrap();
                }
            }
            if self.adj[rep].contains(v) {
                for j in 0..h.n {
                    g.add_edge(i, base + j).unwrap();
                }
            }
        }
        for (u, v) in h.edges() {
            g.add_edge(base + u, base + v).unwrap();
        }
        Ok(g)
    }

    /// Substitutes the single vertex `v` by the graph `h`.
    pub fn substitution(&self, v: usize, h: &Graph) -> Result<Graph> {
        if v >= self.n {
            return Err(Error::InvalidArgument(format!(
                "substitution: vertex {v} out of range for n = {}",
                self.n
            )));
        }
        self.replace_module(&VertexSet::singleton(self.n, v), h)
    }
}

pub mod generators {
    use super::Graph;

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::edgeless(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::edgeless(n);
        for u in 1..n {
            g.add_edge(u - 1, u).unwrap();
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = path(n);
        if n >= 3 {
            g.add_edge(n - 1, 0).unwrap();
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut g = Graph::edgeless(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// `c` disjoint copies of an edge.
    pub fn c_copies_k2(c: usize) -> Graph {
        let mut g = Graph::edgeless(2 * c);
        for i in 0..c {
            g.add_edge(2 * i, 2 * i + 1).unwrap();
        }
        g
    }

    /// The claw with every edge subdivided once: center 0, middle
    /// vertices 1..=3, leaves 4..=6 (leaf `3 + i` hangs off middle `i`).
    pub fn bipartite_claw() -> Graph {
        Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::generators::*;
    use super::*;

    #[test]
    fn generator_shapes() {
        let g = c_copies_k2(3);
        assert_eq!(g.n(), 6);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.connected_components().len(), 3);

        let c4 = cycle(4);
        assert!(c4.vertices().all(|v| c4.degree(v) == 2));

        let claw = bipartite_claw();
        let mut degs: Vec<usize> = claw.vertices().map(|v| claw.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 2, 2, 2, 3]);
        assert_eq!(claw.edge_count(), 6);
    }

    #[test]
    fn modules_of_path() {
        // P_4 = a-b-c-d: {a,b} is split by c.
        let p4 = path(4);
        assert!(!p4.is_module(&VertexSet::from_vertices(4, &[0, 1])));
        assert!(p4.is_module(&VertexSet::full(4)));
        assert!(p4.is_module(&VertexSet::singleton(4, 2)));
    }

    #[test]
    fn contract_whole_and_side() {
        let k5 = complete(5);
        let g = k5.contract_module(&VertexSet::full(5)).unwrap();
        assert_eq!(g.n(), 1);

        // K_{3,3} with one side contracted is the star K_{1,3}.
        let k33 = complete_bipartite(3, 3);
        let g = k33.contract_module(&VertexSet::from_vertices(6, &[0, 1, 2])).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.degree(3), 3);
        assert!((0..3).all(|v| g.degree(v) == 1));
    }

    #[test]
    fn contract_nested_module_keeps_outside_neighbors() {
        // Nested 9-vertex example: contracting {7, 8} leaves 8 vertices
        // and the fresh vertex sees exactly the old {4, 5, 6}.
        let g = Graph::from_edges(
            9,
            &[
                (0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5),
                (3, 4), (3, 5), (4, 5), (4, 6), (4, 7), (4, 8), (5, 6), (5, 7),
                (5, 8), (6, 7), (6, 8),
            ],
        )
        .unwrap();
        let c = g.contract_module(&VertexSet::from_vertices(9, &[7, 8])).unwrap();
        assert_eq!(c.n(), 8);
        assert_eq!(c.neighbors(7).to_vec(), vec![4, 5, 6]);
    }

    #[test]
    fn contract_rejects_non_module() {
        let p4 = path(4);
        assert!(p4.contract_module(&VertexSet::from_vertices(4, &[0, 1])).is_err());
    }

    #[test]
    fn replace_module_semantics() {
        // C_4 with the nonadjacent pair {0,2} replaced by 3K_1 gives K_{2,3}.
        let c4 = cycle(4);
        let g = c4
            .replace_module(&VertexSet::from_vertices(4, &[0, 2]), &Graph::edgeless(3))
            .unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 6);
        // Old 1 and 3 are compacted to 0 and 1; the three new vertices follow.
        for b in 2..5 {
            assert!(g.has_edge(0, b) && g.has_edge(1, b));
        }
        assert!(!g.has_edge(0, 1));

        // Size arithmetic when replacing a 4-vertex module by an 8-vertex graph.
        let host = c4.join(&complete(1));
        let x = VertexSet::from_vertices(5, &[0, 1, 2, 3]);
        let two_c4 = cycle(4).disjoint_union(&cycle(4));
        let replaced = host.replace_module(&x, &two_c4).unwrap();
        assert_eq!(replaced.n(), 5 - 4 + 8);
    }

    #[test]
    fn substitution_of_leaf_keeps_star() {
        let star = complete_bipartite(1, 3);
        let g = star.substitution(1, &complete(1)).unwrap();
        assert_eq!(g.n(), 4);
        let mut degs: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![1, 1, 1, 3]);
    }

    #[test]
    fn complement_involution_and_counts() {
        let g = Graph::from_edges(6, &[(0, 3), (1, 4), (2, 5), (0, 1)]).unwrap();
        assert_eq!(g.complement().complement(), g);

        let a = path(3);
        let b = cycle(4);
        let du = a.disjoint_union(&b);
        assert_eq!(du.n(), 7);
        assert_eq!(du.edge_count(), a.edge_count() + b.edge_count());
        let j = a.join(&b);
        assert_eq!(j.edge_count(), a.edge_count() + b.edge_count() + 12);
    }

    #[test]
    fn induced_subgraph_on_k33_and_p4() {
        let k33 = complete_bipartite(3, 3);
        let h = k33.induced_subgraph(&VertexSet::from_vertices(6, &[0, 1, 3]));
        // Two left vertices and one right vertex: a path 0-2-1.
        assert_eq!(h.edges(), vec![(0, 2), (1, 2)]);

        let p4 = path(4);
        let h = p4.induced_subgraph(&VertexSet::from_vertices(4, &[0, 1, 3]));
        assert_eq!(h.edges(), vec![(0, 1)]);
    }

    #[test]
    fn co_components_match_complement_components() {
        let g = complete_bipartite(2, 3);
        let direct = g.complement().connected_components();
        let via = g.co_components_within(&VertexSet::full(5));
        assert_eq!(direct, via);
    }
}
