//! Modular decomposition trees and modular-width.
//!
//! The builder is the simple recursive scheme: split on connectivity, then
//! on co-connectivity, and otherwise partition into maximal proper modules
//! grown by splitter closure. Output is checked independently by
//! [`validate_md_tree`], which re-derives every tag from the graph.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MDKind {
    Leaf,
    Parallel,
    Series,
    Prime,
}

impl MDKind {
    pub fn as_str(self) -> &'static str {
        match self {
            MDKind::Leaf => "leaf",
            MDKind::Parallel => "parallel",
            MDKind::Series => "series",
            MDKind::Prime => "prime",
        }
    }
}

#[derive(Clone, Debug)]
pub struct MDNode {
    pub kind: MDKind,
    pub vertices: VertexSet,
    pub children: Vec<MDNode>,
    /// Whether this node's induced subgraph is complete (cached for the
    /// modular-partition algorithms).
    pub complete: bool,
}

#[derive(Clone, Debug)]
pub struct MDTree {
    pub root: MDNode,
}

/// Smallest module of `g[within]` containing `seed`: repeatedly absorb
/// every vertex that distinguishes two current members.
fn module_closure(g: &Graph, within: &VertexSet, seed: &VertexSet) -> VertexSet {
    let mut m = seed.clone();
    loop {
        let mut splitters = VertexSet::empty(g.n());
        let outside = within.difference(&m);
        let k = m.count();
        for w in outside.iter() {
            let seen = g.neighbors(w).intersection(&m).count();
            if seen != 0 && seen != k {
                splitters.insert(w);
            }
        }
        if splitters.is_empty() {
            return m;
        }
        m.union_with(&splitters);
    }
}

/// Maximal proper modules of `g[within]`, assuming both `g[within]` and its
/// complement are connected. Under that assumption they partition `within`.
fn maximal_proper_modules(g: &Graph, within: &VertexSet) -> Vec<VertexSet> {
    let mut remaining = within.clone();
    let mut parts = Vec::new();
    while let Some(v) = remaining.first() {
        let mut m = VertexSet::singleton(g.n(), v);
        let mut assigned = within.difference(&remaining);
        for u in within.iter() {
            if m.contains(u) || assigned.contains(u) {
                continue;
            }
            let mut seed = m.clone();
            seed.insert(u);
            let closed = module_closure(g, within, &seed);
            if closed != *within {
                m = closed;
            }
        }
        assigned.union_with(&m);
        remaining.difference_with(&m);
        parts.push(m);
    }
    parts.sort_by_key(|p| p.first().unwrap());
    parts
}

fn decompose(g: &Graph, within: &VertexSet) -> MDNode {
    if within.count() == 1 {
        return MDNode { kind: MDKind::Leaf, vertices: within.clone(), children: vec![], complete: true };
    }
    let comps = g.components_within(within);
    if comps.len() > 1 {
        let children: Vec<MDNode> = comps.iter().map(|c| decompose(g, c)).collect();
        return MDNode {
            kind: MDKind::Parallel,
            vertices: within.clone(),
            children,
            complete: false,
        };
    }
    let co_comps = g.co_components_within(within);
    if co_comps.len() > 1 {
        let children: Vec<MDNode> = co_comps.iter().map(|c| decompose(g, c)).collect();
        let complete = children.iter().all(|c| c.complete);
        return MDNode { kind: MDKind::Series, vertices: within.clone(), children, complete };
    }
    let parts = maximal_proper_modules(g, within);
    let children: Vec<MDNode> = parts.iter().map(|c| decompose(g, c)).collect();
    MDNode { kind: MDKind::Prime, vertices: within.clone(), children, complete: false }
}

pub fn modular_decomposition(g: &Graph) -> Result<MDTree> {
    if g.n() == 0 {
        return Err(Error::InvalidArgument("modular decomposition of the empty graph".into()));
    }
    Ok(MDTree { root: decompose(g, &VertexSet::full(g.n())) })
}

pub fn modular_width(t: &MDTree) -> usize {
    fn walk(node: &MDNode, best: &mut usize) {
        if node.kind == MDKind::Prime {
            *best = (*best).max(node.children.len());
        }
        for c in &node.children {
            walk(c, best);
        }
    }
    let mut best = 2;
    walk(&t.root, &mut best);
    best
}

/// Quotient of `g` on a family of disjoint modules, using minimum-vertex
/// representatives.
fn quotient_graph(g: &Graph, parts: &[VertexSet]) -> Graph {
    let reps: Vec<usize> = parts.iter().map(|p| p.first().unwrap()).collect();
    let mut q = Graph::edgeless(parts.len());
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if g.has_edge(reps[i], reps[j]) {
                q.add_edge(i, j).unwrap();
            }
        }
    }
    q
}

/// No module of `q` other than singletons and the whole vertex set.
fn is_prime_graph(q: &Graph) -> bool {
    let n = q.n();
    if n < 4 {
        return false;
    }
    let all = VertexSet::full(n);
    for u in 0..n {
        for v in u + 1..n {
            let seed = VertexSet::from_vertices(n, &[u, v]);
            if module_closure(q, &all, &seed) != all {
                return false;
            }
        }
    }
    true
}

/// Checks every tree invariant against `g`: partition structure, module
/// property of every node, and that each kind tag matches what the induced
/// subgraph actually is (components, co-components, prime quotient).
pub fn validate_md_tree(g: &Graph, t: &MDTree) -> std::result::Result<(), String> {
    if g.n() == 0 {
        return Err("graph has no vertices".into());
    }
    if t.root.vertices != VertexSet::full(g.n()) {
        return Err("root does not cover the vertex set".into());
    }
    validate_node(g, &t.root, "root")
}

fn validate_node(g: &Graph, node: &MDNode, path: &str) -> std::result::Result<(), String> {
    let fail = |why: String| Err(format!("{path}: {why}"));
    if node.vertices.is_empty() {
        return fail("empty vertex set".into());
    }
    if !g.is_module(&node.vertices) {
        return fail(format!("{:?} is not a module", node.vertices));
    }
    if node.complete != g.is_complete_within(&node.vertices) {
        return fail("stale completeness flag".into());
    }
    if node.vertices.count() == 1 {
        if node.kind != MDKind::Leaf || !node.children.is_empty() {
            return fail("single vertex must be a childless leaf".into());
        }
        return Ok(());
    }
    if node.kind == MDKind::Leaf {
        return fail("leaf with more than one vertex".into());
    }
    if node.children.len() < 2 {
        return fail("internal node needs at least two children".into());
    }
    let mut union = VertexSet::empty(g.n());
    for c in &node.children {
        if !union.is_disjoint(&c.vertices) {
            return fail("children overlap".into());
        }
        union.union_with(&c.vertices);
    }
    if union != node.vertices {
        return fail("children do not partition the node".into());
    }
    let mins: Vec<usize> = node.children.iter().map(|c| c.vertices.first().unwrap()).collect();
    if !mins.windows(2).all(|w| w[0] < w[1]) {
        return fail("children not sorted by minimum vertex".into());
    }

    let comps = g.components_within(&node.vertices);
    let co_comps = g.co_components_within(&node.vertices);
    let child_sets: Vec<&VertexSet> = node.children.iter().map(|c| &c.vertices).collect();
    match node.kind {
        MDKind::Parallel => {
            if comps.len() < 2 {
                return fail("parallel node induces a connected graph".into());
            }
            if comps.len() != child_sets.len() || comps.iter().zip(&child_sets).any(|(a, b)| a != *b) {
                return fail("parallel children are not the connected components".into());
            }
        }
        MDKind::Series => {
            if comps.len() > 1 {
                return fail("series node induces a disconnected graph".into());
            }
            if co_comps.len() < 2 {
                return fail("series node has a connected complement".into());
            }
            if co_comps.len() != child_sets.len()
                || co_comps.iter().zip(&child_sets).any(|(a, b)| a != *b)
            {
                return fail("series children are not the co-components".into());
            }
        }
        MDKind::Prime => {
            if comps.len() > 1 || co_comps.len() > 1 {
                return fail("prime node must be connected and co-connected".into());
            }
            if node.children.len() < 4 {
                return fail("prime node with fewer than 4 children".into());
            }
            let parts: Vec<VertexSet> = node.children.iter().map(|c| c.vertices.clone()).collect();
            if !is_prime_graph(&quotient_graph(g, &parts)) {
                return fail("quotient on children is not prime".into());
            }
        }
        MDKind::Leaf => unreachable!(),
    }
    for (i, c) in node.children.iter().enumerate() {
        validate_node(g, c, &format!("{path}.{i}"))?;
    }
    Ok(())
}

/// Nested JSON dump consumed by the CLI `decompose` command.
pub fn tree_to_json(t: &MDTree) -> serde_json::Value {
    fn node_json(n: &MDNode) -> serde_json::Value {
        serde_json::json!({
            "kind": n.kind.as_str(),
            "vertices": n.vertices.to_vec(),
            "children": n.children.iter().map(node_json).collect::<Vec<_>>(),
        })
    }
    node_json(&t.root)
}

pub fn tree_from_json(v: &serde_json::Value, n: usize) -> Result<MDTree> {
    fn node_from(v: &serde_json::Value, n: usize) -> Result<MDNode> {
        let bad = |m: &str| Error::InvalidArgument(format!("md-tree witness: {m}"));
        let kind = match v["kind"].as_str().ok_or_else(|| bad("missing kind"))? {
            "leaf" => MDKind::Leaf,
            "parallel" => MDKind::Parallel,
            "series" => MDKind::Series,
            "prime" => MDKind::Prime,
            other => return Err(bad(&format!("unknown kind {other:?}"))),
        };
        let verts = v["vertices"].as_array().ok_or_else(|| bad("missing vertices"))?;
        let mut vertices = VertexSet::empty(n);
        for x in verts {
            let x = x.as_u64().ok_or_else(|| bad("non-integer vertex"))? as usize;
            if x >= n {
                return Err(bad(&format!("vertex {x} out of range")));
            }
            vertices.insert(x);
        }
        let children = v["children"]
            .as_array()
            .ok_or_else(|| bad("missing children"))?
            .iter()
            .map(|c| node_from(c, n))
            .collect::<Result<Vec<_>>>()?;
        let complete = children.is_empty() && vertices.count() == 1
            || !children.is_empty() && kind == MDKind::Series && children.iter().all(|c| c.complete);
        Ok(MDNode { kind, vertices, children, complete })
    }
    Ok(MDTree { root: node_from(v, n)? })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    /// 9-vertex running example: a prime quotient over the modules
    /// {0}, {1,2,3}, {4,5}, {6,7,8}.
    pub(crate) fn nested_example() -> Graph {
        Graph::from_edges(
            9,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
                (3, 4),
                (3, 5),
                (4, 5),
                (4, 6),
                (4, 7),
                (4, 8),
                (5, 6),
                (5, 7),
                (5, 8),
                (6, 7),
                (6, 8),
            ],
        )
        .unwrap()
    }

    #[test]
    fn complete_graph_is_one_series_node() {
        let g = generators::complete(5);
        let t = modular_decomposition(&g).unwrap();
        assert_eq!(t.root.kind, MDKind::Series);
        assert_eq!(t.root.children.len(), 5);
        assert!(t.root.children.iter().all(|c| c.kind == MDKind::Leaf));
        assert!(t.root.complete);
        assert_eq!(modular_width(&t), 2);
        validate_md_tree(&g, &t).unwrap();
    }

    #[test]
    fn c5_is_prime_with_five_leaves() {
        let g = generators::cycle(5);
        let t = modular_decomposition(&g).unwrap();
        assert_eq!(t.root.kind, MDKind::Prime);
        assert_eq!(t.root.children.len(), 5);
        validate_md_tree(&g, &t).unwrap();

        // Cross-check primality by exhausting all vertex subsets.
        for mask in 1u32..(1 << 5) - 1 {
            let vs: Vec<usize> = (0..5).filter(|&v| mask >> v & 1 == 1).collect();
            if vs.len() >= 2 {
                assert!(!g.is_module(&VertexSet::from_vertices(5, &vs)));
            }
        }
    }

    #[test]
    fn nested_example_tree_shape() {
        let g = nested_example();
        let t = modular_decomposition(&g).unwrap();
        validate_md_tree(&g, &t).unwrap();
        assert_eq!(t.root.kind, MDKind::Prime);
        let kids = &t.root.children;
        assert_eq!(kids.len(), 4);
        assert_eq!(kids[0].vertices.to_vec(), vec![0]);
        assert_eq!(kids[1].vertices.to_vec(), vec![1, 2, 3]);
        assert_eq!(kids[1].kind, MDKind::Parallel);
        assert_eq!(kids[2].vertices.to_vec(), vec![4, 5]);
        assert_eq!(kids[2].kind, MDKind::Series);
        assert_eq!(kids[3].vertices.to_vec(), vec![6, 7, 8]);
        assert_eq!(kids[3].kind, MDKind::Series);
        assert_eq!(modular_width(&t), 4);
    }

    #[test]
    fn retagged_node_fails_validation() {
        let g = nested_example();
        let mut t = modular_decomposition(&g).unwrap();
        // {2,3} is an edge: flipping its series tag to parallel must fail.
        let inner = &mut t.root.children[1].children[1];
        assert_eq!(inner.vertices.to_vec(), vec![2, 3]);
        assert_eq!(inner.kind, MDKind::Series);
        inner.kind = MDKind::Parallel;
        assert!(validate_md_tree(&g, &t).is_err());
    }

    #[test]
    fn single_vertex_tree() {
        let g = generators::complete(1);
        let t = modular_decomposition(&g).unwrap();
        assert_eq!(t.root.kind, MDKind::Leaf);
        validate_md_tree(&g, &t).unwrap();
        assert!(modular_decomposition(&Graph::edgeless(0)).is_err());
    }

    #[test]
    fn validator_rejects_structural_tampering() {
        let g = nested_example();
        let good = modular_decomposition(&g).unwrap();

        // Children out of minimum-vertex order.
        let mut t = good.clone();
        t.root.children.swap(0, 1);
        assert!(validate_md_tree(&g, &t).is_err());

        // A vertex moved between sibling subtrees.
        let mut t = good.clone();
        t.root.children[2].vertices.remove(5);
        t.root.children[0].vertices.insert(5);
        assert!(validate_md_tree(&g, &t).is_err());

        // Stale completeness flag.
        let mut t = good.clone();
        t.root.children[2].complete = false;
        assert!(validate_md_tree(&g, &t).is_err());

        // Two prime children merged into one set that is not a module.
        let mut t = good.clone();
        let moved = t.root.children.remove(1);
        t.root.children[0].vertices.union_with(&moved.vertices);
        assert!(validate_md_tree(&g, &t).is_err());

        validate_md_tree(&g, &good).unwrap();
    }

    #[test]
    fn json_roundtrip_preserves_validity() {
        let g = nested_example();
        let t = modular_decomposition(&g).unwrap();
        let v = tree_to_json(&t);
        let t2 = tree_from_json(&v, g.n()).unwrap();
        validate_md_tree(&g, &t2).unwrap();
        assert_eq!(modular_width(&t2), 4);
    }
}
