//! Optimal cluster- and interval-modular partitions over the modular
//! decomposition tree, plus the brute-force minimum used to cross-check
//! them at desk scale.

use crate::bitset::VertexSet;
use crate::error::{check_guard, Result};
use crate::graph::Graph;
use crate::interval::{is_interval, is_interval_within};
use crate::mdtree::{modular_decomposition, MDKind, MDNode};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphClass {
    Cluster,
    Interval,
}

impl GraphClass {
    pub fn as_str(self) -> &'static str {
        match self {
            GraphClass::Cluster => "cluster",
            GraphClass::Interval => "interval",
        }
    }

    pub fn holds_for(self, g: &Graph) -> bool {
        match self {
            GraphClass::Cluster => is_cluster(g),
            GraphClass::Interval => is_interval(g),
        }
    }
}

/// A partition of the host's vertices into modules inducing members of a
/// graph class.
#[derive(Clone, Debug)]
pub struct ModularPartition {
    pub class: GraphClass,
    pub parts: Vec<VertexSet>,
}

/// A cluster is a disjoint union of complete graphs.
pub fn is_cluster(g: &Graph) -> bool {
    g.connected_components().iter().all(|c| g.is_complete_within(c))
}

fn sorted_parts(mut parts: Vec<VertexSet>) -> Vec<VertexSet> {
    parts.sort_by_key(|p| p.first().unwrap());
    parts
}

/// Optimal cluster-modular partition: complete children of a parallel or
/// series node merge into one class, everything else keeps its children's
/// optimal partitions.
pub fn cluster_mc(g: &Graph) -> Result<(usize, ModularPartition)> {
    let tree = modular_decomposition(g)?;
    fn solve(g: &Graph, node: &MDNode) -> Vec<VertexSet> {
        match node.kind {
            MDKind::Leaf => vec![node.vertices.clone()],
            MDKind::Parallel | MDKind::Series => {
                let mut first = VertexSet::empty(g.n());
                let mut parts = Vec::new();
                for c in &node.children {
                    if c.complete {
                        first.union_with(&c.vertices);
                    } else {
                        parts.extend(solve(g, c));
                    }
                }
                if !first.is_empty() {
                    parts.push(first);
                }
                parts
            }
            MDKind::Prime => node.children.iter().flat_map(|c| solve(g, c)).collect(),
        }
    }
    let parts = sorted_parts(solve(g, &tree.root));
    Ok((parts.len(), ModularPartition { class: GraphClass::Cluster, parts }))
}

/// Optimal interval-modular partition. Parallel nodes merge interval
/// children; series nodes merge complete children plus one interval child;
/// prime nodes are interval exactly when their reduced quotient is, with
/// complete children shrunk to one vertex and other interval children to
/// two nonadjacent ones.
pub fn interval_mc(g: &Graph) -> Result<(usize, ModularPartition)> {
    let tree = modular_decomposition(g)?;
    fn solve(g: &Graph, node: &MDNode) -> (Vec<VertexSet>, bool) {
        match node.kind {
            MDKind::Leaf => (vec![node.vertices.clone()], true),
            MDKind::Parallel => {
                let mut first = VertexSet::empty(g.n());
                let mut parts = Vec::new();
                let mut all_interval = true;
                for c in &node.children {
                    let (sub, interval) = solve(g, c);
                    if interval {
                        first.union_with(&c.vertices);
                    } else {
                        all_interval = false;
                        parts.extend(sub);
                    }
                }
                if !first.is_empty() {
                    parts.push(first);
                }
                (parts, all_interval)
            }
            MDKind::Series => {
                let mut first = VertexSet::empty(g.n());
                let mut rest: Vec<&MDNode> = Vec::new();
                let mut chosen = false;
                for c in &node.children {
                    if c.complete {
                        first.union_with(&c.vertices);
                    } else if !chosen && solve(g, c).1 {
                        // One non-complete interval child may join the
                        // complete ones; the join stays interval.
                        first.union_with(&c.vertices);
                        chosen = true;
                    } else {
                        rest.push(c);
                    }
                }
                let mut parts = Vec::new();
                let whole = rest.is_empty();
                for c in rest {
                    parts.extend(solve(g, c).0);
                }
                if !first.is_empty() {
                    parts.push(first);
                }
                (parts, whole)
            }
            MDKind::Prime => {
                let mut reduced = Vec::new();
                let mut all_interval = true;
                for c in &node.children {
                    if c.complete {
                        reduced.push(1);
                    } else if is_interval_within(g, &c.vertices) {
                        reduced.push(2);
                    } else {
                        all_interval = false;
                        break;
                    }
                }
                if all_interval && is_interval(&reduced_quotient(g, node, &reduced)) {
                    return (vec![node.vertices.clone()], true);
                }
                (node.children.iter().flat_map(|c| solve(g, c).0).collect(), false)
            }
        }
    }
    let parts = sorted_parts(solve(g, &tree.root).0);
    Ok((parts.len(), ModularPartition { class: GraphClass::Interval, parts }))
}

/// The prime node's quotient with each child expanded to `copies[i]`
/// mutually nonadjacent vertices.
fn reduced_quotient(g: &Graph, node: &MDNode, copies: &[usize]) -> Graph {
    let reps: Vec<usize> = node.children.iter().map(|c| c.vertices.first().unwrap()).collect();
    let offsets: Vec<usize> = copies
        .iter()
        .scan(0, |acc, &c| {
            let o = *acc;
            *acc += c;
            Some(o)
        })
        .collect();
    let total: usize = copies.iter().sum();
    let mut q = Graph::edgeless(total);
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            if g.has_edge(reps[i], reps[j]) {
                for a in 0..copies[i] {
                    for b in 0..copies[j] {
                        q.add_edge(offsets[i] + a, offsets[j] + b).unwrap();
                    }
                }
            }
        }
    }
    q
}

/// Minimum size of a modular partition whose parts all satisfy `pred`,
/// by enumerating every set partition of the vertices.
pub fn brute_gmc(g: &Graph, pred: impl Fn(&Graph) -> bool, force: bool) -> Result<usize> {
    check_guard("brute_gmc", g.n(), 10, force)?;
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    let mut best = usize::MAX;
    let mut rgs = vec![0usize; n];
    loop {
        let k = rgs.iter().max().unwrap() + 1;
        if k < best {
            let mut parts = vec![VertexSet::empty(n); k];
            for (v, &c) in rgs.iter().enumerate() {
                parts[c].insert(v);
            }
            let ok = parts
                .iter()
                .all(|p| g.is_module(p) && pred(&g.induced_subgraph(p)));
            if ok {
                best = k;
            }
        }
        // Next restricted growth string in lexicographic order.
        let mut i = n;
        loop {
            if i == 1 {
                return Ok(best);
            }
            i -= 1;
            let cap = rgs[..i].iter().max().unwrap() + 1;
            if rgs[i] < cap {
                rgs[i] += 1;
                for x in rgs[i + 1..].iter_mut() {
                    *x = 0;
                }
                break;
            }
        }
    }
}

pub fn validate_gmodular_partition(g: &Graph, p: &ModularPartition) -> bool {
    let mut union = VertexSet::empty(g.n());
    for part in &p.parts {
        if part.is_empty() || !union.is_disjoint(part) {
            return false;
        }
        union.union_with(part);
    }
    if union != VertexSet::full(g.n()) {
        return false;
    }
    p.parts
        .iter()
        .all(|part| g.is_module(part) && p.class.holds_for(&g.induced_subgraph(part)))
}
