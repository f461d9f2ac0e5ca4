//! Linear mim-width: the mim of a cut is the largest induced matching in
//! the bipartite graph of cut edges, a layout's width is the maximum over
//! its prefix cuts, and the exact value is a bottleneck search over the
//! subset lattice. Also hosts the recursive substituted-claw family whose
//! canonical layout realizes width equal to its level.

use crate::bitset::VertexSet;
use crate::error::{check_guard, Error, Result};
use crate::graph::{generators, Graph};
use std::cmp::Reverse;
use std::collections::BinaryHeap;

/// Maximum induced matching among the edges crossing the cut `(s, V \ s)`.
pub fn cut_mim(g: &Graph, s: &VertexSet) -> usize {
    let t = s.complement();
    let mut cut_edges: Vec<(usize, usize)> = Vec::new();
    for a in s.iter() {
        for b in g.neighbors(a).intersection(&t).iter() {
            cut_edges.push((a, b));
        }
    }
    let m = cut_edges.len();
    if m == 0 {
        return 0;
    }
    // Two cut edges conflict when they share an endpoint or a cut edge
    // joins their endpoints; an induced matching is an independent set in
    // this conflict structure.
    let mut compatible: Vec<VertexSet> = vec![VertexSet::empty(m); m];
    for i in 0..m {
        let (a1, b1) = cut_edges[i];
        for j in i + 1..m {
            let (a2, b2) = cut_edges[j];
            let conflict = a1 == a2 || b1 == b2 || g.has_edge(a1, b2) || g.has_edge(a2, b1);
            if !conflict {
                compatible[i].insert(j);
                compatible[j].insert(i);
            }
        }
    }
    // Deepen on the target size, picking edges in ascending index order so
    // no matching is explored twice; refutations stay cheap because a pick
    // shrinks the compatible pool hard when conflicts are dense.
    fn extend(compatible: &[VertexSet], cand: &VertexSet, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if cand.count() < need {
            return false;
        }
        let mut rest = cand.clone();
        while let Some(e) = rest.first() {
            rest.remove(e);
            if extend(compatible, &rest.intersection(&compatible[e]), need - 1) {
                return true;
            }
        }
        false
    }
    let mut best = 0usize;
    let all = VertexSet::full(m);
    while best < m && extend(&compatible, &all, best + 1) {
        best += 1;
    }
    best
}

/// Maximum cut mim over the proper prefixes of the layout.
pub fn layout_mimw(g: &Graph, layout: &[usize]) -> usize {
    let n = g.n();
    assert_eq!(layout.len(), n, "layout must order every vertex");
    let mut seen = vec![false; n];
    for &v in layout {
        assert!(v < n && !seen[v], "layout is not a permutation");
        seen[v] = true;
    }
    let mut prefix = VertexSet::empty(n);
    let mut best = 0;
    for &v in &layout[..n.saturating_sub(1)] {
        prefix.insert(v);
        best = best.max(cut_mim(g, &prefix));
    }
    best
}

/// Exact linear mim-width with a witness layout: a bottleneck Dijkstra
/// over the subset lattice, evaluating cut mims lazily so only subsets
/// reachable below the answer are ever costed.
pub fn lmimw_exact(g: &Graph, force: bool) -> Result<(usize, Vec<usize>)> {
    check_guard("lmimw_exact", g.n(), 16, force)?;
    if g.n() > 24 {
        return Err(Error::InvalidArgument("subset lattice beyond n = 24".into()));
    }
    let n = g.n();
    if n == 0 {
        return Ok((0, vec![]));
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut cost = vec![u8::MAX; 1 << n];
    let mut reached = vec![u8::MAX; 1 << n];
    let mut parent_vertex = vec![u8::MAX; 1 << n];
    let mut heap: BinaryHeap<Reverse<(u8, u32)>> = BinaryHeap::new();
    reached[0] = 0;
    heap.push(Reverse((0, 0)));
    let cut_of = |mask: u32, cost: &mut Vec<u8>| -> u8 {
        if cost[mask as usize] == u8::MAX {
            let s = VertexSet::from_vertices(
                n,
                &(0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>(),
            );
            cost[mask as usize] = cut_mim(g, &s) as u8;
        }
        cost[mask as usize]
    };
    while let Some(Reverse((val, mask))) = heap.pop() {
        if val > reached[mask as usize] {
            continue;
        }
        if mask == full {
            let mut layout = Vec::with_capacity(n);
            let mut cur = full;
            while cur != 0 {
                let v = parent_vertex[cur as usize] as usize;
                layout.push(v);
                cur &= !(1 << v);
            }
            layout.reverse();
            return Ok((val as usize, layout));
        }
        for v in 0..n {
            if mask >> v & 1 == 1 {
                continue;
            }
            let next = mask | 1 << v;
            // The full set is not a cut; intermediate prefixes are.
            let step = if next == full { 0 } else { cut_of(next, &mut cost) };
            let nval = val.max(step);
            if nval < reached[next as usize] {
                reached[next as usize] = nval;
                parent_vertex[next as usize] = v as u8;
                heap.push(Reverse((nval, next)));
            }
        }
    }
    unreachable!("the full set is always reachable")
}

/// Level `n` of the substituted-claw family: level 0 is a single vertex,
/// and each next level substitutes every leaf of a bipartite claw by a
/// copy of the previous level. Sizes follow |next| = 4 + 3 |prev|.
///
/// Vertex layout at each level: 0 is the claw center, 1..=3 the middle
/// vertices, then three blocks of the previous level; middle vertex `i`
/// attaches to block `3 - i`.
pub fn hn_graph(level: usize, force: bool) -> Result<Graph> {
    check_guard("hn_graph", level, 4, force)?;
    let mut g = generators::complete(1);
    for _ in 0..level {
        let mut next = generators::bipartite_claw();
        for leaf in [6, 5, 4] {
            next = next.substitution(leaf, &g).unwrap();
        }
        g = next;
    }
    Ok(g)
}

/// The layout that realizes width equal to the level: recursively, block 1
/// of the previous level, the two middle vertices attached to blocks 1 and
/// 2, block 2, the center, the last middle vertex, block 3.
pub fn hn_canonical_layout(level: usize, force: bool) -> Result<Vec<usize>> {
    check_guard("hn_canonical_layout", level, 3, force)?;
    let mut layout = vec![0usize];
    let mut size = 1usize;
    for _ in 0..level {
        let b3 = 4;
        let b2 = 4 + size;
        let b1 = 4 + 2 * size;
        let mut next = Vec::with_capacity(4 + 3 * size);
        next.extend(layout.iter().map(|&v| v + b1));
        next.push(1);
        next.push(2);
        next.extend(layout.iter().map(|&v| v + b2));
        next.push(0);
        next.push(3);
        next.extend(layout.iter().map(|&v| v + b3));
        layout = next;
        size = 4 + 3 * size;
    }
    Ok(layout)
}
