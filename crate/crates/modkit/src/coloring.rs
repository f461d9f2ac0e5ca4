//! Exact graph coloring on small graphs, used as the inner step of the
//! thinness search (the classes of a consistent solution are a proper
//! coloring of the incompatibility graph).

use crate::error::{check_guard, Result};
use crate::graph::Graph;

/// Adjacency as one word per vertex; callers guarantee `n <= 64`.
pub(crate) fn mask_rows(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, w| m | 1 << w))
        .collect()
}

/// Greedy clique, a lower bound for the chromatic number.
pub(crate) fn greedy_clique(adj: &[u64], members: u64) -> u32 {
    let mut order: Vec<usize> = (0..adj.len()).filter(|&v| members >> v & 1 == 1).collect();
    order.sort_by_key(|&v| std::cmp::Reverse((adj[v] & members).count_ones()));
    let mut best = 0;
    for &start in &order {
        let mut clique = 1u32;
        let mut allowed = adj[start] & members;
        for &v in &order {
            if allowed >> v & 1 == 1 {
                clique += 1;
                allowed &= adj[v];
            }
        }
        best = best.max(clique);
    }
    best
}

fn try_color(adj: &[u64], order: &[usize], colors: u32, assigned: &mut [u32], at: usize) -> bool {
    if at == order.len() {
        return true;
    }
    let v = order[at];
    let used_before = order[..at].iter().map(|&u| assigned[u] + 1).max().unwrap_or(0);
    for c in 0..colors.min(used_before + 1) {
        if order[..at].iter().all(|&u| assigned[u] != c || adj[v] >> u & 1 == 0) {
            assigned[v] = c;
            if try_color(adj, order, colors, assigned, at + 1) {
                return true;
            }
        }
    }
    false
}

/// Exact chromatic number over vertices in `members`.
pub(crate) fn mask_chromatic(adj: &[u64], members: u64) -> u32 {
    if members == 0 {
        return 0;
    }
    let mut order: Vec<usize> = (0..adj.len()).filter(|&v| members >> v & 1 == 1).collect();
    order.sort_by_key(|&v| std::cmp::Reverse((adj[v] & members).count_ones()));
    let masked: Vec<u64> = adj.iter().map(|&r| r & members).collect();
    let mut k = greedy_clique(&masked, members);
    let mut assigned = vec![0u32; adj.len()];
    while !try_color(&masked, &order, k, &mut assigned, 0) {
        k += 1;
    }
    k
}

/// Lexicographically least proper coloring with exactly `k` colors,
/// as one color id per vertex.
pub(crate) fn mask_color_with(adj: &[u64], n: usize, k: u32) -> Option<Vec<u32>> {
    fn rec(adj: &[u64], n: usize, k: u32, assigned: &mut Vec<u32>, v: usize) -> bool {
        if v == n {
            return true;
        }
        let used = assigned[..v].iter().copied().max().map_or(0, |m| m + 1);
        for c in 0..k.min(used + 1) {
            if (0..v).all(|u| assigned[u] != c || adj[v] >> u & 1 == 0) {
                assigned[v] = c;
                if rec(adj, n, k, assigned, v + 1) {
                    return true;
                }
            }
        }
        false
    }
    let mut assigned = vec![0u32; n];
    rec(adj, n, k, &mut assigned, 0).then_some(assigned)
}

/// Exact chromatic number by branch and bound with a clique lower bound.
pub fn chromatic_number(g: &Graph, force: bool) -> Result<usize> {
    check_guard("chromatic_number", g.n(), 16, force)?;
    if g.n() == 0 {
        return Ok(0);
    }
    Ok(mask_chromatic(&mask_rows(g), (1u64 << g.n()) - 1) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn named_values() {
        assert_eq!(chromatic_number(&generators::complete(4), false).unwrap(), 4);
        assert_eq!(chromatic_number(&generators::cycle(5), false).unwrap(), 3);
        assert_eq!(chromatic_number(&Graph::edgeless(6), false).unwrap(), 1);
        assert_eq!(chromatic_number(&generators::cycle(6), false).unwrap(), 2);
        assert_eq!(chromatic_number(&generators::complete_bipartite(3, 3), false).unwrap(), 2);
    }

    #[test]
    fn guard_fires() {
        assert!(chromatic_number(&Graph::edgeless(17), false).is_err());
        assert!(chromatic_number(&Graph::edgeless(17), true).is_ok());
    }

    #[test]
    fn coloring_witness_is_proper_and_lex_least() {
        let g = generators::cycle(5);
        let adj = mask_rows(&g);
        assert!(mask_color_with(&adj, 5, 2).is_none());
        let c = mask_color_with(&adj, 5, 3).unwrap();
        for (u, v) in g.edges() {
            assert_ne!(c[u], c[v]);
        }
        assert_eq!(c[0], 0);
    }
}
