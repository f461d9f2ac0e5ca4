//! Shared helpers for the integration and acceptance suites: seeded
//! sampling, exhaustive small-graph enumeration, and brute-force oracles
//! kept independent of the library's implementation paths.

#![allow(dead_code)]

use modkit::graph::Graph;
use modkit::VertexSet;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn base_seed() -> u64 {
    std::env::var("MODKIT_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x6d6f646b_69740001)
}

pub fn rng(stream: u64) -> StdRng {
    StdRng::seed_from_u64(base_seed() ^ stream.wrapping_mul(0x9e3779b97f4a7c15))
}

pub fn gnp(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut g = Graph::edgeless(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

pub fn random_graph(rng: &mut StdRng, n: usize) -> Graph {
    let p = rng.gen_range(0.1..0.9);
    gnp(rng, n, p)
}

pub fn random_connected(rng: &mut StdRng, n: usize) -> Graph {
    loop {
        let g = random_graph(rng, n);
        if g.is_connected() {
            return g;
        }
    }
}

/// All labeled graphs on `n` vertices, in edge-mask order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        let mut g = Graph::edgeless(n);
        for (b, &(u, v)) in pairs.iter().enumerate() {
            if mask >> b & 1 == 1 {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    })
}

/// Canonical form as the minimum upper-triangle bitstring over all vertex
/// relabelings; only for n <= 10 (the string fits one u64).
pub fn canonical_form(g: &Graph) -> u64 {
    let n = g.n();
    assert!(n <= 10);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut bits = 0u64;
        let mut at = 0;
        for i in 0..n {
            for j in i + 1..n {
                if g.has_edge(p[i], p[j]) {
                    bits |= 1 << at;
                }
                at += 1;
            }
        }
        best = best.min(bits);
    });
    best
}

fn permute(items: &mut Vec<usize>, at: usize, visit: &mut impl FnMut(&[usize])) {
    if at == items.len() {
        visit(items);
        return;
    }
    for i in at..items.len() {
        items.swap(at, i);
        permute(items, at + 1, visit);
        items.swap(at, i);
    }
}

/// Second graph6 decoder, written against the format description rather
/// than sharing any code with the library parser.
pub fn reference_graph6_decode(text: &str) -> (usize, Vec<(usize, usize)>) {
    let bytes = text.trim().as_bytes();
    let n = (bytes[0] - 63) as usize;
    let mut bits: Vec<bool> = Vec::new();
    for &b in &bytes[1..] {
        let x = b - 63;
        for k in (0..6).rev() {
            bits.push(x >> k & 1 == 1);
        }
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    edges.sort_unstable();
    (n, edges)
}

/// Does `g` admit an interval model realizing it exactly? Endpoint-event
/// search: open/close events, pruning as soon as a coexistence pattern
/// deviates from the adjacency.
pub fn brute_interval_realizable(g: &Graph) -> bool {
    let n = g.n();
    if n > 16 {
        panic!("oracle meant for tiny graphs");
    }
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, w| m | 1 << w))
        .collect();
    fn step(adj: &[u32], opened: u32, closed: u32, open: u32, met: &mut Vec<u32>) -> bool {
        let n = adj.len();
        if closed.count_ones() as usize == n {
            return true;
        }
        for v in 0..n {
            if open >> v & 1 == 1 && adj[v] & !met[v] == 0 {
                // All neighbors already met; closing is safe.
                if step(adj, opened, closed | 1 << v, open & !(1 << v), met) {
                    return true;
                }
            }
        }
        for v in 0..n {
            if opened >> v & 1 == 0 && open & !adj[v] == 0 {
                // No non-neighbor is open, so v may start here.
                let saved = met.clone();
                met[v] |= open;
                for (u, m) in met.iter_mut().enumerate().take(n) {
                    if open >> u & 1 == 1 {
                        *m |= 1 << v;
                    }
                }
                if step(adj, opened | 1 << v, closed, open | 1 << v, met) {
                    return true;
                }
                *met = saved;
            }
        }
        false
    }
    let mut met = vec![0u32; n];
    step(&adj, 0, 0, 0, &mut met)
}

/// All modules of `g` (nonempty vertex subsets), for n <= 16.
pub fn all_modules(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    assert!(n <= 16);
    let mut out = Vec::new();
    for mask in 1u32..1 << n {
        let vs: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let set = VertexSet::from_vertices(n, &vs);
        if g.is_module(&set) {
            out.push(set);
        }
    }
    out
}

pub fn random_order(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.gen_range(0..=i));
    }
    order
}

/// A random interval graph on `n` vertices, as the intersection graph of
/// random integer intervals.
pub fn random_interval_graph(rng: &mut StdRng, n: usize) -> Graph {
    let spans: Vec<(i64, i64)> = (0..n)
        .map(|_| {
            let a = rng.gen_range(0..3 * n as i64);
            let b = rng.gen_range(0..3 * n as i64);
            (a.min(b), a.max(b))
        })
        .collect();
    let mut g = Graph::edgeless(n);
    for u in 0..n {
        for v in u + 1..n {
            if spans[u].0 <= spans[v].1 && spans[v].0 <= spans[u].1 {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}

/// Host graph with a planted module: a random frame graph with one vertex
/// substituted by `module_graph`. Returns the host and the module's
/// vertex set within it.
pub fn plant_module(rng: &mut StdRng, frame_n: usize, module_graph: &Graph) -> (Graph, VertexSet) {
    let frame = random_graph(rng, frame_n);
    let v = rng.gen_range(0..frame_n);
    let host = frame.substitution(v, module_graph).unwrap();
    let start = frame_n - 1;
    let module: Vec<usize> = (start..start + module_graph.n()).collect();
    let set = VertexSet::from_vertices(host.n(), &module);
    (host, set)
}
