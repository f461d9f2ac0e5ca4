//! Simultaneous interval representations: each vertex carries a closed
//! integer interval and a set of labels, and adjacency holds exactly when
//! both intersect. Provides the validator, an exhaustive oracle, the
//! cluster-modular FPT search, and the twin-cover construction.

use crate::bitset::VertexSet;
use crate::covers::is_twin_cover;
use crate::error::{check_guard, Error, Result};
use crate::graph::Graph;
use crate::interval::interval_model;
use crate::modular_partition::cluster_mc;
use std::collections::HashSet;

#[derive(Clone, Debug)]
pub struct SimRep {
    /// Size of the label universe; labels are `0..d` internally and
    /// `1..=d` in JSON.
    pub d: usize,
    pub intervals: Vec<(i64, i64)>,
    /// Label sets with capacity `d`.
    pub labels: Vec<VertexSet>,
}

fn meets(a: (i64, i64), b: (i64, i64)) -> bool {
    a.0 <= b.1 && b.0 <= a.1
}

/// Checks the defining iff-condition for every vertex pair, plus basic
/// shape (one interval and one label set per vertex, labels within the
/// universe, lo <= hi).
pub fn validate_sim_rep(g: &Graph, rep: &SimRep) -> bool {
    let n = g.n();
    if rep.intervals.len() != n || rep.labels.len() != n {
        return false;
    }
    if rep.intervals.iter().any(|&(lo, hi)| lo > hi) {
        return false;
    }
    if rep.labels.iter().any(|l| l.capacity() != rep.d) {
        return false;
    }
    for u in 0..n {
        for v in u + 1..n {
            let adjacent = meets(rep.intervals[u], rep.intervals[v])
                && rep.labels[u].intersects(&rep.labels[v]);
            if adjacent != g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

/// Rescales a representation so all endpoints are distinct while keeping
/// the interval intersection pattern: `[lo, hi]` becomes
/// `[lo*M + v + 1, hi*M + M - v - 2]` with `M = 2n + 2`.
pub fn perturb_distinct(rep: &SimRep) -> SimRep {
    let n = rep.intervals.len() as i64;
    let m = 2 * n + 2;
    let intervals = rep
        .intervals
        .iter()
        .enumerate()
        .map(|(v, &(lo, hi))| (lo * m + v as i64 + 1, hi * m + m - v as i64 - 2))
        .collect();
    SimRep { d: rep.d, intervals, labels: rep.labels.clone() }
}

pub fn sim_rep_to_json(rep: &SimRep) -> serde_json::Value {
    serde_json::json!({
        "d": rep.d,
        "intervals": rep.intervals.iter().map(|&(lo, hi)| vec![lo, hi]).collect::<Vec<_>>(),
        "labels": rep
            .labels
            .iter()
            .map(|l| l.iter().map(|x| x + 1).collect::<Vec<_>>())
            .collect::<Vec<_>>(),
    })
}

pub fn sim_rep_from_json(v: &serde_json::Value) -> Result<SimRep> {
    let bad = |m: &str| Error::InvalidArgument(format!("sim-rep witness: {m}"));
    let d = v["d"].as_u64().ok_or_else(|| bad("missing d"))? as usize;
    let intervals = v["intervals"]
        .as_array()
        .ok_or_else(|| bad("missing intervals"))?
        .iter()
        .map(|pair| {
            let lo = pair[0].as_i64().ok_or_else(|| bad("bad interval"))?;
            let hi = pair[1].as_i64().ok_or_else(|| bad("bad interval"))?;
            Ok((lo, hi))
        })
        .collect::<Result<Vec<_>>>()?;
    let labels = v["labels"]
        .as_array()
        .ok_or_else(|| bad("missing labels"))?
        .iter()
        .map(|set| {
            let mut out = VertexSet::empty(d);
            for x in set.as_array().ok_or_else(|| bad("bad label set"))? {
                let x = x.as_u64().ok_or_else(|| bad("bad label"))? as usize;
                if x == 0 || x > d {
                    return Err(bad(&format!("label {x} outside 1..={d}")));
                }
                out.insert(x - 1);
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SimRep { d, intervals, labels })
}

/// Interval slots with pairwise intersection/disjointness requirements;
/// the arrangement enumerator walks every interleaving of 2t distinct
/// endpoints compatible with them.
struct SlotProblem {
    t: usize,
    required: Vec<u64>,
    disjoint: Vec<u64>,
}

struct Arrangement {
    open_pos: Vec<i64>,
    close_pos: Vec<i64>,
    /// Per slot, which slots its interval intersects.
    met: Vec<u64>,
}

fn enumerate_arrangements(p: &SlotProblem, visit: &mut impl FnMut(&Arrangement) -> bool) -> bool {
    let t = p.t;
    let mut arr = Arrangement {
        open_pos: vec![0; t],
        close_pos: vec![0; t],
        met: vec![0; t],
    };
    let mut opened = 0u64;
    let mut open = 0u64;
    fn step(
        p: &SlotProblem,
        arr: &mut Arrangement,
        opened: &mut u64,
        open: &mut u64,
        pos: i64,
        visit: &mut impl FnMut(&Arrangement) -> bool,
    ) -> bool {
        if pos == 2 * p.t as i64 {
            return visit(arr);
        }
        for s in 0..p.t {
            if *open >> s & 1 == 1 {
                // Close s: every slot it must intersect has to have met it.
                if p.required[s] & !arr.met[s] != 0 {
                    continue;
                }
                arr.close_pos[s] = pos;
                *open &= !(1 << s);
                if step(p, arr, opened, open, pos + 1, visit) {
                    return true;
                }
                *open |= 1 << s;
            }
        }
        for s in 0..p.t {
            if *opened >> s & 1 == 0 {
                // Open s, unless a mandated-disjoint partner is open now.
                if p.disjoint[s] & *open != 0 {
                    continue;
                }
                arr.open_pos[s] = pos;
                let before = arr.met[s];
                arr.met[s] |= *open;
                for o in 0..p.t {
                    if *open >> o & 1 == 1 {
                        arr.met[o] |= 1 << s;
                    }
                }
                *opened |= 1 << s;
                *open |= 1 << s;
                if step(p, arr, opened, open, pos + 1, visit) {
                    return true;
                }
                *open &= !(1 << s);
                *opened &= !(1 << s);
                for o in 0..p.t {
                    arr.met[o] &= !(1u64 << s);
                }
                arr.met[s] = before;
            }
        }
        false
    }
    step(p, &mut arr, &mut opened, &mut open, 0, visit)
}

/// Backtracking label assignment: adjacent vertices need intersecting
/// sets, nonadjacent vertices with intersecting intervals need disjoint
/// ones. Symmetry is broken by forcing the first label onto the least
/// vertex that has a neighbor.
fn label_search(n: usize, d: usize, edges: &[u64], pattern: &[u64]) -> Option<Vec<u64>> {
    let forced = (0..n).find(|&v| edges[v] != 0);
    let all = if d >= 64 { u64::MAX } else { (1u64 << d) - 1 };
    fn rec(
        n: usize,
        all: u64,
        edges: &[u64],
        pattern: &[u64],
        forced: Option<usize>,
        labels: &mut Vec<u64>,
        v: usize,
    ) -> bool {
        if v == n {
            return true;
        }
        let mut mask = 0u64;
        loop {
            let mut ok = forced != Some(v) || mask & 1 == 1;
            if ok {
                for (u, &prior) in labels.iter().enumerate().take(v) {
                    let share = prior & mask != 0;
                    if edges[v] >> u & 1 == 1 {
                        if !share {
                            ok = false;
                            break;
                        }
                    } else if pattern[v] >> u & 1 == 1 && share {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                labels[v] = mask;
                if rec(n, all, edges, pattern, forced, labels, v + 1) {
                    return true;
                }
            }
            if mask == all {
                return false;
            }
            mask += 1;
        }
    }
    let mut labels = vec![0u64; n];
    rec(n, all, edges, pattern, forced, &mut labels, 0).then_some(labels)
}

fn masks_of(g: &Graph) -> Vec<u64> {
    g.vertices()
        .map(|v| g.neighbors(v).iter().fold(0u64, |m, w| m | 1 << w))
        .collect()
}

fn labels_to_sets(d: usize, masks: &[u64]) -> Vec<VertexSet> {
    masks
        .iter()
        .map(|&m| {
            let mut s = VertexSet::empty(d);
            for b in 0..d {
                if m >> b & 1 == 1 {
                    s.insert(b);
                }
            }
            s
        })
        .collect()
}

/// Exhaustive decision with no shortcuts: enumerate interval arrangements
/// whose pattern covers every edge, then search label assignments.
fn decide_impl(g: &Graph, d: usize) -> Option<SimRep> {
    let n = g.n();
    if n == 0 {
        return Some(SimRep { d, intervals: vec![], labels: vec![] });
    }
    let edges = masks_of(g);
    let problem = SlotProblem { t: n, required: edges.clone(), disjoint: vec![0; n] };
    let mut failed: HashSet<Vec<u64>> = HashSet::new();
    let mut found: Option<SimRep> = None;
    enumerate_arrangements(&problem, &mut |arr| {
        if failed.contains(&arr.met) {
            return false;
        }
        match label_search(n, d, &edges, &arr.met) {
            Some(masks) => {
                let rep = SimRep {
                    d,
                    intervals: (0..n).map(|v| (arr.open_pos[v], arr.close_pos[v])).collect(),
                    labels: labels_to_sets(d, &masks),
                };
                assert!(validate_sim_rep(g, &rep));
                found = Some(rep);
                true
            }
            None => {
                failed.insert(arr.met.clone());
                false
            }
        }
    });
    found
}

/// Does `g` admit a representation with `d` labels? Pure enumeration, the
/// desk-scale oracle.
pub fn si_decide(g: &Graph, d: usize, force: bool) -> Result<(bool, Option<SimRep>)> {
    check_guard("si_decide", g.n(), 6, force)?;
    check_guard("si_decide labels", d, 3, force)?;
    if g.n() > 32 || d > 63 {
        return Err(Error::InvalidArgument(
            "enumeration oracle supports n <= 32 and d <= 63".into(),
        ));
    }
    match decide_impl(g, d) {
        Some(rep) => Ok((true, Some(rep))),
        None => Ok((false, None)),
    }
}

fn edgeless_rep(n: usize, d: usize) -> SimRep {
    SimRep {
        d,
        intervals: (0..n as i64).map(|i| (2 * i, 2 * i + 1)).collect(),
        labels: vec![VertexSet::empty(d); n],
    }
}

fn interval_rep(g: &Graph) -> Option<SimRep> {
    let model = interval_model(g)?;
    let one = VertexSet::full(1);
    Some(SimRep { d: 1, intervals: model, labels: vec![one; g.n()] })
}

/// Least `d` admitting a representation, with a witness. Edgeless graphs
/// need no labels and interval graphs exactly one; beyond that the
/// decision oracle is searched upward.
pub fn si_exact(g: &Graph, force: bool) -> Result<(usize, SimRep)> {
    if g.is_edgeless() {
        return Ok((0, edgeless_rep(g.n(), 0)));
    }
    if let Some(rep) = interval_rep(g) {
        return Ok((1, rep));
    }
    check_guard("si_exact", g.n(), 6, force)?;
    let cap = g.edge_count();
    for d in 2..=cap {
        check_guard("si_exact labels", d, 3, force)?;
        if let Some(rep) = decide_impl(g, d) {
            return Ok((d, rep));
        }
    }
    unreachable!("one label per edge always represents the graph")
}

/// Modes for a module whose contracted form has at least two vertices.
#[derive(Clone, Copy, PartialEq)]
enum ModuleMode {
    /// Two representatives kept, their intervals forced disjoint.
    DisjointPair,
    /// All representatives share one interval; needs size <= d labels.
    Intersecting,
}

/// Decides the same question as [`si_decide`] along the cluster-modular
/// route: strip isolated cliques, contract the cliques inside every
/// module, and for each module either keep two representatives with
/// disjoint intervals or collapse it onto a single shared interval. Every
/// surviving candidate is a small slot arrangement plus a label search.
pub fn si_fpt(g: &Graph, d: usize, force: bool) -> Result<(bool, Option<SimRep>)> {
    if g.n() == 0 {
        return Ok((true, Some(SimRep { d, intervals: vec![], labels: vec![] })));
    }
    let (k, _) = cluster_mc(g)?;
    check_guard("si_fpt cluster-modular cardinality", k, 3, force)?;
    check_guard("si_fpt labels", d, 3, force)?;
    if 2 * k > 63 || k * d.max(2) > 63 {
        return Err(Error::InvalidArgument(
            "si_fpt: slot masks support at most 63 active intervals".into(),
        ));
    }
    if d == 0 {
        return Ok(if g.is_edgeless() { (true, Some(edgeless_rep(g.n(), 0))) } else { (false, None) });
    }
    if g.is_edgeless() {
        return Ok((true, Some(edgeless_rep(g.n(), d))));
    }
    if let Some(mut rep) = interval_rep(g) {
        rep.d = d;
        for l in rep.labels.iter_mut() {
            let mut s = VertexSet::empty(d);
            if !l.is_empty() {
                s.insert(0);
            }
            *l = s;
        }
        return Ok((true, Some(rep)));
    }
    if d == 1 {
        return Ok((false, None));
    }

    // Isolated cliques are represented separately on the far left.
    let comps = g.connected_components();
    let mut isolated: Vec<VertexSet> = Vec::new();
    let mut rest = VertexSet::empty(g.n());
    for c in &comps {
        if g.is_complete_within(c) {
            isolated.push(c.clone());
        } else {
            rest.union_with(c);
        }
    }
    if rest.is_empty() {
        // Purely a union of cliques: one label suffices.
        return Ok((true, Some(cluster_union_rep(g, d, &isolated))));
    }
    let (g2, back) = g.induced_subgraph_with_map(&rest);
    let (_, partition) = cluster_mc(&g2)?;

    // Contract each clique of each module to its least vertex.
    let mut rep_g2_of = vec![usize::MAX; g2.n()];
    let mut keep = VertexSet::empty(g2.n());
    let mut module_rep_g2: Vec<Vec<usize>> = vec![Vec::new(); partition.parts.len()];
    for (mi, part) in partition.parts.iter().enumerate() {
        for clique in g2.components_within(part) {
            let r = clique.first().unwrap();
            for v in clique.iter() {
                rep_g2_of[v] = r;
            }
            module_rep_g2[mi].push(r);
            keep.insert(r);
        }
    }
    let (g3, back3) = g2.induced_subgraph_with_map(&keep);
    let mut g3_id = vec![usize::MAX; g2.n()];
    for (i, &v2) in back3.iter().enumerate() {
        g3_id[v2] = i;
    }
    // Module representatives and clique pointers in g3 ids.
    let module_reps: Vec<Vec<usize>> = module_rep_g2
        .iter()
        .map(|m| {
            let mut ids: Vec<usize> = m.iter().map(|&r| g3_id[r]).collect();
            ids.sort_unstable();
            ids
        })
        .collect();
    let rep_of: Vec<usize> = (0..g2.n()).map(|v| g3_id[rep_g2_of[v]]).collect();

    let big: Vec<usize> =
        (0..module_reps.len()).filter(|&mi| module_reps[mi].len() >= 2).collect();
    for mode_bits in 0u32..1 << big.len() {
        let mut modes = vec![ModuleMode::Intersecting; module_reps.len()];
        let mut feasible = true;
        for (bit, &mi) in big.iter().enumerate() {
            modes[mi] = if mode_bits >> bit & 1 == 0 {
                ModuleMode::DisjointPair
            } else {
                ModuleMode::Intersecting
            };
        }
        for (mi, m) in module_reps.iter().enumerate() {
            if m.len() >= 2 && modes[mi] == ModuleMode::Intersecting && m.len() > d {
                feasible = false;
            }
        }
        if !feasible {
            continue;
        }
        if let Some(rep) = try_mode(g, &g2, &g3, d, &modes, &module_reps, &back, &rep_of, &isolated) {
            return Ok((true, Some(rep)));
        }
    }
    Ok((false, None))
}

/// Active vertices of one candidate: in disjoint-pair mode only the two
/// least representatives of the module take part in the search; the rest
/// are re-attached afterwards as carved sub-intervals.
#[allow(clippy::too_many_arguments)]
fn try_mode(
    g: &Graph,
    g2: &Graph,
    g3: &Graph,
    d: usize,
    modes: &[ModuleMode],
    module_reps: &[Vec<usize>],
    back: &[usize],
    rep_of: &[usize],
    isolated: &[VertexSet],
) -> Option<SimRep> {
    // Active representatives of this candidate, compacted so the label
    // search runs over at most k * max(2, d) vertices however large the
    // contracted graph is: in disjoint mode only the two least
    // representatives take part, the rest re-attach on expansion.
    let mut slot_of_active: Vec<usize> = Vec::new();
    let mut active_ids: Vec<usize> = Vec::new();
    let mut disjoint_pairs: Vec<(usize, usize)> = Vec::new();
    let mut t = 0usize;
    for (mi, m) in module_reps.iter().enumerate() {
        match (m.len(), modes[mi]) {
            (1, _) => {
                active_ids.push(m[0]);
                slot_of_active.push(t);
                t += 1;
            }
            (_, ModuleMode::DisjointPair) => {
                active_ids.push(m[0]);
                slot_of_active.push(t);
                active_ids.push(m[1]);
                slot_of_active.push(t + 1);
                disjoint_pairs.push((t, t + 1));
                t += 2;
            }
            (_, ModuleMode::Intersecting) => {
                for &r in m {
                    active_ids.push(r);
                    slot_of_active.push(t);
                }
                t += 1;
            }
        }
    }
    let na = active_ids.len();
    debug_assert!(na <= 63 && t <= 63, "caller bounds the candidate size");
    let mut required = vec![0u64; t];
    let mut edges_compact = vec![0u64; na];
    for i in 0..na {
        for j in i + 1..na {
            if g3.has_edge(active_ids[i], active_ids[j]) {
                edges_compact[i] |= 1 << j;
                edges_compact[j] |= 1 << i;
                let (si, sj) = (slot_of_active[i], slot_of_active[j]);
                if si != sj {
                    required[si] |= 1 << sj;
                    required[sj] |= 1 << si;
                }
            }
        }
    }
    let mut disjoint = vec![0u64; t];
    for &(a, b) in &disjoint_pairs {
        disjoint[a] |= 1 << b;
        disjoint[b] |= 1 << a;
    }

    let problem = SlotProblem { t, required, disjoint };
    let mut failed: HashSet<Vec<u64>> = HashSet::new();
    let mut result: Option<SimRep> = None;
    enumerate_arrangements(&problem, &mut |arr| {
        // Pattern over active vertices: same slot or intersecting slots.
        let mut pattern = vec![0u64; na];
        for i in 0..na {
            let si = slot_of_active[i];
            for (j, &sj) in slot_of_active.iter().enumerate() {
                if j != i && (sj == si || arr.met[si] >> sj & 1 == 1) {
                    pattern[i] |= 1 << j;
                }
            }
        }
        if failed.contains(&pattern) {
            return false;
        }
        match label_search(na, d, &edges_compact, &pattern) {
            Some(masks) => {
                result = Some(expand_rep(
                    g, g2, g3, d, arr, &masks, &active_ids, &slot_of_active, modes,
                    module_reps, back, rep_of, isolated,
                ));
                true
            }
            None => {
                failed.insert(pattern);
                false
            }
        }
    });
    result
}

/// Rebuilds a full representation of the original graph from a slot
/// arrangement on the contracted one: deleted module representatives are
/// carved from the left kept interval's right end, cliques copy their
/// representative, and isolated cliques sit on the far left.
#[allow(clippy::too_many_arguments)]
fn expand_rep(
    g: &Graph,
    g2: &Graph,
    g3: &Graph,
    d: usize,
    arr: &Arrangement,
    masks: &[u64],
    active_ids: &[usize],
    slot_of_active: &[usize],
    modes: &[ModuleMode],
    module_reps: &[Vec<usize>],
    back: &[usize],
    rep_of: &[usize],
    isolated: &[VertexSet],
) -> SimRep {
    let scale = g3.n() as i64 + 2;
    let mut iv3: Vec<(i64, i64)> = vec![(0, 0); g3.n()];
    let mut lab3: Vec<u64> = vec![0; g3.n()];
    for (i, &v) in active_ids.iter().enumerate() {
        let s = slot_of_active[i];
        iv3[v] = (arr.open_pos[s] * scale, arr.close_pos[s] * scale);
        lab3[v] = masks[i];
    }

    for (mi, m) in module_reps.iter().enumerate() {
        if m.len() > 2 && modes[mi] == ModuleMode::DisjointPair {
            let (a, b) = (m[0], m[1]);
            // The left kept interval donates carved points for itself and
            // every deleted representative; every module neighbor covers
            // [right - scale, right], so single points there stay correct.
            let left = if iv3[a].1 < iv3[b].0 { a } else { b };
            let right_end = iv3[left].1;
            let left_labels = lab3[left];
            let mut carved: Vec<usize> = vec![left];
            carved.extend(m[2..].iter().copied());
            for (j, &r) in carved.iter().enumerate() {
                iv3[r] = (right_end - j as i64, right_end - j as i64);
                lab3[r] = left_labels;
            }
        }
    }

    // Expand cliques: every g2 vertex copies its representative.
    let mut iv2 = vec![(0i64, 0i64); g2.n()];
    let mut lab2 = vec![0u64; g2.n()];
    for v in 0..g2.n() {
        let r = rep_of[v];
        iv2[v] = iv3[r];
        lab2[v] = lab3[r];
    }

    // Assemble over the original graph; isolated cliques go far left.
    let mut intervals = vec![(0i64, 0i64); g.n()];
    let mut labels = vec![0u64; g.n()];
    for (v2, &orig) in back.iter().enumerate() {
        intervals[orig] = iv2[v2];
        labels[orig] = lab2[v2];
    }
    for (j, clique) in isolated.iter().enumerate() {
        let lo = -2 * (isolated.len() as i64 - j as i64);
        for v in clique.iter() {
            intervals[v] = (lo, lo + 1);
            labels[v] = 1;
        }
    }
    let rep = SimRep { d, intervals, labels: labels_to_sets(d, &labels) };
    assert!(validate_sim_rep(g, &rep), "expanded representation must validate");
    rep
}

/// Representation for graphs whose every component is a clique: disjoint
/// blocks sharing one label.
fn cluster_union_rep(g: &Graph, d: usize, cliques: &[VertexSet]) -> SimRep {
    let mut intervals = vec![(0i64, 0i64); g.n()];
    let mut labels = vec![0u64; g.n()];
    for (j, clique) in cliques.iter().enumerate() {
        let lo = 2 * j as i64;
        for v in clique.iter() {
            intervals[v] = (lo, lo + 1);
            labels[v] = 1;
        }
    }
    let rep = SimRep { d, intervals, labels: labels_to_sets(d, &labels) };
    assert!(validate_sim_rep(g, &rep));
    rep
}

/// The twin-cover construction: components of `G \ X` are cliques of
/// twins drawn as disjoint blocks (those without neighbors in `X`
/// leftmost), `X` shares one long interval over the attached blocks, one
/// label per edge inside `X`, and one extra label per cover vertex that
/// also marks its outside neighbors.
pub fn si_from_twin_cover(g: &Graph, x: &VertexSet) -> Result<SimRep> {
    if !is_twin_cover(g, x) {
        return Err(Error::InvalidArgument("si_from_twin_cover: not a twin-cover".into()));
    }
    let n = g.n();
    let xs: Vec<usize> = x.iter().collect();
    let k = xs.len();
    let x_edges: Vec<(usize, usize)> =
        g.edges().into_iter().filter(|&(a, b)| x.contains(a) && x.contains(b)).collect();
    let m = x_edges.len();
    let d = (m + k).max(1);

    let outside = x.complement();
    let cliques = g.components_within(&outside);
    let has_x_neighbor =
        |c: &VertexSet| c.iter().any(|v| g.neighbors(v).intersects(x));
    let mut blocks: Vec<&VertexSet> = Vec::new();
    let mut first_attached = 0usize;
    for c in cliques.iter().filter(|c| !has_x_neighbor(c)) {
        blocks.push(c);
        first_attached += 1;
    }
    for c in cliques.iter().filter(|c| has_x_neighbor(c)) {
        blocks.push(c);
    }

    let mut intervals = vec![(0i64, 0i64); n];
    let mut labels = vec![VertexSet::empty(d); n];

    for (j, block) in blocks.iter().enumerate() {
        let lo = 2 * j as i64;
        for v in block.iter() {
            intervals[v] = (lo, lo + 1);
        }
    }
    let x_interval = (2 * first_attached as i64, 2 * blocks.len() as i64 + 1);
    for (rank, &xv) in xs.iter().enumerate() {
        intervals[xv] = x_interval;
        labels[xv].insert(m + rank);
        for (e, &(a, b)) in x_edges.iter().enumerate() {
            if a == xv || b == xv {
                labels[xv].insert(e);
            }
        }
    }
    for (j, block) in blocks.iter().enumerate() {
        for v in block.iter() {
            if j < first_attached {
                labels[v].insert(0);
            } else {
                for (rank, &xv) in xs.iter().enumerate() {
                    if g.has_edge(v, xv) {
                        labels[v].insert(m + rank);
                    }
                }
            }
        }
    }
    let rep = SimRep { d, intervals, labels };
    debug_assert!(validate_sim_rep(g, &rep));
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn validator_examples() {
        // Edgeless: empty labels, any intervals, d = 0.
        let g = Graph::edgeless(3);
        let rep = edgeless_rep(3, 0);
        assert!(validate_sim_rep(&g, &rep));

        // An interval graph with its model and the single label.
        let p4 = generators::path(4);
        let rep = interval_rep(&p4).unwrap();
        assert!(validate_sim_rep(&p4, &rep));

        // K_2 with disjoint intervals is invalid even with equal labels.
        let k2 = generators::complete(2);
        let one = VertexSet::full(1);
        let bad = SimRep { d: 1, intervals: vec![(0, 1), (2, 3)], labels: vec![one.clone(), one] };
        assert!(!validate_sim_rep(&k2, &bad));
    }

    #[test]
    fn decide_on_cycles_and_bicliques() {
        let c4 = generators::cycle(4);
        assert!(!si_decide(&c4, 1, false).unwrap().0);
        let (ok, rep) = si_decide(&c4, 2, false).unwrap();
        assert!(ok);
        assert!(validate_sim_rep(&c4, &rep.unwrap()));

        let p4 = generators::path(4);
        assert!(si_decide(&p4, 1, false).unwrap().0);

        let k23 = generators::complete_bipartite(2, 3);
        assert!(!si_decide(&k23, 1, false).unwrap().0);
        assert!(si_decide(&k23, 2, false).unwrap().0);
    }

    #[test]
    fn exact_values() {
        assert_eq!(si_exact(&Graph::edgeless(4), false).unwrap().0, 0);
        assert_eq!(si_exact(&generators::path(5), false).unwrap().0, 1);
        assert_eq!(si_exact(&generators::cycle(4), false).unwrap().0, 2);
        let (v, rep) = si_exact(&generators::complete_bipartite(3, 3), false).unwrap();
        assert_eq!(v, 3);
        assert!(validate_sim_rep(&generators::complete_bipartite(3, 3), &rep));
    }

    #[test]
    fn monotone_in_d() {
        let g = generators::cycle(4);
        assert!(si_decide(&g, 2, false).unwrap().0);
        assert!(si_decide(&g, 3, false).unwrap().0);
    }

    #[test]
    fn fpt_matches_oracle_on_small_cases() {
        let k23 = generators::complete_bipartite(2, 3);
        assert!(!si_fpt(&k23, 1, false).unwrap().0);
        let (ok, rep) = si_fpt(&k23, 2, false).unwrap();
        assert!(ok);
        assert!(validate_sim_rep(&k23, &rep.unwrap()));

        let c4 = generators::cycle(4);
        assert!(!si_fpt(&c4, 1, false).unwrap().0);
        assert!(si_fpt(&c4, 2, false).unwrap().0);
    }

    #[test]
    fn twin_cover_construction() {
        // Empty cover of a complete graph: one label.
        let k4 = generators::complete(4);
        let rep = si_from_twin_cover(&k4, &VertexSet::empty(4)).unwrap();
        assert_eq!(rep.d, 1);
        assert!(validate_sim_rep(&k4, &rep));

        // P_4 with cover {1, 2}: at most 3 labels.
        let p4 = generators::path(4);
        let rep = si_from_twin_cover(&p4, &VertexSet::from_vertices(4, &[1, 2])).unwrap();
        assert!(rep.d <= 3);
        assert!(validate_sim_rep(&p4, &rep));

        // K_{3,3} with one side: at most 6 labels.
        let k33 = generators::complete_bipartite(3, 3);
        let rep = si_from_twin_cover(&k33, &VertexSet::from_vertices(6, &[0, 1, 2])).unwrap();
        assert!(rep.d <= 6);
        assert!(validate_sim_rep(&k33, &rep));

        // A non-cover is rejected.
        assert!(si_from_twin_cover(&p4, &VertexSet::from_vertices(4, &[0])).is_err());
    }

    #[test]
    fn perturbation_keeps_patterns() {
        let k33 = generators::complete_bipartite(3, 3);
        let rep = si_from_twin_cover(&k33, &VertexSet::from_vertices(6, &[0, 1, 2])).unwrap();
        let p = perturb_distinct(&rep);
        assert!(validate_sim_rep(&k33, &p));
        let mut endpoints: Vec<i64> =
            p.intervals.iter().flat_map(|&(a, b)| [a, b]).collect();
        endpoints.sort_unstable();
        endpoints.dedup();
        assert_eq!(endpoints.len(), 2 * k33.n());
    }

    #[test]
    fn json_roundtrip() {
        let c4 = generators::cycle(4);
        let rep = si_exact(&c4, false).unwrap().1;
        let j = sim_rep_to_json(&rep);
        let back = sim_rep_from_json(&j).unwrap();
        assert!(validate_sim_rep(&c4, &back));
    }
}
