//! Oracle-equivalence suites behind `modkit selfcheck`: every fast
//! algorithm is replayed against its brute-force counterpart on seeded
//! random inputs, and every emitted witness is re-validated. Sampling is
//! reproducible via the MODKIT_SEED environment variable.

use modkit::covers::{neighborhood_diversity, twin_cover_exact, vertex_cover_exact};
use modkit::error::Error;
use modkit::graph::{generators, Graph};
use modkit::interval::is_interval;
use modkit::mim_width::{hn_canonical_layout, hn_graph, layout_mimw, lmimw_exact};
use modkit::modular_partition::{
    brute_gmc, cluster_mc, interval_mc, is_cluster, validate_gmodular_partition, GraphClass,
};
use modkit::sim_interval::{si_decide, si_exact, si_fpt, si_from_twin_cover, validate_sim_rep};
use modkit::thinness::{incompatibility_graph, is_consistent, thinness_exact, thinness_kernel};
use modkit::VertexSet;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde_json::json;

fn base_seed() -> u64 {
    std::env::var("MODKIT_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x6d6f646b_69740001)
}

fn rng_for(suite: u64, case: u64) -> StdRng {
    StdRng::seed_from_u64(base_seed() ^ suite.wrapping_mul(0x9e3779b97f4a7c15) ^ case)
}

fn gnp(rng: &mut StdRng, n: usize, p: f64) -> Graph {
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

fn random_graph(rng: &mut StdRng, n_max: usize) -> Graph {
    let n = rng.gen_range(1..=n_max);
    let p = rng.gen_range(0.15..0.85);
    gnp(rng, n, p)
}

/// A graph with cluster-modular cardinality at most `k`: a quotient on
/// `k` vertices with each vertex substituted by a small cluster.
fn random_clustered(rng: &mut StdRng, k: usize, n_max: usize) -> Graph {
    let mut quotient = gnp(rng, k, 0.6);
    loop {
        let sizes: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=3)).collect();
        if sizes.iter().sum::<usize>() <= n_max {
            for (v, &s) in sizes.iter().enumerate().rev() {
                let cliques = rng.gen_range(1..=s);
                let mut cluster = Graph::edgeless(0);
                let mut left = s;
                for i in 0..cliques {
                    let take = if i + 1 == cliques { left } else { rng.gen_range(1..=left) };
                    cluster = cluster.disjoint_union(&generators::complete(take));
                    left -= take;
                    if left == 0 {
                        break;
                    }
                }
                quotient = quotient.substitution(v, &cluster).unwrap();
            }
            return quotient;
        }
    }
}

struct Suite {
    name: &'static str,
    cases: usize,
    failures: Vec<String>,
}

fn check<F>(name: &'static str, cases: usize, body: F) -> Suite
where
    F: Fn(u64, &mut StdRng) -> Result<(), String> + Sync,
{
    let suite_id = name.bytes().fold(0u64, |h, b| h.wrapping_mul(31).wrapping_add(b as u64));
    let failures: Vec<String> = (0..cases as u64)
        .into_par_iter()
        .filter_map(|case| {
            let mut rng = rng_for(suite_id, case);
            body(case, &mut rng).err().map(|e| format!("case {case}: {e}"))
        })
        .collect();
    Suite { name, cases, failures }
}

pub fn run(samples: usize) -> Result<serde_json::Value, Error> {
    let samples = samples.max(10);
    let mut suites = Vec::new();

    suites.push(check("graph6-roundtrip", samples, |_, rng| {
        let g = random_graph(rng, 8);
        let code = modkit::graph6::emit_graph6(&g).map_err(|e| e.to_string())?;
        let back = modkit::graph6::parse_graph6(&code).map_err(|e| e.to_string())?;
        if back != g {
            return Err(format!("roundtrip mismatch for {code}"));
        }
        Ok(())
    }));

    suites.push(check("md-tree-validates", samples, |_, rng| {
        let g = random_graph(rng, 9);
        let t = modkit::mdtree::modular_decomposition(&g).map_err(|e| e.to_string())?;
        modkit::mdtree::validate_md_tree(&g, &t)
    }));

    suites.push(check("mc-oracle-equivalence", samples, |_, rng| {
        let g = random_graph(rng, 7);
        let (cmc, cp) = cluster_mc(&g).map_err(|e| e.to_string())?;
        let (imc, ip) = interval_mc(&g).map_err(|e| e.to_string())?;
        let bc = brute_gmc(&g, is_cluster, false).map_err(|e| e.to_string())?;
        let bi = brute_gmc(&g, is_interval, false).map_err(|e| e.to_string())?;
        if cmc != bc {
            return Err(format!("cluster-mc {cmc} vs brute {bc} on {:?}", g));
        }
        if imc != bi {
            return Err(format!("interval-mc {imc} vs brute {bi} on {:?}", g));
        }
        if !validate_gmodular_partition(&g, &cp) || !validate_gmodular_partition(&g, &ip) {
            return Err("witness partition failed validation".into());
        }
        Ok(())
    }));

    suites.push(check("thinness-kernel", samples / 4, |_, rng| {
        let g = random_graph(rng, 8);
        let (t, sol) = thinness_exact(&g, false).map_err(|e| e.to_string())?;
        if !is_consistent(&g, &sol) {
            return Err("witness not consistent".into());
        }
        let kernel = thinness_kernel(&g).map_err(|e| e.to_string())?;
        let (imc, _) = interval_mc(&g).map_err(|e| e.to_string())?;
        let (tk, _) = thinness_exact(&kernel, false).map_err(|e| e.to_string())?;
        if tk != t || kernel.n() > 2 * imc || t > 2 * imc {
            return Err(format!("kernel {} vs graph {} (imc {imc})", tk, t));
        }
        Ok(())
    }));

    suites.push(check("union-join-laws", samples / 4, |_, rng| {
        let a = random_graph(rng, 4);
        let b = random_graph(rng, 4);
        let (ta, _) = thinness_exact(&a, false).map_err(|e| e.to_string())?;
        let (tb, _) = thinness_exact(&b, false).map_err(|e| e.to_string())?;
        let (tu, _) = thinness_exact(&a.disjoint_union(&b), false).map_err(|e| e.to_string())?;
        if tu != ta.max(tb) {
            return Err(format!("union law: {tu} vs max({ta},{tb})"));
        }
        let (tj, _) = thinness_exact(&a.join(&b), false).map_err(|e| e.to_string())?;
        let expect = if a.is_complete() {
            tb
        } else if b.is_complete() {
            ta
        } else {
            ta + tb
        };
        if tj != expect {
            return Err(format!("join law: {tj} vs {expect}"));
        }
        Ok(())
    }));

    suites.push(check("consistency-is-coloring", samples, |_, rng| {
        let g = random_graph(rng, 6);
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            order.swap(i, rng.gen_range(0..=i));
        }
        let k = rng.gen_range(1..=n);
        let mut classes = vec![VertexSet::empty(n); k];
        for v in 0..n {
            classes[rng.gen_range(0..k)].insert(v);
        }
        classes.retain(|c| !c.is_empty());
        let sol = modkit::thinness::ConsistentSolution { order: order.clone(), classes };
        let inc = incompatibility_graph(&g, &order);
        let proper = sol.classes.iter().all(|c| {
            c.iter().all(|u| inc.neighbors(u).is_disjoint(c))
        });
        if is_consistent(&g, &sol) != proper {
            return Err("consistency and coloring disagree".into());
        }
        Ok(())
    }));

    suites.push(check("parameter-chain", samples, |_, rng| {
        let g = random_graph(rng, 7);
        let (cmc, _) = cluster_mc(&g).map_err(|e| e.to_string())?;
        let (imc, _) = interval_mc(&g).map_err(|e| e.to_string())?;
        let (nd, parts) = neighborhood_diversity(&g);
        let tc = twin_cover_exact(&g, false).map_err(|e| e.to_string())?.count();
        let vc = vertex_cover_exact(&g, false).map_err(|e| e.to_string())?.count();
        if !(imc <= cmc && cmc <= nd && tc <= vc && cmc <= (1 << tc) + tc) {
            return Err(format!("chain broken: imc {imc} cmc {cmc} nd {nd} tc {tc} vc {vc}"));
        }
        let p = modkit::modular_partition::ModularPartition { class: GraphClass::Cluster, parts };
        if !validate_gmodular_partition(&g, &p) {
            return Err("neighborhood partition is not a cluster-modular partition".into());
        }
        Ok(())
    }));

    suites.push(check("si-fpt-vs-oracle", samples / 5, |_, rng| {
        let k = rng.gen_range(1..=3);
        let g = random_clustered(rng, k, 6);
        for d in 0..=2 {
            let (a, wa) = si_fpt(&g, d, false).map_err(|e| e.to_string())?;
            let (b, _) = si_decide(&g, d, false).map_err(|e| e.to_string())?;
            if a != b {
                return Err(format!("fpt {a} vs oracle {b} at d={d} on {:?}", g));
            }
            if let Some(rep) = wa {
                if !validate_sim_rep(&g, &rep) {
                    return Err("fpt witness failed validation".into());
                }
            }
        }
        Ok(())
    }));

    suites.push(check("si-biclique-formula", 9, |case, _| {
        let n = (case % 3 + 1) as usize;
        let m = (case / 3 + 1) as usize;
        let g = generators::complete_bipartite(n, m);
        let (si, rep) = si_exact(&g, false).map_err(|e| e.to_string())?;
        if si != n.min(m) || !validate_sim_rep(&g, &rep) {
            return Err(format!("si(K_{{{n},{m}}}) = {si}"));
        }
        Ok(())
    }));

    suites.push(check("si-twin-cover-bound", samples, |_, rng| {
        let g = random_graph(rng, 7);
        let x = twin_cover_exact(&g, false).map_err(|e| e.to_string())?;
        let k = x.count();
        let rep = si_from_twin_cover(&g, &x).map_err(|e| e.to_string())?;
        let bound = (k * k.saturating_sub(1) / 2 + k).max(1);
        if !validate_sim_rep(&g, &rep) || rep.d > bound {
            return Err(format!("twin-cover rep d={} for k={k}", rep.d));
        }
        Ok(())
    }));

    suites.push(check("lmimw-layout-bound", samples / 2, |_, rng| {
        let g = random_graph(rng, 8);
        let n = g.n();
        let (exact, witness) = lmimw_exact(&g, false).map_err(|e| e.to_string())?;
        if layout_mimw(&g, &witness) != exact {
            return Err("witness layout does not realize the optimum".into());
        }
        let mut layout: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            layout.swap(i, rng.gen_range(0..=i));
        }
        if layout_mimw(&g, &layout) < exact {
            return Err("random layout beat the optimum".into());
        }
        Ok(())
    }));

    suites.push(check("hn-family", 3, |case, _| {
        let level = case as usize;
        let g = hn_graph(level, false).map_err(|e| e.to_string())?;
        let layout = hn_canonical_layout(level, false).map_err(|e| e.to_string())?;
        if layout_mimw(&g, &layout) != level {
            return Err(format!("canonical layout width at level {level}"));
        }
        if level >= 1 {
            let t = modkit::mdtree::modular_decomposition(&g).map_err(|e| e.to_string())?;
            if modkit::mdtree::modular_width(&t) != 7 {
                return Err(format!("modular width at level {level}"));
            }
        }
        Ok(())
    }));

    let mut all_ok = true;
    let mut out = Vec::new();
    for s in &suites {
        let ok = s.failures.is_empty();
        all_ok &= ok;
        eprintln!(
            "{:<28} {} ({} cases{})",
            s.name,
            if ok { "ok" } else { "FAIL" },
            s.cases,
            if ok { String::new() } else { format!(", {} failures", s.failures.len()) }
        );
        for f in s.failures.iter().take(3) {
            eprintln!("    {f}");
        }
        out.push(json!({
            "suite": s.name,
            "cases": s.cases,
            "ok": ok,
            "failures": s.failures,
        }));
    }
    Ok(json!({"schema": 1, "ok": all_ok, "seed": base_seed(), "suites": out}))
}
