//! Command-line front end: every algorithm of the library behind one
//! binary, JSON certificates on stdout, and a `verify` command that
//! re-checks any emitted witness. Exit codes: 0 success, 1 parse or
//! validation failure, 2 size-guard violation (override with --force).

use clap::{Parser, Subcommand, ValueEnum};
use modkit::error::Error;
use modkit::graph::{generators, Graph};
use modkit::{graph6, io, VertexSet};
use serde_json::json;
use std::io::Read;
use std::path::PathBuf;

mod selfcheck;

#[derive(Parser)]
#[command(name = "modkit", version, about = "Modular-structure graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Input path, or "-" for stdin.
    #[arg(long, global = true, default_value = "-")]
    input: String,

    /// Input graph format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Graph6)]
    format: Format,

    /// Override the desk-scale size guards.
    #[arg(long, global = true)]
    force: bool,

    /// Cap the number of worker threads (selfcheck).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Compact single-line JSON instead of pretty-printed.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Cluster,
    Interval,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Path,
    Cycle,
    CompleteBipartite,
    Ck2,
    BipartiteClaw,
    Hn,
}

#[derive(Clone, Copy, ValueEnum)]
enum WitnessKind {
    MdTree,
    Mc,
    Thinness,
    SimRep,
    Layout,
}

#[derive(Subcommand)]
enum Command {
    /// Modular decomposition tree and modular-width.
    Decompose,
    /// Optimal cluster- or interval-modular partition.
    Mc {
        #[arg(long, value_enum)]
        class: ClassArg,
    },
    /// Exact thinness, the interval-modular kernel, or parameter bounds.
    Thinness {
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        kernel: bool,
        #[arg(long)]
        bounds: bool,
    },
    /// Simultaneous interval representations.
    SimInterval {
        #[arg(long)]
        exact: bool,
        #[arg(long, value_name = "D")]
        decide: Option<usize>,
        #[arg(long, value_name = "D")]
        fpt: Option<usize>,
        #[arg(long)]
        twin_cover_construct: bool,
    },
    /// Exact linear mim-width with a witness layout.
    Lmimw,
    /// Emit a named family member.
    Generate {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        c: Option<usize>,
    },
    /// Re-check an emitted certificate against the input graph.
    Verify {
        #[arg(long, value_enum)]
        kind: WitnessKind,
        #[arg(long)]
        witness: PathBuf,
    },
    /// Run the oracle-equivalence suites; nonzero exit on any mismatch.
    Selfcheck {
        /// Cases per randomized suite.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

fn read_input(cli: &Cli) -> Result<Graph, Error> {
    let text = if cli.input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidArgument(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(&cli.input)
            .map_err(|e| Error::InvalidArgument(format!("reading {}: {e}", cli.input)))?
    };
    match cli.format {
        Format::Graph6 => graph6::parse_graph6(text.trim()),
        Format::Edges => io::parse_edge_list(&text),
    }
}

fn vertex_lists(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.to_vec()).collect()
}

fn graph_json_with_code(g: &Graph) -> serde_json::Value {
    let mut v = io::graph_to_json(g);
    if let Ok(code) = graph6::emit_graph6(g) {
        v["graph6"] = json!(code);
    }
    v
}

fn run(cli: &Cli) -> Result<serde_json::Value, Error> {
    match &cli.command {
        Command::Decompose => {
            let g = read_input(cli)?;
            let tree = modkit::mdtree::modular_decomposition(&g)?;
            Ok(json!({
                "schema": 1,
                "n": g.n(),
                "tree": modkit::mdtree::tree_to_json(&tree),
                "modular_width": modkit::mdtree::modular_width(&tree),
            }))
        }
        Command::Mc { class } => {
            let g = read_input(cli)?;
            let (k, partition) = match class {
                ClassArg::Cluster => modkit::modular_partition::cluster_mc(&g)?,
                ClassArg::Interval => modkit::modular_partition::interval_mc(&g)?,
            };
            Ok(json!({
                "schema": 1,
                "class": partition.class.as_str(),
                "k": k,
                "parts": vertex_lists(&partition.parts),
            }))
        }
        Command::Thinness { exact, kernel, bounds } => {
            let g = read_input(cli)?;
            match (exact, kernel, bounds) {
                (true, false, false) => {
                    let (k, sol) = modkit::thinness::thinness_exact(&g, cli.force)?;
                    Ok(json!({
                        "schema": 1,
                        "thinness": k,
                        "order": sol.order,
                        "classes": vertex_lists(&sol.classes),
                    }))
                }
                (false, true, false) => {
                    let kernel = modkit::thinness::thinness_kernel(&g)?;
                    let (k, _) = modkit::modular_partition::interval_mc(&g)?;
                    Ok(json!({
                        "schema": 1,
                        "kernel": graph_json_with_code(&kernel),
                        "interval_mc": k,
                    }))
                }
                (false, false, true) => {
                    let (nd, _) = modkit::covers::neighborhood_diversity(&g);
                    let tc = modkit::covers::twin_cover_exact(&g, cli.force)?.count();
                    let vc = modkit::covers::vertex_cover_exact(&g, cli.force)?.count();
                    let (cmc, _) = modkit::modular_partition::cluster_mc(&g)?;
                    let (imc, _) = modkit::modular_partition::interval_mc(&g)?;
                    Ok(json!({
                        "schema": 1,
                        "nd": nd,
                        "tc": tc,
                        "vc": vc,
                        "cluster_mc": cmc,
                        "interval_mc": imc,
                    }))
                }
                _ => Err(Error::InvalidArgument(
                    "thinness: pass exactly one of --exact, --kernel, --bounds".into(),
                )),
            }
        }
        Command::SimInterval { exact, decide, fpt, twin_cover_construct } => {
            let g = read_input(cli)?;
            let picked = usize::from(*exact)
                + usize::from(decide.is_some())
                + usize::from(fpt.is_some())
                + usize::from(*twin_cover_construct);
            if picked != 1 {
                return Err(Error::InvalidArgument(
                    "sim-interval: pass exactly one of --exact, --decide, --fpt, --twin-cover-construct"
                        .into(),
                ));
            }
            if *exact {
                let (si, rep) = modkit::sim_interval::si_exact(&g, cli.force)?;
                let mut out = json!({"schema": 1, "si": si});
                merge(&mut out, modkit::sim_interval::sim_rep_to_json(&rep));
                Ok(out)
            } else if let Some(d) = decide {
                let (ok, rep) = modkit::sim_interval::si_decide(&g, *d, cli.force)?;
                let mut out = json!({"schema": 1, "feasible": ok});
                if let Some(rep) = rep {
                    merge(&mut out, modkit::sim_interval::sim_rep_to_json(&rep));
                }
                Ok(out)
            } else if let Some(d) = fpt {
                let (ok, rep) = modkit::sim_interval::si_fpt(&g, *d, cli.force)?;
                let mut out = json!({"schema": 1, "feasible": ok});
                if let Some(rep) = rep {
                    merge(&mut out, modkit::sim_interval::sim_rep_to_json(&rep));
                }
                Ok(out)
            } else {
                let cover = modkit::covers::twin_cover_exact(&g, cli.force)?;
                let rep = modkit::sim_interval::si_from_twin_cover(&g, &cover)?;
                let mut out = json!({"schema": 1, "twin_cover": cover.to_vec()});
                merge(&mut out, modkit::sim_interval::sim_rep_to_json(&rep));
                Ok(out)
            }
        }
        Command::Lmimw => {
            let g = read_input(cli)?;
            let (w, layout) = modkit::mim_width::lmimw_exact(&g, cli.force)?;
            Ok(json!({"schema": 1, "lmimw": w, "layout": layout}))
        }
        Command::Generate { family, n, m, c } => {
            let need = |x: &Option<usize>, what: &str| {
                x.ok_or_else(|| Error::InvalidArgument(format!("generate: missing --{what}")))
            };
            let g = match family {
                Family::Complete => generators::complete(need(n, "n")?),
                Family::Path => generators::path(need(n, "n")?),
                Family::Cycle => generators::cycle(need(n, "n")?),
                Family::CompleteBipartite => {
                    generators::complete_bipartite(need(n, "n")?, need(m, "m")?)
                }
                Family::Ck2 => generators::c_copies_k2(need(c, "c")?),
                Family::BipartiteClaw => generators::bipartite_claw(),
                Family::Hn => modkit::mim_width::hn_graph(need(n, "n")?, cli.force)?,
            };
            let mut out = json!({"schema": 1});
            merge(&mut out, graph_json_with_code(&g));
            Ok(out)
        }
        Command::Verify { kind, witness } => {
            let g = read_input(cli)?;
            let text = std::fs::read_to_string(witness)
                .map_err(|e| Error::InvalidArgument(format!("reading witness: {e}")))?;
            let w: serde_json::Value = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidArgument(format!("witness JSON: {e}")))?;
            let (valid, reason) = verify_witness(&g, *kind, &w)?;
            Ok(json!({"schema": 1, "valid": valid, "reason": reason}))
        }
        Command::Selfcheck { samples } => selfcheck::run(*samples),
    }
}

fn merge(into: &mut serde_json::Value, from: serde_json::Value) {
    if let (Some(a), Some(b)) = (into.as_object_mut(), from.as_object()) {
        for (k, v) in b {
            a.insert(k.clone(), v.clone());
        }
    }
}

fn verify_witness(
    g: &Graph,
    kind: WitnessKind,
    w: &serde_json::Value,
) -> Result<(bool, String), Error> {
    let sets_from = |v: &serde_json::Value, field: &str| -> Result<Vec<VertexSet>, Error> {
        let bad = Error::InvalidArgument;
        let arr = v[field]
            .as_array()
            .ok_or_else(|| bad(format!("witness missing {field:?}")))?;
        arr.iter()
            .map(|part| {
                let mut s = VertexSet::empty(g.n());
                for x in part
                    .as_array()
                    .ok_or_else(|| bad(format!("{field}: expected list of lists")))?
                {
                    let x = x.as_u64().ok_or_else(|| bad(format!("{field}: bad vertex")))? as usize;
                    if x >= g.n() {
                        return Err(bad(format!("{field}: vertex {x} out of range")));
                    }
                    s.insert(x);
                }
                Ok(s)
            })
            .collect()
    };
    match kind {
        WitnessKind::MdTree => {
            let tree = modkit::mdtree::tree_from_json(&w["tree"], g.n())?;
            match modkit::mdtree::validate_md_tree(g, &tree) {
                Ok(()) => Ok((true, String::new())),
                Err(why) => Ok((false, why)),
            }
        }
        WitnessKind::Mc => {
            let class = match w["class"].as_str() {
                Some("cluster") => modkit::modular_partition::GraphClass::Cluster,
                Some("interval") => modkit::modular_partition::GraphClass::Interval,
                other => {
                    return Err(Error::InvalidArgument(format!("mc witness class {other:?}")))
                }
            };
            let parts = sets_from(w, "parts")?;
            let p = modkit::modular_partition::ModularPartition { class, parts };
            let k_ok = w["k"].as_u64().map(|k| k as usize) == Some(p.parts.len());
            let valid = k_ok && modkit::modular_partition::validate_gmodular_partition(g, &p);
            Ok((valid, if valid { String::new() } else { "partition check failed".into() }))
        }
        WitnessKind::Thinness => {
            let order: Vec<usize> = w["order"]
                .as_array()
                .ok_or_else(|| Error::InvalidArgument("thinness witness missing order".into()))?
                .iter()
                .map(|x| x.as_u64().unwrap_or(u64::MAX) as usize)
                .collect();
            let classes = sets_from(w, "classes")?;
            let claimed = w["thinness"].as_u64().map(|k| k as usize);
            let sol = modkit::thinness::ConsistentSolution { order, classes };
            let valid =
                claimed == Some(sol.classes.len()) && modkit::thinness::is_consistent(g, &sol);
            Ok((valid, if valid { String::new() } else { "inconsistent solution".into() }))
        }
        WitnessKind::SimRep => {
            let rep = modkit::sim_interval::sim_rep_from_json(w)?;
            let valid = modkit::sim_interval::validate_sim_rep(g, &rep);
            Ok((valid, if valid { String::new() } else { "representation mismatch".into() }))
        }
        WitnessKind::Layout => {
            let layout: Vec<usize> = w["layout"]
                .as_array()
                .ok_or_else(|| Error::InvalidArgument("layout witness missing layout".into()))?
                .iter()
                .map(|x| x.as_u64().unwrap_or(u64::MAX) as usize)
                .collect();
            let mut seen = vec![false; g.n()];
            let bad_perm = layout.len() != g.n()
                || layout.iter().any(|&v| v >= g.n() || std::mem::replace(&mut seen[v], true));
            if bad_perm {
                return Ok((false, "layout is not a permutation".into()));
            }
            let claimed = w["lmimw"].as_u64().map(|k| k as usize);
            let actual = modkit::mim_width::layout_mimw(g, &layout);
            let valid = claimed == Some(actual);
            Ok((valid, if valid { String::new() } else { format!("layout width is {actual}") }))
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t.max(1)).build_global().ok();
    }
    match run(&cli) {
        Ok(value) => {
            if cli.json {
                println!("{value}");
            } else {
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            }
            let failed_selfcheck = matches!(cli.command, Command::Selfcheck { .. })
                && value["ok"] != serde_json::Value::Bool(true);
            if failed_selfcheck {
                std::process::exit(1);
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_guard() {
                eprintln!("hint: re-run with --force to override the guard");
                std::process::exit(2);
            }
            std::process::exit(1);
        }
    }
}
