//! The `fareyforge` command line.
//!
//! Exit codes: 0 success, witness found or valid; 1 verified negative
//! (absent or invalid); 2 budget exhausted or early stop; 3 usage error;
//! 4 malformed or unusable input; 5 I/O failure.

mod args;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::Path;
use std::time::Duration;

use clap::error::ErrorKind;
use clap::Parser;
use fareyforge_core::connectivity::{enumerate_bonds, global_min_cut, k_classes, lambda_pair, quotient_by_classes};
use fareyforge_core::engine::{farey_engine, EngineBudget, RoundRecord, TraceJson};
use fareyforge_core::generators::{
    build_gadget, complete, complete_bipartite, cycle, farey_truncation, full_tree, halved_farey, named, path, tree_join,
    validate_gadget, GadgetKind, GadgetReport, Wiring,
};
use fareyforge_core::io::{read_graph, value_to_dot, write_document, GraphJson, GraphValue};
use fareyforge_core::minors::{
    find_minor_rooted, validate_model, MinorSearch, ModelJson, ModelReport, DEFAULT_NODE_BUDGET,
};
use fareyforge_core::separations::{stree_from_spanning_tree, STreeJson};
use fareyforge_core::tree_tools::{
    branch_order, contains_binary_subdivision, prune_labels, star_comb_search_with_budget, RootedTree, RootedTreeJson,
    StarComb,
};
use fareyforge_core::{Error, MultiGraph, VertexId, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

pub use args::{Cli, Command, Format, GenArgs};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_EARLY: i32 = 2;
pub const EXIT_USAGE: i32 = 3;
pub const EXIT_INPUT: i32 = 4;
pub const EXIT_IO: i32 = 5;

/// Environment variable capping every search's node budget.
pub const BUDGET_ENV: &str = "FAREYFORGE_BUDGET_NODES";

const STARCOMB_BUDGET: usize = 500_000;

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

type Outcome = Result<(i32, String), Failure>;

fn usage<T>(message: impl Into<String>) -> Result<T, Failure> {
    Err(Failure { code: EXIT_USAGE, message: message.into() })
}

fn bad_input(context: &str, e: Error) -> Failure {
    Failure { code: EXIT_INPUT, message: format!("{context}: {e}") }
}

fn json<T: Serialize>(code: i32, doc: &T) -> Outcome {
    Ok((code, write_document(doc)))
}

/// Runs one invocation, writing the main output to `out` (unless `--out`
/// is given) and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = budget_cap().and_then(|cap| dispatch(&cli, cap));
    match result {
        Ok((code, body)) => {
            let written = match &cli.out {
                Some(p) => std::fs::write(p, body.as_bytes()).map_err(|e| format!("{}: {e}", p.display())),
                None => out.write_all(body.as_bytes()).map_err(|e| format!("stdout: {e}")),
            };
            match written {
                Ok(()) => code,
                Err(m) => {
                    let _ = writeln!(err, "error: {m}");
                    EXIT_IO
                }
            }
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn budget_cap() -> Result<Option<usize>, Failure> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map(Some).or_else(|_| usage(format!("{BUDGET_ENV}: not a number: {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn budget(cli: &Cli, cap: Option<usize>, default: usize) -> usize {
    let b = cli.budget_nodes.unwrap_or(default);
    cap.map_or(b, |c| b.min(c))
}

fn read_file(path: &str) -> Result<Vec<u8>, Failure> {
    std::fs::read(Path::new(path)).map_err(|e| Failure { code: EXIT_IO, message: format!("{path}: {e}") })
}

/// A graph from a document path, or from a generator name after `gen:`.
fn load(source: &str) -> Result<GraphValue, Failure> {
    if let Some(spec) = source.strip_prefix("gen:") {
        return named(spec).map(GraphValue::Plain).map_err(|e| bad_input(source, e));
    }
    read_graph(&read_file(source)?).map_err(|e| bad_input(source, e))
}

fn load_graph(source: &str) -> Result<MultiGraph, Failure> {
    Ok(load(source)?.into_graph())
}

fn vertex(g: &MultiGraph, token: &str, what: &str) -> Result<VertexId, Failure> {
    let v = VertexId::from(token);
    if g.contains(&v) {
        Ok(v)
    } else {
        Err(Failure { code: EXIT_INPUT, message: format!("{what}: unknown vertex {token:?}") })
    }
}

fn key_value<'a>(s: &'a str, flag: &str) -> Result<(&'a str, &'a str), Failure> {
    s.split_once('=').ok_or(()).or_else(|_| usage(format!("--{flag} expects NAME=VERTEX, got {s:?}")))
}

fn need<T: Copy>(v: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
    v.ok_or(()).or_else(|_| usage(format!("{family} needs --{flag}")))
}

fn random_graph(n: usize, p: f64, mult: usize, seed: u64) -> Result<MultiGraph, Failure> {
    if !(0.0..=1.0).contains(&p) || mult == 0 {
        return usage("random needs 0 <= p <= 1 and --mult >= 1");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let name = |i: usize| VertexId::new(format!("x{i}"));
    let mut g = MultiGraph::new();
    for i in 0..n {
        g.add_vertex(name(i));
    }
    for i in 1..n {
        let parent = rng.gen_range(0..i);
        let m = rng.gen_range(1..=mult);
        g.add_edges(name(parent), name(i), m).expect("distinct");
    }
    for i in 0..n {
        for j in i + 1..n {
            if !g.has_edge(&name(i), &name(j)) && rng.gen_bool(p) {
                let m = rng.gen_range(1..=mult);
                g.add_edges(name(i), name(j), m).expect("distinct");
            }
        }
    }
    Ok(g)
}

fn generate(a: &GenArgs, seed: u64) -> Result<GraphValue, Failure> {
    let f = a.family.as_str();
    let plain = |r: fareyforge_core::Result<MultiGraph>| r.map(GraphValue::Plain).map_err(|e| bad_input(f, e));
    match f {
        "halved-farey" => halved_farey(need(a.order, "order", f)?).map(GraphValue::Colored).map_err(|e| bad_input(f, e)),
        "farey-truncation" => plain(farey_truncation(need(a.order, "order", f)?)),
        "complete" => plain(Ok(complete(need(a.n, "n", f)?))),
        "complete-bipartite" => plain(Ok(complete_bipartite(need(a.a, "a", f)?, need(a.b, "b", f)?))),
        "cycle" => plain(cycle(need(a.n, "n", f)?)),
        "path" => plain(Ok(path(need(a.n, "n", f)?))),
        "full-tree" => plain(full_tree(need(a.d, "d", f)?, need(a.h, "h", f)?)),
        "tree-join" => plain(tree_join(need(a.d, "d", f)?, need(a.h, "h", f)?).map(|(g, _)| g)),
        "random" => Ok(GraphValue::Plain(random_graph(need(a.n, "n", f)?, a.p.unwrap_or(0.3), a.mult, seed)?)),
        "file" => load(a.graph.as_deref().ok_or(()).or_else(|_| usage("file needs --graph"))?),
        _ => usage(format!("unknown family {f:?}")),
    }
}

fn graph_output(format: Format, value: &GraphValue) -> Outcome {
    match format {
        Format::Json => Ok((EXIT_OK, write_document(&value_json(value)))),
        Format::Dot => Ok((EXIT_OK, value_to_dot(value))),
    }
}

fn value_json(value: &GraphValue) -> GraphJson {
    match value {
        GraphValue::Plain(g) => GraphJson::from_graph(g),
        GraphValue::Colored(c) => GraphJson::from_colored(c),
    }
}

#[derive(Serialize)]
struct LambdaDoc {
    lambda: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    u: Option<VertexId>,
    #[serde(skip_serializing_if = "Option::is_none")]
    v: Option<VertexId>,
    #[serde(rename = "sideA", skip_serializing_if = "Option::is_none")]
    side_a: Option<VertexSet>,
}

#[derive(Serialize)]
struct BondDoc {
    #[serde(rename = "sideA")]
    side_a: VertexSet,
    #[serde(rename = "sideB")]
    side_b: VertexSet,
    size: usize,
}

#[derive(Serialize)]
struct ClassesDoc {
    k: usize,
    classes: Vec<VertexSet>,
    quotient: GraphJson,
}

#[derive(Serialize)]
struct PruneDoc {
    rounds: usize,
    branch_order: usize,
    labels: BTreeMap<VertexId, usize>,
    height: usize,
    embedding: Option<Vec<VertexId>>,
}

#[derive(Serialize)]
struct Outcome1<'a> {
    outcome: &'a str,
    #[serde(skip_serializing_if = "Option::is_none")]
    nodes: Option<usize>,
}

#[derive(Serialize)]
struct GadgetDoc {
    graph: GraphJson,
    report: GadgetReport,
}

#[derive(Serialize)]
struct EngineDoc<'a> {
    k: usize,
    n_max: u32,
    order: u32,
    stop: &'a Option<String>,
    obstruction: &'a Option<String>,
    rounds: &'a [RoundRecord],
}

fn dispatch(cli: &Cli, cap: Option<usize>) -> Outcome {
    if cli.format == Format::Dot && !matches!(cli.command, Command::Generate(_) | Command::Render { .. } | Command::Classes { .. }) {
        return usage("--format dot is only available for generate, render and classes");
    }
    match &cli.command {
        Command::Generate(a) => graph_output(cli.format, &generate(a, cli.seed)?),
        Command::Render { gen, .. } => Ok((EXIT_OK, value_to_dot(&generate(gen, cli.seed)?))),
        Command::Lambda { graph, u, v } => {
            let g = load_graph(graph)?;
            match (u, v) {
                (Some(u), Some(v)) => {
                    let (u, v) = (vertex(&g, u, "--u")?, vertex(&g, v, "--v")?);
                    let lambda = lambda_pair(&g, &u, &v).map_err(|e| bad_input(graph, e))?;
                    json(EXIT_OK, &LambdaDoc { lambda, u: Some(u), v: Some(v), side_a: None })
                }
                _ => {
                    let cut = global_min_cut(&g);
                    let lambda = cut.as_ref().map_or(0, |c| c.size());
                    json(EXIT_OK, &LambdaDoc { lambda, u: None, v: None, side_a: cut.map(|c| c.side_a) })
                }
            }
        }
        Command::Bonds { graph, max_size } => {
            let g = load_graph(graph)?;
            let bonds = enumerate_bonds(&g, *max_size).map_err(|e| bad_input(graph, e))?;
            let docs: Vec<BondDoc> =
                bonds.into_iter().map(|c| BondDoc { size: c.size(), side_a: c.side_a, side_b: c.side_b }).collect();
            json(EXIT_OK, &docs)
        }
        Command::Classes { graph, k } => {
            let g = load_graph(graph)?;
            let p = k_classes(&g, *k).map_err(|e| bad_input(graph, e))?;
            let q = quotient_by_classes(&g, &p).map_err(|e| bad_input(graph, e))?;
            match cli.format {
                Format::Dot => graph_output(Format::Dot, &GraphValue::Plain(q)),
                Format::Json => json(EXIT_OK, &ClassesDoc { k: *k, quotient: GraphJson::from_graph(&q), classes: p.classes }),
            }
        }
        Command::Stree { graph, tree } => {
            let g = load_graph(graph)?;
            let t = load_graph(tree)?;
            let s = stree_from_spanning_tree(&g, &t).map_err(|e| bad_input(tree, e))?;
            let code = if s.problems().is_empty() { EXIT_OK } else { EXIT_NEGATIVE };
            json(code, &STreeJson::from_stree(&s))
        }
        Command::Prune { tree, graph, root, height } => {
            let t = match (tree, graph, root) {
                (Some(path), _, _) => {
                    let doc: RootedTreeJson = serde_json::from_slice(&read_file(path)?)
                        .map_err(|e| Failure { code: EXIT_INPUT, message: format!("{path}: malformed rooted tree: {e}") })?;
                    doc.decode().map_err(|e| bad_input(path, e))?
                }
                (None, Some(g), Some(r)) => {
                    let tg = load_graph(g)?;
                    let r = vertex(&tg, r, "--root")?;
                    RootedTree::from_graph(&tg, &r).map_err(|e| bad_input(g, e))?
                }
                _ => return usage("prune needs --tree or --graph with --root"),
            };
            let p = prune_labels(&t);
            let order = branch_order(&t);
            let h = height.unwrap_or(order);
            let embedding = contains_binary_subdivision(&t, h);
            let code = if embedding.is_some() { EXIT_OK } else { EXIT_NEGATIVE };
            json(code, &PruneDoc { rounds: p.rounds, branch_order: order, labels: p.label, height: h, embedding })
        }
        Command::Starcomb { graph, u, k } => {
            let g = load_graph(graph)?;
            let mut set = VertexSet::new();
            for token in u.iter().filter(|t| !t.is_empty()) {
                set.insert(vertex(&g, token, "--u")?);
            }
            let r = star_comb_search_with_budget(&g, &set, *k, budget(cli, cap, STARCOMB_BUDGET))
                .map_err(|e| bad_input(graph, e))?;
            let code = match r {
                StarComb::Star(_) | StarComb::Comb(_) => EXIT_OK,
                StarComb::Absent => EXIT_NEGATIVE,
                StarComb::Exhausted { .. } => EXIT_EARLY,
            };
            json(code, &r)
        }
        Command::FindMinor { host, pattern, pin } => {
            let h = load_graph(host)?;
            let p = load_graph(pattern)?;
            let mut pins = BTreeMap::new();
            for entry in pin {
                let (x, y) = key_value(entry, "pin")?;
                pins.insert(vertex(&p, x, "--pin")?, vertex(&h, y, "--pin")?);
            }
            match find_minor_rooted(&h, &p, &pins, budget(cli, cap, DEFAULT_NODE_BUDGET)).map_err(|e| bad_input("--pin", e))? {
                MinorSearch::Found(m) => json(EXIT_OK, &ModelJson::from_model(&m)),
                MinorSearch::Absent => json(EXIT_NEGATIVE, &Outcome1 { outcome: "absent", nodes: None }),
                MinorSearch::BudgetExhausted { nodes } => {
                    json(EXIT_EARLY, &Outcome1 { outcome: "budget-exhausted", nodes: Some(nodes) })
                }
            }
        }
        Command::VerifyModel { host, model } => {
            let h = load_graph(host)?;
            let doc: ModelJson = serde_json::from_slice(&read_file(model)?)
                .map_err(|e| Failure { code: EXIT_INPUT, message: format!("{model}: malformed model document: {e}") })?;
            let report = match doc.decode(&h) {
                Ok(m) => validate_model(&m),
                Err(Error::Input(msg)) => ModelReport { valid: false, violations: vec![msg] },
                Err(e) => return Err(bad_input(model, e)),
            };
            json(if report.valid { EXIT_OK } else { EXIT_NEGATIVE }, &report)
        }
        Command::Gadget { kind, payload, multiplicity, graph, role, k } => {
            let kind: GadgetKind = kind.parse().map_err(|e| bad_input("--kind", e))?;
            match graph {
                Some(src) => {
                    let g = load_graph(src)?;
                    let mut roles = BTreeMap::new();
                    for entry in role {
                        let (name, v) = key_value(entry, "role")?;
                        roles.insert(name.to_string(), vertex(&g, v, "--role")?);
                    }
                    let k = k.expect("clap requires --k with --graph");
                    let report = validate_gadget(&g, kind, &roles, k).map_err(|e| bad_input("--role", e))?;
                    json(if report.valid { EXIT_OK } else { EXIT_NEGATIVE }, &report)
                }
                None => {
                    let payloads = payload.iter().map(|p| load_graph(p)).collect::<Result<Vec<_>, _>>()?;
                    let (g, report) = build_gadget(kind, &payloads, Wiring { multiplicity: *multiplicity })
                        .map_err(|e| bad_input("--payload", e))?;
                    let code = if report.valid { EXIT_OK } else { EXIT_NEGATIVE };
                    json(code, &GadgetDoc { graph: GraphJson::from_graph(&g), report })
                }
            }
        }
        Command::Engine { host, k, order, budget: time, trace } => {
            let g = load_graph(host)?;
            let time: Option<Duration> = match time {
                Some(t) => Some(humantime::parse_duration(t).or_else(|e| usage(format!("--budget {t:?}: {e}")))?),
                None => None,
            };
            let b = EngineBudget { nodes: budget(cli, cap, DEFAULT_NODE_BUDGET), time };
            let t = farey_engine(&g, *k, *order, b).map_err(|e| bad_input(host, e))?;
            if let Some(path) = trace {
                std::fs::write(path, write_document(&TraceJson::from_trace(&t)))
                    .map_err(|e| Failure { code: EXIT_IO, message: format!("{}: {e}", path.display()) })?;
            }
            let code = if t.order == t.n_max { EXIT_OK } else { EXIT_EARLY };
            json(
                code,
                &EngineDoc { k: t.k, n_max: t.n_max, order: t.order, stop: &t.stop, obstruction: &t.obstruction, rounds: &t.rounds },
            )
        }
    }
}
