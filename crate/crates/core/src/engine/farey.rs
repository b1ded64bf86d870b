use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::fraction::Fraction;
use crate::generators::halved_farey;
use crate::graph::{edge_key, Color, MultiGraph, VertexId, VertexSet};
use crate::io::GraphJson;
use crate::minors::{
    compose_chain, limit_chain, two_disjoint_cycles_with_budget, validate_model, CycleSearch, MinorMap, ModelChain,
    ModelJson,
};

use super::plow::{plow_extract, PlowOutcome, PlowRoute};

type Edge = (VertexId, VertexId);

/// Resource caps of one engine run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineBudget {
    /// Node budget of each minor search.
    pub nodes: usize,
    /// Wall-clock limit, checked between extractions.
    pub time: Option<Duration>,
}

impl Default for EngineBudget {
    fn default() -> Self {
        EngineBudget { nodes: crate::minors::DEFAULT_NODE_BUDGET, time: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlowRecord {
    pub edge: Edge,
    /// The new vertex that the plow head becomes.
    pub vertex: VertexId,
    pub route: PlowRoute,
    pub head_set: VertexSet,
    pub strength: usize,
    pub reservoir_lambda: usize,
    pub valid: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RoundRecord {
    /// Order reached by this round.
    pub order: u32,
    pub plows: Vec<PlowRecord>,
    /// Weakest half-plow of this round.
    pub strength: usize,
    /// Weakest half-plow so far.
    pub cumulative: usize,
}

/// Everything a run produced. `chain.graphs[0]` is the input, and stage
/// `i + 1` holds the halved Farey graph of order `i` with its reservoirs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EngineTrace {
    pub k: usize,
    pub n_max: u32,
    pub order: u32,
    pub rounds: Vec<RoundRecord>,
    pub chain: ModelChain,
    pub final_model: MinorMap,
    /// Why the run stopped before `n_max`.
    pub stop: Option<String>,
    /// Structural reason that caps the reachable order.
    pub obstruction: Option<String>,
}

struct Stage {
    graph: MultiGraph,
    reservoirs: BTreeMap<Edge, MultiGraph>,
}

fn blue_edges(n: u32) -> Result<Vec<Edge>> {
    Ok(halved_farey(n)?.edges_of(Color::Blue).cloned().collect())
}

fn mediant(x: &VertexId, y: &VertexId) -> Result<VertexId> {
    Ok(Fraction::from_vertex(x)?.mediant(Fraction::from_vertex(y)?).vertex())
}

/// Each reservoir meets `f` exactly in its own ends and has no edge
/// between them; two reservoirs share only common ends.
fn check_reservoirs(f: &MultiGraph, reservoirs: &BTreeMap<Edge, MultiGraph>) -> std::result::Result<(), String> {
    for ((x, y), a) in reservoirs {
        let meet: VertexSet = a.vertices().filter(|w| f.contains(w)).cloned().collect();
        if meet != VertexSet::from([x.clone(), y.clone()]) {
            return Err(format!("reservoir of ({x}, {y}) meets the Farey graph in {meet:?}"));
        }
        if a.has_edge(x, y) {
            return Err(format!("reservoir of ({x}, {y}) contains its own edge"));
        }
    }
    let list: Vec<_> = reservoirs.iter().collect();
    for (i, ((x1, y1), a1)) in list.iter().enumerate() {
        for ((x2, y2), a2) in &list[i + 1..] {
            let shared: VertexSet = a1.vertices().filter(|w| a2.contains(w)).cloned().collect();
            let ends: VertexSet =
                [x1, y1].into_iter().filter(|w| *w == x2 || *w == y2).cloned().collect();
            if shared != ends {
                return Err(format!("reservoirs of ({x1}, {y1}) and ({x2}, {y2}) share {shared:?}"));
            }
        }
    }
    Ok(())
}

/// Builds the halved Farey graph of order `n_max` as a minor of `g`, one
/// order at a time, by extracting a plow inside the reservoir of every blue
/// edge. Stops early at the first failed extraction or when the time
/// budget runs out; the trace records the largest completed order.
pub fn farey_engine(g: &MultiGraph, k: usize, n_max: u32, budget: EngineBudget) -> Result<EngineTrace> {
    if k == 0 {
        return input("k must be at least 1");
    }
    if !g.is_connected() || g.edge_count() == 0 {
        return input("host must be connected with at least one edge");
    }
    halved_farey(n_max)?;
    let start = Instant::now();
    let mut obstruction = None;
    let mut cap = n_max;
    if n_max >= 3 {
        if let CycleSearch::Absent = two_disjoint_cycles_with_budget(g, budget.nodes) {
            obstruction = Some("disjointness: the host has no two disjoint cycles, so order 3 is out of reach".into());
            cap = 2;
        }
    }
    let (a, b) = g.edge_list().into_iter().next().expect("has an edge");
    let zero = Fraction::new(0, 1)?.vertex();
    let inf = Fraction::new(1, 0)?.vertex();
    let rename = |w: &VertexId| {
        if *w == a {
            zero.clone()
        } else if *w == b {
            inf.clone()
        } else {
            VertexId::new(format!("h:{w}"))
        }
    };
    let full = g.relabel(rename)?;
    let mut reservoir = full.clone();
    reservoir.remove_edge_all(&zero, &inf);
    let f0 = halved_farey(0)?.into_graph();
    let mut stage = Stage { graph: f0.union(&reservoir), reservoirs: BTreeMap::from([(edge_key(&zero, &inf), reservoir)]) };
    let assign = g.vertices().map(|w| (w.clone(), rename(w))).collect();
    let mut chain = ModelChain {
        graphs: vec![g.clone(), stage.graph.clone()],
        kept: vec![MultiGraph::new(), f0],
        maps: vec![MinorMap::new(g.clone(), stage.graph.clone(), assign)],
    };
    let mut rounds: Vec<RoundRecord> = Vec::new();
    let mut stop = None;
    let mut order = 0;
    'rounds: while order < cap {
        let next = halved_farey(order + 1)?.into_graph();
        let mut new_graph = next.clone();
        let mut new_reservoirs = BTreeMap::new();
        let mut assign: BTreeMap<VertexId, VertexId> = chain.kept[order as usize + 1].vertices().map(|x| (x.clone(), x.clone())).collect();
        let mut plows = Vec::new();
        for (x, y) in blue_edges(order)? {
            if budget.time.is_some_and(|t| start.elapsed() > t) {
                stop = Some(format!("time budget exhausted during order {}", order + 1));
                break 'rounds;
            }
            let a = &stage.reservoirs[&(x.clone(), y.clone())];
            let p = match plow_extract(a, &x, &y, k, budget.nodes)? {
                PlowOutcome::Found(p) => p,
                PlowOutcome::Failed { reasons } => {
                    stop = Some(format!("edge ({x}, {y}): {}", reasons.join("; ")));
                    break 'rounds;
                }
            };
            let m = mediant(&x, &y)?;
            let name = |w: &VertexId| if *w == p.head { m.clone() } else { w.clone() };
            for (w, pat) in p.model.assign() {
                assign.insert(w.clone(), name(pat));
            }
            let pattern = p.model.pattern();
            for (end, side) in [(&x, &p.u_side), (&y, &p.v_side)] {
                let mut half = pattern.induced(side)?.relabel(name)?;
                half.remove_edge_all(end, &m);
                new_graph = new_graph.union(&half);
                new_reservoirs.insert(edge_key(end, &m), half);
            }
            plows.push(PlowRecord {
                edge: (x.clone(), y.clone()),
                vertex: m,
                route: p.route,
                head_set: p.model.branch_set(&p.head),
                strength: p.strength,
                reservoir_lambda: p.host_lambda,
                valid: p.gadget.valid,
            });
        }
        if let Err(e) = check_reservoirs(&next, &new_reservoirs) {
            stop = Some(format!("order {}: {e}", order + 1));
            break;
        }
        let map = MinorMap::new(stage.graph.clone(), new_graph.clone(), assign);
        let report = validate_model(&map);
        if !report.valid {
            stop = Some(format!("order {}: step model invalid: {}", order + 1, report.violations.join("; ")));
            break;
        }
        let strength = plows.iter().map(|p| p.strength).min().unwrap_or(usize::MAX);
        let cumulative = rounds.last().map_or(strength, |r| r.cumulative.min(strength));
        order += 1;
        rounds.push(RoundRecord { order, plows, strength, cumulative });
        chain.graphs.push(new_graph.clone());
        chain.kept.push(next);
        chain.maps.push(map);
        stage = Stage { graph: new_graph, reservoirs: new_reservoirs };
    }
    if stop.is_none() && order < n_max {
        stop = obstruction.clone();
    }
    let final_model = limit_chain(&chain)?;
    if compose_chain(&chain)? != final_model {
        return Err(Error::Input("composed chain disagrees with its limit".into()));
    }
    Ok(EngineTrace { k, n_max, order, rounds, chain, final_model, stop, obstruction })
}

pub const TRACE_FORMAT: &str = "fareyforge-trace-v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainJson {
    pub graphs: Vec<GraphJson>,
    pub kept: Vec<GraphJson>,
    pub maps: Vec<BTreeMap<VertexId, VertexSet>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceJson {
    pub format: String,
    pub k: usize,
    pub n_max: u32,
    pub order: u32,
    pub rounds: Vec<RoundRecord>,
    pub stop: Option<String>,
    pub obstruction: Option<String>,
    pub chain: ChainJson,
    #[serde(rename = "final")]
    pub final_model: ModelJson,
}

impl TraceJson {
    pub fn from_trace(t: &EngineTrace) -> Self {
        TraceJson {
            format: TRACE_FORMAT.to_string(),
            k: t.k,
            n_max: t.n_max,
            order: t.order,
            rounds: t.rounds.clone(),
            stop: t.stop.clone(),
            obstruction: t.obstruction.clone(),
            chain: ChainJson {
                graphs: t.chain.graphs.iter().map(GraphJson::from_graph).collect(),
                kept: t.chain.kept.iter().map(GraphJson::from_graph).collect(),
                maps: t.chain.maps.iter().map(MinorMap::branch_sets).collect(),
            },
            final_model: ModelJson::from_model(&t.final_model),
        }
    }

    /// Rebuilds the chain and the final model.
    pub fn decode(&self) -> Result<(ModelChain, MinorMap)> {
        if self.format != TRACE_FORMAT {
            return Err(Error::Parse(format!("format: expected {TRACE_FORMAT:?}, found {:?}", self.format)));
        }
        let graphs = self.chain.graphs.iter().map(|j| Ok(j.decode()?.into_graph())).collect::<Result<Vec<_>>>()?;
        let kept = self.chain.kept.iter().map(|j| Ok(j.decode()?.into_graph())).collect::<Result<Vec<_>>>()?;
        if self.chain.maps.len() + 1 != graphs.len() {
            return Err(Error::Parse("chain.maps: expected one map per consecutive pair of graphs".into()));
        }
        let maps = self
            .chain
            .maps
            .iter()
            .enumerate()
            .map(|(i, sets)| MinorMap::from_branch_sets(graphs[i].clone(), graphs[i + 1].clone(), sets))
            .collect::<Result<Vec<_>>>()?;
        let final_model = self.final_model.decode(&graphs[0])?;
        Ok((ModelChain { graphs, kept, maps }, final_model))
    }
}
