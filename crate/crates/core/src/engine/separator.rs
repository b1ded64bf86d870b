use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::connectivity::{lambda_global, min_vertex_separator};
use crate::error::{input, Result};
use crate::generators::{validate_gadget, GadgetKind};
use crate::graph::{merged_name, vset, MultiGraph, VertexId, VertexSet};

/// A pair `a, b` and a set `S` such that deleting `S` and every `ab` edge
/// disconnects `a` from `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairSeparator {
    pub a: VertexId,
    pub b: VertexId,
    pub separator: VertexSet,
}

/// Over all pairs `a ∈ a_set`, `b ∈ b_set` with `a != b`, the one with the
/// smallest separator in `g − ab`; ties go to the least `(a, b, S)`.
/// `None` when every pair needs more than `s_max` vertices.
pub fn find_small_separator(
    g: &MultiGraph,
    a_set: &VertexSet,
    b_set: &VertexSet,
    s_max: usize,
) -> Result<Option<PairSeparator>> {
    if a_set.is_empty() || b_set.is_empty() {
        return input("vertex sets must be nonempty");
    }
    g.check_members(a_set)?;
    g.check_members(b_set)?;
    let mut best: Option<PairSeparator> = None;
    let mut legal = false;
    for a in a_set {
        for b in b_set.iter().filter(|b| *b != a) {
            legal = true;
            let mut h = g.clone();
            h.remove_edge_all(a, b);
            let s = min_vertex_separator(&h, a, b)?.expect("edge removed");
            if s.len() > s_max || best.as_ref().is_some_and(|p| p.separator.len() <= s.len()) {
                continue;
            }
            best = Some(PairSeparator { a: a.clone(), b: b.clone(), separator: s });
        }
    }
    if !legal {
        return input("no pair of distinct vertices to separate");
    }
    Ok(best)
}

/// The reduced graph of a football: `g − u − v − ab` with `u` merged into
/// `a` and `v` into `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatedFootball {
    pub graph: MultiGraph,
    pub merged_u: VertexId,
    pub merged_v: VertexId,
    pub pair: PairSeparator,
    pub lambda: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FootballOutcome {
    Separated(SeparatedFootball),
    Failed { reason: String },
}

/// Turns a football with endvertices `u`, `v` into a graph where the
/// merged endvertices are separated by at most `s_max` vertices.
pub fn football_to_separated(
    g: &MultiGraph,
    u: &VertexId,
    v: &VertexId,
    k: usize,
    s_max: usize,
) -> Result<FootballOutcome> {
    let roles = BTreeMap::from([("u".to_string(), u.clone()), ("v".to_string(), v.clone())]);
    let report = validate_gadget(g, GadgetKind::Football, &roles, k)?;
    if !report.valid {
        return input(format!("not a football at strength {k}: {}", report.reasons.join("; ")));
    }
    let c = g.without(&vset([u.clone(), v.clone()]));
    let nbrs = |x: &VertexId| -> VertexSet { g.neighbors(x).map(|(w, _)| w.clone()).filter(|w| c.contains(w)).collect() };
    let (nu, nv) = (nbrs(u), nbrs(v));
    if nu.is_empty() || nv.is_empty() {
        return Ok(FootballOutcome::Failed { reason: "an endvertex has no neighbour off the other".into() });
    }
    let Some(pair) = find_small_separator(&c, &nu, &nv, s_max)? else {
        return Ok(FootballOutcome::Failed { reason: format!("dense regime: no separator of size at most {s_max}") });
    };
    let mut h = c.clone();
    h.remove_edge_all(&pair.a, &pair.b);
    let merged_u = merged_name([u, &pair.a]);
    let merged_v = merged_name([v, &pair.b]);
    let graph = h.relabel(|x| {
        if *x == pair.a {
            merged_u.clone()
        } else if *x == pair.b {
            merged_v.clone()
        } else {
            x.clone()
        }
    })?;
    let lambda = lambda_global(&graph);
    Ok(FootballOutcome::Separated(SeparatedFootball { graph, merged_u, merged_v, pair, lambda }))
}
