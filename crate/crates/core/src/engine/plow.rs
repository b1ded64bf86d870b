use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::connectivity::lambda_global;
use crate::error::{input, Result};
use crate::generators::{validate_gadget, GadgetKind, GadgetReport};
use crate::graph::{merged_name, MultiGraph, VertexId, VertexSet};
use crate::minors::{find_minor_rooted, validate_model, MinorMap, MinorSearch};

use super::separator::find_small_separator;
use super::split::{split_at_separator, SplitOutcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlowRoute {
    /// Separator and split construction.
    Split,
    /// Direct search for two cliques sharing a head.
    Search,
}

/// A plow minor connecting `u` and `v`. The pattern keeps the names `u`
/// and `v`; every other pattern vertex is named after its branch set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlowModel {
    pub model: MinorMap,
    pub head: VertexId,
    /// Pattern vertices of the half-plow at `u`, head included.
    pub u_side: VertexSet,
    pub v_side: VertexSet,
    pub route: PlowRoute,
    /// `min λ` of the two half-plows.
    pub strength: usize,
    pub gadget: GadgetReport,
    /// `λ` of the host, for comparison with `strength`.
    pub host_lambda: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PlowOutcome {
    Found(PlowModel),
    Failed { reasons: Vec<String> },
}

fn certify(model: MinorMap, u: &VertexId, head: VertexId, v: &VertexId, route: PlowRoute) -> Result<std::result::Result<PlowModel, String>> {
    let report = validate_model(&model);
    if !report.valid {
        return Ok(Err(format!("invalid model: {}", report.violations.join("; "))));
    }
    let p = model.pattern();
    let roles = BTreeMap::from([("u".to_string(), u.clone()), ("h".to_string(), head.clone()), ("v".to_string(), v.clone())]);
    let probe = validate_gadget(p, GadgetKind::Plow, &roles, 0)?;
    if !probe.valid {
        return Ok(Err(format!("not a plow: {}", probe.reasons.join("; "))));
    }
    let strength = probe.strength.iter().copied().min().unwrap_or(0);
    let gadget = validate_gadget(p, GadgetKind::Plow, &roles, strength)?;
    let rest = p.without(&VertexSet::from([head.clone()]));
    let mut v_side = rest.reach(v, |_| true);
    let mut u_side: VertexSet = rest.vertices().filter(|x| !v_side.contains(*x)).cloned().collect();
    u_side.insert(head.clone());
    v_side.insert(head.clone());
    Ok(Ok(PlowModel { model, head, u_side, v_side, route, strength, gadget, host_lambda: 0 }))
}

fn by_split(g: &MultiGraph, u: &VertexId, v: &VertexId, k: usize) -> Result<std::result::Result<PlowModel, String>> {
    if g.has_edge(u, v) {
        return Ok(Err("split: endvertices are adjacent".into()));
    }
    let s_max = k.saturating_sub(1);
    let Some(sep) = find_small_separator(g, &VertexSet::from([u.clone()]), &VertexSet::from([v.clone()]), s_max)? else {
        return Ok(Err(format!("split: no separator of size at most {s_max}")));
    };
    let r = match split_at_separator(g, u, v, &sep.separator, k)? {
        SplitOutcome::Split(r) => r,
        SplitOutcome::Failed { reason } => return Ok(Err(format!("split: {reason}"))),
    };
    if !(r.report.x_connected && r.report.ends_outside && r.report.ends_attached) {
        return Ok(Err(format!("split: conditions fail {:?}", r.report)));
    }
    let x = r.x_set;
    let head = merged_name(&x);
    let pattern = r.h_u.contract_sets(std::slice::from_ref(&x))?.union(&r.h_v.contract_sets(std::slice::from_ref(&x))?);
    let assign = r
        .h_u
        .vertices()
        .chain(r.h_v.vertices())
        .map(|w| (w.clone(), if x.contains(w) { head.clone() } else { w.clone() }))
        .collect();
    certify(MinorMap::new(g.clone(), pattern, assign), u, head, v, PlowRoute::Split)
}

/// Two copies of `K_j` sharing the head, with `u` in one and `v` in the
/// other. Internal names avoid `u` and `v`.
fn twin_cliques(u: &VertexId, v: &VertexId, j: usize) -> (MultiGraph, VertexId) {
    let mut tag = "#".to_string();
    while u.as_str().starts_with(&tag) || v.as_str().starts_with(&tag) {
        tag.push('#');
    }
    let head = VertexId::new(format!("{tag}h"));
    let mut p = MultiGraph::new();
    for (end, side) in [(u, 'a'), (v, 'b')] {
        let mut members = vec![end.clone(), head.clone()];
        members.extend((1..j - 1).map(|i| VertexId::new(format!("{tag}{side}{i}"))));
        for i in 0..members.len() {
            for m in &members[i + 1..] {
                p.add_edge(members[i].clone(), m.clone()).expect("distinct names");
            }
        }
    }
    (p, head)
}

/// Adds unused host vertices as new singleton pattern vertices, each to
/// the smaller half-plow it has at least `floor` edges into. `λ` of a half-plow never drops below `floor` this way.
fn absorb(
    g: &MultiGraph,
    pattern: &mut MultiGraph,
    assign: &mut BTreeMap<VertexId, VertexId>,
    head: &VertexId,
    v: &VertexId,
    floor: usize,
) -> Result<()> {
    let rest = pattern.without(&VertexSet::from([head.clone()]));
    let v_side = rest.reach(v, |_| true);
    let mut side: BTreeMap<VertexId, bool> = pattern.vertices().map(|x| (x.clone(), v_side.contains(x))).collect();
    loop {
        let mut grown = false;
        for w in g.vertices().filter(|w| !assign.contains_key(*w)).cloned().collect::<Vec<_>>() {
            let mut into = [BTreeMap::new(), BTreeMap::new()];
            for (z, m) in g.neighbors(&w) {
                if let Some(x) = assign.get(z) {
                    let sides: &[usize] = if x == head { &[0, 1] } else if side[x] { &[1] } else { &[0] };
                    for &s in sides {
                        *into[s].entry(x.clone()).or_insert(0) += m;
                    }
                }
            }
            let count = |s: usize| into[s].values().sum::<usize>();
            let size = |s: usize| side.values().filter(|&&b| b == (s == 1)).count();
            let Some(s) = [0, 1].into_iter().filter(|&s| floor > 0 && count(s) >= floor).min_by_key(|&s| (size(s), usize::MAX - count(s)))
            else {
                continue;
            };
            for (x, m) in &into[s] {
                pattern.add_edges(w.clone(), x.clone(), *m)?;
            }
            side.insert(w.clone(), s == 1);
            assign.insert(w.clone(), w);
            grown = true;
        }
        if !grown {
            return Ok(());
        }
    }
}

fn by_search(g: &MultiGraph, u: &VertexId, v: &VertexId, k: usize, budget: usize) -> Result<std::result::Result<PlowModel, String>> {
    let top = (k + 1).min(g.vertex_count().div_ceil(2));
    let pins = BTreeMap::from([(u.clone(), u.clone()), (v.clone(), v.clone())]);
    let mut exhausted = Vec::new();
    for j in (2..=top).rev() {
        let (pattern, head) = twin_cliques(u, v, j);
        match find_minor_rooted(g, &pattern, &pins, budget)? {
            MinorSearch::Found(m) => {
                let sets = m.branch_sets();
                let name = |x: &VertexId| if x == u || x == v { x.clone() } else { sets[x].iter().next().expect("nonempty").clone() };
                let mut renamed = pattern.relabel(name)?;
                let mut assign = m.assign().iter().map(|(w, x)| (w.clone(), name(x))).collect();
                absorb(g, &mut renamed, &mut assign, &name(&head), v, j - 1)?;
                return certify(MinorMap::new(g.clone(), renamed, assign), u, name(&head), v, PlowRoute::Search);
            }
            MinorSearch::BudgetExhausted { .. } => exhausted.push(j),
            MinorSearch::Absent => {}
        }
    }
    Ok(Err(if exhausted.is_empty() {
        "search: no plow of two cliques exists".into()
    } else {
        format!("search: budget exhausted for clique sizes {exhausted:?}")
    }))
}

/// A plow minor of `g` connecting `u` and `v`, aiming for half-plows of
/// strength `k`. The split route is tried first; a direct search for two
/// cliques sharing a head is the fallback, and the stronger result wins.
pub fn plow_extract(g: &MultiGraph, u: &VertexId, v: &VertexId, k: usize, budget: usize) -> Result<PlowOutcome> {
    g.check_members(&VertexSet::from([u.clone(), v.clone()]))?;
    if u == v {
        return input("endvertices coincide");
    }
    if k == 0 {
        return input("k must be at least 1");
    }
    if !g.is_connected() {
        return Ok(PlowOutcome::Failed { reasons: vec!["graph is disconnected".into()] });
    }
    let mut reasons = Vec::new();
    let split = match by_split(g, u, v, k)? {
        Ok(mut p) if p.strength >= k => {
            p.host_lambda = lambda_global(g);
            return Ok(PlowOutcome::Found(p));
        }
        Ok(p) => {
            reasons.push(format!("split: strength {} below {k}", p.strength));
            Some(p)
        }
        Err(r) => {
            reasons.push(r);
            None
        }
    };
    let search = match by_search(g, u, v, k, budget)? {
        Ok(p) => Some(p),
        Err(r) => {
            reasons.push(r);
            None
        }
    };
    let best = [split, search].into_iter().flatten().max_by_key(|p| (p.strength, p.route == PlowRoute::Split));
    Ok(match best {
        Some(mut p) => {
            p.host_lambda = lambda_global(g);
            PlowOutcome::Found(p)
        }
        None => PlowOutcome::Failed { reasons },
    })
}
