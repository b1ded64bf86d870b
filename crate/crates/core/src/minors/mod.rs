//! Minor models as explicit certificates: validation, composition, limits
//! of chains, and backtracking searches.

mod search;
mod witness;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

pub use search::{
    find_minor, find_minor_rooted, two_disjoint_cycles, two_disjoint_cycles_with_budget, CycleSearch, MinorSearch,
    DEFAULT_NODE_BUDGET,
};
pub use witness::farey_contraction_witness;

use crate::error::{input, Error, Result};
use crate::graph::{MultiGraph, VertexId, VertexSet};
use crate::io::GraphJson;

/// A model of `pattern` in `host`: `assign` sends each vertex of its domain
/// to the pattern vertex whose branch set contains it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorMap {
    host: MultiGraph,
    pattern: MultiGraph,
    assign: BTreeMap<VertexId, VertexId>,
}

/// Outcome of [`validate_model`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelReport {
    pub valid: bool,
    pub violations: Vec<String>,
}

impl MinorMap {
    /// Unchecked; see [`validate_model`].
    pub fn new(host: MultiGraph, pattern: MultiGraph, assign: BTreeMap<VertexId, VertexId>) -> Self {
        MinorMap { host, pattern, assign }
    }

    pub fn from_branch_sets(host: MultiGraph, pattern: MultiGraph, sets: &BTreeMap<VertexId, VertexSet>) -> Result<Self> {
        let mut assign = BTreeMap::new();
        for (x, set) in sets {
            for v in set {
                if let Some(prev) = assign.insert(v.clone(), x.clone()) {
                    return input(format!("host vertex {v} lies in the branch sets of {prev} and {x}"));
                }
            }
        }
        Ok(MinorMap { host, pattern, assign })
    }

    pub fn identity(g: &MultiGraph) -> Self {
        let assign = g.vertices().map(|v| (v.clone(), v.clone())).collect();
        MinorMap { host: g.clone(), pattern: g.clone(), assign }
    }

    pub fn host(&self) -> &MultiGraph {
        &self.host
    }

    pub fn pattern(&self) -> &MultiGraph {
        &self.pattern
    }

    pub fn assign(&self) -> &BTreeMap<VertexId, VertexId> {
        &self.assign
    }

    pub fn domain(&self) -> VertexSet {
        self.assign.keys().cloned().collect()
    }

    /// Branch set of every pattern vertex (empty when uncovered).
    pub fn branch_sets(&self) -> BTreeMap<VertexId, VertexSet> {
        let mut sets: BTreeMap<VertexId, VertexSet> = self.pattern.vertices().map(|x| (x.clone(), VertexSet::new())).collect();
        for (v, x) in &self.assign {
            sets.entry(x.clone()).or_default().insert(v.clone());
        }
        sets
    }

    pub fn branch_set(&self, x: &VertexId) -> VertexSet {
        self.assign.iter().filter(|(_, y)| *y == x).map(|(v, _)| v.clone()).collect()
    }

    /// The same branch sets viewed as a model of a subgraph of the pattern.
    pub fn restrict_pattern(&self, sub: &MultiGraph) -> Result<Self> {
        if !sub.is_subgraph_of(&self.pattern) {
            return input("restriction target is not a subgraph of the pattern");
        }
        let assign = self.assign.iter().filter(|(_, x)| sub.contains(x)).map(|(v, x)| (v.clone(), x.clone())).collect();
        Ok(MinorMap { host: self.host.clone(), pattern: sub.clone(), assign })
    }
}

/// Checks that branch sets cover the pattern, are connected, and that
/// every pattern edge is matched by enough host edges.
pub fn validate_model(m: &MinorMap) -> ModelReport {
    let mut violations = Vec::new();
    for (v, x) in &m.assign {
        if !m.host.contains(v) {
            violations.push(format!("domain vertex {v} is not in the host"));
        }
        if !m.pattern.contains(x) {
            violations.push(format!("{v} is assigned to {x}, which is not a pattern vertex"));
        }
    }
    let sets = m.branch_sets();
    for x in m.pattern.vertices() {
        let set = &sets[x];
        if set.is_empty() {
            violations.push(format!("pattern vertex {x} has an empty branch set"));
        } else if !m.host.is_connected_set(set) {
            violations.push(format!("branch set of {x} is disconnected"));
        }
    }
    for (x, y, mult) in m.pattern.edges() {
        let found = m.host.edges_between(&sets[x], &sets[y]);
        if found < mult {
            violations.push(format!("pattern edge {x}{y} needs {mult} host edge(s) between branch sets, found {found}"));
        }
    }
    ModelReport { valid: violations.is_empty(), violations }
}

/// `outer ◇ inner`: a model of `outer.pattern` in `inner.host`.
pub fn compose(outer: &MinorMap, inner: &MinorMap) -> Result<MinorMap> {
    if inner.pattern != outer.host {
        return input("inner pattern differs from outer host");
    }
    let assign = inner
        .assign
        .iter()
        .filter_map(|(v, y)| outer.assign.get(y).map(|x| (v.clone(), x.clone())))
        .collect();
    Ok(MinorMap { host: inner.host.clone(), pattern: outer.pattern.clone(), assign })
}

/// Graphs `G_0, ..., G_n`, kept subgraphs `H_i ⊆ G_i`, and maps
/// `G_i -> G_{i+1}` fixing every vertex of `H_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelChain {
    pub graphs: Vec<MultiGraph>,
    pub kept: Vec<MultiGraph>,
    pub maps: Vec<MinorMap>,
}

impl ModelChain {
    /// Structural problems, each naming the stage where it occurs.
    pub fn check(&self) -> Result<()> {
        let n = self.graphs.len();
        if n == 0 || self.kept.len() != n || self.maps.len() + 1 != n {
            return input("chain needs n+1 graphs, n+1 kept subgraphs and n maps");
        }
        for i in 0..n {
            if !self.kept[i].is_subgraph_of(&self.graphs[i]) {
                return input(format!("stage {i}: kept graph is not a subgraph"));
            }
        }
        for (i, m) in self.maps.iter().enumerate() {
            if m.host != self.graphs[i] || m.pattern != self.graphs[i + 1] {
                return input(format!("stage {i}: map does not run from G_{i} to G_{}", i + 1));
            }
            if let Some(v) = self.kept[i].vertices().find(|v| m.assign.get(*v) != Some(*v)) {
                return input(format!("stage {i}: map is not the identity on kept vertex {v}"));
            }
            if !self.kept[i].is_subgraph_of(&self.kept[i + 1]) {
                return input(format!("stage {i}: kept graphs do not ascend"));
            }
        }
        Ok(())
    }

    pub fn last_kept(&self) -> &MultiGraph {
        self.kept.last().expect("checked nonempty")
    }
}

/// The model of `H_n` in `G_0`. Each branch set `V_x` is the ascending
/// union of the preimages of `x` at every stage from its first appearance.
pub fn limit_chain(c: &ModelChain) -> Result<MinorMap> {
    c.check()?;
    // preimage in G_0 of every vertex of the current stage
    let mut pre: BTreeMap<VertexId, VertexSet> =
        c.graphs[0].vertices().map(|v| (v.clone(), VertexSet::from([v.clone()]))).collect();
    let mut acc: BTreeMap<VertexId, VertexSet> = BTreeMap::new();
    let mut record = |pre: &BTreeMap<VertexId, VertexSet>, kept: &MultiGraph, stage: usize| -> Result<()> {
        for x in kept.vertices() {
            let now = pre.get(x).cloned().unwrap_or_default();
            let before = acc.entry(x.clone()).or_default();
            if !before.is_subset(&now) {
                return input(format!("stage {stage}: branch set of {x} shrank"));
            }
            *before = now;
        }
        Ok(())
    };
    record(&pre, &c.kept[0], 0)?;
    for (i, m) in c.maps.iter().enumerate() {
        let mut next: BTreeMap<VertexId, VertexSet> = BTreeMap::new();
        for (v, y) in &m.assign {
            if let Some(set) = pre.get(v) {
                next.entry(y.clone()).or_default().extend(set.iter().cloned());
            }
        }
        pre = next;
        record(&pre, &c.kept[i + 1], i + 1)?;
    }
    let model = MinorMap::from_branch_sets(c.graphs[0].clone(), c.last_kept().clone(), &acc)?;
    let report = validate_model(&model);
    if !report.valid {
        return Err(Error::Input(format!("limit model is invalid: {}", report.violations.join("; "))));
    }
    Ok(model)
}

/// Iterated [`compose`] of the chain's maps, restricted to `H_n`.
pub fn compose_chain(c: &ModelChain) -> Result<MinorMap> {
    c.check()?;
    let mut acc = MinorMap::identity(&c.graphs[0]);
    for m in &c.maps {
        acc = compose(m, &acc)?;
    }
    acc.restrict_pattern(c.last_kept())
}

pub const MODEL_FORMAT: &str = "fareyforge-model-v1";

/// The pattern of a model document: inline graph or generator name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PatternJson {
    Named(String),
    Graph(GraphJson),
}

impl PatternJson {
    pub fn resolve(&self) -> Result<MultiGraph> {
        match self {
            PatternJson::Named(spec) => crate::generators::named(spec),
            PatternJson::Graph(doc) => Ok(doc.decode()?.into_graph()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelJson {
    pub format: String,
    pub pattern: PatternJson,
    pub branch_sets: BTreeMap<VertexId, VertexSet>,
}

impl ModelJson {
    pub fn from_model(m: &MinorMap) -> Self {
        ModelJson {
            format: MODEL_FORMAT.to_string(),
            pattern: PatternJson::Graph(GraphJson::from_graph(&m.pattern)),
            branch_sets: m.branch_sets(),
        }
    }

    /// Reattaches the document to its host graph.
    pub fn decode(&self, host: &MultiGraph) -> Result<MinorMap> {
        if self.format != MODEL_FORMAT {
            return Err(Error::Parse(format!("format: expected {MODEL_FORMAT:?}, found {:?}", self.format)));
        }
        MinorMap::from_branch_sets(host.clone(), self.pattern.resolve()?, &self.branch_sets)
    }
}
