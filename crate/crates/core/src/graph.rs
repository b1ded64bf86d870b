//! Finite undirected multigraphs.
//!
//! Vertices are named by [`VertexId`] tokens and compared lexicographically,
//! which fixes every tie-break in the crate. Edges carry a positive
//! multiplicity; loops are rejected.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};

/// Separator used when naming a contracted vertex set.
pub const MERGE_SEPARATOR: &str = "+";

/// Vertex token. Ordering is lexicographic on the token text.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(token: impl Into<String>) -> Self {
        VertexId(token.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.to_string())
    }
}

impl From<String> for VertexId {
    fn from(s: String) -> Self {
        VertexId(s)
    }
}

impl From<&VertexId> for VertexId {
    fn from(v: &VertexId) -> Self {
        v.clone()
    }
}

pub type VertexSet = BTreeSet<VertexId>;

/// Builds a vertex set from anything convertible to tokens.
pub fn vset<I, T>(items: I) -> VertexSet
where
    I: IntoIterator<Item = T>,
    T: Into<VertexId>,
{
    items.into_iter().map(Into::into).collect()
}

/// Orders an endpoint pair so the smaller token comes first.
pub fn edge_key(u: &VertexId, v: &VertexId) -> (VertexId, VertexId) {
    if u <= v {
        (u.clone(), v.clone())
    } else {
        (v.clone(), u.clone())
    }
}

/// Canonical name of a merged vertex set: sorted tokens joined by `+`.
pub fn merged_name<'a>(members: impl IntoIterator<Item = &'a VertexId>) -> VertexId {
    let mut tokens: Vec<&str> = members.into_iter().map(VertexId::as_str).collect();
    tokens.sort_unstable();
    VertexId(tokens.join(MERGE_SEPARATOR))
}

/// Finite undirected loopless multigraph.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct MultiGraph {
    adj: BTreeMap<VertexId, BTreeMap<VertexId, usize>>,
}

impl fmt::Debug for MultiGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MultiGraph")
            .field("vertices", &self.adj.keys().collect::<Vec<_>>())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl MultiGraph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from a vertex list and an edge list; repeated pairs
    /// accumulate multiplicity. Endpoints missing from `vertices` are added.
    pub fn from_edges<V, E, A, B>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator,
        V::Item: Into<VertexId>,
        E: IntoIterator<Item = (A, B)>,
        A: Into<VertexId>,
        B: Into<VertexId>,
    {
        let mut g = MultiGraph::new();
        for v in vertices {
            g.add_vertex(v);
        }
        for (a, b) in edges {
            g.add_edge(a, b)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self, v: impl Into<VertexId>) -> bool {
        let v = v.into();
        if self.adj.contains_key(&v) {
            return false;
        }
        self.adj.insert(v, BTreeMap::new());
        true
    }

    /// Adds one copy of the edge `uv`, creating missing endpoints.
    pub fn add_edge(&mut self, u: impl Into<VertexId>, v: impl Into<VertexId>) -> Result<()> {
        self.add_edges(u, v, 1)
    }

    pub fn add_edges(
        &mut self,
        u: impl Into<VertexId>,
        v: impl Into<VertexId>,
        mult: usize,
    ) -> Result<()> {
        let (u, v) = (u.into(), v.into());
        if u == v {
            return input(format!("loop edge at vertex {u}"));
        }
        if mult == 0 {
            return Ok(());
        }
        *self.adj.entry(u.clone()).or_default().entry(v.clone()).or_insert(0) += mult;
        *self.adj.entry(v).or_default().entry(u).or_insert(0) += mult;
        Ok(())
    }

    /// Removes every copy of `uv`; returns the multiplicity removed.
    pub fn remove_edge_all(&mut self, u: &VertexId, v: &VertexId) -> usize {
        let m = self.adj.get_mut(u).and_then(|n| n.remove(v)).unwrap_or(0);
        if let Some(n) = self.adj.get_mut(v) {
            n.remove(u);
        }
        m
    }

    /// Removes one copy of `uv`; returns whether an edge was present.
    pub fn remove_edge_once(&mut self, u: &VertexId, v: &VertexId) -> bool {
        let m = self.multiplicity(u, v);
        if m == 0 {
            return false;
        }
        self.remove_edge_all(u, v);
        if m > 1 {
            self.add_edges(u.clone(), v.clone(), m - 1).expect("not a loop");
        }
        true
    }

    pub fn remove_vertex(&mut self, v: &VertexId) -> bool {
        let Some(nbrs) = self.adj.remove(v) else {
            return false;
        };
        for w in nbrs.keys() {
            if let Some(n) = self.adj.get_mut(w) {
                n.remove(v);
            }
        }
        true
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.edges().map(|(_, _, m)| m).sum()
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.adj.contains_key(v)
    }

    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.adj.keys()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().cloned().collect()
    }

    /// Neighbours of `v` with edge multiplicities, in token order.
    pub fn neighbors<'a>(&'a self, v: &VertexId) -> impl Iterator<Item = (&'a VertexId, usize)> + 'a {
        self.adj
            .get(v)
            .into_iter()
            .flat_map(|n| n.iter().map(|(w, &m)| (w, m)))
    }

    pub fn degree(&self, v: &VertexId) -> usize {
        self.neighbors(v).map(|(_, m)| m).sum()
    }

    pub fn multiplicity(&self, u: &VertexId, v: &VertexId) -> usize {
        self.adj.get(u).and_then(|n| n.get(v)).copied().unwrap_or(0)
    }

    pub fn has_edge(&self, u: &VertexId, v: &VertexId) -> bool {
        self.multiplicity(u, v) > 0
    }

    /// Distinct edges `(u, v, multiplicity)` with `u < v`, in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (&VertexId, &VertexId, usize)> + '_ {
        self.adj
            .iter()
            .flat_map(|(u, n)| n.iter().filter(move |(v, _)| u < *v).map(move |(v, &m)| (u, v, m)))
    }

    /// Edge list with one entry per parallel copy.
    pub fn edge_list(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, v, m) in self.edges() {
            for _ in 0..m {
                out.push((u.clone(), v.clone()));
            }
        }
        out
    }

    pub fn is_simple(&self) -> bool {
        self.edges().all(|(_, _, m)| m == 1)
    }

    /// The underlying simple graph.
    pub fn simple(&self) -> MultiGraph {
        let mut g = self.clone();
        for n in g.adj.values_mut() {
            for m in n.values_mut() {
                *m = 1;
            }
        }
        g
    }

    pub(crate) fn check_members(&self, x: &VertexSet) -> Result<()> {
        match x.iter().find(|v| !self.contains(v)) {
            Some(v) => input(format!("unknown vertex {v}")),
            None => Ok(()),
        }
    }

    /// Vertices of `x` that send at least one edge out of `x`.
    pub fn boundary(&self, x: &VertexSet) -> Result<VertexSet> {
        self.check_members(x)?;
        Ok(x.iter()
            .filter(|v| self.neighbors(v).any(|(w, _)| !x.contains(w)))
            .cloned()
            .collect())
    }

    /// Subgraph induced by `x`, multiplicities preserved.
    pub fn induced(&self, x: &VertexSet) -> Result<MultiGraph> {
        self.check_members(x)?;
        Ok(self.induced_unchecked(x))
    }

    pub(crate) fn induced_unchecked(&self, x: &VertexSet) -> MultiGraph {
        let adj = self
            .adj
            .iter()
            .filter(|(v, _)| x.contains(*v))
            .map(|(v, n)| {
                let n = n.iter().filter(|(w, _)| x.contains(*w)).map(|(w, &m)| (w.clone(), m)).collect();
                (v.clone(), n)
            })
            .collect();
        MultiGraph { adj }
    }

    /// `self` minus the vertices in `x` (ignoring unknown ones).
    pub fn without(&self, x: &VertexSet) -> MultiGraph {
        let keep: VertexSet = self.vertices().filter(|v| !x.contains(*v)).cloned().collect();
        self.induced_unchecked(&keep)
    }

    /// Quotient by pairwise disjoint `parts`. Each part becomes one vertex
    /// named by [`merged_name`]; edges inside a part are dropped and
    /// parallel edges are kept. Parts need not be connected.
    pub fn contract_sets(&self, parts: &[VertexSet]) -> Result<MultiGraph> {
        let mut owner: BTreeMap<&VertexId, VertexId> = BTreeMap::new();
        for part in parts {
            self.check_members(part)?;
            if part.is_empty() {
                return input("empty contraction part");
            }
            let name = merged_name(part);
            for v in part {
                if owner.insert(v, name.clone()).is_some() {
                    return input(format!("contraction parts overlap at {v}"));
                }
            }
        }
        let image = |v: &VertexId| owner.get(v).cloned().unwrap_or_else(|| v.clone());
        let mut q = MultiGraph::new();
        for v in self.vertices() {
            q.add_vertex(image(v));
        }
        for (u, v, m) in self.edges() {
            let (a, b) = (image(u), image(v));
            if a != b {
                q.add_edges(a, b, m)?;
            }
        }
        Ok(q)
    }

    /// Vertex sets of the connected components, ordered by least member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::new();
        let mut out = Vec::new();
        for s in self.vertices() {
            if seen.contains(s) {
                continue;
            }
            let comp = self.reach(s, |_| true);
            seen.extend(comp.iter().cloned());
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` through vertices accepted by `allow`.
    pub fn reach(&self, s: &VertexId, allow: impl Fn(&VertexId) -> bool) -> VertexSet {
        let mut seen = VertexSet::new();
        if !self.contains(s) {
            return seen;
        }
        seen.insert(s.clone());
        let mut queue = VecDeque::from([s.clone()]);
        while let Some(x) = queue.pop_front() {
            for (w, _) in self.neighbors(&x) {
                if allow(w) && seen.insert(w.clone()) {
                    queue.push_back(w.clone());
                }
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        match self.vertices().next() {
            None => true,
            Some(s) => self.reach(s, |_| true).len() == self.vertex_count(),
        }
    }

    /// Whether `x` induces a nonempty connected subgraph.
    pub fn is_connected_set(&self, x: &VertexSet) -> bool {
        match x.iter().next() {
            None => false,
            Some(s) => self.contains(s) && self.reach(s, |w| x.contains(w)).len() == x.len(),
        }
    }

    /// Shortest path from any vertex of `from` to any vertex of `to`, whose
    /// vertices other than the two ends are accepted by `interior`. Ties are
    /// broken lexicographically by BFS order from the least source.
    pub fn shortest_path(
        &self,
        from: &VertexSet,
        to: &VertexSet,
        interior: impl Fn(&VertexId) -> bool,
    ) -> Option<Vec<VertexId>> {
        if let Some(v) = from.iter().find(|v| to.contains(*v) && self.contains(v)) {
            return Some(vec![v.clone()]);
        }
        let mut pred: BTreeMap<VertexId, Option<VertexId>> = BTreeMap::new();
        let mut queue = VecDeque::new();
        for s in from.iter().filter(|s| self.contains(s)) {
            pred.insert(s.clone(), None);
            queue.push_back(s.clone());
        }
        while let Some(x) = queue.pop_front() {
            for (w, _) in self.neighbors(&x) {
                if pred.contains_key(w) {
                    continue;
                }
                if to.contains(w) {
                    let mut path = vec![w.clone(), x.clone()];
                    let mut cur = x.clone();
                    while let Some(Some(p)) = pred.get(&cur) {
                        path.push(p.clone());
                        cur = p.clone();
                    }
                    path.reverse();
                    return Some(path);
                }
                if interior(w) {
                    pred.insert(w.clone(), Some(x.clone()));
                    queue.push_back(w.clone());
                }
            }
        }
        None
    }

    /// Whether every vertex and edge (with multiplicity) of `self` is in `other`.
    pub fn is_subgraph_of(&self, other: &MultiGraph) -> bool {
        self.vertices().all(|v| other.contains(v))
            && self.edges().all(|(u, v, m)| other.multiplicity(u, v) >= m)
    }

    /// Edge-wise union taking the larger multiplicity of each pair.
    pub fn union(&self, other: &MultiGraph) -> MultiGraph {
        let mut g = self.clone();
        for v in other.vertices() {
            g.add_vertex(v.clone());
        }
        for (u, v, m) in other.edges() {
            let have = g.multiplicity(u, v);
            if m > have {
                g.add_edges(u.clone(), v.clone(), m - have).expect("not a loop");
            }
        }
        g
    }

    /// Renames vertices through `f`, which must be injective on `V(self)`.
    pub fn relabel(&self, f: impl Fn(&VertexId) -> VertexId) -> Result<MultiGraph> {
        let mut g = MultiGraph::new();
        for v in self.vertices() {
            if !g.add_vertex(f(v)) {
                return Err(Error::Input(format!("relabelling is not injective at {v}")));
            }
        }
        for (u, v, m) in self.edges() {
            g.add_edges(f(u), f(v), m)?;
        }
        Ok(g)
    }

    /// Whether the graph is a tree (connected, `|E| = |V| - 1`, simple).
    pub fn is_tree(&self) -> bool {
        self.vertex_count() > 0
            && self.is_connected()
            && self.edge_count() + 1 == self.vertex_count()
    }

    /// Number of edges (with multiplicity) between two disjoint vertex sets.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> usize {
        a.iter()
            .map(|x| self.neighbors(x).filter(|(w, _)| b.contains(*w)).map(|(_, m)| m).sum::<usize>())
            .sum()
    }
}

/// Edge colour of the halved Farey graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Blue,
    Black,
}

/// Simple graph with a colour on every edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredGraph {
    graph: MultiGraph,
    colors: BTreeMap<(VertexId, VertexId), Color>,
}

impl ColoredGraph {
    pub fn new(graph: MultiGraph, colors: BTreeMap<(VertexId, VertexId), Color>) -> Result<Self> {
        if !graph.is_simple() {
            return input("coloured graphs must be simple");
        }
        for (u, v, _) in graph.edges() {
            if !colors.contains_key(&(u.clone(), v.clone())) {
                return input(format!("edge {u}|{v} has no colour"));
            }
        }
        if let Some((u, v)) = colors.keys().find(|(u, v)| !graph.has_edge(u, v) || u > v) {
            return input(format!("colour given for non-edge {u}|{v}"));
        }
        Ok(ColoredGraph { graph, colors })
    }

    pub fn graph(&self) -> &MultiGraph {
        &self.graph
    }

    pub fn into_graph(self) -> MultiGraph {
        self.graph
    }

    pub fn colors(&self) -> &BTreeMap<(VertexId, VertexId), Color> {
        &self.colors
    }

    pub fn color(&self, u: &VertexId, v: &VertexId) -> Option<Color> {
        self.colors.get(&edge_key(u, v)).copied()
    }

    pub fn count(&self, c: Color) -> usize {
        self.colors.values().filter(|&&x| x == c).count()
    }

    /// Edges of the given colour in canonical order.
    pub fn edges_of(&self, c: Color) -> impl Iterator<Item = &(VertexId, VertexId)> + '_ {
        self.colors.iter().filter(move |(_, &x)| x == c).map(|(e, _)| e)
    }
}
