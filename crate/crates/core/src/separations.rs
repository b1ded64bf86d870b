//! Separation systems, stars, S-trees and the tree-edge poset.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::connectivity::Cut;
use crate::error::{input, Error, Result};
use crate::graph::{merged_name, MultiGraph, VertexId, VertexSet};
use crate::io::GraphJson;

/// An oriented tree edge `(x, y)`, pointing towards `y`.
pub type OrientedEdge = (VertexId, VertexId);

/// A separation `(A, B)` of `A ∪ B`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct OrientedSeparation {
    #[serde(rename = "sideA")]
    pub side_a: VertexSet,
    #[serde(rename = "sideB")]
    pub side_b: VertexSet,
}

impl OrientedSeparation {
    pub fn new(side_a: VertexSet, side_b: VertexSet) -> Self {
        OrientedSeparation { side_a, side_b }
    }

    pub fn inverse(&self) -> Self {
        OrientedSeparation { side_a: self.side_b.clone(), side_b: self.side_a.clone() }
    }

    pub fn ground(&self) -> VertexSet {
        self.side_a.union(&self.side_b).cloned().collect()
    }

    /// `(A, B) <= (C, D)` iff `A ⊆ C` and `B ⊇ D`.
    pub fn leq(&self, other: &Self) -> bool {
        self.side_a.is_subset(&other.side_a) && self.side_b.is_superset(&other.side_b)
    }

    /// `B = V`: the separation lies below its own inverse.
    pub fn is_degenerate(&self) -> bool {
        self.side_a.is_subset(&self.side_b)
    }

    /// Whether this is the bipartition of a bond of `g`.
    pub fn is_bond_of(&self, g: &MultiGraph) -> bool {
        self.side_a.is_disjoint(&self.side_b)
            && self.ground() == g.vertex_set()
            && Cut::of(g, self.side_a.clone()).is_bond_of(g)
    }
}

fn dedup(sigma: &[OrientedSeparation]) -> Vec<&OrientedSeparation> {
    let mut v: Vec<&OrientedSeparation> = sigma.iter().collect();
    v.sort();
    v.dedup();
    v
}

fn common_ground(sigma: &[OrientedSeparation]) -> Result<Option<VertexSet>> {
    let mut ground: Option<VertexSet> = None;
    for (i, s) in sigma.iter().enumerate() {
        let g = s.ground();
        match &ground {
            Some(prev) if *prev != g => return input(format!("separation {i} has a different ground set")),
            Some(_) => {}
            None => ground = Some(g),
        }
        if s.is_degenerate() {
            return input(format!("separation {i} is degenerate (its B-side is everything)"));
        }
    }
    Ok(ground)
}

/// Whether `r <= inverse(s)` for all distinct `r, s` in `sigma`.
pub fn is_star(sigma: &[OrientedSeparation]) -> Result<bool> {
    common_ground(sigma)?;
    let items = dedup(sigma);
    Ok(items
        .iter()
        .enumerate()
        .all(|(i, r)| items.iter().enumerate().all(|(j, s)| i == j || r.leq(&s.inverse()))))
}

/// Intersection of the B-sides; `ground` for the empty star.
pub fn star_part(ground: &VertexSet, sigma: &[OrientedSeparation]) -> Result<VertexSet> {
    if let Some(g) = common_ground(sigma)? {
        if g != *ground {
            return input("star is over a different ground set");
        }
    }
    if !is_star(sigma)? {
        return input("not a star");
    }
    let mut part = ground.clone();
    for s in sigma {
        part.retain(|v| s.side_b.contains(v));
    }
    Ok(part)
}

/// An abstract separation system on named elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationSystem {
    names: Vec<String>,
    inverse: Vec<usize>,
    leq: Vec<Vec<bool>>,
}

impl SeparationSystem {
    /// `leq` lists the strict or non-strict relations; reflexivity is added.
    /// Fails unless the result is a partial order reversed by an involution.
    pub fn new(names: Vec<String>, inverse: Vec<usize>, leq: &[(usize, usize)]) -> Result<Self> {
        let n = names.len();
        if inverse.len() != n || inverse.iter().any(|&j| j >= n) {
            return input("inverse map does not match the elements");
        }
        let mut m = vec![vec![false; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in leq {
            if a >= n || b >= n {
                return input(format!("relation ({a}, {b}) names an unknown element"));
            }
            m[a][b] = true;
        }
        let sys = SeparationSystem { names, inverse, leq: m };
        if let Some(problem) = sys.problems().into_iter().next() {
            return Err(Error::Input(problem));
        }
        Ok(sys)
    }

    /// Elements are the separations and their inverses, ordered by `leq`.
    pub fn from_separations(sigma: &[OrientedSeparation]) -> Self {
        let mut elems: Vec<OrientedSeparation> = sigma.iter().flat_map(|s| [s.clone(), s.inverse()]).collect();
        elems.sort();
        elems.dedup();
        let inverse = elems.iter().map(|s| elems.binary_search(&s.inverse()).expect("closed")).collect();
        let leq = elems.iter().map(|r| elems.iter().map(|s| r.leq(s)).collect()).collect();
        let names = elems.iter().map(|s| format!("{:?}|{:?}", s.side_a, s.side_b)).collect();
        SeparationSystem { names, inverse, leq }
    }

    /// The oriented edges of a tree under [`tree_edge_leq`].
    pub fn tree_edges(t: &MultiGraph) -> Result<Self> {
        let d = TreeDistances::new(t)?;
        let mut edges: Vec<OrientedEdge> = Vec::new();
        for (u, v, _) in t.edges() {
            edges.push((u.clone(), v.clone()));
            edges.push((v.clone(), u.clone()));
        }
        edges.sort();
        let inverse = edges.iter().map(|(x, y)| edges.binary_search(&(y.clone(), x.clone())).expect("closed")).collect();
        let leq = edges.iter().map(|e| edges.iter().map(|f| d.edge_leq(e, f)).collect()).collect();
        let names = edges.iter().map(|(x, y)| format!("({x},{y})")).collect();
        Ok(SeparationSystem { names, inverse, leq })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn inverse_of(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i][j]
    }

    /// Violations of the partial-order and involution axioms.
    pub fn problems(&self) -> Vec<String> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            if self.inverse[self.inverse[i]] != i {
                out.push(format!("inverse is not an involution at {}", self.names[i]));
            }
            if !self.leq[i][i] {
                out.push(format!("order is not reflexive at {}", self.names[i]));
            }
            for j in 0..n {
                if i != j && self.leq[i][j] && self.leq[j][i] {
                    out.push(format!("order is not antisymmetric on {} and {}", self.names[i], self.names[j]));
                }
                if self.leq[i][j] != self.leq[self.inverse[j]][self.inverse[i]] {
                    out.push(format!("inverse does not reverse {} <= {}", self.names[i], self.names[j]));
                }
                for k in 0..n {
                    if self.leq[i][j] && self.leq[j][k] && !self.leq[i][k] {
                        out.push(format!("order is not transitive on {}, {}, {}", self.names[i], self.names[j], self.names[k]));
                    }
                }
            }
        }
        out
    }

    /// Whether `r <= inverse(s)` for all distinct members.
    pub fn is_star(&self, members: &[usize]) -> Result<bool> {
        if let Some(&bad) = members.iter().find(|&&i| i >= self.len()) {
            return input(format!("element {bad} out of range"));
        }
        Ok(members
            .iter()
            .all(|&r| members.iter().all(|&s| r == s || self.leq[r][self.inverse[s]])))
    }
}

/// All-pairs distances of a tree.
struct TreeDistances {
    ids: Vec<VertexId>,
    dist: Vec<Vec<usize>>,
}

impl TreeDistances {
    fn new(t: &MultiGraph) -> Result<Self> {
        if !t.is_tree() {
            return input("not a tree");
        }
        let ids: Vec<VertexId> = t.vertices().cloned().collect();
        let idx = |v: &VertexId| ids.binary_search(v).expect("member");
        let mut dist = Vec::with_capacity(ids.len());
        for s in &ids {
            let mut d = vec![usize::MAX; ids.len()];
            d[idx(s)] = 0;
            let mut queue = VecDeque::from([s.clone()]);
            while let Some(x) = queue.pop_front() {
                let dx = d[idx(&x)];
                for (w, _) in t.neighbors(&x) {
                    if d[idx(w)] == usize::MAX {
                        d[idx(w)] = dx + 1;
                        queue.push_back(w.clone());
                    }
                }
            }
            dist.push(d);
        }
        Ok(TreeDistances { ids, dist })
    }

    fn d(&self, a: &VertexId, b: &VertexId) -> usize {
        let i = self.ids.binary_search(a).expect("member");
        let j = self.ids.binary_search(b).expect("member");
        self.dist[i][j]
    }

    fn edge_leq(&self, (x, y): &OrientedEdge, (u, v): &OrientedEdge) -> bool {
        if (x, y) == (u, v) {
            return true;
        }
        if (x, y) == (v, u) {
            return false;
        }
        let yu = self.d(y, u);
        yu < self.d(x, u) && yu < self.d(y, v)
    }
}

fn check_tree_edge(t: &MultiGraph, (x, y): &OrientedEdge) -> Result<()> {
    if t.has_edge(x, y) {
        Ok(())
    } else {
        input(format!("({x},{y}) is not a tree edge"))
    }
}

/// `e <= f` in the tree-edge poset: equal, or distinct with the path
/// between them running from the head of `e` to the tail of `f`.
pub fn tree_edge_leq(t: &MultiGraph, e: &OrientedEdge, f: &OrientedEdge) -> Result<bool> {
    let d = TreeDistances::new(t)?;
    check_tree_edge(t, e)?;
    check_tree_edge(t, f)?;
    Ok(d.edge_leq(e, f))
}

/// All edges oriented towards `node`, by tail.
pub fn oriented_star_at(t: &MultiGraph, node: &VertexId) -> Result<Vec<OrientedEdge>> {
    if !t.contains(node) {
        return input(format!("unknown node {node}"));
    }
    Ok(t.neighbors(node).map(|(x, _)| (x.clone(), node.clone())).collect())
}

/// A tree with separations on its oriented edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct STree {
    tree: MultiGraph,
    alpha: BTreeMap<OrientedEdge, OrientedSeparation>,
}

impl STree {
    /// Missing reverse orientations are filled in with the inverse.
    pub fn new(tree: MultiGraph, alpha: BTreeMap<OrientedEdge, OrientedSeparation>) -> Result<Self> {
        let mut full = alpha.clone();
        for ((x, y), s) in &alpha {
            full.entry((y.clone(), x.clone())).or_insert_with(|| s.inverse());
        }
        let st = STree { tree, alpha: full };
        if let Some(problem) = st.problems().into_iter().next() {
            return Err(Error::Input(problem));
        }
        Ok(st)
    }

    pub fn tree(&self) -> &MultiGraph {
        &self.tree
    }

    pub fn alpha(&self) -> &BTreeMap<OrientedEdge, OrientedSeparation> {
        &self.alpha
    }

    pub fn separation(&self, e: &OrientedEdge) -> Option<&OrientedSeparation> {
        self.alpha.get(e)
    }

    /// The images of the edges oriented towards `node`.
    pub fn star_at(&self, node: &VertexId) -> Result<Vec<OrientedSeparation>> {
        Ok(oriented_star_at(&self.tree, node)?.iter().map(|e| self.alpha[e].clone()).collect())
    }

    /// Violations of the S-tree axioms.
    pub fn problems(&self) -> Vec<String> {
        let Ok(d) = TreeDistances::new(&self.tree) else {
            return vec!["underlying graph is not a tree".into()];
        };
        let mut out = Vec::new();
        let mut edges = Vec::new();
        for (u, v, _) in self.tree.edges() {
            edges.push((u.clone(), v.clone()));
            edges.push((v.clone(), u.clone()));
        }
        for e in &edges {
            if !self.alpha.contains_key(e) {
                out.push(format!("alpha misses ({},{})", e.0, e.1));
            }
        }
        for e in self.alpha.keys() {
            if !self.tree.has_edge(&e.0, &e.1) {
                out.push(format!("alpha names ({},{}), which is not a tree edge", e.0, e.1));
            }
        }
        if !out.is_empty() {
            return out;
        }
        let ground = self.alpha.values().next().map(OrientedSeparation::ground);
        for ((x, y), s) in &self.alpha {
            if Some(s.ground()) != ground {
                out.push(format!("alpha({x},{y}) has a different ground set"));
            }
            if self.alpha[&(y.clone(), x.clone())] != s.inverse() {
                out.push(format!("alpha({y},{x}) is not the inverse of alpha({x},{y})"));
            }
        }
        for e in &edges {
            for f in &edges {
                if d.edge_leq(e, f) && !self.alpha[e].leq(&self.alpha[f]) {
                    out.push(format!("alpha does not propagate ({},{}) <= ({},{})", e.0, e.1, f.0, f.1));
                }
            }
        }
        out
    }
}

/// The S-tree of a spanning tree: each oriented edge `(t1, t2)` maps to the
/// bipartition into the components of `t - t1t2` containing `t1` and `t2`.
pub fn stree_from_spanning_tree(g: &MultiGraph, t: &MultiGraph) -> Result<STree> {
    if !t.is_tree() {
        return input("spanning graph is not a tree");
    }
    if t.vertex_set() != g.vertex_set() {
        return input("tree does not span the graph");
    }
    if let Some((u, v, _)) = t.edges().find(|(u, v, _)| !g.has_edge(u, v)) {
        return input(format!("tree edge {u}{v} is not an edge of the graph"));
    }
    let mut alpha = BTreeMap::new();
    for (u, v, _) in t.edges() {
        let side_u = t.reach(u, |w| w != v);
        let side_v: VertexSet = t.vertices().filter(|w| !side_u.contains(*w)).cloned().collect();
        let s = OrientedSeparation::new(side_u, side_v);
        if !s.is_bond_of(g) {
            return Err(Error::Input(format!("separation at {u}{v} is not a bond")));
        }
        alpha.insert((v.clone(), u.clone()), s.inverse());
        alpha.insert((u.clone(), v.clone()), s);
    }
    STree::new(t.clone(), alpha)
}

/// Keeps the tree edges in `keep` and contracts the others; alpha is
/// restricted to the surviving edges.
pub fn restrict_stree(s: &STree, keep: &[(VertexId, VertexId)]) -> Result<STree> {
    let mut kept = MultiGraph::new();
    for (x, y) in keep {
        if !s.tree.has_edge(x, y) {
            return input(format!("{x}{y} is not an edge of the S-tree"));
        }
        kept.add_edge(x.clone(), y.clone())?;
    }
    let mut contracted = s.tree.clone();
    for (x, y) in keep {
        contracted.remove_edge_all(x, y);
    }
    let parts: Vec<VertexSet> = contracted.components().into_iter().filter(|c| c.len() > 1).collect();
    let image = |v: &VertexId| -> VertexId {
        parts.iter().find(|p| p.contains(v)).map(merged_name).unwrap_or_else(|| v.clone())
    };
    let tree = s.tree.contract_sets(&parts)?;
    let mut alpha = BTreeMap::new();
    for (x, y) in keep {
        alpha.insert((image(x), image(y)), s.alpha[&(x.clone(), y.clone())].clone());
        alpha.insert((image(y), image(x)), s.alpha[&(y.clone(), x.clone())].clone());
    }
    STree::new(tree, alpha)
}

/// Outcome of [`connected_substar`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Substar {
    /// Admitted indices, in admission order; the first is `i_star`.
    pub indices: Vec<usize>,
    pub part: VertexSet,
    pub tree: VertexSet,
    pub shortfall: bool,
}

/// Grows `tree` inside `allowed` until it contains every vertex of `targets`.
fn grow_tree(g: &MultiGraph, tree: &mut VertexSet, targets: &VertexSet, allowed: &VertexSet) -> bool {
    for t in targets {
        if tree.contains(t) {
            continue;
        }
        if tree.is_empty() {
            tree.insert(t.clone());
            continue;
        }
        let goal = VertexSet::from([t.clone()]);
        match g.shortest_path(tree, &goal, |w| allowed.contains(w)) {
            Some(path) => tree.extend(path),
            None => return false,
        }
    }
    true
}

/// Greedily admits star members whose A-side avoids a growing tree that
/// connects all boundaries seen so far, keeping the running part connected.
/// Always sound; `shortfall` reports `|J| < target`.
pub fn connected_substar(g: &MultiGraph, sigma: &[OrientedSeparation], i_star: usize, target: usize) -> Result<Substar> {
    if i_star >= sigma.len() {
        return input(format!("index {i_star} out of range for a star of {}", sigma.len()));
    }
    if !g.is_connected() {
        return input("graph is not connected");
    }
    if let Some(i) = sigma.iter().position(|s| !s.is_bond_of(g)) {
        return input(format!("separation {i} is not a bond of the graph"));
    }
    if !is_star(sigma)? {
        return input("not a star");
    }
    let first = &sigma[i_star].side_b;
    let mut tree = VertexSet::new();
    if !grow_tree(g, &mut tree, &g.boundary(first)?, first) {
        return input(format!("B-side of separation {i_star} does not connect its boundary"));
    }
    let mut part = first.clone();
    let mut indices = vec![i_star];
    for (i, s) in sigma.iter().enumerate() {
        if i == i_star || !s.side_a.is_disjoint(&tree) {
            continue;
        }
        let next: VertexSet = part.intersection(&s.side_b).cloned().collect();
        if !g.is_connected_set(&next) {
            continue;
        }
        let mut grown = tree.clone();
        if !grow_tree(g, &mut grown, &g.boundary(&s.side_b)?, &next) {
            continue;
        }
        tree = grown;
        part = next;
        indices.push(i);
    }
    debug_assert!(g.is_connected_set(&part));
    Ok(Substar { shortfall: indices.len() < target, indices, part, tree })
}

pub const STREE_FORMAT: &str = "fareyforge-stree-v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaJson {
    pub edge: [String; 2],
    #[serde(rename = "sideA")]
    pub side_a: VertexSet,
    #[serde(rename = "sideB")]
    pub side_b: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct STreeJson {
    pub format: String,
    pub tree: GraphJson,
    pub alpha: Vec<AlphaJson>,
}

impl STreeJson {
    pub fn from_stree(s: &STree) -> Self {
        STreeJson {
            format: STREE_FORMAT.to_string(),
            tree: GraphJson::from_graph(&s.tree),
            alpha: s
                .alpha
                .iter()
                .map(|((x, y), sep)| AlphaJson {
                    edge: [x.to_string(), y.to_string()],
                    side_a: sep.side_a.clone(),
                    side_b: sep.side_b.clone(),
                })
                .collect(),
        }
    }

    pub fn decode(&self) -> Result<STree> {
        if self.format != STREE_FORMAT {
            return Err(Error::Parse(format!("format: expected {STREE_FORMAT:?}, found {:?}", self.format)));
        }
        let tree = self.tree.decode()?.into_graph();
        let alpha = self
            .alpha
            .iter()
            .map(|a| {
                let [x, y] = &a.edge;
                ((VertexId::from(x.as_str()), VertexId::from(y.as_str())), OrientedSeparation::new(a.side_a.clone(), a.side_b.clone()))
            })
            .collect();
        STree::new(tree, alpha)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};
    use crate::graph::vset;

    fn e(x: &str, y: &str) -> OrientedEdge {
        (x.into(), y.into())
    }

    fn sep(a: &[&str], g: &MultiGraph) -> OrientedSeparation {
        let side_a = vset(a.iter().copied());
        let side_b = g.vertices().filter(|v| !side_a.contains(*v)).cloned().collect();
        OrientedSeparation::new(side_a, side_b)
    }

    #[test]
    fn tree_edge_order_examples() {
        let p = MultiGraph::from_edges(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
        assert!(tree_edge_leq(&p, &e("a", "b"), &e("c", "d")).unwrap());
        assert!(!tree_edge_leq(&p, &e("b", "a"), &e("c", "d")).unwrap());
        let s = MultiGraph::from_edges(["s", "x", "y"], [("s", "x"), ("s", "y")]).unwrap();
        assert!(tree_edge_leq(&s, &e("x", "s"), &e("s", "y")).unwrap());
        assert!(tree_edge_leq(&s, &e("x", "y"), &e("s", "y")).is_err());
    }

    #[test]
    fn c6_star_and_part() {
        let c6 = cycle(6).unwrap();
        let sigma = [sep(&["v1"], &c6), sep(&["v4"], &c6)];
        assert!(is_star(&sigma).unwrap());
        assert_eq!(star_part(&c6.vertex_set(), &sigma).unwrap(), vset(["v2", "v3", "v5", "v6"]));
        assert!(is_star(&[sigma[0].clone(), sigma[0].inverse()]).unwrap());
        assert!(!is_star(&[sigma[0].clone(), sep(&["v1", "v2"], &c6)]).unwrap());
        assert_eq!(star_part(&c6.vertex_set(), &[]).unwrap(), c6.vertex_set());
        let sub = connected_substar(&c6, &sigma, 0, 2).unwrap();
        assert_eq!(sub.indices, vec![0]);
        assert!(sub.shortfall);
        assert_eq!(sub.part.len(), 5);
    }

    #[test]
    fn c4_spanning_path() {
        let c4 = MultiGraph::from_edges(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap();
        let t = MultiGraph::from_edges(["a", "b", "c", "d"], [("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
        let st = stree_from_spanning_tree(&c4, &t).unwrap();
        let bc = st.separation(&e("b", "c")).unwrap();
        assert_eq!(*bc, OrientedSeparation::new(vset(["a", "b"]), vset(["c", "d"])));
        assert_eq!(Cut::of(&c4, bc.side_a.clone()).size(), 2);
        let r = restrict_stree(&st, &[e("b", "c")]).unwrap();
        assert_eq!(r.tree().vertex_count(), 2);
        assert_eq!(r.separation(&e("a+b", "c+d")), Some(bc));
        assert_eq!(restrict_stree(&st, &[e("a", "b"), e("b", "c"), e("c", "d")]).unwrap(), st);
        assert!(restrict_stree(&st, &[e("a", "c")]).is_err());
    }

    #[test]
    fn k4_hub_star() {
        let k4 = complete(4);
        let t = MultiGraph::from_edges(["1", "2", "3", "4"], [("1", "2"), ("1", "3"), ("1", "4")]).unwrap();
        let st = stree_from_spanning_tree(&k4, &t).unwrap();
        let star = st.star_at(&"1".into()).unwrap();
        assert!(is_star(&star).unwrap());
        assert_eq!(star_part(&k4.vertex_set(), &star).unwrap(), vset(["1"]));
        for s in &star {
            assert_eq!(Cut::of(&k4, s.side_a.clone()).size(), 3);
        }
    }

    #[test]
    fn star_graph_admits_everything() {
        let mut g = MultiGraph::new();
        for i in 1..=5 {
            g.add_edge("c", format!("l{i}")).unwrap();
        }
        let sigma: Vec<_> = (1..=5).map(|i| sep(&[&format!("l{i}")], &g)).collect();
        let sub = connected_substar(&g, &sigma, 2, 5).unwrap();
        assert_eq!(sub.indices.len(), 5);
        assert!(!sub.shortfall);
        assert!(connected_substar(&g, &sigma, 5, 1).is_err());
    }

    #[test]
    fn tree_edge_system_is_valid() {
        let p = path(5);
        let sys = SeparationSystem::tree_edges(&p).unwrap();
        assert!(sys.problems().is_empty());
        assert!(SeparationSystem::new(vec!["a".into()], vec![0], &[]).is_ok());
    }

    #[test]
    fn degenerate_members_are_rejected() {
        let g = path(3);
        let degenerate = OrientedSeparation::new(vset(["v1"]), g.vertex_set());
        assert!(is_star(&[degenerate]).is_err());
    }
}
