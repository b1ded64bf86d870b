//! Edge-connectivity: pairwise and global λ, Menger path extraction, bond
//! enumeration, the `~_k` equivalence and order-compatible paths.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::flow::{Indexed, Network, INF};
use crate::graph::{MultiGraph, VertexId, VertexSet};

/// Largest vertex count accepted by [`enumerate_bonds`].
pub const BOND_VERTEX_CAP: usize = 22;

/// An edge cut between two complementary nonempty vertex sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cut {
    #[serde(rename = "sideA")]
    pub side_a: VertexSet,
    #[serde(rename = "sideB")]
    pub side_b: VertexSet,
    /// One entry per crossing edge copy, endpoints ordered `(A-side, B-side)`.
    pub crossing: Vec<(VertexId, VertexId)>,
}

impl Cut {
    /// The cut of `g` with `side_a` on one side and the rest on the other.
    pub fn of(g: &MultiGraph, side_a: VertexSet) -> Cut {
        let side_b: VertexSet = g.vertices().filter(|v| !side_a.contains(*v)).cloned().collect();
        let mut crossing = Vec::new();
        for a in &side_a {
            for (b, m) in g.neighbors(a) {
                if side_b.contains(b) {
                    crossing.extend(std::iter::repeat_n((a.clone(), b.clone()), m));
                }
            }
        }
        Cut { side_a, side_b, crossing }
    }

    pub fn size(&self) -> usize {
        self.crossing.len()
    }

    /// Whether both sides are nonempty and induce connected subgraphs.
    pub fn is_bond_of(&self, g: &MultiGraph) -> bool {
        g.is_connected_set(&self.side_a) && g.is_connected_set(&self.side_b)
    }
}

fn endpoints(g: &MultiGraph, u: &VertexId, v: &VertexId) -> Result<(Indexed, usize, usize)> {
    if u == v {
        return input(format!("endpoints coincide at {u}"));
    }
    let ix = Indexed::new(g);
    let s = ix.index(u).ok_or_else(|| Error::Input(format!("unknown vertex {u}")))?;
    let t = ix.index(v).ok_or_else(|| Error::Input(format!("unknown vertex {v}")))?;
    Ok((ix, s, t))
}

/// Size of a minimum `u`-`v` edge cut, counting multiplicities.
pub fn lambda_pair(g: &MultiGraph, u: &VertexId, v: &VertexId) -> Result<usize> {
    let (ix, s, t) = endpoints(g, u, v)?;
    Ok(ix.edge_network().max_flow(s, t, INF) as usize)
}

/// A minimum edge cut of `g`, or `None` when `g` has fewer than two vertices.
/// The returned side A contains the least vertex.
pub fn global_min_cut(g: &MultiGraph) -> Option<Cut> {
    let ix = Indexed::new(g);
    if ix.ids.len() < 2 {
        return None;
    }
    let mut net = ix.edge_network();
    let mut best: Option<(i64, Vec<bool>)> = None;
    for t in 1..ix.ids.len() {
        net.reset();
        let limit = best.as_ref().map_or(INF, |(f, _)| *f + 1);
        let f = net.max_flow(0, t, limit);
        if best.as_ref().is_none_or(|(b, _)| f < *b) {
            best = Some((f, net.residual_reach(0)));
            if f == 0 {
                break;
            }
        }
    }
    let (_, reach) = best?;
    let side_a = ix.ids.iter().zip(&reach).filter(|(_, &r)| r).map(|(v, _)| v.clone()).collect();
    Some(Cut::of(g, side_a))
}

/// Global edge-connectivity; 0 for disconnected graphs and for graphs with
/// fewer than two vertices.
pub fn lambda_global(g: &MultiGraph) -> usize {
    global_min_cut(g).map_or(0, |c| c.size())
}

/// Edge-connectivity between two disjoint vertex sets.
pub fn lambda_sets(g: &MultiGraph, a: &VertexSet, b: &VertexSet) -> Result<usize> {
    if a.is_empty() || b.is_empty() {
        return Ok(0);
    }
    if let Some(v) = a.intersection(b).next() {
        return input(format!("vertex sets overlap at {v}"));
    }
    let q = g.contract_sets(&[a.clone(), b.clone()])?;
    lambda_pair(&q, &crate::graph::merged_name(a), &crate::graph::merged_name(b))
}

/// Up to `want` pairwise edge-disjoint `u`-`v` paths drawn from one integral
/// maximum flow. The count is `min(want, λ(u, v))`.
pub fn edge_disjoint_paths(
    g: &MultiGraph,
    u: &VertexId,
    v: &VertexId,
    want: usize,
) -> Result<Vec<Vec<VertexId>>> {
    let (ix, s, t) = endpoints(g, u, v)?;
    let mut net = ix.edge_network();
    let value = net.max_flow(s, t, want.min(INF as usize) as i64) as usize;
    let paths = net
        .decompose(s, t, value)
        .into_iter()
        .map(|p| p.into_iter().map(|i| ix.ids[i].clone()).collect())
        .collect();
    Ok(paths)
}

/// Every bond (cut with both sides connected) of at most `max_size` edges,
/// one per side swap, ordered by the side containing the least vertex.
pub fn enumerate_bonds(g: &MultiGraph, max_size: usize) -> Result<Vec<Cut>> {
    let ix = Indexed::new(g);
    let n = ix.ids.len();
    if n > BOND_VERTEX_CAP {
        return Err(Error::Resource(format!("bond enumeration over {n} vertices exceeds cap {BOND_VERTEX_CAP}")));
    }
    if n < 2 {
        return Ok(Vec::new());
    }
    let nbr: Vec<u32> = ix.adj.iter().map(|a| a.iter().fold(0u32, |m, &(w, _)| m | 1 << w)).collect();
    let connected = |mask: u32| -> bool {
        let start = mask & mask.wrapping_neg();
        let mut seen = start;
        let mut frontier = start;
        while frontier != 0 {
            let x = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let new = nbr[x] & mask & !seen;
            seen |= new;
            frontier |= new;
        }
        seen == mask
    };
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut out = Vec::new();
    // side A always holds vertex 0
    for rest in 0..(1u32 << (n - 1)) {
        let a = (rest << 1) | 1;
        if a == full {
            continue;
        }
        let b = full & !a;
        let mut size = 0usize;
        for x in 0..n {
            if a >> x & 1 == 1 {
                size += ix.adj[x].iter().filter(|(w, _)| b >> w & 1 == 1).map(|(_, m)| m).sum::<usize>();
            }
        }
        if size <= max_size && connected(a) && connected(b) {
            let side_a = (0..n).filter(|x| a >> x & 1 == 1).map(|x| ix.ids[x].clone()).collect();
            out.push(Cut::of(g, side_a));
        }
    }
    out.sort_by(|x, y| x.side_a.iter().cmp(y.side_a.iter()));
    Ok(out)
}

/// Partition of `V` into classes of the relation `λ(x, y) >= k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KClassPartition {
    pub k: usize,
    pub classes: Vec<VertexSet>,
}

impl KClassPartition {
    pub fn class_of(&self, v: &VertexId) -> Option<&VertexSet> {
        self.classes.iter().find(|c| c.contains(v))
    }

    /// Whether every class of `self` lies inside a class of `coarser`.
    pub fn refines(&self, coarser: &KClassPartition) -> bool {
        self.classes
            .iter()
            .all(|c| coarser.classes.iter().any(|d| c.is_subset(d)))
    }

    /// Edges of `g` joining distinct classes, one entry per copy.
    pub fn cross_edges(&self, g: &MultiGraph) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for (u, v, m) in g.edges() {
            if self.class_of(u) != self.class_of(v) {
                out.extend(std::iter::repeat_n((u.clone(), v.clone()), m));
            }
        }
        out
    }
}

/// Classes of `~_k`. The relation is transitive because
/// `λ(x, z) >= min(λ(x, y), λ(y, z))`, so one representative test per class
/// suffices.
pub fn k_classes(g: &MultiGraph, k: usize) -> Result<KClassPartition> {
    if k == 0 {
        return input("k must be at least 1");
    }
    let ix = Indexed::new(g);
    let mut net = ix.edge_network();
    let n = ix.ids.len();
    let mut class = vec![usize::MAX; n];
    let mut classes: Vec<VertexSet> = Vec::new();
    for s in 0..n {
        if class[s] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class[s] = id;
        let mut members = BTreeSet::from([ix.ids[s].clone()]);
        for t in s + 1..n {
            if class[t] != usize::MAX {
                continue;
            }
            net.reset();
            if net.max_flow(s, t, k as i64) >= k as i64 {
                class[t] = id;
                members.insert(ix.ids[t].clone());
            }
        }
        classes.push(members);
    }
    Ok(KClassPartition { k, classes })
}

/// Contracts each class of `p` to one vertex.
pub fn quotient_by_classes(g: &MultiGraph, p: &KClassPartition) -> Result<MultiGraph> {
    let parts: Vec<VertexSet> = p.classes.iter().filter(|c| c.len() > 1).cloned().collect();
    g.contract_sets(&parts)
}

/// Whether two paths with the same ends meet their common vertices in the
/// same order.
pub fn order_compatible(p: &[VertexId], q: &[VertexId]) -> Result<bool> {
    if p.is_empty() || q.is_empty() || p[0] != q[0] || p.last() != q.last() {
        return input("paths must share both endpoints");
    }
    let qpos: BTreeMap<&VertexId, usize> = q.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let order: Vec<usize> = p.iter().filter_map(|v| qpos.get(v).copied()).collect();
    Ok(order.windows(2).all(|w| w[0] < w[1]))
}

/// Minimum vertex set separating non-adjacent `a` and `b` in `g`, taken
/// on the `a` side of the residual network. `None` when `a` and `b` are
/// adjacent.
pub fn min_vertex_separator(g: &MultiGraph, a: &VertexId, b: &VertexId) -> Result<Option<VertexSet>> {
    let (ix, s, t) = endpoints(g, a, b)?;
    if g.has_edge(a, b) {
        return Ok(None);
    }
    let n = ix.ids.len();
    // node x splits into x (in) and n + x (out)
    let mut net = Network::new(2 * n);
    for x in 0..n {
        let cap = if x == s || x == t { INF } else { 1 };
        net.add_arc(x, n + x, cap);
    }
    for (x, nbrs) in ix.adj.iter().enumerate() {
        for &(y, _) in nbrs {
            net.add_arc(n + x, y, INF);
        }
    }
    net.max_flow(n + s, t, INF);
    let reach = net.residual_reach(n + s);
    Ok(Some(
        (0..n)
            .filter(|&x| x != s && x != t && reach[x] && !reach[n + x])
            .map(|x| ix.ids[x].clone())
            .collect(),
    ))
}

/// Whether deleting `sep` disconnects `a` from `b`.
pub fn separates(g: &MultiGraph, sep: &VertexSet, a: &VertexId, b: &VertexId) -> bool {
    !sep.contains(a) && !sep.contains(b) && !g.reach(a, |w| !sep.contains(w)).contains(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, halved_farey, path};
    use crate::graph::vset;

    fn two_k4_bridge() -> MultiGraph {
        let mut g = MultiGraph::new();
        for side in ["a", "b"] {
            for i in 1..=4 {
                for j in 1..i {
                    g.add_edge(format!("{side}{j}"), format!("{side}{i}")).unwrap();
                }
            }
        }
        g.add_edge("a1", "b1").unwrap();
        g
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(lambda_global(&complete(4)), 3);
        assert_eq!(lambda_global(&halved_farey(2).unwrap().into_graph()), 2);
        let mut two = MultiGraph::new();
        two.add_edges("a", "b", 2).unwrap();
        assert_eq!(lambda_pair(&two, &"a".into(), &"b".into()).unwrap(), 2);
        assert!(lambda_pair(&two, &"a".into(), &"a".into()).is_err());
        let mut split = complete(3);
        split.add_vertex("z");
        assert_eq!(lambda_global(&split), 0);
    }

    #[test]
    fn disjoint_path_examples() {
        assert_eq!(edge_disjoint_paths(&complete(4), &"1".into(), &"2".into(), 3).unwrap().len(), 3);
        let c6 = cycle(6).unwrap();
        assert_eq!(edge_disjoint_paths(&c6, &"v1".into(), &"v4".into(), 5).unwrap().len(), 2);
        // both ends of the base edge have degree 3 in the order-2 graph
        let f2 = halved_farey(2).unwrap().into_graph();
        let paths = edge_disjoint_paths(&f2, &"0/1".into(), &"1/0".into(), 3).unwrap();
        assert_eq!(paths.len(), 3);
    }

    #[test]
    fn bond_examples() {
        assert_eq!(enumerate_bonds(&complete(3), 2).unwrap().len(), 3);
        assert_eq!(enumerate_bonds(&path(3), 1).unwrap().len(), 2);
        assert_eq!(enumerate_bonds(&complete(4), 2).unwrap().len(), 0);
    }

    #[test]
    fn class_examples() {
        let p = k_classes(&two_k4_bridge(), 2).unwrap();
        assert_eq!(p.classes, vec![vset(["a1", "a2", "a3", "a4"]), vset(["b1", "b2", "b3", "b4"])]);
        assert_eq!(k_classes(&complete(5), 4).unwrap().classes.len(), 1);
        assert_eq!(k_classes(&cycle(5).unwrap(), 1).unwrap().classes.len(), 1);
        let q = quotient_by_classes(&two_k4_bridge(), &p).unwrap();
        assert_eq!((q.vertex_count(), q.edge_count()), (2, 1));
    }

    #[test]
    fn order_compatibility_examples() {
        let ids = |s: &[&str]| s.iter().map(|&t| VertexId::from(t)).collect::<Vec<_>>();
        assert!(!order_compatible(&ids(&["u", "x", "y", "v"]), &ids(&["u", "y", "x", "v"])).unwrap());
        assert!(order_compatible(&ids(&["u", "x", "v"]), &ids(&["u", "y", "v"])).unwrap());
        assert!(order_compatible(&ids(&["u", "x", "v"]), &ids(&["w", "v"])).is_err());
    }

    #[test]
    fn vertex_separator_in_cycle() {
        let c6 = cycle(6).unwrap();
        let s = min_vertex_separator(&c6, &"v1".into(), &"v4".into()).unwrap().unwrap();
        assert_eq!(s.len(), 2);
        assert!(separates(&c6, &s, &"v1".into(), &"v4".into()));
        assert!(min_vertex_separator(&c6, &"v1".into(), &"v2".into()).unwrap().is_none());
    }
}
