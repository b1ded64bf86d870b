//! Brute-force answers on small graphs.

use std::collections::BTreeMap;

use fareyforge_core::{MultiGraph, VertexId, VertexSet};

use crate::canon::Small;

fn indexed(g: &MultiGraph) -> (Vec<VertexId>, Vec<(usize, usize, usize)>) {
    let ids: Vec<VertexId> = g.vertices().cloned().collect();
    let ix: BTreeMap<&VertexId, usize> = ids.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let edges = g.edges().map(|(a, b, m)| (ix[a], ix[b], m)).collect();
    (ids, edges)
}

/// Minimum number of edges (with multiplicity) crossing a bipartition into
/// two nonempty sides, over all bipartitions. Zero for fewer than two
/// vertices.
pub fn brute_lambda(g: &MultiGraph) -> usize {
    let (ids, edges) = indexed(g);
    let n = ids.len();
    if n < 2 {
        return 0;
    }
    assert!(n <= 20, "too many vertices for subset enumeration");
    (1u32..1 << (n - 1))
        .map(|mask| {
            let side = |v: usize| v < n - 1 && mask >> v & 1 == 1;
            edges.iter().filter(|(a, b, _)| side(*a) != side(*b)).map(|(_, _, m)| m).sum::<usize>()
        })
        .min()
        .expect("at least one bipartition")
}

/// Every spanning tree of `g`, as a graph on all of `V(g)`. Parallel edges
/// yield the same tree once.
pub fn spanning_trees(g: &MultiGraph) -> Vec<MultiGraph> {
    let (ids, edges) = indexed(g);
    let n = ids.len();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    pick(&edges, 0, n.saturating_sub(1), &mut chosen, &mut |set: &[usize]| {
        let mut root: Vec<usize> = (0..n).collect();
        fn find(r: &mut [usize], x: usize) -> usize {
            if r[x] == x {
                x
            } else {
                let p = find(r, r[x]);
                r[x] = p;
                p
            }
        }
        for &e in set {
            let (a, b, _) = edges[e];
            let (ra, rb) = (find(&mut root, a), find(&mut root, b));
            if ra == rb {
                return;
            }
            root[ra] = rb;
        }
        let mut t = MultiGraph::new();
        for v in &ids {
            t.add_vertex(v.clone());
        }
        for &e in set {
            let (a, b, _) = edges[e];
            t.add_edge(ids[a].clone(), ids[b].clone()).expect("distinct");
        }
        out.push(t);
    });
    out
}

fn pick<T>(items: &[T], from: usize, left: usize, chosen: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if left == 0 {
        f(chosen);
        return;
    }
    for i in from..items.len() {
        if items.len() - i < left {
            break;
        }
        chosen.push(i);
        pick(items, i + 1, left - 1, chosen, f);
        chosen.pop();
    }
}

/// Whether some centre sends `k` paths to distinct vertices of `u`, the
/// paths meeting only in the centre. Leaves are taken in increasing order.
pub fn star_exists(g: &Small, u: u32, k: usize) -> bool {
    fn more(g: &Small, u: u32, k: usize, c: usize, used: u32, found: usize, min_leaf: usize) -> bool {
        found >= k || walk(g, u, k, c, c, used, found, min_leaf)
    }
    fn walk(g: &Small, u: u32, k: usize, c: usize, x: usize, used: u32, found: usize, min_leaf: usize) -> bool {
        let mut free = g.adj[x] & !used;
        while free != 0 {
            let y = free.trailing_zeros() as usize;
            free &= free - 1;
            let used = used | 1 << y;
            if u >> y & 1 == 1 && y >= min_leaf && more(g, u, k, c, used, found + 1, y + 1) {
                return true;
            }
            if walk(g, u, k, c, y, used, found, min_leaf) {
                return true;
            }
        }
        false
    }
    k == 0 || (0..g.n).filter(|&c| g.adj[c].count_ones() as usize >= k).any(|c| more(g, u, k, c, 1 << c, 0, 0))
}

/// Whether some path has `k` disjoint teeth ending in `u`: spine vertices
/// of `u` are trivial teeth, every other tooth leaves the spine at a
/// distinct vertex and then avoids it.
pub fn comb_exists(g: &Small, u: u32, k: usize) -> bool {
    fn teeth(g: &Small, u: u32, need: usize, starts: &[usize], from: usize, used: u32) -> bool {
        if need == 0 {
            return true;
        }
        (from..starts.len()).any(|i| tooth(g, u, need, starts, i, starts[i], used))
    }
    fn tooth(g: &Small, u: u32, need: usize, starts: &[usize], i: usize, x: usize, used: u32) -> bool {
        let mut free = g.adj[x] & !used;
        while free != 0 {
            let y = free.trailing_zeros() as usize;
            free &= free - 1;
            let used = used | 1 << y;
            if u >> y & 1 == 1 && teeth(g, u, need - 1, starts, i + 1, used) {
                return true;
            }
            if tooth(g, u, need, starts, i, y, used) {
                return true;
            }
        }
        false
    }
    fn spine(g: &Small, u: u32, k: usize, path: &mut Vec<usize>, used: u32) -> bool {
        let first = path[0];
        let last = *path.last().expect("nonempty");
        if path.len() == 1 || first < last {
            let trivial = (used & u).count_ones() as usize;
            let starts: Vec<usize> = path.iter().copied().filter(|&p| u >> p & 1 == 0).collect();
            if trivial >= k || teeth(g, u, k - trivial, &starts, 0, used) {
                return true;
            }
        }
        let mut free = g.adj[last] & !used;
        while free != 0 {
            let y = free.trailing_zeros() as usize;
            free &= free - 1;
            path.push(y);
            let hit = spine(g, u, k, path, used | 1 << y);
            path.pop();
            if hit {
                return true;
            }
        }
        false
    }
    k == 0 || (0..g.n).any(|s| spine(g, u, k, &mut vec![s], 1 << s))
}

/// Vertex set of a `Small` vertex mask, named as in [`Small::to_graph`].
pub fn mask_to_set(mask: u32) -> VertexSet {
    (0..32).filter(|v| mask >> v & 1 == 1).map(|v| VertexId::new((v + 1).to_string())).collect()
}
