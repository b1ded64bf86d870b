//! Exhaustive isomorphism test for multigraphs.

use std::collections::BTreeMap;

use fareyforge_core::{MultiGraph, VertexId};

struct Dense {
    mult: Vec<Vec<usize>>,
}

impl Dense {
    fn new(g: &MultiGraph) -> (Self, Vec<VertexId>) {
        let ids: Vec<VertexId> = g.vertices().cloned().collect();
        let ix: BTreeMap<&VertexId, usize> = ids.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut mult = vec![vec![0; ids.len()]; ids.len()];
        for (a, b, m) in g.edges() {
            mult[ix[a]][ix[b]] = m;
            mult[ix[b]][ix[a]] = m;
        }
        (Dense { mult }, ids)
    }
}

/// Colour refinement run on both graphs with a shared palette, so that a
/// colour means the same thing on either side.
fn joint_colours(a: &Dense, b: &Dense) -> (Vec<usize>, Vec<usize>) {
    let n = a.mult.len();
    let mut ca = vec![0; n];
    let mut cb = vec![0; n];
    loop {
        let sig = |d: &Dense, c: &[usize], v: usize| {
            let mut s: Vec<(usize, usize)> = (0..n).filter(|&w| d.mult[v][w] > 0).map(|w| (c[w], d.mult[v][w])).collect();
            s.sort_unstable();
            (c[v], s)
        };
        let sa: Vec<_> = (0..n).map(|v| sig(a, &ca, v)).collect();
        let sb: Vec<_> = (0..n).map(|v| sig(b, &cb, v)).collect();
        let palette: BTreeMap<_, usize> = sa.iter().chain(&sb).cloned().map(|s| (s, 0)).collect();
        let palette: BTreeMap<_, usize> = palette.into_keys().enumerate().map(|(i, s)| (s, i)).collect();
        let na: Vec<usize> = sa.iter().map(|s| palette[s]).collect();
        let nb: Vec<usize> = sb.iter().map(|s| palette[s]).collect();
        let classes = |c: &[usize]| c.iter().collect::<std::collections::BTreeSet<_>>().len();
        let stable = classes(&na) == classes(&ca) && classes(&nb) == classes(&cb);
        ca = na;
        cb = nb;
        if stable {
            return (ca, cb);
        }
    }
}

fn extend(a: &Dense, b: &Dense, ca: &[usize], cb: &[usize], order: &[usize], map: &mut Vec<Option<usize>>, used: &mut [bool]) -> bool {
    let depth = map.iter().filter(|m| m.is_some()).count();
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..b.mult.len() {
        if used[w] || cb[w] != ca[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&x| a.mult[v][x] == b.mult[w][map[x].expect("mapped")]);
        if !consistent {
            continue;
        }
        map[v] = Some(w);
        used[w] = true;
        if extend(a, b, ca, cb, order, map, used) {
            return true;
        }
        map[v] = None;
        used[w] = false;
    }
    false
}

/// An isomorphism `g -> h`, found by backtracking over refined colours.
pub fn isomorphism(g: &MultiGraph, h: &MultiGraph) -> Option<BTreeMap<VertexId, VertexId>> {
    if g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count() {
        return None;
    }
    let (a, ga) = Dense::new(g);
    let (b, hb) = Dense::new(h);
    let (ca, cb) = joint_colours(&a, &b);
    let mut sa = ca.clone();
    let mut sb = cb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }
    // visit vertices so that each one after the first has a mapped neighbour when possible
    let n = ga.len();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (order.iter().filter(|&&x| a.mult[v][x] > 0).count(), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed[next] = true;
        order.push(next);
    }
    let mut map = vec![None; n];
    let mut used = vec![false; n];
    if !extend(&a, &b, &ca, &cb, &order, &mut map, &mut used) {
        return None;
    }
    Some((0..n).map(|v| (ga[v].clone(), hb[map[v].expect("complete")].clone())).collect())
}

pub fn are_isomorphic(g: &MultiGraph, h: &MultiGraph) -> bool {
    isomorphism(g, h).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use fareyforge_core::generators::{complete_bipartite, cycle, path};

    #[test]
    fn small_cases() {
        let c6 = cycle(6).unwrap();
        let relabelled = c6.relabel(|v| VertexId::new(format!("x{v}"))).unwrap();
        assert!(are_isomorphic(&c6, &relabelled));
        let two_triangles = MultiGraph::from_edges(
            ["a", "b", "c", "d", "e", "f"],
            [("a", "b"), ("b", "c"), ("a", "c"), ("d", "e"), ("e", "f"), ("d", "f")],
        )
        .unwrap();
        assert!(!are_isomorphic(&c6, &two_triangles));
        assert!(!are_isomorphic(&complete_bipartite(2, 3), &path(5)));
        let mut doubled = path(3);
        doubled.add_edge("v1", "v2").unwrap();
        let mut other = path(3);
        other.add_edge("v2", "v3").unwrap();
        assert!(are_isomorphic(&doubled, &other));
    }
}
