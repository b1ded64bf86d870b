//! Independent checkers used by the acceptance and CLI suites. Nothing here
//! calls into the library's own validators.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use fareyforge_core::{MultiGraph, VertexId, VertexSet};

pub type Pair = (VertexId, VertexId);

pub fn pair(a: &VertexId, b: &VertexId) -> Pair {
    if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    }
}

/// Simple edge set with multiplicities.
pub fn edge_multiset(g: &MultiGraph) -> BTreeMap<Pair, usize> {
    let mut out = BTreeMap::new();
    for v in g.vertices() {
        for (w, m) in g.neighbors(v) {
            if v < w {
                out.insert(pair(v, w), m);
            }
        }
    }
    out
}

pub fn connected_within(g: &MultiGraph, set: &VertexSet) -> bool {
    let Some(start) = set.iter().next() else { return false };
    let mut seen = VertexSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(x) = queue.pop_front() {
        for (y, _) in g.neighbors(&x) {
            if set.contains(y) && seen.insert(y.clone()) {
                queue.push_back(y.clone());
            }
        }
    }
    seen.len() == set.len()
}

/// Vertices of `x` with a neighbour outside `x`.
pub fn boundary(g: &MultiGraph, x: &VertexSet) -> VertexSet {
    x.iter().filter(|v| g.neighbors(v).any(|(w, _)| !x.contains(w))).cloned().collect()
}

pub fn edges_between(g: &MultiGraph, a: &VertexSet, b: &VertexSet) -> usize {
    a.iter().flat_map(|v| g.neighbors(v).filter(|(w, _)| b.contains(*w)).map(|(_, m)| m)).sum()
}

/// Branch sets nonempty, disjoint, connected, inside the host, and every
/// pattern edge carried by as many host edges between its two sets.
pub fn check_model(host: &MultiGraph, pattern: &MultiGraph, sets: &BTreeMap<VertexId, VertexSet>) -> Result<(), String> {
    let mut used = VertexSet::new();
    for x in pattern.vertices() {
        let set = sets.get(x).ok_or(format!("no branch set for {x}"))?;
        if set.is_empty() || !connected_within(host, set) {
            return Err(format!("branch set of {x} is empty or disconnected"));
        }
        for v in set {
            if !host.contains(v) || !used.insert(v.clone()) {
                return Err(format!("vertex {v} missing from host or reused"));
            }
        }
    }
    if sets.keys().any(|x| !pattern.contains(x)) {
        return Err("branch set for a vertex outside the pattern".into());
    }
    for ((x, y), m) in edge_multiset(pattern) {
        if edges_between(host, &sets[&x], &sets[&y]) < m {
            return Err(format!("pattern edge {x}-{y} is not carried"));
        }
    }
    Ok(())
}

/// Brute force over all maps from host vertices to pattern vertices or
/// "unused"; only for tiny hosts.
pub fn brute_minor_exists(host: &MultiGraph, pattern: &MultiGraph) -> bool {
    let hv: Vec<VertexId> = host.vertices().cloned().collect();
    let pv: Vec<VertexId> = pattern.vertices().cloned().collect();
    let slots = pv.len() + 1;
    let total = slots.pow(hv.len() as u32);
    (0..total).any(|mut code| {
        let mut sets: BTreeMap<VertexId, VertexSet> = BTreeMap::new();
        for v in &hv {
            let s = code % slots;
            code /= slots;
            if s < pv.len() {
                sets.entry(pv[s].clone()).or_default().insert(v.clone());
            }
        }
        check_model(host, pattern, &sets).is_ok()
    })
}

/// Stoer–Wagner on a dense weight matrix; `None` for fewer than two vertices.
pub fn stoer_wagner(g: &MultiGraph) -> Option<usize> {
    let vs: Vec<&VertexId> = g.vertices().collect();
    let n = vs.len();
    if n < 2 {
        return None;
    }
    let ix: BTreeMap<&VertexId, usize> = vs.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut w = vec![vec![0usize; n]; n];
    for (i, v) in vs.iter().enumerate() {
        for (u, m) in g.neighbors(v) {
            w[i][ix[u]] += m;
        }
    }
    let mut alive: Vec<usize> = (0..n).collect();
    let mut best = usize::MAX;
    while alive.len() > 1 {
        let mut added = vec![false; n];
        let mut key = vec![0usize; n];
        let (mut prev, mut last) = (alive[0], alive[0]);
        for _ in 0..alive.len() {
            let next = *alive.iter().filter(|&&x| !added[x]).max_by_key(|&&x| key[x]).expect("some vertex left");
            added[next] = true;
            prev = last;
            last = next;
            for &x in &alive {
                if !added[x] {
                    key[x] += w[next][x];
                }
            }
        }
        best = best.min(key[last]);
        for &x in &alive {
            w[prev][x] += w[last][x];
            w[x][prev] = w[prev][x];
        }
        w[prev][prev] = 0;
        alive.retain(|&x| x != last);
    }
    Some(best)
}

/// Minimum number of edges between a set containing `u` and its complement
/// containing `v`, by enumeration.
pub fn brute_pair_lambda(g: &MultiGraph, u: &VertexId, v: &VertexId) -> usize {
    let vs: Vec<VertexId> = g.vertices().cloned().collect();
    let iu = vs.iter().position(|x| x == u).expect("u in graph");
    let iv = vs.iter().position(|x| x == v).expect("v in graph");
    let mut best = usize::MAX;
    for mask in 0u32..(1 << vs.len()) {
        if mask >> iu & 1 == 0 || mask >> iv & 1 == 1 {
            continue;
        }
        let a: VertexSet = (0..vs.len()).filter(|i| mask >> i & 1 == 1).map(|i| vs[i].clone()).collect();
        let b: VertexSet = g.vertices().filter(|x| !a.contains(*x)).cloned().collect();
        best = best.min(edges_between(g, &a, &b));
    }
    best
}

/// The quotient of `g` with `x` shrunk to one vertex named `*`.
pub fn shrink(g: &MultiGraph, x: &VertexSet) -> MultiGraph {
    let star = VertexId::new("*");
    let image = |v: &VertexId| if x.contains(v) { star.clone() } else { v.clone() };
    let mut q = MultiGraph::new();
    for v in g.vertices() {
        q.add_vertex(image(v));
    }
    for ((a, b), m) in edge_multiset(g) {
        let (a, b) = (image(&a), image(&b));
        if a != b {
            q.add_edges(a, b, m).expect("distinct ends");
        }
    }
    q
}

pub fn is_path(g: &MultiGraph, p: &[VertexId]) -> bool {
    let distinct: BTreeSet<&VertexId> = p.iter().collect();
    !p.is_empty() && distinct.len() == p.len() && p.iter().all(|v| g.contains(v)) && p.windows(2).all(|w| g.has_edge(&w[0], &w[1]))
}

pub fn is_cycle(g: &MultiGraph, c: &[VertexId]) -> bool {
    c.len() >= 3 && is_path(g, c) && g.has_edge(&c[0], &c[c.len() - 1])
}

/// Star: paths from a common centre to distinct vertices of `u`, disjoint
/// apart from the centre, at least `k` of them.
pub fn check_star(g: &MultiGraph, center: &VertexId, paths: &[Vec<VertexId>], u: &VertexSet, k: usize) -> bool {
    let mut used = VertexSet::new();
    paths.len() >= k
        && paths.iter().all(|p| {
            p.len() >= 2 && &p[0] == center && is_path(g, p) && u.contains(&p[p.len() - 1]) && p[1..].iter().all(|v| used.insert(v.clone()))
        })
}

/// Comb: a spine path and at least `k` disjoint teeth, each running from a
/// distinct spine vertex to `u` and meeting the spine only at its start.
pub fn check_comb(g: &MultiGraph, spine: &[VertexId], teeth: &[Vec<VertexId>], u: &VertexSet, k: usize) -> bool {
    if !is_path(g, spine) || teeth.len() < k {
        return false;
    }
    let on_spine: VertexSet = spine.iter().cloned().collect();
    let mut starts = VertexSet::new();
    let mut used = VertexSet::new();
    teeth.iter().all(|t| {
        !t.is_empty()
            && is_path(g, t)
            && on_spine.contains(&t[0])
            && starts.insert(t[0].clone())
            && u.contains(&t[t.len() - 1])
            && t[1..].iter().all(|v| !on_spine.contains(v) && used.insert(v.clone()))
    })
}

/// Common vertices of two sequences appear in the same relative order.
pub fn same_order(p: &[VertexId], q: &[VertexId]) -> bool {
    let pos: BTreeMap<&VertexId, usize> = q.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let seen: Vec<usize> = p.iter().filter_map(|v| pos.get(v).copied()).collect();
    seen.windows(2).all(|w| w[0] < w[1])
}

/// `p/q` tokens, with `1/0` as infinity.
pub fn parse_fraction(v: &VertexId) -> (i64, i64) {
    let (a, b) = v.as_str().split_once('/').expect("fraction token");
    (a.parse().expect("numerator"), b.parse().expect("denominator"))
}
