use serde::{Deserialize, Serialize};

use crate::error::{input, Result};
use crate::flow::{Indexed, Network};
use crate::graph::{MultiGraph, VertexId, VertexSet};

/// Graphs up to this size are searched exhaustively.
pub const EXACT_VERTEX_LIMIT: usize = 14;
const DEFAULT_BUDGET: usize = 500_000;

/// A subdivided star: paths from `center` to distinct leaves, meeting only
/// at the center.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarWitness {
    pub center: VertexId,
    pub paths: Vec<Vec<VertexId>>,
}

/// A spine path with disjoint, possibly trivial teeth hanging off it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombWitness {
    pub spine: Vec<VertexId>,
    pub teeth: Vec<Vec<VertexId>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum StarComb {
    Star(StarWitness),
    Comb(CombWitness),
    /// Neither exists; only reported by exhaustive runs.
    Absent,
    Exhausted { steps: usize },
}

fn is_walk(g: &MultiGraph, p: &[VertexId]) -> bool {
    let distinct: VertexSet = p.iter().cloned().collect();
    !p.is_empty() && distinct.len() == p.len() && p.iter().all(|v| g.contains(v)) && p.windows(2).all(|w| g.has_edge(&w[0], &w[1]))
}

/// Checks every structural clause of a star witness.
pub fn validate_star(g: &MultiGraph, w: &StarWitness, u_set: &VertexSet) -> bool {
    let mut used = VertexSet::new();
    !w.paths.is_empty()
        && w.paths.iter().all(|p| {
            p.len() >= 2
                && p[0] == w.center
                && is_walk(g, p)
                && u_set.contains(p.last().expect("nonempty"))
                && p[1..].iter().all(|v| used.insert(v.clone()))
        })
}

/// Checks every structural clause of a comb witness.
pub fn validate_comb(g: &MultiGraph, w: &CombWitness, u_set: &VertexSet) -> bool {
    if !is_walk(g, &w.spine) || w.teeth.is_empty() {
        return false;
    }
    let spine: VertexSet = w.spine.iter().cloned().collect();
    let mut used = VertexSet::new();
    w.teeth.iter().all(|t| {
        is_walk(g, t)
            && spine.contains(&t[0])
            && t[1..].iter().all(|v| !spine.contains(v))
            && u_set.contains(t.last().expect("nonempty"))
            && t.iter().all(|v| used.insert(v.clone()))
    })
}

/// Node `x` splits into `x` (in) and `n + x` (out).
fn split_network(ix: &Indexed, blocked: &[bool], extra: usize) -> Network {
    let n = ix.ids.len();
    let mut net = Network::new(2 * n + extra);
    for x in 0..n {
        if !blocked[x] {
            net.add_arc(x, n + x, 1);
        }
    }
    for (x, nbrs) in ix.adj.iter().enumerate() {
        for &(y, _) in nbrs {
            if !blocked[y] {
                net.add_arc(n + x, y, 1);
            }
        }
    }
    net
}

/// Fan network from any centre to the vertices of `U`. The centre's own
/// sink arc is switched off while it is the source.
struct Fans {
    net: Network,
    sink_arc: Vec<Option<usize>>,
}

impl Fans {
    fn new(ix: &Indexed, in_u: &[bool]) -> Self {
        let n = ix.ids.len();
        let mut net = split_network(ix, &vec![false; n], 1);
        let mut sink_arc = vec![None; n];
        for x in (0..n).filter(|&x| in_u[x]) {
            sink_arc[x] = Some(net.add_arc(n + x, 2 * n, 1));
        }
        Fans { net, sink_arc }
    }

    fn star_at(&mut self, ix: &Indexed, c: usize, k: usize) -> Option<StarWitness> {
        let n = ix.ids.len();
        let sink = 2 * n;
        if let Some(i) = self.sink_arc[c] {
            self.net.set_capacity(i, 0);
        }
        self.net.reset();
        let found = (self.net.max_flow(n + c, sink, k as i64) as usize) >= k;
        let paths = found.then(|| {
            self.net
                .decompose(n + c, sink, k)
                .into_iter()
                .map(|seq| std::iter::once(c).chain(seq.into_iter().filter(|&i| i < n)).map(|i| ix.ids[i].clone()).collect())
                .collect()
        });
        if let Some(i) = self.sink_arc[c] {
            self.net.set_capacity(i, 1);
        }
        paths.map(|paths| StarWitness { center: ix.ids[c].clone(), paths })
    }
}

fn teeth_for(ix: &Indexed, spine: &[usize], in_u: &[bool], k: usize) -> Option<Vec<Vec<VertexId>>> {
    let n = ix.ids.len();
    let mut blocked = vec![false; n];
    for &p in spine {
        blocked[p] = true;
    }
    let mut teeth: Vec<Vec<VertexId>> =
        spine.iter().filter(|&&p| in_u[p]).map(|&p| vec![ix.ids[p].clone()]).collect();
    if teeth.len() >= k {
        teeth.truncate(k);
        return Some(teeth);
    }
    let need = k - teeth.len();
    let exits = spine.iter().filter(|&&p| !in_u[p] && ix.adj[p].iter().any(|&(y, _)| !blocked[y])).count();
    let outside = (0..n).filter(|&x| !blocked[x] && in_u[x]).count();
    if exits.min(outside) < need {
        return None;
    }
    let (src, sink) = (2 * n, 2 * n + 1);
    let mut net = split_network(ix, &blocked, 2);
    for &p in spine.iter().filter(|&&p| !in_u[p]) {
        net.add_arc(src, n + p, 1);
    }
    for x in (0..n).filter(|&x| !blocked[x] && in_u[x]) {
        net.add_arc(n + x, sink, 1);
    }
    if (net.max_flow(src, sink, need as i64) as usize) < need {
        return None;
    }
    for seq in net.decompose(src, sink, need) {
        let head = seq[1] - n;
        teeth.push(std::iter::once(head).chain(seq.into_iter().filter(|&i| i < n)).map(|i| ix.ids[i].clone()).collect());
    }
    Some(teeth)
}

struct SpineSearch<'a> {
    ix: &'a Indexed,
    in_u: &'a [bool],
    k: usize,
    budget: Option<usize>,
    steps: usize,
    on_path: Vec<bool>,
    path: Vec<usize>,
}

enum Step {
    Found(CombWitness),
    Continue,
    OutOfBudget,
}

impl SpineSearch<'_> {
    fn extendable(&self, x: usize) -> bool {
        self.ix.adj[x].iter().any(|&(y, _)| !self.on_path[y])
    }

    fn dfs(&mut self) -> Step {
        self.steps += 1;
        if self.budget.is_some_and(|b| self.steps > b) {
            return Step::OutOfBudget;
        }
        let last = *self.path.last().expect("nonempty");
        if !self.extendable(last) {
            let first = self.path[0];
            if (self.path.len() == 1 || first < last) && !self.extendable(first) {
                if let Some(teeth) = teeth_for(self.ix, &self.path, self.in_u, self.k) {
                    let spine = self.path.iter().map(|&i| self.ix.ids[i].clone()).collect();
                    return Step::Found(CombWitness { spine, teeth });
                }
            }
            return Step::Continue;
        }
        let nbrs: Vec<usize> = self.ix.adj[last].iter().map(|&(y, _)| y).filter(|&y| !self.on_path[y]).collect();
        for y in nbrs {
            self.on_path[y] = true;
            self.path.push(y);
            let r = self.dfs();
            self.path.pop();
            self.on_path[y] = false;
            if !matches!(r, Step::Continue) {
                return r;
            }
        }
        Step::Continue
    }
}

/// [`star_comb_search_with_budget`] with the default budget.
pub fn star_comb_search(g: &MultiGraph, u_set: &VertexSet, k: usize) -> Result<StarComb> {
    star_comb_search_with_budget(g, u_set, k, DEFAULT_BUDGET)
}

/// Looks for a star with `k` leaves in `u_set`, then for a comb with `k`
/// teeth in `u_set`. Exhaustive on graphs with at most
/// [`EXACT_VERTEX_LIMIT`] vertices; larger graphs stop after `budget`
/// search steps.
pub fn star_comb_search_with_budget(g: &MultiGraph, u_set: &VertexSet, k: usize, budget: usize) -> Result<StarComb> {
    if k == 0 {
        return input("k must be at least 1");
    }
    g.check_members(u_set)?;
    let ix = Indexed::new(g);
    if !ix.is_connected() {
        return input("graph must be connected and nonempty");
    }
    if u_set.len() < k {
        return Ok(StarComb::Absent);
    }
    let in_u: Vec<bool> = ix.ids.iter().map(|v| u_set.contains(v)).collect();
    let mut fans = Fans::new(&ix, &in_u);
    for c in (0..ix.ids.len()).filter(|&c| ix.adj[c].len() >= k) {
        if let Some(w) = fans.star_at(&ix, c, k) {
            return Ok(StarComb::Star(w));
        }
    }
    let n = ix.ids.len();
    let mut search = SpineSearch {
        ix: &ix,
        in_u: &in_u,
        k,
        budget: (n > EXACT_VERTEX_LIMIT).then_some(budget),
        steps: 0,
        on_path: vec![false; n],
        path: Vec::new(),
    };
    for s in 0..n {
        search.on_path[s] = true;
        search.path.push(s);
        let r = search.dfs();
        search.path.pop();
        search.on_path[s] = false;
        match r {
            Step::Found(w) => return Ok(StarComb::Comb(w)),
            Step::OutOfBudget => return Ok(StarComb::Exhausted { steps: search.steps }),
            Step::Continue => {}
        }
    }
    Ok(StarComb::Absent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::path;
    use crate::graph::vset;

    #[test]
    fn spider_gives_star() {
        let mut g = MultiGraph::new();
        for i in 0..5 {
            g.add_edge("hub", format!("a{i}")).unwrap();
            g.add_edge(format!("a{i}"), format!("b{i}")).unwrap();
        }
        let u = vset((0..5).map(|i| format!("b{i}")));
        let StarComb::Star(w) = star_comb_search(&g, &u, 5).unwrap() else { panic!("expected a star") };
        assert_eq!(w.center, VertexId::from("hub"));
        assert!(validate_star(&g, &w, &u));
        let mut bad = w.clone();
        bad.paths[0].pop();
        assert!(!validate_star(&g, &bad, &u));
    }

    #[test]
    fn caterpillar_gives_comb() {
        let mut g = MultiGraph::new();
        for i in 1..=6 {
            if i > 1 {
                g.add_edge(format!("p{}", i - 1), format!("p{i}")).unwrap();
            }
            g.add_edge(format!("p{i}"), format!("u{i}")).unwrap();
        }
        let u = vset((1..=6).map(|i| format!("u{i}")));
        let StarComb::Comb(w) = star_comb_search(&g, &u, 6).unwrap() else { panic!("expected a comb") };
        assert!(validate_comb(&g, &w, &u));
        assert_eq!(w.teeth.len(), 6);
        let mut shared = w.clone();
        shared.teeth[1] = shared.teeth[0].clone();
        assert!(!validate_comb(&g, &shared, &u));
    }

    #[test]
    fn path_gives_trivial_teeth() {
        let g = path(5);
        let u = g.vertex_set();
        match star_comb_search(&g, &u, 3).unwrap() {
            StarComb::Comb(w) => {
                assert!(validate_comb(&g, &w, &u));
                assert!(w.teeth.iter().all(|t| t.len() == 1));
            }
            other => panic!("expected a comb, got {other:?}"),
        }
        assert_eq!(star_comb_search(&g, &u, 6).unwrap(), StarComb::Absent);
    }

    #[test]
    fn claw_has_neither_for_four() {
        let g = MultiGraph::from_edges(["c", "x", "y", "z"], [("c", "x"), ("c", "y"), ("c", "z")]).unwrap();
        assert_eq!(star_comb_search(&g, &g.vertex_set(), 4).unwrap(), StarComb::Absent);
        assert!(matches!(star_comb_search(&g, &g.vertex_set(), 3).unwrap(), StarComb::Star(_)));
    }
}
