use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};
use crate::flow::Indexed;
use crate::graph::{MultiGraph, VertexId, VertexSet};

use super::{validate_model, MinorMap};

/// Default number of candidate branch sets tried before giving up.
pub const DEFAULT_NODE_BUDGET: usize = 2_000_000;
const CYCLE_PREFILTER_BUDGET: usize = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinorSearch {
    Found(MinorMap),
    /// The search space was exhausted.
    Absent,
    BudgetExhausted { nodes: usize },
}

/// Two vertex-disjoint cycles, each listed in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum CycleSearch {
    Found { first: Vec<VertexId>, second: Vec<VertexId> },
    Absent,
    BudgetExhausted { steps: usize },
}

struct Host {
    ix: Indexed,
    adj: Vec<Vec<usize>>,
    mult: Vec<Vec<usize>>,
}

impl Host {
    fn new(g: &MultiGraph) -> Self {
        let ix = Indexed::new(g);
        let n = ix.ids.len();
        let mut mult = vec![vec![0; n]; n];
        for (x, nbrs) in ix.adj.iter().enumerate() {
            for &(y, m) in nbrs {
                mult[x][y] = m;
            }
        }
        let adj = ix.adj.iter().map(|ns| ns.iter().map(|&(y, _)| y).collect()).collect();
        Host { ix, adj, mult }
    }

    fn len(&self) -> usize {
        self.adj.len()
    }

    /// Whether the vertices not in `removed` span a cycle.
    fn has_cycle(&self, removed: &[bool]) -> bool {
        let n = self.len();
        let mut seen = removed.to_vec();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let (mut verts, mut ends) = (0, 0);
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                verts += 1;
                for &y in &self.adj[x] {
                    if removed[y] {
                        continue;
                    }
                    ends += self.mult[x][y];
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            if ends / 2 >= verts {
                return true;
            }
        }
        false
    }

    /// Connected sets of exactly `size` allowed vertices containing at least
    /// one seed, each listed once in sorted order. `None` past `cap` sets.
    fn connected_sets(&self, allowed: &[bool], seeds: &[usize], size: usize, cap: usize) -> Option<Vec<Vec<usize>>> {
        let mut out = Vec::new();
        let mut ok = allowed.to_vec();
        for &s in seeds {
            if !ok[s] {
                continue;
            }
            let ext: Vec<usize> = self.adj[s].iter().copied().filter(|&u| ok[u] && u != s).collect();
            if !self.esu(&ok, vec![s], ext, size, cap, &mut out) {
                return None;
            }
            ok[s] = false;
        }
        for set in &mut out {
            set.sort_unstable();
        }
        out.sort();
        Some(out)
    }

    fn esu(&self, ok: &[bool], sub: Vec<usize>, mut ext: Vec<usize>, size: usize, cap: usize, out: &mut Vec<Vec<usize>>) -> bool {
        if sub.len() == size {
            out.push(sub);
            return out.len() <= cap;
        }
        while let Some(w) = ext.pop() {
            let mut next = ext.clone();
            for &u in &self.adj[w] {
                let exclusive = ok[u]
                    && !sub.contains(&u)
                    && u != w
                    && !next.contains(&u)
                    && sub.iter().all(|&z| self.mult[z][u] == 0);
                if exclusive {
                    next.push(u);
                }
            }
            let mut grown = sub.clone();
            grown.push(w);
            if !self.esu(ok, grown, next, size, cap, out) {
                return false;
            }
        }
        true
    }
}

struct Pattern {
    ids: Vec<VertexId>,
    mult: Vec<Vec<usize>>,
    nbrs: Vec<Vec<usize>>,
}

impl Pattern {
    fn new(p: &MultiGraph) -> Self {
        let ix = Indexed::new(p);
        let n = ix.ids.len();
        let mut mult = vec![vec![0; n]; n];
        for (x, ns) in ix.adj.iter().enumerate() {
            for &(y, m) in ns {
                mult[x][y] = m;
            }
        }
        let nbrs = ix.adj.iter().map(|ns| ns.iter().map(|&(y, _)| y).collect()).collect();
        Pattern { ids: ix.ids, mult, nbrs }
    }

    fn degree(&self, x: usize) -> usize {
        self.mult[x].iter().sum()
    }

    /// Highest degree first, then always the vertex with most placed
    /// neighbours; pinned vertices win ties.
    fn order(&self, pinned: &[bool]) -> Vec<usize> {
        let n = self.ids.len();
        let mut placed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let best = (0..n)
                .filter(|&x| !placed[x])
                .max_by_key(|&x| {
                    let links = self.nbrs[x].iter().filter(|&&y| placed[y]).count();
                    (links, pinned[x], self.degree(x), std::cmp::Reverse(x))
                })
                .expect("unplaced vertex");
            placed[best] = true;
            order.push(best);
        }
        order
    }
}

enum Outcome {
    Found,
    Miss,
    OutOfBudget,
}

struct Embedder<'a> {
    host: &'a Host,
    pat: &'a Pattern,
    order: Vec<usize>,
    pins: Vec<Option<usize>>,
    branch: Vec<Vec<usize>>,
    owner: Vec<Option<usize>>,
    free: usize,
    /// Host vertices still available beyond one per pattern vertex.
    slack: usize,
    nodes: usize,
    budget: usize,
}

impl Embedder<'_> {
    fn edges_between(&self, a: &[usize], b: &[usize]) -> usize {
        a.iter().map(|&x| b.iter().map(|&y| self.host.mult[x][y]).sum::<usize>()).sum()
    }

    /// Components of the free host vertices not in `blocked`, and for each
    /// component the placed pattern vertices whose branch sets it touches.
    fn free_components(&self, blocked: &[bool]) -> (Vec<usize>, Vec<Vec<bool>>) {
        let n = self.host.len();
        let mut comp = vec![usize::MAX; n];
        let mut count = 0;
        for s in 0..n {
            if comp[s] != usize::MAX || self.owner[s].is_some() || blocked[s] {
                continue;
            }
            comp[s] = count;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for &w in &self.host.adj[v] {
                    if comp[w] == usize::MAX && self.owner[w].is_none() && !blocked[w] {
                        comp[w] = count;
                        stack.push(w);
                    }
                }
            }
            count += 1;
        }
        let mut touch = vec![vec![false; self.pat.ids.len()]; count];
        for v in 0..n {
            if let Some(y) = self.owner[v] {
                for &w in &self.host.adj[v] {
                    if comp[w] != usize::MAX {
                        touch[comp[w]][y] = true;
                    }
                }
            }
        }
        (comp, touch)
    }

    /// Necessary conditions for completing the current partial model: each
    /// placed vertex keeps enough edges towards free vertices, and each
    /// unplaced vertex has a free component touching all its placed
    /// neighbours.
    fn feasible(&self) -> bool {
        for x in 0..self.pat.ids.len() {
            if self.branch[x].is_empty() {
                continue;
            }
            let need: usize =
                self.pat.nbrs[x].iter().filter(|&&y| self.branch[y].is_empty()).map(|&y| self.pat.mult[x][y]).sum();
            if need == 0 {
                continue;
            }
            let have: usize = self.branch[x]
                .iter()
                .map(|&v| self.host.adj[v].iter().filter(|&&w| self.owner[w].is_none()).map(|&w| self.host.mult[v][w]).sum::<usize>())
                .sum();
            if have < need {
                return false;
            }
        }
        let (comp, touch) = self.free_components(&vec![false; self.host.len()]);
        for z in 0..self.pat.ids.len() {
            if !self.branch[z].is_empty() {
                continue;
            }
            let placed: Vec<usize> = self.pat.nbrs[z].iter().copied().filter(|&y| !self.branch[y].is_empty()).collect();
            let fits = |c: usize| placed.iter().all(|&y| touch[c][y]);
            let ok = match self.pins[z] {
                Some(p) => comp[p] != usize::MAX && fits(comp[p]),
                None => (0..touch.len()).any(fits),
            };
            if !ok {
                return false;
            }
        }
        true
    }

    /// Host edges leaving `set` that could still serve edges at `x`.
    fn usable_degree(&self, x: usize, set: &[usize]) -> usize {
        let mut total = 0;
        for &v in set {
            for &w in &self.host.adj[v] {
                if set.contains(&w) {
                    continue;
                }
                let usable = match self.owner[w] {
                    None => true,
                    Some(y) => self.pat.mult[x][y] > 0,
                };
                if usable {
                    total += self.host.mult[v][w];
                }
            }
        }
        total
    }

    fn place(&mut self, x: usize, set: &[usize]) {
        for &v in set {
            self.owner[v] = Some(x);
        }
        self.free -= set.len();
        self.slack -= set.len() - 1;
        self.branch[x] = set.to_vec();
    }

    fn unplace(&mut self, x: usize) {
        let set = std::mem::take(&mut self.branch[x]);
        self.slack += set.len() - 1;
        for v in set {
            self.owner[v] = None;
            self.free += 1;
        }
    }

    fn run(&mut self, pos: usize) -> Outcome {
        if pos == self.order.len() {
            return Outcome::Found;
        }
        let x = self.order[pos];
        let placed: Vec<usize> = self.pat.nbrs[x].iter().copied().filter(|&y| !self.branch[y].is_empty()).collect();
        let allowed: Vec<bool> = self.owner.iter().map(Option::is_none).collect();
        let seeds: Vec<usize> = if let Some(p) = self.pins[x] {
            vec![p]
        } else if let Some(&y) = placed.iter().min_by_key(|&&y| self.branch[y].len()) {
            let mut s: Vec<usize> = self.branch[y]
                .iter()
                .flat_map(|&v| self.host.adj[v].iter().copied())
                .filter(|&w| allowed[w])
                .collect();
            s.sort_unstable();
            s.dedup();
            s
        } else {
            (0..self.host.len()).filter(|&w| allowed[w]).collect()
        };
        let max_size = self.free.saturating_sub(self.order.len() - pos - 1).min(1 + self.slack);
        let mut reserved = vec![false; self.host.len()];
        for z in &self.order[pos + 1..] {
            if let Some(p) = self.pins[*z] {
                reserved[p] = true;
            }
        }
        let (comp, touch) = self.free_components(&reserved);
        let viable: Vec<bool> = touch.iter().map(|t| placed.iter().all(|&y| t[y])).collect();
        let allowed_here: Vec<bool> = (0..self.host.len()).map(|v| comp[v] != usize::MAX && viable[comp[v]]).collect();
        let seeds: Vec<usize> = seeds.into_iter().filter(|&v| allowed_here[v]).collect();
        let degree = self.pat.degree(x);
        for size in 1..=max_size {
            let cap = self.budget.saturating_sub(self.nodes);
            let Some(sets) = self.host.connected_sets(&allowed_here, &seeds, size, cap) else {
                self.nodes = self.budget + 1;
                return Outcome::OutOfBudget;
            };
            if sets.is_empty() {
                break;
            }
            for set in sets {
                self.nodes += 1;
                if self.nodes > self.budget {
                    return Outcome::OutOfBudget;
                }
                if placed.iter().any(|&y| self.edges_between(&set, &self.branch[y]) < self.pat.mult[x][y])
                    || self.usable_degree(x, &set) < degree
                {
                    continue;
                }
                self.place(x, &set);
                if self.feasible() {
                    match self.run(pos + 1) {
                        Outcome::Miss => {}
                        other => return other,
                    }
                }
                self.unplace(x);
            }
        }
        Outcome::Miss
    }
}

fn is_forest(g: &MultiGraph) -> bool {
    g.is_simple() && g.components().iter().all(|c| g.induced_unchecked(c).edge_count() + 1 == c.len())
}

/// Unrooted [`find_minor_rooted`].
pub fn find_minor(host: &MultiGraph, pattern: &MultiGraph, budget: usize) -> MinorSearch {
    find_minor_rooted(host, pattern, &BTreeMap::new(), budget).expect("no pins to reject")
}

/// Backtracking search for a model of `pattern` in `host` whose branch set
/// of each pinned pattern vertex contains its pinned host vertex. Branch
/// sets grow by size, then lexicographically. `Absent` is reported only
/// after the whole space has been searched.
pub fn find_minor_rooted(
    host: &MultiGraph,
    pattern: &MultiGraph,
    pins: &BTreeMap<VertexId, VertexId>,
    budget: usize,
) -> Result<MinorSearch> {
    for (x, h) in pins {
        if !pattern.contains(x) {
            return input(format!("pinned vertex {x} is not in the pattern"));
        }
        if !host.contains(h) {
            return input(format!("pin target {h} is not in the host"));
        }
    }
    let targets: VertexSet = pins.values().cloned().collect();
    if targets.len() != pins.len() {
        return input("two pattern vertices are pinned to the same host vertex");
    }
    if pattern.vertex_count() > host.vertex_count() || pattern.edge_count() > host.edge_count() {
        return Ok(MinorSearch::Absent);
    }
    if !is_forest(pattern) && is_forest(host) {
        return Ok(MinorSearch::Absent);
    }
    if let CycleSearch::Found { .. } = two_disjoint_cycles_with_budget(pattern, CYCLE_PREFILTER_BUDGET) {
        if two_disjoint_cycles_with_budget(host, CYCLE_PREFILTER_BUDGET) == CycleSearch::Absent {
            return Ok(MinorSearch::Absent);
        }
    }
    let h = Host::new(host);
    let p = Pattern::new(pattern);
    let pin_idx: Vec<Option<usize>> = p
        .ids
        .iter()
        .map(|x| pins.get(x).map(|t| h.ix.index(t).expect("checked member")))
        .collect();
    let pinned: Vec<bool> = pin_idx.iter().map(Option::is_some).collect();
    let order = p.order(&pinned);
    let mut nodes = 0;
    let mut result = Outcome::Miss;
    let mut branch = Vec::new();
    // deepen on the total excess of branch sets over singletons
    for slack in 0..=h.len() - p.ids.len() {
        let mut e = Embedder {
            host: &h,
            pat: &p,
            order: order.clone(),
            pins: pin_idx.clone(),
            branch: vec![Vec::new(); p.ids.len()],
            owner: vec![None; h.len()],
            free: h.len(),
            slack,
            nodes,
            budget,
        };
        result = e.run(0);
        nodes = e.nodes;
        branch = e.branch;
        if !matches!(result, Outcome::Miss) {
            break;
        }
    }
    Ok(match result {
        Outcome::Miss => MinorSearch::Absent,
        Outcome::OutOfBudget => MinorSearch::BudgetExhausted { nodes: nodes.min(budget) },
        Outcome::Found => {
            let sets = p
                .ids
                .iter()
                .zip(&branch)
                .map(|(x, set)| (x.clone(), set.iter().map(|&v| h.ix.ids[v].clone()).collect()))
                .collect();
            let m = MinorMap::from_branch_sets(host.clone(), pattern.clone(), &sets).expect("disjoint branch sets");
            let report = validate_model(&m);
            assert!(report.valid, "search produced an invalid model: {:?}", report.violations);
            MinorSearch::Found(m)
        }
    })
}

struct CycleEnum<'a> {
    host: &'a Host,
    removed: &'a [bool],
    steps: usize,
    budget: usize,
}

impl CycleEnum<'_> {
    /// All cycles of exactly `len` vertices avoiding `removed`, each once,
    /// sorted by vertex set. `None` when the budget runs out.
    fn cycles_of_length(&mut self, len: usize) -> Option<Vec<Vec<usize>>> {
        let n = self.host.len();
        let mut out = Vec::new();
        if len == 2 {
            for x in 0..n {
                for &y in &self.host.adj[x] {
                    if x < y && !self.removed[x] && !self.removed[y] && self.host.mult[x][y] >= 2 {
                        out.push(vec![x, y]);
                    }
                }
            }
            return Some(out);
        }
        for s in (0..n).filter(|&s| !self.removed[s]) {
            let ok = |v: usize| v > s && !self.removed[v];
            let mut dist = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.host.adj[x] {
                    if ok(y) && dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
            let mut path = vec![s];
            let mut on = vec![false; n];
            on[s] = true;
            if !self.extend(s, len, &ok, &dist, &mut path, &mut on, &mut out) {
                return None;
            }
        }
        out.sort_by_key(|c| {
            let mut k = c.clone();
            k.sort_unstable();
            k
        });
        Some(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend(
        &mut self,
        s: usize,
        len: usize,
        ok: &dyn Fn(usize) -> bool,
        dist: &[usize],
        path: &mut Vec<usize>,
        on: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) -> bool {
        self.steps += 1;
        if self.steps > self.budget {
            return false;
        }
        let last = *path.last().expect("nonempty");
        if path.len() == len {
            if self.host.mult[last][s] > 0 && path[1] < last {
                out.push(path.clone());
            }
            return true;
        }
        for &y in &self.host.adj[last] {
            if on[y] || !ok(y) || dist[y] > len - path.len() {
                continue;
            }
            on[y] = true;
            path.push(y);
            let cont = self.extend(s, len, ok, dist, path, on, out);
            path.pop();
            on[y] = false;
            if !cont {
                return false;
            }
        }
        true
    }

    /// The first cycle by (length, sorted vertex set) accepted by `pred`.
    fn first(&mut self, pred: &mut dyn FnMut(&mut Self, &[usize]) -> bool) -> std::result::Result<Option<Vec<usize>>, ()> {
        let live = self.removed.iter().filter(|r| !**r).count();
        for len in 2..=live {
            let cycles = self.cycles_of_length(len).ok_or(())?;
            for c in cycles {
                if pred(self, &c) {
                    return Ok(Some(c));
                }
            }
        }
        Ok(None)
    }
}

/// [`two_disjoint_cycles_with_budget`] with a generous default budget.
pub fn two_disjoint_cycles(g: &MultiGraph) -> CycleSearch {
    two_disjoint_cycles_with_budget(g, 20_000_000)
}

/// Two vertex-disjoint cycles. The first is the least cycle, by length and
/// then sorted vertex list, whose removal leaves a cycle; the second is the
/// least cycle of what remains.
pub fn two_disjoint_cycles_with_budget(g: &MultiGraph, budget: usize) -> CycleSearch {
    let host = Host::new(g);
    let n = host.len();
    let none = vec![false; n];
    if !host.has_cycle(&none) {
        return CycleSearch::Absent;
    }
    // a vertex meeting every cycle rules out two disjoint ones
    for v in 0..n {
        let mut removed = none.clone();
        removed[v] = true;
        if !host.has_cycle(&removed) {
            return CycleSearch::Absent;
        }
    }
    let mut e = CycleEnum { host: &host, removed: &none, steps: 0, budget };
    let mut pred = |e: &mut CycleEnum<'_>, c: &[usize]| {
        let mut removed = vec![false; n];
        for &v in c {
            removed[v] = true;
        }
        e.host.has_cycle(&removed)
    };
    let first = match e.first(&mut pred) {
        Err(()) => return CycleSearch::BudgetExhausted { steps: e.steps },
        Ok(None) => return CycleSearch::Absent,
        Ok(Some(c)) => c,
    };
    let mut removed = vec![false; n];
    for &v in &first {
        removed[v] = true;
    }
    let steps = e.steps;
    let mut rest = CycleEnum { host: &host, removed: &removed, steps, budget };
    let second = match rest.first(&mut |_, _| true) {
        Err(()) => return CycleSearch::BudgetExhausted { steps: rest.steps },
        Ok(c) => c.expect("remainder has a cycle"),
    };
    let name = |c: &[usize]| c.iter().map(|&i| host.ix.ids[i].clone()).collect();
    CycleSearch::Found { first: name(&first), second: name(&second) }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, halved_farey, path, tree_join};
    use crate::graph::vset;

    fn found(r: MinorSearch) -> MinorMap {
        match r {
            MinorSearch::Found(m) => m,
            other => panic!("expected a model, got {other:?}"),
        }
    }

    #[test]
    fn small_minors() {
        found(find_minor(&cycle(4).unwrap(), &complete(3), DEFAULT_NODE_BUDGET));
        assert_eq!(find_minor(&path(6), &complete(3), DEFAULT_NODE_BUDGET), MinorSearch::Absent);
        let f2 = halved_farey(2).unwrap().into_graph();
        assert_eq!(find_minor(&f2, &complete_bipartite(2, 3), DEFAULT_NODE_BUDGET), MinorSearch::Absent);
        found(find_minor(&complete(5), &complete(4), DEFAULT_NODE_BUDGET));
        assert_eq!(find_minor(&complete(4), &complete(5), DEFAULT_NODE_BUDGET), MinorSearch::Absent);
    }

    #[test]
    fn parallel_edges_need_parallel_cover() {
        let two = MultiGraph::from_edges(["x", "y"], [("x", "y"), ("x", "y")]).unwrap();
        assert_eq!(find_minor(&path(5), &two, DEFAULT_NODE_BUDGET), MinorSearch::Absent);
        found(find_minor(&cycle(5).unwrap(), &two, DEFAULT_NODE_BUDGET));
    }

    #[test]
    fn pins_are_respected() {
        let pins = BTreeMap::from([("1".into(), "3".into())]);
        let m = found(find_minor_rooted(&complete(5), &complete(3), &pins, DEFAULT_NODE_BUDGET).unwrap());
        assert!(m.branch_set(&"1".into()).contains(&VertexId::from("3")));
    }

    #[test]
    fn budget_is_reported() {
        let r = find_minor(&complete(8), &complete(7), 3);
        assert!(matches!(r, MinorSearch::BudgetExhausted { .. }), "{r:?}");
    }

    #[test]
    fn disjoint_triangles_of_order_three() {
        let f3 = halved_farey(3).unwrap().into_graph();
        let CycleSearch::Found { first, second } = two_disjoint_cycles(&f3) else { panic!("expected cycles") };
        assert_eq!(vset(first), vset(["0/1", "1/1", "1/2"]));
        assert_eq!(vset(second), vset(["1/0", "2/1", "3/1"]));
        assert_eq!(two_disjoint_cycles(&cycle(6).unwrap()), CycleSearch::Absent);
        assert_eq!(two_disjoint_cycles(&tree_join(3, 3).unwrap().0), CycleSearch::Absent);
    }
}
