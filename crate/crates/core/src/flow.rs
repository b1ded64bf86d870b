//! Integral max-flow on small dense networks (Edmonds–Karp).
//!
//! Arcs are scanned in insertion order, so augmenting paths and therefore
//! every extracted witness are deterministic.

use std::collections::VecDeque;

use crate::graph::{MultiGraph, VertexId};

pub(crate) const INF: i64 = i64::MAX / 4;

const NONE: usize = usize::MAX;

/// Arc `2i` and its reverse `2i + 1` are stored side by side; each node
/// threads its outgoing arcs in insertion order.
#[derive(Clone, Debug, Default)]
pub(crate) struct Network {
    to: Vec<usize>,
    cap: Vec<i64>,
    initial: Vec<i64>,
    next: Vec<usize>,
    first: Vec<usize>,
    last: Vec<usize>,
}

impl Network {
    pub fn new(n: usize) -> Self {
        Network { first: vec![NONE; n], last: vec![NONE; n], ..Default::default() }
    }

    pub fn len(&self) -> usize {
        self.first.len()
    }

    fn link(&mut self, u: usize, v: usize, cap: i64) {
        let id = self.to.len();
        self.to.push(v);
        self.cap.push(cap);
        self.initial.push(cap);
        self.next.push(NONE);
        if self.last[u] == NONE {
            self.first[u] = id;
        } else {
            self.next[self.last[u]] = id;
        }
        self.last[u] = id;
    }

    fn arcs(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        std::iter::successors(Some(self.first[u]).filter(|&a| a != NONE), move |&a| Some(self.next[a]).filter(|&b| b != NONE))
    }

    /// Directed arc with capacity `cap`; returns its id.
    pub fn add_arc(&mut self, u: usize, v: usize, cap: i64) -> usize {
        let id = self.to.len();
        self.link(u, v, cap);
        self.link(v, u, 0);
        id
    }

    /// Undirected edge of capacity `cap` in both directions.
    pub fn add_undirected(&mut self, u: usize, v: usize, cap: i64) {
        self.link(u, v, cap);
        self.link(v, u, cap);
    }

    /// Changes the capacity of an arc, now and on reset.
    pub fn set_capacity(&mut self, arc: usize, cap: i64) {
        self.initial[arc] = cap;
        self.cap[arc] = cap;
    }

    pub fn reset(&mut self) {
        self.cap.copy_from_slice(&self.initial);
    }

    /// Augments from `s` to `t` until no path remains or `limit` is reached.
    pub fn max_flow(&mut self, s: usize, t: usize, limit: i64) -> i64 {
        let mut total = 0;
        let n = self.len();
        let mut pred = vec![NONE; n];
        let mut queue = VecDeque::with_capacity(n);
        while total < limit {
            pred.fill(NONE);
            queue.clear();
            queue.push_back(s);
            let mut reached = false;
            'bfs: while let Some(x) = queue.pop_front() {
                let mut a = self.first[x];
                while a != NONE {
                    let y = self.to[a];
                    if self.cap[a] > 0 && y != s && pred[y] == NONE {
                        pred[y] = a;
                        if y == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                    a = self.next[a];
                }
            }
            if !reached {
                break;
            }
            let mut push = limit - total;
            let mut cur = t;
            while cur != s {
                let a = pred[cur];
                push = push.min(self.cap[a]);
                cur = self.to[a ^ 1];
            }
            let mut cur = t;
            while cur != s {
                let a = pred[cur];
                self.cap[a] -= push;
                self.cap[a ^ 1] += push;
                cur = self.to[a ^ 1];
            }
            total += push;
        }
        total
    }

    /// Nodes reachable from `s` in the residual network.
    pub fn residual_reach(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for a in self.arcs(x) {
                if self.cap[a] > 0 && !seen[self.to[a]] {
                    seen[self.to[a]] = true;
                    queue.push_back(self.to[a]);
                }
            }
        }
        seen
    }

    /// Splits the current flow into `count` unit `s`-`t` walks with cycles
    /// cancelled, so each returned node sequence is a simple path.
    pub fn decompose(&self, s: usize, t: usize, count: usize) -> Vec<Vec<usize>> {
        let mut left: Vec<i64> = self.initial.iter().zip(&self.cap).map(|(i, c)| (i - c).max(0)).collect();
        // an undirected edge used both ways carries no net flow
        for a in (0..left.len()).step_by(2) {
            let back = left[a + 1].min(left[a]);
            left[a] -= back;
            left[a + 1] -= back;
        }
        let mut pos = vec![NONE; self.len()];
        let mut paths = Vec::with_capacity(count);
        for _ in 0..count {
            let mut walk = vec![s];
            pos[s] = 0;
            while *walk.last().expect("nonempty") != t {
                let x = *walk.last().expect("nonempty");
                let a = self.arcs(x).find(|&a| left[a] > 0).expect("flow conservation");
                left[a] -= 1;
                let y = self.to[a];
                if pos[y] != NONE {
                    for z in walk.drain(pos[y] + 1..) {
                        pos[z] = NONE;
                    }
                } else {
                    pos[y] = walk.len();
                    walk.push(y);
                }
            }
            for &z in &walk {
                pos[z] = NONE;
            }
            paths.push(walk);
        }
        paths
    }
}

/// A multigraph frozen into index form, vertices in token order.
#[derive(Clone, Debug)]
pub(crate) struct Indexed {
    pub ids: Vec<VertexId>,
    pub adj: Vec<Vec<(usize, usize)>>,
}

impl Indexed {
    pub fn new(g: &MultiGraph) -> Self {
        let ids: Vec<VertexId> = g.vertices().cloned().collect();
        let adj = ids
            .iter()
            .map(|v| g.neighbors(v).map(|(w, m)| (ids.binary_search(w).expect("member"), m)).collect())
            .collect();
        Indexed { ids, adj }
    }

    /// Nonempty and connected.
    pub fn is_connected(&self) -> bool {
        let n = self.ids.len();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut stack = vec![0];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &(y, _) in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == n
    }

    pub fn index(&self, v: &VertexId) -> Option<usize> {
        self.ids.binary_search(v).ok()
    }

    /// Undirected edge network; edge capacity is its multiplicity.
    pub fn edge_network(&self) -> Network {
        let mut net = Network::new(self.ids.len());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &(v, m) in nbrs {
                if u < v {
                    net.add_undirected(u, v, m as i64);
                }
            }
        }
        net
    }
}
