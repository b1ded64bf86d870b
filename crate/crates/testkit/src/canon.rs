//! Canonical forms of small simple graphs and exhaustive enumeration up to
//! isomorphism.

use std::collections::BTreeSet;

use fareyforge_core::MultiGraph;

/// A simple graph on `0..n` as adjacency bitmasks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Small {
    pub n: usize,
    pub adj: Vec<u32>,
}

impl Small {
    pub fn empty(n: usize) -> Self {
        Small { n, adj: vec![0; n] }
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = 1u32;
        let mut frontier = 1u32;
        while frontier != 0 {
            let mut next = 0;
            for v in 0..self.n {
                if frontier >> v & 1 == 1 {
                    next |= self.adj[v];
                }
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// Upper-triangle bits under the vertex order `perm`.
    fn code(&self, perm: &[usize]) -> u64 {
        let mut c = 0u64;
        for i in 0..self.n {
            for j in i + 1..self.n {
                c = c << 1 | self.has_edge(perm[i], perm[j]) as u64;
            }
        }
        c
    }

    pub fn from_code(n: usize, code: u64) -> Self {
        let mut g = Small::empty(n);
        let mut bit = n * n.saturating_sub(1) / 2;
        for i in 0..n {
            for j in i + 1..n {
                bit -= 1;
                if code >> bit & 1 == 1 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Vertices are named `1..=n`.
    pub fn to_graph(&self) -> MultiGraph {
        let mut g = MultiGraph::new();
        for v in 0..self.n {
            g.add_vertex((v + 1).to_string());
        }
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.has_edge(a, b) {
                    g.add_edge((a + 1).to_string(), (b + 1).to_string()).expect("distinct");
                }
            }
        }
        g
    }

    /// Largest code over all labellings reachable by individualisation and
    /// refinement; equal for isomorphic graphs.
    pub fn canonical_code(&self) -> u64 {
        let mut best = None;
        self.search(vec![(0..self.n).collect()], &mut best);
        best.unwrap_or(0)
    }

    pub fn canonical(&self) -> Small {
        Small::from_code(self.n, self.canonical_code())
    }

    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        loop {
            let mut next = Vec::new();
            for cell in &cells {
                let mut keyed: Vec<(Vec<u32>, usize)> = cell
                    .iter()
                    .map(|&v| (cells.iter().map(|c| c.iter().filter(|&&w| self.has_edge(v, w)).count() as u32).collect(), v))
                    .collect();
                keyed.sort();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|(_, v)| *v).collect());
                        start = i;
                    }
                }
            }
            if next.len() == cells.len() {
                return next;
            }
            cells = next;
        }
    }

    fn search(&self, cells: Vec<Vec<usize>>, best: &mut Option<u64>) {
        let cells = self.refine(cells);
        let Some(pos) = cells.iter().position(|c| c.len() > 1) else {
            let perm: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let c = self.code(&perm);
            if best.is_none_or(|b| c > b) {
                *best = Some(c);
            }
            return;
        };
        for &v in &cells[pos] {
            let mut split = cells[..pos].to_vec();
            split.push(vec![v]);
            split.push(cells[pos].iter().copied().filter(|&w| w != v).collect());
            split.extend(cells[pos + 1..].iter().cloned());
            self.search(split, best);
        }
    }
}

/// All simple graphs on exactly `n` vertices, one per isomorphism class,
/// by adding a vertex to every class on `n - 1` vertices in every way.
pub fn all_graphs(n: usize) -> Vec<Small> {
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for m in 1..n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = Small::from_code(m, code);
            for nbrs in 0u32..1 << m {
                let mut g = base.clone();
                g.n = m + 1;
                g.adj.push(0);
                for w in 0..m {
                    if nbrs >> w & 1 == 1 {
                        g.add_edge(m, w);
                    }
                }
                next.insert(g.canonical_code());
            }
        }
        level = next;
    }
    if n == 0 {
        return Vec::new();
    }
    level.into_iter().map(|c| Small::from_code(n, c)).collect()
}

/// Connected simple graphs on `1..=max_n` vertices up to isomorphism.
pub fn connected_graphs(max_n: usize) -> Vec<Small> {
    (1..=max_n).flat_map(|n| all_graphs(n).into_iter().filter(Small::is_connected)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6).map(|n| all_graphs(n).iter().filter(|g| g.is_connected()).count()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn relabelling_keeps_the_code() {
        let mut p = Small::empty(5);
        for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 4), (1, 4)] {
            p.add_edge(a, b);
        }
        let mut q = Small::empty(5);
        for (a, b) in [(4, 3), (3, 0), (0, 2), (2, 1), (3, 1)] {
            q.add_edge(a, b);
        }
        assert_eq!(p.canonical_code(), q.canonical_code());
    }
}
