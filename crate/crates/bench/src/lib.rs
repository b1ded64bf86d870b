//! Benchmark fixtures.

use fareyforge_core::generators::{complete, halved_farey, tree_join};
use fareyforge_core::MultiGraph;

/// Two `n`-cliques sharing the vertices `s1`, `s2`.
pub fn barbell(n: usize) -> MultiGraph {
    let mut g = MultiGraph::new();
    for side in ["a", "b"] {
        let mut vs: Vec<String> = (1..=n).map(|i| format!("{side}{i}")).collect();
        vs.extend(["s1".to_string(), "s2".to_string()]);
        for (i, x) in vs.iter().enumerate() {
            for y in &vs[i + 1..] {
                if !g.has_edge(&x.as_str().into(), &y.as_str().into()) {
                    g.add_edge(x.as_str(), y.as_str()).expect("distinct");
                }
            }
        }
    }
    g
}

pub fn farey(n: u32) -> MultiGraph {
    halved_farey(n).expect("small order").into_graph()
}

pub fn join(d: usize, h: usize) -> MultiGraph {
    tree_join(d, h).expect("small tree").0
}

pub fn clique(n: usize) -> MultiGraph {
    complete(n)
}
