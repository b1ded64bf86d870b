//! Seeded random instances.

use fareyforge_core::separations::OrientedSeparation;
use fareyforge_core::{MultiGraph, VertexId, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn name(i: usize) -> VertexId {
    VertexId::new(format!("x{i}"))
}

/// A connected multigraph on `n` vertices: a random spanning tree plus
/// extra edges, each pair carrying up to `max_mult` parallel edges.
pub fn random_multigraph(rng: &mut impl Rng, n: usize, max_mult: usize, density: f64) -> MultiGraph {
    let mut g = MultiGraph::new();
    for i in 0..n {
        g.add_vertex(name(i));
    }
    for i in 1..n {
        let p = rng.gen_range(0..i);
        g.add_edges(name(p), name(i), rng.gen_range(1..=max_mult)).expect("distinct");
    }
    for i in 0..n {
        for j in i + 1..n {
            if !g.has_edge(&name(i), &name(j)) && rng.gen_bool(density) {
                g.add_edges(name(i), name(j), rng.gen_range(1..=max_mult)).expect("distinct");
            }
        }
    }
    g
}

/// Up to `max_parts` pairwise disjoint nonempty vertex sets.
pub fn random_parts(rng: &mut impl Rng, g: &MultiGraph, max_parts: usize) -> Vec<VertexSet> {
    let mut vs: Vec<VertexId> = g.vertices().cloned().collect();
    vs.shuffle(rng);
    let count = rng.gen_range(1..=max_parts.max(1));
    let mut parts = vec![VertexSet::new(); count];
    for v in vs {
        if rng.gen_bool(0.6) {
            let i = rng.gen_range(0..count);
            parts[i].insert(v);
        }
    }
    parts.retain(|p| !p.is_empty());
    parts
}

/// A connected host with a connected set `X`; the components of `g − X`
/// give bonds `(C, V ∖ C)` forming a star whose part is `X`.
pub fn random_bond_star(rng: &mut impl Rng, max_n: usize) -> (MultiGraph, Vec<OrientedSeparation>) {
    loop {
        let n = rng.gen_range(4..=max_n);
        let density = rng.gen_range(0.0..0.3);
        let g = random_multigraph(rng, n, 2, density);
        let vs: Vec<VertexId> = g.vertices().cloned().collect();
        let mut x = VertexSet::from([vs.choose(rng).expect("nonempty").clone()]);
        let target = rng.gen_range(1..n);
        while x.len() < target {
            let frontier: Vec<VertexId> = x
                .iter()
                .flat_map(|b| g.neighbors(b).map(|(w, _)| w.clone()).collect::<Vec<_>>())
                .filter(|w| !x.contains(w))
                .collect();
            match frontier.choose(rng) {
                Some(w) => {
                    x.insert(w.clone());
                }
                None => break,
            }
        }
        let all = g.vertex_set();
        let sigma: Vec<OrientedSeparation> = g
            .without(&x)
            .components()
            .into_iter()
            .map(|c| OrientedSeparation::new(c.clone(), all.difference(&c).cloned().collect()))
            .collect();
        if sigma.len() >= 2 {
            return (g, sigma);
        }
    }
}
