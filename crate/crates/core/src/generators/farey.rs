//! Halved and full Farey graphs at finite order.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{input, Error, Result};
use crate::fraction::Fraction;
use crate::graph::{edge_key, Color, ColoredGraph, MultiGraph, VertexId};

/// Largest order accepted by the Farey constructors (`2^20 + 1` vertices).
pub const MAX_FAREY_ORDER: u32 = 20;

fn check_order(n: u32) -> Result<()> {
    if n > MAX_FAREY_ORDER {
        return Err(Error::Resource(format!("order {n} exceeds cap {MAX_FAREY_ORDER}")));
    }
    Ok(())
}

/// Blue edges of each level, as fraction pairs in increasing numeric order.
fn blue_levels(n: u32) -> Vec<Vec<(Fraction, Fraction)>> {
    let mut levels = vec![vec![(Fraction::ZERO, Fraction::INFINITY)]];
    for _ in 0..n {
        let prev = levels.last().expect("level 0 exists");
        let mut next = Vec::with_capacity(prev.len() * 2);
        for &(a, b) in prev {
            let m = a.mediant(b);
            next.push((a, m));
            next.push((m, b));
        }
        levels.push(next);
    }
    levels
}

/// The halved Farey graph of order `n` with its blue/black colouring.
/// Vertices are the fractions themselves; level `i+1` adds the mediant of
/// every blue edge of level `i`.
pub fn halved_farey(n: u32) -> Result<ColoredGraph> {
    check_order(n)?;
    let mut g = MultiGraph::new();
    let mut colors = BTreeMap::new();
    for (level, edges) in blue_levels(n).iter().enumerate() {
        let color = if level as u32 == n { Color::Blue } else { Color::Black };
        for &(a, b) in edges {
            let (x, y) = (a.vertex(), b.vertex());
            g.add_edge(x.clone(), y.clone())?;
            colors.insert(edge_key(&x, &y), color);
        }
    }
    ColoredGraph::new(g, colors)
}

/// Union of `halved_farey(n)` and its mirror image under `x -> -x`; the two
/// copies share exactly `0/1`, `1/0` and the edge between them.
pub fn farey_truncation(n: u32) -> Result<MultiGraph> {
    let half = halved_farey(n)?.into_graph();
    let mirror = |v: &VertexId| Fraction::from_vertex(v).map(|f| f.mirror().vertex());
    let mut g = half.clone();
    for (u, v, _) in half.edges() {
        let (a, b) = (mirror(u)?, mirror(v)?);
        if !g.has_edge(&a, &b) {
            g.add_edge(a, b)?;
        }
    }
    Ok(g)
}

/// Graph on `vs` joining `a/b` and `c/d` iff `|ad - cb| = 1`.
pub fn farey_by_determinant(vs: &BTreeSet<Fraction>) -> MultiGraph {
    let all: Vec<Fraction> = vs.iter().copied().collect();
    let mut g = MultiGraph::new();
    for f in &all {
        g.add_vertex(f.vertex());
    }
    for (i, &a) in all.iter().enumerate() {
        for &b in &all[i + 1..] {
            if a.determinant(b) == 1 {
                g.add_edge(a.vertex(), b.vertex()).expect("distinct fractions");
            }
        }
    }
    g
}

/// Parses vertex tokens as canonical fractions.
pub fn fraction_vertices(g: &MultiGraph) -> Result<BTreeSet<Fraction>> {
    g.vertices().map(Fraction::from_vertex).collect()
}

/// The path formed by the blue edges of level `k`, read inside the order-`n`
/// graph: `0/1` to `1/0` through every level-`<= k` vertex in increasing order.
pub fn blue_level_path(n: u32, k: u32) -> Result<Vec<VertexId>> {
    check_order(n)?;
    if k > n {
        return input(format!("level {k} exceeds order {n}"));
    }
    let levels = blue_levels(k);
    let top = levels.last().expect("level 0 exists");
    let mut path: Vec<VertexId> = top.iter().map(|(a, _)| a.vertex()).collect();
    path.push(Fraction::INFINITY.vertex());
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vset;

    #[test]
    fn halved_orders_0_and_2() {
        let f0 = halved_farey(0).unwrap();
        assert_eq!(f0.graph().vertex_count(), 2);
        assert_eq!((f0.count(Color::Blue), f0.count(Color::Black)), (1, 0));

        let f2 = halved_farey(2).unwrap();
        assert_eq!(f2.graph().vertex_set(), vset(["0/1", "1/0", "1/1", "1/2", "2/1"]));
        assert_eq!((f2.count(Color::Blue), f2.count(Color::Black)), (4, 3));
    }

    #[test]
    fn halved_order_10_counts() {
        let f = halved_farey(10).unwrap();
        assert_eq!(f.graph().vertex_count(), 1025);
        assert_eq!((f.count(Color::Blue), f.count(Color::Black)), (1024, 1023));
    }

    #[test]
    fn order_cap_is_a_resource_error() {
        assert!(matches!(halved_farey(MAX_FAREY_ORDER + 1), Err(Error::Resource(_))));
    }

    #[test]
    fn truncation_small_orders() {
        let t0 = farey_truncation(0).unwrap();
        assert_eq!((t0.vertex_count(), t0.edge_count()), (2, 1));
        let t1 = farey_truncation(1).unwrap();
        assert_eq!(t1.vertex_set(), vset(["0/1", "1/0", "1/1", "-1/1"]));
        assert_eq!(t1.edge_count(), 5);
        let t2 = farey_truncation(2).unwrap();
        assert_eq!((t2.vertex_count(), t2.edge_count()), (8, 13));
    }

    #[test]
    fn determinant_examples() {
        let fr = |s: &str| s.parse::<Fraction>().unwrap();
        let g = farey_by_determinant(&[Fraction::ZERO, Fraction::INFINITY].into());
        assert_eq!(g.edge_count(), 1);
        assert_eq!(farey_by_determinant(&[fr("1/2"), fr("1/3")].into()).edge_count(), 1);
        assert_eq!(farey_by_determinant(&[fr("1/2"), fr("1/4")].into()).edge_count(), 0);
        let f2 = halved_farey(2).unwrap().into_graph();
        assert_eq!(farey_by_determinant(&fraction_vertices(&f2).unwrap()), f2);
    }

    #[test]
    fn blue_paths() {
        let ids = |p: Vec<VertexId>| p.iter().map(|v| v.to_string()).collect::<Vec<_>>();
        assert_eq!(ids(blue_level_path(2, 0).unwrap()), ["0/1", "1/0"]);
        assert_eq!(ids(blue_level_path(2, 1).unwrap()), ["0/1", "1/1", "1/0"]);
        assert_eq!(ids(blue_level_path(2, 2).unwrap()), ["0/1", "1/2", "1/1", "2/1", "1/0"]);
        assert!(blue_level_path(2, 3).is_err());
    }
}
