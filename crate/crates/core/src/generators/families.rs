//! Small named graph families used as hosts, patterns and payloads.

use crate::error::{input, Error, Result};
use crate::graph::{MultiGraph, VertexId};

use super::farey::{farey_truncation, halved_farey};

/// Cap on the size of generated trees.
pub const MAX_GENERATED_VERTICES: usize = 1 << 20;

/// Token of the apex vertex of [`tree_join`].
pub const APEX: &str = "t";
/// Token of the tree root in [`tree_join`] and [`full_tree`].
pub const ROOT: &str = "r";

fn child(parent: &str, i: usize) -> String {
    format!("{parent}.{i}")
}

/// Complete `d`-ary tree of height `h`; nodes are `r`, `r.0`, `r.0.1`, ...
pub fn full_tree(d: usize, h: usize) -> Result<MultiGraph> {
    if d == 0 {
        return input("branching must be at least 1");
    }
    let mut size: usize = 1;
    let mut level: usize = 1;
    for _ in 0..h {
        level = level.saturating_mul(d);
        size = size.saturating_add(level);
    }
    if size > MAX_GENERATED_VERTICES {
        return Err(Error::Resource(format!("tree with {size} vertices exceeds cap")));
    }
    let mut g = MultiGraph::new();
    g.add_vertex(ROOT);
    let mut frontier = vec![ROOT.to_string()];
    for _ in 0..h {
        let mut next = Vec::with_capacity(frontier.len() * d);
        for p in &frontier {
            for i in 0..d {
                let c = child(p, i);
                g.add_edge(p.as_str(), c.as_str())?;
                next.push(c);
            }
        }
        frontier = next;
    }
    Ok(g)
}

/// Complete `d`-ary tree of height `h` plus an apex `t` adjacent to every
/// tree vertex. Returns the graph and the apex.
pub fn tree_join(d: usize, h: usize) -> Result<(MultiGraph, VertexId)> {
    let mut g = full_tree(d, h)?;
    let apex = VertexId::from(APEX);
    let tree: Vec<VertexId> = g.vertices().cloned().collect();
    for v in tree {
        g.add_edge(apex.clone(), v)?;
    }
    Ok((g, apex))
}

/// `K_n` on tokens `1..=n`.
pub fn complete(n: usize) -> MultiGraph {
    let mut g = MultiGraph::new();
    for i in 1..=n {
        g.add_vertex(i.to_string());
        for j in 1..i {
            g.add_edge(j.to_string(), i.to_string()).expect("distinct");
        }
    }
    g
}

/// `K_{a,b}` with sides `a1..` and `b1..`.
pub fn complete_bipartite(a: usize, b: usize) -> MultiGraph {
    let mut g = MultiGraph::new();
    for i in 1..=a {
        g.add_vertex(format!("a{i}"));
    }
    for j in 1..=b {
        g.add_vertex(format!("b{j}"));
        for i in 1..=a {
            g.add_edge(format!("a{i}"), format!("b{j}")).expect("distinct");
        }
    }
    g
}

/// Path `v1 - v2 - ... - vn`.
pub fn path(n: usize) -> MultiGraph {
    let mut g = MultiGraph::new();
    for i in 1..=n {
        g.add_vertex(format!("v{i}"));
        if i > 1 {
            g.add_edge(format!("v{}", i - 1), format!("v{i}")).expect("distinct");
        }
    }
    g
}

/// Cycle `v1 ... vn v1`, `n >= 3`.
pub fn cycle(n: usize) -> Result<MultiGraph> {
    if n < 3 {
        return input("a cycle needs at least 3 vertices");
    }
    let mut g = path(n);
    g.add_edge(format!("v{n}"), "v1")?;
    Ok(g)
}

fn parse_args(spec: &str, args: &[&str], want: usize) -> Result<Vec<usize>> {
    if args.len() != want {
        return input(format!("generator {spec:?} expects {want} numeric argument(s)"));
    }
    args.iter()
        .map(|a| a.parse::<usize>().map_err(|_| Error::Input(format!("bad number {a:?} in {spec:?}"))))
        .collect()
}

/// Builds a graph from a name such as `halved-farey:3`, `farey:2`,
/// `tree-join:3:2`, `complete:5`, `complete-bipartite:2:3`, `cycle:6`,
/// `path:4` or `tree:2:3`.
pub fn named(spec: &str) -> Result<MultiGraph> {
    let mut parts = spec.split(':');
    let family = parts.next().unwrap_or_default();
    let args: Vec<&str> = parts.collect();
    let order = |a: &[usize]| u32::try_from(a[0]).map_err(|_| Error::Input("order too large".into()));
    match family {
        "halved-farey" => Ok(halved_farey(order(&parse_args(spec, &args, 1)?)?)?.into_graph()),
        "farey" => farey_truncation(order(&parse_args(spec, &args, 1)?)?),
        "tree-join" => {
            let a = parse_args(spec, &args, 2)?;
            Ok(tree_join(a[0], a[1])?.0)
        }
        "tree" => {
            let a = parse_args(spec, &args, 2)?;
            full_tree(a[0], a[1])
        }
        "complete" => Ok(complete(parse_args(spec, &args, 1)?[0])),
        "complete-bipartite" => {
            let a = parse_args(spec, &args, 2)?;
            Ok(complete_bipartite(a[0], a[1]))
        }
        "cycle" => cycle(parse_args(spec, &args, 1)?[0]),
        "path" => Ok(path(parse_args(spec, &args, 1)?[0])),
        _ => input(format!("unknown generator {spec:?}")),
    }
}
