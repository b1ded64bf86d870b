use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::connectivity::{k_classes, lambda_global, lambda_sets, separates};
use crate::error::{input, Result};
use crate::graph::{edge_key, MultiGraph, VertexId, VertexSet};

/// Per-condition outcome of a split, measured directly on the graphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitReport {
    /// `X` is nonempty and connected.
    pub x_connected: bool,
    /// Both quotients have `λ >= k`.
    pub quotients_strong: bool,
    /// Neither `u` nor `v` lies in `X`.
    pub ends_outside: bool,
    /// `u` has an edge to `X` in `H_u`, and `v` one in `H_v`.
    pub ends_attached: bool,
    pub lambda_u: usize,
    pub lambda_v: usize,
}

impl SplitReport {
    pub fn holds(&self) -> bool {
        self.x_connected && self.quotients_strong && self.ends_outside && self.ends_attached
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SplitCase {
    /// `K_u` and `K_v` are disjoint.
    Disjoint,
    /// `K_u` and `K_v` meet in a vertex of `S`.
    Meeting,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitResult {
    pub case: SplitCase,
    pub h_u: MultiGraph,
    pub h_v: MultiGraph,
    pub x_set: VertexSet,
    pub report: SplitReport,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SplitOutcome {
    Split(SplitResult),
    Failed { reason: String },
}

/// `λ` of `h` with `x` contracted to a single vertex.
pub fn quotient_lambda(h: &MultiGraph, x: &VertexSet) -> Result<usize> {
    Ok(lambda_global(&h.contract_sets(std::slice::from_ref(x))?))
}

/// Measures the four split conditions on `g[hu]`, `g[hv]` and their common
/// vertex set.
pub fn check_split(g: &MultiGraph, u: &VertexId, v: &VertexId, hu: &MultiGraph, hv: &MultiGraph, k: usize) -> Result<(VertexSet, SplitReport)> {
    let x: VertexSet = hu.vertices().filter(|w| hv.contains(w)).cloned().collect();
    let x_connected = g.is_connected_set(&x);
    let ends_outside = !x.contains(u) && !x.contains(v);
    let touches = |h: &MultiGraph, w: &VertexId| h.contains(w) && h.neighbors(w).any(|(y, _)| x.contains(y));
    let ends_attached = touches(hu, u) && touches(hv, v);
    let (lambda_u, lambda_v) = if x.is_empty() { (0, 0) } else { (quotient_lambda(hu, &x)?, quotient_lambda(hv, &x)?) };
    let report = SplitReport {
        x_connected,
        quotients_strong: lambda_u >= k && lambda_v >= k,
        ends_outside,
        ends_attached,
        lambda_u,
        lambda_v,
    };
    Ok((x, report))
}

fn fail(reason: impl Into<String>) -> Result<SplitOutcome> {
    Ok(SplitOutcome::Failed { reason: reason.into() })
}

struct Side {
    class: VertexSet,
    cross: Vec<(VertexId, VertexId)>,
}

fn side(g: &MultiGraph, s: &VertexSet, w: &VertexId, k: usize) -> Result<Side> {
    let mut piece = g.reach(w, |y| !s.contains(y));
    piece.extend(s.iter().cloned());
    let sub = g.induced(&piece)?;
    let p = k_classes(&sub, k)?;
    let class = p.class_of(w).cloned().expect("every vertex has a class");
    Ok(Side { class, cross: p.cross_edges(&sub) })
}

fn path_in(g: &MultiGraph, within: &VertexSet, from: &VertexId, to: &VertexId) -> Option<Vec<VertexId>> {
    g.induced_unchecked(within).shortest_path(&VertexSet::from([from.clone()]), &VertexSet::from([to.clone()]), |_| true)
}

/// Splits `g` along `s` into two pieces meeting in a connected set `X`,
/// following the class structure of both sides at strength `k`.
pub fn split_at_separator(g: &MultiGraph, u: &VertexId, v: &VertexId, s: &VertexSet, k: usize) -> Result<SplitOutcome> {
    g.check_members(&VertexSet::from([u.clone(), v.clone()]))?;
    g.check_members(s)?;
    if !separates(g, s, u, v) {
        return input("the given set does not separate u and v");
    }
    let (su, sv) = (side(g, s, u, k)?, side(g, s, v, k)?);
    let (ku, kv) = (&su.class, &sv.class);
    if ku.len() == 1 || kv.len() == 1 {
        return fail(format!("an endvertex is alone in its class at strength {k}"));
    }
    let (hu, hv) = match ku.intersection(kv).next().cloned() {
        Some(meet) => {
            let mut ku_rest = ku.clone();
            ku_rest.remove(u);
            let du = g.induced_unchecked(&ku_rest).reach(&meet, |_| true);
            let Some(w) = g.neighbors(u).map(|(y, _)| y).find(|y| du.contains(*y)).cloned() else {
                return fail("u has no neighbour in its piece");
            };
            let sub = g.induced_unchecked(&du);
            let mut tree = VertexSet::from([w]);
            for t in du.intersection(kv) {
                let p = sub.shortest_path(&tree, &VertexSet::from([t.clone()]), |_| true).expect("piece is connected");
                tree.extend(p);
            }
            let Some(pv) = path_in(g, kv, v, &meet) else {
                return fail("v is cut off from the meeting vertex inside its class");
            };
            let mut hu_set = du.clone();
            hu_set.extend(pv[1..].iter().cloned());
            hu_set.insert(u.clone());
            let mut hv_set = kv.clone();
            hv_set.extend(tree);
            (hu_set, hv_set)
        }
        None => {
            let (au, av): (VertexSet, VertexSet) = (ku.intersection(s).cloned().collect(), kv.intersection(s).cloned().collect());
            let mut pruned = g.clone();
            for (a, b) in su.cross.iter().chain(&sv.cross) {
                pruned.remove_edge_all(a, b);
            }
            let cross: BTreeSet<(VertexId, VertexId)> = su.cross.iter().chain(&sv.cross).map(|(a, b)| edge_key(a, b)).collect();
            let cross_count: usize = cross.iter().map(|(a, b)| g.multiplicity(a, b)).sum();
            let available = if au.is_empty() || av.is_empty() { 0 } else { lambda_sets(g, &au, &av)? };
            if available <= cross_count {
                return fail(format!(
                    "surrogate-connectivity shortfall: λ(K_u∩S, K_v∩S)={available} does not exceed {cross_count} cross edges"
                ));
            }
            let Some(p) = pruned.shortest_path(&au, &av, |y| !ku.contains(y) && !kv.contains(y)) else {
                return fail("no path between the classes avoids the cross edges");
            };
            let (pu_end, pv_end) = (p[0].clone(), p[p.len() - 1].clone());
            let (Some(pu), Some(pv)) = (path_in(g, ku, u, &pu_end), path_in(g, kv, v, &pv_end)) else {
                return fail("an endvertex is cut off inside its class");
            };
            let mut hu_set = ku.clone();
            hu_set.extend(p.iter().cloned());
            hu_set.extend(pv[1..].iter().cloned());
            let mut hv_set = kv.clone();
            hv_set.extend(p.iter().cloned());
            hv_set.extend(pu[1..].iter().cloned());
            (hu_set, hv_set)
        }
    };
    let case = if ku.is_disjoint(kv) { SplitCase::Disjoint } else { SplitCase::Meeting };
    let (h_u, h_v) = (g.induced_unchecked(&hu), g.induced_unchecked(&hv));
    let (x_set, report) = check_split(g, u, v, &h_u, &h_v, k)?;
    Ok(SplitOutcome::Split(SplitResult { case, h_u, h_v, x_set, report }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::vset;

    fn clique(g: &mut MultiGraph, vs: &[String]) {
        for i in 0..vs.len() {
            for j in i + 1..vs.len() {
                if !g.has_edge(&vs[i].as_str().into(), &vs[j].as_str().into()) {
                    g.add_edge(vs[i].as_str(), vs[j].as_str()).unwrap();
                }
            }
        }
    }

    fn names(p: &str, n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("{p}{i:02}")).collect()
    }

    #[test]
    fn barbell_meets_in_separator() {
        let mut g = MultiGraph::new();
        for side in ["a", "b"] {
            clique(&mut g, &[format!("{side}1"), format!("{side}2"), format!("{side}3"), "s1".into(), "s2".into()]);
        }
        let SplitOutcome::Split(r) = split_at_separator(&g, &"a1".into(), &"b1".into(), &vset(["s1", "s2"]), 3).unwrap() else {
            panic!("expected a split")
        };
        assert_eq!(r.case, SplitCase::Meeting);
        assert_eq!(r.x_set, vset(["a2", "s1", "s2"]));
        assert_eq!((r.report.lambda_u, r.report.lambda_v), (4, 4));
        assert!(r.report.holds());
    }

    #[test]
    fn twin_cliques_route_through_bypass() {
        let mut g = MultiGraph::new();
        let (a, b, d) = (names("a", 12), names("b", 12), names("d", 12));
        for blob in [&a, &b, &d] {
            clique(&mut g, blob);
        }
        for x in a.iter().chain(&b[..3]).chain(&d) {
            g.add_edge("s1", x.as_str()).unwrap();
        }
        for x in b.iter().chain(&a[..3]).chain(&d) {
            g.add_edge("s2", x.as_str()).unwrap();
        }
        let SplitOutcome::Split(r) = split_at_separator(&g, &"a01".into(), &"b01".into(), &vset(["s1", "s2"]), 4).unwrap() else {
            panic!("expected a split")
        };
        assert_eq!(r.case, SplitCase::Disjoint);
        assert!(r.x_set.iter().any(|x| x.as_str().starts_with('d')));
        assert!(r.report.holds(), "{:?}", r.report);
    }

    #[test]
    fn rejects_non_separators() {
        let mut g = MultiGraph::new();
        clique(&mut g, &["a".into(), "b".into(), "c".into()]);
        assert!(split_at_separator(&g, &"a".into(), &"b".into(), &vset(["c"]), 2).is_err());
    }
}
