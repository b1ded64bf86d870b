//! Arrow, muscle, football and plow gadgets with `λ >= k` validators.
//!
//! "Infinitely many" attachment edges become an explicit multiplicity and
//! "infinitely edge-connected" becomes `λ >= k`. Reports always carry the
//! achieved strengths so that the loss under finitization stays visible.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::connectivity::lambda_global;
use crate::error::{input, Error, Result};
use crate::graph::{vset, MultiGraph, VertexId, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GadgetKind {
    Arrow,
    ArrowBarrage,
    Muscle,
    MuscleBarrage,
    Football,
    HalfPlow,
    Plow,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 7] = [
        GadgetKind::Arrow,
        GadgetKind::ArrowBarrage,
        GadgetKind::Muscle,
        GadgetKind::MuscleBarrage,
        GadgetKind::Football,
        GadgetKind::HalfPlow,
        GadgetKind::Plow,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GadgetKind::Arrow => "arrow",
            GadgetKind::ArrowBarrage => "arrow-barrage",
            GadgetKind::Muscle => "muscle",
            GadgetKind::MuscleBarrage => "muscle-barrage",
            GadgetKind::Football => "football",
            GadgetKind::HalfPlow => "half-plow",
            GadgetKind::Plow => "plow",
        }
    }

    /// Role names a validator needs for this kind.
    pub fn roles(self) -> &'static [&'static str] {
        match self {
            GadgetKind::Arrow | GadgetKind::ArrowBarrage => &["nock", "head"],
            GadgetKind::Plow => &["u", "h", "v"],
            _ => &["u", "v"],
        }
    }
}

impl std::str::FromStr for GadgetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GadgetKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Input(format!("unknown gadget kind {s:?}")))
    }
}

/// Outcome of checking a graph against one gadget definition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetReport {
    pub kind: GadgetKind,
    pub endpoints: BTreeMap<String, VertexId>,
    /// Achieved λ of each payload. Footballs report `[λ(G), λ(G-u-v)]`,
    /// plows the two half-plows.
    pub strength: Vec<usize>,
    pub valid: bool,
    pub reasons: Vec<String>,
}

/// Attachment parameters for [`build_gadget`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Wiring {
    /// Number of head-side edges of each arrow.
    pub multiplicity: usize,
}

impl Default for Wiring {
    fn default() -> Self {
        Wiring { multiplicity: 1 }
    }
}

fn prefixed(payload: &MultiGraph, i: usize) -> MultiGraph {
    payload
        .relabel(|v| VertexId::new(format!("p{i}:{v}")))
        .expect("prefixing is injective")
}

fn least_edge(g: &MultiGraph) -> Option<(VertexId, VertexId)> {
    g.edges().next().map(|(a, b, _)| (a.clone(), b.clone()))
}

fn attach_arrow(g: &mut MultiGraph, h: &MultiGraph, m: usize) -> Result<()> {
    let verts: Vec<&VertexId> = h.vertices().collect();
    if verts.len() < m + 1 {
        return input(format!("payload with {} vertices cannot take {m} distinct head edges", verts.len()));
    }
    g.add_edge("nock", verts[0].clone())?;
    for x in &verts[1..=m] {
        g.add_edge("head", (*x).clone())?;
    }
    Ok(())
}

fn attach_muscle(g: &mut MultiGraph, h: &MultiGraph) -> Result<()> {
    let verts: Vec<&VertexId> = h.vertices().collect();
    if verts.len() < 2 {
        return input("muscle payload needs two distinct attachment vertices");
    }
    g.add_edge("u", verts[0].clone())?;
    g.add_edge("v", verts[1].clone())?;
    Ok(())
}

/// Builds a gadget around the given payloads and reports its validity at
/// strength `min λ(payload)`.
pub fn build_gadget(kind: GadgetKind, payloads: &[MultiGraph], wiring: Wiring) -> Result<(MultiGraph, GadgetReport)> {
    let want = |n: usize| -> Result<()> {
        if payloads.len() == n {
            Ok(())
        } else {
            input(format!("{} takes exactly {n} payload(s), got {}", kind.name(), payloads.len()))
        }
    };
    if payloads.is_empty() {
        return input("at least one payload is required");
    }
    if let Some(p) = payloads.iter().find(|p| p.vertex_count() == 0 || !p.is_connected()) {
        return input(format!("payload must be connected and nonempty: {p:?}"));
    }
    if wiring.multiplicity == 0 {
        return input("multiplicity must be at least 1");
    }
    let mut g = MultiGraph::new();
    let mut roles = BTreeMap::new();
    match kind {
        GadgetKind::Arrow | GadgetKind::ArrowBarrage => {
            if kind == GadgetKind::Arrow {
                want(1)?;
            }
            for (i, p) in payloads.iter().enumerate() {
                let h = prefixed(p, i);
                g = g.union(&h);
                attach_arrow(&mut g, &h, wiring.multiplicity)?;
            }
            roles.insert("nock".to_string(), VertexId::from("nock"));
            roles.insert("head".to_string(), VertexId::from("head"));
        }
        GadgetKind::Muscle | GadgetKind::MuscleBarrage => {
            if kind == GadgetKind::Muscle {
                want(1)?;
            }
            for (i, p) in payloads.iter().enumerate() {
                let h = prefixed(p, i);
                g = g.union(&h);
                attach_muscle(&mut g, &h)?;
            }
            roles.insert("u".to_string(), VertexId::from("u"));
            roles.insert("v".to_string(), VertexId::from("v"));
        }
        GadgetKind::HalfPlow => {
            want(1)?;
            g = prefixed(&payloads[0], 0);
            let (a, b) = least_edge(&g).ok_or_else(|| Error::Input("half-plow payload needs an edge".into()))?;
            roles.insert("u".to_string(), a);
            roles.insert("v".to_string(), b);
        }
        GadgetKind::Plow => {
            want(2)?;
            let first = prefixed(&payloads[0], 0);
            let second = prefixed(&payloads[1], 1);
            let (u, h0) = least_edge(&first).ok_or_else(|| Error::Input("half-plow payload needs an edge".into()))?;
            let (h1, v) = least_edge(&second).ok_or_else(|| Error::Input("half-plow payload needs an edge".into()))?;
            let head = VertexId::from("h");
            let first = first.relabel(|x| if *x == h0 { head.clone() } else { x.clone() })?;
            let second = second.relabel(|x| if *x == h1 { head.clone() } else { x.clone() })?;
            g = first.union(&second);
            roles.insert("u".to_string(), u);
            roles.insert("h".to_string(), head);
            roles.insert("v".to_string(), v);
        }
        GadgetKind::Football => return input("footballs are validated, not built"),
    }
    let k = payloads.iter().map(lambda_global).min().unwrap_or(0);
    let report = validate_gadget(&g, kind, &roles, k)?;
    Ok((g, report))
}

struct Checker {
    reasons: Vec<String>,
}

impl Checker {
    fn require(&mut self, ok: bool, reason: impl FnOnce() -> String) {
        if !ok {
            self.reasons.push(reason());
        }
    }

    fn strength(&mut self, label: &str, lambda: usize, k: usize) -> usize {
        self.require(lambda >= k, || format!("λ({label})={lambda} < {k}"));
        lambda
    }
}

/// Checks payload `h` (a component of `g - a - b`) wired as an arrow.
fn arrow_clauses(c: &mut Checker, g: &MultiGraph, nock: &VertexId, head: &VertexId, h: &VertexSet, label: &str) {
    let into = |x: &VertexId| -> Vec<(VertexId, usize)> {
        g.neighbors(x).filter(|(w, _)| h.contains(*w)).map(|(w, m)| (w.clone(), m)).collect()
    };
    let nock_edges = into(nock);
    let nock_total: usize = nock_edges.iter().map(|(_, m)| m).sum();
    c.require(nock_total == 1, || format!("nock sends {nock_total} edges to {label}, expected 1"));
    let tip = nock_edges.first().map(|(w, _)| w.clone());
    let head_edges = into(head);
    c.require(!head_edges.is_empty(), || format!("head sends no edge to {label}"));
    c.require(head_edges.iter().all(|(_, m)| *m == 1), || format!("head edges into {label} repeat an endpoint"));
    if let Some(t) = tip {
        c.require(head_edges.iter().all(|(w, _)| *w != t), || format!("head is adjacent to the nock's attachment {t}"));
    }
}

fn muscle_clauses(c: &mut Checker, g: &MultiGraph, u: &VertexId, v: &VertexId, h: &VertexSet, label: &str) {
    let into = |x: &VertexId| -> Vec<VertexId> {
        g.neighbors(x)
            .filter(|(w, _)| h.contains(*w))
            .flat_map(|(w, m)| std::iter::repeat_n(w.clone(), m))
            .collect()
    };
    let (xu, xv) = (into(u), into(v));
    c.require(xu.len() == 1, || format!("u sends {} edges to {label}, expected 1", xu.len()));
    c.require(xv.len() == 1, || format!("v sends {} edges to {label}, expected 1", xv.len()));
    if let (Some(x), Some(y)) = (xu.first(), xv.first()) {
        c.require(x != y, || format!("u and v attach to the same vertex {x} of {label}"));
    }
}

fn role(roles: &BTreeMap<String, VertexId>, g: &MultiGraph, name: &str) -> Result<VertexId> {
    let v = roles.get(name).ok_or_else(|| Error::Input(format!("missing role {name:?}")))?;
    if !g.contains(v) {
        return input(format!("role {name:?} names unknown vertex {v}"));
    }
    Ok(v.clone())
}

/// Checks every clause of `kind`'s definition with "infinitely
/// edge-connected" read as `λ >= k`.
pub fn validate_gadget(
    g: &MultiGraph,
    kind: GadgetKind,
    roles: &BTreeMap<String, VertexId>,
    k: usize,
) -> Result<GadgetReport> {
    let mut endpoints = BTreeMap::new();
    for name in kind.roles() {
        endpoints.insert(name.to_string(), role(roles, g, name)?);
    }
    let get = |n: &str| endpoints[n].clone();
    let mut c = Checker { reasons: Vec::new() };
    let mut strength = Vec::new();
    match kind {
        GadgetKind::Football => {
            let (u, v) = (get("u"), get("v"));
            c.require(u != v, || "endvertices coincide".into());
            strength.push(c.strength("G", lambda_global(g), k));
            strength.push(c.strength("G−u−v", lambda_global(&g.without(&vset([u, v]))), k));
        }
        GadgetKind::HalfPlow => {
            let (u, v) = (get("u"), get("v"));
            c.require(g.has_edge(&u, &v), || format!("edge {u}{v} missing"));
            strength.push(c.strength("G", lambda_global(g), k));
        }
        GadgetKind::Plow => {
            let (u, h, v) = (get("u"), get("h"), get("v"));
            let rest = g.without(&vset([h.clone()]));
            let v_side = rest.reach(&v, |_| true);
            c.require(!v_side.contains(&u), || "u and v are joined avoiding the head".into());
            let mut u_side: VertexSet = rest.vertices().filter(|x| !v_side.contains(*x)).cloned().collect();
            u_side.insert(h.clone());
            let mut v_half = v_side.clone();
            v_half.insert(h.clone());
            let (hu, hv) = (g.induced_unchecked(&u_side), g.induced_unchecked(&v_half));
            c.require(hu.has_edge(&u, &h), || format!("edge {u}{h} missing from the first half-plow"));
            c.require(hv.has_edge(&h, &v), || format!("edge {h}{v} missing from the second half-plow"));
            strength.push(c.strength("first half-plow", lambda_global(&hu), k));
            strength.push(c.strength("second half-plow", lambda_global(&hv), k));
        }
        GadgetKind::Arrow | GadgetKind::ArrowBarrage | GadgetKind::Muscle | GadgetKind::MuscleBarrage => {
            let (a, b) = match kind {
                GadgetKind::Arrow | GadgetKind::ArrowBarrage => (get("nock"), get("head")),
                _ => (get("u"), get("v")),
            };
            c.require(a != b, || "endvertices coincide".into());
            c.require(!g.has_edge(&a, &b), || format!("endvertices {a} and {b} are adjacent"));
            let payload = g.without(&vset([a.clone(), b.clone()]));
            let comps = payload.components();
            let barrage = matches!(kind, GadgetKind::ArrowBarrage | GadgetKind::MuscleBarrage);
            if barrage {
                c.require(!comps.is_empty(), || "barrage has no payloads".into());
            } else {
                c.require(comps.len() == 1, || format!("payload has {} components, expected 1", comps.len()));
            }
            for (i, comp) in comps.iter().enumerate() {
                let label = format!("H{i}");
                let h = payload.induced_unchecked(comp);
                if matches!(kind, GadgetKind::Arrow | GadgetKind::ArrowBarrage) {
                    arrow_clauses(&mut c, g, &a, &b, comp, &label);
                } else {
                    muscle_clauses(&mut c, g, &a, &b, comp, &label);
                }
                strength.push(c.strength(&label, lambda_global(&h), k));
            }
        }
    }
    Ok(GadgetReport { kind, endpoints, strength, valid: c.reasons.is_empty(), reasons: c.reasons })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::complete;

    fn roles(pairs: &[(&str, &str)]) -> BTreeMap<String, VertexId> {
        pairs.iter().map(|(r, v)| (r.to_string(), VertexId::from(*v))).collect()
    }

    #[test]
    fn build_counts() {
        let (g, r) = build_gadget(GadgetKind::Arrow, &[complete(4)], Wiring { multiplicity: 3 }).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 10));
        assert!(r.valid, "{:?}", r.reasons);
        let (g, r) = build_gadget(GadgetKind::Muscle, &[complete(4)], Wiring::default()).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 8));
        assert!(r.valid && r.strength == vec![3]);
        let (g, r) = build_gadget(GadgetKind::Plow, &[complete(4), complete(4)], Wiring::default()).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (7, 12));
        assert!(r.valid, "{:?}", r.reasons);
    }

    #[test]
    fn arrow_payload_too_small() {
        assert!(build_gadget(GadgetKind::Arrow, &[complete(3)], Wiring { multiplicity: 3 }).is_err());
        assert!(build_gadget(GadgetKind::Football, &[complete(3)], Wiring::default()).is_err());
    }

    #[test]
    fn football_in_k6() {
        let k6 = complete(6);
        let r = validate_gadget(&k6, GadgetKind::Football, &roles(&[("u", "1"), ("v", "2")]), 3).unwrap();
        assert!(r.valid);
        assert_eq!(r.strength, vec![5, 3]);
        let r = validate_gadget(&k6, GadgetKind::Football, &roles(&[("u", "1"), ("v", "2")]), 4).unwrap();
        assert!(!r.valid);
        assert_eq!(r.reasons, vec!["λ(G−u−v)=3 < 4".to_string()]);
    }

    #[test]
    fn missing_role_is_an_error() {
        let k6 = complete(6);
        assert!(validate_gadget(&k6, GadgetKind::Football, &roles(&[("u", "1")]), 3).is_err());
    }

    #[test]
    fn muscle_with_shared_attachment_is_invalid() {
        let mut g = complete(4);
        g.add_edge("u", "1").unwrap();
        g.add_edge("v", "1").unwrap();
        let r = validate_gadget(&g, GadgetKind::Muscle, &roles(&[("u", "u"), ("v", "v")]), 3).unwrap();
        assert!(!r.valid);
    }
}
