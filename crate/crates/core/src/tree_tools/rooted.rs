use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::graph::{MultiGraph, VertexId};

/// A finite tree with a root, stored as parent links.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    root: VertexId,
    parent: BTreeMap<VertexId, VertexId>,
    children: BTreeMap<VertexId, Vec<VertexId>>,
}

impl RootedTree {
    pub fn new(root: VertexId, parent: BTreeMap<VertexId, VertexId>) -> Result<Self> {
        if parent.contains_key(&root) {
            return input(format!("root {root} has a parent"));
        }
        let mut children: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        children.insert(root.clone(), Vec::new());
        for (c, p) in &parent {
            if c == p {
                return input(format!("{c} is its own parent"));
            }
            children.entry(p.clone()).or_default().push(c.clone());
            children.entry(c.clone()).or_default();
        }
        if children.len() != parent.len() + 1 {
            return input("some parent is neither the root nor a child");
        }
        let t = RootedTree { root, parent, children };
        if t.preorder().len() != t.len() {
            return input("parent links contain a cycle or miss the root");
        }
        Ok(t)
    }

    /// Roots a tree graph at `root`.
    pub fn from_graph(g: &MultiGraph, root: &VertexId) -> Result<Self> {
        if !g.is_tree() {
            return input("graph is not a tree");
        }
        if !g.contains(root) {
            return input(format!("unknown root {root}"));
        }
        let mut parent = BTreeMap::new();
        let mut queue = VecDeque::from([root.clone()]);
        while let Some(x) = queue.pop_front() {
            for (w, _) in g.neighbors(&x) {
                if w != root && !parent.contains_key(w) {
                    parent.insert(w.clone(), x.clone());
                    queue.push_back(w.clone());
                }
            }
        }
        RootedTree::new(root.clone(), parent)
    }

    pub fn root(&self) -> &VertexId {
        &self.root
    }

    pub fn parent(&self, v: &VertexId) -> Option<&VertexId> {
        self.parent.get(v)
    }

    pub fn parents(&self) -> &BTreeMap<VertexId, VertexId> {
        &self.parent
    }

    /// Children in token order.
    pub fn children(&self, v: &VertexId) -> &[VertexId] {
        self.children.get(v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn len(&self) -> usize {
        self.children.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn nodes(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.children.keys()
    }

    /// Root first, children in token order.
    pub fn preorder(&self) -> Vec<VertexId> {
        let mut out = Vec::new();
        let mut stack = vec![&self.root];
        while let Some(x) = stack.pop() {
            out.push(x.clone());
            if out.len() > self.children.len() {
                break;
            }
            stack.extend(self.children(x).iter().rev());
        }
        out
    }

    /// Whether `a` is an ancestor of `b` or equal to it.
    pub fn is_ancestor(&self, a: &VertexId, b: &VertexId) -> bool {
        let mut cur = Some(b);
        while let Some(x) = cur {
            if x == a {
                return true;
            }
            cur = self.parent.get(x);
        }
        false
    }

    pub fn to_graph(&self) -> MultiGraph {
        let mut g = MultiGraph::new();
        g.add_vertex(self.root.clone());
        for (c, p) in &self.parent {
            g.add_edge(c.clone(), p.clone()).expect("not a loop");
        }
        g
    }
}

/// Round labels of the recursive pruning.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruneResult {
    pub label: BTreeMap<VertexId, usize>,
    pub rounds: usize,
}

/// Each round labels the unlabelled nodes whose unlabelled descendants,
/// including themselves, form a chain.
pub fn prune_labels(t: &RootedTree) -> PruneResult {
    let order = t.preorder();
    let mut label: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut round = 0;
    while label.len() < order.len() {
        let mut chain: BTreeMap<&VertexId, bool> = BTreeMap::new();
        for x in order.iter().rev().filter(|x| !label.contains_key(*x)) {
            let open: Vec<&VertexId> = t.children(x).iter().filter(|c| !label.contains_key(*c)).collect();
            let ok = match open.as_slice() {
                [] => true,
                [c] => chain[c],
                _ => false,
            };
            chain.insert(x, ok);
        }
        for (x, ok) in chain {
            if ok {
                label.insert(x.clone(), round);
            }
        }
        round += 1;
    }
    PruneResult { label, rounds: round }
}

fn orders(t: &RootedTree) -> BTreeMap<VertexId, usize> {
    let mut ord: BTreeMap<VertexId, usize> = BTreeMap::new();
    for x in t.preorder().into_iter().rev() {
        let mut vals: Vec<usize> = t.children(&x).iter().map(|c| ord[c]).collect();
        vals.sort_unstable_by(|a, b| b.cmp(a));
        let o = match vals.as_slice() {
            [] => 0,
            [m] => *m,
            [m, n, ..] => if m == n { m + 1 } else { *m },
        };
        ord.insert(x, o);
    }
    ord
}

/// Strahler number: a leaf has order 0, an inner node the largest child
/// order, plus one when two children attain it.
pub fn branch_order(t: &RootedTree) -> usize {
    orders(t)[t.root()]
}

/// Nodes of a full binary tree of height `h` in heap order: entry `i` has
/// pattern children `2i + 1` and `2i + 2`.
pub type BinaryEmbedding = Vec<VertexId>;

/// Whether the full binary tree of height `h` embeds in the ancestor order,
/// with the two pattern children of each node below distinct children of its
/// image. Returns the embedding when it does.
pub fn contains_binary_subdivision(t: &RootedTree, h: usize) -> Option<BinaryEmbedding> {
    let ord = orders(t);
    if ord[t.root()] < h {
        return None;
    }
    let mut out = vec![t.root().clone(); (1 << (h + 1)) - 1];
    embed(t, &ord, t.root(), h, 0, &mut out);
    Some(out)
}

fn embed(t: &RootedTree, ord: &BTreeMap<VertexId, usize>, x: &VertexId, h: usize, slot: usize, out: &mut [VertexId]) {
    if h == 0 {
        out[slot] = x.clone();
        return;
    }
    let mut cur = x;
    loop {
        let strong: Vec<&VertexId> = t.children(cur).iter().filter(|c| ord[*c] >= h - 1).collect();
        if strong.len() >= 2 {
            out[slot] = cur.clone();
            embed(t, ord, strong[0], h - 1, 2 * slot + 1, out);
            embed(t, ord, strong[1], h - 1, 2 * slot + 2, out);
            return;
        }
        cur = t.children(cur).iter().find(|c| ord[*c] >= h).expect("order is witnessed below");
    }
}

pub const RTREE_FORMAT: &str = "fareyforge-rtree-v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootedTreeJson {
    pub format: String,
    pub root: VertexId,
    pub parent: BTreeMap<VertexId, VertexId>,
}

impl RootedTreeJson {
    pub fn from_tree(t: &RootedTree) -> Self {
        RootedTreeJson { format: RTREE_FORMAT.to_string(), root: t.root.clone(), parent: t.parent.clone() }
    }

    pub fn decode(&self) -> Result<RootedTree> {
        if self.format != RTREE_FORMAT {
            return Err(Error::Parse(format!("format: expected {RTREE_FORMAT:?}, found {:?}", self.format)));
        }
        RootedTree::new(self.root.clone(), self.parent.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{full_tree, path};

    fn rooted(g: &MultiGraph, root: &str) -> RootedTree {
        RootedTree::from_graph(g, &root.into()).unwrap()
    }

    #[test]
    fn pruning_examples() {
        let p = rooted(&path(5), "v1");
        let r = prune_labels(&p);
        assert_eq!(r.rounds, 1);
        assert!(r.label.values().all(|&l| l == 0));
        let b = rooted(&full_tree(2, 2).unwrap(), "r");
        let r = prune_labels(&b);
        assert_eq!((r.rounds, r.label[&"r".into()], r.label[&"r.0".into()], r.label[&"r.0.1".into()]), (3, 2, 1, 0));
        let mid = rooted(&path(3), "v2");
        let r = prune_labels(&mid);
        assert_eq!((r.rounds, r.label[&"v2".into()]), (2, 1));
    }

    #[test]
    fn orders_and_embeddings() {
        assert_eq!(branch_order(&rooted(&path(6), "v1")), 0);
        for h in 0..=4 {
            assert_eq!(branch_order(&rooted(&full_tree(2, h).unwrap(), "r")), h);
        }
        let mut spider = MultiGraph::new();
        for i in 0..3 {
            spider.add_edge("r", format!("a{i}")).unwrap();
            spider.add_edge(format!("a{i}"), format!("b{i}")).unwrap();
        }
        assert_eq!(branch_order(&rooted(&spider, "r")), 1);
        assert!(contains_binary_subdivision(&rooted(&path(4), "v1"), 1).is_none());
        assert_eq!(
            contains_binary_subdivision(&rooted(&path(3), "v2"), 1).unwrap(),
            vec!["v2".into(), "v1".into(), "v3".into()] as Vec<VertexId>
        );
        let b3 = rooted(&full_tree(2, 3).unwrap(), "r");
        assert_eq!(contains_binary_subdivision(&b3, 3).unwrap().len(), 15);
        assert!(contains_binary_subdivision(&b3, 4).is_none());
    }

    #[test]
    fn rejects_cycles() {
        let parent = BTreeMap::from([("a".into(), "b".into()), ("b".into(), "a".into())]);
        assert!(RootedTree::new("r".into(), parent).is_err());
    }
}
