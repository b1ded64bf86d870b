//! Rooted trees up to isomorphism and brute-force checks on them.

use std::collections::{BTreeMap, BTreeSet};

use fareyforge_core::tree_tools::RootedTree;
use fareyforge_core::VertexId;

/// Canonical strings of all rooted trees with exactly `n` nodes: a node is
/// `(` followed by its children's strings in sorted order and `)`.
pub fn rooted_tree_codes(n: usize) -> Vec<String> {
    let mut by_size: Vec<Vec<String>> = vec![Vec::new(), vec!["()".to_string()]];
    for s in 2..=n {
        let mut out = BTreeSet::new();
        let pool: Vec<(usize, &String)> = (1..s).flat_map(|k| by_size[k].iter().map(move |c| (k, c))).collect();
        let mut chosen = Vec::new();
        forests(&pool, 0, s - 1, &mut chosen, &mut out);
        by_size.push(out.into_iter().collect());
    }
    by_size.get(n).cloned().unwrap_or_default()
}

fn forests<'a>(pool: &[(usize, &'a String)], from: usize, left: usize, chosen: &mut Vec<&'a String>, out: &mut BTreeSet<String>) {
    if left == 0 {
        let mut kids: Vec<&String> = chosen.clone();
        kids.sort();
        out.insert(format!("({})", kids.into_iter().cloned().collect::<String>()));
        return;
    }
    for i in from..pool.len() {
        let (size, code) = pool[i];
        if size <= left {
            chosen.push(code);
            forests(pool, i, left - size, chosen, out);
            chosen.pop();
        }
    }
}

/// Nodes are named `t0, t1, ...` in preorder; `t0` is the root.
pub fn tree_from_code(code: &str) -> RootedTree {
    let mut parent = BTreeMap::new();
    let mut stack: Vec<VertexId> = Vec::new();
    let mut count = 0;
    for ch in code.chars() {
        match ch {
            '(' => {
                let id = VertexId::new(format!("t{count}"));
                count += 1;
                if let Some(p) = stack.last() {
                    parent.insert(id.clone(), p.clone());
                }
                stack.push(id);
            }
            ')' => {
                stack.pop();
            }
            _ => panic!("bad tree code {code}"),
        }
    }
    RootedTree::new("t0".into(), parent).expect("well formed")
}

/// All rooted trees with `1..=max_n` nodes up to isomorphism.
pub fn rooted_trees(max_n: usize) -> Vec<RootedTree> {
    (1..=max_n).flat_map(rooted_tree_codes).map(|c| tree_from_code(&c)).collect()
}

fn descendants(t: &RootedTree, x: &VertexId) -> Vec<VertexId> {
    let mut out = vec![x.clone()];
    let mut i = 0;
    while i < out.len() {
        let kids = t.children(&out[i]).to_vec();
        out.extend(kids);
        i += 1;
    }
    out
}

/// Number of rounds when every round deletes, all at once, each remaining
/// node whose remaining descendants form a downward chain.
pub fn simulate_pruning(t: &RootedTree) -> usize {
    let mut alive: BTreeSet<VertexId> = t.nodes().cloned().collect();
    let mut rounds = 0;
    while !alive.is_empty() {
        let doomed: Vec<VertexId> = alive
            .iter()
            .filter(|x| {
                let mut cur = (*x).clone();
                loop {
                    let kids: Vec<&VertexId> = t.children(&cur).iter().filter(|c| alive.contains(*c)).collect();
                    match kids.as_slice() {
                        [] => return true,
                        [c] => cur = (*c).clone(),
                        _ => return false,
                    }
                }
            })
            .cloned()
            .collect();
        for x in doomed {
            alive.remove(&x);
        }
        rounds += 1;
    }
    rounds
}

fn place(t: &RootedTree, h: usize, slot: usize, image: &mut Vec<Option<VertexId>>, within: &[VertexId]) -> bool {
    let depth = h - level(slot);
    for y in within {
        if depth == 0 {
            image[slot] = Some(y.clone());
            return true;
        }
        let kids = t.children(y);
        for (i, c1) in kids.iter().enumerate() {
            for c2 in kids.iter().skip(i + 1) {
                image[slot] = Some(y.clone());
                if place(t, h, 2 * slot + 1, image, &descendants(t, c1)) && place(t, h, 2 * slot + 2, image, &descendants(t, c2)) {
                    return true;
                }
            }
        }
    }
    false
}

fn level(slot: usize) -> usize {
    (usize::BITS - 1 - (slot + 1).leading_zeros()) as usize
}

/// Whether the full binary tree of height `h` embeds by direct search over
/// images: each pattern node sits below the image of its parent, the two
/// siblings under distinct children.
pub fn brute_binary_embeds(t: &RootedTree, h: usize) -> bool {
    let mut image = vec![None; (1 << (h + 1)) - 1];
    place(t, h, 0, &mut image, &descendants(t, t.root()))
}

/// Checks a heap-ordered embedding against the definition.
pub fn is_binary_embedding(t: &RootedTree, h: usize, emb: &[VertexId]) -> bool {
    if emb.len() != (1 << (h + 1)) - 1 || emb.iter().collect::<BTreeSet<_>>().len() != emb.len() {
        return false;
    }
    (0..emb.len()).filter(|i| 2 * i + 2 < emb.len()).all(|i| {
        let kid_of = |d: &VertexId| t.children(&emb[i]).iter().find(|c| t.is_ancestor(c, d)).cloned();
        match (kid_of(&emb[2 * i + 1]), kid_of(&emb[2 * i + 2])) {
            (Some(a), Some(b)) => a != b,
            _ => false,
        }
    })
}

/// Largest `h` with [`brute_binary_embeds`].
pub fn brute_branch_order(t: &RootedTree) -> usize {
    let mut h = 0;
    while brute_binary_embeds(t, h + 1) {
        h += 1;
    }
    h
}
