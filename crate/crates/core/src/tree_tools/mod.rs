//! Rooted trees: recursive pruning, branching order, binary subdivisions;
//! and the finite star-comb search.

mod rooted;
mod star_comb;

pub use rooted::{
    branch_order, contains_binary_subdivision, prune_labels, BinaryEmbedding, PruneResult, RootedTree, RootedTreeJson,
    RTREE_FORMAT,
};
pub use star_comb::{
    star_comb_search, star_comb_search_with_budget, validate_comb, validate_star, CombWitness, StarComb, StarWitness,
    EXACT_VERTEX_LIMIT,
};
