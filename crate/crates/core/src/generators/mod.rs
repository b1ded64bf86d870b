//! Named graphs at finite truncation: Farey families, trees with an apex,
//! and the gadget family.

mod families;
mod farey;
mod gadgets;

pub use families::{
    complete, complete_bipartite, cycle, full_tree, named, path, tree_join, APEX, MAX_GENERATED_VERTICES, ROOT,
};
pub use farey::{
    blue_level_path, farey_by_determinant, farey_truncation, fraction_vertices, halved_farey, MAX_FAREY_ORDER,
};
pub use gadgets::{build_gadget, validate_gadget, GadgetKind, GadgetReport, Wiring};
