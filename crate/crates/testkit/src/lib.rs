//! Independent oracles for the fareyforge test suites: exhaustive
//! enumerators, brute-force answers and seeded random instances.

pub mod brute;
pub mod canon;
pub mod iso;
pub mod random;
pub mod trees;
