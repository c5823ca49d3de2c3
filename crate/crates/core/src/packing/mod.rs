//! Exact arc-disjoint S-cycle packing.

mod enumerate;
mod lambda_k;
mod solver;

pub use enumerate::enumerate_s_cycles;
pub use lambda_k::{k_subsets_colex, lambda_k, lambda_k_with, LambdaKOptions, LambdaKResult};
pub use solver::{lambda_s, solve, Certainty, Solution, SolveOptions};
