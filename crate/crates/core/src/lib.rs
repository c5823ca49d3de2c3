//! S-cycle packing in directed multigraphs: exact solver, closed forms for
//! complete families, hardness gadgets and the oracles used to check them.

pub mod cycle;
pub mod digraph;
pub mod error;
pub mod families;
pub mod flow;
pub mod gadgets;
pub mod harness;
pub mod io;
pub mod maxflow;
pub mod oracles;
pub mod packing;
pub mod planarity;

pub use cycle::{reverse_cycle, verify_packing, CyclePacking, DirectedCycle, TerminalSet};
pub use digraph::{Arc, ArcId, Graph, MultiDigraph, Vertex};
pub use error::{FamilyError, FlowError, GadgetError, GraphError, PackingError, ParseError, TerminalError};
pub use families::FamilySpec;
pub use gadgets::{GadgetOutput, LinkageInstance, Role};
pub use packing::{lambda_k, lambda_s, solve, Certainty, Solution, SolveOptions};

pub type FlowNetwork = flow::Network<u64>;
pub type FlowDecomposition = flow::Decomposition<u64>;
