pub mod arcs;
pub mod bijections;
pub mod chain;
pub mod colored;
pub mod enumeration;
pub mod error;
pub mod fillings;
pub mod partition;
pub mod render;

pub use arcs::{arcs, partition_from_arcs, Arc, ArcSet};
pub use bijections::{compose, decompose, phi, phi_inv, psi, psi_inv, MatchingPair, StepTrace};
pub use chain::{max_chain, ChainKind, CrossingWitness, Mode, WitnessKind};
pub use colored::{class_flags, red_nodes_under_black_crossing, ClassFlags, ColoredDiagram};
pub use enumeration::{iterate_partitions, PartitionClass, Polynomial};
pub use error::{Error, Result};
pub use fillings::{Composition, TriangularFilling};
pub use partition::{Convention, SetPartition};
