//! Bobs-only Stedman and Erin Triples as Hamiltonian cycle problems.
//!
//! The extent on seven bells (5040 rows) splits into 840 *sixes*; a bobs-only
//! peal is a tour of all sixes obeying the method's call structure.  This
//! crate builds that tour problem as a standard undirected HCP instance by
//! replacing each six with an in-out gadget ([`gadgets::Gadget`]) and wiring
//! gadget boundaries according to the plain/bob transition maps
//! ([`sixes::TransitionMaps`]).  Part groups ([`groups`]) quotient the
//! construction down to smaller instances.  An exact backtracking solver
//! ([`solver`]) decides or enumerates Hamiltonian cycles, and [`peals`]
//! decodes cycles back into verified call sequences and round-block covers.

pub mod builder;
pub mod gadgets;
pub mod groups;
pub mod manifest;
pub mod peals;
pub mod rows;
pub mod sixes;
pub mod solver;

pub use builder::{build_erin, build_stedman, trivial_nh_check, BuildOptions, Instance, TrivialNh};
pub use gadgets::{build_gadget, verify_in_out, Gadget, GadgetKind, InOutCertificate};
pub use groups::{
    close_generators, partition_into_parts, relabel, validate_part_group, PartGroup,
    PartitionIntoParts,
};
pub use rows::{parity, Change, Parity, PlaceNotation, Row};
pub use sixes::{Call, Method, Six, SixEndRef, SixPartition, SixSpeed, TransitionMaps};
pub use solver::{solve, HcResult, HcStatus, SearchGraph, SolveMode, SolveOptions};
