//! Relaxed and defective 2-distant circular graph coloring.
//!
//! A 2-distant circular k-coloring assigns colors `0..k` so that the colors
//! of adjacent vertices sit at circular distance at least 2. This crate
//! implements the two standard ways of relaxing that requirement — the
//! starred (relaxed) semantics, which keeps properness and bounds the
//! number of short-distance neighbors per vertex, and the defective
//! semantics, which also permits equal colors — together with:
//!
//! - verifiers producing full per-vertex diagnostics ([`coloring`]);
//! - an exact backtracking solver for decision, minimum-k, and
//!   universally-quantified questions ([`solver`]);
//! - closed-form values and witness colorings for paths, cycles and
//!   complete graphs, plus the separating families G5 and H(m)
//!   ([`families`]);
//! - ordered breadth-first-tree partitions of outerplanar graphs and the
//!   coloring algorithms built on them ([`obft`], [`outerplanar`]);
//! - gadget reductions between coloring problems with constructive
//!   coloring transfers ([`reductions`]);
//! - text formats and a verification suite backing the command line
//!   ([`io`], [`verification`]).

pub mod coloring;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod obft;
pub mod outerplanar;
pub mod reductions;
pub mod solver;
pub mod verification;

pub use coloring::{check_defective, check_relaxed, circ_dist, Coloring, ColoringReport};
pub use error::{Error, Result};
pub use graph::{
    find_outer_embedding, make_family, validate_outer_embedding, FamilyKind, Graph, OuterEmbedding,
};
pub use obft::{obft_partition, ObftPartition, ObftPropertyReport};
pub use outerplanar::{color_outerplanar_42_defective, color_outerplanar_52, color_tree_52};
pub use solver::{
    chromatic_number, decide, forall_valid_colorings, forall_valid_colorings_pinned, min_k,
    ColoringPredicate, Semantics, SolverConfig,
};
