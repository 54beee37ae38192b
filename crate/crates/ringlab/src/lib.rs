//! Finite commutative ring laboratory.
//!
//! Builds finite commutative rings with identity from a small textual DSL,
//! materializes the amalgamated duplication `R ⋈ I = {(r, r+i) | r ∈ R, i ∈ I}`
//! as a finite ring in its own right, constructs classic and extended
//! zero-divisor graphs over any of these rings, computes their metrics
//! (diameter, girth, completeness, Condition A), and runs a harness that
//! mechanically checks a family of structural statements relating `R`, `I`
//! and `R ⋈ I` over a corpus of instances.
//!
//! With the default `parallel` feature the quadratic scans (zero-divisor
//! detection, adjacency construction, all-pairs BFS, corpus fan-out) run on
//! rayon; without it every scan falls back to an equivalent sequential loop.
//! All results are independent of thread count.

pub mod amalgam;
pub mod graph;
pub mod harness;
pub mod ideal;
mod par;
pub mod ring;
pub mod ringspec;

pub use amalgam::{build_amalgamation, t_partition, AmalgamError, AmalgamRing, TPartition};
pub use graph::{
    classic_graph, diameter, distance, extended_adjacent, extended_graph, girth, graphs_equal,
    has_condition_a, is_complete, is_complete_bipartite, GraphKind, Metric, ZdGraph,
};
pub use harness::{check_all, default_corpus, run_corpus, CorpusReport, Instance, Verdict};
pub use ideal::{
    annihilator, annihilator_of_set, coincidence_criterion, ideal_generate, ideal_radical,
    nilradical, zero_divisor_set, IdealSet,
};
pub use ring::{pow_trajectory, Element, FiniteRing, PowerTrajectory, RingDescriptor};
pub use ringspec::{parse_ideal_spec, parse_ring_spec, validate_finiteness, RingSpecAst, SpecError};

/// Default cap on `|R| * |I|` when building an amalgamated duplication.
///
/// Zero-divisor detection on the duplication is a quadratic scan, so the cap
/// keeps a single instance at roughly 16.7M kernel multiplications.
pub const DEFAULT_SIZE_CAP: usize = 4096;
