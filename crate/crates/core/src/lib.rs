//! Cooling and burning processes on graphs: a round engine, an exact
//! solver, bounds and constructive strategies for structured families.

pub mod bounds;
pub mod corpus;
pub mod engine;
pub mod error;
pub mod generators;
pub mod graph;
pub mod ilt;
pub mod io;
pub mod solver;
pub mod strategies;
pub mod verify;

pub use bounds::{bounds_report, iso_profile_exact, iso_upper_bound, BoundsOptions, BoundsReport, IsoProfile};
pub use engine::{
    replay_trace, run_burning, run_cooling, validate_sequence, BurningTrace, CoolingTrace, NodeSet, RoundRecord,
    SequencePolicy, SmallestUncooled, SourcePolicy,
};
pub use error::{Error, Result};
pub use graph::{Graph, GridCoord};
pub use ilt::{ilt, ilt_t, IltGraph};
pub use solver::{
    burning_number, cooling_number, max_sequence_length, SearchLimits, SearchResult, SearchStats, Solver,
};
pub use strategies::{closed_form, BoundKind, ClosedForm, Family};
