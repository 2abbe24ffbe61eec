//! Strongly connected orientations with deletable arcs, for 3-edge-connected
//! graphs.
//!
//! An arc of an orientation is deletable when removing it keeps the digraph
//! strongly connected. The Frank number of a graph is the least number of
//! strongly connected orientations needed so that every edge is deletable in
//! at least one of them. This crate builds a family of at most five such
//! orientations for any 3-edge-connected graph, constructively:
//!
//! 1. [`nzflow::jaeger_flow`] finds a nowhere-zero flow over 3-bit vectors by
//!    packing three spanning trees in the doubled graph.
//! 2. [`circuits::build_reference_orientations`] splits the three coordinate
//!    subgraphs into circuits and orients them.
//! 3. [`superpose::superpose`] combines the circuit orientations under five
//!    fixed value schedules into all-positive integer flows, whose
//!    orientations are strongly connected and whose value-1 arcs are
//!    deletable.
//! 4. [`certify::build_certificate`] assembles and shrinks the family; an
//!    independent checker, [`certify::validate_certificate`], re-tests the
//!    result from the definition alone.
//!
//! For graphs with at most 16 edges, [`oracle::exact_frank_number`] computes
//! the exact value by exhaustive enumeration, providing ground truth the
//! pipeline is tested against.

pub mod certify;
pub mod circuits;
pub mod connectivity;
pub mod format;
pub mod graph;
pub mod nzflow;
pub mod oracle;
pub mod superpose;

pub use certify::{build_certificate, validate_certificate, Certificate, Report};
pub use graph::{EdgeId, Graph, GraphError, Multigraph, Orientation, VertexId};
pub use nzflow::{jaeger_flow, GroupFlow};
pub use oracle::{exact_frank_number, frank_number};
