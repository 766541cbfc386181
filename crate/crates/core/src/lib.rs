//! Exact non-induced counts of the 17 six-vertex motifs that have a cut
//! vertex or a cut edge, computed from local counts and five-vertex counts.

pub mod error;
pub mod exact;
pub mod fit;
pub mod five;
pub mod graph;
pub mod oracle;
pub mod pipeline;
pub mod primitives;
pub mod six;

pub use error::{Error, Result};
pub use exact::Count;
pub use fit::{fit_runtime_model, read_timing_table, FitResult, TimingRow};
pub use five::{
    count_five_reference, count_five_scalable, load_five_counts, FiveMotifVector, FiveSource,
};
pub use graph::{Graph, VertexId};
pub use oracle::{count_noninduced, verify_identities, Catalog, Pattern, VerificationReport};
pub use pipeline::{run, run_path, FiveInput, RunConfig, RunReport, StageTimes};
pub use primitives::LocalCounts;
pub use six::{count_six, SixMotifVector, SIX_MOTIFS};
