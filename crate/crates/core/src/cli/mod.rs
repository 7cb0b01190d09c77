//! Run configurations, the built-in example catalog, and report emission.

pub mod catalog;
pub mod config;
pub mod report;
mod run;

pub use catalog::{example, wemyss_data, ExampleCatalogEntry, ExpectedSummary, WemyssData, EXAMPLE_NAMES};
pub use config::{AlgebraConfig, BlockConfig, BlockEntry, ElementConfig, EmitFormat, GeneratorConfig, RunConfig, TermConfig};
pub use report::PipelineReport;
pub use run::{read_relation_file, run, RunOutcome};

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("unknown example `{0}` (available: cc, m2, wemyss)")]
    UnknownExample(String),
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("saturation error: {0}")]
    Saturation(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    /// 3 for saturation failures, 4 for everything that is a bad request.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Saturation(_) => 3,
            _ => 4,
        }
    }
}
