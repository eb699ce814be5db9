//! Structure documents, the checker and builder registry, and the `rbla`
//! command line.

pub mod app;
pub mod builders;
pub mod checkers;
pub mod context;
pub mod document;
pub mod error;
pub mod output;
pub mod registry;

pub use app::run;
pub use context::{Options, View};
pub use document::Document;
pub use error::CliError;
pub use registry::{Builder, Checker, Registry};
