//! Exact computation with Rota-Baxter Lie algebras, their representations,
//! bialgebras, the admissible classical Yang-Baxter equation and special
//! L-dendriform bialgebras.
//!
//! Every structure is given by rational coordinates over a named basis and
//! every check returns a [`CheckReport`] listing all failing basis tuples
//! with their exact defect.

pub mod bialgebra;
pub mod cybe;
pub mod error;
pub mod fixtures;
pub mod lie;
pub mod linalg;
pub mod prelie;
pub mod product;
pub mod report;
pub mod rota_baxter;
pub mod scalar;
pub mod space;

pub use error::{Error, Result};
pub use linalg::{Matrix, Tensor2, Tensor3};
pub use product::{BilinearProduct, Coproduct};
pub use report::{CheckReport, Violation};
pub use scalar::Scalar;
pub use space::Space;
