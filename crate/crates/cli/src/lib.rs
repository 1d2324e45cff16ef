//! Command-line front end: analysis reports, enumeration, verification
//! sweeps and quiver drawings.

pub mod app;
pub mod render;
pub mod report;
pub mod schubert;

pub use app::{run, Outcome};
