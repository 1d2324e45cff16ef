//! Combinatorics of minuscule Schubert varieties: quivers of minuscule Weyl
//! group elements, their holes and peaks, and the geometric verdicts read off
//! them (smoothness, Gorenstein property, singular locus, Gorenstein locus).

pub mod analysis;
pub mod error;
pub mod heap;
pub mod rootsys;
pub mod typea;
pub mod verify;

pub use error::{Error, Result};
pub use heap::{AmbientQuiver, ColoredPoset, HoleRecord, Ideal, MinusculeSpace, Quiver, VertexSet};
pub use rootsys::{DynkinType, Family, RootClass, RootSystem, RootVector, WeylWord};
pub use typea::{GrassmannianShape, Grid, Partition};
