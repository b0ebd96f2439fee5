//! Finite and symbolic T0 spaces.

pub mod b_topology;
pub mod caps;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod finite_space;
pub mod pointset;
pub mod properties;
pub mod reflection_lab;
pub mod symbolic;

pub use error::{Error, Result};
pub use finite_space::FiniteSpace;
pub use pointset::PointSet;
