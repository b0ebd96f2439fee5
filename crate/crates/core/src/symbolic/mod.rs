//! Exact set algebras for the infinite example spaces and certificate
//! checkers for statements about them.

pub mod catalog;
pub mod certificate;
pub mod cofinite;
pub mod corpus;
pub mod interval;
pub mod johnstone;
