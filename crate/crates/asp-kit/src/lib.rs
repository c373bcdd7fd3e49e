//! Recognition, decomposition, and coloring of almost-series-parallel graphs.
//!
//! The library is organized bottom-up: plain graph types ([`graph`]),
//! skeleton/thread views ([`skeleton`]), connectivity machinery ([`connect`]),
//! an exhaustive subdivision oracle ([`oracle`]), receptacle decomposition
//! ([`receptacle`]), the structural classifier ([`classify`]), and the coloring
//! algorithms ([`color`]). Generators, enumeration, and corpus sampling
//! support testing and the command-line tool.

pub mod classify;
pub mod color;
pub mod connect;
pub mod corpus;
pub mod embed;
pub mod enumerate;
pub mod iso;
pub mod oracle;
pub mod receptacle;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod skeleton;

pub use error::Error;
pub use graph::{Graph, Pair, Vertex};
