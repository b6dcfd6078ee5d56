//! Alexander polynomials, fiberedness and L-space obstructions for pretzel
//! knots.

pub mod cli;
pub mod diagram;
pub mod error;
pub mod fibered;
pub mod graphs;
pub mod invariants;
pub mod laurent;
pub mod lspace;
pub mod oracle;
pub mod statesum;

pub use diagram::{normalize, orient, parse_pretzel, OrientedDiagram, PretzelCode};
pub use error::{KnotError, Result};
pub use laurent::LaurentPolynomial;
