//! Exact-arithmetic partition algebras.
//!
//! Seat-plan diagrams with the Q-power stacking product, generator words and
//! standard expressions, relation suites for the presentation theorems, the
//! Bratteli path model on Q-augmented Young diagrams, and seminormal
//! representation matrices over the field of rational functions in Q.
//! Everything is exact: arbitrary-precision integers, no floating point.

pub mod algebra;
pub mod bratteli;
pub mod error;
pub mod poly;
pub mod ratfunc;
pub mod relations;
pub mod seatplan;
pub mod seminormal;
pub mod words;

pub use algebra::AlgElement;
pub use error::{Error, Result};
pub use poly::IntPoly;
pub use ratfunc::RatFunc;
pub use seatplan::{ComposeResult, Point, SeatPlan};
pub use words::{Letter, Word};
