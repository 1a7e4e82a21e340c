//! Canonical forms, symmetry classification and tabulation of prime
//! algebraic tangles.

pub mod algebra;
pub mod canonical;
pub mod classify;
pub mod error;
pub mod fraction;
pub mod generate;
pub mod minimize;
pub mod notation;

pub use algebra::{mirror, orbit16, Tangle, Transform};
pub use canonical::{canonicalize, is_canonical, relation, Relation};
pub use error::{Result, TangleError};
pub use fraction::{connectivity, fraction, ExtFraction, Vhx};
pub use notation::{emit, parse, parse_comma, ParseMode};
