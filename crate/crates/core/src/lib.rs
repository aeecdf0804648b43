//! Exact combinatorics of Dyck words: the Dyck triangle, the decomposition of
//! Catalan numbers into sums of squares, and brute-force oracles that check
//! every closed form by exhaustive enumeration.
//!
//! Three independent routes to the same counts:
//! - [`oracle`]: validation and exhaustive enumeration of Dyck words,
//! - [`triangle`]: the d(i, j) label table grown from the dynamics equation,
//! - [`catalan`]: closed forms (Catalan, ballot, column terms) and the
//!   coordinate transforms between them.
//!
//! The [`cli`] front end renders all of it and runs the verification sweep
//! that plays the routes against each other.

#![forbid(unsafe_code)]

pub mod catalan;
pub mod cli;
mod error;
pub mod oracle;
pub mod triangle;

pub use error::Error;
pub use num_bigint::BigUint;
