//! Exact-arithmetic computations with finite root systems, reflection-arrangement
//! chambers, and labelled galleries.
//!
//! The crate provides, over exact rationals and with no floating point anywhere:
//!
//! - [`linalg`]: rational vectors and matrices, spans, orthogonal complements, and
//!   strict linear feasibility (the kernel behind every geometric predicate);
//! - [`roots`]: root systems, reflections, chambers, positive/simple systems, and
//!   the attachment/separation predicates;
//! - [`weyl`]: Weyl group enumeration and the Bruhat order;
//! - [`subsys`]: saturated root subsystems, chamber projection and lifting;
//! - [`gallery`]: labelled galleries, projection to a subsystem, the unique lifting
//!   recursion, p-pairs with sign and cosign, and gluing of lifted segments;
//! - [`comb`]: combinatorial galleries over a word of simple reflections, folding
//!   operators, the two strict orders, (p,w)-pairs, and sequence morphisms;
//! - [`embed`]: the end-to-end pipeline that produces embedding data
//!   (p, w, phi) for a gallery and a saturated subsystem and verifies that phi
//!   preserves both orders;
//! - [`sample`]: seeded random instances for property runs;
//! - [`oracle`]: independent brute-force oracles used by the test suites.
//!
//! The crate is `no_std` (it requires `alloc`); IO, JSON formats, and the command
//! line live in the companion `rootgal` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod comb;
pub mod embed;
pub mod error;
pub mod gallery;
pub mod linalg;
pub mod oracle;
pub mod roots;
pub mod sample;
pub mod subsys;
pub mod weyl;

pub use error::Error;
pub use linalg::{Matrix, Rat, Vector};
pub use roots::{Chamber, Family, Hyperplane, HyperplaneId, RootSystem, Sign, WeylElement};
pub use subsys::Subsystem;

/// Crate-wide result type.
pub type Result<T> = core::result::Result<T, Error>;
