//! Exact algebra for showing that octonion multiplication admits a
//! sequence none of whose reductions has a monochromatic set of finite
//! products.
//!
//! - [`octonion`]: the unit multiplication table and integer-coefficient octonions.
//! - [`term`]: fully bracketed terms, their syntax, evaluation and enumeration.
//! - [`sign`]: signs between bracketings, per-assignment outcome tables, and
//!   assignments separating two bracketings.
//! - [`naf`]: non-adjacent form and sparse dyadic coefficients.
//! - [`witness`]: symbolic evaluation over `b_n = Σ_i 2^(2^(8n+1+i)) e_i`.
//! - [`loops`]: finite loops, the Moufang check, and the `M(G, 2)` doubling.
//!
//! The crate is `no_std` and needs only `alloc`.
#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod loops;
pub mod naf;
pub mod octonion;
pub mod sign;
pub mod term;
pub mod witness;

pub use octonion::{unit_mul, BigOctonion, Sign, SignedUnit};
pub use term::{parse, render, Assignment, Atom, Term};
