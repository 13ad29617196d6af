//! Exact-arithmetic computation of characteristic maps for centralizer
//! algebras of the classical groups.
//!
//! The library computes, over exact rationals, the image of the normalized
//! central idempotents of the Brauer algebra under the characteristic map
//! into symmetric polynomials, two independent ways:
//!
//! * a closed form built from double (factorial) Schur polynomials and
//!   skew hook products ([`charmap::ch_closed_form`]), and
//! * a brute-force trace of the represented idempotent against a symbolic
//!   diagonal matrix on the tensor power space ([`charmap::ch_by_trace`]).
//!
//! Supporting layers: exact rationals and sparse matrices ([`rat`],
//! [`poly`], [`matrix`]), Young combinatorics ([`young`]), symmetric
//! functions ([`symfunc`]), the abstract Brauer algebra ([`brauer`]), its
//! tensor representation with primitive idempotents ([`tensorrep`]), and
//! hook dimension formulas ([`groups`]).
//!
//! Everything is deterministic and division-free except where a formula
//! calls for exact rational division; no floating point is used anywhere.

pub mod brauer;
pub mod charmap;
mod error;
pub mod groups;
pub mod matrix;
pub mod par;
pub mod poly;
pub mod rat;
pub mod symfunc;
pub mod tensorrep;
pub mod verify;
pub mod young;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
