//! Exact degeneration topology on isomorphism classes of maximal
//! Cohen-Macaulay modules over hypersurface rings.
//!
//! The crate is organized around a small pipeline:
//!
//! * [`exactalg`] — exact coefficient arithmetic over the Gaussian rationals
//!   and sparse multivariate polynomials, with normal forms modulo a single
//!   hypersurface equation `f`.
//! * [`truncview`] — finite-dimensional linear algebra over truncations
//!   `S/(f) + m^s`, providing the Hilbert-Samuel multiplicity oracle and
//!   truncated exactness checks.
//! * [`matfac`] — the matrix-factorization calculus: verification, syzygy
//!   swap, direct sums, completion of one factor, Knorrer lifting and
//!   morphisms.
//! * [`catalog`] — per-ring catalogs of indecomposable MCM classes with
//!   their matrix factorizations, multiplicities and identification rules.
//! * [`degen`] — verifiable degeneration certificates and the store of
//!   atomic degeneration facts.
//! * [`order`] — the closure engine: bounded reachability over module
//!   vectors, E(d) enumeration, component decompositions and topology-axiom
//!   checks.

pub mod catalog;
pub mod degen;
pub mod error;
pub mod exactalg;
pub mod matfac;
pub mod order;
pub mod truncview;

pub use error::Error;
