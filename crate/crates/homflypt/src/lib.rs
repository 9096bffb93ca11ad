//! Exact HOMFLYPT computation and mod-p periodicity obstructions for
//! oriented link diagrams.
//!
//! The crate is organized around the pipeline
//!
//! ```text
//! PD / braid text ──> diagram ──> homfly ──> polyring coefficients
//!                                    │
//!                periodic generators ┴─> criteria checks ──> corpus scans
//! ```
//!
//! * [`polyring`] — sparse exact Laurent polynomials in `v`, `z`.
//! * [`diagram`] — PD-code diagrams, braid words, closures, linking data.
//! * [`homfly`] — skein-recursion HOMFLYPT engine with memoization.
//! * [`periodic`] — braid-presented strongly periodic link generators.
//! * [`criteria`] — congruence obstruction checks and cross-check identities.
//! * [`corpus`] — census CSV ingestion, batch scanning, reports.

pub mod corpus;
pub mod criteria;
pub mod diagram;
pub mod error;
pub mod homfly;
pub mod periodic;
pub mod polyring;

pub use error::Error;
