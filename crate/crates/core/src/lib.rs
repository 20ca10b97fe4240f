//! Exact arithmetic for q-deformed Markov numbers.
//!
//! A classical Markov triple is a solution in positive integers of
//! `a² + b² + c² = 3abc`. Replacing the integers by Laurent polynomials in a
//! formal variable `q` and the equation by
//!
//! ```text
//! a² + b² + c² = q⁻¹[3]_q · abc + (q − 1)(q⁻¹ − 1),      [3]_q = q² + q + 1,
//! ```
//!
//! every Markov number `m^t` (indexed by a rational `t ∈ [0,1]` on the
//! Stern-Brocot tree) acquires a unique deformation `m_q^t`: a monic,
//! palindromic Laurent polynomial with positive coefficients that restricts
//! to `m^t` at `q = 1`.
//!
//! This crate computes `m_q^t` by three independent routes and exposes the
//! machinery needed to cross-check them:
//!
//! * [`markov`] — the Vieta mutation `c′ = q⁻¹[3]_q·ab − c` and descent along
//!   the Stern-Brocot path of `t`;
//! * [`cohn`] — q-deformed Cohn matrices `A(n)_q`, `B(n)_q` whose word
//!   products have trace `q⁻¹[3]_q · m_q^t`, independently of `n`;
//! * [`snake`] — weighted snake graphs whose perfect matchings, counted with
//!   weights in `{q⁻¹, 1, q}`, sum to `m_q^t` (brute-force enumeration and a
//!   transfer-matrix fast path);
//! * [`cluster`] — a three-parameter deformation of the Cohn matrices whose
//!   word products conjecturally carry cluster-algebra F-polynomials in
//!   their top-right entry.
//!
//! All arithmetic is exact: coefficients are arbitrary-precision integers
//! and every cross-check is an identity of polynomials, not a numerical
//! comparison. Values are immutable after construction and freely shareable
//! across threads.

pub mod cluster;
pub mod cohn;
pub mod error;
pub mod farey;
pub mod laurent;
pub mod markov;
pub mod snake;

pub use cluster::{TriMatrix2, TriPoly};
pub use cohn::QMatrix2;
pub use error::Error;
pub use farey::{AbLetter, ChristoffelWord, FareyRational, Letter, PathStep};
pub use laurent::LaurentPoly;
pub use markov::QMarkovTriple;
pub use snake::{Matching, SnakeGraph, Step, DEFAULT_ORACLE_BOUND};
