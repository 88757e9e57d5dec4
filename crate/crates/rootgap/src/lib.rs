//! Exact-arithmetic root analysis for real-rooted polynomials and
//! symmetric rational matrices.
//!
//! Given a polynomial with real (possibly repeated) roots, or a symmetric
//! matrix standing in for a Hermitian operator, this crate computes — with
//! no floating point anywhere —
//!
//! * the number of distinct roots and a certificate that all roots are
//!   real (the Hankel determinant ladder, [`hankel`]);
//! * the monic minimal polynomial and the multiplicity of each root
//!   ([`hankel`]);
//! * strictly monotone sequences of rationals converging to the minimal
//!   and maximal distance between roots, every iterate a rational
//!   function of the input coefficients ([`gaps`]);
//! * a certified segment of the axis containing all roots, refined from
//!   both ends ([`localize`]);
//! * closed-form analysis of the equidistant-root family, with per-step
//!   rate bounds and an iteration forecast ([`wilkinson`]).
//!
//! An independent referee ([`oracle`]) isolates roots with Sturm
//! sequences and cross-checks gaps and multiplicities; it shares nothing
//! with the coefficient-only paths beyond basic polynomial arithmetic.
//!
//! The `examples/` directory demonstrates each capability as a runnable
//! program; a thin `rootgap` binary exposes the same pipeline as
//! `analyze`, `gaps`, `localize` and `wilkinson` subcommands with JSON
//! output and batch mode.

pub mod cli;
pub mod gaps;
pub mod hankel;
pub mod localize;
pub mod matrix;
pub mod oracle;
pub mod poly;
pub mod rat;
pub mod report;
pub mod wilkinson;

pub use gaps::{GapPolynomial, GapSequence, IterSettings, SequenceKind, StopReason};
pub use hankel::{HankelReport, PowerSums};
pub use localize::Segment;
pub use matrix::RatMatrix;
pub use oracle::RootEnclosure;
pub use poly::Poly;
pub use rat::Rat;
pub use report::{AnalysisReport, AnalyzeOptions};
pub use wilkinson::WilkinsonTrail;
