//! Unit roots of zeta functions of projective hypersurfaces over finite fields.
//!
//! Two independent routes compute the same polynomial `rho(lambda, t)`, the product
//! of `(1 - pi t)` over the p-adic unit reciprocal roots of the zeta numerator:
//!
//! * [`hyperfrob`] evaluates truncated A-hypergeometric series at Teichmüller points,
//!   forms `F(lambda^p)^{-1} F(lambda)` and takes the characteristic polynomial of the
//!   Frobenius-twisted product;
//! * [`zeta`] counts points exhaustively, rebuilds the zeta numerator exactly and
//!   splits off its unit-root factor by Hensel lifting.
//!
//! [`hassewitt`] supplies the mod-p shadow of both (the Hasse-Witt matrix) and the
//! ordinarity gate. [`pipeline`] ties the stages together for the CLI and the FFI.

pub mod arith;
pub mod combinat;
pub mod config;
pub mod error;
pub mod hassewitt;
pub mod hyperfrob;
pub mod instance;
pub mod pipeline;
pub mod report;
pub mod zeta;

pub use error::{Error, Result};
pub use instance::ProblemInstance;
