//! cfkit: exact-arithmetic construction, transformation, evaluation and
//! diagnosis of generalized continued fractions
//!   b0 + a1/(b1 + a2/(b2 + …))
//! with rational-function coefficient sequences. Everything is computed over
//! arbitrary-precision rationals; error claims are certified against interval
//! brackets rather than floating point.

pub mod bench;
pub mod cf;
pub mod diagnostics;
pub mod error;
pub mod expr;
pub mod hypergeom;
pub mod numerics;
pub mod transforms;
pub mod verify;

pub use error::{Error, ErrorClass, Result};
