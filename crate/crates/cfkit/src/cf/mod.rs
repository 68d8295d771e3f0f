//! Generalized continued fractions: rational-function coefficient sequences,
//! exact convergent evaluation, presets, and the CF-spec file format.

mod convergents;
pub mod file;
mod poly;
mod sequence;
mod spec;

pub use convergents::{convergent, convergents, convergents_with, ConvergentTrace};
pub use poly::{Poly, PolyRat};
pub use sequence::{CoefficientSequence, Tail};
pub use spec::{preset, CFSpec, PRESET_NAMES};
