//! Exact rational scalars, certified constant brackets, and the π oracle.

mod bracket;
mod pi;
mod rational;

pub use bracket::{const_bracket, ConstantBracket, ConstantExpr};
pub use pi::{pi_bracket, pi_decimal};
pub use rational::Rational;
