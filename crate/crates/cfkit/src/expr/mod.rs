//! Parser for closed-form coefficient/scaling expressions in n (lowered to
//! canonical rational functions) and constant expressions in π (lowered to
//! rational-affine form). The grammar is documented in docs/grammar.ebnf;
//! multiplication is always explicit (`2*n`, never `2n`).

mod ast;
mod lexer;
mod lower;
mod parser;
mod print;

pub use ast::{ExprAst, ExprKind};
pub use parser::parse;
pub use print::{poly_to_string, print_expr};

use crate::cf::PolyRat;
use crate::error::Result;
use crate::numerics::ConstantExpr;

/// Parses a closed form in n and lowers it to a canonical rational function.
pub fn parse_sequence_expr(text: &str) -> Result<PolyRat> {
    lower::lower_sequence(&parse(text)?)
}

/// Parses a constant expression, requiring it to be affine in π.
pub fn parse_constant_expr(text: &str) -> Result<ConstantExpr> {
    lower::lower_constant(&parse(text)?)
}
