use num_bigint::BigInt;

use crate::numerics::Rational;

/// Expression tree over integers, the index variable n, the symbol pi, the
/// four arithmetic operators, unary minus, and literal nonnegative integer
/// exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprAst {
    /// Byte offset of the node's first token in the source.
    pub pos: usize,
    pub kind: ExprKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprKind {
    Int(BigInt),
    Var,
    Pi,
    Neg(Box<ExprAst>),
    Add(Box<ExprAst>, Box<ExprAst>),
    Sub(Box<ExprAst>, Box<ExprAst>),
    Mul(Box<ExprAst>, Box<ExprAst>),
    Div(Box<ExprAst>, Box<ExprAst>),
    Pow(Box<ExprAst>, u32),
}

impl ExprAst {
    /// Direct tree-walking evaluation at n = x. None on division by zero or
    /// when pi occurs; this is the reference interpreter the lowered form is
    /// differentially tested against.
    pub fn eval_at(&self, x: &Rational) -> Option<Rational> {
        match &self.kind {
            ExprKind::Int(v) => Some(Rational::from_int(v.clone())),
            ExprKind::Var => Some(x.clone()),
            ExprKind::Pi => None,
            ExprKind::Neg(e) => e.eval_at(x).map(|v| -v),
            ExprKind::Add(l, r) => Some(&l.eval_at(x)? + &r.eval_at(x)?),
            ExprKind::Sub(l, r) => Some(&l.eval_at(x)? - &r.eval_at(x)?),
            ExprKind::Mul(l, r) => Some(&l.eval_at(x)? * &r.eval_at(x)?),
            ExprKind::Div(l, r) => l.eval_at(x)?.checked_div(&r.eval_at(x)?),
            ExprKind::Pow(b, k) => Some(b.eval_at(x)?.pow(*k)),
        }
    }
}
