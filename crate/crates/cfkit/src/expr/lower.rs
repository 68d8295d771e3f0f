use crate::cf::PolyRat;
use crate::error::{Error, Result};
use crate::numerics::{ConstantExpr, Rational};

use super::ast::{ExprAst, ExprKind};

/// Lowers an expression tree into the rational-function field over n.
pub fn lower_sequence(ast: &ExprAst) -> Result<PolyRat> {
    match &ast.kind {
        ExprKind::Int(v) => Ok(PolyRat::from_const(Rational::from_int(v.clone()))),
        ExprKind::Var => Ok(PolyRat::var()),
        ExprKind::Pi => Err(Error::PiNotAllowed { pos: ast.pos }),
        ExprKind::Neg(e) => Ok(lower_sequence(e)?.neg()),
        ExprKind::Add(l, r) => Ok(lower_sequence(l)?.add(&lower_sequence(r)?)),
        ExprKind::Sub(l, r) => Ok(lower_sequence(l)?.sub(&lower_sequence(r)?)),
        ExprKind::Mul(l, r) => Ok(lower_sequence(l)?.mul(&lower_sequence(r)?)),
        ExprKind::Div(l, r) => lower_sequence(l)?.div(&lower_sequence(r)?),
        ExprKind::Pow(b, k) => Ok(lower_sequence(b)?.pow(*k)),
    }
}

/// Value of a constant expression during lowering: pi_coeff·π + offset.
struct Affine {
    pi: Rational,
    one: Rational,
}

fn lower_affine(ast: &ExprAst) -> Result<Affine> {
    match &ast.kind {
        ExprKind::Int(v) => Ok(Affine {
            pi: Rational::zero(),
            one: Rational::from_int(v.clone()),
        }),
        ExprKind::Pi => Ok(Affine {
            pi: Rational::one(),
            one: Rational::zero(),
        }),
        ExprKind::Var => Err(Error::Syntax {
            pos: ast.pos,
            message: "the variable `n` is not allowed in a constant expression".into(),
        }),
        ExprKind::Neg(e) => {
            let v = lower_affine(e)?;
            Ok(Affine {
                pi: -v.pi,
                one: -v.one,
            })
        }
        ExprKind::Add(l, r) => {
            let (l, r) = (lower_affine(l)?, lower_affine(r)?);
            Ok(Affine {
                pi: &l.pi + &r.pi,
                one: &l.one + &r.one,
            })
        }
        ExprKind::Sub(l, r) => {
            let (l, r) = (lower_affine(l)?, lower_affine(r)?);
            Ok(Affine {
                pi: &l.pi - &r.pi,
                one: &l.one - &r.one,
            })
        }
        ExprKind::Mul(l, r) => {
            let (lv, rv) = (lower_affine(l)?, lower_affine(r)?);
            mul_affine(&lv, &rv, ast.pos)
        }
        ExprKind::Div(l, r) => {
            let (lv, rv) = (lower_affine(l)?, lower_affine(r)?);
            if !rv.pi.is_zero() {
                return Err(Error::NonAffinePi { pos: ast.pos });
            }
            if rv.one.is_zero() {
                return Err(Error::ZeroDenominator);
            }
            let inv = rv.one.recip().expect("nonzero");
            Ok(Affine {
                pi: &lv.pi * &inv,
                one: &lv.one * &inv,
            })
        }
        ExprKind::Pow(b, k) => {
            let base = lower_affine(b)?;
            let mut acc = Affine {
                pi: Rational::zero(),
                one: Rational::one(),
            };
            for _ in 0..*k {
                acc = mul_affine(&acc, &base, ast.pos)?;
            }
            Ok(acc)
        }
    }
}

fn mul_affine(l: &Affine, r: &Affine, pos: usize) -> Result<Affine> {
    if !l.pi.is_zero() && !r.pi.is_zero() {
        return Err(Error::NonAffinePi { pos });
    }
    Ok(Affine {
        pi: &(&l.pi * &r.one) + &(&r.pi * &l.one),
        one: &l.one * &r.one,
    })
}

/// Lowers an expression tree into a rational-affine expression in π.
pub fn lower_constant(ast: &ExprAst) -> Result<ConstantExpr> {
    let v = lower_affine(ast)?;
    Ok(ConstantExpr::new(v.pi, v.one))
}
