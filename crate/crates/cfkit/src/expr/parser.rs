use num_traits::ToPrimitive;

use crate::error::{Error, Result};

use super::ast::{ExprAst, ExprKind};
use super::lexer::{tokenize, Token, TokenKind};

/// Recursive-descent parser with precedence
/// `^`  >  unary `-`  >  `*` `/`  >  binary `+` `-`,
/// left-associative within each level.
pub fn parse(text: &str) -> Result<ExprAst> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        index: 0,
        len: text.len(),
    };
    let ast = p.expr()?;
    if let Some(tok) = p.peek() {
        return Err(Error::Syntax {
            pos: tok.pos,
            message: format!(
                "unexpected {} after the expression; expected end of input",
                tok.kind.describe()
            ),
        });
    }
    Ok(ast)
}

struct Parser {
    tokens: Vec<Token>,
    index: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.index)
    }

    fn advance(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.index).cloned();
        if t.is_some() {
            self.index += 1;
        }
        t
    }

    fn end_pos(&self) -> usize {
        self.len
    }

    fn expected(&self, what: &str) -> Error {
        match self.peek() {
            Some(tok) => Error::Syntax {
                pos: tok.pos,
                message: format!("expected {what}, found {}", tok.kind.describe()),
            },
            None => Error::Syntax {
                pos: self.end_pos(),
                message: format!("expected {what}, found end of input"),
            },
        }
    }

    fn expr(&mut self) -> Result<ExprAst> {
        let mut lhs = self.term()?;
        while let Some(tok) = self.peek() {
            let make = match tok.kind {
                TokenKind::Plus => ExprKind::Add as fn(_, _) -> _,
                TokenKind::Minus => ExprKind::Sub as fn(_, _) -> _,
                _ => break,
            };
            self.advance();
            let rhs = self.term()?;
            let pos = lhs.pos;
            lhs = ExprAst {
                pos,
                kind: make(Box::new(lhs), Box::new(rhs)),
            };
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<ExprAst> {
        let mut lhs = self.unary()?;
        while let Some(tok) = self.peek() {
            let make = match tok.kind {
                TokenKind::Star => ExprKind::Mul as fn(_, _) -> _,
                TokenKind::Slash => ExprKind::Div as fn(_, _) -> _,
                _ => break,
            };
            self.advance();
            let rhs = self.unary()?;
            let pos = lhs.pos;
            lhs = ExprAst {
                pos,
                kind: make(Box::new(lhs), Box::new(rhs)),
            };
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<ExprAst> {
        if let Some(tok) = self.peek() {
            if tok.kind == TokenKind::Minus {
                let pos = tok.pos;
                self.advance();
                let inner = self.unary()?;
                return Ok(ExprAst {
                    pos,
                    kind: ExprKind::Neg(Box::new(inner)),
                });
            }
        }
        self.power()
    }

    fn power(&mut self) -> Result<ExprAst> {
        let mut base = self.atom()?;
        while matches!(self.peek().map(|t| &t.kind), Some(TokenKind::Caret)) {
            self.advance();
            let Some(exp_tok) = self.advance() else {
                return Err(Error::Syntax {
                    pos: self.end_pos(),
                    message: "expected a nonnegative integer exponent, found end of input".into(),
                });
            };
            let TokenKind::Int(value) = &exp_tok.kind else {
                return Err(Error::Syntax {
                    pos: exp_tok.pos,
                    message: format!(
                        "expected a nonnegative integer exponent, found {}",
                        exp_tok.kind.describe()
                    ),
                });
            };
            let exp = value.to_u32().ok_or_else(|| Error::Syntax {
                pos: exp_tok.pos,
                message: "exponent too large".into(),
            })?;
            let pos = base.pos;
            base = ExprAst {
                pos,
                kind: ExprKind::Pow(Box::new(base), exp),
            };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ExprAst> {
        let Some(tok) = self.peek().cloned() else {
            return Err(Error::Syntax {
                pos: self.end_pos(),
                message: "expected an integer, `n`, `pi`, `(` or `-`, found end of input".into(),
            });
        };
        match tok.kind {
            TokenKind::Int(value) => {
                self.advance();
                Ok(ExprAst {
                    pos: tok.pos,
                    kind: ExprKind::Int(value),
                })
            }
            TokenKind::Ident(name) => {
                self.advance();
                match name.as_str() {
                    "n" => Ok(ExprAst {
                        pos: tok.pos,
                        kind: ExprKind::Var,
                    }),
                    "pi" => Ok(ExprAst {
                        pos: tok.pos,
                        kind: ExprKind::Pi,
                    }),
                    other => Err(Error::Syntax {
                        pos: tok.pos,
                        message: format!("unknown identifier `{other}`; expected `n` or `pi`"),
                    }),
                }
            }
            TokenKind::LParen => {
                self.advance();
                let inner = self.expr()?;
                match self.peek() {
                    Some(t) if t.kind == TokenKind::RParen => {
                        self.advance();
                        Ok(ExprAst {
                            pos: tok.pos,
                            kind: inner.kind,
                        })
                    }
                    _ => Err(self.expected("`)`")),
                }
            }
            _ => Err(self.expected("an integer, `n`, `pi`, `(` or `-`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence_shapes() {
        // -n^2 is -(n^2)
        let ast = parse("-n^2").unwrap();
        assert!(matches!(ast.kind, ExprKind::Neg(_)));
        // 1 - 2*n is 1 - (2*n)
        let ast = parse("1 - 2*n").unwrap();
        let ExprKind::Sub(_, rhs) = ast.kind else {
            panic!("expected Sub")
        };
        assert!(matches!(rhs.kind, ExprKind::Mul(_, _)));
        // left associativity: 8/4/2 = (8/4)/2
        let ast = parse("8/4/2").unwrap();
        let ExprKind::Div(lhs, _) = ast.kind else {
            panic!("expected Div")
        };
        assert!(matches!(lhs.kind, ExprKind::Div(_, _)));
    }

    #[test]
    fn pow_requires_literal_exponent() {
        assert!(parse("n^2").is_ok());
        match parse("n^-2") {
            Err(Error::Syntax { pos: 2, message }) => {
                assert!(message.contains("exponent"));
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
        assert!(parse("n^(2)").is_err());
        assert!(parse("2^n").is_err());
    }

    #[test]
    fn error_positions() {
        match parse("(n-1") {
            Err(Error::Syntax { pos, message }) => {
                assert_eq!(pos, 4);
                assert!(message.contains("`)`"));
            }
            other => panic!("{other:?}"),
        }
        match parse("") {
            Err(Error::Syntax { pos: 0, .. }) => {}
            other => panic!("{other:?}"),
        }
        match parse("1 + + 2") {
            Err(Error::Syntax { pos: 4, .. }) => {}
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn implicit_multiplication_rejected() {
        match parse("2n") {
            Err(Error::Syntax { pos: 1, message }) => {
                assert!(message.contains("end of input") || message.contains("expected"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn chained_pow_left_assoc() {
        let ast = parse("n^2^3").unwrap();
        let ExprKind::Pow(base, 3) = ast.kind else {
            panic!("outer exponent 3")
        };
        assert!(matches!(base.kind, ExprKind::Pow(_, 2)));
    }
}
