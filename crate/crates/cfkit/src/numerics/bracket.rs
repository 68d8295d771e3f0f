use std::fmt;

use crate::error::{Error, Result};
use crate::numerics::pi::pi_bracket;
use crate::numerics::rational::Rational;

/// Certified interval [lo, hi] known to contain a target constant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantBracket {
    lo: Rational,
    hi: Rational,
}

impl ConstantBracket {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidArgument(
                "bracket endpoints out of order".into(),
            ));
        }
        Ok(ConstantBracket { lo, hi })
    }

    pub fn degenerate(value: Rational) -> Self {
        ConstantBracket {
            lo: value.clone(),
            hi: value,
        }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn strictly_inside(&self, x: &Rational) -> bool {
        &self.lo < x && x < &self.hi
    }

    /// Interval image under |·|: contains |t| for every t in the bracket.
    pub fn abs(&self) -> ConstantBracket {
        if !self.hi.is_positive() {
            ConstantBracket {
                lo: -&self.hi,
                hi: -&self.lo,
            }
        } else if !self.lo.is_negative() {
            self.clone()
        } else {
            let neg_lo = -&self.lo;
            let hi = if neg_lo > self.hi {
                neg_lo
            } else {
                self.hi.clone()
            };
            ConstantBracket {
                lo: Rational::zero(),
                hi,
            }
        }
    }

    /// Certified upper bound on |x − t| for any t in the bracket: the larger
    /// of the distances from x to the two endpoints.
    pub fn error_upper(&self, x: &Rational) -> Rational {
        let d_lo = (x - &self.lo).abs();
        let d_hi = (x - &self.hi).abs();
        if d_lo > d_hi {
            d_lo
        } else {
            d_hi
        }
    }

    /// Certified lower bound on |x − t|: zero whenever x lies inside.
    pub fn error_lower(&self, x: &Rational) -> Rational {
        if self.contains(x) {
            return Rational::zero();
        }
        let d_lo = (x - &self.lo).abs();
        let d_hi = (x - &self.hi).abs();
        if d_lo < d_hi {
            d_lo
        } else {
            d_hi
        }
    }
}

impl fmt::Display for ConstantBracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Rational-affine expression in π: value = pi_coeff·π + offset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantExpr {
    pub pi_coeff: Rational,
    pub offset: Rational,
}

impl ConstantExpr {
    pub fn new(pi_coeff: Rational, offset: Rational) -> Self {
        ConstantExpr { pi_coeff, offset }
    }

    pub fn rational(offset: Rational) -> Self {
        ConstantExpr {
            pi_coeff: Rational::zero(),
            offset,
        }
    }

    /// −π/4, the headline verification target.
    pub fn neg_quarter_pi() -> Self {
        ConstantExpr::new(Rational::ratio(-1, 4), Rational::zero())
    }
}

impl fmt::Display for ConstantExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pi_coeff.is_zero() {
            return write!(f, "{}", self.offset);
        }
        if self.pi_coeff.is_one() {
            write!(f, "pi")?;
        } else if self.pi_coeff == Rational::from_int(-1) {
            write!(f, "-pi")?;
        } else if self.pi_coeff.denom() == &num_bigint::BigInt::from(1) {
            write!(f, "{}*pi", self.pi_coeff)?;
        } else {
            write!(f, "{}*pi/{}", self.pi_coeff.numer(), self.pi_coeff.denom())?;
        }
        if !self.offset.is_zero() {
            if self.offset.is_negative() {
                write!(f, " - {}", self.offset.abs())?;
            } else {
                write!(f, " + {}", self.offset)?;
            }
        }
        Ok(())
    }
}

/// Certified bracket for pi_coeff·π + offset with width at most 10^(−digits).
///
/// Five guard digits are carried internally, plus enough extra to absorb the
/// magnitude of pi_coeff, so the width certificate holds for any coefficient.
pub fn const_bracket(expr: &ConstantExpr, digits: u32) -> ConstantBracket {
    assert!(digits >= 1, "digits must be positive");
    if expr.pi_coeff.is_zero() {
        return ConstantBracket::degenerate(expr.offset.clone());
    }
    let mut guard_digits = digits + 5;
    let mut magnitude = expr.pi_coeff.abs();
    let ten = Rational::from_int(10);
    while magnitude > Rational::one() {
        magnitude = &magnitude / &ten;
        guard_digits += 1;
    }
    let pi = pi_bracket(guard_digits);
    let (lo, hi) = if expr.pi_coeff.is_positive() {
        (&expr.pi_coeff * pi.lo(), &expr.pi_coeff * pi.hi())
    } else {
        (&expr.pi_coeff * pi.hi(), &expr.pi_coeff * pi.lo())
    };
    ConstantBracket {
        lo: &lo + &expr.offset,
        hi: &hi + &expr.offset,
    }
}
