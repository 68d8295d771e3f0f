use crate::error::{Error, Result};
use crate::numerics::Rational;

use super::poly::PolyRat;

/// Closed form for the indices beyond a sequence's explicit head. Most
/// sequences use a single rational function of n; Gauss continued fractions
/// with general parameters need one branch per index parity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Tail {
    Poly(PolyRat),
    Parity { even: PolyRat, odd: PolyRat },
}

impl Tail {
    pub fn constant(c: Rational) -> Tail {
        Tail::Poly(PolyRat::from_const(c))
    }

    /// Collapses a branch pair back to a single closed form when possible.
    pub fn from_branches(even: PolyRat, odd: PolyRat) -> Tail {
        if even == odd {
            Tail::Poly(even)
        } else {
            Tail::Parity { even, odd }
        }
    }

    /// (even, odd) view; a single closed form is its own branch pair.
    pub fn branches(&self) -> (PolyRat, PolyRat) {
        match self {
            Tail::Poly(p) => (p.clone(), p.clone()),
            Tail::Parity { even, odd } => (even.clone(), odd.clone()),
        }
    }

    pub fn as_poly(&self) -> Option<&PolyRat> {
        match self {
            Tail::Poly(p) => Some(p),
            Tail::Parity { .. } => None,
        }
    }

    fn eval(&self, n: u64) -> Option<Rational> {
        match self {
            Tail::Poly(p) => p.eval_at(n),
            Tail::Parity { even, odd } => {
                if n % 2 == 0 {
                    even.eval_at(n)
                } else {
                    odd.eval_at(n)
                }
            }
        }
    }

    /// Pointwise product; parity branches stay aligned.
    pub fn mul(&self, rhs: &Tail) -> Tail {
        let (le, lo) = self.branches();
        let (re, ro) = rhs.branches();
        Tail::from_branches(le.mul(&re), lo.mul(&ro))
    }

    /// Pointwise quotient; errors when a divisor branch is identically zero.
    pub fn div(&self, rhs: &Tail) -> Result<Tail> {
        let (le, lo) = self.branches();
        let (re, ro) = rhs.branches();
        Ok(Tail::from_branches(le.div(&re)?, lo.div(&ro)?))
    }

    pub fn recip(&self) -> Result<Tail> {
        let (e, o) = self.branches();
        Ok(Tail::from_branches(e.recip()?, o.recip()?))
    }

    /// The tail one index earlier: t(n−1). Parity branches swap.
    pub fn shift_back(&self) -> Tail {
        let (e, o) = self.branches();
        Tail::from_branches(o.shift_back(), e.shift_back())
    }
}

/// Coefficient sequence indexed from 1: explicit head values for 1..=H and a
/// closed-form tail for every later index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoefficientSequence {
    head: Vec<Rational>,
    tail: Tail,
}

impl CoefficientSequence {
    pub fn new(head: Vec<Rational>, tail: Tail) -> Self {
        CoefficientSequence { head, tail }
    }

    pub fn from_tail(tail: Tail) -> Self {
        CoefficientSequence { head: vec![], tail }
    }

    pub fn from_poly(p: PolyRat) -> Self {
        Self::from_tail(Tail::Poly(p))
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_tail(Tail::constant(c))
    }

    pub fn head(&self) -> &[Rational] {
        &self.head
    }

    pub fn head_len(&self) -> u64 {
        self.head.len() as u64
    }

    pub fn tail(&self) -> &Tail {
        &self.tail
    }

    /// Value at index n ≥ 1: the head override when present, otherwise the
    /// tail closed form. A vanishing tail denominator signals an ill-posed
    /// sequence definition.
    pub fn eval(&self, n: u64) -> Result<Rational> {
        assert!(n >= 1, "sequence indices start at 1");
        if n <= self.head_len() {
            return Ok(self.head[(n - 1) as usize].clone());
        }
        self.tail.eval(n).ok_or(Error::TailPole { index: n })
    }

    /// Same sequence with the head materialized out to `h` entries.
    pub fn with_head_extended_to(&self, h: u64) -> Result<Self> {
        let mut head = self.head.clone();
        for n in self.head_len() + 1..=h {
            head.push(self.eval(n)?);
        }
        Ok(CoefficientSequence {
            head,
            tail: self.tail.clone(),
        })
    }
}
