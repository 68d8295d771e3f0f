//! Equivalence transformations of continued fractions over nonzero scaling
//! sequences {r_n}:
//!   ã_1 = r_1·a_1,  b̃_n = r_n·b_n,  ã_n = r_n·r_{n−1}·a_n (n ≥ 2),
//! which leave every convergent unchanged.

use crate::cf::{CFSpec, CoefficientSequence};
use crate::error::{Error, Result};
use crate::numerics::Rational;

/// Scaling sequence {r_n}. Structurally a coefficient sequence; evaluation
/// rejects a zero value, since zero scalings do not define an equivalence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScalingSequence(CoefficientSequence);

impl ScalingSequence {
    pub fn new(seq: CoefficientSequence) -> Self {
        ScalingSequence(seq)
    }

    pub fn identity() -> Self {
        ScalingSequence(CoefficientSequence::constant(Rational::one()))
    }

    pub fn sequence(&self) -> &CoefficientSequence {
        &self.0
    }

    pub fn head_len(&self) -> u64 {
        self.0.head_len()
    }

    pub fn eval(&self, n: u64) -> Result<Rational> {
        let v = self.0.eval(n)?;
        if v.is_zero() {
            return Err(Error::ZeroScaling { index: n });
        }
        Ok(v)
    }

    /// Pointwise product r·s; composing two equivalence transformations.
    pub fn compose(&self, other: &ScalingSequence) -> Result<ScalingSequence> {
        let h = self.head_len().max(other.head_len());
        let mut head = Vec::with_capacity(h as usize);
        for n in 1..=h {
            head.push(&self.eval(n)? * &other.eval(n)?);
        }
        let tail = self.0.tail().mul(other.0.tail());
        Ok(ScalingSequence(CoefficientSequence::new(head, tail)))
    }

    /// Pointwise reciprocal {1/r_n}.
    pub fn reciprocal(&self) -> Result<ScalingSequence> {
        let mut head = Vec::with_capacity(self.0.head().len());
        for (i, v) in self.0.head().iter().enumerate() {
            let r = v.recip().ok_or(Error::ZeroScaling {
                index: i as u64 + 1,
            })?;
            head.push(r);
        }
        let tail = self.0.tail().recip().map_err(|_| Error::ZeroScaling {
            index: self.head_len() + 1,
        })?;
        Ok(ScalingSequence(CoefficientSequence::new(head, tail)))
    }
}

/// Applies the equivalence transformation defined by `r` to `cf`.
///
/// Symbolic tails are multiplied as rational functions, so cancellations
/// happen exactly; head/tail boundaries extend the output head far enough to
/// cover every index where any input is still explicit.
pub fn apply_equivalence(cf: &CFSpec, r: &ScalingSequence) -> Result<CFSpec> {
    // ã_n needs r_{n−1}, so its closed form only applies once n−1 is past
    // the head of r.
    let a_head_len = cf.a.head_len().max(r.head_len() + 1);
    let mut a_head = Vec::with_capacity(a_head_len as usize);
    for n in 1..=a_head_len {
        let scaled = if n == 1 {
            &r.eval(1)? * &cf.a.eval(1)?
        } else {
            &(&r.eval(n)? * &r.eval(n - 1)?) * &cf.a.eval(n)?
        };
        a_head.push(scaled);
    }
    let r_tail = r.sequence().tail();
    let a_tail = cf.a.tail().mul(&r_tail.mul(&r_tail.shift_back()));

    let b_head_len = cf.b.head_len().max(r.head_len());
    let mut b_head = Vec::with_capacity(b_head_len as usize);
    for n in 1..=b_head_len {
        b_head.push(&r.eval(n)? * &cf.b.eval(n)?);
    }
    let b_tail = cf.b.tail().mul(r_tail);

    Ok(CFSpec::new(
        cf.b0.clone(),
        CoefficientSequence::new(a_head, a_tail),
        CoefficientSequence::new(b_head, b_tail),
    ))
}

/// The scaling r_n = target_b(n) / b_n that rewrites the partial denominators
/// of `cf` into `target_b`; division is symbolic when both tails are closed
/// forms.
pub fn scaling_to_match_denominators(
    cf: &CFSpec,
    target_b: &CoefficientSequence,
) -> Result<ScalingSequence> {
    let head_len = cf.b.head_len().max(target_b.head_len());
    let mut head = Vec::with_capacity(head_len as usize);
    for n in 1..=head_len {
        let t = target_b.eval(n)?;
        let b = cf.b.eval(n)?;
        let r = t
            .checked_div(&b)
            .filter(|r| !r.is_zero())
            .ok_or(Error::ZeroScaling { index: n })?;
        head.push(r);
    }
    let tail = target_b
        .tail()
        .div(cf.b.tail())
        .map_err(|_| Error::ZeroScaling {
            index: head_len + 1,
        })?;
    Ok(ScalingSequence(CoefficientSequence::new(head, tail)))
}
