use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numerics::Rational;

use super::spec::CFSpec;

/// Full record of the three-term recurrence
///   A_n = b_n·A_{n−1} + a_n·A_{n−2},  B_n likewise,
/// seeded with A_{−1} = 1, B_{−1} = 0, A_0 = b0, B_0 = 1. Convergents are
/// f_n = A_n / B_n wherever B_n ≠ 0; a zero B_n is recorded as undefined and
/// the recurrence continues past it.
#[derive(Clone, Debug)]
pub struct ConvergentTrace {
    depth: usize,
    /// A_0 ..= A_depth, reduced.
    numerators: Vec<Rational>,
    /// B_0 ..= B_depth, reduced.
    denominators: Vec<Rational>,
    /// f_1 ..= f_depth; None where B_n = 0.
    values: Vec<Option<Rational>>,
}

impl ConvergentTrace {
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// A_n for 0 ≤ n ≤ depth.
    pub fn numerator(&self, n: usize) -> &Rational {
        &self.numerators[n]
    }

    /// B_n for 0 ≤ n ≤ depth.
    pub fn denominator(&self, n: usize) -> &Rational {
        &self.denominators[n]
    }

    /// f_n for 1 ≤ n ≤ depth; None where undefined.
    pub fn value(&self, n: usize) -> Option<&Rational> {
        self.values[n - 1].as_ref()
    }

    /// f_1 ..= f_depth.
    pub fn values(&self) -> &[Option<Rational>] {
        &self.values
    }

    pub fn final_value(&self) -> Result<Rational> {
        self.values
            .last()
            .and_then(|v| v.clone())
            .ok_or(Error::UndefinedConvergent { depth: self.depth })
    }
}

/// Unreduced fraction used inside the recurrence; the denominator stays
/// positive, reduction happens on the configured cadence.
#[derive(Clone)]
struct RawFrac {
    num: BigInt,
    den: BigInt,
}

impl RawFrac {
    fn from_rational(x: &Rational) -> Self {
        RawFrac {
            num: x.numer().clone(),
            den: x.denom().clone(),
        }
    }

    fn reduce(&mut self) {
        let g = self.num.gcd(&self.den);
        if !g.is_one() {
            self.num /= &g;
            self.den /= &g;
        }
    }

    fn to_rational(&self) -> Rational {
        Rational::new(self.num.clone(), self.den.clone()).expect("positive denominator")
    }
}

/// b·x + a·y over raw fractions.
fn step(b: &Rational, x: &RawFrac, a: &Rational, y: &RawFrac) -> RawFrac {
    let left = b.numer() * &x.num * (a.denom() * &y.den);
    let right = a.numer() * &y.num * (b.denom() * &x.den);
    RawFrac {
        num: left + right,
        den: b.denom() * &x.den * a.denom() * &y.den,
    }
}

/// Evaluates the trace with exact reduction after every step.
pub fn convergents(cf: &CFSpec, depth: usize) -> Result<ConvergentTrace> {
    convergents_with(cf, depth, 1)
}

/// Same trace, reducing the internal recurrence fractions only every
/// `reduce_every` steps. Results are identical; the cadence exists to measure
/// the cost of canonical reduction.
pub fn convergents_with(cf: &CFSpec, depth: usize, reduce_every: u32) -> Result<ConvergentTrace> {
    assert!(depth >= 1, "depth must be at least 1");
    assert!(reduce_every >= 1, "reduction cadence must be at least 1");

    let one = RawFrac {
        num: BigInt::one(),
        den: BigInt::one(),
    };
    let zero = RawFrac {
        num: BigInt::zero(),
        den: BigInt::one(),
    };

    let mut a_prev2 = one.clone(); // A_{-1}
    let mut a_prev1 = RawFrac::from_rational(&cf.b0); // A_0
    let mut b_prev2 = zero; // B_{-1}
    let mut b_prev1 = one; // B_0

    let mut numerators = Vec::with_capacity(depth + 1);
    let mut denominators = Vec::with_capacity(depth + 1);
    let mut values = Vec::with_capacity(depth);
    numerators.push(a_prev1.to_rational());
    denominators.push(b_prev1.to_rational());

    for n in 1..=depth {
        let a_n = cf.a.eval(n as u64)?;
        let b_n = cf.b.eval(n as u64)?;
        let mut a_cur = step(&b_n, &a_prev1, &a_n, &a_prev2);
        let mut b_cur = step(&b_n, &b_prev1, &a_n, &b_prev2);
        if n as u32 % reduce_every == 0 {
            a_cur.reduce();
            b_cur.reduce();
        }
        let value = if b_cur.num.is_zero() {
            None
        } else {
            Some(
                Rational::new(&a_cur.num * &b_cur.den, &a_cur.den * &b_cur.num)
                    .expect("B_n nonzero"),
            )
        };
        numerators.push(a_cur.to_rational());
        denominators.push(b_cur.to_rational());
        values.push(value);
        a_prev2 = a_prev1;
        a_prev1 = a_cur;
        b_prev2 = b_prev1;
        b_prev1 = b_cur;
    }

    Ok(ConvergentTrace {
        depth,
        numerators,
        denominators,
        values,
    })
}

/// The convergent f_depth; an error if B_depth = 0.
pub fn convergent(cf: &CFSpec, depth: usize) -> Result<Rational> {
    convergents(cf, depth)?.final_value()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::poly::{Poly, PolyRat};
    use crate::cf::sequence::CoefficientSequence;
    use crate::cf::spec::preset;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::ratio(p, q)
    }

    #[test]
    fn conjecture_hand_trace() {
        let cf = preset("conjecture-pi4").unwrap();
        let t = convergents(&cf, 2).unwrap();
        assert_eq!(t.values(), &[Some(rat(-1, 1)), Some(rat(-3, 4))]);
        let t4 = convergents(&cf, 4).unwrap();
        assert_eq!(t4.value(4), Some(&rat(-40, 51)));
        assert_eq!(t4.numerator(4), &rat(-160, 1));
        assert_eq!(t4.denominator(4), &rat(204, 1));
        assert_eq!(convergent(&cf, 1).unwrap(), rat(-1, 1));
        assert_eq!(convergent(&cf, 5).unwrap(), rat(-436, 555));
    }

    #[test]
    fn euler_matches_leibniz_partial_sums() {
        let cf = preset("euler-pi4").unwrap();
        let t = convergents(&cf, 3).unwrap();
        assert_eq!(
            t.values(),
            &[Some(rat(1, 1)), Some(rat(2, 3)), Some(rat(13, 15))]
        );
    }

    #[test]
    fn gauss_early_convergents() {
        let cf = preset("gauss-pi4").unwrap();
        assert_eq!(convergent(&cf, 2).unwrap(), rat(-3, 4));
    }

    #[test]
    fn recurrence_invariant() {
        // A_n = b_n A_{n-1} + a_n A_{n-2} holds for the stored values
        let cf = preset("gauss-pi4").unwrap();
        let t = convergents(&cf, 12).unwrap();
        for n in 2..=12usize {
            let a_n = cf.a.eval(n as u64).unwrap();
            let b_n = cf.b.eval(n as u64).unwrap();
            let expect = &(&b_n * t.numerator(n - 1)) + &(&a_n * t.numerator(n - 2));
            assert_eq!(t.numerator(n), &expect);
        }
    }

    #[test]
    fn zero_denominator_is_recorded_not_fatal() {
        // a_n = 1, b_n = 0: B_1 = 0 (undefined), recurrence continues
        let cf = CFSpec::new(
            Rational::zero(),
            CoefficientSequence::constant(Rational::one()),
            CoefficientSequence::constant(Rational::zero()),
        );
        let t = convergents(&cf, 3).unwrap();
        assert_eq!(t.value(1), None);
        assert_eq!(t.value(2), Some(&Rational::zero()));
        assert_eq!(t.value(3), None);
        assert!(matches!(
            convergent(&cf, 3),
            Err(Error::UndefinedConvergent { depth: 3 })
        ));
    }

    #[test]
    fn reduction_cadence_is_observationally_equal() {
        let cf = preset("gauss-pi4").unwrap();
        let every = convergents_with(&cf, 30, 1).unwrap();
        let lazy = convergents_with(&cf, 30, 7).unwrap();
        assert_eq!(every.values(), lazy.values());
        for n in 0..=30 {
            assert_eq!(every.numerator(n), lazy.numerator(n));
            assert_eq!(every.denominator(n), lazy.denominator(n));
        }
    }

    #[test]
    fn tail_pole_propagates() {
        let cf = CFSpec::new(
            Rational::zero(),
            CoefficientSequence::from_poly(
                PolyRat::new(Poly::from_ints(&[1]), Poly::from_ints(&[-4, 1])).unwrap(),
            ),
            CoefficientSequence::constant(Rational::one()),
        );
        assert!(matches!(
            convergents(&cf, 10),
            Err(Error::TailPole { index: 4 })
        ));
    }
}
