use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::numerics::Rational;

/// Polynomial in n with rational coefficients, stored by ascending power.
/// The zero polynomial is the empty coefficient list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| Rational::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The variable n itself.
    pub fn var() -> Self {
        Poly::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
            out.push(&a + &b);
        }
        Poly::new(out)
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Long division: self = q·d + r with deg r < deg d. Panics if d is zero.
    pub fn divmod(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let dl = d.leading().unwrap().clone();
        let dd = d.degree().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &dl;
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] = &rem[k + i] - &(&factor * dc);
            }
            while rem.last().is_some_and(Rational::is_zero) {
                rem.pop();
            }
            quot[k] = factor;
            // guard against non-cancelling leading term (cannot happen, but
            // avoids an infinite loop if the invariant is ever broken)
            if rem.len() > k + dd {
                rem.truncate(k + dd);
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact quotient; panics if the division leaves a remainder.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.divmod(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let (_, r) = a.divmod(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) if !l.is_one() => {
                let inv = l.recip().expect("leading coefficient is nonzero");
                a.scale(&inv)
            }
            _ => a,
        }
    }

    /// p(n−1): the same polynomial one index earlier.
    pub fn shift_back(&self) -> Poly {
        let n_minus_1 = Poly::new(vec![Rational::from_int(-1), Rational::one()]);
        let mut acc = Poly::zero();
        let mut power = Poly::one();
        for c in &self.coeffs {
            acc = acc.add(&power.scale(c));
            power = power.mul(&n_minus_1);
        }
        acc
    }
}

/// Ratio of two polynomials in canonical form: common polynomial factors
/// cancelled, coefficients scaled to coprime integers, and the denominator's
/// leading coefficient positive.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PolyRat {
    num: Poly,
    den: Poly,
}

impl PolyRat {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::canonicalize(num, den))
    }

    fn canonicalize(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return PolyRat {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = Poly::gcd(&num, &den);
        let mut num = num.div_exact(&g);
        let mut den = den.div_exact(&g);

        // scale both polynomials by the same rational so that all
        // coefficients become coprime integers
        let mut lcm = BigInt::one();
        for c in num.coeffs().iter().chain(den.coeffs()) {
            lcm = lcm.lcm(c.denom());
        }
        let mut gcd = BigInt::zero();
        for c in num.coeffs().iter().chain(den.coeffs()) {
            let scaled = c.numer() * (&lcm / c.denom());
            gcd = gcd.gcd(&scaled.abs());
        }
        let factor = Rational::new(lcm, gcd).expect("content gcd is nonzero");
        num = num.scale(&factor);
        den = den.scale(&factor);

        if den.leading().is_some_and(Rational::is_negative) {
            num = num.neg();
            den = den.neg();
        }
        PolyRat { num, den }
    }

    pub fn from_const(c: Rational) -> Self {
        PolyRat {
            num: Poly::constant(c),
            den: Poly::one(),
        }
        .renormalized()
    }

    pub fn from_poly(p: Poly) -> Self {
        Self::canonicalize(p, Poly::one())
    }

    /// The variable n.
    pub fn var() -> Self {
        PolyRat {
            num: Poly::var(),
            den: Poly::one(),
        }
    }

    fn renormalized(self) -> Self {
        Self::canonicalize(self.num, self.den)
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Some(c) when this is the constant rational function c.
    pub fn as_const(&self) -> Option<Rational> {
        if self.num.degree().unwrap_or(0) == 0 && self.den.degree() == Some(0) {
            if self.num.is_zero() {
                return Some(Rational::zero());
            }
            Some(self.num.leading().unwrap() / self.den.leading().unwrap())
        } else {
            None
        }
    }

    /// deg(num) − deg(den); the growth order of the function. None for zero.
    pub fn degree(&self) -> Option<i64> {
        let n = self.num.degree()? as i64;
        let d = self.den.degree().unwrap_or(0) as i64;
        Some(n - d)
    }

    /// Ratio of leading coefficients; None for the zero function.
    pub fn leading(&self) -> Option<Rational> {
        Some(self.num.leading()? / self.den.leading().expect("denominator nonzero"))
    }

    /// None when the denominator vanishes at x.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval(x) / &d)
    }

    pub fn eval_at(&self, n: u64) -> Option<Rational> {
        self.eval(&Rational::from_int(n as i64))
    }

    pub fn neg(&self) -> PolyRat {
        PolyRat {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, rhs: &PolyRat) -> PolyRat {
        Self::canonicalize(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn sub(&self, rhs: &PolyRat) -> PolyRat {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &PolyRat) -> PolyRat {
        Self::canonicalize(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn div(&self, rhs: &PolyRat) -> Result<PolyRat> {
        if rhs.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::canonicalize(
            self.num.mul(&rhs.den),
            self.den.mul(&rhs.num),
        ))
    }

    pub fn recip(&self) -> Result<PolyRat> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::canonicalize(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, exp: u32) -> PolyRat {
        let mut acc = PolyRat::from_const(Rational::one());
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    /// f(n−1).
    pub fn shift_back(&self) -> PolyRat {
        Self::canonicalize(self.num.shift_back(), self.den.shift_back())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(num: &[i64], den: &[i64]) -> PolyRat {
        PolyRat::new(Poly::from_ints(num), Poly::from_ints(den)).unwrap()
    }

    #[test]
    fn poly_eval_and_ops() {
        let p = Poly::from_ints(&[1, -2, 1]); // (n-1)^2
        assert_eq!(p.eval(&Rational::from_int(4)), Rational::from_int(9));
        let q = Poly::from_ints(&[1, -2]); // 1-2n
        assert_eq!(
            p.mul(&q).eval(&Rational::from_int(3)),
            Rational::from_int(-20)
        );
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn divmod_and_gcd() {
        let a = Poly::from_ints(&[3, -8, 4]); // (2n-1)(2n-3)
        let b = Poly::from_ints(&[-1, 2]); // 2n-1
        let (q, r) = a.divmod(&b);
        assert!(r.is_zero());
        assert_eq!(q, Poly::from_ints(&[-3, 2]));
        let g = Poly::gcd(&a, &b);
        // gcd is monic: n - 1/2
        assert_eq!(g, Poly::new(vec![Rational::ratio(-1, 2), Rational::one()]));
    }

    #[test]
    fn canonical_cancellation() {
        // (2n-1)(2n-3)·(n-1)^2 / ((2n-3)(2n-1)) = (n-1)^2
        let num = Poly::from_ints(&[3, -8, 4]).mul(&Poly::from_ints(&[1, -2, 1]));
        let den = Poly::from_ints(&[3, -8, 4]);
        let f = PolyRat::new(num, den).unwrap();
        assert_eq!(f, pr(&[1, -2, 1], &[1]));
    }

    #[test]
    fn canonical_integer_scaling() {
        // (n/2) / (3/4) canonicalizes to (2n)/3
        let num = Poly::new(vec![Rational::zero(), Rational::ratio(1, 2)]);
        let den = Poly::constant(Rational::ratio(3, 4));
        let f = PolyRat::new(num, den).unwrap();
        assert_eq!(f, pr(&[0, 2], &[3]));
    }

    #[test]
    fn canonical_denominator_sign() {
        let f = PolyRat::new(Poly::from_ints(&[0, 0, 1]), Poly::from_ints(&[1, 0, -4])).unwrap();
        assert_eq!(f, pr(&[0, 0, -1], &[-1, 0, 4]));
        assert!(f.den().leading().unwrap().is_positive());
    }

    #[test]
    fn eval_pole() {
        let f = pr(&[1], &[-3, 1]); // 1/(n-3)
        assert!(f.eval_at(3).is_none());
        assert_eq!(f.eval_at(5).unwrap(), Rational::ratio(1, 2));
    }

    #[test]
    fn shift_back() {
        let f = pr(&[1, -2], &[1]); // -(2n-1)
        assert_eq!(f.shift_back(), pr(&[3, -2], &[1])); // -(2n-3)
        let g = pr(&[1, -2, 1], &[3, -8, 4]);
        let shifted = g.shift_back();
        // (n-2)^2 / ((2n-5)(2n-3))
        assert_eq!(shifted, pr(&[4, -4, 1], &[15, -16, 4]));
    }

    #[test]
    fn arithmetic_identities() {
        let f = pr(&[1, -2, 1], &[3, -8, 4]);
        let g = pr(&[1, -2], &[1]);
        let prod = f.mul(&g.mul(&g.shift_back()));
        // r_n·r_{n−1}·a_n with both scalings negative: signs cancel
        assert_eq!(prod, pr(&[1, -2, 1], &[1]));
        assert_eq!(f.div(&f).unwrap(), PolyRat::from_const(Rational::one()));
        assert!(f.sub(&f).is_zero());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(PolyRat::new(Poly::one(), Poly::zero()).is_err());
        let z = PolyRat::from_const(Rational::zero());
        assert!(z.recip().is_err());
    }
}
