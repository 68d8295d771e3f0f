//! Gauss hypergeometric machinery: exact 2F1 partial sums, the contiguous
//! -ratio continued fraction coefficients d_n, and construction of the
//! unit-denominator continued fraction for ±R(a, b, c; z).

use crate::cf::{CFSpec, CoefficientSequence, Poly, PolyRat, Tail};
use crate::error::{Error, Result};
use crate::numerics::Rational;

/// Parameters (a, b, c) of 2F1. c must not be zero or a negative integer so
/// that the Pochhammer denominators (c)_k never vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypParams {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl HypParams {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if c.is_integer() && !c.is_positive() {
            return Err(Error::InvalidArgument(
                "c must not be zero or a negative integer".into(),
            ));
        }
        Ok(HypParams { a, b, c })
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }
}

/// Rising factorial (x)_k = x(x+1)…(x+k−1); the empty product is 1.
pub fn pochhammer(x: &Rational, k: u64) -> Rational {
    let mut acc = Rational::one();
    let mut factor = x.clone();
    for _ in 0..k {
        acc = &acc * &factor;
        factor = &factor + &Rational::one();
    }
    acc
}

/// Exact partial sum Σ_{k=0..n_terms} (a)_k (b)_k / ((c)_k k!) · z^k.
pub fn hyp2f1_partial(p: &HypParams, z: &Rational, n_terms: u64) -> Rational {
    let mut sum = Rational::one();
    let mut term = Rational::one();
    for k in 0..n_terms {
        let kr = Rational::from_int(k as i64);
        let num = &(&p.a + &kr) * &(&p.b + &kr);
        let den = &(&p.c + &kr) * &(&kr + &Rational::one());
        term = &(&term * &num) / &den;
        term = &term * z;
        sum = &sum + &term;
    }
    sum
}

/// Coefficient d_n of the Gauss continued fraction:
///   d_{2k}   = (b+k)(c−a+k) / ((c+2k−1)(c+2k)),
///   d_{2k+1} = (a+k)(c−b+k) / ((c+2k)(c+2k+1)).
pub fn gauss_d(p: &HypParams, n: u64) -> Result<Rational> {
    assert!(n >= 1, "d-coefficients start at n = 1");
    let (num, den) = if n % 2 == 0 {
        let k = Rational::from_int((n / 2) as i64);
        let two_k = &k + &k;
        (
            &(&p.b + &k) * &(&(&p.c - &p.a) + &k),
            &(&(&p.c + &two_k) - &Rational::one()) * &(&p.c + &two_k),
        )
    } else {
        let k = Rational::from_int(((n - 1) / 2) as i64);
        let two_k = &k + &k;
        (
            &(&p.a + &k) * &(&(&p.c - &p.b) + &k),
            &(&p.c + &two_k) * &(&(&p.c + &two_k) + &Rational::one()),
        )
    };
    den.recip()
        .map(|inv| &num * &inv)
        .ok_or(Error::DCoefficientPole { n })
}

/// Linear polynomial x + s·n as a PolyRat.
fn linear(offset: Rational, slope: Rational) -> PolyRat {
    PolyRat::new(Poly::new(vec![offset, slope]), Poly::one()).expect("nonzero denominator")
}

/// Closed form in n for −d_{n−1}·z at even indices n.
fn even_branch(p: &HypParams, z: &Rational) -> Result<PolyRat> {
    // n even: n−1 = 2k+1, so k = (n−2)/2
    let half = Rational::ratio(1, 2);
    let f1 = linear(&p.a - &Rational::one(), half.clone()); // a + (n−2)/2
    let f2 = linear(&(&p.c - &p.b) - &Rational::one(), half); // c−b + (n−2)/2
    shared_branch(p, z, f1, f2)
}

/// Closed form in n for −d_{n−1}·z at odd indices n.
fn odd_branch(p: &HypParams, z: &Rational) -> Result<PolyRat> {
    // n odd: n−1 = 2k, so k = (n−1)/2
    let half = Rational::ratio(1, 2);
    let f1 = linear(&p.b - &half, half.clone()); // b + (n−1)/2
    let f2 = linear(&(&p.c - &p.a) - &half, half); // c−a + (n−1)/2
    shared_branch(p, z, f1, f2)
}

fn shared_branch(p: &HypParams, z: &Rational, f1: PolyRat, f2: PolyRat) -> Result<PolyRat> {
    // both parities share the denominator (c+n−2)(c+n−1)
    let g1 = linear(&p.c - &Rational::from_int(2), Rational::one());
    let g2 = linear(&p.c - &Rational::one(), Rational::one());
    let num = f1.mul(&f2).mul(&PolyRat::from_const(-z));
    num.div(&g1.mul(&g2))
}

/// Builds the unit-denominator continued fraction for the contiguous ratio:
/// b0 = 0, b_n ≡ 1, a_1 = −1 when negated (else 1), a_n = −d_{n−1}·z for
/// n ≥ 2.
///
/// When the even- and odd-index closed forms for −d_{n−1}z coincide (as they
/// do for the collapsing parameters) the result is fully symbolic with a
/// one-entry head. Otherwise the head materializes indices 1..=max_head and
/// the tail keeps one branch per parity.
pub fn gauss_cf(p: &HypParams, z: &Rational, negate: bool, max_head: u64) -> Result<CFSpec> {
    if z.is_zero() {
        return Err(Error::InvalidArgument("z must be nonzero".into()));
    }
    assert!(max_head >= 1, "max_head must be at least 1");
    let a1 = if negate {
        Rational::from_int(-1)
    } else {
        Rational::one()
    };
    let even = even_branch(p, z)?;
    let odd = odd_branch(p, z)?;
    let tail = Tail::from_branches(even, odd);

    let a = match tail {
        Tail::Poly(_) => CoefficientSequence::new(vec![a1], tail),
        Tail::Parity { .. } => {
            let mut head = vec![a1];
            for n in 2..=max_head {
                head.push(&(-z) * &gauss_d(p, n - 1)?);
            }
            CoefficientSequence::new(head, tail)
        }
    };
    Ok(CFSpec::new(
        Rational::zero(),
        a,
        CoefficientSequence::constant(Rational::one()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cf::{convergent, preset};

    fn rat(p: i64, q: i64) -> Rational {
        Rational::ratio(p, q)
    }

    fn collapsing() -> HypParams {
        HypParams::new(rat(1, 2), Rational::zero(), rat(1, 2)).unwrap()
    }

    fn arctan_params() -> HypParams {
        HypParams::new(rat(1, 2), Rational::one(), rat(3, 2)).unwrap()
    }

    #[test]
    fn pochhammer_values() {
        assert_eq!(pochhammer(&rat(7, 3), 0), Rational::one());
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
        assert_eq!(pochhammer(&Rational::zero(), 3), Rational::zero());
        assert_eq!(pochhammer(&rat(1, 2), 3), rat(15, 8));
    }

    #[test]
    fn hyp2f1_matches_pochhammer_definition() {
        // definitional brute force: Σ (a)_k (b)_k / ((c)_k k!) z^k
        let cases = [
            (arctan_params(), rat(-1, 1)),
            (arctan_params(), rat(2, 7)),
            (
                HypParams::new(rat(-3, 2), rat(5, 3), rat(7, 4)).unwrap(),
                rat(-5, 11),
            ),
        ];
        for (p, z) in &cases {
            for n in 0..=25u64 {
                let mut direct = Rational::zero();
                for k in 0..=n {
                    let num = &pochhammer(p.a(), k) * &pochhammer(p.b(), k);
                    let den = &pochhammer(p.c(), k) * &pochhammer(&Rational::one(), k);
                    let term = &(&num / &den) * &z.pow(k as u32);
                    direct = &direct + &term;
                }
                assert_eq!(hyp2f1_partial(p, z, n), direct, "N = {n}");
            }
        }
    }

    #[test]
    fn hyp2f1_degenerate_is_one() {
        let p = collapsing();
        assert_eq!(hyp2f1_partial(&p, &rat(-1, 1), 10), Rational::one());
        assert_eq!(hyp2f1_partial(&p, &rat(-1, 1), 0), Rational::one());
    }

    #[test]
    fn hyp2f1_matches_leibniz_terms() {
        let p = arctan_params();
        assert_eq!(hyp2f1_partial(&p, &rat(-1, 1), 2), rat(13, 15));
        assert_eq!(hyp2f1_partial(&p, &rat(-1, 1), 1), rat(2, 3));
    }

    #[test]
    fn hyp2f1_at_zero() {
        let p = arctan_params();
        assert_eq!(hyp2f1_partial(&p, &Rational::zero(), 7), Rational::one());
    }

    #[test]
    fn d_coefficients() {
        let p = collapsing();
        assert_eq!(gauss_d(&p, 1).unwrap(), rat(1, 3));
        assert_eq!(gauss_d(&p, 2).unwrap(), rat(4, 15));
        let q = arctan_params();
        assert_eq!(gauss_d(&q, 1).unwrap(), rat(1, 15));
    }

    #[test]
    fn d_collapse_identity() {
        // d_n = n²/(4n²−1) for the collapsing parameters
        let p = collapsing();
        for n in 1..=64u64 {
            let n2 = (n * n) as i64;
            assert_eq!(gauss_d(&p, n).unwrap(), rat(n2, 4 * n2 - 1));
        }
    }

    #[test]
    fn invalid_c_rejected() {
        assert!(HypParams::new(rat(1, 2), Rational::zero(), Rational::zero()).is_err());
        assert!(HypParams::new(rat(1, 2), Rational::zero(), rat(-3, 1)).is_err());
        assert!(HypParams::new(rat(1, 2), Rational::zero(), rat(-1, 2)).is_ok());
    }

    #[test]
    fn gauss_cf_collapsing_equals_preset() {
        let cf = gauss_cf(&collapsing(), &rat(-1, 1), true, 8).unwrap();
        let expect = preset("gauss-pi4").unwrap();
        assert!(cf.same_fraction(&expect));
    }

    #[test]
    fn gauss_cf_unnegated_sign_flip() {
        let cf = gauss_cf(&collapsing(), &rat(-1, 1), false, 8).unwrap();
        assert_eq!(cf.a.eval(1).unwrap(), Rational::one());
        assert_eq!(convergent(&cf, 2).unwrap(), rat(3, 4));
    }

    #[test]
    fn gauss_cf_general_head_and_parity_tail() {
        let cf = gauss_cf(&arctan_params(), &rat(-1, 1), false, 4).unwrap();
        assert_eq!(cf.a.head_len(), 4);
        assert_eq!(cf.a.eval(2).unwrap(), rat(1, 15));
        assert!(matches!(cf.a.tail(), Tail::Parity { .. }));
        // tail values keep matching −d_{n−1}·z past the head
        for n in 5..=40u64 {
            assert_eq!(
                cf.a.eval(n).unwrap(),
                gauss_d(&arctan_params(), n - 1).unwrap(),
            );
        }
        assert_eq!(convergent(&cf, 1).unwrap(), Rational::one());
    }

    #[test]
    fn gauss_cf_rejects_zero_z() {
        assert!(gauss_cf(&collapsing(), &Rational::zero(), false, 4).is_err());
    }
}
