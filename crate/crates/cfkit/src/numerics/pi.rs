//! Certified π reference via Machin's identity
//! π = 16·arctan(1/5) − 4·arctan(1/239), with each arctangent evaluated as an
//! exact alternating Taylor sum truncated by the first-omitted-term bound.
//! Independent of the continued fractions under test.

use crate::error::Result;
use crate::numerics::bracket::ConstantBracket;
use crate::numerics::rational::Rational;

/// Encloses arctan(x) for 0 < x < 1 in an interval of width at most `width`.
///
/// The value lies strictly between consecutive partial sums of the
/// alternating series Σ (−1)^k x^(2k+1)/(2k+1), so the returned endpoints are
/// the first pair of partial sums whose gap (the next term) is small enough.
fn atan_bracket(x: &Rational, width: &Rational) -> (Rational, Rational) {
    debug_assert!(x.is_positive() && x < &Rational::one());
    let x2 = x * x;
    let mut power = x.clone(); // x^(2k+1)
    let mut sum = x.clone(); // S_0
    let mut k: u32 = 0;
    loop {
        power = &power * &x2;
        k += 1;
        let term = &power / &Rational::from_int(2 * i64::from(k) + 1);
        let next = if k % 2 == 1 {
            &sum - &term
        } else {
            &sum + &term
        };
        if &term <= width {
            return if next < sum { (next, sum) } else { (sum, next) };
        }
        sum = next;
    }
}

/// Certified bracket [lo, hi] with lo < π < hi and hi − lo ≤ 10^(−digits).
///
/// Two guard digits are carried internally, so the returned width is in fact
/// at most 10^(−digits−2).
pub fn pi_bracket(digits: u32) -> ConstantBracket {
    assert!(digits >= 1, "digits must be positive");
    let target = Rational::pow10(-(i64::from(digits) + 2));
    let (lo5, hi5) = atan_bracket(&Rational::ratio(1, 5), &(&target / &Rational::from_int(32)));
    let (lo239, hi239) = atan_bracket(
        &Rational::ratio(1, 239),
        &(&target / &Rational::from_int(8)),
    );
    let sixteen = Rational::from_int(16);
    let four = Rational::from_int(4);
    let lo = &(&sixteen * &lo5) - &(&four * &hi239);
    let hi = &(&sixteen * &hi5) - &(&four * &lo239);
    ConstantBracket::new(lo, hi).expect("machin endpoints are ordered")
}

/// π truncated to `digits` decimal places, certified by the bracket.
pub fn pi_decimal(digits: u32) -> Result<String> {
    // The bracket carries enough guard width that both endpoints truncate
    // identically unless π sits pathologically close to a decimal boundary;
    // widen until they agree.
    let mut extra = 0u32;
    loop {
        let b = pi_bracket(digits + extra);
        let lo = b.lo().to_decimal(digits);
        let hi = b.hi().to_decimal(digits);
        if lo == hi {
            return Ok(lo);
        }
        extra += 10;
    }
}
