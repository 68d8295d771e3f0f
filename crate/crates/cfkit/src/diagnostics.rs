//! Convergence diagnostics: the ratio sequence ρ_n = |a_n| / (|b_n b_{n−1}|),
//! its symbolic limit, regime classification against the Worpitzky boundary
//! 1/4, empirical convergence rates, and certified correct-decimal counts.

use std::fmt;

use num_traits::Signed;

use crate::cf::{convergents, CFSpec, PolyRat};
use crate::error::{Error, Result};
use crate::numerics::{ConstantBracket, Rational};

/// Limit of the ratio sequence, determined from tail degrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RatioLimit {
    Finite(Rational),
    Zero,
    Infinite,
}

impl fmt::Display for RatioLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RatioLimit::Finite(v) => write!(f, "{v}"),
            RatioLimit::Zero => write!(f, "0"),
            RatioLimit::Infinite => write!(f, "∞"),
        }
    }
}

/// Convergence regime relative to the Worpitzky boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    SubWorpitzky,
    WorpitzkyBoundary,
    IndeterminateByRatioTest,
}

impl fmt::Display for Regime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Regime::SubWorpitzky => "SubWorpitzky",
            Regime::WorpitzkyBoundary => "WorpitzkyBoundary",
            Regime::IndeterminateByRatioTest => "IndeterminateByRatioTest",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegimeReport {
    pub limit: RatioLimit,
    pub regime: Regime,
    /// Least m with ρ strictly decreasing on [m, probe_depth] (window ≥ 2).
    pub rho_monotone_from: Option<u64>,
    /// Whether Σ |b_n| diverges, read off the b tail's growth order.
    pub abs_b_sum_diverges: bool,
}

/// ρ_n = |a_n| / (|b_n|·|b_{n−1}|) for n ≥ 2, exact.
pub fn rho(cf: &CFSpec, n: u64) -> Result<Rational> {
    assert!(n >= 2, "rho is defined for n >= 2");
    let a_n = cf.a.eval(n)?;
    let b_n = cf.b.eval(n)?;
    let b_prev = cf.b.eval(n - 1)?;
    if b_n.is_zero() {
        return Err(Error::DivisionByZero { index: n });
    }
    if b_prev.is_zero() {
        return Err(Error::DivisionByZero { index: n - 1 });
    }
    Ok(&a_n.abs() / &(&b_n.abs() * &b_prev.abs()))
}

/// Limit of one parity chain: |a(n)| / (|b1(n)|·|b2(n−1)|) as n → ∞.
fn chain_limit(a: &PolyRat, b1: &PolyRat, b2: &PolyRat) -> Result<RatioLimit> {
    if a.is_zero() {
        return Ok(RatioLimit::Zero);
    }
    if b1.is_zero() || b2.is_zero() {
        return Err(Error::SymbolicLimitUnavailable);
    }
    let degree = a.degree().unwrap() - b1.degree().unwrap() - b2.degree().unwrap();
    Ok(match degree {
        d if d < 0 => RatioLimit::Zero,
        d if d > 0 => RatioLimit::Infinite,
        _ => {
            let lead = &a.leading().unwrap().abs()
                / &(&b1.leading().unwrap().abs() * &b2.leading().unwrap().abs());
            RatioLimit::Finite(lead)
        }
    })
}

/// Symbolic limit of ρ_n from the degrees and leading coefficients of the
/// coefficient tails. Tails with distinct parity branches are admitted only
/// when both parity chains agree on the limit.
pub fn rho_limit(cf: &CFSpec) -> Result<RatioLimit> {
    let (a_even, a_odd) = cf.a.tail().branches();
    let (b_even, b_odd) = cf.b.tail().branches();
    // at even n: a_even(n) / (b_even(n)·b_odd(n−1)); shifting does not move
    // degrees or leading coefficients, so the unshifted branch suffices
    let even = chain_limit(&a_even, &b_even, &b_odd)?;
    let odd = chain_limit(&a_odd, &b_odd, &b_even)?;
    if even == odd {
        Ok(even)
    } else {
        Err(Error::SymbolicLimitUnavailable)
    }
}

fn branch_sum_diverges(p: &PolyRat) -> bool {
    match p.degree() {
        // Σ |p(n)| with p of growth order d converges only when d ≤ −2
        Some(d) => d >= -1,
        None => false,
    }
}

/// Classifies the fraction against the Worpitzky boundary and reports the
/// monotonicity onset of ρ and the Σ|b_n| divergence proxy.
pub fn classify(cf: &CFSpec, probe_depth: u64) -> Result<RegimeReport> {
    let limit = rho_limit(cf)?;
    let quarter = Rational::ratio(1, 4);
    let regime = match &limit {
        RatioLimit::Zero => Regime::SubWorpitzky,
        RatioLimit::Finite(v) if *v < quarter => Regime::SubWorpitzky,
        RatioLimit::Finite(v) if *v == quarter => Regime::WorpitzkyBoundary,
        _ => Regime::IndeterminateByRatioTest,
    };

    let mut rho_monotone_from = None;
    if probe_depth >= 3 {
        let rhos: Vec<Rational> = (2..=probe_depth)
            .map(|n| rho(cf, n))
            .collect::<Result<_>>()?;
        // longest strictly-decreasing suffix, at least two points long
        let mut start = rhos.len() - 1;
        while start > 0 && rhos[start - 1] > rhos[start] {
            start -= 1;
        }
        if start < rhos.len() - 1 {
            rho_monotone_from = Some(start as u64 + 2);
        }
    }

    let (b_even, b_odd) = cf.b.tail().branches();
    let abs_b_sum_diverges = branch_sum_diverges(&b_even) || branch_sum_diverges(&b_odd);

    Ok(RegimeReport {
        limit,
        regime,
        rho_monotone_from,
        abs_b_sum_diverges,
    })
}

/// One row of an empirical convergence-rate probe.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatePoint {
    pub depth: usize,
    /// Certified upper bound on |f_depth − target|.
    pub error: Rational,
    /// error / previous listed error; absent for the first row.
    pub ratio: Option<Rational>,
}

/// Certified error bounds of the convergents at the listed depths, plus the
/// consecutive-error ratios. The bracket must be narrower than half the
/// smallest measured error or the measurement is uncertifiable.
pub fn empirical_rate(
    cf: &CFSpec,
    target: &ConstantBracket,
    depths: &[usize],
) -> Result<Vec<RatePoint>> {
    assert!(!depths.is_empty(), "at least one depth required");
    assert!(depths.iter().all(|&d| d >= 1), "depths start at 1");
    let max_depth = *depths.iter().max().unwrap();
    let trace = convergents(cf, max_depth)?;

    let mut errors = Vec::with_capacity(depths.len());
    for &d in depths {
        let v = trace
            .value(d)
            .ok_or(Error::UndefinedConvergent { depth: d })?;
        errors.push(target.error_upper(v));
    }
    let min_error = errors.iter().min().expect("nonempty");
    let two = Rational::from_int(2);
    if &(&target.width() * &two) > min_error {
        return Err(Error::BracketTooWide);
    }

    let mut points = Vec::with_capacity(depths.len());
    for (i, (&depth, error)) in depths.iter().zip(&errors).enumerate() {
        let ratio = if i == 0 {
            None
        } else {
            errors[i - 1].recip().map(|inv| error * &inv)
        };
        points.push(RatePoint {
            depth,
            error: error.clone(),
            ratio,
        });
    }
    Ok(points)
}

/// Largest k ≥ 0 with e ≤ 10^(−k), i.e. floor(−log10 e) clamped to zero;
/// None when e is zero (an exact match certifies unboundedly many decimals).
pub fn decimals_from_error(e: &Rational) -> Option<u32> {
    if e.is_zero() {
        return None;
    }
    if e > &Rational::one() {
        return Some(0);
    }
    // initial guess from digit counts, then exact adjustment
    let num_digits = e.numer().abs().to_string().len() as i64;
    let den_digits = e.denom().to_string().len() as i64;
    let mut k = (den_digits - num_digits - 1).max(0);
    while e <= &Rational::pow10(-(k + 1)) {
        k += 1;
    }
    while k > 0 && e > &Rational::pow10(-k) {
        k -= 1;
    }
    Some(k as u32)
}

/// Certified count of correct decimal places of x against the bracket:
/// floor(−log10 E) with E the certified error upper bound, compared against
/// exact powers of ten. `u32::MAX` encodes an exact hit on a degenerate
/// bracket. x strictly inside a non-degenerate bracket is uncertifiable.
pub fn correct_decimals(x: &Rational, target: &ConstantBracket) -> Result<u32> {
    if !target.width().is_zero() && target.strictly_inside(x) {
        return Err(Error::BracketTooWide);
    }
    let e = target.error_upper(x);
    Ok(decimals_from_error(&e).unwrap_or(u32::MAX))
}
