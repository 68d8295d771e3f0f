//! Depth-increasing verification of a continued fraction against a constant
//! target, with certified decimal counts.

use crate::cf::{convergents, CFSpec};
use crate::diagnostics::decimals_from_error;
use crate::error::Result;
use crate::numerics::{const_bracket, ConstantExpr};

/// Outcome of a verification run. `verified` holds exactly when
/// `achieved_decimals >= requested_decimals`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationVerdict {
    pub verified: bool,
    /// Certified correct decimals at `depth_used`; `u32::MAX` encodes an
    /// exact rational hit.
    pub achieved_decimals: u32,
    pub requested_decimals: u32,
    pub depth_used: usize,
}

/// Walks convergents up to `max_depth` until `digits` decimals are certified
/// against a bracket for `target`, or gives up. Ten guard digits keep the
/// comparison decidable when a convergent lands inside the bracket.
pub fn verify_to_digits(
    cf: &CFSpec,
    target: &ConstantExpr,
    digits: u32,
    max_depth: usize,
) -> Result<VerificationVerdict> {
    assert!(digits >= 1, "digits must be positive");
    assert!(max_depth >= 1, "max_depth must be positive");
    let bracket = const_bracket(target, digits + 10);
    let trace = convergents(cf, max_depth)?;

    let mut achieved: u32 = 0;
    let mut depth_used = max_depth;
    for depth in 1..=max_depth {
        let Some(value) = trace.value(depth) else {
            continue;
        };
        let error = bracket.error_upper(value);
        let decimals = decimals_from_error(&error).unwrap_or(u32::MAX);
        achieved = decimals;
        depth_used = depth;
        if decimals >= digits {
            break;
        }
    }
    Ok(VerificationVerdict {
        verified: achieved >= digits,
        achieved_decimals: achieved,
        requested_decimals: digits,
        depth_used,
    })
}
