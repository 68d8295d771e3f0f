use crate::error::{Error, Result};
use crate::numerics::Rational;

use super::poly::{Poly, PolyRat};
use super::sequence::{CoefficientSequence, Tail};

/// A generalized continued fraction b0 + K(a_n / b_n) with coefficient
/// sequences indexed from 1.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CFSpec {
    pub b0: Rational,
    pub a: CoefficientSequence,
    pub b: CoefficientSequence,
    pub name: Option<String>,
}

impl CFSpec {
    pub fn new(b0: Rational, a: CoefficientSequence, b: CoefficientSequence) -> Self {
        CFSpec {
            b0,
            a,
            b,
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Structural equality of the fraction itself, ignoring the label.
    pub fn same_fraction(&self, other: &CFSpec) -> bool {
        self.b0 == other.b0 && self.a == other.a && self.b == other.b
    }
}

fn rat(p: i64, q: i64) -> Rational {
    Rational::ratio(p, q)
}

fn poly(num: &[i64], den: &[i64]) -> PolyRat {
    PolyRat::new(Poly::from_ints(num), Poly::from_ints(den)).expect("preset polynomial")
}

/// Built-in fractions for −π/4 and π/4.
///
/// * `conjecture-pi4`: a_1 = 1 then a_n = (n−1)², b_n = −(2n−1); value −π/4.
/// * `euler-pi4`: a_1 = 1 then a_n = (2n−3)², b_1 = 1 then b_n = 2; the
///   Euler transform of the Leibniz series, value π/4.
/// * `gauss-pi4`: a_1 = −1 then a_n = (n−1)²/((2n−3)(2n−1)), b_n = 1; the
///   negated Gauss hypergeometric ratio, value −π/4.
pub fn preset(name: &str) -> Result<CFSpec> {
    let spec = match name {
        "conjecture-pi4" => CFSpec::new(
            Rational::zero(),
            CoefficientSequence::new(vec![rat(1, 1)], Tail::Poly(poly(&[1, -2, 1], &[1]))),
            CoefficientSequence::from_poly(poly(&[1, -2], &[1])),
        ),
        "euler-pi4" => CFSpec::new(
            Rational::zero(),
            CoefficientSequence::new(vec![rat(1, 1)], Tail::Poly(poly(&[9, -12, 4], &[1]))),
            CoefficientSequence::new(vec![rat(1, 1)], Tail::constant(Rational::from_int(2))),
        ),
        "gauss-pi4" => CFSpec::new(
            Rational::zero(),
            CoefficientSequence::new(vec![rat(-1, 1)], Tail::Poly(poly(&[1, -2, 1], &[3, -8, 4]))),
            CoefficientSequence::constant(Rational::one()),
        ),
        _ => {
            return Err(Error::UnknownPreset {
                name: name.to_string(),
            })
        }
    };
    Ok(spec.with_name(name))
}

pub const PRESET_NAMES: &[&str] = &["conjecture-pi4", "euler-pi4", "gauss-pi4"];
