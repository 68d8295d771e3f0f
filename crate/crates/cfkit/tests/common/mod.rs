//! Shared deterministic generators for randomized properties.

use cfkit::cf::{CFSpec, CoefficientSequence, Poly, PolyRat, Tail};
use cfkit::numerics::Rational;
use cfkit::transforms::ScalingSequence;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::ratio(p, q)
}

fn nonzero_rational(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let p = rng.gen_range(-12i64..=12);
        if p != 0 {
            return rat(p, rng.gen_range(1i64..=12));
        }
    }
}

/// Polynomial with strictly positive coefficients (optionally negated as a
/// whole), hence nonzero at every n ≥ 1.
fn sign_definite_poly(rng: &mut ChaCha8Rng, max_degree: usize) -> Poly {
    let degree = rng.gen_range(0..=max_degree);
    let mut coeffs = Vec::with_capacity(degree + 1);
    for _ in 0..=degree {
        coeffs.push(rat(rng.gen_range(1i64..=9), 1));
    }
    let p = Poly::new(coeffs);
    if rng.gen_bool(0.5) {
        p.neg()
    } else {
        p
    }
}

/// Rational function with no poles (and no zeros) at integer n ≥ 1.
pub fn pole_free_polyrat(rng: &mut ChaCha8Rng, max_degree: usize) -> PolyRat {
    let num = sign_definite_poly(rng, max_degree);
    let den = sign_definite_poly(rng, max_degree);
    PolyRat::new(num, den).expect("denominator is nonzero")
}

pub fn random_sequence(rng: &mut ChaCha8Rng) -> CoefficientSequence {
    let head_len = rng.gen_range(0..=2);
    let head = (0..head_len).map(|_| nonzero_rational(rng)).collect();
    CoefficientSequence::new(head, Tail::Poly(pole_free_polyrat(rng, 2)))
}

pub fn random_cfspec(rng: &mut ChaCha8Rng) -> CFSpec {
    let b0 = rat(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=5));
    CFSpec::new(b0, random_sequence(rng), random_sequence(rng))
}

/// Scaling sequence guaranteed nonzero at every index.
pub fn random_scaling(rng: &mut ChaCha8Rng) -> ScalingSequence {
    ScalingSequence::new(random_sequence(rng))
}
