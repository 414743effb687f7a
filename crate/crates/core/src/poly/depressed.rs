//! Depressed cubics `x³ + Px + Q` and their discriminant.

use num::{BigRational, Signed, Zero};

use crate::arith::rational_from_i64;
use crate::error::{Error, Result};
use crate::Rational;

/// `x³ + Px + Q`, obtained from `y³ + a₂y² + a₁y + a₀` by `y = x − shift`
/// with `shift = a₂/3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepressedCubic {
    pub p: Rational,
    pub q: Rational,
    pub shift: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RealRootStructure {
    ThreeDistinctReal,
    OneReal,
    MultipleRoot,
}

/// Depresses the monic cubic `y³ + a2·y² + a1·y + a0`.
pub fn depress_cubic(a2: &Rational, a1: &Rational, a0: &Rational) -> DepressedCubic {
    let three = rational_from_i64(3, 1).unwrap();
    let a2sq = a2 * a2;
    let p = (&three * a1 - &a2sq) / &three;
    let q = (BigRational::from_integer(2.into()) * &a2sq * a2
        - BigRational::from_integer(9.into()) * a1 * a2
        + BigRational::from_integer(27.into()) * a0)
        / BigRational::from_integer(27.into());
    DepressedCubic { p, q, shift: a2 / three }
}

/// `Δ = (27Q² + 4P³) / (3P²)`.
///
/// This is the negated classical discriminant divided by `3P²`, so its sign
/// is opposite to the textbook convention.
pub fn cubic_delta(p: &Rational, q: &Rational) -> Result<Rational> {
    if p.is_zero() {
        return Err(Error::DeltaUndefined);
    }
    let num = BigRational::from_integer(27.into()) * q * q + BigRational::from_integer(4.into()) * p * p * p;
    Ok(num / (BigRational::from_integer(3.into()) * p * p))
}

/// Real root structure of `x³ + Px + Q` from the sign of `Δ`.
pub fn classify_real_roots(p: &Rational, q: &Rational) -> RealRootStructure {
    if p.is_zero() {
        // x³ = −Q
        return if q.is_zero() {
            RealRootStructure::MultipleRoot
        } else {
            RealRootStructure::OneReal
        };
    }
    let delta = cubic_delta(p, q).expect("P is nonzero");
    if delta.is_negative() {
        RealRootStructure::ThreeDistinctReal
    } else if delta.is_zero() {
        RealRootStructure::MultipleRoot
    } else {
        RealRootStructure::OneReal
    }
}

impl DepressedCubic {
    pub fn delta(&self) -> Result<Rational> {
        cubic_delta(&self.p, &self.q)
    }

    pub fn classify(&self) -> RealRootStructure {
        classify_real_roots(&self.p, &self.q)
    }
}
