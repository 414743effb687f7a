//! Real scalars for the numeric half of the cubic solver.
//!
//! Exact work is done over [`Rational`]; irrational roots are approximated
//! in any type implementing [`RealScalar`]. `f32` and `f64` are supported for
//! quick estimates, [`BigFloat`] for results at a caller-chosen precision.

use std::fmt::Debug;
use std::ops::Neg;

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;
use num::{BigInt, Num, ToPrimitive, Zero};

use crate::Rational;

/// Arbitrary precision binary floating point; precision travels with each
/// value and binary operations use the larger of the two.
pub type BigFloat = FBig<HalfEven, 2>;

pub trait RealScalar: Num + Clone + PartialOrd + Neg<Output = Self> + Debug {
    /// Precision actually used when `requested` bits are asked for.
    fn effective_precision(requested: u32) -> u32;

    /// Nearest value to `q` at `bits` of precision (clamped by the type).
    fn from_rational(q: &Rational, bits: u32) -> Self;

    /// Precision of this value in bits.
    fn bits(&self) -> u32;

    /// `x` carried at the precision of `like`.
    fn from_f64_like(x: f64, like: &Self) -> Self;

    fn sqrt(&self) -> Self;

    /// Real cube root, defined for negative values too.
    fn cbrt(&self) -> Self;

    fn to_f64(&self) -> f64;

    /// Fixed-point decimal rendering with `digits` fractional digits.
    fn to_decimal(&self, digits: usize) -> String;

    fn abs(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn from_i64(n: i64, bits: u32) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)), bits)
    }
}

impl RealScalar for f64 {
    fn effective_precision(_requested: u32) -> u32 {
        f64::MANTISSA_DIGITS
    }

    fn from_rational(q: &Rational, _bits: u32) -> Self {
        q.to_f64().unwrap_or(f64::NAN)
    }

    fn bits(&self) -> u32 {
        f64::MANTISSA_DIGITS
    }

    fn from_f64_like(x: f64, _like: &Self) -> Self {
        x
    }

    fn sqrt(&self) -> Self {
        f64::sqrt(*self)
    }

    fn cbrt(&self) -> Self {
        f64::cbrt(*self)
    }

    fn to_f64(&self) -> f64 {
        *self
    }

    fn to_decimal(&self, digits: usize) -> String {
        format!("{self:.digits$}")
    }
}

impl RealScalar for f32 {
    fn effective_precision(_requested: u32) -> u32 {
        f32::MANTISSA_DIGITS
    }

    fn from_rational(q: &Rational, _bits: u32) -> Self {
        q.to_f32().unwrap_or(f32::NAN)
    }

    fn bits(&self) -> u32 {
        f32::MANTISSA_DIGITS
    }

    fn from_f64_like(x: f64, _like: &Self) -> Self {
        x as f32
    }

    fn sqrt(&self) -> Self {
        f32::sqrt(*self)
    }

    fn cbrt(&self) -> Self {
        f32::cbrt(*self)
    }

    fn to_f64(&self) -> f64 {
        *self as f64
    }

    fn to_decimal(&self, digits: usize) -> String {
        format!("{self:.digits$}")
    }
}

pub(crate) fn to_ibig(n: &BigInt) -> IBig {
    IBig::from_le_bytes(&n.to_signed_bytes_le())
}

pub(crate) fn from_ibig(n: &IBig) -> BigInt {
    BigInt::from_signed_bytes_le(&n.to_le_bytes())
}

impl RealScalar for BigFloat {
    fn effective_precision(requested: u32) -> u32 {
        requested.max(2)
    }

    fn from_rational(q: &Rational, bits: u32) -> Self {
        let bits = bits.max(2) as usize;
        let num = BigFloat::from(to_ibig(q.numer())).with_precision(bits).value();
        let den = BigFloat::from(to_ibig(q.denom())).with_precision(bits).value();
        num / den
    }

    fn bits(&self) -> u32 {
        self.precision() as u32
    }

    fn from_f64_like(x: f64, like: &Self) -> Self {
        let bits = like.precision().max(f64::MANTISSA_DIGITS as usize);
        <BigFloat as num::FromPrimitive>::from_f64(x)
            .expect("finite seed")
            .with_precision(bits)
            .value()
    }

    fn sqrt(&self) -> Self {
        BigFloat::sqrt(self)
    }

    fn cbrt(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.nth_root(3)
    }

    fn to_f64(&self) -> f64 {
        BigFloat::to_f64(self).value()
    }

    fn to_decimal(&self, digits: usize) -> String {
        let scale = BigFloat::from(IBig::from(10u8).pow(digits));
        let scaled = (self.clone() * scale).round();
        let int = from_ibig(&scaled.to_int().value());
        format_fixed(&int, digits)
    }
}

/// Renders `int / 10^digits` with exactly `digits` fractional digits.
pub(crate) fn format_fixed(int: &BigInt, digits: usize) -> String {
    let negative = int.sign() == num::bigint::Sign::Minus;
    let mag = int.magnitude().to_string();
    let width = digits + 1;
    let padded = format!("{mag:0>width$}");
    let (whole, frac) = padded.split_at(padded.len() - digits);
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{whole}")
    } else {
        format!("{sign}{whole}.{frac}")
    }
}

/// Number of decimal digits that `bits` binary digits justify.
pub fn decimal_digits_for(bits: u32) -> usize {
    (bits as f64 * std::f64::consts::LOG10_2).floor() as usize
}
