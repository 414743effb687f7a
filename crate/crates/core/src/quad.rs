//! Elements `a + b√p` of a real quadratic field.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, Num, One, Signed};

use crate::arith::{is_rational_square, squarefree_decomposition};
use crate::error::{Error, Result};
use crate::scalar::RealScalar;
use crate::{Integer, Rational};

/// `a + b·√p`, generic over the coefficient type.
///
/// The canonical rational instance ([`crate::SurdElement`]) always has `p` a
/// squarefree integer greater than one, so equality is componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadSurd<T> {
    a: T,
    b: T,
    p: T,
}

impl<T> QuadSurd<T> {
    /// Builds an element without canonicalizing `p`.
    pub fn from_parts(a: T, b: T, p: T) -> Self {
        QuadSurd { a, b, p }
    }

    /// Rational part.
    pub fn a(&self) -> &T {
        &self.a
    }

    /// Coefficient of `√p`.
    pub fn b(&self) -> &T {
        &self.b
    }

    pub fn radicand(&self) -> &T {
        &self.p
    }

    pub fn into_parts(self) -> (T, T, T) {
        (self.a, self.b, self.p)
    }
}

impl<T: Num + Clone + Neg<Output = T>> QuadSurd<T> {
    pub fn conjugate(&self) -> Self {
        QuadSurd::from_parts(self.a.clone(), -self.b.clone(), self.p.clone())
    }

    /// `a² − b²p`, the product with the conjugate.
    pub fn norm(&self) -> T {
        self.a.clone() * self.a.clone() - self.b.clone() * self.b.clone() * self.p.clone()
    }

    /// `(a + b√p)³ = a(a² + 3b²p) + b(3a² + b²p)√p`.
    pub fn cube(&self) -> Self {
        let (a, b, p) = (&self.a, &self.b, &self.p);
        let a2 = a.clone() * a.clone();
        let b2p = b.clone() * b.clone() * p.clone();
        let three = T::one() + T::one() + T::one();
        QuadSurd::from_parts(
            a.clone() * (a2.clone() + three.clone() * b2p.clone()),
            b.clone() * (three * a2 + b2p),
            p.clone(),
        )
    }

    fn assert_same_field(&self, other: &Self) {
        assert!(
            self.p == other.p || self.b.is_zero() || other.b.is_zero(),
            "surd arithmetic across different radicands"
        );
    }

    fn common_radicand(&self, other: &Self) -> T {
        if self.b.is_zero() {
            other.p.clone()
        } else {
            self.p.clone()
        }
    }
}

impl<T: Num + Clone + Neg<Output = T>> Add for &QuadSurd<T> {
    type Output = QuadSurd<T>;

    fn add(self, rhs: Self) -> QuadSurd<T> {
        self.assert_same_field(rhs);
        QuadSurd::from_parts(
            self.a.clone() + rhs.a.clone(),
            self.b.clone() + rhs.b.clone(),
            self.common_radicand(rhs),
        )
    }
}

impl<T: Num + Clone + Neg<Output = T>> Sub for &QuadSurd<T> {
    type Output = QuadSurd<T>;

    fn sub(self, rhs: Self) -> QuadSurd<T> {
        self.assert_same_field(rhs);
        QuadSurd::from_parts(
            self.a.clone() - rhs.a.clone(),
            self.b.clone() - rhs.b.clone(),
            self.common_radicand(rhs),
        )
    }
}

impl<T: Num + Clone + Neg<Output = T>> Mul for &QuadSurd<T> {
    type Output = QuadSurd<T>;

    fn mul(self, rhs: Self) -> QuadSurd<T> {
        self.assert_same_field(rhs);
        let p = self.common_radicand(rhs);
        QuadSurd::from_parts(
            self.a.clone() * rhs.a.clone() + self.b.clone() * rhs.b.clone() * p.clone(),
            self.a.clone() * rhs.b.clone() + self.b.clone() * rhs.a.clone(),
            p,
        )
    }
}

impl<T: Num + Clone + Neg<Output = T>> Neg for &QuadSurd<T> {
    type Output = QuadSurd<T>;

    fn neg(self) -> QuadSurd<T> {
        QuadSurd::from_parts(-self.a.clone(), -self.b.clone(), self.p.clone())
    }
}

impl QuadSurd<Rational> {
    /// Canonical element equal to `a + b·√p_raw`.
    ///
    /// For `p_raw = u/v` in lowest terms `√(u/v) = √(uv)/v`; the square part
    /// of `uv` is then moved into the coefficient.
    pub fn new(a: Rational, b: Rational, p_raw: Rational) -> Result<Self> {
        if !p_raw.is_positive() {
            return Err(Error::NonPositiveRadicand);
        }
        if is_rational_square(&p_raw) {
            return Err(Error::PerfectSquareRadicand);
        }
        let uv = p_raw.numer() * p_raw.denom();
        let (square, free) = squarefree_decomposition(&uv);
        let scale = BigRational::new(square, p_raw.denom().clone());
        Ok(QuadSurd::from_parts(a, b * scale, BigRational::from_integer(free)))
    }

    /// `p` as an integer (always integral for canonical elements).
    pub fn radicand_integer(&self) -> Integer {
        self.p.to_integer()
    }

    pub fn is_canonical(&self) -> bool {
        if !self.p.is_integer() || self.p <= BigRational::one() {
            return false;
        }
        squarefree_decomposition(self.p.numer()).0.is_one()
    }

    /// Numeric value in any real scalar type.
    pub fn evaluate<S: RealScalar>(&self, bits: u32) -> S {
        let p = S::from_rational(&self.p, bits);
        S::from_rational(&self.a, bits) + S::from_rational(&self.b, bits) * p.sqrt()
    }
}

/// [`QuadSurd::new`] by another name.
pub fn normalize_surd(a: Rational, b: Rational, p_raw: Rational) -> Result<QuadSurd<Rational>> {
    QuadSurd::new(a, b, p_raw)
}

/// `(A + B√p)³` as the pair `(a, b)`.
pub fn cube_surd(big_a: &Rational, big_b: &Rational, p: &Integer) -> (Rational, Rational) {
    let e = QuadSurd::from_parts(big_a.clone(), big_b.clone(), BigRational::from_integer(p.clone()));
    let (a, b, _) = e.cube().into_parts();
    (a, b)
}

pub fn norm_surd(e: &QuadSurd<Rational>) -> Rational {
    e.norm()
}

pub fn conjugate(e: &QuadSurd<Rational>) -> QuadSurd<Rational> {
    e.conjugate()
}

/// Renders `coefficient*sqrt(p)` pieces; a coefficient of ±1 is dropped.
pub(crate) fn write_surd_term(f: &mut fmt::Formatter<'_>, coeff: &Rational, p: &BigInt, leading: bool) -> fmt::Result {
    let mag = coeff.abs();
    let sign = coeff.is_negative();
    match (leading, sign) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    if mag.is_one() {
        write!(f, "sqrt({p})")
    } else {
        write!(f, "{mag}*sqrt({p})")
    }
}

impl fmt::Display for QuadSurd<Rational> {
    /// `a + b*sqrt(p)`, with the sign of `b` folded into the operator.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.a)?;
        let mut b = self.b.clone();
        if b.is_negative() {
            write!(f, " - ")?;
            b = -b;
        } else {
            write!(f, " + ")?;
        }
        write!(f, "{b}*sqrt({})", self.p)
    }
}
