//! Dense univariate polynomials.
//!
//! [`Polynomial`] works over any coefficient ring; division, gcd and the
//! Sturm machinery additionally assume the coefficients form a field. The
//! rational instance is [`crate::RationalPolynomial`].

mod depressed;
mod roots;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigRational, FromPrimitive, Num, One, Signed, Zero};

use crate::arith::lcm_of_denominators;
use crate::error::{Error, Result};
use crate::Rational;

pub use depressed::{classify_real_roots, cubic_delta, depress_cubic, DepressedCubic, RealRootStructure};
pub use roots::{rational_roots, rational_roots_by_divisors, rational_roots_by_isolation};

/// Coefficients in ascending order: index `i` holds the coefficient of `xⁱ`.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Zero> Polynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }
}

impl<T: Num + Clone> Polynomial<T> {
    pub fn constant(c: T) -> Self {
        Polynomial::new(vec![c])
    }

    /// `x - root`
    pub fn linear_from_root(root: T) -> Self {
        Polynomial::new(vec![T::zero() - root, T::one()])
    }

    /// Coefficient of `xⁱ` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Evaluation at a point of a larger ring, e.g. a complex number.
    pub fn eval_with<U, F>(&self, x: &U, lift: F) -> U
    where
        U: Num + Clone,
        F: Fn(&T) -> U,
    {
        self.coeffs
            .iter()
            .rev()
            .fold(U::zero(), |acc, c| acc * x.clone() + lift(c))
    }

    pub fn scale(&self, k: &T) -> Self {
        Polynomial::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }
}

impl<T: Num + Clone + FromPrimitive> Polynomial<T> {
    pub fn derivative(&self) -> Self {
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_usize(i).expect("degree fits the scalar"))
                .collect(),
        )
    }
}

impl<T: Num + Clone> Polynomial<T> {
    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let lc = lc.clone();
                Polynomial::new(self.coeffs.iter().map(|c| c.clone() / lc.clone()).collect())
            }
        }
    }

    /// Euclidean division over a field.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let lc = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Polynomial::zero(), Polynomial::zero()));
        };
        if nd < dd {
            return Ok((Polynomial::zero(), self.clone()));
        }
        let mut quot = vec![T::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd].clone() / lc.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Polynomial::new(quot), Polynomial::new(rem)))
    }

    /// Monic greatest common divisor over a field; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl<T: Num + Clone> Add for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn add(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Num + Clone> Sub for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn sub(self, rhs: Self) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Num + Clone> Mul for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn mul(self, rhs: Self) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(out)
    }
}

impl<T: Num + Clone + Neg<Output = T>> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;

    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl Polynomial<Rational> {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// Multiplies through by the lcm of the denominators and divides out the
    /// content, giving a primitive integer polynomial with the same roots.
    /// The sign of the leading coefficient is preserved.
    pub fn clear_denominators(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let lcm = lcm_of_denominators(&self.coeffs);
        let ints: Vec<_> = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
            .collect();
        let content = ints
            .iter()
            .fold(num::BigInt::zero(), |g, c| num::Integer::gcd(&g, c));
        Ok(Polynomial::new(
            ints.into_iter()
                .map(|c| BigRational::from_integer(c / &content))
                .collect(),
        ))
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Coefficients as lowest-terms strings, constant term first.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }

    /// Ordering used for deterministic factor lists: degree first, then the
    /// coefficients read from the leading term down.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for Polynomial<Rational> {
    /// `x^3 + 3*x + 14`; rational coefficients print as `2/7*x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let var = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{var}")?;
            } else {
                write!(f, "{mag}*{var}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational_from_i64;

    fn q(n: i64, d: i64) -> Rational {
        rational_from_i64(n, d).unwrap()
    }

    fn poly(c: &[Rational]) -> Polynomial<Rational> {
        Polynomial::new(c.to_vec())
    }

    #[test]
    fn trims_and_reports_degree() {
        let p = Polynomial::from_i64s(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Polynomial::<Rational>::new(vec![q(0, 1)]).degree(), None);
        assert!(Polynomial::<Rational>::from_i64s(&[]).is_zero());
    }

    #[test]
    fn clears_denominators() {
        let p = poly(&[q(7, 1), q(3, 2), q(0, 1), q(1, 1)]);
        assert_eq!(p.clear_denominators().unwrap(), Polynomial::from_i64s(&[14, 3, 0, 2]));
        let r = Polynomial::from_i64s(&[14, 3, 0, 1]);
        assert_eq!(r.clear_denominators().unwrap(), r);
        let p = poly(&[q(1, 4), q(0, 1), q(1, 6)]);
        assert_eq!(p.clear_denominators().unwrap(), Polynomial::from_i64s(&[3, 0, 2]));
        // content is removed
        assert_eq!(
            Polynomial::from_i64s(&[4, 0, 6]).clear_denominators().unwrap(),
            Polynomial::from_i64s(&[2, 0, 3])
        );
        assert_eq!(
            Polynomial::<Rational>::zero().clear_denominators(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn arithmetic() {
        let a = Polynomial::from_i64s(&[-1, 1]);
        let b = Polynomial::from_i64s(&[1, 1]);
        assert_eq!(&a * &b, Polynomial::from_i64s(&[-1, 0, 1]));
        assert_eq!(&a + &b, Polynomial::from_i64s(&[0, 2]));
        assert_eq!(&a - &a, Polynomial::zero());
        let p = Polynomial::from_i64s(&[-6, 11, -6, 1]);
        let (quot, rem) = p.div_rem(&a).unwrap();
        assert_eq!(quot, Polynomial::from_i64s(&[6, -5, 1]));
        assert!(rem.is_zero());
        assert_eq!(p.derivative(), Polynomial::from_i64s(&[11, -12, 3]));
        assert_eq!(p.eval(&q(4, 1)), q(6, 1));
    }

    #[test]
    fn gcd_is_monic() {
        // (x-1)^2 (x+2) and its derivative share x - 1
        let p = Polynomial::from_i64s(&[2, -3, 0, 1]);
        assert_eq!(p.gcd(&p.derivative()), Polynomial::from_i64s(&[-1, 1]));
        let r = Polynomial::from_i64s(&[2, 0, 6]);
        assert_eq!(r.gcd(&Polynomial::zero()), poly(&[q(1, 3), q(0, 1), q(1, 1)]));
    }

    #[test]
    fn renders_text() {
        assert_eq!(Polynomial::from_i64s(&[14, 3, 0, 1]).to_string(), "x^3 + 3*x + 14");
        assert_eq!(Polynomial::from_i64s(&[-1, -2, 1]).to_string(), "x^2 - 2*x - 1");
        assert_eq!(poly(&[q(1, 1), q(2, 7), q(1, 1)]).to_string(), "x^2 + 2/7*x + 1");
        assert_eq!(Polynomial::from_i64s(&[0, 0, 0, -1]).to_string(), "-x^3");
        assert_eq!(Polynomial::<Rational>::zero().to_string(), "0");
        assert_eq!(
            Polynomial::from_i64s(&[14, 3, 0, 1]).to_json(),
            serde_json::json!(["14", "3", "0", "1"])
        );
    }

    #[test]
    fn canonical_order() {
        let mut v = [
            Polynomial::from_i64s(&[4, 2, 1]),
            Polynomial::from_i64s(&[-1, 1]),
            Polynomial::from_i64s(&[1, 1, 1]),
            Polynomial::from_i64s(&[-2, 1]),
        ];
        v.sort_by(|a, b| a.canonical_cmp(b));
        let s: Vec<String> = v.iter().map(|p| p.to_string()).collect();
        assert_eq!(s, ["x - 2", "x - 1", "x^2 + x + 1", "x^2 + 2*x + 4"]);
    }

    #[test]
    fn generic_over_f64() {
        let p = Polynomial::new(vec![-2.0f64, 0.0, 1.0]);
        assert!((p.eval(&2f64.sqrt())).abs() < 1e-15);
        assert_eq!(p.derivative(), Polynomial::new(vec![0.0, 2.0]));
    }
}
