//! Exact integer and rational primitives.
//!
//! Rationals are `num::BigRational` values, always kept in lowest terms with
//! a positive denominator. On top of that this module provides the number
//! theoretic predicates the denesting decision needs: exact cube and square
//! roots of rationals and divisor enumeration for the rational root test.

use num::{BigInt, BigRational, Integer as _, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{Integer, Rational};

/// Builds `num/den` in lowest terms with a positive denominator.
pub fn normalize_rational(num: Integer, den: Integer) -> Result<Rational> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(num, den))
}

pub fn rational_from_i64(num: i64, den: i64) -> Result<Rational> {
    normalize_rational(BigInt::from(num), BigInt::from(den))
}

/// Parses an optionally signed decimal integer.
pub fn parse_integer(text: &str) -> Result<Integer> {
    let t = text.trim();
    let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return Err(Error::InvalidNumber(text.to_string()));
    }
    t.parse::<BigInt>()
        .map_err(|_| Error::InvalidNumber(text.to_string()))
}

/// Parses `"n"` or `"n/d"` (for example `"-22/7"`), reducing to lowest terms.
pub fn parse_rational(text: &str) -> Result<Rational> {
    match text.split_once('/') {
        None => Ok(BigRational::from_integer(parse_integer(text)?)),
        Some((num, den)) => {
            let den_trim = den.trim();
            if den_trim.starts_with(['-', '+']) {
                return Err(Error::InvalidNumber(text.to_string()));
            }
            normalize_rational(parse_integer(num)?, parse_integer(den_trim)?)
        }
    }
}

/// Exact integer cube root: `Some(k)` with `k³ = n`, otherwise `None`.
pub fn integer_cube_root(n: &Integer) -> Option<Integer> {
    // `Roots::cbrt` truncates toward zero, so the sign already matches.
    let k = n.cbrt();
    (&k * &k * &k == *n).then_some(k)
}

/// Exact integer square root of a nonnegative integer.
pub fn integer_square_root(n: &Integer) -> Option<Integer> {
    if n.is_negative() {
        return None;
    }
    let k = n.sqrt();
    (&k * &k == *n).then_some(k)
}

/// The unique rational `t` with `t³ = q`, if there is one.
///
/// With `q = m/n` in lowest terms, `q` is a cube exactly when `m` and `n`
/// are both integer cubes.
pub fn rational_cube_root(q: &Rational) -> Option<Rational> {
    let num = integer_cube_root(q.numer())?;
    let den = integer_cube_root(q.denom())?;
    Some(BigRational::new(num, den))
}

/// The nonnegative rational `s` with `s² = q`, if there is one.
pub fn rational_square_root(q: &Rational) -> Option<Rational> {
    let num = integer_square_root(q.numer())?;
    let den = integer_square_root(q.denom())?;
    Some(BigRational::new(num, den))
}

pub fn is_rational_cube(q: &Rational) -> bool {
    rational_cube_root(q).is_some()
}

pub fn is_rational_square(q: &Rational) -> bool {
    rational_square_root(q).is_some()
}

/// All positive divisors of `|n|` in ascending order.
///
/// `|n|` is factored by trial division against the shrinking cofactor, so the
/// cost is governed by the second largest prime factor.
pub fn divisors(n: &Integer) -> Result<Vec<Integer>> {
    if n.is_zero() {
        return Err(Error::DivisorsOfZero);
    }
    let mut divs = vec![BigInt::one()];
    for (prime, exp) in factorize(&n.abs()) {
        let mut next = Vec::with_capacity(divs.len() * (exp as usize + 1));
        for d in &divs {
            let mut pow = d.clone();
            next.push(pow.clone());
            for _ in 0..exp {
                pow *= &prime;
                next.push(pow.clone());
            }
        }
        divs = next;
    }
    divs.sort();
    Ok(divs)
}

/// Prime factorization of `m ≥ 1` as `(prime, exponent)` pairs.
fn factorize(m: &Integer) -> Vec<(Integer, u32)> {
    let mut rest = m.clone();
    let mut out = Vec::new();
    let mut p = BigInt::from(2u32);
    while &p * &p <= rest {
        let mut exp = 0;
        loop {
            let (q, r) = rest.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            rest = q;
            exp += 1;
        }
        if exp > 0 {
            out.push((p.clone(), exp));
        }
        p += if p == BigInt::from(2u32) { 1u32 } else { 2u32 };
    }
    if !rest.is_one() {
        out.push((rest, 1));
    }
    out
}

/// Splits a positive integer `m` as `s² · t` with `t` squarefree and returns
/// `(s, t)`.
///
/// Trial division runs only up to the cube root of what is left; the
/// remaining cofactor then has at most two prime factors, so it is either
/// squarefree or the square of a prime.
pub fn squarefree_decomposition(m: &Integer) -> (Integer, Integer) {
    debug_assert!(m.is_positive());
    let mut rest = m.clone();
    let mut square = BigInt::one();
    let mut free = BigInt::one();
    let mut d = BigInt::from(2u32);
    while &d * &d * &d <= rest {
        let mut exp = 0u32;
        loop {
            let (q, r) = rest.div_rem(&d);
            if !r.is_zero() {
                break;
            }
            rest = q;
            exp += 1;
        }
        for _ in 0..exp / 2 {
            square *= &d;
        }
        if exp % 2 == 1 {
            free *= &d;
        }
        d += 1u32;
    }
    match integer_square_root(&rest) {
        Some(s) if !s.is_one() => square *= s,
        _ => free *= rest,
    }
    (square, free)
}

/// Least common multiple of the denominators of `values` (1 when empty).
pub fn lcm_of_denominators<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Integer {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// `2^-k` written out as an exact decimal string.
pub fn power_of_two_reciprocal_decimal(k: u32) -> String {
    if k == 0 {
        return "1".to_string();
    }
    // 2^-k = 5^k / 10^k
    let digits = num::pow(BigInt::from(5u32), k as usize).to_string();
    let width = k as usize;
    format!("0.{digits:0>width$}")
}
