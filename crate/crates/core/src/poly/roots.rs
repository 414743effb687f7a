//! Complete enumeration of the rational roots of a rational polynomial.
//!
//! Two independent routes are provided. The divisor grid follows the
//! rational root theorem literally and is used whenever the constant and
//! leading coefficients are small enough to enumerate their divisors by trial
//! division. Larger inputs go through Sturm-sequence isolation of the integer
//! roots of a monic integer transform, which needs no factoring at all.

use std::collections::BTreeSet;

use num::{BigInt, BigRational, Integer as _, One, Signed, ToPrimitive, Zero};

use super::Polynomial;
use crate::arith::divisors;
use crate::error::{Error, Result};
use crate::{Integer, Rational};

/// Above this magnitude the divisor grid is too slow to enumerate.
const DIVISOR_GRID_LIMIT: u64 = 1 << 40;

/// All rational roots of `h` (degree ≥ 1), ascending and without repeats.
pub fn rational_roots(h: &Polynomial<Rational>) -> Result<BTreeSet<Rational>> {
    let (ints, has_zero) = prepare(h)?;
    let mut roots = if ints.len() <= 1 {
        BTreeSet::new()
    } else {
        let small = |c: &Integer| c.abs().to_u64().is_some_and(|m| m <= DIVISOR_GRID_LIMIT);
        if small(&ints[0]) && small(ints.last().unwrap()) {
            divisor_grid(&ints)
        } else {
            isolate_integer_transform(&ints)
        }
    };
    if has_zero {
        roots.insert(BigRational::zero());
    }
    Ok(roots)
}

/// The rational root theorem as stated: test `±m/n` for every divisor `m` of
/// the constant term and `n` of the leading coefficient.
pub fn rational_roots_by_divisors(h: &Polynomial<Rational>) -> Result<BTreeSet<Rational>> {
    let (ints, has_zero) = prepare(h)?;
    let mut roots = if ints.len() <= 1 { BTreeSet::new() } else { divisor_grid(&ints) };
    if has_zero {
        roots.insert(BigRational::zero());
    }
    Ok(roots)
}

/// Rational roots found by Sturm isolation, without any divisor enumeration.
pub fn rational_roots_by_isolation(h: &Polynomial<Rational>) -> Result<BTreeSet<Rational>> {
    let (ints, has_zero) = prepare(h)?;
    let mut roots = if ints.len() <= 1 { BTreeSet::new() } else { isolate_integer_transform(&ints) };
    if has_zero {
        roots.insert(BigRational::zero());
    }
    Ok(roots)
}

/// Clears denominators and peels off factors of `x`. Returns the integer
/// coefficients (constant term nonzero) and whether 0 was a root.
fn prepare(h: &Polynomial<Rational>) -> Result<(Vec<Integer>, bool)> {
    match h.degree() {
        None | Some(0) => return Err(Error::DegreeTooLow(1)),
        _ => {}
    }
    let cleared = h.clear_denominators()?;
    let mut ints: Vec<Integer> = cleared.coeffs().iter().map(|c| c.to_integer()).collect();
    let zeros = ints.iter().take_while(|c| c.is_zero()).count();
    ints.drain(..zeros);
    Ok((ints, zeros > 0))
}

/// `Σ cᵢ mⁱ n^(d−i)`, which vanishes exactly when `m/n` is a root.
fn homogeneous_eval(ints: &[Integer], m: &Integer, n: &Integer) -> Integer {
    let mut acc = BigInt::zero();
    let mut npow = BigInt::one();
    // Horner in m, carrying powers of n for the lower-degree terms.
    for c in ints.iter().rev() {
        acc = acc * m + c * &npow;
        npow *= n;
    }
    acc
}

fn divisor_grid(ints: &[Integer]) -> BTreeSet<Rational> {
    let a0 = &ints[0];
    let an = ints.last().unwrap();
    let numerators = divisors(a0).expect("constant term is nonzero");
    let denominators = divisors(an).expect("leading term is nonzero");
    let mut roots = BTreeSet::new();
    for n in &denominators {
        for m in &numerators {
            if !m.gcd(n).is_one() {
                continue;
            }
            for cand in [m.clone(), -m.clone()] {
                // Horner on m/n scaled by n^deg avoids rational arithmetic.
                let value = homogeneous_eval(ints, &cand, n);
                if value.is_zero() {
                    roots.insert(BigRational::new(cand, n.clone()));
                }
            }
        }
    }
    roots
}

/// Integer roots of the monic transform `y = aₙ·x`, found by bisecting
/// integer intervals with a Sturm chain until each surviving interval has
/// unit length, then testing its right endpoint exactly.
fn isolate_integer_transform(ints: &[Integer]) -> BTreeSet<Rational> {
    let deg = ints.len() - 1;
    let an = ints[deg].clone();
    // y^d + Σ cᵢ aₙ^(d−1−i) yⁱ
    let mut monic = Vec::with_capacity(deg + 1);
    let mut pow = BigInt::one();
    let mut pows = vec![BigInt::one(); deg];
    for i in (0..deg).rev() {
        pows[i] = pow.clone();
        pow *= &an;
    }
    for i in 0..deg {
        monic.push(&ints[i] * &pows[i]);
    }
    monic.push(BigInt::one());

    let as_poly = Polynomial::new(monic.iter().cloned().map(BigRational::from_integer).collect());
    let squarefree = {
        let g = as_poly.gcd(&as_poly.derivative());
        as_poly.div_rem(&g).expect("gcd is nonzero").0
    };
    let chain = sturm_chain(&squarefree);
    let bound = monic.iter().take(deg).map(|c| c.abs()).max().unwrap_or_default() + 1u32;

    let mut found = BTreeSet::new();
    let lo = -bound.clone();
    let hi = bound;
    let v_lo = sign_variations(&chain, &lo);
    let v_hi = sign_variations(&chain, &hi);
    let mut stack = vec![(lo, hi, v_lo, v_hi)];
    while let Some((lo, hi, v_lo, v_hi)) = stack.pop() {
        if v_lo <= v_hi {
            continue;
        }
        if &hi - &lo == BigInt::one() {
            if homogeneous_eval(&monic, &hi, &BigInt::one()).is_zero() {
                found.insert(BigRational::new(hi, an.clone()));
            }
            continue;
        }
        let mid = (&lo + &hi).div_floor(&BigInt::from(2));
        let v_mid = sign_variations(&chain, &mid);
        stack.push((lo, mid.clone(), v_lo, v_mid));
        stack.push((mid, hi, v_mid, v_hi));
    }
    found
}

fn sturm_chain(p: &Polynomial<Rational>) -> Vec<Polynomial<Rational>> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].degree().is_none_or(|d| d == 0) {
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

/// Sign changes along the chain at an integer point, zeros skipped.
fn sign_variations(chain: &[Polynomial<Rational>], x: &Integer) -> usize {
    let x = BigRational::from_integer(x.clone());
    let mut last = 0i8;
    let mut count = 0;
    for p in chain {
        let v = p.eval(&x);
        let s = if v.is_positive() {
            1
        } else if v.is_negative() {
            -1
        } else {
            continue;
        };
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational_from_i64;

    fn q(n: i64, d: i64) -> Rational {
        rational_from_i64(n, d).unwrap()
    }

    fn set(v: &[Rational]) -> BTreeSet<Rational> {
        v.iter().cloned().collect()
    }

    fn both(p: &Polynomial<Rational>) -> BTreeSet<Rational> {
        let a = rational_roots_by_divisors(p).unwrap();
        let b = rational_roots_by_isolation(p).unwrap();
        assert_eq!(a, b, "routes disagree on {p}");
        assert_eq!(rational_roots(p).unwrap(), a);
        a
    }

    #[test]
    fn worked_examples() {
        assert_eq!(both(&Polynomial::from_i64s(&[14, 3, 0, 1])), set(&[q(-2, 1)]));
        assert_eq!(both(&Polynomial::from_i64s(&[2, 3, 0, 1])), set(&[]));
        assert_eq!(both(&Polynomial::from_i64s(&[0, 0, 0, 1])), set(&[q(0, 1)]));
        assert_eq!(both(&Polynomial::from_i64s(&[2048, 192, 0, 1])), set(&[q(-8, 1)]));
    }

    #[test]
    fn non_monic_and_fractional() {
        // (2x - 1)(3x + 2)(x - 5)
        let p = &(&Polynomial::from_i64s(&[-1, 2]) * &Polynomial::from_i64s(&[2, 3]))
            * &Polynomial::from_i64s(&[-5, 1]);
        assert_eq!(both(&p), set(&[q(-2, 3), q(1, 2), q(5, 1)]));
        let scaled = p.scale(&q(-3, 7));
        assert_eq!(both(&scaled), set(&[q(-2, 3), q(1, 2), q(5, 1)]));
    }

    #[test]
    fn repeated_and_zero_roots() {
        // x^2 (x - 1)^3 (x + 4)
        let mut p = Polynomial::from_i64s(&[0, 0, 1]);
        for _ in 0..3 {
            p = &p * &Polynomial::from_i64s(&[-1, 1]);
        }
        p = &p * &Polynomial::from_i64s(&[4, 1]);
        assert_eq!(both(&p), set(&[q(-4, 1), q(0, 1), q(1, 1)]));
    }

    #[test]
    fn large_coefficients_use_isolation() {
        // roots 10^15 + 7 and -3/(2^45)
        let big = BigRational::from_integer(BigInt::from(1_000_000_000_000_007i64));
        let small = -BigRational::new(BigInt::from(3), BigInt::one() << 45);
        let p = &Polynomial::linear_from_root(big.clone()) * &Polynomial::linear_from_root(small.clone());
        let p = &p * &Polynomial::from_i64s(&[1, 0, 1]);
        assert_eq!(rational_roots(&p).unwrap(), set(&[small, big]));
    }

    #[test]
    fn rejects_constants() {
        assert_eq!(rational_roots(&Polynomial::from_i64s(&[5])), Err(Error::DegreeTooLow(1)));
        assert_eq!(rational_roots(&Polynomial::zero()), Err(Error::DegreeTooLow(1)));
    }
}
