//! Cubic equations solved through the symmetric sextic resolvent.
//!
//! A monic cubic is shifted to `x³ + Px + Q`. For `P ≠ 0` the depressed
//! cubic is the resolvent `x³ − 3dx + cd` of the sextic trinomial
//! `x⁶ + cx³ + d` with `c = −3Q/P`, `d = −P/3`, whose roots are
//! `αβ(αζⁱ + βζ⁻ⁱ)` where `α³, β³ = (−c ± √(c² − 4d))/2` and `αβ` is the
//! real cube root of `d`. Rational roots are extracted exactly; the others
//! are evaluated at the requested precision, polished by Newton steps and
//! accepted only once the residual has been checked.

use std::cmp::Ordering;

use num::{BigRational, Complex, One, Signed, Zero};

use crate::arith::power_of_two_reciprocal_decimal;
use crate::error::{Error, Result};
use crate::poly::{depress_cubic, rational_roots, Polynomial};
use crate::scalar::{decimal_digits_for, BigFloat, RealScalar};
use crate::{Rational, RationalPolynomial};

/// Guard bits carried on top of the requested precision.
const GUARD_BITS: u32 = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactRoot {
    pub value: Rational,
    pub multiplicity: u32,
}

/// The three roots of a cubic: rational ones exactly, the rest numerically.
#[derive(Debug, Clone)]
pub struct CubicRoots<T> {
    /// Ascending by value.
    pub exact_roots: Vec<ExactRoot>,
    /// Ascending by real part, then imaginary part.
    pub numeric_roots: Vec<Complex<T>>,
    pub precision_bits: u32,
    /// Every numeric root `x̂` satisfies `|h(x̂)| ≤ 2^-residual_exponent`.
    pub residual_exponent: u32,
}

impl<T: RealScalar> CubicRoots<T> {
    pub fn residual_bound(&self) -> Rational {
        BigRational::new(One::one(), num::BigInt::one() << self.residual_exponent)
    }

    /// Exact roots listed once per multiplicity.
    pub fn exact_with_multiplicity(&self) -> Vec<Rational> {
        self.exact_roots
            .iter()
            .flat_map(|r| std::iter::repeat_n(r.value.clone(), r.multiplicity as usize))
            .collect()
    }

    pub fn distinct_real_root_count(&self) -> usize {
        self.exact_roots.len() + self.numeric_roots.iter().filter(|z| z.im.is_zero()).count()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let digits = decimal_digits_for(self.precision_bits);
        serde_json::json!({
            "exact": self.exact_with_multiplicity().iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "numeric": self.numeric_roots.iter().map(|z| serde_json::json!({
                "re": z.re.to_decimal(digits),
                "im": z.im.to_decimal(digits),
            })).collect::<Vec<_>>(),
            "residual_bound": power_of_two_reciprocal_decimal(self.residual_exponent),
            "precision_bits": self.precision_bits,
        })
    }

    /// One root per line: exact values first, then `re + im*i` decimals.
    pub fn to_text(&self) -> String {
        let digits = decimal_digits_for(self.precision_bits);
        let mut out = String::new();
        for r in self.exact_with_multiplicity() {
            out.push_str(&format!("exact: {r}\n"));
        }
        for z in &self.numeric_roots {
            let re = z.re.to_decimal(digits);
            if z.im.is_zero() {
                out.push_str(&format!("numeric: {re}\n"));
            } else {
                let im = z.im.to_decimal(digits);
                match im.strip_prefix('-') {
                    Some(mag) => out.push_str(&format!("numeric: {re} - {mag}*i\n")),
                    None => out.push_str(&format!("numeric: {re} + {im}*i\n")),
                }
            }
        }
        out.push_str(&format!("residual_bound: 2^-{}\n", self.residual_exponent));
        out
    }
}

/// Coefficients `(c, d)` of the sextic `x⁶ + cx³ + d` attached to
/// `x³ + Px + Q`.
pub fn sextic_for_depressed(p: &Rational, q: &Rational) -> Result<(Rational, Rational)> {
    if p.is_zero() {
        return Err(Error::SexticUndefined);
    }
    let three = BigRational::from_integer(3.into());
    Ok((-(&three * q) / p, -p / three))
}

/// `x³ − 3dx + cd`
pub fn resolvent_of_sextic(c: &Rational, d: &Rational) -> RationalPolynomial {
    let three = BigRational::from_integer(3.into());
    Polynomial::new(vec![c * d, -(three * d), Rational::zero(), Rational::one()])
}

/// `ζ₃ = −1/2 + i√3/2` at the given precision.
pub fn primitive_cube_root_of_unity<T: RealScalar>(bits: u32) -> Complex<T> {
    let half = BigRational::new(1.into(), 2.into());
    let re = T::from_rational(&-half.clone(), bits);
    let im = T::from_i64(3, bits).sqrt() * T::from_rational(&half, bits);
    Complex::new(re, im)
}

/// The three values `αβ(αζⁱ + βζ⁻ⁱ)`, `i = 0, 1, 2`.
pub fn recombine_resolvent_roots<T: RealScalar>(alpha: &Complex<T>, beta: &Complex<T>) -> [Complex<T>; 3] {
    let bits = alpha.re.bits().max(beta.re.bits());
    let zeta = primitive_cube_root_of_unity::<T>(bits);
    let zeta2 = zeta.clone() * zeta.clone();
    let ab = alpha.clone() * beta.clone();
    [
        ab.clone() * (alpha.clone() + beta.clone()),
        ab.clone() * (alpha.clone() * zeta.clone() + beta.clone() * zeta2.clone()),
        ab * (alpha.clone() * zeta2 + beta.clone() * zeta),
    ]
}

/// A cube root of `w`: the real one for real `w`, otherwise the principal one.
pub fn complex_cbrt<T: RealScalar>(w: &Complex<T>) -> Complex<T> {
    if w.im.is_zero() {
        return Complex::new(w.re.cbrt(), w.im.clone());
    }
    let modulus = (w.re.clone() * w.re.clone() + w.im.clone() * w.im.clone()).sqrt();
    let theta = (w.im.clone() / modulus.clone())
        .to_f64()
        .atan2((w.re.clone() / modulus.clone()).to_f64());
    let radius = modulus.cbrt();
    let mut z = Complex::new(
        radius.clone() * T::from_f64_like((theta / 3.0).cos(), &radius),
        radius.clone() * T::from_f64_like((theta / 3.0).sin(), &radius),
    );
    // Newton on z³ = w: z ← (2z + w/z²)/3, quadratic from a ~50 bit seed.
    let bits = w.re.bits().max(w.im.bits());
    let three = Complex::new(T::from_i64(3, bits), T::from_i64(0, bits));
    let two = Complex::new(T::from_i64(2, bits), T::from_i64(0, bits));
    for _ in 0..newton_steps(bits) {
        z = (two.clone() * z.clone() + w.clone() / (z.clone() * z.clone())) / three.clone();
    }
    z
}

fn newton_steps(bits: u32) -> u32 {
    let mut steps = 1;
    let mut good = 40u32;
    while good < bits + 8 {
        good = good.saturating_mul(2);
        steps += 1;
    }
    steps
}

fn real<T: RealScalar>(x: T) -> Complex<T> {
    let zero = T::from_f64_like(0.0, &x);
    Complex::new(x, zero)
}

/// Numeric roots of `x³ + Px + Q` through the sextic resolvent.
pub fn depressed_roots<T: RealScalar>(p: &Rational, q: &Rational, bits: u32) -> [Complex<T>; 3] {
    let (c, d) = match sextic_for_depressed(p, q) {
        Ok(cd) => cd,
        Err(_) => {
            // x³ = −Q
            let root = real(T::from_rational(&-q, bits).cbrt());
            let zeta = primitive_cube_root_of_unity::<T>(bits);
            return [root.clone(), root.clone() * zeta.clone(), root * zeta.clone() * zeta];
        }
    };
    let delta = &c * &c - BigRational::from_integer(4.into()) * &d;
    let half = T::from_rational(&BigRational::new(1.into(), 2.into()), bits);
    let minus_c = T::from_rational(&-&c, bits);
    let alpha_cubed = if delta.is_negative() {
        let s = T::from_rational(&-&delta, bits).sqrt();
        Complex::new(minus_c * half.clone(), s * half)
    } else {
        // Take the branch where −c and ±√Δ add without cancelling.
        let s = T::from_rational(&delta, bits).sqrt();
        let s = if c.is_positive() { -s } else { s };
        real((minus_c + s) * half)
    };
    let omega = real(T::from_rational(&d, bits).cbrt());
    let alpha = complex_cbrt(&alpha_cubed);
    let beta = omega / alpha.clone();
    recombine_resolvent_roots(&alpha, &beta)
}

/// Multiplicity of the root `r` of `h`, read off the chain `h, gcd(h, h'), …`.
fn multiplicity(h: &RationalPolynomial, r: &Rational) -> u32 {
    let mut count = 0;
    let mut current = h.clone();
    while current.degree().is_some_and(|d| d > 0) && current.eval(r).is_zero() {
        count += 1;
        current = current.gcd(&current.derivative());
    }
    count
}

fn lift<T: RealScalar>(bits: u32) -> impl Fn(&Rational) -> Complex<T> {
    move |c| real(T::from_rational(c, bits))
}

fn modulus_sq<T: RealScalar>(z: &Complex<T>) -> T {
    z.re.clone() * z.re.clone() + z.im.clone() * z.im.clone()
}

/// Newton polishing on `h`, keeping a step only when it lowers `|h|`.
fn polish<T: RealScalar>(h: &RationalPolynomial, z: Complex<T>, bits: u32) -> Complex<T> {
    let dh = h.derivative();
    let mut z = z;
    let mut value = h.eval_with(&z, lift(bits));
    for _ in 0..newton_steps(bits) + 2 {
        if value.is_zero() {
            break;
        }
        let slope = dh.eval_with(&z, lift(bits));
        if slope.is_zero() {
            break;
        }
        let next = z.clone() - value.clone() / slope;
        let next_value = h.eval_with(&next, lift(bits));
        if modulus_sq(&next_value) < modulus_sq(&value) {
            z = next;
            value = next_value;
        } else {
            break;
        }
    }
    z
}

fn cmp_complex<T: RealScalar>(x: &Complex<T>, y: &Complex<T>) -> Ordering {
    x.re
        .partial_cmp(&y.re)
        .unwrap_or(Ordering::Equal)
        .then_with(|| x.im.partial_cmp(&y.im).unwrap_or(Ordering::Equal))
}

/// Solves `a3·y³ + a2·y² + a1·y + a0 = 0` at `precision_bits ≥ 64` bits.
pub fn solve_cubic(
    a3: &Rational,
    a2: &Rational,
    a1: &Rational,
    a0: &Rational,
    precision_bits: u32,
) -> Result<CubicRoots<BigFloat>> {
    if precision_bits < 64 {
        return Err(Error::PrecisionTooLow(precision_bits));
    }
    solve_cubic_in::<BigFloat>(a3, a2, a1, a0, precision_bits)
}

/// [`solve_cubic`] in an arbitrary real scalar type. Fixed-precision types
/// use their own mantissa width whatever `precision_bits` says.
pub fn solve_cubic_in<T: RealScalar>(
    a3: &Rational,
    a2: &Rational,
    a1: &Rational,
    a0: &Rational,
    precision_bits: u32,
) -> Result<CubicRoots<T>> {
    if a3.is_zero() {
        return Err(Error::NotCubic);
    }
    let precision = T::effective_precision(precision_bits);
    let residual_exponent = precision / 2;
    let original = Polynomial::new(vec![a0.clone(), a1.clone(), a2.clone(), a3.clone()]);
    let monic = original.monic();

    let mut exact_roots: Vec<ExactRoot> = rational_roots(&monic)?
        .into_iter()
        .map(|value| {
            let multiplicity = multiplicity(&monic, &value);
            ExactRoot { value, multiplicity }
        })
        .collect();
    exact_roots.sort_by(|x, y| x.value.cmp(&y.value));
    let exact_count: u32 = exact_roots.iter().map(|r| r.multiplicity).sum();

    let mut numeric_roots = Vec::new();
    if exact_count < 3 {
        let dep = depress_cubic(monic.coeffs().get(2).unwrap(), &monic.coeff(1), &monic.coeff(0));
        let mut working = T::effective_precision(precision + GUARD_BITS);
        let bound = T::from_rational(
            &BigRational::new(One::one(), num::BigInt::one() << residual_exponent),
            working,
        );
        let mut attempt = 0;
        loop {
            let shift = real(T::from_rational(&dep.shift, working));
            let mut candidates: Vec<Complex<T>> = depressed_roots::<T>(&dep.p, &dep.q, working)
                .into_iter()
                .map(|x| x - shift.clone())
                .collect();
            // Drop the approximation nearest to each exact root.
            for root in &exact_roots {
                let target = real(T::from_rational(&root.value, working));
                for _ in 0..root.multiplicity {
                    let nearest = candidates
                        .iter()
                        .enumerate()
                        .min_by(|(_, x), (_, y)| {
                            modulus_sq(&((*x).clone() - target.clone()))
                                .partial_cmp(&modulus_sq(&((*y).clone() - target.clone())))
                                .unwrap_or(Ordering::Equal)
                        })
                        .map(|(i, _)| i)
                        .expect("three candidates");
                    candidates.remove(nearest);
                }
            }
            let polished: Vec<Complex<T>> = candidates
                .into_iter()
                .map(|z| polish(&original, z, working))
                .map(|mut z| {
                    if z.im.abs() <= bound {
                        z.im = T::from_f64_like(0.0, &z.re);
                    }
                    z
                })
                .collect();
            let bound_sq = bound.clone() * bound.clone();
            let ok = polished
                .iter()
                .all(|z| modulus_sq(&original.eval_with(z, lift(working))) <= bound_sq);
            if ok {
                numeric_roots = polished;
                break;
            }
            attempt += 1;
            if attempt >= 3 || T::effective_precision(working * 2) == working {
                return Err(Error::CertificateFailed(format!(
                    "numeric roots of {original} miss the residual bound 2^-{residual_exponent}"
                )));
            }
            working = T::effective_precision(working * 2);
        }
        numeric_roots.sort_by(cmp_complex);
    }

    Ok(CubicRoots {
        exact_roots,
        numeric_roots,
        precision_bits: precision,
        residual_exponent,
    })
}
