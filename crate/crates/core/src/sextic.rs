//! Prime factorization over ℚ of `g(x) = x⁶ + cx³ + d`, `d ≠ 0`.
//!
//! With `Δ = c² − 4d` the six roots of `g` are `αζⁱ` and `βζⁱ` where `α³` and
//! `β³` are `(−c ± √Δ)/2`. When `√Δ ∈ ℚ` the factorization depends only on
//! which of `α³`, `β³` are rational cubes. Otherwise `g` is reducible iff
//! `∛d ∈ ℚ` and `R(x) = x³ − 3dx + cd` has a rational root; each rational root
//! `r` gives the quadratic factor `x² − (r/∛d)x + ∛d`.
//!
//! | row | condition                                | factors                              |
//! |-----|------------------------------------------|--------------------------------------|
//! | 1   | irreducible                              | `g`                                  |
//! | 2   | `√Δ ∈ ℚ`, `α, β ∉ ℚ`                     | `(x³ − α³)(x³ − β³)`                 |
//! | 3   | `√Δ ∈ ℚ`, `α ∈ ℚ`, `β ∉ ℚ`               | `(x − α)(x² + αx + α²)(x³ − β³)`     |
//! | 4   | `√Δ ∈ ℚ`, `α, β ∈ ℚ`                     | `(x − α)(x − β)(x² + αx + α²)(x² + βx + β²)` |
//! | 5   | `√Δ ∉ ℚ`, one rational root of `R`       | quadratic times quartic              |
//! | 6   | `√Δ ∉ ℚ`, three rational roots of `R`    | three quadratics                     |

use std::collections::BTreeSet;
use std::fmt;

use num::{BigRational, One, Zero};

use crate::arith::{rational_cube_root, rational_square_root};
use crate::error::{Error, Result};
use crate::poly::{rational_roots, Polynomial};
use crate::{Rational, RationalPolynomial};

/// Exact quantities the classification was based on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SexticEvidence {
    pub delta: Rational,
    pub sqrt_delta: Option<Rational>,
    pub cbrt_d: Option<Rational>,
    pub resolvent: RationalPolynomial,
    pub resolvent_roots: BTreeSet<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SexticFactorization {
    pub c: Rational,
    pub d: Rational,
    /// Row of the table above, 1 to 6.
    pub row: u8,
    /// Monic prime factors, repeated by multiplicity, sorted by
    /// [`Polynomial::canonical_cmp`].
    pub factors: Vec<RationalPolynomial>,
    pub evidence: SexticEvidence,
}

fn k(v: i64) -> Rational {
    BigRational::from_integer(v.into())
}

/// `x⁶ + cx³ + d`
pub fn sextic(c: &Rational, d: &Rational) -> RationalPolynomial {
    Polynomial::new(vec![d.clone(), k(0), k(0), c.clone(), k(0), k(0), k(1)])
}

/// `x − u`
fn linear(u: &Rational) -> RationalPolynomial {
    Polynomial::linear_from_root(u.clone())
}

/// `x² + ux + u²`
fn cyclotomic_quadratic(u: &Rational) -> RationalPolynomial {
    Polynomial::new(vec![u * u, u.clone(), k(1)])
}

/// `x³ − w`
fn pure_cubic(w: &Rational) -> RationalPolynomial {
    Polynomial::new(vec![-w.clone(), k(0), k(0), k(1)])
}

/// `x² − sx + t`
fn quadratic(s: &Rational, t: &Rational) -> RationalPolynomial {
    Polynomial::new(vec![t.clone(), -s.clone(), k(1)])
}

pub fn classify_sextic(c: &Rational, d: &Rational) -> Result<SexticFactorization> {
    if d.is_zero() {
        return Err(Error::DegenerateSextic);
    }
    let delta = c * c - k(4) * d;
    let sqrt_delta = rational_square_root(&delta);
    let cbrt_d = rational_cube_root(d);
    let resolvent = Polynomial::new(vec![c * d, -(k(3) * d), k(0), k(1)]);
    let resolvent_roots = match &cbrt_d {
        // x = ∛d·y turns R into y³ − 3∛d·y + c.
        Some(kd) => {
            let scaled = Polynomial::new(vec![c.clone(), -(k(3) * kd), k(0), k(1)]);
            rational_roots(&scaled)?.into_iter().map(|y| y * kd).collect()
        }
        None => rational_roots(&resolvent)?,
    };

    let (row, mut factors) = match (&sqrt_delta, &cbrt_d) {
        (Some(s), _) => {
            let half = BigRational::new(1.into(), 2.into());
            let alpha3 = (-c + s) * &half;
            let beta3 = (-c - s) * half;
            match (rational_cube_root(&alpha3), rational_cube_root(&beta3)) {
                (None, None) => (2, vec![pure_cubic(&alpha3), pure_cubic(&beta3)]),
                (Some(u), None) => (3, vec![linear(&u), cyclotomic_quadratic(&u), pure_cubic(&beta3)]),
                (None, Some(v)) => (3, vec![linear(&v), cyclotomic_quadratic(&v), pure_cubic(&alpha3)]),
                (Some(u), Some(v)) => (
                    4,
                    vec![linear(&u), linear(&v), cyclotomic_quadratic(&u), cyclotomic_quadratic(&v)],
                ),
            }
        }
        (None, None) => (1, vec![sextic(c, d)]),
        (None, Some(kd)) => match resolvent_roots.len() {
            0 => (1, vec![sextic(c, d)]),
            1 => {
                let r = resolvent_roots.iter().next().unwrap();
                let s = r / kd;
                let quartic = Polynomial::new(vec![kd * kd, kd * &s, &s * &s - kd, s.clone(), k(1)]);
                (5, vec![quadratic(&s, kd), quartic])
            }
            3 => (6, resolvent_roots.iter().map(|r| quadratic(&(r / kd), kd)).collect()),
            n => {
                return Err(Error::CertificateFailed(format!(
                    "resolvent {resolvent} has {n} distinct rational roots"
                )))
            }
        },
    };
    factors.sort_by(|x, y| x.canonical_cmp(y));

    let result = SexticFactorization {
        c: c.clone(),
        d: d.clone(),
        row,
        factors,
        evidence: SexticEvidence {
            delta,
            sqrt_delta,
            cbrt_d,
            resolvent,
            resolvent_roots,
        },
    };
    if expand_factors(&result) != sextic(c, d) {
        return Err(Error::CertificateFailed(format!("factors of {} do not multiply back", sextic(c, d))));
    }
    Ok(result)
}

/// Product of all factors.
pub fn expand_factors(f: &SexticFactorization) -> RationalPolynomial {
    f.factors
        .iter()
        .fold(Polynomial::constant(Rational::one()), |acc, p| &acc * p)
}

impl SexticFactorization {
    pub fn polynomial(&self) -> RationalPolynomial {
        sextic(&self.c, &self.d)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let text = |q: &Rational| serde_json::Value::String(q.to_string());
        let e = &self.evidence;
        serde_json::json!({
            "row": self.row,
            "factors": self.factors.iter().map(|f| f.to_json()).collect::<Vec<_>>(),
            "evidence": {
                "delta": text(&e.delta),
                "sqrt_delta": e.sqrt_delta.as_ref().map(text),
                "cbrt_d": e.cbrt_d.as_ref().map(text),
                "resolvent_roots": e.resolvent_roots.iter().map(text).collect::<Vec<_>>(),
            },
        })
    }
}

impl fmt::Display for SexticFactorization {
    /// `x^6 - 14*x^3 - 1 = (x^2 - 2*x - 1)(x^4 + 2*x^3 + 5*x^2 - 2*x + 1)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = ", self.polynomial())?;
        for factor in &self.factors {
            write!(f, "({factor})")?;
        }
        Ok(())
    }
}
