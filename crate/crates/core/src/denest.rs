//! Denesting of `∛(a + b√p)` into `A + B√p`.
//!
//! With `N = a² − b²p`, the radical denests in ℚ(√p) exactly when `N` is a
//! rational cube and `R(x) = x³ − 3Nx − 2aN` has a rational root `r`. That
//! root is then unique and
//!
//! ```text
//! A = r / (2∛N),   B = b·∛N² / (r² − N).
//! ```
//!
//! Every denesting is cubed back before it is returned.

use std::fmt;

use num::{BigRational, One, Signed, Zero};

use crate::arith::rational_cube_root;
use crate::error::{Error, Result};
use crate::poly::{rational_roots, Polynomial};
use crate::quad::{cube_surd, QuadSurd};
use crate::{Integer, Rational, RationalPolynomial, SurdElement};

/// A successful denesting together with its certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Denesting {
    /// The radicand `a + b√p` in canonical form.
    pub input: SurdElement,
    /// `A`
    pub rational: Rational,
    /// `B`
    pub coefficient: Rational,
    /// `p`, squarefree.
    pub radicand: Integer,
    /// `N = a² − b²p`
    pub norm: Rational,
    /// `∛N`
    pub norm_cbrt: Rational,
    /// The rational root `r` of the resolvent.
    pub resolvent_root: Rational,
    /// `x² − (r/∛N)x + ∛N`
    pub min_poly: RationalPolynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DenestVerdict {
    Denested(Box<Denesting>),
    NotACube {
        radicand: Integer,
        norm: Rational,
    },
    ResolventIrreducible {
        radicand: Integer,
        norm: Rational,
        norm_cbrt: Rational,
        resolvent: RationalPolynomial,
    },
}

/// `R(x) = x³ − 3Nx − 2aN`
pub fn build_resolvent(a: &Rational, norm: &Rational) -> RationalPolynomial {
    let two = BigRational::from_integer(2.into());
    let three = BigRational::from_integer(3.into());
    Polynomial::new(vec![-(two * a * norm), -(three * norm), Rational::zero(), Rational::one()])
}

/// Decides whether `∛(a + b√p_raw)` denests and returns `A`, `B` if so.
pub fn denest(a: Rational, b: Rational, p_raw: Rational) -> Result<DenestVerdict> {
    if b.is_zero() {
        return Err(Error::NotNested);
    }
    let surd = QuadSurd::new(a, b, p_raw)?;
    denest_expression(&surd)
}

/// [`denest`] on an element that is already canonical.
pub fn denest_expression(e: &SurdElement) -> Result<DenestVerdict> {
    let (a, b, p) = (e.a(), e.b(), e.radicand_integer());
    if b.is_zero() {
        return Err(Error::NotNested);
    }
    let norm = e.norm();
    if norm.is_zero() {
        return Err(Error::CertificateFailed("N = 0 although p is not a square".into()));
    }
    let Some(norm_cbrt) = rational_cube_root(&norm) else {
        return Ok(DenestVerdict::NotACube { radicand: p, norm });
    };
    let resolvent = build_resolvent(a, &norm);
    // x = ∛N·y turns R into y³ − 3∛N·y − 2a, with far smaller coefficients.
    let two = BigRational::from_integer(2.into());
    let three = BigRational::from_integer(3.into());
    let scaled = Polynomial::new(vec![-(&two * a), -(three * &norm_cbrt), Rational::zero(), Rational::one()]);
    let roots = rational_roots(&scaled)?;
    let mut roots = roots.into_iter().map(|y| y * &norm_cbrt);
    let Some(r) = roots.next() else {
        return Ok(DenestVerdict::ResolventIrreducible {
            radicand: p,
            norm,
            norm_cbrt,
            resolvent,
        });
    };
    if roots.next().is_some() {
        return Err(Error::CertificateFailed(format!("{resolvent} has several rational roots")));
    }

    // Work with |b| and restore the sign through conjugation.
    let b_abs = b.abs();
    let big_a = &r / (two * &norm_cbrt);
    let mut big_b = b_abs * &norm_cbrt * &norm_cbrt / (&r * &r - &norm);
    if b.is_negative() {
        big_b = -big_b;
    }
    let min_poly = Polynomial::new(vec![norm_cbrt.clone(), -(&r / &norm_cbrt), Rational::one()]);
    let denesting = Denesting {
        input: e.clone(),
        rational: big_a,
        coefficient: big_b,
        radicand: p,
        norm,
        norm_cbrt,
        resolvent_root: r,
        min_poly,
    };
    if !certificate_identities(&denesting, a, b, &denesting.radicand) || !s_identity(&denesting, a) {
        return Err(Error::CertificateFailed(format!("denesting of cbrt({e}) does not verify")));
    }
    Ok(DenestVerdict::Denested(Box::new(denesting)))
}

/// The exact checks every denesting must pass:
///
/// 1. `r³ − 3Nr − 2aN = 0`
/// 2. `r⁶ − 6Nr⁴ + 9N²r² − 4N²a² = 0`
/// 3. `r² − N > 0`
/// 4. `(A + B√p)³ = a + b√p`
pub fn certificate_identities(d: &Denesting, a: &Rational, b: &Rational, p: &Integer) -> bool {
    let r = &d.resolvent_root;
    let n = &d.norm;
    let k = |v: i64| BigRational::from_integer(v.into());
    let r2 = r * r;
    let n2 = n * n;
    let first = (&r2 * r - k(3) * n * r - k(2) * a * n).is_zero();
    let second = (&r2 * &r2 * &r2 - k(6) * n * &r2 * &r2 + k(9) * &n2 * &r2 - k(4) * &n2 * a * a).is_zero();
    let third = (&r2 - n).is_positive();
    let fourth = cube_surd(&d.rational, &d.coefficient, p) == (a.clone(), b.clone());
    first && second && third && fourth
}

/// `s = r² − 2N` is a root of `S(x) = x³ − 3N²x + 2N³ − 4N²a²`.
pub fn s_identity(d: &Denesting, a: &Rational) -> bool {
    let n = &d.norm;
    let r = &d.resolvent_root;
    let k = |v: i64| BigRational::from_integer(v.into());
    let n2 = n * n;
    let s_poly = Polynomial::new(vec![
        k(2) * &n2 * n - k(4) * &n2 * a * a,
        -(k(3) * &n2),
        Rational::zero(),
        Rational::one(),
    ]);
    s_poly.eval(&(r * r - k(2) * n)).is_zero()
}

impl Denesting {
    pub fn as_surd(&self) -> SurdElement {
        QuadSurd::from_parts(
            self.rational.clone(),
            self.coefficient.clone(),
            BigRational::from_integer(self.radicand.clone()),
        )
    }
}

impl fmt::Display for Denesting {
    /// `1 + sqrt(2)`, `-1/2 - 3*sqrt(5)`, `sqrt(3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let leading = self.rational.is_zero();
        if !leading {
            write!(f, "{}", self.rational)?;
        }
        crate::quad::write_surd_term(f, &self.coefficient, &self.radicand, leading)
    }
}

impl DenestVerdict {
    pub fn is_denestable(&self) -> bool {
        matches!(self, DenestVerdict::Denested(_))
    }

    pub fn norm(&self) -> &Rational {
        match self {
            DenestVerdict::Denested(d) => &d.norm,
            DenestVerdict::NotACube { norm, .. } | DenestVerdict::ResolventIrreducible { norm, .. } => norm,
        }
    }

    pub fn radicand(&self) -> &Integer {
        match self {
            DenestVerdict::Denested(d) => &d.radicand,
            DenestVerdict::NotACube { radicand, .. } | DenestVerdict::ResolventIrreducible { radicand, .. } => {
                radicand
            }
        }
    }

    /// Why the radical does not denest, if it does not.
    pub fn reason(&self) -> Option<String> {
        match self {
            DenestVerdict::Denested(_) => None,
            DenestVerdict::NotACube { norm, .. } => Some(format!("N = {norm} is not a rational cube")),
            DenestVerdict::ResolventIrreducible { resolvent, .. } => {
                Some(format!("resolvent {resolvent} has no rational root"))
            }
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let text = |q: &Rational| serde_json::Value::String(q.to_string());
        match self {
            DenestVerdict::Denested(d) => serde_json::json!({
                "denestable": true,
                "A": text(&d.rational),
                "B": text(&d.coefficient),
                "p": d.radicand.to_string(),
                "N": text(&d.norm),
                "r": text(&d.resolvent_root),
                "min_poly": d.min_poly.to_json(),
                "reason": null,
            }),
            _ => serde_json::json!({
                "denestable": false,
                "A": null,
                "B": null,
                "p": self.radicand().to_string(),
                "N": text(self.norm()),
                "r": null,
                "min_poly": null,
                "reason": self.reason(),
            }),
        }
    }
}

impl fmt::Display for DenestVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DenestVerdict::Denested(d) => write!(f, "{d}"),
            _ => write!(f, "not denestable: {}", self.reason().unwrap_or_default()),
        }
    }
}
