//! Folding a parsed `cbrt(...)` body into `a + b√p`.

use denest_core::{normalize_surd, Error as CoreError, Integer, Rational};
use num::{One, Zero};

use crate::expr::RadicalExpr;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ShapeError {
    #[error("unsupported shape: two distinct radicands sqrt({0}) and sqrt({1})")]
    TwoRadicands(Integer, Integer),
    #[error("unsupported shape: {0}")]
    Unsupported(&'static str),
    #[error("{0}")]
    Core(#[from] CoreError),
}

/// What sits under the cube root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CubeRadicand {
    /// `a + b√p` with `b ≠ 0` and `p` squarefree.
    Surd { a: Rational, b: Rational, p: Integer },
    /// No square root survived the folding.
    Rational(Rational),
}

/// `a + b√p`; `p` is `None` while no square root has been seen.
#[derive(Debug, Clone)]
struct Affine {
    a: Rational,
    b: Rational,
    p: Option<Integer>,
}

impl Affine {
    fn rational(a: Rational) -> Affine {
        Affine { a, b: Rational::zero(), p: None }
    }

    fn common_radicand(&self, other: &Affine) -> Result<Option<Integer>, ShapeError> {
        match (&self.p, &other.p) {
            (Some(x), Some(y)) if x != y => Err(ShapeError::TwoRadicands(x.clone(), y.clone())),
            (Some(x), _) | (_, Some(x)) => Ok(Some(x.clone())),
            (None, None) => Ok(None),
        }
    }

    fn add(self, other: Affine) -> Result<Affine, ShapeError> {
        let p = self.common_radicand(&other)?;
        Ok(Affine { a: self.a + other.a, b: self.b + other.b, p })
    }

    fn neg(self) -> Affine {
        Affine { a: -self.a, b: -self.b, p: self.p }
    }

    fn mul(self, other: Affine) -> Result<Affine, ShapeError> {
        let p = self.common_radicand(&other)?;
        let pq = p.clone().map(Rational::from_integer).unwrap_or_else(Rational::one);
        Ok(Affine {
            a: &self.a * &other.a + &self.b * &other.b * pq,
            b: &self.a * &other.b + &self.b * &other.a,
            p,
        })
    }
}

fn fold(e: &RadicalExpr) -> Result<Affine, ShapeError> {
    match e {
        RadicalExpr::Lit(q) => Ok(Affine::rational(q.clone())),
        RadicalExpr::Neg(x) => Ok(fold(x)?.neg()),
        RadicalExpr::Add(l, r) => fold(l)?.add(fold(r)?),
        RadicalExpr::Sub(l, r) => fold(l)?.add(fold(r)?.neg()),
        RadicalExpr::Mul(l, r) => fold(l)?.mul(fold(r)?),
        RadicalExpr::Sqrt(x) => {
            let inner = fold(x)?;
            if !inner.b.is_zero() {
                return Err(ShapeError::Unsupported("nested sqrt"));
            }
            let s = normalize_surd(Rational::zero(), Rational::one(), inner.a)?;
            let p = s.radicand_integer();
            Ok(Affine { a: Rational::zero(), b: s.b().clone(), p: Some(p) })
        }
        RadicalExpr::Cbrt(_) => Err(ShapeError::Unsupported("nested cbrt")),
    }
}

/// Reads `cbrt(body)` with `body` an affine combination of `1` and a single
/// square root.
pub fn normalize_to_surd(e: &RadicalExpr) -> Result<CubeRadicand, ShapeError> {
    let RadicalExpr::Cbrt(body) = e else {
        return Err(ShapeError::Unsupported("expected cbrt(...) at the top level"));
    };
    let folded = fold(body)?;
    match folded.p {
        Some(p) if !folded.b.is_zero() => Ok(CubeRadicand::Surd { a: folded.a, b: folded.b, p }),
        _ => Ok(CubeRadicand::Rational(folded.a)),
    }
}
