//! Exact denesting of cubic radicals `∛(a + b√p)`, factorization of the
//! sextic trinomials `x⁶ + cx³ + d` over ℚ and cubic solving through their
//! resolvent.
//!
//! ```
//! use denest_core::{denest, rational_from_i64, DenestVerdict};
//!
//! let q = |n| rational_from_i64(n, 1).unwrap();
//! match denest(q(7), q(5), q(2)).unwrap() {
//!     DenestVerdict::Denested(d) => assert_eq!(d.to_string(), "1 + sqrt(2)"),
//!     other => panic!("{other:?}"),
//! }
//! ```

pub mod arith;
pub mod cubic;
pub mod denest;
pub mod error;
pub mod poly;
pub mod quad;
pub mod scalar;
pub mod sextic;

pub use arith::{
    divisors, integer_cube_root, integer_square_root, is_rational_cube, is_rational_square, normalize_rational,
    parse_integer, parse_rational, rational_cube_root, rational_from_i64, rational_square_root,
    squarefree_decomposition,
};
pub use cubic::{solve_cubic, solve_cubic_in, CubicRoots, ExactRoot};
pub use denest::{build_resolvent, certificate_identities, denest, denest_expression, Denesting, DenestVerdict};
pub use error::{Error, Result};
pub use poly::{classify_real_roots, cubic_delta, depress_cubic, rational_roots, Polynomial, RealRootStructure};
pub use quad::{cube_surd, normalize_surd, QuadSurd};
pub use scalar::{BigFloat, RealScalar};
pub use sextic::{classify_sextic, expand_factors, SexticEvidence, SexticFactorization};

pub type Integer = num::BigInt;
pub type Rational = num::BigRational;
pub type RationalPolynomial = Polynomial<Rational>;
pub type SurdElement = QuadSurd<Rational>;
pub type HighPrecisionRoots = CubicRoots<BigFloat>;
