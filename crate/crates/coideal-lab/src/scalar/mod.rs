//! Exact scalars.
//!
//! Three implementations of [`Scalar`] are provided:
//!
//! * [`LaurentScalar`]: Laurent polynomials with rational coefficients in `q`
//!   and any number of extra multiparameters `t1, t2, ...`.
//! * [`CyclotomicScalar`]: `ℚ[q]/(Φ_t(q))`, a field, used when `q` is a
//!   primitive `t`-th root of unity.
//! * [`RationalFunction`]: the field `ℚ(q)`, used for exact linear algebra
//!   over one-parameter data.

mod cyclotomic;
mod laurent;
mod monomial;
pub mod poly;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

pub use cyclotomic::CyclotomicScalar;
pub use laurent::LaurentScalar;
pub use monomial::ParamMonomial;
pub use ratfunc::RationalFunction;

/// Whether `q` is generic or a primitive root of unity of order `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Mode {
    #[default]
    Generic,
    Cyclotomic(u32),
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Generic => write!(f, "generic"),
            Mode::Cyclotomic(t) => write!(f, "cyclotomic(t={t})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("{scalar} cannot represent {params} parameter(s) in {mode} mode")]
    Unsupported { scalar: &'static str, params: usize, mode: Mode },
    #[error("cyclotomic order must exceed 4, got {0}")]
    SmallOrder(u32),
}

/// An exact coefficient ring the shuffle engine can compute over.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// A field containing this ring, used for linear algebra.
    type Fraction: FieldScalar;

    /// Short name used in error messages.
    const NAME: &'static str;

    /// Checks that values with `params` parameters (including `q`) in `mode`
    /// can be embedded.
    fn check_support(params: usize, mode: Mode) -> Result<(), ScalarError>;

    /// Embeds a Laurent polynomial. Callers must have passed
    /// [`Scalar::check_support`].
    fn embed(value: &LaurentScalar, mode: Mode) -> Self;

    fn to_fraction(&self) -> Self::Fraction;

    /// Returns `(c, m)` when the value is the single term `c·m` with `c ≠ 0`.
    fn as_monomial(&self) -> Option<(BigRational, ParamMonomial)>;

    fn from_monomial(m: &ParamMonomial, mode: Mode) -> Self {
        Self::embed(&LaurentScalar::from_monomial(m.clone()), mode)
    }

    fn from_rational(c: BigRational) -> Self;

    fn from_i64(c: i64) -> Self {
        Self::from_rational(BigRational::from_integer(c.into()))
    }

    fn add_ref(&self, other: &Self) -> Self {
        self.clone() + other.clone()
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.clone() - other.clone()
    }

    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other.clone()
    }

    /// Laurent representative used for rendering and comparisons with
    /// closed-form coefficients, when one exists.
    fn to_laurent(&self) -> Option<LaurentScalar>;
}

/// A [`Scalar`] in which every nonzero element is invertible.
pub trait FieldScalar: Scalar<Fraction = Self> {
    fn inv(&self) -> Option<Self>;

    fn div_ref(&self, other: &Self) -> Self {
        self.mul_ref(&other.inv().expect("division by zero"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i32) -> LaurentScalar {
        LaurentScalar::q_pow(e)
    }

    #[test]
    fn embeddings_agree_on_products() {
        let a = q(2) - LaurentScalar::one();
        let b = q(-1) + LaurentScalar::from_i64(3);
        let ab = a.clone() * b.clone();
        let fa = RationalFunction::embed(&a, Mode::Generic);
        let fb = RationalFunction::embed(&b, Mode::Generic);
        assert_eq!(fa * fb, RationalFunction::embed(&ab, Mode::Generic));
        let m = Mode::Cyclotomic(7);
        let ca = CyclotomicScalar::embed(&a, m);
        let cb = CyclotomicScalar::embed(&b, m);
        assert_eq!(ca * cb, CyclotomicScalar::embed(&ab, m));
    }

    #[test]
    fn support_checks() {
        assert!(LaurentScalar::check_support(3, Mode::Generic).is_ok());
        assert!(LaurentScalar::check_support(1, Mode::Cyclotomic(5)).is_err());
        assert!(RationalFunction::check_support(2, Mode::Generic).is_err());
        assert!(CyclotomicScalar::check_support(1, Mode::Cyclotomic(4)).is_err());
        assert!(CyclotomicScalar::check_support(1, Mode::Cyclotomic(5)).is_ok());
    }
}
