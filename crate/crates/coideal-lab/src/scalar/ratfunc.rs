use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::ParamMonomial;
use super::poly::UniPoly;
use super::{FieldScalar, LaurentScalar, Mode, Scalar, ScalarError};

/// Element of `ℚ(q)` kept as `num/den` with `den` monic and coprime to `num`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: UniPoly,
    den: UniPoly,
}

impl RationalFunction {
    pub fn new(num: UniPoly, den: UniPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() { (num, den) } else { (num.divrem(&g).0, den.divrem(&g).0) };
        let l = den.lead().unwrap().clone();
        if !l.is_one() {
            let li = l.recip();
            num = num.scale(&li);
            den = den.scale(&li);
        }
        RationalFunction { num, den }
    }

    pub fn from_poly(p: UniPoly) -> Self {
        RationalFunction { num: p, den: UniPoly::one() }
    }

    pub fn numerator(&self) -> &UniPoly {
        &self.num
    }

    pub fn denominator(&self) -> &UniPoly {
        &self.den
    }

    /// Evaluates at a rational point that is not a pole.
    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_laurent() {
            Some(l) => write!(f, "{l}"),
            None => write!(
                f,
                "({})/({})",
                LaurentScalar::from_q_poly(&self.num, 0),
                LaurentScalar::from_q_poly(&self.den, 0)
            ),
        }
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        RationalFunction { num: UniPoly::zero(), den: UniPoly::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(UniPoly::one())
    }
}

impl Add for RationalFunction {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl Sub for RationalFunction {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl Mul for RationalFunction {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Neg for RationalFunction {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction { num: self.num.neg(), den: self.den }
    }
}

impl Scalar for RationalFunction {
    type Fraction = Self;
    const NAME: &'static str = "RationalFunction";

    fn check_support(params: usize, mode: Mode) -> Result<(), ScalarError> {
        if params <= 1 && mode == Mode::Generic {
            Ok(())
        } else {
            Err(ScalarError::Unsupported { scalar: Self::NAME, params, mode })
        }
    }

    fn embed(value: &LaurentScalar, _mode: Mode) -> Self {
        let (p, shift) = value.to_q_poly().expect("multiparameter value in a one-parameter field");
        Self::new(p, UniPoly::monomial(BigRational::one(), shift as usize))
    }

    fn to_fraction(&self) -> Self {
        self.clone()
    }

    fn as_monomial(&self) -> Option<(BigRational, ParamMonomial)> {
        let (c, a) = self.num.as_monomial()?;
        let (_, b) = self.den.as_monomial()?;
        Some((c, ParamMonomial::q(a as i32 - b as i32)))
    }

    fn from_rational(c: BigRational) -> Self {
        Self::from_poly(UniPoly::constant(c))
    }

    fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::new(self.num.add(&other.num), self.den.clone());
        }
        Self::new(self.num.mul(&other.den).add(&other.num.mul(&self.den)), self.den.mul(&other.den))
    }

    fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&-other.clone())
    }

    fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        Self::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    fn to_laurent(&self) -> Option<LaurentScalar> {
        let (c, d) = self.den.as_monomial()?;
        debug_assert!(c.is_one());
        Some(LaurentScalar::from_q_poly(&self.num, d as i32))
    }
}

impl FieldScalar for RationalFunction {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(l: LaurentScalar) -> RationalFunction {
        RationalFunction::embed(&l, Mode::Generic)
    }

    #[test]
    fn field_operations() {
        let a = rf(LaurentScalar::q_pow(2) - LaurentScalar::one());
        let b = rf(LaurentScalar::q_pow(1) + LaurentScalar::one());
        let c = a.div_ref(&b);
        assert_eq!(c, rf(LaurentScalar::q_pow(1) - LaurentScalar::one()));
        assert_eq!(b.inv().unwrap().mul_ref(&b), RationalFunction::one());
        assert_eq!(b.inv().unwrap().to_string(), "(1)/(q + 1)");
    }

    #[test]
    fn laurent_values_render_as_laurent() {
        let a = rf(LaurentScalar::q_pow(-2) * LaurentScalar::from_i64(-1));
        assert_eq!(a.to_string(), "-q^-2");
        let (c, m) = a.as_monomial().unwrap();
        assert_eq!(c, BigRational::from_integer((-1).into()));
        assert_eq!(m, ParamMonomial::q(-2));
    }
}
