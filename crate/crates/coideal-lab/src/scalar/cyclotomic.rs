use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::ParamMonomial;
use super::poly::{cyclotomic_polynomial, UniPoly};
use super::{FieldScalar, LaurentScalar, Mode, Scalar, ScalarError};

/// Element of `ℚ[q]/(Φ_t(q))`, stored as its reduced representative.
///
/// Rational constants created through [`Zero`], [`One`] or
/// [`Scalar::from_rational`] carry `t = 0` until they meet a value with a
/// definite order. Equality compares representatives only.
#[derive(Clone, Debug)]
pub struct CyclotomicScalar {
    t: u32,
    rep: UniPoly,
}

impl PartialEq for CyclotomicScalar {
    fn eq(&self, other: &Self) -> bool {
        self.rep == other.rep
    }
}

impl Eq for CyclotomicScalar {}

impl std::hash::Hash for CyclotomicScalar {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.rep.hash(state)
    }
}

impl CyclotomicScalar {
    pub fn new(t: u32, p: UniPoly) -> Self {
        let rep = if t == 0 { p } else { p.rem(&cyclotomic_polynomial(t)) };
        CyclotomicScalar { t, rep }
    }

    /// The primitive root `q` itself.
    pub fn q(t: u32) -> Self {
        Self::new(t, UniPoly::monomial(BigRational::one(), 1))
    }

    pub fn order(&self) -> u32 {
        self.t
    }

    pub fn representative(&self) -> &UniPoly {
        &self.rep
    }

    fn unify(a: u32, b: u32) -> u32 {
        match (a, b) {
            (0, x) | (x, 0) => x,
            (x, y) => {
                assert_eq!(x, y, "mixing different cyclotomic orders");
                x
            }
        }
    }

    fn q_power_poly(t: u32, e: i64) -> UniPoly {
        let r = e.rem_euclid(t as i64) as usize;
        UniPoly::monomial(BigRational::one(), r)
    }
}

impl fmt::Display for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", LaurentScalar::from_q_poly(&self.rep, 0))
    }
}

impl Zero for CyclotomicScalar {
    fn zero() -> Self {
        CyclotomicScalar { t: 0, rep: UniPoly::zero() }
    }
    fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }
}

impl One for CyclotomicScalar {
    fn one() -> Self {
        CyclotomicScalar { t: 0, rep: UniPoly::one() }
    }
}

impl Add for CyclotomicScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl Sub for CyclotomicScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl Mul for CyclotomicScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Neg for CyclotomicScalar {
    type Output = Self;
    fn neg(self) -> Self {
        CyclotomicScalar { t: self.t, rep: self.rep.neg() }
    }
}

impl Scalar for CyclotomicScalar {
    type Fraction = Self;
    const NAME: &'static str = "CyclotomicScalar";

    fn check_support(params: usize, mode: Mode) -> Result<(), ScalarError> {
        match mode {
            Mode::Cyclotomic(t) if t <= 4 => Err(ScalarError::SmallOrder(t)),
            Mode::Cyclotomic(_) if params <= 1 => Ok(()),
            _ => Err(ScalarError::Unsupported { scalar: Self::NAME, params, mode }),
        }
    }

    fn embed(value: &LaurentScalar, mode: Mode) -> Self {
        let Mode::Cyclotomic(t) = mode else {
            panic!("cyclotomic embedding requires cyclotomic mode");
        };
        let (p, shift) = value.to_q_poly().expect("multiparameter value in cyclotomic mode");
        Self::new(t, p.mul(&Self::q_power_poly(t, -(shift as i64))))
    }

    fn to_fraction(&self) -> Self {
        self.clone()
    }

    fn as_monomial(&self) -> Option<(BigRational, ParamMonomial)> {
        if self.rep.is_zero() {
            return None;
        }
        if self.t == 0 {
            return self.rep.as_monomial().filter(|(_, d)| *d == 0).map(|(c, _)| (c, ParamMonomial::one()));
        }
        for e in 0..self.t {
            let shifted = Self::new(self.t, self.rep.mul(&Self::q_power_poly(self.t, -(e as i64))));
            if shifted.rep.degree() == Some(0) {
                return Some((shifted.rep.coeff(0), ParamMonomial::q(e as i32)));
            }
        }
        None
    }

    fn from_rational(c: BigRational) -> Self {
        CyclotomicScalar { t: 0, rep: UniPoly::constant(c) }
    }

    fn add_ref(&self, other: &Self) -> Self {
        CyclotomicScalar { t: Self::unify(self.t, other.t), rep: self.rep.add(&other.rep) }
    }

    fn sub_ref(&self, other: &Self) -> Self {
        CyclotomicScalar { t: Self::unify(self.t, other.t), rep: self.rep.sub(&other.rep) }
    }

    fn mul_ref(&self, other: &Self) -> Self {
        Self::new(Self::unify(self.t, other.t), self.rep.mul(&other.rep))
    }

    fn to_laurent(&self) -> Option<LaurentScalar> {
        Some(LaurentScalar::from_q_poly(&self.rep, 0))
    }
}

impl FieldScalar for CyclotomicScalar {
    fn inv(&self) -> Option<Self> {
        if self.rep.is_zero() {
            return None;
        }
        if self.t == 0 {
            let c = self.rep.coeff(0);
            return Some(Self::from_rational(c.recip()));
        }
        let (g, s, _) = self.rep.ext_gcd(&cyclotomic_polynomial(self.t));
        debug_assert!(g.is_one());
        Some(Self::new(self.t, s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_has_the_right_order() {
        let q = CyclotomicScalar::q(5);
        let mut p = CyclotomicScalar::one();
        for i in 1..=5 {
            p = p.mul_ref(&q);
            assert_eq!(p.is_one(), i == 5);
        }
        let q4 = CyclotomicScalar::embed(&LaurentScalar::q_pow(-1), Mode::Cyclotomic(5));
        assert_eq!(q4.mul_ref(&q), CyclotomicScalar::one());
        assert_eq!(q4.as_monomial().unwrap().1, ParamMonomial::q(4));
    }

    #[test]
    fn inverses() {
        let m = Mode::Cyclotomic(7);
        let a = CyclotomicScalar::embed(&(LaurentScalar::q_pow(2) - LaurentScalar::one()), m);
        assert_eq!(a.inv().unwrap().mul_ref(&a), CyclotomicScalar::one());
        let s = (0..5).fold(CyclotomicScalar::zero(), |acc, e| {
            acc + CyclotomicScalar::embed(&LaurentScalar::q_pow(e), Mode::Cyclotomic(5))
        });
        assert!(s.is_zero());
    }
}
