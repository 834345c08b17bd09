use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::ParamMonomial;
use super::poly::UniPoly;
use super::{Mode, Scalar, ScalarError};

/// Laurent polynomial in the parameters with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LaurentScalar {
    terms: BTreeMap<ParamMonomial, BigRational>,
}

impl LaurentScalar {
    pub fn from_monomial(m: ParamMonomial) -> Self {
        Self::term(BigRational::one(), m)
    }

    pub fn term(c: BigRational, m: ParamMonomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentScalar { terms }
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::from_monomial(ParamMonomial::q(e))
    }

    pub fn from_i64(c: i64) -> Self {
        Self::term(BigRational::from_integer(c.into()), ParamMonomial::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ParamMonomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest number of parameter slots used by any term.
    pub fn width(&self) -> usize {
        self.terms.keys().map(|m| m.width()).max().unwrap_or(0)
    }

    fn add_term(&mut self, m: ParamMonomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn scale_monomial(&self, m: &ParamMonomial) -> Self {
        LaurentScalar { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = out.mul_ref(self);
        }
        out
    }

    /// Splits a one-parameter value as `q^{-shift} · p(q)` with `p` a polynomial.
    pub fn to_q_poly(&self) -> Option<(UniPoly, i32)> {
        let mut min = 0;
        for m in self.terms.keys() {
            min = min.min(m.q_only()?);
        }
        let mut coeffs = Vec::new();
        for (m, c) in &self.terms {
            let d = (m.q_only()? - min) as usize;
            if coeffs.len() <= d {
                coeffs.resize(d + 1, BigRational::zero());
            }
            coeffs[d] = c.clone();
        }
        Some((UniPoly::from_coeffs(coeffs), -min))
    }

    /// The value `q^{-shift} · p(q)`.
    pub fn from_q_poly(p: &UniPoly, shift: i32) -> Self {
        let mut out = Self::zero();
        for (d, c) in p.coeffs().iter().enumerate() {
            out.add_term(ParamMonomial::q(d as i32 - shift), c.clone());
        }
        out
    }

    /// Renders with explicit parameter names, highest exponent vector first.
    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            let body = if m.is_one() {
                a.to_string()
            } else if a.is_one() {
                m.render(names)
            } else {
                format!("{}*{}", a, m.render(names))
            };
            match (i, neg) {
                (0, false) => out.push_str(&body),
                (0, true) => {
                    out.push('-');
                    out.push_str(&body)
                }
                (_, false) => {
                    out.push_str(" + ");
                    out.push_str(&body)
                }
                (_, true) => {
                    out.push_str(" - ");
                    out.push_str(&body)
                }
            }
        }
        out
    }
}

impl fmt::Display for LaurentScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

impl Zero for LaurentScalar {
    fn zero() -> Self {
        LaurentScalar { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentScalar {
    fn one() -> Self {
        Self::from_i64(1)
    }
}

impl Add for LaurentScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl Sub for LaurentScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl Mul for LaurentScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Neg for LaurentScalar {
    type Output = Self;
    fn neg(self) -> Self {
        LaurentScalar { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl Scalar for LaurentScalar {
    type Fraction = super::RationalFunction;
    const NAME: &'static str = "LaurentScalar";

    fn check_support(params: usize, mode: Mode) -> Result<(), ScalarError> {
        match mode {
            Mode::Generic => Ok(()),
            Mode::Cyclotomic(_) => Err(ScalarError::Unsupported { scalar: Self::NAME, params, mode }),
        }
    }

    fn embed(value: &LaurentScalar, _mode: Mode) -> Self {
        value.clone()
    }

    fn to_fraction(&self) -> super::RationalFunction {
        super::RationalFunction::embed(self, Mode::Generic)
    }

    fn as_monomial(&self) -> Option<(BigRational, ParamMonomial)> {
        if self.terms.len() == 1 {
            let (m, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), m.clone()))
        } else {
            None
        }
    }

    fn from_rational(c: BigRational) -> Self {
        Self::term(c, ParamMonomial::one())
    }

    fn add_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    fn sub_ref(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    fn to_laurent(&self) -> Option<LaurentScalar> {
        Some(self.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rendering_is_canonical() {
        let a = LaurentScalar::q_pow(2) - LaurentScalar::one();
        assert_eq!(a.to_string(), "q^2 - 1");
        let b = LaurentScalar::q_pow(-1) * LaurentScalar::from_i64(-3);
        assert_eq!(b.to_string(), "-3*q^-1");
        let half = LaurentScalar::from_rational(BigRational::new(1.into(), 2.into()));
        assert_eq!((half + LaurentScalar::from_monomial(ParamMonomial::param(1, 1))).to_string(), "t1 + 1/2");
        assert_eq!(LaurentScalar::zero().to_string(), "0");
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = LaurentScalar::q_pow(3) + LaurentScalar::one();
        let b = a.clone() - LaurentScalar::q_pow(3);
        assert_eq!(b, LaurentScalar::one());
        assert!((a.clone() - a).is_zero());
    }

    #[test]
    fn q_poly_round_trip() {
        let a = LaurentScalar::q_pow(-2) + LaurentScalar::from_i64(5) * LaurentScalar::q_pow(1);
        let (p, s) = a.to_q_poly().unwrap();
        assert_eq!(s, 2);
        assert_eq!(LaurentScalar::from_q_poly(&p, s), a);
    }
}
