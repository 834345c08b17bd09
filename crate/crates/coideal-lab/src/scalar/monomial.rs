use std::fmt;

use serde::{Deserialize, Serialize};

/// A monomial `q^e0 · t1^e1 · t2^e2 ...` with unit coefficient.
///
/// The exponent vector is stored without trailing zeros, so equal monomials
/// compare equal regardless of how many parameters were in scope.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ParamMonomial(Vec<i32>);

impl ParamMonomial {
    pub fn one() -> Self {
        ParamMonomial(Vec::new())
    }

    pub fn from_exponents(mut e: Vec<i32>) -> Self {
        while e.last() == Some(&0) {
            e.pop();
        }
        ParamMonomial(e)
    }

    /// `q^e`.
    pub fn q(e: i32) -> Self {
        Self::from_exponents(vec![e])
    }

    /// The `idx`-th parameter (0 is `q`) raised to `e`.
    pub fn param(idx: usize, e: i32) -> Self {
        let mut v = vec![0; idx + 1];
        v[idx] = e;
        Self::from_exponents(v)
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn exponent(&self, idx: usize) -> i32 {
        self.0.get(idx).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of parameter slots actually used.
    pub fn width(&self) -> usize {
        self.0.len()
    }

    /// The `q`-exponent when no multiparameter occurs.
    pub fn q_only(&self) -> Option<i32> {
        if self.0.len() <= 1 {
            Some(self.exponent(0))
        } else {
            None
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        Self::from_exponents((0..len).map(|i| self.exponent(i) + other.exponent(i)).collect())
    }

    pub fn inv(&self) -> Self {
        ParamMonomial(self.0.iter().map(|e| -e).collect())
    }

    pub fn pow(&self, k: i32) -> Self {
        Self::from_exponents(self.0.iter().map(|e| e * k).collect())
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }

    /// Renders with the given parameter names; index 0 is `q`.
    pub fn render(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = names.get(i).cloned().unwrap_or_else(|| default_name(i));
            if e == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    /// Parses strings such as `"q^-2*t1"` or `"1"` against a list of names.
    pub fn parse(s: &str, names: &[String]) -> Result<Self, String> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::one());
        }
        let mut e = vec![0i32; names.len()];
        for factor in s.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((n, x)) => {
                    let x = x.trim().trim_start_matches('(').trim_end_matches(')');
                    (n.trim(), x.parse::<i32>().map_err(|_| format!("bad exponent in {factor:?}"))?)
                }
                None => (factor, 1),
            };
            if name == "1" {
                continue;
            }
            let idx = names.iter().position(|n| n == name).ok_or_else(|| format!("unknown parameter {name:?}"))?;
            e[idx] += exp;
        }
        Ok(Self::from_exponents(e))
    }
}

/// Lexicographic on exponent vectors padded with zeros.
impl Ord for ParamMonomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let len = self.0.len().max(other.0.len());
        (0..len)
            .map(|i| self.exponent(i).cmp(&other.exponent(i)))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal)
    }
}

impl PartialOrd for ParamMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn default_name(i: usize) -> String {
    if i == 0 {
        "q".to_string()
    } else {
        format!("t{i}")
    }
}

impl fmt::Display for ParamMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names() -> Vec<String> {
        vec!["q".into(), "t1".into()]
    }

    #[test]
    fn parse_and_render_round_trip() {
        let m = ParamMonomial::parse("q^-2*t1", &names()).unwrap();
        assert_eq!(m.exponents(), &[-2, 1]);
        assert_eq!(m.render(&names()), "q^-2*t1");
        assert_eq!(ParamMonomial::parse("1", &names()).unwrap(), ParamMonomial::one());
        assert_eq!(ParamMonomial::parse("t1^-1", &names()).unwrap().to_string(), "t1^-1");
        assert!(ParamMonomial::parse("z", &names()).is_err());
    }

    #[test]
    fn group_laws() {
        let a = ParamMonomial::from_exponents(vec![3, -1]);
        let b = ParamMonomial::q(-3);
        assert_eq!(a.mul(&b), ParamMonomial::param(1, -1));
        assert!(a.mul(&a.inv()).is_one());
        assert_eq!(a.pow(2), a.mul(&a));
    }
}
