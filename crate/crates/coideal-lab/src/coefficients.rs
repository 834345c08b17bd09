//! The bicharacter `p(·,·)` and closed-form scalar coefficients.
//!
//! All index arguments are extended indices in `1..=2n`, with
//! `x_{n+r} = x_{n-r+1}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{LaurentScalar, ParamMonomial};
use crate::words::{letter_of, psi_raw, Constitution};

/// Diagonal braiding data of type B_n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter {
    n: usize,
    names: Vec<String>,
    p: Vec<Vec<ParamMonomial>>,
    q: ParamMonomial,
}

#[derive(Serialize, Deserialize)]
struct BicharacterDoc {
    n: usize,
    #[serde(default)]
    parameters: Vec<String>,
    matrix: Vec<Vec<String>>,
}

impl Bicharacter {
    /// The one-parameter solution: `p_ii = q²` (`i < n`), `p_nn = q`,
    /// `p_{i,i+1} = q^{-2}`, all other entries 1.
    pub fn default_for(n: usize) -> Self {
        assert!(n >= 1, "rank must be positive");
        let mut p = vec![vec![ParamMonomial::one(); n]; n];
        for (i, row) in p.iter_mut().enumerate() {
            row[i] = ParamMonomial::q(if i + 1 == n { 1 } else { 2 });
            if i + 1 < n {
                row[i + 1] = ParamMonomial::q(-2);
            }
        }
        Self::new(n, vec!["q".into()], p).expect("default bicharacter is valid")
    }

    /// A bicharacter with one free multiparameter `t_ij` for every pair
    /// `i < j`: `p_ij = t_ij·p⁰_ij`, `p_ji = t_ij^{-1}`.
    pub fn with_free_parameters(n: usize) -> Self {
        let base = Self::default_for(n);
        let mut names = vec!["q".to_string()];
        let mut p = base.p.clone();
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        for (i, j) in pairs {
            let idx = names.len();
            names.push(format!("t{idx}"));
            p[i][j] = p[i][j].mul(&ParamMonomial::param(idx, 1));
            p[j][i] = p[j][i].mul(&ParamMonomial::param(idx, -1));
        }
        Self::new(n, names, p).expect("free-parameter bicharacter is valid")
    }

    /// Builds and validates a bicharacter. Index 0 of `names` must be `q`.
    pub fn new(n: usize, names: Vec<String>, p: Vec<Vec<ParamMonomial>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidBicharacter("rank must be positive".into()));
        }
        if p.len() != n || p.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidBicharacter(format!("matrix must be {n}×{n}")));
        }
        if names.first().map(String::as_str) != Some("q") {
            return Err(Error::InvalidBicharacter("first parameter must be q".into()));
        }
        let bc = Bicharacter { n, names, p, q: ParamMonomial::q(1) };
        bc.validate()?;
        Ok(bc)
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        let q = |e| ParamMonomial::q(e);
        let bad = |msg: String| Err(Error::InvalidBicharacter(msg));
        for i in 0..n {
            let want = if i + 1 == n { q(1) } else { q(2) };
            if self.p[i][i] != want {
                return bad(format!("p_{0}{0} = {1}, expected {2}", i + 1, self.p[i][i], want));
            }
            for j in i + 1..n {
                let prod = self.p[i][j].mul(&self.p[j][i]);
                let want = if j == i + 1 { q(-2) } else { ParamMonomial::one() };
                if prod != want {
                    return bad(format!("p_{0}{1}·p_{1}{0} = {2}, expected {3}", i + 1, j + 1, prod, want));
                }
            }
        }
        Ok(())
    }

    /// Loads `{n, parameters: [names], matrix: [[monomial strings]]}`.
    /// `q` is implicit if absent from `parameters`.
    pub fn from_json(s: &str) -> Result<Self> {
        let doc: BicharacterDoc = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut names = doc.parameters;
        if !names.iter().any(|x| x == "q") {
            names.insert(0, "q".into());
        } else if names[0] != "q" {
            let i = names.iter().position(|x| x == "q").unwrap();
            let qn = names.remove(i);
            names.insert(0, qn);
        }
        let p = doc
            .matrix
            .iter()
            .map(|row| row.iter().map(|s| ParamMonomial::parse(s, &names)).collect::<std::result::Result<Vec<_>, _>>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(Error::Parse)?;
        Self::new(doc.n, names, p)
    }

    pub fn to_json(&self) -> String {
        let doc = BicharacterDoc {
            n: self.n,
            parameters: self.names.clone(),
            matrix: self.p.iter().map(|r| r.iter().map(|m| m.render(&self.names)).collect()).collect(),
        };
        serde_json::to_string(&doc).expect("serializable")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Number of parameters including `q`.
    pub fn param_count(&self) -> usize {
        self.names.len()
    }

    pub fn q(&self) -> &ParamMonomial {
        &self.q
    }

    /// `p_ij` on extended indices.
    pub fn p(&self, i: usize, j: usize) -> &ParamMonomial {
        &self.p[letter_of(self.n, i) - 1][letter_of(self.n, j) - 1]
    }

    pub fn render(&self, s: &LaurentScalar) -> String {
        s.render(&self.names)
    }
}

/// `p(u,v) = ∏ p_ij^{u_i v_j}`.
pub fn p_eval(bc: &Bicharacter, u: &Constitution, v: &Constitution) -> ParamMonomial {
    let mut out = ParamMonomial::one();
    for (i, &a) in u.0.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in v.0.iter().enumerate() {
            if b != 0 {
                out = out.mul(&bc.p[i][j].pow((a * b) as i32));
            }
        }
    }
    out
}

fn check(n: usize, k: usize, m: usize) -> Result<()> {
    if k == 0 || k > m || m > 2 * n {
        return Err(Error::IndexOutOfRange(format!("({k},{m}) with n = {n}")));
    }
    Ok(())
}

fn q(e: i32) -> LaurentScalar {
    LaurentScalar::q_pow(e)
}

/// σ_k^m = p(u(k,m), u(k,m)).
pub fn sigma(bc: &Bicharacter, k: usize, m: usize) -> Result<LaurentScalar> {
    let n = bc.n;
    check(n, k, m)?;
    Ok(if m == n || k == n + 1 {
        q(1)
    } else if m == psi_raw(n, k) {
        q(4)
    } else {
        q(2)
    })
}

/// μ_k^{m,i} = p(u(k,i), u(1+i,m))·p(u(1+i,m), u(k,i)) in closed form.
pub fn mu(bc: &Bicharacter, k: usize, m: usize, i: usize) -> Result<LaurentScalar> {
    let n = bc.n;
    check(n, k, m)?;
    if i < k || i >= m {
        return Err(Error::IndexOutOfRange(format!("mu({k},{m},{i})")));
    }
    let pk = psi_raw(n, k);
    Ok(if m < pk {
        if m > n && i == psi_raw(n, m) - 1 {
            q(-4)
        } else if i == n {
            q(0)
        } else {
            q(-2)
        }
    } else if m == pk {
        if i == n {
            q(2)
        } else {
            q(0)
        }
    } else if k <= n && i == pk {
        q(-4)
    } else if i == n {
        q(0)
    } else {
        q(-2)
    })
}

/// Brute-force μ as a product of bicharacter values.
pub fn mu_bruteforce(bc: &Bicharacter, k: usize, m: usize, i: usize) -> ParamMonomial {
    let n = bc.n;
    let a = Constitution::interval(n, k, i);
    let b = Constitution::interval(n, i + 1, m);
    p_eval(bc, &a, &b).mul(&p_eval(bc, &b, &a))
}

/// Brute-force σ as the product of `p_st` over `k ≤ s,t ≤ m`.
pub fn sigma_bruteforce(bc: &Bicharacter, k: usize, m: usize) -> ParamMonomial {
    let mut out = ParamMonomial::one();
    for s in k..=m {
        for t in k..=m {
            out = out.mul(bc.p(s, t));
        }
    }
    out
}

/// ε_k^m: 1 if `m ≤ n` or `k > n`; `q^{-3}` if `m = ψ(k)`; `q^{-1}` otherwise.
pub fn epsilon(n: usize, k: usize, m: usize) -> Result<LaurentScalar> {
    check(n, k, m)?;
    Ok(if m <= n || k > n {
        q(0)
    } else if m == psi_raw(n, k) {
        q(-3)
    } else {
        q(-1)
    })
}

/// τ_n = q, τ_i = 1 otherwise (extended indices).
pub fn tau(n: usize, i: usize) -> Result<LaurentScalar> {
    if i == 0 || i > 2 * n {
        return Err(Error::IndexOutOfRange(format!("tau({i})")));
    }
    Ok(if i == n { q(1) } else { q(0) })
}

/// α_k^m = ε_k^m (q²−1)^{m−k} ∏_{k≤i<j≤m} p_ij, the scalar with
/// `u[k,m] = α_k^m · (x_m ... x_k)` in the shuffle algebra.
pub fn alpha_shuffle(bc: &Bicharacter, k: usize, m: usize) -> Result<LaurentScalar> {
    let n = bc.n;
    let eps = epsilon(n, k, m)?;
    let mut prod = ParamMonomial::one();
    for i in k..=m {
        for j in i + 1..=m {
            prod = prod.mul(bc.p(i, j));
        }
    }
    let base = q(2) - q(0);
    Ok(eps * base.pow((m - k) as u32) * LaurentScalar::from_monomial(prod))
}

/// α_{km}^s = τ_s · p(u(1+s,m), u(k,s))^{-1}, a monomial.
pub fn alpha_kms(bc: &Bicharacter, k: usize, m: usize, s: usize) -> Result<LaurentScalar> {
    let n = bc.n;
    check(n, k, m)?;
    if s < k || s >= m {
        return Err(Error::IndexOutOfRange(format!("alpha({k},{m},{s})")));
    }
    let a = Constitution::interval(n, s + 1, m);
    let b = Constitution::interval(n, k, s);
    Ok(tau(n, s)? * LaurentScalar::from_monomial(p_eval(bc, &a, &b).inv()))
}

/// ∏_{m≥i>j≥k} p_ij^{-1}.
pub fn descending_product_inv(bc: &Bicharacter, k: usize, m: usize) -> ParamMonomial {
    let mut out = ParamMonomial::one();
    for i in k..=m {
        for j in k..i {
            out = out.mul(bc.p(i, j));
        }
    }
    out.inv()
}

/// β_k^m = −(1−q^{−2})·τ_{m−1}·p(x_m, u(k,m−1))^{−1}, for `k < m`.
pub fn beta_km(bc: &Bicharacter, k: usize, m: usize) -> Result<LaurentScalar> {
    let n = bc.n;
    check(n, k, m)?;
    if k == m {
        return Err(Error::IndexOutOfRange(format!("beta({k},{m}) needs k < m")));
    }
    let pm = p_eval(bc, &Constitution::unit(n, m), &Constitution::interval(n, k, m - 1)).inv();
    Ok(-(q(0) - q(-2)) * tau(n, m - 1)? * LaurentScalar::from_monomial(pm))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_matrices() {
        let b1 = Bicharacter::default_for(1);
        assert_eq!(b1.p(1, 1), &ParamMonomial::q(1));
        let b2 = Bicharacter::default_for(2);
        assert_eq!(b2.p(1, 1), &ParamMonomial::q(2));
        assert_eq!(b2.p(2, 2), &ParamMonomial::q(1));
        assert_eq!(b2.p(1, 2).mul(b2.p(2, 1)), ParamMonomial::q(-2));
        // extended indices
        assert_eq!(b2.p(3, 4), b2.p(2, 1));
    }

    #[test]
    fn multiparameter_validation() {
        let json = r#"{"n":2,"parameters":["q","t1"],"matrix":[["q^2","t1*q^-2"],["t1^-1","q"]]}"#;
        let bc = Bicharacter::from_json(json).unwrap();
        assert_eq!(bc.param_count(), 2);
        assert_eq!(Bicharacter::from_json(&bc.to_json()).unwrap(), bc);
        let bad = r#"{"n":2,"parameters":["t1"],"matrix":[["q^2","t1*q^-2"],["t1","q"]]}"#;
        assert!(Bicharacter::from_json(bad).is_err());
        assert!(Bicharacter::with_free_parameters(4).param_count() == 7);
    }

    #[test]
    fn closed_forms() {
        let bc = Bicharacter::default_for(3);
        assert_eq!(sigma(&bc, 2, 3).unwrap(), q(1));
        assert_eq!(sigma(&bc, 2, 5).unwrap(), q(4));
        assert_eq!(mu(&bc, 1, 5, 3).unwrap(), q(0));
        assert_eq!(tau(3, 3).unwrap(), q(1));
        assert_eq!(tau(3, 4).unwrap(), q(0));
        assert_eq!(epsilon(3, 2, 5).unwrap(), q(-3));
        assert!(sigma(&bc, 4, 3).is_err());
    }

    #[test]
    fn mu_agrees_with_products_and_quotients() {
        for bc in [Bicharacter::default_for(3), Bicharacter::with_free_parameters(3)] {
            let n = bc.n();
            for k in 1..=2 * n {
                for m in k + 1..=2 * n {
                    for i in k..m {
                        let closed = mu(&bc, k, m, i).unwrap();
                        let brute = LaurentScalar::from_monomial(mu_bruteforce(&bc, k, m, i));
                        assert_eq!(closed, brute, "mu({k},{m},{i})");
                        let quo = sigma_bruteforce(&bc, k, m).div(&sigma_bruteforce(&bc, k, i)).div(&sigma_bruteforce(
                            &bc,
                            i + 1,
                            m,
                        ));
                        assert_eq!(closed, LaurentScalar::from_monomial(quo));
                    }
                }
            }
        }
    }
}
