//! Super-letters `u[k,m]`, PBW monomials and exact decomposition.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::coefficients::{alpha_shuffle, p_eval, tau};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::scalar::{FieldScalar, LaurentScalar, Mode, Scalar};
use crate::shuffle::{Algebra, DecoratedCoproduct, ShuffleElement};
use crate::words::{psi_raw, u_word, Constitution, Word};

/// The super-letter `u[k,m]`, `k ≤ m < ψ(k)`, ordered by the word `u(k,m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SuperLetter {
    pub k: usize,
    pub m: usize,
    n: usize,
}

impl SuperLetter {
    pub fn new(n: usize, k: usize, m: usize) -> Result<Self> {
        if k == 0 || k > m || m >= psi_raw(n, k) {
            return Err(Error::IndexOutOfRange(format!("u[{k},{m}] is not a super-letter for n = {n}")));
        }
        Ok(SuperLetter { k, m, n })
    }

    pub fn word(&self) -> Word {
        u_word(self.n, self.k, self.m).expect("valid super-letter")
    }

    pub fn constitution(&self) -> Constitution {
        Constitution::interval(self.n, self.k, self.m)
    }
}

impl Ord for SuperLetter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word().cmp(&other.word())
    }
}

impl PartialOrd for SuperLetter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SuperLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u[{},{}]", self.k, self.m)
    }
}

/// All super-letters of rank `n` in increasing order.
pub fn super_letters(n: usize) -> Vec<SuperLetter> {
    let mut v: Vec<SuperLetter> =
        (1..=n).flat_map(|k| (k..psi_raw(n, k)).map(move |m| SuperLetter { k, m, n })).collect();
    v.sort();
    v
}

/// Height of `u[k,m]`: `None` for infinity.
pub fn height(n: usize, k: usize, m: usize, mode: Mode) -> Result<Option<u32>> {
    SuperLetter::new(n, k, m)?;
    Ok(match mode {
        Mode::Generic => None,
        Mode::Cyclotomic(t) => Some(if m == n || t % 2 == 1 { t } else { t / 2 }),
    })
}

/// A monotone product `u_1^{e_1} ... u_r^{e_r}` with `u_1 < ... < u_r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PbwMonomial {
    pub factors: Vec<(SuperLetter, u32)>,
}

impl PbwMonomial {
    pub fn single(s: SuperLetter) -> Self {
        PbwMonomial { factors: vec![(s, 1)] }
    }

    pub fn constitution(&self, n: usize) -> Constitution {
        self.factors.iter().fold(Constitution::zero(n), |acc, (s, e)| acc.add(&s.constitution().scale(*e)))
    }

    /// The super-letters with multiplicity, in order.
    pub fn expanded(&self) -> Vec<SuperLetter> {
        self.factors.iter().flat_map(|(s, e)| std::iter::repeat_n(*s, *e as usize)).collect()
    }

    /// The last, hence largest, super-letter.
    pub fn last(&self) -> Option<SuperLetter> {
        self.factors.last().map(|(s, _)| *s)
    }

    /// The monomial with its last super-letter removed once.
    pub fn without_last(&self) -> PbwMonomial {
        let mut f = self.factors.clone();
        if let Some(l) = f.last_mut() {
            l.1 -= 1;
            if l.1 == 0 {
                f.pop();
            }
        }
        PbwMonomial { factors: f }
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.factors.iter().map(|(s, e)| json!([s.to_string(), e])).collect())
    }
}

/// Lexicographic on the expanded super-letter sequence; a proper prefix is
/// greater.
impl Ord for PbwMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.expanded(), other.expanded());
        for (x, y) in a.iter().zip(&b) {
            match x.cmp(y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        b.len().cmp(&a.len())
    }
}

impl PartialOrd for PbwMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> =
            self.factors.iter().map(|(s, e)| if *e == 1 { s.to_string() } else { format!("{s}^{e}") }).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// All restricted monotone monomials of degree `d`.
pub fn pbw_monomials(n: usize, d: &Constitution, mode: Mode) -> Vec<PbwMonomial> {
    let letters = super_letters(n);
    let mut out = Vec::new();
    let mut cur = Vec::new();
    enumerate(&letters, 0, d.clone(), mode, &mut cur, &mut out);
    out
}

fn enumerate(
    letters: &[SuperLetter],
    from: usize,
    rest: Constitution,
    mode: Mode,
    cur: &mut Vec<(SuperLetter, u32)>,
    out: &mut Vec<PbwMonomial>,
) {
    if rest.is_zero() {
        out.push(PbwMonomial { factors: cur.clone() });
        return;
    }
    for (idx, s) in letters.iter().enumerate().skip(from) {
        let c = s.constitution();
        let h = height(s.n, s.k, s.m, mode).unwrap();
        let mut r = rest.clone();
        let mut e = 0;
        while let Some(next) = r.checked_sub(&c) {
            e += 1;
            if h.is_some_and(|h| e >= h) {
                break;
            }
            r = next;
            cur.push((*s, e));
            enumerate(letters, idx + 1, r.clone(), mode, cur, out);
            cur.pop();
        }
    }
}

/// Evaluated basis of one homogeneous component, in echelon form.
#[derive(Debug)]
pub struct PbwBasis<F> {
    pub degree: Constitution,
    pub monomials: Vec<PbwMonomial>,
    pub(crate) echelon: Echelon<F>,
}

impl<F: FieldScalar> PbwBasis<F> {
    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn index_of(&self, m: &PbwMonomial) -> Option<usize> {
        self.monomials.iter().position(|x| x == m)
    }

    /// Functional on words returning the coordinate of monomial `j` for
    /// elements of this component.
    pub fn coordinate_functional(&self, j: usize) -> HashMap<Word, F> {
        self.echelon.coordinate_functional(j)
    }

    pub fn apply(functional: &HashMap<Word, F>, a: &ShuffleElement<F>) -> F {
        Echelon::apply(functional, a.terms())
    }
}

impl<S: Scalar> Algebra<S> {
    /// The bracketing `u[k,m]` evaluated in the shuffle algebra.
    pub fn u_bracket(&self, k: usize, m: usize) -> Result<ShuffleElement<S>> {
        let n = self.n();
        if k == 0 || k > m || m > 2 * n {
            return Err(Error::IndexOutOfRange(format!("u[{k},{m}] with n = {n}")));
        }
        if let Some(v) = self.ubracket_cache.read().unwrap().get(&(k, m)) {
            return Ok(v.clone());
        }
        let pk = psi_raw(n, k);
        let v = if k == m {
            self.letter(k)
        } else if m < pk {
            let items: Vec<_> = (k..=m).map(|i| self.letter(i)).collect();
            self.bracket_left(&items)?
        } else if m > pk {
            let items: Vec<_> = (k..=m).map(|i| self.letter(i)).collect();
            self.bracket_right(&items)?
        } else {
            let a = self.u_bracket(n + 1, m)?;
            let b = self.u_bracket(k, n)?;
            let pm = p_eval(self.bicharacter(), a.degree().unwrap(), b.degree().unwrap());
            let beta = -self.monomial(&pm.inv());
            self.bracket(&a, &b)?.scale(&beta)
        };
        self.ubracket_cache.write().unwrap().insert((k, m), v.clone());
        Ok(v)
    }

    /// `α_k^m · (x_m ... x_k)`, the closed-form shuffle value of `u[k,m]`.
    pub fn u_bracket_closed_form(&self, k: usize, m: usize) -> Result<ShuffleElement<S>> {
        let n = self.n();
        let alpha = self.scalar(&alpha_shuffle(self.bicharacter(), k, m)?);
        Ok(self.word(&u_word(n, k, m)?.reversed(), alpha))
    }

    /// `u⊗1 + g_{km}⊗u + Σ_{k≤i<m} τ_i(1−q^{−2}) g_{ki}·u[i+1,m] ⊗ u[k,i]`, the
    /// expected Hopf coproduct of `u[k,m]`.
    pub fn u_bracket_coproduct_formula(&self, k: usize, m: usize) -> Result<DecoratedCoproduct<S>> {
        let n = self.n();
        let u = self.u_bracket(k, m)?;
        let one = self.one();
        let unit = S::one();
        let mut out = DecoratedCoproduct::new();
        out.add_triple(&vec![0; n], &u, &one, &unit);
        out.add_triple(&Constitution::interval(n, k, m).as_group(), &one, &u, &unit);
        let factor = LaurentScalar::one() - LaurentScalar::q_pow(-2);
        for i in k..m {
            let c = self.scalar(&(tau(n, i)? * factor.clone()));
            let g = Constitution::interval(n, k, i).as_group();
            out.add_triple(&g, &self.u_bracket(i + 1, m)?, &self.u_bracket(k, i)?, &c);
        }
        Ok(out)
    }

    pub fn super_letter(&self, k: usize, m: usize) -> Result<SuperLetter> {
        SuperLetter::new(self.n(), k, m)
    }

    pub fn eval_monomial(&self, mon: &PbwMonomial) -> Result<ShuffleElement<S>> {
        let mut out = self.one();
        for (s, e) in &mon.factors {
            let u = self.u_bracket(s.k, s.m)?;
            for _ in 0..*e {
                out = self.product(&out, &u);
            }
        }
        Ok(out)
    }

    pub fn pbw_monomials(&self, d: &Constitution) -> Vec<PbwMonomial> {
        pbw_monomials(self.n(), d, self.mode())
    }

    /// Evaluated PBW basis of the component of degree `d`, cached.
    pub fn pbw_basis(&self, d: &Constitution) -> Result<Arc<PbwBasis<S::Fraction>>> {
        if let Some(b) = self.pbw_cache.read().unwrap().get(d) {
            return Ok(b.clone());
        }
        let monomials = self.pbw_monomials(d);
        let mut echelon = Echelon::new(true);
        for mon in &monomials {
            let v = self.eval_monomial(mon)?.to_fraction();
            if !echelon.insert(v.into_terms()) {
                return Err(Error::Inconsistent(format!("PBW monomial {mon} is dependent in degree {d}")));
            }
        }
        let b = Arc::new(PbwBasis { degree: d.clone(), monomials, echelon });
        self.pbw_cache.write().unwrap().insert(d.clone(), b.clone());
        Ok(b)
    }

    /// Exact coordinates of a homogeneous element in the PBW basis, sorted by
    /// decreasing monomial.
    pub fn pbw_decompose(&self, a: &ShuffleElement<S>) -> Result<Vec<(PbwMonomial, S::Fraction)>> {
        self.fraction()?.pbw_decompose_fraction(&a.to_fraction())
    }

    pub fn projection_pi(&self, k: usize, l: usize, a: &ShuffleElement<S>) -> Result<S::Fraction> {
        let target = PbwMonomial::single(self.super_letter(k, l)?);
        let d = match a.degree() {
            Some(d) => d,
            None if a.is_zero() => return Ok(S::Fraction::zero()),
            None => return Err(Error::NonHomogeneous),
        };
        if *d != target.constitution(self.n()) {
            return Ok(S::Fraction::zero());
        }
        Ok(self
            .pbw_decompose(a)?
            .into_iter()
            .find(|(m, _)| *m == target)
            .map(|(_, c)| c)
            .unwrap_or_else(S::Fraction::zero))
    }

    /// The maximal monomial with nonzero coordinate.
    pub fn leading_term(&self, a: &ShuffleElement<S>) -> Result<Option<(PbwMonomial, S::Fraction)>> {
        Ok(self.pbw_decompose(a)?.into_iter().next())
    }

    pub fn decomposition_json(&self, dec: &[(PbwMonomial, S::Fraction)]) -> Value {
        let render =
            |c: &S::Fraction| c.to_laurent().map(|l| self.bicharacter().render(&l)).unwrap_or_else(|| c.to_string());
        Value::Array(dec.iter().map(|(m, c)| json!({"monomial": m.to_json(), "coeff": render(c)})).collect())
    }
}

impl<F: FieldScalar> Algebra<F> {
    pub(crate) fn pbw_decompose_fraction(&self, a: &ShuffleElement<F>) -> Result<Vec<(PbwMonomial, F)>> {
        let d = match a.degree() {
            Some(d) => d.clone(),
            None if a.is_zero() => return Ok(Vec::new()),
            None => return Err(Error::NonHomogeneous),
        };
        if a.is_zero() {
            return Ok(Vec::new());
        }
        let basis = self.pbw_basis(&d)?;
        let sol = basis
            .echelon
            .solve(a.terms())
            .ok_or_else(|| Error::Inconsistent(format!("element of degree {d} is outside the PBW span")))?;
        let mut out: Vec<(PbwMonomial, F)> = sol.into_iter().map(|(j, c)| (basis.monomials[j].clone(), c)).collect();
        out.sort_by(|x, y| y.0.cmp(&x.0));
        Ok(out)
    }

    /// Re-evaluates a decomposition.
    pub fn eval_decomposition(&self, dec: &[(PbwMonomial, F)]) -> Result<ShuffleElement<F>> {
        let mut acc = ShuffleElement::zero();
        for (m, c) in dec {
            acc = acc.add(&self.eval_monomial(m)?.scale(c));
        }
        Ok(acc)
    }
}

/// Groups a decomposition of an element of shape `Σ F_i·u[k,i]` by the last
/// super-letter `u[k,i]`, returning `i ↦ Σ c·(monomial without u[k,i])`.
pub fn split_by_last<F: FieldScalar>(
    k: usize,
    dec: &[(PbwMonomial, F)],
) -> Result<BTreeMap<usize, Vec<(PbwMonomial, F)>>> {
    let mut out: BTreeMap<usize, Vec<(PbwMonomial, F)>> = BTreeMap::new();
    for (m, c) in dec {
        let last = m.last().ok_or_else(|| Error::Shape("constant term".into()))?;
        let lastexp = m.factors.last().unwrap().1;
        if last.k != k || lastexp != 1 {
            return Err(Error::Shape(format!("monomial {m} does not end in a single u[{k},i]")));
        }
        if m.factors[..m.factors.len() - 1].iter().any(|(s, _)| s.k <= k) {
            return Err(Error::Shape(format!("monomial {m} has a letter x_j with j ≤ {k} before u[{k},i]")));
        }
        out.entry(last.m).or_default().push((m.without_last(), c.clone()));
    }
    Ok(out)
}
