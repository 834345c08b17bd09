//! The elements `Φ^S(k,m)`: recursion, colored schemes, regular sets,
//! duality, spectrum, extraction from a coideal, and the root analysis of the
//! subalgebras they generate.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::coefficients::{alpha_kms, descending_product_inv, Bicharacter};
use crate::error::{Error, Result};
use crate::pbw::{split_by_last, PbwMonomial, SuperLetter};
use crate::scalar::{FieldScalar, LaurentScalar, ParamMonomial, Scalar};
use crate::shuffle::{Algebra, ShuffleElement};
use crate::words::{psi_raw, Constitution, RootInterval};

/// `S ∩ [k, m−1]`, sorted.
pub fn restrict(set: &[usize], k: usize, m: usize) -> Vec<usize> {
    let s: BTreeSet<usize> = set.iter().copied().filter(|&s| s >= k && s < m).collect();
    s.into_iter().collect()
}

fn check_km(n: usize, k: usize, m: usize) -> Result<()> {
    if k == 0 || k > m || m > 2 * n {
        return Err(Error::IndexOutOfRange(format!("({k},{m}) with n = {n}")));
    }
    Ok(())
}

/// A reference to `Φ^S(k,m)`; the set is stored as `S ∩ [k, m−1]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PhiElement {
    #[serde(rename = "S")]
    pub set: Vec<usize>,
    pub k: usize,
    pub m: usize,
}

impl PhiElement {
    pub fn new(set: &[usize], k: usize, m: usize) -> Self {
        PhiElement { set: restrict(set, k, m), k, m }
    }

    pub fn value<S: Scalar>(&self, alg: &Algebra<S>) -> Result<ShuffleElement<S>> {
        alg.phi(&self.set, self.k, self.m)
    }

    pub fn constitution(&self, n: usize) -> Constitution {
        Constitution::interval(n, self.k, self.m)
    }
}

impl fmt::Display for PhiElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.set.iter().map(|x| x.to_string()).collect();
        write!(f, "Phi^{{{}}}({},{})", s.join(","), self.k, self.m)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    White,
    Black,
}

impl Color {
    fn symbol(self) -> char {
        match self {
            Color::White => 'o',
            Color::Black => '*',
        }
    }
}

/// A column of the shifted scheme: lower point `i`, upper point `2n − i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Column {
    pub lower: usize,
    pub upper: usize,
    pub lower_color: Option<Color>,
    pub upper_color: Option<Color>,
}

impl Column {
    pub fn is_complete(&self) -> bool {
        self.lower_color.is_some() && self.upper_color.is_some()
    }

    fn both(&self, c: Color) -> bool {
        self.lower_color == Some(c) && self.upper_color == Some(c)
    }

    pub fn is_mixed(&self) -> bool {
        self.is_complete() && self.lower_color != self.upper_color
    }
}

/// The black and white points `k−1, ..., m` of `Φ^S(k,m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredScheme {
    pub n: usize,
    pub k: usize,
    pub m: usize,
    pub black: Vec<usize>,
}

impl ColoredScheme {
    pub fn new(n: usize, set: &[usize], k: usize, m: usize) -> Result<Self> {
        check_km(n, k, m)?;
        Ok(ColoredScheme { n, k, m, black: restrict(set, k, m) })
    }

    /// Color of point `j`, or `None` when `j` is not on the scheme.
    pub fn color(&self, j: usize) -> Option<Color> {
        if j + 1 < self.k || j > self.m {
            None
        } else if j + 1 == self.k {
            Some(Color::White)
        } else if j == self.m || self.black.binary_search(&j).is_ok() {
            Some(Color::Black)
        } else {
            Some(Color::White)
        }
    }

    fn color_i(&self, j: i64) -> Option<Color> {
        if j < 0 {
            None
        } else {
            self.color(j as usize)
        }
    }

    pub fn is_white(&self, j: usize) -> bool {
        self.color(j) == Some(Color::White)
    }

    pub fn is_black(&self, j: usize) -> bool {
        self.color(j) == Some(Color::Black)
    }

    pub fn points(&self) -> Vec<(usize, Color)> {
        (self.k - 1..=self.m).map(|j| (j, self.color(j).unwrap())).collect()
    }

    /// The column whose lower point is `i` (`0 ≤ i ≤ n`).
    pub fn column(&self, i: usize) -> Column {
        let n = self.n;
        let upper = 2 * n - i;
        let lower_color = if i <= n { self.color(i) } else { None };
        let upper_color = if upper >= n { self.color(upper) } else { None };
        Column { lower: i, upper, lower_color, upper_color }
    }

    /// The columns of the shifted scheme from left to right.
    pub fn columns(&self) -> Vec<Column> {
        let n = self.n;
        let start = (self.k - 1).min((2 * n).saturating_sub(self.m));
        (start..=n).map(|i| self.column(i)).filter(|c| c.lower_color.is_some() || c.upper_color.is_some()).collect()
    }

    fn cell(label: usize, c: Option<Color>, width: usize) -> String {
        match c {
            Some(c) => format!("{:>width$}", format!("{}{}", c.symbol(), label)),
            None => " ".repeat(width),
        }
    }

    fn width(&self) -> usize {
        1 + self.m.max(2 * self.n).to_string().len()
    }

    /// One line of points `k−1 .. m`, e.g. `o0 *1 *2 o3 *4`.
    pub fn plain(&self) -> String {
        let w = self.width();
        self.points().iter().map(|(j, c)| Self::cell(*j, Some(*c), w)).collect::<Vec<_>>().join(" ")
    }

    /// Two rows: upper points `m .. n` over lower points `k−1 .. n`, paired
    /// in columns `(i, 2n − i)`.
    pub fn shifted(&self) -> String {
        let w = self.width();
        let cols = self.columns();
        let upper: Vec<String> = cols.iter().map(|c| Self::cell(c.upper, c.upper_color, w)).collect();
        let lower: Vec<String> = cols.iter().map(|c| Self::cell(c.lower, c.lower_color, w)).collect();
        format!("{} <=\n{}", upper.join(" "), lower.join(" "))
    }

    pub fn to_json(&self) -> Value {
        json!({"k": self.k, "m": self.m, "black": self.black})
    }

    /// Literal white regularity: for every `i ∈ [k−1, m)` with
    /// `k ≤ ψ(i) ≤ m+1`, not both `i` and `ψ(i)−1` lie in `S ∪ {k−1, m}`.
    pub fn is_white_regular(&self) -> bool {
        let (n, k, m) = (self.n, self.k, self.m);
        if m <= n || k > n {
            return true;
        }
        let marked = |j: usize| j + 1 == k || j == m || self.black.binary_search(&j).is_ok();
        (k - 1..m).all(|i| {
            let p = psi_raw(n, i);
            !(k <= p && p <= m + 1) || !(marked(i) && marked(p - 1))
        })
    }

    /// Literal black regularity: for every `i ∈ [k, m]` with
    /// `k ≤ ψ(i) ≤ m+1`, `i` or `ψ(i)−1` lies in `S ∖ {k−1, m}`.
    pub fn is_black_regular(&self) -> bool {
        let (n, k, m) = (self.n, self.k, self.m);
        if m <= n || k > n {
            return true;
        }
        let inner = |j: usize| self.black.binary_search(&j).is_ok();
        (k..=m).all(|i| {
            let p = psi_raw(n, i);
            !(k <= p && p <= m + 1) || inner(i) || inner(p - 1)
        })
    }

    fn first_complete(&self) -> Option<Column> {
        self.columns().into_iter().find(|c| c.is_complete())
    }

    /// White regularity read off the shifted scheme.
    pub fn is_white_regular_by_columns(&self) -> bool {
        let (n, k, m) = (self.n, self.k, self.m);
        if m <= n || k > n {
            return true;
        }
        let pk = psi_raw(n, k);
        if m == pk {
            return false;
        }
        let no_black = self.columns().iter().all(|c| !c.both(Color::Black));
        if m < pk {
            no_black
        } else {
            no_black && self.first_complete().is_some_and(|c| c.both(Color::White))
        }
    }

    /// Black regularity read off the shifted scheme.
    pub fn is_black_regular_by_columns(&self) -> bool {
        let (n, k, m) = (self.n, self.k, self.m);
        if m <= n || k > n {
            return true;
        }
        let pk = psi_raw(n, k);
        if m == pk {
            return false;
        }
        let no_white = self.columns().iter().all(|c| !c.both(Color::White));
        if m > pk {
            no_white
        } else {
            no_white && self.first_complete().is_some_and(|c| c.both(Color::Black))
        }
    }
}

pub fn is_white_regular(n: usize, set: &[usize], k: usize, m: usize) -> Result<bool> {
    Ok(ColoredScheme::new(n, set, k, m)?.is_white_regular())
}

pub fn is_black_regular(n: usize, set: &[usize], k: usize, m: usize) -> Result<bool> {
    Ok(ColoredScheme::new(n, set, k, m)?.is_black_regular())
}

pub fn is_regular(n: usize, set: &[usize], k: usize, m: usize) -> Result<bool> {
    let s = ColoredScheme::new(n, set, k, m)?;
    Ok(s.is_white_regular() || s.is_black_regular())
}

/// The complement of `ψ(S)−1` in `[ψ(m), ψ(k)−1]`, with the new bounds
/// `(ψ(m), ψ(k))`.
pub fn dual_set(n: usize, set: &[usize], k: usize, m: usize) -> Result<(Vec<usize>, usize, usize)> {
    check_km(n, k, m)?;
    let image: BTreeSet<usize> = restrict(set, k, m).into_iter().map(|s| 2 * n - s).collect();
    let (k2, m2) = (psi_raw(n, m), psi_raw(n, k));
    let t = (k2..m2).filter(|j| !image.contains(j)).collect();
    Ok((t, k2, m2))
}

fn black_constant(bc: &Bicharacter, k: usize, m: usize, r: usize) -> LaurentScalar {
    let mono = descending_product_inv(bc, k, m).mul(&ParamMonomial::q(-2 * r as i32));
    let sign = if (m - k).is_multiple_of(2) { 1 } else { -1 };
    LaurentScalar::term(BigRational::from_integer(sign.into()), mono)
}

/// The scalar `c` with `Φ^S(k,m) = c·Φ^T(ψ(m), ψ(k))`, `T` the dual set.
/// Black sets use `(−1)^{m−k} q^{−2r} ∏ p_ij^{−1}` with `r = |T|`; white sets
/// use the inverse of the constant of the dual black set.
pub fn duality_constant(bc: &Bicharacter, set: &[usize], k: usize, m: usize) -> Result<LaurentScalar> {
    let n = bc.n();
    let scheme = ColoredScheme::new(n, set, k, m)?;
    let (t, k2, m2) = dual_set(n, set, k, m)?;
    if scheme.is_black_regular() {
        Ok(black_constant(bc, k, m, t.len()))
    } else if scheme.is_white_regular() {
        let c = black_constant(bc, k2, m2, scheme.black.len());
        let (coef, mono) = c.terms().next().map(|(m, c)| (c.clone(), m.clone())).unwrap();
        Ok(LaurentScalar::term(coef.recip(), mono.inv()))
    } else {
        Err(Error::NotRegular { set: scheme.black, k, m })
    }
}

impl<S: Scalar> Algebra<S> {
    /// `Φ^S(k,m) = u[k,m] − (1−q^{−2}) Σ α_{km}^{s} Φ^S(1+s,m)·u[k,s]` over
    /// `s ∈ S ∩ [k, m−1]`. Cached.
    pub fn phi(&self, set: &[usize], k: usize, m: usize) -> Result<ShuffleElement<S>> {
        let n = self.n();
        check_km(n, k, m)?;
        let s = restrict(set, k, m);
        if s.is_empty() {
            return self.u_bracket(k, m);
        }
        let key = (s.clone(), k, m);
        if let Some(v) = self.phi_cache.read().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let mut acc = self.u_bracket(k, m)?;
        let factor = LaurentScalar::q_pow(0) - LaurentScalar::q_pow(-2);
        for &si in &s {
            let alpha = self.scalar(&(factor.clone() * alpha_kms(self.bicharacter(), k, m, si)?));
            let head = self.phi(&s, si + 1, m)?;
            let tail = self.u_bracket(k, si)?;
            acc = acc.sub(&self.product(&head, &tail).scale(&alpha));
        }
        self.phi_cache.write().unwrap().insert(key, acc.clone());
        Ok(acc)
    }

    pub fn phi_element(&self, e: &PhiElement) -> Result<ShuffleElement<S>> {
        self.phi(&e.set, e.k, e.m)
    }

    /// `{i : F_i ≠ 0}` in the decomposition `a = Σ F_i·u[k,i]`.
    pub fn spectrum(&self, a: &ShuffleElement<S>, k: usize) -> Result<BTreeSet<usize>> {
        let fa = self.fraction()?;
        fa.spectrum_field(&a.to_fraction(), k)
    }

    /// Runs the extraction of `Φ^S(k,m)` from an element with leading term
    /// `u[k,m]`. Returns `S` and the extracted value, which equals
    /// `Φ^S(k,m)` over the fraction field.
    pub fn extract_phi(
        &self,
        c: &ShuffleElement<S>,
        k: usize,
        m: usize,
    ) -> Result<(Vec<usize>, ShuffleElement<S::Fraction>)> {
        let fa = self.fraction()?;
        fa.extract_phi_field(&c.to_fraction(), k, m)
    }
}

impl<F: FieldScalar> Algebra<F> {
    fn check_shape(&self, a: &ShuffleElement<F>, k: usize) -> Result<()> {
        let n = self.n();
        let d = a.degree().ok_or(Error::NonHomogeneous)?;
        if k == 0 || k > n || d.0[k - 1] != 1 || d.0[..k - 1].iter().any(|&x| x != 0) {
            return Err(Error::Shape(format!("degree {d} is not linear in x_{k} with no smaller letters")));
        }
        Ok(())
    }

    fn split(&self, a: &ShuffleElement<F>, k: usize) -> Result<BTreeMap<usize, Vec<(PbwMonomial, F)>>> {
        if a.is_zero() {
            return Ok(BTreeMap::new());
        }
        self.check_shape(a, k)?;
        let dec = self.pbw_decompose_fraction(a)?;
        split_by_last(k, &dec)
    }

    pub(crate) fn spectrum_field(&self, a: &ShuffleElement<F>, k: usize) -> Result<BTreeSet<usize>> {
        Ok(self.split(a, k)?.keys().copied().collect())
    }

    pub(crate) fn extract_phi_field(
        &self,
        c: &ShuffleElement<F>,
        k: usize,
        m: usize,
    ) -> Result<(Vec<usize>, ShuffleElement<F>)> {
        let n = self.n();
        let top = SuperLetter::new(n, k, m)?;
        let dec = self.pbw_decompose_fraction(c)?;
        let lead = match dec.first() {
            Some((mon, coef)) if *mon == PbwMonomial::single(top) => coef.clone(),
            Some((mon, _)) => return Err(Error::LeadingTerm(format!("expected {top}, found {mon}"))),
            None => return Err(Error::LeadingTerm("zero element".into())),
        };
        let mut cur = c.scale(&lead.inv().unwrap());
        let mut set: Vec<usize> = Vec::new();
        loop {
            let phi = self.phi(&set, k, m)?;
            let diff = cur.sub(&phi);
            if diff.is_zero() {
                return Ok((set, cur));
            }
            let groups = self.split(&diff, k)?;
            let (&l, fl) = groups.iter().next_back().unwrap();
            let bound = set.first().copied().unwrap_or(m);
            if l >= bound {
                return Err(Error::Inconsistent(format!("spectrum index {l} is not below {bound}")));
            }
            let cop = self.hopf_coproduct(&cur);

            let dkl = Constitution::interval(n, k, l);
            let basis = self.pbw_basis(&dkl)?;
            let j = basis.index_of(&PbwMonomial::single(SuperLetter::new(n, k, l)?)).unwrap();
            let pi = basis.coordinate_functional(j);
            let vs = cop.contract_right(|w| pi.get(w).cloned(), n);
            let da = Constitution::interval(n, l + 1, m);
            let chi = self.p(&da, &dkl);
            let v = vs
                .get(&dkl.as_group())
                .cloned()
                .unwrap_or_else(|| ShuffleElement::zero_of(da.clone()))
                .scale(&chi.inv().unwrap());

            let (mon, coef) = &fl[0];
            let abasis = self.pbw_basis(&da)?;
            let ja = abasis.index_of(mon).ok_or_else(|| Error::Inconsistent(format!("{mon} is not in degree {da}")))?;
            let cinv = coef.inv().unwrap();
            let nu: HashMap<_, _> =
                abasis.coordinate_functional(ja).into_iter().map(|(w, x)| (w, x.mul_ref(&cinv))).collect();
            let ws = cop.contract_right(|w| nu.get(w).cloned(), n);
            let w0 =
                ws.get(&da.as_group()).cloned().ok_or_else(|| Error::Inconsistent("ν-contraction vanished".into()))?;
            let norm = self.projection_pi(k, l, &w0)?;
            if norm.is_zero() {
                return Err(Error::Inconsistent(format!("ν-contraction has no u[{k},{l}] term")));
            }
            let w = w0.scale(&norm.inv().unwrap());

            let next = cur.sub(&self.product(&v, &w));
            set.insert(0, l);
            let check = next.sub(&self.phi(&set, k, m)?);
            if self.split(&check, k)?.keys().any(|&i| i >= l) {
                return Err(Error::Inconsistent(format!("extraction step at l = {l} left a term at or above l")));
            }
            cur = next;
        }
    }
}

/// The additive monoid generated by `[1+t:s]` over white `t` and black `s`,
/// `t < s`, of the scheme of `Φ^S(k,m)`.
#[derive(Clone, Debug)]
pub struct SigmaMonoid {
    pub scheme: ColoredScheme,
    /// Generating pairs `(t, s)`.
    pub pairs: Vec<(usize, usize)>,
}

impl SigmaMonoid {
    pub fn generators(&self) -> Vec<Constitution> {
        let mut v: Vec<Constitution> =
            self.pairs.iter().map(|&(t, s)| Constitution::interval(self.scheme.n, t + 1, s)).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Membership by exhaustive search over generators.
    pub fn contains(&self, c: &Constitution) -> bool {
        let gens = self.generators();
        let mut memo = HashMap::new();
        monoid_contains(c, &gens, &mut memo)
    }

    /// True when `c` is a nonzero element that is not a sum of two nonzero
    /// elements of the monoid.
    pub fn is_indecomposable(&self, c: &Constitution) -> bool {
        let gens = self.generators();
        let mut memo = HashMap::new();
        if c.is_zero() || !monoid_contains(c, &gens, &mut memo) {
            return false;
        }
        !gens.iter().any(|g| match c.checked_sub(g) {
            Some(rest) if !rest.is_zero() => monoid_contains(&rest, &gens, &mut memo),
            _ => false,
        })
    }
}

pub(crate) fn monoid_contains(c: &Constitution, gens: &[Constitution], memo: &mut HashMap<Constitution, bool>) -> bool {
    if c.is_zero() {
        return true;
    }
    if let Some(&b) = memo.get(c) {
        return b;
    }
    let r = gens.iter().any(|g| match c.checked_sub(g) {
        Some(rest) if !g.is_zero() => monoid_contains(&rest, gens, memo),
        _ => false,
    });
    memo.insert(c.clone(), r);
    r
}

fn regular_scheme(n: usize, set: &[usize], k: usize, m: usize) -> Result<ColoredScheme> {
    let s = ColoredScheme::new(n, set, k, m)?;
    if !(s.is_white_regular() || s.is_black_regular()) && !(s.black.is_empty() && m == psi_raw(n, k)) {
        return Err(Error::NotRegular { set: s.black, k, m });
    }
    Ok(s)
}

/// The monoid Σ for a regular `S`, or for `S = ∅` with `m = ψ(k)`.
pub fn sigma_monoid(n: usize, set: &[usize], k: usize, m: usize) -> Result<SigmaMonoid> {
    let scheme = regular_scheme(n, set, k, m)?;
    let mut pairs = Vec::new();
    for t in k - 1..m {
        if !scheme.is_white(t) {
            continue;
        }
        for s in t + 1..=m {
            if scheme.is_black(s) {
                pairs.push((t, s));
            }
        }
    }
    Ok(SigmaMonoid { scheme, pairs })
}

/// Whether `[1+t:s]` is indecomposable in Σ by the column criteria: (a)
/// `ψ(1+t)` is not black (white sets) or `ψ(1+s)` is not white (black
/// sets); (b) every column between `t` and `s` is complete and two-colored.
fn indecomposable_by_columns(scheme: &ColoredScheme, white: bool, t: usize, s: usize) -> bool {
    let n = scheme.n;
    let a = if white {
        scheme.color_i(2 * n as i64 - t as i64) != Some(Color::Black)
    } else {
        scheme.color_i(2 * n as i64 - s as i64) != Some(Color::White)
    };
    let b = (t..=s).all(|j| j <= 2 * n && j <= n && scheme.column(j).is_mixed());
    a || b
}

/// The indecomposable generating pairs `(t, s)` of Σ.
pub fn indecomposable_pairs(n: usize, set: &[usize], k: usize, m: usize) -> Result<Vec<(usize, usize)>> {
    let sigma = sigma_monoid(n, set, k, m)?;
    let scheme = &sigma.scheme;
    if scheme.black.is_empty() && m == psi_raw(n, k) {
        // U(k, ψ(k)): the roots [i:m], i ≠ ψ(m), are the indecomposables.
        let pm = psi_raw(n, m);
        return Ok(sigma.pairs.iter().copied().filter(|&(t, _)| t + 1 != pm).collect());
    }
    let white = scheme.is_white_regular();
    Ok(sigma.pairs.iter().copied().filter(|&(t, s)| indecomposable_by_columns(scheme, white, t, s)).collect())
}

/// Simple roots of the subalgebra generated by `Φ^S(k,m)` and the group.
pub fn simple_roots_of_uskm(n: usize, set: &[usize], k: usize, m: usize) -> Result<BTreeSet<RootInterval>> {
    indecomposable_pairs(n, set, k, m)?.into_iter().map(|(t, s)| RootInterval::new(n, t + 1, s)).collect()
}

/// Generators `Φ^S(1+t, s)` over the indecomposable pairs.
pub fn generators_of_uskm(n: usize, set: &[usize], k: usize, m: usize) -> Result<Vec<PhiElement>> {
    let s = restrict(set, k, m);
    let mut v: Vec<PhiElement> =
        indecomposable_pairs(n, set, k, m)?.into_iter().map(|(t, sp)| PhiElement::new(&s, t + 1, sp)).collect();
    v.sort();
    v.dedup();
    Ok(v)
}

/// θ_i is the largest length of a simple root `[i:b]`, `b < ψ(i)`.
pub fn theta_from_simple_roots(n: usize, roots: impl IntoIterator<Item = RootInterval>) -> Vec<u32> {
    let mut theta = vec![0u32; n];
    for r in roots {
        if r.m < psi_raw(n, r.k) {
            let len = (r.m - r.k + 1) as u32;
            theta[r.k - 1] = theta[r.k - 1].max(len);
        }
    }
    theta
}

/// θ of `U(k,m)`, the subalgebra generated by `u[k,m]`, `k ≤ m ≤ ψ(k)`.
pub fn theta_single_letter(n: usize, k: usize, m: usize) -> Vec<u32> {
    let pm = psi_raw(n, m) as i64;
    (1..=n)
        .map(|i| {
            let i = i as i64;
            if (k as i64) <= i && i <= m as i64 && i < pm {
                (m as i64 - i + 1) as u32
            } else if (k as i64) <= i && i == pm && i <= n as i64 {
                (2 * (m as i64 - n as i64) - 1) as u32
            } else {
                0
            }
        })
        .collect()
}

/// Closed form for a white regular set, `k ≤ m < ψ(k)`.
pub fn theta_white(scheme: &ColoredScheme) -> Vec<u32> {
    let n = scheme.n;
    (1..=n)
        .map(|i| {
            let pi = psi_raw(n, i);
            if !scheme.is_white(i - 1) {
                0
            } else if scheme.is_black(pi) {
                let a = (i..=n).find(|&a| {
                    let c = scheme.column(a);
                    c.lower_color == Some(Color::White) && c.upper_color == Some(Color::White)
                });
                a.map_or(0, |a| (pi - a) as u32)
            } else {
                let b = (i..pi).rev().find(|&b| scheme.is_black(b)).unwrap_or(i - 1);
                (b + 1 - i) as u32
            }
        })
        .collect()
}

/// Closed form for a black regular set, `k ≤ n < m < ψ(k)`.
pub fn theta_black(scheme: &ColoredScheme) -> Vec<u32> {
    let n = scheme.n;
    (1..=n)
        .map(|i| {
            let pi = psi_raw(n, i);
            if scheme.is_white(i - 1) {
                let c = (i..=n).find(|&c| {
                    let col = scheme.column(c);
                    col.lower_color == Some(Color::Black) && col.upper_color == Some(Color::Black)
                });
                c.map_or(0, |c| (pi - c) as u32)
            } else if scheme.is_black(pi) {
                let d = (i..pi).find(|&d| scheme.is_white(d)).unwrap_or(pi);
                (pi - d) as u32
            } else {
                0
            }
        })
        .collect()
}

/// The root sequence of the subalgebra generated by `Φ^S(k,m)` and the group,
/// by the closed forms. Sets with `m > ψ(k)` are first replaced by their dual.
pub fn theta_of_uskm(n: usize, set: &[usize], k: usize, m: usize) -> Result<Vec<u32>> {
    let scheme = regular_scheme(n, set, k, m)?;
    let pk = psi_raw(n, k);
    if m == pk {
        return Ok(theta_single_letter(n, k, m));
    }
    if m > pk {
        let (t, k2, m2) = dual_set(n, set, k, m)?;
        return theta_of_uskm(n, &t, k2, m2);
    }
    if scheme.is_white_regular() {
        Ok(theta_white(&scheme))
    } else {
        Ok(theta_black(&scheme))
    }
}

/// The root sequence computed from the indecomposables of Σ.
pub fn theta_by_indecomposables(n: usize, set: &[usize], k: usize, m: usize) -> Result<Vec<u32>> {
    Ok(theta_from_simple_roots(n, simple_roots_of_uskm(n, set, k, m)?))
}

/// All subsets of `[k, m−1]`, as sorted vectors.
pub fn subsets(k: usize, m: usize) -> Vec<Vec<usize>> {
    let range: Vec<usize> = (k..m).collect();
    (0u64..(1u64 << range.len()))
        .map(|mask| range.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &x)| x).collect())
        .collect()
}

/// The ratio `a / b` when it is a nonzero monomial times a rational.
pub fn monomial_ratio<S: Scalar>(a: &ShuffleElement<S>, b: &ShuffleElement<S>) -> Option<S::Fraction> {
    let r = a.ratio_to(b)?;
    if r.is_zero() {
        return None;
    }
    r.as_monomial().map(|_| r)
}
