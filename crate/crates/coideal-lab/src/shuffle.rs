//! The quantum shuffle algebra: elements, product, skew brackets, coproducts
//! and partial derivatives.
//!
//! Elements of the Nichols algebra are represented by their images in the
//! shuffle algebra, where equality is literal equality of word expansions.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::Zero;
use serde_json::{json, Value};

use crate::coefficients::{p_eval, Bicharacter};
use crate::error::{Error, Result};
use crate::pbw::PbwBasis;
use crate::scalar::{LaurentScalar, Mode, ParamMonomial, Scalar};
use crate::words::{letter_of, Constitution, Word};

/// A finite linear combination of words, optionally tagged with a
/// homogeneous degree.
#[derive(Clone, Debug)]
pub struct ShuffleElement<S> {
    terms: BTreeMap<Word, S>,
    degree: Option<Constitution>,
}

impl<S: Scalar> PartialEq for ShuffleElement<S> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl<S: Scalar> ShuffleElement<S> {
    /// The zero element with a degree tag.
    pub fn zero_of(degree: Constitution) -> Self {
        ShuffleElement { terms: BTreeMap::new(), degree: Some(degree) }
    }

    /// The untagged zero element.
    pub fn zero() -> Self {
        ShuffleElement { terms: BTreeMap::new(), degree: None }
    }

    /// The unit, the empty word with degree zero.
    pub fn one(n: usize) -> Self {
        Self::from_word(Word::empty(), S::one(), n)
    }

    pub fn from_word(w: Word, c: S, n: usize) -> Self {
        let degree = Some(w.constitution(n));
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        ShuffleElement { terms, degree }
    }

    /// Builds an element from terms, inferring the degree tag when all words
    /// share one constitution.
    pub fn from_terms(terms: impl IntoIterator<Item = (Word, S)>, n: usize) -> Self {
        let mut map: BTreeMap<Word, S> = BTreeMap::new();
        for (w, c) in terms {
            add_into(&mut map, w, c);
        }
        let mut degrees = map.keys().map(|w| w.constitution(n));
        let degree = degrees.next().filter(|d| degrees.all(|e| e == *d));
        ShuffleElement { terms: map, degree }
    }

    pub fn terms(&self) -> &BTreeMap<Word, S> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Word, S> {
        self.terms
    }

    pub fn coeff(&self, w: &Word) -> S {
        self.terms.get(w).cloned().unwrap_or_else(S::zero)
    }

    pub fn degree(&self) -> Option<&Constitution> {
        self.degree.as_ref()
    }

    pub fn with_degree(mut self, d: Constitution) -> Self {
        self.degree = Some(d);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn merged_degree(&self, other: &Self) -> Option<Constitution> {
        if self.degree == other.degree {
            return self.degree.clone();
        }
        if self.terms.is_empty() && (self.degree.is_none() || other.degree.is_some()) {
            return other.degree.clone();
        }
        if other.terms.is_empty() {
            return self.degree.clone();
        }
        None
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            add_into(&mut terms, w.clone(), c.clone());
        }
        ShuffleElement { terms, degree: self.merged_degree(other) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            add_into(&mut terms, w.clone(), -c.clone());
        }
        ShuffleElement { terms, degree: self.merged_degree(other) }
    }

    pub fn neg(&self) -> Self {
        ShuffleElement {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
            degree: self.degree.clone(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        if s.is_zero() {
            return ShuffleElement { terms: BTreeMap::new(), degree: self.degree.clone() };
        }
        ShuffleElement {
            terms: self
                .terms
                .iter()
                .filter_map(|(w, c)| {
                    let v = c.mul_ref(s);
                    (!v.is_zero()).then(|| (w.clone(), v))
                })
                .collect(),
            degree: self.degree.clone(),
        }
    }

    /// Coefficient-wise conversion into another scalar type.
    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> ShuffleElement<T> {
        ShuffleElement {
            terms: self
                .terms
                .iter()
                .filter_map(|(w, c)| {
                    let v = f(c);
                    (!v.is_zero()).then(|| (w.clone(), v))
                })
                .collect(),
            degree: self.degree.clone(),
        }
    }

    pub fn to_fraction(&self) -> ShuffleElement<S::Fraction> {
        self.map_coeffs(|c| c.to_fraction())
    }

    /// The largest word with nonzero coefficient under the letter order.
    pub fn leading_word(&self) -> Option<(&Word, &S)> {
        self.terms.iter().next_back()
    }

    /// Returns `c` with `self = c·other`, when such a scalar exists.
    pub fn ratio_to(&self, other: &Self) -> Option<S::Fraction> {
        use crate::scalar::FieldScalar;
        if self.terms.len() != other.terms.len() || self.terms.keys().ne(other.terms.keys()) {
            return None;
        }
        let (w, c) = other.terms.iter().next()?;
        let r = self.terms[w].to_fraction().div_ref(&c.to_fraction());
        for (w, c) in &other.terms {
            if self.terms[w].to_fraction() != c.to_fraction().mul_ref(&r) {
                return None;
            }
        }
        Some(r)
    }

    /// Renders as `c1*(x1 x2) + c2*(x2 x1)`, coefficients per `render`.
    pub fn render_with(&self, render: impl Fn(&S) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms.iter().rev().map(|(w, c)| format!("({})*({})", render(c), w)).collect::<Vec<_>>().join(" + ")
    }

    /// `{degree, terms: [{word, coeff}]}`, terms listed from the largest word down.
    pub fn to_json_with(&self, render: impl Fn(&S) -> String) -> Value {
        json!({
            "degree": self.degree.as_ref().map(|d| d.0.clone()),
            "terms": self
                .terms
                .iter()
                .rev()
                .map(|(w, c)| json!({"word": w.0, "coeff": render(c)}))
                .collect::<Vec<_>>(),
        })
    }
}

impl<S: Scalar> std::fmt::Display for ShuffleElement<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render_with(|c| c.to_string()))
    }
}

fn add_into<S: Scalar>(map: &mut BTreeMap<Word, S>, w: Word, c: S) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(w) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get().add_ref(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

/// A sum of word tensors `c·(u ⊗ v)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorSum<S> {
    pub terms: BTreeMap<(Word, Word), S>,
}

/// A sum of decorated tensors `c·(g·u ⊗ v)`, with the group part `g` written
/// as an exponent vector over `g_1..g_n` and placed to the left of `u`.
#[derive(Clone, Debug, PartialEq)]
pub struct DecoratedCoproduct<S> {
    pub terms: BTreeMap<(Vec<i64>, Word, Word), S>,
}

impl<S: Scalar> DecoratedCoproduct<S> {
    pub fn new() -> Self {
        DecoratedCoproduct { terms: BTreeMap::new() }
    }

    /// Adds `c·(g·left ⊗ right)` for whole elements.
    pub fn add_triple(&mut self, group: &[i64], left: &ShuffleElement<S>, right: &ShuffleElement<S>, c: &S) {
        for (wl, cl) in left.terms() {
            for (wr, cr) in right.terms() {
                let v = c.mul_ref(cl).mul_ref(cr);
                let key = (group.to_vec(), wl.clone(), wr.clone());
                let entry = self.terms.entry(key.clone()).or_insert_with(S::zero);
                *entry = entry.add_ref(&v);
                if entry.is_zero() {
                    self.terms.remove(&key);
                }
            }
        }
    }

    /// Collects `Σ c·(g·u)` over the terms whose right leg satisfies `f`,
    /// weighting each term by `f(v)`. Group parts are returned separately.
    pub fn contract_right(&self, f: impl Fn(&Word) -> Option<S>, n: usize) -> BTreeMap<Vec<i64>, ShuffleElement<S>> {
        let mut out: BTreeMap<Vec<i64>, BTreeMap<Word, S>> = BTreeMap::new();
        for ((g, wl, wr), c) in &self.terms {
            if let Some(w) = f(wr) {
                add_into(out.entry(g.clone()).or_default(), wl.clone(), c.mul_ref(&w));
            }
        }
        out.into_iter().map(|(g, t)| (g, ShuffleElement::from_terms(t, n))).filter(|(_, e)| !e.is_zero()).collect()
    }
    /// Renders as `(c)*g[1,0]*(x1) ⊗ (x2) + ...`; the group part is omitted
    /// when trivial.
    pub fn render_with(&self, render: impl Fn(&S) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|((g, l, r), c)| {
                let g = if g.iter().all(|&e| e == 0) { String::new() } else { format!("g{g:?}*") };
                format!("({})*{g}({l}) ⊗ ({r})", render(c))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// `[{group, left, right, coeff}]` in key order.
    pub fn to_json_with(&self, render: impl Fn(&S) -> String) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|((g, l, r), c)| json!({"group": g, "left": l.0, "right": r.0, "coeff": render(c)}))
                .collect(),
        )
    }
}

impl<S: Scalar> Default for DecoratedCoproduct<S> {
    fn default() -> Self {
        Self::new()
    }
}

type WordShuffle<S> = Arc<Vec<(Word, S)>>;
type PhiKey = (Vec<usize>, usize, usize);

/// Computation context: bicharacter, mode and internal caches.
pub struct Algebra<S: Scalar> {
    bc: Arc<Bicharacter>,
    mode: Mode,
    p_inv: Vec<Vec<Vec<i32>>>,
    width: usize,
    word_cache: RwLock<HashMap<(Word, Word), WordShuffle<S>>>,
    pub(crate) ubracket_cache: RwLock<HashMap<(usize, usize), ShuffleElement<S>>>,
    pub(crate) phi_cache: RwLock<HashMap<PhiKey, ShuffleElement<S>>>,
    pub(crate) pbw_cache: RwLock<HashMap<Constitution, Arc<PbwBasis<S::Fraction>>>>,
    fraction: OnceLock<Arc<Algebra<S::Fraction>>>,
}

impl<S: Scalar> std::fmt::Debug for Algebra<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra").field("n", &self.bc.n()).field("mode", &self.mode).finish()
    }
}

impl<S: Scalar> Algebra<S> {
    pub fn new(bc: Bicharacter, mode: Mode) -> Result<Self> {
        Self::from_arc(Arc::new(bc), mode)
    }

    pub fn from_arc(bc: Arc<Bicharacter>, mode: Mode) -> Result<Self> {
        S::check_support(bc.param_count(), mode)?;
        let n = bc.n();
        let width = bc.param_count();
        let mut p_inv = vec![vec![Vec::new(); n + 1]; n + 1];
        for (a, row) in p_inv.iter_mut().enumerate().skip(1) {
            for (b, slot) in row.iter_mut().enumerate().skip(1) {
                let m = bc.p(a, b).inv();
                *slot = (0..width).map(|i| m.exponent(i)).collect();
            }
        }
        Ok(Algebra {
            bc,
            mode,
            p_inv,
            width,
            word_cache: RwLock::new(HashMap::new()),
            ubracket_cache: RwLock::new(HashMap::new()),
            phi_cache: RwLock::new(HashMap::new()),
            pbw_cache: RwLock::new(HashMap::new()),
            fraction: OnceLock::new(),
        })
    }

    /// Default bicharacter of rank `n` in the given mode.
    pub fn default_for(n: usize, mode: Mode) -> Result<Self> {
        Self::new(Bicharacter::default_for(n), mode)
    }

    pub fn n(&self) -> usize {
        self.bc.n()
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn bicharacter(&self) -> &Bicharacter {
        &self.bc
    }

    /// The same algebra over the fraction field of `S`. Fails when the field
    /// cannot hold the bicharacter's parameters.
    pub fn fraction(&self) -> Result<Arc<Algebra<S::Fraction>>> {
        <S::Fraction as Scalar>::check_support(self.bc.param_count(), self.mode)?;
        Ok(self
            .fraction
            .get_or_init(|| Arc::new(Algebra::from_arc(self.bc.clone(), self.mode).expect("support was checked")))
            .clone())
    }

    pub fn scalar(&self, l: &LaurentScalar) -> S {
        S::embed(l, self.mode)
    }

    pub fn monomial(&self, m: &ParamMonomial) -> S {
        S::from_monomial(m, self.mode)
    }

    /// `p(u,v)` as a scalar.
    pub fn p(&self, u: &Constitution, v: &Constitution) -> S {
        self.monomial(&p_eval(&self.bc, u, v))
    }

    pub fn render(&self, s: &S) -> String {
        s.to_laurent().map(|l| self.bc.render(&l)).unwrap_or_else(|| s.to_string())
    }

    pub fn to_json(&self, a: &ShuffleElement<S>) -> Value {
        a.to_json_with(|c| self.render(c))
    }

    pub fn one(&self) -> ShuffleElement<S> {
        ShuffleElement::one(self.n())
    }

    /// `x_i` for an extended index `i`.
    pub fn letter(&self, i: usize) -> ShuffleElement<S> {
        ShuffleElement::from_word(Word::letter(letter_of(self.n(), i)), S::one(), self.n())
    }

    pub fn word(&self, w: &Word, c: S) -> ShuffleElement<S> {
        ShuffleElement::from_word(w.clone(), c, self.n())
    }

    fn exps_to_scalar(&self, counts: HashMap<Vec<i32>, i64>) -> S {
        let mut l = LaurentScalar::zero();
        for (e, c) in counts {
            if c != 0 {
                l = l + LaurentScalar::term(
                    num_rational::BigRational::from_integer(c.into()),
                    ParamMonomial::from_exponents(e),
                );
            }
        }
        self.scalar(&l)
    }

    /// Shuffle product of two words, cached.
    pub fn word_shuffle(&self, a: &Word, b: &Word) -> WordShuffle<S> {
        let key = (a.clone(), b.clone());
        if let Some(v) = self.word_cache.read().unwrap().get(&key) {
            return v.clone();
        }
        let mut acc: HashMap<Word, HashMap<Vec<i32>, i64>> = HashMap::new();
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut exps = vec![0i32; self.width];
        self.interleave(a.letters(), b.letters(), 0, 0, &mut out, &mut exps, &mut acc);
        let mut res: Vec<(Word, S)> =
            acc.into_iter().map(|(w, c)| (w, self.exps_to_scalar(c))).filter(|(_, c)| !c.is_zero()).collect();
        res.sort_by(|x, y| x.0.cmp(&y.0));
        let res = Arc::new(res);
        self.word_cache.write().unwrap().insert(key, res.clone());
        res
    }

    // Every letter of `b` placed before a letter of `a` contributes p(b_t, a_s)^{-1}.
    #[allow(clippy::too_many_arguments)]
    fn interleave(
        &self,
        a: &[u8],
        b: &[u8],
        i: usize,
        j: usize,
        out: &mut Vec<u8>,
        exps: &mut Vec<i32>,
        acc: &mut HashMap<Word, HashMap<Vec<i32>, i64>>,
    ) {
        if i == a.len() && j == b.len() {
            *acc.entry(Word(out.clone())).or_default().entry(exps.clone()).or_insert(0) += 1;
            return;
        }
        if i < a.len() {
            let x = a[i] as usize;
            for &y in &b[..j] {
                for (e, d) in exps.iter_mut().zip(&self.p_inv[y as usize][x]) {
                    *e += d;
                }
            }
            out.push(a[i]);
            self.interleave(a, b, i + 1, j, out, exps, acc);
            out.pop();
            for &y in &b[..j] {
                for (e, d) in exps.iter_mut().zip(&self.p_inv[y as usize][x]) {
                    *e -= d;
                }
            }
        }
        if j < b.len() {
            out.push(b[j]);
            self.interleave(a, b, i, j + 1, out, exps, acc);
            out.pop();
        }
    }

    /// The shuffle product.
    pub fn product(&self, a: &ShuffleElement<S>, b: &ShuffleElement<S>) -> ShuffleElement<S> {
        let mut acc: HashMap<Word, S> = HashMap::new();
        for (w1, c1) in a.terms() {
            for (w2, c2) in b.terms() {
                let c = c1.mul_ref(c2);
                for (w, s) in self.word_shuffle(w1, w2).iter() {
                    let v = c.mul_ref(s);
                    match acc.get_mut(w) {
                        Some(x) => *x = x.add_ref(&v),
                        None => {
                            acc.insert(w.clone(), v);
                        }
                    }
                }
            }
        }
        let degree = match (a.degree(), b.degree()) {
            (Some(x), Some(y)) => Some(x.add(y)),
            _ => None,
        };
        ShuffleElement { terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(), degree }
    }

    /// Product of a sequence of elements, left to right.
    pub fn product_all<'a>(&self, items: impl IntoIterator<Item = &'a ShuffleElement<S>>) -> ShuffleElement<S> {
        items.into_iter().fold(self.one(), |acc, x| self.product(&acc, x))
    }

    fn tag(&self, a: &ShuffleElement<S>) -> Result<Constitution> {
        a.degree().cloned().ok_or(Error::NonHomogeneous)
    }

    /// Skew bracket `[a,b] = ab − p(D(a),D(b))·ba`.
    pub fn bracket(&self, a: &ShuffleElement<S>, b: &ShuffleElement<S>) -> Result<ShuffleElement<S>> {
        let da = self.tag(a)?;
        let db = self.tag(b)?;
        let ab = self.product(a, b);
        let ba = self.product(b, a);
        Ok(ab.sub(&ba.scale(&self.p(&da, &db))).with_degree(da.add(&db)))
    }

    /// Left-normed bracket `[[[a_1,a_2],a_3],...]`.
    pub fn bracket_left(&self, items: &[ShuffleElement<S>]) -> Result<ShuffleElement<S>> {
        let mut it = items.iter();
        let mut acc = it.next().cloned().ok_or(Error::NonHomogeneous)?;
        for x in it {
            acc = self.bracket(&acc, x)?;
        }
        Ok(acc)
    }

    /// Right-normed bracket `[a_1,[a_2,[...,a_r]]]`.
    pub fn bracket_right(&self, items: &[ShuffleElement<S>]) -> Result<ShuffleElement<S>> {
        let mut it = items.iter().rev();
        let mut acc = it.next().cloned().ok_or(Error::NonHomogeneous)?;
        for x in it {
            acc = self.bracket(x, &acc)?;
        }
        Ok(acc)
    }

    pub fn power(&self, a: &ShuffleElement<S>, h: u32) -> ShuffleElement<S> {
        let mut out = self.one();
        for _ in 0..h {
            out = self.product(&out, a);
        }
        out
    }

    /// Deconcatenation.
    pub fn braided_coproduct(&self, a: &ShuffleElement<S>) -> TensorSum<S> {
        let mut terms = BTreeMap::new();
        for (w, c) in a.terms() {
            for i in 0..=w.len() {
                let (l, r) = w.split_at(i);
                terms.insert((l, r), c.clone());
            }
        }
        TensorSum { terms }
    }

    /// The Hopf coproduct with group parts on the left: a split `w = uv`
    /// contributes `p(D(u),D(v))·c·(g_{D(v)}·u ⊗ v)`.
    pub fn hopf_coproduct(&self, a: &ShuffleElement<S>) -> DecoratedCoproduct<S> {
        let n = self.n();
        let mut out = DecoratedCoproduct::new();
        for (w, c) in a.terms() {
            for i in 0..=w.len() {
                let (l, r) = w.split_at(i);
                let dr = r.constitution(n);
                let v = c.mul_ref(&self.p(&l.constitution(n), &dr));
                let key = (dr.as_group(), l, r);
                let e = out.terms.entry(key.clone()).or_insert_with(S::zero);
                *e = e.add_ref(&v);
                if e.is_zero() {
                    out.terms.remove(&key);
                }
            }
        }
        out
    }

    /// ∂_i, read off from `Δ(a) ≡ a⊗1 + Σ g_i ∂_i(a)⊗x_i`: a word `w·x_i`
    /// contributes `p(D(w), x_i)·w`.
    pub fn partial_derivative(&self, i: usize, a: &ShuffleElement<S>) -> ShuffleElement<S> {
        let n = self.n();
        let l = letter_of(n, i) as u8;
        let xi = Constitution::unit(n, i);
        let terms: BTreeMap<Word, S> = a
            .terms()
            .iter()
            .filter(|(w, _)| w.letters().last() == Some(&l))
            .map(|(w, c)| {
                let head = Word(w.letters()[..w.len() - 1].to_vec());
                let c = c.mul_ref(&self.p(&head.constitution(n), &xi));
                (head, c)
            })
            .collect();
        let degree = a.degree().and_then(|d| d.checked_sub(&Constitution::unit(n, i)));
        ShuffleElement { terms, degree }
    }

    /// Element-level `Σ c·(left ⊗ right)` of a tensor sum, as pairs.
    pub fn tensor_pairs(&self, t: &TensorSum<S>) -> Vec<(ShuffleElement<S>, ShuffleElement<S>)> {
        t.terms.iter().map(|((l, r), c)| (self.word(l, c.clone()), self.word(r, S::one()))).collect()
    }

    pub fn unit_scalar(&self) -> S {
        S::one()
    }
}
