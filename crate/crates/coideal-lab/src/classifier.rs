//! Root sequences, the construction of `U_θ`, the span membership oracle and
//! the containment lattice.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::phi::{is_regular, monoid_contains, PhiElement};
use crate::scalar::{FieldScalar, Scalar};
use crate::shuffle::{Algebra, ShuffleElement};
use crate::words::{psi_raw, Constitution, RootInterval, Word};

/// `θ = (θ_1, ..., θ_n)` with `0 ≤ θ_k ≤ 2n − 2k + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSequence(pub Vec<u32>);

impl RootSequence {
    pub fn new(theta: Vec<u32>) -> Result<Self> {
        let n = theta.len();
        if n == 0 {
            return Err(Error::InvalidTheta("empty sequence".into()));
        }
        for (i, &t) in theta.iter().enumerate() {
            let bound = (2 * n - 2 * (i + 1) + 1) as u32;
            if t > bound {
                return Err(Error::InvalidTheta(format!("theta_{} = {t} exceeds {bound}", i + 1)));
            }
        }
        Ok(RootSequence(theta))
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn zero(n: usize) -> Self {
        RootSequence(vec![0; n])
    }

    /// Every valid sequence of rank `n`, lexicographically.
    pub fn all(n: usize) -> Vec<RootSequence> {
        let mut out = vec![Vec::new()];
        for k in 1..=n {
            let bound = (2 * n - 2 * k + 1) as u32;
            out = out
                .into_iter()
                .flat_map(|p: Vec<u32>| {
                    (0..=bound).map(move |t| {
                        let mut q = p.clone();
                        q.push(t);
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(RootSequence).collect()
    }

    /// Parses `5,1,0`.
    pub fn parse(s: &str) -> Result<Self> {
        let v: std::result::Result<Vec<u32>, _> = s.split(',').map(|x| x.trim().parse::<u32>()).collect();
        RootSequence::new(v.map_err(|e| Error::Parse(format!("theta '{s}': {e}")))?)
    }
}

impl fmt::Display for RootSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// The sets `R_k`, `T'_k`, `T_k` for `1 ≤ k ≤ 2n` and the predicate `P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RtSets {
    pub n: usize,
    pub theta: RootSequence,
    /// Indexed by `k`; entry 0 is unused.
    pub r: Vec<BTreeSet<usize>>,
    pub t_prime: Vec<BTreeSet<usize>>,
    pub t: Vec<BTreeSet<usize>>,
    p: Vec<Vec<bool>>,
}

impl RtSets {
    /// `P(i,j)` for `1 ≤ i ≤ j ≤ 2n`; false outside that range.
    pub fn p(&self, i: usize, j: usize) -> bool {
        i >= 1 && i <= j && j <= 2 * self.n && self.p[i][j]
    }

    pub fn theta_tilde(&self, k: usize) -> usize {
        k + self.theta.0[k - 1] as usize - 1
    }
}

fn predicate(n: usize, t: &[BTreeSet<usize>], i: usize, j: usize) -> bool {
    if i == 0 || i > j || j > 2 * n {
        return false;
    }
    t[i].contains(&j) || t[psi_raw(n, j)].contains(&psi_raw(n, i))
}

/// The downward construction of `R_k`, `T'_k` and `T_k`.
pub fn build_rt(theta: &RootSequence) -> Result<RtSets> {
    let theta = RootSequence::new(theta.0.clone())?;
    let n = theta.n();
    let mut r = vec![BTreeSet::new(); 2 * n + 2];
    let mut tp = vec![BTreeSet::new(); 2 * n + 2];
    let mut t = vec![BTreeSet::new(); 2 * n + 2];
    for k in (1..=n).rev() {
        let th = theta.0[k - 1] as usize;
        if th == 0 {
            continue;
        }
        let tt = k + th - 1;
        let pk = psi_raw(n, k);
        let p = |i: usize, j: usize| predicate(n, &t, i, j);
        let mut rk: BTreeSet<usize> = BTreeSet::from([tt]);
        for m in k..tt {
            if !p(m + 1, tt) && (k..m).all(|x| p(x + 1, m) == p(x + 1, tt)) {
                rk.insert(m);
            }
        }
        let mut tpk = rk.clone();
        for &s in &rk {
            for a in s + 1..pk {
                if p(s + 1, a) {
                    tpk.insert(a);
                }
            }
        }
        let mut tk = tpk.clone();
        if rk.iter().any(|&s| tpk.contains(&psi_raw(n, s + 1))) {
            tk.insert(pk);
        }
        r[k] = rk;
        tp[k] = tpk;
        t[k] = tk;
    }
    let mut p = vec![vec![false; 2 * n + 1]; 2 * n + 1];
    for (i, row) in p.iter_mut().enumerate().skip(1) {
        for (j, cell) in row.iter_mut().enumerate().skip(i) {
            *cell = predicate(n, &t, i, j);
        }
    }
    Ok(RtSets { n, theta, r, t_prime: tp, t, p })
}

/// `Φ^{T_k}(k,m)` over `m ∈ R_k`, after checking that each `T_k` is
/// `(k,m)`-regular.
pub fn generators_from(rt: &RtSets) -> Result<Vec<PhiElement>> {
    let n = rt.n;
    let mut out = Vec::new();
    for k in 1..=n {
        let tk: Vec<usize> = rt.t[k].iter().copied().collect();
        for &m in &rt.r[k] {
            if !is_regular(n, &tk, k, m)? {
                return Err(Error::NotRegular { set: tk, k, m });
            }
            out.push(PhiElement::new(&tk, k, m));
        }
    }
    Ok(out)
}

pub fn generators(theta: &RootSequence) -> Result<Vec<PhiElement>> {
    generators_from(&build_rt(theta)?)
}

/// `{[k:m] : m ∈ T'_k}`.
pub fn roots(theta: &RootSequence) -> Result<BTreeSet<RootInterval>> {
    let rt = build_rt(theta)?;
    roots_from(&rt)
}

fn roots_from(rt: &RtSets) -> Result<BTreeSet<RootInterval>> {
    let mut out = BTreeSet::new();
    for k in 1..=rt.n {
        for &m in &rt.t_prime[k] {
            out.insert(RootInterval::new(rt.n, k, m)?);
        }
    }
    Ok(out)
}

/// `{[k:m] : m ∈ R_k}`.
pub fn simple_roots(theta: &RootSequence) -> Result<BTreeSet<RootInterval>> {
    let rt = build_rt(theta)?;
    simple_roots_from(&rt)
}

fn simple_roots_from(rt: &RtSets) -> Result<BTreeSet<RootInterval>> {
    let mut out = BTreeSet::new();
    for k in 1..=rt.n {
        for &m in &rt.r[k] {
            out.insert(RootInterval::new(rt.n, k, m)?);
        }
    }
    Ok(out)
}

/// The elements of `roots` that are not sums of two or more roots.
pub fn indecomposable_roots(n: usize, roots: &BTreeSet<RootInterval>) -> BTreeSet<RootInterval> {
    let gens: Vec<Constitution> = roots.iter().map(|r| r.constitution(n)).collect();
    let mut memo = HashMap::new();
    roots
        .iter()
        .filter(|r| {
            let c = r.constitution(n);
            !gens.iter().any(|g| match c.checked_sub(g) {
                Some(rest) if !rest.is_zero() => monoid_contains(&rest, &gens, &mut memo),
                _ => false,
            })
        })
        .copied()
        .collect()
}

/// The combinatorial description of `U_θ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubalgebraDescriptor {
    pub theta: RootSequence,
    pub rt: RtSets,
    pub generators: Vec<PhiElement>,
    pub roots: BTreeSet<RootInterval>,
    pub simple_roots: BTreeSet<RootInterval>,
}

impl SubalgebraDescriptor {
    pub fn new(theta: &RootSequence) -> Result<Self> {
        let rt = build_rt(theta)?;
        Ok(SubalgebraDescriptor {
            theta: rt.theta.clone(),
            generators: generators_from(&rt)?,
            roots: roots_from(&rt)?,
            simple_roots: simple_roots_from(&rt)?,
            rt,
        })
    }

    pub fn to_json(&self) -> Value {
        let n = self.rt.n;
        let sets = |v: &[BTreeSet<usize>]| -> Value {
            let m: serde_json::Map<String, Value> =
                (1..=n).map(|k| (k.to_string(), json!(v[k].iter().collect::<Vec<_>>()))).collect();
            Value::Object(m)
        };
        json!({
            "theta": self.theta.0,
            "R": sets(&self.rt.r),
            "T": sets(&self.rt.t),
            "generators": self.generators.iter().map(|g| json!({"S": g.set, "k": g.k, "m": g.m})).collect::<Vec<_>>(),
            "simple_roots": self.simple_roots.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
            "roots": self.roots.iter().map(|r| r.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// One descriptor per root sequence, in lexicographic order of `θ`.
pub fn enumerate(n: usize) -> Result<Vec<SubalgebraDescriptor>> {
    RootSequence::all(n).par_iter().map(SubalgebraDescriptor::new).collect()
}

/// `U¹_θ`: each generator paired with the inverse of its group element
/// `g_{km}`, written as an exponent vector.
pub fn normalized_generators(theta: &RootSequence) -> Result<Vec<(Vec<i64>, PhiElement)>> {
    let n = theta.n();
    Ok(generators(theta)?
        .into_iter()
        .map(|g| {
            let grp: Vec<i64> = g.constitution(n).as_group().into_iter().map(|e| -e).collect();
            (grp, g)
        })
        .collect())
}

/// Spans of products of fixed generators, by degree.
pub struct SpanOracle<F: FieldScalar> {
    alg: Arc<Algebra<F>>,
    gens: Vec<ShuffleElement<F>>,
    bound: u32,
    cache: RwLock<HashMap<Constitution, Arc<Echelon<F>>>>,
}

impl<F: FieldScalar> SpanOracle<F> {
    /// Nonzero homogeneous generators; zero elements are dropped.
    pub fn new(alg: Arc<Algebra<F>>, gens: Vec<ShuffleElement<F>>, bound: u32) -> Result<Self> {
        let mut kept = Vec::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            if g.degree().is_none() {
                return Err(Error::NonHomogeneous);
            }
            kept.push(g);
        }
        Ok(SpanOracle { alg, gens: kept, bound, cache: RwLock::new(HashMap::new()) })
    }

    /// The oracle of the subalgebra generated by `Φ`-elements.
    pub fn from_phi<S: Scalar<Fraction = F>>(alg: &Algebra<S>, gens: &[PhiElement], bound: u32) -> Result<Self> {
        let fa = alg.fraction()?;
        let values = gens.iter().map(|g| fa.phi_element(g)).collect::<Result<Vec<_>>>()?;
        SpanOracle::new(fa, values, bound)
    }

    /// The oracle of the right coideal subalgebra generated by `Φ`-elements
    /// and the group: generators are first replaced by a basis of the right
    /// coideal they span.
    pub fn coideal_from_phi<S: Scalar<Fraction = F>>(
        alg: &Algebra<S>,
        gens: &[PhiElement],
        bound: u32,
    ) -> Result<Self> {
        let fa = alg.fraction()?;
        let values = gens.iter().map(|g| fa.phi_element(g)).collect::<Result<Vec<_>>>()?;
        let closed = coideal_closure(&fa, &values);
        SpanOracle::new(fa, closed, bound)
    }

    pub fn algebra(&self) -> &Arc<Algebra<F>> {
        &self.alg
    }

    fn echelon(&self, d: &Constitution) -> Result<Arc<Echelon<F>>> {
        if d.total() > self.bound {
            return Err(Error::DegreeBound { bound: self.bound, degree: d.total() });
        }
        if let Some(e) = self.cache.read().unwrap().get(d) {
            return Ok(e.clone());
        }
        let mut e = Echelon::new(false);
        if d.is_zero() {
            e.insert(BTreeMap::from([(Word::empty(), F::one())]));
        } else {
            for g in &self.gens {
                let gd = g.degree().unwrap();
                let Some(rest) = d.checked_sub(gd) else { continue };
                let sub = self.echelon(&rest)?;
                for row in sub.basis() {
                    let b = ShuffleElement::from_terms(row, self.alg.n());
                    e.insert(self.alg.product(&b, g).into_terms());
                }
            }
        }
        let e = Arc::new(e);
        self.cache.write().unwrap().insert(d.clone(), e.clone());
        Ok(e)
    }

    /// A basis of the degree-`d` component of the generated subalgebra.
    pub fn span(&self, d: &Constitution) -> Result<Vec<ShuffleElement<F>>> {
        let n = self.alg.n();
        Ok(self
            .echelon(d)?
            .basis()
            .into_iter()
            .map(|r| ShuffleElement::from_terms(r, n).with_degree(d.clone()))
            .collect())
    }

    pub fn dim(&self, d: &Constitution) -> Result<usize> {
        Ok(self.echelon(d)?.rank())
    }

    pub fn contains(&self, a: &ShuffleElement<F>) -> Result<bool> {
        if a.is_zero() {
            return Ok(true);
        }
        let d = a.degree().ok_or(Error::NonHomogeneous)?;
        Ok(self.echelon(d)?.contains(a.terms()))
    }

    /// Roots of the generated subalgebra, found degree by degree: `γ` is a
    /// root when the span in degree `γ` exceeds the count of products of
    /// smaller roots by one.
    pub fn roots(&self) -> Result<BTreeSet<RootInterval>> {
        let n = self.alg.n();
        let mut candidates: Vec<(usize, usize)> =
            (1..=n).flat_map(|k| (k..psi_raw(n, k)).map(move |m| (k, m))).collect();
        candidates.sort_by_key(|&(k, m)| (m - k, k));
        let mut found: Vec<Constitution> = Vec::new();
        let mut out = BTreeSet::new();
        for (k, m) in candidates {
            let gamma = Constitution::interval(n, k, m);
            let products = count_multisets(&gamma, &found, found.len());
            let dim = self.dim(&gamma)?;
            match dim.checked_sub(products) {
                Some(0) => {}
                Some(1) => {
                    found.push(gamma);
                    out.insert(RootInterval::new(n, k, m)?);
                }
                _ => {
                    return Err(Error::Inconsistent(format!(
                        "degree [{k}:{m}] has dimension {dim} but {products} root products"
                    )))
                }
            }
        }
        Ok(out)
    }
}

/// A basis of the right coideal spanned by the left legs of the coproducts of
/// `elems`, group parts removed, without constants.
pub fn coideal_closure<F: FieldScalar>(alg: &Algebra<F>, elems: &[ShuffleElement<F>]) -> Vec<ShuffleElement<F>> {
    let n = alg.n();
    let mut legs: BTreeMap<(usize, Word, Vec<i64>), BTreeMap<Word, F>> = BTreeMap::new();
    for (i, e) in elems.iter().enumerate() {
        for ((g, wl, wr), c) in alg.hopf_coproduct(e).terms {
            if wl.is_empty() {
                continue;
            }
            let entry = legs.entry((i, wr, g)).or_default();
            let v = entry.remove(&wl).map_or(c.clone(), |x| x.add_ref(&c));
            if !v.is_zero() {
                entry.insert(wl, v);
            }
        }
    }
    let mut by_degree: BTreeMap<Constitution, Echelon<F>> = BTreeMap::new();
    for (_, t) in legs {
        if t.is_empty() {
            continue;
        }
        let d = t.keys().next().unwrap().constitution(n);
        by_degree.entry(d).or_insert_with(|| Echelon::new(false)).insert(t);
    }
    by_degree
        .into_iter()
        .flat_map(|(d, e)| {
            e.basis()
                .into_iter()
                .map(move |r| ShuffleElement::from_terms(r, n).with_degree(d.clone()))
                .collect::<Vec<_>>()
        })
        .collect()
}

fn count_multisets(target: &Constitution, parts: &[Constitution], upto: usize) -> usize {
    if target.is_zero() {
        return 1;
    }
    (0..upto)
        .map(|j| match target.checked_sub(&parts[j]) {
            Some(rest) => count_multisets(&rest, parts, j + 1),
            None => 0,
        })
        .sum()
}

/// `θ_k` is the length of the longest simple root `[k:m]`, `m < ψ(k)`.
pub fn theta_of_simple_roots(n: usize, simple: &BTreeSet<RootInterval>) -> RootSequence {
    RootSequence(crate::phi::theta_from_simple_roots(n, simple.iter().copied()))
}

/// The root sequence of the right coideal subalgebra generated by `gens`
/// and the group, computed through the span oracle.
pub fn root_sequence_of<S: Scalar>(alg: &Algebra<S>, gens: &[PhiElement]) -> Result<RootSequence> {
    Ok(root_data_of(alg, gens)?.0)
}

/// Root sequence, roots and simple roots of the right coideal subalgebra
/// generated by `gens` and the group, from the span oracle.
pub fn root_data_of<S: Scalar>(
    alg: &Algebra<S>,
    gens: &[PhiElement],
) -> Result<(RootSequence, BTreeSet<RootInterval>, BTreeSet<RootInterval>)> {
    let n = alg.n();
    let oracle = SpanOracle::coideal_from_phi(alg, gens, (2 * n) as u32)?;
    let roots = oracle.roots()?;
    let simple = indecomposable_roots(n, &roots);
    Ok((theta_of_simple_roots(n, &simple), roots, simple))
}

/// Default degree bound: the sum of the two largest generator degrees.
pub fn default_degree_bound(n: usize, gens: &[PhiElement]) -> u32 {
    let mut d: Vec<u32> = gens.iter().map(|g| g.constitution(n).total()).collect();
    d.sort_unstable_by(|a, b| b.cmp(a));
    d.iter().take(2).sum::<u32>().max(1)
}

/// Whether `a` lies in `U_θ`.
pub fn contains<S: Scalar>(alg: &Algebra<S>, theta: &RootSequence, a: &ShuffleElement<S>, bound: u32) -> Result<bool> {
    let oracle = SpanOracle::from_phi(alg, &generators(theta)?, bound)?;
    oracle.contains(&a.to_fraction())
}

/// A basis of the degree-`d` component of `U_θ`.
pub fn span<S: Scalar>(
    alg: &Algebra<S>,
    theta: &RootSequence,
    d: &Constitution,
    bound: u32,
) -> Result<Vec<ShuffleElement<S::Fraction>>> {
    SpanOracle::from_phi(alg, &generators(theta)?, bound)?.span(d)
}

/// Containment order on the `U_θ`, transitively reduced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    pub nodes: Vec<RootSequence>,
    /// `(i, j)` with `U_{nodes[i]} ⊂ U_{nodes[j]}` a covering relation.
    pub edges: Vec<(usize, usize)>,
}

impl Lattice {
    pub fn edge_set(&self) -> BTreeSet<(Vec<u32>, Vec<u32>)> {
        self.edges.iter().map(|&(i, j)| (self.nodes[i].0.clone(), self.nodes[j].0.clone())).collect()
    }

    pub fn to_json(&self) -> Value {
        let adj: Vec<Value> = self
            .nodes
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let up: Vec<Vec<u32>> =
                    self.edges.iter().filter(|e| e.0 == i).map(|&(_, j)| self.nodes[j].0.clone()).collect();
                json!({"theta": t.0, "covered_by": up})
            })
            .collect();
        Value::Array(adj)
    }
}

impl fmt::Display for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j) in &self.edges {
            writeln!(f, "{} < {}", self.nodes[*i], self.nodes[*j])?;
        }
        Ok(())
    }
}

/// The Hasse diagram of all `U_θ` of rank `n` under inclusion, decided by
/// span membership of generators.
pub fn lattice<S: Scalar>(alg: &Algebra<S>, bound: u32) -> Result<Lattice> {
    let n = alg.n();
    let nodes = RootSequence::all(n);
    let gens: Vec<Vec<PhiElement>> = nodes.iter().map(generators).collect::<Result<_>>()?;
    let fa = alg.fraction()?;
    let values: Vec<Vec<ShuffleElement<S::Fraction>>> =
        gens.iter().map(|g| g.iter().map(|e| fa.phi_element(e)).collect::<Result<Vec<_>>>()).collect::<Result<_>>()?;
    let oracles: Vec<SpanOracle<S::Fraction>> =
        values.iter().map(|v| SpanOracle::new(fa.clone(), v.clone(), bound)).collect::<Result<_>>()?;
    let count = nodes.len();
    let pairs: Vec<(usize, usize)> =
        (0..count).flat_map(|i| (0..count).map(move |j| (i, j))).filter(|(i, j)| i != j).collect();
    let verdicts: Vec<((usize, usize), bool)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let inside = values[i].iter().map(|v| oracles[j].contains(v)).collect::<Result<Vec<bool>>>()?;
            Ok(((i, j), inside.into_iter().all(|b| b)))
        })
        .collect::<Result<_>>()?;
    let le: HashMap<(usize, usize), bool> = verdicts.into_iter().collect();
    let below = |i: usize, j: usize| i != j && le[&(i, j)] && !le[&(j, i)];
    let mut edges = Vec::new();
    for i in 0..count {
        for j in 0..count {
            if below(i, j) && !(0..count).any(|k| below(i, k) && below(k, j)) {
                edges.push((i, j));
            }
        }
    }
    Ok(Lattice { nodes, edges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{LaurentScalar, Mode};

    fn th(v: &[u32]) -> RootSequence {
        RootSequence::new(v.to_vec()).unwrap()
    }

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn bounds_and_enumeration_order() {
        assert!(RootSequence::new(vec![4, 1]).is_err());
        assert!(RootSequence::new(vec![3, 2]).is_err());
        assert_eq!(RootSequence::all(2).len(), 8);
        assert_eq!(RootSequence::all(3).len(), 48);
        assert_eq!(RootSequence::all(2)[1], th(&[0, 1]));
        assert_eq!(RootSequence::parse("5,1,0").unwrap(), th(&[5, 1, 0]));
    }

    #[test]
    fn construction_examples() {
        let rt = build_rt(&th(&[0, 1])).unwrap();
        assert_eq!(rt.t[2], set(&[2, 3]));
        let rt = build_rt(&th(&[5, 1, 0])).unwrap();
        assert_eq!(rt.r[2], set(&[2]));
        assert_eq!(rt.t[2], set(&[2]));
        assert_eq!(rt.r[1], set(&[1, 3, 5]));
        assert_eq!(rt.t[1], set(&[1, 2, 3, 5, 6]));
        let zero = build_rt(&RootSequence::zero(3)).unwrap();
        assert!(zero.r.iter().chain(zero.t.iter()).all(|s| s.is_empty()));
        assert!(generators(&RootSequence::zero(3)).unwrap().is_empty());
    }

    #[test]
    fn generators_of_example() {
        let g = generators(&th(&[5, 1, 0])).unwrap();
        let degs: BTreeSet<(usize, usize)> = g.iter().map(|e| (e.k, e.m)).collect();
        assert_eq!(degs, BTreeSet::from([(1, 1), (1, 3), (1, 5), (2, 2)]));
        assert!(g.contains(&PhiElement::new(&[1, 2, 3], 1, 5)));
    }

    #[test]
    fn round_trip_n2() {
        let alg: Algebra<LaurentScalar> = Algebra::default_for(2, Mode::Generic).unwrap();
        for theta in RootSequence::all(2) {
            let d = SubalgebraDescriptor::new(&theta).unwrap();
            let (t, roots, simple) = root_data_of(&alg, &d.generators).unwrap();
            assert_eq!(t, theta);
            assert_eq!(roots, d.roots);
            assert_eq!(simple, d.simple_roots);
        }
        let u13 = root_sequence_of(&alg, &[PhiElement::new(&[], 1, 3)]).unwrap();
        assert_eq!(u13, th(&[3, 1]));
    }

    #[test]
    fn normalized() {
        let v = normalized_generators(&th(&[2, 0])).unwrap();
        assert_eq!(v, vec![(vec![-1, 0], PhiElement::new(&[], 1, 1)), (vec![-1, -1], PhiElement::new(&[1], 1, 2))]);
    }
}
