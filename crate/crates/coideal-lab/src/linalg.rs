//! Sparse reduced row echelon forms over a field, keyed by words.

use std::collections::{BTreeMap, HashMap};

use crate::scalar::FieldScalar;
use crate::words::Word;

pub(crate) type SparseVec<F> = BTreeMap<Word, F>;

#[derive(Clone, Debug)]
struct Row<F> {
    pivot: Word,
    vec: SparseVec<F>,
    combo: BTreeMap<usize, F>,
}

/// Incrementally built reduced row echelon form. Every row has pivot
/// coefficient 1 and no other row has a nonzero entry at its pivot.
/// Optionally tracks each row as a combination of the inserted vectors.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    rows: Vec<Row<F>>,
    pivots: HashMap<Word, usize>,
    inputs: usize,
    track: bool,
}

fn axpy<K: Ord + Clone, F: FieldScalar>(y: &mut BTreeMap<K, F>, a: &F, x: &BTreeMap<K, F>) {
    if a.is_zero() {
        return;
    }
    for (k, v) in x {
        let t = a.mul_ref(v);
        match y.get_mut(k) {
            Some(e) => {
                let s = e.add_ref(&t);
                if s.is_zero() {
                    y.remove(k);
                } else {
                    *e = s;
                }
            }
            None => {
                y.insert(k.clone(), t);
            }
        }
    }
}

fn scale_map<K: Ord + Clone, F: FieldScalar>(m: &BTreeMap<K, F>, a: &F) -> BTreeMap<K, F> {
    m.iter().map(|(k, x)| (k.clone(), x.mul_ref(a))).collect()
}

impl<F: FieldScalar> Echelon<F> {
    pub fn new(track: bool) -> Self {
        Echelon { rows: Vec::new(), pivots: HashMap::new(), inputs: 0, track }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the rows. Returns the remainder and the
    /// coefficients `c_i` with `v = remainder + Σ c_i row_i`.
    fn reduce_rows(&self, mut v: SparseVec<F>) -> (SparseVec<F>, Vec<(usize, F)>) {
        let hits: Vec<(usize, F)> = v.iter().filter_map(|(w, c)| self.pivots.get(w).map(|&i| (i, c.clone()))).collect();
        for (i, c) in &hits {
            axpy(&mut v, &-c.clone(), &self.rows[*i].vec);
        }
        (v, hits)
    }

    /// Inserts a vector. Returns true when it was independent of the rows.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        let idx = self.inputs;
        self.inputs += 1;
        let (rem, hits) = self.reduce_rows(v);
        if rem.is_empty() {
            return false;
        }
        let mut combo = BTreeMap::new();
        if self.track {
            combo.insert(idx, F::one());
            for (i, c) in &hits {
                axpy(&mut combo, &-c.clone(), &self.rows[*i].combo);
            }
        }
        let (pivot, lead) = rem.iter().next_back().map(|(w, c)| (w.clone(), c.clone())).unwrap();
        let inv = lead.inv().unwrap();
        let row = Row { pivot: pivot.clone(), vec: scale_map(&rem, &inv), combo: scale_map(&combo, &inv) };
        for r in self.rows.iter_mut() {
            if let Some(c) = r.vec.get(&pivot).cloned() {
                let neg = -c;
                axpy(&mut r.vec, &neg, &row.vec);
                if self.track {
                    axpy(&mut r.combo, &neg, &row.combo);
                }
            }
        }
        self.pivots.insert(pivot, self.rows.len());
        self.rows.push(row);
        true
    }

    /// True when `v` lies in the row span.
    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce_rows(v.clone()).0.is_empty()
    }

    /// Writes `v` as a combination of inserted vectors, or `None` when `v`
    /// is outside the span. Requires tracking.
    pub fn solve(&self, v: &SparseVec<F>) -> Option<BTreeMap<usize, F>> {
        assert!(self.track, "solve needs a tracking echelon form");
        let (rem, hits) = self.reduce_rows(v.clone());
        if !rem.is_empty() {
            return None;
        }
        let mut out = BTreeMap::new();
        for (i, c) in &hits {
            axpy(&mut out, c, &self.rows[*i].combo);
        }
        Some(out)
    }

    /// The linear functional on words giving the coefficient of input `j`
    /// for vectors inside the span.
    pub fn coordinate_functional(&self, j: usize) -> HashMap<Word, F> {
        assert!(self.track, "coordinate functionals need tracking");
        self.rows.iter().filter_map(|r| r.combo.get(&j).map(|c| (r.pivot.clone(), c.clone()))).collect()
    }

    /// Applies a functional produced by [`Echelon::coordinate_functional`].
    pub fn apply(functional: &HashMap<Word, F>, v: &SparseVec<F>) -> F {
        let mut acc = F::zero();
        for (w, c) in v {
            if let Some(f) = functional.get(w) {
                acc = acc.add_ref(&c.mul_ref(f));
            }
        }
        acc
    }

    /// The reduced rows, for use as a span basis.
    pub fn basis(&self) -> Vec<SparseVec<F>> {
        self.rows.iter().map(|r| r.vec.clone()).collect()
    }
}
