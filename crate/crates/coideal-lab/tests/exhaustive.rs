//! Exhaustive checks over small ranks: standard words, interval chains, PBW
//! bases, and the bracket identities between the elements `u[k,m]`.

use coideal_lab::pbw::pbw_monomials;
use coideal_lab::scalar::{LaurentScalar, Mode, Scalar};
use coideal_lab::shuffle::{Algebra, ShuffleElement};
use coideal_lab::words::{
    decompose_interval, is_standard, standard_bracketing, Bracket, Constitution, RootInterval, Word,
};

type L = LaurentScalar;
type E = ShuffleElement<L>;

fn psi(n: usize, i: usize) -> usize {
    2 * n + 1 - i
}

fn words(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=n).map(move |l| {
                    let mut v = w.clone();
                    v.push(l);
                    v
                })
            })
            .collect();
    }
    out
}

fn mobius(mut d: usize) -> i64 {
    let mut out = 1;
    let mut p = 2;
    while p * p <= d {
        if d.is_multiple_of(p) {
            d /= p;
            if d.is_multiple_of(p) {
                return 0;
            }
            out = -out;
        }
        p += 1;
    }
    if d > 1 {
        out = -out;
    }
    out
}

/// Witt's count of aperiodic necklaces, which is the number of standard
/// words of length `len` for any total order on `n` letters.
fn witt(n: usize, len: usize) -> usize {
    let s: i64 =
        (1..=len).filter(|d| len.is_multiple_of(*d)).map(|d| mobius(d) * (n as i64).pow((len / d) as u32)).sum();
    (s / len as i64) as usize
}

fn check_bracketing(b: &Bracket) {
    if let Bracket::Node(l, r) = b {
        let (v, u) = (l.word(), r.word());
        assert!(is_standard(&v) && is_standard(&u));
        let w = v.concat(&u);
        let first = (1..w.len())
            .find(|&i| {
                let (a, c) = w.split_at(i);
                is_standard(&a) && is_standard(&c)
            })
            .unwrap();
        assert_eq!(first, v.len(), "split of {w}");
        check_bracketing(l);
        check_bracketing(r);
    }
}

#[test]
fn standard_words_and_their_bracketing() {
    for n in 1..=3 {
        for len in 1..=6 {
            let mut count = 0;
            for w in words(n, len) {
                let w = Word::from_letters(&w);
                if is_standard(&w) {
                    count += 1;
                    let b = standard_bracketing(&w).unwrap();
                    assert_eq!(b.word(), w);
                    check_bracketing(&b);
                } else {
                    assert!(standard_bracketing(&w).is_err());
                }
            }
            assert_eq!(count, witt(n, len), "n = {n}, length {len}");
        }
    }
}

fn proper_intervals(n: usize) -> Vec<RootInterval> {
    let mut out = Vec::new();
    for l in 1..=2 * n {
        for m in l..psi(n, l) {
            out.push(RootInterval { k: l, m });
        }
    }
    out
}

#[test]
fn interval_decompositions_exist() {
    for n in 1..=3 {
        let parts = proper_intervals(n);
        let mut cases = 0;
        for k in 1..=2 * n {
            for m in k..=2 * n {
                let target = RootInterval::new(n, k, m).unwrap();
                let want = Constitution::interval(n, k, m);
                let mut choices: Vec<Vec<RootInterval>> = parts.iter().map(|p| vec![*p]).collect();
                for a in 0..parts.len() {
                    for b in a..parts.len() {
                        choices.push(vec![parts[a], parts[b]]);
                        for c in b..parts.len() {
                            choices.push(vec![parts[a], parts[b], parts[c]]);
                        }
                    }
                }
                for ps in choices {
                    let sum = ps.iter().fold(Constitution::zero(n), |s, p| s.add(&p.constitution(n)));
                    if sum != want {
                        assert!(decompose_interval(n, target, &ps).is_err());
                        continue;
                    }
                    cases += 1;
                    let chain = decompose_interval(n, target, &ps).unwrap().expect("chain exists");
                    assert_eq!(chain.first(), Some(&(target.k - 1)));
                    assert_eq!(chain.last(), Some(&target.m));
                    let mut pieces: Vec<Constitution> =
                        chain.windows(2).map(|w| Constitution::interval(n, w[0] + 1, w[1])).collect();
                    let mut expected: Vec<Constitution> = ps.iter().map(|p| p.constitution(n)).collect();
                    pieces.sort();
                    expected.sort();
                    assert_eq!(pieces, expected);
                    assert!(chain.windows(2).all(|w| w[0] < w[1]));
                }
            }
        }
        assert!(cases > 0);
    }
}

fn constitutions(n: usize, max: u32) -> Vec<Constitution> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        out = out.into_iter().flat_map(|v: Vec<u32>| (0..=max).map(move |e| [v.clone(), vec![e]].concat())).collect();
    }
    out.into_iter().filter(|v| v.iter().sum::<u32>() <= max && v.iter().sum::<u32>() > 0).map(Constitution).collect()
}

#[test]
fn pbw_monomials_form_a_basis_up_to_degree_six() {
    for n in 1..=3 {
        let a = Algebra::<L>::default_for(n, Mode::Generic).unwrap();
        let fa = a.fraction().unwrap();
        for d in constitutions(n, 6) {
            let basis = a.pbw_basis(&d).unwrap();
            assert_eq!(basis.dim(), pbw_monomials(n, &d, Mode::Generic).len());
            let letters: Vec<usize> =
                d.0.iter().enumerate().flat_map(|(i, &e)| std::iter::repeat_n(i + 1, e as usize)).collect();
            let mut seen = std::collections::BTreeSet::new();
            for w in words(n, letters.len()) {
                let mut sorted = w.clone();
                sorted.sort();
                if sorted != letters || !seen.insert(w.clone()) {
                    continue;
                }
                let product = a.product_all(w.iter().map(|&i| a.letter(i)).collect::<Vec<_>>().iter());
                let dec = a.pbw_decompose(&product).unwrap();
                assert_eq!(fa.eval_decomposition(&dec).unwrap(), product.to_fraction(), "degree {d}");
            }
        }
    }
}

struct Ctx {
    a: Algebra<L>,
}

impl Ctx {
    fn new(n: usize) -> Self {
        Ctx { a: Algebra::default_for(n, Mode::Generic).unwrap() }
    }

    fn u(&self, k: usize, m: usize) -> E {
        self.a.u_bracket(k, m).unwrap()
    }

    fn br(&self, x: &E, y: &E) -> E {
        self.a.bracket(x, y).unwrap()
    }

    fn zero_both_ways(&self, x: &E, y: &E) -> bool {
        self.br(x, y).is_zero() && self.br(y, x).is_zero()
    }

    /// Every bracketing of the sequence, as values.
    fn all_bracketings(&self, items: &[E]) -> Vec<E> {
        if items.len() == 1 {
            return vec![items[0].clone()];
        }
        let mut out = Vec::new();
        for s in 1..items.len() {
            for l in self.all_bracketings(&items[..s]) {
                for r in self.all_bracketings(&items[s..]) {
                    out.push(self.br(&l, &r));
                }
            }
        }
        out
    }
}

#[test]
fn letters_commuting_with_half_intervals() {
    for n in 2..=4 {
        let c = Ctx::new(n);
        for k in 1..=n {
            for t in (1..n).filter(|&t| t + 1 != k && t != k) {
                assert!(c.zero_both_ways(&c.u(k, n), &c.a.letter(t)), "n={n} k={k} t={t}");
            }
        }
        for m in n + 1..=2 * n {
            for t in (1..n).filter(|&t| t + 1 != psi(n, m) && t != psi(n, m)) {
                assert!(c.zero_both_ways(&c.a.letter(t), &c.u(n + 1, m)), "n={n} m={m} t={t}");
            }
        }
        for k in 2..n {
            let x = |i| c.a.letter(i);
            for items in [[x(k + 1), x(k), x(k - 1)], [x(k - 1), x(k), x(k + 1)]] {
                for b in c.all_bracketings(&items) {
                    assert!(c.br(&b, &x(k)).is_zero(), "n={n} k={k}");
                }
            }
        }
    }
}

#[test]
fn bracketings_across_the_middle_agree() {
    for n in 1..=3 {
        let c = Ctx::new(n);
        for k in 1..=n {
            for m in n + 1..=2 * n {
                let items: Vec<E> = if m < psi(n, k) {
                    std::iter::once(c.u(k, n)).chain((n + 1..=m).map(|i| c.a.letter(i))).collect()
                } else if m > psi(n, k) {
                    (k..=n).map(|i| c.a.letter(i)).chain(std::iter::once(c.u(n + 1, m))).collect()
                } else {
                    continue;
                };
                for b in c.all_bracketings(&items) {
                    assert_eq!(b, c.u(k, m), "n={n} k={k} m={m}");
                }
            }
        }
    }
}

#[test]
fn vanishing_brackets_between_intervals() {
    for n in 1..=3 {
        let c = Ctx::new(n);
        for k in 1..=n {
            for m in n + 1..=2 * n {
                if m == psi(n, k) {
                    continue;
                }
                for i in k..n {
                    if i + 1 != psi(n, m) {
                        assert!(c.zero_both_ways(&c.u(k, i), &c.u(n + 1, m)), "n={n} k={k} i={i} m={m}");
                    }
                }
                for i in n + 1..m {
                    if i != psi(n, k) {
                        assert!(c.zero_both_ways(&c.u(k, n), &c.u(i + 1, m)), "n={n} k={k} i={i} m={m}");
                    }
                }
            }
        }
    }
}

#[test]
fn splitting_at_the_middle() {
    for n in 1..=3 {
        let c = Ctx::new(n);
        for k in 1..=n {
            for m in n + 1..=2 * n {
                if m == psi(n, k) {
                    continue;
                }
                let (u, v) = (c.u(k, n), c.u(n + 1, m));
                let beta =
                    L::from_monomial(c.a.p(v.degree().unwrap(), u.degree().unwrap()).as_monomial().unwrap().1.inv());
                assert_eq!(c.br(&u, &v), c.u(k, m));
                assert_eq!(c.br(&v, &u).scale(&-beta), c.u(k, m));
            }
        }
    }
}

#[test]
fn interval_products_and_commutation() {
    for n in 1..=3 {
        let c = Ctx::new(n);
        for k in 1..=2 * n {
            for m in k..=2 * n {
                if m == psi(n, k) {
                    continue;
                }
                for i in k..m {
                    if i + 1 != psi(n, m) && i != psi(n, k) {
                        assert_eq!(c.br(&c.u(k, i), &c.u(i + 1, m)), c.u(k, m), "n={n} k={k} i={i} m={m}");
                    }
                    for j in i + 1..m {
                        if m + 1 == psi(n, i) || j == psi(n, k) {
                            continue;
                        }
                        let (x, y) = (c.u(k, i), c.u(j + 1, m));
                        assert!(c.br(&x, &y).is_zero(), "n={n} k={k} i={i} j={j} m={m}");
                        if i + 1 != psi(n, j) {
                            assert!(c.br(&y, &x).is_zero(), "n={n} k={k} i={i} j={j} m={m}");
                        }
                    }
                }
            }
        }
    }
}
