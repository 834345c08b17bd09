//! Randomized algebraic identities. Elements are random combinations of
//! products of letters, so they are homogeneous and lie in the subalgebra
//! generated by the letters.

use coideal_lab::classifier::{build_rt, RootSequence};
use coideal_lab::coefficients::Bicharacter;
use coideal_lab::phi::{dual_set, restrict, ColoredScheme};
use coideal_lab::scalar::{CyclotomicScalar, FieldScalar, LaurentScalar, Mode, RationalFunction, Scalar};
use coideal_lab::shuffle::{Algebra, ShuffleElement};
use coideal_lab::words::{psi, Constitution};
use num_traits::{One, Zero};
use proptest::prelude::*;

type L = LaurentScalar;
type E = ShuffleElement<L>;

/// `Σ c_j q^{e_j} · x_{w_j(1)} ⋯ x_{w_j(r)}` over rearrangements `w_j` of
/// one multiset of letters.
#[derive(Clone, Debug)]
struct Spec(Vec<(Vec<usize>, i64, i32)>);

fn spec(letters: Vec<usize>, terms: usize) -> impl Strategy<Value = Spec> {
    prop::collection::vec((Just(letters).prop_shuffle(), -3i64..=3, -2i32..=2), 1..=terms).prop_map(Spec)
}

fn spec_over(alphabet: Vec<usize>, max_len: usize) -> impl Strategy<Value = Spec> {
    prop::collection::vec(prop::sample::select(alphabet), 1..=max_len).prop_flat_map(|l| spec(l, 2))
}

fn build(a: &Algebra<L>, s: &Spec, degree: Constitution) -> E {
    let mut out = E::zero_of(degree);
    for (w, c, e) in &s.0 {
        let letters: Vec<E> = w.iter().map(|&i| a.letter(i)).collect();
        let c = L::from_i64(*c) * L::q_pow(*e);
        out = out.add(&a.product_all(letters.iter()).scale(&c));
    }
    out
}

fn element(a: &Algebra<L>, s: &Spec) -> E {
    let n = a.n();
    let d = s.0[0].0.iter().fold(Constitution::zero(n), |d, &i| d.add(&Constitution::unit(n, i)));
    build(a, s, d)
}

fn algebra(n: usize, multi: bool) -> Algebra<L> {
    if multi {
        Algebra::new(Bicharacter::with_free_parameters(n), Mode::Generic).unwrap()
    } else {
        Algebra::default_for(n, Mode::Generic).unwrap()
    }
}

fn deg(a: &E) -> Constitution {
    a.degree().unwrap().clone()
}

fn triple(n: usize, len: usize) -> impl Strategy<Value = (Spec, Spec, Spec)> {
    let alphabet: Vec<usize> = (1..=n).collect();
    (spec_over(alphabet.clone(), len), spec_over(alphabet.clone(), len), spec_over(alphabet, len))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn shuffle_product_is_associative_with_unit(
        multi in any::<bool>(),
        (x, y, z) in triple(3, 3),
    ) {
        let a = algebra(3, multi);
        let (u, v, w) = (element(&a, &x), element(&a, &y), element(&a, &z));
        let lhs = a.product(&a.product(&u, &v), &w);
        let rhs = a.product(&u, &a.product(&v, &w));
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.product(&a.one(), &u), u.clone());
        prop_assert_eq!(a.product(&u, &a.one()), u);
    }

    #[test]
    fn jacobi_identities(multi in any::<bool>(), (x, y, z) in triple(3, 2)) {
        let a = algebra(3, multi);
        let (u, v, w) = (element(&a, &x), element(&a, &y), element(&a, &z));
        let p = |s: &E, t: &E| a.p(&deg(s), &deg(t));
        let uv_w = a.bracket(&a.bracket(&u, &v).unwrap(), &w).unwrap();
        let u_vw = a.bracket(&u, &a.bracket(&v, &w).unwrap()).unwrap();
        let uw = a.bracket(&u, &w).unwrap();
        let uw_v = a.bracket(&uw, &v).unwrap();
        let inv_wv = L::from_monomial(p(&w, &v).as_monomial().unwrap().1.inv());
        let first = u_vw
            .add(&uw_v.scale(&inv_wv))
            .add(&a.product(&uw, &v).scale(&(p(&v, &w) - inv_wv.clone())));
        prop_assert_eq!(&uv_w, &first);
        let second = u_vw
            .add(&a.product(&uw, &v).scale(&p(&v, &w)))
            .sub(&a.product(&v, &uw).scale(&p(&u, &v)));
        prop_assert_eq!(&uv_w, &second);
    }

    #[test]
    fn bracket_of_products(multi in any::<bool>(), (x, y, z) in triple(3, 2)) {
        let a = algebra(3, multi);
        let (u, v, w) = (element(&a, &x), element(&a, &y), element(&a, &z));
        let p = |s: &E, t: &E| a.p(&deg(s), &deg(t));
        let lhs = a.bracket(&a.product(&u, &v).with_degree(deg(&u).add(&deg(&v))), &w).unwrap();
        let rhs = a
            .product(&a.bracket(&u, &w).unwrap(), &v)
            .scale(&p(&v, &w))
            .add(&a.product(&u, &a.bracket(&v, &w).unwrap()));
        prop_assert_eq!(lhs, rhs);
        let lhs = a.bracket(&u, &a.product(&v, &w).with_degree(deg(&v).add(&deg(&w)))).unwrap();
        let rhs = a
            .product(&a.bracket(&u, &v).unwrap(), &w)
            .add(&a.product(&v, &a.bracket(&u, &w).unwrap()).scale(&p(&u, &v)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn antisymmetry(multi in any::<bool>(), (x, y, _z) in triple(3, 3)) {
        let a = algebra(3, multi);
        let (u, v) = (element(&a, &x), element(&a, &y));
        let puv = a.p(&deg(&u), &deg(&v));
        let pvu = a.p(&deg(&v), &deg(&u));
        let pvu_inv = L::from_monomial(pvu.as_monomial().unwrap().1.inv());
        let uv = a.bracket(&u, &v).unwrap();
        let vu = a.bracket(&v, &u).unwrap();
        let first = vu
            .scale(&-puv.clone())
            .add(&a.product(&u, &v).scale(&(L::one() - puv.clone() * pvu.clone())));
        prop_assert_eq!(&uv, &first);
        let second = vu
            .scale(&-pvu_inv.clone())
            .add(&a.product(&v, &u).scale(&(pvu_inv - puv)));
        prop_assert_eq!(&uv, &second);
    }

    #[test]
    fn leibniz_rule(multi in any::<bool>(), (x, y, _z) in triple(3, 3), i in 1usize..=6) {
        let a = algebra(3, multi);
        let (u, v) = (element(&a, &x), element(&a, &y));
        let xi = Constitution::unit(3, i);
        let lhs = a.partial_derivative(i, &a.product(&u, &v));
        let rhs = a
            .product(&a.partial_derivative(i, &u), &v)
            .add(&a.product(&u, &a.partial_derivative(i, &v)).scale(&a.p(&deg(&u), &xi)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn nonzero_elements_have_a_nonzero_derivative(multi in any::<bool>(), (x, _y, _z) in triple(3, 4)) {
        let a = algebra(3, multi);
        let u = element(&a, &x);
        let all_vanish = (1..=3).all(|i| a.partial_derivative(i, &u).is_zero());
        prop_assert_eq!(all_vanish, u.is_zero());
    }

    #[test]
    fn separated_elements_commute(
        n in 3usize..=4,
        x in spec_over(vec![1], 3),
        y in spec_over(vec![3], 3),
        pair in spec_over(vec![1, 2], 3),
        swap in any::<bool>(),
    ) {
        let a = algebra(n, false);
        let (u, v) = if n == 3 {
            (element(&a, &x), element(&a, &y))
        } else {
            let far: Vec<(Vec<usize>, i64, i32)> =
                y.0.iter().map(|(w, c, e)| (w.iter().map(|_| 4).collect(), *c, *e)).collect();
            (element(&a, &pair), element(&a, &Spec(far)))
        };
        let (u, v) = if swap { (v, u) } else { (u, v) };
        prop_assert!(a.bracket(&u, &v).unwrap().is_zero());
        prop_assert!(a.bracket(&v, &u).unwrap().is_zero());
    }

    #[test]
    fn pbw_decomposition_round_trips(n in 2usize..=3, x in spec_over(vec![1, 2, 3], 4)) {
        let a = algebra(n, false);
        let x = Spec(x.0.into_iter().map(|(w, c, e)| (w.into_iter().map(|l| l.min(n)).collect(), c, e)).collect());
        let u = element(&a, &x);
        let dec = a.pbw_decompose(&u).unwrap();
        let back = a.fraction().unwrap().eval_decomposition(&dec).unwrap();
        prop_assert_eq!(back, u.to_fraction());
    }
}

fn triple_km(n: usize) -> impl Strategy<Value = (Vec<usize>, usize, usize)> {
    (1..=2 * n)
        .prop_flat_map(move |k| (Just(k), k..=2 * n))
        .prop_flat_map(|(k, m)| (prop::collection::vec(any::<bool>(), m - k), Just(k), Just(m)))
        .prop_map(|(mask, k, m)| {
            let set: Vec<usize> = (k..m).filter(|j| mask[j - k]).collect();
            (restrict(&set, k, m), k, m)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn regularity_by_columns((n, (s, k, m)) in (1usize..=5).prop_flat_map(|n| (Just(n), triple_km(n)))) {
        let scheme = ColoredScheme::new(n, &s, k, m).unwrap();
        prop_assert_eq!(scheme.is_white_regular(), scheme.is_white_regular_by_columns());
        prop_assert_eq!(scheme.is_black_regular(), scheme.is_black_regular_by_columns());
    }

    #[test]
    fn duality_is_an_involution_swapping_colours((n, (s, k, m)) in (1usize..=4).prop_flat_map(|n| (Just(n), triple_km(n)))) {
        let (t, k2, m2) = dual_set(n, &s, k, m).unwrap();
        prop_assert_eq!((k2, m2), (psi(n, m).unwrap(), psi(n, k).unwrap()));
        let (s2, k3, m3) = dual_set(n, &t, k2, m2).unwrap();
        prop_assert_eq!((s2, k3, m3), (s.clone(), k, m));
        let a = ColoredScheme::new(n, &s, k, m).unwrap();
        let b = ColoredScheme::new(n, &t, k2, m2).unwrap();
        prop_assert_eq!(a.is_white_regular(), b.is_black_regular());
        prop_assert_eq!(a.is_black_regular(), b.is_white_regular());
    }

    #[test]
    fn rt_sets_respect_bounds(theta in (1usize..=5).prop_flat_map(|n| {
        (1..=n).map(|k| 0..=(2 * n - 2 * k + 1) as u32).collect::<Vec<_>>()
    })) {
        let theta = RootSequence::new(theta).unwrap();
        let n = theta.n();
        let rt = build_rt(&theta).unwrap();
        for k in 1..=2 * n {
            let psik = 2 * n + 1 - k;
            prop_assert!(rt.r[k].iter().all(|&j| k <= j && j < psik));
            prop_assert!(rt.t[k].iter().all(|&j| k <= j && j <= psik));
            if k > n {
                prop_assert!(rt.r[k].is_empty() && rt.t[k].is_empty());
            } else if theta.0[k - 1] > 0 {
                prop_assert_eq!(rt.r[k].iter().next_back().copied(), Some(rt.theta_tilde(k)));
            } else {
                prop_assert!(rt.r[k].is_empty());
            }
        }
        let text = theta.0.iter().map(|t| t.to_string()).collect::<Vec<_>>().join(",");
        prop_assert_eq!(RootSequence::parse(&text).unwrap(), theta.clone());
        prop_assert_eq!(theta.to_string(), format!("({text})"));
    }
}

fn laurent() -> impl Strategy<Value = L> {
    prop::collection::vec((-4i64..=4, -3i32..=3), 0..=3)
        .prop_map(|ts| ts.into_iter().fold(L::zero(), |acc, (c, e)| acc + L::from_i64(c) * L::q_pow(e)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_axioms(a in laurent(), b in laurent(), c in laurent()) {
        prop_assert_eq!((a.clone() * b.clone()) * c.clone(), a.clone() * (b.clone() * c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        prop_assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
        prop_assert!((a.clone() - a.clone()).is_zero());
        prop_assert_eq!(a.clone() * L::one(), a);
    }

    #[test]
    fn rational_functions_form_a_field(a in laurent(), b in laurent()) {
        let fa = RationalFunction::embed(&a, Mode::Generic);
        let fb = RationalFunction::embed(&b, Mode::Generic);
        prop_assert_eq!(fa.clone() * fb.clone(), RationalFunction::embed(&(a.clone() * b.clone()), Mode::Generic));
        if !a.is_zero() {
            prop_assert_eq!(fa.inv().unwrap() * fa.clone(), RationalFunction::one());
            prop_assert_eq!(fb.div_ref(&fa) * fa, fb);
        } else {
            prop_assert!(fa.inv().is_none());
        }
    }

    #[test]
    fn cyclotomic_reduction(t in prop::sample::select(vec![5u32, 6, 7, 8, 9, 10, 12]), a in laurent(), b in laurent()) {
        let mode = Mode::Cyclotomic(t);
        let q = CyclotomicScalar::q(t);
        let mut qt = CyclotomicScalar::one();
        for _ in 0..t {
            qt = qt * q.clone();
        }
        prop_assert_eq!(qt, CyclotomicScalar::one());
        let ca = CyclotomicScalar::embed(&a, mode);
        let cb = CyclotomicScalar::embed(&b, mode);
        prop_assert_eq!(ca.clone() * cb.clone(), CyclotomicScalar::embed(&(a.clone() * b), mode));
        let shifted = a.clone() * L::q_pow(t as i32);
        prop_assert_eq!(CyclotomicScalar::embed(&shifted, mode), ca.clone());
        if let Some(inv) = ca.inv() {
            prop_assert_eq!(inv * ca, CyclotomicScalar::one());
        } else {
            prop_assert!(ca.is_zero());
        }
    }
}
