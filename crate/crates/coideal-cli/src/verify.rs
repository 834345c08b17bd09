//! Verification suites. Each suite stops at its first failed assertion and
//! reports it as the counterexample.

use std::collections::BTreeSet;
use std::fmt::Write;

use clap::ValueEnum;
use coideal_lab::classifier::{enumerate, generators, root_sequence_of, RootSequence};
use coideal_lab::coefficients::p_eval;
use coideal_lab::pbw::{height, super_letters};
use coideal_lab::phi::{dual_set, duality_constant, is_regular, subsets};
use coideal_lab::scalar::{CyclotomicScalar, Mode, Scalar};
use coideal_lab::shuffle::{Algebra, ShuffleElement};
use coideal_lab::words::Constitution;
use rayon::prelude::*;
use serde_json::json;

use crate::{InputError, Report, RunConfig};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    Identities,
    Coproduct,
    Duality,
    Serre,
    Classification,
    Cyclotomic,
}

impl Suite {
    const ALL: [Suite; 6] =
        [Suite::Identities, Suite::Coproduct, Suite::Duality, Suite::Serre, Suite::Classification, Suite::Cyclotomic];

    fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Coproduct => "coproduct",
            Suite::Duality => "duality",
            Suite::Serre => "serre",
            Suite::Classification => "classification",
            Suite::Cyclotomic => "cyclotomic",
        }
    }
}

enum Outcome {
    Pass(String),
    Fail(String),
    /// The configuration cannot express what the suite checks.
    Skip(String),
}

type Check = Result<String, Outcome>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(Outcome::Fail(format!($($fmt)+)));
        }
    };
}

fn lib<T>(r: coideal_lab::error::Result<T>) -> Result<T, Outcome> {
    r.map_err(|e| Outcome::Fail(format!("error: {e}")))
}

/// Why `suite` cannot run under this configuration, if it cannot.
fn unsupported<S: Scalar>(cfg: &RunConfig, alg: &Algebra<S>, suite: Suite) -> Option<String> {
    match suite {
        Suite::Classification => alg.fraction().err().map(|e| e.to_string()),
        Suite::Cyclotomic => {
            let t = match cfg.mode {
                Mode::Cyclotomic(t) => t,
                Mode::Generic => 5,
            };
            CyclotomicScalar::check_support(cfg.bicharacter.param_count(), Mode::Cyclotomic(t))
                .err()
                .map(|e| e.to_string())
        }
        _ => None,
    }
}

pub fn run<S: Scalar>(cfg: &RunConfig, alg: &Algebra<S>, only: Option<Suite>) -> Result<Report, InputError> {
    if let Some(reason) = only.and_then(|s| unsupported(cfg, alg, s)) {
        return Err(InputError(reason));
    }
    let suites: Vec<Suite> = only.map(|s| vec![s]).unwrap_or_else(|| Suite::ALL.to_vec());
    let results: Vec<(Suite, Outcome)> = suites
        .par_iter()
        .map(|&s| {
            if let Some(reason) = unsupported(cfg, alg, s) {
                return (s, Outcome::Skip(reason));
            }
            let r = match s {
                Suite::Identities => identities(alg),
                Suite::Coproduct => coproduct(alg),
                Suite::Duality => duality(alg),
                Suite::Serre => serre(alg),
                Suite::Classification => classification(cfg, alg),
                Suite::Cyclotomic => cyclotomic(cfg),
            };
            (s, r.map(Outcome::Pass).unwrap_or_else(|e| e))
        })
        .collect();
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut failed = false;
    for (s, o) in &results {
        let (status, detail) = match o {
            Outcome::Pass(d) => ("pass", d),
            Outcome::Skip(d) => ("skipped", d),
            Outcome::Fail(d) => {
                failed = true;
                ("FAIL", d)
            }
        };
        writeln!(text, "{:<15} {status:<8} {detail}", s.name()).unwrap();
        rows.push(json!({"suite": s.name(), "status": status.to_lowercase(), "detail": detail}));
    }
    let json = json!({"n": cfg.n, "mode": cfg.mode.to_string(), "passed": !failed, "suites": rows});
    Ok(Report { text, json, failed })
}

fn p<S: Scalar>(a: &Algebra<S>, u: &ShuffleElement<S>, v: &ShuffleElement<S>) -> S {
    a.p(u.degree().unwrap(), v.degree().unwrap())
}

fn p_inv<S: Scalar>(a: &Algebra<S>, u: &ShuffleElement<S>, v: &ShuffleElement<S>) -> S {
    a.monomial(&p_eval(a.bicharacter(), u.degree().unwrap(), v.degree().unwrap()).inv())
}

/// Jacobi, product and antisymmetry identities for brackets, the Leibniz
/// rule and associativity, on triples of super-letters of small degree.
fn identities<S: Scalar>(a: &Algebra<S>) -> Check {
    let n = a.n();
    let els: Vec<(String, ShuffleElement<S>)> = super_letters(n)
        .iter()
        .map(|s| Ok((s.to_string(), lib(a.u_bracket(s.k, s.m))?)))
        .collect::<Result<_, Outcome>>()?;
    let size = |e: &ShuffleElement<S>| e.degree().map(|d| d.total()).unwrap_or(0);
    let br = |x: &ShuffleElement<S>, y: &ShuffleElement<S>| lib(a.bracket(x, y));
    let mut count = 0;
    for (nu, u) in &els {
        for (nv, v) in &els {
            let uv = br(u, v)?;
            let vu = br(v, u)?;
            let (puv, pvu, pvu_inv) = (p(a, u, v), p(a, v, u), p_inv(a, v, u));
            let cha = vu.scale(&-puv.clone()).add(&a.product(u, v).scale(&(S::one() - puv.clone() * pvu)));
            ensure!(uv == cha, "antisymmetry fails for {nu}, {nv}");
            let cha1 = vu.scale(&-pvu_inv.clone()).add(&a.product(v, u).scale(&(pvu_inv - puv.clone())));
            ensure!(uv == cha1, "second antisymmetry form fails for {nu}, {nv}");
            for i in 1..=n {
                let lhs = a.partial_derivative(i, &a.product(u, v));
                let xi = Constitution::unit(n, i);
                let rhs = a
                    .product(&a.partial_derivative(i, u), v)
                    .add(&a.product(u, &a.partial_derivative(i, v)).scale(&a.p(u.degree().unwrap(), &xi)));
                ensure!(lhs == rhs, "Leibniz rule fails for d{i}({nu}·{nv})");
            }
            count += 3;
            for (nw, w) in &els {
                if size(u) + size(v) + size(w) > 6 {
                    continue;
                }
                let uv_w = br(&uv, w)?;
                let vw = br(v, w)?;
                let u_vw = br(u, &vw)?;
                let uw = br(u, w)?;
                let uw_v = br(&uw, v)?;
                let (pvw, pwv_inv) = (p(a, v, w), p_inv(a, w, v));
                let jak1 =
                    u_vw.add(&uw_v.scale(&pwv_inv)).add(&a.product(&uw, v).scale(&(pvw.clone() - pwv_inv.clone())));
                ensure!(uv_w == jak1, "Jacobi identity fails for {nu}, {nv}, {nw}");
                let jak2 = u_vw.add(&a.product(&uw, v).scale(&pvw)).sub(&a.product(v, &uw).scale(&puv));
                ensure!(uv_w == jak2, "second Jacobi form fails for {nu}, {nv}, {nw}");
                let prod = a.product(u, v).with_degree(u.degree().unwrap().add(v.degree().unwrap()));
                let lhs = br(&prod, w)?;
                let rhs = a.product(&uw, v).scale(&pvw).add(&a.product(u, &vw));
                ensure!(lhs == rhs, "[uv,w] expansion fails for {nu}, {nv}, {nw}");
                let assoc = a.product(&a.product(u, v), w) == a.product(u, &a.product(v, w));
                ensure!(assoc, "associativity fails for {nu}, {nv}, {nw}");
                count += 4;
            }
        }
    }
    Ok(format!("{count} identities on {} super-letters", els.len()))
}

fn coproduct<S: Scalar>(a: &Algebra<S>) -> Check {
    let n = a.n();
    let mut count = 0;
    for k in 1..=2 * n {
        for m in k..=2 * n {
            let u = lib(a.u_bracket(k, m))?;
            ensure!(
                a.hopf_coproduct(&u) == lib(a.u_bracket_coproduct_formula(k, m))?,
                "coproduct of u[{k},{m}] differs from the three-part formula"
            );
            count += 1;
        }
    }
    Ok(format!("{count} coproducts"))
}

fn duality<S: Scalar>(a: &Algebra<S>) -> Check {
    let n = a.n();
    let mut count = 0;
    for k in 1..=2 * n {
        for m in k..=2 * n {
            for s in subsets(k, m) {
                if !lib(is_regular(n, &s, k, m))? {
                    continue;
                }
                let (t, k2, m2) = lib(dual_set(n, &s, k, m))?;
                let c = a.scalar(&lib(duality_constant(a.bicharacter(), &s, k, m))?);
                let lhs = lib(a.phi(&s, k, m))?;
                let rhs = lib(a.phi(&t, k2, m2))?.scale(&c);
                ensure!(lhs == rhs, "Phi^{s:?}({k},{m}) is not c·Phi^{t:?}({k2},{m2})");
                count += 1;
            }
        }
    }
    Ok(format!("{count} regular sets"))
}

/// Defining relations: `[x_i,x_j] = 0` for `|i−j| > 1` and the adjoint
/// powers `ad_{x_j}^N x_i` in both normings, with `N` read off from
/// `p_ij p_ji = p_jj^{1−N}`.
fn serre<S: Scalar>(a: &Algebra<S>) -> Check {
    let n = a.n();
    let bc = a.bicharacter();
    let x = |i: usize| a.letter(i);
    let br = |u: &ShuffleElement<S>, v: &ShuffleElement<S>| lib(a.bracket(u, v));
    let mut count = 0;
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            let mixed = bc.p(i, j).mul(bc.p(j, i));
            let diag = bc.p(j, j);
            let big_n = (1..=4).find(|&e| mixed.mul(&diag.pow(e - 1)).is_one());
            let Some(big_n) = big_n else {
                return Err(Outcome::Fail(format!("p_{i}{j} p_{j}{i} is not p_{j}{j}^(1-N) for N <= 4")));
            };
            let (mut left, mut right) = (x(i), x(i));
            for _ in 0..big_n {
                left = br(&left, &x(j))?;
                right = br(&x(j), &right)?;
            }
            ensure!(left.is_zero(), "[..[x{i},x{j}],..,x{j}] ({big_n} brackets) is nonzero");
            ensure!(right.is_zero(), "[x{j},..,[x{j},x{i}]..] ({big_n} brackets) is nonzero");
            count += 2;
        }
    }
    Ok(format!("{count} relations vanish"))
}

fn double_factorial(n: usize) -> usize {
    (1..=n).map(|i| 2 * i).product()
}

fn classification<S: Scalar>(cfg: &RunConfig, a: &Algebra<S>) -> Check {
    let n = cfg.n;
    let all = lib(enumerate(n))?;
    ensure!(all.len() == double_factorial(n), "{} subalgebras, expected {}", all.len(), double_factorial(n));
    let distinct: BTreeSet<_> = all.iter().map(|d| d.simple_roots.clone()).collect();
    ensure!(distinct.len() == all.len(), "two root sequences share their simple roots");
    let trips: Vec<Result<(), Outcome>> = RootSequence::all(n)
        .par_iter()
        .map(|theta| {
            let back = lib(root_sequence_of(a, &lib(generators(theta))?))?;
            ensure!(back == *theta, "generators of U_{theta} give the root sequence {back}");
            Ok(())
        })
        .collect();
    trips.into_iter().collect::<Result<Vec<()>, Outcome>>()?;
    Ok(format!("{} subalgebras, round trip exact", all.len()))
}

/// Heights and nilpotency of super-letters and the derivative of a `t`-th
/// power, at `q` a primitive `t`-th root of unity (`--t`, default 5).
/// Powers of total degree above 15 are skipped.
fn cyclotomic(cfg: &RunConfig) -> Check {
    let t = match cfg.mode {
        Mode::Cyclotomic(t) => t,
        Mode::Generic => 5,
    };
    let n = cfg.n;
    let mode = Mode::Cyclotomic(t);
    let a: Algebra<CyclotomicScalar> = lib(Algebra::new(cfg.bicharacter.clone(), mode))?;
    let bc = a.bicharacter();
    let (mut count, mut skipped) = (0, 0);
    for s in super_letters(n) {
        let (k, m) = (s.k, s.m);
        let d = Constitution::interval(n, k, m);
        let order = p_eval(bc, &d, &d).q_only().map(|e| t / gcd(e.unsigned_abs(), t));
        let h = lib(height(n, k, m, mode))?;
        let Some(h) = h else {
            return Err(Outcome::Fail(format!("u[{k},{m}] has infinite height")));
        };
        ensure!(order.is_none_or(|o| o == h), "height of u[{k},{m}] is {h}, expected {order:?}");
        if h * d.total() > 15 {
            skipped += 1;
            continue;
        }
        let u = lib(a.u_bracket(k, m))?;
        ensure!(a.power(&u, h).is_zero(), "u[{k},{m}]^{h} is nonzero");
        ensure!(!a.power(&u, h - 1).is_zero(), "u[{k},{m}]^{} vanishes", h - 1);
        count += 2;
        if h == t {
            let power = a.power(&u, t);
            for i in 1..=n {
                let lhs = a.partial_derivative(i, &power);
                let mut rhs = a.partial_derivative(i, &u);
                if rhs.is_zero() {
                    ensure!(lhs.is_zero(), "d{i} kills u[{k},{m}] but not its {t}-th power");
                    count += 1;
                    continue;
                }
                for _ in 0..t - 1 {
                    rhs = lib(a.bracket(&u, &rhs))?;
                }
                let c = a.monomial(&p_eval(bc, &d, &Constitution::unit(n, i)).pow(t as i32 - 1));
                ensure!(lhs == rhs.scale(&c), "derivative of u[{k},{m}]^{t} fails for i = {i}");
                count += 1;
            }
        }
    }
    Ok(format!("{count} checks at t = {t}, {skipped} super-letters skipped by size"))
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(1), 2);
        assert_eq!(double_factorial(3), 48);
        assert_eq!(gcd(10, 5), 5);
    }
}
