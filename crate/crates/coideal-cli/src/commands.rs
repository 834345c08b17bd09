use std::fmt::Write;

use coideal_lab::classifier::{self, normalized_generators, RootSequence, SubalgebraDescriptor};
use coideal_lab::pbw::PbwMonomial;
use coideal_lab::phi::{theta_of_uskm, ColoredScheme, PhiElement};
use coideal_lab::scalar::Scalar;
use coideal_lab::shuffle::{Algebra, ShuffleElement};
use coideal_lab::words::{Constitution, Word};
use serde_json::{json, Value};

use crate::{InputError, PhiArgs, Report, RunConfig};

pub fn parse_list(s: &str) -> Result<Vec<usize>, InputError> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<usize>().map_err(|e| InputError(format!("bad index '{x}': {e}"))))
        .collect()
}

fn render_decomposition<F: Scalar>(alg: &Algebra<F>, dec: &[(PbwMonomial, F)]) -> String {
    if dec.is_empty() {
        return "0".into();
    }
    dec.iter().map(|(m, c)| format!("({})*{m}", alg.render(c))).collect::<Vec<_>>().join(" + ")
}

/// PBW decomposition as text and JSON, or the reason it is unavailable.
fn decomposition<S: Scalar>(alg: &Algebra<S>, a: &ShuffleElement<S>) -> (String, Value) {
    match (alg.pbw_decompose(a), alg.fraction()) {
        (Ok(dec), Ok(fa)) => (render_decomposition(&fa, &dec), alg.decomposition_json(&dec)),
        (Err(e), _) | (_, Err(e)) => (format!("unavailable ({e})"), Value::Null),
    }
}

fn regularity_flags(white: bool, black: bool, k: usize, m: usize) -> Vec<String> {
    let mut flags = Vec::new();
    if white {
        flags.push(format!("white ({k},{m})-regular"));
    }
    if black {
        flags.push(format!("black ({k},{m})-regular"));
    }
    if flags.is_empty() {
        flags.push(format!("not ({k},{m})-regular"));
    }
    flags
}

pub fn phi<S: Scalar>(cfg: &RunConfig, alg: &Algebra<S>, args: &PhiArgs) -> Result<Report, InputError> {
    let n = cfg.n;
    let set = parse_list(&args.set)?;
    let (k, m) = (args.k, args.m);
    let element = PhiElement::new(&set, k, m);
    let value = alg.phi(&set, k, m)?;
    let scheme = ColoredScheme::new(n, &set, k, m)?;
    let (white, black) = (scheme.is_white_regular(), scheme.is_black_regular());
    let theta = if white || black { Some(theta_of_uskm(n, &set, k, m)?) } else { None };
    let (dec_text, dec_json) = decomposition(alg, &value);
    let flags = regularity_flags(white, black, k, m);

    let mut text = String::new();
    writeln!(text, "{element}  (n = {n}, {})", cfg.mode).unwrap();
    writeln!(text, "value: {}", value.render_with(|c| alg.render(c))).unwrap();
    writeln!(text, "pbw: {dec_text}").unwrap();
    writeln!(text, "regularity: {}", flags.join(", ")).unwrap();
    if let Some(t) = &theta {
        writeln!(text, "root sequence of the generated subalgebra: {}", RootSequence(t.clone())).unwrap();
    }
    writeln!(text, "scheme:\n{}", scheme.plain()).unwrap();
    writeln!(text, "shifted scheme:\n{}", scheme.shifted()).unwrap();

    let json = json!({
        "n": n,
        "mode": cfg.mode.to_string(),
        "element": {"S": element.set, "k": k, "m": m},
        "value": alg.to_json(&value),
        "pbw": dec_json,
        "white_regular": white,
        "black_regular": black,
        "regularity": flags,
        "theta": theta,
        "scheme": {"plain": scheme.plain(), "shifted": scheme.shifted()},
    });
    Ok(Report { text, json, failed: false })
}

pub fn coproduct<S: Scalar>(alg: &Algebra<S>, only: Option<(usize, usize)>) -> Result<Report, InputError> {
    let n = alg.n();
    let pairs: Vec<(usize, usize)> = match only {
        Some(p) => vec![p],
        None => (1..=2 * n).flat_map(|k| (k..=2 * n).map(move |m| (k, m))).collect(),
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut failed = false;
    for (k, m) in pairs {
        let u = alg.u_bracket(k, m)?;
        let computed = alg.hopf_coproduct(&u);
        let formula = alg.u_bracket_coproduct_formula(k, m)?;
        let ok = computed == formula;
        failed |= !ok;
        let render = |c: &S| alg.render(c);
        writeln!(text, "u[{k},{m}]: {}", if ok { "matches the formula" } else { "DIFFERS from the formula" }).unwrap();
        writeln!(text, "  computed: {}", computed.render_with(render)).unwrap();
        if !ok {
            writeln!(text, "  formula:  {}", formula.render_with(render)).unwrap();
        }
        rows.push(json!({
            "k": k,
            "m": m,
            "matches": ok,
            "computed": computed.to_json_with(render),
            "formula": formula.to_json_with(render),
        }));
    }
    Ok(Report { text, json: json!({"n": n, "coproducts": rows}), failed })
}

fn parse_theta(n: usize, s: &str) -> Result<RootSequence, InputError> {
    let theta = RootSequence::parse(s)?;
    if theta.n() != n {
        return Err(InputError(format!("theta {theta} has length {}, expected n = {n}", theta.n())));
    }
    Ok(theta)
}

fn describe_sets(text: &mut String, d: &SubalgebraDescriptor) {
    let fmt = |s: &std::collections::BTreeSet<usize>| {
        format!("{{{}}}", s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
    };
    for k in 1..=d.rt.n {
        writeln!(text, "  R_{k} = {}, T_{k} = {}", fmt(&d.rt.r[k]), fmt(&d.rt.t[k])).unwrap();
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

pub fn classify<S: Scalar>(cfg: &RunConfig, alg: &Algebra<S>, theta: &str) -> Result<Report, InputError> {
    let theta = parse_theta(cfg.n, theta)?;
    let d = SubalgebraDescriptor::new(&theta)?;
    let normalized = normalized_generators(&theta)?;
    let mut text = String::new();
    writeln!(text, "U_theta for theta = {theta}").unwrap();
    describe_sets(&mut text, &d);
    writeln!(text, "generators:").unwrap();
    let mut values = Vec::new();
    for (g, e) in &normalized {
        let v = e.value(alg)?;
        writeln!(text, "  g{g:?} * {e} = g{g:?} * ({})", v.render_with(|c| alg.render(c))).unwrap();
        values.push(json!({"group": g, "element": e, "value": alg.to_json(&v)}));
    }
    writeln!(text, "simple roots: {}", join(&d.simple_roots)).unwrap();
    writeln!(text, "roots: {}", join(&d.roots)).unwrap();
    let mut json = d.to_json();
    json["normalized_generators"] = Value::Array(values);
    Ok(Report { text, json, failed: false })
}

pub fn enumerate(cfg: &RunConfig) -> Result<Report, InputError> {
    let all = classifier::enumerate(cfg.n)?;
    let mut text = String::new();
    writeln!(text, "{} right coideal subalgebras containing the group, n = {}", all.len(), cfg.n).unwrap();
    for d in &all {
        writeln!(text, "{}  generators: {}  simple roots: {}", d.theta, join(&d.generators), join(&d.simple_roots))
            .unwrap();
    }
    let json =
        json!({"n": cfg.n, "count": all.len(), "subalgebras": all.iter().map(|d| d.to_json()).collect::<Vec<_>>()});
    Ok(Report { text, json, failed: false })
}

pub fn lattice<S: Scalar>(cfg: &RunConfig, alg: &Algebra<S>) -> Result<Report, InputError> {
    let l = classifier::lattice(alg, cfg.degree_bound)?;
    let text = format!("{} nodes, {} covering relations\n{l}", l.nodes.len(), l.edges.len());
    let json = json!({"n": cfg.n, "degree_bound": cfg.degree_bound, "nodes": l.to_json()});
    Ok(Report { text, json, failed: false })
}

pub fn decompose<S: Scalar>(
    alg: &Algebra<S>,
    set: Option<&str>,
    km: Option<(usize, usize)>,
    letters: Option<&str>,
) -> Result<Report, InputError> {
    let n = alg.n();
    let (label, value) = match (km, letters) {
        (Some((k, m)), None) => {
            let s = parse_list(set.unwrap_or(""))?;
            (PhiElement::new(&s, k, m).to_string(), alg.phi(&s, k, m)?)
        }
        (None, Some(l)) => {
            let l = parse_list(l)?;
            if l.is_empty() || l.iter().any(|&i| i == 0 || i > 2 * n) {
                return Err(InputError(format!("letters must be nonempty indices in 1..={}", 2 * n)));
            }
            let word = Word::from_letters(&l.iter().map(|&i| coideal_lab::words::letter_of(n, i)).collect::<Vec<_>>());
            let factors: Vec<_> = l.iter().map(|&i| alg.letter(i)).collect();
            let degree = word.constitution(n);
            (format!("product {word}"), alg.product_all(factors.iter()).with_degree(degree))
        }
        _ => return Err(InputError("give either --k/--m (with optional --S) or --letters".into())),
    };
    let dec = alg.pbw_decompose(&value)?;
    let fa = alg.fraction()?;
    let text = format!("{label} = {}\n", render_decomposition(&fa, &dec));
    let degree: Option<&Constitution> = value.degree();
    let json = json!({"element": label, "degree": degree.map(|d| d.0.clone()), "pbw": alg.decomposition_json(&dec)});
    Ok(Report { text, json, failed: false })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists() {
        assert_eq!(parse_list("").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_list("1, 3,5").unwrap(), vec![1, 3, 5]);
        assert!(parse_list("1,x").is_err());
    }
}
