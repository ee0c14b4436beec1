use std::fmt::Write;

use anthyph_core::form::state_space_size;
use anthyph_core::ratio::{anth_of_ratio, cross_products, mixed_ratio_eq, ratio_eq};
use anthyph_core::verify::{run_suite, Suite};
use anthyph_core::{
    commensurable_pure, convergents as side_diameter, euclid_cf, expand_value, is_perfect_square,
    isqrt, remainder, run_anthyphairesis, ContinuedFraction, ExpansionTrace, FormKind, Int,
    Magnitude, QuadSurd, QuadraticForm, DEFAULT_MAX_STEPS,
};
use serde_json::{json, Map, Value};

use crate::literal::Literal;
use crate::{AnthSource, ConvergentsSource, Failure, KindArg, RatioMode, Report};

type Outcome = Result<Report, Failure>;

fn int(n: &Int) -> Value {
    Value::String(n.to_string())
}

fn ints(v: &[Int]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

fn count(n: u64) -> Value {
    Value::String(n.to_string())
}

fn list(v: &[Int]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn triple(f: &QuadraticForm) -> String {
    format!("({}, {}, {})", f.a, f.b, f.c)
}

fn form_json(f: &QuadraticForm) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("kind".into(), f.kind.name().into());
    m.insert("A".into(), int(&f.a));
    m.insert("B".into(), int(&f.b));
    m.insert("C".into(), int(&f.c));
    m
}

fn cf_json(cf: &ContinuedFraction) -> Value {
    json!({
        "preperiod": ints(&cf.preperiod),
        "period": cf.period.as_deref().map_or(Value::Null, ints),
        "truncated": cf.truncated,
    })
}

fn expansion_report(
    input: Value,
    form: Option<&QuadraticForm>,
    cf: &ContinuedFraction,
    trace: &ExpansionTrace,
    show_states: bool,
) -> Report {
    let mut result = form.map(form_json).unwrap_or_default();
    let mut text = String::new();
    match form {
        Some(f) => {
            let disc = f.disc();
            result.insert("disc".into(), int(&disc));
            writeln!(text, "kind       {}", f.kind).unwrap();
            writeln!(text, "relation   A = {}, B = {}, C = {}", f.a, f.b, f.c).unwrap();
            writeln!(text, "disc       {disc}").unwrap();
        }
        None => {
            result.insert("kind".into(), "rational".into());
            writeln!(text, "kind       rational").unwrap();
        }
    }
    if let Value::Object(m) = cf_json(cf) {
        result.extend(m);
    }
    result.insert("quotients".into(), ints(&trace.quotients));
    writeln!(text, "expansion  {cf}").unwrap();
    writeln!(text, "preperiod  {}", list(&cf.preperiod)).unwrap();
    match &cf.period {
        Some(p) => writeln!(text, "period     {}", list(p)).unwrap(),
        None => writeln!(text, "period     none").unwrap(),
    }
    if show_states {
        let states: Vec<Value> = trace
            .states
            .iter()
            .map(|f| Value::Object(form_json(f)))
            .collect();
        result.insert("states".into(), Value::Array(states));
        let shown: Vec<String> = trace
            .states
            .iter()
            .map(|f| match f.kind {
                FormKind::Excess => triple(f),
                k => format!("{k}{}", triple(f)),
            })
            .collect();
        writeln!(text, "states     {}", shown.join(" → ")).unwrap();
    }
    let code = if cf.truncated {
        eprintln!(
            "warning: expansion truncated after {} quotients; raise --max-steps",
            trace.quotients.len()
        );
        3
    } else {
        0
    };
    Report {
        command: "anth",
        input,
        result: Value::Object(result),
        text,
        code,
    }
}

pub(crate) fn anth(source: AnthSource, max_steps: usize, show_states: bool) -> Outcome {
    let mut input = Map::new();
    input.insert("max_steps".into(), count(max_steps as u64));
    input.insert("trace".into(), show_states.into());
    let form = match source {
        AnthSource::Form { a, b, c, kind } => {
            let kind = match kind {
                KindArg::Excess => FormKind::Excess,
                KindArg::Defect => FormKind::Defect,
            };
            input.insert("form".into(), "form".into());
            input.extend(form_json(&QuadraticForm {
                kind,
                a: a.clone(),
                b: b.clone(),
                c: c.clone(),
            }));
            QuadraticForm::new(kind, a, b, c)?
        }
        AnthSource::Sqrt { n } => {
            input.insert("form".into(), "sqrt".into());
            input.insert("N".into(), int(&n));
            QuadraticForm::excess(1, 0, n)?
        }
        AnthSource::Rational { m, n } => {
            input.insert("form".into(), "rational".into());
            input.insert("m".into(), int(&m));
            input.insert("n".into(), int(&n));
            let cf = euclid_cf(&m, &n)?;
            let trace = ExpansionTrace {
                quotients: cf.preperiod.clone(),
                ..ExpansionTrace::default()
            };
            return Ok(expansion_report(
                input.into(),
                None,
                &cf,
                &trace,
                show_states,
            ));
        }
        AnthSource::Surd { u, v, w, d } => {
            input.insert("form".into(), "surd".into());
            for (k, x) in [("u", &u), ("v", &v), ("w", &w), ("D", &d)] {
                input.insert(k.into(), int(x));
            }
            let x = QuadSurd::new(u, v, w, d)?;
            let (cf, trace) = expand_value(&x, max_steps)?;
            let form = trace.states.first().cloned();
            return Ok(expansion_report(
                input.into(),
                form.as_ref(),
                &cf,
                &trace,
                show_states,
            ));
        }
    };
    let (cf, trace) = run_anthyphairesis(&form, max_steps)?;
    Ok(expansion_report(
        input.into(),
        Some(&form),
        &cf,
        &trace,
        show_states,
    ))
}

/// `e_n = (−1)ⁿ(q_n·b − p_n·a)` written out.
fn remainder_expr(n: usize, p: &Int, q: &Int) -> String {
    if n.is_multiple_of(2) {
        format!("{q}·b − {p}·a")
    } else {
        format!("{p}·a − {q}·b")
    }
}

pub(crate) fn convergents(
    source: Option<ConvergentsSource>,
    given: &[Int],
    count_: usize,
) -> Outcome {
    let mut input = Map::new();
    input.insert("count".into(), count(count_ as u64));
    let (quotients, field) = match (source, given.is_empty()) {
        (Some(_), false) => {
            return Err(Failure::usage(
                "give either `sqrt <N>` or `--quotients`, not both",
            ))
        }
        (None, true) => {
            return Err(Failure::usage(
                "missing quotient source: `sqrt <N>` or `--quotients k0,k1,...`",
            ))
        }
        (None, false) => {
            input.insert("quotients".into(), ints(given));
            (given.to_vec(), None)
        }
        (Some(ConvergentsSource::Sqrt { n }), true) => {
            input.insert("N".into(), int(&n));
            let form = QuadraticForm::excess(1, 0, n.clone())?;
            let (cf, _) = run_anthyphairesis(&form, DEFAULT_MAX_STEPS)?;
            if cf.truncated {
                return Err(anthyph_core::Error::Indeterminate {
                    steps: DEFAULT_MAX_STEPS,
                }
                .into());
            }
            let root = if is_perfect_square(&n) {
                QuadSurd::from_int(isqrt(&n)?)
            } else {
                QuadSurd::new(0.into(), 1.into(), 1.into(), n)?
            };
            let quotients = if cf.period.is_some() {
                cf.take(count_)
            } else {
                cf.preperiod.clone()
            };
            (quotients, Some(root))
        }
    };
    if count_ > quotients.len() {
        return Err(Failure::usage(format!(
            "precondition `count <= available quotients` violated: count {count_} with {} quotients",
            quotients.len()
        )));
    }
    let sd = side_diameter(&quotients, count_)?;
    let one = QuadSurd::from_int(1);
    let mut rows = Vec::new();
    let mut text = format!(
        "{:>4} {:>6} {:>12} {:>12}  remainder\n",
        "n", "k", "p_n", "q_n"
    );
    for n in 0..=count_ {
        let k = (n > 0).then(|| quotients[n - 1].clone());
        let expr = remainder_expr(n, &sd.p[n], &sd.q[n]);
        let value = match &field {
            Some(a) => Some(remainder(n, a, &one, &sd)?),
            None => None,
        };
        let shown_k = k.as_ref().map_or("-".to_string(), ToString::to_string);
        write!(
            text,
            "{n:>4} {shown_k:>6} {:>12} {:>12}  {expr}",
            sd.p[n], sd.q[n]
        )
        .unwrap();
        if let Some(v) = &value {
            write!(text, " = {v}").unwrap();
        }
        text.push('\n');
        rows.push(json!({
            "n": count(n as u64),
            "k": k.as_ref().map_or(Value::Null, int),
            "p": int(&sd.p[n]),
            "q": int(&sd.q[n]),
            "remainder": expr,
            "remainder_value": value.map_or(Value::Null, |v| v.to_string().into()),
        }));
    }
    Ok(Report {
        command: "convergents",
        input: input.into(),
        result: json!({ "quotients": ints(&quotients), "rows": rows }),
        text,
        code: 0,
    })
}

pub(crate) fn theodorus(max: u32) -> Outcome {
    let mut rows = Vec::new();
    let mut text = format!(
        "{:>4} {:>6}  {:<28} {:<14} {}\n",
        "N", "disc", "expansion", "commensurable", "state space"
    );
    for n in 2..=max {
        let n_int = Int::from(n);
        let form = QuadraticForm::excess(1, 0, n_int.clone())?;
        let disc = form.disc();
        let (cf, _) = run_anthyphairesis(&form, DEFAULT_MAX_STEPS)?;
        let commensurable = commensurable_pure(&Int::from(1), &n_int)?;
        let states = if commensurable {
            None
        } else {
            Some(state_space_size(&disc)?)
        };
        let shown = states.map_or("-".to_string(), |s| s.to_string());
        let verdict = if commensurable { "yes" } else { "no" };
        writeln!(
            text,
            "{n:>4} {disc:>6}  {:<28} {verdict:<14} {shown}",
            cf.to_string()
        )
        .unwrap();
        let mut row = cf_json(&cf);
        row["N"] = int(&n_int);
        row["disc"] = int(&disc);
        row["commensurable"] = commensurable.into();
        row["state_space"] = states.map_or(Value::Null, count);
        rows.push(row);
    }
    Ok(Report {
        command: "theodorus",
        input: json!({ "max": count(max.into()) }),
        result: json!({ "rows": rows }),
        text,
        code: 0,
    })
}

fn lines(lits: &[Literal]) -> Result<Vec<Magnitude>, Failure> {
    lits.iter()
        .map(|l| Magnitude::line(l.value.clone()).map_err(Failure::from))
        .collect()
}

fn verdict(equal: bool) -> &'static str {
    if equal {
        "equal"
    } else {
        "unequal"
    }
}

pub(crate) fn ratio(mode: RatioMode) -> Outcome {
    let mut result = Map::new();
    let mut text = String::new();
    let (mode_name, shown, equal, lhs, rhs) = match mode {
        RatioMode::Eq { magnitudes } => {
            let m = lines(&magnitudes)?;
            let equal = ratio_eq(&m[0], &m[1], &m[2], &m[3], DEFAULT_MAX_STEPS)?;
            let lhs = anth_of_ratio(&m[0], &m[1], DEFAULT_MAX_STEPS)?;
            let rhs = anth_of_ratio(&m[2], &m[3], DEFAULT_MAX_STEPS)?;
            ("eq", magnitudes, equal, lhs, rhs)
        }
        RatioMode::Cross { magnitudes } => {
            let m = lines(&magnitudes)?;
            let (ad, bc) = cross_products(&m[0], &m[1], &m[2], &m[3])?;
            writeln!(text, "a·d        {ad}").unwrap();
            writeln!(text, "b·c        {bc}").unwrap();
            result.insert("ad".into(), ad.to_string().into());
            result.insert("bc".into(), bc.to_string().into());
            let lhs = anth_of_ratio(&m[0], &m[1], DEFAULT_MAX_STEPS)?;
            let rhs = anth_of_ratio(&m[2], &m[3], DEFAULT_MAX_STEPS)?;
            ("cross", magnitudes, ad == bc, lhs, rhs)
        }
        RatioMode::Mixed { a, b, m, n } => {
            let pair = lines(&[a.clone(), b.clone()])?;
            let equal = mixed_ratio_eq(&pair[0], &pair[1], &m, &n, DEFAULT_MAX_STEPS)?;
            let lhs = anth_of_ratio(&pair[0], &pair[1], DEFAULT_MAX_STEPS)?;
            let rhs = euclid_cf(&m, &n)?;
            let numbers = [m, n].map(|k| Literal {
                text: k.to_string(),
                value: QuadSurd::from_int(k),
            });
            (
                "mixed",
                vec![a, b, numbers[0].clone(), numbers[1].clone()],
                equal,
                lhs,
                rhs,
            )
        }
    };
    let truncated = lhs.truncated || rhs.truncated;
    writeln!(text, "verdict    {}", verdict(equal)).unwrap();
    writeln!(text, "{} : {}    {lhs}", shown[0].value, shown[1].value).unwrap();
    writeln!(text, "{} : {}    {rhs}", shown[2].value, shown[3].value).unwrap();
    result.insert("verdict".into(), verdict(equal).into());
    result.insert("lhs".into(), cf_json(&lhs));
    result.insert("rhs".into(), cf_json(&rhs));
    let input = json!({
        "mode": mode_name,
        "operands": shown.iter().map(|l| l.text.clone()).collect::<Vec<_>>(),
    });
    Ok(Report {
        command: "ratio",
        input,
        result: result.into(),
        text,
        code: if truncated { 3 } else { 0 },
    })
}

pub(crate) fn verify(suite: Suite, trials: u64, seed: u64) -> Report {
    let report = run_suite(suite, trials, seed);
    let mut text = format!("suite {suite}, trials {trials}, seed {seed}\n");
    let mut props = Vec::new();
    for p in &report.properties {
        writeln!(
            text,
            "{:<7} {:<26} trials {:>6}  vacuous {:>6}  passed {:>6}  failed {:>6}",
            p.suite, p.name, p.trials, p.vacuous, p.passed, p.failed
        )
        .unwrap();
        if let Some((t, msg)) = &p.first_failure {
            writeln!(text, "        first failure at trial {t}: {msg}").unwrap();
        }
        props.push(json!({
            "suite": p.suite.name(),
            "name": p.name,
            "trials": count(p.trials),
            "vacuous": count(p.vacuous),
            "passed": count(p.passed),
            "failed": count(p.failed),
            "first_failure": p.first_failure.as_ref().map_or(Value::Null, |(t, m)| json!({
                "trial": count(*t),
                "message": m,
            })),
        }));
    }
    let failures = report.failures();
    writeln!(text, "failures {failures}").unwrap();
    Report {
        command: "verify",
        input: json!({ "suite": suite.name(), "trials": count(trials), "seed": count(seed) }),
        result: json!({
            "properties": props,
            "failures": count(failures),
            "verdict": if failures == 0 { "pass" } else { "fail" },
        }),
        text,
        code: if failures == 0 { 0 } else { 2 },
    }
}
