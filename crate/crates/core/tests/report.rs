use skeincoulomb::grcoulomb::GradedElement;
use skeincoulomb::qdiff::{AlgebraSpec, OpElement};
use skeincoulomb::text::{eval, evaluate, Context, Value};
use skeincoulomb::verify::{run_suite, Suite, SuiteConfig};
use skeincoulomb::error::ConfigError;

fn cfg(suite: Suite, ns: Vec<usize>) -> SuiteConfig {
    SuiteConfig { ns, suite, max_color: 3, m_min: -1, m_max: 2, ..SuiteConfig::default() }
}

#[test]
fn reports_are_deterministic() {
    let c = cfg(Suite::Scalars, vec![2, 3]);
    let a = run_suite(&c).unwrap().to_json();
    let b = run_suite(&c).unwrap().to_json();
    assert_eq!(a, b);
}

#[test]
fn report_shape() {
    let r = run_suite(&cfg(Suite::Skein, vec![3, 2])).unwrap();
    let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["suite"], "skein");
    assert_eq!(v["seed"], 42);
    let ids: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted);
    assert_eq!(v["summary"]["total"], ids.len());
    assert!(v["checks"][0].get("elapsed_ms").is_none());
}

#[test]
fn graded_suite_passes_for_four() {
    let r = run_suite(&cfg(Suite::Graded, vec![4])).unwrap();
    let failed: Vec<_> = r.checks.iter().filter(|c| !c.pass).map(|c| &c.id).collect();
    assert!(failed.is_empty(), "{failed:?}");
    assert!(r.summary.total > 5);
}

#[test]
fn fusion_table_is_checked_up_to_three() {
    let r = run_suite(&cfg(Suite::Fusion, vec![2])).unwrap();
    assert!(r.all_passed());
    for c in 1..=3 {
        assert!(r.checks.iter().any(|k| k.id == format!("fusion.jw-table:c={c}")), "{c}");
    }
}

#[test]
fn monopole_suite_passes_for_two() {
    let r = run_suite(&cfg(Suite::Monopole, vec![2])).unwrap();
    assert!(r.all_passed());
}

#[test]
fn bad_configs_are_rejected() {
    assert_eq!(run_suite(&cfg(Suite::All, vec![1])).unwrap_err(), ConfigError::SmallN(1));
    let mut c = cfg(Suite::All, vec![2]);
    c.m_min = 3;
    c.m_max = 2;
    assert!(matches!(run_suite(&c), Err(ConfigError::EmptyRange(_))));
    assert!(matches!(run_suite(&cfg(Suite::All, vec![])), Err(ConfigError::EmptyRange(_))));
    assert!("everything".parse::<Suite>().is_err());
}

#[test]
fn timings_are_opt_in() {
    let mut c = cfg(Suite::Scalars, vec![2]);
    c.timings = true;
    let r = run_suite(&c).unwrap();
    assert!(r.checks.iter().all(|k| k.elapsed_ms.is_some()));
}

fn lift(v: Value, ctx: Context, n: usize) -> Value {
    let Value::Scalar(s) = v else { return v };
    let spec = match ctx {
        Context::XTorus => AlgebraSpec::xtorus(n),
        Context::ZTrace => AlgebraSpec::ztrace(n),
        Context::Dz => AlgebraSpec::dz(n),
        Context::Graded => return Value::Graded(GradedElement::scalar(n, s).unwrap()),
    };
    Value::Op(OpElement::scalar(&spec, s))
}

#[test]
fn eval_output_round_trips() {
    let cases = [
        (Context::XTorus, 3, "phi(gamma:1) * phi(delta:2)"),
        (Context::XTorus, 3, "phi(sigma:1)"),
        (Context::XTorus, 2, "star(delta:1) + q^1/2"),
        (Context::ZTrace, 3, "gamma:1 * delta:2 - 3"),
        (Context::ZTrace, 2, "sigma:1"),
        (Context::Dz, 2, "E:1:0 * F:1:0"),
        (Context::Dz, 2, "E:1:1 + F:1:-1"),
        (Context::Graded, 3, "r[1,0] * (X1^2 + X1^-2)"),
        (Context::Graded, 3, "r[1,0] * r[0,1] + 2"),
    ];
    for (ctx, n, src) in cases {
        let first = evaluate(src, ctx, n).unwrap();
        let text = first.to_string();
        let again = evaluate(&text, ctx, n).unwrap_or_else(|e| panic!("{src}: {text}: {e}"));
        assert_eq!(lift(first, ctx, n), lift(again, ctx, n), "{src}");
        assert_eq!(eval(&text, ctx, n).unwrap(), text);
    }
}

#[test]
fn eval_errors_report_positions() {
    let e = eval("gamma:1 * )", Context::ZTrace, 3).unwrap_err().to_string();
    assert!(e.contains("10"), "{e}");
    assert!(eval("E:1:0", Context::XTorus, 3).is_err());
    assert!(eval("r[1,0]", Context::XTorus, 3).is_err());
    assert!(eval("gamma:1", Context::ZTrace, 1).is_err());
}
