//! Verification harness: every identity the library asserts, run as
//! independent checks and collected into a deterministic report.

use std::collections::BTreeMap;
use std::fmt;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::ConfigError;
use crate::fusion::{gamma_loop_eval, jones_wenzl, loop_value, specialize_b, tl_mul, TLDiagram, TLElement};
use crate::grcoulomb::{
    coulomb_matrix, coulomb_products, coulomb_products_expected, gr_mul, sigma_closed_form, solve_sigma,
    Coweight, GradedElement,
};
use crate::linalg::{self, Matrix};
use crate::monopole::{
    is_torus_invariant, monopole_e, monopole_f, psi, theta_candidate, verify_ef_commutator, verify_gamma,
    verify_phi_psi,
};
use crate::qdiff::{dz_shift_index, AlgebraKind, AlgebraSpec, OpElement};
use crate::random;
use crate::scalars::{
    a_pow, eval_rational, int, invariant_under_inversion, qint, s_pow, shift, x_pow, Atom, Pm, RatFunc, Rational,
    Var,
};
use crate::skeinrep::{
    delta_symbol, phi, skein_matrix, star, theta_one, theta_principal, upsilon, verify_factorization, GeneratorId,
    SurfaceParams,
};
use crate::Scalar;

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Scalars,
    Qdiff,
    Skein,
    Monopole,
    Graded,
    Fusion,
    All,
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl FromStr for Suite {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "scalars" => Suite::Scalars,
            "qdiff" => Suite::Qdiff,
            "skein" => Suite::Skein,
            "monopole" => Suite::Monopole,
            "graded" => Suite::Graded,
            "fusion" => Suite::Fusion,
            "all" => Suite::All,
            _ => return Err(ConfigError::UnknownSuite(s.to_string())),
        })
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Suite::Scalars => "scalars",
            Suite::Qdiff => "qdiff",
            Suite::Skein => "skein",
            Suite::Monopole => "monopole",
            Suite::Graded => "graded",
            Suite::Fusion => "fusion",
            Suite::All => "all",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub ns: Vec<usize>,
    pub suite: Suite,
    pub m_min: i64,
    pub m_max: i64,
    pub max_color: usize,
    pub seed: u64,
    /// Record wall-clock time per check. Off by default so reports are byte-stable.
    pub timings: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            ns: vec![2, 3, 4],
            suite: Suite::All,
            m_min: -2,
            m_max: 4,
            max_color: 6,
            seed: 42,
            timings: false,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.ns.is_empty() {
            return Err(ConfigError::EmptyRange("n"));
        }
        if let Some(&n) = self.ns.iter().find(|&&n| n < 2) {
            return Err(ConfigError::SmallN(n));
        }
        if self.m_min > self.m_max {
            return Err(ConfigError::EmptyRange("m"));
        }
        Ok(())
    }

    fn ns(&self) -> Vec<usize> {
        let mut ns = self.ns.clone();
        ns.sort_unstable();
        ns.dedup();
        ns
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub anchor: String,
    pub params: BTreeMap<String, i64>,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub seed: u64,
    pub suite: Suite,
    pub summary: Summary,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

type Outcome = Result<(), String>;

struct Check {
    id: String,
    anchor: &'static str,
    params: BTreeMap<String, i64>,
    run: Box<dyn Fn() -> Outcome + Send + Sync>,
}

fn check(
    id: String,
    anchor: &'static str,
    params: &[(&str, i64)],
    run: impl Fn() -> Outcome + Send + Sync + 'static,
) -> Check {
    Check {
        id,
        anchor,
        params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        run: Box::new(run),
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: fmt::Display>(e: E) -> String {
    format!("error: {e}")
}

fn equal<T: PartialEq + fmt::Display>(got: &T, want: &T) -> Outcome {
    ensure(got == want, || format!("got {got}, expected {want}"))
}

fn surface(n: usize) -> Result<SurfaceParams, String> {
    SurfaceParams::new(n).map_err(err)
}

/// Run the configured suites and assemble the report.
pub fn run_suite(cfg: &SuiteConfig) -> Result<VerificationReport, ConfigError> {
    cfg.validate()?;
    let checks = plan(cfg);
    let mut records: Vec<CheckRecord> = checks
        .into_par_iter()
        .map(|c| {
            let start = Instant::now();
            let outcome = catch_unwind(AssertUnwindSafe(|| (c.run)()))
                .unwrap_or_else(|p| Err(format!("panic: {}", panic_message(&p))));
            let elapsed = start.elapsed().as_secs_f64() * 1e3;
            CheckRecord {
                id: c.id,
                anchor: c.anchor.to_string(),
                params: c.params,
                pass: outcome.is_ok(),
                counterexample: outcome.err(),
                elapsed_ms: cfg.timings.then_some(elapsed),
            }
        })
        .collect();
    records.sort_by(|a, b| a.id.cmp(&b.id));
    let passed = records.iter().filter(|r| r.pass).count();
    Ok(VerificationReport {
        schema: SCHEMA,
        seed: cfg.seed,
        suite: cfg.suite,
        summary: Summary {
            total: records.len(),
            passed,
            failed: records.len() - passed,
        },
        checks: records,
    })
}

fn panic_message(p: &Box<dyn std::any::Any + Send>) -> String {
    if let Some(s) = p.downcast_ref::<&str>() {
        s.to_string()
    } else if let Some(s) = p.downcast_ref::<String>() {
        s.clone()
    } else {
        "unknown".into()
    }
}

fn plan(cfg: &SuiteConfig) -> Vec<Check> {
    let mut out = Vec::new();
    if cfg.suite.includes(Suite::Scalars) {
        scalar_checks(cfg, &mut out);
    }
    if cfg.suite.includes(Suite::Qdiff) {
        qdiff_checks(cfg, &mut out);
    }
    if cfg.suite.includes(Suite::Skein) {
        skein_checks(cfg, &mut out);
    }
    if cfg.suite.includes(Suite::Monopole) {
        monopole_checks(cfg, &mut out);
    }
    if cfg.suite.includes(Suite::Graded) {
        graded_checks(cfg, &mut out);
    }
    if cfg.suite.includes(Suite::Fusion) {
        fusion_checks(cfg, &mut out);
    }
    out
}

const LAW_CASES: usize = 200;

fn scalar_vars() -> Vec<Var> {
    vec![Var::Q, Var::t(1)]
}

fn random_scalar(rng: &mut impl Rng) -> Scalar {
    if rng.gen_bool(0.5) {
        random::laurent(rng, &scalar_vars(), 1..=3, 2)
    } else {
        random::ratfunc(rng, &scalar_vars())
    }
}

fn scalar_checks(cfg: &SuiteConfig, out: &mut Vec<Check>) {
    let seed = cfg.seed;
    let cases = LAW_CASES as i64;
    out.push(check("scalars.add-assoc".into(), "field axioms", &[("cases", cases)], move || {
        let mut rng = random::rng_for(seed, "scalars.add-assoc");
        for _ in 0..LAW_CASES {
            let (a, b, c) = (random_scalar(&mut rng), random_scalar(&mut rng), random_scalar(&mut rng));
            equal(&(&(&a + &b) + &c), &(&a + &(&b + &c)))?;
        }
        Ok(())
    }));
    out.push(check("scalars.distrib".into(), "field axioms", &[("cases", cases)], move || {
        let mut rng = random::rng_for(seed, "scalars.distrib");
        for _ in 0..LAW_CASES {
            let (a, b, c) = (random_scalar(&mut rng), random_scalar(&mut rng), random_scalar(&mut rng));
            equal(&(&a * &(&b + &c)), &(&(&a * &b) + &(&a * &c)))?;
        }
        Ok(())
    }));
    out.push(check("scalars.inverse".into(), "field axioms", &[("cases", cases)], move || {
        let mut rng = random::rng_for(seed, "scalars.inverse");
        for _ in 0..LAW_CASES {
            let a = random_scalar(&mut rng);
            if a.is_zero() {
                continue;
            }
            equal(&(&a * &a.inv().map_err(err)?), &int(1))?;
        }
        Ok(())
    }));
    out.push(check("scalars.eval-oracle".into(), "canonical form", &[("cases", cases)], move || {
        let mut rng = random::rng_for(seed, "scalars.eval-oracle");
        for _ in 0..LAW_CASES {
            let (a, b) = (random_scalar(&mut rng), random_scalar(&mut rng));
            let point: Vec<Rational> = (0..2).map(|_| random::rational(&mut rng)).collect();
            let value = |v: Var| if v == Var::Q { point[0].clone() } else { point[1].clone() };
            let (Some(ea), Some(eb)) = (eval_rational(&a, &value), eval_rational(&b, &value)) else {
                continue;
            };
            let mut pairs = vec![(&a + &b, &ea + &eb), (&a * &b, &ea * &eb), (&a - &b, &ea - &eb)];
            if !b.is_zero() && eb != Rational::from_integer(0.into()) {
                pairs.push((&a / &b, &ea / &eb));
            }
            for (sym, num) in pairs {
                match eval_rational(&sym, &value) {
                    Some(v) if v != num => return Err(format!("{sym} evaluates to {v}, expected {num}")),
                    _ => {}
                }
            }
        }
        Ok(())
    }));
    out.push(check("scalars.qint-recurrence".into(), "quantum integers", &[], || {
        let a2 = &a_pow(2) + &a_pow(-2);
        for k in -5..=5 {
            equal(&qint(k + 1), &(&(&a2 * &qint(k)) - &qint(k - 1)))?;
        }
        Ok(())
    }));
    for n in cfg.ns() {
        out.push(check(
            format!("scalars.shift-compose:n={n}"),
            "coefficient transport",
            &[("n", n as i64)],
            move || {
                let label = format!("scalars.shift-compose:n={n}");
                let mut rng = random::rng_for(seed, &label);
                let xs: Vec<Var> = (1..n).map(Var::x).collect();
                for _ in 0..50 {
                    let p = random::laurent(&mut rng, &xs, 3..=3, 2);
                    let l: Vec<i64> = (1..n).map(|_| rng.gen_range(-3..=3)).collect();
                    let m: Vec<i64> = (1..n).map(|_| rng.gen_range(-3..=3)).collect();
                    let lm: Vec<i64> = l.iter().zip(&m).map(|(a, b)| a + b).collect();
                    equal(&shift(&shift(&p, &l), &m), &shift(&p, &lm))?;
                }
                Ok(())
            },
        ));
    }
}

/// `shift_j * v = s^w v * shift_j`, read off the displayed commutation relations.
fn displayed_weight(kind: AlgebraKind, j: usize, v: Var) -> i32 {
    match (kind, v.atom()) {
        (AlgebraKind::XTorus, Atom::X(i)) if i as usize == j + 1 => 1,
        (AlgebraKind::ZTrace, Atom::Qc(i)) if i as usize == j + 1 => 1,
        (AlgebraKind::Dz, Atom::W(i, pm)) if dz_shift_index(i as usize, pm) == j => 4,
        _ => 0,
    }
}

fn coordinates(kind: AlgebraKind, n: usize) -> Vec<Var> {
    match kind {
        AlgebraKind::XTorus => (1..n).map(Var::x).chain([Var::t(1)]).collect(),
        AlgebraKind::ZTrace => (1..n).map(Var::qc).chain([Var::c(1)]).collect(),
        AlgebraKind::Dz => (1..n)
            .flat_map(|i| [Var::w(i, Pm::Plus), Var::w(i, Pm::Minus)])
            .chain([Var::z(1)])
            .collect(),
    }
}

fn spec_for(kind: AlgebraKind, n: usize) -> Arc<AlgebraSpec> {
    match kind {
        AlgebraKind::XTorus => AlgebraSpec::xtorus(n),
        AlgebraKind::ZTrace => AlgebraSpec::ztrace(n),
        AlgebraKind::Dz => AlgebraSpec::dz(n),
    }
}

fn random_op(rng: &mut impl Rng, kind: AlgebraKind, n: usize) -> OpElement {
    let spec = spec_for(kind, n);
    let mut vars = coordinates(kind, n);
    vars.push(Var::Q);
    let terms = rng.gen_range(1..=3);
    random::op_element(rng, &spec, &vars, terms)
}

fn qdiff_checks(cfg: &SuiteConfig, out: &mut Vec<Check>) {
    let seed = cfg.seed;
    let kinds = [
        (AlgebraKind::XTorus, "xtorus"),
        (AlgebraKind::ZTrace, "ztrace"),
        (AlgebraKind::Dz, "dz"),
    ];
    let n = 3;
    for (kind, name) in kinds {
        let id = format!("qdiff.assoc:{name}");
        out.push(check(id.clone(), "operator algebra axioms", &[("n", n as i64), ("cases", LAW_CASES as i64)], move || {
            let mut rng = random::rng_for(seed, &id);
            for _ in 0..LAW_CASES {
                let (a, b, c) = (random_op(&mut rng, kind, n), random_op(&mut rng, kind, n), random_op(&mut rng, kind, n));
                let l = a.mul(&b).and_then(|ab| ab.mul(&c)).map_err(err)?;
                let r = b.mul(&c).and_then(|bc| a.mul(&bc)).map_err(err)?;
                ensure(l == r, || format!("({a}) ({b}) ({c}) is not associative"))?;
            }
            Ok(())
        }));
        let id = format!("qdiff.distrib:{name}");
        out.push(check(id.clone(), "operator algebra axioms", &[("n", n as i64), ("cases", LAW_CASES as i64)], move || {
            let mut rng = random::rng_for(seed, &id);
            for _ in 0..LAW_CASES {
                let (a, b, c) = (random_op(&mut rng, kind, n), random_op(&mut rng, kind, n), random_op(&mut rng, kind, n));
                let l = b.add(&c).and_then(|bc| a.mul(&bc)).map_err(err)?;
                let r = a.mul(&b).and_then(|ab| ab.add(&a.mul(&c)?)).map_err(err)?;
                ensure(l == r, || format!("left distributivity fails for ({a}) ({b}) ({c})"))?;
                let l = a.add(&b).and_then(|ab| ab.mul(&c)).map_err(err)?;
                let r = a.mul(&c).and_then(|ac| ac.add(&b.mul(&c)?)).map_err(err)?;
                ensure(l == r, || format!("right distributivity fails for ({a}) ({b}) ({c})"))?;
            }
            Ok(())
        }));
        let id = format!("qdiff.normal-order:{name}");
        out.push(check(id.clone(), "commutation relations", &[("n", n as i64), ("cases", LAW_CASES as i64)], move || {
            let mut rng = random::rng_for(seed, &id);
            let spec = spec_for(kind, n);
            let mut vars = coordinates(kind, n);
            vars.push(Var::Q);
            for _ in 0..LAW_CASES {
                let c = random::ratfunc(&mut rng, &vars);
                let k: Vec<i32> = (0..spec.num_shifts()).map(|_| rng.gen_range(-2..=2)).collect();
                let moved = c
                    .substitute(&|v: Var| {
                        let w: i32 = k.iter().enumerate().map(|(j, &e)| e * displayed_weight(kind, j, v)).sum();
                        (w != 0).then(|| &s_pow(w) * &RatFunc::var(v, 1))
                    })
                    .map_err(err)?;
                let lhs = OpElement::term(&spec, k.clone(), int(1))
                    .mul(&OpElement::scalar(&spec, c.clone()))
                    .map_err(err)?;
                let rhs = OpElement::term(&spec, k.clone(), moved);
                ensure(lhs == rhs, || format!("shift {k:?} past {c}: got {lhs}, expected {rhs}"))?;
            }
            Ok(())
        }));
        let id = format!("qdiff.pairing:{name}");
        out.push(check(id, "commutation relations", &[("n", 4)], move || {
            let n = 4;
            let spec = spec_for(kind, n);
            for j in 0..spec.num_shifts() {
                for v in coordinates(kind, n) {
                    let sh = OpElement::shift(&spec, j, 1);
                    let cv = OpElement::scalar(&spec, RatFunc::var(v, 1));
                    let lhs = sh.mul(&cv).map_err(err)?;
                    let rhs = cv.mul(&sh).map_err(err)?.scale(&s_pow(displayed_weight(kind, j, v)));
                    ensure(lhs == rhs, || format!("shift {j} and {v}: got {lhs}, expected {rhs}"))?;
                }
            }
            Ok(())
        }));
    }
    let id = "qdiff.star-antihom".to_string();
    out.push(check(id.clone(), "anti-map", &[("n", n as i64), ("cases", LAW_CASES as i64)], move || {
        let mut rng = random::rng_for(seed, &id);
        for _ in 0..LAW_CASES {
            let a = random_op(&mut rng, AlgebraKind::ZTrace, n);
            let b = random_op(&mut rng, AlgebraKind::ZTrace, n);
            let lhs = star(&a.mul(&b).map_err(err)?).map_err(err)?;
            let rhs = star(&b).and_then(|sb| sb.mul(&star(&a)?)).map_err(err)?;
            ensure(lhs == rhs, || format!("star(ab) != star(b) star(a) for a = {a}, b = {b}"))?;
        }
        Ok(())
    }));
}

fn skein_checks(cfg: &SuiteConfig, out: &mut Vec<Check>) {
    let seed = cfg.seed;
    for n in cfg.ns() {
        let nn = n as i64;
        for i in 1..n {
            for (name, g) in [("gamma", GeneratorId::gamma(i)), ("sigma", GeneratorId::sigma(i))] {
                out.push(check(
                    format!("skein.factorization:{name}:n={n}:i={i}"),
                    "factorization of the polynomial representation",
                    &[("n", nn), ("i", i as i64)],
                    move || {
                        let p = surface(n)?;
                        if verify_factorization(g, &p).map_err(err)? {
                            return Ok(());
                        }
                        let lhs = star(&upsilon(g, &p).map_err(err)?).map_err(err)?;
                        let rhs = phi(g, &p).map_err(err)?;
                        Err(format!("star(upsilon) = {lhs}, phi = {rhs}"))
                    },
                ));
            }
            out.push(check(
                format!("skein.theta-one:n={n}:i={i}"),
                "theta recursion",
                &[("n", nn), ("i", i as i64)],
                move || {
                    let p = surface(n)?;
                    let rem = theta_one(i, &p)
                        .and_then(|t| t.sub(&theta_principal(i, 1, &p)?))
                        .map_err(err)?;
                    let all: Vec<usize> = p.internal().collect();
                    let ok = rem
                        .as_coefficient()
                        .is_some_and(|c| c.is_laurent() && invariant_under_inversion(&c, &all));
                    ensure(ok, || format!("remainder {rem} is not a symmetric Laurent polynomial"))
                },
            ));
            out.push(check(
                format!("skein.theta-zero:n={n}:i={i}"),
                "principal part of sigma",
                &[("n", nn), ("i", i as i64)],
                move || {
                    let p = surface(n)?;
                    let c = &(&crate::scalars::q_pow(1) * &crate::scalars::t_pow(i, 1)) * &crate::scalars::t_pow(i + 1, 1);
                    let constant = -(&c + &c.inv().map_err(err)?);
                    let spec = AlgebraSpec::xtorus(n);
                    let lhs = theta_principal(i, 0, &p)
                        .and_then(|t| t.add(&OpElement::scalar(&spec, constant)))
                        .map_err(err)?;
                    equal(&lhs, &phi(GeneratorId::sigma(i), &p).map_err(err)?)
                },
            ));
        }
        for j in 0..=n + 1 {
            out.push(check(
                format!("skein.factorization:delta:n={n}:j={j}"),
                "factorization of the polynomial representation",
                &[("n", nn), ("j", j as i64)],
                move || {
                    let p = surface(n)?;
                    let ok = verify_factorization(GeneratorId::delta(j), &p).map_err(err)?;
                    ensure(ok, || "star(upsilon) differs from phi".into())
                },
            ));
        }
        out.push(check(
            format!("skein.gamma-commute:n={n}"),
            "disjoint curves commute",
            &[("n", nn)],
            move || {
                let p = surface(n)?;
                for i in 1..n {
                    for j in 1..n {
                        let a = phi(GeneratorId::gamma(i), &p).map_err(err)?;
                        let b = phi(GeneratorId::gamma(j), &p).map_err(err)?;
                        equal(&a.mul(&b).map_err(err)?, &b.mul(&a).map_err(err)?)?;
                    }
                }
                Ok(())
            },
        ));
    }
    out.push(check("skein.matrix-det".into(), "skein matrix nondegeneracy", &[], || {
        let d = linalg::det(&skein_matrix(&delta_symbol()));
        ensure(!d.is_zero(), || "determinant vanishes".into())
    }));
    out.push(check("skein.matrix-solve".into(), "skein matrix nondegeneracy", &[("cases", 20)], move || {
        let mut rng = random::rng_for(seed, "skein.matrix-solve");
        planted_solves(&mut rng, &skein_matrix(&delta_symbol()), &[Var::Q, Var::new(Atom::DeltaK)])
    }));
}

fn planted_solves(rng: &mut impl Rng, m: &Matrix, vars: &[Var]) -> Outcome {
    for _ in 0..20 {
        let x: Vec<Scalar> = (0..m.len()).map(|_| random::laurent(rng, vars, 1..=3, 2)).collect();
        let b = linalg::mat_vec(m, &x);
        let got = linalg::solve(m, &b).ok_or("solve reported a singular matrix")?;
        ensure(got == x, || {
            let show = |v: &[Scalar]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ");
            format!("planted [{}], recovered [{}]", show(&x), show(&got))
        })?;
    }
    Ok(())
}

fn random_balanced(rng: &mut impl Rng, n: usize) -> OpElement {
    let spec = AlgebraSpec::dz(n);
    let mut vars = coordinates(AlgebraKind::Dz, n);
    vars.push(Var::Q);
    let mut out = OpElement::zero(&spec);
    for _ in 0..rng.gen_range(1..=2) {
        let mut k = vec![0; spec.num_shifts()];
        for i in 1..n {
            let a = rng.gen_range(-2..=2);
            k[dz_shift_index(i, Pm::Plus)] = a;
            k[dz_shift_index(i, Pm::Minus)] = -a;
        }
        let c = random::laurent(rng, &vars, 1..=2, 2);
        out = out.add(&OpElement::term(&spec, k, c)).expect("same algebra");
    }
    out
}

fn monopole_checks(cfg: &SuiteConfig, out: &mut Vec<Check>) {
    let seed = cfg.seed;
    for n in cfg.ns() {
        let nn = n as i64;
        for i in 1..n {
            let ii = i as i64;
            for m in cfg.m_min..=cfg.m_max {
                out.push(check(
                    format!("monopole.phi-psi:n={n}:i={i}:m={m}"),
                    "comparison of generators",
                    &[("n", nn), ("i", ii), ("m", m)],
                    move || {
                        let p = surface(n)?;
                        let r = verify_phi_psi(i, m, &p).map_err(err)?;
                        ensure(r.ok, || format!("remainder {}", r.remainder))
                    },
                ));
                if i % 2 == 0 {
                    out.push(check(
                        format!("monopole.parity:n={n}:i={i}:m={m}"),
                        "comparison of generators",
                        &[("n", nn), ("i", ii), ("m", m)],
                        move || {
                            let p = surface(n)?;
                            let image = psi(&theta_candidate(i, m, &p).map_err(err)?).map_err(err)?;
                            equal(&image, &theta_principal(i, m, &p).map_err(err)?)
                        },
                    ));
                }
            }
            out.push(check(
                format!("monopole.gamma:n={n}:i={i}"),
                "comparison of generators",
                &[("n", nn), ("i", ii)],
                move || {
                    let p = surface(n)?;
                    ensure(verify_gamma(i, &p).map_err(err)?, || "phi(gamma) differs from psi(-w+ - w-)".into())
                },
            ));
            out.push(check(
                format!("monopole.commutator:n={n}:i={i}"),
                "commutator of dressed monopoles",
                &[("n", nn), ("i", ii)],
                move || {
                    let p = surface(n)?;
                    let (ok, h) = verify_ef_commutator(i, &p).map_err(err)?;
                    ensure(ok, || format!("h = {h}"))
                },
            ));
            out.push(check(
                format!("monopole.balanced:n={n}:i={i}"),
                "torus invariance",
                &[("n", nn), ("i", ii)],
                move || {
                    let p = surface(n)?;
                    let e = monopole_e(i, 0, &p).map_err(err)?;
                    let f = monopole_f(i, 0, &p).map_err(err)?;
                    ensure(!is_torus_invariant(&e), || "E alone is invariant".into())?;
                    ensure(!is_torus_invariant(&f), || "F alone is invariant".into())?;
                    ensure(is_torus_invariant(&e.mul(&f).map_err(err)?), || "EF is not invariant".into())?;
                    ensure(is_torus_invariant(&f.mul(&e).map_err(err)?), || "FE is not invariant".into())
                },
            ));
        }
        let id = format!("monopole.psi-mult:n={n}");
        out.push(check(id.clone(), "embedding of invariants", &[("n", nn), ("cases", 50)], move || {
            let mut rng = random::rng_for(seed, &id);
            for _ in 0..50 {
                let a = random_balanced(&mut rng, n);
                let b = random_balanced(&mut rng, n);
                let lhs = a.mul(&b).and_then(|ab| psi(&ab)).map_err(err)?;
                let rhs = psi(&a).and_then(|pa| pa.mul(&psi(&b)?)).map_err(err)?;
                ensure(lhs == rhs, || format!("psi(ab) != psi(a) psi(b) for a = {a}, b = {b}"))?;
            }
            Ok(())
        }));
    }
}

fn random_support_weight(rng: &mut impl Rng, n: usize, max: i64) -> Coweight {
    loop {
        let l = random::coweight(rng, n, max);
        if !l.support().is_empty() {
            return l;
        }
    }
}

fn graded_checks(cfg: &SuiteConfig, out: &mut Vec<Check>) {
    let seed = cfg.seed;
    for n in cfg.ns() {
        let nn = n as i64;
        for j in 2..n {
            for i in 1..j {
                out.push(check(
                    format!("graded.products:n={n}:i={i}:j={j}"),
                    "Coulomb matrix equation",
                    &[("n", nn), ("i", i as i64), ("j", j as i64)],
                    move || {
                        let got = coulomb_products(i, j, n).map_err(err)?;
                        let want = coulomb_products_expected(i, j, n).map_err(err)?;
                        for (g, w) in got.iter().zip(&want) {
                            equal(g, w)?;
                        }
                        Ok(())
                    },
                ));
            }
        }
        for j in 1..n.saturating_sub(1) {
            for i in 1..=j {
                out.push(check(
                    format!("graded.sigma:n={n}:i={i}:j={j}"),
                    "closed form of sigma",
                    &[("n", nn), ("i", i as i64), ("j", j as i64)],
                    move || {
                        let p = surface(n)?;
                        equal(&solve_sigma(i, j, &p).map_err(err)?, &sigma_closed_form(i, j, &p).map_err(err)?)
                    },
                ));
            }
        }
        let id = format!("graded.twist-commute:n={n}");
        out.push(check(id.clone(), "twisting", &[("n", nn), ("cases", 50)], move || {
            let mut rng = random::rng_for(seed, &id);
            for _ in 0..50 {
                let l = random_support_weight(&mut rng, n, 3);
                for j in l.support() {
                    let k = l.get(j) as i32;
                    let sym = &x_pow(j, 1) + &x_pow(j, -1);
                    let lhs = gr_mul(
                        &GradedElement::basis(n, l.clone()).map_err(err)?,
                        &GradedElement::scalar(n, sym).map_err(err)?,
                    );
                    let c = &(&crate::scalars::q_pow(2 * k) * &x_pow(j, 1)) + &(&crate::scalars::q_pow(-2 * k) * &x_pow(j, -1));
                    equal(&lhs, &GradedElement::term(n, l.clone(), c).map_err(err)?)?;
                }
            }
            Ok(())
        }));
        let id = format!("graded.multiples:n={n}");
        out.push(check(id.clone(), "multiples of a coweight", &[("n", nn)], move || {
            let mut rng = random::rng_for(seed, &id);
            for _ in 0..5 {
                let l = random::coweight(&mut rng, n, 2);
                for k in 0..=3 {
                    for m in 0..=3 {
                        let a = GradedElement::basis(n, l.scale(k)).map_err(err)?;
                        let b = GradedElement::basis(n, l.scale(m)).map_err(err)?;
                        equal(&gr_mul(&a, &b), &GradedElement::basis(n, l.scale(k + m)).map_err(err)?)?;
                    }
                }
            }
            Ok(())
        }));
        let id = format!("graded.assoc:n={n}");
        out.push(check(id.clone(), "graded product", &[("n", nn), ("cases", 100)], move || {
            let mut rng = random::rng_for(seed, &id);
            for _ in 0..100 {
                let a = random::graded_term(&mut rng, n, 2);
                let b = random::graded_term(&mut rng, n, 2);
                let c = random::graded_term(&mut rng, n, 2);
                let l = gr_mul(&gr_mul(&a, &b), &c);
                let r = gr_mul(&a, &gr_mul(&b, &c));
                ensure(l == r, || format!("({a}) ({b}) ({c}) is not associative"))?;
            }
            Ok(())
        }));
        let id = format!("graded.closure:n={n}");
        out.push(check(id.clone(), "graded product", &[("n", nn), ("cases", 100)], move || {
            let mut rng = random::rng_for(seed, &id);
            for _ in 0..100 {
                let a = random::graded_term(&mut rng, n, 2);
                let b = random::graded_term(&mut rng, n, 2);
                gr_mul(&a, &b).validate().map_err(|e| format!("({a}) ({b}): {e}"))?;
            }
            Ok(())
        }));
        for j in 1..n {
            out.push(check(
                format!("graded.matrix-det:n={n}:j={j}"),
                "Coulomb matrix nondegeneracy",
                &[("n", nn), ("j", j as i64)],
                move || ensure(!linalg::det(&coulomb_matrix(j)).is_zero(), || "determinant vanishes".into()),
            ));
        }
    }
    out.push(check("graded.matrix-solve".into(), "Coulomb matrix nondegeneracy", &[("cases", 20)], move || {
        let mut rng = random::rng_for(seed, "graded.matrix-solve");
        planted_solves(&mut rng, &coulomb_matrix(1), &[Var::Q, Var::t(1)])
    }));
}

/// The displayed idempotents for one to three strands.
pub fn jw_reference(c: usize) -> Option<TLElement> {
    let e = |j| TLElement::diagram(TLDiagram::cup_cap(c, j));
    let ratio = |a, b| &qint(a) / &qint(b);
    let mul = |x: &TLElement, y: &TLElement| tl_mul(x, y).expect("same strands");
    let sum = |terms: Vec<TLElement>| {
        terms
            .into_iter()
            .fold(TLElement::zero(c), |acc, t| acc.add(&t).expect("same strands"))
    };
    match c {
        0 | 1 => Some(TLElement::identity(c)),
        2 => Some(sum(vec![TLElement::identity(2), e(1).scale(&ratio(1, 2))])),
        3 => {
            let (e1, e2) = (e(1), e(2));
            Some(sum(vec![
                TLElement::identity(3),
                e1.scale(&ratio(2, 3)),
                e2.scale(&ratio(2, 3)),
                mul(&e1, &e2).scale(&ratio(1, 3)),
                mul(&e2, &e1).scale(&ratio(1, 3)),
            ]))
        }
        _ => None,
    }
}

fn fusion_checks(cfg: &SuiteConfig, out: &mut Vec<Check>) {
    for c in 0..=cfg.max_color {
        let cc = c as i64;
        out.push(check(format!("fusion.jw-idempotent:c={c}"), "Jones-Wenzl idempotents", &[("c", cc)], move || {
            let p = jones_wenzl(c);
            ensure(tl_mul(&p, &p).map_err(err)? == p, || "JW squared differs from JW".into())
        }));
        out.push(check(format!("fusion.jw-annihilate:c={c}"), "Jones-Wenzl idempotents", &[("c", cc)], move || {
            let p = jones_wenzl(c);
            for j in 1..c {
                let e = TLElement::diagram(TLDiagram::cup_cap(c, j));
                ensure(tl_mul(&e, &p).map_err(err)?.is_zero(), || format!("e_{j} JW is nonzero"))?;
                ensure(tl_mul(&p, &e).map_err(err)?.is_zero(), || format!("JW e_{j} is nonzero"))?;
            }
            Ok(())
        }));
        out.push(check(format!("fusion.jw-identity-coeff:c={c}"), "Jones-Wenzl idempotents", &[("c", cc)], move || {
            equal(&jones_wenzl(c).coeff(&TLDiagram::identity(c)), &int(1))
        }));
        if c <= 3 {
            out.push(check(format!("fusion.jw-table:c={c}"), "Jones-Wenzl idempotents", &[("c", cc)], move || {
                let want = jw_reference(c).expect("small color");
                ensure(jones_wenzl(c) == want, || format!("coefficients differ for c = {c}"))
            }));
        }
    }
    out.push(check("fusion.cup-cap-square".into(), "loop value", &[], || {
        let e = TLElement::diagram(TLDiagram::cup_cap(2, 1));
        let want = e.scale(&loop_value());
        ensure(tl_mul(&e, &e).map_err(err)? == want, || "e_1^2 differs from delta e_1".into())
    }));
    out.push(check("fusion.gamma-loop".into(), "loop around a colored strand", &[], || {
        let ab = &a_pow(1) * &RatFunc::var(Var::B, 1);
        let want = -(&(&ab * &ab) + &(&ab * &ab).inv().map_err(err)?);
        equal(&gamma_loop_eval(), &want)
    }));
    for c in 0..=8i64 {
        out.push(check(format!("fusion.gamma-loop-at:c={c}"), "loop around a colored strand", &[("c", c)], move || {
            let e = 2 * c as i32 + 2;
            let want = -(&a_pow(e) + &a_pow(-e));
            equal(&specialize_b(&gamma_loop_eval(), c), &want)
        }));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        let mut cfg = SuiteConfig::default();
        assert!(cfg.validate().is_ok());
        cfg.ns = vec![1, 3];
        assert_eq!(cfg.validate(), Err(ConfigError::SmallN(1)));
        cfg.ns = vec![];
        assert_eq!(cfg.validate(), Err(ConfigError::EmptyRange("n")));
        cfg.ns = vec![2];
        cfg.m_min = 3;
        cfg.m_max = 2;
        assert_eq!(cfg.validate(), Err(ConfigError::EmptyRange("m")));
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn fusion_suite_passes_and_is_sorted() {
        let cfg = SuiteConfig {
            suite: Suite::Fusion,
            max_color: 3,
            ..SuiteConfig::default()
        };
        let r = run_suite(&cfg).unwrap();
        assert!(r.all_passed(), "{}", r.to_json());
        assert!(r.checks.windows(2).all(|w| w[0].id < w[1].id));
        assert!(r.checks.iter().any(|c| c.id == "fusion.jw-table:c=3"));
        assert_eq!(r.summary.total, r.checks.len());
    }
}
