//! One line per acceptance criterion. Every criterion is exact equality;
//! the random-evaluation oracles below recheck the symbolic answers over Q.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skeincoulomb::fusion::{
    gamma_loop_eval, jones_wenzl, specialize_b, tl_mul, TLDiagram, TLElement,
};
use skeincoulomb::grcoulomb::{
    coulomb_matrix, coulomb_products, gr_mul, sigma_closed_form, solve_sigma, Coweight, GradedElement,
};
use skeincoulomb::linalg::{det, mat_vec, solve, Matrix};
use skeincoulomb::monopole::{psi, theta_candidate, verify_ef_commutator, verify_gamma, verify_phi_psi};
use skeincoulomb::qdiff::OpElement;
use skeincoulomb::scalars::{
    a_pow, eval_rational, int, q_pow, qint, t_pow, x_pow, Atom, RatFunc, Rational, Var,
};
use skeincoulomb::skeinrep::{
    delta_symbol, phi, skein_matrix, star, theta_one, theta_principal, upsilon, GeneratorId, SurfaceParams,
};
use skeincoulomb::verify::{run_suite, Suite, SuiteConfig};
use skeincoulomb::Scalar;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn sp(n: usize) -> SurfaceParams {
    SurfaceParams::new(n).unwrap()
}

/// A deterministic rational value for every atom, keyed by its name.
fn point(seed: u64) -> impl Fn(Var) -> Rational {
    move |v: Var| {
        let mut h = DefaultHasher::new();
        (seed, v.name()).hash(&mut h);
        let x = h.finish();
        let num = 2 + (x % 29) as i64;
        let den = 1 + ((x >> 8) % 7) as i64;
        let sign = if (x >> 16).is_multiple_of(2) { 1 } else { -1 };
        Rational::new((sign * num).into(), den.into())
    }
}

fn ev(x: &Scalar, at: &impl Fn(Var) -> Rational) -> Option<Rational> {
    eval_rational(x, at)
}

/// Same shift monomials, and coefficients agreeing at a few random points.
fn ops_agree_numerically(a: &OpElement, b: &OpElement) -> bool {
    let ka: Vec<_> = a.terms().keys().collect();
    let kb: Vec<_> = b.terms().keys().collect();
    if ka != kb {
        return false;
    }
    (0..3u64).all(|s| {
        let at = point(1000 + s);
        a.terms()
            .iter()
            .all(|(k, c)| match (ev(c, &at), ev(&b.coeff(k), &at)) {
                (Some(x), Some(y)) => x == y,
                _ => true,
            })
    })
}

/// Numerical check that `X_j -> X_j^{-1}` for all `j` in `js` fixes `c`.
fn symmetric_numerically(c: &Scalar, js: &[usize]) -> bool {
    (0..3u64).all(|s| {
        let at = point(2000 + s);
        let flipped = |v: Var| match v.atom() {
            Atom::X(j) if js.contains(&(j as usize)) => Rational::one() / at(v),
            _ => at(v),
        };
        match (ev(c, &at), ev(c, &flipped)) {
            (Some(x), Some(y)) => x == y,
            _ => true,
        }
    })
}

fn criterion_1() -> Outcome {
    let mut count = 0;
    for n in 2..=5 {
        let p = sp(n);
        let mut gens: Vec<GeneratorId> = (1..n).flat_map(|i| [GeneratorId::gamma(i), GeneratorId::sigma(i)]).collect();
        gens.extend((0..=n + 1).map(GeneratorId::delta));
        for g in gens {
            let lhs = star(&upsilon(g, &p).map_err(e)?).map_err(e)?;
            let rhs = phi(g, &p).map_err(e)?;
            ensure(lhs == rhs, || format!("n={n} {g}: {lhs} vs {rhs}"))?;
            ensure(ops_agree_numerically(&lhs, &rhs), || format!("n={n} {g}: oracle disagrees"))?;
            count += 1;
        }
    }
    Ok(format!("{count} generators"))
}

fn criterion_2() -> Outcome {
    let mut count = 0;
    for n in 2..=5 {
        let p = sp(n);
        let all: Vec<usize> = (1..n).collect();
        for i in 1..n {
            ensure(verify_gamma(i, &p).map_err(e)?, || format!("gamma n={n} i={i}"))?;
            for m in -2..=4 {
                let r = verify_phi_psi(i, m, &p).map_err(e)?;
                ensure(r.ok, || format!("n={n} i={i} m={m}: remainder {}", r.remainder))?;
                let image = psi(&theta_candidate(i, m, &p).map_err(e)?).map_err(e)?;
                let rem = image.sub(&theta_principal(i, m, &p).map_err(e)?).map_err(e)?;
                let c = rem.as_coefficient().ok_or_else(|| format!("n={n} i={i} m={m}: shifts remain"))?;
                ensure(symmetric_numerically(&c, &all), || format!("n={n} i={i} m={m}: oracle asymmetric"))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} (n, i, m) cases"))
}

fn criterion_3() -> Outcome {
    let mut count = 0;
    for n in 2..=5 {
        let p = sp(n);
        let all: Vec<usize> = (1..n).collect();
        for i in 1..n {
            let rem = theta_one(i, &p)
                .and_then(|t| t.sub(&theta_principal(i, 1, &p)?))
                .map_err(e)?;
            let c = rem.as_coefficient().ok_or_else(|| format!("n={n} i={i}: shifts remain"))?;
            ensure(c.den().is_constant(), || format!("n={n} i={i}: not Laurent: {c}"))?;
            ensure(symmetric_numerically(&c, &all), || format!("n={n} i={i}: not symmetric: {c}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} cases"))
}

fn criterion_4() -> Outcome {
    let mut count = 0;
    for n in 2..=5 {
        let p = sp(n);
        for i in 1..n {
            let (ok, h) = verify_ef_commutator(i, &p).map_err(e)?;
            ensure(ok, || format!("n={n} i={i}: h = {h}"))?;
            let swap_ok = (0..3u64).all(|s| {
                let at = point(3000 + s);
                let swapped = |v: Var| match v.atom() {
                    Atom::W(k, pm) if (k as usize) < n => at(Var::w(k as usize, pm.flip())),
                    _ => at(v),
                };
                ev(&h, &at) == ev(&h, &swapped)
            });
            ensure(swap_ok, || format!("n={n} i={i}: oracle sees asymmetric h"))?;
            count += 1;
        }
    }
    Ok(format!("{count} cases"))
}

/// The four products written out row by row.
fn displayed_products(i: usize, j: usize, n: usize) -> Vec<GradedElement> {
    let (q, qi) = (q_pow(1), q_pow(-1));
    let d = -(&t_pow(j, 1) + &t_pow(j, -1));
    let u1 = &x_pow(j - 1, 1) * &x_pow(j, -1);
    let u2 = &x_pow(j - 1, -1) * &x_pow(j, 1);
    let u4 = &x_pow(j - 1, 2) * &x_pow(j, -2);
    let rows = [
        &(&(&q * &u1) + &(&qi * &u2)) + &d,
        &(&(&qi * &u1) + &(&q * &u2)) + &d,
        &(&(&d * &u1) + &qi) + &(&q * &u4),
        &(&(&d * &u1) + &q) + &(&qi * &u4),
    ];
    let pre = -t_pow(j, -1);
    rows.iter()
        .map(|r| GradedElement::term(n, Coweight::alpha(n, i, j), &pre * r).unwrap())
        .collect()
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut products = 0;
    for n in 3..=6 {
        for j in 2..n {
            for i in 1..j {
                let got = coulomb_products(i, j, n).map_err(e)?;
                let want = displayed_products(i, j, n);
                for (k, (g, w)) in got.iter().zip(&want).enumerate() {
                    ensure(g == w, || format!("(a) n={n} i={i} j={j} product {k}: {g} vs {w}"))?;
                }
                products += 1;
            }
        }
    }
    let n = 5;
    let mut twists = 0;
    while twists < 50 {
        let l: Vec<i64> = (1..n).map(|_| rng.gen_range(0..=3)).collect();
        let l = Coweight::new(l).map_err(e)?;
        if l.support().is_empty() {
            continue;
        }
        for j in l.support() {
            let k = l.get(j) as i32;
            let lhs = gr_mul(
                &GradedElement::basis(n, l.clone()).map_err(e)?,
                &GradedElement::scalar(n, &x_pow(j, 1) + &x_pow(j, -1)).map_err(e)?,
            );
            let c = &(&q_pow(2 * k) * &x_pow(j, 1)) + &(&q_pow(-2 * k) * &x_pow(j, -1));
            let rhs = GradedElement::term(n, l.clone(), c).map_err(e)?;
            ensure(lhs == rhs, || format!("(b) l={l} j={j}: {lhs}"))?;
        }
        twists += 1;
    }
    for _ in 0..10 {
        let l = Coweight::new((1..n).map(|_| rng.gen_range(0..=2)).collect()).map_err(e)?;
        for k in 0..=3 {
            for m in 0..=3 {
                let lhs = gr_mul(
                    &GradedElement::basis(n, l.scale(k)).map_err(e)?,
                    &GradedElement::basis(n, l.scale(m)).map_err(e)?,
                );
                let rhs = GradedElement::basis(n, l.scale(k + m)).map_err(e)?;
                ensure(lhs == rhs, || format!("(c) l={l} k={k} m={m}: {lhs}"))?;
            }
        }
    }
    let mut arng = skeincoulomb::random::rng_for(5, "associativity");
    for _ in 0..100 {
        let a = skeincoulomb::random::graded_term(&mut arng, 4, 2);
        let b = skeincoulomb::random::graded_term(&mut arng, 4, 2);
        let c = skeincoulomb::random::graded_term(&mut arng, 4, 2);
        let lhs = gr_mul(&gr_mul(&a, &b), &c);
        let rhs = gr_mul(&a, &gr_mul(&b, &c));
        ensure(lhs == rhs, || format!("(d) ({a}) ({b}) ({c})"))?;
    }
    let mut sigmas = 0;
    for n in 3..=6 {
        let p = sp(n);
        for j in 1..=n - 2 {
            for i in 1..=j {
                let got = solve_sigma(i, j, &p).map_err(e)?;
                let want = sigma_closed_form(i, j, &p).map_err(e)?;
                ensure(got == want, || format!("(e) n={n} i={i} j={j}: {got} vs {want}"))?;
                sigmas += 1;
            }
        }
    }
    Ok(format!("{products} product sets, 50 twists, 100 triples, {sigmas} sigmas"))
}

/// Idempotents for up to three strands, assembled from quantum integers.
fn jw_table(c: usize) -> TLElement {
    let e = |j| TLElement::diagram(TLDiagram::cup_cap(c, j));
    let r = |a, b| &qint(a) / &qint(b);
    match c {
        0 | 1 => TLElement::identity(c),
        2 => TLElement::identity(2).add(&e(1).scale(&r(1, 2))).unwrap(),
        _ => {
            let (e1, e2) = (e(1), e(2));
            [
                e1.scale(&r(2, 3)),
                e2.scale(&r(2, 3)),
                tl_mul(&e1, &e2).unwrap().scale(&r(1, 3)),
                tl_mul(&e2, &e1).unwrap().scale(&r(1, 3)),
            ]
            .iter()
            .fold(TLElement::identity(3), |acc, t| acc.add(t).unwrap())
        }
    }
}

fn criterion_6() -> Outcome {
    for c in 0..=6 {
        let p = jones_wenzl(c);
        ensure(tl_mul(&p, &p).map_err(e)? == p, || format!("JW_{c} not idempotent"))?;
        for j in 1..c {
            let ej = TLElement::diagram(TLDiagram::cup_cap(c, j));
            ensure(tl_mul(&ej, &p).map_err(e)?.is_zero(), || format!("e_{j} JW_{c} != 0"))?;
            ensure(tl_mul(&p, &ej).map_err(e)?.is_zero(), || format!("JW_{c} e_{j} != 0"))?;
        }
    }
    for c in 0..=3 {
        ensure(jones_wenzl(c) == jw_table(c), || format!("JW_{c}: {} vs {}", jones_wenzl(c), jw_table(c)))?;
    }
    ensure(jones_wenzl(3).terms().len() == 5, || "JW_3 should have five terms".into())?;
    let ab = &a_pow(1) * &RatFunc::var(Var::B, 1);
    let closed = -(&(&ab * &ab) + &(&ab * &ab).inv().map_err(e)?);
    let g = gamma_loop_eval();
    ensure(g == closed, || format!("loop = {g}"))?;
    for c in 0..=8 {
        let want = -(&a_pow(2 * c + 2) + &a_pow(-2 * c - 2));
        ensure(specialize_b(&g, c as i64) == want, || format!("B = A^{c}"))?;
    }
    Ok("JW up to 6 strands, table up to 3, loop closed form".into())
}

/// Leibniz formula over all permutations.
fn leibniz(m: &[Vec<Rational>]) -> Rational {
    fn perms(k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(k - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, k - 1);
                out.push(q);
            }
        }
        out
    }
    let n = m.len();
    let mut total = Rational::zero();
    for p in perms(n) {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
        let mut prod = Rational::one();
        for (r, &c) in p.iter().enumerate() {
            prod *= m[r][c].clone();
        }
        total = if inversions % 2 == 0 { total + prod } else { total - prod };
    }
    total
}

fn numeric(m: &Matrix, at: &impl Fn(Var) -> Rational) -> Vec<Vec<Rational>> {
    m.iter().map(|r| r.iter().map(|x| ev(x, at).unwrap()).collect()).collect()
}

fn planted(m: &Matrix, vars: &[Var], seed: u64) -> Result<(), String> {
    let mut rng = skeincoulomb::random::rng_for(seed, "planted");
    for _ in 0..20 {
        let x: Vec<Scalar> = (0..4).map(|_| skeincoulomb::random::ratfunc(&mut rng, vars)).collect();
        let b = mat_vec(m, &x);
        let got = solve(m, &b).ok_or("singular")?;
        ensure(got == x, || "planted solution not recovered".into())?;
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let p = skein_matrix(&delta_symbol());
    let dp = det(&p);
    ensure(!dp.is_zero(), || "skein determinant vanishes".into())?;
    let at_zero = det(&skein_matrix(&int(0)));
    let a4 = &a_pow(4) - &a_pow(-4);
    ensure(at_zero == -(&a4 * &a4), || format!("det at zero loop = {at_zero}"))?;
    for s in 0..5 {
        let at = point(7000 + s);
        ensure(ev(&dp, &at) == Some(leibniz(&numeric(&p, &at))), || "skein det oracle".into())?;
    }
    for j in 1..=4 {
        let c = coulomb_matrix(j);
        let dc = det(&c);
        ensure(!dc.is_zero(), || format!("Coulomb determinant vanishes for j={j}"))?;
        let at = point(7100 + j as u64);
        ensure(ev(&dc, &at) == Some(leibniz(&numeric(&c, &at))), || "Coulomb det oracle".into())?;
    }
    planted(&p, &[Var::Q, Var::new(Atom::DeltaK)], 1)?;
    planted(&coulomb_matrix(2), &[Var::Q, Var::t(2)], 2)?;
    Ok(format!("det P = {dp}"))
}

fn criterion_8() -> Outcome {
    let mut total = 0;
    for suite in [Suite::Scalars, Suite::Qdiff] {
        let cfg = SuiteConfig { suite, seed: 8, ..SuiteConfig::default() };
        let r = run_suite(&cfg).map_err(e)?;
        if let Some(bad) = r.checks.iter().find(|c| !c.pass) {
            return Err(format!("{}: {}", bad.id, bad.counterexample.clone().unwrap_or_default()));
        }
        total += r.summary.total;
    }
    Ok(format!("{total} law checks, 200 instances each"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("factorization star(Upsilon) = Phi", criterion_1),
        ("monopole images match theta up to symmetric terms", criterion_2),
        ("theta recursion at m = 1", criterion_3),
        ("E F commutator", criterion_4),
        ("graded algebra", criterion_5),
        ("fusion and Jones-Wenzl", criterion_6),
        ("matrix nondegeneracy", criterion_7),
        ("engine laws", criterion_8),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail})", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
