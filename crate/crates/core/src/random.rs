//! Seeded generators for randomized checks.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::ops::RangeInclusive;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::grcoulomb::{Coweight, GradedElement};
use crate::qdiff::{AlgebraSpec, OpElement};
use crate::scalars::{int, Monomial, Poly, RatFunc, Rational, Var};
use crate::Scalar;

/// A generator seeded from `seed` and a label, so every check draws its own stream.
pub fn rng_for(seed: u64, label: &str) -> ChaCha8Rng {
    let mut h = DefaultHasher::new();
    label.hash(&mut h);
    ChaCha8Rng::seed_from_u64(seed ^ h.finish())
}

/// Random Laurent polynomial with `terms` terms, exponents in `-deg..=deg`, small coefficients.
pub fn laurent(rng: &mut impl Rng, vars: &[Var], terms: RangeInclusive<usize>, deg: i32) -> Scalar {
    let mut p: Poly<BigInt> = Poly::zero();
    for _ in 0..rng.gen_range(terms) {
        let m = Monomial::from_pairs(vars.iter().map(|&v| (v, rng.gen_range(-deg..=deg))));
        let c: i64 = rng.gen_range(1..=5) * if rng.gen_bool(0.5) { 1 } else { -1 };
        p = p.add(&Poly::term(m, BigInt::from(c)));
    }
    RatFunc::from_poly(p)
}

/// Random polynomial with nonnegative exponents and a nonzero constant term.
pub fn denominator(rng: &mut impl Rng, vars: &[Var], terms: RangeInclusive<usize>, deg: i32) -> Scalar {
    let mut p: Poly<BigInt> = Poly::from_i64(rng.gen_range(1..=3));
    for _ in 0..rng.gen_range(terms) {
        let m = Monomial::from_pairs(vars.iter().map(|&v| (v, rng.gen_range(0..=deg))));
        let c: i64 = rng.gen_range(1..=3) * if rng.gen_bool(0.5) { 1 } else { -1 };
        p = p.add(&Poly::term(m, BigInt::from(c)));
    }
    if p.is_zero() {
        return int(1);
    }
    RatFunc::from_poly(p)
}

/// Random quotient of small polynomials.
pub fn ratfunc(rng: &mut impl Rng, vars: &[Var]) -> Scalar {
    let num = laurent(rng, vars, 1..=3, 2);
    let den = denominator(rng, vars, 0..=2, 2);
    &num / &den
}

/// Random operator: `terms` shift monomials with entries in `-2..=2`.
pub fn op_element(rng: &mut impl Rng, spec: &Arc<AlgebraSpec>, coeff_vars: &[Var], terms: usize) -> OpElement {
    let mut out = OpElement::zero(spec);
    for _ in 0..terms {
        let k: Vec<i32> = (0..spec.num_shifts()).map(|_| rng.gen_range(-2..=2)).collect();
        let c = laurent(rng, coeff_vars, 1..=2, 2);
        out = out.add(&OpElement::term(spec, k, c)).expect("same algebra");
    }
    out
}

/// Random dominant coweight with entries in `0..=max`.
pub fn coweight(rng: &mut impl Rng, n: usize, max: i64) -> Coweight {
    Coweight::new((1..n).map(|_| rng.gen_range(0..=max)).collect()).expect("dominant")
}

/// Random `f r_l` with `f` invariant under `X_j -> X_j^{-1}` off the support of `l`.
pub fn graded_term(rng: &mut impl Rng, n: usize, max: i64) -> GradedElement {
    let l = coweight(rng, n, max);
    let mut f = laurent(rng, &[Var::Q, Var::t(1)], 1..=1, 2);
    for j in 1..n {
        let x = RatFunc::var(Var::x(j), 2);
        let factor = if l.get(j) != 0 {
            laurent(rng, &[Var::x(j)], 1..=2, 2)
        } else if rng.gen_bool(0.5) {
            &x + &x.inv().expect("monomial")
        } else {
            int(1)
        };
        f = &f * &factor;
    }
    GradedElement::term(n, l, f).expect("valid by construction")
}

/// Random nonzero rational.
pub fn rational(rng: &mut impl Rng) -> Rational {
    loop {
        let num: i64 = rng.gen_range(-40..=40);
        let den: i64 = rng.gen_range(1..=17);
        if num != 0 {
            return Rational::new(num.into(), den.into());
        }
    }
}
