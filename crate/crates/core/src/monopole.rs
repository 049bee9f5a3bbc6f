//! Dressed minuscule monopole operators in the difference-operator algebra
//! and the embedding `Psi` of its torus invariants into the `X`-torus.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::qdiff::{dz_shift_index, AlgebraSpec, OpElement};
use crate::scalars::{
    atom_pow, int, invariant_under_inversion, q_pow, Atom, Pm, RatFunc, Var,
};
use crate::skeinrep::{phi, tau, theta_principal, GeneratorId, SurfaceParams};
use crate::Scalar;

fn w(i: usize, pm: Pm) -> Scalar {
    atom_pow(Var::w(i, pm), 1)
}

fn z(j: usize) -> Scalar {
    atom_pow(Var::z(j), 1)
}

/// `w_{0,+-} -> z_{0,+-}` and `w_{n,+-} -> z_{n+1,+-}`.
fn boundary_table(n: usize) -> HashMap<Var, Scalar> {
    let mut t = HashMap::new();
    for pm in Pm::both() {
        t.insert(Var::w(0, pm), atom_pow(Var::zb(0, pm), 1));
        t.insert(Var::w(n, pm), atom_pow(Var::zb(n + 1, pm), 1));
    }
    t
}

/// `1 / (1 - a b^{-1})`.
fn simple_pole(a: &Scalar, b: &Scalar) -> Scalar {
    (&int(1) - &(a / b)).inv().expect("nonzero")
}

/// Product of the four matter factors around node `i`.
///
/// `outgoing` selects `(1 - q z w_{i,e} w_{k,+-}^{-1})` over `(1 - q z w_{k,+-} w_{i,e}^{-1})`.
fn matter(i: usize, e: Pm, outgoing: bool) -> Scalar {
    let wi = w(i, e);
    let q = q_pow(1);
    let mut acc = int(1);
    for (k, zk) in [(i - 1, z(i)), (i + 1, z(i + 1))] {
        for pm in Pm::both() {
            let ratio = if outgoing { &wi / &w(k, pm) } else { &w(k, pm) / &wi };
            acc = &acc * &(&int(1) - &(&(&q * &zk) * &ratio));
        }
    }
    acc
}

fn coefficient_p(i: usize, e: Pm) -> Scalar {
    let pole = simple_pole(&w(i, e.flip()), &w(i, e));
    if i % 2 == 0 {
        &matter(i, e, true) * &pole
    } else {
        pole
    }
}

fn coefficient_q(i: usize, e: Pm) -> Scalar {
    let pole = simple_pole(&w(i, e), &w(i, e.flip()));
    if i % 2 == 0 {
        pole
    } else {
        &matter(i, e, false) * &pole
    }
}

fn dressed(
    i: usize,
    m: i64,
    p: &SurfaceParams,
    coef: impl Fn(usize, Pm) -> Scalar,
    prefactor: Scalar,
    dir: i32,
) -> Result<OpElement, AlgebraError> {
    p.check_internal("monopole", i)?;
    let spec = AlgebraSpec::dz(p.n());
    let mut out = OpElement::zero(&spec);
    for e in Pm::both() {
        let c = &(&prefactor * &atom_pow(Var::w(i, e), m as i32)) * &coef(i, e);
        let d = OpElement::shift(&spec, dz_shift_index(i, e), dir);
        out = out.add(&OpElement::scalar(&spec, c).mul(&d)?)?;
    }
    out.substitute(&boundary_table(p.n()))
}

/// `E_{i,1}[x^m] = sum_e w_{i,e}^m P_{i,e} D_{i,e}`.
pub fn monopole_e(i: usize, m: i64, p: &SurfaceParams) -> Result<OpElement, AlgebraError> {
    dressed(i, m, p, coefficient_p, int(1), 1)
}

/// `F_{i,1}[x^m] = sum_e q^{-2m} w_{i,e}^m Q_{i,e} D_{i,e}^{-1}`.
pub fn monopole_f(i: usize, m: i64, p: &SurfaceParams) -> Result<OpElement, AlgebraError> {
    dressed(i, m, p, coefficient_q, q_pow(-2 * m as i32), -1)
}

/// True when every monomial has `D_{i,+}` and `D_{i,-}` exponents summing to zero.
pub fn is_torus_invariant(a: &OpElement) -> bool {
    a.terms().keys().all(|k| k.chunks(2).all(|c| c[0] + c[1] == 0))
}

fn psi_scalar(c: &Scalar, n: usize) -> Result<Scalar, AlgebraError> {
    Ok(c.substitute(&|v: Var| match v.atom() {
        Atom::W(i, pm) => Some(RatFunc::var(Var::x(i as usize), 2 * pm.sign() as i32)),
        Atom::Z(j) => Some(RatFunc::var(Var::t(j as usize), 2)),
        Atom::Zb(k, pm) => {
            let k = k as usize;
            (k == 0 || k == n + 1).then(|| RatFunc::var(Var::t(k), 2 * pm.sign() as i32))
        }
        _ => None,
    })?)
}

/// The embedding of torus invariants into the `X`-torus.
pub fn psi(a: &OpElement) -> Result<OpElement, AlgebraError> {
    let n = a.spec().n;
    let x = AlgebraSpec::xtorus(n);
    let mut out = OpElement::zero(&x);
    for (k, c) in a.terms() {
        if k.chunks(2).any(|c| c[0] + c[1] != 0) {
            let single = OpElement::term(a.spec(), k.clone(), c.clone());
            return Err(AlgebraError::Unbalanced(single.to_string()));
        }
        let mut term = OpElement::scalar(&x, psi_scalar(c, n)?);
        for (idx, pair) in k.chunks(2).enumerate() {
            if pair[0] != 0 {
                term = term.mul(&balanced_image(&x, idx + 1, pair[0])?)?;
            }
        }
        out = out.add(&term)?;
    }
    Ok(out)
}

/// `(D_{i,+} D_{i,-}^{-1})^a -> (q^{-4} X_i^{-4} W_i^2)^a`.
fn balanced_image(x: &Arc<AlgebraSpec>, i: usize, a: i32) -> Result<OpElement, AlgebraError> {
    // q^{-4} X^{-4} W^2 = q^{-2} X^{-2} tau
    let base = tau(x, i, 1).scale(&(&q_pow(-2) * &crate::scalars::x_pow(i, -2)));
    base.powi(a)
}

/// `B_i = -q^{-1} z_i^{-1} z_{i+1}^{-1}`.
fn b_factor(i: usize) -> Scalar {
    -(&(&q_pow(-1) * &z(i).inv().expect("monomial")) * &z(i + 1).inv().expect("monomial"))
}

/// The dressed product whose image should match `theta_{i,m}` up to symmetric terms.
pub fn theta_candidate(i: usize, m: i64, p: &SurfaceParams) -> Result<OpElement, AlgebraError> {
    let spec = AlgebraSpec::dz(p.n());
    let prod = if i % 2 == 0 {
        let c = &q_pow(m as i32) * &b_factor(i);
        OpElement::scalar(&spec, c)
            .mul(&monopole_e(i, m - 2, p)?)?
            .mul(&monopole_f(i, 0, p)?)?
    } else {
        let c = &q_pow(4 - m as i32) * &b_factor(i);
        OpElement::scalar(&spec, c)
            .mul(&monopole_f(i, 2 - m, p)?)?
            .mul(&monopole_e(i, 0, p)?)?
    };
    prod.substitute(&boundary_table(p.n()))
}

/// Outcome of comparing the monopole side with the principal part of `theta_{i,m}`.
#[derive(Clone, Debug)]
pub struct PhiPsiCheck {
    pub ok: bool,
    pub remainder: OpElement,
}

pub fn verify_phi_psi(i: usize, m: i64, p: &SurfaceParams) -> Result<PhiPsiCheck, AlgebraError> {
    let image = psi(&theta_candidate(i, m, p)?)?;
    let remainder = image.sub(&theta_principal(i, m, p)?)?;
    let all: Vec<usize> = p.internal().collect();
    let ok = remainder
        .as_coefficient()
        .is_some_and(|c| c.is_laurent() && invariant_under_inversion(&c, &all));
    Ok(PhiPsiCheck { ok, remainder })
}

/// `Phi(gamma_i) == Psi(-w_{i,+} - w_{i,-})`.
pub fn verify_gamma(i: usize, p: &SurfaceParams) -> Result<bool, AlgebraError> {
    let spec = AlgebraSpec::dz(p.n());
    let sum = -(&w(i, Pm::Plus) + &w(i, Pm::Minus));
    Ok(psi(&OpElement::scalar(&spec, sum))? == phi(GeneratorId::gamma(i), p)?)
}

/// Whether `w_{j,+} <-> w_{j,-}` fixes `c` for every `j`.
pub fn w_swap_symmetric(c: &Scalar, n: usize) -> bool {
    let swapped = c.map_monomials_auto(|m| {
        m.map_vars(|v, e| match v.atom() {
            Atom::W(i, pm) if (i as usize) < n => (Var::w(i as usize, pm.flip()), e),
            _ => (v, e),
        })
    });
    &swapped == c
}

/// `[E_{i,1}[1], F_{i,1}[1]] = (q - q^{-1}) h`; reports whether `h` is a
/// shift-free, swap-symmetric Laurent polynomial.
pub fn verify_ef_commutator(i: usize, p: &SurfaceParams) -> Result<(bool, Scalar), AlgebraError> {
    let e = monopole_e(i, 0, p)?;
    let f = monopole_f(i, 0, p)?;
    let comm = e.mul(&f)?.sub(&f.mul(&e)?)?;
    let Some(c) = comm.as_coefficient() else {
        return Ok((false, int(0)));
    };
    let h = c.checked_div(&(&q_pow(1) - &q_pow(-1)))?;
    let ok = h.is_laurent() && w_swap_symmetric(&h, p.n());
    Ok((ok, h))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize) -> SurfaceParams {
        SurfaceParams::new(n).unwrap()
    }

    #[test]
    fn psi_of_balanced_pair() {
        let d = AlgebraSpec::dz(3);
        let a = OpElement::shift(&d, dz_shift_index(1, Pm::Plus), 1)
            .mul(&OpElement::shift(&d, dz_shift_index(1, Pm::Minus), -1))
            .unwrap();
        let x = AlgebraSpec::xtorus(3);
        let mut k = vec![0; 2];
        k[0] = 2;
        let expect = OpElement::term(&x, k, &q_pow(-4) * &crate::scalars::x_pow(1, -4));
        assert_eq!(psi(&a).unwrap(), expect);
    }

    #[test]
    fn psi_rejects_unbalanced() {
        let d = AlgebraSpec::dz(3);
        let a = OpElement::shift(&d, 0, 1);
        assert!(matches!(psi(&a), Err(AlgebraError::Unbalanced(_))));
    }

    #[test]
    fn gamma_matches() {
        for i in 1..4 {
            assert!(verify_gamma(i, &p(4)).unwrap());
        }
    }

    #[test]
    fn f_prefactor() {
        let f = monopole_f(1, 1, &p(3)).unwrap();
        let f0 = monopole_f(1, 0, &p(3)).unwrap();
        let k = {
            let mut k = vec![0; 4];
            k[0] = -1;
            k
        };
        let ratio = &f.coeff(&k) / &f0.coeff(&k);
        assert_eq!(ratio, &q_pow(-2) * &atom_pow(Var::w(1, Pm::Plus), 1));
    }

    #[test]
    fn boundary_w_replaced() {
        let e = monopole_f(1, 0, &p(2)).unwrap();
        for c in e.terms().values() {
            assert!(!c.mentions(|v| matches!(v.atom(), Atom::W(0, _) | Atom::W(2, _))));
        }
    }

    #[test]
    fn phi_psi_small() {
        for n in 2..=3 {
            for i in 1..n {
                for m in -1..=2 {
                    let r = verify_phi_psi(i, m, &p(n)).unwrap();
                    assert!(r.ok, "i={i} m={m} n={n}: {}", r.remainder);
                }
            }
        }
    }

    #[test]
    fn commutator_small() {
        for n in 2..=3 {
            for i in 1..n {
                let (ok, h) = verify_ef_commutator(i, &p(n)).unwrap();
                assert!(ok, "i={i} n={n}: {h}");
            }
        }
    }
}
