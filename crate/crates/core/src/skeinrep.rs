//! Skein-side operators: the quantum trace `Upsilon` into the `Q`-torus, the
//! polynomial representation `Phi` into the `X`-torus, and the anti-map `*`
//! relating them.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::linalg::{self, Matrix};
use crate::qdiff::{AlgebraSpec, Generator, OpElement};
use crate::scalars::{
    a_pow, atom_pow, int, q_pow, s_pow, t_pow, u_minus, x_pow, Atom, RatFunc, Var,
};
use crate::Scalar;

/// Surface `S_{0,n+2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SurfaceParams {
    n: usize,
}

impl SurfaceParams {
    pub fn new(n: usize) -> Result<Self, AlgebraError> {
        if n < 2 {
            return Err(AlgebraError::BadSurface(n));
        }
        Ok(SurfaceParams { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Internal indices `1..=n-1`.
    pub fn internal(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n - 1
    }

    /// Boundary indices `0..=n+1`.
    pub fn boundary(&self) -> std::ops::RangeInclusive<usize> {
        0..=self.n + 1
    }

    pub fn check_internal(&self, kind: &'static str, i: usize) -> Result<(), AlgebraError> {
        if i >= 1 && i < self.n {
            Ok(())
        } else {
            Err(AlgebraError::IndexOutOfRange {
                kind,
                index: i as i64,
                n: self.n,
            })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenKind {
    Gamma,
    Delta,
    Sigma,
    Theta,
}

/// A named curve: `gamma:i`, `delta:j`, `sigma:i` (meaning `sigma_{i,i+1}`) or `theta:i:m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorId {
    pub kind: GenKind,
    pub index: usize,
    pub twist: i64,
}

impl GeneratorId {
    pub fn gamma(i: usize) -> Self {
        GeneratorId {
            kind: GenKind::Gamma,
            index: i,
            twist: 0,
        }
    }

    pub fn delta(j: usize) -> Self {
        GeneratorId {
            kind: GenKind::Delta,
            index: j,
            twist: 0,
        }
    }

    pub fn sigma(i: usize) -> Self {
        GeneratorId {
            kind: GenKind::Sigma,
            index: i,
            twist: 0,
        }
    }

    pub fn theta(i: usize, m: i64) -> Self {
        GeneratorId {
            kind: GenKind::Theta,
            index: i,
            twist: m,
        }
    }

    pub fn validate(&self, p: &SurfaceParams) -> Result<(), AlgebraError> {
        match self.kind {
            GenKind::Gamma => p.check_internal("gamma", self.index),
            GenKind::Sigma => p.check_internal("sigma", self.index),
            GenKind::Theta => p.check_internal("theta", self.index),
            GenKind::Delta => {
                if self.index <= p.n + 1 {
                    Ok(())
                } else {
                    Err(AlgebraError::IndexOutOfRange {
                        kind: "delta",
                        index: self.index as i64,
                        n: p.n,
                    })
                }
            }
        }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            GenKind::Gamma => write!(f, "gamma:{}", self.index),
            GenKind::Delta => write!(f, "delta:{}", self.index),
            GenKind::Sigma => write!(f, "sigma:{}", self.index),
            GenKind::Theta => write!(f, "theta:{}:{}", self.index, self.twist),
        }
    }
}

/// `-a^2 y^2 - a^{-2} y^{-2}` for a whole atom `y` and `a = A`.
fn loop_in_z(y: Var) -> Scalar {
    let a = &a_pow(2) * &atom_pow(y, 2);
    -(&a + &a.inv().expect("monomial"))
}

/// Boundary substitutions `Q_0 -> C_0`, `Q_n -> C_{n+1}`.
fn z_boundary_table(p: &SurfaceParams) -> HashMap<Var, Scalar> {
    let n = p.n;
    HashMap::from([
        (Var::qc(0), atom_pow(Var::c(0), 1)),
        (Var::qc(n), atom_pow(Var::c(n + 1), 1)),
    ])
}

/// Boundary substitutions `X_0 -> t_0`, `X_n -> t_{n+1}`.
fn x_boundary_table(p: &SurfaceParams) -> HashMap<Var, Scalar> {
    let n = p.n;
    HashMap::from([
        (Var::x(0), RatFunc::var(Var::t(0), 1)),
        (Var::x(n), RatFunc::var(Var::t(n + 1), 1)),
    ])
}

fn h_coefficients(i: usize) -> (Scalar, Scalar, Scalar) {
    let q = |k: usize| atom_pow(Var::qc(k), 1);
    let c = |k: usize| atom_pow(Var::c(k), 1);
    let (qm, qi, qp) = (q(i - 1), q(i), q(i + 1));
    let (ci, cj) = (c(i), c(i + 1));
    let a2 = a_pow(2);
    let inv = |x: &Scalar| x.inv().expect("monomial");
    let qi2 = &qi * &qi;

    let h2_num = &(&u_minus(&(&(&(&a2 * &inv(&ci)) * &qm) * &qi))
        * &u_minus(&(&(&(&a2 * &inv(&cj)) * &qp) * &qi)))
        * &(&u_minus(&(&(&ci * &qm) * &inv(&qi))) * &u_minus(&(&(&cj * &qp) * &inv(&qi))));
    let h2_den = &u_minus(&(&a2 * &qi2)) * &u_minus(&(&a_pow(4) * &qi2));
    let h2 = -(&h2_num / &h2_den);

    let hm_num = &(&u_minus(&(&(&(&a2 * &ci) * &qm) * &qi))
        * &u_minus(&(&(&ci * &inv(&qm)) * &qi)))
        * &(&u_minus(&(&(&(&a2 * &cj) * &qp) * &qi)) * &u_minus(&(&(&cj * &inv(&qp)) * &qi)));
    let hm_den = &u_minus(&qi2) * &u_minus(&(&a2 * &qi2));
    let hm = -(&hm_num / &hm_den);

    let cc = &(&ci * &ci) * &(&cj * &cj);
    let h0 = &(&(-&h2) - &hm) - &(&(&a2 * &cc) + &(&a_pow(-2) * &inv(&cc)));
    (h2, h0, hm)
}

/// Quantum trace of a generator, as an element of the `Q`-torus.
pub fn upsilon(g: GeneratorId, p: &SurfaceParams) -> Result<OpElement, AlgebraError> {
    g.validate(p)?;
    let spec = AlgebraSpec::ztrace(p.n);
    match g.kind {
        GenKind::Gamma => Ok(OpElement::scalar(&spec, loop_in_z(Var::qc(g.index)))),
        GenKind::Delta => Ok(OpElement::scalar(&spec, loop_in_z(Var::c(g.index)))),
        GenKind::Sigma => {
            let i = g.index;
            let (h2, h0, hm) = h_coefficients(i);
            let e = i - 1;
            let up = OpElement::shift(&spec, e, 2).mul(&OpElement::scalar(&spec, h2))?;
            let down = OpElement::shift(&spec, e, -2).mul(&OpElement::scalar(&spec, hm))?;
            let total = up.add(&OpElement::scalar(&spec, h0))?.add(&down)?;
            total.substitute(&z_boundary_table(p))
        }
        GenKind::Theta => Err(AlgebraError::Unsupported(
            "no closed formula for theta curves under the quantum trace".into(),
        )),
    }
}

/// `T_i(X_i^{arg})`, with the boundary substitutions applied.
pub fn t_coeff(i: usize, arg: i32, p: &SurfaceParams) -> Result<Scalar, AlgebraError> {
    p.check_internal("T", i)?;
    let x = x_pow(i, arg);
    let q = q_pow(1);
    let ti = t_pow(i, 1);
    let tj = t_pow(i + 1, 1);
    let factor = |t: &Scalar, y: Scalar| &int(1) - &(&(&(&q * t) * &y) * &x);
    let num = &(&factor(&ti, x_pow(i - 1, 1)) * &factor(&ti, x_pow(i - 1, -1)))
        * &(&factor(&tj, x_pow(i + 1, 1)) * &factor(&tj, x_pow(i + 1, -1)));
    let x2 = &x * &x;
    let den = &(&int(1) - &x2) * &(&int(1) - &(&q_pow(2) * &x2));
    let pre = -(&(&q_pow(-1) * &t_pow(i, -1)) * &t_pow(i + 1, -1));
    let raw = &pre * &(&num / &den);
    let table = x_boundary_table(p);
    Ok(raw.substitute(&|v| table.get(&v).cloned())?)
}

/// `tau_i^{e} = (q^{-2} X_i^{-2} W_i^2)^e`.
pub fn tau(spec: &Arc<AlgebraSpec>, i: usize, e: i32) -> OpElement {
    let base = OpElement::term(spec, unit_key(spec, i, 2), &q_pow(-2) * &x_pow(i, -2));
    base.powi(e).expect("monomial")
}

fn unit_key(spec: &AlgebraSpec, i: usize, e: i32) -> Vec<i32> {
    let mut k = vec![0; spec.num_shifts()];
    k[i - 1] = e;
    k
}

/// `q^m X_i^m T_i(X_i)(tau_i - 1) + q^m X_i^{-m} T_i(X_i^{-1})(tau_i^{-1} - 1)`.
pub fn theta_principal(i: usize, m: i64, p: &SurfaceParams) -> Result<OpElement, AlgebraError> {
    let spec = AlgebraSpec::xtorus(p.n);
    let one = OpElement::one(&spec);
    let mut out = OpElement::zero(&spec);
    for sgn in [1, -1] {
        let c = &(&q_pow(m as i32) * &x_pow(i, sgn * m as i32)) * &t_coeff(i, sgn, p)?;
        let shift = tau(&spec, i, sgn).sub(&one)?;
        out = out.add(&OpElement::scalar(&spec, c).mul(&shift)?)?;
    }
    Ok(out)
}

/// Polynomial representation of a generator in the `X`-torus.
pub fn phi(g: GeneratorId, p: &SurfaceParams) -> Result<OpElement, AlgebraError> {
    g.validate(p)?;
    let spec = AlgebraSpec::xtorus(p.n);
    let loop_of = |x: Scalar| -(&x + &x.inv().expect("monomial"));
    match g.kind {
        GenKind::Gamma => Ok(OpElement::scalar(&spec, loop_of(x_pow(g.index, 1)))),
        GenKind::Delta => Ok(OpElement::scalar(&spec, loop_of(t_pow(g.index, 1)))),
        GenKind::Sigma => {
            let i = g.index;
            let c = &(&q_pow(1) * &t_pow(i, 1)) * &t_pow(i + 1, 1);
            let constant = loop_of(c);
            theta_principal(i, 0, p)?.add(&OpElement::scalar(&spec, constant))
        }
        GenKind::Theta => Err(AlgebraError::Unsupported(
            "only the principal part of theta curves is constructed".into(),
        )),
    }
}

/// Generator images of the anti-map `*` from the `Q`-torus to the `X`-torus.
pub fn star_table(n: usize) -> HashMap<Generator, OpElement> {
    let x = AlgebraSpec::xtorus(n);
    let mut table = HashMap::new();
    for i in 1..n {
        table.insert(
            Generator::Coord(Var::qc(i)),
            OpElement::scalar(&x, &s_pow(-1) * &RatFunc::var(Var::x(i), 1)),
        );
        let mut k = vec![0; n - 1];
        k[i - 1] = 1;
        table.insert(
            Generator::Shift(i - 1),
            OpElement::term(&x, k, &s_pow(-1) * &x_pow(i, -1)),
        );
    }
    for l in 0..=n + 1 {
        table.insert(
            Generator::Coord(Var::c(l)),
            OpElement::scalar(&x, &s_pow(-1) * &RatFunc::var(Var::t(l), -1)),
        );
    }
    table
}

/// The anti-map `*`: `A -> q^{1/2}`, `C_l -> q^{-1/2} t_l^{-1/2}`,
/// `Q_i -> q^{-1/2} X_i^{1/2}`, `E_i -> q^{-1/2} X_i^{-1} W_i`.
pub fn star(a: &OpElement) -> Result<OpElement, AlgebraError> {
    let n = a.spec().n;
    let target = AlgebraSpec::xtorus(n);
    let scalar_map = |v: Var| match v.atom() {
        Atom::Q => Some(s_pow(-1)),
        _ => None,
    };
    a.apply_antimap(&target, &star_table(n), &scalar_map)
}

/// `star(upsilon(g)) == phi(g)`.
pub fn verify_factorization(g: GeneratorId, p: &SurfaceParams) -> Result<bool, AlgebraError> {
    Ok(star(&upsilon(g, p)?)? == phi(g, p)?)
}

/// `theta_{i,1}` from the skein relation between `gamma_i` and `theta_{i,0}`:
/// `(q^2 - q^{-2})^{-1} (q^{-1} g t - q t g - (q^{-1} - q) L)`.
pub fn theta_one(i: usize, p: &SurfaceParams) -> Result<OpElement, AlgebraError> {
    p.check_internal("theta", i)?;
    let n = p.n;
    let gamma = phi(GeneratorId::gamma(i), p)?;
    let theta0 = phi(GeneratorId::sigma(i), p)?;
    let gamma_or_delta = |k: usize| -> Result<OpElement, AlgebraError> {
        if k == 0 || k == n {
            phi(GeneratorId::delta(if k == 0 { 0 } else { n + 1 }), p)
        } else {
            phi(GeneratorId::gamma(k), p)
        }
    };
    let l = gamma_or_delta(i - 1)?
        .mul(&phi(GeneratorId::delta(i + 1), p)?)?
        .add(&gamma_or_delta(i + 1)?.mul(&phi(GeneratorId::delta(i), p)?)?)?;
    let left = gamma.mul(&theta0)?.scale(&q_pow(-1));
    let right = theta0.mul(&gamma)?.scale(&q_pow(1));
    let lterm = l.scale(&(&q_pow(-1) - &q_pow(1)));
    let sum = left.sub(&right)?.sub(&lterm)?;
    let pre = (&q_pow(2) - &q_pow(-2)).inv()?;
    Ok(sum.scale(&pre))
}

/// The free symbol used for a generic boundary loop in the skein matrix.
pub fn delta_symbol() -> Scalar {
    RatFunc::var(Var::new(Atom::DeltaK), 1)
}

/// The 4x4 skein matrix with loop value `delta`.
pub fn skein_matrix(delta: &Scalar) -> Matrix {
    let (a, b) = (a_pow(-2), a_pow(2));
    let z = int(0);
    vec![
        vec![a.clone(), b.clone(), delta.clone(), z.clone()],
        vec![b.clone(), a.clone(), delta.clone(), z.clone()],
        vec![delta.clone(), z.clone(), b.clone(), a.clone()],
        vec![delta.clone(), z, a, b],
    ]
}

pub fn skein_matrix_det(delta: &Scalar) -> Scalar {
    linalg::det(&skein_matrix(delta))
}
