//! Exact coefficient arithmetic.
//!
//! Everything is one flavour of number: a reduced fraction of Laurent
//! polynomials over the integers in the atoms listed by [`Atom`]. The square
//! roots `q^1/2`, `t_j^1/2` and `X_i^1/2` are atoms themselves, so half powers
//! are ordinary integer exponents.

mod gcd;
mod poly;
mod quantum;
mod ratfunc;
mod render;
mod var;

pub use gcd::gcd;
pub use poly::{Coeff, Monomial, Poly};
pub use quantum::{invariant_under_inversion, kappa, qfact, qint, shift};
pub use ratfunc::RatFunc;
pub use render::{render_poly, render_ratfunc};
pub use var::{Atom, Pm, Var};

/// `s^e` where `s = q^{1/2}`.
pub fn s_pow(e: i32) -> crate::Scalar {
    RatFunc::var(Var::Q, e)
}

/// `q^k`.
pub fn q_pow(k: i32) -> crate::Scalar {
    s_pow(2 * k)
}

/// `A^k` with `A = q^{-1/2}`.
pub fn a_pow(k: i32) -> crate::Scalar {
    s_pow(-k)
}

/// `t_j^k`.
pub fn t_pow(j: usize, k: i32) -> crate::Scalar {
    RatFunc::var(Var::t(j), 2 * k)
}

/// `X_i^k`.
pub fn x_pow(i: usize, k: i32) -> crate::Scalar {
    RatFunc::var(Var::x(i), 2 * k)
}

/// Whole-exponent atom power, for atoms without square roots.
pub fn atom_pow(v: Var, k: i32) -> crate::Scalar {
    let e = if v.is_half() { 2 * k } else { k };
    RatFunc::var(v, e)
}

pub fn int(c: i64) -> crate::Scalar {
    RatFunc::from_i64(c)
}

/// `x - x^{-1}`.
pub fn u_minus(x: &crate::Scalar) -> crate::Scalar {
    x - &x.inv().expect("nonzero argument")
}

/// Exact rational value of a scalar at a point.
pub type Rational = num_rational::BigRational;

/// Evaluate at a rational point; `None` when the denominator vanishes there.
pub fn eval_rational(x: &crate::Scalar, value: &impl Fn(Var) -> Rational) -> Option<Rational> {
    x.eval(value)
}
