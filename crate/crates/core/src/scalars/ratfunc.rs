use std::collections::HashMap;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gcd::gcd;
use super::poly::{Coeff, Monomial, Poly};
use super::var::Var;
use crate::error::ScalarError;

/// Reduced fraction of Laurent polynomials.
///
/// The denominator is an honest polynomial with no monomial factor, positive
/// leading coefficient, and no common factor with the numerator. Structural
/// equality is therefore equality of rational functions.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc<C> {
    num: Poly<C>,
    den: Poly<C>,
}

impl<C: Coeff> Default for RatFunc<C> {
    fn default() -> Self {
        Self::zero()
    }
}

/// Split off the monomial content so the remainder is a polynomial.
fn split_monomial<C: Coeff>(p: &Poly<C>) -> (Monomial, Poly<C>) {
    let m = p.monomial_content();
    if m.is_one() {
        (m, p.clone())
    } else {
        let rest = p.mul_monomial(&m.inv());
        (m, rest)
    }
}

/// gcd of a Laurent numerator with a denominator polynomial.
fn num_den_gcd<C: Coeff>(num: &Poly<C>, den: &Poly<C>) -> Poly<C> {
    let (_, pn) = split_monomial(num);
    gcd(&pn, den)
}

/// Exact division of a Laurent polynomial by a monomial-free polynomial.
fn laurent_div<C: Coeff>(num: &Poly<C>, g: &Poly<C>) -> Poly<C> {
    if g.is_one() {
        return num.clone();
    }
    let (m, pn) = split_monomial(num);
    pn.exact_div(g)
        .expect("divisor divides numerator")
        .mul_monomial(&m)
}

impl<C: Coeff> RatFunc<C> {
    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(Poly::one())
    }

    pub fn from_i64(c: i64) -> Self {
        Self::from_poly(Poly::from_i64(c))
    }

    pub fn from_int(c: C) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn from_poly(p: Poly<C>) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    /// Atom `v` to the power `e` (half powers for square-root atoms).
    pub fn var(v: Var, e: i32) -> Self {
        Self::from_poly(Poly::var(v, e))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_poly(Poly::term(m, C::one()))
    }

    /// Build `num/den` in canonical form.
    pub fn new(num: Poly<C>, den: Poly<C>) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::make(num, den))
    }

    fn make(num: Poly<C>, den: Poly<C>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let dm = den.monomial_content();
        let (mut num, mut den) = if dm.is_one() {
            (num, den)
        } else {
            let inv = dm.inv();
            (num.mul_monomial(&inv), den.mul_monomial(&inv))
        };
        if let Some(c) = den.as_constant() {
            let g = num.int_content().gcd(&c);
            let mut r = RatFunc {
                num: num.div_int(&g),
                den: den.div_int(&g),
            };
            r.fix_sign();
            return r;
        }
        let g = num_den_gcd(&num, &den);
        if !g.is_one() {
            num = laurent_div(&num, &g);
            den = den.exact_div(&g).expect("gcd divides denominator");
        }
        let mut r = RatFunc { num, den };
        r.fix_sign();
        r
    }

    fn fix_sign(&mut self) {
        if self.den.leading_coeff().is_negative() {
            self.num = self.num.neg();
            self.den = self.den.neg();
        }
    }

    pub fn num(&self) -> &Poly<C> {
        &self.num
    }

    pub fn den(&self) -> &Poly<C> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the value is a Laurent polynomial with integer coefficients.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// True when the denominator is a constant.
    pub fn has_constant_den(&self) -> bool {
        self.den.is_constant()
    }

    /// Single term over a constant denominator.
    pub fn is_monomial(&self) -> bool {
        self.num.is_monomial() && self.den.is_constant()
    }

    pub fn vars(&self) -> Vec<Var> {
        let mut v = self.num.vars();
        v.extend(self.den.vars());
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn mentions(&self, pred: impl Fn(Var) -> bool) -> bool {
        self.vars().into_iter().any(pred)
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::make(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let k = k.unsigned_abs();
        if base.is_laurent() {
            return Ok(Self::from_poly(base.num.pow(k)));
        }
        // Powers of a reduced fraction stay reduced.
        let mut r = RatFunc {
            num: base.num.pow(k),
            den: base.den.pow(k),
        };
        r.fix_sign();
        Ok(r)
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        let on = if negate {
            other.num.neg()
        } else {
            other.num.clone()
        };
        if self.is_zero() {
            return RatFunc {
                num: on,
                den: other.den.clone(),
            };
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.add(&on));
        }
        if self.den == other.den {
            return Self::make(self.num.add(&on), self.den.clone());
        }
        let g = gcd(&self.den, &other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&on.mul(&self.den));
            if num.is_zero() {
                return Self::zero();
            }
            return RatFunc {
                num,
                den: self.den.mul(&other.den),
            };
        }
        let d1 = self.den.exact_div(&g).expect("gcd divides");
        let d2 = other.den.exact_div(&g).expect("gcd divides");
        let num = self.num.mul(&d2).add(&on.mul(&d1));
        if num.is_zero() {
            return Self::zero();
        }
        let den = self.den.mul(&d2);
        let h = num_den_gcd(&num, &g);
        let mut r = if h.is_one() {
            RatFunc { num, den }
        } else {
            RatFunc {
                num: laurent_div(&num, &h),
                den: den.exact_div(&h).expect("gcd divides"),
            }
        };
        r.fix_sign();
        r
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return Self::from_poly(self.num.mul(&other.num));
        }
        let g1 = if other.den.is_one() {
            Poly::one()
        } else {
            num_den_gcd(&self.num, &other.den)
        };
        let g2 = if self.den.is_one() {
            Poly::one()
        } else {
            num_den_gcd(&other.num, &self.den)
        };
        let n1 = laurent_div(&self.num, &g1);
        let n2 = laurent_div(&other.num, &g2);
        let d1 = if g2.is_one() {
            self.den.clone()
        } else {
            self.den.exact_div(&g2).expect("gcd divides")
        };
        let d2 = if g1.is_one() {
            other.den.clone()
        } else {
            other.den.exact_div(&g1).expect("gcd divides")
        };
        let mut r = RatFunc {
            num: n1.mul(&n2),
            den: d1.mul(&d2),
        };
        if r.den.is_constant() {
            return Self::make(r.num, r.den);
        }
        r.fix_sign();
        r
    }

    /// Apply an invertible monomial substitution (for example `X_j -> q^k X_j`).
    ///
    /// Such maps are ring automorphisms, so only the monomial factor and sign
    /// of the denominator need renormalizing.
    pub fn map_monomials_auto(&self, f: impl Fn(&Monomial) -> Monomial) -> Self {
        let num = self.num.map_monomials(&f);
        let den = self.den.map_monomials(&f);
        let dm = den.monomial_content();
        let inv = dm.inv();
        let mut r = RatFunc {
            num: num.mul_monomial(&inv),
            den: den.mul_monomial(&inv),
        };
        r.fix_sign();
        r
    }

    /// Rescale each atom by a power of `s = q^{1/2}`: `v -> s^{w(v)} v`.
    pub fn rescale(&self, weight: impl Fn(Var) -> i32) -> Self {
        self.map_monomials_auto(|m| {
            let k: i32 = m.pairs().iter().map(|&(v, e)| e * weight(v)).sum();
            if k == 0 {
                m.clone()
            } else {
                m.mul(&Monomial::var(Var::Q, k))
            }
        })
    }

    /// Replace atoms by arbitrary values; unmapped atoms stay put.
    pub fn substitute(
        &self,
        img: &impl Fn(Var) -> Option<RatFunc<C>>,
    ) -> Result<Self, ScalarError> {
        let mut cache: HashMap<Var, Option<RatFunc<C>>> = HashMap::new();
        for v in self.vars() {
            cache.insert(v, img(v));
        }
        if cache.values().all(|x| x.is_none()) {
            return Ok(self.clone());
        }
        let unit_monomial = |r: &RatFunc<C>| {
            r.den.is_one() && r.num.is_monomial() && r.num.leading_coeff().abs().is_one()
        };
        if cache.values().flatten().all(unit_monomial) {
            let mono: HashMap<Var, (Monomial, bool)> = cache
                .iter()
                .filter_map(|(v, r)| {
                    r.as_ref().map(|r| {
                        let (m, c) = r.num.leading().expect("nonzero").clone();
                        (*v, (m, c.is_negative()))
                    })
                })
                .collect();
            let map_poly = |p: &Poly<C>| {
                Poly::from_terms(p.terms().iter().map(|(m, c)| {
                    let mut out = Monomial::one();
                    let mut neg = false;
                    for &(v, e) in m.pairs() {
                        match mono.get(&v) {
                            Some((im, s)) => {
                                out = out.mul(&im.pow(e));
                                neg ^= *s && e % 2 != 0;
                            }
                            None => out = out.mul(&Monomial::var(v, e)),
                        }
                    }
                    (out, if neg { -c.clone() } else { c.clone() })
                }))
            };
            return Self::new(map_poly(&self.num), map_poly(&self.den));
        }
        let mut powers: HashMap<(Var, i32), RatFunc<C>> = HashMap::new();
        let mut eval_poly = |p: &Poly<C>| -> Result<RatFunc<C>, ScalarError> {
            let mut acc = RatFunc::zero();
            for (m, c) in p.terms() {
                let mut t = RatFunc::from_int(c.clone());
                let mut rest = Monomial::one();
                for &(v, e) in m.pairs() {
                    match &cache[&v] {
                        Some(r) => {
                            if !powers.contains_key(&(v, e)) {
                                powers.insert((v, e), r.pow(e)?);
                            }
                            t = &t * &powers[&(v, e)];
                        }
                        None => rest = rest.mul(&Monomial::var(v, e)),
                    }
                }
                t = &t * &RatFunc::monomial(rest);
                acc = &acc + &t;
            }
            Ok(acc)
        };
        let n = eval_poly(&self.num)?;
        let d = eval_poly(&self.den)?;
        n.checked_div(&d)
    }

    /// Evaluate in a field, given values for the atoms themselves.
    ///
    /// Returns `None` when the denominator vanishes at the point.
    pub fn eval<F>(&self, value: &impl Fn(Var) -> F) -> Option<F>
    where
        F: Clone
            + Zero
            + One
            + PartialEq
            + From<C>
            + Add<Output = F>
            + Mul<Output = F>
            + Div<Output = F>,
    {
        let pw = |v: Var, e: i32| {
            let x = value(v);
            let mut r = F::one();
            for _ in 0..e.unsigned_abs() {
                r = r * x.clone();
            }
            if e < 0 {
                F::one() / r
            } else {
                r
            }
        };
        let embed = |c: &C| F::from(c.clone());
        let d = self.den.eval_with(&pw, &embed);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval_with(&pw, &embed) / d)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl<'a, C: Coeff> $tr<&'a RatFunc<C>> for &'a RatFunc<C> {
            type Output = RatFunc<C>;
            fn $m(self, rhs: &'a RatFunc<C>) -> RatFunc<C> {
                $body(self, rhs)
            }
        }
        impl<C: Coeff> $tr<RatFunc<C>> for RatFunc<C> {
            type Output = RatFunc<C>;
            fn $m(self, rhs: RatFunc<C>) -> RatFunc<C> {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &RatFunc<C>, b: &RatFunc<C>| a
    .add_impl(b, false));
forward_binop!(Sub, sub, |a: &RatFunc<C>, b: &RatFunc<C>| a
    .add_impl(b, true));
forward_binop!(Mul, mul, |a: &RatFunc<C>, b: &RatFunc<C>| a.mul_impl(b));
forward_binop!(Div, div, |a: &RatFunc<C>, b: &RatFunc<C>| a
    .checked_div(b)
    .expect("division by zero"));

impl<C: Coeff> Neg for &RatFunc<C> {
    type Output = RatFunc<C>;
    fn neg(self) -> RatFunc<C> {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl<C: Coeff> Neg for RatFunc<C> {
    type Output = RatFunc<C>;
    fn neg(self) -> RatFunc<C> {
        -&self
    }
}

impl<C: Coeff> Zero for RatFunc<C> {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<C: Coeff> One for RatFunc<C> {
    fn one() -> Self {
        RatFunc::one()
    }
}
