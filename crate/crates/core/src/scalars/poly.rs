use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive, Zero};
use smallvec::SmallVec;

use super::var::Var;

/// Integer-like coefficient ring for [`Poly`].
pub trait Coeff:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + Hash
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> Coeff for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

/// Laurent monomial: sorted `(var, exponent)` pairs with nonzero exponents.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Monomial(SmallVec<[(Var, i32); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(v: Var, e: i32) -> Self {
        let mut m = Monomial::one();
        if e != 0 {
            m.0.push((v, e));
        }
        m
    }

    pub fn from_pairs<I: IntoIterator<Item = (Var, i32)>>(pairs: I) -> Self {
        let mut acc: SmallVec<[(Var, i32); 4]> = SmallVec::new();
        for (v, e) in pairs {
            match acc.binary_search_by(|p| p.0.cmp(&v)) {
                Ok(i) => acc[i].1 += e,
                Err(i) => acc.insert(i, (v, e)),
            }
        }
        acc.retain(|p| p.1 != 0);
        Monomial(acc)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn pairs(&self) -> &[(Var, i32)] {
        &self.0
    }

    pub fn exp(&self, v: Var) -> i32 {
        match self.0.binary_search_by(|p| p.0.cmp(&v)) {
            Ok(i) => self.0[i].1,
            Err(_) => 0,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.combine(other, 1)
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        self.combine(other, -1)
    }

    pub fn inv(&self) -> Monomial {
        Monomial(self.0.iter().map(|&(v, e)| (v, -e)).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|&(v, e)| (v, e * k)).collect())
    }

    fn combine(&self, other: &Monomial, sign: i32) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push((b[j].0, sign * b[j].1));
                j += 1;
            } else {
                let e = a[i].1 + sign * b[j].1;
                if e != 0 {
                    out.push((a[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
        Monomial(out)
    }

    /// Exponent-wise minimum, treating absent variables as exponent zero.
    pub fn gcd_min(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::new();
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                if a[i].1 < 0 {
                    out.push(a[i]);
                }
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                if b[j].1 < 0 {
                    out.push(b[j]);
                }
                j += 1;
            } else {
                let e = a[i].1.min(b[j].1);
                if e != 0 {
                    out.push((a[i].0, e));
                }
                i += 1;
                j += 1;
            }
        }
        Monomial(out)
    }

    /// True when every exponent of `self` is at least the matching one in `other`.
    pub fn divisible_by(&self, other: &Monomial) -> bool {
        self.div(other).0.iter().all(|p| p.1 >= 0)
    }

    pub fn is_nonneg(&self) -> bool {
        self.0.iter().all(|p| p.1 >= 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|p| p.1 as i64).sum()
    }

    /// Restrict to (or drop) a set of variables.
    pub fn split(&self, keep: impl Fn(Var) -> bool) -> (Monomial, Monomial) {
        let mut a = SmallVec::new();
        let mut b = SmallVec::new();
        for &p in &self.0 {
            if keep(p.0) {
                a.push(p);
            } else {
                b.push(p);
            }
        }
        (Monomial(a), Monomial(b))
    }

    pub fn map_vars(&self, f: impl Fn(Var, i32) -> (Var, i32)) -> Monomial {
        Monomial::from_pairs(self.0.iter().map(|&(v, e)| f(v, e)))
    }
}

impl Ord for Monomial {
    /// Lexicographic order on exponents, smallest variable most significant.
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(x), None) => return x.1.cmp(&0),
                (None, Some(y)) => return 0.cmp(&y.1),
                (Some(x), Some(y)) => {
                    if x.0 < y.0 {
                        return x.1.cmp(&0);
                    } else if y.0 < x.0 {
                        return 0.cmp(&y.1);
                    } else if x.1 != y.1 {
                        return x.1.cmp(&y.1);
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate Laurent polynomial with terms in descending monomial order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<C> {
    terms: Vec<(Monomial, C)>,
}

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn from_i64(c: i64) -> Self {
        Self::constant(C::from_i64(c).expect("coefficient out of range"))
    }

    pub fn term(m: Monomial, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn var(v: Var, e: i32) -> Self {
        Self::term(Monomial::var(v, e), C::one())
    }

    /// Build from arbitrary terms, merging duplicates.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, C)>>(terms: I) -> Self {
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(x) => *x = x.clone() + c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, C>) -> Self {
        let mut terms: Vec<(Monomial, C)> = acc.into_iter().filter(|t| !t.1.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    pub fn terms(&self) -> &[(Monomial, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, C)> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 if self.terms[0].0.is_one() => Some(self.terms[0].1.clone()),
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<&(Monomial, C)> {
        self.terms.first()
    }

    pub fn leading_coeff(&self) -> C {
        self.terms
            .first()
            .map(|t| t.1.clone())
            .unwrap_or_else(C::zero)
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let nb = |c: &C| if negate { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), nb(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].1.clone() + nb(&b[j].1);
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| (t.0.clone(), nb(&t.1))));
        Poly { terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = ca.clone() * cb.clone();
                match acc.get_mut(&m) {
                    Some(x) => *x = x.clone() + c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    /// Multiply by a single term; order is preserved since monomial order is multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(mm, cc)| (mm.mul(m), cc.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        self.mul_term(m, &C::one())
    }

    pub fn scale(&self, c: &C) -> Self {
        self.mul_term(&Monomial::one(), c)
    }

    /// Exact division by an integer known to divide every coefficient.
    pub fn div_int(&self, c: &C) -> Self {
        if c.is_one() {
            return self.clone();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, cc)| (m.clone(), cc.div_floor(c)))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Nonnegative gcd of the coefficients.
    pub fn int_content(&self) -> C {
        let mut g = C::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Largest monomial dividing every term (exponents may be negative).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some(first) = it.next() else {
            return Monomial::one();
        };
        let mut m = first.0.clone();
        for (mm, _) in it {
            m = m.gcd_min(mm);
        }
        m
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.iter().all(|t| t.0.is_nonneg())
    }

    /// Sorted list of variables that occur.
    pub fn vars(&self) -> Vec<Var> {
        let mut vs: Vec<Var> = self
            .terms
            .iter()
            .flat_map(|t| t.0.pairs().iter().map(|p| p.0))
            .collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }

    pub fn degree_in(&self, v: Var) -> i32 {
        self.terms.iter().map(|t| t.0.exp(v)).max().unwrap_or(0)
    }

    pub fn min_degree_in(&self, v: Var) -> i32 {
        self.terms.iter().map(|t| t.0.exp(v)).min().unwrap_or(0)
    }

    /// Apply a monomial map to every term and restore canonical order.
    pub fn map_monomials(&self, f: impl Fn(&Monomial) -> Monomial) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(m), c.clone())))
    }

    /// Make the leading coefficient positive; returns whether a sign flip happened.
    pub fn normalize_sign(&mut self) -> bool {
        if self.leading_coeff().is_negative() {
            for t in &mut self.terms {
                t.1 = -t.1.clone();
            }
            true
        } else {
            false
        }
    }

    /// Exact quotient `self / b` when it exists in the polynomial ring; `None` otherwise.
    ///
    /// Both operands must have nonnegative exponents.
    pub fn exact_div(&self, b: &Self) -> Option<Self> {
        if b.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if b.is_one() {
            return Some(self.clone());
        }
        if let Some(c) = b.as_constant() {
            if self.terms.iter().all(|t| t.1.is_multiple_of(&c)) {
                return Some(Poly {
                    terms: self
                        .terms
                        .iter()
                        .map(|(m, cc)| (m.clone(), cc.div_floor(&c)))
                        .collect(),
                });
            }
            return None;
        }
        if b.terms.len() > self.terms.len() && self.terms.len() == 1 {
            return None;
        }
        for v in b.vars() {
            if b.degree_in(v) > self.degree_in(v) {
                return None;
            }
        }
        let (lm, lc) = b.terms[0].clone();
        let mut q = Vec::new();
        let mut r = self.clone();
        while let Some((m, c)) = r.terms.first().cloned() {
            let qm = m.div(&lm);
            if !qm.is_nonneg() {
                return None;
            }
            let (qc, rem) = c.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            r = r.sub(&b.mul_term(&qm, &qc));
            q.push((qm, qc));
        }
        Some(Poly { terms: q })
    }

    /// Coefficients in `v` indexed by degree; requires nonnegative exponents in `v`.
    pub fn to_univariate(&self, v: Var) -> Vec<Self> {
        let deg = self.degree_in(v).max(0) as usize;
        let mut buckets: Vec<Vec<(Monomial, C)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            let e = m.exp(v);
            let rest = m.div(&Monomial::var(v, e));
            buckets[e as usize].push((rest, c.clone()));
        }
        buckets
            .into_iter()
            .map(|mut ts| {
                ts.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                Poly { terms: ts }
            })
            .collect()
    }

    pub fn from_univariate(v: Var, coeffs: &[Self]) -> Self {
        let mut out = Self::zero();
        for (d, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&c.mul_monomial(&Monomial::var(v, d as i32)));
            }
        }
        out
    }

    /// Group terms by their restriction to the variables selected by `keep`.
    pub fn coefficients_in(&self, keep: impl Fn(Var) -> bool) -> Vec<Self> {
        let mut groups: HashMap<Monomial, Vec<(Monomial, C)>> = HashMap::new();
        for (m, c) in &self.terms {
            let (k, rest) = m.split(&keep);
            groups.entry(k).or_default().push((rest, c.clone()));
        }
        let mut out: Vec<(Monomial, Self)> = groups
            .into_iter()
            .map(|(k, mut ts)| {
                ts.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                (k, Poly { terms: ts })
            })
            .collect();
        out.sort_unstable_by(|a, b| a.1.len().cmp(&b.1.len()).then_with(|| b.0.cmp(&a.0)));
        out.into_iter().map(|p| p.1).collect()
    }

    /// Evaluate with values supplied per variable, in any ring with integer embedding.
    pub fn eval_with<F>(&self, value: &impl Fn(Var, i32) -> F, embed: &impl Fn(&C) -> F) -> F
    where
        F: Clone + std::ops::Add<Output = F> + std::ops::Mul<Output = F> + Zero,
    {
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = embed(c);
            for &(v, e) in m.pairs() {
                t = t * value(v, e);
            }
            acc = acc + t;
        }
        acc
    }
}
