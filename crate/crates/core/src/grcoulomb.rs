//! The associated graded Coulomb branch: elements `sum f_l r_l` over dominant
//! coweights, with the twisted product `f r_l * g r_m = A(l,m) f shift(g,l) r_{l+m}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::GradedError;
use crate::linalg::{self, Matrix};
use crate::scalars::{int, invariant_under_inversion, q_pow, render_ratfunc, shift, t_pow, x_pow, Atom};
use crate::skeinrep::SurfaceParams;
use crate::Scalar;

/// Dominant coweight `(l_1, ..., l_{n-1})`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Coweight(Vec<i64>);

impl Coweight {
    pub fn new(entries: Vec<i64>) -> Result<Self, GradedError> {
        if entries.iter().any(|&e| e < 0) {
            return Err(GradedError::NotDominant(format!("{entries:?}")));
        }
        Ok(Coweight(entries))
    }

    pub fn zero(n: usize) -> Self {
        Coweight(vec![0; n - 1])
    }

    /// `alpha_{i,j} = alpha_i + ... + alpha_j`.
    pub fn alpha(n: usize, i: usize, j: usize) -> Self {
        let mut v = vec![0; n - 1];
        for e in &mut v[i - 1..j] {
            *e = 1;
        }
        Coweight(v)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    /// Entry `l_k`, with `k` counted from 1.
    pub fn get(&self, k: usize) -> i64 {
        self.0[k - 1]
    }

    pub fn support(&self) -> Vec<usize> {
        (1..=self.0.len()).filter(|&k| self.get(k) != 0).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        Coweight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> Self {
        Coweight(self.0.iter().map(|a| a * k).collect())
    }
}

impl fmt::Display for Coweight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "r[{}]", parts.join(","))
    }
}

/// A torus weight `eps` over `omega_1..omega_{n-1}` with flavor weight `zeta`
/// over `eta_0..eta_{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDatum {
    pub eps: Vec<i64>,
    pub zeta: Vec<i64>,
}

impl WeightDatum {
    fn pair(&self, l: &Coweight) -> i64 {
        self.eps.iter().zip(l.entries()).map(|(a, b)| a * b).sum()
    }

    /// `e^{-eps-zeta}` as an `X`/`t` monomial.
    fn neg_character(&self) -> Scalar {
        let mut acc = int(1);
        for (i, &e) in self.eps.iter().enumerate() {
            if e != 0 {
                acc = &acc * &x_pow(i + 1, -e as i32);
            }
        }
        for (j, &e) in self.zeta.iter().enumerate() {
            if e != 0 {
                acc = &acc * &t_pow(j, -e as i32);
            }
        }
        acc
    }
}

/// All weights of the matter representation.
pub fn weight_list(n: usize) -> Vec<WeightDatum> {
    let omega = |i: usize, s: i64| {
        let mut v = vec![0; n - 1];
        v[i - 1] = s;
        v
    };
    let eta = |pairs: &[(usize, i64)]| {
        let mut v = vec![0; n + 2];
        for &(j, s) in pairs {
            v[j] += s;
        }
        v
    };
    let mut out = Vec::new();
    for s in [1, -1] {
        for b in [1, -1] {
            out.push(WeightDatum { eps: omega(1, s), zeta: eta(&[(0, b), (1, 1)]) });
        }
    }
    for j in 1..n - 1 {
        for s in [1, -1] {
            for b in [1, -1] {
                let mut eps = omega(j, s);
                eps[j] = b;
                out.push(WeightDatum { eps, zeta: eta(&[(j + 1, 1)]) });
            }
        }
    }
    for s in [1, -1] {
        for b in [1, -1] {
            out.push(WeightDatum {
                eps: omega(n - 1, s),
                zeta: eta(&[(n + 1, b), (n, 1)]),
            });
        }
    }
    out
}

/// The product of the correction factors `A^i_{l,m}` over the weight list.
pub fn a_factor(l: &Coweight, m: &Coweight, n: usize) -> Scalar {
    let mut acc = int(1);
    for w in weight_list(n) {
        let (a, b) = (w.pair(l), w.pair(m));
        if a.signum() * b.signum() >= 0 {
            continue;
        }
        let d = a.abs().min(b.abs());
        let base = w.neg_character();
        for j in 1..=d {
            // q^{-2(a - j + 1/2)} or q^{-2(a + j - 1/2)}
            let e = if a > 0 { -2 * a + 2 * j - 1 } else { -2 * a - 2 * j + 1 };
            acc = &acc * &(&int(1) - &(&base * &q_pow(e as i32)));
        }
    }
    acc
}

/// `sum_l f_l r_l` with `f_l` Laurent in the `X_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedElement {
    n: usize,
    terms: BTreeMap<Coweight, Scalar>,
}

impl GradedElement {
    pub fn zero(n: usize) -> Self {
        GradedElement { n, terms: BTreeMap::new() }
    }

    /// `f r_l`, checked for Laurentness and `W_l`-invariance.
    pub fn term(n: usize, l: Coweight, f: Scalar) -> Result<Self, GradedError> {
        if l.entries().len() != n - 1 {
            return Err(GradedError::Length { got: l.entries().len(), expected: n - 1 });
        }
        let mut out = Self::zero(n);
        out.push(l, f);
        out.validate()?;
        Ok(out)
    }

    /// `r_l`.
    pub fn basis(n: usize, l: Coweight) -> Result<Self, GradedError> {
        Self::term(n, l, int(1))
    }

    pub fn scalar(n: usize, f: Scalar) -> Result<Self, GradedError> {
        Self::term(n, Coweight::zero(n), f)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Coweight, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, l: &Coweight) -> Scalar {
        self.terms.get(l).cloned().unwrap_or_else(|| int(0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, l: Coweight, f: Scalar) {
        if f.is_zero() {
            return;
        }
        let v = match self.terms.remove(&l) {
            Some(old) => &old + &f,
            None => f,
        };
        if !v.is_zero() {
            self.terms.insert(l, v);
        }
    }

    pub fn validate(&self) -> Result<(), GradedError> {
        for (l, f) in &self.terms {
            if f.den().vars().iter().any(|v| matches!(v.atom(), Atom::X(_))) {
                return Err(GradedError::NotLaurent(l.to_string()));
            }
            let fixed: Vec<usize> = (1..self.n).filter(|&j| l.get(j) == 0).collect();
            if !invariant_under_inversion(f, &fixed) {
                return Err(GradedError::NotInvariant(l.to_string()));
            }
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (l, f) in &other.terms {
            out.push(l.clone(), f.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&int(-1))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Multiply every coefficient by a scalar free of `X`.
    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = Self::zero(self.n);
        for (l, f) in &self.terms {
            out.push(l.clone(), c * f);
        }
        out
    }
}

impl fmt::Display for GradedElement {
    /// `coef * r[..] + ...`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(l, c)| {
                if c.is_one() {
                    l.to_string()
                } else {
                    format!("({}) * {l}", render_ratfunc(c))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// The product in the associated graded algebra.
pub fn gr_mul(a: &GradedElement, b: &GradedElement) -> GradedElement {
    let n = a.n;
    let mut out = GradedElement::zero(n);
    for (l, f) in &a.terms {
        for (m, g) in &b.terms {
            let c = &(&a_factor(l, m, n) * f) * &shift(g, l.entries());
            out.push(l.add(m), c);
        }
    }
    out
}

/// Multiply each `f_l` by `q^{+-l_k} X_k^{+-1}`.
pub fn twist(a: &GradedElement, k: usize, sign: i32) -> Result<GradedElement, GradedError> {
    let mut out = GradedElement::zero(a.n);
    for (l, f) in &a.terms {
        let lk = l.get(k);
        if lk == 0 {
            return Err(GradedError::ZeroTwist { k, coweight: l.to_string() });
        }
        let factor = &q_pow(sign * lk as i32) * &x_pow(k, sign);
        out.push(l.clone(), &factor * f);
    }
    Ok(out)
}

fn check_sigma_range(i: usize, j: usize, p: &SurfaceParams) -> Result<(), GradedError> {
    if i >= 1 && i <= j && j + 2 <= p.n() {
        Ok(())
    } else {
        Err(crate::error::AlgebraError::IndexOutOfRange {
            kind: "sigma",
            index: j as i64,
            n: p.n(),
        }
        .into())
    }
}

/// `-q^{i-j-1} t_i^{-1} t_{i+1}^{-3} ... t_j^{-3} t_{j+1}^{-1} X_i^{-2} ... X_j^{-2} r_{alpha_{i,j}}`.
pub fn sigma_closed_form(i: usize, j: usize, p: &SurfaceParams) -> Result<GradedElement, GradedError> {
    check_sigma_range(i, j, p)?;
    let mut c = -q_pow(i as i32 - j as i32 - 1);
    c = &(&c * &t_pow(i, -1)) * &t_pow(j + 1, -1);
    for k in i + 1..=j {
        c = &c * &t_pow(k, -3);
    }
    for k in i..=j {
        c = &c * &x_pow(k, -2);
    }
    GradedElement::term(p.n(), Coweight::alpha(p.n(), i, j), c)
}

/// The matrix with rows `(q, q^-1, d, 0), (q^-1, q, d, 0), (d, 0, q^-1, q), (d, 0, q, q^-1)`
/// and `d = -t_j - t_j^{-1}`.
pub fn coulomb_matrix(j: usize) -> Matrix {
    let (a, b) = (q_pow(1), q_pow(-1));
    let d = -(&t_pow(j, 1) + &t_pow(j, -1));
    let z = int(0);
    vec![
        vec![a.clone(), b.clone(), d.clone(), z.clone()],
        vec![b.clone(), a.clone(), d.clone(), z.clone()],
        vec![d.clone(), z.clone(), b.clone(), a.clone()],
        vec![d, z, a, b],
    ]
}

/// The four products `r' * r_j`, `r_j * r'`, `(X_{j-1} r') * (X_j^{-1} r_j)`,
/// `(X_j^{-1} r_j) * (X_{j-1} r')` with `r' = r_{alpha_{i,j-1}}`.
pub fn coulomb_products(i: usize, j: usize, n: usize) -> Result<[GradedElement; 4], GradedError> {
    let left = GradedElement::basis(n, Coweight::alpha(n, i, j - 1))?;
    let right = GradedElement::basis(n, Coweight::alpha(n, j, j))?;
    let xl = GradedElement::term(n, Coweight::alpha(n, i, j - 1), x_pow(j - 1, 1))?;
    let xr = GradedElement::term(n, Coweight::alpha(n, j, j), x_pow(j, -1))?;
    Ok([
        gr_mul(&left, &right),
        gr_mul(&right, &left),
        gr_mul(&xl, &xr),
        gr_mul(&xr, &xl),
    ])
}

/// The right-hand side `-t_j^{-1} P (X_{j-1}X_j^{-1}, X_{j-1}^{-1}X_j, 1, X_{j-1}^2 X_j^{-2}) r_{alpha_{i,j}}`.
pub fn coulomb_products_expected(i: usize, j: usize, n: usize) -> Result<[GradedElement; 4], GradedError> {
    let u = [
        &x_pow(j - 1, 1) * &x_pow(j, -1),
        &x_pow(j - 1, -1) * &x_pow(j, 1),
        int(1),
        &x_pow(j - 1, 2) * &x_pow(j, -2),
    ];
    let m = coulomb_matrix(j);
    let v = linalg::mat_vec(&m, &u);
    let pre = -t_pow(j, -1);
    let target = Coweight::alpha(n, i, j);
    let mk = |c: &Scalar| GradedElement::term(n, target.clone(), &pre * c);
    Ok([mk(&v[0])?, mk(&v[1])?, mk(&v[2])?, mk(&v[3])?])
}

/// The image of `sigma_{i,j+1}` by the matrix recursion.
pub fn solve_sigma(i: usize, j: usize, p: &SurfaceParams) -> Result<GradedElement, GradedError> {
    check_sigma_range(i, j, p)?;
    if i == j {
        return sigma_closed_form(i, i, p);
    }
    let prev = solve_sigma(i, j - 1, p)?;
    let rho = sigma_closed_form(j, j, p)?;
    let mu = twist(&prev, j - 1, 1)?;
    let nu = twist(&rho, j, -1)?;
    let v = [
        gr_mul(&prev, &rho),
        gr_mul(&rho, &prev),
        gr_mul(&mu, &nu),
        gr_mul(&nu, &mu),
    ];
    let inv = linalg::inverse(&coulomb_matrix(j)).ok_or(GradedError::Singular)?;
    let mut out = GradedElement::zero(p.n());
    for (c, vk) in inv[2].iter().zip(&v) {
        out = out.add(&vk.scale(c));
    }
    out.validate()?;
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DressedKind {
    Ef,
    Fe,
}

/// Symbol of `E[x^k]F[1]` (`X_i^k r_{alpha_i}`) or `F[x^k]E[1]` (`q^{-2k} X_i^{-k} r_{alpha_i}`).
pub fn gr_symbol_dressed(
    i: usize,
    k: i64,
    kind: DressedKind,
    p: &SurfaceParams,
) -> Result<GradedElement, GradedError> {
    p.check_internal("dressed", i)?;
    let n = p.n();
    let c = match kind {
        DressedKind::Ef => x_pow(i, k as i32),
        DressedKind::Fe => &q_pow(-2 * k as i32) * &x_pow(i, -k as i32),
    };
    GradedElement::term(n, Coweight::alpha(n, i, i), c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize) -> SurfaceParams {
        SurfaceParams::new(n).unwrap()
    }

    #[test]
    fn weight_list_size() {
        for n in 2..6 {
            assert_eq!(weight_list(n).len(), 4 * n);
        }
    }

    #[test]
    fn a_factor_display() {
        let n = 4;
        let (i, j) = (1, 3);
        let got = a_factor(&Coweight::alpha(n, i, j - 1), &Coweight::alpha(n, j, j), n);
        let u = &x_pow(j - 1, -1) * &x_pow(j, 1);
        let f1 = &int(1) - &(&(&q_pow(-1) * &t_pow(j, -1)) * &u);
        let f2 = &int(1) - &(&(&q_pow(1) * &t_pow(j, -1)) * &u.inv().unwrap());
        assert_eq!(got, &f1 * &f2);
    }

    #[test]
    fn a_factor_trivial_cases() {
        let l = Coweight::new(vec![1, 2, 0]).unwrap();
        assert!(a_factor(&l, &Coweight::zero(4), 4).is_one());
        assert!(a_factor(&l.scale(2), &l.scale(3), 4).is_one());
    }

    #[test]
    fn coulomb_products_match() {
        for n in 3..6 {
            for i in 1..n - 1 {
                for j in i + 1..n {
                    let got = coulomb_products(i, j, n).unwrap();
                    let want = coulomb_products_expected(i, j, n).unwrap();
                    assert_eq!(got, want, "i={i} j={j} n={n}");
                }
            }
        }
    }

    #[test]
    fn closed_form_examples() {
        let s = sigma_closed_form(1, 2, &p(4)).unwrap();
        let c = &(&(&(-q_pow(-2)) * &t_pow(1, -1)) * &t_pow(2, -3)) * &t_pow(3, -1);
        let c = &(&c * &x_pow(1, -2)) * &x_pow(2, -2);
        assert_eq!(s.coeff(&Coweight::alpha(4, 1, 2)), c);
        assert!(sigma_closed_form(1, 3, &p(4)).is_err());
    }

    #[test]
    fn recursion_matches_closed_form() {
        for n in 3..=5 {
            for i in 1..=n - 2 {
                for j in i..=n - 2 {
                    assert_eq!(solve_sigma(i, j, &p(n)).unwrap(), sigma_closed_form(i, j, &p(n)).unwrap());
                }
            }
        }
    }

    #[test]
    fn twist_round_trip_and_zero() {
        let s = sigma_closed_form(1, 1, &p(3)).unwrap();
        let back = twist(&twist(&s, 1, 1).unwrap(), 1, -1).unwrap();
        assert_eq!(back, s);
        assert!(matches!(twist(&s, 2, 1), Err(GradedError::ZeroTwist { .. })));
    }

    #[test]
    fn invariance_enforced() {
        let r = GradedElement::term(3, Coweight::zero(3), x_pow(1, 1));
        assert!(matches!(r, Err(GradedError::NotInvariant(_))));
        assert!(Coweight::new(vec![1, -1]).is_err());
    }

    #[test]
    fn dressed_symbols() {
        let p = p(3);
        let r = gr_symbol_dressed(1, 0, DressedKind::Ef, &p).unwrap();
        assert_eq!(r, GradedElement::basis(3, Coweight::alpha(3, 1, 1)).unwrap());
        let f = gr_symbol_dressed(1, 1, DressedKind::Fe, &p).unwrap();
        assert_eq!(f.coeff(&Coweight::alpha(3, 1, 1)), &q_pow(-2) * &x_pow(1, -1));
    }
}
