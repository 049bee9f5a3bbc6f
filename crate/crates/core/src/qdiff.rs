//! Normal-ordered q-difference operator algebras.
//!
//! An element is a finite sum `sum_k c_k * g^k` with coordinate coefficients
//! on the left and shift monomials on the right. Moving a shift past an atom
//! rescales the atom by a power of `s = q^{1/2}`, read off a pairing table.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::error::AlgebraError;
use crate::scalars::{int, render_ratfunc, Pm, Var};
use crate::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlgebraKind {
    /// Coordinates `X_i`, shifts `W_i`, central `t_j`.
    XTorus,
    /// Coordinates `Q_i`, shifts `E_i`, central `C_l`.
    ZTrace,
    /// Coordinates `w_{i,+-}`, shifts `D_{i,+-}`, central `z`'s.
    Dz,
}

#[derive(Clone, Debug)]
pub struct ShiftGen {
    pub name: String,
    /// `(atom, k)`: moving this shift right past one unit of `atom` picks up `s^k`.
    pub pairing: Vec<(Var, i32)>,
}

#[derive(Debug)]
pub struct AlgebraSpec {
    pub kind: AlgebraKind,
    pub n: usize,
    pub coordinates: Vec<Var>,
    pub central: Vec<Var>,
    pub shifts: Vec<ShiftGen>,
    weights: HashMap<Var, Vec<(usize, i32)>>,
}

impl AlgebraSpec {
    pub fn new(
        kind: AlgebraKind,
        n: usize,
        coordinates: Vec<Var>,
        central: Vec<Var>,
        shifts: Vec<ShiftGen>,
    ) -> Self {
        let mut weights: HashMap<Var, Vec<(usize, i32)>> = HashMap::new();
        for (j, g) in shifts.iter().enumerate() {
            for &(v, k) in &g.pairing {
                weights.entry(v).or_default().push((j, k));
            }
        }
        AlgebraSpec {
            kind,
            n,
            coordinates,
            central,
            shifts,
            weights,
        }
    }

    /// Quantum torus with coordinates `X_1..X_{n-1}` and shifts `W_i`.
    pub fn xtorus(n: usize) -> Arc<Self> {
        let coords = (1..n).map(Var::x).collect();
        let central = (0..=n + 1).map(Var::t).collect();
        let shifts = (1..n)
            .map(|i| ShiftGen {
                name: format!("W{i}"),
                pairing: vec![(Var::x(i), 1)],
            })
            .collect();
        Arc::new(Self::new(AlgebraKind::XTorus, n, coords, central, shifts))
    }

    /// Quantum torus with coordinates `Q_1..Q_{n-1}` and shifts `E_i`.
    pub fn ztrace(n: usize) -> Arc<Self> {
        let coords = (1..n).map(Var::qc).collect();
        let central = (0..=n + 1).map(Var::c).collect();
        let shifts = (1..n)
            .map(|i| ShiftGen {
                name: format!("E{i}"),
                pairing: vec![(Var::qc(i), 1)],
            })
            .collect();
        Arc::new(Self::new(AlgebraKind::ZTrace, n, coords, central, shifts))
    }

    /// Difference operators with coordinates `w_{i,+-}` and shifts `D_{i,+-}`.
    pub fn dz(n: usize) -> Arc<Self> {
        let mut coords = Vec::new();
        let mut shifts = Vec::new();
        for i in 1..n {
            for pm in Pm::both() {
                coords.push(Var::w(i, pm));
                shifts.push(ShiftGen {
                    name: dz_shift_name(i, pm),
                    pairing: vec![(Var::w(i, pm), 4)],
                });
            }
        }
        let mut central: Vec<Var> = (1..=n).map(Var::z).collect();
        for k in [0, n + 1] {
            for pm in Pm::both() {
                central.push(Var::zb(k, pm));
            }
        }
        Arc::new(Self::new(AlgebraKind::Dz, n, coords, central, shifts))
    }

    pub fn name(&self) -> String {
        let k = match self.kind {
            AlgebraKind::XTorus => "xtorus",
            AlgebraKind::ZTrace => "ztrace",
            AlgebraKind::Dz => "dz",
        };
        format!("{k}(n={})", self.n)
    }

    pub fn num_shifts(&self) -> usize {
        self.shifts.len()
    }

    pub fn shift_index(&self, name: &str) -> Option<usize> {
        self.shifts.iter().position(|g| g.name == name)
    }

    /// Twice the exponent `pi` in `g * x = q^pi * x * g` for a named coordinate `x`.
    pub fn pairing_doubled(&self, shift: usize, coord: Var) -> i32 {
        let per_atom = self.shifts[shift]
            .pairing
            .iter()
            .find(|p| p.0 == coord)
            .map(|p| p.1)
            .unwrap_or(0);
        if coord.is_half() {
            2 * per_atom
        } else {
            per_atom
        }
    }

    fn is_generator_atom(&self, v: Var) -> bool {
        self.coordinates.contains(&v) || self.central.contains(&v)
    }

    fn same(&self, other: &AlgebraSpec) -> bool {
        self.kind == other.kind && self.n == other.n
    }

    /// `s`-weight acquired by atom `v` when shifted by `g^k`.
    fn weight(&self, k: &[i32], v: Var) -> i32 {
        self.weights
            .get(&v)
            .map(|ws| ws.iter().map(|&(j, w)| k[j] * w).sum())
            .unwrap_or(0)
    }
}

pub fn dz_shift_name(i: usize, pm: Pm) -> String {
    match pm {
        Pm::Plus => format!("D{i}p"),
        Pm::Minus => format!("D{i}m"),
    }
}

/// Index of `D_{i,pm}` among the shifts of [`AlgebraSpec::dz`].
pub fn dz_shift_index(i: usize, pm: Pm) -> usize {
    2 * (i - 1) + if pm == Pm::Plus { 0 } else { 1 }
}

pub type ShiftKey = Vec<i32>;

/// Normal-ordered operator.
#[derive(Clone, Debug)]
pub struct OpElement {
    spec: Arc<AlgebraSpec>,
    terms: BTreeMap<ShiftKey, Scalar>,
}

impl PartialEq for OpElement {
    fn eq(&self, other: &Self) -> bool {
        self.spec.same(&other.spec) && self.terms == other.terms
    }
}

impl Eq for OpElement {}

/// A generator of a source algebra, for anti-map tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Coord(Var),
    Shift(usize),
}

impl OpElement {
    pub fn zero(spec: &Arc<AlgebraSpec>) -> Self {
        OpElement {
            spec: spec.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(spec: &Arc<AlgebraSpec>, c: Scalar) -> Self {
        Self::term(spec, vec![0; spec.num_shifts()], c)
    }

    pub fn one(spec: &Arc<AlgebraSpec>) -> Self {
        Self::scalar(spec, int(1))
    }

    /// `c * g^k`.
    pub fn term(spec: &Arc<AlgebraSpec>, k: ShiftKey, c: Scalar) -> Self {
        assert_eq!(k.len(), spec.num_shifts(), "shift key length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        OpElement {
            spec: spec.clone(),
            terms,
        }
    }

    /// A single shift generator to the power `e`.
    pub fn shift(spec: &Arc<AlgebraSpec>, j: usize, e: i32) -> Self {
        let mut k = vec![0; spec.num_shifts()];
        k[j] = e;
        Self::term(spec, k, int(1))
    }

    pub fn spec(&self) -> &Arc<AlgebraSpec> {
        &self.spec
    }

    pub fn terms(&self) -> &BTreeMap<ShiftKey, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &[i32]) -> Scalar {
        self.terms.get(k).cloned().unwrap_or_else(|| int(0))
    }

    /// The coefficient when no shift occurs; `None` otherwise.
    pub fn as_coefficient(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(int(0)),
            1 => {
                let (k, c) = self.terms.iter().next().unwrap();
                k.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Terms whose shift exponent is nonzero.
    pub fn shift_part(&self) -> OpElement {
        OpElement {
            spec: self.spec.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.iter().any(|&e| e != 0))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    fn check_same(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.spec.same(&other.spec) {
            Ok(())
        } else {
            Err(AlgebraError::MixedAlgebras(
                self.spec.name(),
                other.spec.name(),
            ))
        }
    }

    fn add_term(&mut self, k: ShiftKey, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let v = match self.terms.remove(&k) {
            Some(old) => &old + &c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(k, v);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    /// Multiply every coefficient on the left by `c`.
    pub fn scale(&self, c: &Scalar) -> Self {
        self.map_coeffs(|x| c * x)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        OpElement {
            spec: self.spec.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), f(c)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// `g^k * c = (c rescaled) * g^k`.
    pub fn transport(&self, k: &[i32], c: &Scalar) -> Scalar {
        if k.iter().all(|&e| e == 0) {
            return c.clone();
        }
        c.rescale(|v| self.spec.weight(k, v))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same(other)?;
        let mut out = OpElement::zero(&self.spec);
        for (k, ck) in &self.terms {
            for (l, cl) in &other.terms {
                let moved = self.transport(k, cl);
                let key: ShiftKey = k.iter().zip(l).map(|(a, b)| a + b).collect();
                out.add_term(key, ck * &moved);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = OpElement::one(&self.spec);
        for _ in 0..e {
            acc = acc.mul(self).expect("same algebra");
        }
        acc
    }

    /// Inverse of `c * g^k` with `c` a unit monomial.
    pub fn inverse_monomial(&self) -> Result<Self, AlgebraError> {
        if self.terms.len() != 1 {
            return Err(AlgebraError::NotInvertible);
        }
        let (k, c) = self.terms.iter().next().unwrap();
        if !c.is_monomial() {
            return Err(AlgebraError::NotInvertible);
        }
        // (c g^k)^{-1} = g^{-k} c^{-1} = transport(-k, c^{-1}) g^{-k}
        let neg: ShiftKey = k.iter().map(|e| -e).collect();
        let ci = c.inv()?;
        let moved = self.transport(&neg, &ci);
        Ok(OpElement::term(&self.spec, neg, moved))
    }

    /// Integer powers, negative ones only for invertible monomials.
    pub fn powi(&self, e: i32) -> Result<Self, AlgebraError> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            Ok(self.inverse_monomial()?.pow(e.unsigned_abs()))
        }
    }

    /// Substitute coordinate atoms in every coefficient; shifts are untouched.
    pub fn substitute(&self, table: &HashMap<Var, Scalar>) -> Result<Self, AlgebraError> {
        let mut out = OpElement::zero(&self.spec);
        for (k, c) in &self.terms {
            let img = c.substitute(&|v| table.get(&v).cloned())?;
            out.add_term(k.clone(), img);
        }
        Ok(out)
    }

    /// Image under the anti-homomorphism determined by generator images and
    /// a map on scalar atoms; unmapped scalar atoms are fixed.
    pub fn apply_antimap(
        &self,
        target: &Arc<AlgebraSpec>,
        images: &HashMap<Generator, OpElement>,
        scalar_map: &impl Fn(Var) -> Option<Scalar>,
    ) -> Result<OpElement, AlgebraError> {
        let mut coord_img: HashMap<Var, Scalar> = HashMap::new();
        for (g, img) in images {
            if let Generator::Coord(v) = g {
                let c = img.as_coefficient().ok_or_else(|| {
                    AlgebraError::Unsupported(format!("image of {v} must be shift free"))
                })?;
                coord_img.insert(*v, c);
            }
        }
        let mut out = OpElement::zero(target);
        for (k, c) in &self.terms {
            for v in c.vars() {
                if self.spec.is_generator_atom(v) && !coord_img.contains_key(&v) {
                    return Err(AlgebraError::MissingImage(v.name()));
                }
            }
            let mapped = c.substitute(&|v| coord_img.get(&v).cloned().or_else(|| scalar_map(v)))?;
            let mut shifts = OpElement::one(target);
            for (j, &e) in k.iter().enumerate().rev() {
                if e == 0 {
                    continue;
                }
                let g = images
                    .get(&Generator::Shift(j))
                    .ok_or_else(|| AlgebraError::MissingImage(self.spec.shifts[j].name.clone()))?;
                shifts = shifts.mul(&g.powi(e)?)?;
            }
            let term = shifts.mul(&OpElement::scalar(target, mapped))?;
            out = out.add(&term)?;
        }
        Ok(out)
    }
}

fn render_key(spec: &AlgebraSpec, k: &[i32]) -> String {
    let mut parts = Vec::new();
    for (j, &e) in k.iter().enumerate() {
        if e == 0 {
            continue;
        }
        let name = &spec.shifts[j].name;
        if e == 1 {
            parts.push(name.clone());
        } else {
            parts.push(format!("{name}^{e}"));
        }
    }
    parts.join(" * ")
}

impl fmt::Display for OpElement {
    /// `coef * W1^2 * W2^-1 + ...`, shift-free term first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut keys: Vec<&ShiftKey> = self.terms.keys().collect();
        keys.sort_by_key(|k| (k.iter().any(|&e| e != 0), (*k).clone()));
        let single = keys.len() == 1;
        let mut parts = Vec::new();
        for k in keys {
            let c = &self.terms[k];
            let shift = render_key(&self.spec, k);
            let coef = render_ratfunc(c);
            let part = if shift.is_empty() {
                if single {
                    coef
                } else {
                    format!("({coef})")
                }
            } else if c.is_one() {
                shift
            } else {
                format!("({coef}) * {shift}")
            };
            parts.push(part);
        }
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{q_pow, s_pow, x_pow};

    #[test]
    fn shift_past_coordinate() {
        let a = AlgebraSpec::xtorus(3);
        let w = OpElement::shift(&a, 0, 1);
        let x = OpElement::scalar(&a, x_pow(1, 1));
        let lhs = w.mul(&x).unwrap();
        let rhs = OpElement::term(&a, vec![1, 0], &q_pow(1) * &x_pow(1, 1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tau_is_a_square() {
        let a = AlgebraSpec::xtorus(2);
        let g = OpElement::term(&a, vec![1], &s_pow(-1) * &x_pow(1, -1));
        let tau = OpElement::term(&a, vec![2], &q_pow(-2) * &x_pow(1, -2));
        assert_eq!(g.pow(2), tau);
    }

    #[test]
    fn pairing_tables() {
        let x = AlgebraSpec::xtorus(3);
        assert_eq!(x.pairing_doubled(0, Var::x(1)), 2);
        assert_eq!(x.pairing_doubled(0, Var::x(2)), 0);
        let z = AlgebraSpec::ztrace(3);
        assert_eq!(z.pairing_doubled(1, Var::qc(2)), 1);
        let d = AlgebraSpec::dz(3);
        assert_eq!(
            d.pairing_doubled(dz_shift_index(2, Pm::Minus), Var::w(2, Pm::Minus)),
            4
        );
        assert_eq!(
            d.pairing_doubled(dz_shift_index(2, Pm::Minus), Var::w(2, Pm::Plus)),
            0
        );
    }

    #[test]
    fn mixed_algebras_rejected() {
        let a = OpElement::one(&AlgebraSpec::xtorus(3));
        let b = OpElement::one(&AlgebraSpec::ztrace(3));
        assert!(matches!(a.mul(&b), Err(AlgebraError::MixedAlgebras(..))));
    }

    #[test]
    fn monomial_inverse() {
        let a = AlgebraSpec::xtorus(2);
        let g = OpElement::term(&a, vec![1], &s_pow(-1) * &x_pow(1, -1));
        let gi = g.inverse_monomial().unwrap();
        assert_eq!(g.mul(&gi).unwrap(), OpElement::one(&a));
        assert_eq!(gi.mul(&g).unwrap(), OpElement::one(&a));
    }

    #[test]
    fn rendering() {
        let a = AlgebraSpec::xtorus(3);
        let e = OpElement::term(&a, vec![2, -1], x_pow(1, 1));
        assert_eq!(e.to_string(), "(X1) * W1^2 * W2^-1");
    }
}
