//! Temperley-Lieb diagrams, Jones-Wenzl projectors and fusion coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{FusionError, ScalarError};
use crate::scalars::{a_pow, int, qint, s_pow, RatFunc, Var};
use crate::Scalar;

/// Value of a closed loop, `-A^2 - A^{-2}`.
pub fn loop_value() -> Scalar {
    -(&a_pow(2) + &a_pow(-2))
}

/// Planar matching on `c` bottom points `0..c` and `c` top points `c..2c`,
/// both read left to right.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct TLDiagram {
    strands: usize,
    partner: Vec<usize>,
}

impl TLDiagram {
    pub fn new(strands: usize, partner: Vec<usize>) -> Result<Self, FusionError> {
        if partner.len() != 2 * strands {
            return Err(FusionError::NotPlanar);
        }
        for (i, &p) in partner.iter().enumerate() {
            if p >= partner.len() || p == i || partner[p] != i {
                return Err(FusionError::NotPlanar);
            }
        }
        let d = TLDiagram { strands, partner };
        if !d.is_planar() {
            return Err(FusionError::NotPlanar);
        }
        Ok(d)
    }

    pub fn identity(strands: usize) -> Self {
        let mut partner = vec![0; 2 * strands];
        for i in 0..strands {
            partner[i] = strands + i;
            partner[strands + i] = i;
        }
        TLDiagram { strands, partner }
    }

    /// Cup-cap generator `e_j`, joining points `j-1` and `j` on each side (`1 <= j < c`).
    pub fn cup_cap(strands: usize, j: usize) -> Self {
        assert!(j >= 1 && j < strands, "cup-cap index out of range");
        let mut d = Self::identity(strands);
        let (a, b) = (j - 1, j);
        d.partner[a] = b;
        d.partner[b] = a;
        d.partner[strands + a] = strands + b;
        d.partner[strands + b] = strands + a;
        d
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn partner(&self) -> &[usize] {
        &self.partner
    }

    fn circle_pos(&self, i: usize) -> usize {
        let c = self.strands;
        if i < c {
            i
        } else {
            3 * c - 1 - i
        }
    }

    fn is_planar(&self) -> bool {
        let n = self.partner.len();
        let mut at = vec![0; n];
        for i in 0..n {
            at[self.circle_pos(i)] = i;
        }
        let mut stack: Vec<usize> = Vec::new();
        for &pt in &at {
            let mate = self.partner[pt];
            if self.circle_pos(mate) < self.circle_pos(pt) {
                if stack.pop() != Some(mate) {
                    return false;
                }
            } else {
                stack.push(pt);
            }
        }
        stack.is_empty()
    }

    /// Add one vertical strand on the right.
    pub fn with_strand(&self) -> Self {
        let c = self.strands;
        let m = |i: usize| if i < c { i } else { i + 1 };
        let mut partner = vec![0; 2 * c + 2];
        for (i, &p) in self.partner.iter().enumerate() {
            partner[m(i)] = m(p);
        }
        partner[c] = 2 * c + 1;
        partner[2 * c + 1] = c;
        TLDiagram {
            strands: c + 1,
            partner,
        }
    }

    /// Stack `self` on top of `below`; returns the diagram and the number of closed loops.
    pub fn compose(&self, below: &TLDiagram) -> (TLDiagram, usize) {
        let c = self.strands;
        let (x, y) = (&self.partner, &below.partner);
        let mut partner = vec![usize::MAX; 2 * c];
        let mut seen = vec![false; c];
        // Walk from an endpoint; `in_lower` tells which diagram we are in.
        let walk = |start: usize, mut in_lower: bool, seen: &mut Vec<bool>| -> usize {
            let mut p = start;
            loop {
                if in_lower {
                    let q = y[p];
                    if q < c {
                        return q;
                    }
                    seen[q - c] = true;
                    p = q - c;
                    in_lower = false;
                } else {
                    let q = x[p];
                    if q >= c {
                        return q;
                    }
                    seen[q] = true;
                    p = q + c;
                    in_lower = true;
                }
            }
        };
        for b in 0..c {
            if partner[b] == usize::MAX {
                let end = walk(b, true, &mut seen);
                partner[b] = end;
                partner[end] = b;
            }
        }
        for t in c..2 * c {
            if partner[t] == usize::MAX {
                let end = walk(t, false, &mut seen);
                partner[t] = end;
                partner[end] = t;
            }
        }
        let mut loops = 0;
        for m in 0..c {
            if seen[m] {
                continue;
            }
            loops += 1;
            let mut p = m;
            loop {
                seen[p] = true;
                let a = x[p];
                seen[a] = true;
                let b = y[a + c] - c;
                if b == m {
                    break;
                }
                p = b;
            }
        }
        (
            TLDiagram {
                strands: c,
                partner,
            },
            loops,
        )
    }
}

impl fmt::Display for TLDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = self.strands;
        let label = |i: usize| {
            if i < c {
                format!("b{i}")
            } else {
                format!("t{}", i - c)
            }
        };
        let mut first = true;
        f.write_str("{")?;
        for (i, &p) in self.partner.iter().enumerate() {
            if i < p {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{}-{}", label(i), label(p))?;
            }
        }
        f.write_str("}")
    }
}

/// Linear combination of diagrams on a fixed number of strands.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TLElement {
    strands: usize,
    terms: BTreeMap<TLDiagram, Scalar>,
}

impl TLElement {
    pub fn zero(strands: usize) -> Self {
        TLElement {
            strands,
            terms: BTreeMap::new(),
        }
    }

    pub fn diagram(d: TLDiagram) -> Self {
        let strands = d.strands;
        let mut terms = BTreeMap::new();
        terms.insert(d, int(1));
        TLElement { strands, terms }
    }

    pub fn identity(strands: usize) -> Self {
        Self::diagram(TLDiagram::identity(strands))
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn terms(&self) -> &BTreeMap<TLDiagram, Scalar> {
        &self.terms
    }

    pub fn coeff(&self, d: &TLDiagram) -> Scalar {
        self.terms.get(d).cloned().unwrap_or_else(|| int(0))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, d: TLDiagram, c: Scalar) {
        let v = match self.terms.remove(&d) {
            Some(old) => &old + &c,
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(d, v);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, FusionError> {
        if self.strands != other.strands {
            return Err(FusionError::StrandMismatch(self.strands, other.strands));
        }
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        let mut out = Self::zero(self.strands);
        for (d, c) in &self.terms {
            out.add_term(d.clone(), c * k);
        }
        out
    }

    /// Tensor with a single vertical strand on the right.
    pub fn with_strand(&self) -> Self {
        TLElement {
            strands: self.strands + 1,
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (d.with_strand(), c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for TLElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "({c}) * {d}")?;
        }
        Ok(())
    }
}

/// Stack `x` on top of `y`, removing loops.
pub fn tl_mul(x: &TLElement, y: &TLElement) -> Result<TLElement, FusionError> {
    if x.strands != y.strands {
        return Err(FusionError::StrandMismatch(x.strands, y.strands));
    }
    let d = loop_value();
    let mut out = TLElement::zero(x.strands);
    for (dx, cx) in &x.terms {
        for (dy, cy) in &y.terms {
            let (diag, loops) = dx.compose(dy);
            let mut coef = cx * cy;
            for _ in 0..loops {
                coef = &coef * &d;
            }
            out.add_term(diag, coef);
        }
    }
    Ok(out)
}

/// Jones-Wenzl projector on `c` strands, by Wenzl's recursion.
pub fn jones_wenzl(c: usize) -> TLElement {
    if c <= 1 {
        return TLElement::identity(c);
    }
    let prev = jones_wenzl(c - 1).with_strand();
    let e = TLElement::diagram(TLDiagram::cup_cap(c, c - 1));
    let ratio = &qint(c as i64 - 1) / &qint(c as i64);
    let sandwich = tl_mul(&tl_mul(&prev, &e).expect("same strands"), &prev).expect("same strands");
    prev.add(&sandwich.scale(&ratio)).expect("same strands")
}

/// A color written `c + offset`, with `c` either a number or the formal symbol behind `B = A^c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Color {
    Concrete(i64),
    Symbolic(i64),
}

impl Color {
    pub fn plus(self, k: i64) -> Color {
        match self {
            Color::Concrete(c) => Color::Concrete(c + k),
            Color::Symbolic(o) => Color::Symbolic(o + k),
        }
    }

    /// `A^{m * color}`.
    pub fn a_pow(self, m: i64) -> Scalar {
        match self {
            Color::Concrete(c) => a_pow((m * c) as i32),
            Color::Symbolic(o) => &RatFunc::var(Var::B, m as i32) * &a_pow((m * o) as i32),
        }
    }

    /// Quantum integer of the color.
    pub fn qint(self) -> Scalar {
        match self {
            Color::Concrete(c) => qint(c),
            Color::Symbolic(_) => {
                let num = &self.a_pow(2) - &self.a_pow(-2);
                let den = &a_pow(2) - &a_pow(-2);
                &num / &den
            }
        }
    }
}

/// Coefficient rules for reducing colored diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FusionRule {
    Parallel,
    HalfTwistUp,
    HalfTwistDown,
    BiangleUp,
    BiangleDown,
    TriangleA,
    TriangleB,
    TriangleC,
}

impl FusionRule {
    pub fn parse(s: &str) -> Option<FusionRule> {
        Some(match s {
            "parallel" => FusionRule::Parallel,
            "half_twist_up" => FusionRule::HalfTwistUp,
            "half_twist_down" => FusionRule::HalfTwistDown,
            "biangle_up" => FusionRule::BiangleUp,
            "biangle_down" => FusionRule::BiangleDown,
            "triangle_a" => FusionRule::TriangleA,
            "triangle_b" => FusionRule::TriangleB,
            "triangle_c" => FusionRule::TriangleC,
            _ => return None,
        })
    }
}

fn color_rule(rule: FusionRule, c: Color) -> Scalar {
    match rule {
        FusionRule::Parallel => -(&c.qint() / &c.plus(1).qint()),
        FusionRule::HalfTwistUp => c.a_pow(1),
        FusionRule::HalfTwistDown => -c.plus(2).a_pow(-1),
        FusionRule::BiangleUp => -(&c.plus(2).qint() / &c.plus(1).qint()),
        FusionRule::BiangleDown => int(1),
        _ => unreachable!("triangle rules take three colors"),
    }
}

/// Coefficient of a fusion rule; single-color rules take `[c]`, triangles take `[a, b, c]`.
pub fn fusion_coefficient(rule: FusionRule, params: &[i64]) -> Result<Scalar, FusionError> {
    let bad = |m: &str| Err(FusionError::Inadmissible(m.to_string()));
    match rule {
        FusionRule::TriangleA | FusionRule::TriangleB | FusionRule::TriangleC => {
            let &[a, b, c] = params else {
                return bad("triangle rules take three colors");
            };
            if a < 0 || b < 0 || c < 0 {
                return bad("colors must be nonnegative");
            }
            if (a + b + c) % 2 != 0 || a > b + c || b > a + c || c > a + b {
                return bad("colors violate parity or triangle inequality");
            }
            Ok(match rule {
                FusionRule::TriangleA => int(1),
                FusionRule::TriangleB => {
                    if c == 0 {
                        return bad("needs c >= 1");
                    }
                    &qint((a - b + c) / 2) / &qint(c)
                }
                _ => {
                    if b == 0 || c == 0 {
                        return bad("needs b, c >= 1");
                    }
                    let num = &qint((a + b + c) / 2 + 1) * &qint((b + c - a) / 2);
                    -(&num / &(&qint(b) * &qint(c)))
                }
            })
        }
        _ => {
            let &[c] = params else {
                return bad("rule takes one color");
            };
            if c < 0 {
                return bad("color must be nonnegative");
            }
            Ok(color_rule(rule, Color::Concrete(c)))
        }
    }
}

/// Loop of color 1 around a strand of color `c`, reduced to a multiple of the strand.
pub fn gamma_loop_at(c: Color) -> Scalar {
    let up = int(1);
    let down = color_rule(FusionRule::Parallel, c);
    let twist_up = color_rule(FusionRule::HalfTwistUp, c);
    let twist_down = color_rule(FusionRule::HalfTwistDown, c);
    let up = &(&up * &twist_up) * &twist_up;
    let down = &(&down * &twist_down) * &twist_down;
    let up = &up * &color_rule(FusionRule::BiangleUp, c);
    let down = &down * &color_rule(FusionRule::BiangleDown, c);
    &up + &down
}

/// The loop evaluation for a symbolic color, as an element of `Q(A, B)`.
pub fn gamma_loop_eval() -> Scalar {
    gamma_loop_at(Color::Symbolic(0))
}

/// Substitute `B = A^c`.
pub fn specialize_b(x: &Scalar, c: i64) -> Scalar {
    x.substitute(&|v| {
        if v == Var::B {
            Some(s_pow(-c as i32))
        } else {
            None
        }
    })
    .expect("monomial substitution")
}

/// Colors on the ladder graph: internal edges `c_1..c_{n-1}`, legs `d_0..d_{n+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderColoring {
    c: Vec<u32>,
    d: Vec<u32>,
}

impl LadderColoring {
    pub fn new(c: Vec<u32>, d: Vec<u32>) -> Result<Self, ScalarError> {
        if d.len() != c.len() + 3 {
            return Err(ScalarError::Inadmissible {
                vertex: 0,
                reason: format!(
                    "{} internal colors need {} leg colors, got {}",
                    c.len(),
                    c.len() + 3,
                    d.len()
                ),
            });
        }
        Ok(LadderColoring { c, d })
    }

    pub fn n(&self) -> usize {
        self.c.len() + 1
    }

    /// Incident colors `[c_{i-1}, c_i, d_i]` at vertex `i = 1..n`, with `c_0 = d_0`, `c_n = d_{n+1}`.
    pub fn vertices(&self) -> Vec<[u32; 3]> {
        let n = self.n();
        let edge = |i: usize| {
            if i == 0 {
                self.d[0]
            } else if i == n {
                self.d[n + 1]
            } else {
                self.c[i - 1]
            }
        };
        (1..=n).map(|i| [edge(i - 1), edge(i), self.d[i]]).collect()
    }

    pub fn check_admissible(&self) -> Result<(), ScalarError> {
        for (i, [a, b, e]) in self.vertices().into_iter().enumerate() {
            let (a, b, e) = (a as u64, b as u64, e as u64);
            let reason = if (a + b + e) % 2 != 0 {
                Some(format!("colors ({a},{b},{e}) have odd sum"))
            } else if a > b + e || b > a + e || e > a + b {
                Some(format!(
                    "colors ({a},{b},{e}) violate the triangle inequality"
                ))
            } else {
                None
            };
            if let Some(reason) = reason {
                return Err(ScalarError::Inadmissible {
                    vertex: i + 1,
                    reason,
                });
            }
        }
        Ok(())
    }
}

pub fn admissible(col: &LadderColoring) -> bool {
    col.check_admissible().is_ok()
}
