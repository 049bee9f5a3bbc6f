//! Expression parser and evaluator for the command line.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' ['-'] INT ['/' INT])?
//! atom   := INT | NAME | GEN | r[..] | '(' expr ')' | FUNC '(' expr ')'
//! ```
//!
//! `GEN` tokens are `gamma:i`, `delta:j`, `sigma:i`, `theta:i:m`, `E:i:m`, `F:i:m`.
//! `FUNC` is one of `phi`, `psi`, `star`.

use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{AlgebraError, EvalError, ParseError};
use crate::grcoulomb::{gr_mul, Coweight, GradedElement};
use crate::monopole::{monopole_e, monopole_f, psi};
use crate::qdiff::{AlgebraSpec, OpElement};
use crate::scalars::{render_ratfunc, Monomial, RatFunc, Var};
use crate::skeinrep::{phi, star, theta_one, upsilon, GenKind, GeneratorId, SurfaceParams};
use crate::Scalar;

/// Algebra in which an expression is evaluated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Context {
    XTorus,
    ZTrace,
    Dz,
    Graded,
}

impl FromStr for Context {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "xtorus" => Ok(Context::XTorus),
            "ztrace" => Ok(Context::ZTrace),
            "dz" => Ok(Context::Dz),
            "graded" => Ok(Context::Graded),
            _ => Err(format!("unknown algebra {s}")),
        }
    }
}

/// An evaluated expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Scalar),
    Op(OpElement),
    Graded(GradedElement),
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Value::Scalar(s) => f.write_str(&render_ratfunc(s)),
            Value::Op(o) => write!(f, "{o}"),
            Value::Graded(g) => write!(f, "{g}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Name(String),
    Gen(String, Vec<i64>),
    Coweight(Vec<i64>),
    Sym(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    pos: usize,
    end: usize,
}

fn err(pos: usize, msg: impl Into<String>) -> ParseError {
    ParseError { pos, msg: msg.into() }
}

fn lex(src: &str) -> Result<Vec<Token>, ParseError> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let read_int = |i: &mut usize| -> Result<i64, ParseError> {
        let start = *i;
        if *i < b.len() && b[*i] == b'-' {
            *i += 1;
        }
        while *i < b.len() && b[*i].is_ascii_digit() {
            *i += 1;
        }
        src[start..*i].parse().map_err(|_| err(start, "expected integer"))
    };
    while i < b.len() {
        let c = b[i];
        let start = i;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while i < b.len() && b[i].is_ascii_digit() {
                i += 1;
            }
            let v = BigInt::from_str(&src[start..i]).map_err(|_| err(start, "bad integer"))?;
            out.push(Token { tok: Tok::Int(v), pos: start, end: i });
            continue;
        }
        if c.is_ascii_alphabetic() || c == b'_' {
            while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'_') {
                i += 1;
            }
            let name = src[start..i].to_string();
            if name == "r" && i < b.len() && b[i] == b'[' {
                i += 1;
                let mut entries = Vec::new();
                loop {
                    while i < b.len() && b[i] == b' ' {
                        i += 1;
                    }
                    if i < b.len() && b[i] == b']' && entries.is_empty() {
                        i += 1;
                        break;
                    }
                    entries.push(read_int(&mut i)?);
                    while i < b.len() && b[i] == b' ' {
                        i += 1;
                    }
                    match b.get(i) {
                        Some(b',') => i += 1,
                        Some(b']') => {
                            i += 1;
                            break;
                        }
                        _ => return Err(err(i, "expected ',' or ']' in coweight")),
                    }
                }
                out.push(Token { tok: Tok::Coweight(entries), pos: start, end: i });
                continue;
            }
            if i < b.len() && b[i] == b':' {
                let mut idx = Vec::new();
                while i < b.len() && b[i] == b':' {
                    i += 1;
                    idx.push(read_int(&mut i)?);
                }
                out.push(Token { tok: Tok::Gen(name, idx), pos: start, end: i });
                continue;
            }
            out.push(Token { tok: Tok::Name(name), pos: start, end: i });
            continue;
        }
        if "+-*/^(),".contains(c as char) {
            i += 1;
            out.push(Token { tok: Tok::Sym(c as char), pos: start, end: i });
            continue;
        }
        return Err(err(start, format!("unexpected character '{}'", c as char)));
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    at: usize,
    len: usize,
    n: usize,
    params: &'a SurfaceParams,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.pos).unwrap_or(self.len)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<(), EvalError> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            Err(err(self.pos(), format!("expected '{c}'")).into())
        }
    }

    fn expr(&mut self, ctx: Context) -> Result<Value, EvalError> {
        let mut acc = self.term(ctx)?;
        loop {
            if self.eat_sym('+') {
                let rhs = self.term(ctx)?;
                acc = self.add(ctx, acc, rhs, false)?;
            } else if self.eat_sym('-') {
                let rhs = self.term(ctx)?;
                acc = self.add(ctx, acc, rhs, true)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self, ctx: Context) -> Result<Value, EvalError> {
        let mut acc = self.unary(ctx)?;
        loop {
            if self.eat_sym('*') {
                let rhs = self.unary(ctx)?;
                acc = self.mul(ctx, acc, rhs)?;
            } else if self.eat_sym('/') {
                let pos = self.pos();
                let rhs = self.unary(ctx)?;
                let Value::Scalar(d) = rhs else {
                    return Err(err(pos, "can only divide by scalars").into());
                };
                let inv = d.inv()?;
                acc = self.mul(ctx, acc, Value::Scalar(inv))?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self, ctx: Context) -> Result<Value, EvalError> {
        if self.eat_sym('-') {
            let v = self.unary(ctx)?;
            return self.mul(ctx, Value::Scalar(RatFunc::from_i64(-1)), v);
        }
        self.power(ctx)
    }

    fn small_int(&mut self) -> Result<i64, EvalError> {
        let pos = self.pos();
        let neg = self.eat_sym('-');
        match self.peek().cloned() {
            Some(Tok::Int(v)) => {
                self.at += 1;
                let v: i64 = i64::try_from(&v).map_err(|_| err(pos, "exponent too large"))?;
                Ok(if neg { -v } else { v })
            }
            _ => Err(err(pos, "expected integer exponent").into()),
        }
    }

    fn power(&mut self, ctx: Context) -> Result<Value, EvalError> {
        let base = self.atom(ctx)?;
        if !self.eat_sym('^') {
            return Ok(base);
        }
        let pos = self.pos();
        let num = self.small_int()?;
        let mut den = 1;
        if let (Some(slash), Some(next)) = (self.toks.get(self.at), self.toks.get(self.at + 1)) {
            if slash.tok == Tok::Sym('/') && matches!(next.tok, Tok::Int(_)) && next.pos == slash.end {
                self.at += 1;
                den = self.small_int()?;
            }
        }
        match den {
            1 => self.pow(base, num, pos),
            2 => {
                let Value::Scalar(s) = &base else {
                    return Err(err(pos, "half powers need a scalar base").into());
                };
                Ok(Value::Scalar(half_power(s, num).ok_or_else(|| err(pos, "half power of a non-half atom"))?))
            }
            _ => Err(err(pos, "exponent denominator must be 1 or 2").into()),
        }
    }

    fn pow(&self, base: Value, e: i64, pos: usize) -> Result<Value, EvalError> {
        let e32 = i32::try_from(e).map_err(|_| err(pos, "exponent too large"))?;
        match base {
            Value::Scalar(s) => Ok(Value::Scalar(s.pow(e32)?)),
            Value::Op(o) => Ok(Value::Op(o.powi(e32)?)),
            Value::Graded(g) => {
                if e < 0 {
                    return Err(err(pos, "negative powers of graded elements").into());
                }
                let mut acc = GradedElement::scalar(self.n, RatFunc::one())?;
                for _ in 0..e {
                    acc = gr_mul(&acc, &g);
                }
                Ok(Value::Graded(acc))
            }
        }
    }

    fn atom(&mut self, ctx: Context) -> Result<Value, EvalError> {
        let pos = self.pos();
        let Some(tok) = self.peek().cloned() else {
            return Err(err(pos, "unexpected end of input").into());
        };
        self.at += 1;
        match tok {
            Tok::Int(v) => Ok(Value::Scalar(RatFunc::from_int(v))),
            Tok::Sym('(') => {
                let v = self.expr(ctx)?;
                self.expect_sym(')')?;
                Ok(v)
            }
            Tok::Sym(c) => Err(err(pos, format!("unexpected '{c}'")).into()),
            Tok::Coweight(entries) => {
                if ctx != Context::Graded {
                    return Err(err(pos, "coweights need the graded algebra").into());
                }
                let l = Coweight::new(entries)?;
                Ok(Value::Graded(GradedElement::basis(self.n, l)?))
            }
            Tok::Gen(name, idx) => self.generator(ctx, &name, &idx, pos),
            Tok::Name(name) => {
                if matches!(name.as_str(), "phi" | "psi" | "star") && self.peek() == Some(&Tok::Sym('(')) {
                    self.at += 1;
                    let inner_ctx = match name.as_str() {
                        "phi" => Context::XTorus,
                        "psi" => Context::Dz,
                        _ => Context::ZTrace,
                    };
                    let v = self.expr(inner_ctx)?;
                    self.expect_sym(')')?;
                    let op = self.as_op(inner_ctx, v)?;
                    return match name.as_str() {
                        "phi" => Ok(Value::Op(op)),
                        "psi" => Ok(Value::Op(psi(&op)?)),
                        _ => Ok(Value::Op(star(&op)?)),
                    };
                }
                if let Some(spec) = self.spec(ctx) {
                    if let Some(j) = spec.shift_index(&name) {
                        return Ok(Value::Op(OpElement::shift(&spec, j, 1)));
                    }
                }
                let v = Var::parse(&name).ok_or_else(|| err(pos, format!("unknown name {name}")))?;
                Ok(Value::Scalar(RatFunc::var(v, if v.is_half() { 2 } else { 1 })))
            }
        }
    }

    fn generator(&mut self, ctx: Context, name: &str, idx: &[i64], pos: usize) -> Result<Value, EvalError> {
        let arity = |k: usize| -> Result<(), EvalError> {
            if idx.len() == k && idx[0] >= 0 {
                Ok(())
            } else {
                Err(err(pos, format!("{name} takes {k} indices")).into())
            }
        };
        let p = self.params;
        let skein = |g: GeneratorId| -> Result<Value, EvalError> {
            match ctx {
                Context::XTorus => {
                    if g.kind == GenKind::Theta {
                        return match g.twist {
                            0 => Ok(Value::Op(phi(GeneratorId::sigma(g.index), p)?)),
                            1 => Ok(Value::Op(theta_one(g.index, p)?)),
                            _ => Err(AlgebraError::Unsupported(
                                "theta curves are only available for twist 0 and 1".into(),
                            )
                            .into()),
                        };
                    }
                    Ok(Value::Op(phi(g, p)?))
                }
                Context::ZTrace => Ok(Value::Op(upsilon(g, p)?)),
                _ => Err(EvalError::Type(format!("{g} needs the xtorus or ztrace algebra"))),
            }
        };
        match name {
            "gamma" => {
                arity(1)?;
                skein(GeneratorId::gamma(idx[0] as usize))
            }
            "delta" => {
                arity(1)?;
                skein(GeneratorId::delta(idx[0] as usize))
            }
            "sigma" => {
                arity(1)?;
                skein(GeneratorId::sigma(idx[0] as usize))
            }
            "theta" => {
                arity(2)?;
                skein(GeneratorId::theta(idx[0] as usize, idx[1]))
            }
            "E" | "F" => {
                arity(2)?;
                if ctx != Context::Dz {
                    return Err(EvalError::Type(format!("{name}:{}:{} needs the dz algebra", idx[0], idx[1])));
                }
                let i = idx[0] as usize;
                let op = if name == "E" { monopole_e(i, idx[1], p)? } else { monopole_f(i, idx[1], p)? };
                Ok(Value::Op(op))
            }
            _ => Err(err(pos, format!("unknown generator {name}")).into()),
        }
    }

    fn spec(&self, ctx: Context) -> Option<Arc<AlgebraSpec>> {
        match ctx {
            Context::XTorus => Some(AlgebraSpec::xtorus(self.n)),
            Context::ZTrace => Some(AlgebraSpec::ztrace(self.n)),
            Context::Dz => Some(AlgebraSpec::dz(self.n)),
            Context::Graded => None,
        }
    }

    fn as_op(&self, ctx: Context, v: Value) -> Result<OpElement, EvalError> {
        match v {
            Value::Op(o) => Ok(o),
            Value::Scalar(s) => Ok(OpElement::scalar(&self.spec(ctx).expect("operator context"), s)),
            Value::Graded(_) => Err(EvalError::Type("graded element in an operator algebra".into())),
        }
    }

    fn as_graded(&self, v: Value) -> Result<GradedElement, EvalError> {
        match v {
            Value::Graded(g) => Ok(g),
            Value::Scalar(s) => Ok(GradedElement::scalar(self.n, s)?),
            Value::Op(_) => Err(EvalError::Type("operator in the graded algebra".into())),
        }
    }

    fn add(&self, ctx: Context, a: Value, b: Value, minus: bool) -> Result<Value, EvalError> {
        if let (Value::Scalar(x), Value::Scalar(y)) = (&a, &b) {
            return Ok(Value::Scalar(if minus { x - y } else { x + y }));
        }
        if ctx == Context::Graded {
            let (x, y) = (self.as_graded(a)?, self.as_graded(b)?);
            return Ok(Value::Graded(if minus { x.sub(&y) } else { x.add(&y) }));
        }
        let (x, y) = (self.as_op(ctx, a)?, self.as_op(ctx, b)?);
        Ok(Value::Op(if minus { x.sub(&y)? } else { x.add(&y)? }))
    }

    fn mul(&self, ctx: Context, a: Value, b: Value) -> Result<Value, EvalError> {
        match (a, b) {
            (Value::Scalar(x), Value::Scalar(y)) => Ok(Value::Scalar(&x * &y)),
            (Value::Scalar(x), Value::Op(o)) => Ok(Value::Op(o.scale(&x))),
            (Value::Scalar(x), Value::Graded(g)) => {
                let out = g.scale(&x);
                out.validate()?;
                Ok(Value::Graded(out))
            }
            (a, b) if ctx == Context::Graded => {
                let x = match a {
                    Value::Graded(g) => g,
                    other => self.as_graded(other)?,
                };
                let y = match b {
                    Value::Scalar(s) => GradedElement::basis(self.n, Coweight::zero(self.n))?.scale(&s),
                    other => self.as_graded(other)?,
                };
                let out = gr_mul(&x, &y);
                out.validate()?;
                Ok(Value::Graded(out))
            }
            (a, b) => {
                let (x, y) = (self.as_op(ctx, a)?, self.as_op(ctx, b)?);
                Ok(Value::Op(x.mul(&y)?))
            }
        }
    }
}

/// `s^{k/2}` for a unit monomial `s` in half atoms.
fn half_power(s: &Scalar, k: i64) -> Option<Scalar> {
    if !s.den().is_one() || s.num().len() != 1 {
        return None;
    }
    let (m, c) = &s.num().terms()[0];
    if !num_traits::One::is_one(c) {
        return None;
    }
    let mut pairs = Vec::new();
    for &(v, e) in m.pairs() {
        let scaled = e as i64 * k;
        if !v.is_half() || scaled % 2 != 0 {
            return None;
        }
        pairs.push((v, (scaled / 2) as i32));
    }
    Some(RatFunc::monomial(Monomial::from_pairs(pairs)))
}

/// Parse and evaluate `src` in `ctx` on the surface with `n` internal edges plus one.
pub fn evaluate(src: &str, ctx: Context, n: usize) -> Result<Value, EvalError> {
    let params = SurfaceParams::new(n)?;
    let toks = lex(src)?;
    let mut p = Parser { toks, at: 0, len: src.len(), n, params: &params };
    let v = p.expr(ctx)?;
    if p.at != p.toks.len() {
        return Err(err(p.pos(), "trailing input").into());
    }
    Ok(v)
}

/// [`evaluate`] followed by canonical rendering.
pub fn eval(src: &str, ctx: Context, n: usize) -> Result<String, EvalError> {
    Ok(evaluate(src, ctx, n)?.to_string())
}
