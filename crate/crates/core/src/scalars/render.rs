use std::fmt;

use super::poly::{Coeff, Monomial, Poly};
use super::ratfunc::RatFunc;

fn render_factor(out: &mut String, name: &str, half: bool, e: i32) {
    out.push_str(name);
    if half && e % 2 != 0 {
        out.push_str(&format!("^{e}/2"));
        return;
    }
    let k = if half { e / 2 } else { e };
    if k != 1 {
        out.push_str(&format!("^{k}"));
    }
}

pub(crate) fn render_monomial(m: &Monomial) -> String {
    let mut out = String::new();
    for (idx, &(v, e)) in m.pairs().iter().enumerate() {
        if idx > 0 {
            out.push('*');
        }
        render_factor(&mut out, &v.name(), v.is_half(), e);
    }
    out
}

/// Text form of a polynomial, terms in canonical order.
pub fn render_poly<C: Coeff>(p: &Poly<C>) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (idx, (m, c)) in p.terms().iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        let body = if m.is_one() {
            a.to_string()
        } else if a.is_one() {
            render_monomial(m)
        } else {
            format!("{a}*{}", render_monomial(m))
        };
        match (idx, neg) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

/// Text form of a rational function; the denominator is always parenthesized.
pub fn render_ratfunc<C: Coeff>(r: &RatFunc<C>) -> String {
    let num = render_poly(r.num());
    if r.den().is_one() {
        return num;
    }
    let num = if r.num().len() > 1 {
        format!("({num})")
    } else {
        num
    };
    format!("{num}/({})", render_poly(r.den()))
}

impl<C: Coeff> fmt::Display for RatFunc<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_ratfunc(self))
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_poly(self))
    }
}

#[cfg(test)]
mod tests {
    use crate::scalars::{int, q_pow, s_pow, t_pow, x_pow};

    #[test]
    fn token_spellings() {
        let x = &(&x_pow(1, 1) * &int(-1)) - &x_pow(1, -1);
        assert_eq!(x.to_string(), "-X1 - X1^-1");
        assert_eq!(s_pow(1).to_string(), "q^1/2");
        assert_eq!(t_pow(3, 1).to_string(), "t3");
        assert_eq!(
            (&int(1) / &(&int(1) - &q_pow(2))).to_string(),
            "-1/(q^2 - 1)"
        );
    }
}
