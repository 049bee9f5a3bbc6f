//! Multivariate polynomial gcd over the integers.
//!
//! Cheap structural reductions come first (contents, variable support, trial
//! division).  A modular image test then certifies coprimality, which is by
//! far the most common outcome when reducing fractions.  Only genuinely
//! non-trivial gcds reach the recursive primitive remainder sequence.

use super::poly::{Coeff, Poly};
use super::var::Var;

const P: u64 = (1 << 61) - 1;

fn mulm(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn addm(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

fn subm(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

fn powm(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a);
        }
        a = mulm(a, a);
        e >>= 1;
    }
    r
}

fn invm(a: u64) -> u64 {
    powm(a, P - 2)
}

fn reduce<C: Coeff>(c: &C) -> u64 {
    let p = C::from_u64(P).expect("modulus fits coefficient type");
    c.mod_floor(&p).to_u64().expect("residue fits in u64")
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn point(v: Var, round: u64) -> u64 {
    let h = splitmix(((v.raw() as u64) << 8) ^ round.wrapping_mul(0x1234_5678_9abc_def1));
    2 + h % (P - 3)
}

/// Image of `a` in `F_p[x]` with every other variable evaluated.
fn image<C: Coeff>(a: &Poly<C>, x: Var, round: u64) -> Vec<u64> {
    let deg = a.degree_in(x).max(0) as usize;
    let mut out = vec![0u64; deg + 1];
    for (m, c) in a.terms() {
        let mut t = reduce(c);
        let mut ex = 0;
        for &(v, e) in m.pairs() {
            if v == x {
                ex = e as usize;
            } else {
                t = mulm(t, powm(point(v, round), e as u64));
            }
        }
        out[ex] = addm(out[ex], t);
    }
    out
}

fn trim(a: &mut Vec<u64>) {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
}

fn ugcd_degree(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim(&mut a);
    trim(&mut b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        if b.len() == 1 && b[0] == 0 {
            return a.len() - 1;
        }
        if b.len() == 1 {
            return 0;
        }
        let inv = invm(*b.last().unwrap());
        while a.len() >= b.len() && !(a.len() == 1 && a[0] == 0) {
            let shift = a.len() - b.len();
            let f = mulm(*a.last().unwrap(), inv);
            for (j, &bj) in b.iter().enumerate() {
                a[j + shift] = subm(a[j + shift], mulm(f, bj));
            }
            a.pop();
            if a.is_empty() {
                a.push(0);
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
}

/// True only when `a` and `b` are proven coprime (up to integer content).
fn certify_coprime<C: Coeff>(a: &Poly<C>, b: &Poly<C>, common: &[Var]) -> bool {
    for &x in common {
        let (da, db) = (a.degree_in(x) as usize, b.degree_in(x) as usize);
        let mut ok = false;
        for round in 0..3 {
            let ia = image(a, x, round);
            let ib = image(b, x, round);
            if ia[da] == 0 || ib[db] == 0 {
                continue;
            }
            if ugcd_degree(ia, ib) > 0 {
                return false;
            }
            ok = true;
            break;
        }
        if !ok {
            return false;
        }
    }
    true
}

/// Greatest common divisor with positive leading coefficient.
///
/// For Laurent inputs the monomial part is the exponent-wise minimum of the
/// two monomial contents.
pub fn gcd<C: Coeff>(a: &Poly<C>, b: &Poly<C>) -> Poly<C> {
    if a.is_zero() {
        let mut g = b.clone();
        g.normalize_sign();
        return g;
    }
    if b.is_zero() {
        let mut g = a.clone();
        g.normalize_sign();
        return g;
    }
    let ic = a.int_content().gcd(&b.int_content());
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mono = ma.gcd_min(&mb);
    let pa = a.div_int(&a.int_content()).mul_monomial(&ma.inv());
    let pb = b.div_int(&b.int_content()).mul_monomial(&mb.inv());
    let g = gcd_primitive(pa, pb);
    g.mul_term(&mono, &ic)
}

/// Gcd of primitive polynomials without monomial content.
fn gcd_primitive<C: Coeff>(mut a: Poly<C>, mut b: Poly<C>) -> Poly<C> {
    a.normalize_sign();
    b.normalize_sign();
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a == b {
        return a;
    }
    let va = a.vars();
    let vb = b.vars();
    if va.iter().any(|v| !vb.contains(v)) {
        return gcd_with_content(&b, &a, &vb);
    }
    if vb.iter().any(|v| !va.contains(v)) {
        return gcd_with_content(&a, &b, &va);
    }
    if a.len() <= b.len() {
        if b.exact_div(&a).is_some() {
            return a;
        }
    } else if a.exact_div(&b).is_some() {
        return b;
    }
    if certify_coprime(&a, &b, &va) {
        return Poly::one();
    }
    let x = *va
        .iter()
        .min_by_key(|&&v| {
            (
                a.degree_in(v).max(b.degree_in(v)),
                a.degree_in(v) + b.degree_in(v),
            )
        })
        .expect("nonconstant polynomial has a variable");
    let mut g = prs_gcd(&a, &b, x);
    g.normalize_sign();
    g
}

/// gcd(`b`, content of `a` with respect to variables outside `keep_vars`).
fn gcd_with_content<C: Coeff>(b: &Poly<C>, a: &Poly<C>, keep_vars: &[Var]) -> Poly<C> {
    let mut g = b.clone();
    for c in a.coefficients_in(|v| !keep_vars.contains(&v)) {
        g = gcd(&g, &c);
        if g.is_constant() {
            return Poly::one();
        }
    }
    g.normalize_sign();
    g
}

fn content_of<C: Coeff>(coeffs: &[Poly<C>]) -> Poly<C> {
    let mut sorted: Vec<&Poly<C>> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    sorted.sort_by_key(|c| c.len());
    let mut g = Poly::zero();
    for c in sorted {
        g = gcd(&g, c);
        if g.is_one() {
            break;
        }
    }
    g
}

fn divide_all<C: Coeff>(coeffs: &[Poly<C>], d: &Poly<C>) -> Vec<Poly<C>> {
    if d.is_one() {
        return coeffs.to_vec();
    }
    coeffs
        .iter()
        .map(|c| c.exact_div(d).expect("content divides every coefficient"))
        .collect()
}

fn trim_poly<C: Coeff>(a: &mut Vec<Poly<C>>) {
    while a.len() > 1 && a.last().unwrap().is_zero() {
        a.pop();
    }
}

fn prem<C: Coeff>(a: &[Poly<C>], b: &[Poly<C>]) -> Vec<Poly<C>> {
    let n = b.len() - 1;
    let lcb = &b[n];
    let mut r = a.to_vec();
    let m = r.len() - 1;
    for k in (n..=m).rev() {
        let coef = r[k].clone();
        for c in r.iter_mut() {
            *c = c.mul(lcb);
        }
        if !coef.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                let idx = j + k - n;
                r[idx] = r[idx].sub(&coef.mul(bj));
            }
        }
        r.pop();
    }
    if r.is_empty() {
        r.push(Poly::zero());
    }
    trim_poly(&mut r);
    r
}

fn prs_gcd<C: Coeff>(a: &Poly<C>, b: &Poly<C>, x: Var) -> Poly<C> {
    let ua = a.to_univariate(x);
    let ub = b.to_univariate(x);
    let ca = content_of(&ua);
    let cb = content_of(&ub);
    let cg = gcd(&ca, &cb);
    let mut pa = divide_all(&ua, &ca);
    let mut pb = divide_all(&ub, &cb);
    if pa.len() < pb.len() {
        std::mem::swap(&mut pa, &mut pb);
    }
    loop {
        let r = prem(&pa, &pb);
        if r.len() == 1 && r[0].is_zero() {
            break;
        }
        if r.len() == 1 {
            return cg;
        }
        let c = content_of(&r);
        pa = pb;
        pb = divide_all(&r, &c);
    }
    let mut g = Poly::from_univariate(x, &pb);
    let ic = g.int_content();
    g = g.div_int(&ic);
    let gm = g.monomial_content();
    g = g.mul_monomial(&gm.inv());
    if g.leading_coeff().is_negative() {
        g = g.neg();
    }
    g.mul(&cg)
}
