use super::{a_pow, int, Var};
use crate::error::ScalarError;
use crate::fusion::LadderColoring;
use crate::Scalar;

/// Quantum integer `[k] = (A^{2k} - A^{-2k}) / (A^2 - A^{-2})`.
pub fn qint(k: i64) -> Scalar {
    if k < 0 {
        return -qint(-k);
    }
    let mut acc = int(0);
    for j in 0..k {
        acc = &acc + &a_pow((2 * (k - 1 - 2 * j)) as i32);
    }
    acc
}

/// Quantum factorial `[k]! = [1][2]...[k]`.
pub fn qfact(k: i64) -> Result<Scalar, ScalarError> {
    if k < 0 {
        return Err(ScalarError::NegativeFactorial(k));
    }
    let mut acc = int(1);
    for j in 1..=k {
        acc = &acc * &qint(j);
    }
    Ok(acc)
}

/// Normalizing factor of a ladder coloring: internal factorials over the
/// half-sum factorials at each vertex.
pub fn kappa(c: &[u32], d: &[u32]) -> Result<Scalar, ScalarError> {
    let col = LadderColoring::new(c.to_vec(), d.to_vec())?;
    col.check_admissible()?;
    let mut num = int(1);
    for &ci in c {
        num = &num * &qfact(ci as i64)?;
    }
    let mut den = int(1);
    for (i, [a, b, e]) in col.vertices().into_iter().enumerate() {
        let twice = a as i64 + b as i64 - e as i64;
        if twice < 0 || twice % 2 != 0 {
            return Err(ScalarError::Inadmissible {
                vertex: i + 1,
                reason: format!("half-sum ({a}+{b}-{e})/2 is not a nonnegative integer"),
            });
        }
        den = &den * &qfact(twice / 2)?;
    }
    num.checked_div(&den)
}

/// Whether `X_j -> X_j^{-1}` for every `j` in `js` fixes `p`.
pub fn invariant_under_inversion(p: &Scalar, js: &[usize]) -> bool {
    let flip: Vec<Var> = js.iter().map(|&j| Var::x(j)).collect();
    let q = p.map_monomials_auto(|m| {
        m.map_vars(|v, e| if flip.contains(&v) { (v, -e) } else { (v, e) })
    });
    &q == p
}

/// `X_j -> q^{2 lambda_j} X_j` with `lambda` indexed from `X_1`.
pub fn shift(p: &Scalar, lambda: &[i64]) -> Scalar {
    if lambda.iter().all(|&l| l == 0) {
        return p.clone();
    }
    p.rescale(|v| match v.atom() {
        super::Atom::X(i) if i >= 1 && (i as usize) <= lambda.len() => {
            2 * lambda[i as usize - 1] as i32
        }
        _ => 0,
    })
}
