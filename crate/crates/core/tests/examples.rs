use skeincoulomb::fusion::{
    fusion_coefficient, gamma_loop_eval, jones_wenzl, loop_value, specialize_b, tl_mul, FusionRule, TLDiagram,
    TLElement,
};
use skeincoulomb::grcoulomb::{
    a_factor, gr_mul, gr_symbol_dressed, sigma_closed_form, solve_sigma, twist, Coweight, DressedKind,
    GradedElement,
};
use skeincoulomb::linalg::det;
use skeincoulomb::monopole::{monopole_e, monopole_f, psi};
use skeincoulomb::qdiff::{dz_shift_index, AlgebraSpec, OpElement};
use skeincoulomb::scalars::{
    a_pow, int, invariant_under_inversion, kappa, q_pow, qfact, qint, s_pow, shift, t_pow, x_pow, Pm, RatFunc, Var,
};
use skeincoulomb::skeinrep::{
    delta_symbol, phi, skein_matrix, star, t_coeff, tau, theta_principal, upsilon, GeneratorId, SurfaceParams,
};
use skeincoulomb::Scalar;

fn sp(n: usize) -> SurfaceParams {
    SurfaceParams::new(n).unwrap()
}

fn sym(x: Scalar) -> Scalar {
    &x + &x.inv().unwrap()
}

#[test]
fn quantum_integers() {
    assert_eq!(qint(0), int(0));
    assert_eq!(qint(1), int(1));
    assert_eq!(qint(2), &a_pow(2) + &a_pow(-2));
    assert_eq!(qint(-1), int(-1));
    assert_eq!(qfact(0).unwrap(), int(1));
    assert_eq!(qfact(1).unwrap(), int(1));
    assert_eq!(qfact(3).unwrap(), &(&qint(1) * &qint(2)) * &qint(3));
    assert!(qfact(-1).is_err());
}

#[test]
fn quantum_integer_as_ratio() {
    for k in 1..6 {
        let ratio = &(&a_pow(2 * k) - &a_pow(-2 * k)) / &(&a_pow(2) - &a_pow(-2));
        assert_eq!(qint(k as i64), ratio);
    }
}

#[test]
fn normalizing_factor() {
    assert_eq!(kappa(&[0], &[0, 0, 0, 0]).unwrap(), int(1));
    assert!(kappa(&[1], &[1, 1, 0, 1]).is_err());
    let k = kappa(&[1], &[1, 0, 0, 1]).unwrap();
    assert!(!k.is_zero());
}

#[test]
fn inversion_invariance() {
    let x1 = sym(x_pow(1, 1));
    assert!(invariant_under_inversion(&x1, &[1]));
    assert!(!invariant_under_inversion(&x_pow(1, 1), &[1]));
    assert!(invariant_under_inversion(&(&x1 * &x_pow(2, 1)), &[1]));
}

#[test]
fn coefficient_shift() {
    assert_eq!(shift(&x_pow(1, 1), &[1, 0]), &q_pow(2) * &x_pow(1, 1));
    let want = &(&q_pow(2) * &x_pow(1, 1)) + &(&q_pow(-2) * &x_pow(1, -1));
    assert_eq!(shift(&sym(x_pow(1, 1)), &[1, 0]), want);
    assert_eq!(shift(&q_pow(3), &[2, 1]), q_pow(3));
}

#[test]
fn shift_past_coordinate_and_tau() {
    let x = AlgebraSpec::xtorus(3);
    let w = OpElement::shift(&x, 0, 1);
    let got = w.mul(&OpElement::scalar(&x, x_pow(1, 1))).unwrap();
    let want = OpElement::term(&x, vec![1, 0], &q_pow(1) * &x_pow(1, 1));
    assert_eq!(got, want);
    let g = OpElement::term(&x, vec![1, 0], &s_pow(-1) * &x_pow(1, -1));
    assert_eq!(g.pow(2), tau(&x, 1, 1));
    let a = OpElement::scalar(&x, x_pow(2, 3));
    assert_eq!(a.mul(&OpElement::one(&x)).unwrap(), a);
}

#[test]
fn star_examples() {
    let n = 3;
    let z = AlgebraSpec::ztrace(n);
    let q1 = OpElement::scalar(&z, RatFunc::var(Var::qc(1), 1));
    let e1 = OpElement::shift(&z, 0, 1);
    let lhs = star(&q1.mul(&e1).unwrap()).unwrap();
    let rhs = star(&e1).unwrap().mul(&star(&q1).unwrap()).unwrap();
    assert_eq!(lhs, rhs);
    assert_eq!(star(&e1.pow(2)).unwrap(), tau(&AlgebraSpec::xtorus(n), 1, 1));
    let c1 = OpElement::scalar(&z, RatFunc::var(Var::c(1), 1));
    let want = &s_pow(-1) * &RatFunc::var(Var::t(1), -1);
    assert_eq!(star(&c1).unwrap().as_coefficient(), Some(want));
    let q2 = &RatFunc::var(Var::qc(1), 2);
    let loop_q = -(&(&a_pow(2) * q2) + &(&a_pow(-2) * &q2.inv().unwrap()));
    let img = star(&OpElement::scalar(&z, loop_q)).unwrap();
    assert_eq!(img.as_coefficient(), Some(-sym(x_pow(1, 1))));
}

#[test]
fn quantum_trace_values() {
    let p = sp(3);
    let g = upsilon(GeneratorId::gamma(1), &p).unwrap();
    let q2 = RatFunc::var(Var::qc(1), 2);
    let want = -(&(&a_pow(2) * &q2) + &(&a_pow(-2) * &q2.inv().unwrap()));
    assert_eq!(g.as_coefficient(), Some(want));
    let d = upsilon(GeneratorId::delta(0), &p).unwrap();
    let c2 = RatFunc::var(Var::c(0), 2);
    let want = -(&(&a_pow(2) * &c2) + &(&a_pow(-2) * &c2.inv().unwrap()));
    assert_eq!(d.as_coefficient(), Some(want));
    let s = upsilon(GeneratorId::sigma(1), &sp(2)).unwrap();
    for c in s.terms().values() {
        assert!(!c.mentions(|v| v == Var::qc(0) || v == Var::qc(2)));
    }
}

#[test]
fn polynomial_representation_values() {
    let g = phi(GeneratorId::gamma(2), &sp(4)).unwrap();
    assert_eq!(g.as_coefficient(), Some(-sym(x_pow(2, 1))));
    let d = phi(GeneratorId::delta(3), &sp(3)).unwrap();
    assert_eq!(d.as_coefficient(), Some(-sym(t_pow(3, 1))));
    let p = sp(4);
    let s = phi(GeneratorId::sigma(2), &p).unwrap();
    let c = &(&q_pow(1) * &t_pow(2, 1)) * &t_pow(3, 1);
    let rest = s.sub(&theta_principal(2, 0, &p).unwrap()).unwrap();
    assert_eq!(rest.as_coefficient(), Some(-sym(c)));
}

#[test]
fn boundary_coefficient_uses_t0() {
    let p = sp(3);
    let t1 = t_coeff(1, 1, &p).unwrap();
    assert!(!t1.mentions(|v| v == Var::x(0)));
    assert!(t1.mentions(|v| v == Var::t(0)));
    let interior = t_coeff(2, -1, &sp(4)).unwrap();
    assert!(interior.mentions(|v| v == Var::x(1)) && interior.mentions(|v| v == Var::x(3)));
}

#[test]
fn theta_principal_at_one() {
    let p = sp(3);
    let x = AlgebraSpec::xtorus(3);
    let one = OpElement::one(&x);
    let mut want = OpElement::zero(&x);
    for s in [1, -1] {
        let c = &(&q_pow(1) * &x_pow(1, s)) * &t_coeff(1, s, &p).unwrap();
        let part = OpElement::scalar(&x, c).mul(&tau(&x, 1, s).sub(&one).unwrap()).unwrap();
        want = want.add(&part).unwrap();
    }
    assert_eq!(theta_principal(1, 1, &p).unwrap(), want);
}

#[test]
fn skein_matrix_determinant() {
    let d = det(&skein_matrix(&delta_symbol()));
    assert!(!d.is_zero());
    assert!(d.num().degree_in(Var::new(skeincoulomb::scalars::Atom::DeltaK)) <= 4);
}

#[test]
fn psi_examples() {
    let d = AlgebraSpec::dz(3);
    let w = -(&RatFunc::var(Var::w(1, Pm::Plus), 1) + &RatFunc::var(Var::w(1, Pm::Minus), 1));
    let img = psi(&OpElement::scalar(&d, w)).unwrap();
    assert_eq!(img.as_coefficient(), Some(-sym(x_pow(1, 1))));
    let single = OpElement::shift(&d, dz_shift_index(1, Pm::Plus), 1);
    assert!(psi(&single).is_err());
    let bal = single.mul(&OpElement::shift(&d, dz_shift_index(1, Pm::Minus), -1)).unwrap();
    let x = AlgebraSpec::xtorus(3);
    let want = OpElement::term(&x, vec![2, 0], &q_pow(-4) * &x_pow(1, -4));
    assert_eq!(psi(&bal).unwrap(), want);
}

#[test]
fn boundary_monopoles_use_boundary_parameters() {
    let f = monopole_f(1, 0, &sp(3)).unwrap();
    let mentions_w0 = f.terms().values().any(|c| c.mentions(|v| v == Var::w(0, Pm::Plus)));
    let mentions_z0 = f.terms().values().any(|c| c.mentions(|v| v == Var::zb(0, Pm::Plus)));
    assert!(!mentions_w0 && mentions_z0);
    let e = monopole_e(2, 0, &sp(4)).unwrap();
    assert_eq!(e.terms().len(), 2);
}

#[test]
fn correction_factors() {
    let n = 4;
    let (i, j) = (1, 2);
    let got = a_factor(&Coweight::alpha(n, i, j - 1), &Coweight::alpha(n, j, j), n);
    let u = &x_pow(j - 1, 1) * &x_pow(j, -1);
    let f1 = &int(1) - &(&(&q_pow(-1) * &t_pow(j, -1)) * &u.inv().unwrap());
    let f2 = &int(1) - &(&(&q_pow(1) * &t_pow(j, -1)) * &u);
    assert_eq!(got, &f1 * &f2);
    let l = Coweight::new(vec![2, 1, 0]).unwrap();
    assert_eq!(a_factor(&l.scale(2), &l.scale(3), n), int(1));
    assert_eq!(a_factor(&l, &Coweight::zero(n), n), int(1));
}

#[test]
fn twisted_product_display() {
    let n = 4;
    let (i, j) = (1, 2);
    let a = GradedElement::term(n, Coweight::alpha(n, i, j - 1), x_pow(j - 1, 1)).unwrap();
    let b = GradedElement::term(n, Coweight::alpha(n, j, j), x_pow(j, -1)).unwrap();
    let u = &x_pow(j - 1, 1) * &x_pow(j, -1);
    let tq = &q_pow(-1) * &t_pow(j, -1);
    let c = &(&u - &tq) * &(&int(1) - &(&(&q_pow(1) * &t_pow(j, -1)) * &u));
    assert_eq!(gr_mul(&a, &b), GradedElement::term(n, Coweight::alpha(n, i, j), c).unwrap());
}

#[test]
fn twist_examples() {
    let p = sp(5);
    let s = sigma_closed_form(1, 1, &p).unwrap();
    let tw = twist(&s, 1, 1).unwrap();
    assert_eq!(tw, s.scale(&(&q_pow(1) * &x_pow(1, 1))));
    assert_eq!(twist(&tw, 1, -1).unwrap(), s);
    assert!(twist(&s, 2, 1).is_err());
}

#[test]
fn sigma_closed_forms() {
    let p = sp(4);
    let base = sigma_closed_form(1, 1, &p).unwrap();
    let c = &(&(&(-q_pow(-1)) * &t_pow(1, -1)) * &t_pow(2, -1)) * &x_pow(1, -2);
    assert_eq!(base, GradedElement::term(4, Coweight::alpha(4, 1, 1), c).unwrap());
    let s12 = sigma_closed_form(1, 2, &p).unwrap();
    let mut c = -q_pow(-2);
    for f in [t_pow(1, -1), t_pow(2, -3), t_pow(3, -1), x_pow(1, -2), x_pow(2, -2)] {
        c = &c * &f;
    }
    assert_eq!(s12, GradedElement::term(4, Coweight::alpha(4, 1, 2), c).unwrap());
    assert_eq!(solve_sigma(1, 2, &p).unwrap(), s12);
    assert_eq!(solve_sigma(2, 2, &p).unwrap(), sigma_closed_form(2, 2, &p).unwrap());
}

#[test]
fn dressed_symbols() {
    let p = sp(4);
    let n = 4;
    let ef0 = gr_symbol_dressed(2, 0, DressedKind::Ef, &p).unwrap();
    assert_eq!(ef0, GradedElement::basis(n, Coweight::alpha(n, 2, 2)).unwrap());
    let fe1 = gr_symbol_dressed(2, 1, DressedKind::Fe, &p).unwrap();
    let c = &q_pow(-2) * &x_pow(2, -1);
    assert_eq!(fe1, GradedElement::term(n, Coweight::alpha(n, 2, 2), c).unwrap());
    let lhs = gr_mul(&ef0, &GradedElement::scalar(n, sym(x_pow(2, 1))).unwrap());
    let up = gr_symbol_dressed(2, 1, DressedKind::Ef, &p).unwrap().scale(&q_pow(2));
    let down = gr_symbol_dressed(2, -1, DressedKind::Ef, &p).unwrap().scale(&q_pow(-2));
    assert_eq!(lhs, up.add(&down));
}

#[test]
fn temperley_lieb_basics() {
    let id = TLElement::identity(3);
    assert_eq!(tl_mul(&id, &id).unwrap(), id);
    let e = TLElement::diagram(TLDiagram::cup_cap(2, 1));
    assert_eq!(tl_mul(&e, &e).unwrap(), e.scale(&-(&a_pow(2) + &a_pow(-2))));
    assert_eq!(loop_value(), -(&a_pow(2) + &a_pow(-2)));
    assert_eq!(jones_wenzl(1), TLElement::identity(1));
    assert_eq!(jones_wenzl(3).terms().len(), 5);
}

#[test]
fn fusion_rules() {
    let rule = |s| FusionRule::parse(s).unwrap();
    for c in 0..5 {
        assert_eq!(fusion_coefficient(rule("half_twist_up"), &[c]).unwrap(), a_pow(c as i32));
        let want = -(&qint(c + 2) / &qint(c + 1));
        assert_eq!(fusion_coefficient(rule("biangle_up"), &[c]).unwrap(), want);
    }
    assert_eq!(fusion_coefficient(rule("triangle_a"), &[1, 1, 2]).unwrap(), int(1));
    assert!(fusion_coefficient(rule("triangle_a"), &[1, 1, 1]).is_err());
    assert!(FusionRule::parse("nope").is_none());
}

#[test]
fn loop_specializations() {
    let g = gamma_loop_eval();
    assert_eq!(specialize_b(&g, 1), -(&a_pow(4) + &a_pow(-4)));
    assert_eq!(specialize_b(&g, 0), -(&a_pow(2) + &a_pow(-2)));
}
