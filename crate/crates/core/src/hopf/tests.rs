use super::*;
use crate::ncalg::{normal_form, RawTerm};

fn iw() -> Scalar {
    Scalar::i() * Scalar::w()
}

fn raw(word: &[(&str, i64)]) -> RawTerm {
    (Scalar::one(), word.iter().map(|(g, e)| (g.to_string(), *e)).collect())
}

#[test]
fn x_mu_reorders() {
    let f = fq_g1();
    let e = normal_form(f.base(), &[raw(&[("x", 1), ("mu", 1)])]).unwrap();
    let mu = f.gen("mu");
    assert_eq!(e, mu.mul(&f.gen("x")).sub(&mu.scale(&(iw() * Scalar::from_int(2)))));
}

#[test]
fn b_k_reorders() {
    let u = uq_g1();
    let e = u.gen("B").mul(&u.gen("K"));
    let k = u.gen("K");
    assert_eq!(e, k.mul(&u.gen("B")).add(&u.gen("M").mul(&k).scale(&iw())));
}

#[test]
fn v_x_reorders() {
    let f = fq_g1();
    let (v, x) = (f.gen("v"), f.gen("x"));
    assert_eq!(v.mul(&x), x.mul(&v).add(&v.scale(&(iw() * Scalar::from_int(2)))));
}

#[test]
fn chi_times_inverse_is_one() {
    let p = h0_presentation();
    let wm = Scalar::w() * Scalar::m();
    let one = AlgebraElement::one(&p);
    let chi = one.add(&AlgebraElement::gen(&p, "v1").scale(&wm));
    let chi_inv = one.sub(&AlgebraElement::gen(&p, "v0").scale(&wm));
    assert_eq!(chi.mul(&chi_inv), one);
    assert_eq!(chi_inv.mul(&chi), one);
}

#[test]
fn antipode_of_x() {
    let f = fq_g1();
    let s = f.antipode(&f.gen("x")).unwrap();
    assert_eq!(s, f.gen("x").neg().add(&f.gen("t").mul(&f.gen("v"))));
}

#[test]
fn coproduct_iter_examples() {
    let f = fq_g1();
    let one = f.one();
    let v = f.gen("v");
    assert_eq!(f.coproduct_iter(&v, 1), v.tensor(&one).add(&one.tensor(&v)));
    let p = f.base();
    assert_eq!(f.coproduct_iter(&one, 3), TensorElement::one(vec![p.clone(); 4]));
    let x = f.gen("x");
    let t = f.gen("t");
    let pure = |a: &AlgebraElement, b: &AlgebraElement, c: &AlgebraElement| TensorElement::pure(&[a.clone(), b.clone(), c.clone()]);
    let expected = pure(&x, &one, &one)
        .add(&pure(&one, &x, &one))
        .add(&pure(&one, &one, &x))
        .add(&pure(&v, &t, &one))
        .add(&pure(&v, &one, &t))
        .add(&pure(&one, &v, &t));
    let d = f.coproduct(&x);
    assert_eq!(f.coproduct_iter(&x, 2), expected);
    assert_eq!(f.coproduct_slot(&d, 0), expected);
}

#[test]
fn tau_examples() {
    let u = uq_g1();
    assert_eq!(u.tau(&u.gen("K")).unwrap(), AlgebraElement::gen_pow(u.base(), "K", -1));
    assert_eq!(u.tau(&u.gen("B")).unwrap(), u.gen("B").neg().sub(&u.gen("M").scale(&iw())));
    assert_eq!(u.tau(&u.one()).unwrap(), u.one());
}

#[test]
fn tau_is_conjugate_linear_and_multiplicative() {
    let u = uq_g1();
    let (b, k) = (u.gen("B"), u.gen("K"));
    let lhs = u.tau(&b.mul(&k).scale(&Scalar::i())).unwrap();
    let rhs = u.tau(&b).unwrap().mul(&u.tau(&k).unwrap()).scale(&Scalar::i().neg());
    assert_eq!(lhs, rhs);
}

#[test]
fn fq_j_generators_are_primitive() {
    let j = fq_j();
    let one = j.one();
    for g in ["muh", "xh", "th"] {
        let e = j.gen(g);
        assert_eq!(j.coproduct(&e), e.tensor(&one).add(&one.tensor(&e)));
        assert_eq!(j.tau(&e).unwrap(), e.neg());
    }
}

#[test]
fn axioms_hold_at_degree_two() {
    for h in [uq_g1(), fq_g1(), fq_j()] {
        let r = h.verify(2);
        assert!(r.passed(), "{}: {:?}", h.name(), r.failures());
    }
}

#[test]
fn antipode_on_unit() {
    let f = fq_g1();
    assert_eq!(f.antipode(&f.one()).unwrap(), f.one());
}

#[test]
fn inconsistent_table_is_rejected() {
    let f = fq_g1();
    let p = f.base().clone();
    let one = AlgebraElement::one(&p);
    // every generator primitive: breaks [x, v] = -2iw v against Δ
    let delta = |l: crate::ncalg::Letter| {
        let g = AlgebraElement::letter(&p, l);
        g.tensor(&one).add(&one.tensor(&g))
    };
    let eps = |_: crate::ncalg::Letter| Scalar::zero();
    let s = |l: crate::ncalg::Letter| AlgebraElement::letter(&p, l).neg();
    let st = |l: crate::ncalg::Letter| AlgebraElement::letter(&p, l);
    let r = HopfStructure::new("bad", &p, &delta, &eps, &s, &st);
    assert!(matches!(r, Err(HopfError::Nc(NcError::RelationNotPreserved { .. }))));
}
