use super::*;

fn f_mono(e: [i64; 4]) -> Monomial {
    Monomial(e.to_vec())
}

fn iw() -> Scalar {
    Scalar::i() * Scalar::w()
}

#[test]
fn closed_formula_examples_as_printed() {
    let p = Pairing::new(PairingConvention::AsPrinted, Orientation::Standard);
    for l in -3..=3 {
        let v = p.pair_closed(&DualBasisMonomial::new(0, l, 0, 0), &f_mono([0, 1, 0, 0]));
        assert_eq!(v, Scalar::w() * Scalar::from_int(l));
    }
    assert_eq!(p.pair_closed(&DualBasisMonomial::new(0, 0, 0, 1), &f_mono([0, 0, 0, 1])), Scalar::i());
    assert!(p.pair_closed(&DualBasisMonomial::new(1, 0, 0, 0), &f_mono([0, 1, 0, 0])).is_zero());
}

#[test]
fn closed_formula_hopf_convention() {
    let p = Pairing::new(PairingConvention::Hopf, Orientation::Standard);
    let v = p.pair_closed(&DualBasisMonomial::new(0, 2, 0, 0), &f_mono([0, 1, 0, 0]));
    assert_eq!(v, iw() * Scalar::from_int(2));
    assert_eq!(p.pair_closed(&DualBasisMonomial::new(0, 5, 0, 0), &f_mono([0, 0, 0, 0])), Scalar::one());
}

#[test]
fn dual_basis_round_trip() {
    let u = uq_g1();
    let b = u.gen("B");
    let k = u.gen("K");
    let x = b.mul(&k).mul(&b).add(&u.gen("M").mul(&u.gen("T")));
    let back = to_dual_basis(&x)
        .into_iter()
        .fold(AlgebraElement::zero(u.base()), |acc, (d, c)| acc.add(&d.to_uq().scale(&c)));
    assert_eq!(back, x);
}

#[test]
fn pair_examples() {
    let p = Pairing::galilei();
    let (u, f) = (p.uq().clone(), p.fq().clone());
    let v = f.gen("v");
    assert_eq!(p.pair(&u.gen("B"), &v), Scalar::i());
    assert_eq!(p.pair(&u.gen("B").mul(&u.gen("K")), &v), Scalar::i());
    assert_eq!(p.pair(&u.one(), &f.one()), Scalar::one());
}

#[test]
fn k_acts_on_x() {
    let f = fq_g1();
    let u = uq_g1();
    let x = f.gen("x");
    let k = u.gen("K");
    let hopf = Pairing::galilei();
    assert_eq!(hopf.act(&k, &x, Side::Left), x.add(&f.one().scale(&iw())));
    let printed = Pairing::new(PairingConvention::AsPrinted, Orientation::Standard);
    assert_eq!(printed.act(&k, &x, Side::Left), x.add(&f.one().scale(&Scalar::w())));
    let a = f.gen("mu").mul(&x);
    assert_eq!(hopf.act(&u.one(), &a, Side::Left), a);
    assert_eq!(hopf.act(&u.one(), &a, Side::Right), a);
}

#[test]
fn standard_orientation_is_selected() {
    for c in [PairingConvention::Hopf, PairingConvention::AsPrinted] {
        let (o, diag) = select_orientation(c);
        assert_eq!(o, Orientation::Standard);
        assert!(diag.is_none());
    }
}

#[test]
fn hopf_convention_satisfies_the_laws() {
    let r = Pairing::galilei().verify_laws(2);
    assert!(r.passed(), "{:?}", r.failures());
}

#[test]
fn printed_factor_breaks_the_laws() {
    let p = Pairing::new(PairingConvention::AsPrinted, Orientation::Standard);
    let r = p.verify_laws(2);
    let star = r.entry("star").unwrap();
    assert!(star.witness.is_some());
    assert!(!r.passed());
}

#[test]
fn action_star_identity_on_generators() {
    let p = Pairing::galilei();
    let (u, f) = (p.uq().clone(), p.fq().clone());
    for x in ["M", "K", "T", "B"] {
        for a in ["mu", "x", "v"] {
            let xe = u.gen(x);
            let ae = f.gen(a);
            let lhs = f.star(&p.act(&u.star(&xe).unwrap(), &ae, Side::Left)).unwrap();
            let rhs = p.act(&u.antipode_inv(&xe).unwrap(), &f.star(&ae).unwrap(), Side::Left);
            assert_eq!(lhs, rhs, "{x} {a}");
        }
    }
}
