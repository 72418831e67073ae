use hopfkit::cli::{parse, print};
use hopfkit::hopf::{builtin, builtin_presentation, BUILTIN_NAMES};
use hopfkit::ncalg::{AlgebraElement, Letter, Monomial};
use hopfkit::quasiinv::ChiElem;
use hopfkit::scalars::{conjugate, Scalar};
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = Scalar> {
    prop::collection::vec((-3i64..=3, -2i64..=2, 0i64..=2, 0i64..=2, 0i64..=1), 1..4).prop_map(|ts| {
        let mut acc = Scalar::zero();
        for (re, im, a, b, c) in ts {
            let coef = Scalar::from_int(re) + Scalar::from_int(im) * Scalar::i();
            let mono = Scalar::w().pow(a).unwrap() * Scalar::m().pow(b).unwrap() * Scalar::u().pow(c).unwrap();
            acc = acc + coef * mono;
        }
        acc
    })
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (small_poly(), small_poly().prop_filter("nonzero", |d| !d.is_zero())).prop_map(|(n, d)| n.div(&d).unwrap())
}

fn coeff() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        (-4i64..=4, 1i64..=3).prop_map(|(p, q)| Scalar::rational(p, q)),
        Just(Scalar::i()),
        Just(Scalar::w() * Scalar::m()),
        Just(Scalar::one().div(&(Scalar::w() * Scalar::m())).unwrap()),
        Just((Scalar::one() + Scalar::i()) * Scalar::rational(1, 2)),
        Just(Scalar::one().div(&(Scalar::w() + Scalar::u())).unwrap()),
    ]
}

fn element(name: &'static str) -> impl Strategy<Value = AlgebraElement> {
    let alg = builtin_presentation(name).unwrap();
    let n = alg.ngens();
    let word = prop::collection::vec((0..n, prop::bool::ANY), 0..4);
    prop::collection::vec((coeff(), word), 1..4).prop_map(move |terms| {
        let mut acc = AlgebraElement::zero(&alg);
        for (c, w) in terms {
            let mut t = AlgebraElement::scalar(&alg, c);
            for (g, neg) in w {
                let sign = if neg && alg.is_invertible(g) { -1 } else { 1 };
                t = t.mul(&AlgebraElement::letter(&alg, Letter::new(g, sign)));
            }
            acc = acc.add(&t);
        }
        acc
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()), Scalar::one());
        }
    }

    #[test]
    fn conjugation_is_an_involutive_automorphism(a in scalar(), b in scalar()) {
        prop_assert_eq!(conjugate(&conjugate(&a)), a.clone());
        prop_assert_eq!(conjugate(&a.mul(&b)), conjugate(&a).mul(&conjugate(&b)));
        prop_assert_eq!(conjugate(&a.add(&b)), conjugate(&a).add(&conjugate(&b)));
        prop_assert!(a.mul(&conjugate(&a)).is_real());
    }

    #[test]
    fn scalar_print_roundtrip(a in scalar()) {
        prop_assert_eq!(hopfkit::cli::parse_scalar(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn uq_associative(a in element("uq-g1"), b in element("uq-g1"), c in element("uq-g1")) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn fq_associative(a in element("fq-g1"), b in element("fq-g1"), c in element("fq-g1")) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn h0_associative(a in element("h0-irr"), b in element("h0-irr"), c in element("h0-irr")) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(ChiElem::from_h0(&a.mul(&b)), ChiElem::from_h0(&a).mul(&ChiElem::from_h0(&b)));
        prop_assert_eq!(ChiElem::from_h0(&a).to_h0(), a);
    }

    #[test]
    fn star_and_coproduct_laws(a in element("uq-g1"), b in element("uq-g1")) {
        let h = builtin("uq-g1").unwrap();
        let sa = h.star(&a).unwrap();
        prop_assert_eq!(h.star(&sa).unwrap(), a.clone());
        prop_assert_eq!(h.star(&a.mul(&b)).unwrap(), h.star(&b).unwrap().mul(&sa));
        prop_assert_eq!(h.coproduct(&a.mul(&b)), h.coproduct(&a).mul(&h.coproduct(&b)));
        prop_assert_eq!(h.antipode(&a.mul(&b)).unwrap(), h.antipode(&b).unwrap().mul(&h.antipode(&a).unwrap()));
        prop_assert_eq!(h.tau(&h.tau(&a).unwrap()).unwrap(), a);
    }

    #[test]
    fn fq_star_laws(a in element("fq-g1"), b in element("fq-g1")) {
        let h = builtin("fq-g1").unwrap();
        prop_assert_eq!(h.star(&a.mul(&b)).unwrap(), h.star(&b).unwrap().mul(&h.star(&a).unwrap()));
        prop_assert_eq!(h.counit(&a.mul(&b)), h.counit(&a).mul(&h.counit(&b)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn roundtrip_uq(a in element("uq-g1")) {
        prop_assert_eq!(parse(&print(&a), "uq-g1").unwrap().value, a);
    }

    #[test]
    fn roundtrip_fq(a in element("fq-g1")) {
        prop_assert_eq!(parse(&print(&a), "fq-g1").unwrap().value, a);
    }

    #[test]
    fn roundtrip_fq_j(a in element("fq-j")) {
        prop_assert_eq!(parse(&print(&a), "fq-j").unwrap().value, a);
    }

    #[test]
    fn roundtrip_h0(a in element("h0-irr")) {
        prop_assert_eq!(parse(&print(&a), "h0-irr").unwrap().value, a);
    }
}

#[test]
fn every_builtin_parses_its_generators() {
    for name in BUILTIN_NAMES {
        let alg = builtin_presentation(name).unwrap();
        for g in alg.generators() {
            let e = parse(&g.name, name).unwrap().value;
            assert_eq!(e, AlgebraElement::gen(&alg, &g.name));
        }
        assert_eq!(parse("0", name).unwrap().value, AlgebraElement::zero(&alg));
        let _ = Monomial::one(alg.ngens());
    }
}
