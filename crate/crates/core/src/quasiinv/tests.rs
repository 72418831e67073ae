use super::*;

fn wm() -> Scalar {
    Scalar::w() * Scalar::m()
}

fn iwm() -> Scalar {
    Scalar::i() * wm()
}

fn gen(name: &str) -> AlgebraElement {
    uq_g1().gen(name)
}

fn mono(name: &str, e: i64) -> Monomial {
    let alg = uq_g1().base().clone();
    AlgebraElement::gen_pow(&alg, name, e).terms().next().unwrap().0.clone()
}

#[test]
fn galilei_weight_examples() {
    assert_eq!(galilei_weight(&gen("K")), ChiElem::one());
    assert_eq!(galilei_weight(&uq_g1().one()), ChiElem::one());
    let half = Scalar::rational(1, 2);
    assert_eq!(galilei_weight(&gen("B")), ChiElem::term(1, iwm() * half));
    let b2 = gen("B").pow(2);
    assert_eq!(galilei_weight(&b2), ChiElem::term(2, Scalar::rational(-3, 4) * wm() * wm()));
    assert_eq!(galilei_weight(&gen("T")), ChiElem::zero());
    assert_eq!(galilei_weight(&gen("M")), ChiElem::zero());
}

#[test]
fn c_n_recurrence() {
    // c_n = binomial(2n, n) (wm/4)^n
    assert_eq!(c_n(0), Scalar::one());
    for n in 1..8u32 {
        let lhs = Scalar::from_int(n as i64) * c_n(n);
        let rhs = wm() * Scalar::rational(2 * n as i64 - 1, 2) * c_n(n - 1);
        assert_eq!(lhs, rhs);
        let binom: i64 = (1..=n as i64).fold(1, |acc, k| acc * (n as i64 + k) / k);
        let oracle = Scalar::from_int(binom) * (wm() * Scalar::rational(1, 4)).pow(n as i64).unwrap();
        assert_eq!(c_n(n), oracle);
    }
}

#[test]
fn nu_on_v_powers() {
    let inv = |k: i64| wm().pow(-k).unwrap();
    assert_eq!(nu_w(&ChiElem::v0().pow(3)), inv(3));
    assert_eq!(nu_w(&ChiElem::v1().pow(2)), inv(2));
    assert_eq!(nu_w(&ChiElem::chi_pow(2)), Scalar::zero());
    assert_eq!(nu_w(&ChiElem::one()), Scalar::one());
}

#[test]
fn galilei_is_a_cocycle() {
    let alg = H0Module::left();
    let xs = uq_window(2);
    let r = cocycle_check(&alg, &GalileiWeight::new(), &pairs_of(&xs, &xs));
    assert!(r.passed(), "{:?}", r.failures());
}

#[test]
fn galilei_quasi_invariance_left() {
    let alg = H0Module::left();
    let xs = uq_window(2);
    let basis = chi_window(5);
    for form in [CheckForm::Def, CheckForm::Lemma] {
        let r = quasi_invariance_check(&alg, &ChiFunctional::nu(), &GalileiWeight::new(), &xs, &basis, form);
        assert!(r.passed(), "{:?} {:?}", form, r.failures());
    }
}

#[test]
fn galilei_quasi_invariance_right_mirror() {
    let alg = H0Module::right();
    let xs = uq_window(2);
    let basis = chi_window(5);
    let pairs = pairs_of(&xs, &xs);
    assert!(cocycle_check(&alg, &GalileiWeight::new(), &pairs).passed());
    for form in [CheckForm::Def, CheckForm::Lemma] {
        let r = quasi_invariance_check(&alg, &ChiFunctional::nu(), &GalileiWeight::new(), &xs, &basis, form);
        assert!(r.passed(), "{:?} {:?}", form, r.failures());
    }
}

#[test]
fn epsilon_weight_fails_for_nu() {
    let alg = H0Module::left();
    let xs = uq_generators();
    let basis = chi_window(3);
    for form in [CheckForm::Def, CheckForm::Lemma] {
        let r = quasi_invariance_check(&alg, &ChiFunctional::nu(), &EpsilonWeight, &xs, &basis, form);
        assert!(!r.passed());
    }
}

#[test]
fn h0_is_a_module_star_algebra() {
    let xs = uq_window(2);
    let basis = chi_window(2);
    for alg in [H0Module::left(), H0Module::right()] {
        let r = module_algebra_check(&alg, &xs, &basis);
        assert!(r.passed(), "{:?}", r.failures());
    }
}

#[test]
fn transformed_weight_by_chi() {
    let alg = H0Module::left();
    let phi: Arc<dyn Weight<H0Module>> = Arc::new(GalileiWeight::new());
    let t = transform_weight(&alg, phi, &ChiElem::chi_pow(1)).unwrap();
    let b = mono("B", 1);
    assert_eq!(t.eval_monomial(&alg, &b), ChiElem::term(1, iwm() * Scalar::rational(3, 2)));
    let xs = uq_window(2);
    assert!(cocycle_check(&alg, &t, &pairs_of(&xs, &xs)).passed());
    let h1 = ChiFunctional::nu().conjugated(&ChiElem::chi_pow(1));
    for form in [CheckForm::Def, CheckForm::Lemma] {
        let r = quasi_invariance_check(&alg, &h1, &t, &xs, &chi_window(4), form);
        assert!(r.passed(), "{:?}", r.failures());
    }
    assert!(matches!(
        transform_weight(&alg, Arc::new(GalileiWeight::new()), &ChiElem::zero()),
        Err(QiError::NotInvertible(_))
    ));
}

#[test]
fn galilei_is_not_a_coboundary() {
    for l in 0..=8 {
        match essential_invariance_decide(&GalileiWeight::new(), l) {
            EssentialInvariance::Refuted { window, b_factors } => {
                assert_eq!(window, l);
                assert_eq!(b_factors.len() as i64, 2 * l + 1);
                for (ell, f) in b_factors {
                    assert_eq!(f, iwm() * Scalar::rational(2 * ell - 1, 2));
                }
            }
            other => panic!("window {}: {:?}", l, other),
        }
    }
}

#[test]
fn coboundaries_are_recognized() {
    assert_eq!(
        essential_invariance_decide(&EpsilonWeight, 2),
        EssentialInvariance::Coboundary { xi: ChiElem::one() }
    );
    let alg = H0Module::left();
    let t = transform_weight(&alg, Arc::new(EpsilonWeight), &ChiElem::chi_pow(1)).unwrap();
    match essential_invariance_decide(&t, 2) {
        EssentialInvariance::Coboundary { xi } => assert_eq!(xi.support(), Some((1, 1))),
        other => panic!("{:?}", other),
    }
}

#[test]
fn d1_of_d0_vanishes() {
    let xs = uq_window(2);
    let pairs = pairs_of(&xs, &xs);
    let h0 = H0Module::left();
    for xi in [ChiElem::chi_pow(1), ChiElem::chi_pow(-3)] {
        assert!(d1_d0_check(&h0, &xi, &pairs).unwrap().passed());
    }
    let xi = ChiElem::one().add(&ChiElem::chi_pow(1));
    assert!(matches!(d1_d0_check(&h0, &xi, &pairs), Err(QiError::NotInvertible(_))));
    let loc = LocalizedH0::new(xi);
    let r = d1_d0_check(&loc, &loc.xi(), &pairs).unwrap();
    assert!(r.passed(), "{:?}", r.failures());
}

#[test]
fn translation_requires_tau_real_group_like() {
    let alg = H0Module::left();
    let h: Arc<dyn Functional<H0Module>> = Arc::new(ChiFunctional::nu());
    let phi: Arc<dyn Weight<H0Module>> = Arc::new(GalileiWeight::new());
    assert!(matches!(
        translate_functional(h.clone(), phi.clone(), &gen("K")),
        Err(QiError::NotTauReal(..))
    ));
    assert!(matches!(
        translate_functional(h.clone(), phi.clone(), &gen("B")),
        Err(QiError::NotGroupLike(_))
    ));
    let (hk, phik) = translate_functional(h, phi, &uq_g1().one()).unwrap();
    let xs = uq_window(2);
    let r = quasi_invariance_check(&alg, &hk, &phik, &xs, &chi_window(3), CheckForm::Def);
    assert!(r.passed());
    let (gl, real) = group_like_scan(3);
    assert_eq!(gl.len(), 7);
    assert_eq!(real, vec![Monomial::one(4)]);
}

#[test]
fn regular_module_is_a_module_star_algebra() {
    let f = crate::hopf::fq_g1();
    let basis: Vec<AlgebraElement> = ["mu", "x", "t", "v"].iter().map(|g| f.gen(g)).collect();
    let xs = uq_generators();
    for side in [Side::Left, Side::Right] {
        let r = module_algebra_check(&RegularModule::new(side), &xs, &basis);
        assert!(r.passed(), "{:?}", r.failures());
    }
}
