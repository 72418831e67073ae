use super::*;
use crate::coiso::galilei_subgroup;
use crate::hopf::fq_g1;
use crate::quasiinv::{chi_window, uq_generators, uq_window, ChiElem, ChiFunctional, EpsilonWeight, GalileiWeight, H0Module, RegularModule};

fn wm() -> Scalar {
    Scalar::w() * Scalar::m()
}

#[test]
fn trivial_ind_space_is_homogeneous_space() {
    let sub = galilei_subgroup();
    for side in [Side::Left, Side::Right] {
        let rho = Corepresentation::trivial(&sub, side);
        assert!(rho.is_unitary(&sub).unwrap());
        for d in 0..=3 {
            let ind = ind_space(&sub, &rho, d).unwrap();
            let hs = sub.homogeneous_space(d, side).unwrap();
            let got: Vec<AlgebraElement> = ind.basis.iter().map(|a| a.comps[0].clone()).collect();
            assert_eq!(got.len(), hs.basis.len());
            for g in &got {
                assert!(hs.contains(g), "{}", g);
            }
        }
    }
}

#[test]
fn ind_space_degree_zero() {
    let sub = galilei_subgroup();
    let rho = Corepresentation::trivial(&sub, Side::Left);
    let ind = ind_space(&sub, &rho, 0).unwrap();
    assert_eq!(ind.basis, vec![IndElement::new(Side::Left, vec![fq_g1().one()])]);
}

#[test]
fn ind_space_is_a_module() {
    let sub = galilei_subgroup();
    let f = fq_g1();
    for side in [Side::Left, Side::Right] {
        let rho = Corepresentation::trivial(&sub, side);
        let ind = ind_space(&sub, &rho, 2).unwrap();
        let ring = vec![f.gen("v"), f.gen("v").pow(2)];
        assert_eq!(module_closure_witness(&sub, &rho, &ind, &ring), None);
        let a = IndElement::new(side, vec![f.gen("v")]);
        assert!(is_member(&sub, &rho, &a.module_mul(&f.gen("v"))));
        assert!(!is_member(&sub, &rho, &IndElement::new(side, vec![f.gen("x")])));
    }
}

#[test]
fn sesq_form_examples() {
    let sub = galilei_subgroup();
    let f = fq_g1();
    let one = IndElement::new(Side::Left, vec![f.one()]);
    assert_eq!(sesq_form(&sub, &one, &one).unwrap(), f.one());
    let a = IndElement::new(Side::Left, vec![f.gen("v")]);
    let b = IndElement::new(Side::Left, vec![f.gen("v").pow(2)]);
    let s = sesq_form(&sub, &a, &b).unwrap();
    assert_eq!(s, f.gen("v").pow(3));
    assert!(sub.membership_defect(&s, Side::Left).is_zero());
    let r = IndElement::new(Side::Right, vec![f.gen("v")]);
    assert_eq!(sesq_form(&sub, &a, &r), Err(InduceError::SideMismatch));
}

#[test]
fn sesq_identities_on_basis() {
    let sub = galilei_subgroup();
    for side in [Side::Left, Side::Right] {
        let rho = Corepresentation::trivial(&sub, side);
        for a in ind_space(&sub, &rho, 3).unwrap().basis {
            for t in sesq_identity_residual(&sub, &rho, &a).unwrap() {
                assert!(t.is_zero(), "{:?} {}: {}", side, a, t);
            }
        }
    }
}

#[test]
fn non_corepresentation_is_rejected() {
    let sub = galilei_subgroup();
    let f = fq_g1();
    assert!(matches!(
        Corepresentation::new(&sub, Side::Left, vec![vec![f.gen("x")]]),
        Err(InduceError::NotCorepresentation(_))
    ));
}

#[test]
fn rho_tilde_on_regular_module() {
    let f = fq_g1();
    let u = uq_g1();
    let alg = RegularModule::new(Side::Left);
    let one = vec![f.one()];
    assert_eq!(rho_tilde_generic(&alg, &u.one(), &one, &EpsilonWeight), one);
    let v2 = vec![f.gen("v").pow(2)];
    let k = u.gen("K");
    assert_eq!(rho_tilde_generic(&alg, &k, &v2, &EpsilonWeight), vec![alg.act(&k, &v2[0])]);
    let (b, kk) = (u.gen("B"), u.gen("K"));
    let lhs = rho_tilde_generic(&alg, &b.mul(&kk), &one, &EpsilonWeight);
    let rhs = rho_tilde_generic(&alg, &b, &rho_tilde_generic(&alg, &kk, &one, &EpsilonWeight), &EpsilonWeight);
    assert_eq!(lhs, rhs);
    let ralg = RegularModule::new(Side::Right);
    assert_eq!(lambda_tilde_generic(&ralg, &k, &v2, &EpsilonWeight), vec![ralg.act(&k, &v2[0])]);
}

#[test]
fn rho_tilde_preserves_ind() {
    let sub = galilei_subgroup();
    let u = uq_g1();
    for side in [Side::Left, Side::Right] {
        let rho = Corepresentation::trivial(&sub, side);
        let alg = RegularModule::new(side);
        for a in ind_space(&sub, &rho, 2).unwrap().basis {
            for g in ["K", "B", "T", "M"] {
                let out = rho_tilde_generic(&alg, &u.gen(g), &a.comps, &EpsilonWeight);
                assert!(is_member(&sub, &rho, &IndElement::new(side, out)), "{} on {}", g, a);
            }
        }
    }
}

#[test]
fn generic_rep_on_h0_is_unitary() {
    let vectors: Vec<Vec<ChiElem>> = chi_window(3).into_iter().map(|c| vec![c]).collect();
    let xs = uq_window(2);
    for alg in [H0Module::left(), H0Module::right()] {
        let r = generic_rep_check(&alg, &ChiFunctional::nu(), &GalileiWeight::new(), &xs, &vectors);
        assert!(r.passed(), "{:?}", r.failures());
    }
    let b = uq_g1().gen("B");
    let out = rho_tilde_generic(&H0Module::left(), &b, &[ChiElem::chi_pow(2)], &GalileiWeight::new());
    let iwm = Scalar::i() * wm();
    assert_eq!(out, vec![ChiElem::term(3, iwm * Scalar::rational(5, 2))]);
}

#[test]
fn galilei_rep_examples() {
    let iwm = Scalar::i() * wm();
    let v0 = GalileiVector::basis(0);
    assert_eq!(galilei_rep(GalileiOp::B, &v0), v0.scale(&(iwm * Scalar::rational(1, 2))));
    let k = Scalar::one().div(&(Scalar::from_int(2) * Scalar::w() * Scalar::w() * Scalar::m())).unwrap();
    let expect = v0
        .scale(&Scalar::u())
        .sub(&v0.scale(&Scalar::from_int(2)).sub(&GalileiVector::basis(1)).sub(&GalileiVector::basis(-1)).scale(&k));
    assert_eq!(galilei_rep(GalileiOp::T, &v0), expect);
    for l in -3..=3 {
        let v = GalileiVector::basis(l);
        let bt = galilei_rep(GalileiOp::B, &galilei_rep(GalileiOp::T, &v))
            .sub(&galilei_rep(GalileiOp::T, &galilei_rep(GalileiOp::B, &v)));
        let c = Scalar::i().div(&(Scalar::from_int(2) * Scalar::w())).unwrap();
        assert_eq!(bt, GalileiVector::basis(l + 1).sub(&GalileiVector::basis(l - 1)).scale(&c));
    }
    assert_eq!(galilei_rep(GalileiOp::KInv, &v0), GalileiVector::basis(-1));
}

#[test]
fn forms_examples() {
    let b = GalileiVector::basis;
    assert_eq!(minkowski_form(&b(-1), &b(0)), Scalar::one());
    assert_eq!(minkowski_form(&b(0), &b(0)), Scalar::zero());
    assert_eq!(j_structure(&b(0)), b(-1));
    assert_eq!(j_structure(&j_structure(&b(0))), b(0));
    assert_eq!(scalar_product(&b(2), &b(2)), Scalar::one());
    assert_eq!(minkowski_form(&b(2), &b(-3)), Scalar::one());
    assert_eq!(scalar_product(&j_structure(&b(2)), &b(-3)), Scalar::one());
    let i = Scalar::i();
    assert_eq!(minkowski_form(&b(0).scale(&i), &b(-1)), -i.clone());
    for l in -2..=2 {
        let n = -l - 1;
        let lhs = minkowski_form(&b(l), &galilei_rep(GalileiOp::B, &b(n)));
        let rhs = minkowski_form(&galilei_rep(GalileiOp::B, &b(l)), &b(n));
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn galilei_batteries_pass() {
    for r in [relations_check(5), unitarity_check(5), jform_check(5), intertwiner_check(4)] {
        assert!(r.passed(), "{}: {:?}", r.suite, r.failures());
    }
    assert_eq!(unitarity_check(5).entry("unitarity").unwrap().cases, 5 * 11 * 11);
}

#[test]
fn intertwiner_identity_and_errors() {
    let v = GalileiVector::basis(3);
    assert_eq!(equivalence_intertwiner(&ChiElem::one(), &v).unwrap(), v);
    let bad = ChiElem::one().add(&ChiElem::chi_pow(1));
    assert!(matches!(equivalence_intertwiner(&bad, &v), Err(InduceError::NotInvertible(_))));
}

#[test]
fn matrix_of_k_is_a_shift() {
    let m = galilei_matrix(&uq_g1().gen("K"), 2);
    for (r, row) in m.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            assert_eq!(*x, Scalar::from_int((r == c + 1) as i64));
        }
    }
    let _ = uq_generators();
}
