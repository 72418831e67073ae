use super::*;

fn powers_of_v(n: u32) -> Vec<AlgebraElement> {
    let f = fq_g1();
    (0..=n).map(|k| f.gen("v").pow(k)).collect()
}

#[test]
fn galilei_homogeneous_space_is_polynomials_in_v() {
    let sub = galilei_subgroup();
    let hs = sub.homogeneous_space(3, Side::Left).unwrap();
    assert_eq!(hs.basis, powers_of_v(3));
    assert!(hs.star_closed);
    let hr = sub.homogeneous_space(3, Side::Right).unwrap();
    assert_eq!(hr.basis, powers_of_v(3));
}

#[test]
fn membership_examples() {
    let sub = galilei_subgroup();
    let f = fq_g1();
    assert!(sub.membership_defect(&f.gen("v"), Side::Left).is_zero());
    let defect = sub.membership_defect(&f.gen("x"), Side::Left);
    let j = fq_j();
    assert_eq!(defect, j.gen("xh").tensor(&f.one()));
}

#[test]
fn identity_projection_has_trivial_kernel() {
    let f = fq_g1();
    let table = |l: Letter| AlgebraElement::letter(f.base(), l);
    let sub = build_subgroup(&f, &f, &table, SubgroupSide::TwoSided).unwrap();
    assert!(sub.kernel_generators().is_empty());
    assert!(sub.kernel_window(2).is_empty());
}

#[test]
fn killing_x_breaks_the_module_condition() {
    let (f, j) = (fq_g1(), fq_j());
    let table = |l: Letter| match f.base().generators()[l.gen].name.as_str() {
        "mu" => j.gen("muh"),
        "t" => j.gen("th"),
        _ => AlgebraElement::zero(j.base()),
    };
    let r = build_subgroup(&f, &j, &table, SubgroupSide::TwoSided);
    assert!(matches!(r, Err(CoisoError::NotModuleMorphism(_))), "{:?}", r.err());
}

#[test]
fn wrong_coproduct_image_is_rejected() {
    let (f, j) = (fq_g1(), fq_j());
    // v ↦ t̂ is not compatible with Δμ
    let table = |l: Letter| match f.base().generators()[l.gen].name.as_str() {
        "mu" => j.gen("muh"),
        "x" => j.gen("xh"),
        "t" => j.gen("th"),
        _ => j.gen("th"),
    };
    let r = build_subgroup(&f, &j, &table, SubgroupSide::TwoSided);
    assert!(matches!(r, Err(CoisoError::NotCoalgebraMorphism(_))), "{:?}", r.err());
}

#[test]
fn epsilon_side_examples() {
    let sub = galilei_subgroup();
    let f = fq_g1();
    let zero = AlgebraElement::zero(sub.quotient().base());
    assert_eq!(sub.epsilon_side(&f.gen("v"), Side::Left).unwrap(), zero);
    assert_eq!(sub.epsilon_side(&f.one(), Side::Left).unwrap(), sub.pi_one());
    assert_eq!(sub.epsilon_side(&f.gen("v").pow(2), Side::Left).unwrap(), zero);
    assert_eq!(sub.epsilon_side(&f.gen("v").pow(2), Side::Right).unwrap(), zero);
}

#[test]
fn pi_kills_mu_v() {
    let sub = galilei_subgroup();
    let f = fq_g1();
    assert!(sub.pi(&f.gen("mu").mul(&f.gen("v"))).is_zero());
    assert_eq!(sub.kernel_generators(), &[f.gen("v")]);
}

#[test]
fn subgroup_invariants_hold() {
    let r = galilei_subgroup().verify(3).unwrap();
    assert!(r.passed(), "{:?}", r.failures());
}
