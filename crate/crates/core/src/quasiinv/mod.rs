//! Quasi-invariant functionals, weight cocycles and their cohomology, with the Galilei
//! functional ν_w and weight φ on H_0^irr as the main instance.

mod chi;
mod module;

use std::sync::Arc;

use thiserror::Error;

use crate::hopf::{uq_g1, HopfStructure};
use crate::ncalg::{AlgebraElement, LinearSystem, Monomial};
use crate::pairing::{Pairing, Side};
use crate::report::{first_failure, CheckReport};
use crate::scalars::Scalar;

pub use chi::{nu_w, ChiElem};
pub use module::{b_derivation, H0Module, LocalElem, LocalizedH0, ModuleAlgebra, RegularModule};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QiError {
    #[error("{0} is not invertible in the window")]
    NotInvertible(String),
    #[error("{0} is not group-like")]
    NotGroupLike(String),
    #[error("τ({0}) = {1} differs from {0}")]
    NotTauReal(String, String),
}

fn u() -> Arc<HopfStructure> {
    uq_g1()
}

fn u_el(m: &Monomial) -> AlgebraElement {
    AlgebraElement::monomial(u().base(), m.clone())
}

fn u_str(m: &Monomial) -> String {
    u().base().monomial_string(m)
}

/// Sweedler legs of a U monomial: `(coefficient, X_(1), X_(2))`.
fn legs(x: &Monomial) -> Vec<(Scalar, Monomial, Monomial)> {
    u().coproduct_monomial(x).terms().map(|(k, c)| (c.clone(), k[0].clone(), k[1].clone())).collect()
}

/// A weight `U_q(G(1)) → A`, given on normal monomials and extended linearly.
pub trait Weight<A: ModuleAlgebra>: Send + Sync {
    fn name(&self) -> String;
    fn eval_monomial(&self, alg: &A, x: &Monomial) -> A::Elem;
}

pub fn weight_of<A: ModuleAlgebra>(alg: &A, w: &dyn Weight<A>, x: &AlgebraElement) -> A::Elem {
    let mut acc = alg.zero();
    for (m, c) in x.terms() {
        acc = alg.add(&acc, &alg.scale(&w.eval_monomial(alg, m), c));
    }
    acc
}

/// A linear functional on a module algebra.
pub trait Functional<A: ModuleAlgebra>: Send + Sync {
    fn name(&self) -> String;
    fn eval(&self, alg: &A, a: &A::Elem) -> Scalar;
}

/// Module algebras that contain H_0^irr in the χ basis.
pub trait ChiTarget: ModuleAlgebra {
    fn embed_chi(&self, c: &ChiElem) -> Self::Elem;
}

impl ChiTarget for H0Module {
    fn embed_chi(&self, c: &ChiElem) -> ChiElem {
        c.clone()
    }
}

impl ChiTarget for LocalizedH0 {
    fn embed_chi(&self, c: &ChiElem) -> LocalElem {
        self.embed(c)
    }
}

/// `c_n = (wm/2)^n (2n-1)!! / n!`.
pub fn c_n(n: u32) -> Scalar {
    let half = Scalar::w() * Scalar::m() * Scalar::rational(1, 2);
    let dfact: i64 = (1..=n as i64).map(|k| 2 * k - 1).product();
    let fact: i64 = (1..=n as i64).product();
    half.pow(n as i64).expect("nonnegative") * Scalar::rational(dfact, fact)
}

/// The Galilei weight `φ[X] = ε(X) + Σ_n c_n ⟨X, v^n⟩ χ^n`.
#[derive(Clone)]
pub struct GalileiWeight {
    pairing: Arc<Pairing>,
}

impl Default for GalileiWeight {
    fn default() -> Self {
        GalileiWeight { pairing: Pairing::galilei() }
    }
}

impl GalileiWeight {
    pub fn new() -> Self {
        Self::default()
    }

    /// φ on a monomial in the χ basis. The series stops at the B-degree of `x`.
    pub fn chi_value(&self, x: &Monomial) -> ChiElem {
        let uq = u();
        let f = self.pairing.fq().clone();
        let mut out = ChiElem::scalar(uq.counit_monomial(x));
        let nmax = x.exps()[3] as u32;
        for n in 1..=nmax {
            let vn = f.gen("v").pow(n);
            let p = self.pairing.pair(&u_el(x), &vn);
            if !p.is_zero() {
                out = out.add(&ChiElem::term(n as i64, c_n(n).mul(&p)));
            }
        }
        out
    }
}

impl<A: ChiTarget> Weight<A> for GalileiWeight {
    fn name(&self) -> String {
        "galilei".into()
    }
    fn eval_monomial(&self, alg: &A, x: &Monomial) -> A::Elem {
        alg.embed_chi(&self.chi_value(x))
    }
}

/// φ on a U element under the Galilei weight.
pub fn galilei_weight(x: &AlgebraElement) -> ChiElem {
    weight_of(&H0Module::left(), &GalileiWeight::new(), x)
}

/// The invariant weight `φ[X] = ε(X) 1`.
#[derive(Clone, Copy, Default)]
pub struct EpsilonWeight;

impl<A: ModuleAlgebra> Weight<A> for EpsilonWeight {
    fn name(&self) -> String {
        "epsilon".into()
    }
    fn eval_monomial(&self, alg: &A, x: &Monomial) -> A::Elem {
        alg.scale(&alg.one(), &u().counit_monomial(x))
    }
}

/// d₀ξ: `X.ξ ξ^{-1}` (left) or `ξ^{-1} ξ.X` (right).
pub struct Coboundary<A: ModuleAlgebra> {
    pub xi: A::Elem,
    xi_inv: A::Elem,
}

impl<A: ModuleAlgebra> Weight<A> for Coboundary<A> {
    fn name(&self) -> String {
        format!("d0({})", self.xi)
    }
    fn eval_monomial(&self, alg: &A, x: &Monomial) -> A::Elem {
        let moved = alg.act_monomial(x, &self.xi);
        match alg.side() {
            Side::Left => alg.mul(&moved, &self.xi_inv),
            Side::Right => alg.mul(&self.xi_inv, &moved),
        }
    }
}

/// `d₀(ξ)`; fails when ξ has no inverse in `alg`.
pub fn d0<A: ModuleAlgebra>(alg: &A, xi: &A::Elem) -> Result<Coboundary<A>, QiError> {
    let xi_inv = alg.inverse(xi).ok_or_else(|| QiError::NotInvertible(xi.to_string()))?;
    Ok(Coboundary { xi: xi.clone(), xi_inv })
}

/// The weight of an equivalent functional: `φ₁[X] = Σ X_(1).ξ φ₂[X_(2)] ξ^{-1}`.
pub struct Transformed<A: ModuleAlgebra> {
    base: Arc<dyn Weight<A>>,
    xi: A::Elem,
    xi_inv: A::Elem,
}

impl<A: ModuleAlgebra> Weight<A> for Transformed<A> {
    fn name(&self) -> String {
        format!("{} transformed by {}", self.base.name(), self.xi)
    }
    fn eval_monomial(&self, alg: &A, x: &Monomial) -> A::Elem {
        let mut acc = alg.zero();
        for (c, x1, x2) in legs(x) {
            let t = alg.mul(&alg.mul(&alg.act_monomial(&x1, &self.xi), &self.base.eval_monomial(alg, &x2)), &self.xi_inv);
            acc = alg.add(&acc, &alg.scale(&t, &c));
        }
        acc
    }
}

pub fn transform_weight<A: ModuleAlgebra>(
    alg: &A,
    phi: Arc<dyn Weight<A>>,
    xi: &A::Elem,
) -> Result<Transformed<A>, QiError> {
    assert_eq!(alg.side(), Side::Left, "transform_weight is stated for left homogeneous spaces");
    let xi_inv = alg.inverse(xi).ok_or_else(|| QiError::NotInvertible(xi.to_string()))?;
    Ok(Transformed { base: phi, xi: xi.clone(), xi_inv })
}

/// Weight of a translated functional: `φ_k[X] = φ[X S(k)] S(k).φ[k]`.
pub struct TranslatedWeight<A: ModuleAlgebra> {
    base: Arc<dyn Weight<A>>,
    k: AlgebraElement,
}

impl<A: ModuleAlgebra> Weight<A> for TranslatedWeight<A> {
    fn name(&self) -> String {
        format!("{} translated by {}", self.base.name(), self.k)
    }
    fn eval_monomial(&self, alg: &A, x: &Monomial) -> A::Elem {
        let uq = u();
        let sk = uq.antipode(&self.k).expect("antipode");
        let first = weight_of(alg, self.base.as_ref(), &u_el(x).mul(&sk));
        let second = alg.act(&sk, &weight_of(alg, self.base.as_ref(), &self.k));
        alg.mul(&first, &second)
    }
}

/// `ν_w(pre · a · post)`; `pre = post = 1` is ν_w itself.
#[derive(Clone, Debug)]
pub struct ChiFunctional {
    pub pre: ChiElem,
    pub post: ChiElem,
}

impl ChiFunctional {
    pub fn nu() -> Self {
        ChiFunctional { pre: ChiElem::one(), post: ChiElem::one() }
    }

    /// `a ↦ h(ξ* a ξ)` for `h = ν_w(pre · _ · post)`.
    pub fn conjugated(&self, xi: &ChiElem) -> Self {
        ChiFunctional { pre: self.pre.mul(&xi.star()), post: xi.mul(&self.post) }
    }
}

impl Functional<H0Module> for ChiFunctional {
    fn name(&self) -> String {
        if self.pre == ChiElem::one() && self.post == ChiElem::one() {
            "nu_w".into()
        } else {
            format!("nu_w(({}) a ({}))", self.pre, self.post)
        }
    }
    fn eval(&self, _: &H0Module, a: &ChiElem) -> Scalar {
        nu_w(&self.pre.mul(a).mul(&self.post))
    }
}

/// `h_k(a) = h(k.a)`.
pub struct Translated<A: ModuleAlgebra> {
    h: Arc<dyn Functional<A>>,
    k: AlgebraElement,
}

impl<A: ModuleAlgebra> Functional<A> for Translated<A> {
    fn name(&self) -> String {
        format!("{} translated by {}", self.h.name(), self.k)
    }
    fn eval(&self, alg: &A, a: &A::Elem) -> Scalar {
        self.h.eval(alg, &alg.act(&self.k, a))
    }
}

/// Checks Δk = k⊗k and τ(k) = k.
pub fn check_tau_real_group_like(k: &AlgebraElement) -> Result<(), QiError> {
    let uq = u();
    if k.is_zero() || uq.coproduct(k) != k.tensor(k) {
        return Err(QiError::NotGroupLike(k.to_string()));
    }
    let t = uq.tau(k).expect("uq-g1 has τ");
    if &t != k {
        return Err(QiError::NotTauReal(k.to_string(), t.to_string()));
    }
    Ok(())
}

/// `h_k` together with its weight `φ_k`.
pub fn translate_functional<A: ModuleAlgebra>(
    h: Arc<dyn Functional<A>>,
    phi: Arc<dyn Weight<A>>,
    k: &AlgebraElement,
) -> Result<(Translated<A>, TranslatedWeight<A>), QiError> {
    check_tau_real_group_like(k)?;
    Ok((Translated { h, k: k.clone() }, TranslatedWeight { base: phi, k: k.clone() }))
}

/// Group-like monomials in the window of total degree ≤ `degree`, and those fixed by τ.
pub fn group_like_scan(degree: u32) -> (Vec<Monomial>, Vec<Monomial>) {
    let uq = u();
    let mut gl = Vec::new();
    let mut real = Vec::new();
    for m in uq.window(degree) {
        let e = u_el(&m);
        if uq.coproduct(&e) == e.tensor(&e) {
            if uq.tau(&e).expect("τ") == e {
                real.push(m.clone());
            }
            gl.push(m);
        }
    }
    (gl, real)
}

/// `d₁(φ)[X⊗Y] = φ[XY] − Σ X_(1).φ[Y] φ[X_(2)]`, or for right modules
/// `ψ[XY] − Σ ψ[Y_(1)] ψ[X].Y_(2)`.
pub fn d1<A: ModuleAlgebra>(alg: &A, phi: &dyn Weight<A>, x: &Monomial, y: &Monomial) -> A::Elem {
    let xy = u_el(x).mul(&u_el(y));
    let lhs = weight_of(alg, phi, &xy);
    let mut rhs = alg.zero();
    match alg.side() {
        Side::Left => {
            let py = phi.eval_monomial(alg, y);
            for (c, x1, x2) in legs(x) {
                let t = alg.mul(&alg.act_monomial(&x1, &py), &phi.eval_monomial(alg, &x2));
                rhs = alg.add(&rhs, &alg.scale(&t, &c));
            }
        }
        Side::Right => {
            let px = phi.eval_monomial(alg, x);
            for (c, y1, y2) in legs(y) {
                let t = alg.mul(&phi.eval_monomial(alg, &y1), &alg.act_monomial(&y2, &px));
                rhs = alg.add(&rhs, &alg.scale(&t, &c));
            }
        }
    }
    alg.sub(&lhs, &rhs)
}

/// The cocycle law on all pairs `(X, Y)`, plus `φ[1] = 1`.
pub fn cocycle_check<A: ModuleAlgebra>(alg: &A, phi: &dyn Weight<A>, pairs: &[(Monomial, Monomial)]) -> CheckReport {
    let mut r = CheckReport::new("cocycle", &alg.name()).param("weight", phi.name()).param("pairs", pairs.len());
    let one = Monomial::one(u().base().ngens());
    let unit = phi.eval_monomial(alg, &one);
    r.record("weight-unit", "φ[1] = 1", 1, (unit != alg.one()).then(|| unit.to_string()));
    r.record("cocycle", "d₁(φ) = 0: φ[XY] = Σ X_(1).φ[Y] φ[X_(2)]", pairs.len(), first_failure(pairs, |(x, y)| {
        let d = d1(alg, phi, x, y);
        (!alg.is_zero(&d)).then(|| format!("X={} Y={}: {}", u_str(x), u_str(y), d))
    }));
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckForm {
    /// The defining relation of quasi-invariance.
    Def,
    /// The equivalent condition with φ on the right.
    Lemma,
}

/// Evaluates both sides of the chosen quasi-invariance relation for one `(X, a)`.
pub fn quasi_invariance_sides<A: ModuleAlgebra>(
    alg: &A,
    h: &dyn Functional<A>,
    phi: &dyn Weight<A>,
    x: &Monomial,
    a: &A::Elem,
    form: CheckForm,
) -> (Scalar, Scalar) {
    let uq = u();
    let xe = u_el(x);
    let w = |e: &AlgebraElement| weight_of(alg, phi, e);
    let star_u = |e: &AlgebraElement| uq.star(e).expect("uq-g1 has *");
    let s_u = |m: &Monomial| uq.antipode_monomial(m).expect("uq-g1 has S");
    let mut sum = Scalar::zero();
    match (alg.side(), form) {
        (Side::Left, CheckForm::Def) => {
            let lhs = h.eval(alg, &alg.act_monomial(x, a));
            for (c, x1, x2) in legs(x) {
                let left = alg.star(&w(&star_u(&u_el(&x1))));
                let t = alg.mul(&alg.mul(&left, a), &w(&s_u(&x2)));
                sum = sum.add(&c.mul(&h.eval(alg, &t)));
            }
            (lhs, sum)
        }
        (Side::Left, CheckForm::Lemma) => {
            for (c, x1, x2) in legs(x) {
                let t = alg.mul(&alg.act_monomial(&x1, a), &phi.eval_monomial(alg, &x2));
                sum = sum.add(&c.mul(&h.eval(alg, &t)));
            }
            let rhs = h.eval(alg, &alg.mul(&alg.star(&w(&star_u(&xe))), a));
            (sum, rhs)
        }
        (Side::Right, CheckForm::Def) => {
            let lhs = h.eval(alg, &alg.act_monomial(x, a));
            for (c, x1, x2) in legs(x) {
                let right = alg.star(&w(&star_u(&u_el(&x2))));
                let t = alg.mul(&alg.mul(&w(&s_u(&x1)), a), &right);
                sum = sum.add(&c.mul(&h.eval(alg, &t)));
            }
            (lhs, sum)
        }
        (Side::Right, CheckForm::Lemma) => {
            for (c, x1, x2) in legs(x) {
                let t = alg.mul(&phi.eval_monomial(alg, &x1), &alg.act_monomial(&x2, a));
                sum = sum.add(&c.mul(&h.eval(alg, &t)));
            }
            let rhs = h.eval(alg, &alg.mul(a, &alg.star(&w(&star_u(&xe)))));
            (sum, rhs)
        }
    }
}

/// Quasi-invariance of `h` with weight `phi` for every `X` in `xs` and `a` in `basis`.
pub fn quasi_invariance_check<A: ModuleAlgebra>(
    alg: &A,
    h: &dyn Functional<A>,
    phi: &dyn Weight<A>,
    xs: &[Monomial],
    basis: &[A::Elem],
    form: CheckForm,
) -> CheckReport {
    let suite = match form {
        CheckForm::Def => "functional-def",
        CheckForm::Lemma => "functional-lemma",
    };
    let mut r = CheckReport::new(suite, &alg.name())
        .param("functional", h.name())
        .param("weight", phi.name())
        .param("x_count", xs.len())
        .param("basis", basis.len());
    let cases: Vec<(Monomial, A::Elem)> =
        xs.iter().flat_map(|x| basis.iter().map(move |a| (x.clone(), a.clone()))).collect();
    let anchor = match (alg.side(), form) {
        (Side::Left, CheckForm::Def) => "h(X.a) = Σ h(φ[X_(1)*]* a φ[S(X_(2))])",
        (Side::Left, CheckForm::Lemma) => "Σ h(X_(1).a φ[X_(2)]) = h(φ[X*]* a)",
        (Side::Right, CheckForm::Def) => "h(a.X) = Σ h(ψ[S(X_(1))] a ψ[X_(2)*]*)",
        (Side::Right, CheckForm::Lemma) => "Σ h(ψ[X_(1)] a.X_(2)) = h(a ψ[X*]*)",
    };
    r.record("quasi-invariance", anchor, cases.len(), first_failure(&cases, |(x, a)| {
        let (l, rr) = quasi_invariance_sides(alg, h, phi, x, a, form);
        (l != rr).then(|| format!("X={} a={}: {} vs {}", u_str(x), a, l, rr))
    }));
    let real_fail = basis.iter().find_map(|a| {
        let lhs = h.eval(alg, &alg.star(a));
        (lhs != h.eval(alg, a).conj()).then(|| a.to_string())
    });
    r.record("reality", "h(a*) = conj h(a)", basis.len(), real_fail);
    r
}

/// Module-algebra law, unit law and compatibility with the involution.
pub fn module_algebra_check<A: ModuleAlgebra>(alg: &A, xs: &[Monomial], basis: &[A::Elem]) -> CheckReport {
    let uq = u();
    let mut r = CheckReport::new("module-algebra", &alg.name());
    let cases: Vec<(Monomial, A::Elem, A::Elem)> = xs
        .iter()
        .flat_map(|x| basis.iter().flat_map(move |a| basis.iter().map(move |b| (x.clone(), a.clone(), b.clone()))))
        .collect();
    r.record("product", "X.(ab) = Σ (X_(1).a)(X_(2).b)", cases.len(), first_failure(&cases, |(x, a, b)| {
        let lhs = alg.act_monomial(x, &alg.mul(a, b));
        let mut rhs = alg.zero();
        for (c, x1, x2) in legs(x) {
            rhs = alg.add(&rhs, &alg.scale(&alg.mul(&alg.act_monomial(&x1, a), &alg.act_monomial(&x2, b)), &c));
        }
        (lhs != rhs).then(|| format!("X={} a={} b={}", u_str(x), a, b))
    }));
    r.record("unit", "X.1 = ε(X)1", xs.len(), xs.iter().find_map(|x| {
        let v = alg.act_monomial(x, &alg.one());
        (v != alg.scale(&alg.one(), &uq.counit_monomial(x))).then(|| u_str(x))
    }));
    let pairs: Vec<(Monomial, A::Elem)> =
        xs.iter().flat_map(|x| basis.iter().map(move |a| (x.clone(), a.clone()))).collect();
    r.record("star", "(X.a)* = τ(X).a*", pairs.len(), first_failure(&pairs, |(x, a)| {
        let lhs = alg.star(&alg.act_monomial(x, a));
        let rhs = alg.act(&uq.tau(&u_el(x)).expect("τ"), &alg.star(a));
        (lhs != rhs).then(|| format!("X={} a={}", u_str(x), a))
    }));
    r
}

/// Outcome of the search for a coboundary `φ = d₀ξ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EssentialInvariance {
    Coboundary { xi: ChiElem },
    /// No nonzero solution in the window. `b_factors` lists, per unknown `a_ℓ`, the factor `f`
    /// in the B-equation `f · a_ℓ = 0` when that row involves `a_ℓ` alone.
    Refuted { window: i64, b_factors: Vec<(i64, Scalar)> },
}

/// Solves `X.ξ = φ[X] ξ` for X ∈ {M, K^{±1}, T, B} over `ξ = Σ_{|ℓ|≤L} a_ℓ χ^ℓ`.
pub fn essential_invariance_decide(phi: &dyn Weight<H0Module>, window: i64) -> EssentialInvariance {
    let alg = H0Module::left();
    let uq = u();
    let gens: Vec<Monomial> = uq.base().letters().into_iter().map(|l| Monomial::letter(uq.base().ngens(), l)).collect();
    let phis: Vec<ChiElem> = gens.iter().map(|g| phi.eval_monomial(&alg, g)).collect();
    let b_index = gens.iter().position(|g| g.exps()[3] == 1).expect("B present");
    let mut sys = LinearSystem::new();
    let mut columns = Vec::new();
    for l in -window..=window {
        let mut col = std::collections::BTreeMap::new();
        let chi = ChiElem::chi_pow(l);
        for (gi, g) in gens.iter().enumerate() {
            let e = alg.act_monomial(g, &chi).sub(&phis[gi].mul(&chi));
            for (k, c) in e.coeffs() {
                col.insert((gi, k), c.clone());
            }
        }
        columns.push(col.clone());
        sys.push_column(col).expect("no window");
    }
    let ns = sys.nullspace();
    for v in &ns {
        let xi = ChiElem::from_coeffs((-window..=window).zip(v.iter().cloned()));
        if xi.inverse().is_some() {
            return EssentialInvariance::Coboundary { xi };
        }
    }
    let b_factors = (-window..=window)
        .zip(&columns)
        .filter_map(|(l, col)| {
            let rows: Vec<_> = col.iter().filter(|((gi, _), _)| *gi == b_index).collect();
            (rows.len() == 1).then(|| (l, rows[0].1.clone()))
        })
        .collect();
    EssentialInvariance::Refuted { window, b_factors }
}

/// `d₁(d₀ξ)` on all generator pairs; returns the first nonzero value.
pub fn d1_d0_check<A: ModuleAlgebra>(alg: &A, xi: &A::Elem, pairs: &[(Monomial, Monomial)]) -> Result<CheckReport, QiError> {
    let cob = d0(alg, xi)?;
    let mut r = cocycle_check(alg, &cob, pairs);
    r.suite = "d1-d0".into();
    Ok(r)
}

/// Generators of U_q(G(1)) as monomials, including K^{-1}.
pub fn uq_generators() -> Vec<Monomial> {
    let uq = u();
    uq.base().letters().into_iter().map(|l| Monomial::letter(uq.base().ngens(), l)).collect()
}

/// U_q(G(1)) monomials with Σ|exponent| ≤ degree.
pub fn uq_window(degree: u32) -> Vec<Monomial> {
    u().window(degree)
}

/// `{χ^ℓ : |ℓ| ≤ L}`.
pub fn chi_window(l: i64) -> Vec<ChiElem> {
    (-l..=l).map(ChiElem::chi_pow).collect()
}

/// All pairs from two monomial lists.
pub fn pairs_of(xs: &[Monomial], ys: &[Monomial]) -> Vec<(Monomial, Monomial)> {
    xs.iter().flat_map(|x| ys.iter().map(move |y| (x.clone(), y.clone()))).collect()
}

#[cfg(test)]
mod tests;
