//! Hopf *-algebra layer: coproduct, counit, antipode, involution and τ = *∘S.

mod presets;

use std::sync::Arc;

use thiserror::Error;

use crate::ncalg::{
    monomial_window, AlgebraElement, Letter, Linearity, Monomial, Morphism, NcError, Presentation, TensorElement,
};
use crate::report::{first_failure, CheckReport};
use crate::scalars::Scalar;

pub use presets::{builtin, builtin_presentation, fq_g1, fq_j, h0_presentation, uq_g1, BUILTIN_NAMES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HopfError {
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error("structure `{0}` has no involution")]
    StarUndefined(String),
    #[error("structure `{0}` has no antipode")]
    AntipodeUndefined(String),
    #[error("axiom {axiom} fails on generator {generator}")]
    AxiomViolated { axiom: String, generator: String },
    #[error("unknown structure `{0}`")]
    UnknownStructure(String),
}

/// Generator tables of a Hopf *-algebra, or of a coalgebra carrying only τ_K.
pub struct HopfStructure {
    name: String,
    base: Arc<Presentation>,
    delta: Morphism<TensorElement>,
    epsilon: Morphism<Scalar>,
    antipode: Option<Morphism<AlgebraElement>>,
    star: Option<Morphism<AlgebraElement>>,
    antipode_inv: Option<Morphism<AlgebraElement>>,
    tau: Option<Morphism<AlgebraElement>>,
}

pub type Table<'a, T> = &'a dyn Fn(Letter) -> T;

impl HopfStructure {
    /// Full Hopf *-algebra from letter tables. Relations are checked for every map.
    pub fn new(
        name: &str,
        base: &Arc<Presentation>,
        delta: Table<TensorElement>,
        epsilon: Table<Scalar>,
        antipode: Table<AlgebraElement>,
        star: Table<AlgebraElement>,
    ) -> Result<HopfStructure, HopfError> {
        let letters = base.letters();
        let delta = Self::delta_map(base, delta)?;
        let epsilon = Self::eps_map(base, epsilon)?;
        let s = Morphism::new(base, Linearity::AntiHom, AlgebraElement::one(base), letters.iter().map(|&l| (l, antipode(l))))?;
        s.check_relations()?;
        let st = Morphism::new(base, Linearity::ConjAntiHom, AlgebraElement::one(base), letters.iter().map(|&l| (l, star(l))))?;
        st.check_relations()?;
        let tau = Morphism::new(
            base,
            Linearity::ConjHom,
            AlgebraElement::one(base),
            letters.iter().map(|&l| (l, st.apply(&s.image_monomial(&Monomial::letter(base.ngens(), l))))),
        )?;
        tau.check_relations()?;
        let s_inv = Morphism::new(
            base,
            Linearity::AntiHom,
            AlgebraElement::one(base),
            letters.iter().map(|&l| {
                let sl = st.image_monomial(&Monomial::letter(base.ngens(), l));
                (l, st.apply(&s.apply(&sl)))
            }),
        )?;
        s_inv.check_relations()?;
        let h = HopfStructure {
            name: name.into(),
            base: base.clone(),
            delta,
            epsilon,
            antipode: Some(s),
            star: Some(st),
            antipode_inv: Some(s_inv),
            tau: Some(tau),
        };
        h.check_generators()?;
        Ok(h)
    }

    /// Coalgebra with τ_K only (a coisotropic quotient): S and * are unavailable.
    pub fn coalgebra_with_tau(
        name: &str,
        base: &Arc<Presentation>,
        delta: Table<TensorElement>,
        epsilon: Table<Scalar>,
        tau: Table<AlgebraElement>,
    ) -> Result<HopfStructure, HopfError> {
        let letters = base.letters();
        let delta = Self::delta_map(base, delta)?;
        let epsilon = Self::eps_map(base, epsilon)?;
        let tau = Morphism::new(base, Linearity::ConjHom, AlgebraElement::one(base), letters.iter().map(|&l| (l, tau(l))))?;
        tau.check_relations()?;
        let h = HopfStructure {
            name: name.into(),
            base: base.clone(),
            delta,
            epsilon,
            antipode: None,
            star: None,
            antipode_inv: None,
            tau: Some(tau),
        };
        h.check_generators()?;
        Ok(h)
    }

    fn delta_map(base: &Arc<Presentation>, delta: Table<TensorElement>) -> Result<Morphism<TensorElement>, NcError> {
        let m = Morphism::new(
            base,
            Linearity::Hom,
            TensorElement::one(vec![base.clone(), base.clone()]),
            base.letters().into_iter().map(|l| (l, delta(l))),
        )?;
        m.check_relations()?;
        Ok(m)
    }

    fn eps_map(base: &Arc<Presentation>, eps: Table<Scalar>) -> Result<Morphism<Scalar>, NcError> {
        let m = Morphism::new(base, Linearity::Hom, Scalar::one(), base.letters().into_iter().map(|l| (l, eps(l))))?;
        m.check_relations()?;
        Ok(m)
    }

    fn check_generators(&self) -> Result<(), HopfError> {
        for l in self.base.letters() {
            let g = AlgebraElement::letter(&self.base, l);
            let violated = |axiom: &str| HopfError::AxiomViolated {
                axiom: axiom.into(),
                generator: self.base.letter_name(l),
            };
            let (left, right) = self.counit_sides(&g);
            if left != g || right != g {
                return Err(violated("counit"));
            }
            if let Some(st) = &self.star {
                if st.apply(&st.apply(&g)) != g {
                    return Err(violated("star involutive"));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base(&self) -> &Arc<Presentation> {
        &self.base
    }

    pub fn has_star(&self) -> bool {
        self.star.is_some()
    }

    pub fn is_star_hopf(&self) -> bool {
        self.star.is_some() && self.antipode.is_some()
    }

    pub fn gen(&self, name: &str) -> AlgebraElement {
        AlgebraElement::gen(&self.base, name)
    }

    pub fn one(&self) -> AlgebraElement {
        AlgebraElement::one(&self.base)
    }

    pub fn coproduct(&self, a: &AlgebraElement) -> TensorElement {
        self.delta.apply(a)
    }

    pub fn coproduct_monomial(&self, m: &Monomial) -> TensorElement {
        self.delta.image_monomial(m)
    }

    /// Δ applied to slot `k` of a tensor.
    pub fn coproduct_slot(&self, t: &TensorElement, k: usize) -> TensorElement {
        t.substitute_slot(k, &[self.base.clone(), self.base.clone()], |m| self.delta.image_monomial(m))
    }

    /// Δ^{(k)}: rank `k + 1`, obtained by expanding the last leg repeatedly.
    pub fn coproduct_iter(&self, a: &AlgebraElement, k: usize) -> TensorElement {
        assert!(k >= 1, "coproduct_iter needs k >= 1");
        let mut t = self.coproduct(a);
        for j in 1..k {
            t = self.coproduct_slot(&t, j);
        }
        t
    }

    pub fn counit(&self, a: &AlgebraElement) -> Scalar {
        self.epsilon.apply(a)
    }

    pub fn counit_monomial(&self, m: &Monomial) -> Scalar {
        self.epsilon.image_monomial(m)
    }

    /// ε applied to slot `k`.
    pub fn counit_slot(&self, t: &TensorElement, k: usize) -> TensorElement {
        t.substitute_slot(k, &[], |m| TensorElement::scalar(self.epsilon.image_monomial(m)))
    }

    fn counit_sides(&self, a: &AlgebraElement) -> (AlgebraElement, AlgebraElement) {
        let d = self.coproduct(a);
        let l = self.counit_slot(&d, 0).as_element().expect("rank 1");
        let r = self.counit_slot(&d, 1).as_element().expect("rank 1");
        (l, r)
    }

    pub fn antipode(&self, a: &AlgebraElement) -> Result<AlgebraElement, HopfError> {
        let s = self.antipode.as_ref().ok_or_else(|| HopfError::AntipodeUndefined(self.name.clone()))?;
        Ok(s.apply(a))
    }

    pub fn antipode_monomial(&self, m: &Monomial) -> Result<AlgebraElement, HopfError> {
        let s = self.antipode.as_ref().ok_or_else(|| HopfError::AntipodeUndefined(self.name.clone()))?;
        Ok(s.image_monomial(m))
    }

    /// S^{-1} = * ∘ S ∘ *.
    pub fn antipode_inv(&self, a: &AlgebraElement) -> Result<AlgebraElement, HopfError> {
        let s = self.antipode_inv.as_ref().ok_or_else(|| HopfError::AntipodeUndefined(self.name.clone()))?;
        Ok(s.apply(a))
    }

    pub fn antipode_inv_monomial(&self, m: &Monomial) -> Result<AlgebraElement, HopfError> {
        let s = self.antipode_inv.as_ref().ok_or_else(|| HopfError::AntipodeUndefined(self.name.clone()))?;
        Ok(s.image_monomial(m))
    }

    pub fn star(&self, a: &AlgebraElement) -> Result<AlgebraElement, HopfError> {
        let s = self.star.as_ref().ok_or_else(|| HopfError::StarUndefined(self.name.clone()))?;
        Ok(s.apply(a))
    }

    /// τ = * ∘ S (τ_K for coisotropic quotients).
    pub fn tau(&self, a: &AlgebraElement) -> Result<AlgebraElement, HopfError> {
        let t = self.tau.as_ref().ok_or_else(|| HopfError::StarUndefined(self.name.clone()))?;
        Ok(t.apply(a))
    }

    /// Window used by the axiom checks: all normal monomials with Σ|exponent| ≤ degree.
    pub fn window(&self, degree: u32) -> Vec<Monomial> {
        monomial_window(&self.base, degree, degree as i64)
            .into_iter()
            .filter(|m| m.total_degree() <= degree as u64)
            .collect()
    }

    /// Checks the Hopf *-axioms on the degree window; failures become report entries.
    pub fn verify(&self, degree: u32) -> CheckReport {
        let mut r = CheckReport::new("hopf-axioms", &self.name).param("degree", degree);
        let win = self.window(degree);
        let p = &self.base;
        let el = |m: &Monomial| AlgebraElement::monomial(p, m.clone());
        let show = |m: &Monomial| p.monomial_string(m);

        r.record("coassociativity", "coassociativity of the coproduct tables", win.len(), first_failure(&win, |m| {
            let d = self.coproduct_monomial(m);
            let left = self.coproduct_slot(&d, 0);
            let right = self.coproduct_slot(&d, 1);
            (left != right).then(|| format!("{}: {} vs {}", show(m), left, right))
        }));
        r.record("counit", "counit law (ε⊗id)Δ = id = (id⊗ε)Δ", win.len(), first_failure(&win, |m| {
            let a = el(m);
            let (l, rr) = self.counit_sides(&a);
            (l != a || rr != a).then(|| show(m))
        }));
        let sample: Vec<(Monomial, Monomial)> = win
            .iter()
            .flat_map(|a| win.iter().map(move |b| (a.clone(), b.clone())))
            .filter(|(a, b)| !a.is_one() && !b.is_one() && a.total_degree() + b.total_degree() <= degree as u64)
            .collect();
        r.record("delta-multiplicative", "Δ is an algebra homomorphism", sample.len(), first_failure(&sample, |(a, b)| {
            let lhs = self.coproduct(&el(a).mul(&el(b)));
            let rhs = self.coproduct_monomial(a).mul(&self.coproduct_monomial(b));
            (lhs != rhs).then(|| format!("{} * {}", show(a), show(b)))
        }));
        r.record("counit-multiplicative", "ε is an algebra homomorphism", sample.len(), first_failure(&sample, |(a, b)| {
            let lhs = self.counit(&el(a).mul(&el(b)));
            let rhs = self.counit_monomial(a).mul(&self.counit_monomial(b));
            (lhs != rhs).then(|| format!("{} * {}", show(a), show(b)))
        }));

        if let Some(s) = &self.antipode {
            r.record("antipode", "m(S⊗id)Δ = ηε = m(id⊗S)Δ", win.len(), first_failure(&win, |m| {
                let d = self.coproduct_monomial(m);
                let unit = self.one().scale(&self.counit_monomial(m));
                let sl = d
                    .substitute_slot(0, std::slice::from_ref(p), |x| TensorElement::from_element(&s.image_monomial(x)))
                    .contract(0)
                    .as_element()
                    .expect("rank 1");
                let sr = d
                    .substitute_slot(1, std::slice::from_ref(p), |x| TensorElement::from_element(&s.image_monomial(x)))
                    .contract(0)
                    .as_element()
                    .expect("rank 1");
                (sl != unit || sr != unit).then(|| format!("{}: {} / {}", show(m), sl, sr))
            }));
            r.record("antipode-anti-multiplicative", "S(ab) = S(b)S(a)", sample.len(), first_failure(&sample, |(a, b)| {
                let lhs = s.apply(&el(a).mul(&el(b)));
                let rhs = s.image_monomial(b).mul(&s.image_monomial(a));
                (lhs != rhs).then(|| format!("{} * {}", show(a), show(b)))
            }));
        } else {
            r.skip("antipode", "m(S⊗id)Δ = ηε = m(id⊗S)Δ", "no antipode");
        }

        if let (Some(st), Some(s)) = (&self.star, &self.antipode) {
            r.record("star-involutive", "(a*)* = a", win.len(), first_failure(&win, |m| {
                (st.apply(&st.image_monomial(m)) != el(m)).then(|| show(m))
            }));
            r.record("star-anti-multiplicative", "(ab)* = b*a*", sample.len(), first_failure(&sample, |(a, b)| {
                let lhs = st.apply(&el(a).mul(&el(b)));
                let rhs = st.image_monomial(b).mul(&st.image_monomial(a));
                (lhs != rhs).then(|| format!("{} * {}", show(a), show(b)))
            }));
            r.record("star-coproduct", "Δ(a*) = (*⊗*)Δ(a)", win.len(), first_failure(&win, |m| {
                let lhs = self.coproduct(&st.image_monomial(m));
                let rhs = self.coproduct_monomial(m).map_all(true, |_, x| st.image_monomial(x));
                (lhs != rhs).then(|| format!("{}: {} vs {}", show(m), lhs, rhs))
            }));
            r.record("star-counit", "ε(a*) = conj ε(a)", win.len(), first_failure(&win, |m| {
                let lhs = self.counit(&st.image_monomial(m));
                (lhs != self.counit_monomial(m).conj()).then(|| show(m))
            }));
            r.record("antipode-star", "S∘*∘S∘* = id", win.len(), first_failure(&win, |m| {
                let v = s.apply(&st.apply(&s.apply(&st.image_monomial(m))));
                (v != el(m)).then(|| format!("{}: {}", show(m), v))
            }));
        } else {
            r.skip("star-coproduct", "Δ(a*) = (*⊗*)Δ(a)", "no involution");
        }

        if let Some(t) = &self.tau {
            r.record("tau-squared", "τ² = id", win.len(), first_failure(&win, |m| {
                let v = t.apply(&t.image_monomial(m));
                (v != el(m)).then(|| format!("{}: {}", show(m), v))
            }));
            r.record("tau-coproduct", "Δτ = (τ⊗τ)Δ^op", win.len(), first_failure(&win, |m| {
                let lhs = self.coproduct(&t.image_monomial(m));
                let rhs = self.coproduct_monomial(m).flip(0).map_all(true, |_, x| t.image_monomial(x));
                (lhs != rhs).then(|| format!("{}: {} vs {}", show(m), lhs, rhs))
            }));
        }
        r
    }
}

/// Free-function form of [`HopfStructure::verify`].
pub fn verify_hopf(h: &HopfStructure, degree: u32) -> CheckReport {
    h.verify(degree)
}

#[cfg(test)]
mod tests;
