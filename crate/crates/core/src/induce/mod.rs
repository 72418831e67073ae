//! Induced corepresentation spaces, their sesquilinear forms, the unitarized representations
//! ρ̃ and λ̃, and the concrete Galilei representation on φ_{m,u} H_0^irr.

mod galilei;

use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::coiso::{CoisoError, CoisotropicSubgroup};
use crate::hopf::{uq_g1, HopfError};
use crate::ncalg::{AlgebraElement, LinearSystem, Monomial, NcError, TensorElement};
use crate::pairing::Side;
use crate::quasiinv::{transform_weight, Functional, ModuleAlgebra, Weight};
use crate::report::{first_failure, CheckReport};
use crate::scalars::Scalar;

pub use galilei::{
    equivalence_intertwiner, form_with, galilei_matrix, galilei_rep, galilei_rep_element, intertwiner_check,
    j_structure, jform_check, minkowski_form, relations_check, scalar_product, unitarity_check, GalileiOp,
    GalileiVector,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InduceError {
    #[error("sides differ")]
    SideMismatch,
    #[error("{0} is not invertible in the window")]
    NotInvertible(String),
    #[error("not a corepresentation: {0}")]
    NotCorepresentation(String),
    #[error(transparent)]
    Coiso(#[from] CoisoError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Nc(#[from] NcError),
}

/// A finite-dimensional corepresentation of the quotient coalgebra.
///
/// Entries are given through ambient lifts `ã_ij` with `a_ij = π(ã_ij)`. With `Side::Left`
/// this is ρ_R(e_i) = Σ_j e_j ⊗ a_ji (used with a left subgroup); with `Side::Right` it is
/// ρ_L(e_i) = Σ_j b_ij ⊗ e_j.
#[derive(Clone)]
pub struct Corepresentation {
    side: Side,
    lifts: Vec<Vec<AlgebraElement>>,
    entries: Vec<Vec<AlgebraElement>>,
}

impl Corepresentation {
    pub fn new(sub: &CoisotropicSubgroup, side: Side, lifts: Vec<Vec<AlgebraElement>>) -> Result<Self, InduceError> {
        let n = lifts.len();
        if lifts.iter().any(|r| r.len() != n) {
            return Err(InduceError::NotCorepresentation("matrix is not square".into()));
        }
        let entries: Vec<Vec<AlgebraElement>> =
            lifts.iter().map(|r| r.iter().map(|a| sub.pi(a)).collect()).collect();
        let q = sub.quotient();
        for i in 0..n {
            for j in 0..n {
                let lhs = q.coproduct(&entries[i][j]);
                let mut rhs = TensorElement::zero(vec![q.base().clone(), q.base().clone()]);
                for (a, row) in entries[i].iter().zip(&entries) {
                    rhs = rhs.add(&a.tensor(&row[j]));
                }
                if lhs != rhs {
                    return Err(InduceError::NotCorepresentation(format!("Δ(a_{}{}) = {} vs {}", i, j, lhs, rhs)));
                }
                let e = q.counit(&entries[i][j]);
                if e != Scalar::from_int((i == j) as i64) {
                    return Err(InduceError::NotCorepresentation(format!("ε(a_{}{}) = {}", i, j, e)));
                }
            }
        }
        Ok(Corepresentation { side, lifts, entries })
    }

    /// The one-dimensional corepresentation with `a_11 = π(1)`.
    pub fn trivial(sub: &CoisotropicSubgroup, side: Side) -> Self {
        Corepresentation::new(sub, side, vec![vec![sub.ambient().one()]]).expect("trivial corepresentation")
    }

    pub fn dimension(&self) -> usize {
        self.entries.len()
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn entry(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.entries[i][j]
    }

    pub fn lift(&self, i: usize, j: usize) -> &AlgebraElement {
        &self.lifts[i][j]
    }

    /// τ_K(a_ij) = a_ji.
    pub fn is_unitary(&self, sub: &CoisotropicSubgroup) -> Result<bool, InduceError> {
        let q = sub.quotient();
        let n = self.dimension();
        for i in 0..n {
            for j in 0..n {
                if q.tau(&self.entries[i][j])? != self.entries[j][i] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// An element of ind_K^G: `Σ e_i ⊗ A_i` (left) or `Σ A_i ⊗ e_i` (right).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndElement {
    pub side: Side,
    pub comps: Vec<AlgebraElement>,
}

impl IndElement {
    pub fn new(side: Side, comps: Vec<AlgebraElement>) -> Self {
        IndElement { side, comps }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    /// `A a` on a left element, `a A` on a right one.
    pub fn module_mul(&self, a: &AlgebraElement) -> IndElement {
        let comps = self
            .comps
            .iter()
            .map(|c| match self.side {
                Side::Left => c.mul(a),
                Side::Right => a.mul(c),
            })
            .collect();
        IndElement { side: self.side, comps }
    }
}

impl std::fmt::Display for IndElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.comps.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `(π⊗id)ΔA_i − Σ_j a_ij ⊗ A_j` (left) or `(id⊗π)ΔA_i − Σ_j A_j ⊗ b_ij` (right), per component.
pub fn membership_residual(sub: &CoisotropicSubgroup, rho: &Corepresentation, comps: &[AlgebraElement]) -> Vec<TensorElement> {
    let n = rho.dimension();
    let qb = sub.quotient().base().clone();
    (0..n)
        .map(|i| {
            let d = sub.ambient().coproduct(&comps[i]);
            let mut r = match rho.side {
                Side::Left => d.substitute_slot(0, std::slice::from_ref(&qb), |m| TensorElement::from_element(&sub.pi_monomial(m))),
                Side::Right => d.substitute_slot(1, std::slice::from_ref(&qb), |m| TensorElement::from_element(&sub.pi_monomial(m))),
            };
            for (j, cj) in comps.iter().enumerate() {
                let t = match rho.side {
                    Side::Left => rho.entry(i, j).tensor(cj),
                    Side::Right => cj.tensor(rho.entry(i, j)),
                };
                r = r.sub(&t);
            }
            r
        })
        .collect()
}

pub fn is_member(sub: &CoisotropicSubgroup, rho: &Corepresentation, a: &IndElement) -> bool {
    a.side == rho.side && membership_residual(sub, rho, &a.comps).iter().all(|t| t.is_zero())
}

/// Truncated basis of ind_K^G(ρ).
#[derive(Clone, Debug)]
pub struct IndSpace {
    pub side: Side,
    pub degree: u32,
    pub basis: Vec<IndElement>,
}

/// Solves the membership equation over components in the ambient window of total degree ≤ `degree`.
pub fn ind_space(sub: &CoisotropicSubgroup, rho: &Corepresentation, degree: u32) -> Result<IndSpace, InduceError> {
    let win = sub.ambient().window(degree);
    let p = sub.ambient().base().clone();
    let n = rho.dimension();
    let zero = AlgebraElement::zero(&p);
    let mut sys: LinearSystem<(usize, Vec<Monomial>)> = LinearSystem::new();
    let mut unknowns = Vec::new();
    for k in 0..n {
        for m in &win {
            let mut comps = vec![zero.clone(); n];
            comps[k] = AlgebraElement::monomial(&p, m.clone());
            let res = membership_residual(sub, rho, &comps);
            let col: BTreeMap<_, _> = res
                .iter()
                .enumerate()
                .flat_map(|(i, t)| t.terms().map(move |(key, c)| ((i, key.clone()), c.clone())).collect::<Vec<_>>())
                .collect();
            sys.push_column(col)?;
            unknowns.push((k, m.clone()));
        }
    }
    let basis = sys
        .nullspace()
        .into_iter()
        .map(|v| {
            let mut comps = vec![zero.clone(); n];
            for ((k, m), c) in unknowns.iter().zip(v) {
                if !c.is_zero() {
                    comps[*k] = comps[*k].add(&AlgebraElement::term(&p, m.clone(), c));
                }
            }
            IndElement::new(rho.side, comps)
        })
        .collect();
    Ok(IndSpace { side: rho.side, degree, basis })
}

/// First product `A a` (or `a A`) that leaves ind_K^G(ρ).
pub fn module_closure_witness(
    sub: &CoisotropicSubgroup,
    rho: &Corepresentation,
    space: &IndSpace,
    ring: &[AlgebraElement],
) -> Option<String> {
    let cases: Vec<(IndElement, AlgebraElement)> =
        space.basis.iter().flat_map(|a| ring.iter().map(move |r| (a.clone(), r.clone()))).collect();
    first_failure(&cases, |(a, r)| (!is_member(sub, rho, &a.module_mul(r))).then(|| format!("A={} a={}", a, r)))
}

/// ⟨A,B⟩_L = Σ A_i* B_i or ⟨A,B⟩_R = Σ B_i A_i*.
pub fn sesq_form(sub: &CoisotropicSubgroup, a: &IndElement, b: &IndElement) -> Result<AlgebraElement, InduceError> {
    if a.side != b.side || a.comps.len() != b.comps.len() {
        return Err(InduceError::SideMismatch);
    }
    let amb = sub.ambient();
    let mut acc = AlgebraElement::zero(amb.base());
    for (x, y) in a.comps.iter().zip(&b.comps) {
        let xs = amb.star(x)?;
        acc = acc.add(&match a.side {
            Side::Left => xs.mul(y),
            Side::Right => y.mul(&xs),
        });
    }
    Ok(acc)
}

/// Residuals of `Σ_j S^{-1}(A_j(1)) a_ij ⊗ A_j(2) = π(1) ⊗ A_i` (left) or
/// `Σ_j A_j(1) ⊗ b_ji S^{-1}(A_j(2)) = A_i ⊗ π(1)` (right); the quotient is a module over the ambient.
pub fn sesq_identity_residual(
    sub: &CoisotropicSubgroup,
    rho: &Corepresentation,
    a: &IndElement,
) -> Result<Vec<TensorElement>, InduceError> {
    let amb = sub.ambient();
    let p = amb.base();
    let n = rho.dimension();
    let mut out = Vec::new();
    for i in 0..n {
        let mut acc = match rho.side {
            Side::Left => sub.pi_one().tensor(&a.comps[i]).scale(&Scalar::from_int(-1)),
            Side::Right => a.comps[i].tensor(&sub.pi_one()).scale(&Scalar::from_int(-1)),
        };
        for j in 0..n {
            for (k, c) in amb.coproduct(&a.comps[j]).terms() {
                let a1 = AlgebraElement::monomial(p, k[0].clone());
                let a2 = AlgebraElement::monomial(p, k[1].clone());
                let t = match rho.side {
                    Side::Left => sub.pi(&amb.antipode_inv(&a1)?.mul(rho.lift(i, j))).tensor(&a2),
                    Side::Right => a1.tensor(&sub.pi(&rho.lift(j, i).mul(&amb.antipode_inv(&a2)?))),
                };
                acc = acc.add(&t.scale(c));
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// ρ̃(X)A = Σ X_(1).A_i φ[X_(2)] for a left module algebra; λ̃(X)A = Σ ψ[X_(1)] A_i.X_(2) for a right one.
pub fn rho_tilde_generic<A: ModuleAlgebra>(
    alg: &A,
    x: &AlgebraElement,
    comps: &[A::Elem],
    phi: &dyn Weight<A>,
) -> Vec<A::Elem> {
    let uq = uq_g1();
    let d = uq.coproduct(x);
    comps
        .iter()
        .map(|a| {
            let mut acc = alg.zero();
            for (k, c) in d.terms() {
                let t = match alg.side() {
                    Side::Left => alg.mul(&alg.act_monomial(&k[0], a), &phi.eval_monomial(alg, &k[1])),
                    Side::Right => alg.mul(&phi.eval_monomial(alg, &k[0]), &alg.act_monomial(&k[1], a)),
                };
                acc = alg.add(&acc, &alg.scale(&t, c));
            }
            acc
        })
        .collect()
}

/// The right-sided mirror λ̃; `alg` must act from the right.
pub fn lambda_tilde_generic<A: ModuleAlgebra>(
    alg: &A,
    x: &AlgebraElement,
    comps: &[A::Elem],
    psi: &dyn Weight<A>,
) -> Vec<A::Elem> {
    assert_eq!(alg.side(), Side::Right);
    rho_tilde_generic(alg, x, comps, psi)
}

/// ⟨A,B⟩ = h(Σ A_i* B_i) (left) or h(Σ B_i A_i*) (right).
pub fn ind_form<A: ModuleAlgebra>(alg: &A, h: &dyn Functional<A>, a: &[A::Elem], b: &[A::Elem]) -> Scalar {
    let mut acc = alg.zero();
    for (x, y) in a.iter().zip(b) {
        let t = match alg.side() {
            Side::Left => alg.mul(&alg.star(x), y),
            Side::Right => alg.mul(y, &alg.star(x)),
        };
        acc = alg.add(&acc, &t);
    }
    h.eval(alg, &acc)
}

/// `a ↦ h(ξ* a ξ)`.
pub struct XiConjugated<A: ModuleAlgebra> {
    pub h: Arc<dyn Functional<A>>,
    pub xi: A::Elem,
}

impl<A: ModuleAlgebra> Functional<A> for XiConjugated<A> {
    fn name(&self) -> String {
        format!("{}(({})* a ({}))", self.h.name(), self.xi, self.xi)
    }
    fn eval(&self, alg: &A, a: &A::Elem) -> Scalar {
        self.h.eval(alg, &alg.mul(&alg.mul(&alg.star(&self.xi), a), &self.xi))
    }
}

type Vector<A> = Vec<<A as ModuleAlgebra>::Elem>;

/// Representation law, unitarity and reality of ρ̃ (or λ̃) on the given vectors.
pub fn generic_rep_check<A: ModuleAlgebra>(
    alg: &A,
    h: &dyn Functional<A>,
    phi: &dyn Weight<A>,
    xs: &[Monomial],
    vectors: &[Vector<A>],
) -> CheckReport {
    let uq = uq_g1();
    let p = uq.base();
    let mut r = CheckReport::new("ind-generic", &alg.name()).param("weight", phi.name()).param("functional", h.name());
    let rho = |x: &AlgebraElement, v: &Vector<A>| rho_tilde_generic(alg, x, v, phi);
    let pairs: Vec<(Monomial, Monomial, Vector<A>)> = xs
        .iter()
        .flat_map(|x| xs.iter().flat_map(move |y| vectors.iter().map(move |v| (x.clone(), y.clone(), v.clone()))))
        .collect();
    r.record("representation", "ρ̃(XY) = ρ̃(X)ρ̃(Y)", pairs.len(), first_failure(&pairs, |(x, y, v)| {
        let xe = AlgebraElement::monomial(p, x.clone());
        let ye = AlgebraElement::monomial(p, y.clone());
        let lhs = rho(&xe.mul(&ye), v);
        let rhs = match alg.side() {
            Side::Left => rho(&xe, &rho(&ye, v)),
            Side::Right => rho(&ye, &rho(&xe, v)),
        };
        (lhs != rhs).then(|| format!("X={} Y={}", p.monomial_string(x), p.monomial_string(y)))
    }));
    let cells: Vec<(Monomial, Vector<A>, Vector<A>)> = xs
        .iter()
        .flat_map(|x| vectors.iter().flat_map(move |a| vectors.iter().map(move |b| (x.clone(), a.clone(), b.clone()))))
        .collect();
    r.record("unitarity", "⟨A, ρ̃(X)B⟩ = ⟨ρ̃(X*)A, B⟩", cells.len(), first_failure(&cells, |(x, a, b)| {
        let xe = AlgebraElement::monomial(p, x.clone());
        let xs = uq.star(&xe).expect("uq-g1 has *");
        let lhs = ind_form(alg, h, a, &rho(&xe, b));
        let rhs = ind_form(alg, h, &rho(&xs, a), b);
        (lhs != rhs).then(|| format!("X={}: {} vs {}", p.monomial_string(x), lhs, rhs))
    }));
    r.record("unit", "ρ̃(1) = id", vectors.len(), vectors.iter().find_map(|v| {
        (rho(&uq.one(), v) != *v).then(|| "ρ̃(1)".to_string())
    }));
    r
}

/// F(A) = Aξ intertwines ρ̃ for (h(ξ*·ξ), transformed φ) with ρ̃ for (h, φ), and preserves the forms.
pub fn generic_intertwiner_check<A: ModuleAlgebra + 'static>(
    alg: &A,
    h: Arc<dyn Functional<A>>,
    phi: Arc<dyn Weight<A>>,
    xi: &A::Elem,
    xs: &[Monomial],
    vectors: &[Vector<A>],
) -> Result<CheckReport, InduceError> {
    let uq = uq_g1();
    let p = uq.base();
    let phi1 = transform_weight(alg, phi.clone(), xi).map_err(|_| InduceError::NotInvertible(xi.to_string()))?;
    let h1 = XiConjugated { h: h.clone(), xi: xi.clone() };
    let f = |v: &Vector<A>| -> Vector<A> { v.iter().map(|a| alg.mul(a, xi)).collect() };
    let mut r = CheckReport::new("intertwiner", &alg.name()).param("xi", xi.to_string());
    let cases: Vec<(Monomial, Vector<A>)> =
        xs.iter().flat_map(|x| vectors.iter().map(move |v| (x.clone(), v.clone()))).collect();
    r.record("intertwining", "F∘ρ̃₁(X) = ρ̃₂(X)∘F", cases.len(), first_failure(&cases, |(x, v)| {
        let xe = AlgebraElement::monomial(p, x.clone());
        let lhs = f(&rho_tilde_generic(alg, &xe, v, &phi1));
        let rhs = rho_tilde_generic(alg, &xe, &f(v), phi.as_ref());
        (lhs != rhs).then(|| format!("X={}", p.monomial_string(x)))
    }));
    let pairs: Vec<(Vector<A>, Vector<A>)> =
        vectors.iter().flat_map(|a| vectors.iter().map(move |b| (a.clone(), b.clone()))).collect();
    r.record("form-transport", "⟨FA, FB⟩₂ = ⟨A, B⟩₁", pairs.len(), first_failure(&pairs, |(a, b)| {
        let lhs = ind_form(alg, h.as_ref(), &f(a), &f(b));
        let rhs = ind_form(alg, &h1, a, b);
        (lhs != rhs).then(|| format!("{} vs {}", lhs, rhs))
    }));
    Ok(r)
}

#[cfg(test)]
mod tests;
