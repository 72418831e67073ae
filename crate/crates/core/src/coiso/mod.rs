//! Coisotropic quantum subgroups and the embeddable homogeneous spaces they cut out.

use std::collections::BTreeMap;
use std::sync::{Arc, OnceLock};

use thiserror::Error;

use crate::hopf::{fq_g1, fq_j, HopfError, HopfStructure};
use crate::ncalg::{
    express_in_span, AlgebraElement, Letter, Linearity, LinearSystem, Monomial, Morphism, NcError, TensorElement,
};
use crate::pairing::Side;
use crate::report::CheckReport;
use crate::scalars::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoisoError {
    #[error("π is not a coalgebra morphism at {0}")]
    NotCoalgebraMorphism(String),
    #[error("π is not a module morphism: {0}")]
    NotModuleMorphism(String),
    #[error("π∘τ differs from τ_K∘π at {0}")]
    TauIncompatible(String),
    #[error("π is not surjective: {0} is not reached")]
    NotSurjective(String),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error(transparent)]
    Nc(#[from] NcError),
}

/// Which one-sided ideal condition the kernel satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubgroupSide {
    Left,
    Right,
    TwoSided,
}

pub struct CoisotropicSubgroup {
    ambient: Arc<HopfStructure>,
    quotient: Arc<HopfStructure>,
    pi: Morphism<AlgebraElement>,
    side: SubgroupSide,
    kernel_generators: Vec<AlgebraElement>,
}

fn witness_name(h: &HopfStructure, l: Letter) -> String {
    h.base().letter_name(l)
}

/// Validates `pi_table` (images of every ambient letter) and assembles the subgroup.
pub fn build_subgroup(
    ambient: &Arc<HopfStructure>,
    quotient: &Arc<HopfStructure>,
    pi_table: &dyn Fn(Letter) -> AlgebraElement,
    side: SubgroupSide,
) -> Result<CoisotropicSubgroup, CoisoError> {
    let p = ambient.base();
    let letters = p.letters();
    let pi = Morphism::new(p, Linearity::Hom, quotient.one(), letters.iter().map(|&l| (l, pi_table(l))))?;

    let qb = quotient.base().clone();
    let pi_pi = |t: &TensorElement| {
        t.map_all(false, |_, m| pi.image_monomial(m))
    };
    for &l in &letters {
        let g = AlgebraElement::letter(p, l);
        let lhs = pi_pi(&ambient.coproduct(&g));
        let rhs = quotient.coproduct(&pi.apply(&g));
        if lhs != rhs {
            return Err(CoisoError::NotCoalgebraMorphism(format!("{}: {} vs {}", witness_name(ambient, l), lhs, rhs)));
        }
        if ambient.counit(&g) != quotient.counit(&pi.apply(&g)) {
            return Err(CoisoError::NotCoalgebraMorphism(format!("counit at {}", witness_name(ambient, l))));
        }
    }
    if let Err(NcError::RelationNotPreserved { relation }) = pi.check_relations() {
        return Err(CoisoError::NotModuleMorphism(relation));
    }
    for &l in &letters {
        let g = AlgebraElement::letter(p, l);
        let lhs = pi.apply(&ambient.tau(&g)?);
        let rhs = quotient.tau(&pi.apply(&g))?;
        if lhs != rhs {
            return Err(CoisoError::TauIncompatible(format!("{}: {} vs {}", witness_name(ambient, l), lhs, rhs)));
        }
    }
    let images: Vec<BTreeMap<Monomial, Scalar>> = letters
        .iter()
        .map(|&l| pi.apply(&AlgebraElement::letter(p, l)).terms().map(|(m, c)| (m.clone(), c.clone())).collect())
        .collect();
    for ql in qb.letters() {
        let target: BTreeMap<Monomial, Scalar> = BTreeMap::from([(Monomial::letter(qb.ngens(), ql), Scalar::one())]);
        if express_in_span(&images, &target).is_none() {
            return Err(CoisoError::NotSurjective(qb.letter_name(ql)));
        }
    }

    let mut sub = CoisotropicSubgroup {
        ambient: ambient.clone(),
        quotient: quotient.clone(),
        pi,
        side,
        kernel_generators: Vec::new(),
    };
    sub.kernel_generators = sub.kernel_window(1);
    Ok(sub)
}

/// The Galilei instance: π(μ) = μ̂, π(x) = x̂, π(t) = t̂, π(v) = 0.
pub fn galilei_subgroup() -> Arc<CoisotropicSubgroup> {
    static CELL: OnceLock<Arc<CoisotropicSubgroup>> = OnceLock::new();
    CELL.get_or_init(|| {
        let (f, j) = (fq_g1(), fq_j());
        let table = |l: Letter| match f.base().generators()[l.gen].name.as_str() {
            "mu" => j.gen("muh"),
            "x" => j.gen("xh"),
            "t" => j.gen("th"),
            _ => AlgebraElement::zero(j.base()),
        };
        Arc::new(build_subgroup(&f, &j, &table, SubgroupSide::TwoSided).expect("Galilei subgroup is valid"))
    })
    .clone()
}

/// Truncated B_π (left) or B^π (right).
#[derive(Clone, Debug)]
pub struct HomogeneousSpace {
    pub side: Side,
    pub degree: u32,
    pub basis: Vec<AlgebraElement>,
    pub star_closed: bool,
}

impl HomogeneousSpace {
    pub fn contains(&self, a: &AlgebraElement) -> bool {
        let cols: Vec<BTreeMap<Monomial, Scalar>> = self.basis.iter().map(to_map).collect();
        express_in_span(&cols, &to_map(a)).is_some()
    }
}

fn to_map(a: &AlgebraElement) -> BTreeMap<Monomial, Scalar> {
    a.terms().map(|(m, c)| (m.clone(), c.clone())).collect()
}

impl CoisotropicSubgroup {
    pub fn ambient(&self) -> &Arc<HopfStructure> {
        &self.ambient
    }

    pub fn quotient(&self) -> &Arc<HopfStructure> {
        &self.quotient
    }

    pub fn side(&self) -> SubgroupSide {
        self.side
    }

    pub fn pi(&self, a: &AlgebraElement) -> AlgebraElement {
        self.pi.apply(a)
    }

    pub fn pi_monomial(&self, m: &Monomial) -> AlgebraElement {
        self.pi.image_monomial(m)
    }

    pub fn pi_one(&self) -> AlgebraElement {
        self.quotient.one()
    }

    /// Kernel of π at degree 1 (the generators' span).
    pub fn kernel_generators(&self) -> &[AlgebraElement] {
        &self.kernel_generators
    }

    /// Basis of ker π on the degree window.
    pub fn kernel_window(&self, degree: u32) -> Vec<AlgebraElement> {
        let win = self.ambient.window(degree);
        let mut sys = LinearSystem::new();
        for m in &win {
            sys.push_column(to_map(&self.pi_monomial(m))).expect("no window");
        }
        self.combine(&win, sys.nullspace())
    }

    fn combine(&self, win: &[Monomial], vecs: Vec<Vec<Scalar>>) -> Vec<AlgebraElement> {
        let p = self.ambient.base();
        vecs.into_iter()
            .map(|v| AlgebraElement::from_terms(p, win.iter().cloned().zip(v)))
            .collect()
    }

    /// `(π⊗id)Δa − π(1)⊗a` (left) or `(id⊗π)Δa − a⊗π(1)` (right).
    pub fn membership_defect(&self, a: &AlgebraElement, side: Side) -> TensorElement {
        let d = self.ambient.coproduct(a);
        let qb = self.quotient.base().clone();
        match side {
            Side::Left => {
                let img = d.substitute_slot(0, &[qb], |m| TensorElement::from_element(&self.pi_monomial(m)));
                img.sub(&self.pi_one().tensor(a))
            }
            Side::Right => {
                let img = d.substitute_slot(1, &[qb], |m| TensorElement::from_element(&self.pi_monomial(m)));
                img.sub(&a.tensor(&self.pi_one()))
            }
        }
    }

    /// Exact basis of the membership solution space on the degree window.
    pub fn homogeneous_space(&self, degree: u32, side: Side) -> Result<HomogeneousSpace, CoisoError> {
        let win = self.ambient.window(degree);
        let p = self.ambient.base();
        let mut sys = LinearSystem::new();
        for m in &win {
            let defect = self.membership_defect(&AlgebraElement::monomial(p, m.clone()), side);
            sys.push_column(defect.terms().map(|(k, c)| (k.clone(), c.clone())).collect())?;
        }
        let basis = self.combine(&win, sys.nullspace());
        let cols: Vec<BTreeMap<Monomial, Scalar>> = basis.iter().map(to_map).collect();
        let mut star_closed = true;
        for b in &basis {
            if express_in_span(&cols, &to_map(&self.ambient.star(b)?)).is_none() {
                star_closed = false;
            }
        }
        Ok(HomogeneousSpace { side, degree, basis, star_closed })
    }

    /// ε_L(a) = π(S^{-1}(a_(2)) a_(1)) or ε_R(a) = π(a_(2) S^{-1}(a_(1))).
    pub fn epsilon_side(&self, a: &AlgebraElement, side: Side) -> Result<AlgebraElement, CoisoError> {
        let d = self.ambient.coproduct(a);
        let p = self.ambient.base();
        let mut acc = AlgebraElement::zero(p);
        for (k, c) in d.terms() {
            let a1 = AlgebraElement::monomial(p, k[0].clone());
            let a2 = AlgebraElement::monomial(p, k[1].clone());
            let term = match side {
                Side::Left => self.ambient.antipode_inv(&a2)?.mul(&a1),
                Side::Right => a2.mul(&self.ambient.antipode_inv(&a1)?),
            };
            acc = acc.add(&term.scale(c));
        }
        Ok(self.pi(&acc))
    }

    /// Truncated checks of the subgroup invariants and of the homogeneous-space window.
    pub fn verify(&self, degree: u32) -> Result<CheckReport, CoisoError> {
        let mut r = CheckReport::new("coisotropic", self.ambient.name()).param("degree", degree);
        let p = self.ambient.base();
        let kernel = self.kernel_window(degree);
        let gens: Vec<AlgebraElement> = p.letters().into_iter().map(|l| AlgebraElement::letter(p, l)).collect();
        let qb = self.quotient.base().clone();

        let mut ideal_fail = None;
        let mut cases = 0;
        for k in &kernel {
            for g in &gens {
                let products = match self.side {
                    SubgroupSide::Right => vec![k.mul(g)],
                    SubgroupSide::Left => vec![g.mul(k)],
                    SubgroupSide::TwoSided => vec![k.mul(g), g.mul(k)],
                };
                for prod in products {
                    cases += 1;
                    if ideal_fail.is_none() && !self.pi(&prod).is_zero() {
                        ideal_fail = Some(format!("k={} g={}", k, g));
                    }
                }
            }
        }
        r.record("kernel-ideal", "ker π is a one-sided (here two-sided) ideal", cases, ideal_fail);

        let coideal_fail = kernel.iter().find_map(|k| {
            let t = self.ambient.coproduct(k).map_all(false, |_, m| self.pi_monomial(m));
            (!t.is_zero()).then(|| format!("{}", k))
        });
        r.record("kernel-coideal", "ker π is a two-sided coideal", kernel.len(), coideal_fail);

        let tau_fail = kernel.iter().find_map(|k| match self.ambient.tau(k) {
            Ok(t) if self.pi(&t).is_zero() => None,
            Ok(t) => Some(format!("τ({}) = {}", k, t)),
            Err(e) => Some(e.to_string()),
        });
        r.record("kernel-tau", "τ(ker π) ⊂ ker π", kernel.len(), tau_fail);

        let hs = self.homogeneous_space(degree, Side::Left)?;
        r.record("homogeneous-star-closed", "B_π* = B_π", hs.basis.len(), (!hs.star_closed).then(|| "B_π window".to_string()));
        let mut fail = None;
        for a in &hs.basis {
            let ast = self.ambient.star(a)?;
            let lhs = self.pi(&ast);
            let rhs = self.pi_one().scale(&self.ambient.counit(&ast));
            if lhs != rhs && fail.is_none() {
                fail = Some(format!("a={}", a));
            }
        }
        r.record("pi-of-star", "π(a*) = ε(a*)π(1) on B_π", hs.basis.len(), fail);

        let mut fail = None;
        let mut cases = 0;
        for a in &hs.basis {
            for b in &hs.basis {
                let prod = a.mul(b);
                if prod.degree() > degree as u64 {
                    continue;
                }
                cases += 1;
                if fail.is_none() && !hs.contains(&prod) {
                    fail = Some(format!("{} * {}", a, b));
                }
            }
        }
        r.record("homogeneous-subalgebra", "B_π is a subalgebra", cases, fail);

        let mut fail = None;
        for a in &hs.basis {
            let d = self.ambient.coproduct(a);
            // every first leg, grouped by second leg, must lie in the window span
            let mut by_second: BTreeMap<Monomial, Vec<(Monomial, Scalar)>> = BTreeMap::new();
            for (k, c) in d.terms() {
                by_second.entry(k[1].clone()).or_default().push((k[0].clone(), c.clone()));
            }
            for (_, firsts) in by_second {
                let e = AlgebraElement::from_terms(p, firsts);
                if fail.is_none() && !hs.contains(&e) {
                    fail = Some(format!("Δ({}) leg {}", a, e));
                }
            }
        }
        r.record("homogeneous-coideal", "ΔB_π ⊂ B_π ⊗ F_q(G)", hs.basis.len(), fail);

        let mut fail = None;
        for a in &hs.basis {
            for side in [Side::Left, Side::Right] {
                let e = self.epsilon_side(a, side)?;
                let expected = self.pi_one().scale(&self.ambient.counit(a));
                if e != expected && fail.is_none() {
                    fail = Some(format!("{:?} a={}: {}", side, a, e));
                }
            }
        }
        r.record("epsilon-side", "ε_L(a) = ε(a)π(1) = ε_R(a)", hs.basis.len() * 2, fail);
        let _ = qb;
        Ok(r)
    }
}

#[cfg(test)]
mod tests;
