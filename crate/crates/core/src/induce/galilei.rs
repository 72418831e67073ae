use std::fmt;
use std::sync::Arc;

use super::{generic_intertwiner_check, InduceError};
use crate::hopf::uq_g1;
use crate::ncalg::{AlgebraElement, Monomial};
use crate::quasiinv::{galilei_weight, nu_w, ChiElem, ChiFunctional, Functional, GalileiWeight, H0Module, Weight};
use crate::report::{first_failure, CheckReport};
use crate::scalars::Scalar;

/// `φ_{m,u} · body` with `body ∈ H_0^irr`, i.e. a finite combination of φχ^ℓ.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GalileiVector {
    body: ChiElem,
}

impl GalileiVector {
    pub fn zero() -> Self {
        GalileiVector { body: ChiElem::zero() }
    }

    /// φχ^ℓ.
    pub fn basis(l: i64) -> Self {
        GalileiVector { body: ChiElem::chi_pow(l) }
    }

    pub fn from_body(body: ChiElem) -> Self {
        GalileiVector { body }
    }

    pub fn from_coeffs(it: impl IntoIterator<Item = (i64, Scalar)>) -> Self {
        GalileiVector { body: ChiElem::from_coeffs(it) }
    }

    pub fn body(&self) -> &ChiElem {
        &self.body
    }

    pub fn coeff(&self, l: i64) -> Scalar {
        self.body.coeff(l)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.body.coeffs()
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn add(&self, o: &GalileiVector) -> GalileiVector {
        GalileiVector { body: self.body.add(&o.body) }
    }

    pub fn sub(&self, o: &GalileiVector) -> GalileiVector {
        GalileiVector { body: self.body.sub(&o.body) }
    }

    pub fn scale(&self, c: &Scalar) -> GalileiVector {
        GalileiVector { body: self.body.scale(c) }
    }
}

impl fmt::Display for GalileiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.body.is_zero() {
            return write!(f, "0");
        }
        write!(f, "phi*({})", self.body)
    }
}

/// The generators of U_q(G(1)) acting on φ_{m,u} H_0^irr.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GalileiOp {
    M,
    K,
    KInv,
    T,
    B,
}

impl GalileiOp {
    pub const ALL: [GalileiOp; 5] = [GalileiOp::K, GalileiOp::KInv, GalileiOp::B, GalileiOp::T, GalileiOp::M];

    pub fn name(&self) -> &'static str {
        match self {
            GalileiOp::M => "M",
            GalileiOp::K => "K",
            GalileiOp::KInv => "K^-1",
            GalileiOp::T => "T",
            GalileiOp::B => "B",
        }
    }

    pub fn parse(s: &str) -> Option<GalileiOp> {
        GalileiOp::ALL.iter().copied().find(|o| o.name() == s || (s == "Kinv" && *o == GalileiOp::KInv))
    }

    pub fn element(&self) -> AlgebraElement {
        let u = uq_g1();
        match self {
            GalileiOp::KInv => AlgebraElement::gen_pow(u.base(), "K", -1),
            _ => u.gen(self.name()),
        }
    }
}

fn wm() -> Scalar {
    Scalar::w() * Scalar::m()
}

/// ρ̃(K^{±1})φχ^ℓ = φχ^{ℓ±1}, ρ̃(B)φχ^ℓ = iwm(ℓ+1/2)φχ^ℓ,
/// ρ̃(T) = multiplication by u − (2 − χ − χ^{-1})/(2w²m), ρ̃(M) = m.
pub fn galilei_rep(op: GalileiOp, a: &GalileiVector) -> GalileiVector {
    let body = match op {
        GalileiOp::M => a.body.scale(&Scalar::m()),
        GalileiOp::K => a.body.shift(1),
        GalileiOp::KInv => a.body.shift(-1),
        GalileiOp::B => {
            let iwm = Scalar::i() * wm();
            ChiElem::from_coeffs(a.body.coeffs().map(|(l, c)| (l, c.mul(&iwm).mul(&Scalar::rational(2 * l + 1, 2)))))
        }
        GalileiOp::T => {
            let k = Scalar::one().div(&(Scalar::from_int(2) * Scalar::w() * wm())).expect("nonzero");
            let lap = ChiElem::scalar(Scalar::from_int(2)).sub(&ChiElem::chi_pow(1)).sub(&ChiElem::chi_pow(-1));
            let mult = ChiElem::scalar(Scalar::u()).sub(&lap.scale(&k));
            a.body.mul(&mult)
        }
    };
    GalileiVector { body }
}

/// Linear extension to U_q(G(1)): `M^a K^ℓ T^c B^d` acts as ρ̃(M)^a ρ̃(K)^ℓ ρ̃(T)^c ρ̃(B)^d.
pub fn galilei_rep_element(x: &AlgebraElement, a: &GalileiVector) -> GalileiVector {
    let mut acc = GalileiVector::zero();
    for (m, c) in x.terms() {
        acc = acc.add(&apply_monomial(m, a).scale(c));
    }
    acc
}

fn apply_monomial(m: &Monomial, a: &GalileiVector) -> GalileiVector {
    let e = m.exps();
    let mut v = a.clone();
    let steps = [
        (GalileiOp::B, e[3]),
        (GalileiOp::T, e[2]),
        (if e[1] >= 0 { GalileiOp::K } else { GalileiOp::KInv }, e[1].abs()),
        (GalileiOp::M, e[0]),
    ];
    for (op, n) in steps {
        for _ in 0..n {
            v = galilei_rep(op, &v);
        }
    }
    v
}

/// `h(Σ conj(a_ℓ) b_n χ^{ℓ+n+1})`, using (φχ^ℓ)*(φχ^n) = χ^{ℓ+n+1}.
pub fn form_with(h: &ChiFunctional, a: &GalileiVector, b: &GalileiVector) -> Scalar {
    let prod = a.body.star().mul(&ChiElem::chi_pow(1)).mul(&b.body);
    h.eval(&H0Module::left(), &prod)
}

/// ⟨a, b⟩ = ν_w(a* b); on the basis δ_{ℓ+n+1,0}.
pub fn minkowski_form(a: &GalileiVector, b: &GalileiVector) -> Scalar {
    nu_w(&a.body.star().mul(&ChiElem::chi_pow(1)).mul(&b.body))
}

/// j(φχ^ℓ) = φχ^{−ℓ−1}, extended linearly.
pub fn j_structure(a: &GalileiVector) -> GalileiVector {
    GalileiVector::from_coeffs(a.coeffs().map(|(l, c)| (-l - 1, c.clone())))
}

/// (φχ^ℓ, φχ^n) = δ_{ℓn}, conjugate-linear in the first slot.
pub fn scalar_product(a: &GalileiVector, b: &GalileiVector) -> Scalar {
    let mut acc = Scalar::zero();
    for (l, c) in a.coeffs() {
        acc = acc.add(&c.conj().mul(&b.coeff(l)));
    }
    acc
}

/// F(φa) = φaξ.
pub fn equivalence_intertwiner(xi: &ChiElem, a: &GalileiVector) -> Result<GalileiVector, InduceError> {
    if xi.inverse().is_none() {
        return Err(InduceError::NotInvertible(xi.to_string()));
    }
    Ok(GalileiVector { body: a.body.mul(xi) })
}

/// Matrix of ρ̃(X) on {φχ^ℓ : |ℓ| ≤ L}: entry `[r][c]` is the φχ^{r−L} coefficient of ρ̃(X)φχ^{c−L}.
pub fn galilei_matrix(x: &AlgebraElement, window: i64) -> Vec<Vec<Scalar>> {
    let cols: Vec<GalileiVector> = (-window..=window).map(|l| galilei_rep_element(x, &GalileiVector::basis(l))).collect();
    (-window..=window).map(|r| cols.iter().map(|v| v.coeff(r)).collect()).collect()
}

fn basis_window(l: i64) -> Vec<GalileiVector> {
    (-l..=l).map(GalileiVector::basis).collect()
}

/// Every defining relation of U_q(G(1)) as an operator identity on the window, plus
/// KK^{-1} = 1 and the named relations.
pub fn relations_check(window: i64) -> CheckReport {
    let u = uq_g1();
    let p = u.base();
    let mut r = CheckReport::new("relations", "galilei").param("window", window).param("rho_M", "m*id");
    let vs = basis_window(window);
    let rules: Vec<_> = p.rules().map(|(k, _)| *k).collect();
    r.record("defining-rules", "ρ̃(l)ρ̃(r) = ρ̃(normal form of lr) for every rewrite pair", rules.len() * vs.len(),
        rules.iter().find_map(|&(l, rr)| {
            let le = AlgebraElement::letter(p, l);
            let re = AlgebraElement::letter(p, rr);
            let nf = le.mul(&re);
            vs.iter().find_map(|v| {
                let lhs = galilei_rep_element(&le, &galilei_rep_element(&re, v));
                (lhs != galilei_rep_element(&nf, v)).then(|| format!("{}*{} on {}", p.letter_name(l), p.letter_name(rr), v))
            })
        }));
    let op = |o: GalileiOp, v: &GalileiVector| galilei_rep(o, v);
    let two_w_inv = Scalar::i().div(&(Scalar::from_int(2) * Scalar::w())).expect("nonzero");
    type Rel = (&'static str, &'static str, Box<dyn Fn(&GalileiVector) -> (GalileiVector, GalileiVector)>);
    let rels: Vec<Rel> = vec![
        ("k-kinv", "ρ̃(K)ρ̃(K^{-1}) = id = ρ̃(K^{-1})ρ̃(K)", Box::new(move |v| {
            let a = op(GalileiOp::K, &op(GalileiOp::KInv, v));
            let b = op(GalileiOp::KInv, &op(GalileiOp::K, v));
            (a.add(&b), v.scale(&Scalar::from_int(2)))
        })),
        ("kbk", "ρ̃(K)ρ̃(B)ρ̃(K)^{-1} = ρ̃(B) − iwm·id", Box::new(move |v| {
            let a = op(GalileiOp::K, &op(GalileiOp::B, &op(GalileiOp::KInv, v)));
            (a, op(GalileiOp::B, v).sub(&op(GalileiOp::M, v).scale(&(Scalar::i() * Scalar::w()))))
        })),
        ("bt", "[ρ̃(B), ρ̃(T)] = i(ρ̃(K) − ρ̃(K^{-1}))/(2w)", Box::new(move |v| {
            let a = op(GalileiOp::B, &op(GalileiOp::T, v)).sub(&op(GalileiOp::T, &op(GalileiOp::B, v)));
            (a, op(GalileiOp::K, v).sub(&op(GalileiOp::KInv, v)).scale(&two_w_inv))
        })),
        ("kt", "[ρ̃(K), ρ̃(T)] = 0", Box::new(move |v| {
            (op(GalileiOp::K, &op(GalileiOp::T, v)), op(GalileiOp::T, &op(GalileiOp::K, v)))
        })),
        ("m-central", "ρ̃(M) = m·id commutes with ρ̃(K), ρ̃(B), ρ̃(T)", Box::new(move |v| {
            let mut lhs = op(GalileiOp::M, v).sub(&v.scale(&Scalar::m()));
            for o in [GalileiOp::K, GalileiOp::B, GalileiOp::T] {
                lhs = lhs.add(&op(GalileiOp::M, &op(o, v)).sub(&op(o, &op(GalileiOp::M, v))));
            }
            (lhs, GalileiVector::zero())
        })),
    ];
    for (id, anchor, f) in &rels {
        let w = vs.iter().find_map(|v| {
            let (a, b) = f(v);
            (a != b).then(|| format!("on {}: {} vs {}", v, a, b))
        });
        r.record(id, anchor, vs.len(), w);
    }
    r
}

/// ⟨A, ρ̃(X)B⟩ = ⟨ρ̃(X*)A, B⟩ for the five generators and every window pair, with Hermiticity.
pub fn unitarity_check(window: i64) -> CheckReport {
    let u = uq_g1();
    let vs = basis_window(window);
    let mut r = CheckReport::new("unitarity", "galilei")
        .param("window", window)
        .param("phi_T", galilei_weight(&u.gen("T")).to_string());
    let n = vs.len();
    let cells: Vec<(GalileiOp, usize, usize)> = GalileiOp::ALL
        .iter()
        .flat_map(|&o| (0..n).flat_map(move |i| (0..n).map(move |j| (o, i, j))))
        .collect();
    r.record("unitarity", "⟨A, ρ̃(X)B⟩ = ⟨ρ̃(X*)A, B⟩ under ⟨φχ^ℓ, φχ^n⟩ = δ_{ℓ+n+1,0}", cells.len(),
        first_failure(&cells, |&(o, i, j)| {
            let xs = u.star(&o.element()).expect("uq-g1 has *");
            let lhs = minkowski_form(&vs[i], &galilei_rep(o, &vs[j]));
            let rhs = minkowski_form(&galilei_rep_element(&xs, &vs[i]), &vs[j]);
            (lhs != rhs).then(|| format!("X={} A={} B={}: {} vs {}", o.name(), vs[i], vs[j], lhs, rhs))
        }));
    let pairs: Vec<(usize, usize)> = index_pairs(vs.len());
    r.record("hermitian", "⟨A,B⟩ = conj ⟨B,A⟩", pairs.len(), first_failure(&pairs, |&(i, j)| {
        (minkowski_form(&vs[i], &vs[j]) != minkowski_form(&vs[j], &vs[i]).conj()).then(|| format!("{} {}", vs[i], vs[j]))
    }));
    r
}

/// j² = id, ⟨a,b⟩ = (j(a), b) and positivity of ( , ) on the window.
pub fn jform_check(window: i64) -> CheckReport {
    let vs = basis_window(window);
    let mut r = CheckReport::new("jform", "galilei").param("window", window);
    r.record("j-involution", "j² = id", vs.len(), vs.iter().find_map(|v| (j_structure(&j_structure(v)) != *v).then(|| v.to_string())));
    let pairs: Vec<(usize, usize)> = index_pairs(vs.len());
    r.record("jform", "⟨φχ^ℓ, φχ^n⟩ = (j(φχ^ℓ), φχ^n)", pairs.len(), first_failure(&pairs, |&(i, j)| {
        let a = minkowski_form(&vs[i], &vs[j]);
        let b = scalar_product(&j_structure(&vs[i]), &vs[j]);
        (a != b).then(|| format!("{} {}: {} vs {}", vs[i], vs[j], a, b))
    }));
    r.record("truescalar", "(φχ^ℓ, φχ^n) = δ_{ℓn}", pairs.len(), first_failure(&pairs, |&(i, j)| {
        let s = scalar_product(&vs[i], &vs[j]);
        (s != Scalar::from_int((i == j) as i64)).then(|| format!("{} {}: {}", vs[i], vs[j], s))
    }));
    r
}

/// Equivalence transport for ξ = χ: quasi-invariance of the transformed weight, intertwining
/// of the generic ρ̃ on H_0^irr, and the form identity for F(φχ^ℓ) = φχ^{ℓ+1}.
pub fn intertwiner_check(window: i64) -> CheckReport {
    let alg = H0Module::left();
    let xi = ChiElem::chi_pow(1);
    let phi: Arc<dyn Weight<H0Module>> = Arc::new(GalileiWeight::new());
    let h: Arc<dyn Functional<H0Module>> = Arc::new(ChiFunctional::nu());
    let xs = crate::quasiinv::uq_window(2);
    let vectors: Vec<Vec<ChiElem>> = (-window..=window).map(|l| vec![ChiElem::chi_pow(l)]).collect();
    let mut r = generic_intertwiner_check(&alg, h, phi.clone(), &xi, &xs, &vectors).expect("χ is invertible");
    r.param_mut("window", window);
    let t = crate::quasiinv::transform_weight(&alg, phi, &xi).expect("χ is invertible");
    let h1 = ChiFunctional::nu().conjugated(&xi);
    for form in [crate::quasiinv::CheckForm::Def, crate::quasiinv::CheckForm::Lemma] {
        let q = crate::quasiinv::quasi_invariance_check(&alg, &h1, &t, &xs, &crate::quasiinv::chi_window(window + 1), form);
        for mut e in q.checks {
            e.id = format!("transformed-{}-{}", q.suite, e.id);
            r.push(e);
        }
    }
    let vs = basis_window(window);
    r.record("shift", "F(φχ^ℓ) = φχ^{ℓ+1}", vs.len(), vs.iter().enumerate().find_map(|(k, v)| {
        let fv = equivalence_intertwiner(&xi, v).expect("χ is invertible");
        (fv != GalileiVector::basis(k as i64 - window + 1)).then(|| v.to_string())
    }));
    let h2 = ChiFunctional::nu().conjugated(&xi.inverse().expect("χ is invertible"));
    let pairs: Vec<(usize, usize)> = index_pairs(vs.len());
    r.record("galilei-form-transport", "⟨Fa, Fb⟩ under ν_w(χ^{-1} · χ^{-1}) equals ⟨a, b⟩", pairs.len(),
        first_failure(&pairs, |&(i, j)| {
            let fa = equivalence_intertwiner(&xi, &vs[i]).expect("invertible");
            let fb = equivalence_intertwiner(&xi, &vs[j]).expect("invertible");
            let lhs = form_with(&h2, &fa, &fb);
            (lhs != minkowski_form(&vs[i], &vs[j])).then(|| format!("{} {}: {}", vs[i], vs[j], lhs))
        }));
    r
}

fn index_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
}
