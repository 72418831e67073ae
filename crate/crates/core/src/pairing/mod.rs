//! Duality pairing between U_q(G(1)) and F_q(G(1)) and the regular actions it induces.
//!
//! The closed formula on the bases I^α' K^ℓ T^γ' N^δ' and μ^α x^β t^γ v^δ is
//! `i^{α+β+γ+δ} α! γ! δ! κ_ℓ^β δ_{αα'} δ_{γγ'} δ_{δδ'}`. With the factor taken literally,
//! `κ_ℓ = -iwℓ`, the pairing is not compatible with the relation `[x, v] = -2iw v`
//! and the coproducts; `κ_ℓ = wℓ` is the consistent choice and the default.
//! Both are available through [`PairingConvention`].

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::hopf::{fq_g1, uq_g1, HopfStructure};
use crate::ncalg::{AlgebraElement, Monomial};
use crate::report::{first_failure, CheckReport};
use crate::scalars::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairingConvention {
    /// `⟨K^ℓ, x⟩ = iwℓ`: a Hopf pairing.
    Hopf,
    /// The displayed factor `(-iwℓ)^β` taken literally: `⟨K^ℓ, x⟩ = wℓ`.
    AsPrinted,
}

/// Which coproduct leg pairs with which factor of a product in U.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    /// `⟨XY, a⟩ = Σ ⟨X, a_(1)⟩⟨Y, a_(2)⟩`.
    Standard,
    /// `⟨XY, a⟩ = Σ ⟨X, a_(2)⟩⟨Y, a_(1)⟩`.
    Mirrored,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// `I^alpha K^ell T^gamma N^delta` with `I = K^{-1}M`, `N = KB`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DualBasisMonomial {
    pub alpha: u32,
    pub ell: i64,
    pub gamma: u32,
    pub delta: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum DualLetter {
    I,
    K(i8),
    T,
    N,
}

impl DualBasisMonomial {
    pub fn new(alpha: u32, ell: i64, gamma: u32, delta: u32) -> Self {
        DualBasisMonomial { alpha, ell, gamma, delta }
    }

    fn letters(&self) -> Vec<DualLetter> {
        let mut w = vec![DualLetter::I; self.alpha as usize];
        let s = if self.ell < 0 { -1 } else { 1 };
        w.extend(std::iter::repeat_n(DualLetter::K(s), self.ell.unsigned_abs() as usize));
        w.extend(std::iter::repeat_n(DualLetter::T, self.gamma as usize));
        w.extend(std::iter::repeat_n(DualLetter::N, self.delta as usize));
        w
    }

    /// The element of U_q(G(1)) in the M, K, T, B normal basis.
    pub fn to_uq(&self) -> AlgebraElement {
        let u = uq_g1();
        let p = u.base();
        let k = |e: i64| AlgebraElement::gen_pow(p, "K", e);
        let i = k(-1).mul(&u.gen("M"));
        let n = k(1).mul(&u.gen("B"));
        i.pow(self.alpha).mul(&k(self.ell)).mul(&u.gen("T").pow(self.gamma)).mul(&n.pow(self.delta))
    }
}

/// Expands an element of U_q(G(1)) in the I, K, T, N basis.
pub fn to_dual_basis(x: &AlgebraElement) -> Vec<(DualBasisMonomial, Scalar)> {
    let mut rest = x.clone();
    let mut out: Vec<(DualBasisMonomial, Scalar)> = Vec::new();
    // M^a K^l T^c B^d leads I^a K^{l+a-d} T^c N^d; corrections lower the B-degree.
    while let Some((m, c)) = rest.terms().max_by_key(|(m, _)| (m.exps()[3], (*m).clone())).map(|(m, c)| (m.clone(), c.clone())) {
        let e = m.exps();
        let d = DualBasisMonomial::new(e[0] as u32, e[1] + e[0] - e[3], e[2] as u32, e[3] as u32);
        let img = d.to_uq();
        debug_assert!(img.coeff(&m).is_one());
        rest = rest.sub(&img.scale(&c));
        out.push((d, c));
    }
    out.sort_by_key(|a| a.0);
    out
}

fn factorial(n: u32) -> Scalar {
    Scalar::from_int((1..=n as i64).product())
}

/// Evaluator for the pairing and the regular actions.
pub struct Pairing {
    convention: PairingConvention,
    orientation: Orientation,
    u: Arc<HopfStructure>,
    f: Arc<HopfStructure>,
    word_cache: RwLock<HashMap<(DualBasisMonomial, Monomial), Scalar>>,
    act_cache: RwLock<HashMap<(DualLetter, Monomial), AlgebraElement>>,
    expand_cache: RwLock<HashMap<Monomial, Vec<(DualBasisMonomial, Scalar)>>>,
}

impl Pairing {
    pub fn new(convention: PairingConvention, orientation: Orientation) -> Self {
        Pairing {
            convention,
            orientation,
            u: uq_g1(),
            f: fq_g1(),
            word_cache: RwLock::new(HashMap::new()),
            act_cache: RwLock::new(HashMap::new()),
            expand_cache: RwLock::new(HashMap::new()),
        }
    }

    /// The default pairing: Hopf convention, orientation chosen by [`select_orientation`].
    pub fn galilei() -> Arc<Pairing> {
        static CELL: OnceLock<Arc<Pairing>> = OnceLock::new();
        CELL.get_or_init(|| {
            let (o, _) = select_orientation(PairingConvention::Hopf);
            Arc::new(Pairing::new(PairingConvention::Hopf, o))
        })
        .clone()
    }

    pub fn convention(&self) -> PairingConvention {
        self.convention
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn uq(&self) -> &Arc<HopfStructure> {
        &self.u
    }

    pub fn fq(&self) -> &Arc<HopfStructure> {
        &self.f
    }

    /// The closed formula on basis monomials.
    pub fn pair_closed(&self, x: &DualBasisMonomial, a: &Monomial) -> Scalar {
        let e = a.exps();
        let (al, be, ga, de) = (e[0], e[1], e[2], e[3]);
        if al != x.alpha as i64 || ga != x.gamma as i64 || de != x.delta as i64 {
            return Scalar::zero();
        }
        let ell = Scalar::from_int(x.ell);
        let kappa = match self.convention {
            PairingConvention::Hopf => Scalar::w() * ell,
            PairingConvention::AsPrinted => -(Scalar::i() * Scalar::w() * ell),
        };
        let kb = if be == 0 { Scalar::one() } else { kappa.pow(be).expect("nonnegative power") };
        let ipow = Scalar::i().pow(al + be + ga + de).expect("nonnegative power");
        ipow * factorial(al as u32) * factorial(ga as u32) * factorial(de as u32) * kb
    }

    fn letter_row(&self, l: DualLetter, a: &Monomial) -> Scalar {
        let d = match l {
            DualLetter::I => DualBasisMonomial::new(1, 0, 0, 0),
            DualLetter::K(s) => DualBasisMonomial::new(0, s as i64, 0, 0),
            DualLetter::T => DualBasisMonomial::new(0, 0, 1, 0),
            DualLetter::N => DualBasisMonomial::new(0, 0, 0, 1),
        };
        self.pair_closed(&d, a)
    }

    /// `g.a = Σ a_(1) ⟨g, a_(2)⟩` for a single letter, on a monomial.
    fn letter_act_monomial(&self, l: DualLetter, m: &Monomial) -> AlgebraElement {
        if let Some(hit) = self.act_cache.read().expect("cache poisoned").get(&(l, m.clone())) {
            return hit.clone();
        }
        let p = self.f.base();
        let d = self.f.coproduct_monomial(m);
        let mut terms = Vec::new();
        for (k, c) in d.terms() {
            let r = self.letter_row(l, &k[1]);
            if !r.is_zero() {
                terms.push((k[0].clone(), c.mul(&r)));
            }
        }
        let v = AlgebraElement::from_terms(p, terms);
        self.act_cache.write().expect("cache poisoned").insert((l, m.clone()), v.clone());
        v
    }

    fn letter_act(&self, l: DualLetter, a: &AlgebraElement) -> AlgebraElement {
        let mut acc = AlgebraElement::zero(self.f.base());
        for (m, c) in a.terms() {
            acc = acc.add(&self.letter_act_monomial(l, m).scale(c));
        }
        acc
    }

    /// `⟨g_1 ⋯ g_k, a⟩` through the iterated coproduct of `a`, one letter at a time.
    pub fn pair_word(&self, x: &DualBasisMonomial, a: &Monomial) -> Scalar {
        let key = (*x, a.clone());
        if let Some(hit) = self.word_cache.read().expect("cache poisoned").get(&key) {
            return hit.clone();
        }
        let mut letters = x.letters();
        if self.orientation == Orientation::Mirrored {
            letters.reverse();
        }
        let mut cur = AlgebraElement::monomial(self.f.base(), a.clone());
        for l in letters.iter().rev() {
            if cur.is_zero() {
                break;
            }
            cur = self.letter_act(*l, &cur);
        }
        let v = self.f.counit(&cur);
        self.word_cache.write().expect("cache poisoned").insert(key, v.clone());
        v
    }

    fn expand(&self, m: &Monomial) -> Vec<(DualBasisMonomial, Scalar)> {
        if let Some(hit) = self.expand_cache.read().expect("cache poisoned").get(m) {
            return hit.clone();
        }
        let v = to_dual_basis(&AlgebraElement::monomial(self.u.base(), m.clone()));
        self.expand_cache.write().expect("cache poisoned").insert(m.clone(), v.clone());
        v
    }

    /// Pairing of a U monomial with an F monomial.
    pub fn pair_monomials(&self, x: &Monomial, a: &Monomial) -> Scalar {
        let mut acc = Scalar::zero();
        for (d, c) in self.expand(x) {
            let v = self.pair_word(&d, a);
            if !v.is_zero() {
                acc = acc.add(&c.mul(&v));
            }
        }
        acc
    }

    /// Bilinear pairing `⟨X, a⟩`.
    pub fn pair(&self, x: &AlgebraElement, a: &AlgebraElement) -> Scalar {
        let mut acc = Scalar::zero();
        for (mx, cx) in x.terms() {
            for (ma, ca) in a.terms() {
                let v = self.pair_monomials(mx, ma);
                if !v.is_zero() {
                    acc = acc.add(&cx.mul(ca).mul(&v));
                }
            }
        }
        acc
    }

    /// Left action `X.a = Σ a_(1)⟨X, a_(2)⟩` or right action `a.X = Σ ⟨X, a_(1)⟩ a_(2)`.
    pub fn act(&self, x: &AlgebraElement, a: &AlgebraElement, side: Side) -> AlgebraElement {
        let p = self.f.base();
        let (keep, pair_leg) = match side {
            Side::Left => (0, 1),
            Side::Right => (1, 0),
        };
        let d = self.f.coproduct(a);
        let mut terms = Vec::new();
        for (k, c) in d.terms() {
            let mut s = Scalar::zero();
            for (mx, cx) in x.terms() {
                s = s.add(&cx.mul(&self.pair_monomials(mx, &k[pair_leg])));
            }
            if !s.is_zero() {
                terms.push((k[keep].clone(), c.mul(&s)));
            }
        }
        AlgebraElement::from_terms(p, terms)
    }

    /// Basis pairs of the agreement window: α', γ', δ' ≤ `n`, |ℓ| ≤ `n`, α, γ, δ ≤ `n`, β ≤ `beta`.
    pub fn agreement_window(&self, n: u32, beta: u32) -> Vec<(DualBasisMonomial, Monomial)> {
        let mut duals = Vec::new();
        for a in 0..=n {
            for l in -(n as i64)..=n as i64 {
                for g in 0..=n {
                    for d in 0..=n {
                        duals.push(DualBasisMonomial::new(a, l, g, d));
                    }
                }
            }
        }
        let mut monos = Vec::new();
        for a in 0..=n as i64 {
            for b in 0..=beta as i64 {
                for g in 0..=n as i64 {
                    for d in 0..=n as i64 {
                        monos.push(Monomial(vec![a, b, g, d]));
                    }
                }
            }
        }
        duals.iter().flat_map(|x| monos.iter().map(move |m| (*x, m.clone()))).collect()
    }

    /// Mismatches between the recursive evaluation and the closed formula.
    pub fn closed_vs_recursive(&self, n: u32, beta: u32) -> Vec<(DualBasisMonomial, Monomial, Scalar, Scalar)> {
        use rayon::prelude::*;
        self.agreement_window(n, beta)
            .par_iter()
            .filter_map(|(x, m)| {
                let closed = self.pair_closed(x, m);
                let rec = self.pair_word(x, m);
                (closed != rec).then(|| (*x, m.clone(), closed, rec))
            })
            .collect()
    }

    /// The Hopf pairing laws on windows of the given degree.
    pub fn verify_laws(&self, degree: u32) -> CheckReport {
        let mut r = CheckReport::new("pairing", "galilei")
            .param("degree", degree)
            .param("convention", format!("{:?}", self.convention))
            .param("orientation", format!("{:?}", self.orientation));
        let (u, f) = (&self.u, &self.f);
        let uw = u.window(degree);
        let fw = f.window(degree);
        let el_u = |m: &Monomial| AlgebraElement::monomial(u.base(), m.clone());
        let el_f = |m: &Monomial| AlgebraElement::monomial(f.base(), m.clone());
        let gens_u: Vec<Monomial> = uw.iter().filter(|m| m.total_degree() == 1).cloned().collect();
        let gens_f: Vec<Monomial> = fw.iter().filter(|m| m.total_degree() == 1).cloned().collect();

        let cases: Vec<(Monomial, Monomial, Monomial)> = gens_u
            .iter()
            .flat_map(|x| uw.iter().filter(|y| y.total_degree() < degree as u64).map(move |y| (x.clone(), y.clone())))
            .flat_map(|(x, y)| fw.iter().map(move |a| (x.clone(), y.clone(), a.clone())))
            .collect();
        r.record("product-coproduct", "⟨XY, a⟩ = Σ⟨X, a_(1)⟩⟨Y, a_(2)⟩", cases.len(), first_failure(&cases, |(x, y, a)| {
            let lhs = self.pair(&el_u(x).mul(&el_u(y)), &el_f(a));
            let d = f.coproduct_monomial(a);
            let mut rhs = Scalar::zero();
            for (k, c) in d.terms() {
                rhs = rhs.add(&c.mul(&self.pair_monomials(x, &k[0])).mul(&self.pair_monomials(y, &k[1])));
            }
            (lhs != rhs).then(|| {
                format!("X={} Y={} a={}: {} vs {}", u.base().monomial_string(x), u.base().monomial_string(y), f.base().monomial_string(a), lhs, rhs)
            })
        }));

        let cases: Vec<(Monomial, Monomial, Monomial)> = uw
            .iter()
            .flat_map(|x| gens_f.iter().map(move |a| (x.clone(), a.clone())))
            .flat_map(|(x, a)| fw.iter().filter(|b| b.total_degree() < degree as u64).map(move |b| (x.clone(), a.clone(), b.clone())))
            .collect();
        r.record("coproduct-product", "⟨X, ab⟩ = Σ⟨X_(1), a⟩⟨X_(2), b⟩", cases.len(), first_failure(&cases, |(x, a, b)| {
            let lhs = self.pair(&el_u(x), &el_f(a).mul(&el_f(b)));
            let d = u.coproduct_monomial(x);
            let mut rhs = Scalar::zero();
            for (k, c) in d.terms() {
                rhs = rhs.add(&c.mul(&self.pair_monomials(&k[0], a)).mul(&self.pair_monomials(&k[1], b)));
            }
            (lhs != rhs).then(|| {
                format!("X={} a={} b={}: {} vs {}", u.base().monomial_string(x), f.base().monomial_string(a), f.base().monomial_string(b), lhs, rhs)
            })
        }));

        let pairs: Vec<(Monomial, Monomial)> =
            uw.iter().flat_map(|x| fw.iter().map(move |a| (x.clone(), a.clone()))).collect();
        r.record("unit-counit", "⟨1, a⟩ = ε(a), ⟨X, 1⟩ = ε(X)", uw.len() + fw.len(), {
            let one_u = u.one();
            let one_f = f.one();
            fw.iter()
                .find(|a| self.pair(&one_u, &el_f(a)) != f.counit_monomial(a))
                .map(|a| format!("a={}", f.base().monomial_string(a)))
                .or_else(|| {
                    uw.iter()
                        .find(|x| self.pair(&el_u(x), &one_f) != u.counit_monomial(x))
                        .map(|x| format!("X={}", u.base().monomial_string(x)))
                })
        });
        r.record("antipode", "⟨S X, a⟩ = ⟨X, S a⟩", pairs.len(), first_failure(&pairs, |(x, a)| {
            let lhs = self.pair(&u.antipode_monomial(x).expect("antipode"), &el_f(a));
            let rhs = self.pair(&el_u(x), &f.antipode_monomial(a).expect("antipode"));
            (lhs != rhs).then(|| format!("X={} a={}: {} vs {}", u.base().monomial_string(x), f.base().monomial_string(a), lhs, rhs))
        }));
        r.record("star", "⟨X*, a⟩ = conj ⟨X, τ(a)⟩", pairs.len(), first_failure(&pairs, |(x, a)| {
            let lhs = self.pair(&u.star(&el_u(x)).expect("star"), &el_f(a));
            let rhs = self.pair(&el_u(x), &f.tau(&el_f(a)).expect("tau")).conj();
            (lhs != rhs).then(|| format!("X={} a={}: {} vs {}", u.base().monomial_string(x), f.base().monomial_string(a), lhs, rhs))
        }));
        r.record("module-algebra", "X.(ab) = Σ (X_(1).a)(X_(2).b)", cases.len(), first_failure(&cases, |(x, a, b)| {
            let xe = el_u(x);
            let lhs = self.act(&xe, &el_f(a).mul(&el_f(b)), Side::Left);
            let d = u.coproduct_monomial(x);
            let mut rhs = AlgebraElement::zero(f.base());
            for (k, c) in d.terms() {
                let l = self.act(&el_u(&k[0]), &el_f(a), Side::Left);
                let rr = self.act(&el_u(&k[1]), &el_f(b), Side::Left);
                rhs = rhs.add(&l.mul(&rr).scale(c));
            }
            (lhs != rhs).then(|| format!("X={} a={} b={}", u.base().monomial_string(x), f.base().monomial_string(a), f.base().monomial_string(b)))
        }));
        let gen_pairs: Vec<(Monomial, Monomial)> =
            gens_u.iter().flat_map(|x| fw.iter().map(move |a| (x.clone(), a.clone()))).collect();
        r.record("action-star", "(X*.a)* = S^{-1}(X).a*", gen_pairs.len(), first_failure(&gen_pairs, |(x, a)| {
            let xe = el_u(x);
            let ae = el_f(a);
            let lhs = f.star(&self.act(&u.star(&xe).expect("star"), &ae, Side::Left)).expect("star");
            let rhs = self.act(&u.antipode_inv(&xe).expect("antipode"), &f.star(&ae).expect("star"), Side::Left);
            (lhs != rhs).then(|| format!("X={} a={}: {} vs {}", u.base().monomial_string(x), f.base().monomial_string(a), lhs, rhs))
        }));
        r
    }
}

/// Picks the orientation under which the recursive pairing reproduces the closed formula on the
/// degree ≤ 2 window; returns it together with a diagnostic when the first choice failed.
pub fn select_orientation(convention: PairingConvention) -> (Orientation, Option<String>) {
    let std = Pairing::new(convention, Orientation::Standard);
    let bad = std.closed_vs_recursive(2, 2);
    if bad.is_empty() {
        return (Orientation::Standard, None);
    }
    let (x, m, c, r) = &bad[0];
    (
        Orientation::Mirrored,
        Some(format!("standard orientation disagrees at {:?}, {:?}: closed {} vs recursive {}", x, m, c, r)),
    )
}

/// `⟨X, a⟩` under the default pairing.
pub fn pair(x: &AlgebraElement, a: &AlgebraElement) -> Scalar {
    Pairing::galilei().pair(x, a)
}

/// Regular action under the default pairing.
pub fn act(x: &AlgebraElement, a: &AlgebraElement, side: Side) -> AlgebraElement {
    Pairing::galilei().act(x, a, side)
}

#[cfg(test)]
mod tests;
