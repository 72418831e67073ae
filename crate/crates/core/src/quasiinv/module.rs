use std::fmt;
use std::sync::Arc;

use super::chi::ChiElem;
use crate::hopf::{fq_g1, uq_g1, HopfStructure};
use crate::ncalg::{AlgebraElement, Monomial};
use crate::pairing::{Pairing, Side};
use crate::scalars::Scalar;

/// A *-algebra carrying a one-sided U_q(G(1)) action compatible with products and the involution.
pub trait ModuleAlgebra: Send + Sync {
    type Elem: Clone + PartialEq + fmt::Display + fmt::Debug + Send + Sync;

    fn name(&self) -> String;
    /// Whether the action is `X.a` (left) or `a.X` (right).
    fn side(&self) -> Side;
    fn one(&self) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, c: &Scalar) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn star(&self, a: &Self::Elem) -> Self::Elem;
    /// Action of a U_q(G(1)) normal monomial.
    fn act_monomial(&self, x: &Monomial, a: &Self::Elem) -> Self::Elem;
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.scale(b, &Scalar::from_int(-1)))
    }

    /// Linear extension of the action to U elements.
    fn act(&self, x: &AlgebraElement, a: &Self::Elem) -> Self::Elem {
        let mut acc = self.zero();
        for (m, c) in x.terms() {
            acc = self.add(&acc, &self.scale(&self.act_monomial(m, a), c));
        }
        acc
    }
}

fn uq() -> Arc<HopfStructure> {
    uq_g1()
}

/// `D(χ^ℓ) = iwm ℓ χ^{ℓ+1}`, the action of B on H_0^irr.
pub fn b_derivation(a: &ChiElem) -> ChiElem {
    let iwm = Scalar::i() * Scalar::w() * Scalar::m();
    ChiElem::from_coeffs(a.coeffs().map(|(l, c)| (l + 1, c.mul(&iwm).mul(&Scalar::from_int(l)))))
}

/// Exponents `(a, ℓ, c, d)` of `M^a K^ℓ T^c B^d`.
fn uq_exps(x: &Monomial) -> (i64, i64, i64, i64) {
    let e = x.exps();
    (e[0], e[1], e[2], e[3])
}

/// H_0^irr in the χ basis: K^{±1} act trivially, M and T by zero, B by [`b_derivation`].
/// The right version sets `a.X := X.a`, which is a right action because these operators commute.
#[derive(Clone, Copy, Debug)]
pub struct H0Module {
    pub side: Side,
}

impl H0Module {
    pub fn left() -> Self {
        H0Module { side: Side::Left }
    }

    pub fn right() -> Self {
        H0Module { side: Side::Right }
    }
}

impl ModuleAlgebra for H0Module {
    type Elem = ChiElem;

    fn name(&self) -> String {
        match self.side {
            Side::Left => "h0-irr".into(),
            Side::Right => "h0-irr-right".into(),
        }
    }
    fn side(&self) -> Side {
        self.side
    }
    fn one(&self) -> ChiElem {
        ChiElem::one()
    }
    fn zero(&self) -> ChiElem {
        ChiElem::zero()
    }
    fn add(&self, a: &ChiElem, b: &ChiElem) -> ChiElem {
        a.add(b)
    }
    fn scale(&self, a: &ChiElem, c: &Scalar) -> ChiElem {
        a.scale(c)
    }
    fn mul(&self, a: &ChiElem, b: &ChiElem) -> ChiElem {
        a.mul(b)
    }
    fn star(&self, a: &ChiElem) -> ChiElem {
        a.star()
    }
    fn act_monomial(&self, x: &Monomial, a: &ChiElem) -> ChiElem {
        let (m, _, t, d) = uq_exps(x);
        if m > 0 || t > 0 {
            return ChiElem::zero();
        }
        (0..d).fold(a.clone(), |acc, _| b_derivation(&acc))
    }
    fn inverse(&self, a: &ChiElem) -> Option<ChiElem> {
        a.inverse()
    }
    fn is_zero(&self, a: &ChiElem) -> bool {
        a.is_zero()
    }
}

/// Element `num · ξ^{-pow}` of H_0^irr localized at a fixed real ξ. Canonical: `num` is not
/// divisible by ξ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalElem {
    pub num: ChiElem,
    pub pow: i64,
}

impl fmt::Display for LocalElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pow == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) * xi^{}", self.num, -self.pow)
        }
    }
}

/// H_0^irr with ξ inverted, so that d₀ is defined for non-monomial ξ such as 1 + χ.
#[derive(Clone, Debug)]
pub struct LocalizedH0 {
    xi: ChiElem,
}

impl LocalizedH0 {
    /// `xi` must be real and non-constant.
    pub fn new(xi: ChiElem) -> Self {
        assert_eq!(xi.star(), xi, "localizing at a non-real element");
        LocalizedH0 { xi }
    }

    pub fn xi(&self) -> LocalElem {
        self.normalize(self.xi.clone(), 0)
    }

    pub fn embed(&self, a: &ChiElem) -> LocalElem {
        self.normalize(a.clone(), 0)
    }

    fn normalize(&self, mut num: ChiElem, mut pow: i64) -> LocalElem {
        if num.is_zero() {
            return LocalElem { num, pow: 0 };
        }
        while let Some(q) = num.div_exact(&self.xi) {
            num = q;
            pow -= 1;
        }
        LocalElem { num, pow }
    }

    fn xi_pow(&self, k: i64) -> ChiElem {
        self.xi.pow(k as u32)
    }

    fn common(&self, a: &LocalElem, b: &LocalElem) -> (ChiElem, ChiElem, i64) {
        let p = a.pow.max(b.pow);
        (a.num.mul(&self.xi_pow(p - a.pow)), b.num.mul(&self.xi_pow(p - b.pow)), p)
    }
}

impl ModuleAlgebra for LocalizedH0 {
    type Elem = LocalElem;

    fn name(&self) -> String {
        format!("h0-irr[({})^-1]", self.xi)
    }
    fn side(&self) -> Side {
        Side::Left
    }
    fn one(&self) -> LocalElem {
        LocalElem { num: ChiElem::one(), pow: 0 }
    }
    fn zero(&self) -> LocalElem {
        LocalElem { num: ChiElem::zero(), pow: 0 }
    }
    fn add(&self, a: &LocalElem, b: &LocalElem) -> LocalElem {
        let (x, y, p) = self.common(a, b);
        self.normalize(x.add(&y), p)
    }
    fn scale(&self, a: &LocalElem, c: &Scalar) -> LocalElem {
        self.normalize(a.num.scale(c), a.pow)
    }
    fn mul(&self, a: &LocalElem, b: &LocalElem) -> LocalElem {
        self.normalize(a.num.mul(&b.num), a.pow + b.pow)
    }
    fn star(&self, a: &LocalElem) -> LocalElem {
        self.normalize(a.num.star(), a.pow)
    }
    fn act_monomial(&self, x: &Monomial, a: &LocalElem) -> LocalElem {
        let (m, _, t, d) = uq_exps(x);
        if m > 0 || t > 0 {
            return self.zero();
        }
        let mut cur = a.clone();
        for _ in 0..d {
            // D(n ξ^{-k}) = (D(n) ξ - k n D(ξ)) ξ^{-k-1}
            let (n, k) = if cur.pow >= 0 {
                (cur.num.clone(), cur.pow)
            } else {
                (cur.num.mul(&self.xi_pow(-cur.pow)), 0)
            };
            let dn = b_derivation(&n).mul(&self.xi);
            let corr = n.mul(&b_derivation(&self.xi)).scale(&Scalar::from_int(k));
            cur = self.normalize(dn.sub(&corr), k + 1);
        }
        cur
    }
    fn inverse(&self, a: &LocalElem) -> Option<LocalElem> {
        let inv = a.num.inverse()?;
        Some(self.normalize(inv, -a.pow))
    }
    fn is_zero(&self, a: &LocalElem) -> bool {
        a.num.is_zero()
    }
}

/// F_q(G(1)) with its left or right regular U_q(G(1)) action.
pub struct RegularModule {
    pairing: Arc<Pairing>,
    f: Arc<HopfStructure>,
    side: Side,
}

impl RegularModule {
    pub fn new(side: Side) -> Self {
        RegularModule { pairing: Pairing::galilei(), f: fq_g1(), side }
    }
}

impl ModuleAlgebra for RegularModule {
    type Elem = AlgebraElement;

    fn name(&self) -> String {
        "fq-g1".into()
    }
    fn side(&self) -> Side {
        self.side
    }
    fn one(&self) -> AlgebraElement {
        self.f.one()
    }
    fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(self.f.base())
    }
    fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        a.add(b)
    }
    fn scale(&self, a: &AlgebraElement, c: &Scalar) -> AlgebraElement {
        a.scale(c)
    }
    fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        a.mul(b)
    }
    fn star(&self, a: &AlgebraElement) -> AlgebraElement {
        self.f.star(a).expect("fq-g1 has an involution")
    }
    fn act_monomial(&self, x: &Monomial, a: &AlgebraElement) -> AlgebraElement {
        let xe = AlgebraElement::monomial(uq().base(), x.clone());
        self.pairing.act(&xe, a, self.side)
    }
    fn inverse(&self, a: &AlgebraElement) -> Option<AlgebraElement> {
        let mut terms = a.terms();
        match (terms.next(), terms.next()) {
            (Some((m, c)), None) if m.is_one() => Some(self.one().scale(&c.inv().ok()?)),
            _ => None,
        }
    }
    fn is_zero(&self, a: &AlgebraElement) -> bool {
        a.is_zero()
    }
}
