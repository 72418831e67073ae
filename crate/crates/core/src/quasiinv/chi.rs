use std::collections::BTreeMap;
use std::fmt;

use crate::hopf::h0_presentation;
use crate::ncalg::{AlgebraElement, Monomial};
use crate::scalars::{format_term, join_terms, Scalar};

/// Finitely supported Laurent element `Σ a_ℓ χ^ℓ` of H_0^irr.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ChiElem {
    coeffs: BTreeMap<i64, Scalar>,
}

fn wm() -> Scalar {
    Scalar::w() * Scalar::m()
}

impl ChiElem {
    pub fn zero() -> Self {
        ChiElem::default()
    }

    pub fn one() -> Self {
        ChiElem::chi_pow(0)
    }

    pub fn scalar(c: Scalar) -> Self {
        ChiElem::term(0, c)
    }

    pub fn chi_pow(l: i64) -> Self {
        ChiElem::term(l, Scalar::one())
    }

    pub fn term(l: i64, c: Scalar) -> Self {
        let mut e = ChiElem::zero();
        e.add_term(l, c);
        e
    }

    pub fn from_coeffs(it: impl IntoIterator<Item = (i64, Scalar)>) -> Self {
        let mut e = ChiElem::zero();
        for (l, c) in it {
            e.add_term(l, c);
        }
        e
    }

    fn add_term(&mut self, l: i64, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let v = match self.coeffs.get(&l) {
            Some(old) => old.add(&c),
            None => c,
        };
        if v.is_zero() {
            self.coeffs.remove(&l);
        } else {
            self.coeffs.insert(l, v);
        }
    }

    pub fn coeff(&self, l: i64) -> Scalar {
        self.coeffs.get(&l).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.coeffs.iter().map(|(l, c)| (*l, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support(&self) -> Option<(i64, i64)> {
        Some((*self.coeffs.keys().next()?, *self.coeffs.keys().next_back()?))
    }

    pub fn add(&self, o: &ChiElem) -> ChiElem {
        let mut r = self.clone();
        for (l, c) in &o.coeffs {
            r.add_term(*l, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &ChiElem) -> ChiElem {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> ChiElem {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> ChiElem {
        ChiElem::from_coeffs(self.coeffs.iter().map(|(l, d)| (*l, d.mul(c))))
    }

    pub fn mul(&self, o: &ChiElem) -> ChiElem {
        let mut r = ChiElem::zero();
        for (l, a) in &self.coeffs {
            for (n, b) in &o.coeffs {
                r.add_term(l + n, a.mul(b));
            }
        }
        r
    }

    pub fn pow(&self, n: u32) -> ChiElem {
        (0..n).fold(ChiElem::one(), |acc, _| acc.mul(self))
    }

    /// Multiplies by `χ^k`.
    pub fn shift(&self, k: i64) -> ChiElem {
        ChiElem { coeffs: self.coeffs.iter().map(|(l, c)| (l + k, c.clone())).collect() }
    }

    /// χ is real, so the involution conjugates coefficients.
    pub fn star(&self) -> ChiElem {
        ChiElem { coeffs: self.coeffs.iter().map(|(l, c)| (*l, c.conj())).collect() }
    }

    /// Inverse when the element is a single term `c χ^k`.
    pub fn inverse(&self) -> Option<ChiElem> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (l, c) = self.coeffs.iter().next()?;
        Some(ChiElem::term(-l, c.inv().ok()?))
    }

    /// Exact quotient by `d`, if `d` divides `self` in the Laurent ring.
    pub fn div_exact(&self, d: &ChiElem) -> Option<ChiElem> {
        let (dlo, dhi) = d.support()?;
        let lead = d.coeff(dhi).inv().ok()?;
        let mut rem = self.clone();
        let mut q = ChiElem::zero();
        while let Some((lo, hi)) = rem.support() {
            if hi - lo < dhi - dlo {
                return None;
            }
            let c = rem.coeff(hi).mul(&lead);
            let t = ChiElem::term(hi - dhi, c);
            rem = rem.sub(&t.mul(d));
            q = q.add(&t);
        }
        Some(q)
    }

    /// The H_0^irr element in the v0, v1 presentation: χ = 1 + wm v1, χ^{-1} = 1 - wm v0.
    pub fn to_h0(&self) -> AlgebraElement {
        let p = h0_presentation();
        let one = AlgebraElement::one(&p);
        let chi = one.add(&AlgebraElement::gen(&p, "v1").scale(&wm()));
        let chi_inv = one.sub(&AlgebraElement::gen(&p, "v0").scale(&wm()));
        let mut acc = AlgebraElement::zero(&p);
        for (l, c) in &self.coeffs {
            let base = if *l >= 0 { &chi } else { &chi_inv };
            acc = acc.add(&base.pow(l.unsigned_abs() as u32).scale(c));
        }
        acc
    }

    /// Converts from the v0, v1 presentation.
    pub fn from_h0(a: &AlgebraElement) -> ChiElem {
        let inv = Scalar::one().div(&wm()).expect("wm != 0");
        let v0 = ChiElem::one().sub(&ChiElem::chi_pow(-1)).scale(&inv);
        let v1 = ChiElem::chi_pow(1).sub(&ChiElem::one()).scale(&inv);
        let mut acc = ChiElem::zero();
        for (m, c) in a.terms() {
            let e = m.exps();
            acc = acc.add(&v0.pow(e[0] as u32).mul(&v1.pow(e[1] as u32)).scale(c));
        }
        acc
    }

    /// `v0` as a Laurent element.
    pub fn v0() -> ChiElem {
        ChiElem::from_h0(&AlgebraElement::monomial(&h0_presentation(), Monomial(vec![1, 0])))
    }

    /// `v1` as a Laurent element.
    pub fn v1() -> ChiElem {
        ChiElem::from_h0(&AlgebraElement::monomial(&h0_presentation(), Monomial(vec![0, 1])))
    }
}

impl fmt::Display for ChiElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .rev()
            .map(|(l, c)| {
                let body = match l {
                    0 => String::new(),
                    1 => "chi".to_string(),
                    _ => format!("chi^{}", l),
                };
                format_term(c, &body)
            })
            .collect();
        write!(f, "{}", join_terms(&parts))
    }
}

/// `ν_w(χ^ℓ) = δ_{ℓ,0}`, extended linearly.
pub fn nu_w(a: &ChiElem) -> Scalar {
    a.coeff(0)
}
