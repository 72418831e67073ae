use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{same_presentation, AlgebraElement, Monomial, Presentation};
use crate::scalars::{format_term, join_terms, Scalar};

/// Element of a tensor product `A_1 ⊗ … ⊗ A_k`. Rank 0 is a plain scalar.
#[derive(Clone)]
pub struct TensorElement {
    slots: Vec<Arc<Presentation>>,
    terms: BTreeMap<Vec<Monomial>, Scalar>,
}

fn add_into(acc: &mut BTreeMap<Vec<Monomial>, Scalar>, k: Vec<Monomial>, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&k) {
        Some(e) => {
            let s = e.add(&c);
            if s.is_zero() {
                acc.remove(&k);
            } else {
                *e = s;
            }
        }
        None => {
            acc.insert(k, c);
        }
    }
}

impl PartialEq for TensorElement {
    fn eq(&self, o: &Self) -> bool {
        if self.terms.is_empty() && o.terms.is_empty() {
            return self.slots.len() == o.slots.len();
        }
        self.slots.len() == o.slots.len()
            && self.slots.iter().zip(&o.slots).all(|(a, b)| same_presentation(a, b))
            && self.terms == o.terms
    }
}

impl Eq for TensorElement {}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(k, c)| {
                let body = if self.slots.is_empty() {
                    String::new()
                } else {
                    k.iter()
                        .zip(&self.slots)
                        .map(|(m, p)| p.monomial_string(m))
                        .collect::<Vec<_>>()
                        .join(" ⊗ ")
                };
                if self.slots.len() > 1 && !c.is_one() && !c.neg().is_one() {
                    format!("{}*({})", c.factor_string(), body)
                } else {
                    format_term(c, &body)
                }
            })
            .collect();
        write!(f, "{}", join_terms(&parts))
    }
}

impl TensorElement {
    pub fn zero(slots: Vec<Arc<Presentation>>) -> Self {
        TensorElement { slots, terms: BTreeMap::new() }
    }

    pub fn scalar(c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        add_into(&mut terms, Vec::new(), c);
        TensorElement { slots: Vec::new(), terms }
    }

    pub fn one(slots: Vec<Arc<Presentation>>) -> Self {
        let key = slots.iter().map(|p| Monomial::one(p.ngens())).collect();
        TensorElement { slots, terms: BTreeMap::from([(key, Scalar::one())]) }
    }

    pub fn from_element(a: &AlgebraElement) -> Self {
        TensorElement {
            slots: vec![a.presentation().clone()],
            terms: a.terms().map(|(m, c)| (vec![m.clone()], c.clone())).collect(),
        }
    }

    pub fn from_terms(
        slots: Vec<Arc<Presentation>>,
        it: impl IntoIterator<Item = (Vec<Monomial>, Scalar)>,
    ) -> Self {
        let mut terms = BTreeMap::new();
        for (k, c) in it {
            add_into(&mut terms, k, c);
        }
        TensorElement { slots, terms }
    }

    /// `a_1 ⊗ … ⊗ a_k`.
    pub fn pure(parts: &[AlgebraElement]) -> Self {
        let mut t = TensorElement::scalar(Scalar::one());
        for p in parts {
            t = t.tensor(&TensorElement::from_element(p));
        }
        t
    }

    pub fn rank(&self) -> usize {
        self.slots.len()
    }

    pub fn slots(&self) -> &[Arc<Presentation>] {
        &self.slots
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Monomial>, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value of a rank-0 tensor.
    pub fn as_scalar(&self) -> Option<Scalar> {
        if !self.slots.is_empty() {
            return None;
        }
        Some(self.terms.get(&Vec::new()).cloned().unwrap_or_else(Scalar::zero))
    }

    /// A rank-1 tensor as an algebra element.
    pub fn as_element(&self) -> Option<AlgebraElement> {
        if self.slots.len() != 1 {
            return None;
        }
        Some(AlgebraElement::from_terms(
            &self.slots[0],
            self.terms.iter().map(|(k, c)| (k[0].clone(), c.clone())),
        ))
    }

    pub fn add(&self, o: &TensorElement) -> TensorElement {
        assert_eq!(self.slots.len(), o.slots.len(), "tensor rank mismatch");
        let mut terms = self.terms.clone();
        for (k, c) in &o.terms {
            add_into(&mut terms, k.clone(), c.clone());
        }
        TensorElement { slots: self.slots.clone(), terms }
    }

    pub fn sub(&self, o: &TensorElement) -> TensorElement {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> TensorElement {
        let mut terms = BTreeMap::new();
        for (k, d) in &self.terms {
            add_into(&mut terms, k.clone(), d.mul(c));
        }
        TensorElement { slots: self.slots.clone(), terms }
    }

    /// Slotwise product.
    pub fn mul(&self, o: &TensorElement) -> TensorElement {
        assert_eq!(self.slots.len(), o.slots.len(), "tensor rank mismatch");
        let mut acc = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &o.terms {
                let mut partial: Vec<(Vec<Monomial>, Scalar)> = vec![(Vec::new(), ca.mul(cb))];
                for (s, p) in self.slots.iter().enumerate() {
                    let prod = p.mono_mul(&ka[s], &kb[s]);
                    let mut next = Vec::with_capacity(partial.len() * prod.len());
                    for (key, c) in &partial {
                        for (m, d) in prod.iter() {
                            let mut k = key.clone();
                            k.push(m.clone());
                            next.push((k, c.mul(d)));
                        }
                    }
                    partial = next;
                }
                for (k, c) in partial {
                    add_into(&mut acc, k, c);
                }
            }
        }
        TensorElement { slots: self.slots.clone(), terms: acc }
    }

    /// Outer tensor product.
    pub fn tensor(&self, o: &TensorElement) -> TensorElement {
        let mut slots = self.slots.clone();
        slots.extend(o.slots.iter().cloned());
        let mut acc = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &o.terms {
                let mut k = ka.clone();
                k.extend(kb.iter().cloned());
                add_into(&mut acc, k, ca.mul(cb));
            }
        }
        TensorElement { slots, terms: acc }
    }

    /// Replaces slot `k` by the tensor `f(monomial)`, linearly. `out_slots` are the
    /// slots produced by `f` (needed when the input is zero).
    pub fn substitute_slot(
        &self,
        k: usize,
        out_slots: &[Arc<Presentation>],
        mut f: impl FnMut(&Monomial) -> TensorElement,
    ) -> TensorElement {
        let mut slots: Vec<_> = self.slots[..k].to_vec();
        slots.extend(out_slots.iter().cloned());
        slots.extend(self.slots[k + 1..].iter().cloned());
        let mut acc = BTreeMap::new();
        let mut memo: std::collections::HashMap<Monomial, TensorElement> = Default::default();
        for (key, c) in &self.terms {
            let img = memo.entry(key[k].clone()).or_insert_with(|| f(&key[k]));
            for (ik, d) in &img.terms {
                let mut nk: Vec<Monomial> = key[..k].to_vec();
                nk.extend(ik.iter().cloned());
                nk.extend(key[k + 1..].iter().cloned());
                add_into(&mut acc, nk, c.mul(d));
            }
        }
        TensorElement { slots, terms: acc }
    }

    /// Applies `f_s` to every slot at once, conjugating each coefficient once when `conj`.
    pub fn map_all(&self, conj: bool, mut f: impl FnMut(usize, &Monomial) -> AlgebraElement) -> TensorElement {
        let mut memo: std::collections::HashMap<(usize, Monomial), AlgebraElement> = Default::default();
        let mut out: Option<TensorElement> = None;
        for (key, c) in &self.terms {
            let c = if conj { c.conj() } else { c.clone() };
            let mut t = TensorElement::scalar(c);
            for (s, m) in key.iter().enumerate() {
                let img = memo.entry((s, m.clone())).or_insert_with(|| f(s, m)).clone();
                t = t.tensor(&TensorElement::from_element(&img));
            }
            out = Some(match out {
                None => t,
                Some(o) => o.add(&t),
            });
        }
        out.unwrap_or_else(|| TensorElement::zero(self.slots.clone()))
    }

    /// Multiplies slots `k` and `k + 1` (same presentation) into one.
    pub fn contract(&self, k: usize) -> TensorElement {
        let p = self.slots[k].clone();
        assert!(same_presentation(&p, &self.slots[k + 1]), "contracting different algebras");
        let mut slots: Vec<_> = self.slots[..k].to_vec();
        slots.push(p.clone());
        slots.extend(self.slots[k + 2..].iter().cloned());
        let mut acc = BTreeMap::new();
        for (key, c) in &self.terms {
            for (m, d) in p.mono_mul(&key[k], &key[k + 1]).iter() {
                let mut nk: Vec<Monomial> = key[..k].to_vec();
                nk.push(m.clone());
                nk.extend(key[k + 2..].iter().cloned());
                add_into(&mut acc, nk, c.mul(d));
            }
        }
        TensorElement { slots, terms: acc }
    }

    /// Swaps slots `k` and `k + 1`.
    pub fn flip(&self, k: usize) -> TensorElement {
        let mut slots = self.slots.clone();
        slots.swap(k, k + 1);
        let terms = self
            .terms
            .iter()
            .map(|(key, c)| {
                let mut nk = key.clone();
                nk.swap(k, k + 1);
                (nk, c.clone())
            })
            .collect();
        TensorElement { slots, terms }
    }
}
