use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use super::{AlgebraElement, Letter, Monomial, NcError, Presentation, Rule, TensorElement};
use crate::scalars::Scalar;

/// Targets of generator-defined maps.
pub trait Codomain: Clone + PartialEq + fmt::Display {
    fn c_add(&self, o: &Self) -> Self;
    fn c_mul(&self, o: &Self) -> Self;
    fn c_scale(&self, c: &Scalar) -> Self;
}

impl Codomain for Scalar {
    fn c_add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn c_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn c_scale(&self, c: &Scalar) -> Self {
        self.mul(c)
    }
}

impl Codomain for AlgebraElement {
    fn c_add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn c_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn c_scale(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
}

impl Codomain for TensorElement {
    fn c_add(&self, o: &Self) -> Self {
        self.add(o)
    }
    fn c_mul(&self, o: &Self) -> Self {
        self.mul(o)
    }
    fn c_scale(&self, c: &Scalar) -> Self {
        self.scale(c)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Linearity {
    /// Linear, multiplicative.
    Hom,
    /// Linear, order reversing.
    AntiHom,
    /// Conjugate-linear, order reversing (a `*`-structure).
    ConjAntiHom,
    /// Conjugate-linear, multiplicative.
    ConjHom,
}

impl Linearity {
    pub fn conjugates(self) -> bool {
        matches!(self, Linearity::ConjAntiHom | Linearity::ConjHom)
    }

    pub fn reverses(self) -> bool {
        matches!(self, Linearity::AntiHom | Linearity::ConjAntiHom)
    }
}

/// A map determined by its values on letters and extended according to its [`Linearity`].
pub struct Morphism<T: Codomain> {
    source: Arc<Presentation>,
    kind: Linearity,
    images: HashMap<Letter, T>,
    unit: T,
    cache: RwLock<HashMap<Monomial, T>>,
}

impl<T: Codomain> Morphism<T> {
    /// Every letter, including inverse letters, needs an image.
    pub fn new(
        source: &Arc<Presentation>,
        kind: Linearity,
        unit: T,
        images: impl IntoIterator<Item = (Letter, T)>,
    ) -> Result<Self, NcError> {
        let images: HashMap<Letter, T> = images.into_iter().collect();
        for l in source.letters() {
            if !images.contains_key(&l) {
                return Err(NcError::MissingImage(source.letter_name(l)));
            }
        }
        Ok(Morphism { source: source.clone(), kind, images, unit, cache: RwLock::new(HashMap::new()) })
    }

    pub fn source(&self) -> &Arc<Presentation> {
        &self.source
    }

    pub fn kind(&self) -> Linearity {
        self.kind
    }

    pub fn unit(&self) -> &T {
        &self.unit
    }

    pub fn letter_image(&self, l: Letter) -> &T {
        &self.images[&l]
    }

    fn word_image(&self, letters: &[Letter]) -> T {
        let mut acc = self.unit.clone();
        if self.kind.reverses() {
            for l in letters.iter().rev() {
                acc = acc.c_mul(&self.images[l]);
            }
        } else {
            for l in letters {
                acc = acc.c_mul(&self.images[l]);
            }
        }
        acc
    }

    pub fn image_monomial(&self, m: &Monomial) -> T {
        if let Some(hit) = self.cache.read().expect("cache poisoned").get(m) {
            return hit.clone();
        }
        let v = self.word_image(&m.letters());
        self.cache.write().expect("cache poisoned").insert(m.clone(), v.clone());
        v
    }

    fn coeff(&self, c: &Scalar) -> Scalar {
        if self.kind.conjugates() {
            c.conj()
        } else {
            c.clone()
        }
    }

    pub fn apply(&self, a: &AlgebraElement) -> T {
        let mut acc = self.unit.c_scale(&Scalar::zero());
        for (m, c) in a.terms() {
            acc = acc.c_add(&self.image_monomial(m).c_scale(&self.coeff(c)));
        }
        acc
    }

    /// Checks every defining relation and, for invertible generators, `g g^{-1} = 1`.
    pub fn check_relations(&self) -> Result<(), NcError> {
        let p = &self.source;
        for (&(a, b), rule) in p.rules() {
            let lhs = self.word_image(&[a, b]);
            let rhs = match rule {
                Rule::Commute => self.word_image(&[b, a]),
                Rule::Rewrite(terms) => {
                    let mut acc = self.unit.c_scale(&Scalar::zero());
                    for (m, c) in terms {
                        acc = acc.c_add(&self.image_monomial(m).c_scale(&self.coeff(c)));
                    }
                    acc
                }
            };
            if lhs != rhs {
                return Err(NcError::RelationNotPreserved {
                    relation: format!("{} {}: {} != {}", p.letter_name(a), p.letter_name(b), lhs, rhs),
                });
            }
        }
        for l in p.letters() {
            if l.sign < 0 {
                for w in [[l.inverse(), l], [l, l.inverse()]] {
                    let v = self.word_image(&w);
                    if v != self.unit {
                        return Err(NcError::RelationNotPreserved {
                            relation: format!("{} {}: {} != 1", p.letter_name(w[0]), p.letter_name(w[1]), v),
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

/// Applies a morphism to an element; the free-function form of [`Morphism::apply`].
pub fn morphism_apply<T: Codomain>(f: &Morphism<T>, a: &AlgebraElement) -> T {
    f.apply(a)
}
