//! Normal forms in finitely presented noncommutative algebras.
//!
//! A [`Presentation`] fixes an ordered generator list and one rewrite rule
//! for every disordered adjacent pair of letters. Elements are kept as sums
//! of normal-ordered monomials; the product of two monomials is computed by
//! pushing letters of the right factor into the left one, applying rules as
//! pairs become adjacent, and memoizing the result.

mod linear;
mod morphism;
mod tensor;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use thiserror::Error;

use crate::scalars::{format_term, join_terms, Scalar};

pub use linear::{express_in_span, linear_solve, nullspace, LinearSystem};
pub use morphism::{morphism_apply, Codomain, Linearity, Morphism};
pub use tensor::TensorElement;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NcError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("negative power of non-invertible generator `{0}`")]
    NegativePowerOfNonInvertible(String),
    #[error("elements belong to different presentations ({0} vs {1})")]
    PresentationMismatch(String, String),
    #[error("relation not preserved: {relation}")]
    RelationNotPreserved { relation: String },
    #[error("no rule for disordered pair {0}")]
    MissingRule(String),
    #[error("rule {rule} does not decrease: offending term {term}")]
    NonDecreasingRule { rule: String, term: String },
    #[error("overlap {overlap} is not resolvable: {left} vs {right}")]
    NotConfluent { overlap: String, left: String, right: String },
    #[error("missing image for letter {0}")]
    MissingImage(String),
    #[error("element leaves the declared window: {0}")]
    WindowOverflow(String),
}

/// One generator letter: index into the generator list and exponent sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    pub sign: i8,
}

impl Letter {
    pub fn new(gen: usize, sign: i8) -> Letter {
        Letter { gen, sign }
    }

    pub fn inverse(&self) -> Letter {
        Letter { gen: self.gen, sign: -self.sign }
    }
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    pub invertible: bool,
    /// Weight used by the termination order.
    pub weight: u32,
}

/// Exponent vector in generator order. Negative entries only for invertible generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i64>);

impl Monomial {
    pub fn one(n: usize) -> Monomial {
        Monomial(vec![0; n])
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn letter(n: usize, l: Letter) -> Monomial {
        let mut m = Monomial::one(n);
        m.0[l.gen] = l.sign as i64;
        m
    }

    pub fn exps(&self) -> &[i64] {
        &self.0
    }

    /// Sum of absolute exponents.
    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|e| e.unsigned_abs()).sum()
    }

    fn first_letter(&self) -> Option<(Letter, Monomial)> {
        let g = self.0.iter().position(|&e| e != 0)?;
        let s = self.0[g].signum() as i8;
        let mut rest = self.clone();
        rest.0[g] -= s as i64;
        Some((Letter::new(g, s), rest))
    }

    fn last_letter(&self) -> Option<(Letter, Monomial)> {
        let g = self.0.iter().rposition(|&e| e != 0)?;
        let s = self.0[g].signum() as i8;
        let mut rest = self.clone();
        rest.0[g] -= s as i64;
        Some((Letter::new(g, s), rest))
    }

    /// Letters of the monomial, left to right.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for (g, &e) in self.0.iter().enumerate() {
            let s = e.signum() as i8;
            for _ in 0..e.unsigned_abs() {
                out.push(Letter::new(g, s));
            }
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

type Terms = BTreeMap<Monomial, Scalar>;

fn add_into(acc: &mut Terms, m: Monomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match acc.get_mut(&m) {
        Some(e) => {
            let s = e.add(&c);
            if s.is_zero() {
                acc.remove(&m);
            } else {
                *e = s;
            }
        }
        None => {
            acc.insert(m, c);
        }
    }
}

/// How a rule rewrites an adjacent pair of letters.
#[derive(Clone, Debug)]
pub enum Rule {
    Commute,
    Rewrite(Vec<(Monomial, Scalar)>),
}

/// Finitely presented algebra with a validated, terminating and locally
/// confluent rewrite system.
pub struct Presentation {
    name: String,
    gens: Vec<Generator>,
    rules: HashMap<(Letter, Letter), Rule>,
    cache: RwLock<HashMap<(Monomial, Monomial), Arc<Terms>>>,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("name", &self.name)
            .field("gens", &self.gens)
            .finish()
    }
}

type RuleSpec = (String, i8, String, i8, Option<Vec<(Scalar, Vec<(String, i64)>)>>);

pub struct PresentationBuilder {
    name: String,
    gens: Vec<Generator>,
    rules: Vec<RuleSpec>,
}

impl PresentationBuilder {
    pub fn new(name: &str) -> Self {
        PresentationBuilder { name: name.to_string(), gens: Vec::new(), rules: Vec::new() }
    }

    pub fn generator(mut self, name: &str, invertible: bool, weight: u32) -> Self {
        self.gens.push(Generator { name: name.to_string(), invertible, weight });
        self
    }

    /// Declares that `a` and `b` commute (all sign combinations, both orders).
    pub fn commute(mut self, a: &str, b: &str) -> Self {
        for sa in [1i8, -1] {
            for sb in [1i8, -1] {
                self.rules.push((a.to_string(), sa, b.to_string(), sb, None));
                self.rules.push((b.to_string(), sb, a.to_string(), sa, None));
            }
        }
        self
    }

    /// `left^sl · right^sr → Σ c · word`, where each word is a list of `(generator, exponent)`
    /// already in generator order.
    pub fn rule(
        mut self,
        left: (&str, i8),
        right: (&str, i8),
        rhs: Vec<(Scalar, Vec<(&str, i64)>)>,
    ) -> Self {
        let rhs = rhs
            .into_iter()
            .map(|(c, w)| (c, w.into_iter().map(|(g, e)| (g.to_string(), e)).collect()))
            .collect();
        self.rules.push((left.0.to_string(), left.1, right.0.to_string(), right.1, Some(rhs)));
        self
    }

    pub fn build(self) -> Result<Arc<Presentation>, NcError> {
        let index = |name: &str| -> Result<usize, NcError> {
            self.gens
                .iter()
                .position(|g| g.name == name)
                .ok_or_else(|| NcError::UnknownGenerator(name.to_string()))
        };
        let n = self.gens.len();
        let mut rules = HashMap::new();
        for (a, sa, b, sb, rhs) in &self.rules {
            let la = Letter::new(index(a)?, *sa);
            let lb = Letter::new(index(b)?, *sb);
            if (*sa < 0 && !self.gens[la.gen].invertible) || (*sb < 0 && !self.gens[lb.gen].invertible) {
                continue;
            }
            let rule = match rhs {
                None => Rule::Commute,
                Some(terms) => {
                    let mut out = Vec::new();
                    for (c, word) in terms {
                        let mut m = Monomial::one(n);
                        for (g, e) in word {
                            let k = index(g)?;
                            if *e < 0 && !self.gens[k].invertible {
                                return Err(NcError::NegativePowerOfNonInvertible(g.clone()));
                            }
                            m.0[k] += e;
                        }
                        out.push((m, c.clone()));
                    }
                    Rule::Rewrite(out)
                }
            };
            rules.insert((la, lb), rule);
        }
        let p = Presentation {
            name: self.name,
            gens: self.gens,
            rules,
            cache: RwLock::new(HashMap::new()),
        };
        p.validate()?;
        Ok(Arc::new(p))
    }
}

impl Presentation {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn ngens(&self) -> usize {
        self.gens.len()
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    pub fn is_invertible(&self, g: usize) -> bool {
        self.gens[g].invertible
    }

    /// All letters: every generator and, for invertible ones, its inverse.
    pub fn letters(&self) -> Vec<Letter> {
        let mut out = Vec::new();
        for (g, gen) in self.gens.iter().enumerate() {
            out.push(Letter::new(g, 1));
            if gen.invertible {
                out.push(Letter::new(g, -1));
            }
        }
        out
    }

    pub fn rules(&self) -> impl Iterator<Item = (&(Letter, Letter), &Rule)> {
        let mut v: Vec<_> = self.rules.iter().collect();
        v.sort_by_key(|(k, _)| **k);
        v.into_iter()
    }

    pub fn letter_name(&self, l: Letter) -> String {
        if l.sign < 0 {
            format!("{}^-1", self.gens[l.gen].name)
        } else {
            self.gens[l.gen].name.clone()
        }
    }

    pub fn monomial_string(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (g, &e) in m.0.iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(self.gens[g].name.clone()),
                _ => parts.push(format!("{}^{}", self.gens[g].name, e)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }

    fn grade(&self, m: &Monomial) -> (i64, i64) {
        let mut grade = 0;
        let mut weight = 0;
        for (g, &e) in m.0.iter().enumerate() {
            if !self.gens[g].invertible {
                grade += e;
            }
            weight += self.gens[g].weight as i64 * e.abs();
        }
        (grade, weight)
    }

    fn validate(&self) -> Result<(), NcError> {
        let n = self.ngens();
        let letters = self.letters();
        for &a in &letters {
            for &b in &letters {
                if a.gen <= b.gen {
                    continue;
                }
                let rule = self.rules.get(&(a, b)).ok_or_else(|| {
                    NcError::MissingRule(format!("{} {}", self.letter_name(a), self.letter_name(b)))
                })?;
                if let Rule::Rewrite(rhs) = rule {
                    let mut lhs = Monomial::one(n);
                    lhs.0[a.gen] += a.sign as i64;
                    lhs.0[b.gen] += b.sign as i64;
                    for (m, _) in rhs {
                        if *m != lhs && self.grade(m) >= self.grade(&lhs) {
                            return Err(NcError::NonDecreasingRule {
                                rule: format!("{} {}", self.letter_name(a), self.letter_name(b)),
                                term: self.monomial_string(m),
                            });
                        }
                    }
                }
            }
        }
        self.check_confluence()
    }

    /// Resolves every overlap of three letters both ways and compares.
    pub fn check_confluence(&self) -> Result<(), NcError> {
        let n = self.ngens();
        let letters = self.letters();
        for &a in &letters {
            for &b in &letters {
                for &c in &letters {
                    let (ma, mb, mc) =
                        (Monomial::letter(n, a), Monomial::letter(n, b), Monomial::letter(n, c));
                    let left = self.mul_terms(&self.mono_mul(&ma, &mb), &BTreeMap::from([(mc.clone(), Scalar::one())]));
                    let right = self.mul_terms(&BTreeMap::from([(ma.clone(), Scalar::one())]), &self.mono_mul(&mb, &mc));
                    if left != right {
                        return Err(NcError::NotConfluent {
                            overlap: format!(
                                "{} {} {}",
                                self.letter_name(a),
                                self.letter_name(b),
                                self.letter_name(c)
                            ),
                            left: self.terms_string(&left),
                            right: self.terms_string(&right),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn terms_string(&self, t: &Terms) -> String {
        let parts: Vec<String> = t
            .iter()
            .rev()
            .map(|(m, c)| {
                let body = if m.is_one() { String::new() } else { self.monomial_string(m) };
                format_term(c, &body)
            })
            .collect();
        join_terms(&parts)
    }

    fn mul_terms(&self, a: &Terms, b: &Terms) -> Terms {
        let mut acc = Terms::new();
        for (ma, ca) in a {
            for (mb, cb) in b {
                let c = ca.mul(cb);
                for (m, d) in self.mono_mul(ma, mb).iter() {
                    add_into(&mut acc, m.clone(), c.mul(d));
                }
            }
        }
        acc
    }

    /// Normal form of the product of two normal monomials.
    pub fn mono_mul(&self, a: &Monomial, b: &Monomial) -> Arc<Terms> {
        if b.is_one() {
            return Arc::new(BTreeMap::from([(a.clone(), Scalar::one())]));
        }
        if a.is_one() {
            return Arc::new(BTreeMap::from([(b.clone(), Scalar::one())]));
        }
        let key = (a.clone(), b.clone());
        if let Some(hit) = self.cache.read().expect("cache poisoned").get(&key) {
            return hit.clone();
        }
        let (first, rest) = b.first_letter().expect("nonunit");
        let step = self.times_letter(a, first);
        let mut acc = Terms::new();
        for (m, c) in step.iter() {
            for (r, d) in self.mono_mul(m, &rest).iter() {
                add_into(&mut acc, r.clone(), c.mul(d));
            }
        }
        let acc = Arc::new(acc);
        self.cache.write().expect("cache poisoned").insert(key, acc.clone());
        acc
    }

    fn times_letter(&self, a: &Monomial, l: Letter) -> Terms {
        let Some((last, prefix)) = a.last_letter() else {
            return BTreeMap::from([(Monomial::letter(self.ngens(), l), Scalar::one())]);
        };
        let rule = if last.gen == l.gen { None } else { self.rules.get(&(last, l)) };
        match rule {
            Some(Rule::Rewrite(rhs)) => {
                let mut acc = Terms::new();
                for (r, c) in rhs {
                    for (m, d) in self.mono_mul(&prefix, r).iter() {
                        add_into(&mut acc, m.clone(), c.mul(d));
                    }
                }
                acc
            }
            Some(Rule::Commute) if last.gen > l.gen => {
                // move the letter left past `last`
                let inner = self.times_letter(&prefix, l);
                let tail = Monomial::letter(self.ngens(), last);
                let mut acc = Terms::new();
                for (m, c) in inner {
                    for (r, d) in self.mono_mul(&m, &tail).iter() {
                        add_into(&mut acc, r.clone(), c.mul(d));
                    }
                }
                acc
            }
            _ => {
                let mut m = a.clone();
                m.0[l.gen] += l.sign as i64;
                BTreeMap::from([(m, Scalar::one())])
            }
        }
    }
}

fn same_presentation(a: &Presentation, b: &Presentation) -> bool {
    std::ptr::eq(a, b) || a.name == b.name
}

/// Finite linear combination of normal monomials of one presentation.
#[derive(Clone)]
pub struct AlgebraElement {
    alg: Arc<Presentation>,
    terms: Terms,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        same_presentation(&self.alg, &other.alg) && self.terms == other.terms
    }
}

impl Eq for AlgebraElement {}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.alg.name, self)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.alg.terms_string(&self.terms))
    }
}

impl AlgebraElement {
    pub fn zero(alg: &Arc<Presentation>) -> Self {
        AlgebraElement { alg: alg.clone(), terms: Terms::new() }
    }

    pub fn one(alg: &Arc<Presentation>) -> Self {
        AlgebraElement::scalar(alg, Scalar::one())
    }

    pub fn scalar(alg: &Arc<Presentation>, c: Scalar) -> Self {
        AlgebraElement::term(alg, Monomial::one(alg.ngens()), c)
    }

    pub fn term(alg: &Arc<Presentation>, m: Monomial, c: Scalar) -> Self {
        let mut terms = Terms::new();
        add_into(&mut terms, m, c);
        AlgebraElement { alg: alg.clone(), terms }
    }

    pub fn monomial(alg: &Arc<Presentation>, m: Monomial) -> Self {
        AlgebraElement::term(alg, m, Scalar::one())
    }

    pub fn letter(alg: &Arc<Presentation>, l: Letter) -> Self {
        AlgebraElement::monomial(alg, Monomial::letter(alg.ngens(), l))
    }

    /// The generator with the given name. Panics if unknown; use [`normal_form`] for checked input.
    pub fn gen(alg: &Arc<Presentation>, name: &str) -> Self {
        let g = alg.gen_index(name).unwrap_or_else(|| panic!("unknown generator {name}"));
        AlgebraElement::letter(alg, Letter::new(g, 1))
    }

    /// `name^e`, with negative exponents for invertible generators.
    pub fn gen_pow(alg: &Arc<Presentation>, name: &str, e: i64) -> Self {
        let g = alg.gen_index(name).unwrap_or_else(|| panic!("unknown generator {name}"));
        let mut m = Monomial::one(alg.ngens());
        m.0[g] = e;
        AlgebraElement::monomial(alg, m)
    }

    pub fn from_terms(alg: &Arc<Presentation>, it: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut terms = Terms::new();
        for (m, c) in it {
            add_into(&mut terms, m, c);
        }
        AlgebraElement { alg: alg.clone(), terms }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.alg
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> + ExactSizeIterator {
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

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient of the unit monomial.
    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::one(self.alg.ngens()))
    }

    /// Maximum total degree over the support (0 for zero).
    pub fn degree(&self) -> u64 {
        self.terms.keys().map(|m| m.total_degree()).max().unwrap_or(0)
    }

    pub fn add(&self, o: &AlgebraElement) -> AlgebraElement {
        assert!(same_presentation(&self.alg, &o.alg), "presentation mismatch");
        let mut terms = self.terms.clone();
        for (m, c) in &o.terms {
            add_into(&mut terms, m.clone(), c.clone());
        }
        AlgebraElement { alg: self.alg.clone(), terms }
    }

    pub fn sub(&self, o: &AlgebraElement) -> AlgebraElement {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> AlgebraElement {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> AlgebraElement {
        if c.is_zero() {
            return AlgebraElement::zero(&self.alg);
        }
        AlgebraElement {
            alg: self.alg.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d.mul(c))).collect(),
        }
    }

    /// Coefficientwise complex conjugation (not the algebra involution).
    pub fn conj_coeffs(&self) -> AlgebraElement {
        AlgebraElement {
            alg: self.alg.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d.conj())).collect(),
        }
    }

    pub fn try_mul(&self, o: &AlgebraElement) -> Result<AlgebraElement, NcError> {
        if !same_presentation(&self.alg, &o.alg) {
            return Err(NcError::PresentationMismatch(self.alg.name.clone(), o.alg.name.clone()));
        }
        Ok(AlgebraElement { alg: self.alg.clone(), terms: self.alg.mul_terms(&self.terms, &o.terms) })
    }

    pub fn mul(&self, o: &AlgebraElement) -> AlgebraElement {
        self.try_mul(o).expect("presentation mismatch")
    }

    pub fn pow(&self, n: u32) -> AlgebraElement {
        let mut r = AlgebraElement::one(&self.alg);
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// Commutator `ab - ba`.
    pub fn commutator(&self, o: &AlgebraElement) -> AlgebraElement {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn tensor(&self, o: &AlgebraElement) -> TensorElement {
        TensorElement::from_element(self).tensor(&TensorElement::from_element(o))
    }
}

/// `product` as a checked operation.
pub fn product(a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement, NcError> {
    a.try_mul(b)
}

/// One raw term: a coefficient times a word of `(generator, exponent)` factors in any order.
pub type RawTerm = (Scalar, Vec<(String, i64)>);

/// Normal form of a sum of arbitrarily ordered words.
pub fn normal_form(alg: &Arc<Presentation>, raw: &[RawTerm]) -> Result<AlgebraElement, NcError> {
    let mut acc = AlgebraElement::zero(alg);
    for (c, word) in raw {
        let mut e = AlgebraElement::scalar(alg, c.clone());
        for (name, exp) in word {
            let g = alg.gen_index(name).ok_or_else(|| NcError::UnknownGenerator(name.clone()))?;
            if *exp < 0 && !alg.is_invertible(g) {
                return Err(NcError::NegativePowerOfNonInvertible(name.clone()));
            }
            let mut m = Monomial::one(alg.ngens());
            m.0[g] = *exp;
            e = e.mul(&AlgebraElement::monomial(alg, m));
        }
        acc = acc.add(&e);
    }
    Ok(acc)
}

/// All normal monomials with non-invertible degree ≤ `degree` and invertible
/// exponents in `[-inv_range, inv_range]`.
pub fn monomial_window(alg: &Presentation, degree: u32, inv_range: i64) -> Vec<Monomial> {
    fn rec(alg: &Presentation, g: usize, left: u32, r: i64, cur: &mut Vec<i64>, out: &mut Vec<Monomial>) {
        if g == alg.ngens() {
            out.push(Monomial(cur.clone()));
            return;
        }
        if alg.is_invertible(g) {
            for e in -r..=r {
                cur.push(e);
                rec(alg, g + 1, left, r, cur, out);
                cur.pop();
            }
        } else {
            for e in 0..=left {
                cur.push(e as i64);
                rec(alg, g + 1, left - e, r, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(alg, 0, degree, inv_range, &mut Vec::new(), &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy() -> Arc<Presentation> {
        // Weyl-like algebra: y x = x y + 1
        PresentationBuilder::new("toy")
            .generator("x", false, 1)
            .generator("y", false, 1)
            .rule(("y", 1), ("x", 1), vec![(Scalar::one(), vec![("x", 1), ("y", 1)]), (Scalar::one(), vec![])])
            .build()
            .unwrap()
    }

    #[test]
    fn weyl_reordering() {
        let a = toy();
        let x = AlgebraElement::gen(&a, "x");
        let y = AlgebraElement::gen(&a, "y");
        // y x^2 = x^2 y + 2x
        let lhs = y.mul(&x).mul(&x);
        let rhs = x.mul(&x).mul(&y).add(&x.scale(&Scalar::from_int(2)));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn missing_rule_is_rejected() {
        let r = PresentationBuilder::new("bad").generator("a", false, 1).generator("b", false, 1).build();
        assert!(matches!(r, Err(NcError::MissingRule(_))));
    }

    #[test]
    fn non_confluent_rules_are_rejected() {
        // [b, a] = c with [c, a] = a, [c, b] = 0 violates the Jacobi identity
        let r = PresentationBuilder::new("bad")
            .generator("a", false, 1)
            .generator("b", false, 1)
            .generator("c", false, 1)
            .rule(("b", 1), ("a", 1), vec![(Scalar::one(), vec![("a", 1), ("b", 1)]), (Scalar::one(), vec![("c", 1)])])
            .rule(("c", 1), ("a", 1), vec![(Scalar::one(), vec![("a", 1), ("c", 1)]), (Scalar::one(), vec![("a", 1)])])
            .commute("c", "b")
            .build();
        assert!(matches!(r, Err(NcError::NotConfluent { .. })), "{:?}", r.err());
    }

    #[test]
    fn normal_form_errors() {
        let a = toy();
        let e = normal_form(&a, &[(Scalar::one(), vec![("z".into(), 1)])]);
        assert_eq!(e, Err(NcError::UnknownGenerator("z".into())));
        let e = normal_form(&a, &[(Scalar::one(), vec![("x".into(), -1)])]);
        assert_eq!(e, Err(NcError::NegativePowerOfNonInvertible("x".into())));
    }

    #[test]
    fn window_counts() {
        let a = toy();
        assert_eq!(monomial_window(&a, 2, 0).len(), 6);
    }
}
