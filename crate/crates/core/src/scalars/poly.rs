//! Multivariate polynomials in the formal parameters `w`, `m`, `u` over the
//! Gaussian rationals, with exact division and a recursive gcd.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Names of the three formal parameters, in monomial-order priority.
pub const VAR_NAMES: [&str; 3] = ["w", "m", "u"];

/// Exponent vector over `(w, m, u)` ordered graded-lexicographically with `w > m > u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct PowerProduct(pub [u32; 3]);

impl PowerProduct {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &PowerProduct) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    fn mul(&self, other: &PowerProduct) -> PowerProduct {
        PowerProduct([self.0[0] + other.0[0], self.0[1] + other.0[1], self.0[2] + other.0[2]])
    }

    fn div(&self, other: &PowerProduct) -> PowerProduct {
        PowerProduct([self.0[0] - other.0[0], self.0[1] - other.0[1], self.0[2] - other.0[2]])
    }

    fn meet(&self, other: &PowerProduct) -> PowerProduct {
        PowerProduct([
            self.0[0].min(other.0[0]),
            self.0[1].min(other.0[1]),
            self.0[2].min(other.0[2]),
        ])
    }
}

impl Ord for PowerProduct {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PowerProduct {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A Gaussian rational `re + im·i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    pub fn zero() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussRat::from_int(1)
    }

    pub fn i() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn add(&self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn neg(&self) -> GaussRat {
        GaussRat::new(-&self.re, -&self.im)
    }

    pub fn mul(&self, o: &GaussRat) -> GaussRat {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussRat::new(&self.re * &o.re, BigRational::zero());
        }
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    /// Panics on zero; callers check.
    pub fn inv(&self) -> GaussRat {
        if self.im.is_zero() {
            return GaussRat::new(self.re.recip(), BigRational::zero());
        }
        let norm = &self.re * &self.re + &self.im * &self.im;
        GaussRat::new(&self.re / &norm, -&self.im / &norm)
    }

    pub fn div(&self, o: &GaussRat) -> GaussRat {
        self.mul(&o.inv())
    }

    pub fn conj(&self) -> GaussRat {
        GaussRat::new(self.re.clone(), -&self.im)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Formats a coefficient as a factor. The returned string may begin with `-`.
fn fmt_coeff_factor(c: &GaussRat) -> String {
    if c.im.is_zero() {
        fmt_rational(&c.re)
    } else if c.re.is_zero() {
        if c.im.is_one() {
            "i".to_string()
        } else if (-&c.im).is_one() {
            "-i".to_string()
        } else {
            format!("{}*i", fmt_rational(&c.im))
        }
    } else {
        let mag = (-&c.im).abs();
        let body = if mag.is_one() { "i".to_string() } else { format!("{}*i", fmt_rational(&mag)) };
        let sign = if c.im.is_negative() { " - " } else { " + " };
        format!("({}{}{})", fmt_rational(&c.re), sign, body)
    }
}

fn fmt_power_product(p: &PowerProduct) -> String {
    let mut parts = Vec::new();
    for (k, e) in p.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(VAR_NAMES[k].to_string()),
            _ => parts.push(format!("{}^{}", VAR_NAMES[k], e)),
        }
    }
    parts.join("*")
}

/// Formats `coeff * body` so that the result reparses to the same value.
/// `body` is empty for a bare coefficient.
pub(crate) fn fmt_term(c: &GaussRat, body: &str) -> String {
    if body.is_empty() {
        return fmt_coeff_factor(c);
    }
    if c.is_one() {
        return body.to_string();
    }
    if c.neg().is_one() {
        return format!("-{}", body);
    }
    format!("{}*{}", fmt_coeff_factor(c), body)
}

/// Joins already formatted signed terms into a sum.
pub fn join_terms(terms: &[String]) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, t) in terms.iter().enumerate() {
        if k == 0 {
            out.push_str(t);
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(t);
        }
    }
    out
}

/// Sparse polynomial in `w, m, u` with Gaussian rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<PowerProduct, GaussRat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn constant(c: GaussRat) -> Self {
        Poly::term(PowerProduct::default(), c)
    }

    pub fn one() -> Self {
        Poly::constant(GaussRat::one())
    }

    pub fn term(p: PowerProduct, c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(p, c);
        }
        Poly { terms }
    }

    pub fn var(k: usize) -> Self {
        let mut e = [0; 3];
        e[k] = 1;
        Poly::term(PowerProduct(e), GaussRat::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .map(|(p, c)| p.degree() == 0 && c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|p| p.degree() == 0)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&PowerProduct, &GaussRat)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&PowerProduct, &GaussRat)> {
        self.terms.iter().next_back()
    }

    /// Constant term, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        if self.is_constant() {
            return self.terms.values().next().cloned();
        }
        None
    }

    fn add_term(&mut self, p: PowerProduct, c: GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&p) {
            Some(existing) => {
                let s = existing.add(&c);
                if s.is_zero() {
                    self.terms.remove(&p);
                } else {
                    *existing = s;
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (p, c) in &o.terms {
            r.add_term(*p, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let mut r = self.clone();
        for (p, c) in &o.terms {
            r.add_term(*p, c.neg());
        }
        r
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(p, c)| (*p, c.neg())).collect() }
    }

    pub fn scale(&self, c: &GaussRat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(p, d)| (*p, d.mul(c))).collect() }
    }

    fn mul_term(&self, p: &PowerProduct, c: &GaussRat) -> Poly {
        Poly { terms: self.terms.iter().map(|(q, d)| (q.mul(p), d.mul(c))).collect() }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut r = Poly::zero();
        for (p, c) in &o.terms {
            for (q, d) in &self.terms {
                r.add_term(q.mul(p), d.mul(c));
            }
        }
        r
    }

    pub fn pow(&self, n: u32) -> Poly {
        let mut r = Poly::one();
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    pub fn conj(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(p, c)| (*p, c.conj())).collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv()),
            _ => self.clone(),
        }
    }

    /// Exact division; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if d.is_one() {
            return Some(self.clone());
        }
        let (dp, dc) = d.leading().map(|(p, c)| (*p, c.inv()))?;
        let mut q = Poly::zero();
        let mut r = self.clone();
        while let Some((rp, rc)) = r.leading().map(|(p, c)| (*p, c.clone())) {
            if !dp.divides(&rp) {
                return None;
            }
            let tp = rp.div(&dp);
            let tc = rc.mul(&dc);
            r = r.sub(&d.mul_term(&tp, &tc));
            q.add_term(tp, tc);
        }
        Some(q)
    }

    fn degree_in(&self, v: usize) -> u32 {
        self.terms.keys().map(|p| p.0[v]).max().unwrap_or(0)
    }

    /// Coefficient of `var^k`, as a polynomial free of `var`.
    fn coeff_in(&self, v: usize, k: u32) -> Poly {
        let mut r = Poly::zero();
        for (p, c) in &self.terms {
            if p.0[v] == k {
                let mut q = *p;
                q.0[v] = 0;
                r.terms.insert(q, c.clone());
            }
        }
        r
    }

    fn var_pow(v: usize, k: u32) -> Poly {
        let mut e = [0; 3];
        e[v] = k;
        Poly::term(PowerProduct(e), GaussRat::one())
    }

    fn monomial_gcd(&self) -> PowerProduct {
        let mut it = self.terms.keys();
        let first = *it.next().expect("nonzero");
        it.fold(first, |acc, p| acc.meet(p))
    }

    fn pseudo_rem(a: &Poly, b: &Poly, v: usize) -> Poly {
        let db = b.degree_in(v);
        let lcb = b.coeff_in(v, db);
        let mut r = a.clone();
        while !r.is_zero() && r.degree_in(v) >= db {
            let dr = r.degree_in(v);
            let lcr = r.coeff_in(v, dr);
            let t = lcr.mul(&Poly::var_pow(v, dr - db));
            r = r.mul(&lcb).sub(&t.mul(b));
        }
        r
    }

    fn content(a: &Poly, v: usize, rest: &[usize]) -> Poly {
        let d = a.degree_in(v);
        let mut g = Poly::zero();
        for k in 0..=d {
            let c = a.coeff_in(v, k);
            if c.is_zero() {
                continue;
            }
            g = if g.is_zero() { c.monic() } else { Poly::gcd_vars(&g, &c, rest) };
            if g.is_constant() {
                return Poly::one();
            }
        }
        g
    }

    /// Substitutes integer values for every variable except `v`.
    fn specialize(&self, v: usize, pts: &[i64; 3]) -> Poly {
        let mut r = Poly::zero();
        for (p, c) in &self.terms {
            let mut scale = BigInt::one();
            for (k, (&x, &e)) in pts.iter().zip(&p.0).enumerate() {
                if k != v {
                    scale *= BigInt::from(x).pow(e);
                }
            }
            let mut e = [0; 3];
            e[v] = p.0[v];
            let f = BigRational::from_integer(scale);
            r.add_term(PowerProduct(e), GaussRat::new(&c.re * &f, &c.im * &f));
        }
        r
    }

    /// Sufficient test that two polynomials share no factor of positive degree in `v`:
    /// a specialization that keeps the degree of `a` and has coprime images.
    fn coprime_in(a: &Poly, b: &Poly, v: usize) -> bool {
        const POINTS: [[i64; 3]; 3] = [[3, 5, 7], [-2, 11, 4], [13, -6, 17]];
        let lc = a.coeff_in(v, a.degree_in(v));
        for pts in &POINTS {
            if lc.specialize(v, pts).is_zero() {
                continue;
            }
            let (mut x, mut y) = (a.specialize(v, pts), b.specialize(v, pts));
            if x.degree_in(v) < y.degree_in(v) {
                std::mem::swap(&mut x, &mut y);
            }
            while !y.is_zero() {
                let r = Poly::pseudo_rem(&x, &y, v).monic();
                x = y;
                y = r;
            }
            return x.degree_in(v) == 0;
        }
        false
    }

    fn gcd_vars(a: &Poly, b: &Poly, vars: &[usize]) -> Poly {
        if a.is_zero() {
            return b.monic();
        }
        if b.is_zero() {
            return a.monic();
        }
        if a.is_constant() || b.is_constant() {
            return Poly::one();
        }
        if a.num_terms() == 1 || b.num_terms() == 1 {
            let p = a.monomial_gcd().meet(&b.monomial_gcd());
            return Poly::term(p, GaussRat::one());
        }
        let Some((&v, rest)) = vars.split_first() else {
            return Poly::one();
        };
        let (da, db) = (a.degree_in(v), b.degree_in(v));
        if da == 0 && db == 0 {
            return Poly::gcd_vars(a, b, rest);
        }
        if da == 0 {
            return Poly::gcd_vars(a, &Poly::content(b, v, rest), rest);
        }
        if db == 0 {
            return Poly::gcd_vars(&Poly::content(a, v, rest), b, rest);
        }
        let ca = Poly::content(a, v, rest);
        let cb = Poly::content(b, v, rest);
        let c = Poly::gcd_vars(&ca, &cb, rest);
        let mut p = a.div_exact(&ca).expect("content divides").monic();
        let mut q = b.div_exact(&cb).expect("content divides").monic();
        if p.degree_in(v) < q.degree_in(v) {
            std::mem::swap(&mut p, &mut q);
        }
        if Poly::coprime_in(&p, &q, v) {
            return c.monic();
        }
        let g = loop {
            let r = Poly::pseudo_rem(&p, &q, v);
            if r.is_zero() {
                break q;
            }
            if r.degree_in(v) == 0 {
                break Poly::one();
            }
            let cr = Poly::content(&r, v, rest);
            p = q;
            q = r.div_exact(&cr).expect("content divides").monic();
        };
        let g = g.div_exact(&Poly::content(&g, v, rest)).expect("content divides");
        c.mul(&g).monic()
    }

    /// Monic greatest common divisor (1 when either input is a nonzero constant).
    pub fn gcd(a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() || a.is_constant() || b.is_constant() {
            return Poly::gcd_vars(a, b, &[0, 1, 2]);
        }
        let (ma, mb) = (a.monomial_gcd(), b.monomial_gcd());
        let mono = Poly::term(ma.meet(&mb), GaussRat::one());
        let strip = |p: &Poly, m: PowerProduct| p.div_exact(&Poly::term(m, GaussRat::one())).expect("monomial divides");
        let (a, b) = (strip(a, ma), strip(b, mb));
        let (small, big) = if a.num_terms() <= b.num_terms() { (&a, &b) } else { (&b, &a) };
        let g = if small.is_constant() {
            Poly::one()
        } else if big.div_exact(small).is_some() {
            small.monic()
        } else {
            Poly::gcd_vars(&a, &b, &[0, 1, 2])
        };
        mono.mul(&g)
    }

    /// Whether the polynomial is a single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn from_rational(r: BigRational) -> Poly {
        Poly::constant(GaussRat::new(r, BigRational::zero()))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(p, c)| fmt_term(c, &fmt_power_product(p)))
            .collect();
        write!(f, "{}", join_terms(&terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Poly {
        Poly::var(0)
    }
    fn m() -> Poly {
        Poly::var(1)
    }
    fn u() -> Poly {
        Poly::var(2)
    }

    #[test]
    fn gcd_of_products() {
        let a = w().add(&m()); // w + m
        let b = w().sub(&u()); // w - u
        let c = w().mul(&m()).add(&Poly::one()); // wm + 1
        let x = a.mul(&b).mul(&c);
        let y = a.mul(&c).mul(&u().add(&Poly::constant(GaussRat::i())));
        let g = Poly::gcd(&x, &y);
        assert_eq!(g, a.mul(&c).monic());
    }

    #[test]
    fn gcd_with_monomial_and_divisor_factors() {
        let s = w().add(&u());
        let x = w().pow(2).mul(&m()).mul(&s);
        let y = w().mul(&m().pow(3)).mul(&s.pow(2));
        assert_eq!(Poly::gcd(&x, &y), w().mul(&m()).mul(&s));
        let z = s.mul(&m().add(&Poly::constant(GaussRat::i())));
        assert_eq!(Poly::gcd(&z.mul(&w()), &z.mul(&u())), z.monic());
    }

    #[test]
    fn gcd_coprime_is_one() {
        let a = w().add(&Poly::one());
        let b = w().sub(&Poly::one());
        assert!(Poly::gcd(&a, &b).is_one());
    }

    #[test]
    fn exact_division_detects_remainder() {
        let a = w().mul(&w()).sub(&Poly::one());
        let b = w().sub(&Poly::one());
        assert_eq!(a.div_exact(&b), Some(w().add(&Poly::one())));
        assert_eq!(a.div_exact(&w()), None);
    }

    #[test]
    fn graded_order_puts_w_first() {
        let p = PowerProduct([1, 0, 0]);
        let q = PowerProduct([0, 1, 0]);
        let r = PowerProduct([0, 0, 2]);
        assert!(p > q);
        assert!(r > p);
    }
}
