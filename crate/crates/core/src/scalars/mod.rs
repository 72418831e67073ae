//! Exact arithmetic in the coefficient field `Q(i)(w, m, u)`.
//!
//! A [`Scalar`] is a reduced fraction of polynomials in the real symbols
//! `w`, `m`, `u` with Gaussian rational coefficients. After every operation
//! the common gcd is cancelled and the denominator is made monic in the
//! graded-lexicographic order `w > m > u`, so structural equality is field
//! equality.

mod poly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

pub use poly::{GaussRat, Poly, PowerProduct, VAR_NAMES};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
}

/// The four field operations accepted by [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    /// Builds `num / den` in canonical form.
    pub fn from_parts(num: Poly, den: Poly) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Scalar {
        if num.is_zero() {
            return Scalar::zero();
        }
        if den.is_one() {
            return Scalar { num, den };
        }
        let (mut num, mut den) = if let Some(c) = den.as_constant() {
            (num.scale(&c.inv()), Poly::one())
        } else {
            let g = Poly::gcd(&num, &den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        if let Some((_, lc)) = den.leading() {
            if !lc.is_one() {
                let inv = lc.inv();
                num = num.scale(&inv);
                den = den.scale(&inv);
            }
        }
        Scalar { num, den }
    }

    pub fn zero() -> Scalar {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Scalar {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar { num: Poly::constant(GaussRat::from_int(n)), den: Poly::one() }
    }

    /// The rational `p/q`. Panics if `q == 0`.
    pub fn rational(p: i64, q: i64) -> Scalar {
        assert!(q != 0, "zero denominator");
        Scalar::from_big_rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_big_rational(r: BigRational) -> Scalar {
        Scalar { num: Poly::from_rational(r), den: Poly::one() }
    }

    pub fn from_gauss(c: GaussRat) -> Scalar {
        Scalar { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn i() -> Scalar {
        Scalar::from_gauss(GaussRat::i())
    }

    pub fn w() -> Scalar {
        Scalar { num: Poly::var(0), den: Poly::one() }
    }

    pub fn m() -> Scalar {
        Scalar { num: Poly::var(1), den: Poly::one() }
    }

    pub fn u() -> Scalar {
        Scalar { num: Poly::var(2), den: Poly::one() }
    }

    /// Looks up one of the literal symbols `i`, `w`, `m`, `u`.
    pub fn symbol(name: &str) -> Option<Scalar> {
        match name {
            "i" => Some(Scalar::i()),
            "w" => Some(Scalar::w()),
            "m" => Some(Scalar::m()),
            "u" => Some(Scalar::u()),
            _ => None,
        }
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The value as a Gaussian rational when it involves no symbol.
    pub fn as_constant(&self) -> Option<GaussRat> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    pub fn neg(&self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, o: &Scalar) -> Scalar {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return Scalar { num: self.num.add(&o.num), den: Poly::one() };
            }
            return Scalar::normalized(self.num.add(&o.num), self.den.clone());
        }
        let g = Poly::gcd(&self.den, &o.den);
        let a = self.den.div_exact(&g).expect("gcd divides");
        let b = o.den.div_exact(&g).expect("gcd divides");
        Scalar::normalized(self.num.mul(&b).add(&o.num.mul(&a)), a.mul(&o.den))
    }

    pub fn sub(&self, o: &Scalar) -> Scalar {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Scalar) -> Scalar {
        if self.is_zero() || o.is_zero() {
            return Scalar::zero();
        }
        if self.is_one() {
            return o.clone();
        }
        if o.is_one() {
            return self.clone();
        }
        if self.den.is_one() && o.den.is_one() {
            return Scalar { num: self.num.mul(&o.num), den: Poly::one() };
        }
        let g1 = Poly::gcd(&self.num, &o.den);
        let g2 = Poly::gcd(&o.num, &self.den);
        let cut = |p: &Poly, g: &Poly| p.div_exact(g).expect("gcd divides");
        Scalar::normalized(
            cut(&self.num, &g1).mul(&cut(&o.num, &g2)),
            cut(&self.den, &g2).mul(&cut(&o.den, &g1)),
        )
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Scalar::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.mul(&o.inv()?))
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Scalar, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let n = e.unsigned_abs() as u32;
        Ok(Scalar::normalized(base.num.pow(n), base.den.pow(n)))
    }

    /// Complex conjugation: `i ↦ -i`, the symbols `w, m, u` are real.
    pub fn conj(&self) -> Scalar {
        Scalar { num: self.num.conj(), den: self.den.conj() }
    }

    /// Whether the value is fixed by conjugation.
    pub fn is_real(&self) -> bool {
        self.conj() == *self
    }

    /// Formats as a factor safe to place before `*`.
    pub fn factor_string(&self) -> String {
        if !self.den.is_one() || self.num.num_terms() == 1 {
            self.to_string()
        } else {
            format!("({})", self)
        }
    }
}

/// Formats `c * body` as a signed term; an empty body means the unit.
pub fn format_term(c: &Scalar, body: &str) -> String {
    if body.is_empty() {
        return c.to_string();
    }
    if c.is_one() {
        return body.to_string();
    }
    if c.neg().is_one() {
        return format!("-{}", body);
    }
    format!("{}*{}", c.factor_string(), body)
}

pub use poly::join_terms;

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Exact field arithmetic.
pub fn arith(a: &Scalar, b: &Scalar, kind: ArithKind) -> Result<Scalar, ScalarError> {
    match kind {
        ArithKind::Add => Ok(a.add(b)),
        ArithKind::Sub => Ok(a.sub(b)),
        ArithKind::Mul => Ok(a.mul(b)),
        ArithKind::Div => a.div(b),
    }
}

pub fn conjugate(a: &Scalar) -> Scalar {
    a.conj()
}

macro_rules! forward_binop {
    ($imp:ident, $method:ident, $inner:ident) => {
        impl<'a> $imp<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar::$inner(self, rhs)
            }
        }
        impl $imp<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar::$inner(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_addition() {
        let two = arith(&Scalar::one(), &Scalar::one(), ArithKind::Add).unwrap();
        assert_eq!(two, Scalar::from_int(2));
    }

    #[test]
    fn i_squared() {
        let iw = Scalar::i() * Scalar::w();
        let p = arith(&iw, &iw, ArithKind::Mul).unwrap();
        assert_eq!(p, -(Scalar::w() * Scalar::w()));
    }

    #[test]
    fn reciprocal_of_wm() {
        let wm = Scalar::w() * Scalar::m();
        let r = arith(&Scalar::one(), &wm, ArithKind::Div).unwrap();
        assert_eq!(r * wm, Scalar::one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            arith(&Scalar::one(), &Scalar::zero(), ArithKind::Div),
            Err(ScalarError::DivisionByZero)
        );
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(conjugate(&Scalar::i()), -Scalar::i());
        for l in -3..=3 {
            let half = Scalar::rational(2 * l + 1, 2);
            let s = Scalar::i() * Scalar::w() * Scalar::m() * half;
            assert_eq!(conjugate(&s), -s.clone());
        }
        let real = Scalar::rational(3, 8) * Scalar::w().pow(2).unwrap() * Scalar::m().pow(2).unwrap();
        assert_eq!(conjugate(&real), real);
    }

    #[test]
    fn cancellation_is_canonical() {
        // (w^2 - m^2)/(w + m) == w - m
        let num = Scalar::w().pow(2).unwrap() - Scalar::m().pow(2).unwrap();
        let den = Scalar::w() + Scalar::m();
        let q = num.div(&den).unwrap();
        assert_eq!(q, Scalar::w() - Scalar::m());
        assert!(q.denominator().is_one());
    }

    #[test]
    fn denominator_is_monic() {
        let s = Scalar::one().div(&(Scalar::from_int(2) * Scalar::w() + Scalar::i())).unwrap();
        let (_, lc) = s.denominator().leading().unwrap();
        assert!(lc.is_one());
    }

    #[test]
    fn display_examples() {
        assert_eq!(Scalar::rational(-3, 8).to_string(), "-3/8");
        assert_eq!((Scalar::i() * Scalar::w()).to_string(), "i*w");
        let s = Scalar::one().div(&(Scalar::w() * Scalar::m())).unwrap();
        assert_eq!(s.to_string(), "(1)/(w*m)");
    }
}
