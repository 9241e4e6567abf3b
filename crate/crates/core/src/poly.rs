//! Dense univariate polynomials, generic over the coefficient field.
//!
//! Coefficients are stored by ascending degree with trailing zeros trimmed;
//! the zero polynomial is the empty coefficient vector. The crate
//! instantiates this at the exact rational scalar (see [`crate::Poly`]), but
//! the arithmetic itself only needs field operations from `num-traits`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{FromPrimitive, Num};

/// Coefficient field for [`Polynomial`] and
/// [`RationalFunction`](crate::ratfun::RationalFunction). Division must be
/// exact for the canonical forms (monic denominators, gcd reduction) to be
/// meaningful.
pub trait Scalar: Num + Clone + Neg<Output = Self> + FromPrimitive {}

impl<T> Scalar for T where T: Num + Clone + Neg<Output = T> + FromPrimitive {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    /// Build from coefficients in ascending degree, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Polynomial::new(vec![c])
    }

    /// `c0 + c1 x`.
    pub fn linear(c0: T, c1: T) -> Self {
        Polynomial::new(vec![c0, c1])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.clone() * T::from_usize(i).expect("small integer in scalar"))
            .collect();
        Polynomial::new(coeffs)
    }

    pub fn scale(&self, c: &T) -> Self {
        Polynomial::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, mut k: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.coeffs.len();
        if self.coeffs.len() < dd {
            return (Polynomial::zero(), self.clone());
        }
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); rem.len() - dd + 1];
        for i in (0..quot.len()).rev() {
            let q = rem[i + dd - 1].clone() / lead.clone();
            if !q.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] = rem[i + j].clone() - q.clone() * dc.clone();
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd - 1);
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Monic normalization (zero stays zero).
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Polynomial::zero(),
            Some(l) => self.scale(&(T::one() / l.clone())),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let mut a = a.clone();
        let mut b = b.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }
}

impl<'b, T: Scalar> Add<&'b Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &'b Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_else(T::zero);
            let b = rhs.coeffs.get(i).cloned().unwrap_or_else(T::zero);
            coeffs.push(a + b);
        }
        Polynomial::new(coeffs)
    }
}

impl<'b, T: Scalar> Sub<&'b Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: &'b Polynomial<T>) -> Polynomial<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<'b, T: Scalar> Mul<&'b Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: &'b Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(coeffs)
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Poly, Rational};
    use num::BigInt;
    use proptest::prelude::*;

    fn rat(p: i64, q: i64) -> Rational {
        Rational::new(BigInt::from(p), BigInt::from(q))
    }

    fn poly(coeffs: &[i64]) -> Poly {
        Poly::new(coeffs.iter().map(|&c| rat(c, 1)).collect())
    }

    #[test]
    fn derivative_golden() {
        // x^2 + 3 -> 2x
        assert_eq!(poly(&[3, 0, 1]).derivative(), poly(&[0, 2]));
        // constant 5 -> 0
        assert_eq!(poly(&[5]).derivative(), Poly::zero());
        // x^3 - x -> 3x^2 - 1
        assert_eq!(poly(&[0, -1, 0, 1]).derivative(), poly(&[-1, 0, 3]));
    }

    #[test]
    fn trailing_zeros_trimmed() {
        let p = poly(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(Poly::new(vec![]).is_zero());
        assert_eq!(poly(&[0, 0]).degree(), None);
    }

    #[test]
    fn div_rem_roundtrip() {
        let a = poly(&[2, 0, -3, 1]);
        let b = poly(&[-1, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(&(&q * &b) + &r, a);
        assert!(r.degree() < b.degree());
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (x-1)(x+2) and (x-1)(x-3) share the monic factor x-1
        let a = &poly(&[-1, 1]) * &poly(&[2, 1]);
        let b = &poly(&[-1, 1]) * &poly(&[-3, 1]);
        assert_eq!(Poly::gcd(&a, &b), poly(&[-1, 1]));
    }

    fn small_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec((-9i64..10, 1i64..5), 0..5)
            .prop_map(|cs| Poly::new(cs.into_iter().map(|(p, q)| rat(p, q)).collect()))
    }

    proptest! {
        #[test]
        fn derivative_is_linear(a in small_poly(), b in small_poly(), c in -9i64..10) {
            let lhs = (&(&a + &b)).derivative();
            let rhs = &a.derivative() + &b.derivative();
            prop_assert_eq!(lhs, rhs);
            let scaled = a.scale(&rat(c, 1)).derivative();
            prop_assert_eq!(scaled, a.derivative().scale(&rat(c, 1)));
        }

        #[test]
        fn derivative_leibniz(a in small_poly(), b in small_poly()) {
            let lhs = (&a * &b).derivative();
            let rhs = &(&a.derivative() * &b) + &(&a * &b.derivative());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn mul_then_div(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = (&a * &b).div_rem(&b);
            prop_assert_eq!(q, a);
            prop_assert!(r.is_zero());
        }
    }
}
