//! Univariate rational functions over a coefficient field.
//!
//! Canonical form: numerator and denominator coprime, denominator monic and
//! nonzero. Reduction is eager, which keeps coefficient growth bounded over
//! the repeated products in the witness construction.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::poly::{Polynomial, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction<T> {
    numer: Polynomial<T>,
    denom: Polynomial<T>,
}

impl<T: Scalar> RationalFunction<T> {
    pub fn new(numer: Polynomial<T>, denom: Polynomial<T>) -> Result<Self> {
        if denom.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let mut f = RationalFunction { numer, denom };
        f.reduce();
        Ok(f)
    }

    pub fn from_poly(p: Polynomial<T>) -> Self {
        RationalFunction {
            numer: p,
            denom: Polynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_poly(Polynomial::constant(c))
    }

    pub fn numer(&self) -> &Polynomial<T> {
        &self.numer
    }

    pub fn denom(&self) -> &Polynomial<T> {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    fn reduce(&mut self) {
        if self.numer.is_zero() {
            self.denom = Polynomial::one();
            return;
        }
        let g = Polynomial::gcd(&self.numer, &self.denom);
        if g.degree() > Some(0) {
            self.numer = self.numer.div_rem(&g).0;
            self.denom = self.denom.div_rem(&g).0;
        }
        let lead = self.denom.leading().expect("nonzero denominator").clone();
        if !lead.is_one() {
            let inv = T::one() / lead;
            self.numer = self.numer.scale(&inv);
            self.denom = self.denom.scale(&inv);
        }
    }

    /// Exact value at `x`; a pole is an error.
    pub fn eval(&self, x: &T) -> Result<T> {
        let den = self.denom.eval(x);
        if den.is_zero() {
            return Err(Error::PoleAtEvaluationPoint);
        }
        Ok(self.numer.eval(x) / den)
    }

    /// Formal derivative by the quotient rule.
    pub fn derivative(&self) -> Self {
        let num =
            &(&self.numer.derivative() * &self.denom) - &(&self.numer * &self.denom.derivative());
        let den = &self.denom * &self.denom;
        RationalFunction::new(num, den).expect("square of nonzero denominator")
    }
}

impl<'b, T: Scalar> Add<&'b RationalFunction<T>> for &RationalFunction<T> {
    type Output = RationalFunction<T>;
    fn add(self, rhs: &'b RationalFunction<T>) -> RationalFunction<T> {
        let num = &(&self.numer * &rhs.denom) + &(&rhs.numer * &self.denom);
        let den = &self.denom * &rhs.denom;
        RationalFunction::new(num, den).expect("product of nonzero denominators")
    }
}

impl<'b, T: Scalar> Sub<&'b RationalFunction<T>> for &RationalFunction<T> {
    type Output = RationalFunction<T>;
    fn sub(self, rhs: &'b RationalFunction<T>) -> RationalFunction<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Neg for &RationalFunction<T> {
    type Output = RationalFunction<T>;
    fn neg(self) -> RationalFunction<T> {
        RationalFunction {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }
}

impl<'b, T: Scalar> Mul<&'b RationalFunction<T>> for &RationalFunction<T> {
    type Output = RationalFunction<T>;
    fn mul(self, rhs: &'b RationalFunction<T>) -> RationalFunction<T> {
        let num = &self.numer * &rhs.numer;
        let den = &self.denom * &rhs.denom;
        RationalFunction::new(num, den).expect("product of nonzero denominators")
    }
}

impl<'b, T: Scalar> Div<&'b RationalFunction<T>> for &RationalFunction<T> {
    type Output = RationalFunction<T>;
    /// Panics when dividing by the zero function.
    fn div(self, rhs: &'b RationalFunction<T>) -> RationalFunction<T> {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        let num = &self.numer * &rhs.denom;
        let den = &self.denom * &rhs.numer;
        RationalFunction::new(num, den).expect("nonzero numerator as divisor")
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for RationalFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom.is_one_poly() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({}) / ({})", self.numer, self.denom)
        }
    }
}

impl<T: Scalar> Polynomial<T> {
    fn is_one_poly(&self) -> bool {
        self.degree() == Some(0) && self.leading().is_some_and(|c| c.is_one())
    }
}
