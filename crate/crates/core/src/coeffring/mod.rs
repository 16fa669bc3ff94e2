//! Exact coefficient arithmetic.
//!
//! Two rings are provided: [`Rational`], the ground field, and [`MPoly`],
//! sparse polynomials in the two formal parameters `x` and `m` with rational
//! coefficients. Everything downstream is generic over [`Ring`], so the same
//! code runs at a numeric parameter point or fully symbolically.

mod mpoly;
mod rational;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::error::Result;

pub use mpoly::{poly_arith, MPoly, Monomial};
pub use rational::{rat_arith, Rational};

/// Binary operations accepted by [`rat_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Binary operations accepted by [`poly_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
}

/// A commutative Q-algebra with exact equality.
///
/// Units are exactly the elements for which [`Ring::unit_inverse`] returns
/// `Some`. Division by a nonzero integer is always possible.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn is_zero(&self) -> bool;
    fn unit_inverse(&self) -> Option<Self>;
    /// `self / divisor`, failing unless the quotient lies in the ring.
    fn exact_div(&self, divisor: &Self) -> Result<Self>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_int(n))
    }

    fn from_bigint(n: &BigInt) -> Self {
        Self::from_rational(&Rational::from_bigint(n.clone()))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Multiplies by a rational scalar.
    fn scale(&self, q: &Rational) -> Self {
        self.clone() * Self::from_rational(q)
    }

    /// Divides by a nonzero integer.
    fn div_int(&self, n: i64) -> Self {
        assert!(n != 0, "division by the integer zero");
        self.scale(&Rational::new_int(1, n))
    }

    fn pow(&self, exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * &base;
            }
        }
        acc
    }
}
