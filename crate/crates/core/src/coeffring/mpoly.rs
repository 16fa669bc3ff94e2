use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Rational, Ring, RingOp};
use crate::error::{Error, Result};

/// Exponent pair `x^x * m^m`.
///
/// Ordered graded-lexicographically with `x` before `m`: higher total degree
/// is greater, ties broken by the `x` exponent.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial {
    pub x: u32,
    pub m: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { x: 0, m: 0 };

    pub fn new(x: u32, m: u32) -> Self {
        Monomial { x, m }
    }

    pub fn degree(self) -> u32 {
        self.x + self.m
    }

    fn divides(self, other: Monomial) -> bool {
        self.x <= other.x && self.m <= other.m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.x + rhs.x, self.m + rhs.m)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, e) in [("x", self.x), ("m", self.m)] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Sparse polynomial in `x` and `m` over the rationals. No stored
/// coefficient is ever zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, Monomial::ONE)
    }

    pub fn monomial(c: Rational, mono: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mono, c);
        }
        MPoly { terms }
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), Monomial::new(1, 0))
    }

    pub fn m() -> Self {
        Self::monomial(Rational::one(), Monomial::new(0, 1))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(terms: I) -> Self {
        let mut p = MPoly::default();
        for (mono, c) in terms {
            p.add_term(mono, c);
        }
        p
    }

    /// Terms in canonical (descending graded-lex) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: Monomial) -> Rational {
        self.terms.get(&mono).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(Monomial, &Rational)> {
        self.terms.iter().next_back().map(|(k, v)| (*k, v))
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(Monomial::ONE)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|k| *k == Monomial::ONE)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(mono, _)| mono.degree())
    }

    fn add_term(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(existing) => {
                *existing = &*existing + &c;
                if existing.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    /// Evaluates at a rational point.
    pub fn specialize(&self, x: &Rational, m: &Rational) -> Rational {
        let max_x = self.terms.keys().map(|k| k.x).max().unwrap_or(0);
        let max_m = self.terms.keys().map(|k| k.m).max().unwrap_or(0);
        let x_pows = powers(x, max_x);
        let m_pows = powers(m, max_m);
        self.terms.iter().fold(Rational::zero(), |acc, (mono, c)| {
            acc + c * &(&x_pows[mono.x as usize] * &m_pows[mono.m as usize])
        })
    }

    /// Substitutes arbitrary ring elements for `x` and `m`.
    pub fn substitute<R: Ring>(&self, x: &R, m: &R) -> R {
        self.terms.iter().fold(R::zero(), |acc, (mono, c)| {
            acc + R::from_rational(c) * x.pow(mono.x) * m.pow(mono.m)
        })
    }

    /// Quotient `self / divisor` when the division is exact in Q[x, m].
    pub fn exact_div(&self, divisor: &MPoly) -> Result<MPoly> {
        let (lead_mono, lead_coeff) = match divisor.leading_term() {
            Some((mono, c)) => (mono, c.clone()),
            None => return Err(Error::DivisionByZero),
        };
        let inexact = || Error::InexactDivision {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        let mut remainder = self.clone();
        let mut quotient = MPoly::default();
        while let Some((mono, c)) = remainder.leading_term() {
            if !lead_mono.divides(mono) {
                return Err(inexact());
            }
            let q_mono = Monomial::new(mono.x - lead_mono.x, mono.m - lead_mono.m);
            let q_coeff = c / &lead_coeff;
            for (d_mono, d_coeff) in &divisor.terms {
                remainder.add_term(q_mono * *d_mono, -(&q_coeff * d_coeff));
            }
            quotient.add_term(q_mono, q_coeff);
        }
        Ok(quotient)
    }
}

fn powers(base: &Rational, max: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(max as usize + 1);
    let mut cur = Rational::one();
    for _ in 0..=max {
        out.push(cur.clone());
        cur = &cur * base;
    }
    out
}

/// Exact sparse polynomial arithmetic.
pub fn poly_arith(p: &MPoly, q: &MPoly, op: RingOp) -> MPoly {
    match op {
        RingOp::Add => p.clone() + q,
        RingOp::Sub => p.clone() - q,
        RingOp::Mul => p.clone() * q,
    }
}

impl From<Rational> for MPoly {
    fn from(c: Rational) -> Self {
        MPoly::constant(c)
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (mono, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            if *mono == Monomial::ONE {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MPoly> for MPoly {
    type Output = MPoly;
    fn add(mut self, rhs: &'a MPoly) -> MPoly {
        for (mono, c) in &rhs.terms {
            self.add_term(*mono, c.clone());
        }
        self
    }
}

impl Add for MPoly {
    type Output = MPoly;
    fn add(self, rhs: MPoly) -> MPoly {
        self + &rhs
    }
}

impl<'a> Sub<&'a MPoly> for MPoly {
    type Output = MPoly;
    fn sub(mut self, rhs: &'a MPoly) -> MPoly {
        for (mono, c) in &rhs.terms {
            self.add_term(*mono, -c);
        }
        self
    }
}

impl Sub for MPoly {
    type Output = MPoly;
    fn sub(self, rhs: MPoly) -> MPoly {
        self - &rhs
    }
}

impl<'a> Mul<&'a MPoly> for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &'a MPoly) -> MPoly {
        let mut out = MPoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(*ma * *mb, ca * cb);
            }
        }
        out
    }
}

impl Mul for MPoly {
    type Output = MPoly;
    fn mul(self, rhs: MPoly) -> MPoly {
        self * &rhs
    }
}

impl Neg for MPoly {
    type Output = MPoly;
    fn neg(mut self) -> MPoly {
        for c in self.terms.values_mut() {
            *c = -&*c;
        }
        self
    }
}

impl Ring for MPoly {
    fn zero() -> Self {
        MPoly::default()
    }

    fn one() -> Self {
        MPoly::constant(Rational::one())
    }

    fn from_rational(q: &Rational) -> Self {
        MPoly::constant(q.clone())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn unit_inverse(&self) -> Option<Self> {
        if !self.is_constant() {
            return None;
        }
        self.constant_term().recip().ok().map(MPoly::constant)
    }

    fn exact_div(&self, divisor: &Self) -> Result<Self> {
        MPoly::exact_div(self, divisor)
    }

    fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return MPoly::default();
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = &*c * q;
        }
        out
    }
}
