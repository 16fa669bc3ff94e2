//! Stirling numbers and Whitney numbers of Dowling lattices.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::coeffring::{Rational, Ring};
use crate::combinat::{binomial, factorial};
use crate::error::{Error, Result};
use crate::matrix::Matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StirlingKind {
    /// Signed `s(n, k)`.
    FirstSigned,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WhitneyKind {
    First,
    Second,
}

fn check_indices(n: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(Error::Index(format!(
            "need 0 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    Ok(())
}

pub fn stirling(kind: StirlingKind, n: usize, k: usize) -> Result<BigInt> {
    check_indices(n, k)?;
    Ok(match kind {
        StirlingKind::Second => stirling2(n, k),
        StirlingKind::FirstSigned => stirling1_signed(n, k),
    })
}

/// `S(n, k) = (1/k!) sum_j (-1)^{k-j} C(k, j) j^n`; zero for `k > n`.
pub(crate) fn stirling2(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::zero();
    for j in 0..=k {
        let term = binomial(k, j) * BigInt::from(j).pow(n as u32);
        if (k - j).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc / factorial(k)
}

/// Signed `s(n, k)` by `s(n, k) = s(n-1, k-1) - (n-1) s(n-1, k)`; zero for `k > n`.
pub(crate) fn stirling1_signed(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut row = vec![BigInt::one()];
    for i in 1..=n {
        let mut next = vec![BigInt::zero(); i + 1];
        for j in 1..=i {
            let carry = if j < row.len() {
                &row[j] * BigInt::from(i - 1)
            } else {
                BigInt::zero()
            };
            next[j] = &row[j - 1] - carry;
        }
        row = next;
    }
    row[k].clone()
}

/// `W_m(n, k) = sum_{i=k}^n C(n, i) m^{i-k} S(i, k)` over any ring; zero for `k > n`.
pub fn whitney2_in<R: Ring>(m: &R, n: usize, k: usize) -> R {
    (k..=n).fold(R::zero(), |acc, i| {
        let c = binomial(n, i) * stirling2(i, k);
        acc + R::from_bigint(&c) * m.pow((i - k) as u32)
    })
}

/// `w_m(n, k) = sum_i (-1)^{i-k} C(i, k) m^{n-i} s(n, i)` over any ring.
pub fn whitney1_in<R: Ring>(m: &R, n: usize, k: usize) -> R {
    (k..=n).fold(R::zero(), |acc, i| {
        let mut c = binomial(i, k) * stirling1_signed(n, i);
        if (i - k) % 2 == 1 {
            c = -c;
        }
        acc + R::from_bigint(&c) * m.pow((n - i) as u32)
    })
}

/// `W_m(n, k) = (1 / (m^k k!)) sum_i C(k, i) (-1)^{k-i} (m i + 1)^n`,
/// defined only for `m != 0`.
pub fn whitney2_power_sum(m: &Rational, n: usize, k: usize) -> Result<Rational> {
    check_indices(n, k)?;
    if m.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let mut acc = Rational::zero();
    for i in 0..=k {
        let base = m * &Rational::from_int(i as i64) + Rational::one();
        let term = Rational::from_bigint(binomial(k, i)) * base.pow(n as u32);
        acc = if (k - i).is_multiple_of(2) {
            acc + term
        } else {
            acc - term
        };
    }
    let denom = m.pow(k as u32) * Rational::from_bigint(factorial(k));
    acc.checked_div(&denom)
}

/// Whitney numbers at a rational `m`. The second kind uses the
/// binomial-Stirling sum and, for `m != 0`, is checked against the
/// alternating power sum.
pub fn whitney(kind: WhitneyKind, m: &Rational, n: usize, k: usize) -> Result<Rational> {
    check_indices(n, k)?;
    match kind {
        WhitneyKind::First => Ok(whitney1_in(m, n, k)),
        WhitneyKind::Second => {
            let v = whitney2_in(m, n, k);
            if !m.is_zero() {
                let alt = whitney2_power_sum(m, n, k)?;
                assert_eq!(v, alt, "Whitney W_{m}({n},{k}) formulas disagree");
            }
            Ok(v)
        }
    }
}

pub fn stirling_table(kind: StirlingKind, rows: usize) -> Matrix<Rational> {
    Matrix::from_fn(rows, rows, |n, k| match kind {
        StirlingKind::Second => Rational::from_bigint(stirling2(n, k)),
        StirlingKind::FirstSigned => Rational::from_bigint(stirling1_signed(n, k)),
    })
}

pub fn whitney_table<R: Ring>(kind: WhitneyKind, m: &R, rows: usize) -> Matrix<R> {
    Matrix::from_fn(rows, rows, |n, k| match kind {
        WhitneyKind::First => whitney1_in(m, n, k),
        WhitneyKind::Second => whitney2_in(m, n, k),
    })
}
