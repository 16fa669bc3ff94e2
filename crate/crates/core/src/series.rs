//! Truncated formal power series over a [`Ring`].
//!
//! A series of order `N` stores exactly the coefficients of `z^0..=z^N`.
//! Binary operations truncate to the smaller order of their inputs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeffring::{MPoly, Rational, Ring, RingOp};
use crate::combinat::factorial;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Series<R> {
    coeffs: Vec<R>,
}

/// The two transcendental operations of [`Series::transcend`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Transcendental {
    Exp,
    Log,
}

impl<R: Ring> Series<R> {
    /// Builds a series from `c_0..=c_N`; panics on an empty list.
    pub fn new(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least c_0");
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series::new(vec![R::zero(); order + 1])
    }

    pub fn constant(c: R, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(R::one(), order)
    }

    /// The identity series `z`.
    pub fn z(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = R::one();
        }
        s
    }

    /// Series with ordinary coefficients `values[n] / n!`.
    pub fn from_egf(values: Vec<R>) -> Self {
        let coeffs = values
            .into_iter()
            .enumerate()
            .map(|(n, v)| v.scale(&Rational::from_bigint(factorial(n)).recip().unwrap()))
            .collect();
        Series::new(coeffs)
    }

    /// Series from a polynomial in `z` given lowest degree first, padded or
    /// truncated to `order`.
    pub fn from_poly(poly: &[R], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in poly.iter().enumerate().take(order + 1) {
            s.coeffs[k] = c.clone();
        }
        s
    }

    /// `e^{cz}`.
    pub fn exp_linear(c: &R, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut cur = R::one();
        for n in 0..=order {
            if n > 0 {
                cur = (cur * c).div_int(n as i64);
            }
            coeffs.push(cur.clone());
        }
        Series::new(coeffs)
    }

    /// `(e^{cz} - 1) / c`, built as `sum_{n>=1} c^{n-1} z^n / n!` so that
    /// `c = 0` gives `z`.
    pub fn exp_minus_one_over(c: &R, order: usize) -> Self {
        let mut s = Self::zero(order);
        let mut cur = R::one();
        for n in 1..=order {
            cur = cur.div_int(n as i64);
            s.coeffs[n] = cur.clone();
            cur = cur * c;
        }
        s
    }

    /// `ln(1 + cz) / c = sum_{n>=1} (-1)^{n-1} c^{n-1} z^n / n`.
    pub fn log_one_plus_over(c: &R, order: usize) -> Self {
        let mut s = Self::zero(order);
        let mut cur = R::one();
        for n in 1..=order {
            s.coeffs[n] = cur.div_int(n as i64);
            cur = -(cur * c);
        }
        s
    }

    /// `(1 + cz)^{-1/c} = exp(-ln(1 + cz) / c)`; equals `e^{-z}` at `c = 0`.
    pub fn one_plus_pow_neg_inv(c: &R, order: usize) -> Self {
        Self::log_one_plus_over(c, order)
            .neg()
            .exp()
            .expect("log series has zero constant term")
    }

    /// `(1 + az)^r` for a rational exponent, via the binomial series
    /// `sum_n C(r, n) a^n z^n`.
    pub fn binomial_power(a: &R, r: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut binom = Rational::one();
        let mut a_pow = R::one();
        for n in 0..=order {
            coeffs.push(a_pow.scale(&binom));
            let n_q = Rational::from_int(n as i64);
            binom = binom * (r - &n_q) / (n_q + Rational::one());
            a_pow = a_pow * a;
        }
        Series::new(coeffs)
    }

    /// `1 / (1 - cz)`.
    pub fn geometric(c: &R, order: usize) -> Self {
        Series::new((0..=order).map(|n| c.pow(n as u32)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.coeffs
    }

    /// Ordinary coefficient of `z^k`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs: Vec<R> = self.coeffs.iter().take(order + 1).cloned().collect();
        coeffs.resize(order + 1, R::zero());
        Series::new(coeffs)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> Series<S> {
        Series::new(self.coeffs.iter().map(f).collect())
    }

    pub fn scale(&self, c: &R) -> Self {
        self.map(|a| a.clone() * c)
    }

    /// `n! [z^n] s`.
    pub fn egf_coeff(&self, n: usize) -> Result<R> {
        if n > self.order() {
            return Err(Error::BeyondTruncation {
                index: n,
                order: self.order(),
            });
        }
        Ok(self.coeffs[n].clone() * R::from_bigint(&factorial(n)))
    }

    /// All EGF coefficients `n! [z^n] s` for `n = 0..=N`.
    pub fn egf_coeffs(&self) -> Vec<R> {
        (0..=self.order())
            .map(|n| self.egf_coeff(n).unwrap())
            .collect()
    }

    pub fn arith(&self, other: &Self, op: RingOp) -> Self {
        match op {
            RingOp::Add => self + other,
            RingOp::Sub => self - other,
            RingOp::Mul => self * other,
        }
    }

    /// `self / t`; the constant term of `t` must be a unit.
    pub fn div(&self, t: &Self) -> Result<Self> {
        let inv = t.coeffs[0]
            .unit_inverse()
            .ok_or_else(|| Error::NonUnitConstant(t.coeffs[0].to_string()))?;
        let order = self.order().min(t.order());
        let mut out: Vec<R> = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = self.coeffs[n].clone();
            for k in 1..=n {
                acc = acc - t.coeffs[k].clone() * &out[n - k];
            }
            out.push(acc * &inv);
        }
        Ok(Series::new(out))
    }

    pub fn recip(&self) -> Result<Self> {
        Self::one(self.order()).div(self)
    }

    /// `self(t(z))` by Horner's rule; `t` must have zero constant term.
    pub fn compose(&self, t: &Self) -> Result<Self> {
        if !t.coeffs[0].is_zero() {
            return Err(Error::NonZeroConstant(t.coeffs[0].to_string()));
        }
        let order = self.order().min(t.order());
        let t = t.truncate(order);
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = &acc * &t;
            acc.coeffs[0] = acc.coeffs[0].clone() + &self.coeffs[k];
        }
        Ok(acc)
    }

    /// Compositional inverse by Lagrange inversion:
    /// `[z^n] rev = (1/n) [z^{n-1}] (z / f)^n`.
    pub fn revert(&self) -> Result<Self> {
        let order = self.order();
        if !self.coeffs[0].is_zero() || order == 0 {
            return Err(Error::NotRevertible);
        }
        if self.coeffs[1].unit_inverse().is_none() {
            return Err(Error::NotRevertible);
        }
        let mut out = Self::zero(order);
        if order == 1 {
            out.coeffs[1] = self.coeffs[1].unit_inverse().unwrap();
            return Ok(out);
        }
        // f / z, order N - 1, unit constant term
        let shifted = Series::new(self.coeffs[1..].to_vec());
        let phi = shifted.recip()?;
        let mut power = Self::one(order - 1);
        for n in 1..=order {
            power = &power * &phi;
            out.coeffs[n] = power.coeffs[n - 1].div_int(n as i64);
        }
        Ok(out)
    }

    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        Series::new(
            (1..=self.order())
                .map(|k| self.coeffs[k].clone() * R::from_int(k as i64))
                .collect(),
        )
    }

    /// Antiderivative with zero constant term; raises the order by one.
    pub fn integral(&self) -> Self {
        let mut coeffs = vec![R::zero()];
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| c.div_int(k as i64 + 1)),
        );
        Series::new(coeffs)
    }

    pub fn transcend(&self, op: Transcendental) -> Result<Self> {
        match op {
            Transcendental::Exp => self.exp(),
            Transcendental::Log => self.log(),
        }
    }

    /// Series exponential via `n e_n = sum_k k s_k e_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ExpDomain(self.coeffs[0].to_string()));
        }
        let order = self.order();
        let mut out: Vec<R> = vec![R::one()];
        for n in 1..=order {
            let mut acc = R::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = acc + self.coeffs[k].clone() * R::from_int(k as i64) * &out[n - k];
                }
            }
            out.push(acc.div_int(n as i64));
        }
        Ok(Series::new(out))
    }

    /// Series logarithm via `n l_n = n t_n - sum_{k<n} k l_k t_{n-k}`.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::LogDomain(self.coeffs[0].to_string()));
        }
        let order = self.order();
        let mut out: Vec<R> = vec![R::zero()];
        for n in 1..=order {
            let mut acc = self.coeffs[n].clone() * R::from_int(n as i64);
            for k in 1..n {
                acc = acc - out[k].clone() * R::from_int(k as i64) * &self.coeffs[n - k];
            }
            out.push(acc.div_int(n as i64));
        }
        Ok(Series::new(out))
    }
}

impl Series<MPoly> {
    /// Evaluates every coefficient at a rational parameter point.
    pub fn specialize(&self, x: &Rational, m: &Rational) -> Series<Rational> {
        self.map(|c| c.specialize(x, m))
    }
}

impl<R: Ring> PartialEq for Series<R> {
    /// Coefficient-wise equality up to the smaller truncation order.
    fn eq(&self, other: &Self) -> bool {
        self.coeffs
            .iter()
            .zip(other.coeffs.iter())
            .all(|(a, b)| a == b)
    }
}

impl<R: Ring> fmt::Display for Series<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}] + O(z^{})", parts.join(", "), self.order() + 1)
    }
}

impl<'a, R: Ring> Add<&'a Series<R>> for &'a Series<R> {
    type Output = Series<R>;
    fn add(self, rhs: &'a Series<R>) -> Series<R> {
        Series::new(
            self.coeffs
                .iter()
                .zip(rhs.coeffs.iter())
                .map(|(a, b)| a.clone() + b)
                .collect(),
        )
    }
}

impl<'a, R: Ring> Sub<&'a Series<R>> for &'a Series<R> {
    type Output = Series<R>;
    fn sub(self, rhs: &'a Series<R>) -> Series<R> {
        Series::new(
            self.coeffs
                .iter()
                .zip(rhs.coeffs.iter())
                .map(|(a, b)| a.clone() - b)
                .collect(),
        )
    }
}

impl<'a, R: Ring> Mul<&'a Series<R>> for &'a Series<R> {
    type Output = Series<R>;
    fn mul(self, rhs: &'a Series<R>) -> Series<R> {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n).fold(R::zero(), |acc, k| {
                    if self.coeffs[k].is_zero() || rhs.coeffs[n - k].is_zero() {
                        acc
                    } else {
                        acc + self.coeffs[k].clone() * &rhs.coeffs[n - k]
                    }
                })
            })
            .collect();
        Series::new(coeffs)
    }
}

impl<R: Ring> Neg for Series<R> {
    type Output = Series<R>;
    fn neg(self) -> Series<R> {
        Series::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type S = Series<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new_int(n, d)
    }

    fn qs(vals: &[(i64, i64)]) -> S {
        Series::new(vals.iter().map(|&(n, d)| q(n, d)).collect())
    }

    fn ez(order: usize) -> S {
        S::exp_linear(&Rational::one(), order)
    }

    #[test]
    fn product_examples() {
        let a = qs(&[(1, 1), (1, 1), (0, 1)]);
        let b = qs(&[(1, 1), (-1, 1), (0, 1)]);
        assert_eq!(a.arith(&b, RingOp::Mul), qs(&[(1, 1), (0, 1), (-1, 1)]));

        // oracle: e^z * e^z = e^{2z}, coefficients 2^n / n!
        let sq = ez(3).arith(&ez(3), RingOp::Mul);
        let oracle: Vec<Rational> = (0..=3)
            .map(|n| Rational::from_int(1 << n) / Rational::from_bigint(factorial(n)))
            .collect();
        assert_eq!(sq.coeffs(), &oracle[..]);
        assert_eq!(sq.coeff(3), q(4, 3));

        let s = qs(&[(3, 2), (-1, 5), (7, 1)]);
        assert_eq!(s.arith(&S::zero(2), RingOp::Add), s);
    }

    #[test]
    fn division_examples() {
        let geo = S::one(6).div(&qs(&[
            (1, 1),
            (-1, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
            (0, 1),
        ]));
        assert_eq!(geo.unwrap(), S::geometric(&Rational::one(), 6));

        let z = S::z(6);
        let em1 = S::exp_minus_one_over(&Rational::one(), 6);
        let r = z.div(&em1).unwrap_err();
        assert!(matches!(r, Error::NonUnitConstant(_)));
        // z / (e^z - 1) after cancelling z: divide (z / z) by (e^z - 1) / z
        let shifted = Series::new(em1.coeffs()[1..].to_vec());
        let bern = S::one(5).div(&shifted).unwrap();
        assert_eq!(bern.coeff(0), q(1, 1));
        assert_eq!(bern.coeff(1), q(-1, 2));
        assert_eq!(bern.coeff(2), q(1, 12));
        assert_eq!(&bern * &shifted, S::one(5));

        let bad = qs(&[(0, 1), (1, 1), (1, 1)]);
        assert!(matches!(
            S::one(2).div(&bad),
            Err(Error::NonUnitConstant(_))
        ));
    }

    #[test]
    fn composition_examples() {
        let log1p = S::log_one_plus_over(&Rational::one(), 8);
        assert_eq!(
            ez(8).compose(&log1p).unwrap(),
            qs(&[(1, 1), (1, 1)]).truncate(8)
        );

        let geo = S::geometric(&Rational::one(), 8);
        let z2 = S::from_poly(&[q(0, 1), q(0, 1), q(1, 1)], 8);
        let expect: Vec<Rational> = (0..=8).map(|k| q(((k + 1) % 2) as i64, 1)).collect();
        assert_eq!(geo.compose(&z2).unwrap().coeffs(), &expect[..]);

        // oracle: sum_k (1/k!) (e^z - 1)^k with explicit Cauchy powers
        let inner = S::exp_minus_one_over(&Rational::one(), 6);
        let mut oracle = S::zero(6);
        let mut power = S::one(6);
        for k in 0..=6 {
            if k > 0 {
                let mut next = S::zero(6);
                for i in 0..=6 {
                    for j in 0..=6 - i {
                        let prod = power.coeff(i) * inner.coeff(j);
                        next.coeffs[i + j] = next.coeffs[i + j].clone() + prod;
                    }
                }
                power = next;
            }
            let w = Rational::from_bigint(factorial(k)).recip().unwrap();
            let term = power.map(|c| c * &w);
            if k > 0 {
                oracle = &oracle + &term;
            }
        }
        let composed = inner.compose(&inner).unwrap();
        assert_eq!(composed, oracle);
        // e^{e^z - 1} - 1: EGF coefficients are the Bell numbers
        let bell: Vec<Rational> = [0, 1, 2, 5, 15, 52, 203].iter().map(|&b| q(b, 1)).collect();
        assert_eq!(composed.egf_coeffs(), bell);
        assert_eq!(composed.coeff(3), q(5, 6));

        assert!(matches!(
            ez(3).compose(&ez(3)),
            Err(Error::NonZeroConstant(_))
        ));
    }

    #[test]
    fn reversion_examples() {
        let em1 = S::exp_minus_one_over(&Rational::one(), 8);
        let rev = em1.revert().unwrap();
        assert_eq!(rev, S::log_one_plus_over(&Rational::one(), 8));
        assert_eq!(rev.coeff(4), q(-1, 4));

        let f = S::from_poly(&[q(0, 1), q(1, 1), q(1, 1)], 8);
        let g = f.revert().unwrap();
        assert_eq!(
            &g.coeffs()[..5],
            &[q(0, 1), q(1, 1), q(-1, 1), q(2, 1), q(-5, 1)]
        );
        assert_eq!(f.compose(&g).unwrap(), S::z(8));

        let m = MPoly::m();
        let sym = Series::<MPoly>::exp_minus_one_over(&m, 7);
        assert_eq!(sym.revert().unwrap(), Series::log_one_plus_over(&m, 7));
        assert_eq!(
            Series::<MPoly>::log_one_plus_over(&m, 3)
                .coeff(3)
                .to_string(),
            "1/3*m^2"
        );

        assert_eq!(ez(4).revert().unwrap_err(), Error::NotRevertible);
        let flat = S::from_poly(&[q(0, 1), q(0, 1), q(1, 1)], 4);
        assert_eq!(flat.revert().unwrap_err(), Error::NotRevertible);
    }

    #[test]
    fn transcendental_examples() {
        let e = S::z(4).exp().unwrap();
        assert_eq!(e, qs(&[(1, 1), (1, 1), (1, 2), (1, 6), (1, 24)]));
        let l = S::geometric(&Rational::one(), 4).log().unwrap();
        assert_eq!(l, qs(&[(0, 1), (1, 1), (1, 2), (1, 3), (1, 4)]));

        assert!(matches!(S::one(3).exp(), Err(Error::ExpDomain(_))));
        assert!(matches!(S::z(3).log(), Err(Error::LogDomain(_))));

        // oracle: exp(u) = sum_k u^k / k! with u = x (e^{mz} - 1) / m
        let (x, m) = (MPoly::x(), MPoly::m());
        let u = Series::<MPoly>::exp_minus_one_over(&m, 5).scale(&x);
        let mut oracle = Series::<MPoly>::zero(5);
        let mut power = Series::<MPoly>::one(5);
        for k in 0..=5 {
            if k > 0 {
                power = &power * &u;
            }
            let w = Rational::from_bigint(factorial(k)).recip().unwrap();
            oracle = &oracle + &power.map(|c| c.scale(&w));
        }
        let e = u.exp().unwrap();
        assert_eq!(e, oracle);
        assert_eq!(e.egf_coeff(2).unwrap().to_string(), "x^2 + x*m");
    }

    #[test]
    fn egf_coefficient_examples() {
        assert_eq!(ez(6).egf_coeff(5).unwrap(), q(1, 1));
        let geo = S::geometric(&Rational::one(), 6);
        assert_eq!(geo.egf_coeff(4).unwrap(), q(24, 1));
        assert_eq!(
            geo.egf_coeff(7).unwrap_err(),
            Error::BeyondTruncation { index: 7, order: 6 }
        );
        // e^z exp((e^z - 1) x) at x = 1: shifted Bell numbers
        let inner = S::exp_minus_one_over(&Rational::one(), 6);
        let bell = &ez(6) * &inner.exp().unwrap();
        assert_eq!(bell.egf_coeff(3).unwrap(), q(15, 1));
    }

    #[test]
    fn parametrized_constructors_regular_at_zero() {
        let zero = Rational::zero();
        assert_eq!(S::exp_minus_one_over(&zero, 6), S::z(6));
        assert_eq!(S::log_one_plus_over(&zero, 6), S::z(6));
        assert_eq!(
            S::one_plus_pow_neg_inv(&zero, 6),
            S::exp_linear(&Rational::from_int(-1), 6)
        );
        // (1 + 2z)^{-1/2}: 1, -1, 3/2, -5/2, 35/8
        let s = S::one_plus_pow_neg_inv(&q(2, 1), 5);
        assert_eq!(
            &s.coeffs()[..5],
            &[q(1, 1), q(-1, 1), q(3, 2), q(-5, 2), q(35, 8)]
        );
        assert_eq!(s, S::binomial_power(&q(2, 1), &q(-1, 2), 5));
    }

    #[test]
    fn binomial_power_matches_integer_powers() {
        let direct = S::from_poly(&[q(1, 1), q(3, 1)], 6);
        let cube = &(&direct * &direct) * &direct;
        assert_eq!(S::binomial_power(&q(3, 1), &q(3, 1), 6), cube);
        let inv = S::binomial_power(&q(-2, 1), &q(-1, 1), 6);
        assert_eq!(inv, S::geometric(&q(2, 1), 6));
    }

    #[test]
    fn symbolic_then_specialize_commutes() {
        let (x, m) = (MPoly::x(), MPoly::m());
        let sym = &Series::<MPoly>::exp_linear(&MPoly::one(), 8)
            * &Series::exp_minus_one_over(&m, 8).scale(&x).exp().unwrap();
        for (xv, mv) in [(q(1, 1), q(2, 1)), (q(-1, 2), q(3, 1)), (q(2, 1), q(0, 1))] {
            let direct = &ez(8) * &S::exp_minus_one_over(&mv, 8).scale(&xv).exp().unwrap();
            assert_eq!(sym.specialize(&xv, &mv), direct);
        }
    }

    fn rational() -> impl Strategy<Value = Rational> {
        (-9i64..10, 1i64..6).prop_map(|(n, d)| q(n, d))
    }

    fn series(order: usize) -> impl Strategy<Value = S> {
        prop::collection::vec(rational(), order + 1).prop_map(Series::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn revert_round_trip(mut s in series(10), lead in rational()) {
            prop_assume!(!lead.is_zero());
            s.coeffs[0] = Rational::zero();
            s.coeffs[1] = lead;
            let r = s.revert().unwrap();
            prop_assert_eq!(s.compose(&r).unwrap(), S::z(10));
            prop_assert_eq!(r.compose(&s).unwrap(), S::z(10));
        }

        #[test]
        fn exp_log_round_trip(mut s in series(10)) {
            s.coeffs[0] = Rational::one();
            prop_assert_eq!(s.log().unwrap().exp().unwrap(), s.clone());
            s.coeffs[0] = Rational::zero();
            prop_assert_eq!(s.exp().unwrap().log().unwrap(), s);
        }

        #[test]
        fn mul_div_round_trip(s in series(10), mut t in series(10)) {
            if t.coeffs[0].is_zero() {
                t.coeffs[0] = Rational::one();
            }
            prop_assert_eq!((&s * &t).div(&t).unwrap(), s);
        }
    }
}
