//! Exponential Riordan arrays `[g, f]`.
//!
//! The matrix of `[g, f]` has entries `(n!/k!) [z^n] g f^k`. Arrays form a
//! group under `[g, f] [h, l] = [g (h o f), l o f]`, and an array acts on an
//! EGF `a` by `[g, f] a = g (a o f)`.

use crate::coeffring::{MPoly, Rational, Ring};
use crate::combinat::factorial;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::orthopoly::TTRecurrence;
use crate::series::Series;

#[derive(Clone, Debug)]
pub struct ExpRiordan<R> {
    g: Series<R>,
    f: Series<R>,
}

impl<R: Ring> PartialEq for ExpRiordan<R> {
    fn eq(&self, other: &Self) -> bool {
        self.g == other.g && self.f == other.f
    }
}

/// How [`ExpRiordan::production_matrix`] computes `P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductionMethod {
    /// `M^{-1} Mbar`, with `Mbar` the matrix minus its top row.
    InverseShift,
    /// Rows read off `e^{zy} (Z(z) + y A(z))`.
    Az,
}

impl<R: Ring> ExpRiordan<R> {
    /// Requires `g_0` a unit, `f_0 = 0` and `f_1` a unit. Both series are
    /// truncated to the smaller order.
    pub fn new(g: Series<R>, f: Series<R>) -> Result<Self> {
        let order = g.order().min(f.order());
        if order == 0 {
            return Err(Error::Index("an array needs order >= 1".into()));
        }
        let (g, f) = (g.truncate(order), f.truncate(order));
        if g.coeff(0).unit_inverse().is_none() {
            return Err(Error::NonUnitConstant(g.coeff(0).to_string()));
        }
        if !f.coeff(0).is_zero() {
            return Err(Error::NonZeroConstant(f.coeff(0).to_string()));
        }
        if f.coeff(1).unit_inverse().is_none() {
            return Err(Error::NotRevertible);
        }
        Ok(ExpRiordan { g, f })
    }

    /// As [`ExpRiordan::new`], additionally asserting `g_0 = f_1 = 1`.
    pub fn normalized(g: Series<R>, f: Series<R>) -> Result<Self> {
        let arr = Self::new(g, f)?;
        if !arr.g.coeff(0).is_one() || !arr.f.coeff(1).is_one() {
            return Err(Error::Index(format!(
                "family arrays need g_0 = f_1 = 1, got g_0 = {}, f_1 = {}",
                arr.g.coeff(0),
                arr.f.coeff(1)
            )));
        }
        Ok(arr)
    }

    /// `[1, z]`.
    pub fn identity(order: usize) -> Self {
        ExpRiordan {
            g: Series::one(order),
            f: Series::z(order),
        }
    }

    pub fn g(&self) -> &Series<R> {
        &self.g
    }

    pub fn f(&self) -> &Series<R> {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    pub fn truncate(&self, order: usize) -> Self {
        ExpRiordan {
            g: self.g.truncate(order),
            f: self.f.truncate(order),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> ExpRiordan<S> {
        ExpRiordan {
            g: self.g.map(&f),
            f: self.f.map(&f),
        }
    }

    /// The `(N+1) x (N+1)` lower-triangular matrix.
    pub fn build_matrix(&self) -> Matrix<R> {
        let n = self.order();
        let mut m = Matrix::zeros(n + 1, n + 1);
        let mut column = self.g.clone();
        for k in 0..=n {
            let inv_kfact = Rational::from_bigint(factorial(k)).recip().unwrap();
            for row in k..=n {
                let v = column.egf_coeff(row).unwrap().scale(&inv_kfact);
                m.set(row, k, v);
            }
            column = &column * &self.f;
        }
        m
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        let order = self.order().min(other.order());
        let (a, b) = (self.truncate(order), other.truncate(order));
        let g = &a.g * &b.g.compose(&a.f)?;
        let f = b.f.compose(&a.f)?;
        Ok(ExpRiordan { g, f })
    }

    /// `[1 / (g o fbar), fbar]`.
    pub fn inverse(&self) -> Result<Self> {
        let fbar = self.f.revert()?;
        let g = self.g.compose(&fbar)?.recip()?;
        Ok(ExpRiordan { g, f: fbar })
    }

    /// `g (a o f)`.
    pub fn apply_egf(&self, a: &Series<R>) -> Result<Series<R>> {
        let order = self.order().min(a.order());
        let t = self.truncate(order);
        Ok(&t.g * &a.truncate(order).compose(&t.f)?)
    }

    /// `(Z, A)` with `Z = (g'/g) o fbar` and `A = f' o fbar`, both to order
    /// `N - 1`.
    pub fn az_series(&self) -> Result<(Series<R>, Series<R>)> {
        let fbar = self.f.revert()?;
        let fbar = fbar.truncate(self.order() - 1);
        let z = self.g.derivative().div(&self.g)?.compose(&fbar)?;
        let a = self.f.derivative().compose(&fbar)?;
        Ok((z, a))
    }

    /// The `N x N` leading block of the production matrix, exact at the
    /// array's truncation order.
    pub fn production_matrix(&self, method: ProductionMethod) -> Result<Matrix<R>> {
        let n = self.order();
        match method {
            ProductionMethod::InverseShift => {
                let m = self.build_matrix();
                let inv = m.block(n, n).lower_triangular_inverse()?;
                let shifted = Matrix::from_fn(n, n, |i, j| m.get(i + 1, j).clone());
                inv.mul(&shifted)
            }
            ProductionMethod::Az => {
                let (z, a) = self.az_series()?;
                Ok(production_from_az(&z, &a, n))
            }
        }
    }
}

/// The `size x size` production matrix with row generating functions
/// `r_n(y) = n! [t^n] e^{ty} (Z(t) + y A(t))`, i.e.
/// `P_{n,k} = n!/k! Z_{n-k} + n!/(k-1)! A_{n-k+1}`.
pub fn production_from_az<R: Ring>(z: &Series<R>, a: &Series<R>, size: usize) -> Matrix<R> {
    Matrix::from_fn(size, size, |row, k| {
        let mut v = R::zero();
        if k <= row {
            let w = Rational::from_bigint(factorial(row)) / Rational::from_bigint(factorial(k));
            v = v + z.coeff(row - k).scale(&w);
        }
        if k >= 1 && k <= row + 1 {
            let w = Rational::from_bigint(factorial(row)) / Rational::from_bigint(factorial(k - 1));
            v = v + a.coeff(row + 1 - k).scale(&w);
        }
        v
    })
}

impl ExpRiordan<MPoly> {
    pub fn specialize(&self, x: &Rational, m: &Rational) -> ExpRiordan<Rational> {
        self.map(|c| c.specialize(x, m))
    }
}

/// Reads `alpha_n = P_{n,n}` and `beta_n = P_{n,n-1}` off a tridiagonal
/// production matrix with unit superdiagonal.
pub fn extract_tridiagonal<R: Ring>(p: &Matrix<R>) -> Result<TTRecurrence<R>> {
    let n = p.rows();
    if n == 0 || p.cols() != n {
        return Err(Error::Index("expected a nonempty square matrix".into()));
    }
    for i in 0..n {
        for j in 0..n {
            let v = p.get(i, j);
            if (j + 1 < i || j > i + 1) && !v.is_zero() {
                return Err(Error::NotTridiagonal {
                    row: i,
                    col: j,
                    value: v.to_string(),
                });
            }
            if j == i + 1 && !v.is_one() {
                return Err(Error::SuperdiagonalNotOne {
                    row: i,
                    col: j,
                    value: v.to_string(),
                });
            }
        }
    }
    TTRecurrence::new(
        (0..n).map(|i| p.get(i, i).clone()).collect(),
        (1..n).map(|i| p.get(i, i - 1).clone()).collect(),
    )
}
