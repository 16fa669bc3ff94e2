//! Three-term recurrences, their orthogonal polynomials and moments.
//!
//! A [`TTRecurrence`] stores the production-matrix diagonals: `alpha[n]` is
//! `P_{n,n}` and `beta(n)` is `P_{n,n-1}`. The monic polynomials satisfy
//! `P_k = (z - alpha_{k-1}) P_{k-1} - beta_{k-1} P_{k-2}` with `P_0 = 1`.

use crate::coeffring::{MPoly, Rational, Ring};
use crate::error::{Error, Result};
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq)]
pub struct TTRecurrence<R> {
    alpha: Vec<R>,
    /// `beta[k - 1]` holds `beta_k`.
    beta: Vec<R>,
}

/// Univariate polynomial in the spectral variable, lowest degree first.
pub type UniPoly<R> = Vec<R>;

impl<R: Ring> TTRecurrence<R> {
    /// `alpha_0..alpha_{N-1}` and `beta_1..beta_{N-1}`.
    pub fn new(alpha: Vec<R>, beta: Vec<R>) -> Result<Self> {
        if alpha.len() != beta.len() + 1 {
            return Err(Error::Index(format!(
                "depth mismatch: {} alphas need {} betas, got {}",
                alpha.len(),
                alpha.len().saturating_sub(1),
                beta.len()
            )));
        }
        Ok(TTRecurrence { alpha, beta })
    }

    /// Builds a recurrence of the given depth from closed-form generators.
    pub fn from_fn(depth: usize, alpha: impl Fn(usize) -> R, beta: impl Fn(usize) -> R) -> Self {
        assert!(depth >= 1, "depth must be positive");
        TTRecurrence {
            alpha: (0..depth).map(alpha).collect(),
            beta: (1..depth).map(beta).collect(),
        }
    }

    pub fn depth(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self, n: usize) -> &R {
        &self.alpha[n]
    }

    /// `beta_n` for `n >= 1`.
    pub fn beta(&self, n: usize) -> &R {
        &self.beta[n - 1]
    }

    pub fn alphas(&self) -> &[R] {
        &self.alpha
    }

    pub fn betas(&self) -> &[R] {
        &self.beta
    }

    pub fn truncate(&self, depth: usize) -> Self {
        assert!(depth >= 1 && depth <= self.depth());
        TTRecurrence {
            alpha: self.alpha[..depth].to_vec(),
            beta: self.beta[..depth - 1].to_vec(),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> TTRecurrence<S> {
        TTRecurrence {
            alpha: self.alpha.iter().map(&f).collect(),
            beta: self.beta.iter().map(&f).collect(),
        }
    }

    /// The four scalars `(alpha, beta, gamma, delta)` of the generic
    /// recurrence with `Z = alpha + beta z` and `A = 1 + gamma z + delta z^2`,
    /// i.e. `alpha_n = alpha + n gamma` and `beta_n = n beta + n(n-1) delta`.
    /// Needs depth at least 3.
    pub fn generic_scalars(&self) -> Result<[R; 4]> {
        if self.depth() < 3 {
            return Err(Error::InsufficientTerms {
                needed: 3,
                available: self.depth(),
            });
        }
        let a = self.alpha[0].clone();
        let b = self.beta(1).clone();
        let g = self.alpha[1].clone() - &self.alpha[0];
        let d = (self.beta(2).clone() - b.clone() * R::from_int(2)).div_int(2);
        Ok([a, b, g, d])
    }

    /// `P_0..=P_n`.
    pub fn ortho_polys(&self, n: usize) -> Result<Vec<UniPoly<R>>> {
        if n > self.depth() {
            return Err(Error::InsufficientTerms {
                needed: n,
                available: self.depth(),
            });
        }
        let mut polys: Vec<UniPoly<R>> = vec![vec![R::one()]];
        for k in 1..=n {
            let prev = &polys[k - 1];
            let mut next = vec![R::zero(); k + 1];
            for (i, c) in prev.iter().enumerate() {
                next[i + 1] = next[i + 1].clone() + c;
                next[i] = next[i].clone() - c.clone() * &self.alpha[k - 1];
            }
            if k >= 2 {
                for (i, c) in polys[k - 2].iter().enumerate() {
                    next[i] = next[i].clone() - c.clone() * self.beta(k - 1);
                }
            }
            polys.push(next);
        }
        Ok(polys)
    }

    /// `mu_0..mu_{count-1}` as weighted Motzkin paths: a level step at
    /// height `h` weighs `alpha_h`, a down step from `h` weighs `beta_h`.
    /// Dynamic programming over heights.
    pub fn moments(&self, count: usize) -> Result<Vec<R>> {
        let depth = self.depth();
        if count > 2 * depth {
            return Err(Error::InsufficientTerms {
                needed: count.div_ceil(2),
                available: depth,
            });
        }
        // A path reaching height `depth` cannot return within 2*depth - 1 steps.
        let max_h = depth - 1;
        let mut weights = vec![R::zero(); max_h + 1];
        weights[0] = R::one();
        let mut out = Vec::with_capacity(count);
        for _ in 0..count {
            out.push(weights[0].clone());
            let mut next = vec![R::zero(); max_h + 1];
            for h in 0..=max_h {
                let mut acc = R::zero();
                if h > 0 && !weights[h - 1].is_zero() {
                    acc = acc + &weights[h - 1];
                }
                if !weights[h].is_zero() {
                    acc = acc + self.alpha[h].clone() * &weights[h];
                }
                if h < max_h && !weights[h + 1].is_zero() {
                    acc = acc + self.beta(h + 1).clone() * &weights[h + 1];
                }
                next[h] = acc;
            }
            weights = next;
        }
        Ok(out)
    }

    /// `size x size` matrix whose row `n` holds the coefficients of `P_n`.
    pub fn coefficient_array(&self, size: usize) -> Result<Matrix<R>> {
        if size == 0 {
            return Ok(Matrix::zeros(0, 0));
        }
        let polys = self.ortho_polys(size - 1)?;
        Ok(Matrix::from_fn(size, size, |i, j| {
            polys[i].get(j).cloned().unwrap_or_else(R::zero)
        }))
    }

    /// The moment functional `L(p q) = sum_k (pq)_k mu_k`.
    pub fn moment_functional(&self, p: &[R], q: &[R]) -> Result<R> {
        let prod = poly_mul(p, q);
        let available = 2 * self.depth();
        if prod.len() > available {
            return Err(Error::InsufficientTerms {
                needed: prod.len(),
                available,
            });
        }
        let mu = self.moments(prod.len())?;
        Ok(prod
            .iter()
            .zip(mu.iter())
            .fold(R::zero(), |acc, (c, m)| acc + c.clone() * m))
    }
}

impl TTRecurrence<MPoly> {
    pub fn specialize(&self, x: &Rational, m: &Rational) -> TTRecurrence<Rational> {
        self.map(|c| c.specialize(x, m))
    }
}

pub fn poly_mul<R: Ring>(p: &[R], q: &[R]) -> UniPoly<R> {
    if p.is_empty() || q.is_empty() {
        return Vec::new();
    }
    let mut out = vec![R::zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] = out[i + j].clone() + a.clone() * b;
        }
    }
    out
}
