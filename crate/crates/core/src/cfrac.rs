//! Jacobi and Stieltjes continued fractions.
//!
//! A J-fraction `1/(1 - a_0 z - b_1 z^2/(1 - a_1 z - b_2 z^2/(...)))` carries
//! the same data as a [`TTRecurrence`]. An S-fraction is
//! `1/(1 - a_1 z/(1 - a_2 z/(...)))`. Expansion runs the convergent
//! numerator and denominator as truncated power series and divides once.

use crate::coeffring::{MPoly, Rational, Ring};
use crate::dowling::{FamilyId, FamilyParams};
use crate::error::{Error, Result};
use crate::orthopoly::TTRecurrence;
use crate::series::Series;

pub type JFraction<R> = TTRecurrence<R>;

#[derive(Clone, Debug, PartialEq)]
pub struct SFraction<R> {
    /// `a[k - 1]` holds `a_k`.
    a: Vec<R>,
}

impl<R: Ring> SFraction<R> {
    pub fn new(a: Vec<R>) -> Self {
        SFraction { a }
    }

    /// `a_1..=a_depth` from a generator indexed from 1.
    pub fn from_fn(depth: usize, a: impl Fn(usize) -> R) -> Self {
        SFraction {
            a: (1..=depth).map(a).collect(),
        }
    }

    pub fn depth(&self) -> usize {
        self.a.len()
    }

    pub fn coeffs(&self) -> &[R] {
        &self.a
    }

    /// `a_k` for `k >= 1`.
    pub fn a(&self, k: usize) -> &R {
        &self.a[k - 1]
    }
}

impl SFraction<MPoly> {
    pub fn specialize(&self, x: &Rational, m: &Rational) -> SFraction<Rational> {
        SFraction {
            a: self.a.iter().map(|c| c.specialize(x, m)).collect(),
        }
    }
}

fn linear<R: Ring>(c: &R, order: usize) -> Series<R> {
    Series::from_poly(&[R::one(), -c.clone()], order)
}

/// First `count` OGF coefficients of a J-fraction; `count <= 2 * depth`.
pub fn jfraction_series<R: Ring>(j: &JFraction<R>, count: usize) -> Result<Vec<R>> {
    let depth = j.depth();
    if count > 2 * depth {
        return Err(Error::InsufficientTerms {
            needed: count.div_ceil(2),
            available: depth,
        });
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    let order = count - 1;
    let z2 = Series::from_poly(&[R::zero(), R::zero(), R::one()], order);
    // tail T_k = num / den
    let mut num = linear(j.alpha(depth - 1), order);
    let mut den = Series::one(order);
    for k in (0..depth - 1).rev() {
        let next = &(&linear(j.alpha(k), order) * &num) - &(&z2 * &den).scale(j.beta(k + 1));
        den = num;
        num = next;
    }
    Ok(den.div(&num)?.into_coeffs())
}

/// First `count` OGF coefficients of an S-fraction; `count <= depth`.
pub fn sfraction_series<R: Ring>(s: &SFraction<R>, count: usize) -> Result<Vec<R>> {
    let depth = s.depth();
    if count > depth {
        return Err(Error::InsufficientTerms {
            needed: count,
            available: depth,
        });
    }
    if count == 0 {
        return Ok(Vec::new());
    }
    let order = count - 1;
    let z = Series::z(order);
    let mut num = Series::one(order);
    let mut den = Series::one(order);
    for k in (1..=depth).rev() {
        let next = &num - &(&z * &den).scale(s.a(k));
        den = num;
        num = next;
    }
    Ok(den.div(&num)?.into_coeffs())
}

/// Even contraction: `alpha_0 = a_1`, `alpha_n = a_{2n} + a_{2n+1}`,
/// `beta_n = a_{2n-1} a_{2n}`.
pub fn contract<R: Ring>(s: &SFraction<R>) -> Result<JFraction<R>> {
    let d = s.depth();
    if d < 2 {
        return Err(Error::InsufficientTerms {
            needed: 2,
            available: d,
        });
    }
    let depth = d.div_ceil(2);
    let alpha = (0..depth)
        .map(|n| {
            if n == 0 {
                s.a(1).clone()
            } else {
                s.a(2 * n).clone() + s.a(2 * n + 1)
            }
        })
        .collect();
    let beta = (1..depth)
        .map(|n| s.a(2 * n - 1).clone() * s.a(2 * n))
        .collect();
    TTRecurrence::new(alpha, beta)
}

/// The J-fraction of a family from its closed-form coefficient patterns:
///
/// | family | `alpha_n` | `beta_n` |
/// |---|---|---|
/// | Dowling | `x + n m + 1` | `n m x` |
/// | Tanny-Dowling | `(2n+1) x + n m + 1` | `n^2 x (x+m)` |
/// | Eulerian-Dowling | `x (n m + 1) - n (m - 2)` | `n^2 (m (x-1) + 1)` |
/// | geometric | `(2n+1) x + n m` | `n^2 x (x+m)` |
/// | modified geometric | `(2n+2) x + n m` | `n (n+1) x (x+m)` |
pub fn family_jfraction<R: Ring>(
    family: FamilyId,
    p: &FamilyParams<R>,
    depth: usize,
) -> JFraction<R> {
    let (x, m) = (p.x.clone(), p.m.clone());
    let int = |n: usize| R::from_int(n as i64);
    let xxm = x.clone() * (x.clone() + &m);
    match family {
        FamilyId::Dowling => TTRecurrence::from_fn(
            depth,
            |n| x.clone() + int(n) * &m + R::one(),
            |n| int(n) * &m * &x,
        ),
        FamilyId::Tanny => TTRecurrence::from_fn(
            depth,
            |n| int(2 * n + 1) * &x + int(n) * &m + R::one(),
            |n| int(n * n) * &xxm,
        ),
        FamilyId::Eulerian => TTRecurrence::from_fn(
            depth,
            |n| x.clone() * (int(n) * &m + R::one()) - int(n) * (m.clone() - int(2)),
            |n| int(n * n) * (m.clone() * (x.clone() - R::one()) + R::one()),
        ),
        FamilyId::Geometric => TTRecurrence::from_fn(
            depth,
            |n| int(2 * n + 1) * &x + int(n) * &m,
            |n| int(n * n) * &xxm,
        ),
        FamilyId::GeometricMod => TTRecurrence::from_fn(
            depth,
            |n| int(2 * n + 2) * &x + int(n) * &m,
            |n| int(n * (n + 1)) * &xxm,
        ),
    }
}

/// S-fractions of the two geometric families:
/// `x, x+m, 2x, 2(x+m), ...` and `2x, x+m, 3x, 2(x+m), ...`.
pub fn family_sfraction<R: Ring>(
    family: FamilyId,
    p: &FamilyParams<R>,
    depth: usize,
) -> Result<SFraction<R>> {
    let (x, m) = (&p.x, &p.m);
    let shift = match family {
        FamilyId::Geometric => 0,
        FamilyId::GeometricMod => 1,
        other => {
            return Err(Error::Index(format!(
                "no S-fraction pattern for the {other} family"
            )))
        }
    };
    Ok(SFraction::from_fn(depth, |k| {
        let j = k.div_ceil(2);
        if k % 2 == 1 {
            R::from_int((j + shift) as i64) * x
        } else {
            R::from_int(j as i64) * (x.clone() + m)
        }
    }))
}
