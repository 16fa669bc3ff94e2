use crate::coeffring::{MPoly, Rational, Ring};
use crate::combinat::{binomial, factorial};
use crate::error::{Error, Result};
use crate::orthopoly::TTRecurrence;
use crate::riordan::{extract_tridiagonal, ExpRiordan, ProductionMethod};
use crate::series::Series;

use super::numbers::{stirling2, whitney2_in};
use super::{FamilyId, FamilyParams};

/// The `n`-th family polynomial by its definition sum. This is the
/// reference route: no series, arrays or continued fractions are involved.
pub fn family_value_in<R: Ring>(family: FamilyId, p: &FamilyParams<R>, n: usize) -> R {
    let (x, m) = (&p.x, &p.m);
    let kfact = |k: usize| R::from_bigint(&factorial(k));
    (0..=n).fold(R::zero(), |acc, k| {
        let term = match family {
            FamilyId::Dowling => whitney2_in(m, n, k) * x.pow(k as u32),
            FamilyId::Tanny => kfact(k) * whitney2_in(m, n, k) * x.pow(k as u32),
            FamilyId::Eulerian => {
                let shifted = x.clone() - R::one();
                kfact(k) * whitney2_in(m, n, k) * shifted.pow((n - k) as u32)
            }
            FamilyId::Geometric => {
                kfact(k)
                    * R::from_bigint(&stirling2(n, k))
                    * x.pow(k as u32)
                    * m.pow((n - k) as u32)
            }
            FamilyId::GeometricMod => {
                kfact(k + 1)
                    * R::from_bigint(&stirling2(n, k))
                    * x.pow(k as u32)
                    * m.pow((n - k) as u32)
            }
        };
        acc + term
    })
}

pub fn family_values<R: Ring>(family: FamilyId, p: &FamilyParams<R>, count: usize) -> Vec<R> {
    (0..count).map(|n| family_value_in(family, p, n)).collect()
}

/// Definition-sum value at a rational point (argument order `m`, `x`).
pub fn family_value(family: FamilyId, m: &Rational, x: &Rational, n: usize) -> Rational {
    family_value_in(family, &FamilyParams::at(x.clone(), m.clone()), n)
}

/// Definition-sum polynomial in `x` and `m`.
pub fn family_poly(family: FamilyId, n: usize) -> MPoly {
    family_value_in(family, &FamilyParams::symbolic(), n)
}

/// Constant term of the denominator in the textbook closed form, with a
/// description for error messages.
fn closed_form_denominator<R: Ring>(family: FamilyId, p: &FamilyParams<R>) -> (R, &'static str) {
    match family {
        FamilyId::Dowling => (p.m.clone(), "m (in (e^(mz) - 1) x / m)"),
        FamilyId::Tanny | FamilyId::Geometric | FamilyId::GeometricMod => {
            (p.m.clone(), "m + x - x e^(mz) at z = 0")
        }
        FamilyId::Eulerian => (
            -(p.m.clone() * (p.x.clone() - R::one())),
            "e^(mz(x-1)) - (mx - m + 1) at z = 0",
        ),
    }
}

fn check_degenerate<R: Ring>(family: FamilyId, p: &FamilyParams<R>) -> Result<()> {
    let (den, desc) = closed_form_denominator(family, p);
    if den.is_zero() {
        return Err(Error::Degenerate {
            family: family.to_string(),
            denominator: desc.into(),
        });
    }
    Ok(())
}

/// The moment array of a family: column 0 is the family EGF and the
/// production matrix is tridiagonal.
///
/// Closed forms are rewritten through `E = (e^{mz} - 1)/m`, built
/// coefficient-wise, so nothing is divided by `m` or `x - 1`:
///
/// * Dowling: `[e^z exp(x E), E]`
/// * geometric: `m / (m + x - x e^{mz}) = 1 / (1 - x E)`, `f = E / (1 - x E)`
/// * Tanny-Dowling: `e^z` times the geometric `g`
/// * modified geometric: the geometric `g` squared
/// * Eulerian-Dowling, with `u = x - 1`, `c = m u`, `E_c = (e^{cz} - 1)/c`:
///   `[e^{uz} / (1 - E_c), E_c / (1 - E_c)]`
///
/// Points where the textbook closed form has a vanishing denominator are
/// rejected with [`Error::Degenerate`]; use the definition sum there.
pub fn family_moment_array<R: Ring>(
    family: FamilyId,
    p: &FamilyParams<R>,
    order: usize,
) -> Result<ExpRiordan<R>> {
    check_degenerate(family, p)?;
    let (x, m) = (&p.x, &p.m);
    let e_z = || Series::exp_linear(&R::one(), order);
    let geometric_pair = || -> Result<(Series<R>, Series<R>)> {
        let e = Series::exp_minus_one_over(m, order);
        let den = &Series::one(order) - &e.scale(x);
        Ok((den.recip()?, e.div(&den)?))
    };
    let (g, f) = match family {
        FamilyId::Dowling => {
            let e = Series::exp_minus_one_over(m, order);
            (&e_z() * &e.scale(x).exp()?, e)
        }
        FamilyId::Geometric => geometric_pair()?,
        FamilyId::Tanny => {
            let (g, f) = geometric_pair()?;
            (&e_z() * &g, f)
        }
        FamilyId::GeometricMod => {
            let (g, f) = geometric_pair()?;
            (&g * &g, f)
        }
        FamilyId::Eulerian => {
            let u = x.clone() - R::one();
            let c = m.clone() * &u;
            let e = Series::exp_minus_one_over(&c, order);
            let den = &Series::one(order) - &e;
            (Series::exp_linear(&u, order).div(&den)?, e.div(&den)?)
        }
    };
    ExpRiordan::normalized(g, f)
}

/// The family EGF, `sum_n value_n z^n / n!`.
pub fn family_egf<R: Ring>(
    family: FamilyId,
    p: &FamilyParams<R>,
    order: usize,
) -> Result<Series<R>> {
    Ok(family_moment_array(family, p, order)?.g().clone())
}

/// The closed-form coefficient array of the orthogonal polynomials, i.e. the
/// inverse of [`family_moment_array`], written without dividing by `m`:
///
/// * Dowling: `[e^{-xz} (1+mz)^{-1/m}, ln(1+mz)/m]`
/// * geometric: `[1/(1+xz), ln(1 + m w)/m]` with `w = z/(1+xz)`, which is
///   `ln((1+(m+x)z)/(1+xz))/m`
/// * modified geometric: as geometric with `g` squared
/// * Tanny-Dowling: `(1+xz)^{(1-m)/m} (1+(m+x)z)^{-1/m} = (1+mw)^{-1/m}/(1+xz)`
///   with the geometric `f`
/// * Eulerian-Dowling, `c = m(x-1)`, `v = z/(1+z)`:
///   `[(1+cv)^{-1/m}/(1+z), ln(1+cv)/c]`, where
///   `(1+cv)^{-1/m} = exp(-(x-1) ln(1+cv)/c)`
pub fn family_inverse_array<R: Ring>(
    family: FamilyId,
    p: &FamilyParams<R>,
    order: usize,
) -> Result<ExpRiordan<R>> {
    let (x, m) = (&p.x, &p.m);
    let one = Series::<R>::one(order);
    let z = Series::<R>::z(order);
    // w = z / (1 + xz)
    let over_one_plus = |a: &R| -> Result<Series<R>> {
        z.div(&(&one + &Series::from_poly(&[R::zero(), a.clone()], order)))
    };
    let log_over = |c: &R, inner: &Series<R>| Series::log_one_plus_over(c, order).compose(inner);
    let (g, f) = match family {
        FamilyId::Dowling => (
            &Series::exp_linear(&-x.clone(), order) * &Series::one_plus_pow_neg_inv(m, order),
            Series::log_one_plus_over(m, order),
        ),
        FamilyId::Geometric | FamilyId::GeometricMod | FamilyId::Tanny => {
            let w = over_one_plus(x)?;
            let f = log_over(m, &w)?;
            let base = Series::geometric(&-x.clone(), order);
            let g = match family {
                FamilyId::Geometric => base,
                FamilyId::GeometricMod => &base * &base,
                _ => &base * &Series::one_plus_pow_neg_inv(m, order).compose(&w)?,
            };
            (g, f)
        }
        FamilyId::Eulerian => {
            let c = m.clone() * (x.clone() - R::one());
            let v = over_one_plus(&R::one())?;
            let f = log_over(&c, &v)?;
            let g =
                &Series::geometric(&-R::one(), order) * &f.scale(&-(x.clone() - R::one())).exp()?;
            (g, f)
        }
    };
    ExpRiordan::normalized(g, f)
}

/// `[e^z, (e^{mz} - 1)/m]`, the second-kind Whitney triangle.
pub fn whitney_second_array<R: Ring>(m: &R, order: usize) -> ExpRiordan<R> {
    ExpRiordan::normalized(
        Series::exp_linear(&R::one(), order),
        Series::exp_minus_one_over(m, order),
    )
    .expect("normalized by construction")
}

/// `[(1+mz)^{-1/m}, ln(1+mz)/m]`, the first-kind Whitney triangle.
pub fn whitney_first_array<R: Ring>(m: &R, order: usize) -> ExpRiordan<R> {
    ExpRiordan::normalized(
        Series::one_plus_pow_neg_inv(m, order),
        Series::log_one_plus_over(m, order),
    )
    .expect("normalized by construction")
}

/// The three-term recurrence generated from the moment array's production
/// matrix.
pub fn family_recurrence<R: Ring>(
    family: FamilyId,
    p: &FamilyParams<R>,
    depth: usize,
) -> Result<TTRecurrence<R>> {
    let arr = family_moment_array(family, p, depth)?;
    extract_tridiagonal(&arr.production_matrix(ProductionMethod::InverseShift)?)
}

/// `b_n = sum_k C(n, k) a_k`.
pub fn binomial_transform<R: Ring>(seq: &[R]) -> Vec<R> {
    (0..seq.len())
        .map(|n| {
            (0..=n).fold(R::zero(), |acc, k| {
                acc + R::from_bigint(&binomial(n, k)) * &seq[k]
            })
        })
        .collect()
}
