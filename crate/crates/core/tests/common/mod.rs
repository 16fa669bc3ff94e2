//! Helpers shared by the integration tests and the acceptance harness.
#![allow(dead_code)]

use dowling_moments::{ExpRiordan, FamilyId, FamilyParams, Rational, Ring, Series};

pub fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

/// Laplace expansion along the first row.
pub fn cofactor_det<R: Ring>(a: &[Vec<R>]) -> R {
    if a.is_empty() {
        return R::one();
    }
    let mut acc = R::zero();
    for (j, a0j) in a[0].iter().enumerate() {
        if a0j.is_zero() {
            continue;
        }
        let minor: Vec<Vec<R>> = a[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = a0j.clone() * cofactor_det(&minor);
        acc = if j % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

// Literal closed forms, built with rational powers and logarithms; only
// meaningful where m != 0 (and x != 1 for the Eulerian family).

fn lin(a: &Rational, order: usize) -> Series<Rational> {
    Series::from_poly(&[q(1), a.clone()], order)
}

fn ln_lin(a: &Rational, order: usize) -> Series<Rational> {
    lin(a, order).log().unwrap()
}

fn exp_lin(a: &Rational, order: usize) -> Series<Rational> {
    Series::exp_linear(a, order)
}

pub fn literal_moment_array(
    family: FamilyId,
    p: &FamilyParams<Rational>,
    n: usize,
) -> ExpRiordan<Rational> {
    let (x, m) = (&p.x, &p.m);
    let one = Series::one(n);
    let emz = exp_lin(m, n);
    // m + x - x e^{mz}
    let den = &one.scale(&(m + x)) - &emz.scale(x);
    let f_geo = (&emz - &one).div(&den).unwrap();
    let g_geo = one.scale(m).div(&den).unwrap();
    let (g, f) = match family {
        FamilyId::Dowling => {
            let e = (&emz - &one).scale(&m.recip().unwrap());
            (&exp_lin(&q(1), n) * &e.scale(x).exp().unwrap(), e)
        }
        FamilyId::Tanny => (&exp_lin(&q(1), n) * &g_geo, f_geo),
        FamilyId::Geometric => (g_geo, f_geo),
        FamilyId::GeometricMod => (&g_geo * &g_geo, f_geo),
        FamilyId::Eulerian => {
            let u = x - &q(1);
            let e = exp_lin(&(m * &u), n);
            let den = &e - &one.scale(&(m * x - m + q(1)));
            let g = exp_lin(&u, n).scale(&(m * &(q(1) - x))).div(&den).unwrap();
            let f = (&one - &e).div(&den).unwrap();
            (g, f)
        }
    };
    ExpRiordan::normalized(g, f).unwrap()
}

pub fn literal_inverse_array(
    family: FamilyId,
    p: &FamilyParams<Rational>,
    n: usize,
) -> ExpRiordan<Rational> {
    let (x, m) = (&p.x, &p.m);
    let inv_m = m.recip().unwrap();
    let f_geo = (&ln_lin(&(m + x), n) - &ln_lin(x, n)).scale(&inv_m);
    let (g, f) = match family {
        FamilyId::Dowling => (
            &exp_lin(&-x.clone(), n) * &Series::binomial_power(m, &-inv_m.clone(), n),
            ln_lin(m, n).scale(&inv_m),
        ),
        FamilyId::Tanny => (
            &Series::binomial_power(x, &((q(1) - m) * &inv_m), n)
                * &Series::binomial_power(&(m + x), &-inv_m.clone(), n),
            f_geo,
        ),
        FamilyId::Geometric => (Series::binomial_power(x, &q(-1), n), f_geo),
        FamilyId::GeometricMod => (Series::binomial_power(x, &q(-2), n), f_geo),
        FamilyId::Eulerian => {
            let c = q(1) - m + m * x;
            let g = &Series::binomial_power(&q(1), &((q(1) - m) * &inv_m), n)
                * &Series::binomial_power(&c, &-inv_m.clone(), n);
            let f =
                (&ln_lin(&c, n) - &ln_lin(&q(1), n)).scale(&(m * &(x - &q(1))).recip().unwrap());
            (g, f)
        }
    };
    ExpRiordan::normalized(g, f).unwrap()
}
