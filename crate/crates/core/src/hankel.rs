//! Hankel determinants of moment sequences.

use crate::coeffring::{MPoly, Ring};
use crate::combinat::{factorial, triangular};
use crate::dowling::FamilyId;
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::orthopoly::TTRecurrence;

/// The `(n+1) x (n+1)` matrix `(mu_{i+j})`; needs `mu_0..=mu_{2n}`.
pub fn hankel_matrix<R: Ring>(seq: &[R], n: usize) -> Result<Matrix<R>> {
    if seq.len() < 2 * n + 1 {
        return Err(Error::InsufficientTerms {
            needed: 2 * n + 1,
            available: seq.len(),
        });
    }
    Ok(Matrix::from_fn(n + 1, n + 1, |i, j| seq[i + j].clone()))
}

/// Fraction-free Gaussian elimination. Every division is exact, so this works
/// over polynomial rings as well as fields.
pub fn bareiss_det<R: Ring>(a: &Matrix<R>) -> Result<R> {
    let n = a.rows();
    if a.cols() != n {
        return Err(Error::OrderMismatch(a.rows(), a.cols()));
    }
    if n == 0 {
        return Ok(R::one());
    }
    let mut rows = a.to_rows();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if rows[k][k].is_zero() {
            match (k + 1..n).find(|&i| !rows[i][k].is_zero()) {
                Some(i) => {
                    rows.swap(k, i);
                    negate = !negate;
                }
                None => return Ok(R::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = rows[i][j].clone() * &rows[k][k] - rows[i][k].clone() * &rows[k][j];
                rows[i][j] = t.exact_div(&prev)?;
            }
        }
        prev = rows[k][k].clone();
    }
    let det = rows[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// `h_0..=h_n` with `h_k = det(mu_{i+j})_{0 <= i, j <= k}`.
pub fn hankel_transform<R: Ring>(seq: &[R], n: usize) -> Result<Vec<R>> {
    (0..=n)
        .map(|k| bareiss_det(&hankel_matrix(seq, k)?))
        .collect()
}

/// `h_n = prod_{k=1}^n beta_k^{n+1-k}` read off a J-fraction; needs `n < depth`.
pub fn jfraction_hankel<R: Ring>(j: &TTRecurrence<R>, n: usize) -> Result<R> {
    if n >= j.depth() {
        return Err(Error::InsufficientTerms {
            needed: n + 1,
            available: j.depth(),
        });
    }
    Ok((1..=n).fold(R::one(), |acc, k| acc * j.beta(k).pow((n + 1 - k) as u32)))
}

fn factorial_product(n: usize, power: u32) -> MPoly {
    (0..=n).fold(MPoly::one(), |acc, k| {
        acc * MPoly::from_bigint(&factorial(k).pow(power))
    })
}

/// Closed-form `h_n` of each family's moment sequence, in `x` and `m`.
pub fn closed_form_hankel(family: FamilyId, n: usize) -> MPoly {
    let (x, m) = (MPoly::x(), MPoly::m());
    let e = triangular(n);
    let xxm = x.clone() * (x.clone() + &m);
    match family {
        FamilyId::Dowling => (m * &x).pow(e) * factorial_product(n, 1),
        FamilyId::Eulerian => {
            (m * (x - MPoly::one()) + MPoly::one()).pow(e) * factorial_product(n, 2)
        }
        FamilyId::Tanny | FamilyId::Geometric => xxm.pow(e) * factorial_product(n, 2),
        FamilyId::GeometricMod => {
            xxm.pow(e) * factorial_product(n, 2) * MPoly::from_bigint(&factorial(n + 1))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfrac::family_jfraction;
    use crate::coeffring::Rational;
    use crate::dowling::{family_values, FamilyParams};

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&n| q(n)).collect()
    }

    /// Laplace expansion along the first row.
    fn cofactor_det<R: Ring>(a: &[Vec<R>]) -> R {
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

    #[test]
    fn bareiss_matches_cofactor_on_known_hankels() {
        let a000629 = ints(&[1, 2, 6, 26, 150]);
        let h = hankel_matrix(&a000629, 2).unwrap();
        assert_eq!(bareiss_det(&h).unwrap(), q(32));
        assert_eq!(cofactor_det(&h.to_rows()), q(32));

        assert_eq!(
            hankel_transform(&ints(&[1, 3, 12, 66, 480]), 2).unwrap(),
            ints(&[1, 3, 108])
        );

        let bell = ints(&[1, 1, 2, 5, 15, 52, 203, 877, 4140]);
        assert_eq!(
            hankel_transform(&bell[1..], 3).unwrap(),
            ints(&[1, 1, 2, 12])
        );
        assert_eq!(
            hankel_transform(&bell, 4).unwrap(),
            ints(&[1, 1, 2, 12, 288])
        );
    }

    #[test]
    fn bareiss_handles_zero_pivots_and_singular_input() {
        let swap = Matrix::from_rows(vec![vec![q(0), q(1)], vec![q(1), q(0)]]);
        assert_eq!(bareiss_det(&swap).unwrap(), q(-1));
        let singular = Matrix::from_rows(vec![vec![q(1), q(2)], vec![q(2), q(4)]]);
        assert_eq!(bareiss_det(&singular).unwrap(), q(0));
        assert_eq!(bareiss_det(&Matrix::<Rational>::zeros(0, 0)).unwrap(), q(1));
        let ragged = Matrix::<Rational>::zeros(2, 3);
        assert!(bareiss_det(&ragged).is_err());
    }

    #[test]
    fn bareiss_agrees_with_cofactor_symbolically() {
        let p = FamilyParams::symbolic();
        let mu = family_values(FamilyId::Tanny, &p, 7);
        for n in 0..=3 {
            let h = hankel_matrix(&mu, n).unwrap();
            assert_eq!(bareiss_det(&h).unwrap(), cofactor_det(&h.to_rows()));
        }
    }

    #[test]
    fn product_formula_examples() {
        let j = TTRecurrence::new(ints(&[0, 0, 0]), ints(&[2, 3])).unwrap();
        assert_eq!(jfraction_hankel(&j, 0).unwrap(), q(1));
        assert_eq!(jfraction_hankel(&j, 1).unwrap(), q(2));
        assert_eq!(jfraction_hankel(&j, 2).unwrap(), q(12));
        assert!(jfraction_hankel(&j, 3).is_err());
    }

    #[test]
    fn closed_forms_at_small_points() {
        let one = q(1);
        let at = |f, n| closed_form_hankel(f, n).specialize(&one, &one);
        assert_eq!(at(FamilyId::Tanny, 2), q(32));
        assert_eq!(at(FamilyId::Dowling, 2), q(2));
        assert_eq!(at(FamilyId::Geometric, 1), q(2));
        assert_eq!(at(FamilyId::GeometricMod, 1), q(4));
    }

    #[test]
    fn closed_forms_match_transform_symbolically() {
        let p = FamilyParams::symbolic();
        for family in FamilyId::ALL {
            let mu = family_values(family, &p, 9);
            let h = hankel_transform(&mu, 4).unwrap();
            let j = family_jfraction(family, &p, 5);
            for (n, hn) in h.iter().enumerate() {
                assert_eq!(*hn, closed_form_hankel(family, n), "{family} h_{n}");
                assert_eq!(*hn, jfraction_hankel(&j, n).unwrap(), "{family} h_{n}");
            }
        }
    }
}
