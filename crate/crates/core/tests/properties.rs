use proptest::prelude::*;

use dowling_moments::cfrac::jfraction_series;
use dowling_moments::hankel::{bareiss_det, hankel_transform, jfraction_hankel};
use dowling_moments::{ExpRiordan, Matrix, Rational, Series, TTRecurrence};

const ORDER: usize = 6;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| Rational::new_int(p, q))
}

fn normalized_array() -> impl Strategy<Value = ExpRiordan<Rational>> {
    (
        prop::collection::vec(small_rational(), ORDER),
        prop::collection::vec(small_rational(), ORDER - 1),
    )
        .prop_map(|(g_tail, f_tail)| {
            let mut g = vec![Rational::from_int(1)];
            g.extend(g_tail);
            let mut f = vec![Rational::from_int(0), Rational::from_int(1)];
            f.extend(f_tail);
            ExpRiordan::normalized(Series::new(g), Series::new(f)).unwrap()
        })
}

fn recurrence(depth: usize) -> impl Strategy<Value = TTRecurrence<Rational>> {
    (
        prop::collection::vec(small_rational(), depth),
        prop::collection::vec(small_rational(), depth - 1),
    )
        .prop_map(|(a, b)| TTRecurrence::new(a, b).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn riordan_product_is_associative(a in normalized_array(), b in normalized_array(), c in normalized_array()) {
        let left = a.product(&b).unwrap().product(&c).unwrap();
        let right = a.product(&b.product(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn riordan_inverse_is_two_sided(a in normalized_array()) {
        let inv = a.inverse().unwrap();
        prop_assert_eq!(a.product(&inv).unwrap(), ExpRiordan::identity(ORDER));
        prop_assert_eq!(inv.product(&a).unwrap(), ExpRiordan::identity(ORDER));
    }

    #[test]
    fn matrix_of_product_is_product_of_matrices(a in normalized_array(), b in normalized_array()) {
        let lhs = a.product(&b).unwrap().build_matrix();
        prop_assert_eq!(lhs, a.build_matrix().mul(&b.build_matrix()).unwrap());
    }

    #[test]
    fn action_on_egfs_is_a_group_action(
        a in normalized_array(),
        b in normalized_array(),
        s in prop::collection::vec(small_rational(), ORDER + 1),
    ) {
        let s = Series::new(s);
        let lhs = a.product(&b).unwrap().apply_egf(&s).unwrap();
        let rhs = a.apply_egf(&b.apply_egf(&s).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn motzkin_moments_match_continued_fraction(j in recurrence(5)) {
        prop_assert_eq!(j.moments(10).unwrap(), jfraction_series(&j, 10).unwrap());
    }

    #[test]
    fn hankel_of_moments_is_product_of_betas(j in recurrence(5)) {
        let mu = j.moments(9).unwrap();
        let h = hankel_transform(&mu, 4).unwrap();
        for (n, hn) in h.iter().enumerate() {
            prop_assert_eq!(hn, &jfraction_hankel(&j, n).unwrap());
        }
    }

    #[test]
    fn bareiss_determinant_is_multiplicative(
        a in prop::collection::vec(small_rational(), 16),
        b in prop::collection::vec(small_rational(), 16),
    ) {
        let a = Matrix::from_fn(4, 4, |i, j| a[4 * i + j].clone());
        let b = Matrix::from_fn(4, 4, |i, j| b[4 * i + j].clone());
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(bareiss_det(&ab).unwrap(), bareiss_det(&a).unwrap() * bareiss_det(&b).unwrap());
    }

    #[test]
    fn production_matrix_regenerates_the_array(a in normalized_array()) {
        use dowling_moments::ProductionMethod;
        let m = a.build_matrix();
        let p = a.production_matrix(ProductionMethod::InverseShift).unwrap();
        prop_assert_eq!(p.clone(), a.production_matrix(ProductionMethod::Az).unwrap());
        // Row n+1 of M is row n of M times P.
        let top = m.block(ORDER, ORDER);
        let shifted = Matrix::from_fn(ORDER, ORDER, |i, j| m.get(i + 1, j).clone());
        prop_assert_eq!(top.mul(&p).unwrap(), shifted);
    }
}
