use bandknot::algebra::{
    det_laurent, fp_abelian_invariants, inertia, inertia_int, signature_exact, smith_normal_form, LaurentPoly, Matrix,
    SymMatrix,
};
use num_rational::Ratio;
use proptest::prelude::*;

type P = LaurentPoly<i64>;

/// Laplace expansion along the first row.
fn cofactor_det(m: &[Vec<P>]) -> P {
    let n = m.len();
    if n == 0 {
        return P::one();
    }
    let mut acc = P::zero();
    for j in 0..n {
        let minor: Vec<Vec<P>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = &m[0][j] * &cofactor_det(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

fn laurent() -> impl Strategy<Value = P> + Clone {
    prop::collection::vec((-2i64..=2, -3i64..=3), 0..4).prop_map(|t| P::from_i64_terms(&t))
}

fn square<S: Strategy + Clone>(max: usize, entry: S) -> impl Strategy<Value = Vec<Vec<S::Value>>>
where
    S::Value: Clone + std::fmt::Debug,
{
    (0..=max).prop_flat_map(move |n| prop::collection::vec(prop::collection::vec(entry.clone(), n), n))
}

fn symmetric(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    square(max, -4i64..=4).prop_map(|mut m| {
        for i in 0..m.len() {
            for j in 0..i {
                m[i][j] = m[j][i];
            }
        }
        m
    })
}

/// A unimodular matrix as a product of elementary operations.
fn unimodular(n: usize, ops: &[(usize, usize, i64, u8)]) -> Matrix<i64> {
    let mut a = Matrix::<i64>::identity(n);
    if n == 0 {
        return a;
    }
    for &(i, j, k, kind) in ops {
        let (i, j) = (i % n, j % n);
        match kind % 3 {
            0 if i != j => {
                for c in 0..n {
                    let v = a.get(i, c) + k * a.get(j, c);
                    a.set(i, c, v);
                }
            }
            1 => a.swap_rows(i, j),
            _ => {
                for c in 0..n {
                    let v = -a.get(i, c);
                    a.set(i, c, v);
                }
            }
        }
    }
    a
}

fn ops() -> impl Strategy<Value = Vec<(usize, usize, i64, u8)>> {
    prop::collection::vec((0usize..8, 0usize..8, -3i64..=3, any::<u8>()), 0..12)
}

#[test]
fn klein_ball_homology() {
    let rel = Matrix::from_i64_rows(&[vec![-2, 1], vec![0, 1]]).unwrap();
    let h = fp_abelian_invariants::<i64>(2, &rel).unwrap();
    assert_eq!(h.to_string(), "Z/2");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn det_laurent_matches_cofactor_expansion(rows in square(4, laurent())) {
        let n = rows.len();
        let m = Matrix::from_rows_with_cols(rows.clone(), n).unwrap();
        prop_assert_eq!(det_laurent(&m), cofactor_det(&rows));
    }

    #[test]
    fn integer_det_matches_cofactor_expansion(rows in square(4, -6i64..=6)) {
        let lifted: Vec<Vec<P>> = rows.iter().map(|r| r.iter().map(|&x| P::constant(x)).collect()).collect();
        let m = Matrix::<i64>::from_i64_rows(&rows).unwrap();
        prop_assert_eq!(P::constant(m.det()), cofactor_det(&lifted));
    }

    #[test]
    fn signature_is_congruence_invariant(rows in symmetric(5), ops in ops()) {
        let m = SymMatrix::new(Matrix::from_i64_rows(&rows).unwrap()).unwrap();
        let a = unimodular(rows.len(), &ops);
        let c = m.congruent(&a).unwrap();
        prop_assert_eq!(signature_exact(&c), signature_exact(&m));
        prop_assert_eq!(inertia_int(c.matrix()), inertia_int(m.matrix()));
    }

    #[test]
    fn fraction_free_inertia_matches_rational(rows in symmetric(6)) {
        let m = Matrix::<i64>::from_i64_rows(&rows).unwrap();
        let q = m.map(|&x| Ratio::from_integer(x));
        prop_assert_eq!(inertia_int(&m), inertia(&q));
    }

    #[test]
    fn smith_form_is_invariant(rows in square(4, -6i64..=6), left in ops(), right in ops()) {
        let n = rows.len();
        let m = Matrix::<i64>::from_i64_rows(&rows).unwrap();
        let changed = unimodular(n, &left).mul(&m).unwrap().mul(&unimodular(n, &right)).unwrap();
        let (a, b) = (smith_normal_form(&m), smith_normal_form(&changed));
        prop_assert_eq!(a.rank, b.rank);
        prop_assert_eq!(a.factors, b.factors);
    }

    #[test]
    fn trivial_generator_does_not_change_torsion(rows in square(4, -6i64..=6)) {
        let n = rows.len();
        let m = Matrix::<i64>::from_i64_rows(&rows).unwrap();
        let h = fp_abelian_invariants(n, &m).unwrap();
        let bigger = m.block_diag(&Matrix::identity(1));
        let h2 = fp_abelian_invariants(n + 1, &bigger).unwrap();
        prop_assert_eq!(h, h2);
    }

    #[test]
    fn laurent_ring_laws(p in laurent(), q in laurent(), x in prop_oneof![Just(-1i64), Just(2), Just(3)]) {
        let r = Ratio::from_integer(x);
        prop_assert_eq!((&p * &q).evaluate(&r), p.evaluate(&r) * q.evaluate(&r));
        prop_assert_eq!((&p + &q).evaluate(&r), p.evaluate(&r) + q.evaluate(&r));
        prop_assert_eq!(p.to_string().parse::<P>().unwrap(), p.clone());
        if !q.is_zero() {
            prop_assert_eq!((&p * &q).div_exact(&q), Some(p.clone()));
        }
        prop_assert_eq!(p.substitute(2).evaluate(&r), p.evaluate(&(r * r)));
    }
}
