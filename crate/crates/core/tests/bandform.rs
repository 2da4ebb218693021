use bandknot::bandform::BandEnd::{A, B};
use bandknot::bandform::*;
use bandknot::diagram::standard;
use bandknot::IntMatrix;

fn mobius(h: i64) -> BandSurface {
    BandSurface::new(&[h], &[(0, A), (0, B)])
}

fn torus(h0: i64, h1: i64) -> BandSurface {
    BandSurface::new(&[h0, h1], &[(0, A), (1, A), (0, B), (1, B)])
}

fn rows(m: &IntMatrix) -> Vec<Vec<i64>> {
    m.to_i64_rows().unwrap()
}

#[test]
fn mobius_framing_is_twice_the_twisting() {
    for h in [-5, -3, -1, 1, 3, 5] {
        assert_eq!(mobius(h).framing(), Ok(2 * h), "h = {h}");
    }
}

#[test]
fn opposite_mobius_bands_cancel() {
    let f = boundary_connect_sum(&mobius(1), &mobius(-1));
    assert_eq!(f.framing(), Ok(0));
}

#[test]
fn seifert_surface_has_zero_framing() {
    assert_eq!(torus(-2, -2).framing(), Ok(0));
    assert_eq!(torus(-2, 2).framing(), Ok(0));
    assert_eq!(BandSurface::disk().framing(), Ok(0));
}

#[test]
fn shapes() {
    assert!(BandSurface::new(&[1, 0], &[(0, A), (0, B), (1, A), (1, B)]).shape().is_err());
    let s = BandSurface::new(&[1, 0], &[(0, A), (1, A), (0, B), (1, B)]).shape().unwrap();
    assert_eq!((s.orientable, s.genus, s.euler), (false, 2, -1));
    let s = torus(-2, -2).shape().unwrap();
    assert_eq!((s.orientable, s.genus, s.euler), (true, 1, -1));
    let s = mobius(3).shape().unwrap();
    assert_eq!((s.orientable, s.genus, s.euler), (false, 1, 0));
}

#[test]
fn trefoil_forms() {
    let f = torus(-2, -2);
    assert_eq!(rows(&f.seifert_matrix().unwrap()), vec![vec![-1, 1], vec![0, -1]]);
    assert_eq!(rows(f.gl_form().unwrap().matrix()), vec![vec![-2, 1], vec![1, -2]]);
    assert_eq!(rows(&f.intersection_matrix()), vec![vec![0, 1], vec![-1, 0]]);
}

#[test]
fn figure_eight_seifert() {
    assert_eq!(rows(&torus(-2, 2).seifert_matrix().unwrap()), vec![vec![-1, 1], vec![0, 1]]);
}

#[test]
fn torus_2_5_chain() {
    let f = BandSurface::new(&[-2, -2, -2, -2], &[(0, A), (1, A), (0, B), (2, A), (1, B), (3, A), (2, B), (3, B)]);
    let v = rows(&f.seifert_matrix().unwrap());
    assert_eq!(v, vec![vec![-1, 1, 0, 0], vec![0, -1, 1, 0], vec![0, 0, -1, 1], vec![0, 0, 0, -1]]);
}

#[test]
fn mobius_gl_forms() {
    assert_eq!(rows(mobius(3).gl_form().unwrap().matrix()), vec![vec![3]]);
    assert_eq!(BandSurface::disk().gl_form().unwrap().dim(), 0);
}

#[test]
fn klein_piece() {
    let f = BandSurface::new(&[3, 2], &[(0, A), (1, A), (0, B), (1, B)]);
    assert_eq!(rows(f.gl_form().unwrap().matrix()), vec![vec![3, 1], vec![1, 2]]);
    assert_eq!(f.framing(), Ok(4));
    let g = gamma_curve(&f).unwrap();
    assert_eq!(4 * g.self_linking, 4);
}

#[test]
fn knotted_core() {
    let k = standard::trefoil();
    let f = mobius(1).with_route(mobius_band(&k, 1).unwrap().route);
    assert_eq!(f.framing(), Ok(14));
    let m = mobius_band(&k, 1).unwrap();
    assert_eq!(m.bands[0].half_twists, -5);
    assert_eq!(m.framing(), Ok(2));
    assert_eq!(rows(m.gl_form().unwrap().matrix()), vec![vec![1]]);
}

mod randomized {
    use super::*;
    use bandknot::algebra::signature_exact;
    use bandknot::bandform::random::{describe, random_normal_form, random_surface, Limits};
    use num_traits::{One, Signed};
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn surface(seed: u64, orientable: bool) -> BandSurface {
        random_surface(&mut ChaCha8Rng::seed_from_u64(seed), orientable, Limits::default())
    }

    fn feet(f: &BandSurface, b: usize) -> (usize, usize) {
        let at: Vec<usize> = f.attach.iter().enumerate().filter(|(_, x)| x.band == b).map(|(i, _)| i).collect();
        (at[0], at[1])
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn framing_is_even_and_follows_genus(seed in any::<u64>(), orientable in any::<bool>()) {
            let f = surface(seed, orientable);
            let fr = f.framing().map_err(|e| TestCaseError::fail(format!("{e}: {}", describe(&f))))?;
            let shape = f.shape().unwrap();
            prop_assert_eq!(shape.boundary_components, 1);
            prop_assert_eq!(fr.rem_euclid(2), 0);
            if orientable {
                prop_assert_eq!(fr, 0, "{}", describe(&f));
            } else {
                prop_assert_eq!(fr.rem_euclid(4), 2 * (shape.genus as i64 % 2), "{}", describe(&f));
            }
        }

        #[test]
        fn gamma_law(seed in any::<u64>(), pieces in 1usize..=3) {
            let f = random_normal_form(&mut ChaCha8Rng::seed_from_u64(seed), pieces, Limits::default());
            let lk = gamma_curve(&f).map_err(|e| TestCaseError::fail(format!("{e}: {}", describe(&f))))?.self_linking;
            let fr = f.framing().unwrap();
            prop_assert_eq!(fr, 4 * lk, "{}", describe(&f));
            prop_assert_eq!(fr == 0, lk == 0);
        }

        #[test]
        fn gl_determinant_is_odd_and_signature_even(seed in any::<u64>(), orientable in any::<bool>()) {
            let f = surface(seed, orientable);
            let g = f.gl_form().unwrap();
            prop_assert!(g.matrix().is_symmetric());
            prop_assert!(g.det().abs() % 2u8 == One::one(), "{}", describe(&f));
            let fr = f.framing().unwrap();
            prop_assert_eq!((signature_exact(&g) - fr / 2).rem_euclid(2), 0, "{}", describe(&f));
        }

        #[test]
        fn seifert_antisymmetric_part_is_the_intersection_form(seed in any::<u64>()) {
            let f = surface(seed, true);
            let v = f.seifert_matrix().unwrap();
            prop_assert_eq!(v.add(&v.transpose()).unwrap(), f.gl_form().unwrap().into_matrix());
            let x = v.sub(&v.transpose()).unwrap();
            prop_assert_eq!(&x, &f.intersection_matrix());
            prop_assert!(x.det().is_one(), "{}", describe(&f));
            for i in 0..f.num_bands() {
                for j in 0..f.num_bands() {
                    let ((a, b), (c, d)) = (feet(&f, i), feet(&f, j));
                    let crossed = (a < c && c < b && b < d) || (c < a && a < d && d < b);
                    prop_assert_eq!(x.get(i, j).abs().is_one(), crossed, "({}, {}) in {}", i, j, describe(&f));
                }
            }
        }

        #[test]
        fn connect_sum_forms_are_block_diagonal(s1 in any::<u64>(), s2 in any::<u64>(), o1 in any::<bool>(), o2 in any::<bool>()) {
            let (f1, f2) = (surface(s1, o1), surface(s2, o2));
            let f = boundary_connect_sum(&f1, &f2);
            let g = f.gl_form().unwrap();
            prop_assert_eq!(g, f1.gl_form().unwrap().block_diag(&f2.gl_form().unwrap()));
            prop_assert_eq!(f.framing().unwrap(), f1.framing().unwrap() + f2.framing().unwrap());
            if o1 && o2 {
                let v = f.seifert_matrix().unwrap();
                prop_assert_eq!(v, f1.seifert_matrix().unwrap().block_diag(&f2.seifert_matrix().unwrap()));
            }
        }
    }
}
