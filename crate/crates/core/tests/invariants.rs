use bandknot::algebra::{inertia, signature_exact, LaurentPoly, Matrix};
use bandknot::bandform::random::{random_surface, Limits};
use bandknot::invariants::*;
use bandknot::{presets, IntMatrix, Integer};
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type L = LaurentPoly<Integer>;
type Q = Ratio<Integer>;

fn int(v: i64) -> Integer {
    Integer::from(v)
}

fn m(rows: &[Vec<i64>]) -> IntMatrix {
    Matrix::from_i64_rows(rows).unwrap()
}

/// Seifert matrix of a random Seifert surface with at most `max_bands` bands.
fn random_seifert(seed: u64, max_bands: usize) -> IntMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = random_surface(&mut rng, true, Limits { max_bands, max_half_twists: 4, max_events: 6 });
    f.seifert_matrix().unwrap()
}

/// `det(V - tV^T)` by Laplace expansion.
fn cofactor_alexander(v: &IntMatrix) -> L {
    fn det(m: &[Vec<L>]) -> L {
        if m.is_empty() {
            return L::one();
        }
        let mut acc = L::zero();
        for j in 0..m.len() {
            let minor: Vec<Vec<L>> = m[1..]
                .iter()
                .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                .collect();
            let term = &m[0][j] * &det(&minor);
            acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        acc
    }
    let n = v.rows();
    let t = L::t();
    let rows: Vec<Vec<L>> = (0..n)
        .map(|i| {
            (0..n).map(|j| &L::constant(v.get(i, j).clone()) - &(&t * &L::constant(v.get(j, i).clone()))).collect()
        })
        .collect();
    det(&rows)
}

/// Equal up to multiplication by `±t^k`.
fn same_up_to_unit(a: &L, b: &L) -> bool {
    let (Some(la), Some(lb)) = (a.min_exp(), b.min_exp()) else { return a.is_zero() && b.is_zero() };
    let (x, y) = (a.shift(-la), b.shift(-lb));
    x == y || x == -y
}

/// Arf invariant as the majority value of `q(x) = x^T V x mod 2`.
fn majority_arf(v: &IntMatrix) -> u8 {
    let n = v.rows();
    let mut ones = 0usize;
    for mask in 0u32..(1 << n) {
        let mut q = Integer::zero();
        for i in 0..n {
            for j in 0..n {
                if mask >> i & 1 == 1 && mask >> j & 1 == 1 {
                    q += v.get(i, j);
                }
            }
        }
        if (q % int(2)).abs().is_one() {
            ones += 1;
        }
    }
    u8::from(2 * ones > 1 << n)
}

/// Levine–Tristram signature from the rational realification of
/// `(1-ω)V + (1-ω̄)V^T`.
fn rational_lt(v: &IntMatrix, w: &UnitPoint<Integer>) -> SigValue {
    let n = v.rows();
    if n == 0 {
        return SigValue::Value(0);
    }
    let one = Q::one();
    let re = &one - w.cos();
    let s = w.sin().clone();
    let a = |i: usize, j: usize| re.clone() * Q::from_integer(v.get(i, j) + v.get(j, i));
    let b = |i: usize, j: usize| s.clone() * Q::from_integer(v.get(j, i) - v.get(i, j));
    let big = Matrix::from_fn(2 * n, 2 * n, |i, j| match (i < n, j < n) {
        (true, true) => a(i, j),
        (true, false) => -b(i, j - n),
        (false, true) => b(i - n, j),
        (false, false) => a(i - n, j - n),
    });
    let inert = inertia(&big);
    if inert.is_degenerate() {
        SigValue::Singular
    } else {
        SigValue::Value(inert.signature() / 2)
    }
}

fn sample_point() -> impl Strategy<Value = UnitPoint<Integer>> {
    prop_oneof![
        Just(UnitPoint::minus_one()),
        (-40i64..=40, 1i64..=40)
            .prop_filter("omega = 1", |(p, _)| *p != 0)
            .prop_map(|(p, q)| UnitPoint::from_s(Ratio::new(int(p), int(q)))),
    ]
}

#[test]
fn invariant_table() {
    type Row = (&'static str, Vec<Vec<i64>>, &'static str, i64, i64, u8);
    let cases: [Row; 3] = [
        ("trefoil", vec![vec![-1, 1], vec![0, -1]], "t^-1 - 1 + t", -2, 3, 1),
        ("figure-eight", vec![vec![-1, 1], vec![0, 1]], "-t^-1 + 3 - t", 0, 5, 1),
        ("unknot", vec![], "1", 0, 1, 0),
    ];
    for (name, rows, delta, sigma, det, arf_value) in cases {
        let v = m(&rows);
        assert!(same_up_to_unit(&alexander(&v).unwrap(), &cofactor_alexander(&v)), "{name}");
        assert_eq!(alexander(&v).unwrap().to_string(), delta, "{name}");
        assert_eq!(signature(&v), Ok(sigma), "{name}");
        assert_eq!(determinant_knot(DetSource::Seifert(&v)), Ok(int(det)), "{name}");
        assert_eq!(arf(&v), Ok(arf_value), "{name}");
        assert_eq!(majority_arf(&v), arf_value, "{name}");
    }
}

#[test]
fn trefoil_root_is_bracketed() {
    // e^{iπ/3} has s = tan(π/6) ≈ 0.5774.
    let v = m(&[vec![-1, 1], vec![0, -1]]);
    let at = |p: i64, q: i64| lt_value(&v, &UnitPoint::from_s(Ratio::new(int(p), int(q)))).unwrap();
    assert_eq!(at(5773, 10000), SigValue::Value(0));
    assert_eq!(at(5774, 10000), SigValue::Value(-2));
}

#[test]
fn cable_of_companion_matches_squared_signatures() {
    for p in presets::all() {
        let v_j: IntMatrix = p.seifert();
        let v_k = cable_seifert(&v_j, 1).unwrap();
        let r = sigma_squared_compare(&v_k, &v_j, &default_samples()).unwrap();
        assert!(r.pass, "{}: {r:?}", p.name);
    }
    let unknot = m(&[]);
    assert!(sigma_squared_compare(&unknot, &unknot, &default_samples()).unwrap().pass);
    let r = sigma_squared_compare(&m(&[vec![-1, 1], vec![0, -1]]), &unknot, &default_samples()).unwrap();
    assert!(!r.pass);
}

#[test]
fn preset_determinants_agree_across_surfaces() {
    for p in presets::all() {
        let v: IntMatrix = p.seifert();
        let from_v = determinant_knot(DetSource::Seifert(&v)).unwrap();
        for f in [&p.orientable, &p.nonorientable] {
            let g = f.gl_form().unwrap();
            assert_eq!(determinant_knot(DetSource::Gordon(&g)).unwrap(), from_v, "{}", p.name);
        }
    }
}

#[test]
fn preset_satellite_and_cable_identities() {
    for r in presets::all() {
        let dr = alexander(&r.seifert::<Integer>()).unwrap();
        for j in presets::all() {
            let dj = alexander(&j.seifert::<Integer>()).unwrap();
            let sat = alexander_satellite(&dr, &dj).unwrap();
            assert_eq!(arf_from_alexander(&sat), arf_from_alexander(&dr), "{} / {}", r.name, j.name);
        }
        for p in [-5i64, -3, -1, 1, 3, 5] {
            let c = alexander_cable2(&dr, p).unwrap();
            assert_eq!(c.evaluate_int(&int(-1)).unwrap().abs(), int(p.abs()), "{} p = {p}", r.name);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn alexander_matches_cofactor_expansion(seed in any::<u64>()) {
        let v = random_seifert(seed, 4);
        prop_assert!(same_up_to_unit(&alexander(&v).unwrap(), &cofactor_alexander(&v)));
    }

    #[test]
    fn alexander_is_congruence_invariant(seed in any::<u64>(), ops in prop::collection::vec((0usize..4, 0usize..4, -2i64..=2), 0..10)) {
        let v = random_seifert(seed, 4);
        let n = v.rows();
        let mut a = Matrix::<Integer>::identity(n);
        for (i, j, k) in ops {
            let (i, j) = (i % n, j % n);
            if i != j {
                for c in 0..n {
                    let x = a.get(c, i) + int(k) * a.get(c, j);
                    a.set(c, i, x);
                }
            }
        }
        let w = a.transpose().mul(&v).unwrap().mul(&a).unwrap();
        prop_assert_eq!(alexander(&w).unwrap(), alexander(&v).unwrap());
    }

    #[test]
    fn arf_matches_quadratic_form(seed in any::<u64>()) {
        let v = random_seifert(seed, 6);
        prop_assert_eq!(arf(&v).unwrap(), majority_arf(&v));
    }

    #[test]
    fn lt_matches_rational_realification(seed in any::<u64>(), w in sample_point()) {
        let v = random_seifert(seed, 4);
        prop_assert_eq!(lt_value(&v, &w).unwrap(), rational_lt(&v, &w));
    }

    #[test]
    fn lt_values_are_even_and_conjugation_invariant(seed in any::<u64>(), w in sample_point()) {
        let v = random_seifert(seed, 6);
        let x = lt_value(&v, &w).unwrap();
        if let SigValue::Value(s) = x {
            prop_assert_eq!(s.rem_euclid(2), 0);
        }
        prop_assert_eq!(x, lt_value(&v, &w.conj()).unwrap());
    }

    #[test]
    fn lt_at_minus_one_is_signature(seed in any::<u64>()) {
        let v = random_seifert(seed, 6);
        let s = levine_tristram(&v, &UnitPoint::minus_one()).unwrap();
        prop_assert_eq!(s.value, SigValue::Value(signature(&v).unwrap()));
        prop_assert_eq!(signature(&v).unwrap(), signature_exact(&bandknot::algebra::SymMatrix::symmetrize(&v).unwrap()));
    }

    #[test]
    fn lt_vanishes_near_one(seed in any::<u64>()) {
        let v = random_seifert(seed, 6);
        let w = UnitPoint::from_s(Ratio::new(int(1), int(200)));
        prop_assert!(w.cos() >= &(Q::one() - Q::new(int(1), int(10_000))));
        prop_assert_eq!(lt_value(&v, &w).unwrap(), SigValue::Value(0));
    }

    #[test]
    fn satellite_matrix_realizes_the_formulas(r in any::<u64>(), j in any::<u64>(), p in prop::sample::select(vec![-3i64, -1, 1, 3])) {
        let v_r = torus_2_seifert::<Integer>(p).unwrap().block_diag(&random_seifert(r, 2));
        let v_j = random_seifert(j, 2);
        let sat = satellite_seifert(&v_r, &v_j).unwrap();
        let expected = alexander_satellite(&alexander(&v_r).unwrap(), &alexander(&v_j).unwrap()).unwrap();
        prop_assert!(same_up_to_unit(&cofactor_alexander(&sat), &expected));
        prop_assert_eq!(alexander(&sat).unwrap(), expected);
        let f = sigma_satellite(sigma_function(&v_r), sigma_function(&v_j));
        for w in default_samples::<Integer>() {
            if let (SigValue::Value(a), SigValue::Value(b)) = (lt_value(&sat, &w).unwrap(), f(&w)) {
                prop_assert_eq!(a, b, "at {}", w);
            }
        }
    }

    #[test]
    fn unit_points_round_trip(w in sample_point()) {
        let json = serde_json::to_string(&w).unwrap();
        let back: UnitPoint<Integer> = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &w);
        let sq = w.square();
        prop_assert_eq!(sq.cos().clone() * sq.cos().clone() + sq.sin().clone() * sq.sin().clone(), Q::one());
    }
}
