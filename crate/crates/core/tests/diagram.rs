use bandknot::bandform::random::{random_knot, random_surface, Limits};
use bandknot::bandform::{compile, Curve};
use bandknot::diagram::{standard, CrossingList, DiagramError};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random link of two to four components: cores and pushoffs of bands of a
/// random surface, sometimes with the boundary and its longitude.
fn random_link(seed: u64) -> CrossingList {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let orientable = rng.gen_bool(0.5);
    let f = random_surface(&mut rng, orientable, Limits::default());
    let n = f.num_bands();
    let mut curves = Vec::new();
    let b = rng.gen_range(0..n);
    curves.push(Curve::Core(b));
    if f.bands[b].half_twists % 2 == 0 {
        curves.push(Curve::CorePlus(b));
    } else {
        curves.push(Curve::Tau(b));
    }
    let other = rng.gen_range(0..n);
    if other != b {
        curves.push(Curve::Core(other));
    }
    if rng.gen_bool(0.5) {
        curves.extend([Curve::Boundary, Curve::Longitude]);
    }
    compile(&f, &curves).expect("random surfaces compile").diagram
}

/// Half the sum of all signs of crossings between `a` and `b`.
fn half_sum(d: &CrossingList, a: usize, b: usize) -> i64 {
    let s: i64 = d
        .crossings
        .iter()
        .filter(|x| (x.over.0, x.under.0) == (a, b) || (x.over.0, x.under.0) == (b, a))
        .map(|x| i64::from(x.sign))
        .sum();
    assert_eq!(s % 2, 0);
    s / 2
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b))).filter(|(a, b)| a != b)
}

#[test]
fn standard_diagrams() {
    assert_eq!(standard::trefoil().writhe(0), Ok(3));
    assert_eq!(standard::figure_eight().writhe(0), Ok(0));
    assert_eq!(standard::hopf().linking_number(0, 1), Ok(1));
    for d in [standard::trefoil(), standard::figure_eight(), standard::torus_2(-5), standard::hopf()] {
        assert!(d.validate().is_ok());
    }
}

#[test]
fn corrupt_crossing_data_is_rejected() {
    let mut d = standard::hopf();
    d.crossings[0].sign = -1;
    assert_eq!(d.linking_number(0, 1), Err(DiagramError::Nonclassical { a_over_b: -1, b_over_a: 1 }));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_links_are_valid(seed in any::<u64>()) {
        let d = random_link(seed);
        prop_assert!(d.validate().is_ok());
        prop_assert!(random_knot(&mut ChaCha8Rng::seed_from_u64(seed)).validate().is_ok());
    }

    #[test]
    fn linking_is_symmetric_and_classical(seed in any::<u64>()) {
        let d = random_link(seed);
        for (a, b) in pairs(d.num_components()) {
            let lk = d.linking_number(a, b);
            prop_assert_eq!(&lk, &d.linking_number(b, a));
            prop_assert_eq!(lk, Ok(half_sum(&d, a, b)));
        }
    }

    #[test]
    fn disagreeing_counts_never_give_a_value(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let mut d = random_link(seed);
        let inter: Vec<usize> =
            (0..d.crossings.len()).filter(|&i| d.crossings[i].over.0 != d.crossings[i].under.0).collect();
        prop_assume!(!inter.is_empty());
        let i = inter[pick.index(inter.len())];
        d.crossings[i].sign = -d.crossings[i].sign;
        let (a, b) = (d.crossings[i].over.0, d.crossings[i].under.0);
        let ab: i64 = d.crossings.iter().filter(|x| (x.over.0, x.under.0) == (a, b)).map(|x| i64::from(x.sign)).sum();
        let ba: i64 = d.crossings.iter().filter(|x| (x.over.0, x.under.0) == (b, a)).map(|x| i64::from(x.sign)).sum();
        prop_assert_ne!(ab, ba);
        let is_nonclassical = matches!(d.linking_number(a, b), Err(DiagramError::Nonclassical { .. }));
        prop_assert!(is_nonclassical);
    }

    #[test]
    fn mirror_negates(seed in any::<u64>()) {
        let d = random_link(seed);
        let m = d.mirror();
        for c in 0..d.num_components() {
            prop_assert_eq!(m.writhe(c).unwrap(), -d.writhe(c).unwrap());
        }
        for (a, b) in pairs(d.num_components()) {
            prop_assert_eq!(m.linking_number(a, b).unwrap(), -d.linking_number(a, b).unwrap());
        }
    }

    #[test]
    fn reversing_one_component(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let d = random_link(seed);
        let c = pick.index(d.num_components());
        let r = d.reverse(c).unwrap();
        prop_assert!(r.validate().is_ok());
        prop_assert_eq!(r.writhe(c), d.writhe(c));
        for (a, b) in pairs(d.num_components()) {
            let expected = if a == c || b == c { -d.linking_number(a, b).unwrap() } else { d.linking_number(a, b).unwrap() };
            prop_assert_eq!(r.linking_number(a, b).unwrap(), expected);
        }
    }

    #[test]
    fn reindexing_and_rotation_preserve_counts(seed in any::<u64>(), shift in 0usize..64) {
        let d = random_link(seed);
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
        let mut e = d.clone();
        let mut ids: Vec<i64> = (0..e.crossings.len() as i64).map(|i| 1000 - 3 * i).collect();
        ids.shuffle(&mut rng);
        for (x, id) in e.crossings.iter_mut().zip(ids) {
            x.id = id;
        }
        e.crossings.shuffle(&mut rng);
        for comp in &mut e.components {
            if !comp.is_empty() {
                let k = shift % comp.len();
                comp.rotate_left(k);
            }
        }
        prop_assert!(e.validate().is_ok());
        for c in 0..d.num_components() {
            prop_assert_eq!(e.writhe(c), d.writhe(c));
        }
        for (a, b) in pairs(d.num_components()) {
            prop_assert_eq!(e.linking_number(a, b), d.linking_number(a, b));
        }
    }
}
