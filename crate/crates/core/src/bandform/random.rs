//! Seeded random band surfaces and knot cores for property tests.
//!
//! Routes are built from realizable moves: a band crossing over itself, a
//! clasp (two bands each passing over the other with the same sign), or a
//! band passing twice over another with opposite signs.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::Rng;

use super::{BandEnd, BandSurface, Foot, RouteEvent};
use crate::diagram::{standard, CrossingList};

#[derive(Clone, Copy, Debug)]
pub struct Limits {
    pub max_bands: usize,
    pub max_half_twists: i64,
    pub max_events: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_bands: 6, max_half_twists: 5, max_events: 10 }
    }
}

struct Slots {
    used: Vec<HashSet<usize>>,
}

impl Slots {
    fn take<R: Rng>(&mut self, rng: &mut R, band: usize) -> usize {
        loop {
            let s = rng.gen_range(0..64);
            if self.used[band].insert(s) {
                return s;
            }
        }
    }
}

/// Up to `max_events` route events among `n` bands, where band pairs
/// `(a, b)` with `a != b` are only used when `may_cross(a, b)` holds.
pub fn random_route<R: Rng>(
    rng: &mut R,
    n: usize,
    max_events: usize,
    may_cross: impl Fn(usize, usize) -> bool,
) -> Vec<RouteEvent> {
    let mut route = Vec::new();
    if n == 0 {
        return route;
    }
    let mut slots = Slots { used: vec![HashSet::new(); n] };
    let target = rng.gen_range(0..=max_events);
    let pairs: Vec<(usize, usize)> =
        (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| a != b && may_cross(a, b)).collect();
    while route.len() < target {
        let sign: i8 = if rng.gen_bool(0.5) { 1 } else { -1 };
        let room = target - route.len();
        let kind = if room < 2 || pairs.is_empty() { 0 } else { rng.gen_range(0..3) };
        match kind {
            0 => {
                let b = rng.gen_range(0..n);
                let (s1, s2) = (slots.take(rng, b), slots.take(rng, b));
                route.push(RouteEvent { over: (b, s1), under: (b, s2), sign });
            }
            1 => {
                let &(a, b) = pairs.choose(rng).unwrap();
                let (sa, sb) = (slots.take(rng, a), slots.take(rng, b));
                let (ta, tb) = (slots.take(rng, a), slots.take(rng, b));
                route.push(RouteEvent { over: (a, sa), under: (b, sb), sign });
                route.push(RouteEvent { over: (b, tb), under: (a, ta), sign });
            }
            _ => {
                let &(a, b) = pairs.choose(rng).unwrap();
                let (sa, sb) = (slots.take(rng, a), slots.take(rng, b));
                let (ta, tb) = (slots.take(rng, a), slots.take(rng, b));
                route.push(RouteEvent { over: (a, sa), under: (b, sb), sign });
                route.push(RouteEvent { over: (a, ta), under: (b, tb), sign: -sign });
            }
        }
    }
    route
}

fn twist<R: Rng>(rng: &mut R, max: i64, odd: bool) -> i64 {
    loop {
        let h = rng.gen_range(-max..=max);
        if (h.rem_euclid(2) == 1) == odd {
            return h;
        }
    }
}

/// A random single-boundary surface with at least one band. Orientable
/// surfaces have an even number of bands, all even.
pub fn random_surface<R: Rng>(rng: &mut R, orientable: bool, limits: Limits) -> BandSurface {
    loop {
        let n =
            if orientable { 2 * rng.gen_range(1..=limits.max_bands / 2) } else { rng.gen_range(1..=limits.max_bands) };
        let mut odd: Vec<bool> = (0..n).map(|_| !orientable && rng.gen_bool(0.5)).collect();
        if !orientable && !odd.iter().any(|&o| o) {
            odd[rng.gen_range(0..n)] = true;
        }
        let half_twists: Vec<i64> = odd.iter().map(|&o| twist(rng, limits.max_half_twists, o)).collect();
        let mut attach: Vec<(usize, BandEnd)> = (0..n).flat_map(|b| [(b, BandEnd::A), (b, BandEnd::B)]).collect();
        attach.shuffle(rng);
        let f = BandSurface::new(&half_twists, &attach);
        if f.boundary_walk().map(|w| w.count()) != Ok(1) {
            continue;
        }
        let route = random_route(rng, n, limits.max_events, |_, _| true);
        return f.with_route(route);
    }
}

/// A random surface in Klein-bottle normal form with `pieces` pieces.
/// Each piece interleaves one even and one odd band; routes stay inside
/// pieces.
pub fn random_normal_form<R: Rng>(rng: &mut R, pieces: usize, limits: Limits) -> BandSurface {
    let n = 2 * pieces;
    let mut half_twists = vec![0; n];
    let mut attach = Vec::with_capacity(2 * n);
    for k in 0..pieces {
        let (even, odd) = if rng.gen_bool(0.5) { (2 * k, 2 * k + 1) } else { (2 * k + 1, 2 * k) };
        half_twists[even] = twist(rng, limits.max_half_twists, false);
        half_twists[odd] = twist(rng, limits.max_half_twists, true);
        let (x, y) = if rng.gen_bool(0.5) { (even, odd) } else { (odd, even) };
        let ends = |rng: &mut R| if rng.gen_bool(0.5) { [BandEnd::A, BandEnd::B] } else { [BandEnd::B, BandEnd::A] };
        let (ex, ey) = (ends(rng), ends(rng));
        attach.extend([(x, ex[0]), (y, ey[0]), (x, ex[1]), (y, ey[1])]);
    }
    let f = BandSurface::new(&half_twists, &attach);
    let route = random_route(rng, n, limits.max_events, |a, b| a / 2 == b / 2);
    f.with_route(route)
}

/// A random knot diagram: a connected sum of up to three standard knots
/// (either chirality) with a few extra kinks.
pub fn random_knot<R: Rng>(rng: &mut R) -> CrossingList {
    let mut k = CrossingList::unlink(1);
    for _ in 0..rng.gen_range(0..=3) {
        let mut piece = match rng.gen_range(0..4) {
            0 => standard::trefoil(),
            1 => standard::figure_eight(),
            2 => standard::torus_2(5),
            _ => standard::kink(1),
        };
        if rng.gen_bool(0.5) {
            piece = piece.mirror();
        }
        let site = rng.gen_range(0..=k.components[0].len());
        k = k.connected_sum(0, &piece, 0, (site, 0)).expect("valid standard diagrams");
    }
    k
}

/// Attach order of a random surface, for display in failure messages.
pub fn describe(f: &BandSurface) -> String {
    let att: Vec<String> = f
        .attach
        .iter()
        .map(|Foot { band, end }| format!("{band}{}", if *end == BandEnd::A { "A" } else { "B" }))
        .collect();
    let h: Vec<i64> = f.bands.iter().map(|b| b.half_twists).collect();
    format!("h={h:?} attach=[{}] events={}", att.join(" "), f.route.len())
}
