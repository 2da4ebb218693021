//! Compilation of curves on a band surface to a crossing list.
//!
//! Every curve is drawn in the projection described in the parent module.
//! Along a band each carried strand sits in a lane, measured to the right
//! of the A-to-B direction: the boundary edges at `±1`, the longitude just
//! inside them, the core at `0` and its pushoffs at `±δ`. Crossings come
//! from four sources:
//!
//! * the twist box next to the A foot, where at each half-twist every pair
//!   of strands crosses once and all lanes change sign;
//! * route events, where every strand of one band crosses every strand of
//!   the other;
//! * the single crossing of two band arcs whose feet interleave, where the
//!   band with the lower index is on top;
//! * core-type curves close up through the disk along chords from the B
//!   foot back to the A foot, and chords of interleaved bands cross once.
//!
//! The positive side of the surface faces away from the viewer, so in the
//! disk the `+` pushoff of a core lies below the core and the `-` pushoff
//! above it. The boundary and longitude run along the edge of the disk and
//! meet no chord.

use std::collections::HashSet;

use super::{interleaved_at, BandError, BandSurface};
use crate::diagram::{CrossingList, DiagramBuilder};

/// A curve that can be requested from [`compile`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Curve {
    /// The boundary knot `K`, oriented so that the disk arc leaving the
    /// first foot runs left to right.
    Boundary,
    /// The longitude `λ`: `K` pushed into the surface, oriented with `K`.
    Longitude,
    /// The core of a band, oriented from A to B.
    Core(usize),
    /// Pushoff of the core of an even band to the positive side.
    CorePlus(usize),
    /// Pushoff of the core of an even band to the negative side.
    CoreMinus(usize),
    /// Boundary of a thin neighbourhood of the core of an odd band: a
    /// single curve running twice along the band.
    Tau(usize),
    /// Sum of the cores of the even bands of a normal-form surface, each
    /// oriented along the boundary edges of its band.
    Gamma,
    /// Pushoff of [`Curve::Gamma`] to the positive side.
    GammaPlus,
}

/// A compiled diagram together with the curve drawn as each component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Compiled {
    pub diagram: CrossingList,
    pub curves: Vec<Curve>,
}

impl Compiled {
    pub fn component(&self, c: Curve) -> Option<usize> {
        self.curves.iter().position(|&x| x == c)
    }

    fn index(&self, c: Curve) -> Result<usize, BandError> {
        self.component(c).ok_or_else(|| BandError::Curve(format!("{c:?} was not compiled")))
    }

    pub fn linking(&self, a: Curve, b: Curve) -> Result<i64, BandError> {
        Ok(self.diagram.linking_number(self.index(a)?, self.index(b)?)?)
    }

    pub fn writhe(&self, a: Curve) -> Result<i64, BandError> {
        Ok(self.diagram.writhe(self.index(a)?)?)
    }
}

const EDGE: i64 = 1000;
const LONGITUDE: i64 = 999;

#[derive(Clone, Copy, Debug)]
struct Strand {
    comp: usize,
    seg: i64,
    band: usize,
    lane: i64,
    o: i64,
    /// Height of the closing chord through the disk, for core-type strands.
    chord: Option<i64>,
}

struct Layout {
    strands: Vec<Strand>,
    by_band: Vec<Vec<usize>>,
}

impl Layout {
    fn push(&mut self, s: Strand) {
        self.by_band[s.band].push(self.strands.len());
        self.strands.push(s);
    }
}

/// Compiles the requested curves. Component `i` of the result is
/// `curves[i]`.
pub fn compile(f: &BandSurface, curves: &[Curve]) -> Result<Compiled, BandError> {
    let walk = f.check()?;
    let n = f.num_bands();
    let odd = |b: usize| f.bands[b].half_twists.rem_euclid(2) == 1;

    let mut seen = HashSet::new();
    for &c in curves {
        if !seen.insert(c) {
            return Err(BandError::Curve(format!("{c:?} requested twice")));
        }
        match c {
            Curve::Core(b) | Curve::CorePlus(b) | Curve::CoreMinus(b) | Curve::Tau(b) if b >= n => {
                return Err(BandError::Curve(format!("band {b} out of range")));
            }
            Curve::CorePlus(b) | Curve::CoreMinus(b) if odd(b) => {
                return Err(BandError::Curve(format!("band {b} is one-sided, its core has no pushoff; use Tau({b})")));
            }
            Curve::Tau(b) if !odd(b) => {
                return Err(BandError::Curve(format!("band {b} is two-sided; use its two pushoffs")));
            }
            _ => {}
        }
    }

    // Expand gamma into the cores it is summed from.
    let gamma_bands = if curves.iter().any(|c| matches!(c, Curve::Gamma | Curve::GammaPlus)) {
        super::construct::normal_form_pieces(f)?.into_iter().map(|(op, _)| op).collect()
    } else {
        Vec::new()
    };
    let mut prim: Vec<(Curve, usize)> = Vec::new();
    for (i, &c) in curves.iter().enumerate() {
        match c {
            Curve::Gamma => prim.extend(gamma_bands.iter().map(|&b| (Curve::Core(b), i))),
            Curve::GammaPlus => prim.extend(gamma_bands.iter().map(|&b| (Curve::CorePlus(b), i))),
            _ => prim.push((c, i)),
        }
    }
    let mut prim_seen = HashSet::new();
    for (c, _) in &prim {
        if !prim_seen.insert(*c) {
            return Err(BandError::Curve(format!("{c:?} is requested twice (directly and through gamma)")));
        }
    }

    let orient = walk.edge_orientations(n);
    let mut layout = Layout { strands: Vec::new(), by_band: vec![Vec::new(); n] };
    for (comp, &(c, _)) in prim.iter().enumerate() {
        match c {
            Curve::Boundary | Curve::Longitude => {
                let width = if c == Curve::Boundary { EDGE } else { LONGITUDE };
                let mut seg = 0;
                for step in &walk.components[0] {
                    if let super::WalkStep::Edge { band, lane, forward } = *step {
                        layout.push(Strand {
                            comp,
                            seg,
                            band,
                            lane: i64::from(lane) * width,
                            o: if forward { 1 } else { -1 },
                            chord: None,
                        });
                        seg += 1;
                    }
                }
            }
            Curve::Core(b) | Curve::CorePlus(b) | Curve::CoreMinus(b) => {
                let lane = match c {
                    Curve::CorePlus(_) => 1,
                    Curve::CoreMinus(_) => -1,
                    _ => 0,
                };
                layout.push(Strand { comp, seg: 0, band: b, lane, o: 1, chord: Some(-lane) });
            }
            Curve::Tau(b) => {
                // Leaves A at +δ, arrives at -δ, closes through the disk on the
                // negative side, then runs again from -δ back round to +δ.
                layout.push(Strand { comp, seg: 0, band: b, lane: 1, o: 1, chord: Some(1) });
                layout.push(Strand { comp, seg: 2, band: b, lane: -1, o: 1, chord: Some(-1) });
            }
            Curve::Gamma | Curve::GammaPlus => unreachable!("expanded above"),
        }
    }

    let mut builder = DiagramBuilder::new();
    for _ in &prim {
        builder.add_component();
    }
    let strands = &layout.strands;
    let band_key = |s: &Strand, k: [i64; 4]| {
        let mut v = vec![s.seg];
        v.extend(k.iter().map(|x| x * s.o));
        v
    };
    let chord_key = |s: &Strand, k: [i64; 4]| {
        let mut v = vec![s.seg + 1];
        v.extend(k);
        v
    };

    // Twist boxes.
    for (b, band) in f.bands.iter().enumerate() {
        let t = band.half_twists.signum();
        let mut lanes: Vec<(usize, i64)> = layout.by_band[b].iter().map(|&i| (i, strands[i].lane)).collect();
        for k in 0..band.half_twists.abs() {
            lanes.sort_by_key(|&(_, l)| l);
            for x in 0..lanes.len() {
                for y in x + 1..lanes.len() {
                    let (p, q) = (lanes[x].0, lanes[y].0);
                    let (over, under) = if t > 0 { (p, q) } else { (q, p) };
                    let (so, su) = (&strands[over], &strands[under]);
                    builder.cross(
                        (t * so.o * su.o) as i8,
                        (so.comp, band_key(so, [0, k, under as i64, 0])),
                        (su.comp, band_key(su, [0, k, over as i64, 0])),
                    );
                }
            }
            for l in &mut lanes {
                l.1 = -l.1;
            }
        }
    }

    // Route events.
    for (e, ev) in f.route.iter().enumerate() {
        for &p in &layout.by_band[ev.over.0] {
            for &q in &layout.by_band[ev.under.0] {
                let (so, su) = (&strands[p], &strands[q]);
                builder.cross(
                    (i64::from(ev.sign) * so.o * su.o) as i8,
                    (so.comp, band_key(so, [1, ev.over.1 as i64, e as i64, q as i64])),
                    (su.comp, band_key(su, [1, ev.under.1 as i64, e as i64, p as i64])),
                );
            }
        }
    }

    // Band arcs and disk chords of interleaved bands.
    let pos = f.foot_positions();
    let dir = |b: usize| if pos[b].0 < pos[b].1 { 1 } else { -1 };
    for x in 0..n {
        for y in x + 1..n {
            if !interleaved_at(pos[x], pos[y]) {
                continue;
            }
            let dd = dir(x) * dir(y);
            // `x` is the band whose feet come first around the disk.
            let x_first = pos[x].0.min(pos[x].1) < pos[y].0.min(pos[y].1);
            let arc_sign = if x_first { dd } else { -dd };
            for &p in &layout.by_band[x] {
                for &q in &layout.by_band[y] {
                    let (sp, sq) = (&strands[p], &strands[q]);
                    builder.cross(
                        (arc_sign * sp.o * sq.o) as i8,
                        (sp.comp, band_key(sp, [2, y as i64, q as i64, 0])),
                        (sq.comp, band_key(sq, [2, x as i64, p as i64, 0])),
                    );
                    let (Some(hp), Some(hq)) = (sp.chord, sq.chord) else {
                        continue;
                    };
                    let x_over = hp >= hq;
                    let (over, under) = if x_over { (sp, sq) } else { (sq, sp) };
                    let first_over = x_over == x_first;
                    let sign = if first_over { -dd } else { dd } * sp.o * sq.o;
                    builder.cross(
                        sign as i8,
                        (over.comp, chord_key(over, [x.max(y) as i64, 0, 0, 0])),
                        (under.comp, chord_key(under, [x.min(y) as i64, 0, 0, 0])),
                    );
                }
            }
        }
    }

    let mut diagram = builder.build();

    // Assemble gamma: orient each core along its band's boundary edges,
    // then join the pieces into one component.
    let mut comp_curves: Vec<(Curve, usize)> = prim.clone();
    for (comp, &(c, owner)) in prim.iter().enumerate() {
        if matches!(curves[owner], Curve::Gamma | Curve::GammaPlus) {
            let (Curve::Core(b) | Curve::CorePlus(b)) = c else { unreachable!() };
            if orient[b][0] < 0 {
                diagram = diagram.reverse(comp)?;
            }
        }
    }
    for owner in 0..curves.len() {
        loop {
            let idx: Vec<usize> = (0..comp_curves.len()).filter(|&i| comp_curves[i].1 == owner).collect();
            if idx.len() < 2 {
                break;
            }
            diagram = diagram.join_components(idx[0], idx[1])?;
            comp_curves.remove(idx[1]);
        }
    }
    // A disk has no even bands, so its gamma is an empty circle.
    for owner in 0..curves.len() {
        if !comp_curves.iter().any(|&(_, o)| o == owner) {
            diagram.components.push(Vec::new());
            comp_curves.push((curves[owner], owner));
        }
    }
    // Reorder components into request order.
    let order: Vec<usize> =
        (0..curves.len()).map(|owner| comp_curves.iter().position(|&(_, o)| o == owner).unwrap()).collect();
    let diagram = permute_components(&diagram, &order);
    Ok(Compiled { diagram, curves: curves.to_vec() })
}

/// Component `i` of the result is component `order[i]` of `d`.
fn permute_components(d: &CrossingList, order: &[usize]) -> CrossingList {
    let mut inv = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        inv[old] = new;
    }
    let mut out = d.clone();
    out.components = order.iter().map(|&old| d.components[old].clone()).collect();
    for x in &mut out.crossings {
        x.over.0 = inv[x.over.0];
        x.under.0 = inv[x.under.0];
    }
    out
}

/// `lk(K, λ)`.
pub(crate) fn framing(f: &BandSurface) -> Result<i64, BandError> {
    compile(f, &[Curve::Boundary, Curve::Longitude])?.linking(Curve::Boundary, Curve::Longitude)
}
