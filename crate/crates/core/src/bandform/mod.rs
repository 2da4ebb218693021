//! Disk-band presentations of spanning surfaces.
//!
//! A surface is a disk with `n` bands attached along its boundary. The
//! attaching feet are listed in `attach` in the cyclic order met along the
//! boundary of the disk. Each band carries a signed number of half-twists
//! (`+1` is a right-handed half-twist) and may cross other bands, or
//! itself, at the events listed in `route`.
//!
//! Bands are indexed from 0. In the planar projection used by [`compile`]
//! the disk lies below a horizontal line, feet sit on that line in attach
//! order, and each band is drawn above the line as an arc from its A foot
//! to its B foot, so two bands whose feet interleave cross once.

mod compile;
mod construct;
pub mod random;

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::diagram::DiagramError;

pub use compile::{compile, Compiled, Curve};
pub use construct::{
    boundary_connect_sum, gamma_curve, klein_bottle_for_cables, mobius_band, normal_form_pieces, surgery_shape,
    zero_framing_stabilize, GammaCurve,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BandEnd {
    A,
    B,
}

/// One attaching foot: an end of a band.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Foot {
    pub band: usize,
    pub end: BandEnd,
}

impl Foot {
    pub fn new(band: usize, end: BandEnd) -> Self {
        Self { band, end }
    }
}

impl Serialize for Foot {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let end = match self.end {
            BandEnd::A => "A",
            BandEnd::B => "B",
        };
        ("band", self.band, "end", end).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Foot {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let (k1, band, k2, end): (String, usize, String, String) = Deserialize::deserialize(d)?;
        if k1 != "band" || k2 != "end" {
            return Err(de::Error::custom(format!(
                "attach entry must look like [\"band\", i, \"end\", \"A\"], got keys {k1:?}, {k2:?}"
            )));
        }
        let end = match end.as_str() {
            "A" => BandEnd::A,
            "B" => BandEnd::B,
            other => return Err(de::Error::custom(format!("attach end must be \"A\" or \"B\", got {other:?}"))),
        };
        Ok(Foot { band, end })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Band {
    pub half_twists: i64,
}

/// Band `over` passes over band `under`. Slots order events along a band
/// from its A end to its B end.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RouteEvent {
    pub over: (usize, usize),
    pub under: (usize, usize),
    pub sign: i8,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BandSurface {
    pub bands: Vec<Band>,
    pub attach: Vec<Foot>,
    #[serde(default)]
    pub route: Vec<RouteEvent>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BandError {
    #[error("invalid surface: {0}")]
    Invalid(String),
    #[error("multiple boundary components ({0})")]
    MultipleBoundary(usize),
    #[error("surface not orientable")]
    NotOrientable,
    #[error("surface is orientable")]
    Orientable,
    #[error("gamma unavailable: not in normal form ({0})")]
    NotNormalForm(String),
    #[error("p must be odd, got {0}")]
    EvenP(i64),
    #[error("invalid surgery: {0}")]
    InvalidSurgery(String),
    #[error("invalid curve request: {0}")]
    Curve(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

/// A step of the boundary walk: either along an edge of a band, or along
/// the arc of the disk boundary that starts at the right corner of `foot`
/// and ends at the left corner of the next foot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WalkStep {
    /// `lane` is `+1` for the edge that leaves the A foot at its right
    /// corner and `-1` for the other; `forward` means traversed A to B.
    Edge {
        band: usize,
        lane: i8,
        forward: bool,
    },
    Disk {
        foot: usize,
        forward: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryWalk {
    pub components: Vec<Vec<WalkStep>>,
}

impl BoundaryWalk {
    pub fn count(&self) -> usize {
        self.components.len()
    }

    /// Orientation (`+1` for A to B) of each band edge along the first
    /// component, indexed by `[band][lane == -1]`.
    pub(crate) fn edge_orientations(&self, n: usize) -> Vec<[i8; 2]> {
        let mut out = vec![[0i8; 2]; n];
        for comp in &self.components {
            for step in comp {
                if let WalkStep::Edge { band, lane, forward } = *step {
                    out[band][usize::from(lane < 0)] = if forward { 1 } else { -1 };
                }
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceShape {
    pub orientable: bool,
    pub genus: u64,
    pub euler: i64,
    pub boundary_components: u64,
}

impl fmt::Display for SurfaceShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = if self.orientable { "orientable" } else { "non-orientable" };
        write!(
            f,
            "{kind}, genus {}, euler characteristic {}, {} boundary component(s)",
            self.genus, self.euler, self.boundary_components
        )
    }
}

impl BandSurface {
    /// The disk: no bands.
    pub fn disk() -> Self {
        Self::default()
    }

    /// Builds a surface without routing from half-twists and an attach
    /// order written as `(band, end)` pairs.
    pub fn new(half_twists: &[i64], attach: &[(usize, BandEnd)]) -> Self {
        Self {
            bands: half_twists.iter().map(|&h| Band { half_twists: h }).collect(),
            attach: attach.iter().map(|&(b, e)| Foot::new(b, e)).collect(),
            route: Vec::new(),
        }
    }

    pub fn with_route(mut self, route: Vec<RouteEvent>) -> Self {
        self.route = route;
        self
    }

    pub fn num_bands(&self) -> usize {
        self.bands.len()
    }

    pub fn is_orientable(&self) -> bool {
        self.bands.iter().all(|b| b.half_twists % 2 == 0)
    }

    /// Checks every structural invariant except the single-boundary one.
    pub fn check_structure(&self) -> Result<(), BandError> {
        let n = self.bands.len();
        if self.attach.len() != 2 * n {
            return Err(BandError::Invalid(format!(
                "attach has {} entries, expected {} for {n} bands",
                self.attach.len(),
                2 * n
            )));
        }
        let mut seen = HashSet::new();
        for f in &self.attach {
            if f.band >= n {
                return Err(BandError::Invalid(format!("attach refers to band {} of {n}", f.band)));
            }
            if !seen.insert(*f) {
                return Err(BandError::Invalid(format!("attach lists band {} end {:?} twice", f.band, f.end)));
            }
        }
        let mut over_slots = HashSet::new();
        let mut under_slots = HashSet::new();
        for (i, e) in self.route.iter().enumerate() {
            if e.sign != 1 && e.sign != -1 {
                return Err(BandError::Invalid(format!("route event {i} has sign {}", e.sign)));
            }
            for (b, _) in [e.over, e.under] {
                if b >= n {
                    return Err(BandError::Invalid(format!("route event {i} refers to band {b} of {n}")));
                }
            }
            if e.over == e.under {
                return Err(BandError::Invalid(format!("route event {i} uses the same slot as over and under")));
            }
            if !over_slots.insert(e.over) {
                return Err(BandError::Invalid(format!("slot {} of band {} used twice as over", e.over.1, e.over.0)));
            }
            if !under_slots.insert(e.under) {
                return Err(BandError::Invalid(format!(
                    "slot {} of band {} used twice as under",
                    e.under.1, e.under.0
                )));
            }
        }
        // The cores close up to curves in the plane, so between two bands
        // the signed events with either band on top must balance.
        let mut balance: HashMap<(usize, usize), i64> = HashMap::new();
        for e in self.route.iter().filter(|e| e.over.0 != e.under.0) {
            let (a, b) = (e.over.0, e.under.0);
            let key = (a.min(b), a.max(b));
            *balance.entry(key).or_default() += if a < b { 1 } else { -1 } * i64::from(e.sign);
        }
        let mut unbalanced: Vec<_> = balance.into_iter().filter(|&(_, v)| v != 0).collect();
        unbalanced.sort();
        if let Some(&((a, b), v)) = unbalanced.first() {
            return Err(BandError::Invalid(format!(
                "route events between bands {a} and {b} are not realizable: signs with {a} over {b} and with \
                 {b} over {a} differ by {v}"
            )));
        }
        Ok(())
    }

    /// Positions of the A and B feet of every band.
    pub(crate) fn foot_positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); self.bands.len()];
        for (k, f) in self.attach.iter().enumerate() {
            match f.end {
                BandEnd::A => pos[f.band].0 = k,
                BandEnd::B => pos[f.band].1 = k,
            }
        }
        pos
    }

    /// Whether the feet of bands `x` and `y` alternate around the disk.
    pub fn interleaved(&self, x: usize, y: usize) -> bool {
        let pos = self.foot_positions();
        interleaved_at(pos[x], pos[y])
    }

    /// Partitions the boundary into closed walks.
    pub fn boundary_walk(&self) -> Result<BoundaryWalk, BandError> {
        self.check_structure()?;
        let n2 = self.attach.len();
        if n2 == 0 {
            return Ok(BoundaryWalk { components: vec![Vec::new()] });
        }
        // Corners: 2k is the left corner of foot k, 2k+1 the right corner.
        let pos = self.foot_positions();
        let mut edge_at: Vec<Option<(usize, i8, BandEnd)>> = vec![None; 2 * n2];
        let mut other_corner = vec![0usize; 2 * n2];
        for (b, band) in self.bands.iter().enumerate() {
            let (pa, pb) = pos[b];
            let odd = band.half_twists.rem_euclid(2) == 1;
            for lane in [1i8, -1] {
                let ca = 2 * pa + usize::from(lane == 1);
                // The strand leaving A at `lane` arrives at B at lane
                // `lane * (-1)^h`; arriving lane -1 is the right corner.
                let arrive = if odd { -lane } else { lane };
                let cb = 2 * pb + usize::from(arrive == -1);
                edge_at[ca] = Some((b, lane, BandEnd::A));
                edge_at[cb] = Some((b, lane, BandEnd::B));
                other_corner[ca] = cb;
                other_corner[cb] = ca;
            }
        }
        let mut visited = vec![false; 2 * n2];
        let mut components = Vec::new();
        for start_foot in 0..n2 {
            let start = 2 * start_foot + 1;
            if visited[start] {
                continue;
            }
            let mut comp = Vec::new();
            let mut c = start;
            loop {
                // At a right corner heading along the disk arc to the next foot,
                // or at a left corner heading back along the arc.
                visited[c] = true;
                let next = if c % 2 == 1 {
                    let foot = c / 2;
                    comp.push(WalkStep::Disk { foot, forward: true });
                    2 * ((foot + 1) % n2)
                } else {
                    let foot = (c / 2 + n2 - 1) % n2;
                    comp.push(WalkStep::Disk { foot, forward: false });
                    2 * foot + 1
                };
                visited[next] = true;
                let (band, lane, end) = edge_at[next].expect("every corner carries a band edge");
                comp.push(WalkStep::Edge { band, lane, forward: end == BandEnd::A });
                c = other_corner[next];
                if c == start {
                    break;
                }
            }
            components.push(comp);
        }
        Ok(BoundaryWalk { components })
    }

    /// Requires valid structure and a single boundary component.
    pub fn check(&self) -> Result<BoundaryWalk, BandError> {
        let walk = self.boundary_walk()?;
        if walk.count() != 1 {
            return Err(BandError::MultipleBoundary(walk.count()));
        }
        Ok(walk)
    }

    pub fn shape(&self) -> Result<SurfaceShape, BandError> {
        self.check()?;
        let n = self.bands.len() as u64;
        let orientable = self.is_orientable();
        Ok(SurfaceShape {
            orientable,
            genus: if orientable { n / 2 } else { n },
            euler: 1 - n as i64,
            boundary_components: 1,
        })
    }

    /// Indices of bands with an even number of half-twists.
    pub fn orientation_preserving_bands(&self) -> Vec<usize> {
        (0..self.bands.len()).filter(|&i| self.bands[i].half_twists % 2 == 0).collect()
    }
}

pub(crate) fn interleaved_at(x: (usize, usize), y: (usize, usize)) -> bool {
    let (x0, x1) = (x.0.min(x.1), x.0.max(x.1));
    let inside = |p: usize| x0 < p && p < x1;
    inside(y.0) != inside(y.1)
}
