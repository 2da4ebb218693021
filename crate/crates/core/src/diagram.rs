//! Abstract crossing-list diagrams of oriented multi-component curves.
//!
//! A diagram is a list of components and a list of signed crossings. Each
//! component owns passage slots `0..m`; its passage sequence is the cyclic
//! order in which the component meets them. A crossing references one slot
//! as its over-passage and one as its under-passage.
//!
//! Crossing signs are right-handed: a crossing is `+1` when the over-strand,
//! rotated counterclockwise by less than a half turn, points along the
//! under-strand. With this convention the standard closed 2-braid diagram
//! of the (2,3) torus knot has writhe `+3` and signature `-2`.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

/// A passage: `(component index, slot)`.
pub type Passage = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub id: i64,
    pub sign: i8,
    pub over: Passage,
    pub under: Passage,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossingList {
    /// Per component, the cyclic sequence of slots it visits.
    pub components: Vec<Vec<usize>>,
    pub crossings: Vec<Crossing>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    BadSign { id: i64, sign: i8 },
    DuplicateId(i64),
    ComponentOutOfRange { id: i64, component: usize },
    SlotOutOfRange { id: i64, passage: Passage },
    NotAPermutation { component: usize },
    TwiceAsOver(Passage),
    TwiceAsUnder(Passage),
    OverAndUnder(Passage),
    Unreferenced(Passage),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BadSign { id, sign } => write!(f, "crossing {id} has sign {sign}, expected +1 or -1"),
            Violation::DuplicateId(id) => write!(f, "crossing id {id} used more than once"),
            Violation::ComponentOutOfRange { id, component } => {
                write!(f, "crossing {id} references component {component} out of range")
            }
            Violation::SlotOutOfRange { id, passage: (c, s) } => {
                write!(f, "crossing {id} references slot {s} of component {c} out of range")
            }
            Violation::NotAPermutation { component } => {
                write!(f, "component {component} does not visit each of its slots exactly once")
            }
            Violation::TwiceAsOver((c, s)) => write!(f, "crossing referenced twice as over at passage ({c}, {s})"),
            Violation::TwiceAsUnder((c, s)) => write!(f, "crossing referenced twice as under at passage ({c}, {s})"),
            Violation::OverAndUnder((c, s)) => write!(f, "passage ({c}, {s}) used both as over and as under"),
            Violation::Unreferenced((c, s)) => write!(f, "passage ({c}, {s}) is not referenced by any crossing"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DiagramError {
    #[error("component index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("linking number needs two distinct components, got {0} twice")]
    SameComponent(usize),
    #[error("nonclassical crossing data: a-over-b count {a_over_b} differs from b-over-a count {b_over_a}")]
    Nonclassical { a_over_b: i64, b_over_a: i64 },
    #[error("invalid splice site {site} on component of length {len}")]
    InvalidSpliceSite { site: usize, len: usize },
    #[error("invalid diagram: {0}")]
    Invalid(String),
}

impl CrossingList {
    pub fn empty() -> Self {
        Self::default()
    }

    /// `n` disjoint crossingless circles.
    pub fn unlink(n: usize) -> Self {
        Self { components: vec![Vec::new(); n], crossings: Vec::new() }
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    /// All invariant violations; empty iff the diagram is well formed.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut ids = HashSet::new();
        let mut as_over: HashMap<Passage, usize> = HashMap::new();
        let mut as_under: HashMap<Passage, usize> = HashMap::new();
        for x in &self.crossings {
            if x.sign != 1 && x.sign != -1 {
                out.push(Violation::BadSign { id: x.id, sign: x.sign });
            }
            if !ids.insert(x.id) {
                out.push(Violation::DuplicateId(x.id));
            }
            for (p, tally) in [(x.over, &mut as_over), (x.under, &mut as_under)] {
                let (c, s) = p;
                match self.components.get(c) {
                    None => out.push(Violation::ComponentOutOfRange { id: x.id, component: c }),
                    Some(seq) if s >= seq.len() => out.push(Violation::SlotOutOfRange { id: x.id, passage: p }),
                    Some(_) => *tally.entry(p).or_default() += 1,
                }
            }
        }
        for (c, seq) in self.components.iter().enumerate() {
            let mut seen = vec![false; seq.len()];
            let ok = seq.iter().all(|&s| s < seen.len() && !std::mem::replace(&mut seen[s], true));
            if !ok {
                out.push(Violation::NotAPermutation { component: c });
            }
        }
        let mut keys: Vec<_> = as_over.keys().chain(as_under.keys()).copied().collect();
        keys.sort_unstable();
        keys.dedup();
        for p in keys {
            let (o, u) = (as_over.get(&p).copied().unwrap_or(0), as_under.get(&p).copied().unwrap_or(0));
            if o > 1 {
                out.push(Violation::TwiceAsOver(p));
            }
            if u > 1 {
                out.push(Violation::TwiceAsUnder(p));
            }
            if o > 0 && u > 0 {
                out.push(Violation::OverAndUnder(p));
            }
        }
        for (c, seq) in self.components.iter().enumerate() {
            for s in 0..seq.len() {
                if !as_over.contains_key(&(c, s)) && !as_under.contains_key(&(c, s)) {
                    out.push(Violation::Unreferenced((c, s)));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        let v = self.violations();
        if v.is_empty() {
            Ok(())
        } else {
            Err(v)
        }
    }

    fn check_index(&self, c: usize) -> Result<(), DiagramError> {
        if c < self.components.len() {
            Ok(())
        } else {
            Err(DiagramError::IndexOutOfRange(c))
        }
    }

    /// Signed count of crossings with both strands on component `c`.
    pub fn writhe(&self, c: usize) -> Result<i64, DiagramError> {
        self.check_index(c)?;
        Ok(self.crossings.iter().filter(|x| x.over.0 == c && x.under.0 == c).map(|x| i64::from(x.sign)).sum())
    }

    /// Linking number of two distinct components.
    pub fn linking_number(&self, a: usize, b: usize) -> Result<i64, DiagramError> {
        if a == b {
            self.check_index(a)?;
            return Err(DiagramError::SameComponent(a));
        }
        self.linking_number_between(&[a], &[b])
    }

    /// Linking number of the sublinks `a` and `b` (disjoint component sets),
    /// i.e. the sum of pairwise linking numbers. Computed as the signed
    /// count of crossings where `a` passes over `b`, checked against the
    /// count where `b` passes over `a`.
    pub fn linking_number_between(&self, a: &[usize], b: &[usize]) -> Result<i64, DiagramError> {
        for &c in a.iter().chain(b) {
            self.check_index(c)?;
        }
        if let Some(&c) = a.iter().find(|c| b.contains(c)) {
            return Err(DiagramError::SameComponent(c));
        }
        let (mut ab, mut ba) = (0i64, 0i64);
        for x in &self.crossings {
            let (o, u) = (x.over.0, x.under.0);
            if a.contains(&o) && b.contains(&u) {
                ab += i64::from(x.sign);
            } else if b.contains(&o) && a.contains(&u) {
                ba += i64::from(x.sign);
            }
        }
        if ab != ba {
            return Err(DiagramError::Nonclassical { a_over_b: ab, b_over_a: ba });
        }
        Ok(ab)
    }

    /// Mirror image: every crossing sign flips.
    pub fn mirror(&self) -> Self {
        let mut out = self.clone();
        for x in &mut out.crossings {
            x.sign = -x.sign;
        }
        out
    }

    /// Reverses the orientation of component `c`.
    pub fn reverse(&self, c: usize) -> Result<Self, DiagramError> {
        self.check_index(c)?;
        let mut out = self.clone();
        out.components[c].reverse();
        for x in &mut out.crossings {
            if (x.over.0 == c) != (x.under.0 == c) {
                x.sign = -x.sign;
            }
        }
        Ok(out)
    }

    /// Joins component `b` into component `a`: the passages of `b` are
    /// appended after those of `a`, as for a band sum along an arc that
    /// meets no other strand. Components after `b` shift down by one.
    pub fn join_components(&self, a: usize, b: usize) -> Result<Self, DiagramError> {
        self.check_index(a)?;
        self.check_index(b)?;
        if a == b {
            return Err(DiagramError::SameComponent(a));
        }
        let offset = self.components[a].len();
        let mut components = self.components.clone();
        let tail: Vec<usize> = components[b].iter().map(|s| s + offset).collect();
        components[a].extend(tail);
        components.remove(b);
        let fix = |c: usize| if c > b { c - 1 } else { c };
        let lift = |(c, s): Passage| {
            if c == b {
                (fix(a), s + offset)
            } else {
                (fix(c), s)
            }
        };
        let crossings = self
            .crossings
            .iter()
            .map(|x| Crossing { id: x.id, sign: x.sign, over: lift(x.over), under: lift(x.under) })
            .collect();
        Ok(Self { components, crossings })
    }

    /// Connected sum along component `c1` of `self` and `c2` of `other`.
    ///
    /// `sites` are positions in the two passage sequences (`0..=len`); the
    /// spliced component runs through `c1` starting at its site, then
    /// through `c2` starting at its site. It keeps index `c1`; the other
    /// components of `other` are appended. Crossing ids are renumbered
    /// `0..n` in order (first diagram, then second).
    pub fn connected_sum(
        &self,
        c1: usize,
        other: &CrossingList,
        c2: usize,
        sites: (usize, usize),
    ) -> Result<Self, DiagramError> {
        self.check_index(c1)?;
        other.check_index(c2)?;
        for (d, c, site) in [(self, c1, sites.0), (other, c2, sites.1)] {
            let len = d.components[c].len();
            if site > len {
                return Err(DiagramError::InvalidSpliceSite { site, len });
            }
            d.validate().map_err(|v| DiagramError::Invalid(v[0].to_string()))?;
        }
        let seq1 = &self.components[c1];
        let seq2 = &other.components[c2];
        let offset = seq1.len();

        let mut components = self.components.clone();
        let spliced: Vec<usize> =
            rotate(seq1, sites.0).into_iter().chain(rotate(seq2, sites.1).into_iter().map(|s| s + offset)).collect();
        components[c1] = spliced;
        // Component map for `other`.
        let mut remap = Vec::with_capacity(other.components.len());
        for (c, seq) in other.components.iter().enumerate() {
            if c == c2 {
                remap.push(c1);
            } else {
                remap.push(components.len());
                components.push(seq.clone());
            }
        }
        let mut crossings = Vec::with_capacity(self.crossings.len() + other.crossings.len());
        for x in &self.crossings {
            crossings.push(Crossing { id: crossings.len() as i64, ..x.clone() });
        }
        let lift = |(c, s): Passage| if c == c2 { (c1, s + offset) } else { (remap[c], s) };
        for x in &other.crossings {
            crossings.push(Crossing {
                id: crossings.len() as i64,
                sign: x.sign,
                over: lift(x.over),
                under: lift(x.under),
            });
        }
        Ok(Self { components, crossings })
    }
}

fn rotate(seq: &[usize], at: usize) -> Vec<usize> {
    let mut v = seq[at.min(seq.len())..].to_vec();
    v.extend_from_slice(&seq[..at.min(seq.len())]);
    v
}

/// A component and the ordering key of a passage along it.
type Strand = (usize, Vec<i64>);

/// Accumulates crossings between curves whose passages carry an ordering
/// key along their component, then lays each component out in key order.
#[derive(Default, Debug)]
pub struct DiagramBuilder {
    components: usize,
    crossings: Vec<(i8, Strand, Strand)>,
}

impl DiagramBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_component(&mut self) -> usize {
        self.components += 1;
        self.components - 1
    }

    /// Records a crossing; `over` and `under` are `(component, key)` where
    /// keys order passages along each component.
    pub fn cross(&mut self, sign: i8, over: (usize, Vec<i64>), under: (usize, Vec<i64>)) {
        debug_assert!(over.0 < self.components && under.0 < self.components);
        self.crossings.push((sign, over, under));
    }

    pub fn build(self) -> CrossingList {
        let mut keys: Vec<BTreeMap<(Vec<i64>, usize), ()>> = vec![BTreeMap::new(); self.components];
        for (i, (_, over, under)) in self.crossings.iter().enumerate() {
            keys[over.0].insert((over.1.clone(), 2 * i), ());
            keys[under.0].insert((under.1.clone(), 2 * i + 1), ());
        }
        let mut slot_of: HashMap<usize, usize> = HashMap::new();
        for comp in &keys {
            for (slot, ((_, tag), ())) in comp.iter().enumerate() {
                slot_of.insert(*tag, slot);
            }
        }
        let components = keys.iter().map(|k| (0..k.len()).collect()).collect();
        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .map(|(i, (sign, over, under))| Crossing {
                id: i as i64,
                sign: *sign,
                over: (over.0, slot_of[&(2 * i)]),
                under: (under.0, slot_of[&(2 * i + 1)]),
            })
            .collect();
        CrossingList { components, crossings }
    }
}

/// Standard diagrams used in tests and presets.
pub mod standard {
    use super::*;

    /// Positive Hopf link: two crossings of sign `+1`, one each way.
    pub fn hopf() -> CrossingList {
        CrossingList {
            components: vec![vec![0, 1], vec![0, 1]],
            crossings: vec![
                Crossing { id: 0, sign: 1, over: (0, 0), under: (1, 0) },
                Crossing { id: 1, sign: 1, over: (1, 1), under: (0, 1) },
            ],
        }
    }

    /// Closed 2-braid `σ^n` as a knot (`n` odd); `n > 0` gives positive crossings.
    pub fn torus_2(n: i64) -> CrossingList {
        assert!(n % 2 != 0, "closure of a 2-braid with an even number of crossings is a link");
        let m = n.unsigned_abs() as usize;
        let sign = n.signum() as i8;
        // The single component passes each crossing twice: first over then,
        // half a turn later, under (alternating diagram).
        let len = 2 * m;
        let crossings =
            (0..m).map(|k| Crossing { id: k as i64, sign, over: (0, 2 * k), under: (0, (2 * k + m) % len) }).collect();
        CrossingList { components: vec![(0..len).collect()], crossings }
    }

    pub fn trefoil() -> CrossingList {
        torus_2(3)
    }

    /// Unknot drawn with a single kink of the given sign.
    pub fn kink(sign: i8) -> CrossingList {
        CrossingList {
            components: vec![vec![0, 1]],
            crossings: vec![Crossing { id: 0, sign, over: (0, 0), under: (0, 1) }],
        }
    }

    /// Standard alternating figure-eight diagram: writhe 0.
    pub fn figure_eight() -> CrossingList {
        // Gauss code O1 U2 O3 U1 O2 U4 O4 U3 with signs (-, -, +, +).
        let signs = [-1i8, -1, 1, 1];
        let over = [0usize, 4, 2, 6];
        let under = [3usize, 1, 7, 5];
        CrossingList {
            components: vec![(0..8).collect()],
            crossings: (0..4)
                .map(|k| Crossing { id: k as i64, sign: signs[k], over: (0, over[k]), under: (0, under[k]) })
                .collect(),
        }
    }
}
