//! Forms of a band surface and the standard constructions on surfaces.

use num_bigint::BigInt;

use super::compile::{compile, framing, Compiled, Curve};
use super::{BandEnd, BandError, BandSurface, Foot, RouteEvent, SurfaceShape};
use crate::algebra::{Matrix, SymMatrix};
use crate::diagram::CrossingList;

impl BandSurface {
    /// `lk(K, λ)`: the framing the surface induces on its boundary.
    pub fn framing(&self) -> Result<i64, BandError> {
        framing(self)
    }

    /// Gordon–Litherland form on the band cores: `G_ij = lk(c_i, τ c_j)`,
    /// where `τ c_j` is the boundary of a thin neighbourhood of `c_j`.
    pub fn gl_form(&self) -> Result<SymMatrix<BigInt>, BandError> {
        let n = self.num_bands();
        let odd: Vec<bool> = self.bands.iter().map(|b| b.half_twists.rem_euclid(2) == 1).collect();
        let mut curves = Vec::new();
        for (i, &o) in odd.iter().enumerate() {
            curves.push(Curve::Core(i));
            if o {
                curves.push(Curve::Tau(i));
            } else {
                curves.push(Curve::CorePlus(i));
                curves.push(Curve::CoreMinus(i));
            }
        }
        let c = compile(self, &curves)?;
        let mut rows = vec![vec![BigInt::from(0); n]; n];
        for i in 0..n {
            for j in 0..n {
                let v = if odd[j] {
                    c.linking(Curve::Core(i), Curve::Tau(j))?
                } else {
                    c.linking(Curve::Core(i), Curve::CorePlus(j))? + c.linking(Curve::Core(i), Curve::CoreMinus(j))?
                };
                rows[i][j] = BigInt::from(v);
            }
        }
        let m = Matrix::from_rows_with_cols(rows, n).expect("square by construction");
        SymMatrix::new(m).map_err(|_| BandError::Invalid("crossing data gives an asymmetric form".into()))
    }

    /// Seifert matrix `V_ij = lk(c_i⁺, c_j)` of an orientable surface.
    pub fn seifert_matrix(&self) -> Result<Matrix<BigInt>, BandError> {
        self.check()?;
        if !self.is_orientable() {
            return Err(BandError::NotOrientable);
        }
        let n = self.num_bands();
        let curves: Vec<Curve> = (0..n).flat_map(|i| [Curve::Core(i), Curve::CorePlus(i)]).collect();
        let c = compile(self, &curves)?;
        let mut rows = vec![vec![BigInt::from(0); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = BigInt::from(c.linking(Curve::CorePlus(i), Curve::Core(j))?);
            }
        }
        Ok(Matrix::from_rows_with_cols(rows, n).expect("square by construction"))
    }

    /// The disk intersection matrix: `+1` at `(i, j)` when the feet of `i`
    /// and `j` interleave with an A-to-B pair of directions of positive
    /// product and `i` first around the disk, antisymmetric.
    pub fn intersection_matrix(&self) -> Matrix<BigInt> {
        let n = self.num_bands();
        let pos = self.foot_positions();
        let dir = |b: usize| if pos[b].0 < pos[b].1 { 1 } else { -1 };
        Matrix::from_fn(n, n, |i, j| {
            if i == j || !super::interleaved_at(pos[i], pos[j]) {
                return BigInt::from(0);
            }
            let i_first = pos[i].0.min(pos[i].1) < pos[j].0.min(pos[j].1);
            BigInt::from(dir(i) * dir(j) * if i_first { 1 } else { -1 })
        })
    }
}

/// For a surface in Klein-bottle normal form, the `(even band, odd band)`
/// of each two-band piece, in attach order.
///
/// Normal form means the attach sequence splits into consecutive blocks of
/// four feet, each holding both ends of two bands of which exactly one is
/// odd, and no route event joins bands of different blocks.
pub fn normal_form_pieces(f: &BandSurface) -> Result<Vec<(usize, usize)>, BandError> {
    f.check_structure()?;
    let fail = |m: String| Err(BandError::NotNormalForm(m));
    let n = f.num_bands();
    if n % 2 != 0 {
        return fail(format!("{n} bands cannot pair into two-band pieces"));
    }
    let mut piece_of = vec![0usize; n];
    let mut pieces = Vec::new();
    for (k, block) in f.attach.chunks(4).enumerate() {
        let mut bands: Vec<usize> = block.iter().map(|ft| ft.band).collect();
        bands.sort_unstable();
        bands.dedup();
        if bands.len() != 2 {
            return fail(format!("attach block {k} does not hold both ends of exactly two bands"));
        }
        let odd: Vec<usize> = bands.iter().copied().filter(|&b| f.bands[b].half_twists.rem_euclid(2) == 1).collect();
        if odd.len() != 1 {
            return fail(format!("piece {k} has {} odd bands, expected exactly one", odd.len()));
        }
        let even = if bands[0] == odd[0] { bands[1] } else { bands[0] };
        piece_of[even] = k;
        piece_of[odd[0]] = k;
        pieces.push((even, odd[0]));
    }
    for (i, e) in f.route.iter().enumerate() {
        if piece_of[e.over.0] != piece_of[e.under.0] {
            return fail(format!("route event {i} joins bands of different pieces"));
        }
    }
    Ok(pieces)
}

/// The curve `γ` of a normal-form surface, compiled with its pushoff.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaCurve {
    /// Components `0` and `1` are `γ` and `γ⁺`.
    pub compiled: Compiled,
    pub self_linking: i64,
}

pub fn gamma_curve(f: &BandSurface) -> Result<GammaCurve, BandError> {
    normal_form_pieces(f)?;
    let compiled = compile(f, &[Curve::Gamma, Curve::GammaPlus])?;
    let self_linking = compiled.linking(Curve::Gamma, Curve::GammaPlus)?;
    Ok(GammaCurve { compiled, self_linking })
}

pub fn boundary_connect_sum(f1: &BandSurface, f2: &BandSurface) -> BandSurface {
    let k = f1.num_bands();
    let mut out = f1.clone();
    out.bands.extend(f2.bands.iter().copied());
    out.attach.extend(f2.attach.iter().map(|ft| Foot::new(ft.band + k, ft.end)));
    out.route.extend(f2.route.iter().map(|e| RouteEvent {
        over: (e.over.0 + k, e.over.1),
        under: (e.under.0 + k, e.under.1),
        sign: e.sign,
    }));
    out
}

/// Adds `|framing| / 2` Möbius bands of framing `∓2` to bring the
/// framing to zero.
pub fn zero_framing_stabilize(f: &BandSurface) -> Result<BandSurface, BandError> {
    let fr = f.framing()?;
    let unit = BandSurface::new(&[-fr.signum()], &[(0, BandEnd::A), (0, BandEnd::B)]);
    let mut out = f.clone();
    for _ in 0..fr.abs() / 2 {
        out = boundary_connect_sum(&out, &unit);
    }
    Ok(out)
}

/// Shape after surgery along a non-separating two-sided curve.
pub fn surgery_shape(s: SurfaceShape, result_orientable: bool) -> Result<SurfaceShape, BandError> {
    let bad = |m: &str| Err(BandError::InvalidSurgery(m.to_string()));
    let euler = s.euler + 2;
    let genus = if s.orientable {
        if !result_orientable {
            return bad("surgery on an orientable surface stays orientable");
        }
        if s.genus == 0 {
            return bad("a genus 0 surface has no non-separating curve");
        }
        s.genus - 1
    } else if s.genus < 2 {
        return bad("a non-orientable surface of genus 1 has no non-separating two-sided curve");
    } else if result_orientable {
        if s.genus % 2 != 0 {
            return bad("an orientable result needs even non-orientable genus");
        }
        (s.genus - 2) / 2
    } else {
        if s.genus == 2 {
            return bad("surgery on a genus 2 non-orientable surface leaves an orientable surface");
        }
        s.genus - 2
    };
    Ok(SurfaceShape { orientable: result_orientable, genus, euler, boundary_components: s.boundary_components })
}

/// A Möbius band whose core follows the one-component diagram `core`
/// (blackboard framed) and whose boundary is the `(2, p)` cable of it.
pub fn mobius_band(core: &CrossingList, p: i64) -> Result<BandSurface, BandError> {
    if p % 2 == 0 {
        return Err(BandError::EvenP(p));
    }
    core.validate().map_err(|v| BandError::Invalid(format!("core diagram: {}", v[0])))?;
    if core.num_components() != 1 {
        return Err(BandError::Invalid(format!("core diagram has {} components, expected 1", core.num_components())));
    }
    let w = core.writhe(0)?;
    let seq = &core.components[0];
    let mut at = vec![0usize; seq.len()];
    for (i, &s) in seq.iter().enumerate() {
        at[s] = i;
    }
    let route = core
        .crossings
        .iter()
        .map(|x| RouteEvent { over: (0, at[x.over.1]), under: (0, at[x.under.1]), sign: x.sign })
        .collect();
    Ok(BandSurface::new(&[p - 2 * w], &[(0, BandEnd::A), (0, BandEnd::B)]).with_route(route))
}

/// Zero-framed punctured Klein bottle bounded by `K_(2,p) # (-J)_(2,-p)`.
pub fn klein_bottle_for_cables(core_k: &CrossingList, core_j: &CrossingList, p: i64) -> Result<BandSurface, BandError> {
    let a = mobius_band(core_k, p)?;
    let b = mobius_band(&core_j.mirror(), -p)?;
    Ok(boundary_connect_sum(&a, &b))
}
