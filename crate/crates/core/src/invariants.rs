//! Classical concordance invariants computed from Seifert matrices and
//! Gordon–Litherland forms, and the satellite formulas for winding
//! number two.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{inertia_int, signature_exact, AlgebraError, Int, LaurentPoly, Matrix, SymMatrix};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantError {
    #[error("degenerate presentation: det(V - tV^T) vanishes identically")]
    Degenerate,
    #[error("not the Seifert matrix of a knot: {0}")]
    NotKnot(String),
    #[error("p must be odd, got {0}")]
    EvenP(i64),
    #[error("invalid unit-circle point: {0}")]
    BadOmega(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Multiplies by `±t^k` so that the result is symmetric with value `+1`
/// at `t = 1`.
pub fn normalize_alexander<T: Int>(p: &LaurentPoly<T>) -> Result<LaurentPoly<T>, InvariantError> {
    let (Some(lo), Some(hi)) = (p.min_exp(), p.max_exp()) else {
        return Err(InvariantError::Degenerate);
    };
    if (lo + hi) % 2 != 0 {
        return Err(InvariantError::NotKnot(format!("{p} has odd span")));
    }
    let q = p.shift(-(lo + hi) / 2);
    if !q.is_symmetric() {
        return Err(InvariantError::NotKnot(format!("{p} is not symmetric up to a unit")));
    }
    let at_one = q.evaluate_int(&T::one())?;
    if at_one.abs() != T::one() {
        return Err(InvariantError::NotKnot(format!("value {at_one} at t = 1")));
    }
    Ok(if at_one.is_negative() { -q } else { q })
}

/// `det(V - tV^T)`, normalized. The empty matrix gives `1`.
pub fn alexander<T: Int>(v: &Matrix<T>) -> Result<LaurentPoly<T>, InvariantError> {
    check_square(v)?;
    let t = LaurentPoly::<T>::t();
    let vt = v.transpose();
    let m = Matrix::from_fn(v.rows(), v.cols(), |i, j| {
        &LaurentPoly::constant(v.get(i, j).clone()) - &(&t * &LaurentPoly::constant(vt.get(i, j).clone()))
    });
    let d = m.det();
    if d.is_zero() {
        return Err(InvariantError::Degenerate);
    }
    normalize_alexander(&d)
}

fn check_square<T: Clone>(v: &Matrix<T>) -> Result<(), InvariantError> {
    if v.is_square() {
        Ok(())
    } else {
        Err(AlgebraError::Dimension(format!("Seifert matrix is {}x{}", v.rows(), v.cols())).into())
    }
}

/// Where a knot determinant is read from.
#[derive(Clone, Copy, Debug)]
pub enum DetSource<'a, T> {
    Seifert(&'a Matrix<T>),
    Gordon(&'a SymMatrix<T>),
}

/// `|Δ(-1)| = |det(V + V^T)|`, or `|det G|` for a Gordon–Litherland form.
pub fn determinant_knot<T: Int>(source: DetSource<'_, T>) -> Result<T, InvariantError> {
    match source {
        DetSource::Seifert(v) => {
            check_square(v)?;
            Ok(v.add(&v.transpose())?.det().abs())
        }
        DetSource::Gordon(g) => Ok(g.det().abs()),
    }
}

/// Arf invariant from a normalized Alexander polynomial: `0` iff
/// `Δ(-1) ≡ ±1 (mod 8)`.
pub fn arf_from_alexander<T: Int>(delta: &LaurentPoly<T>) -> Result<u8, InvariantError> {
    let d = delta.evaluate_int(&-T::one())?;
    arf_from_determinant(&d)
}

/// Arf invariant from `Δ(-1)` or any number of the same absolute value.
pub fn arf_from_determinant<T: Int>(d: &T) -> Result<u8, InvariantError> {
    let r = d.mod_floor(&T::from_int(8)).to_i64().expect("residue fits");
    match r {
        1 | 7 => Ok(0),
        3 | 5 => Ok(1),
        _ => Err(InvariantError::NotKnot(format!("determinant {d} is even"))),
    }
}

pub fn arf<T: Int>(v: &Matrix<T>) -> Result<u8, InvariantError> {
    arf_from_alexander(&alexander(v)?)
}

/// `signature(V + V^T)`.
pub fn signature<T: Int>(v: &Matrix<T>) -> Result<i64, InvariantError> {
    check_square(v)?;
    Ok(signature_exact(&SymMatrix::symmetrize(v)?))
}

/// A point of the unit circle with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitPoint<T: Int> {
    cos: Ratio<T>,
    sin: Ratio<T>,
}

impl<T: Int> UnitPoint<T> {
    pub fn new(cos: Ratio<T>, sin: Ratio<T>) -> Result<Self, InvariantError> {
        if cos.clone() * cos.clone() + sin.clone() * sin.clone() != Ratio::one() {
            return Err(InvariantError::BadOmega(format!("({cos}, {sin}) is not on the unit circle")));
        }
        Ok(Self { cos, sin })
    }

    pub fn minus_one() -> Self {
        Self { cos: -Ratio::one(), sin: Ratio::zero() }
    }

    pub fn one() -> Self {
        Self { cos: Ratio::one(), sin: Ratio::zero() }
    }

    /// `((1 - s²)/(1 + s²), 2s/(1 + s²))`, the point at angle `2·atan(s)`.
    pub fn from_s(s: Ratio<T>) -> Self {
        let one = Ratio::<T>::one();
        let d = one.clone() + s.clone() * s.clone();
        let two = Ratio::from_integer(T::from_int(2));
        Self { cos: (one - s.clone() * s.clone()) / d.clone(), sin: two * s / d }
    }

    /// The parameter `s = sin/(1 + cos)`; `None` for `-1`.
    pub fn s(&self) -> Option<Ratio<T>> {
        let d = Ratio::one() + self.cos.clone();
        if d.is_zero() {
            None
        } else {
            Some(self.sin.clone() / d)
        }
    }

    pub fn cos(&self) -> &Ratio<T> {
        &self.cos
    }

    pub fn sin(&self) -> &Ratio<T> {
        &self.sin
    }

    pub fn is_one(&self) -> bool {
        self.cos.is_one()
    }

    /// `ω²` by the double-angle identities.
    pub fn square(&self) -> Self {
        let two = Ratio::from_integer(T::from_int(2));
        Self {
            cos: self.cos.clone() * self.cos.clone() - self.sin.clone() * self.sin.clone(),
            sin: two * self.cos.clone() * self.sin.clone(),
        }
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        Self { cos: self.cos.clone(), sin: -self.sin.clone() }
    }
}

impl<T: Int> fmt::Display for UnitPoint<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.s() {
            None => write!(f, "omega=-1"),
            Some(s) => write!(f, "s={s}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PointRepr {
    S { s: String },
    Omega { omega: i64 },
}

impl<T: Int> Serialize for UnitPoint<T> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.s() {
            None => PointRepr::Omega { omega: -1 },
            Some(v) => PointRepr::S { s: format!("{}/{}", v.numer(), v.denom()) },
        }
        .serialize(s)
    }
}

impl<'de, T: Int> Deserialize<'de> for UnitPoint<T> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        match PointRepr::deserialize(d)? {
            PointRepr::Omega { omega: -1 } => Ok(Self::minus_one()),
            PointRepr::Omega { omega } => Err(D::Error::custom(format!("omega must be -1, got {omega}"))),
            PointRepr::S { s } => parse_ratio::<T>(&s).map(Self::from_s).map_err(D::Error::custom),
        }
    }
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_ratio<T: Int>(s: &str) -> Result<Ratio<T>, String> {
    let parse = |x: &str| {
        let v: i64 = x.trim().parse().map_err(|_| format!("bad rational {s:?}"))?;
        Ok::<T, String>(T::from_int(v))
    };
    match s.split_once('/') {
        None => Ok(Ratio::from_integer(parse(s)?)),
        Some((p, q)) => {
            let q = parse(q)?;
            if q.is_zero() {
                return Err(format!("zero denominator in {s:?}"));
            }
            Ok(Ratio::new(parse(p)?, q))
        }
    }
}

impl<T: Int> FromStr for UnitPoint<T> {
    type Err = String;

    /// `"-1"` for `ω = -1`, otherwise the parameter `s` as `"p/q"`.
    fn from_str(s: &str) -> Result<Self, String> {
        if s.trim() == "-1" {
            Ok(Self::minus_one())
        } else {
            parse_ratio(s).map(Self::from_s)
        }
    }
}

/// The fixed sample set: `ω = -1` and `s ∈ {1/2, 1/3, 2/3, 1/5, 3/5}`.
pub fn default_samples<T: Int>() -> Vec<UnitPoint<T>> {
    let mut out = vec![UnitPoint::minus_one()];
    for (p, q) in [(1, 2), (1, 3), (2, 3), (1, 5), (3, 5)] {
        out.push(UnitPoint::from_s(Ratio::new(T::from_int(p), T::from_int(q))));
    }
    out
}

/// A signature value, or the marker for a degenerate form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SigValue {
    Value(i64),
    Singular,
}

impl SigValue {
    pub fn value(self) -> Option<i64> {
        match self {
            SigValue::Value(v) => Some(v),
            SigValue::Singular => None,
        }
    }
}

impl fmt::Display for SigValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SigValue::Value(v) => write!(f, "{v}"),
            SigValue::Singular => write!(f, "singular"),
        }
    }
}

impl Serialize for SigValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            SigValue::Value(v) => s.serialize_i64(*v),
            SigValue::Singular => s.serialize_str("singular"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignatureSample<T: Int> {
    pub omega: UnitPoint<T>,
    pub value: SigValue,
}

/// Signature of `(1-ω)V + (1-ω̄)V^T` at any unit point. At `ω = 1` the form
/// vanishes, so the value is singular unless `V` is empty.
pub fn lt_value<T: Int>(v: &Matrix<T>, omega: &UnitPoint<T>) -> Result<SigValue, InvariantError> {
    check_square(v)?;
    let m = v.rows();
    if m == 0 {
        return Ok(SigValue::Value(0));
    }
    // H = (1-c)(V + V^T) + i sin (V^T - V). With s = sin/(1 + cos) = a/b this
    // is 2s/(1 + s²)/b times the integer form a(V + V^T) + i b(V^T - V),
    // realified as [[A, -B], [B, A]]. For s < 0 this is minus the complex
    // conjugate of the form at -s, which has the same signature.
    let (a, b, flip) = match omega.s() {
        None => (T::one(), T::zero(), false),
        Some(s) if s.is_zero() => return Ok(SigValue::Singular),
        Some(s) => (s.numer().abs(), s.denom().clone(), s.is_negative()),
    };
    let re = |i: usize, j: usize| a.clone() * (v.get(i, j).clone() + v.get(j, i).clone());
    let im = |i: usize, j: usize| b.clone() * (v.get(j, i).clone() - v.get(i, j).clone());
    let signed_im = |i: usize, j: usize| if flip { -im(i, j) } else { im(i, j) };
    let big = Matrix::from_fn(2 * m, 2 * m, |i, j| match (i < m, j < m) {
        (true, true) => re(i, j),
        (true, false) => -signed_im(i, j - m),
        (false, true) => signed_im(i - m, j),
        (false, false) => re(i - m, j - m),
    });
    let inert = inertia_int(&big);
    if inert.is_degenerate() {
        return Ok(SigValue::Singular);
    }
    Ok(SigValue::Value(inert.signature() / 2))
}

/// Levine–Tristram signature at `ω ≠ 1`.
pub fn levine_tristram<T: Int>(v: &Matrix<T>, omega: &UnitPoint<T>) -> Result<SignatureSample<T>, InvariantError> {
    if omega.is_one() {
        return Err(InvariantError::BadOmega("omega = 1".into()));
    }
    Ok(SignatureSample { omega: omega.clone(), value: lt_value(v, omega)? })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SampleStatus {
    Pass,
    Fail,
    SkippedSingular,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleComparison<T: Int> {
    pub omega: UnitPoint<T>,
    pub left: SigValue,
    pub right: SigValue,
    pub status: SampleStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonReport<T: Int> {
    pub samples: Vec<SampleComparison<T>>,
    pub pass: bool,
}

impl<T: Int> ComparisonReport<T> {
    fn from_pairs(pairs: Vec<(UnitPoint<T>, SigValue, SigValue)>) -> Self {
        let samples: Vec<_> = pairs
            .into_iter()
            .map(|(omega, left, right)| {
                let status = match (left, right) {
                    (SigValue::Value(a), SigValue::Value(b)) if a == b => SampleStatus::Pass,
                    (SigValue::Value(_), SigValue::Value(_)) => SampleStatus::Fail,
                    _ => SampleStatus::SkippedSingular,
                };
                SampleComparison { omega, left, right, status }
            })
            .collect();
        let pass = samples.iter().all(|s| s.status != SampleStatus::Fail);
        Self { samples, pass }
    }

    pub fn failures(&self) -> impl Iterator<Item = &SampleComparison<T>> {
        self.samples.iter().filter(|s| s.status == SampleStatus::Fail)
    }
}

/// Compares `σ_K(ω)` with `σ_J(ω²)` at each sample, skipping singular ones.
pub fn sigma_squared_compare<T: Int>(
    v_k: &Matrix<T>,
    v_j: &Matrix<T>,
    samples: &[UnitPoint<T>],
) -> Result<ComparisonReport<T>, InvariantError> {
    let mut pairs = Vec::new();
    for w in samples {
        if w.is_one() {
            return Err(InvariantError::BadOmega("omega = 1".into()));
        }
        pairs.push((w.clone(), lt_value(v_k, w)?, lt_value(v_j, &w.square())?));
    }
    Ok(ComparisonReport::from_pairs(pairs))
}

/// Compares `σ_K(ω)` with `σ_J(ω)` at each sample.
pub fn sigma_compare<T: Int>(
    v_k: &Matrix<T>,
    v_j: &Matrix<T>,
    samples: &[UnitPoint<T>],
) -> Result<ComparisonReport<T>, InvariantError> {
    let mut pairs = Vec::new();
    for w in samples {
        pairs.push((w.clone(), lt_value(v_k, w)?, lt_value(v_j, w)?));
    }
    Ok(ComparisonReport::from_pairs(pairs))
}

/// `Δ_R(t) · Δ_J(t²)`, normalized.
pub fn alexander_satellite<T: Int>(
    delta_r: &LaurentPoly<T>,
    delta_j: &LaurentPoly<T>,
) -> Result<LaurentPoly<T>, InvariantError> {
    normalize_alexander(&(delta_r * &delta_j.substitute(2)))
}

/// Alexander polynomial of the `(2, p)` torus knot.
pub fn alexander_torus_2<T: Int>(p: i64) -> Result<LaurentPoly<T>, InvariantError> {
    if p % 2 == 0 {
        return Err(InvariantError::EvenP(p));
    }
    let m = p.abs();
    let half = (m - 1) / 2;
    Ok(LaurentPoly::from_terms((0..m).map(|k| (k - half, T::from_int(if k % 2 == 0 { 1 } else { -1 })))))
}

/// `Δ_{T(2,p)}(t) · Δ_K(t²)`: the Alexander polynomial of the `(2, p)` cable.
pub fn alexander_cable2<T: Int>(delta_k: &LaurentPoly<T>, p: i64) -> Result<LaurentPoly<T>, InvariantError> {
    alexander_satellite(&alexander_torus_2(p)?, delta_k)
}

/// `ω ↦ σ_R(ω) + σ_J(ω²)`, singular where either term is.
pub fn sigma_satellite<'a, T: Int>(
    sigma_r: impl Fn(&UnitPoint<T>) -> SigValue + 'a,
    sigma_j: impl Fn(&UnitPoint<T>) -> SigValue + 'a,
) -> impl Fn(&UnitPoint<T>) -> SigValue + 'a {
    move |w| match (sigma_r(w), sigma_j(&w.square())) {
        (SigValue::Value(a), SigValue::Value(b)) => SigValue::Value(a + b),
        _ => SigValue::Singular,
    }
}

/// The signature function of a Seifert matrix, as a sample function.
pub fn sigma_function<T: Int>(v: &Matrix<T>) -> impl Fn(&UnitPoint<T>) -> SigValue + '_ {
    move |w| lt_value(v, w).unwrap_or(SigValue::Singular)
}

/// Seifert matrix of the standard surface of the closed 2-braid `σ^p`
/// (`p` odd): two disks joined by `|p|` twisted bands.
pub fn torus_2_seifert<T: Int>(p: i64) -> Result<Matrix<T>, InvariantError> {
    if p % 2 == 0 {
        return Err(InvariantError::EvenP(p));
    }
    let m = (p.unsigned_abs() - 1) as usize;
    let v = Matrix::from_fn(m, m, |i, j| {
        T::from_int(if i == j {
            -1
        } else if j == i + 1 {
            1
        } else {
            0
        })
    });
    Ok(if p < 0 { mirror_seifert(&v) } else { v })
}

/// Seifert matrix of the mirror image, `-V^T`.
pub fn mirror_seifert<T: Int>(v: &Matrix<T>) -> Matrix<T> {
    v.transpose().map(|x| -x.clone())
}

/// Seifert matrix of a satellite with winding number two: pattern `R`
/// (whose surface meets the axis twice, with the same sign) and companion
/// `J`. The two parallel copies of the companion's surface contribute
/// `[[V_J, V_J], [V_J^T, V_J]]`.
pub fn satellite_seifert<T: Int>(v_r: &Matrix<T>, v_j: &Matrix<T>) -> Result<Matrix<T>, InvariantError> {
    check_square(v_r)?;
    check_square(v_j)?;
    let m = v_j.rows();
    let doubled = Matrix::from_fn(2 * m, 2 * m, |i, j| {
        let (a, b) = (i % m, j % m);
        if i >= m && j < m {
            v_j.get(b, a).clone()
        } else {
            v_j.get(a, b).clone()
        }
    });
    Ok(v_r.block_diag(&doubled))
}

/// Seifert matrix of the `(2, p)` cable of a knot with Seifert matrix `v`.
pub fn cable_seifert<T: Int>(v: &Matrix<T>, p: i64) -> Result<Matrix<T>, InvariantError> {
    satellite_seifert(&torus_2_seifert(p)?, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    type P = LaurentPoly<i64>;

    fn m(rows: &[Vec<i64>]) -> Matrix<i64> {
        Matrix::from_i64_rows(rows).unwrap()
    }

    fn trefoil() -> Matrix<i64> {
        m(&[vec![-1, 1], vec![0, -1]])
    }

    fn fig8() -> Matrix<i64> {
        m(&[vec![-1, 1], vec![0, 1]])
    }

    fn s(p: i64, q: i64) -> UnitPoint<i64> {
        UnitPoint::from_s(Ratio::new(p, q))
    }

    #[test]
    fn alexander_examples() {
        assert_eq!(alexander(&trefoil()).unwrap().to_string(), "t^-1 - 1 + t");
        assert_eq!(alexander(&fig8()).unwrap().to_string(), "-t^-1 + 3 - t");
        assert_eq!(alexander(&m(&[])).unwrap(), P::one());
        assert_eq!(alexander(&m(&[vec![0, 0], vec![0, 0]])), Err(InvariantError::Degenerate));
        assert!(matches!(alexander(&m(&[vec![1]])), Err(InvariantError::NotKnot(_))));
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant_knot(DetSource::Seifert(&trefoil())), Ok(3));
        let g = SymMatrix::new(m(&[vec![3]])).unwrap();
        assert_eq!(determinant_knot(DetSource::Gordon(&g)), Ok(3));
        assert_eq!(determinant_knot(DetSource::Seifert(&m(&[]))), Ok(1));
    }

    #[test]
    fn arf_values() {
        assert_eq!(arf(&m(&[])), Ok(0));
        assert_eq!(arf(&trefoil()), Ok(1));
        assert_eq!(arf(&fig8()), Ok(1));
        assert_eq!(arf_from_determinant(&-7i64), Ok(0));
    }

    #[test]
    fn signatures() {
        assert_eq!(signature(&trefoil()), Ok(-2));
        assert_eq!(signature(&fig8()), Ok(0));
        assert_eq!(signature(&m(&[])), Ok(0));
    }

    #[test]
    fn unit_points() {
        let w = s(1, 2);
        assert_eq!(*w.cos(), Ratio::new(3, 5));
        assert_eq!(*w.sin(), Ratio::new(4, 5));
        assert_eq!(w.s(), Some(Ratio::new(1, 2)));
        assert_eq!(s(1, 1).square(), UnitPoint::minus_one());
        assert!(UnitPoint::<i64>::minus_one().square().is_one());
        assert!(UnitPoint::new(Ratio::new(1, 2), Ratio::new(1, 2)).is_err());
        assert_eq!("-1".parse::<UnitPoint<i64>>(), Ok(UnitPoint::minus_one()));
        assert_eq!("1/2".parse::<UnitPoint<i64>>(), Ok(w.clone()));
        assert_eq!(serde_json::to_string(&w).unwrap(), r#"{"s":"1/2"}"#);
        assert_eq!(serde_json::to_string(&UnitPoint::<i64>::minus_one()).unwrap(), r#"{"omega":-1}"#);
        let back: UnitPoint<i64> = serde_json::from_str(r#"{"s":"3/5"}"#).unwrap();
        assert_eq!(back, s(3, 5));
    }

    #[test]
    fn lt_examples() {
        let minus = UnitPoint::minus_one();
        assert_eq!(levine_tristram(&trefoil(), &minus).unwrap().value, SigValue::Value(-2));
        assert_eq!(levine_tristram(&m(&[]), &s(1, 2)).unwrap().value, SigValue::Value(0));
        assert!(levine_tristram(&trefoil(), &UnitPoint::one()).is_err());
        // The root of t - 1 + 1/t sits at angle pi/3, where s = tan(pi/6) ≈ 0.577.
        assert_eq!(lt_value(&trefoil(), &s(57, 100)), Ok(SigValue::Value(0)));
        assert_eq!(lt_value(&trefoil(), &s(58, 100)), Ok(SigValue::Value(-2)));
        assert_eq!(lt_value(&trefoil(), &UnitPoint::one()), Ok(SigValue::Singular));
        assert_eq!(lt_value(&trefoil(), &s(-58, 100)), Ok(SigValue::Value(-2)));
        assert_eq!(lt_value(&fig8(), &s(-1, 2)), lt_value(&fig8(), &s(1, 2)));
    }

    #[test]
    fn compare_examples() {
        let samples = default_samples();
        let r = sigma_squared_compare(&trefoil(), &m(&[]), &samples).unwrap();
        assert!(!r.pass);
        assert_eq!(r.failures().next().unwrap().omega, UnitPoint::minus_one());
        assert!(sigma_squared_compare(&m(&[]), &m(&[]), &samples).unwrap().pass);
    }

    #[test]
    fn satellite_examples() {
        let tre = alexander(&trefoil()).unwrap();
        assert_eq!(alexander_satellite(&P::one(), &tre).unwrap().to_string(), "t^-2 - 1 + t^2");
        assert_eq!(alexander_satellite(&tre, &P::one()).unwrap(), tre);
        assert_eq!(alexander_cable2(&tre, 1).unwrap(), tre.substitute(2));
        assert_eq!(alexander_cable2(&P::one(), 3).unwrap(), tre);
        assert!(alexander_cable2(&P::one(), 2).is_err());
        assert_eq!(alexander_torus_2::<i64>(-5).unwrap().to_string(), "t^-2 - t^-1 + 1 - t + t^2");
    }

    #[test]
    fn sigma_satellite_examples() {
        let zero = |_: &UnitPoint<i64>| SigValue::Value(0);
        let t = trefoil();
        let f = sigma_satellite(zero, sigma_function(&t));
        assert_eq!(f(&s(1, 2)), lt_value(&t, &s(1, 2).square()).unwrap());
        assert_eq!(f(&UnitPoint::minus_one()), SigValue::Singular);
        let g = sigma_satellite(sigma_function(&t), zero);
        assert_eq!(g(&s(1, 3)), lt_value(&t, &s(1, 3)).unwrap());
    }

    #[test]
    fn torus_seifert_matches_formula() {
        for p in [-5i64, -3, -1, 1, 3, 5, 7] {
            let v = torus_2_seifert::<i64>(p).unwrap();
            assert_eq!(alexander(&v).unwrap(), alexander_torus_2(p).unwrap());
        }
        assert_eq!(signature(&torus_2_seifert::<i64>(5).unwrap()), Ok(-4));
        assert_eq!(signature(&torus_2_seifert::<i64>(-3).unwrap()), Ok(2));
    }
}
