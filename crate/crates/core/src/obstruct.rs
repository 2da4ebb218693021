//! Consistency checks and slice obstructions for knots bounding non-orientable
//! surfaces, and a seeded randomized battery over the whole library.
//!
//! A `pass` never claims sliceness or concordance. Only a `fail` carries
//! information: the hypotheses behind the test cannot all hold.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{fp_abelian_invariants, signature_exact, Matrix};
use crate::bandform::random::{random_normal_form, random_surface, Limits};
use crate::bandform::{
    boundary_connect_sum, gamma_curve, klein_bottle_for_cables, mobius_band, normal_form_pieces, surgery_shape,
    zero_framing_stabilize, BandError, BandSurface,
};
use crate::diagram::CrossingList;
use crate::invariants::{
    alexander, alexander_cable2, alexander_satellite, arf, arf_from_determinant, cable_seifert, default_samples,
    determinant_knot, lt_value, mirror_seifert, satellite_seifert, sigma_compare, sigma_function, sigma_satellite,
    sigma_squared_compare, signature, torus_2_seifert, ComparisonReport, DetSource, InvariantError, SampleStatus,
    SigValue, UnitPoint,
};
use crate::{presets, IntMatrix, IntSymMatrix, Integer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ObstructError {
    #[error(transparent)]
    Band(#[from] BandError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error("expected a non-orientable surface")]
    Orientable,
    #[error("surface has framing {0}, expected 0")]
    NonzeroFraming(i64),
    #[error("expected a punctured Klein bottle, got non-orientable genus {0}")]
    NotKlein(u64),
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("trials must be at least 1")]
    NoTrials,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    SkippedSingular,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedSingular => "skipped-singular",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TestResult {
    pub name: String,
    pub status: Status,
    pub details: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Consistent,
    Obstructed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub tests: Vec<TestResult>,
    pub verdict: Verdict,
}

impl ObstructionReport {
    pub fn new(tests: Vec<TestResult>) -> Self {
        let verdict =
            if tests.iter().any(|t| t.status == Status::Fail) { Verdict::Obstructed } else { Verdict::Consistent };
        Self { tests, verdict }
    }

    pub fn is_obstructed(&self) -> bool {
        self.verdict == Verdict::Obstructed
    }

    pub fn test(&self, name: &str) -> Option<&TestResult> {
        self.tests.iter().find(|t| t.name == name)
    }
}

impl fmt::Display for ObstructionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.tests {
            writeln!(f, "  {:<20} {:<17} {}", t.name, t.status.to_string(), t.details)?;
        }
        write!(f, "verdict: {}", if self.is_obstructed() { "obstructed" } else { "consistent" })
    }
}

fn result(name: &str, ok: bool, details: String) -> TestResult {
    TestResult { name: name.into(), status: if ok { Status::Pass } else { Status::Fail }, details }
}

fn from_comparison(name: &str, r: &ComparisonReport<Integer>, what: &str) -> TestResult {
    let defined = r.samples.iter().filter(|s| s.status != SampleStatus::SkippedSingular).count();
    let skipped = r.samples.len() - defined;
    if defined == 0 {
        return TestResult {
            name: name.into(),
            status: Status::SkippedSingular,
            details: format!("all {} samples singular", r.samples.len()),
        };
    }
    let bad: Vec<String> = r.failures().map(|s| format!("{}: {} vs {}", s.omega, s.left, s.right)).collect();
    let details = if bad.is_empty() {
        format!("{what} agree at {defined} samples ({skipped} singular skipped)")
    } else {
        format!("{what} differ at {}", bad.join("; "))
    };
    result(name, bad.is_empty(), details)
}

fn is_pm1_mod8(d: &BigInt) -> bool {
    let r = d.mod_floor(&BigInt::from(8));
    r == BigInt::one() || r == BigInt::from(7)
}

/// Framing against genus parity for a non-orientable surface. With the
/// Seifert matrix of the same boundary knot, also checks
/// `σ(K) = sign(G_F) - framing / 2`.
pub fn genus_framing_check(f: &BandSurface, seifert: Option<&IntMatrix>) -> Result<ObstructionReport, ObstructError> {
    let shape = f.shape()?;
    if shape.orientable {
        return Err(ObstructError::Orientable);
    }
    let fr = f.framing()?;
    let expected = 2 * (shape.genus % 2) as i64;
    let mut tests = vec![result(
        "genus-framing",
        fr.rem_euclid(4) == expected,
        format!("framing {fr}, genus {}: framing mod 4 = {}, expected {expected}", shape.genus, fr.rem_euclid(4)),
    )];
    if let Some(v) = seifert {
        let sigma = signature(v)?;
        let sg = signature_exact(&f.gl_form()?);
        tests.push(result(
            "signature-bridge",
            sigma == sg - fr / 2,
            format!("sigma(V) = {sigma}, sign(G) - framing/2 = {sg} - {} = {}", fr / 2, sg - fr / 2),
        ));
    }
    Ok(ObstructionReport::new(tests))
}

/// Necessary conditions for the boundary `K` of a zero-framed punctured Klein
/// bottle whose orientation-preserving band core has Seifert matrix `v_j`:
/// Arf(K) = 0 through `det G_F`, `σ_K(ω) = σ_J(ω²)` when a Seifert matrix of
/// `K` is supplied, and `σ(K) = 0`.
pub fn slice_obstruction_report(
    f: &BandSurface,
    v_j: &IntMatrix,
    v_boundary: Option<&IntMatrix>,
    samples: &[UnitPoint<Integer>],
) -> Result<ObstructionReport, ObstructError> {
    let shape = f.shape()?;
    if shape.orientable {
        return Err(ObstructError::Orientable);
    }
    if shape.genus != 2 {
        return Err(ObstructError::NotKlein(shape.genus));
    }
    let fr = f.framing()?;
    if fr != 0 {
        return Err(ObstructError::NonzeroFraming(fr));
    }
    let g = f.gl_form()?;
    let gamma_lk = match normal_form_pieces(f) {
        Ok(_) => Some(gamma_curve(f)?.self_linking),
        Err(_) => None,
    };
    slice_report_from_form(&g, gamma_lk, v_j, v_boundary, samples)
}

/// The slice report computed from the Gordon–Litherland form of a zero-framed
/// punctured Klein bottle, without access to the surface itself.
/// `gamma_self_linking` is `lk(gamma, gamma+)` when the surface is in normal form.
pub fn slice_report_from_form(
    g: &IntSymMatrix,
    gamma_self_linking: Option<i64>,
    v_j: &IntMatrix,
    v_boundary: Option<&IntMatrix>,
    samples: &[UnitPoint<Integer>],
) -> Result<ObstructionReport, ObstructError> {
    if g.dim() != 2 {
        return Err(ObstructError::NotKlein(g.dim() as u64));
    }
    alexander(v_j)?;
    let det = g.det();
    let sg = signature_exact(g);
    if let Some(v) = v_boundary {
        let dv = determinant_knot(DetSource::Seifert(v))?;
        if dv != det.abs() {
            return Err(ObstructError::Inconsistent(format!(
                "|det G_F| = {} but the supplied Seifert matrix has determinant {dv}",
                det.abs()
            )));
        }
        let sv = signature(v)?;
        if sv != sg {
            return Err(ObstructError::Inconsistent(format!(
                "sign(G_F) = {sg} but the supplied Seifert matrix has signature {sv}"
            )));
        }
    }

    let mut tests = Vec::new();
    tests.push(result("arf", is_pm1_mod8(&det), format!("det G_F = {det}, {} mod 8", det.mod_floor(&BigInt::from(8)))));
    if let Some(v) = v_boundary {
        let cmp = sigma_squared_compare(v, v_j, samples)?;
        tests.push(from_comparison("sigma-squared", &cmp, "sigma_K(w) and sigma_J(w^2)"));
    }
    tests.push(result("signature", sg == 0, format!("sigma(K) = sign(G_F) = {sg}")));
    if let Some(lk) = gamma_self_linking {
        tests.push(result("gamma-self-linking", lk == 0, format!("lk(gamma, gamma+) = {lk}")));
    }
    Ok(ObstructionReport::new(tests))
}

/// Screens whether the `(2, p)` cables of `K` and `J` can be concordant.
/// Such a concordance makes `K # -J` rationally slice, so the signature
/// functions must agree away from Alexander roots.
pub fn cable_concordance_check(
    v_k: &IntMatrix,
    v_j: &IntMatrix,
    p: i64,
    samples: &[UnitPoint<Integer>],
) -> Result<ObstructionReport, ObstructError> {
    if p % 2 == 0 {
        return Err(InvariantError::EvenP(p).into());
    }
    let dk = alexander_cable2(&alexander(v_k)?, p)?;
    let dj = alexander_cable2(&alexander(v_j)?, p)?;
    let det_k = dk.evaluate_int(&-BigInt::one()).map_err(InvariantError::from)?.abs();
    let det_j = dj.evaluate_int(&-BigInt::one()).map_err(InvariantError::from)?.abs();
    let cmp = sigma_compare(v_k, v_j, samples)?;
    let tests = vec![
        from_comparison("signature-function", &cmp, "sigma_K and sigma_J"),
        result("cable-determinant", det_k == det_j, format!("|det K_(2,{p})| = {det_k}, |det J_(2,{p})| = {det_j}")),
    ];
    Ok(ObstructionReport::new(tests))
}

/// A random knot given both as a diagram and by a Seifert matrix: a
/// connected sum of up to three presets of either chirality, with kinks.
pub fn random_core<R: Rng>(rng: &mut R) -> (CrossingList, IntMatrix) {
    let mut diagram = CrossingList::unlink(1);
    let mut v = IntMatrix::from_rows(Vec::new()).expect("empty matrix");
    let table = presets::all();
    for _ in 0..rng.gen_range(0..=3) {
        let p = table[rng.gen_range(1..table.len())];
        let (mut d, mut m) = (p.diagram(), p.seifert::<Integer>());
        if rng.gen_bool(0.5) {
            d = d.mirror();
            m = mirror_seifert(&m);
        }
        if rng.gen_bool(0.3) {
            let kink = crate::diagram::standard::kink(if rng.gen_bool(0.5) { 1 } else { -1 });
            d = d.connected_sum(0, &kink, 0, (0, 0)).expect("valid diagrams");
        }
        let site = rng.gen_range(0..=diagram.components[0].len());
        diagram = diagram.connected_sum(0, &d, 0, (site, 0)).expect("valid diagrams");
        v = v.block_diag(&m);
    }
    (diagram, v)
}

/// Outcome of one property in the battery.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertySummary {
    pub name: String,
    pub checked: usize,
    pub passed: usize,
    /// The first few failures, for diagnosis.
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifySummary {
    pub seed: u64,
    pub trials: usize,
    pub properties: Vec<PropertySummary>,
    pub all_passed: bool,
}

impl fmt::Display for VerifySummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {}, {} trials per property", self.seed, self.trials)?;
        for p in &self.properties {
            writeln!(f, "  {:<28} {}/{}", p.name, p.passed, p.checked)?;
            for msg in &p.failures {
                writeln!(f, "    {msg}")?;
            }
        }
        write!(f, "{}", if self.all_passed { "all properties hold" } else { "FAILURES" })
    }
}

type Check = fn(&mut ChaCha8Rng) -> Result<(), String>;

const MAX_REPORTED: usize = 5;

/// Runs every property `trials` times from `seed`. Each property has its own
/// generator derived from the seed, so the summary is reproducible.
pub fn verify_paper(seed: u64, trials: usize) -> Result<VerifySummary, ObstructError> {
    if trials == 0 {
        return Err(ObstructError::NoTrials);
    }
    let checks: [(&str, Check); 10] = [
        ("genus-framing", check_genus_framing),
        ("orientable-framing", check_orientable_framing),
        ("gamma-law", check_gamma_law),
        ("zero-framing-stabilize", check_stabilize),
        ("surgery-on-gamma", check_surgery),
        ("cable-mobius-bridge", check_cable_bridge),
        ("klein-slice-conditions", check_klein),
        ("satellite-formulas", check_satellite),
        ("seifert-gordon-litherland", check_seifert_gl),
        ("homology-of-b", check_homology),
    ];
    let mut properties = Vec::new();
    for (k, (name, check)) in checks.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((k as u64 + 1) << 56));
        let mut summary = PropertySummary { name: name.to_string(), checked: 0, passed: 0, failures: Vec::new() };
        for trial in 0..trials {
            summary.checked += 1;
            match check(&mut rng) {
                Ok(()) => summary.passed += 1,
                Err(e) if summary.failures.len() < MAX_REPORTED => summary.failures.push(format!("trial {trial}: {e}")),
                Err(_) => {}
            }
        }
        properties.push(summary);
    }
    let all_passed = properties.iter().all(|p| p.passed == p.checked);
    Ok(VerifySummary { seed, trials, properties, all_passed })
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

fn odd_p<R: Rng>(rng: &mut R) -> i64 {
    [-5, -3, -1, 1, 3, 5][rng.gen_range(0..6)]
}

fn check_genus_framing(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let f = random_surface(rng, false, Limits::default());
    let report = genus_framing_check(&f, None).map_err(err)?;
    ensure(!report.is_obstructed(), || {
        format!("{}: {}", crate::bandform::random::describe(&f), report.tests[0].details)
    })
}

fn check_orientable_framing(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let f = random_surface(rng, true, Limits::default());
    let fr = f.framing().map_err(err)?;
    ensure(fr == 0, || format!("{}: framing {fr}", crate::bandform::random::describe(&f)))
}

fn check_gamma_law(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let pieces = rng.gen_range(1..=3);
    let f = random_normal_form(rng, pieces, Limits::default());
    let fr = f.framing().map_err(err)?;
    let lk = gamma_curve(&f).map_err(err)?.self_linking;
    ensure(fr == 4 * lk, || format!("{}: framing {fr}, lk(gamma, gamma+) {lk}", crate::bandform::random::describe(&f)))
}

fn check_stabilize(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let orientable = rng.gen_bool(0.3);
    let mut f = random_surface(rng, orientable, Limits::default());
    if orientable {
        // Add the +2 and -2 Möbius bands to a Seifert surface.
        let plus = BandSurface::new(&[1], &[(0, crate::bandform::BandEnd::A), (0, crate::bandform::BandEnd::B)]);
        let minus = BandSurface::new(&[-1], &[(0, crate::bandform::BandEnd::A), (0, crate::bandform::BandEnd::B)]);
        f = boundary_connect_sum(&boundary_connect_sum(&f, &plus), &minus);
    }
    let before = f.framing().map_err(err)?;
    let g = zero_framing_stabilize(&f).map_err(err)?;
    let after = g.framing().map_err(err)?;
    let shape = g.shape().map_err(err)?;
    let extra = (g.num_bands() - f.num_bands()) as i64;
    ensure(after == 0 && extra == before.abs() / 2 && !shape.orientable, || {
        format!("framing {before} -> {after} after adding {extra} bands")
    })
}

fn check_surgery(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (core_k, _) = random_core(rng);
    let (core_j, _) = random_core(rng);
    let f = klein_bottle_for_cables(&core_k, &core_j, odd_p(rng)).map_err(err)?;
    let shape = f.shape().map_err(err)?;
    let after = surgery_shape(shape, true).map_err(err)?;
    ensure(after.genus == 0 && after.euler == 1 && after.orientable, || format!("surgery gives {after}"))
}

fn check_cable_bridge(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (core, v) = random_core(rng);
    let p = odd_p(rng);
    let f = mobius_band(&core, p).map_err(err)?;
    let fr = f.framing().map_err(err)?;
    ensure(fr == 2 * p, || format!("Möbius band for p = {p} has framing {fr}"))?;
    let vc = cable_seifert(&v, p).map_err(err)?;
    let report = genus_framing_check(&f, Some(&vc)).map_err(err)?;
    ensure(!report.is_obstructed(), || format!("p = {p}: {report}"))?;
    let dg = determinant_knot(DetSource::Gordon(&f.gl_form().map_err(err)?)).map_err(err)?;
    let dc =
        alexander_cable2(&alexander(&v).map_err(err)?, p).map_err(err)?.evaluate_int(&-BigInt::one()).map_err(err)?;
    ensure(dg == dc.abs() && dg == BigInt::from(p.abs()), || format!("p = {p}: |det G| = {dg}, cable formula {dc}"))
}

fn check_klein(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (core_k, v_k) = random_core(rng);
    let (core_j, v_j) = random_core(rng);
    let p = odd_p(rng);
    let f = klein_bottle_for_cables(&core_k, &core_j, p).map_err(err)?;
    let v_gamma = v_k.block_diag(&mirror_seifert(&v_j));
    let v_boundary =
        cable_seifert(&v_k, p).map_err(err)?.block_diag(&cable_seifert(&mirror_seifert(&v_j), -p).map_err(err)?);
    let report = slice_obstruction_report(&f, &v_gamma, Some(&v_boundary), &default_samples()).map_err(err)?;
    ensure(!report.is_obstructed(), || format!("p = {p}: {report}"))?;
    let det = f.gl_form().map_err(err)?.det().abs();
    ensure(det == BigInt::from(p * p), || format!("p = {p}: |det G| = {det}, expected {}", p * p))
}

fn check_satellite(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let (_, v_r) = random_core(rng);
    let (_, v_j) = random_core(rng);
    let dj = alexander(&v_j).map_err(err)?;
    // Pattern with winding number two: a (2, p) torus knot summed with R.
    let p = odd_p(rng);
    let pattern = torus_2_seifert::<Integer>(p).map_err(err)?.block_diag(&v_r);
    let d_pattern = alexander(&pattern).map_err(err)?;
    let sat = satellite_seifert(&pattern, &v_j).map_err(err)?;
    let direct = alexander(&sat).map_err(err)?;
    let formula = alexander_satellite(&d_pattern, &dj).map_err(err)?;
    ensure(direct == formula, || format!("Alexander: matrix gives {direct}, formula {formula}"))?;
    ensure(arf(&sat).map_err(err)? == arf(&pattern).map_err(err)?, || "Arf not preserved".into())?;
    let combined = sigma_satellite(sigma_function(&pattern), sigma_function(&v_j));
    for w in default_samples::<Integer>() {
        let lhs = lt_value(&sat, &w).map_err(err)?;
        let rhs = combined(&w);
        if let (SigValue::Value(a), SigValue::Value(b)) = (lhs, rhs) {
            ensure(a == b, || format!("signature at {w}: matrix {a}, formula {b}"))?;
        }
    }
    Ok(())
}

fn check_seifert_gl(rng: &mut ChaCha8Rng) -> Result<(), String> {
    let f = random_surface(rng, true, Limits::default());
    let v = f.seifert_matrix().map_err(err)?;
    let g = f.gl_form().map_err(err)?;
    ensure(g.matrix() == &v.add(&v.transpose()).map_err(err)?, || "G differs from V + V^T".into())?;
    let ix = f.intersection_matrix();
    ensure(ix == v.sub(&v.transpose()).map_err(err)?, || "V - V^T differs from the intersection form".into())?;
    let det = v.add(&v.transpose()).map_err(err)?.det();
    ensure(det.is_odd(), || format!("det(V + V^T) = {det} is even"))?;
    let d = alexander(&v).map_err(err)?;
    let arf_ok = arf_from_determinant(&d.evaluate_int(&-BigInt::one()).map_err(err)?).is_ok();
    let sig = signature(&v).map_err(err)?;
    ensure(arf_ok && sig % 2 == 0, || format!("signature {sig} or Arf undefined"))
}

fn check_homology(rng: &mut ChaCha8Rng) -> Result<(), String> {
    // <x, y | y - 2x, y>, presented after a random unimodular change of basis.
    let rel = Matrix::from_i64_rows(&[vec![-2, 1], vec![0, 1]]).expect("2x2");
    let k: i64 = rng.gen_range(-5..=5);
    let basis = Matrix::from_i64_rows(&[vec![1, k], vec![0, 1]]).expect("2x2");
    let m: IntMatrix = rel.mul(&basis).map_err(err)?;
    let h = fp_abelian_invariants(2, &m).map_err(err)?;
    ensure(h.free_rank == 0 && h.torsion == vec![BigInt::from(2)], || format!("got {h}"))?;
    ensure(!h.torsion.iter().any(|d| d.is_zero()), || "zero torsion factor".into())
}
