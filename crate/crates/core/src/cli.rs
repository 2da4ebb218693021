//! Command-line front end.
//!
//! Exit codes: `0` when the computation succeeded and every report is
//! consistent, `1` for malformed input or usage errors, `2` when a report is
//! obstructed or the verification battery finds a failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::algebra::{fp_abelian_invariants, signature_exact};
use crate::bandform::{compile, gamma_curve, klein_bottle_for_cables, mobius_band, normal_form_pieces, Curve};
use crate::invariants::{
    alexander, alexander_cable2, arf, cable_seifert, default_samples, determinant_knot, lt_value, mirror_seifert,
    signature, DetSource, SigValue, UnitPoint,
};
use crate::obstruct::{cable_concordance_check, slice_obstruction_report, verify_paper, ObstructionReport};
use crate::{presets, BandSurface, CrossingList, IntMatrix, Integer, SurfaceShape};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_OBSTRUCTED: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "bandknot", version, about = "Knot surfaces in disk-band form and concordance invariants")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Sample points for signature functions: `-1` or values of `s` such as
    /// `1/2`, comma separated.
    #[arg(long, global = true, value_delimiter = ',', allow_hyphen_values = true)]
    samples: Option<Vec<String>>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Alexander polynomial, signature, determinant, Arf invariant and
    /// Levine-Tristram signatures of a Seifert matrix.
    Invariants {
        #[arg(long, required_unless_present = "preset", conflicts_with = "preset")]
        seifert: Option<String>,
        #[arg(long)]
        preset: Option<String>,
    },
    /// Shape, framing and Gordon-Litherland form of a band surface.
    Band {
        #[arg(long, required_unless_present = "preset", conflicts_with = "preset")]
        surface: Option<String>,
        #[arg(long)]
        preset: Option<String>,
        /// With `--preset`, use the stored non-orientable surface.
        #[arg(long, requires = "preset")]
        nonorientable: bool,
    },
    /// Invariants of the (2, p) cable and the Möbius band and Klein bottle it bounds.
    Cable {
        #[arg(long, required_unless_present = "preset", conflicts_with = "preset")]
        knot: Option<String>,
        #[arg(long)]
        preset: Option<String>,
        #[arg(short = 'p', allow_hyphen_values = true)]
        p: i64,
        /// Directory to write `cable.json`, `mobius.json` and `klein.json` to.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Zero-framed Klein bottle bounded by K_(2,p) # (-J)_(2,-p) and its slice obstruction report.
    Klein {
        #[arg(long = "coreK")]
        core_k: String,
        #[arg(long = "coreJ")]
        core_j: String,
        #[arg(short = 'p', allow_hyphen_values = true)]
        p: i64,
        /// Directory to write `klein.json` to.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Screens whether the (2, p) cables of K and J can be concordant.
    #[command(name = "obstruct-cable")]
    ObstructCable {
        #[arg(long = "K")]
        k: String,
        #[arg(long = "J")]
        j: String,
        #[arg(short = 'p', allow_hyphen_values = true)]
        p: i64,
    },
    /// Invariant factors of a finitely presented abelian group.
    Homology {
        #[arg(long)]
        presentation: String,
    },
    /// Runs the randomized verification battery.
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn input_error(msg: impl Into<String>) -> Self {
        Self { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {}\n", msg.into()) }
    }
}

/// A knot given by a diagram and a Seifert matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnotFile {
    pub diagram: CrossingList,
    pub seifert: Vec<Vec<i64>>,
}

/// `generators` generators and one relation per row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Presentation {
    pub generators: usize,
    pub relations: Vec<Vec<i64>>,
}

type CliResult<T> = Result<T, String>;

pub fn run<I, A>(args: I) -> Outcome
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code, stdout: String::new(), stderr: text }
            } else {
                Outcome { code, stdout: text, stderr: String::new() }
            };
        }
    };
    match dispatch(&cli) {
        Ok((code, stdout)) => Outcome { code, stdout, stderr: String::new() },
        Err(msg) => Outcome::input_error(msg),
    }
}

fn dispatch(cli: &Cli) -> CliResult<(i32, String)> {
    let samples = match &cli.samples {
        None => default_samples(),
        Some(list) => list
            .iter()
            .map(|s| {
                let w: UnitPoint<Integer> = s.parse().map_err(|e| format!("--samples: {e}"))?;
                if w.is_one() {
                    return Err(format!("--samples: {s:?} is omega = 1"));
                }
                Ok(w)
            })
            .collect::<CliResult<_>>()?,
    };
    let fmt = cli.format;
    match &cli.command {
        Command::Invariants { seifert, preset } => {
            let v = match (seifert, preset) {
                (Some(path), _) => load_seifert(path)?,
                (None, Some(name)) => find_preset(name)?.seifert(),
                (None, None) => unreachable!("clap requires one input"),
            };
            cmd_invariants(&v, &samples, fmt)
        }
        Command::Band { surface, preset, nonorientable } => {
            let f = match (surface, preset) {
                (Some(path), _) => load_surface(path)?,
                (None, Some(name)) => {
                    let p = find_preset(name)?;
                    if *nonorientable {
                        p.nonorientable.clone()
                    } else {
                        p.orientable.clone()
                    }
                }
                (None, None) => unreachable!("clap requires one input"),
            };
            cmd_band(&f, fmt)
        }
        Command::Cable { knot, preset, p, out } => {
            let k = match (knot, preset) {
                (Some(path), _) => load_knot(path)?,
                (None, Some(name)) => preset_knot(find_preset(name)?),
                (None, None) => unreachable!("clap requires one input"),
            };
            cmd_cable(&k, *p, out.as_deref(), fmt)
        }
        Command::Klein { core_k, core_j, p, out } => {
            cmd_klein(&load_knot(core_k)?, &load_knot(core_j)?, *p, out.as_deref(), &samples, fmt)
        }
        Command::ObstructCable { k, j, p } => {
            let (vk, vj) = (load_seifert(k)?, load_seifert(j)?);
            let report = cable_concordance_check(&vk, &vj, *p, &samples).map_err(|e| e.to_string())?;
            report_output(&report, fmt, |s| {
                let _ = writeln!(s, "(2, {p}) cable concordance screen");
            })
        }
        Command::Homology { presentation } => cmd_homology(presentation, fmt),
        Command::Verify { seed, trials } => {
            let summary = verify_paper(*seed, *trials).map_err(|e| e.to_string())?;
            let code = if summary.all_passed { EXIT_OK } else { EXIT_OBSTRUCTED };
            Ok((code, render(fmt, &summary, || summary.to_string())))
        }
    }
}

fn render<S: Serialize>(fmt: Format, value: &S, text: impl FnOnce() -> String) -> String {
    match fmt {
        Format::Json => serde_json::to_string_pretty(value).expect("output types serialize") + "\n",
        Format::Text => {
            let mut t = text();
            if !t.ends_with('\n') {
                t.push('\n');
            }
            t
        }
    }
}

fn report_output(
    report: &ObstructionReport,
    fmt: Format,
    header: impl FnOnce(&mut String),
) -> CliResult<(i32, String)> {
    let code = if report.is_obstructed() { EXIT_OBSTRUCTED } else { EXIT_OK };
    Ok((
        code,
        render(fmt, report, || {
            let mut s = String::new();
            header(&mut s);
            s + &report.to_string()
        }),
    ))
}

fn find_preset(name: &str) -> CliResult<&'static presets::Preset> {
    presets::get(name).ok_or_else(|| format!("unknown preset {name:?}; available: {}", presets::NAMES.join(", ")))
}

fn preset_knot(p: &presets::Preset) -> KnotFile {
    KnotFile { diagram: p.diagram(), seifert: p.seifert_rows().to_vec() }
}

fn read_json<T: DeserializeOwned>(path: &str) -> CliResult<T> {
    let text = fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let field = e.path().to_string();
        if field == "." {
            format!("{path}: {}", e.inner())
        } else {
            format!("{path}: field `{field}`: {}", e.inner())
        }
    })
}

fn matrix_from_rows(rows: &[Vec<i64>], path: &str, field: &str) -> CliResult<IntMatrix> {
    let n = rows.len();
    for (i, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(format!(
                "{path}: field `{field}`: row {i} has {} entries, expected {n} for a square matrix",
                r.len()
            ));
        }
    }
    IntMatrix::from_i64_rows(rows).map_err(|e| format!("{path}: field `{field}`: {e}"))
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SeifertInput {
    Bare(Vec<Vec<i64>>),
    Object { seifert: Vec<Vec<i64>> },
}

/// A Seifert matrix: a bare array of rows, any object with a `seifert`
/// field (such as a knot file), or `preset:NAME`.
fn load_seifert(arg: &str) -> CliResult<IntMatrix> {
    if let Some(name) = arg.strip_prefix("preset:") {
        return Ok(find_preset(name)?.seifert());
    }
    let (rows, field) = match read_json::<SeifertInput>(arg) {
        Ok(SeifertInput::Bare(rows)) => (rows, "."),
        Ok(SeifertInput::Object { seifert }) => (seifert, "seifert"),
        Err(_) => {
            // Retry against the object form to get a field-level message.
            #[derive(Deserialize)]
            #[allow(dead_code)]
            struct Strict {
                seifert: Vec<Vec<i64>>,
            }
            return Err(match read_json::<Strict>(arg) {
                Err(e) => format!("{e} (expected an array of integer rows or an object with field `seifert`)"),
                Ok(_) => format!("{arg}: malformed Seifert matrix"),
            });
        }
    };
    matrix_from_rows(&rows, arg, field)
}

fn load_knot(arg: &str) -> CliResult<KnotFile> {
    if let Some(name) = arg.strip_prefix("preset:") {
        return Ok(preset_knot(find_preset(name)?));
    }
    let k: KnotFile = read_json(arg)?;
    if let Err(v) = k.diagram.validate() {
        return Err(format!("{arg}: field `diagram`: {}", v[0]));
    }
    if k.diagram.num_components() != 1 {
        return Err(format!(
            "{arg}: field `diagram.components`: {} components, a knot needs 1",
            k.diagram.num_components()
        ));
    }
    matrix_from_rows(&k.seifert, arg, "seifert")?;
    Ok(k)
}

fn load_surface(arg: &str) -> CliResult<BandSurface> {
    if let Some(rest) = arg.strip_prefix("preset:") {
        let (name, non) = match rest.strip_suffix(":nonorientable") {
            Some(n) => (n, true),
            None => (rest, false),
        };
        let p = find_preset(name)?;
        return Ok(if non { p.nonorientable.clone() } else { p.orientable.clone() });
    }
    let f: BandSurface = read_json(arg)?;
    f.check().map_err(|e| format!("{arg}: {e}"))?;
    Ok(f)
}

fn int(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(x) => x.into(),
        None => v.to_string().into(),
    }
}

fn rows(m: &IntMatrix) -> Vec<Vec<serde_json::Value>> {
    m.to_rows().iter().map(|r| r.iter().map(int).collect()).collect()
}

fn sig_text(v: SigValue) -> String {
    v.to_string()
}

fn write_file<S: Serialize>(dir: &Path, name: &str, value: &S) -> CliResult<PathBuf> {
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let path = dir.join(name);
    let text = serde_json::to_string_pretty(value).expect("surfaces serialize") + "\n";
    fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(path)
}

#[derive(Serialize)]
struct LtEntry {
    omega: UnitPoint<Integer>,
    value: SigValue,
}

#[derive(Serialize)]
struct InvariantsOut {
    alexander: String,
    signature: i64,
    determinant: serde_json::Value,
    arf: u8,
    levine_tristram: Vec<LtEntry>,
}

fn cmd_invariants(v: &IntMatrix, samples: &[UnitPoint<Integer>], fmt: Format) -> CliResult<(i32, String)> {
    let delta = alexander(v).map_err(|e| e.to_string())?;
    let out = InvariantsOut {
        alexander: delta.to_string(),
        signature: signature(v).map_err(|e| e.to_string())?,
        determinant: int(&determinant_knot(DetSource::Seifert(v)).map_err(|e| e.to_string())?),
        arf: arf(v).map_err(|e| e.to_string())?,
        levine_tristram: samples
            .iter()
            .map(|w| Ok(LtEntry { omega: w.clone(), value: lt_value(v, w).map_err(|e| e.to_string())? }))
            .collect::<CliResult<_>>()?,
    };
    Ok((
        EXIT_OK,
        render(fmt, &out, || {
            let mut s = String::new();
            let _ = writeln!(s, "Alexander polynomial: {}", out.alexander);
            let _ = writeln!(s, "signature: {}", out.signature);
            let _ = writeln!(s, "determinant: {}", out.determinant);
            let _ = writeln!(s, "Arf invariant: {}", out.arf);
            let _ = writeln!(s, "Levine-Tristram signatures:");
            for e in &out.levine_tristram {
                let _ = writeln!(s, "  {:<12} {}", e.omega.to_string(), sig_text(e.value));
            }
            s
        }),
    ))
}

#[derive(Serialize)]
struct BandOut {
    shape: SurfaceShape,
    framing: i64,
    gordon_litherland: Vec<Vec<serde_json::Value>>,
    gl_signature: i64,
    determinant: serde_json::Value,
    boundary_signature: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    seifert: Option<Vec<Vec<serde_json::Value>>>,
    normal_form: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    gamma_self_linking: Option<i64>,
}

fn cmd_band(f: &BandSurface, fmt: Format) -> CliResult<(i32, String)> {
    let e = |e: crate::bandform::BandError| e.to_string();
    let shape = f.shape().map_err(e)?;
    let framing = f.framing().map_err(e)?;
    let g = f.gl_form().map_err(e)?;
    let gl_signature = signature_exact(&g);
    let seifert = if shape.orientable { Some(rows(&f.seifert_matrix().map_err(e)?)) } else { None };
    let normal_form = normal_form_pieces(f).is_ok();
    let gamma_self_linking = if normal_form { Some(gamma_curve(f).map_err(e)?.self_linking) } else { None };
    let out = BandOut {
        shape,
        framing,
        gordon_litherland: rows(g.matrix()),
        gl_signature,
        determinant: int(&g.det().abs()),
        boundary_signature: gl_signature - framing / 2,
        seifert,
        normal_form,
        gamma_self_linking,
    };
    Ok((
        EXIT_OK,
        render(fmt, &out, || {
            let mut s = String::new();
            let _ = writeln!(s, "surface: {}", out.shape);
            let _ = writeln!(s, "framing: {}", out.framing);
            let _ = writeln!(s, "Gordon-Litherland form:\n{}", indent(&g.to_string()));
            let _ = writeln!(s, "sign(G): {}", out.gl_signature);
            let _ = writeln!(s, "determinant: {}", out.determinant);
            let _ = writeln!(s, "boundary signature: {}", out.boundary_signature);
            if shape.orientable {
                let _ = writeln!(
                    s,
                    "Seifert matrix:\n{}",
                    indent(&f.seifert_matrix().map(|v| v.to_string()).unwrap_or_default())
                );
            }
            match out.gamma_self_linking {
                Some(lk) => {
                    let _ = writeln!(s, "normal form: yes, lk(gamma, gamma+) = {lk}");
                }
                None => {
                    let _ = writeln!(s, "normal form: no");
                }
            }
            s
        }),
    ))
}

fn indent(s: &str) -> String {
    s.lines().map(|l| format!("  {l}")).collect::<Vec<_>>().join("\n")
}

#[derive(Serialize)]
struct SurfaceOut {
    framing: i64,
    surface: BandSurface,
    #[serde(skip_serializing_if = "Option::is_none")]
    file: Option<String>,
}

#[derive(Serialize)]
struct CableOut {
    p: i64,
    alexander: String,
    determinant: serde_json::Value,
    signature: i64,
    arf: u8,
    cable: KnotFile,
    #[serde(skip_serializing_if = "Option::is_none")]
    cable_file: Option<String>,
    mobius: SurfaceOut,
    klein: SurfaceOut,
}

fn cable_knot(k: &KnotFile, p: i64) -> CliResult<(KnotFile, BandSurface)> {
    let v = matrix_from_rows(&k.seifert, "knot", "seifert")?;
    let mob = mobius_band(&k.diagram, p).map_err(|e| e.to_string())?;
    let boundary = compile(&mob, &[Curve::Boundary]).map_err(|e| e.to_string())?;
    let vc = cable_seifert(&v, p).map_err(|e| e.to_string())?;
    let seifert = vc.to_i64_rows().ok_or("Seifert matrix entries exceed 64 bits")?;
    Ok((KnotFile { diagram: boundary.diagram, seifert }, mob))
}

fn cmd_cable(k: &KnotFile, p: i64, out_dir: Option<&Path>, fmt: Format) -> CliResult<(i32, String)> {
    let v = matrix_from_rows(&k.seifert, "knot", "seifert")?;
    let delta = alexander_cable2(&alexander(&v).map_err(|e| e.to_string())?, p).map_err(|e| e.to_string())?;
    let det = delta.evaluate_int(&-BigInt::one()).map_err(|e| e.to_string())?.abs();
    let (cable, mob) = cable_knot(k, p)?;
    let vc = matrix_from_rows(&cable.seifert, "cable", "seifert")?;
    let klein = klein_bottle_for_cables(&k.diagram, &CrossingList::unlink(1), p).map_err(|e| e.to_string())?;
    let mut out = CableOut {
        p,
        alexander: delta.to_string(),
        determinant: int(&det),
        signature: signature(&vc).map_err(|e| e.to_string())?,
        arf: arf(&vc).map_err(|e| e.to_string())?,
        cable_file: None,
        mobius: SurfaceOut { framing: mob.framing().map_err(|e| e.to_string())?, surface: mob, file: None },
        klein: SurfaceOut { framing: klein.framing().map_err(|e| e.to_string())?, surface: klein, file: None },
        cable,
    };
    if let Some(dir) = out_dir {
        out.cable_file = Some(write_file(dir, "cable.json", &out.cable)?.display().to_string());
        out.mobius.file = Some(write_file(dir, "mobius.json", &out.mobius.surface)?.display().to_string());
        out.klein.file = Some(write_file(dir, "klein.json", &out.klein.surface)?.display().to_string());
    }
    Ok((
        EXIT_OK,
        render(fmt, &out, || {
            let mut s = String::new();
            let _ = writeln!(s, "(2, {p}) cable");
            let _ = writeln!(s, "Alexander polynomial: {}", out.alexander);
            let _ = writeln!(s, "determinant: {}", out.determinant);
            let _ = writeln!(s, "signature: {}", out.signature);
            let _ = writeln!(s, "Arf invariant: {}", out.arf);
            let _ = writeln!(s, "Möbius band: framing {}", out.mobius.framing);
            let _ = writeln!(s, "Klein bottle for K_(2,{p}) # U_(2,{}): framing {}", -p, out.klein.framing);
            for f in [&out.cable_file, &out.mobius.file, &out.klein.file].into_iter().flatten() {
                let _ = writeln!(s, "wrote {f}");
            }
            s
        }),
    ))
}

#[derive(Serialize)]
struct KleinOut {
    p: i64,
    framing: i64,
    gordon_litherland: Vec<Vec<serde_json::Value>>,
    determinant: serde_json::Value,
    surface: BandSurface,
    #[serde(skip_serializing_if = "Option::is_none")]
    file: Option<String>,
    report: ObstructionReport,
}

fn cmd_klein(
    k: &KnotFile,
    j: &KnotFile,
    p: i64,
    out_dir: Option<&Path>,
    samples: &[UnitPoint<Integer>],
    fmt: Format,
) -> CliResult<(i32, String)> {
    let e = |e: crate::bandform::BandError| e.to_string();
    let vk = matrix_from_rows(&k.seifert, "coreK", "seifert")?;
    let vj = matrix_from_rows(&j.seifert, "coreJ", "seifert")?;
    let f = klein_bottle_for_cables(&k.diagram, &j.diagram, p).map_err(e)?;
    let g = f.gl_form().map_err(e)?;
    let v_gamma = vk.block_diag(&mirror_seifert(&vj));
    let ce = |e: crate::invariants::InvariantError| e.to_string();
    let v_boundary =
        cable_seifert(&vk, p).map_err(ce)?.block_diag(&cable_seifert(&mirror_seifert(&vj), -p).map_err(ce)?);
    let report = slice_obstruction_report(&f, &v_gamma, Some(&v_boundary), samples).map_err(|e| e.to_string())?;
    let mut out = KleinOut {
        p,
        framing: f.framing().map_err(e)?,
        gordon_litherland: rows(g.matrix()),
        determinant: int(&g.det().abs()),
        surface: f,
        file: None,
        report,
    };
    if let Some(dir) = out_dir {
        out.file = Some(write_file(dir, "klein.json", &out.surface)?.display().to_string());
    }
    let code = if out.report.is_obstructed() { EXIT_OBSTRUCTED } else { EXIT_OK };
    Ok((
        code,
        render(fmt, &out, || {
            let mut s = String::new();
            let _ = writeln!(s, "Klein bottle bounded by K_(2,{p}) # (-J)_(2,{})", -p);
            let _ = writeln!(s, "framing: {}", out.framing);
            let _ = writeln!(s, "Gordon-Litherland form:\n{}", indent(&g.to_string()));
            let _ = writeln!(s, "determinant: {}", out.determinant);
            if let Some(f) = &out.file {
                let _ = writeln!(s, "wrote {f}");
            }
            s + &out.report.to_string()
        }),
    ))
}

#[derive(Serialize)]
struct HomologyOut {
    group: String,
    free_rank: usize,
    torsion: Vec<serde_json::Value>,
}

fn cmd_homology(path: &str, fmt: Format) -> CliResult<(i32, String)> {
    let pres: Presentation = read_json(path)?;
    for (i, r) in pres.relations.iter().enumerate() {
        if r.len() != pres.generators {
            return Err(format!(
                "{path}: field `relations[{i}]`: {} coefficients, expected one per generator ({})",
                r.len(),
                pres.generators
            ));
        }
    }
    let m = IntMatrix::from_rows_with_cols(
        pres.relations.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect(),
        pres.generators,
    )
    .map_err(|e| format!("{path}: field `relations`: {e}"))?;
    let h = fp_abelian_invariants(pres.generators, &m).map_err(|e| format!("{path}: {e}"))?;
    let out =
        HomologyOut { group: h.to_string(), free_rank: h.free_rank, torsion: h.torsion.iter().map(int).collect() };
    Ok((EXIT_OK, render(fmt, &out, || out.group.clone())))
}
