//! Command-line front end for the spinsurf toolkit.
//!
//! Every subcommand prints exactly one JSON report to stdout and keeps
//! human chatter on stderr, so runs can be piped and diffed.  Reports echo
//! the convention flags (`wirtinger`, `seed`, `tol`) they ran under, and
//! all output is deterministic: the same config and seed produce the same
//! bytes.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails (a residual
//! above its declared tolerance, a path-dependence warning, a curvature
//! mismatch), 2 for usage errors (bad flags, malformed config files,
//! out-of-range signatures).

use clap::{Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use spinsurf::algebra::{blade_name, parse_blade, Blade, Signature};
use spinsurf::classify::{classify_odd, matrix_class, positivity_class, volume_square, OddStructure};
use spinsurf::error::Error;
use spinsurf::export::{csv_string, obj_string};
use spinsurf::grid::{Grid2, Wirtinger};
use spinsurf::ideals::{commuting_count, minimal_left_ideal, primitive_idempotent};
use spinsurf::repr::spinor_rep;
use spinsurf::scalar::C64;
use spinsurf::spinor::{grades_present, mother_from_even, project_restriction, projector_algebra_check};
use spinsurf::verify::{run_suite, CheckResult};
use spinsurf::weierstrass::{
    build_spinor_grid, curvatures, integrate_immersion, metric_consistency, revolution_stats,
    ClosedFormData, PotentialSpec, Target, ZeroData,
};
use spinsurf::zeta::{find_zeta_units, ImmersionCase};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

// ---------------------------------------------------------------------------
// Argument surface
// ---------------------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "spinsurf",
    version,
    about = "Clifford algebras, spinor ideals, and conformal surface immersions"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,

    /// Derivative convention: standard | paper
    #[arg(long, global = true)]
    wirtinger: Option<String>,

    /// Seed for the random probes
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Tolerance for machine-precision identity checks (and the declared
    /// residual tolerance for `surface`, overriding the config file)
    #[arg(long, global = true)]
    tol: Option<f64>,

    /// Directory for report and mesh files
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Classify Cl(p,q): volume square, odd split, matrix-algebra form
    Algebra {
        /// Signature as `p,q`
        #[arg(long)]
        sig: String,
    },
    /// Build a minimal left ideal and report its division ring
    Ideal {
        /// Signature as `p,q`
        #[arg(long)]
        sig: String,
        /// Comma-separated idempotent factor blades, e.g. `e1,e24`
        #[arg(long)]
        idem: Option<String>,
    },
    /// Matrices of the generators on a spinor ideal
    Rep {
        /// Signature as `p,q`
        #[arg(long)]
        sig: String,
        /// Comma-separated idempotent factor blades, e.g. `e1,e24`
        #[arg(long)]
        idem: Option<String>,
    },
    /// Split random spinor samples with the case projectors
    Project {
        /// Immersion case tag, e.g. `s11-in-m22`
        #[arg(long)]
        case: String,
    },
    /// Integrate a spinor representation into a surface mesh
    Surface {
        /// JSON run configuration
        #[arg(long)]
        config: PathBuf,
    },
    /// Run a verification suite
    Verify {
        /// Suite name: algebra | ideals | reps | fierz | dirac | weierstrass | all
        #[arg(default_value = "all")]
        suite: String,
    },
}

// ---------------------------------------------------------------------------
// Exit-code discipline
// ---------------------------------------------------------------------------

enum CliError {
    /// Bad invocation or configuration: exit 2.
    Usage(String),
    /// A verified quantity broke its gate: exit 1.
    Check(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::ResidualTooLarge { .. } => CliError::Check(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

fn usage<E: std::fmt::Display>(what: &str) -> impl FnOnce(E) -> CliError + '_ {
    move |e| CliError::Usage(format!("{}: {}", what, e))
}

// ---------------------------------------------------------------------------
// Shared report plumbing
// ---------------------------------------------------------------------------

struct Conventions {
    conv: Wirtinger,
    seed: u64,
    tol: f64,
}

fn emit(report: &Value, out: &Option<PathBuf>, file_name: &str) -> Result<(), CliError> {
    let text = format!("{}\n", serde_json::to_string_pretty(report).expect("serializable"));
    if let Some(dir) = out {
        std::fs::create_dir_all(dir).map_err(usage("cannot create output directory"))?;
        let path = dir.join(file_name);
        std::fs::write(&path, &text).map_err(usage("cannot write report"))?;
        eprintln!("wrote {}", path.display());
    }
    print!("{}", text);
    Ok(())
}

fn checks_to_value(checks: &[CheckResult]) -> Value {
    serde_json::to_value(checks).expect("serializable")
}

fn passed(checks: &[CheckResult]) -> bool {
    checks.iter().all(|c| c.passed)
}

fn gate_check(name: &str, value: f64, gate: f64) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed: value <= gate,
        detail: format!("{} vs gate {}", value, gate),
    }
}

fn parse_sig(s: &str) -> Result<Signature, CliError> {
    Signature::parse(s).map_err(CliError::from)
}

fn parse_factors(sig: Signature, idem: &Option<String>) -> Result<Option<Vec<Blade>>, CliError> {
    match idem {
        None => Ok(None),
        Some(list) => {
            let mut blades = Vec::new();
            for tok in list.split(',') {
                blades.push(parse_blade(tok.trim(), sig).map_err(CliError::from)?);
            }
            Ok(Some(blades))
        }
    }
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

fn cmd_algebra(sig: &str, cx: &Conventions, out: &Option<PathBuf>) -> Result<u8, CliError> {
    let s = parse_sig(sig)?;
    let odd = if s.n() % 2 == 1 {
        let tag = match classify_odd(s).map_err(CliError::from)? {
            OddStructure::Splits { .. } => "splits",
            OddStructure::Complexifies => "complexifies",
        };
        Value::String(tag.to_string())
    } else {
        Value::Null
    };
    let mc = matrix_class(s.p(), s.q());
    let k = commuting_count(s);
    let report = json!({
        "command": "algebra",
        "wirtinger": cx.conv.tag(),
        "seed": cx.seed,
        "tol": cx.tol,
        "signature": {"p": s.p(), "q": s.q(), "label": s.label()},
        "volume_square": volume_square(s.p(), s.q()),
        "positivity": serde_json::to_value(positivity_class(s.p(), s.q())).expect("serializable"),
        "odd_structure": odd,
        "commuting_factors": k,
        "ideal_dim": 1usize << (s.n() - k),
        "matrix_class": {
            "factors": mc.factors,
            "m": mc.m,
            "ring": mc.ring.label(),
            "label": mc.label(),
        },
    });
    emit(&report, out, "algebra-report.json")?;
    Ok(0)
}

fn cmd_ideal(
    sig: &str,
    idem: &Option<String>,
    cx: &Conventions,
    out: &Option<PathBuf>,
) -> Result<u8, CliError> {
    let s = parse_sig(sig)?;
    let blades = parse_factors(s, idem)?;
    let e = primitive_idempotent(s, blades.as_deref()).map_err(CliError::from)?;
    let ideal = minimal_left_ideal(&e).map_err(CliError::from)?;
    let names = |bs: &[Blade]| -> Vec<String> { bs.iter().map(|&b| blade_name(b)).collect() };
    let report = json!({
        "command": "ideal",
        "wirtinger": cx.conv.tag(),
        "seed": cx.seed,
        "tol": cx.tol,
        "signature": {"p": s.p(), "q": s.q(), "label": s.label()},
        "factors": names(e.factors()),
        "ideal": {"dim": ideal.dim(), "gens": names(ideal.gens())},
        "divring": {
            "class": ideal.divring_class().label(),
            "dim": ideal.divring_dim(),
            "gens": names(ideal.divring_gens()),
        },
    });
    emit(&report, out, "ideal-report.json")?;
    Ok(0)
}

fn cmd_rep(
    sig: &str,
    idem: &Option<String>,
    cx: &Conventions,
    out: &Option<PathBuf>,
) -> Result<u8, CliError> {
    let s = parse_sig(sig)?;
    let blades = parse_factors(s, idem)?;
    let e = primitive_idempotent(s, blades.as_deref()).map_err(CliError::from)?;
    let basis = minimal_left_ideal(&e).map_err(CliError::from)?;
    let rep = spinor_rep(&basis).map_err(CliError::from)?;

    // Re-verify the Clifford relations before printing the matrices.
    let mut relations_ok = true;
    for i in 0..s.n() as usize {
        for j in 0..s.n() as usize {
            let sum = &(&rep.gammas()[i] * &rep.gammas()[j])
                + &(&rep.gammas()[j] * &rep.gammas()[i]);
            let eta = if i != j {
                spinsurf::scalar::rat(0, 1)
            } else if (i as u32) < s.p() {
                spinsurf::scalar::rat(2, 1)
            } else {
                spinsurf::scalar::rat(-2, 1)
            };
            if sum != spinsurf::mat::Mat::identity(rep.dim()).scale(&eta) {
                relations_ok = false;
            }
        }
    }
    let checks = vec![CheckResult {
        name: "generator matrices satisfy the Clifford relations exactly".to_string(),
        passed: relations_ok,
        detail: format!("{} generators on a dim-{} ideal", s.n(), rep.dim()),
    }];

    let gammas: Vec<Value> = (1..=s.n())
        .map(|i| {
            let m = rep.gamma(i);
            let rows: Vec<Vec<String>> = (0..m.n())
                .map(|r| (0..m.n()).map(|c| format!("{}", m.get(r, c))).collect())
                .collect();
            json!({"generator": format!("e{}", i), "matrix": rows})
        })
        .collect();
    let report = json!({
        "command": "rep",
        "wirtinger": cx.conv.tag(),
        "seed": cx.seed,
        "tol": cx.tol,
        "signature": {"p": s.p(), "q": s.q(), "label": s.label()},
        "factors": e.factors().iter().map(|&b| blade_name(b)).collect::<Vec<_>>(),
        "dim": rep.dim(),
        "divring": rep.divring().label(),
        "gammas": gammas,
        "checks": checks_to_value(&checks),
        "passed": passed(&checks),
    });
    emit(&report, out, "rep-report.json")?;
    Ok(if passed(&checks) { 0 } else { 1 })
}

fn cmd_project(case: &str, cx: &Conventions, out: &Option<PathBuf>) -> Result<u8, CliError> {
    let case = ImmersionCase::parse(case).map_err(CliError::from)?;
    let dec = find_zeta_units(case).map_err(CliError::from)?;
    let s = dec.sig();
    let idem = primitive_idempotent(s, None).map_err(CliError::from)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cx.seed ^ 0x590c7);

    let mut checks = Vec::new();
    checks.push(CheckResult {
        name: "case projectors are complementary idempotents".to_string(),
        passed: projector_algebra_check(&dec),
        detail: format!("(zeta1 zeta2)^2 = {}", dec.zeta12_square()),
    });

    let samples = 5usize;
    let mut complete = 0usize;
    let mut stable = 0usize;
    let mut first_grades = (Vec::new(), Vec::new());
    for k in 0..samples {
        let phi = spinsurf::multivector::Multivector::<spinsurf::scalar::CRat>::random(
            s, &mut rng, 6,
        )
        .even_part();
        let psi = mother_from_even(&phi, &idem).map_err(CliError::from)?;
        let rf = project_restriction(&psi, &dec).map_err(CliError::from)?;
        if &rf.total() == psi.element() {
            complete += 1;
        }
        let (ep, _) = dec.epsilon_projectors();
        let replus = ep.try_mul(rf.plus()).map_err(CliError::from)?;
        if &replus == rf.plus() {
            stable += 1;
        }
        if k == 0 {
            first_grades = (grades_present(rf.plus()), grades_present(rf.minus()));
        }
    }
    checks.push(CheckResult {
        name: "plus and minus parts reassemble the sample exactly".to_string(),
        passed: complete == samples,
        detail: format!("{}/{} random samples", complete, samples),
    });
    checks.push(CheckResult {
        name: "projection is stable under re-projection".to_string(),
        passed: stable == samples,
        detail: format!("{}/{} random samples", stable, samples),
    });

    let report = json!({
        "command": "project",
        "wirtinger": cx.conv.tag(),
        "seed": cx.seed,
        "tol": cx.tol,
        "case": case.tag(),
        "signature": {"p": s.p(), "q": s.q(), "label": s.label()},
        "epsilon": if dec.epsilon_is_real() { "1" } else { "i" },
        "zeta12_square": dec.zeta12_square(),
        "sample_grades": {"plus": first_grades.0, "minus": first_grades.1},
        "checks": checks_to_value(&checks),
        "passed": passed(&checks),
    });
    emit(&report, out, "project-report.json")?;
    Ok(if passed(&checks) { 0 } else { 1 })
}

// ---------------------------------------------------------------------------
// surface
// ---------------------------------------------------------------------------

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SurfaceConfig {
    case: Option<String>,
    wirtinger: Option<String>,
    grid: GridConfig,
    potential: PotentialConfig,
    #[serde(default)]
    tol: TolConfig,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GridConfig {
    nx: usize,
    ny: usize,
    x0: f64,
    y0: f64,
    hx: f64,
    hy: f64,
}

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
enum PotentialConfig {
    Zero {
        family: ZeroFamily,
    },
    ClosedForm {
        #[serde(flatten)]
        family: ClosedFamily,
    },
    SechRevolution {
        mu: f64,
        t: f64,
        nu: f64,
    },
}

#[derive(Deserialize, Clone, Copy)]
#[serde(rename_all = "kebab-case")]
enum ZeroFamily {
    Plane,
    Enneper,
}

#[derive(Deserialize, Clone, Copy)]
#[serde(tag = "family", rename_all = "kebab-case")]
enum ClosedFamily {
    PlaneWave { p: f64, k: f64, l: f64 },
    SplitCosh { h: f64, chi1: f64, chi2: f64 },
}

#[derive(Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct TolConfig {
    residual: Option<f64>,
    #[serde(rename = "loop")]
    loop_tol: Option<f64>,
    conformal: Option<f64>,
    metric: Option<f64>,
    curvature: Option<f64>,
    symmetry: Option<f64>,
}

struct ResolvedTol {
    residual: f64,
    loop_tol: f64,
    conformal: f64,
    metric: f64,
    curvature: f64,
    symmetry: f64,
}

fn potential_spec(cfg: &PotentialConfig) -> (PotentialSpec, Value) {
    match cfg {
        PotentialConfig::Zero { family } => match family {
            ZeroFamily::Plane => (
                PotentialSpec::Zero(ZeroData::Plane),
                json!({"kind": "zero", "family": "plane"}),
            ),
            ZeroFamily::Enneper => (
                PotentialSpec::Zero(ZeroData::Enneper),
                json!({"kind": "zero", "family": "enneper"}),
            ),
        },
        PotentialConfig::ClosedForm { family } => match *family {
            ClosedFamily::PlaneWave { p, k, l } => (
                PotentialSpec::ClosedForm(ClosedFormData::PlaneWave { p, k, l }),
                json!({"kind": "closed-form", "family": "plane-wave", "p": p, "k": k, "l": l}),
            ),
            ClosedFamily::SplitCosh { h, chi1, chi2 } => (
                PotentialSpec::ClosedForm(ClosedFormData::SplitCosh { h, chi1, chi2 }),
                json!({"kind": "closed-form", "family": "split-cosh", "h": h, "chi1": chi1, "chi2": chi2}),
            ),
        },
        PotentialConfig::SechRevolution { mu, t, nu } => (
            PotentialSpec::SechRevolution {
                mu: *mu,
                t: *t,
                lambda: C64::new(0.0, *nu),
            },
            json!({"kind": "sech-revolution", "mu": mu, "t": t, "nu": nu}),
        ),
    }
}

/// Family defaults for the declared tolerances; explicit config entries and
/// the `--tol` flag (residual only) win over these.
fn resolve_tol(cfg: &TolConfig, spec: &PotentialSpec, flag_tol: Option<f64>) -> ResolvedTol {
    let (residual_default, curvature_default) = match spec {
        PotentialSpec::Zero(_) => (1e-10, 1e-3),
        PotentialSpec::ClosedForm(_) => (1e-3, 2e-2),
        PotentialSpec::SechRevolution { .. } => (1e-2, 2e-2),
    };
    ResolvedTol {
        residual: flag_tol.or(cfg.residual).unwrap_or(residual_default),
        loop_tol: cfg.loop_tol.unwrap_or(1e-2),
        conformal: cfg.conformal.unwrap_or(1e-6),
        metric: cfg.metric.unwrap_or(1e-2),
        curvature: cfg.curvature.unwrap_or(curvature_default),
        symmetry: cfg.symmetry.unwrap_or(1e-8),
    }
}

fn tol_value(t: &ResolvedTol) -> Value {
    json!({
        "residual": t.residual,
        "loop": t.loop_tol,
        "conformal": t.conformal,
        "metric": t.metric,
        "curvature": t.curvature,
        "symmetry": t.symmetry,
    })
}

fn cmd_surface(
    config_path: &Path,
    flag_wirtinger: &Option<String>,
    flag_tol: Option<f64>,
    seed: u64,
    out: &Option<PathBuf>,
) -> Result<u8, CliError> {
    let text = std::fs::read_to_string(config_path).map_err(usage("cannot read config"))?;
    let cfg: SurfaceConfig =
        serde_json::from_str(&text).map_err(usage("malformed config"))?;

    let conv_str = flag_wirtinger
        .clone()
        .or_else(|| cfg.wirtinger.clone())
        .unwrap_or_else(|| "standard".to_string());
    let conv = Wirtinger::parse(&conv_str).map_err(CliError::from)?;

    let (spec, potential_echo) = potential_spec(&cfg.potential);
    let target = spec.target();
    if let Some(case_str) = &cfg.case {
        let case = Target::parse(case_str).map_err(CliError::from)?;
        if case != target {
            return Err(CliError::Usage(format!(
                "case {} does not match the potential's target {}",
                case.tag(),
                target.tag()
            )));
        }
    }

    let g = cfg.grid;
    let grid = Grid2::new(g.nx, g.ny, g.x0, g.y0, g.hx, g.hy).map_err(CliError::from)?;
    let tol = resolve_tol(&cfg.tol, &spec, flag_tol);
    let out_dir = out.clone().unwrap_or_else(|| PathBuf::from("."));

    let base = |checks: &[CheckResult], results: Value| -> Value {
        json!({
            "command": "surface",
            "wirtinger": conv.tag(),
            "seed": seed,
            "tol": tol_value(&tol),
            "case": target.tag(),
            "grid": {"nx": g.nx, "ny": g.ny, "x0": g.x0, "y0": g.y0, "hx": g.hx, "hy": g.hy},
            "potential": potential_echo.clone(),
            "results": results,
            "checks": checks_to_value(checks),
            "passed": passed(checks),
        })
    };

    // Build the spinor data; a residual above the declared tolerance is a
    // check failure, reported rather than swallowed.
    let sg = match build_spinor_grid(&spec, &grid, conv, tol.residual) {
        Ok(sg) => sg,
        Err(Error::ResidualTooLarge { what, max, tol: t }) => {
            let checks = vec![CheckResult {
                name: "system residual within declared tolerance".to_string(),
                passed: false,
                detail: format!("{}: {} vs gate {}", what, max, t),
            }];
            let report = base(&checks, json!({"residual": max}));
            emit(&report, &Some(out_dir), "report.json")?;
            eprintln!("check failed: system residual {} exceeds {}", max, t);
            return Ok(1);
        }
        Err(e) => return Err(e.into()),
    };

    let mesh = integrate_immersion(&sg, target, tol.loop_tol).map_err(CliError::from)?;
    let metric = metric_consistency(&mesh).map_err(CliError::from)?;
    let deg_frac = match spec {
        PotentialSpec::SechRevolution { .. } => 5e-2,
        _ => 1e-3,
    };
    let curv = curvatures(&mesh, &sg, deg_frac).map_err(CliError::from)?;

    let mut checks = Vec::new();
    checks.push(gate_check(
        "system residual within declared tolerance",
        sg.residual(),
        tol.residual,
    ));
    checks.push(CheckResult {
        name: "integration is path independent at the loop gate".to_string(),
        passed: !mesh.path_warning(),
        detail: format!("{} vs gate {}", mesh.loop_defect(), tol.loop_tol),
    });
    checks.push(gate_check(
        "integrand stays conformal and isotropic",
        mesh.max_conformal_defect_rel(),
        tol.conformal,
    ));
    let metric_worst = metric.max_rel_xx.max(metric.max_rel_yy).max(metric.max_rel_cross);
    checks.push(gate_check(
        "mesh metric matches the conformal factor",
        metric_worst,
        tol.metric,
    ));
    match spec {
        PotentialSpec::Zero(_) => checks.push(gate_check(
            "mesh mean curvature stays at the minimal floor",
            curv.max_abs_h_mesh,
            tol.curvature,
        )),
        _ => checks.push(gate_check(
            "mesh mean curvature matches the closed form",
            curv.max_rel_h,
            tol.curvature,
        )),
    }

    let mut results = json!({
        "residual": sg.residual(),
        "loop_defect": mesh.loop_defect(),
        "conformal_defect": mesh.max_conformal_defect_rel(),
        "metric": {
            "max_rel_xx": metric.max_rel_xx,
            "max_rel_yy": metric.max_rel_yy,
            "max_rel_cross": metric.max_rel_cross,
            "scale": metric.scale,
        },
        "curvature": {
            "max_abs_h_mesh": curv.max_abs_h_mesh,
            "max_rel_h": curv.max_rel_h,
            "max_rel_k": curv.max_rel_k,
            "n_degenerate": curv.n_degenerate,
        },
        "revolution": Value::Null,
    });

    if let PotentialSpec::SechRevolution { .. } = spec {
        let closed = ((g.ny - 1) as f64 * g.hy - std::f64::consts::TAU).abs() <= 1e-9;
        let stats = revolution_stats(&mesh, closed).map_err(CliError::from)?;
        let symmetry = stats
            .axis_drift
            .max(stats.profile_wobble)
            .max(stats.max_radius_deviation)
            .max(stats.closure_defect.unwrap_or(0.0));
        checks.push(gate_check(
            "the surface is a closed round revolution",
            symmetry,
            tol.symmetry,
        ));
        let mean_radius = stats.radii.iter().sum::<f64>() / stats.radii.len() as f64;
        results["revolution"] = json!({
            "axis_drift": stats.axis_drift,
            "profile_wobble": stats.profile_wobble,
            "max_radius_deviation": stats.max_radius_deviation,
            "max_radius_variance": stats.max_radius_variance,
            "closure_defect": stats.closure_defect,
            "mean_radius": mean_radius,
        });
    }

    std::fs::create_dir_all(&out_dir).map_err(usage("cannot create output directory"))?;
    let obj_path = out_dir.join("surface.obj");
    let csv_path = out_dir.join("surface.csv");
    std::fs::write(&obj_path, obj_string(&mesh)).map_err(usage("cannot write mesh"))?;
    std::fs::write(&csv_path, csv_string(&mesh, &curv)).map_err(usage("cannot write csv"))?;
    eprintln!("wrote {}", obj_path.display());
    eprintln!("wrote {}", csv_path.display());

    let report = base(&checks, results);
    emit(&report, &Some(out_dir), "report.json")?;
    if passed(&checks) {
        Ok(0)
    } else {
        for c in checks.iter().filter(|c| !c.passed) {
            eprintln!("check failed: {} ({})", c.name, c.detail);
        }
        Ok(1)
    }
}

fn cmd_verify(
    suite: &str,
    cx: &Conventions,
    out: &Option<PathBuf>,
) -> Result<u8, CliError> {
    let report = run_suite(suite, cx.seed, cx.tol, cx.conv).map_err(CliError::from)?;
    let value = serde_json::to_value(&report).expect("serializable");
    emit(&value, out, &format!("verify-{}.json", suite))?;
    if report.passed {
        Ok(0)
    } else {
        for c in report.checks.iter().filter(|c| !c.passed) {
            eprintln!("check failed: {} ({})", c.name, c.detail);
        }
        Ok(1)
    }
}

// ---------------------------------------------------------------------------
// Entry
// ---------------------------------------------------------------------------

fn run(cli: Cli) -> Result<u8, CliError> {
    let conv = match &cli.wirtinger {
        Some(s) => Wirtinger::parse(s).map_err(CliError::from)?,
        None => Wirtinger::Standard,
    };
    let cx = Conventions {
        conv,
        seed: cli.seed,
        tol: cli.tol.unwrap_or(1e-10),
    };
    if let Some(t) = cli.tol {
        if !(t > 0.0) || !t.is_finite() {
            return Err(CliError::Usage("tolerance must be positive".to_string()));
        }
    }
    match &cli.cmd {
        Cmd::Algebra { sig } => cmd_algebra(sig, &cx, &cli.out),
        Cmd::Ideal { sig, idem } => cmd_ideal(sig, idem, &cx, &cli.out),
        Cmd::Rep { sig, idem } => cmd_rep(sig, idem, &cx, &cli.out),
        Cmd::Project { case } => cmd_project(case, &cx, &cli.out),
        Cmd::Surface { config } => {
            cmd_surface(config, &cli.wirtinger, cli.tol, cli.seed, &cli.out)
        }
        Cmd::Verify { suite } => cmd_verify(suite, &cx, &cli.out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
        Err(CliError::Check(msg)) => {
            eprintln!("check failed: {}", msg);
            ExitCode::from(1)
        }
    }
}
