use std::fs;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use revcubic::certificate::Certificate;
use revcubic::mesh::{build_mesh, MeshConfig, DEFAULT_N, DEFAULT_T_MAX, DEFAULT_T_MIN};
use revcubic::rational_points::{
    enumerate_points, family_membership, points_to_csv, points_to_json, rational_point,
    RationalParams,
};
use revcubic::scalar::{format_rational, parse_rational, Rational};
use revcubic::singular::{
    canonical_equivalence_certificate, finite_line_rejection, lines_at_infinity,
    singular_catalog, Catalog, LineScalar,
};
use revcubic::suite::{verify_all_with, SuiteConfig};
use revcubic::surface::{
    canonical_residual, f_eval, meridian, on_surface_exact, param, revolution_invariance_test,
    slice, to_rotated, AffinePoint3, SurfaceParams,
};
use revcubic::Error;

const OK: u8 = 0;
const NEGATIVE: u8 = 1;
const USAGE: u8 = 2;
const CERT_FAILED: u8 = 3;

/// Computations on the cubic surface x^3 + y^3 + z^3 - 3xyz = 1.
#[derive(Parser)]
#[command(name = "revcubic", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate x^3 + y^3 + z^3 - rho*xyz - 1 exactly at a point.
    Eval {
        /// Comma-separated coordinates, each "a/b", an integer or a decimal.
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long, default_value = "3", allow_hyphen_values = true)]
        rho: String,
        #[arg(long)]
        json: bool,
    },
    /// Write a triangle mesh of the surface as OBJ.
    Mesh {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, default_value_t = DEFAULT_N)]
        n_theta: usize,
        /// Output file; "-" writes to stdout.
        #[arg(long, short, default_value = "-")]
        output: String,
    },
    /// Sample the meridian curve as CSV t,x,y,z.
    Meridian {
        #[command(flatten)]
        grid: Grid,
        #[arg(long, short, default_value = "-")]
        output: String,
    },
    /// The slice circle in the plane x + y + z = t.
    Slice {
        #[arg(long)]
        t: f64,
        /// Number of sample points on the circle.
        #[arg(long, default_value_t = 8)]
        n_theta: usize,
        #[arg(long)]
        json: bool,
    },
    /// Rotate a point into the frame where the axis is Z.
    Rotate {
        #[arg(long, allow_hyphen_values = true)]
        point: Option<String>,
        /// Use the surface point at (t, theta) instead of --point.
        #[arg(long)]
        t: Option<f64>,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        theta: f64,
        #[arg(long)]
        json: bool,
    },
    /// Rational points: generate, test membership, enumerate.
    Rational {
        #[command(subcommand)]
        command: RationalCommand,
    },
    /// Singular points and lines.
    Analyze {
        #[command(subcommand)]
        command: AnalyzeCommand,
    },
    /// Run every certificate.
    Verify {
        #[arg(long, default_value_t = 3.0, allow_hyphen_values = true)]
        rho: f64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Test whether x^3+y^3+z^3-rho*xyz=1 is invariant under rotation about x=y=z.
    RevolutionCheck {
        #[arg(long, default_value_t = 3.0, allow_hyphen_values = true)]
        rho: f64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Grid {
    #[arg(long, default_value_t = DEFAULT_T_MIN, allow_hyphen_values = true)]
    t_min: f64,
    #[arg(long, default_value_t = DEFAULT_T_MAX)]
    t_max: f64,
    #[arg(long, default_value_t = DEFAULT_N)]
    n_t: usize,
}

#[derive(Subcommand)]
enum RationalCommand {
    /// The point with parameters (u, r).
    Gen {
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether a rational point comes from some (u, r).
    Member {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
        #[arg(long)]
        json: bool,
    },
    /// All points whose x and y have height at most the bound.
    Enum {
        #[arg(long)]
        height: u64,
        #[arg(long, default_value = "csv", value_parser = ["csv", "json"])]
        format: String,
        /// Add a height column to CSV output.
        #[arg(long)]
        with_height: bool,
        #[arg(long, short, default_value = "-")]
        output: String,
    },
}

#[derive(Subcommand)]
enum AnalyzeCommand {
    /// Classify the singular points of a named surface.
    Singular {
        /// hcubic, canon or rotated-scaled.
        #[arg(long, default_value = "hcubic")]
        surface: String,
        #[arg(long)]
        json: bool,
    },
    /// Certify the lines at infinity and refute finite lines on xyz = 1.
    Lines {
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

fn usage(e: impl ToString) -> Failure {
    Failure {
        code: USAGE,
        message: e.to_string(),
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Eval { point, rho, json } => cmd_eval(&point, &rho, json),
        Command::Mesh {
            grid,
            n_theta,
            output,
        } => cmd_mesh(&grid, n_theta, &output),
        Command::Meridian { grid, output } => cmd_meridian(&grid, &output),
        Command::Slice { t, n_theta, json } => cmd_slice(t, n_theta, json),
        Command::Rotate {
            point,
            t,
            theta,
            json,
        } => cmd_rotate(point.as_deref(), t, theta, json),
        Command::Rational { command } => match command {
            RationalCommand::Gen { u, r, json } => cmd_gen(&u, &r, json),
            RationalCommand::Member { point, json } => cmd_member(&point, json),
            RationalCommand::Enum {
                height,
                format,
                with_height,
                output,
            } => cmd_enum(height, &format, with_height, &output),
        },
        Command::Analyze { command } => match command {
            AnalyzeCommand::Singular { surface, json } => cmd_singular(&surface, json),
            AnalyzeCommand::Lines { trials, seed, json } => cmd_lines(trials, seed, json),
        },
        Command::Verify { rho, seed, json } => cmd_verify(rho, seed, json),
        Command::RevolutionCheck {
            rho,
            samples,
            tol,
            seed,
            json,
        } => cmd_revolution(rho, samples, tol, seed, json),
    }
}

fn report(command: &str, inputs: Value, results: Value, certificates: &[Certificate], seed: Option<u64>) -> String {
    let v = json!({
        "command": command,
        "inputs": inputs,
        "results": results,
        "certificates": certificates,
        "seed": seed,
    });
    serde_json::to_string_pretty(&v).expect("json values serialize")
}

fn write_output(path: &str, text: &str) -> Result<(), Failure> {
    if path == "-" {
        std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| usage(format!("stdout: {e}")))
    } else {
        fs::write(path, text).map_err(|e| usage(format!("{path}: {e}")))
    }
}

fn parse_point(s: &str) -> Result<AffinePoint3<Rational>, Failure> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [x, y, z] = parts.as_slice() else {
        return Err(usage(format!("expected three comma-separated coordinates, got {s:?}")));
    };
    Ok(AffinePoint3::new(
        parse_rational(x).map_err(usage)?,
        parse_rational(y).map_err(usage)?,
        parse_rational(z).map_err(usage)?,
    ))
}

fn show(p: &AffinePoint3<Rational>) -> [String; 3] {
    [format_rational(&p.x), format_rational(&p.y), format_rational(&p.z)]
}

fn cmd_eval(point: &str, rho: &str, as_json: bool) -> Outcome {
    let p = parse_point(point)?;
    let rho_q = parse_rational(rho).map_err(usage)?;
    let value = f_eval(&p, &rho_q);
    let on = value == Rational::from_integer(0.into());
    if as_json {
        println!(
            "{}",
            report(
                "eval",
                json!({ "point": show(&p), "rho": format_rational(&rho_q) }),
                json!({ "value": format_rational(&value), "on_surface": on }),
                &[],
                None,
            )
        );
    } else {
        println!("value: {}", format_rational(&value));
        println!("{}", if on { "on-surface" } else { "off-surface" });
    }
    Ok(if on { OK } else { NEGATIVE })
}

fn cmd_mesh(grid: &Grid, n_theta: usize, output: &str) -> Outcome {
    let cfg = MeshConfig {
        t_min: grid.t_min,
        t_max: grid.t_max,
        n_t: grid.n_t,
        n_theta,
    };
    let mesh = build_mesh(&cfg).map_err(usage)?;
    let max = mesh.max_residual();
    if max > 1e-6 {
        return Err(Failure {
            code: CERT_FAILED,
            message: format!("vertex residual {max:e} exceeds 1e-6"),
        });
    }
    write_output(output, &mesh.to_obj())?;
    if output != "-" {
        eprintln!(
            "wrote {} vertices, {} triangles to {output} (max |F| {max:.3e})",
            mesh.vertices.len(),
            mesh.triangles.len()
        );
    }
    Ok(OK)
}

fn cmd_meridian(grid: &Grid, output: &str) -> Outcome {
    let cfg = MeshConfig {
        t_min: grid.t_min,
        t_max: grid.t_max,
        n_t: grid.n_t,
        n_theta: 2,
    };
    cfg.validate().map_err(usage)?;
    let mut out = String::from("t,x,y,z\n");
    for t in cfg.t_values() {
        let p = meridian(t).map_err(usage)?;
        out.push_str(&format!("{t:.16e},{:.16e},{:.16e},{:.16e}\n", p.x, p.y, p.z));
    }
    write_output(output, &out)?;
    Ok(OK)
}

fn cmd_slice(t: f64, n_theta: usize, as_json: bool) -> Outcome {
    let c = slice(t).map_err(usage)?;
    if n_theta == 0 {
        return Err(usage("n_theta must be at least 1"));
    }
    let pts: Vec<[f64; 3]> = (0..n_theta)
        .map(|j| c.point_at(std::f64::consts::TAU * j as f64 / n_theta as f64).to_array())
        .collect();
    if as_json {
        println!(
            "{}",
            report(
                "slice",
                json!({ "t": t, "n_theta": n_theta }),
                json!({
                    "center": c.center.to_array(),
                    "circle_radius_sq": c.circle_radius_sq,
                    "sphere_radius_sq": c.sphere_radius_sq,
                    "plane_constant": c.plane_constant,
                    "points": pts,
                }),
                &[],
                None,
            )
        );
    } else {
        println!("plane: x + y + z = {}", c.plane_constant);
        println!("center: {:?}", c.center.to_array());
        println!("sphere radius^2: {}", c.sphere_radius_sq);
        println!("circle radius^2: {}", c.circle_radius_sq);
        for p in pts {
            println!("{:.16e},{:.16e},{:.16e}", p[0], p[1], p[2]);
        }
    }
    Ok(OK)
}

fn cmd_rotate(point: Option<&str>, t: Option<f64>, theta: f64, as_json: bool) -> Outcome {
    let p = match (point, t) {
        (Some(s), None) => {
            let coords: Result<Vec<f64>, _> = s.split(',').map(|c| c.trim().parse::<f64>()).collect();
            match coords.map_err(usage)?.as_slice() {
                [x, y, z] => AffinePoint3::new(*x, *y, *z),
                _ => return Err(usage("expected three comma-separated coordinates")),
            }
        }
        (None, Some(t)) => param(SurfaceParams::new(t, theta).map_err(usage)?),
        _ => return Err(usage("give exactly one of --point or --t")),
    };
    let r = to_rotated(&p);
    let residual = canonical_residual(&r).value();
    if as_json {
        println!(
            "{}",
            report(
                "rotate",
                json!({ "point": p.to_array() }),
                json!({ "rotated": r.to_array(), "canonical_residual": residual }),
                &[],
                None,
            )
        );
    } else {
        println!("rotated: {:.16e},{:.16e},{:.16e}", r.x, r.y, r.z);
        match residual {
            Some(v) => println!("3 sqrt3 Z (X^2 + Y^2) - 2 = {v:e}"),
            None => println!("on the axis X = Y = 0"),
        }
    }
    Ok(OK)
}

fn cmd_gen(u: &str, r: &str, as_json: bool) -> Outcome {
    let u = parse_rational(u).map_err(usage)?;
    let r = parse_rational(r).map_err(usage)?;
    let params = RationalParams::new(u.clone(), r.clone()).map_err(usage)?;
    let p = rational_point(&params);
    if !on_surface_exact(&p) {
        return Err(Failure {
            code: CERT_FAILED,
            message: "generated point is off the surface".into(),
        });
    }
    if as_json {
        println!(
            "{}",
            report(
                "rational gen",
                json!({ "u": format_rational(&u), "r": format_rational(&r) }),
                json!({ "point": show(&p) }),
                &[],
                None,
            )
        );
    } else {
        println!("{}", show(&p).join(","));
    }
    Ok(OK)
}

fn cmd_member(point: &str, as_json: bool) -> Outcome {
    let p = parse_point(point)?;
    let (results, code) = match family_membership(&p) {
        Ok(m) => {
            let code = if m.is_in_family() { OK } else { NEGATIVE };
            (m.to_json(), code)
        }
        Err(Error::OffSurface) => (json!({ "status": "off-surface" }), NEGATIVE),
        Err(e) => return Err(usage(e)),
    };
    if as_json {
        println!(
            "{}",
            report("rational member", json!({ "point": show(&p) }), results, &[], None)
        );
    } else {
        let obj = results.as_object().expect("membership json is an object");
        let fields: Vec<String> = obj
            .iter()
            .map(|(k, v)| format!("{k}: {}", v.as_str().unwrap_or_default()))
            .collect();
        println!("{}", fields.join("\n"));
    }
    Ok(code)
}

fn cmd_enum(height: u64, format: &str, with_height: bool, output: &str) -> Outcome {
    let pts = enumerate_points(height).map_err(usage)?;
    let text = if format == "json" {
        let body = report(
            "rational enum",
            json!({ "height": height }),
            points_to_json(&pts),
            &[],
            None,
        );
        body + "\n"
    } else {
        points_to_csv(&pts, with_height)
    };
    write_output(output, &text)?;
    Ok(OK)
}

fn print_certificates(command: &str, inputs: Value, results: Value, certs: &[Certificate], seed: Option<u64>, as_json: bool) {
    if as_json {
        println!("{}", report(command, inputs, results, certs, seed));
        return;
    }
    for c in certs {
        let status = if c.passed() { "PASS" } else { "FAIL" };
        let subject = serde_json::to_value(c).expect("certificate serializes");
        let label = subject
            .as_object()
            .and_then(|o| o.iter().find(|(k, _)| *k != "checks"))
            .map(|(k, v)| format!("{k} {}", v.as_str().unwrap_or_default()))
            .unwrap_or_default();
        println!("[{status}] {label}");
        for ch in c.failures() {
            println!("    failed: {} ({})", ch.name, ch.witness.as_deref().unwrap_or("-"));
        }
    }
}

fn cmd_singular(surface: &str, as_json: bool) -> Outcome {
    let cat = singular_catalog(surface).map_err(usage)?;
    let mut certs = cat.certificates();
    if matches!(cat, Catalog::RotatedScaled(_)) {
        certs.push(canonical_equivalence_certificate());
    }
    let kinds: Vec<&str> = cat.kinds().iter().map(|k| k.as_str()).collect();
    print_certificates(
        "analyze singular",
        json!({ "surface": surface }),
        json!({ "count": cat.len(), "kinds": kinds }),
        &certs,
        None,
        as_json,
    );
    Ok(if certs.iter().all(Certificate::passed) { OK } else { CERT_FAILED })
}

fn cmd_lines(trials: usize, seed: u64, as_json: bool) -> Outcome {
    let lines = lines_at_infinity().map_err(|e| Failure {
        code: CERT_FAILED,
        message: e.to_string(),
    })?;
    let rat = finite_line_rejection(trials, seed, LineScalar::Rational).map_err(usage)?;
    let gau = finite_line_rejection(trials, seed, LineScalar::Gaussian).map_err(usage)?;
    let ok = lines.passed() && rat.passed() && gau.passed();
    print_certificates(
        "analyze lines",
        json!({ "trials": trials }),
        json!({ "finite_rational": rat, "finite_gaussian": gau }),
        &lines.certificates,
        Some(seed),
        as_json,
    );
    if !as_json {
        for r in [&rat, &gau] {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            println!(
                "[{status}] finite {:?} lines: {} tested, {} degenerate, {} contained",
                r.scalar, r.tested, r.degenerate, r.contained
            );
        }
    }
    Ok(if ok { OK } else { CERT_FAILED })
}

fn cmd_verify(rho: f64, seed: u64, as_json: bool) -> Outcome {
    let cfg = SuiteConfig {
        rho,
        seed,
        ..SuiteConfig::default()
    };
    let rep = verify_all_with(&cfg).map_err(usage)?;
    let failed = rep.failures().count();
    print_certificates(
        "verify",
        json!({ "rho": rho }),
        json!({ "passed": rep.passed, "total": rep.certificates.len(), "failed": failed }),
        &rep.certificates,
        Some(seed),
        as_json,
    );
    if !as_json {
        println!("{} of {} certificates passed", rep.certificates.len() - failed, rep.certificates.len());
    }
    Ok(if rep.passed { OK } else { CERT_FAILED })
}

fn cmd_revolution(rho: f64, samples: usize, tol: f64, seed: u64, as_json: bool) -> Outcome {
    let rep = revolution_invariance_test(rho, samples, tol, seed).map_err(usage)?;
    if as_json {
        println!(
            "{}",
            report(
                "revolution-check",
                json!({ "rho": rho, "samples": samples, "tol": tol }),
                serde_json::to_value(&rep).expect("report serializes"),
                &[],
                Some(seed),
            )
        );
    } else {
        println!("accepted samples: {} (skipped rays {})", rep.accepted, rep.skipped);
        println!("max scaled residual: {:e}", rep.max_residual);
        if let Some(w) = &rep.witness {
            println!("witness: {:?} rotated by {} -> {:?}", w.point, w.angle, w.rotated);
        }
        println!("{}", if rep.invariant { "invariant" } else { "not invariant" });
    }
    Ok(if rep.invariant { OK } else { NEGATIVE })
}
