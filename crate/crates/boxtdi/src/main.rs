//! Command-line front end: matrix property checks, polyhedron property
//! checks with certificates, instance generation, dilation profiling,
//! and fractional-vertex witness extraction.
//!
//! Exit codes: 0 the property holds, 1 refuted (certificate attached),
//! 2 indeterminate (a window- or sample-limited "true"), 64 usage
//! error, 65 malformed or ineligible input, 66 unreadable file, 70
//! internal search budget exceeded.

use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;
use sha2::{Digest, Sha256};

use boxtdi::certify;
use boxtdi::instances;
use boxtdi::io as fmt_io;
use boxtdi::matprops;
use boxtdi::polyhedra::{v_to_h, HPolyhedron};
use boxtdi::Error;

#[derive(Parser)]
#[command(name = "boxtdi", version, about = "exact box-TDI / box-integrality certification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MatrixProperty {
    Unimodular,
    Equimodular,
    Tu,
    Tem,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PolyProperty {
    BoxTdi,
    BoxInteger,
    FullyBoxInteger,
    Profile,
    BoxProperty,
}

#[derive(Subcommand)]
enum Command {
    /// Check a matrix property (reads a matrix file or '-').
    Matcheck {
        #[arg(long, value_enum)]
        property: MatrixProperty,
        /// Criterion for equimodularity checks, 1-6.
        #[arg(long, default_value_t = 6)]
        route: u8,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Matrix file; '-' reads stdin.
        #[arg(default_value = "-")]
        file: String,
    },
    /// Check a polyhedron property (reads an H- or V-file or '-').
    Polycheck {
        #[arg(long, value_enum)]
        property: PolyProperty,
        /// Window radius for brute-force sweeps on unbounded input.
        #[arg(long, default_value_t = certify::DEFAULT_WINDOW_RADIUS)]
        window: i64,
        /// Sample count for the sampled box-property predicate.
        #[arg(long, default_value_t = certify::DEFAULT_BOX_PROPERTY_SAMPLES)]
        samples: usize,
        /// Dilation horizon for profiles.
        #[arg(long, default_value_t = 4)]
        kmax: u32,
        /// Run redundant per-face verifications and fail on mismatch.
        #[arg(long)]
        cross_check: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(default_value = "-")]
        file: String,
    },
    /// Emit a named instance (or a derived polyhedron) as an H-file.
    Gen {
        /// One of: q6, q7, p5, s3, s3-unfolded, s3-unfolded-alt,
        /// s3-unfolded-minus-z, k4-cons-cone, k4-circuit-cone,
        /// idp-simplex, triangle-fbi, triangle-nbi, stable-set,
        /// covering. The last two read FILE (a graph / clutter).
        name: String,
        /// Input file for stable-set / covering.
        #[arg(default_value = "-")]
        file: String,
        /// Output path; stdout when omitted.
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Dilation profile: minimal integer dilation and the box-integrality
    /// pattern of the first kmax multiples.
    Profile {
        #[arg(long, default_value_t = 4)]
        kmax: u32,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(default_value = "-")]
        file: String,
    },
    /// Extract and self-validate a fractional-vertex witness from a
    /// box-TDI refutation.
    Witness {
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(default_value = "-")]
        file: String,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return 64;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            64
        }
        Err(AppError::Unreadable(msg)) => {
            eprintln!("error: {msg}");
            66
        }
        Err(AppError::Domain(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::SearchBudgetExceeded(_) | Error::WitnessValidationFailed(_) => 70,
                _ => 65,
            }
        }
    }
}

enum AppError {
    Usage(String),
    Unreadable(String),
    Domain(Error),
}

impl From<Error> for AppError {
    fn from(e: Error) -> AppError {
        AppError::Domain(e)
    }
}

fn read_input(file: &str) -> Result<String, AppError> {
    if file == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| AppError::Unreadable(format!("stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(file).map_err(|e| AppError::Unreadable(format!("{file}: {e}")))
    }
}

fn digest(src: &str) -> String {
    let mut h = Sha256::new();
    h.update(src.as_bytes());
    format!("sha256:{:x}", h.finalize())
}

fn load_hpoly(src: &str) -> Result<HPolyhedron, AppError> {
    Ok(match fmt_io::parse_polyhedron_auto(src)? {
        fmt_io::PolyhedronInput::H(h) => h,
        fmt_io::PolyhedronInput::V(v) => v_to_h(&v),
    })
}

fn emit(report: Value, format: Format, exit_code: i32) -> i32 {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("json")),
        Format::Text => {
            let cert = &report["certificate"];
            let property = cert["property"].as_str().unwrap_or("report");
            let status = match exit_code {
                0 => "holds",
                1 => "refuted",
                2 => "indeterminate",
                _ => "error",
            };
            println!("{property}: {status}");
            for key in ["common_abs_det", "route", "window_limited", "sample_limited", "d", "trichotomy"] {
                if !cert[key].is_null() {
                    println!("{key}: {}", cert[key]);
                }
            }
            for key in ["refutation", "violation", "witness", "failure", "offending_rows"] {
                if !cert[key].is_null() {
                    println!("{key}: {}", cert[key]);
                }
            }
        }
    }
    exit_code
}

fn route_from_flag(route: u8) -> Result<matprops::EquimodularRoute, AppError> {
    use matprops::EquimodularRoute as R;
    Ok(match route {
        1 => R::ExhaustiveDets,
        2 => R::LatticeEquality,
        3 => R::InverseIntegral,
        4 => R::InverseZeroPmOne,
        5 => R::InverseTu,
        6 => R::FirstInverseTu,
        other => return Err(AppError::Usage(format!("no such route: {other}"))),
    })
}

fn dispatch(cli: Cli) -> Result<i32, AppError> {
    match cli.command {
        Command::Matcheck { property, route, format, file } => {
            let src = read_input(&file)?;
            let m = fmt_io::parse_matrix(&src)?;
            let (cert, holds) = match property {
                MatrixProperty::Unimodular => {
                    let v = matprops::is_unimodular(&m)?;
                    (serde_json::json!({ "property": "unimodular", "holds": v }), v)
                }
                MatrixProperty::Equimodular => {
                    let v = matprops::is_equimodular(&m, route_from_flag(route)?)?;
                    (fmt_io::equimodular_to_json(&v), v.is_equimodular)
                }
                MatrixProperty::Tu => {
                    let v = matprops::is_totally_unimodular(&m);
                    (fmt_io::tu_to_json(&v), v.is_tu)
                }
                MatrixProperty::Tem => {
                    let v = matprops::is_totally_equimodular(&m);
                    (fmt_io::tem_to_json(&v), v.is_totally_equimodular)
                }
            };
            let code = if holds { 0 } else { 1 };
            let report = fmt_io::run_report("matcheck", &[format!("{property:?}")], &digest(&src), code, cert);
            Ok(emit(report, format, code))
        }
        Command::Polycheck { property, window, samples, kmax, cross_check, format, file } => {
            let src = read_input(&file)?;
            let p = load_hpoly(&src)?;
            let (cert, code) = match property {
                PolyProperty::BoxTdi => {
                    let v = certify::is_box_tdi_opts(&p, cross_check)?;
                    (fmt_io::box_tdi_to_json(&v), if v.is_box_tdi { 0 } else { 1 })
                }
                PolyProperty::BoxInteger => {
                    let v = certify::is_box_integer_with_radius(&p, None, window)?;
                    let code = match (v.is_box_integer, v.window_limited) {
                        (false, _) => 1,
                        (true, false) => 0,
                        (true, true) => 2,
                    };
                    (fmt_io::box_integer_to_json(&v), code)
                }
                PolyProperty::FullyBoxInteger => {
                    let v = certify::is_fully_box_integer(&p)?;
                    (fmt_io::fully_box_integer_to_json(&v), if v.is_fully_box_integer { 0 } else { 1 })
                }
                PolyProperty::Profile => {
                    let v = certify::dilation_profile(&p, kmax)?;
                    let code = match v.trichotomy {
                        certify::Trichotomy::PrincipallyBoxInteger => 0,
                        _ => 1,
                    };
                    (fmt_io::profile_to_json(&v), code)
                }
                PolyProperty::BoxProperty => {
                    let v = certify::cone_box_property(&p, samples, window)?;
                    let code = match (v.has_box_property, v.sample_limited) {
                        (false, _) => 1,
                        (true, false) => 0,
                        (true, true) => 2,
                    };
                    (fmt_io::box_property_to_json(&v), code)
                }
            };
            let report =
                fmt_io::run_report("polycheck", &[format!("{property:?}")], &digest(&src), code, cert);
            Ok(emit(report, format, code))
        }
        Command::Gen { name, file, output } => {
            let text = generate(&name, &file)?;
            match output {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| AppError::Unreadable(format!("{path}: {e}")))?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Profile { kmax, format, file } => {
            let src = read_input(&file)?;
            let p = load_hpoly(&src)?;
            let v = certify::dilation_profile(&p, kmax)?;
            let code = match v.trichotomy {
                certify::Trichotomy::PrincipallyBoxInteger => 0,
                _ => 1,
            };
            let report =
                fmt_io::run_report("profile", &[format!("kmax={kmax}")], &digest(&src), code, fmt_io::profile_to_json(&v));
            Ok(emit(report, format, code))
        }
        Command::Witness { format, file } => {
            let src = read_input(&file)?;
            let p = load_hpoly(&src)?;
            let cert = certify::is_box_tdi(&p)?;
            let (body, code) = match &cert.refutation {
                None => (
                    serde_json::json!({
                        "property": "fractional-vertex-witness",
                        "applicable": false,
                        "box_tdi": true,
                    }),
                    0,
                ),
                Some(refutation) => {
                    let w = certify::extract_fractional_witness(&p, refutation)?;
                    (
                        serde_json::json!({
                            "property": "fractional-vertex-witness",
                            "applicable": true,
                            "box_tdi": false,
                            "refuting_face": {
                                "tight_rows": refutation.face.tight_rows,
                                "dim": refutation.face.dim,
                            },
                            "witness": fmt_io::fractional_vertex_to_json(&w),
                            "self_validated": true,
                        }),
                        1,
                    )
                }
            };
            let report = fmt_io::run_report("witness", &[], &digest(&src), code, body);
            Ok(emit(report, format, code))
        }
    }
}

fn generate(name: &str, file: &str) -> Result<String, AppError> {
    use instances::named;
    let gen_h = |p: &HPolyhedron| fmt_io::format_hpolyhedron(p);
    Ok(match name {
        "q6" => gen_h(&instances::covering_polyhedron(&instances::q6())),
        "q7" => gen_h(&instances::covering_polyhedron(&instances::q7())),
        "p5" => gen_h(&named::p5()),
        "s3" => gen_h(&instances::stable_set_polytope(&named::s3(), None)),
        "s3-unfolded" => gen_h(&instances::stable_set_polytope(&named::s3_unfolded(), None)),
        "s3-unfolded-alt" => {
            gen_h(&instances::stable_set_polytope(&named::s3_unfolded_alt(), None))
        }
        "s3-unfolded-minus-z" => {
            gen_h(&instances::stable_set_polytope(&named::s3_unfolded_minus_z(), None))
        }
        "k4-cons-cone" => gen_h(&instances::conservative_cone(&named::k4())),
        "k4-circuit-cone" => gen_h(&instances::circuit_cone(&named::k4()).1),
        "idp-simplex" => gen_h(&named::idp_simplex()),
        "triangle-fbi" => gen_h(&named::triangle_fully_box_integer()),
        "triangle-nbi" => gen_h(&named::triangle_not_box_integer()),
        "stable-set" => {
            let src = read_input(file)?;
            let g = fmt_io::parse_graph(&src)?;
            gen_h(&instances::stable_set_polytope(&g, None))
        }
        "covering" => {
            let src = read_input(file)?;
            let c = fmt_io::parse_clutter(&src)?;
            gen_h(&instances::covering_polyhedron(&c))
        }
        other => return Err(AppError::Usage(format!("no such instance: {other}"))),
    })
}
