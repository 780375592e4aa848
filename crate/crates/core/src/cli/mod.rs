//! The `fractau` command line.
//!
//! Exit codes: 0 success, 1 usage, 2 parse or invalid input, 3 test ideal
//! chain did not stabilize, 4 resource limit, 5 other computation or I/O
//! failure, 6 the fractal identity check failed.

mod args;
mod output;

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::Parser;
use serde::Serialize;

pub use args::{normalize_args, Cli, Command};
pub use output::{csv, legend, palette_color, ppm, IdealJson, Legend, RingJson};

use crate::algebra::{parse_polynomial, IdealGens, Ring};
use crate::error::Error;
use crate::frobenius::{poly_bracket_root, FrobLevel};
use crate::groebner::buchberger;
use crate::region::{fractal_span_census, rasterize, staircase_boundary, FractalVerifier, ParamBox};
use crate::testideal::{
    f_threshold, format_rational, jumping_scan, parse_rational, tau_mixed_gb, IdealFamily, ParamPoint, TauConfig,
};
use args::{FamilyArgs, RingArgs, TauArgs};

pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_NOT_STABILIZED: i32 = 3;
pub const EXIT_RESOURCE: i32 = 4;
pub const EXIT_FAILURE: i32 = 5;
pub const EXIT_CHECK_FAILED: i32 = 6;

pub fn exit_code(e: &Error) -> i32 {
    match e.innermost() {
        Error::Syntax { .. }
        | Error::UnknownVariable { .. }
        | Error::ExponentOverflow
        | Error::InvalidRing(_)
        | Error::InvalidArgument(_) => EXIT_PARSE,
        Error::NotStabilized { .. } => EXIT_NOT_STABILIZED,
        Error::ResourceLimit(_) => EXIT_RESOURCE,
        _ => EXIT_FAILURE,
    }
}

enum Failure {
    Lib(Error),
    Io(String),
    CheckFailed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

/// Runs the command line on `args` (including the program name).
pub fn run<I: IntoIterator<Item = OsString>>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(normalize_args(args)) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
        Err(Failure::CheckFailed) => {
            let _ = writeln!(err, "fractal identity check failed");
            EXIT_CHECK_FAILED
        }
    }
}

fn ring_of(r: &RingArgs) -> Result<Ring, Error> {
    Ring::new(r.p, &r.vars)
}

fn family_of(f: &FamilyArgs) -> Result<IdealFamily, Error> {
    IdealFamily::parse(&ring_of(&f.ring)?, &f.ideals)
}

fn tau_config(t: &TauArgs) -> TauConfig {
    TauConfig {
        e_max: t.e_max,
        confirm_window: t.window,
        degree_check: !t.no_degree_check,
        ..TauConfig::default()
    }
}

fn emit<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    let s = serde_json::to_string(value).map_err(|e| Failure::Io(e.to_string()))?;
    writeln!(out, "{s}").map_err(|e| Failure::Io(e.to_string()))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct ThresholdJson {
    ring: RingJson,
    direction: Vec<u64>,
    sequence: Vec<String>,
    bounds: [String; 2],
}

#[derive(Serialize)]
struct JumpJson {
    interval: [String; 2],
    before: String,
    after: String,
}

#[derive(Serialize)]
struct JumpsJson {
    ring: RingJson,
    direction: Vec<u64>,
    level: u32,
    jumps: Vec<JumpJson>,
}

#[derive(Serialize)]
struct FractalJson {
    e: u32,
    b: Vec<u64>,
    samples: usize,
    agreements: usize,
    holds: bool,
}

#[derive(Serialize)]
struct CensusJson {
    sizes: Vec<usize>,
    fingerprints: Vec<String>,
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Root { ring, poly, e } => {
            let ring = ring_of(&ring)?;
            let h = parse_polynomial(&poly, &ring)?;
            let root = poly_bracket_root(&h, FrobLevel::new(ring.p(), e)?);
            emit(out, &IdealJson::from_gb(&buchberger(&root)?))
        }
        Command::Tau { family, c, tau } => {
            let fam = family_of(&family)?;
            let c = ParamPoint::parse(&c)?;
            let (_, gb) = tau_mixed_gb(&fam, &c, &tau_config(&tau))?;
            emit(out, &IdealJson::from_gb(&gb))
        }
        Command::Raster {
            family,
            bx,
            k,
            ppm: ppm_path,
            csv: csv_path,
            legend: legend_path,
            tau,
        } => {
            let fam = family_of(&family)?;
            let bx = ParamBox::parse(&bx)?;
            let raster = rasterize(&fam, &bx, k, &tau_config(&tau))?;
            if let Some(path) = ppm_path {
                let img = ppm(&raster)
                    .ok_or_else(|| Error::InvalidArgument("PPM output needs a one- or two-dimensional box".into()))?;
                write_file(&path, &img)?;
            }
            if let Some(path) = csv_path {
                write_file(&path, &csv(&raster))?;
            }
            let leg = legend(&raster);
            if let Some(path) = legend_path {
                let s = serde_json::to_string(&leg).map_err(|e| Failure::Io(e.to_string()))?;
                write_file(&path, &(s + "\n"))?;
            }
            emit(out, &leg)
        }
        Command::Threshold { family, r, target, e } => {
            let fam = family_of(&family)?;
            let i = IdealGens::parse(&target, fam.ring())?;
            let t = f_threshold(&fam, &r, &i, e)?;
            emit(
                out,
                &ThresholdJson {
                    ring: RingJson::new(fam.ring()),
                    direction: r,
                    sequence: t.terms.iter().map(format_rational).collect(),
                    bounds: [format_rational(&t.lower), format_rational(&t.upper)],
                },
            )
        }
        Command::Jump { family, r, k, bound, tau } => {
            let fam = family_of(&family)?;
            let bound = parse_rational(&bound)?;
            let jumps = jumping_scan(&fam, &r, k, &bound, &tau_config(&tau))?;
            emit(
                out,
                &JumpsJson {
                    ring: RingJson::new(fam.ring()),
                    direction: r,
                    level: k,
                    jumps: jumps
                        .iter()
                        .map(|j| JumpJson {
                            interval: [format_rational(&j.lo), format_rational(&j.hi)],
                            before: j.before.to_string(),
                            after: j.after.to_string(),
                        })
                        .collect(),
                },
            )
        }
        Command::FractalCheck {
            family,
            target,
            e,
            b,
            bx,
            k,
            tau,
        } => {
            let fam = family_of(&family)?;
            let i = IdealGens::parse(&target, fam.ring())?;
            let bx = ParamBox::parse(&bx)?;
            let l = fam.gen_counts();
            if b.len() == l.len() && b.iter().zip(l).any(|(&bi, &li)| bi + 1 < li) {
                return Err(Error::Precondition("shift below l - 1".into()).into());
            }
            let report = FractalVerifier::new(&fam, &i, e, &bx, k, &tau_config(&tau))?.check(&b)?;
            emit(
                out,
                &FractalJson {
                    e,
                    b,
                    samples: report.samples,
                    agreements: report.agreements,
                    holds: report.holds(),
                },
            )?;
            if report.holds() {
                Ok(())
            } else {
                Err(Failure::CheckFailed)
            }
        }
        Command::Staircase { depth } => {
            let points: Vec<Vec<String>> = staircase_boundary(depth).iter().map(|p| p.to_strings()).collect();
            emit(out, &points)
        }
        Command::Census {
            family,
            target,
            bx,
            e,
            tau,
        } => {
            let fam = family_of(&family)?;
            let i = IdealGens::parse(&target, fam.ring())?;
            let bx = ParamBox::parse(&bx)?;
            let census = fractal_span_census(&fam, &i, &bx, e, &tau_config(&tau))?;
            emit(
                out,
                &CensusJson {
                    sizes: census.sizes.clone(),
                    fingerprints: census.functions.iter().map(|g| g.fingerprint_hex()).collect(),
                },
            )
        }
    }
}
