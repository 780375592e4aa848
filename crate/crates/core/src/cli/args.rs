use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "fractau", version, about = "Test ideals and their constancy regions over F_p")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct RingArgs {
    /// Characteristic.
    #[arg(short = 'p', long = "prime")]
    pub p: u64,
    /// Comma-separated variable names.
    #[arg(long = "vars", value_delimiter = ',', required = true)]
    pub vars: Vec<String>,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[command(flatten)]
    pub ring: RingArgs,
    /// One ideal of the family, generators comma-separated. Repeat for each ideal.
    #[arg(long = "ideal", required = true, allow_hyphen_values = true)]
    pub ideals: Vec<String>,
}

#[derive(Debug, Args)]
pub struct TauArgs {
    /// Last Frobenius level of the stabilization loop.
    #[arg(long = "e-max", default_value_t = 8)]
    pub e_max: u32,
    /// Consecutive equal levels required.
    #[arg(long = "window", default_value_t = 2)]
    pub window: u32,
    /// Skip the degree bound check.
    #[arg(long = "no-degree-check")]
    pub no_degree_check: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bracket root h^[1/p^e].
    Root {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(short = 'e', default_value_t = 1)]
        e: u32,
    },
    /// Mixed test ideal at a point.
    Tau {
        #[command(flatten)]
        family: FamilyArgs,
        /// Exponent vector, e.g. 1/3,2/3.
        #[arg(short = 'c')]
        c: String,
        #[command(flatten)]
        tau: TauArgs,
    },
    /// Raster of test ideals over a box.
    Raster {
        #[command(flatten)]
        family: FamilyArgs,
        /// Box side lengths, e.g. 1,1.
        #[arg(long = "box")]
        bx: String,
        #[arg(short = 'k')]
        k: u32,
        #[arg(long = "ppm")]
        ppm: Option<PathBuf>,
        #[arg(long = "csv")]
        csv: Option<PathBuf>,
        #[arg(long = "legend")]
        legend: Option<PathBuf>,
        #[command(flatten)]
        tau: TauArgs,
    },
    /// F-threshold sequence V_e / p^e along a direction.
    Threshold {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short = 'r', value_delimiter = ',')]
        r: Vec<u64>,
        /// Target ideal, generators comma-separated.
        #[arg(short = 'I')]
        target: String,
        /// Highest level.
        #[arg(short = 'e', default_value_t = 3)]
        e: u32,
    },
    /// Changes of the test ideal along a direction.
    Jump {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short = 'r', value_delimiter = ',')]
        r: Vec<u64>,
        #[arg(short = 'k')]
        k: u32,
        #[arg(long = "bound")]
        bound: String,
        #[command(flatten)]
        tau: TauArgs,
    },
    /// Check the fractal identity for characteristic functions.
    FractalCheck {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short = 'I')]
        target: String,
        #[arg(short = 'e')]
        e: u32,
        #[arg(short = 'b', value_delimiter = ',')]
        b: Vec<u64>,
        #[arg(long = "box")]
        bx: String,
        #[arg(short = 'k')]
        k: u32,
        #[command(flatten)]
        tau: TauArgs,
    },
    /// Boundary points of the F_3 staircase example.
    Staircase {
        #[arg(long = "depth")]
        depth: u32,
    },
    /// Distinct rescaled translates of a characteristic function.
    Census {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(short = 'I')]
        target: String,
        #[arg(long = "box")]
        bx: String,
        #[arg(short = 'e')]
        e: u32,
        #[command(flatten)]
        tau: TauArgs,
    },
}

const LONG_NAMES: &[&str] = &[
    "vars", "ideal", "box", "depth", "bound", "ppm", "csv", "legend", "prime", "e-max", "window", "no-degree-check",
];

/// Accepts `-vars x,y` as well as `--vars x,y`.
pub fn normalize_args<I: IntoIterator<Item = OsString>>(args: I) -> Vec<OsString> {
    args.into_iter()
        .map(|a| {
            let Some(s) = a.to_str() else { return a };
            if let Some(rest) = s.strip_prefix('-').filter(|r| !r.starts_with('-')) {
                let name = rest.split('=').next().unwrap_or(rest);
                if LONG_NAMES.contains(&name) {
                    return OsString::from(format!("-{s}"));
                }
            }
            a
        })
        .collect()
}
