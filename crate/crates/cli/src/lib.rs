//! Command-line front end: every subcommand maps to one library operation and
//! returns a JSON document. Identical arguments give byte-identical output.

pub mod error;
pub mod json;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use flagcalc::census::{self, conic_census, max_disjoint_subset, reduce_mod_p};
use flagcalc::geometry::{contains_conic, j_pullback};
use flagcalc::invariants::{self, Hyperplane};
use flagcalc::linear_systems::{
    self, dimension_report, expected_dimension, h0_flag, h0_hirzebruch, random_general_conics, random_member,
    surface_family, HirzebruchSide, SingularLocus,
};
use flagcalc::ruled::{self, certificate_bound, smoothness_profile, twistor_circle_samples, twistor_ruled_surface, Param};
use flagcalc::rng::seeded;
use serde_json::{json, Value};

pub use error::CliError;

#[derive(Debug, Parser)]
#[command(name = "flagcalc", version, about = "Exact computations with surfaces and conics in the flag threefold")]
pub struct Cli {
    /// Write the JSON result to this file (atomically) instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    #[value(name = "flag")]
    Flag,
    #[value(name = "X")]
    X,
    #[value(name = "Y")]
    Y,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Bounds on disjoint conics and on (1,0) and (0,1) curves of a smooth surface.
    Bound {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
    /// Chern numbers, holomorphic Euler characteristic and adjunction data.
    Chern {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
    },
    /// Dimension of the space of sections of O(a,b) on the threefold or on a Hirzebruch surface.
    H0 {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, value_enum, default_value = "flag")]
        side: Side,
    },
    /// Triple product of hyperplane classes, e.g. `--classes H1,H2,H1`.
    Chow {
        #[arg(long)]
        classes: String,
    },
    /// Basis of the surfaces of bidegree (a,b) through given or random conics, and one member.
    MkSurface {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long, conflicts_with = "random")]
        conics: Option<PathBuf>,
        /// Number of random general conics to prescribe.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Whether a surface contains a conic.
    CheckConic {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long)]
        conic: PathBuf,
    },
    /// Surface swept by the twistor fibers over a real rational curve, with its containment certificate.
    MkRuled {
        #[arg(long)]
        forms: PathBuf,
        /// Number of ruling fibers to emit and to search for singular points.
        #[arg(long, default_value_t = 3)]
        samples: usize,
        /// Skip the check that f.f has no real zero.
        #[arg(long)]
        no_positivity: bool,
    },
    /// All smooth conics over F_p on the reduction of a surface.
    Census {
        #[arg(long)]
        surface: PathBuf,
        #[arg(long)]
        prime: u64,
        /// Largest census for which the disjoint-subset search is exact.
        #[arg(long, default_value_t = census::EXACT_LIMIT)]
        limit: usize,
    },
    /// Observed against expected dimension through random general conics.
    DimReport {
        #[arg(long)]
        a: i64,
        #[arg(long)]
        b: i64,
        #[arg(long)]
        x: usize,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_owned(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.to_owned(), source })
}

fn param(p: &Param) -> Value {
    json!({ "s": json::scalar(&p.s), "t": json::scalar(&p.t) })
}

pub fn run(command: &Command) -> Result<Value, CliError> {
    match command {
        Command::Bound { a, b } => {
            let conic = invariants::miyaoka_conic_bound(*a, *b)?;
            let r10 = invariants::ruling_curve_bound(*a, *b)?;
            let r01 = invariants::ruling_curve_bound(*b, *a)?;
            Ok(json!({
                "conic_bound": json::rational(&conic.value),
                "conic_bound_floor": conic.floor.to_string().parse::<Value>().expect("integer"),
                "ruling_10_bound": json::rational(&r10.value),
                "ruling_10_bound_floor": r10.floor.to_string().parse::<Value>().expect("integer"),
                "ruling_01_bound": json::rational(&r01.value),
                "ruling_01_bound_floor": r01.floor.to_string().parse::<Value>().expect("integer"),
                "a": a,
                "b": b,
            }))
        }
        Command::Chern { a, b } => {
            if *a < 0 || *b < 0 {
                return Err(flagcalc::Error::NegativeDegree.into());
            }
            let r = invariants::surface_invariant_report(*a, *b);
            Ok(json!({
                "a": r.a,
                "b": r.b,
                "c1_squared": r.c1_squared,
                "c2": r.c2,
                "chi": r.chi,
                "canonical_bidegree": [r.canonical_bidegree.0, r.canonical_bidegree.1],
                "conic_self_intersection": r.conic_self_intersection,
                "curve_10_self_intersection": r.curve_10_self_intersection,
                "curve_01_self_intersection": r.curve_01_self_intersection,
                "general_type": r.general_type,
            }))
        }
        Command::H0 { a, b, side } => {
            let (name, h0) = match side {
                Side::Flag => ("flag", h0_flag(*a, *b)?),
                Side::X => ("X", h0_hirzebruch(HirzebruchSide::X, *a, *b)?),
                Side::Y => ("Y", h0_hirzebruch(HirzebruchSide::Y, *a, *b)?),
            };
            Ok(json!({ "side": name, "a": a, "b": b, "h0": h0 }))
        }
        Command::Chow { classes } => {
            let parsed: Vec<Hyperplane> =
                classes.split(',').map(|c| c.parse::<Hyperplane>().map_err(CliError::Usage)).collect::<Result<_, _>>()?;
            let [x, y, z] = parsed[..] else {
                return Err(CliError::Usage(format!("expected three classes, got {}", parsed.len())));
            };
            let names: Vec<&str> = parsed.iter().map(|h| if *h == Hyperplane::H1 { "H1" } else { "H2" }).collect();
            Ok(json!({ "classes": names, "value": invariants::chow_triple(x, y, z) }))
        }
        Command::MkSurface { a, b, conics, random, seed } => {
            let mut rng = seeded(*seed);
            let prescribed = match (conics, random) {
                (Some(path), _) => json::parse_conics_document(&read_json(path)?)?,
                (None, Some(x)) => random_general_conics(*x, &mut rng)?,
                (None, None) => Vec::new(),
            };
            let family = surface_family(*a, *b, &prescribed)?;
            let member = random_member(&family, &mut rng)?;
            Ok(json!({
                "bidegree": [family.bidegree.0, family.bidegree.1],
                "seed": seed,
                "conics": prescribed.iter().map(json::conic).collect::<Vec<_>>(),
                "h0": h0_flag(*a, *b)?,
                "expected_dimension": expected_dimension(*a, *b, prescribed.len())?,
                "dimension": family.dimension(),
                "basis": family.basis.iter().map(json::biform).collect::<Vec<_>>(),
                "member": json::biform(&member),
            }))
        }
        Command::CheckConic { surface, conic } => {
            let f = json::parse_surface_document(&read_json(surface)?)?;
            let c = json::parse_conic_document(&read_json(conic)?)?;
            Ok(json!({ "contained": contains_conic(&f, &c)?, "twistor_fiber": c.is_twistor_fiber() }))
        }
        Command::MkRuled { forms, samples, no_positivity } => {
            let f = json::parse_forms_document(&read_json(forms)?)?;
            let spec = twistor_ruled_surface(f, !no_positivity)?;
            let a = spec.degree();
            let j_sign = if j_pullback(&spec.surface) == spec.surface { 1 } else { -1 };
            let fibers = twistor_circle_samples(&spec, *samples)?;
            let profile = smoothness_profile(&spec, *samples)?;
            let verdict = match profile.verdict {
                ruled::SmoothnessVerdict::SingularWitnessFound => "singular_witness_found",
                ruled::SmoothnessVerdict::Inconclusive => "inconclusive",
            };
            let profile_fibers: Vec<Value> = profile
                .fibers
                .iter()
                .map(|fs| {
                    let locus = match &fs.locus {
                        None => Value::Null,
                        Some(SingularLocus::WholeConic) => json!("whole_conic"),
                        Some(SingularLocus::Points { locus, points }) => json!({
                            "form": json::binary_form(locus),
                            "rational_points": points
                                .iter()
                                .map(|pt| json!({ "p": json::point(&pt.p), "l": json::point(&pt.l) }))
                                .collect::<Vec<_>>(),
                        }),
                    };
                    json!({ "param": param(&fs.param), "singular_locus": locus })
                })
                .collect();
            Ok(json!({
                "degree": a,
                "forms": spec.f.iter().map(json::binary_form).collect::<Vec<_>>(),
                "surface": json::biform(&spec.surface),
                "j_invariant": ruled::check_j_invariance(&spec)?,
                "j_sign": j_sign,
                "certificate": {
                    "degree_bound": certificate_bound(a),
                    "parameters": spec.witness_params.iter().map(|w| param(&w.param)).collect::<Vec<_>>(),
                    "passed": true,
                },
                "fibers": fibers.iter().map(json::conic).collect::<Vec<_>>(),
                "smoothness": { "verdict": verdict, "fibers": profile_fibers },
            }))
        }
        Command::Census { surface, prime, limit } => {
            let f = json::parse_surface_document(&read_json(surface)?)?;
            let s = reduce_mod_p(&f, *prime)?;
            let found = conic_census(&s)?;
            let disjoint = max_disjoint_subset(*prime, &found, *limit)?;
            Ok(json!({
                "prime": prime,
                "i_image": s.i_image,
                "evidence": "mod-p",
                "count": found.len(),
                "conics": found.iter().map(|c| json!({ "q": c.q, "m": c.m })).collect::<Vec<_>>(),
                "max_disjoint": { "size": disjoint.size, "exact": disjoint.exact },
            }))
        }
        Command::DimReport { a, b, x, trials, seed } => {
            let report = dimension_report(*a, *b, *x, *trials, *seed)?;
            Ok(json!({
                "a": a,
                "b": b,
                "x": x,
                "h0": h0_flag(*a, *b)?,
                "expected": expected_dimension(*a, *b, *x)?,
                "in_vanishing_range": linear_systems::in_vanishing_range(*a, *b, *x),
                "seed": seed,
                "trials": report
                    .iter()
                    .map(|t| json!({ "observed": t.observed, "defect": t.defect, "resamples": t.resamples }))
                    .collect::<Vec<_>>(),
            }))
        }
    }
}

/// Pretty-printed JSON with a trailing newline.
pub fn render(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}

/// Write through a temporary file in the same directory and rename over `path`.
pub fn write_atomically(path: &Path, contents: &str) -> Result<(), CliError> {
    let io = |source| CliError::Io { path: path.to_owned(), source };
    let name = path.file_name().ok_or_else(|| CliError::Usage(format!("{} is not a file path", path.display())))?;
    let tmp = path.with_file_name(format!(".{}.{}.tmp", name.to_string_lossy(), std::process::id()));
    fs::write(&tmp, contents).map_err(io)?;
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        io(e)
    })
}

/// Size the global worker pool from `FLAGCALC_THREADS` when set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("FLAGCALC_THREADS") else { return Ok(()) };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("FLAGCALC_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot size thread pool: {e}")))
}
