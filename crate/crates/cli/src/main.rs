//! `braidknot`: braid closures, concordance invariants and the checks of the
//! knot-closure quasimorphism from the command line.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 usage or configuration
//! error, 3 braid parse or range error, 4 domain error (e.g. the closure is
//! not a knot), 5 an ω-signature could not be sign-certified, 6 the Alexander
//! polynomial vanishes at a requested ω, 7 I/O error.

mod config;
mod render;
mod svg;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use braidknot::concordance::{defect_element, g4_upper_from_witness, inequality_suite, psi, ProfileOptions};
use braidknot::harness::acceptance::{run_criterion, AcceptanceConfig, ACCEPTANCE_SEED, CRITERIA};
use braidknot::harness::{defect_sweep, family_scan, lipschitz_sweep, Cache, FamilySpec, Summary};
use braidknot::seifert::{lt_signature, OmegaPoint, DEFAULT_TOLERANCE};
use braidknot::braid::parse_braid;
use braidknot::{BraidWord, Error, FactorizationWitness, KnotRep, NormalCoordinates};
use clap::{Args, Parser, Subcommand, ValueEnum};

use render::Output;

#[derive(Parser, Debug)]
#[command(name = "braidknot", version, about = "Braid words, knot closures and concordance invariants")]
#[command(after_help = "Braid words are written `Bn: i1 i2 ...` (or `s1 s2^-1`). Put options before the word.")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Report signatures with the opposite global sign.
    #[arg(long, global = true)]
    paper_sign: bool,
    /// `key = value` configuration file; flags override it.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Relative eigenvalue threshold for ω-signatures.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    /// Primes p for the ω_p-signatures, comma-separated.
    #[arg(long, global = true, value_delimiter = ',', value_name = "P,...")]
    omega_primes: Option<Vec<u32>>,
    /// Directory of the invariant cache used by family scans.
    #[arg(long, global = true, env = "BRAIDKNOT_CACHE_DIR", value_name = "DIR")]
    cache_dir: Option<PathBuf>,
    /// Write the result here instead of standard output.
    #[arg(short, long, global = true, value_name = "FILE")]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariant profile of the closure of a braid (must be a knot).
    Invariants {
        /// Skip the Alexander polynomial.
        #[arg(long)]
        no_alexander: bool,
        /// Extra ω-signature at `-1`, `w<p>` or `theta=<radians>`; fails loudly if undefined.
        #[arg(long = "at", value_name = "OMEGA")]
        at: Vec<OmegaPoint>,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true, trailing_var_arg = true)]
        word: Vec<String>,
    },
    /// Ψ_n(α): the knot projection α·σ_(α) and its profile.
    Psi {
        #[arg(long)]
        no_alexander: bool,
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true, trailing_var_arg = true)]
        word: Vec<String>,
    },
    /// Ψ(α) + Ψ(β) − Ψ(αβ) and the inequality suite, for `A -- B`.
    Defect {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true, trailing_var_arg = true)]
        words: Vec<String>,
    },
    /// Scan a named or custom family over a range of powers.
    Family {
        /// gamma, notorious, s1s3, alpha, eta-<i>-<n>, or custom (with --base).
        name: String,
        #[arg(long, default_value_t = 1)]
        from: i64,
        #[arg(long, default_value_t = 20)]
        to: i64,
        /// Base braid of a custom family.
        #[arg(long, value_name = "WORD")]
        base: Option<String>,
        /// Braid conjugating the base to its inverse.
        #[arg(long, value_name = "WORD")]
        conjugator: Option<String>,
        /// Also draw signature and log₁₀ determinant against p.
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
        /// Ignore the cache directory.
        #[arg(long)]
        no_cache: bool,
    },
    /// Run the acceptance suite; nonzero exit on any failure.
    VerifyPaper {
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u32>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Defect or Lipschitz sweeps over many braids.
    Sweep {
        #[arg(value_enum)]
        kind: SweepKind,
        #[arg(short = 'n', long, default_value_t = 3)]
        strands: usize,
        #[arg(long)]
        max_len: Option<usize>,
        /// Lipschitz only.
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Normal coordinates of a braid (equal iff the braids are equal).
    NormalForm {
        #[arg(required = true, num_args = 1.., allow_hyphen_values = true, trailing_var_arg = true)]
        word: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SweepKind {
    Defect,
    Lipschitz,
}

/// Resolved settings: flags, then the config file, then defaults.
#[derive(Debug, Clone)]
pub struct Settings {
    pub format: Format,
    pub paper_sign: bool,
    pub tolerance: f64,
    pub omegas: Vec<OmegaPoint>,
    pub cache_dir: Option<PathBuf>,
    pub output: Option<PathBuf>,
}

/// Why the command stopped; each kind has its own exit code.
#[derive(Debug)]
enum Failure {
    Verification(String),
    Usage(String),
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Io(_) => 7,
            Failure::Lib(e) => match e {
                Error::Parse { .. } | Error::ParseRange { .. } | Error::GeneratorOutOfRange { .. } | Error::NoStrands => 3,
                Error::PrecisionFailure { .. } => 5,
                Error::DegenerateOmega { .. } => 6,
                Error::Io(_) => 7,
                _ => 4,
            },
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Verification(m) => write!(f, "verification failed: {m}"),
            Failure::Usage(m) => write!(f, "{m}"),
            Failure::Lib(e) => write!(f, "{e}"),
            Failure::Io(m) => write!(f, "{m}"),
        }
    }
}

fn settings(g: &Global) -> Result<Settings, Failure> {
    let file = match &g.config {
        Some(path) => config::load_config(path).map_err(Failure::Usage)?,
        None => config::FileConfig::default(),
    };
    let tolerance = g.tolerance.or(file.tolerance).unwrap_or(DEFAULT_TOLERANCE);
    if !(tolerance > 0.0 && tolerance < 1.0) {
        return Err(Failure::Usage(format!("tolerance must lie in (0, 1), got {tolerance}")));
    }
    let omegas = match g.omega_primes.clone().or(file.omega_primes) {
        Some(primes) => {
            let mut omegas = vec![OmegaPoint::minus_one()];
            for p in primes {
                omegas.push(OmegaPoint::prime(p).map_err(|e| Failure::Usage(e.to_string()))?);
            }
            omegas
        }
        None => ProfileOptions::default_omegas(),
    };
    Ok(Settings {
        format: g.format,
        paper_sign: g.paper_sign || file.paper_sign.unwrap_or(false),
        tolerance,
        omegas,
        cache_dir: g.cache_dir.clone().or(file.cache_dir),
        output: g.output.clone(),
    })
}

impl Settings {
    fn profile_options(&self, alexander: bool) -> ProfileOptions {
        ProfileOptions { omegas: self.omegas.clone(), tolerance: self.tolerance, alexander }
    }

    fn sign(&self, s: i64) -> i64 {
        if self.paper_sign { -s } else { s }
    }
}

fn parse_word(tokens: &[String]) -> Result<BraidWord, Failure> {
    Ok(parse_braid(&tokens.join(" "))?)
}

fn is_header(token: &str) -> bool {
    let t = token.strip_prefix(['B', 'b']).unwrap_or("");
    t.split_once(':').is_some_and(|(digits, _)| !digits.is_empty() && digits.bytes().all(|c| c.is_ascii_digit()))
}

/// Splits `A -- B` (or `A B` where `B` starts with its own `Bn:`) in two.
fn split_pair(tokens: &[String]) -> Result<(BraidWord, BraidWord), Failure> {
    let tokens: Vec<&String> = tokens.iter().filter(|t| t.as_str() != "--").collect();
    let starts: Vec<usize> = tokens.iter().enumerate().filter(|(_, t)| is_header(t)).map(|(i, _)| i).collect();
    if starts.len() != 2 || starts[0] != 0 {
        return Err(Failure::Usage("defect expects two braid words, e.g. `B3: 1 1 1 -- B3: -2`".into()));
    }
    let join = |s: &[&String]| s.iter().map(|t| t.as_str()).collect::<Vec<_>>().join(" ");
    let a = parse_braid(&join(&tokens[..starts[1]]))?;
    let b = parse_braid(&join(&tokens[starts[1]..]))?;
    Ok((a, b))
}

fn run(cli: Cli) -> Result<(), Failure> {
    let s = settings(&cli.global)?;
    let mut out = Output::new(&s);
    let outcome = dispatch(cli.command, &s, &mut out);
    out.finish().map_err(|e| Failure::Io(e.to_string()))?;
    outcome
}

fn dispatch(command: Command, s: &Settings, out: &mut Output) -> Result<(), Failure> {
    match command {
        Command::Invariants { no_alexander, at, word } => {
            let k = KnotRep::new(parse_word(&word)?)?;
            let mut profile = k.profile(&s.profile_options(!no_alexander))?;
            profile.add_upper_bound(witness_bound(k.braid())?);
            let mut extra = Vec::new();
            for w in at {
                extra.push((w, s.sign(lt_signature(&k.seifert(), w, s.tolerance)?)));
            }
            out.profile(k.braid(), None, &profile, &extra);
            precision_check(profile.precision_failures())
        }
        Command::Psi { no_alexander, word } => {
            let a = parse_word(&word)?;
            let k = psi(&a);
            let mut profile = k.profile(&s.profile_options(!no_alexander))?;
            profile.add_upper_bound(witness_bound(&a)?);
            out.profile(k.braid(), Some(&a), &profile, &[]);
            precision_check(profile.precision_failures())
        }
        Command::Defect { words } => {
            let (a, b) = split_pair(&words)?;
            let k = defect_element(&a, &b)?;
            let profile = k.profile(&s.profile_options(false))?;
            let suite = inequality_suite(&a, &b)?;
            let bound = 3 * a.strands() as u64 + 1;
            out.defect(&a, &b, &k, &profile, bound, &suite);
            if profile.g4_lower > bound || !suite.all_pass() {
                return Err(Failure::Verification(format!("defect bound 3n+1 = {bound} or an inequality is violated")));
            }
            precision_check(profile.precision_failures())
        }
        Command::Family { name, from, to, base, conjugator, svg, no_cache } => {
            let mut spec = match (name.as_str(), base) {
                (_, Some(text)) => FamilySpec::new(&name, parse_braid(&text)?, (from, to))?,
                ("custom", None) => return Err(Failure::Usage("family `custom` needs --base".into())),
                (_, None) => FamilySpec::named(&name, (from, to))?,
            };
            if let Some(text) = conjugator {
                spec.inverse_conjugator = Some(parse_braid(&text)?);
            }
            spec.options.tolerance = s.tolerance;
            if !spec.options.omegas.is_empty() {
                spec.options.omegas = s.omegas.clone();
            }
            let cache = match (&s.cache_dir, no_cache) {
                (Some(dir), false) => Some(Cache::open(dir)?),
                _ => None,
            };
            let rows = family_scan(&spec, cache.as_ref())?;
            let rows = render::signed_rows(rows, s.paper_sign);
            if let Some(path) = svg {
                let plot = render::family_svg(&spec, &rows);
                std::fs::write(&path, plot).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            }
            let summary = Summary::of(&rows);
            out.family(&spec, rows)?;
            if summary.errors > 0 {
                Err(Failure::Lib(Error::InvalidParameter(format!("{} rows could not be computed", summary.errors))))
            } else if summary.failed > 0 {
                Err(Failure::Verification(format!("{} of {} rows disagree with the reference", summary.failed, summary.rows)))
            } else {
                precision_check(summary.precision_failures)
            }
        }
        Command::VerifyPaper { only, seed } => {
            let cfg = AcceptanceConfig { tolerance: s.tolerance, seed: seed.unwrap_or(ACCEPTANCE_SEED) };
            let ids: Vec<u32> = if only.is_empty() { CRITERIA.iter().map(|c| c.0).collect() } else { only };
            let mut outcomes = Vec::new();
            for id in ids {
                let o = run_criterion(id, &cfg).ok_or_else(|| Failure::Usage(format!("no criterion {id}")))?;
                outcomes.push(o);
            }
            out.criteria(&outcomes)?;
            let failed: Vec<String> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id.to_string()).collect();
            if failed.is_empty() {
                Ok(())
            } else {
                Err(Failure::Verification(format!("criteria {} failed", failed.join(", "))))
            }
        }
        Command::Sweep { kind, strands, max_len, samples, seed } => match kind {
            SweepKind::Defect => {
                let r = defect_sweep(strands, max_len.unwrap_or(if strands <= 2 { 4 } else { 3 }))?;
                out.defect_sweep(&r)?;
                if r.violations.is_empty() {
                    Ok(())
                } else {
                    Err(Failure::Verification(format!("{} pairs exceed 3n+1", r.violations.len())))
                }
            }
            SweepKind::Lipschitz => {
                let r = lipschitz_sweep(strands, samples, max_len.unwrap_or(10), seed.unwrap_or(ACCEPTANCE_SEED))?;
                out.lipschitz_sweep(&r)?;
                if r.violations.is_empty() {
                    Ok(())
                } else {
                    Err(Failure::Verification(format!("{} samples violate the Lipschitz bound", r.violations.len())))
                }
            }
        },
        Command::NormalForm { word } => {
            let a = parse_word(&word)?;
            out.normal_form(&a, &NormalCoordinates::of(&a));
            Ok(())
        }
    }
}

/// `g₄(Ψ(a)) ≤ ⌈(ℓ(a) - c + 1)/2⌉` from the letter-by-letter witness.
fn witness_bound(a: &BraidWord) -> Result<u64, Failure> {
    Ok(g4_upper_from_witness(a, &FactorizationWitness::letter_by_letter(a))?)
}

fn precision_check(failures: usize) -> Result<(), Failure> {
    if failures == 0 {
        Ok(())
    } else {
        Err(Failure::Lib(Error::PrecisionFailure {
            omega: format!("{failures} point(s)"),
            magnitude: 0.0,
            threshold: 0.0,
        }))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let _ = std::io::stdout().flush();
            eprintln!("braidknot: {f}");
            ExitCode::from(f.code())
        }
    }
}
