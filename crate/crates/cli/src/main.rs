mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use poset_trace::cone::Ring;
use poset_trace::gen::{random_point, random_small_poset, rng, DEFAULT_SEED, SEED_ENV};
use poset_trace::io::{
    certificate_json, classification_json, label_json, membership_json, parse_point, parse_poset, point_json, PosetFile,
};
use poset_trace::locus::{generate_poset, locus_dimension, radical_decomposition};
use poset_trace::oracle::{bounded_search_certificate, hilbert_function, lp_member, verify, Claim, SearchOutcome};
use poset_trace::trace::{classify, verify_certificate};
use poset_trace::{Analysis, LatticePoint, Poset};

use report::{digest, exit, Failure, Report};

#[derive(Parser)]
#[command(name = "poset-trace", version, about = "Trace ideals of Hibi rings and stable set rings of posets")]
struct Cli {
    /// Render the report as a two-column table instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    /// Seed for randomised commands.
    #[arg(long, global = true, env = SEED_ENV, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Cap on worker threads.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Add wall-clock time to the report (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum RingArg {
    Order,
    Chain,
}

impl From<RingArg> for Ring {
    fn from(r: RingArg) -> Ring {
        match r {
            RingArg::Order => Ring::Order,
            RingArg::Chain => Ring::Chain,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum RingsArg {
    Order,
    Chain,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Gorenstein, nearly Gorenstein and punctured Gorenstein properties.
    Classify { poset: PathBuf },
    /// Decide whether a point lies in the radical of the trace.
    Member {
        poset: PathBuf,
        point: PathBuf,
        #[arg(long, value_enum)]
        ring: RingArg,
        /// Also build and check a certificate for members.
        #[arg(long)]
        certificate: bool,
    },
    /// Dimension of the non-Gorenstein locus.
    Locus {
        poset: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        ring: RingsArg,
        /// List the primes over the trace.
        #[arg(long)]
        decompose: bool,
    },
    /// Build a poset with a given ring dimension and locus dimension.
    Generate {
        #[arg(long)]
        ring_dim: usize,
        #[arg(long)]
        locus_dim: usize,
        /// Write the poset file here.
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
    /// Independent checks that do not use the combinatorial criteria.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Membership by exact linear feasibility.
    LpMember {
        poset: PathBuf,
        point: PathBuf,
        #[arg(long, value_enum)]
        ring: RingArg,
    },
    /// Exhaustive search for a small certificate.
    Search(SearchArgs),
    /// Lattice-point counts of both cones up to a degree.
    Hilbert {
        poset: PathBuf,
        #[arg(long, default_value_t = 3)]
        dmax: i64,
    },
    /// Compare the combinatorial membership test with linear feasibility on
    /// seeded random posets and points.
    Check {
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[arg(long, default_value_t = 3)]
        degree: i64,
    },
}

#[derive(Args)]
struct SearchArgs {
    poset: PathBuf,
    point: PathBuf,
    #[arg(long, value_enum)]
    ring: RingArg,
    /// Largest multiplier tried.
    #[arg(long, default_value_t = 2)]
    n_max: i64,
    /// Half width of the box around the centre.
    #[arg(long, default_value_t = 1)]
    half_width: i64,
    /// Give up after this many milliseconds.
    #[arg(long)]
    timeout_ms: Option<u64>,
}

struct Input {
    bytes: Vec<Vec<u8>>,
    warnings: Vec<String>,
}

impl Input {
    fn new() -> Self {
        Input { bytes: Vec::new(), warnings: Vec::new() }
    }

    fn read(&mut self, path: &PathBuf) -> Result<String, Failure> {
        let shown = path.display().to_string();
        let bytes = std::fs::read(path).map_err(|e| Failure::io(&shown, e))?;
        let text = String::from_utf8(bytes.clone()).map_err(|_| Failure {
            code: exit::PARSE,
            kind: "parse",
            message: format!("{shown}: not UTF-8"),
        })?;
        self.bytes.push(bytes);
        Ok(text)
    }

    fn poset(&mut self, path: &PathBuf) -> Result<Poset, Failure> {
        let text = self.read(path)?;
        let (p, warnings) = parse_poset(&text)?;
        self.warnings.extend(warnings.iter().map(|w| w.to_string()));
        Ok(p)
    }

    fn point(&mut self, p: &Poset, path: &PathBuf) -> Result<LatticePoint, Failure> {
        let text = self.read(path)?;
        Ok(parse_point(p, &text)?)
    }

    fn digest(&self) -> String {
        let refs: Vec<&[u8]> = self.bytes.iter().map(Vec::as_slice).collect();
        digest(&refs)
    }
}

fn ring_name(r: Ring) -> &'static str {
    match r {
        Ring::Order => "order",
        Ring::Chain => "chain",
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let mut input = Input::new();
    let (command, result) = match &cli.command {
        Command::Classify { poset } => {
            let p = input.poset(poset)?;
            let c = classify(&p)?;
            (json!({"name": "classify"}), classification_json(&c))
        }
        Command::Member { poset, point, ring, certificate } => {
            let p = input.poset(poset)?;
            let x = input.point(&p, point)?;
            let ring = Ring::from(*ring);
            let m = Analysis::new(p.clone()).member(ring, &x, *certificate)?;
            if let Some(c) = m.certificate() {
                if !verify_certificate(&p, &x, c) {
                    return Err(Failure::invariant("constructed certificate does not verify"));
                }
            }
            let mut r = membership_json(&p, &m);
            r["point"] = point_json(&p, &x);
            r["ring"] = json!(ring_name(ring));
            (json!({"name": "member", "ring": ring_name(ring), "certificate": certificate}), r)
        }
        Command::Locus { poset, ring, decompose } => {
            let p = input.poset(poset)?;
            let a = Analysis::new(p.clone());
            let rings: &[Ring] = match ring {
                RingsArg::Order => &[Ring::Order],
                RingsArg::Chain => &[Ring::Chain],
                RingsArg::Both => &[Ring::Order, Ring::Chain],
            };
            let mut r = json!({});
            let mut dims = Vec::new();
            for &ring in rings {
                let dim = locus_dimension(&a, ring);
                dims.push(dim);
                let mut entry = json!({"dimension": dim});
                if *decompose {
                    let labels: Vec<Value> =
                        radical_decomposition(&a, ring).iter().map(|l| label_json(&p, l)).collect();
                    entry["primes"] = json!(labels);
                }
                r[ring_name(ring)] = entry;
            }
            if dims.windows(2).any(|w| w[0] != w[1]) {
                return Err(Failure::invariant(format!("locus dimensions differ between rings: {dims:?}")));
            }
            let which = match ring {
                RingsArg::Order => "order",
                RingsArg::Chain => "chain",
                RingsArg::Both => "both",
            };
            (json!({"name": "locus", "ring": which, "decompose": decompose}), r)
        }
        Command::Generate { ring_dim, locus_dim, output } => {
            let p = generate_poset(*ring_dim, *locus_dim)?;
            let a = Analysis::new(p.clone());
            let dims = [locus_dimension(&a, Ring::Order), locus_dimension(&a, Ring::Chain)];
            if p.len() + 1 != *ring_dim || dims.iter().any(|&d| d != *locus_dim as i64) {
                return Err(Failure::invariant(format!(
                    "generated poset has {} elements and locus dimensions {dims:?}",
                    p.len()
                )));
            }
            let file = PosetFile::from_poset(&p);
            if let Some(path) = output {
                let text = serde_json::to_string_pretty(&file).expect("poset file serialises") + "\n";
                std::fs::write(path, text).map_err(|e| Failure::io(&path.display().to_string(), e))?;
            }
            (
                json!({"name": "generate", "ring_dim": ring_dim, "locus_dim": locus_dim}),
                json!({"poset": file, "verified_locus_dimension": dims[0], "elements": p.len()}),
            )
        }
        Command::Oracle(OracleCommand::LpMember { poset, point, ring }) => {
            let p = input.poset(poset)?;
            let x = input.point(&p, point)?;
            let ring = Ring::from(*ring);
            let member = lp_member(&p, ring, &x)?;
            (json!({"name": "oracle lp-member", "ring": ring_name(ring)}), json!({"member": member}))
        }
        Command::Oracle(OracleCommand::Search(s)) => {
            let p = input.poset(&s.poset)?;
            let x = input.point(&p, &s.point)?;
            let ring = Ring::from(s.ring);
            let deadline = s.timeout_ms.map(|ms| Instant::now() + Duration::from_millis(ms));
            let outcome = bounded_search_certificate(&p, ring, &x, s.n_max, s.half_width, deadline)?;
            let r = match outcome {
                SearchOutcome::Found(c) => json!({"outcome": "found", "certificate": certificate_json(&p, &c)}),
                SearchOutcome::Exhausted => json!({"outcome": "exhausted"}),
                SearchOutcome::DeadlineReached => json!({"outcome": "deadline_reached"}),
            };
            (json!({"name": "oracle search", "ring": ring_name(ring), "n_max": s.n_max, "half_width": s.half_width}), r)
        }
        Command::Oracle(OracleCommand::Hilbert { poset, dmax }) => {
            let p = input.poset(poset)?;
            if *dmax < 0 {
                return Err(Failure::from(poset_trace::Error::OutOfRange("dmax must be nonnegative".into())));
            }
            let order = hilbert_function(&p, Ring::Order, *dmax);
            let chain = hilbert_function(&p, Ring::Chain, *dmax);
            if order != chain {
                return Err(Failure::invariant(format!("point counts differ: {order:?} vs {chain:?}")));
            }
            (json!({"name": "oracle hilbert", "dmax": dmax}), json!({"order": order, "chain": chain, "equal": true}))
        }
        Command::Oracle(OracleCommand::Check { trials, max_size, degree }) => {
            if *max_size == 0 || *degree < 0 {
                return Err(Failure::from(poset_trace::Error::OutOfRange(
                    "max-size must be positive and degree nonnegative".into(),
                )));
            }
            let mut r = rng(cli.seed);
            let cases: Vec<(Poset, Ring, LatticePoint)> = (0..*trials)
                .map(|i| {
                    let p = random_small_poset(&mut r, *max_size);
                    let ring = if i % 2 == 0 { Ring::Order } else { Ring::Chain };
                    let x = random_point(&mut r, &p, ring, *degree);
                    (p, ring, x)
                })
                .collect();
            let outcomes: Vec<poset_trace::Result<(bool, bool)>> = cases
                .par_iter()
                .map(|(p, ring, x)| {
                    let member = Analysis::new(p.clone()).member(*ring, x, false)?.is_member();
                    Ok((member, verify(p, &Claim::Membership { ring: *ring, point: x, member })?))
                })
                .collect();
            let mut members = 0;
            for (i, o) in outcomes.into_iter().enumerate() {
                let (member, agreed) = o?;
                if !agreed {
                    let (p, ring, x) = &cases[i];
                    return Err(Failure::invariant(format!(
                        "trial {i}: membership {member} refuted on {ring:?} {:?} at {:?}",
                        p.cover_names(),
                        x.named(p)
                    )));
                }
                members += member as usize;
            }
            (
                json!({"name": "oracle check", "trials": trials, "max_size": max_size, "degree": degree, "seed": cli.seed}),
                json!({"agreed": trials, "members": members, "non_members": trials - members}),
            )
        }
    };
    Ok(Report { command, input_digest: input.digest(), warnings: input.warnings, result, elapsed_ms: None })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        // fails only if a pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    let start = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            if cli.timing {
                report.elapsed_ms = Some(start.elapsed().as_millis());
            }
            let text = if cli.pretty {
                report.to_table()
            } else {
                serde_json::to_string_pretty(&report.to_json()).expect("report serialises") + "\n"
            };
            // a closed pipe downstream is not an error of ours
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::from(exit::OK as u8)
        }
        Err(f) => {
            eprintln!("{}", serde_json::to_string_pretty(&f.to_json()).expect("error serialises"));
            ExitCode::from(f.code as u8)
        }
    }
}
