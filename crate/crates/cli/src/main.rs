use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use tournament_core::enumeration::{verify_all, MAX_ENUMERATION_PAIRS};
use tournament_core::flip::RandomFlips;
use tournament_core::tournament::pair_count;
use tournament_core::{
    analyze_report, parse_trn, random_tournament, rotational_tournament, transitive_tournament,
    triads, verify_property, write_trn, FlipReport, IncrementalTracker, Property, SampleSpec,
    Sweep, Tournament, VerificationReport,
};

#[derive(Parser)]
#[command(
    name = "tourney",
    version,
    about = "Analyze tournaments: directionality, cyclic triads, edge flips"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a tournament in TRN format.
    Gen {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        /// Required for --kind random.
        #[arg(long)]
        seed: Option<u64>,
        /// Output file; standard output when omitted.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Degrees, directionality and cyclic triad counts of a TRN file ("-" reads stdin).
    Analyze {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Predict, and unless --predict-only perform, the reversal of edge V-W.
    Flip {
        file: PathBuf,
        v: usize,
        w: usize,
        #[arg(long)]
        predict_only: bool,
        #[arg(long)]
        json: bool,
    },
    /// Check identities exhaustively or on seeded random samples.
    Verify {
        #[arg(long = "prop", value_parser = parse_prop_choice)]
        prop: PropChoice,
        #[arg(long = "max-n", default_value_t = 6)]
        max_n: usize,
        /// N,COUNT,SEED: check COUNT random tournaments on N vertices instead.
        #[arg(long, value_parser = parse_sample)]
        sample: Option<SampleSpec>,
        #[arg(long)]
        json: bool,
    },
    /// Time tracked flips against full recomputation.
    Bench {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        flips: u64,
        #[arg(long)]
        seed: u64,
        /// Flips replayed with full recomputation (it is O(n²) per step).
        #[arg(long, default_value_t = 10_000)]
        recompute_limit: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Transitive,
    Regular,
    Random,
}

#[derive(Clone, Copy)]
enum PropChoice {
    One(Property),
    All,
}

fn parse_prop_choice(s: &str) -> Result<PropChoice, String> {
    if s.eq_ignore_ascii_case("all") {
        return Ok(PropChoice::All);
    }
    s.parse().map(PropChoice::One).map_err(|e| e.to_string())
}

fn parse_sample(s: &str) -> Result<SampleSpec, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let [n, count, seed] = parts.as_slice() else {
        return Err(format!("expected N,COUNT,SEED, got {s:?}"));
    };
    let field = |name: &str, v: &str| -> Result<u64, String> {
        v.parse()
            .map_err(|_| format!("{name} must be a nonnegative integer, got {v:?}"))
    };
    Ok(SampleSpec {
        n: field("N", n)? as usize,
        count: field("COUNT", count)?,
        seed: field("SEED", seed)?,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` means the command ran but found counterexamples.
fn run(command: Command) -> Result<bool> {
    match command {
        Command::Gen {
            kind,
            n,
            seed,
            output,
        } => {
            let t = match kind {
                Kind::Transitive => transitive_tournament(n),
                Kind::Regular => rotational_tournament(n)?,
                Kind::Random => {
                    let Some(seed) = seed else {
                        bail!("--kind random needs an explicit --seed");
                    };
                    random_tournament(n, seed)
                }
            };
            let text = write_trn(&t);
            match output {
                Some(path) => {
                    fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?
                }
                None => io::stdout().write_all(text.as_bytes())?,
            }
            Ok(true)
        }
        Command::Analyze { file, json } => {
            let t = read_tournament(&file)?;
            let report = analyze_report(&t);
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print_analysis(&report);
            }
            Ok(report.prop3_holds)
        }
        Command::Flip {
            file,
            v,
            w,
            predict_only,
            json,
        } => {
            let t = read_tournament(&file)?;
            let report = tournament_core::predict_flip(&t, v, w)?;
            let text = if json {
                serde_json::to_string_pretty(&report)?
            } else {
                format_flip(&report)
            };
            if predict_only {
                println!("{text}");
            } else {
                // stdout carries the flipped tournament
                eprintln!("{text}");
                let flipped = tournament_core::flip_edge(&t, v, w)?;
                io::stdout().write_all(write_trn(&flipped).as_bytes())?;
            }
            Ok(true)
        }
        Command::Verify {
            prop,
            max_n,
            sample,
            json,
        } => {
            let sweep = match sample {
                Some(spec) => Sweep::Sampled(spec),
                None => {
                    if pair_count(max_n) > MAX_ENUMERATION_PAIRS {
                        bail!("--max-n {max_n} is beyond exhaustive enumeration");
                    }
                    Sweep::Exhaustive { max_n }
                }
            };
            let reports = match prop {
                PropChoice::All => verify_all(&sweep)?,
                PropChoice::One(p) => vec![verify_property(p, &sweep)?],
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&reports)?);
            } else {
                for r in &reports {
                    print_verification(r);
                }
            }
            Ok(reports.iter().all(VerificationReport::verified))
        }
        Command::Bench {
            n,
            flips,
            seed,
            recompute_limit,
        } => bench(n, flips, seed, recompute_limit),
    }
}

fn read_tournament(path: &Path) -> Result<Tournament> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    parse_trn(&text).with_context(|| format!("parsing {}", path.display()))
}

fn print_analysis(r: &tournament_core::AnalysisReport) {
    println!("n             {}", r.n);
    println!("dr            {}", r.dr);
    println!("c3            {}", r.c3);
    println!("c3_fast       {}", r.c3_fast);
    println!("prop3_holds   {}", r.prop3_holds);
    println!("is_transitive {}", r.is_transitive);
    println!("is_regular    {}", r.is_regular);
    println!();
    println!("{:>6} {:>6} {:>6} {:>7}", "vertex", "in", "out", "signed");
    for v in 0..r.n {
        println!(
            "{:>6} {:>6} {:>6} {:>7}",
            v, r.in_degrees[v], r.out_degrees[v], r.signed_degrees[v]
        );
    }
}

fn format_flip(r: &FlipReport) -> String {
    format!(
        "v {}\nw {}\ncase {:?}\nk {}\ndr_delta {}\nc3_delta {}\nhypothesis_satisfied {}",
        r.v, r.w, r.case, r.k, r.dr_delta, r.c3_delta, r.hypothesis_satisfied
    )
}

fn print_verification(r: &VerificationReport) {
    println!("{r}");
    for c in r.counterexamples.iter().take(20) {
        println!(
            "  {:?} {:?} {}: expected {}, got {}",
            c.instance, c.detail, c.check, c.expected, c.actual
        );
    }
    if r.counterexamples.len() > 20 {
        println!("  ... {} more", r.counterexamples.len() - 20);
    }
}

fn bench(n: usize, flips: u64, seed: u64, recompute_limit: u64) -> Result<bool> {
    if n < 2 {
        bail!("--n must be at least 2 to flip an edge");
    }
    let start_tournament = random_tournament(n, seed);
    let flip_seed = seed.wrapping_add(1);

    let mut tracker = IncrementalTracker::new(start_tournament.clone());
    let started = Instant::now();
    for (v, w) in RandomFlips::new(n, flip_seed).take(flips as usize) {
        tracker.apply_flip(v, w)?;
    }
    let tracked = started.elapsed();

    let replay = flips.min(recompute_limit);
    let mut t = start_tournament;
    let mut checksum = 0u64;
    let started = Instant::now();
    for (v, w) in RandomFlips::new(n, flip_seed).take(replay as usize) {
        t = tournament_core::flip_edge(&t, v, w)?;
        checksum = checksum.wrapping_add(t.local_directionality() ^ triads::c3_fast(&t));
    }
    let recomputed = started.elapsed();

    let per_tracked = tracked.as_secs_f64() / flips.max(1) as f64;
    let per_recomputed = recomputed.as_secs_f64() / replay.max(1) as f64;
    println!("n                      {n}");
    println!("flips                  {flips}");
    println!("tracker total          {:.6} s", tracked.as_secs_f64());
    println!("tracker per flip       {:.1} ns", per_tracked * 1e9);
    println!("recompute flips timed  {replay}");
    println!("recompute per flip     {:.1} ns", per_recomputed * 1e9);
    println!(
        "recompute projected    {:.3} s for {flips} flips",
        per_recomputed * flips as f64
    );
    if per_tracked > 0.0 {
        println!(
            "speedup                {:.1}x",
            per_recomputed / per_tracked
        );
    }
    println!("final dr               {}", tracker.dr());
    println!("final c3               {}", tracker.c3());
    let consistent = tracker.is_consistent();
    println!("tracker consistent     {consistent}");
    std::hint::black_box(checksum);
    Ok(consistent)
}
