use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};

use monster_core::bench;
use monster_core::golay;
use monster_core::mmrep::{MmVector, BLOCK_OFS, DIM};
use monster_core::modp::Modulus;
use monster_core::parker::theta;
use monster_core::qx::{OFS_C, OFS_T, OFS_X, N_SHORT};
use monster_core::verify::{self, Config};
use monster_core::word::{format_word, parse_word};

/// The 196884-dimensional representation of the Monster group mod 2^k - 1.
#[derive(Parser)]
#[command(name = "mm", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run an invariant suite: golay, cocycle, loop, autpl, qx, leech,
    /// rep-relations, rep-norm, xi or all.
    Verify {
        suite: String,
        /// Restrict the representation checks to one modulus.
        #[arg(long)]
        p: Option<u32>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Sample count for every randomized check; 0 runs only the
        /// exhaustive checks.
        #[arg(long)]
        samples: Option<u64>,
    },
    /// Apply a generator word to a vector file.
    Apply {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// For example "x1a3*t1*p[...]*l2"; empty for the identity.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
    },
    /// Time the generators for each modulus.
    Bench {
        #[arg(long)]
        p: Option<u32>,
        #[arg(long, default_value_t = 20)]
        reps: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Print tables: basis, cocycle, short-counts or layout.
    Info { topic: String },
}

fn moduli(p: Option<u32>) -> Result<Vec<Modulus>> {
    Ok(match p {
        Some(p) => vec![Modulus::new(p)?],
        None => Modulus::all().collect(),
    })
}

fn cmd_verify(suite: &str, p: Option<u32>, seed: u64, samples: Option<u64>) -> Result<bool> {
    let cfg = Config {
        moduli: moduli(p)?,
        seed,
        samples,
    };
    println!("verify {suite}: {}", verify::describe(&cfg));
    let reports = verify::run_named(suite, &cfg)?;
    let mut ok = true;
    for r in &reports {
        println!("{r}");
        ok &= r.passed();
    }
    if reports.len() > 1 {
        let failed: Vec<String> = reports.iter().filter(|r| !r.passed()).map(|r| r.suite.to_string()).collect();
        if failed.is_empty() {
            println!("all {} suites passed", reports.len());
        } else {
            println!("failed suites: {}", failed.join(", "));
        }
    }
    Ok(ok)
}

fn cmd_apply(input: &PathBuf, out: &PathBuf, word: &str) -> Result<()> {
    let word = parse_word(word).with_context(|| format!("bad word {word:?}"))?;
    let f = File::open(input).with_context(|| format!("cannot open {}", input.display()))?;
    let mut v = MmVector::read_from(BufReader::new(f)).with_context(|| format!("reading {}", input.display()))?;
    v.apply_word(&word);
    let f = File::create(out).with_context(|| format!("cannot create {}", out.display()))?;
    let mut w = BufWriter::new(f);
    v.write_to(&mut w)?;
    w.flush()?;
    Ok(())
}

fn cmd_bench(p: Option<u32>, reps: usize, seed: u64) -> Result<()> {
    println!("per-atom time in ms (mean / min over {reps} runs, one warm-up)");
    for m in moduli(p)? {
        let cols: Vec<String> = bench::atom_timings(m, seed, reps)
            .iter()
            .map(|(l, t)| format!("{l} {:.3}/{:.3}", t.mean_ms(), t.min_ms()))
            .collect();
        println!("p={:<3} {}", m.p(), cols.join("  "));
    }
    for m in moduli(p)? {
        let (w, t) = bench::word_timing(m, seed, reps);
        let atoms = w.len();
        println!(
            "p={:<3} G_x0 word times ξ power ({atoms} atoms, ends in {}): {:.3} ms mean, {:.3} ms min, {:.3} ms per atom",
            m.p(),
            w.last().map(|a| a.to_string()).unwrap_or_default(),
            t.mean_ms(),
            t.min_ms(),
            t.mean_ms() / atoms as f64
        );
        if p.is_some() {
            println!("      word: {}", shorten(&format_word(&w)));
        }
    }
    for m in moduli(p)? {
        if p.is_none() && m.p() != 3 && m.p() != 255 {
            continue;
        }
        let parts: Vec<String> = bench::breakdown(m, seed, reps)
            .iter()
            .map(|(l, t)| format!("{l} {:.3}", t.mean_ms()))
            .collect();
        println!("p={:<3} breakdown (ms): {}", m.p(), parts.join(", "));
    }
    let refs: Vec<String> = bench::REFERENCE_MS
        .iter()
        .map(|(p, ms)| format!("{ms} ms for p={p}"))
        .collect();
    println!("reference: one operation of the published implementation costs {}", refs.join(" and "));
    let m3 = Modulus::new(3)?;
    let (packed, reference) = bench::speedup(m3, seed, reps.clamp(1, 5));
    println!(
        "p=3   packed vs scalar reference on a word with every atom: {:.2} ms vs {:.2} ms ({:.1}x)",
        packed.mean_ms(),
        reference.mean_ms(),
        reference.mean_ms() / packed.mean_ms()
    );
    Ok(())
}

fn shorten(s: &str) -> String {
    if s.len() > 100 {
        format!("{}...", &s[..97])
    } else {
        s.to_string()
    }
}

fn cmd_info(topic: &str) -> Result<()> {
    use std::fmt::Write as _;
    let mut out = String::new();
    match topic {
        "basis" => {
            writeln!(out, "Golay code basis b_0..b_11 as MOG pictures (rows 0..3, columns 0..5)").expect("writing to a String");
            for (i, &b) in golay::basis().iter().enumerate() {
                let kind = if i < 6 { "grey" } else { "coloured" };
                writeln!(out, "b_{i} ({kind}, {b:#08x}):").expect("writing to a String");
                for line in golay::mog_picture(b).lines() {
                    writeln!(out, "  {line}").expect("writing to a String");
                }
            }
        }
        "cocycle" => {
            writeln!(out, "θ(b_i) in pairing coordinates; bit j is θ(b_i, b_j)").expect("writing to a String");
            for i in 0..12 {
                let t = theta(1 << i);
                writeln!(out, "θ(b_{i:<2}) = {t:#05x} = {t:012b}").expect("writing to a String");
            }
        }
        "short-counts" => {
            let (b, c, t, x) = (OFS_C, OFS_T - OFS_C, OFS_X - OFS_T, N_SHORT - OFS_X);
            writeln!(out, "{b} + {c} + {t} + {x} = {}", b + c + t + x).expect("writing to a String");
        }
        "layout" => {
            let names = ["A", "B", "C", "T", "X", "Z", "Y"];
            for (k, name) in names.iter().enumerate() {
                let (s, e) = (BLOCK_OFS[k], BLOCK_OFS[k + 1]);
                writeln!(out, "{name}: offset {s:>6}, size {:>5}", e - s).expect("writing to a String");
            }
            writeln!(out, "total {DIM}").expect("writing to a String");
        }
        other => bail!("unknown topic {other:?}; expected basis, cocycle, short-counts or layout"),
    }
    // A closed pipe (as with `| head`) is not an error worth reporting.
    let _ = std::io::stdout().write_all(out.as_bytes());
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match &cli.cmd {
        Cmd::Verify { suite, p, seed, samples } => cmd_verify(suite, *p, *seed, *samples),
        Cmd::Apply { input, out, word } => cmd_apply(input, out, word).map(|_| true),
        Cmd::Bench { p, reps, seed } => cmd_bench(*p, *reps, *seed).map(|_| true),
        Cmd::Info { topic } => cmd_info(topic).map(|_| true),
    };
    match res {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
