//! Batch command-line front end: classification, decomposition, census
//! reports, brute-force verification runs and inequality audits.
//!
//! Exit codes: 0 success (or admissible), 1 semantic negative (not a Sylow
//! number, verification failure, audit violations), 2 usage or domain
//! error, 3 I/O error. All output is deterministic.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sylow_core::catalog::{self, EntryOutcome};
use sylow_core::classifier::{self, AdmissibleValue, Decomposition, Witness};
use sylow_core::families::{self, ExceptionalCase};
use sylow_core::groupengine::DEFAULT_CLOSURE_CAP;

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_DOMAIN: u8 = 2;
const EXIT_IO: u8 = 3;

/// Environment variable overriding the group-construction cap.
const CAP_ENV: &str = "SYLOW_CENSUS_CAP";

#[derive(Parser)]
#[command(name = "sylow", version, about = "Sylow counts below p^2: census, witnesses, verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every admissible Sylow count below p^2 with its witnesses.
    Classify {
        /// The prime p.
        p: u64,
    },
    /// Decompose a candidate count n (congruent to 1 mod p, below p^2).
    Decompose {
        /// The candidate count.
        n: u64,
        /// The prime p.
        p: u64,
    },
    /// Census of admissible values for every prime up to a bound.
    Census {
        /// Largest prime to include.
        #[arg(long)]
        max: u64,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
        /// Write to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Rebuild every catalog group and verify its expected Sylow data.
    Verify {
        /// Catalog file overriding the embedded default.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Also verify the large groups (PSL3(4), PSL2(16)); cap overflows
        /// become failures.
        #[arg(long)]
        deep: bool,
    },
    /// Audit the inequality chains of the family-by-family analysis.
    Audit {
        /// Largest field size q to sweep.
        #[arg(long)]
        qmax: u64,
        /// Largest torus parameter e to sweep.
        #[arg(long)]
        emax: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Markdown,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                sylow_core::Error::Resource(_) => EXIT_IO,
                _ => EXIT_DOMAIN,
            })
        }
    }
}

fn run(command: Command) -> sylow_core::Result<u8> {
    match command {
        Command::Classify { p } => cmd_classify(p),
        Command::Decompose { n, p } => cmd_decompose(n, p),
        Command::Census { max, format, out } => cmd_census(max, format, out),
        Command::Verify { catalog, deep } => cmd_verify(catalog, deep),
        Command::Audit { qmax, emax } => cmd_audit(qmax, emax),
    }
}

fn cmd_classify(p: u64) -> sylow_core::Result<u8> {
    let values = classifier::admissible_sylow_numbers(p)?;
    println!("admissible Sylow {p}-counts below {p}^2 = {}:", p * p);
    for a in &values {
        let witnesses =
            a.witnesses.iter().map(|w| w.to_string()).collect::<Vec<_>>().join("; ");
        println!("{:>6}  r={:<4} {witnesses}", a.value, a.r_coefficient);
    }
    Ok(EXIT_OK)
}

fn cmd_decompose(n: u64, p: u64) -> sylow_core::Result<u8> {
    match classifier::decompose(n, p)? {
        Decomposition::Trivial => {
            println!("{n} is the trivial count: the Sylow {p}-subgroup is normal");
            Ok(EXIT_OK)
        }
        Decomposition::PrimePower { power, frobenius } => {
            println!(
                "{n} = {}^{} is a prime power; realized by the affine Frobenius group \
                 frobenius({}, {}, {}) of order {}",
                power.base,
                power.exponent,
                frobenius.p,
                frobenius.r,
                frobenius.t,
                frobenius.p * n
            );
            Ok(EXIT_OK)
        }
        Decomposition::Simple { cases } => {
            let described = cases
                .iter()
                .map(|c| format!("{c} ({})", slug(*c)))
                .collect::<Vec<_>>()
                .join(", ");
            println!("{n} is an exceptional simple-group count: {described}");
            Ok(EXIT_OK)
        }
        Decomposition::NotASylowNumber => {
            println!("{n} is never a Sylow {p}-number");
            Ok(EXIT_NEGATIVE)
        }
    }
}

fn slug(case: ExceptionalCase) -> &'static str {
    match case {
        ExceptionalCase::Psl2P(_) => "psl2_p",
        ExceptionalCase::Psl3Of3 => "psl3_3",
        ExceptionalCase::Psl2PMinus1(_) => "psl2_p_minus_1",
        ExceptionalCase::Psl2PPlus1(_) => "psl2_p_plus_1",
    }
}

fn witness_json(w: &Witness) -> serde_json::Value {
    match w {
        Witness::Trivial => serde_json::json!({ "kind": "trivial" }),
        Witness::PrimePower { power, frobenius } => serde_json::json!({
            "kind": "prime_power",
            "base": power.base,
            "exponent": power.exponent,
            "frobenius": { "p": frobenius.p, "r": frobenius.r, "t": frobenius.t },
        }),
        Witness::Simple { case, family } => serde_json::json!({
            "kind": "simple",
            "case": slug(*case),
            "family": family.to_string(),
        }),
    }
}

fn witness_csv(w: &Witness) -> (String, String) {
    match w {
        Witness::Trivial => ("trivial".into(), String::new()),
        Witness::PrimePower { power, frobenius } => (
            "prime_power".into(),
            format!(
                "base={};exponent={};frobenius={},{},{}",
                power.base, power.exponent, frobenius.p, frobenius.r, frobenius.t
            ),
        ),
        Witness::Simple { case, family } => {
            ("simple".into(), format!("case={};family={family}", slug(*case)))
        }
    }
}

fn census_json(rows: &[(u64, Vec<AdmissibleValue>)]) -> String {
    let primes: Vec<serde_json::Value> = rows
        .iter()
        .map(|(p, values)| {
            serde_json::json!({
                "p": p,
                "values": values.iter().map(|a| serde_json::json!({
                    "n": a.value,
                    "r": a.r_coefficient,
                    "witnesses": a.witnesses.iter().map(witness_json).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut text = serde_json::to_string_pretty(&serde_json::json!({ "primes": primes }))
        .expect("census serializes");
    text.push('\n');
    text
}

fn census_csv(rows: &[(u64, Vec<AdmissibleValue>)]) -> String {
    let mut out = String::from("p,n,r,witness_kind,witness_params\n");
    for (p, values) in rows {
        for a in values {
            for w in &a.witnesses {
                let (kind, params) = witness_csv(w);
                out.push_str(&format!("{p},{},{},{kind},{params}\n", a.value, a.r_coefficient));
            }
        }
    }
    out
}

fn census_markdown(rows: &[(u64, Vec<AdmissibleValue>)]) -> String {
    let mut out = String::from("| p | n | r | witnesses |\n|---|---|---|---|\n");
    for (p, values) in rows {
        for a in values {
            let witnesses =
                a.witnesses.iter().map(|w| w.to_string()).collect::<Vec<_>>().join("; ");
            out.push_str(&format!("| {p} | {} | {} | {witnesses} |\n", a.value, a.r_coefficient));
        }
    }
    out
}

fn cmd_census(max: u64, format: Format, out: Option<PathBuf>) -> sylow_core::Result<u8> {
    let rows = classifier::census(max)?;
    let text = match format {
        Format::Json => census_json(&rows),
        Format::Csv => census_csv(&rows),
        Format::Markdown => census_markdown(&rows),
    };
    match out {
        None => {
            print!("{text}");
            Ok(EXIT_OK)
        }
        Some(path) => match std::fs::File::create(&path).and_then(|mut f| f.write_all(text.as_bytes()))
        {
            Ok(()) => Ok(EXIT_OK),
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                Ok(EXIT_IO)
            }
        },
    }
}

fn construction_cap() -> usize {
    std::env::var(CAP_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_CLOSURE_CAP)
}

fn cmd_verify(catalog_path: Option<PathBuf>, deep: bool) -> sylow_core::Result<u8> {
    let mut entries = match catalog_path {
        None => catalog::default_catalog(),
        Some(path) => {
            let text = match std::fs::read_to_string(&path) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", path.display());
                    return Ok(EXIT_IO);
                }
            };
            catalog::parse_catalog(&text)?
        }
    };
    if deep {
        entries.extend(catalog::deep_catalog_extension());
    }
    let cap = construction_cap();
    let reports = catalog::verify_catalog(&entries, cap, deep);
    let mut failed = 0;
    for report in &reports {
        let status = match report.outcome {
            EntryOutcome::Pass => "PASS",
            EntryOutcome::Fail => "FAIL",
            EntryOutcome::Skipped => "SKIP",
        };
        println!("{status} {}", report.name);
        for check in &report.checks {
            let mark = if check.ok { "ok " } else { "MISMATCH" };
            println!("    {mark} {}: {}", check.label, check.detail);
        }
        if report.outcome == EntryOutcome::Fail {
            failed += 1;
        }
    }
    println!(
        "verified {} entries: {} failed, {} skipped",
        reports.len(),
        failed,
        reports.iter().filter(|r| r.outcome == EntryOutcome::Skipped).count()
    );
    Ok(if failed == 0 { EXIT_OK } else { EXIT_NEGATIVE })
}

fn cmd_audit(qmax: u64, emax: u64) -> sylow_core::Result<u8> {
    let report = families::proof_inequality_audit(qmax, emax)?;
    println!("inequality audit over 2 <= q <= {qmax}, parameters up to {emax}:");
    for chain in &report.chains {
        println!(
            "  [{:<16}] {:<28} points={:<6} violations={}",
            chain.family,
            chain.id,
            chain.points_checked,
            chain.violations.len()
        );
        for v in &chain.violations {
            println!("      {v}");
        }
    }
    println!(
        "checked {} chains at {} grid points: {} violations",
        report.chains.len(),
        report.total_points(),
        report.total_violations()
    );
    Ok(if report.total_violations() == 0 { EXIT_OK } else { EXIT_NEGATIVE })
}
