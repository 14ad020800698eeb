//! `setpair`: verify, construct, translate and search set pair systems.
//!
//! Exit codes: 0 success (clean / holds / conclusive), 1 violations or a
//! failed check, 2 usage, parse or resource errors, 3 inconclusive search.

use std::collections::BTreeSet;
use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use setpair::biclique::{self, BicliquePartition};
use setpair::constructions;
use setpair::io::{partition_from_json, partition_to_json, system_from_json, system_to_json};
use setpair::lemmas::{self, ReductionSafety};
use setpair::search::{
    bound_audit, max_m, BoundCheck, BranchRule, SearchConfig, SearchOutcome, SearchStatus,
};
use setpair::system::{SetPairSystem, Side, VerifyMode};
use setpair::Rat;

const EXIT_OK: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "setpair",
    version,
    about = "Cross intersecting set pair systems: exact verification, constructions, \
             biclique translation and exhaustive search"
)]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Seed for randomized subcommands; echoed in their output.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Cross,
    #[value(name = "one-cross")]
    OneCross,
}

impl From<Mode> for VerifyMode {
    fn from(m: Mode) -> VerifyMode {
        match m {
            Mode::Cross => VerifyMode::Cross,
            Mode::OneCross => VerifyMode::OneCross,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BranchRuleArg {
    #[value(name = "smallest-edge")]
    SmallestEdge,
    #[value(name = "most-constrained")]
    MostConstrained,
}

#[derive(Subcommand)]
enum Command {
    /// Check the cross or 1-cross conditions of a system file.
    Verify {
        /// System file; "-" or omitted reads stdin.
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        mode: Mode,
    },
    /// Print Σ of a system as an exact fraction.
    Sigma {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Emit a canonical construction as a system file.
    Construct {
        #[command(subcommand)]
        what: ConstructCmd,
    },
    /// Search for 1-cross systems with capped set sizes.
    Search(SearchArgs),
    /// Biclique partitions of crown graphs and their translations.
    Biclique {
        #[command(subcommand)]
        what: BicliqueCmd,
    },
    /// Exact checks of the reduction, averaging and ratio lemmas.
    Lemma {
        #[command(subcommand)]
        what: LemmaCmd,
    },
    /// Σ bound audit against the theorem thresholds.
    Audit {
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ConstructCmd {
    /// All complementary pairs with |A| = a over a + b elements.
    Standard {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        /// Write here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// The two complementary 5-cycles.
    FiveCycle {
        /// Pad every pair to sizes a,b (e.g. --pad 3,3).
        #[arg(long, value_parser = parse_size_pair)]
        pad: Option<(usize, usize)>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct SearchArgs {
    /// Cap on every |A_i|.
    #[arg(long)]
    a: usize,
    /// Cap on every |B_i|.
    #[arg(long)]
    b: usize,
    /// Test one system size.
    #[arg(long, conflicts_with = "max_m")]
    m: Option<usize>,
    /// Ascend system sizes up to this cap and report the largest feasible.
    #[arg(long)]
    max_m: Option<usize>,
    /// Collect all witnesses up to isomorphism instead of the first.
    #[arg(long)]
    enumerate: bool,
    /// Backtracking node budget per top-level branch.
    #[arg(long)]
    node_limit: Option<u64>,
    /// Write witness files and a machine-readable certificate here.
    #[arg(long)]
    certificates: Option<PathBuf>,
    /// Worker threads; defaults to SETPAIR_THREADS or 1. Results are
    /// identical for every thread count.
    #[arg(long)]
    threads: Option<usize>,
    #[arg(long)]
    no_symmetry_breaking: bool,
    #[arg(long, value_enum, default_value_t = BranchRuleArg::SmallestEdge)]
    branch_rule: BranchRuleArg,
}

#[derive(Subcommand)]
enum BicliqueCmd {
    /// Verify a partition file against the crown graph.
    Check {
        /// Partition file; "-" or omitted reads stdin.
        #[arg(long)]
        partition: Option<PathBuf>,
        /// Cross-check against the m recorded in the file.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Translate a verified partition into its 1-cross system.
    ToSystem {
        #[arg(long)]
        partition: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Translate a normalized 1-cross system into a partition.
    FromSystem {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum LemmaCmd {
    /// Exhaustive binomial-ratio bound scan over 2 <= a, b <= max.
    Ratio {
        #[arg(long)]
        max: u64,
    },
    /// Averaging identity on one system, or on seeded random systems.
    Induction {
        #[arg(long, conflicts_with = "random")]
        input: Option<PathBuf>,
        #[arg(long, value_enum)]
        side: Option<SideArg>,
        /// Check this many generated systems on both sides instead of a file.
        #[arg(long)]
        random: Option<u64>,
    },
    /// Reduction safety of removing the given elements.
    Reduction {
        #[arg(long)]
        input: Option<PathBuf>,
        /// Comma-separated element labels; labels outside the ground set are
        /// ignored, as reduction itself ignores them.
        #[arg(long)]
        remove: String,
    },
}

fn parse_size_pair(text: &str) -> Result<(usize, usize), String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err("expected two comma-separated sizes, e.g. 3,3".to_owned());
    }
    let a = parts[0].trim().parse().map_err(|e| format!("bad size: {e}"))?;
    let b = parts[1].trim().parse().map_err(|e| format!("bad size: {e}"))?;
    Ok((a, b))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Verify { input, mode } => cmd_verify(cli.format, input, mode.into()),
        Command::Sigma { input } => cmd_sigma(cli.format, input),
        Command::Construct { what } => cmd_construct(what),
        Command::Search(args) => cmd_search(cli.format, args),
        Command::Biclique { what } => cmd_biclique(cli.format, what),
        Command::Lemma { what } => cmd_lemma(cli.format, cli.seed, what),
        Command::Audit { input } => cmd_audit(cli.format, input),
    }
}

fn read_input(path: &Option<PathBuf>) -> anyhow::Result<String> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))
        }
        _ => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .context("reading stdin")?;
            Ok(buf)
        }
    }
}

fn load_system(path: &Option<PathBuf>) -> anyhow::Result<SetPairSystem> {
    let text = read_input(path)?;
    system_from_json(&text).context("parsing system file")
}

fn load_partition(path: &Option<PathBuf>) -> anyhow::Result<BicliquePartition> {
    let text = read_input(path)?;
    partition_from_json(&text).context("parsing partition file")
}

/// Writes an artifact to the output path, or to stdout when none is given;
/// confirmations go to stderr so stdout stays pipeable.
fn emit_artifact(output: &Option<PathBuf>, text: &str, what: &str) -> anyhow::Result<()> {
    match output {
        Some(p) => {
            fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display()))?;
            eprintln!("wrote {what} to {}", p.display());
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn print_report(format: Format, human: &str, value: &Value) {
    match format {
        Format::Human => println!("{human}"),
        Format::Json => println!("{}", serde_json::to_string_pretty(value).expect("valid json")),
    }
}

fn rat_str(r: &Rat) -> String {
    format!("{r} (~{})", r.decimal_string(6))
}

fn cmd_verify(format: Format, input: Option<PathBuf>, mode: VerifyMode) -> anyhow::Result<u8> {
    let sys = load_system(&input)?;
    let report = sys.verify(mode);
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| {
            json!({
                "condition": v.kind.to_string(),
                "i": v.i,
                "j": v.j,
                "witnesses": v.witness.iter().map(|&e| sys.label(e)).collect::<Vec<_>>(),
            })
        })
        .collect();
    let value = json!({
        "mode": mode.to_string(),
        "pairs": sys.len(),
        "clean": report.is_clean(),
        "violations": violations,
    });
    let mut human = format!(
        "{} pairs, mode {}: {}",
        sys.len(),
        mode,
        if report.is_clean() { "clean" } else { "violations" }
    );
    for v in &report.violations {
        let witnesses: Vec<&str> = v.witness.iter().map(|&e| sys.label(e)).collect();
        human.push_str(&format!(
            "\n  {} at (i={}, j={}) witnesses {:?}",
            v.kind, v.i, v.j, witnesses
        ));
    }
    print_report(format, &human, &value);
    Ok(if report.is_clean() { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_sigma(format: Format, input: Option<PathBuf>) -> anyhow::Result<u8> {
    let sys = load_system(&input)?;
    let sigma = sys.sigma();
    let value = json!({
        "sigma": sigma.to_string(),
        "decimal": sigma.decimal_string(6),
        "pairs": sys.len(),
    });
    print_report(format, &format!("sigma = {}", rat_str(&sigma)), &value);
    Ok(EXIT_OK)
}

fn cmd_construct(what: ConstructCmd) -> anyhow::Result<u8> {
    match what {
        ConstructCmd::Standard { a, b, output } => {
            let sys = constructions::standard_example(a, b)?;
            emit_artifact(&output, &system_to_json(&sys), "system")?;
        }
        ConstructCmd::FiveCycle { pad, output } => {
            let mut sys = constructions::complementary_five_cycles();
            if let Some(target) = pad {
                sys = constructions::pad_to_sizes(&sys, &vec![target; sys.len()])?;
            }
            emit_artifact(&output, &system_to_json(&sys), "system")?;
        }
    }
    Ok(EXIT_OK)
}

fn search_config(args: &SearchArgs, m: usize) -> SearchConfig {
    let threads = args
        .threads
        .or_else(|| {
            std::env::var("SETPAIR_THREADS")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(1)
        .max(1);
    SearchConfig {
        a: args.a,
        b: args.b,
        m,
        node_limit: args.node_limit,
        enumerate_all: args.enumerate,
        symmetry_breaking: !args.no_symmetry_breaking,
        branch_rule: match args.branch_rule {
            BranchRuleArg::SmallestEdge => BranchRule::SmallestEdge,
            BranchRuleArg::MostConstrained => BranchRule::MostConstrained,
        },
        threads,
    }
}

fn config_json(cfg: &SearchConfig) -> Value {
    json!({
        "a": cfg.a,
        "b": cfg.b,
        "m": cfg.m,
        "node_limit": cfg.node_limit,
        "enumerate": cfg.enumerate_all,
        "symmetry_breaking": cfg.symmetry_breaking,
        "branch_rule": match cfg.branch_rule {
            BranchRule::SmallestEdge => "smallest-edge",
            BranchRule::MostConstrained => "most-constrained",
        },
        "threads": cfg.threads,
    })
}

fn outcome_json(outcome: &SearchOutcome) -> Value {
    json!({
        "status": outcome.status.as_str(),
        "witnesses": outcome
            .witnesses
            .iter()
            .map(|w| serde_json::from_str::<Value>(&system_to_json(w)).expect("valid json"))
            .collect::<Vec<_>>(),
        "stats": {
            "nodes": outcome.stats.nodes,
            "prunes_by_thickness": outcome.stats.prunes_by_thickness,
            "prunes_by_coverage": outcome.stats.prunes_by_coverage,
            "elapsed_ms": outcome.stats.elapsed.as_millis() as u64,
        },
    })
}

fn write_certificates(
    dir: &PathBuf,
    report: &Value,
    witnesses: &[SetPairSystem],
) -> anyhow::Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let cert = dir.join("certificate.json");
    fs::write(&cert, format!("{}\n", serde_json::to_string_pretty(report)?))
        .with_context(|| format!("writing {}", cert.display()))?;
    for (k, w) in witnesses.iter().enumerate() {
        let path = dir.join(format!("witness_{k}.json"));
        fs::write(&path, format!("{}\n", system_to_json(w)))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn cmd_search(format: Format, args: SearchArgs) -> anyhow::Result<u8> {
    if args.m.is_none() && args.max_m.is_none() {
        bail!("search needs either --m or --max-m");
    }

    if let Some(m) = args.m {
        let cfg = search_config(&args, m);
        let outcome = setpair::search::exists_system(&cfg);
        let mut value = outcome_json(&outcome);
        value["config"] = config_json(&cfg);
        let human = format!(
            "a={} b={} m={}: {} ({} witness(es), {} nodes, prunes {}/{})",
            cfg.a,
            cfg.b,
            m,
            outcome.status.as_str(),
            outcome.witnesses.len(),
            outcome.stats.nodes,
            outcome.stats.prunes_by_thickness,
            outcome.stats.prunes_by_coverage,
        );
        print_report(format, &human, &value);
        if let Some(dir) = &args.certificates {
            write_certificates(dir, &value, &outcome.witnesses)?;
        }
        return Ok(match outcome.status {
            SearchStatus::Inconclusive => EXIT_INCONCLUSIVE,
            _ => EXIT_OK,
        });
    }

    let cap = args.max_m.expect("checked above");
    let threads = search_config(&args, 1).threads;
    let report = max_m(args.a, args.b, cap, args.node_limit, threads);
    let levels: Vec<Value> = report
        .outcomes
        .iter()
        .map(|(m, o)| {
            json!({
                "m": m,
                "status": o.status.as_str(),
                "nodes": o.stats.nodes,
            })
        })
        .collect();
    let top_witnesses: Vec<SetPairSystem> = report
        .outcomes
        .iter()
        .rev()
        .find(|(_, o)| o.status == SearchStatus::WitnessFound)
        .map(|(_, o)| o.witnesses.clone())
        .unwrap_or_default();
    let value = json!({
        "a": args.a,
        "b": args.b,
        "m_cap": cap,
        "max_m": report.value,
        "conclusive": report.conclusive,
        "levels": levels,
        "witnesses": top_witnesses
            .iter()
            .map(|w| serde_json::from_str::<Value>(&system_to_json(w)).expect("valid json"))
            .collect::<Vec<_>>(),
    });
    let human = format!(
        "a={} b={}: max m = {}{} (searched up to {})",
        args.a,
        args.b,
        report.value,
        if report.conclusive { "" } else { " (lower bound only)" },
        cap,
    );
    print_report(format, &human, &value);
    if let Some(dir) = &args.certificates {
        write_certificates(dir, &value, &top_witnesses)?;
    }
    Ok(if report.conclusive { EXIT_OK } else { EXIT_INCONCLUSIVE })
}

fn cmd_biclique(format: Format, what: BicliqueCmd) -> anyhow::Result<u8> {
    match what {
        BicliqueCmd::Check { partition, m } => {
            let p = load_partition(&partition)?;
            if let Some(expected) = m {
                if expected != p.m {
                    bail!("--m {} does not match the file's m = {}", expected, p.m);
                }
            }
            let report = biclique::verify_partition(&p);
            let (tx, ty) = biclique::thickness(&p);
            let value = json!({
                "m": p.m,
                "bicliques": p.bicliques.len(),
                "edge_count": p.m * p.m.saturating_sub(1),
                "clean": report.is_clean(),
                "thickness_x": tx,
                "thickness_y": ty,
                "violations": report
                    .violations
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>(),
            });
            let mut human = format!(
                "partition of the crown graph on 2*{} vertices: {}",
                p.m,
                if report.is_clean() { "clean" } else { "violations" }
            );
            for v in &report.violations {
                human.push_str(&format!("\n  {v}"));
            }
            print_report(format, &human, &value);
            Ok(if report.is_clean() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        BicliqueCmd::ToSystem { partition, output } => {
            let p = load_partition(&partition)?;
            let sys = biclique::partition_to_system(&p)?;
            emit_artifact(&output, &system_to_json(&sys), "system")?;
            Ok(EXIT_OK)
        }
        BicliqueCmd::FromSystem { input, output } => {
            let sys = load_system(&input)?;
            let p = biclique::system_to_partition(&sys)?;
            emit_artifact(&output, &partition_to_json(&p), "partition")?;
            Ok(EXIT_OK)
        }
    }
}

fn cmd_lemma(format: Format, seed: Option<u64>, what: LemmaCmd) -> anyhow::Result<u8> {
    match what {
        LemmaCmd::Ratio { max } => {
            let report = lemmas::ratio_bound_scan(max)?;
            let value = json!({
                "n_max": report.n_max,
                "cells": report.cells,
                "max_ratio": report.max_ratio.to_string(),
                "argmax": [report.argmax.0, report.argmax.1],
                "max_ratio_off_corner": report.max_ratio_off_corner.as_ref().map(Rat::to_string),
                "argmax_off_corner": report.argmax_off_corner.map(|(a, b)| vec![a, b]),
                "third_bound_holds": report.third_bound_holds,
                "three_tenths_bound_holds": report.three_tenths_bound_holds,
            });
            let human = format!(
                "scanned {} cells up to {}: max ratio {} at ({}, {}); bounds 1/3 {}, 3/10 off-corner {}",
                report.cells,
                report.n_max,
                rat_str(&report.max_ratio),
                report.argmax.0,
                report.argmax.1,
                if report.third_bound_holds { "hold" } else { "FAIL" },
                if report.three_tenths_bound_holds { "hold" } else { "FAIL" },
            );
            print_report(format, &human, &value);
            Ok(if report.all_bounds_hold() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        LemmaCmd::Induction {
            input,
            side,
            random,
        } => {
            if let Some(cases) = random {
                return lemma_induction_random(format, seed, cases);
            }
            let side = match side {
                Some(SideArg::A) => Side::A,
                Some(SideArg::B) => Side::B,
                None => bail!("lemma induction needs --side A|B with --input"),
            };
            let sys = load_system(&input)?;
            let report = lemmas::induction_identity(&sys, side)?;
            let value = json!({
                "side": side.to_string(),
                "holds": report.holds,
                "lhs": report.lhs.to_string(),
                "rhs": report.rhs.to_string(),
                "max_vertex_value": report.max_vertex_value.to_string(),
                "vertices": report
                    .per_vertex
                    .iter()
                    .map(|(v, value)| json!({
                        "element": sys.label(*v),
                        "value": value.to_string(),
                    }))
                    .collect::<Vec<_>>(),
            });
            let human = format!(
                "identity on side {}: lhs {} = rhs {} -> {}",
                side,
                rat_str(&report.lhs),
                rat_str(&report.rhs),
                if report.holds { "holds" } else { "FAILS" },
            );
            print_report(format, &human, &value);
            Ok(if report.holds { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        LemmaCmd::Reduction { input, remove } => {
            let sys = load_system(&input)?;
            let mut removed = BTreeSet::new();
            let mut ignored = Vec::new();
            for label in remove.split(',').map(str::trim).filter(|l| !l.is_empty()) {
                match sys.element(label) {
                    Some(id) => {
                        removed.insert(id);
                    }
                    None => ignored.push(label.to_owned()),
                }
            }
            let safety = lemmas::reduction_is_safe(&sys, &removed);
            let witness = match &safety {
                ReductionSafety::Safe => None,
                ReductionSafety::Unsafe(w) => Some(json!({
                    "element": sys.label(w.element),
                    "i": w.i,
                    "j": w.j,
                })),
            };
            let value = json!({
                "removed": removed.iter().map(|&v| sys.label(v)).collect::<Vec<_>>(),
                "ignored": ignored,
                "safe": safety.is_safe(),
                "witness": witness,
            });
            let human = match &safety {
                ReductionSafety::Safe => "reduction is safe".to_owned(),
                ReductionSafety::Unsafe(w) => format!(
                    "reduction is unsafe: element {:?} lies in A_{} ∩ B_{}",
                    sys.label(w.element),
                    w.i,
                    w.j
                ),
            };
            print_report(format, &human, &value);
            Ok(if safety.is_safe() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
    }
}

fn lemma_induction_random(format: Format, seed: Option<u64>, cases: u64) -> anyhow::Result<u8> {
    use rand::SeedableRng;
    let seed = seed.unwrap_or(lemmas::DEFAULT_GENERATOR_SEED);
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0u64;
    for _ in 0..cases {
        let sys = lemmas::random_hypothesis_system(&mut rng);
        for side in [Side::A, Side::B] {
            let report = lemmas::induction_identity(&sys, side)?;
            if !report.holds {
                failures += 1;
            }
        }
    }
    let value = json!({
        "cases": cases,
        "sides": ["A", "B"],
        "seed": seed,
        "failures": failures,
        "holds": failures == 0,
    });
    let human = format!(
        "identity on {cases} random systems (seed {seed}), both sides: {}",
        if failures == 0 {
            "holds".to_owned()
        } else {
            format!("{failures} FAILURES")
        }
    );
    print_report(format, &human, &value);
    Ok(if failures == 0 { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn bound_check_json(check: &Option<BoundCheck>) -> Value {
    match check {
        None => Value::Null,
        Some(c) => json!({
            "bound": c.bound.to_string(),
            "holds": c.holds,
            "slack": c.slack.to_string(),
        }),
    }
}

fn cmd_audit(format: Format, input: Option<PathBuf>) -> anyhow::Result<u8> {
    let sys = load_system(&input)?;
    let audit = bound_audit(&sys);
    let value = json!({
        "sigma": audit.sigma.to_string(),
        "sigma_decimal": audit.sigma.decimal_string(6),
        "cross_clean": audit.cross_clean,
        "one_cross_clean": audit.one_cross_clean,
        "all_sizes_ge_2": audit.all_sizes_ge_2,
        "bollobas": bound_check_json(&audit.bollobas),
        "one_cross_bound": bound_check_json(&audit.one_cross_bound),
        "five_sixths_slack": audit.five_sixths_slack.as_ref().map(Rat::to_string),
        "hard_failure": audit.hard_failure,
    });
    let mut human = format!("sigma = {}", rat_str(&audit.sigma));
    match &audit.bollobas {
        Some(c) => human.push_str(&format!(
            "\nbound 1 (cross clean): {} slack {}",
            if c.holds { "holds," } else { "VIOLATED," },
            rat_str(&c.slack)
        )),
        None => human.push_str("\nbound 1: not applicable (system is not cross clean)"),
    }
    match &audit.one_cross_bound {
        Some(c) => human.push_str(&format!(
            "\nbound 29/30 (1-cross, sizes >= 2): {} slack {}",
            if c.holds { "holds," } else { "VIOLATED," },
            rat_str(&c.slack)
        )),
        None => human.push_str("\nbound 29/30: not applicable"),
    }
    if let Some(slack) = &audit.five_sixths_slack {
        human.push_str(&format!(
            "\nslack against the conjectural 5/6: {}",
            rat_str(slack)
        ));
    }
    if audit.hard_failure {
        human.push_str("\nHARD FAILURE: a theorem bound failed; this is an implementation bug");
    }
    print_report(format, &human, &value);
    Ok(if audit.hard_failure { EXIT_CHECK_FAILED } else { EXIT_OK })
}
