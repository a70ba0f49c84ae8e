//! `sca`: simulate, analyze and enumerate stranded cellular automata.

mod render;

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use sca_analysis::{
    analyze, find_period, infer_crossing_rule, infer_turning_rule, is_nested_under, NoRule,
};
use sca_core::{
    parse_generations, serialize_generations, CrossingRule, Generation, GenericRule, RuleOrder,
    TurningRule,
};
use sca_enumerate::classify::{classify_config, expected_table, match_table};
use sca_enumerate::{enumerate_pure, oracle_enumerate, OracleConfig, PureConfig};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "sca", version, about = "Stranded cellular automata toolkit")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Character order of rules given on the command line.
    #[arg(long, global = true, value_enum, default_value_t = Order::Canonical)]
    rule_order: Order,
    /// Worker threads for the search commands (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Order {
    /// Bit 0 first.
    Canonical,
    /// Bit 8 first.
    Reversed,
}

impl From<Order> for RuleOrder {
    fn from(o: Order) -> Self {
        match o {
            Order::Canonical => RuleOrder::Canonical,
            Order::Reversed => RuleOrder::Reversed,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Render {
    /// The pattern file format.
    Text,
    Ascii,
    Svg,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evolve a generation under concrete rules.
    Simulate {
        /// File holding the initial generation.
        #[arg(long)]
        init: PathBuf,
        #[arg(long)]
        turn: String,
        #[arg(long)]
        cross: String,
        /// Number of steps; the output has steps + 1 generations.
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value_t = Render::Text)]
        render: Render,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Infer generic turning and crossing rules of a pattern file.
    Infer {
        #[arg(long)]
        pattern: PathBuf,
    },
    /// Find the period of a run and report its glider properties.
    Analyze {
        #[arg(long)]
        init: PathBuf,
        #[arg(long)]
        turn: String,
        #[arg(long)]
        cross: String,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
    /// Classify all 1- or 2-stranded repeating patterns and compare with the
    /// built-in table.
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        strands: u8,
    },
    /// Enumerate descriptions of pure gliders on N strands.
    EnumeratePure {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        strands: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        budget_multiplier: u64,
    },
    /// Exhaustive search over small initial generations and all rules.
    Oracle {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        strands: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_width: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        budget: u64,
    },
}

/// A failed command: exit status and message for standard error.
struct Failure {
    code: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// Normal output plus the exit status it carries (1 for negative verdicts).
struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, code: 0 }
    }
}

fn read_generations(path: &Path) -> Result<Vec<Generation>, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    parse_generations(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn read_init(path: &Path) -> Result<Generation, Failure> {
    let mut gens = read_generations(path)?;
    if gens.len() != 1 {
        return Err(usage(format!(
            "{}: expected exactly one generation, found {}",
            path.display(),
            gens.len()
        )));
    }
    Ok(gens.remove(0))
}

fn rules(
    turn: &str,
    cross: &str,
    order: RuleOrder,
) -> Result<(TurningRule, CrossingRule), Failure> {
    let t = TurningRule::parse_with_order(turn, order)
        .map_err(|e| usage(format!("turning rule: {e}")))?;
    let c = CrossingRule::parse_with_order(cross, order)
        .map_err(|e| usage(format!("crossing rule: {e}")))?;
    Ok((t, c))
}

fn rule_text(r: &Result<GenericRule, NoRule>) -> String {
    match r {
        Ok(rule) => rule.to_string(),
        Err(e) => format!("none ({e})"),
    }
}

fn rule_json(r: &Result<GenericRule, NoRule>) -> serde_json::Value {
    match r {
        Ok(rule) => json!({ "rule": rule.to_string() }),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let order = RuleOrder::from(cli.rule_order);
    match &cli.command {
        Command::Simulate {
            init,
            turn,
            cross,
            steps,
            render,
            out,
        } => {
            let g = read_init(init)?;
            let (t, c) = rules(turn, cross, order)?;
            let gens = sca_core::generate(&g, t, c, steps + 1).into_generations();
            let text = match render {
                Render::Text => serialize_generations(&gens),
                Render::Ascii => render::ascii(&gens),
                Render::Svg => render::svg(&gens),
            };
            match out {
                Some(path) => {
                    fs::write(path, text)
                        .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
                    Ok(Output::ok(String::new()))
                }
                None => Ok(Output::ok(text)),
            }
        }
        Command::Infer { pattern } => {
            let gens = read_generations(pattern)?;
            if gens.is_empty() {
                return Err(usage(format!("{}: no generations", pattern.display())));
            }
            let t = infer_turning_rule(&gens);
            let c = infer_crossing_rule(&gens);
            let code = if t.is_ok() && c.is_ok() { 0 } else { 1 };
            let text = if cli.json {
                format!(
                    "{}\n",
                    json!({ "turning": rule_json(&t), "crossing": rule_json(&c) })
                )
            } else {
                format!("turning: {}\ncrossing: {}\n", rule_text(&t), rule_text(&c))
            };
            Ok(Output { text, code })
        }
        Command::Analyze {
            init,
            turn,
            cross,
            budget,
        } => {
            let g = read_init(init)?;
            let (t, c) = rules(turn, cross, order)?;
            let info = match find_period(&g, t, c, *budget) {
                Ok(info) => info,
                Err(e) => {
                    return Ok(Output {
                        text: format!("{e}\n"),
                        code: 1,
                    })
                }
            };
            let p = &info.period;
            let r = analyze(p);
            let (vn, vd) = r.speed.valuation();
            let nested = if r.is_glider {
                Some(is_nested_under(p))
            } else {
                None
            };
            let nested_text = match &nested {
                None => "n/a".to_string(),
                Some(Ok(rule)) => format!("yes, under {rule}"),
                Some(Err(e)) => format!("no ({e})"),
            };
            let pure_text = r.pure.map_or("n/a", yes_no);
            let chain_text = match &r.null_chain {
                None => "none".to_string(),
                Some((rot, cells)) => format!("from generation {rot}, cells {cells:?}"),
            };
            let text = if cli.json {
                let v = json!({
                    "preperiod": info.preperiod,
                    "period_length": p.len(),
                    "period": p.to_string(),
                    "speed": r.speed.to_string(),
                    "valuation": format!("{vn}/{vd}"),
                    "width": r.width,
                    "repeating": r.is_repeating,
                    "glider": r.is_glider,
                    "turning": rule_json(&r.turning),
                    "crossing": rule_json(&r.crossing),
                    "pure": r.pure,
                    "nested": nested.as_ref().map(|n| match n {
                        Ok(rule) => json!({ "rule": rule.to_string() }),
                        Err(e) => json!({ "error": e.to_string() }),
                    }),
                    "null_chain": r.null_chain.as_ref().map(|(rot, cells)| json!({
                        "generation": rot,
                        "cells": cells,
                    })),
                });
                format!("{v}\n")
            } else {
                let mut s = String::new();
                writeln!(s, "preperiod: {}", info.preperiod).unwrap();
                writeln!(s, "period length: {}", p.len()).unwrap();
                writeln!(s, "period: {p}").unwrap();
                writeln!(s, "speed: {} (valuation {vn}/{vd})", r.speed).unwrap();
                writeln!(s, "width: {}", r.width).unwrap();
                writeln!(s, "repeating: {}", yes_no(r.is_repeating)).unwrap();
                writeln!(s, "glider: {}", yes_no(r.is_glider)).unwrap();
                writeln!(s, "turning: {}", rule_text(&r.turning)).unwrap();
                writeln!(s, "crossing: {}", rule_text(&r.crossing)).unwrap();
                writeln!(s, "pure: {pure_text}").unwrap();
                writeln!(s, "nested: {nested_text}").unwrap();
                writeln!(s, "null chain: {chain_text}").unwrap();
                s
            };
            Ok(Output::ok(text))
        }
        Command::Classify { strands } => {
            let n = *strands as usize;
            let found = oracle_enumerate(&classify_config(n));
            let c = match_table(n, expected_table(n), &found.classes, found.stats);
            let code = if c.is_exact() { 0 } else { 1 };
            let text = if cli.json {
                let matched: Vec<_> = c
                    .matched
                    .iter()
                    .map(|m| {
                        json!({
                            "item": m.entry.item,
                            "period": m.class.period.to_string(),
                            "turning": m.class.turning.to_string(),
                            "crossing": m.class.crossing.to_string(),
                            "speed": m.class.speed.to_string(),
                        })
                    })
                    .collect();
                let mismatches: Vec<String> = c.mismatches.iter().map(|m| m.to_string()).collect();
                let v = json!({
                    "strands": n,
                    "expected": c.expected,
                    "found": c.found,
                    "matched": matched,
                    "mismatches": mismatches,
                });
                format!("{v}\n")
            } else {
                let mut s = String::new();
                for m in &c.matched {
                    writeln!(
                        s,
                        "item {:>2}: speed {:<6} turn {} cross {} period {}",
                        m.entry.item,
                        m.class.speed.to_string(),
                        m.class.turning,
                        m.class.crossing,
                        m.class.period
                    )
                    .unwrap();
                }
                for m in &c.mismatches {
                    writeln!(s, "{m}").unwrap();
                }
                write!(s, "{}/{} classes matched", c.matched.len(), c.expected).unwrap();
                if c.found != c.matched.len() {
                    write!(s, " ({} classes found)", c.found).unwrap();
                }
                s.push('\n');
                s
            };
            Ok(Output { text, code })
        }
        Command::EnumeratePure {
            strands,
            budget_multiplier,
        } => {
            let cfg = PureConfig {
                budget_multiplier: *budget_multiplier,
            };
            let run = enumerate_pure(*strands as usize, &cfg);
            let text = if cli.json {
                format!(
                    "{}\n",
                    serde_json::to_string(&run.summary()).expect("serializable")
                )
            } else {
                eprintln!(
                    "{}",
                    serde_json::to_string(&run.summary()).expect("serializable")
                );
                run.vset.iter().map(|d| format!("{d}\n")).collect()
            };
            Ok(Output::ok(text))
        }
        Command::Oracle {
            strands,
            max_width,
            budget,
        } => {
            let cfg = OracleConfig::new(*strands as usize, *max_width as usize, *budget as usize);
            let r = oracle_enumerate(&cfg);
            let text = if cli.json {
                let classes: Vec<_> = r
                    .classes
                    .iter()
                    .map(|c| {
                        json!({
                            "period": c.period.to_string(),
                            "turning": c.turning.to_string(),
                            "crossing": c.crossing.to_string(),
                            "speed": c.speed.to_string(),
                        })
                    })
                    .collect();
                let s = &r.stats;
                let v = json!({
                    "classes": classes,
                    "stats": {
                        "initial_generations": s.initial_generations,
                        "runs": s.runs,
                        "budget_exhausted": s.budget_exhausted,
                        "null_chain": s.null_chain,
                    },
                });
                format!("{v}\n")
            } else {
                eprintln!("{:?}", r.stats);
                r.classes
                    .iter()
                    .map(|c| {
                        format!(
                            "period={} ; turn={} ; cross={} ; speed={}\n",
                            c.period, c.turning, c.crossing, c.speed
                        )
                    })
                    .collect()
            };
            Ok(Output::ok(text))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be at least 1");
            return ExitCode::from(2);
        }
        // Only fails when a global pool already exists, which cannot happen here.
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .ok();
    }
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
