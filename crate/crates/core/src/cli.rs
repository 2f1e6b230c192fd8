//! The `cmikit` command-line front end.
//!
//! Exit codes: 0 for an affirmative verdict (equivalent, implies, valid,
//! or plain success), 1 for a negative one, 2 for any error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::semantics::{
    cond_entropy, cond_mutual_info, entropy, is_valid, j_value, random_distribution,
    JointDistribution, MAX_RANDOM_VARIABLES,
};
use crate::{
    canonicalize, decompose_to_cis, equivalent, implies, parse_cmi, parse_distribution,
    witness_non_equivalence, witness_non_implication, Cmi, Error, IndexSet, Witness,
};

#[derive(Parser, Debug)]
#[command(name = "cmikit", version, about = "Reason about conditional mutual independence statements")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Seed for the random cross-check.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Cross-check a verdict against this many random distributions.
    #[arg(long, global = true, value_name = "N", alias = "samples")]
    verify: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the canonical form of a statement.
    Canon {
        #[command(flatten)]
        ground: Ground,
        statement: String,
    },
    /// Decide whether two statements are equivalent.
    Equiv(Pair),
    /// Decide whether the first statement implies the second.
    Implies(Pair),
    /// Print a distribution on which the first statement holds and the second fails.
    Witness(Pair),
    /// Decide whether a statement holds on a distribution file.
    Check {
        #[arg(long, value_name = "FILE")]
        dist: PathBuf,
        statement: String,
    },
    /// Print entropies, mutual informations and J values for a distribution.
    ///
    /// Terms: `1,2` for H(X1,X2); `1|3` for H(X1|X3); `1;2|3` for
    /// I(X1;X2|X3); `I(1;2;3|4)` for the J value of a statement.
    Entropy {
        #[arg(long, value_name = "FILE")]
        dist: PathBuf,
        #[arg(required = true, allow_hyphen_values = true)]
        terms: Vec<String>,
    },
    /// Split a statement into plain conditional independencies.
    Decompose {
        #[command(flatten)]
        ground: Ground,
        statement: String,
    },
}

#[derive(Args, Debug)]
struct Ground {
    /// Number of variables.
    #[arg(long = "n", value_name = "N")]
    n: usize,
}

#[derive(Args, Debug)]
struct Pair {
    #[command(flatten)]
    ground: Ground,
    first: String,
    second: String,
    /// Write the witness file here instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct Report {
    command: &'static str,
    verdict: Option<&'static str>,
    canonical: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    values: Option<Value>,
}

/// What a command produced, before formatting.
struct Outcome {
    report: Report,
    /// Lines for text mode.
    text: Vec<String>,
    /// Witness file contents, printed after the text in text mode.
    witness_file: Option<String>,
    code: i32,
}

/// Runs one invocation; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write, color: bool) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind::*;
            let code = match e.kind() {
                DisplayHelp | DisplayVersion => 0,
                _ => 2,
            };
            let rendered = if color { e.render().ansi().to_string() } else { e.render().to_string() };
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let written = if cli.json {
                serde_json::to_string_pretty(&outcome.report)
                    .map_err(std::io::Error::other)
                    .and_then(|s| writeln!(out, "{s}"))
            } else {
                write_text(out, &outcome, color)
            };
            match written {
                Ok(()) => outcome.code,
                Err(e) => {
                    let _ = writeln!(err, "error: {e}");
                    2
                }
            }
        }
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

fn write_text(out: &mut dyn Write, outcome: &Outcome, color: bool) -> std::io::Result<()> {
    for line in &outcome.text {
        writeln!(out, "{}", paint(line, color))?;
    }
    if let Some(file) = &outcome.witness_file {
        write!(out, "{file}")?;
    }
    Ok(())
}

const AFFIRMATIVE: [&str; 3] = ["EQUIVALENT", "IMPLIES", "VALID"];
const NEGATIVE: [&str; 3] = ["NOT EQUIVALENT", "DOES NOT IMPLY", "INVALID"];

fn paint(line: &str, color: bool) -> String {
    if !color {
        return line.to_string();
    }
    if NEGATIVE.contains(&line) {
        format!("\x1b[31m{line}\x1b[0m")
    } else if AFFIRMATIVE.contains(&line) {
        format!("\x1b[32m{line}\x1b[0m")
    } else {
        line.to_string()
    }
}

fn execute(cli: &Cli) -> Result<Outcome, String> {
    let fail = |e: Error| e.to_string();
    match &cli.command {
        Command::Canon { ground, statement } => {
            let k = statement_arg(statement, ground.n)?;
            let canonical = canonicalize(&k).to_string();
            Ok(Outcome {
                text: vec![canonical.clone()],
                report: report("canon", None, vec![canonical]),
                witness_file: None,
                code: 0,
            })
        }
        Command::Equiv(pair) | Command::Implies(pair) | Command::Witness(pair) => {
            let k = statement_arg(&pair.first, pair.ground.n)?;
            let k2 = statement_arg(&pair.second, pair.ground.n)?;
            let canonical = vec![canonicalize(&k).to_string(), canonicalize(&k2).to_string()];
            let (name, holds, yes, no) = match &cli.command {
                Command::Equiv(_) => ("equiv", equivalent(&k, &k2).map_err(fail)?, "EQUIVALENT", "NOT EQUIVALENT"),
                Command::Implies(_) => ("implies", implies(&k, &k2).map_err(fail)?, "IMPLIES", "DOES NOT IMPLY"),
                _ => ("witness", implies(&k, &k2).map_err(fail)?, "IMPLIES", "DOES NOT IMPLY"),
            };
            let verdict = if holds { yes } else { no };
            let mut outcome = Outcome {
                text: Vec::new(),
                report: report(name, Some(verdict), canonical),
                witness_file: None,
                code: if holds { 0 } else { 1 },
            };
            if name == "witness" {
                if holds {
                    outcome.text.push(format!("no witness: {k} implies {k2}"));
                    outcome.code = 1;
                    return Ok(outcome);
                }
                outcome.code = 0;
            } else {
                outcome.text.push(verdict.to_string());
            }
            if !holds {
                let w = if name == "equiv" {
                    witness_non_equivalence(&k, &k2)
                } else {
                    witness_non_implication(&k, &k2)
                }
                .map_err(fail)?;
                attach_witness(&mut outcome, &w, pair.out.as_ref())?;
            }
            if let Some(samples) = cli.verify {
                let summary = cross_check(&k, &k2, name == "equiv", holds, samples, cli.seed)?;
                outcome.text.push(format!(
                    "cross-check: {} random distributions, no contradiction",
                    summary.samples
                ));
                outcome.report.values = Some(json!(summary));
            }
            Ok(outcome)
        }
        Command::Check { dist, statement } => {
            let p = dist_arg(dist)?;
            let k = statement_arg(statement, p.n())?;
            let valid = is_valid(&p, &k);
            let verdict = if valid { "VALID" } else { "INVALID" };
            Ok(Outcome {
                text: vec![verdict.to_string()],
                report: report("check", Some(verdict), vec![canonicalize(&k).to_string()]),
                witness_file: None,
                code: if valid { 0 } else { 1 },
            })
        }
        Command::Entropy { dist, terms } => {
            let p = dist_arg(dist)?;
            let mut text = Vec::new();
            let mut values = Vec::new();
            for term in terms {
                let (label, value) = evaluate(&p, term)?;
                let value = if value.abs() < 1e-12 { 0.0 } else { value };
                text.push(format!("{label} = {value:.9}"));
                values.push(json!({ "term": label, "value": value }));
            }
            let mut report = report("entropy", None, Vec::new());
            report.values = Some(Value::Array(values));
            Ok(Outcome {
                text,
                report,
                witness_file: None,
                code: 0,
            })
        }
        Command::Decompose { ground, statement } => {
            let k = statement_arg(statement, ground.n)?;
            let parts: Vec<String> = decompose_to_cis(&k).iter().map(Cmi::to_string).collect();
            let mut report = report("decompose", None, vec![canonicalize(&k).to_string()]);
            report.values = Some(json!(parts));
            Ok(Outcome {
                text: parts,
                report,
                witness_file: None,
                code: 0,
            })
        }
    }
}

fn report(command: &'static str, verdict: Option<&'static str>, canonical: Vec<String>) -> Report {
    Report {
        command,
        verdict,
        canonical,
        witness: None,
        values: None,
    }
}

fn attach_witness(outcome: &mut Outcome, w: &Witness, out: Option<&PathBuf>) -> Result<(), String> {
    let file = w.to_file();
    outcome.report.witness = Some(json!({
        "template": w.template,
        "pivots": w.pivots,
        "direction": w.direction,
        "step": w.step,
        "premise": w.premise.to_string(),
        "conclusion": w.conclusion.to_string(),
        "distribution": file,
    }));
    match out {
        Some(path) => {
            std::fs::write(path, &file).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            outcome.text.push(format!("witness written to {}", path.display()));
        }
        None => outcome.witness_file = Some(file),
    }
    Ok(())
}

#[derive(Serialize)]
struct CrossCheck {
    samples: u64,
    seed: u64,
    /// Samples on which the first statement holds.
    first_valid: u64,
    /// Samples on which the second statement holds.
    second_valid: u64,
}

/// Samples random distributions and fails if any contradicts a positive
/// verdict. Negative verdicts are witnessed exactly, so they are not
/// checked here.
fn cross_check(
    k: &Cmi,
    k2: &Cmi,
    both_ways: bool,
    holds: bool,
    samples: u64,
    seed: u64,
) -> Result<CrossCheck, String> {
    let n = k.n();
    if n > MAX_RANDOM_VARIABLES {
        return Err(format!(
            "cross-checking supports at most {MAX_RANDOM_VARIABLES} variables"
        ));
    }
    let mut summary = CrossCheck {
        samples,
        seed,
        first_valid: 0,
        second_valid: 0,
    };
    for i in 0..samples {
        let p = random_distribution(n, &vec![2; n], seed.wrapping_add(i), 16).map_err(|e| e.to_string())?;
        let (a, b) = (is_valid(&p, k), is_valid(&p, k2));
        summary.first_valid += a as u64;
        summary.second_valid += b as u64;
        let contradicts = holds && ((a && !b) || (both_ways && b && !a));
        if contradicts {
            return Err(format!(
                "internal consistency failure: random distribution {} (seed {}) contradicts the verdict",
                i,
                seed.wrapping_add(i)
            ));
        }
    }
    Ok(summary)
}

fn statement_arg(text: &str, n: usize) -> Result<Cmi, String> {
    parse_cmi(text, n).map_err(|e| format!("in statement '{text}': {e}"))
}

fn dist_arg(path: &PathBuf) -> Result<JointDistribution, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    parse_distribution(&text).map_err(|e| format!("in {}: {e}", path.display()))
}

/// Evaluates one `entropy` term; returns a printable label and its value.
fn evaluate(p: &JointDistribution, term: &str) -> Result<(String, f64), String> {
    let n = p.n();
    let trimmed = term.trim();
    if trimmed.starts_with('I') {
        let k = statement_arg(trimmed, n)?;
        return Ok((format!("J{}", &k.to_string()[1..]), j_value(p, &k)));
    }
    let (body, cond) = match trimmed.split_once('|') {
        Some((body, cond)) => (body, index_list(cond, n, term)?),
        None => (trimmed, IndexSet::EMPTY),
    };
    let given = if cond.is_empty() { String::new() } else { format!(" | {cond}") };
    match body.split_once(';') {
        Some((a, b)) => {
            let (a, b) = (index_list(a, n, term)?, index_list(b, n, term)?);
            Ok((format!("I({a} ; {b}{given})"), cond_mutual_info(p, a, b, cond)))
        }
        None => {
            let a = index_list(body, n, term)?;
            let value = if cond.is_empty() { entropy(p, a) } else { cond_entropy(p, a, cond) };
            Ok((format!("H({a}{given})"), value))
        }
    }
}

fn index_list(text: &str, n: usize, term: &str) -> Result<IndexSet, String> {
    let mut set = IndexSet::EMPTY;
    let text = text.trim();
    if text.is_empty() || text == "{}" {
        return Ok(set);
    }
    for piece in text.split(',') {
        match piece.trim().parse::<usize>() {
            Ok(i) if (1..=n).contains(&i) => set.insert(i),
            _ => {
                return Err(format!(
                    "in term '{term}': '{}' is not an index in 1..={n}",
                    piece.trim()
                ))
            }
        }
    }
    Ok(set)
}
