//! Command-line front end for the branching-law engine.
//!
//! Exit codes: 0 = question decided (either verdict), 2 = input
//! (syntax/semantic) error, 3 = engine diagnostic.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use ggp_cli::parser::{
    multisegment_from_str, rational_from_str, rep_from_str, segment_from_str, unitary_from_str,
    ParseError, Session,
};
use ggp_cli::record::{trace_detail, verdict_record};
use ggp_engine::derivative::{
    derivative_left_multi, derivative_right_multi, eta_right, hd_left, hd_right,
};
use ggp_engine::integral::{integral_left_multi, integral_right_multi, ul};
use ggp_engine::involution::zelevinsky_involution;
use ggp_engine::oracle::{brute_force_from_tables, left_witness_table, right_witness_table};
use ggp_engine::rat::{self};
use ggp_engine::relevance::decide_relevant;
use ggp_engine::unitary::{
    speh_branching_classify, speh_shifted_branching_classify, unitary_relevant, MatchRule,
};
use ggp_engine::{EngineError, IrrRep, Multisegment};

#[derive(Parser)]
#[command(
    name = "ggp",
    version,
    about = "Branching-law toolkit for general linear groups over p-adic fields"
)]
struct Cli {
    /// Cuspidal label declaration, e.g. "R dim=1" or "rho R dim=1 unitary";
    /// repeatable.
    #[arg(long = "rho", global = true, value_name = "DECL")]
    rho: Vec<String>,

    /// Session file with label declarations and named bindings.
    #[arg(long, global = true, value_name = "FILE")]
    session: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    #[value(name = "R", alias = "r")]
    R,
    #[value(name = "L", alias = "l")]
    L,
}

#[derive(Subcommand)]
enum Cmd {
    /// Apply a derivative to a representation.
    Derive {
        #[arg(long, value_enum)]
        side: Side,
        /// Derivative multisegment.
        #[arg(long, value_name = "MULTISEGMENT")]
        by: String,
        /// Representation expression, e.g. "L([1,5]@R + [4,7]@R)".
        rep: String,
    },
    /// Apply an integral (the derivative's right inverse) to a representation.
    Integrate {
        #[arg(long, value_enum)]
        side: Side,
        #[arg(long, value_name = "MULTISEGMENT")]
        by: String,
        rep: String,
    },
    /// Print the highest-derivative multisegment of a representation.
    Hd {
        #[arg(long, value_enum)]
        side: Side,
        rep: String,
    },
    /// Print the eta invariant (tuple of suffix multiplicities) along a segment.
    Eta {
        #[arg(long, value_enum)]
        side: Side,
        /// A single segment.
        #[arg(long, value_name = "SEGMENT")]
        by: String,
        rep: String,
    },
    /// Normalize a multisegment to its unlinked (generic) form.
    Ul {
        /// Multisegment expression.
        ms: String,
    },
    /// Apply the Zelevinsky involution to a multisegment.
    Involute { ms: String },
    /// Decide whether the pair (pi, pi2) is relevant.
    Decide {
        /// Print every reduction step with before/after states.
        #[arg(long)]
        trace: bool,
        pi: String,
        pi2: String,
    },
    /// Decide relevance of two unitary products by factor matching.
    UnitaryRelevant { pi: String, pi2: String },
    /// Classify a candidate against a ladder (Speh) representation.
    SpehClassify {
        /// Declared label of the ladder.
        #[arg(long)]
        label: String,
        /// Bottom-row start exponent.
        #[arg(long)]
        a: String,
        /// Bottom-row end exponent.
        #[arg(long)]
        b: String,
        /// Number of extra rows above the bottom one.
        #[arg(long)]
        height: u32,
        /// Classify the candidate one size below the ladder instead of
        /// one size above.
        #[arg(long)]
        down: bool,
        rep: String,
    },
    /// Decide relevance by exhaustive witness search (slow, for cross-checks).
    Oracle { pi: String, pi2: String },
    /// Decide every record of a file ("pi-expression ; pi2-expression" per line).
    Batch { file: PathBuf },
}

enum CliError {
    Input(String),
    Engine(EngineError),
    Io(String),
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<EngineError> for CliError {
    fn from(e: EngineError) -> Self {
        CliError::Engine(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Engine(e)) => {
            eprintln!("engine: {e}");
            ExitCode::from(3)
        }
    }
}

fn build_session(cli: &Cli) -> Result<Session, CliError> {
    let mut session = Session::new();
    if let Some(path) = &cli.session {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
        session.extend_from_text(&text, 1)?;
    }
    for decl in &cli.rho {
        let line = if decl.trim_start().starts_with("rho ") {
            decl.clone()
        } else {
            format!("rho {decl}")
        };
        session.parse_line(&line, 1)?;
    }
    Ok(session)
}

fn print_rep(m: Option<Multisegment>) {
    match m {
        Some(m) => println!("{}", IrrRep::langlands(m)),
        None => println!("0"),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let session = build_session(&cli)?;
    match &cli.cmd {
        Cmd::Derive { side, by, rep } => {
            let by = multisegment_from_str(by, &session)?;
            let pi = rep_from_str(rep, &session)?;
            let out = match side {
                Side::R => derivative_right_multi(pi.data(), &by),
                Side::L => derivative_left_multi(pi.data(), &by),
            };
            print_rep(out);
        }
        Cmd::Integrate { side, by, rep } => {
            let by = multisegment_from_str(by, &session)?;
            let pi = rep_from_str(rep, &session)?;
            let out = match side {
                Side::R => integral_right_multi(pi.data(), &by),
                Side::L => integral_left_multi(pi.data(), &by),
            };
            print_rep(Some(out));
        }
        Cmd::Hd { side, rep } => {
            let pi = rep_from_str(rep, &session)?;
            let out = match side {
                Side::R => hd_right(pi.data()),
                Side::L => hd_left(pi.data()),
            };
            println!("{out}");
        }
        Cmd::Eta { side, by, rep } => {
            let d = segment_from_str(by, &session)?;
            let pi = rep_from_str(rep, &session)?;
            let tuple = match side {
                Side::R => eta_right(pi.data(), &d),
                Side::L => eta_right(&pi.data().theta(), &d.theta()),
            };
            let parts: Vec<String> = tuple.iter().map(|e| e.to_string()).collect();
            println!("({})", parts.join(", "));
        }
        Cmd::Ul { ms } => {
            let m = multisegment_from_str(ms, &session)?;
            println!("{}", ul(&m));
        }
        Cmd::Involute { ms } => {
            let m = multisegment_from_str(ms, &session)?;
            println!("{}", zelevinsky_involution(&m));
        }
        Cmd::Decide { trace, pi, pi2 } => {
            let pi = rep_from_str(pi, &session)?;
            let pi2 = rep_from_str(pi2, &session)?;
            let cert = decide_relevant(&pi, &pi2)?;
            println!("{}", verdict_record(&cert));
            if *trace {
                for line in trace_detail(&cert) {
                    println!("{line}");
                }
            }
        }
        Cmd::UnitaryRelevant { pi, pi2 } => {
            let u1 = unitary_from_str(pi, &session)?;
            let u2 = unitary_from_str(pi2, &session)?;
            match unitary_relevant(&u1, &u2) {
                None => println!("relevant=false"),
                Some(cert) => {
                    let pairs: Vec<String> = cert
                        .pairs
                        .iter()
                        .map(|(i, j, rule)| {
                            let r = match rule {
                                MatchRule::GrowV => "GrowV",
                                MatchRule::ShrinkV => "ShrinkV",
                                MatchRule::MirrorAlpha => "MirrorAlpha",
                            };
                            format!("{i}~{j}:{r}")
                        })
                        .collect();
                    let fmt_idx = |v: &[usize]| -> String {
                        if v.is_empty() {
                            "-".to_string()
                        } else {
                            v.iter()
                                .map(|i| i.to_string())
                                .collect::<Vec<_>>()
                                .join(", ")
                        }
                    };
                    println!(
                        "relevant=true | pairs={} | leftover_left={} | leftover_right={}",
                        if pairs.is_empty() {
                            "-".to_string()
                        } else {
                            pairs.join(", ")
                        },
                        fmt_idx(&cert.unmatched_left),
                        fmt_idx(&cert.unmatched_right)
                    );
                }
            }
        }
        Cmd::SpehClassify {
            label,
            a,
            b,
            height,
            down,
            rep,
        } => {
            let lab = session
                .labels
                .get(label)
                .cloned()
                .ok_or_else(|| CliError::Input(format!("undeclared label `{label}`")))?;
            let a = rational_from_str(a)?;
            let b = rational_from_str(b)?;
            if !rat::is_integer(b - a) || b < a {
                return Err(CliError::Input(
                    "b - a must be a non-negative integer".to_string(),
                ));
            }
            let pi = rep_from_str(rep, &session)?;
            let verdict = if *down {
                speh_shifted_branching_classify(&pi, &lab, a, b, *height)
            } else {
                speh_branching_classify(&pi, &lab, a, b, *height)
            };
            println!("{verdict}");
        }
        Cmd::Oracle { pi, pi2 } => {
            let pi = rep_from_str(pi, &session)?;
            let pi2 = rep_from_str(pi2, &session)?;
            let twisted = pi.data().twist(rat::rat(1, 2));
            let right = right_witness_table(&twisted);
            let left = left_witness_table(pi2.data());
            eprintln!(
                "oracle: {} right-derivative candidates x {} left-derivative candidates",
                right.len(),
                left.len()
            );
            match brute_force_from_tables(&twisted, &right, &left) {
                Some((p, q)) => println!("relevant=true | p={p} | q={q}"),
                None => println!("relevant=false | p=- | q=-"),
            }
        }
        Cmd::Batch { file } => {
            return batch(file, session);
        }
    }
    Ok(())
}

enum BatchOutcome {
    Verdict(String),
    InputError(String),
    EngineError(String),
}

fn batch(file: &PathBuf, mut session: Session) -> Result<(), CliError> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", file.display())))?;

    // First pass: fold declarations/bindings into the session and parse
    // the records, so decisions can run in parallel afterwards.
    let mut records: Vec<(usize, Result<(IrrRep, IrrRep), String>)> = Vec::new();
    let mut seq = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        if !line.contains(';') {
            // Declarations and bindings extend the session for the
            // records below them.
            if let Err(e) = session.parse_line(line, lineno) {
                seq += 1;
                records.push((seq, Err(e.to_string())));
            }
            continue;
        }
        seq += 1;
        let parsed = match line.split_once(';') {
            Some((left, right)) => {
                let pi = rep_from_str(left, &session);
                let pi2 = rep_from_str(right, &session);
                match (pi, pi2) {
                    (Ok(a), Ok(b)) => Ok((a, b)),
                    (Err(e), _) | (_, Err(e)) => {
                        Err(format!("line {lineno}, {}", rebase_error(&e, lineno)))
                    }
                }
            }
            None => unreachable!(),
        };
        records.push((seq, parsed));
    }

    let outcomes: Vec<(usize, BatchOutcome)> = records
        .par_iter()
        .map(|(seq, parsed)| {
            let outcome = match parsed {
                Err(msg) => BatchOutcome::InputError(msg.clone()),
                Ok((pi, pi2)) => match decide_relevant(pi, pi2) {
                    Ok(cert) => BatchOutcome::Verdict(verdict_record(&cert)),
                    Err(e) => BatchOutcome::EngineError(e.to_string()),
                },
            };
            (*seq, outcome)
        })
        .collect();

    let mut any_input = false;
    let mut any_engine = false;
    for (seq, outcome) in &outcomes {
        match outcome {
            BatchOutcome::Verdict(rec) => println!("seq={seq} | {rec}"),
            BatchOutcome::InputError(msg) => {
                any_input = true;
                println!("seq={seq} | error: {msg}");
            }
            BatchOutcome::EngineError(msg) => {
                any_engine = true;
                println!("seq={seq} | engine: {msg}");
            }
        }
    }
    if any_input {
        Err(CliError::Input("batch file contained invalid records".into()))
    } else if any_engine {
        Err(CliError::Engine(EngineError::ReductionStalled(
            "batch file contained undecidable records".into(),
        )))
    } else {
        Ok(())
    }
}

/// Record errors are reported against the batch line, not the split
/// fragment; strip the fragment-local "line 1" prefix.
fn rebase_error(e: &ParseError, _lineno: usize) -> String {
    format!("column {}: {}", e.col, e.message)
}
