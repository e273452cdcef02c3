//! Command-line surface for the closed-braid calculus: normal forms, exact
//! invariants, Markov moves, disc simplification, certificate verification,
//! diagram unlinking, and batch experiments.
//!
//! Exit codes: 0 success (or certificate accepted), 1 certificate rejected,
//! 2 parse or validation failure.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use braidmark::batch::{simplify_sweep, SweepRow};
use braidmark::certify::{apply_certificate, verify_equivalence, Move, MoveCertificate};
use braidmark::foliation::{simplify_disc_trace, validate_tiling, SimplifyAction, Tiling};
use braidmark::unlink::{green_over_red_count, split_by_switches, ColoredDiagram};
use braidmark::{alexander_of_closure, normal_form, self_linking, BraidWord, ClosureAlexander, Sign};

#[derive(Parser)]
#[command(name = "braidmark", version, about = "Closed braids, Markov moves, and equivalence certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the left-greedy normal form of a braid word
    Normalize {
        /// Braid word, e.g. "B3: s1 s2^-1 s1"
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Print exact closure invariants of a braid word
    Invariants {
        word: String,
        #[arg(long)]
        json: bool,
    },
    /// Apply a single Markov move to a braid word
    #[command(name = "move")]
    ApplyMove {
        word: String,
        /// stabilize | destabilize | conjugate | cyclic-rotate
        kind: String,
        /// Sign for stabilize (+1 or -1); optional declared sign for destabilize
        #[arg(long, allow_hyphen_values = true)]
        sign: Option<String>,
        /// Conjugating word for `conjugate`
        #[arg(long)]
        witness: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Simplify a disc tiling to the radial disc and emit the certificate
    SimplifyDisc {
        /// Tiling JSON file
        tiling: PathBuf,
        /// Write the certificate here (default: print to stdout)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check a Markov-equivalence certificate between two braid words
    Verify {
        word_a: String,
        word_b: String,
        /// Certificate JSON file
        certificate: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Switch green-over-red crossings so green can be pushed below red
    Unlink {
        /// Colored diagram JSON file
        diagram: PathBuf,
        /// Write the switch certificate here (default: print to stdout)
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Grow random disc tilings, simplify them, and tabulate the move counts
    Bench {
        /// Seed for deterministic batches
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest growth script length
        #[arg(long, default_value_t = 30)]
        max_moves: usize,
        /// Number of cases
        #[arg(long, default_value_t = 100)]
        cases: usize,
        /// Write the CSV table here (default: print to stdout)
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

/// Failure that should terminate with exit code 2 and a diagnostic.
struct InputError(String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> InputError {
        InputError(e.to_string())
    }
}

fn parse_word(text: &str) -> Result<BraidWord, InputError> {
    text.parse::<BraidWord>()
        .map_err(|e| InputError(format!("braid word {text:?}: {e}")))
}

fn parse_sign(text: &str) -> Result<Sign, InputError> {
    match text {
        "+1" | "1" | "+" => Ok(Sign::Plus),
        "-1" | "-" => Ok(Sign::Minus),
        other => Err(InputError(format!("sign must be +1 or -1, got {other:?}"))),
    }
}

fn read_file(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), InputError> {
    std::fs::write(path, contents).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn move_summary(mv: &Move) -> String {
    match mv {
        Move::Stabilize { sign } => format!("stabilize({sign})"),
        Move::Destabilize { sign: Some(sign) } => format!("destabilize({sign})"),
        Move::Destabilize { sign: None } => "destabilize".to_string(),
        Move::Conjugate { witness } => format!("conjugate({witness})"),
        Move::CyclicRotate => "cyclic_rotate".to_string(),
    }
}

fn run_normalize(word: &str, json: bool) -> Result<u8, InputError> {
    let w = parse_word(word)?;
    let nf = normal_form(&w);
    if json {
        println!(
            "{}",
            serde_json::json!({ "word": w.to_string(), "normal_form": nf.to_string() })
        );
    } else {
        println!("{nf}");
    }
    Ok(0)
}

fn run_invariants(word: &str, json: bool) -> Result<u8, InputError> {
    let w = parse_word(word)?;
    let components = w.closure_component_count();
    let exponent_sum = w.exponent_sum();
    let sl = self_linking(&w).ok();
    let alexander = alexander_of_closure(&w);
    if json {
        let (alex_kind, alex_poly) = match &alexander {
            ClosureAlexander::Knot(p) => ("knot", p.to_string()),
            ClosureAlexander::MultiComponent { det } => ("multi_component_det", det.to_string()),
        };
        println!(
            "{}",
            serde_json::json!({
                "word": w.to_string(),
                "components": components,
                "exponent_sum": exponent_sum,
                "self_linking": sl,
                "alexander": alex_poly,
                "alexander_kind": alex_kind,
            })
        );
        return Ok(0);
    }
    println!("word: {w}");
    println!("components: {components}");
    println!("exponent_sum: {exponent_sum}");
    match sl {
        Some(v) => println!("self_linking: {v}"),
        None => println!("self_linking: n/a (closure is not a knot)"),
    }
    match &alexander {
        ClosureAlexander::Knot(p) => println!("alexander: {p}"),
        ClosureAlexander::MultiComponent { det } => {
            println!("alexander_det: {det} (multi-component, unscaled)")
        }
    }
    Ok(0)
}

fn run_move(
    word: &str,
    kind: &str,
    sign: Option<&str>,
    witness: Option<&str>,
    json: bool,
) -> Result<u8, InputError> {
    let w = parse_word(word)?;
    let mv = match kind {
        "stabilize" => {
            let sign = parse_sign(sign.ok_or(InputError("stabilize needs --sign".into()))?)?;
            Move::Stabilize { sign }
        }
        "destabilize" => Move::Destabilize { sign: sign.map(parse_sign).transpose()? },
        "conjugate" => {
            let witness =
                parse_word(witness.ok_or(InputError("conjugate needs --witness".into()))?)?;
            Move::Conjugate { witness }
        }
        "cyclic-rotate" | "cyclic_rotate" => Move::CyclicRotate,
        other => {
            return Err(InputError(format!(
                "unknown move kind {other:?}; expected stabilize, destabilize, conjugate, or cyclic-rotate"
            )))
        }
    };
    let cert = MoveCertificate { initial_index: w.strands(), moves: vec![mv] };
    let result = apply_certificate(&w, &cert)?;
    if json {
        println!("{}", serde_json::json!({ "word": result.to_string() }));
    } else {
        println!("{result}");
    }
    Ok(0)
}

fn run_simplify_disc(path: &Path, out: Option<&Path>, json: bool) -> Result<u8, InputError> {
    let text = read_file(path)?;
    let tiling = Tiling::from_json(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let report = validate_tiling(&tiling);
    if !report.is_valid() {
        return Err(InputError(format!("{}: invalid tiling:\n{report}", path.display())));
    }
    let trace = simplify_disc_trace(&tiling)?;
    let cert_json = trace.certificate.to_json();

    let mut ledger = format!("{}", tiling.ledger_index());
    for step in &trace.steps {
        if step.action != SimplifyAction::RemoveInessentialArc {
            write!(ledger, " -> {}", step.ledger).unwrap();
        }
    }

    if json {
        println!(
            "{}",
            serde_json::json!({
                "initial_index": trace.certificate.initial_index,
                "ledger": ledger,
                "stabilizations": trace.certificate.stabilization_count(),
                "destabilizations": trace.certificate.destabilization_count(),
                "certificate": serde_json::from_str::<serde_json::Value>(&cert_json).unwrap(),
            })
        );
    } else {
        println!("initial ledger index: {}", trace.certificate.initial_index);
        println!("ledger: {ledger}");
        let moves: Vec<String> = trace.certificate.moves.iter().map(move_summary).collect();
        println!("moves: {}", if moves.is_empty() { "(none)".to_string() } else { moves.join(" ") });
    }
    match out {
        Some(p) => {
            write_file(p, &cert_json)?;
            if !json {
                println!("certificate written to {}", p.display());
            }
        }
        None if !json => println!("{cert_json}"),
        None => {}
    }
    Ok(0)
}

fn run_verify(a: &str, b: &str, cert_path: &Path, json: bool) -> Result<u8, InputError> {
    let a = parse_word(a)?;
    let b = parse_word(b)?;
    let cert = MoveCertificate::from_json(&read_file(cert_path)?)
        .map_err(|e| InputError(format!("{}: {e}", cert_path.display())))?;
    let report = verify_equivalence(&a, &b, &cert);
    if json {
        println!("{}", serde_json::to_string_pretty(&report).unwrap());
    } else {
        println!("accepted: {}", report.accepted);
        if let Some(word) = &report.replayed {
            println!("replayed: {word}");
        }
        if let Some(err) = &report.replay_error {
            println!("replay error: {err}");
        }
        println!(
            "components: {} vs {} ({})",
            report.component_counts.0,
            report.component_counts.1,
            if report.components_match { "match" } else { "differ" }
        );
        println!(
            "alexander: {}",
            if report.alexander_match { "match" } else { "differ" }
        );
        if let Some(ledger) = &report.ledger {
            let text: Vec<String> = ledger.iter().map(|v| v.to_string()).collect();
            println!("ledger: {}", text.join(" -> "));
        }
        if let Some(alarm) = &report.consistency_alarm {
            println!("ALARM: {alarm}");
        }
    }
    Ok(if report.accepted { 0 } else { 1 })
}

fn run_unlink(path: &Path, out: Option<&Path>, json: bool) -> Result<u8, InputError> {
    let diagram: ColoredDiagram = serde_json::from_str(&read_file(path)?)
        .map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    let before = green_over_red_count(&diagram);
    let (split, cert) = split_by_switches(&diagram);
    let cert_json = serde_json::to_string_pretty(&cert).unwrap();
    if json {
        println!(
            "{}",
            serde_json::json!({
                "green_over_red": before,
                "switched": cert.switched,
                "result": split,
            })
        );
    } else {
        println!("green-over-red crossings: {before}");
        let ids: Vec<String> = cert.switched.iter().map(|id| id.to_string()).collect();
        println!(
            "switched: {}",
            if ids.is_empty() { "(none)".to_string() } else { ids.join(" ") }
        );
    }
    match out {
        Some(p) => {
            write_file(p, &cert_json)?;
            if !json {
                println!("switch certificate written to {}", p.display());
            }
        }
        None if !json => println!("{cert_json}"),
        None => {}
    }
    Ok(0)
}

fn run_bench(seed: u64, max_moves: usize, cases: usize, csv: Option<&Path>) -> Result<u8, InputError> {
    let rows = simplify_sweep(max_moves, cases, seed);
    let mut table = String::from(SweepRow::CSV_HEADER);
    for row in &rows {
        table.push('\n');
        table.push_str(&row.csv_line());
    }
    table.push('\n');
    match csv {
        Some(p) => {
            write_file(p, &table)?;
            println!("{} cases written to {}", rows.len(), p.display());
        }
        None => print!("{table}"),
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, InputError> {
    match cli.command {
        Command::Normalize { word, json } => run_normalize(&word, json),
        Command::Invariants { word, json } => run_invariants(&word, json),
        Command::ApplyMove { word, kind, sign, witness, json } => {
            run_move(&word, &kind, sign.as_deref(), witness.as_deref(), json)
        }
        Command::SimplifyDisc { tiling, out, json } => {
            run_simplify_disc(&tiling, out.as_deref(), json)
        }
        Command::Verify { word_a, word_b, certificate, json } => {
            run_verify(&word_a, &word_b, &certificate, json)
        }
        Command::Unlink { diagram, out, json } => run_unlink(&diagram, out.as_deref(), json),
        Command::Bench { seed, max_moves, cases, csv } => {
            run_bench(seed, max_moves, cases, csv.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(InputError(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
