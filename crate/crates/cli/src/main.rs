//! Command-line front end for the coherence engine.
//!
//! Exit codes: 0 success/coherent, 1 incoherent, 2 usage or input error.

mod problem;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser as ClapParser, Subcommand};

use prevision_core::coherence::{check_coherence, Assessment};
use prevision_core::error::Error;
use prevision_core::parse::parse_rational;
use prevision_core::propagation::extension_interval;
use prevision_core::rational::Rational;
use prevision_core::rules::{
    afp_threshold_check, apply_rule, check_connexive, pttt_predictions, RuleName, RuleParams,
};

use problem::{parse_problem, ProblemFile};

/// Anything that should abort with exit code 2.
enum CliError {
    Engine(Error),
    Io(String),
    Usage(String),
}

impl From<Error> for CliError {
    fn from(err: Error) -> CliError {
        CliError::Engine(err)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Engine(err) => write!(f, "{err}"),
            CliError::Io(msg) | CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

#[derive(ClapParser)]
#[command(
    name = "prevision",
    version,
    about = "Coherence checking and probability propagation for conditional-event assessments"
)]
struct Cli {
    /// Emit machine-readable JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the assessments in FILE are coherent
    Check { file: PathBuf },
    /// Compute the tightest coherent bounds for the query in FILE
    Propagate { file: PathBuf },
    /// Show the sure-loss betting scheme against the assessments in FILE
    Dutchbook { file: PathBuf },
    /// Apply a named argument form (see `prevision rules`)
    Rule {
        name: String,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        #[arg(long)]
        xl: Option<String>,
        #[arg(long)]
        xu: Option<String>,
        #[arg(long)]
        yl: Option<String>,
        #[arg(long)]
        yu: Option<String>,
        #[arg(long)]
        t: Option<String>,
        #[arg(long)]
        x1: Option<String>,
        #[arg(long)]
        x2: Option<String>,
        #[arg(long)]
        x3: Option<String>,
        #[arg(long)]
        x4: Option<String>,
        /// Also compute the interval with the propagation engine and compare
        #[arg(long)]
        verify: bool,
    },
    /// Predictions for the probabilistic truth-table task
    Pttt {
        #[arg(long)]
        x1: String,
        #[arg(long)]
        x2: String,
        #[arg(long)]
        x3: String,
        #[arg(long)]
        x4: String,
    },
    /// List the rule catalog
    Rules,
}

const EXIT_OK: u8 = 0;
const EXIT_INCOHERENT: u8 = 1;
const EXIT_INPUT: u8 = 2;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    let outcome = match cli.command {
        Command::Check { file } => cmd_check(&file, json),
        Command::Propagate { file } => cmd_propagate(&file, json),
        Command::Dutchbook { file } => cmd_dutchbook(&file, json),
        Command::Rule {
            name,
            x,
            y,
            xl,
            xu,
            yl,
            yu,
            t,
            x1,
            x2,
            x3,
            x4,
            verify,
        } => {
            let flags = [
                ("x", x),
                ("y", y),
                ("xl", xl),
                ("xu", xu),
                ("yl", yl),
                ("yu", yu),
                ("t", t),
                ("x1", x1),
                ("x2", x2),
                ("x3", x3),
                ("x4", x4),
            ];
            cmd_rule(&name, &flags, verify, json)
        }
        Command::Pttt { x1, x2, x3, x4 } => cmd_pttt(&x1, &x2, &x3, &x4, json),
        Command::Rules => cmd_rules(json),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn load_problem(path: &Path) -> Result<ProblemFile, CliError> {
    let src = std::fs::read_to_string(path)
        .map_err(|io| CliError::Io(format!("cannot read {}: {io}", path.display())))?;
    Ok(parse_problem(&src)?)
}

fn load_assessment(path: &Path) -> Result<(ProblemFile, Assessment), CliError> {
    let problem = load_problem(path)?;
    if problem.statements.is_empty() {
        return Err(CliError::Usage(format!(
            "{} contains no assessed statements",
            path.display()
        )));
    }
    let assessment = problem.assessment()?;
    Ok((problem, assessment))
}

fn cmd_check(path: &Path, json: bool) -> Result<u8, CliError> {
    let (_, assessment) = load_assessment(path)?;
    let verdict = check_coherence(&assessment)?;
    if verdict.coherent {
        if json {
            println!("{}", serde_json::json!({"coherent": true}));
        } else {
            println!("coherent");
        }
        Ok(EXIT_OK)
    } else {
        let book = verdict.certificate.expect("incoherent verdicts carry a book");
        if json {
            println!(
                "{}",
                serde_json::json!({
                    "coherent": false,
                    "certificate": report::dutch_book_json(&book, &assessment),
                })
            );
        } else {
            println!("incoherent");
            print!("{}", report::dutch_book_text(&book, &assessment));
        }
        Ok(EXIT_INCOHERENT)
    }
}

fn cmd_propagate(path: &Path, json: bool) -> Result<u8, CliError> {
    let (problem, assessment) = load_assessment(path)?;
    let Some(query) = problem.query else {
        return Err(CliError::Usage(
            "propagate requires a `? p(...)` query line".to_string(),
        ));
    };
    match extension_interval(&assessment, &query) {
        Ok(result) => {
            if json {
                println!(
                    "{}",
                    report::bounds_json(true, &result.lower, &result.upper, result.non_informative)
                );
            } else {
                println!("premises: coherent");
                println!(
                    "p({}) in {}",
                    query,
                    report::interval(&result.lower, &result.upper)
                );
                println!(
                    "decimal: {}",
                    report::interval_decimal(&result.lower, &result.upper)
                );
                if result.non_informative {
                    println!("NON-INFORMATIVE");
                }
            }
            Ok(EXIT_OK)
        }
        Err(Error::IncoherentPremises(verdict)) => {
            let book = verdict
                .certificate
                .expect("incoherent verdicts carry a book");
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "coherent": false,
                        "certificate": report::dutch_book_json(&book, &assessment),
                    })
                );
            } else {
                println!("premises: incoherent");
                print!("{}", report::dutch_book_text(&book, &assessment));
            }
            Ok(EXIT_INCOHERENT)
        }
        Err(other) => Err(other.into()),
    }
}

fn cmd_dutchbook(path: &Path, json: bool) -> Result<u8, CliError> {
    let (_, assessment) = load_assessment(path)?;
    let verdict = check_coherence(&assessment)?;
    match verdict.certificate {
        Some(book) => {
            if json {
                println!(
                    "{}",
                    serde_json::json!({
                        "coherent": false,
                        "certificate": report::dutch_book_json(&book, &assessment),
                    })
                );
            } else {
                println!("incoherent");
                print!("{}", report::dutch_book_text(&book, &assessment));
            }
            Ok(EXIT_INCOHERENT)
        }
        None => {
            if json {
                println!("{}", serde_json::json!({"coherent": true}));
            } else {
                println!("coherent; no dutch book exists");
            }
            Ok(EXIT_OK)
        }
    }
}

fn parse_flag(name: &str, value: &Option<String>) -> Result<Option<Rational>, CliError> {
    match value {
        None => Ok(None),
        Some(text) => parse_rational(text).map(Some).map_err(|_| {
            CliError::Usage(format!("parameter --{name}: `{text}` is not a value"))
        }),
    }
}

fn cmd_rule(
    name: &str,
    flags: &[(&str, Option<String>)],
    verify: bool,
    json: bool,
) -> Result<u8, CliError> {
    let rule = RuleName::parse(name)?;
    let mut params = RuleParams::new();
    for (flag, value) in flags {
        if let Some(v) = parse_flag(flag, value)? {
            params.set(flag, v);
        }
    }
    match rule {
        RuleName::At1 | RuleName::At2 => {
            let report = check_connexive(rule)?;
            if json {
                println!("{}", report::connexive_json(&report, None));
            } else {
                print!("{}", report::connexive_text(&report, None));
            }
            Ok(EXIT_OK)
        }
        RuleName::Bt1 | RuleName::Bt2 if params.get("x").is_none() => {
            let report = check_connexive(rule)?;
            if json {
                println!("{}", report::connexive_json(&report, None));
            } else {
                print!("{}", report::connexive_text(&report, None));
            }
            Ok(EXIT_OK)
        }
        RuleName::Afp => {
            let report = check_connexive(rule)?;
            let extra = match params.get("t") {
                Some(t) => Some((t.clone(), afp_threshold_check(t)?)),
                None => None,
            };
            let extra_ref = extra.as_ref().map(|(t, ok)| (t, *ok));
            if json {
                println!("{}", report::connexive_json(&report, extra_ref));
            } else {
                print!("{}", report::connexive_text(&report, extra_ref));
            }
            Ok(EXIT_OK)
        }
        RuleName::Pttt => {
            let get = |flag: &str| -> Result<Rational, Error> {
                params.get(flag).cloned().ok_or_else(|| Error::MissingParam {
                    rule: rule.as_str().to_string(),
                    param: flag.to_string(),
                })
            };
            let predictions =
                pttt_predictions(&get("x1")?, &get("x2")?, &get("x3")?, &get("x4")?)?;
            if json {
                println!("{}", report::pttt_json(&predictions));
            } else {
                print!("{}", report::pttt_text(&predictions));
            }
            Ok(EXIT_OK)
        }
        _ => {
            let app = apply_rule(rule, &params)?;
            let verification = if verify { Some(app.verify()?) } else { None };
            if json {
                println!("{}", report::rule_json(&app, verification.as_ref()));
            } else {
                print!("{}", report::rule_text(&app, verification.as_ref()));
            }
            Ok(EXIT_OK)
        }
    }
}

fn cmd_pttt(x1: &str, x2: &str, x3: &str, x4: &str, json: bool) -> Result<u8, CliError> {
    let parse = |name: &str, text: &str| -> Result<Rational, CliError> {
        parse_rational(text)
            .map_err(|_| CliError::Usage(format!("parameter --{name}: `{text}` is not a value")))
    };
    let predictions = pttt_predictions(
        &parse("x1", x1)?,
        &parse("x2", x2)?,
        &parse("x3", x3)?,
        &parse("x4", x4)?,
    )?;
    if json {
        println!("{}", report::pttt_json(&predictions));
    } else {
        print!("{}", report::pttt_text(&predictions));
    }
    Ok(EXIT_OK)
}

fn cmd_rules(json: bool) -> Result<u8, CliError> {
    if json {
        let rows: Vec<serde_json::Value> = RuleName::ALL
            .iter()
            .map(|r| serde_json::json!({"name": r.as_str(), "description": r.describe()}))
            .collect();
        println!("{}", serde_json::json!({ "rules": rows }));
    } else {
        for rule in RuleName::ALL {
            println!("{:<15} {}", rule.as_str(), rule.describe());
        }
    }
    Ok(EXIT_OK)
}
