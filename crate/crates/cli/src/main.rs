//! Command-line front end. Exit status: 0 on success, 1 on domain errors
//! (one diagnostic line on stderr), 2 on usage errors.

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use wkwords_cli::render;
use wkwords_cli::sweep::{self, SweepConfig, ThetaSelection};
use wkwords_core::checks::CheckId;
use wkwords_core::conjugacy::{conjugates, deficiency_witness, power_growth, theta_conjugates};
use wkwords_core::involution::{enumerate_involutions, Involution};
use wkwords_core::word::{Alphabet, Word};

#[derive(Parser)]
#[command(
    name = "wkwords",
    version,
    about = "Conjugates, palindromes, and Watson-Crick (antimorphic involution) word structure"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct WordArgs {
    /// Input word; pass an empty string for the empty word
    word: String,
    /// Involution spec: comma-separated groups, "xy" swaps, "x" fixes
    #[arg(long)]
    theta: String,
    /// Alphabet letters in order; defaults to the letters of the word and spec
    #[arg(long)]
    alphabet: Option<String>,
    /// Emit JSON on stdout, or into PATH when given
    #[arg(long, num_args = 0..=1, default_missing_value = "-", value_name = "PATH")]
    json: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full structural record of a word
    Analyze(WordArgs),
    /// Print the conjugacy class (all rotations) of a word
    Conj {
        /// Input word; pass an empty string for the empty word
        word: String,
        /// Emit JSON on stdout, or into PATH when given
        #[arg(long, num_args = 0..=1, default_missing_value = "-", value_name = "PATH")]
        json: Option<String>,
    },
    /// Print the theta-conjugate set of a word
    #[command(name = "theta-conj")]
    ThetaConj(WordArgs),
    /// Search for the deficiency decomposition of a word
    Decompose(WordArgs),
    /// Print the theta-conjugate counts of successive powers
    #[command(name = "power-growth")]
    PowerGrowth {
        #[command(flatten)]
        args: WordArgs,
        /// Largest exponent to report
        #[arg(long, default_value_t = 3)]
        max_power: usize,
    },
    /// List every involution on an alphabet
    Involutions {
        /// Alphabet letters in order
        #[arg(long)]
        alphabet: String,
        /// Emit JSON on stdout, or into PATH when given
        #[arg(long, num_args = 0..=1, default_missing_value = "-", value_name = "PATH")]
        json: Option<String>,
    },
    /// Run the structural checks over every word up to a length bound
    Sweep {
        /// Alphabet letters in order
        #[arg(long)]
        alphabet: String,
        /// Involution spec, or ALL for every involution on the alphabet
        #[arg(long, default_value = "ALL")]
        theta: String,
        /// Longest word length to enumerate
        #[arg(long)]
        max_len: usize,
        /// Largest exponent used by the power checks
        #[arg(long, default_value_t = 3)]
        max_power: usize,
        /// Comma-separated check ids
        #[arg(
            long = "check",
            value_delimiter = ',',
            value_parser = parse_check,
            default_value = "T1,T2,T3,T4,T5,T6,T7,T8,T9"
        )]
        checks: Vec<CheckId>,
        /// Worker thread count; the report does not depend on it
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Emit JSON on stdout, or into PATH when given
        #[arg(long, num_args = 0..=1, default_missing_value = "-", value_name = "PATH")]
        json: Option<String>,
    },
}

fn parse_check(s: &str) -> Result<CheckId, String> {
    CheckId::parse(s).ok_or_else(|| format!("unknown check '{s}', expected T1..T9"))
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<wkwords_core::Error> for Failure {
    fn from(e: wkwords_core::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<sweep::SweepError> for Failure {
    fn from(e: sweep::SweepError) -> Self {
        Failure::Domain(e.to_string())
    }
}

fn main() {
    match run(Cli::parse()) {
        Ok(()) => {}
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            std::process::exit(2);
        }
    }
}

/// Alphabet precedence: explicit flag, else the letters appearing in the
/// word and the theta spec, in character order.
fn resolve_alphabet(
    word: &str,
    spec: &str,
    explicit: Option<&str>,
) -> Result<Alphabet, Failure> {
    match explicit {
        Some(letters) => Ok(Alphabet::parse(letters)?),
        None => {
            let mut letters: Vec<char> = word
                .chars()
                .chain(spec.chars().filter(|&c| c != ','))
                .collect();
            letters.sort_unstable();
            letters.dedup();
            Ok(Alphabet::new(letters)?)
        }
    }
}

fn resolve_theta(args: &WordArgs) -> Result<(Word, Involution), Failure> {
    if args.theta == "ALL" {
        return Err(Failure::Usage(
            "--theta ALL is only valid for the sweep command".to_string(),
        ));
    }
    let alphabet = resolve_alphabet(&args.word, &args.theta, args.alphabet.as_deref())?;
    let theta = Involution::parse(&args.theta, &alphabet)?;
    Ok((Word::from(args.word.as_str()), theta))
}

fn emit(json: &Option<String>, text: String, value: Value) -> Result<(), Failure> {
    match json.as_deref() {
        None => println!("{text}"),
        Some("-") => println!("{}", serde_json::to_string_pretty(&value).expect("valid json")),
        Some(path) => {
            let body = serde_json::to_string_pretty(&value).expect("valid json");
            std::fs::write(path, body + "\n")
                .map_err(|e| Failure::Domain(format!("cannot write {path}: {e}")))?;
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Analyze(args) => {
            let (word, theta) = resolve_theta(&args)?;
            let analysis = render::Analysis::compute(&word, &theta)?;
            emit(&args.json, analysis.to_text(), analysis.to_json())
        }
        Command::Conj { word, json } => {
            let set = conjugates(&Word::from(word.as_str()));
            emit(
                &json,
                render::conjugates_text(&set),
                render::conjugates_json(&set),
            )
        }
        Command::ThetaConj(args) => {
            let (word, theta) = resolve_theta(&args)?;
            let set = theta_conjugates(&word, &theta)?;
            emit(
                &args.json,
                render::theta_conjugates_text(&set),
                render::theta_conjugates_json(&set),
            )
        }
        Command::Decompose(args) => {
            let (word, theta) = resolve_theta(&args)?;
            let set = theta_conjugates(&word, &theta)?;
            let witness = deficiency_witness(&word, &theta)?;
            emit(
                &args.json,
                render::decompose_text(&set, &witness),
                render::decompose_json(&set, &witness),
            )
        }
        Command::PowerGrowth { args, max_power } => {
            let (word, theta) = resolve_theta(&args)?;
            let sizes = power_growth(&word, &theta, max_power)?;
            emit(
                &args.json,
                render::power_growth_text(&sizes),
                render::power_growth_json(&word, &theta, &sizes),
            )
        }
        Command::Involutions { alphabet, json } => {
            let sigma = Alphabet::parse(&alphabet)?;
            let thetas = enumerate_involutions(&sigma);
            emit(
                &json,
                render::involutions_text(&thetas),
                render::involutions_json(&alphabet, &thetas),
            )
        }
        Command::Sweep {
            alphabet,
            theta,
            max_len,
            max_power,
            checks,
            jobs,
            json,
        } => {
            let sigma = Alphabet::parse(&alphabet)?;
            let thetas = if theta == "ALL" {
                ThetaSelection::All
            } else {
                ThetaSelection::List(vec![Involution::parse(&theta, &sigma)?])
            };
            let config = SweepConfig {
                alphabet: sigma,
                thetas,
                max_len,
                max_power,
                checks,
                jobs,
            };
            let report = sweep::run_checks(&config)?;
            emit(
                &json,
                render::sweep_report_text(&report),
                render::sweep_report_json(&report),
            )
        }
    }
}
