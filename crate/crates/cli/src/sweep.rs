//! Exhaustive sweep driver: runs the core checks over every word up to a
//! length bound, for one or all involutions, on one or more worker
//! threads, and assembles a deterministic report.

use std::fmt;
use std::time::Instant;

use wkwords_core::checks::{enumerate_words, run_check, CheckId, CheckOutcome};
use wkwords_core::involution::{enumerate_involutions, Involution};
use wkwords_core::structure::theta_class_census;
use wkwords_core::word::{Alphabet, Word};

/// Which involutions a sweep ranges over.
#[derive(Debug, Clone)]
pub enum ThetaSelection {
    /// Every involution on the alphabet.
    All,
    /// An explicit list.
    List(Vec<Involution>),
}

#[derive(Debug, Clone)]
pub struct SweepConfig {
    pub alphabet: Alphabet,
    pub thetas: ThetaSelection,
    pub max_len: usize,
    pub max_power: usize,
    pub checks: Vec<CheckId>,
    pub jobs: usize,
}

#[derive(Debug)]
pub enum SweepError {
    InvalidConfig(String),
    Core(wkwords_core::Error),
}

impl fmt::Display for SweepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SweepError::InvalidConfig(msg) => write!(f, "invalid sweep config: {msg}"),
            SweepError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for SweepError {}

impl From<wkwords_core::Error> for SweepError {
    fn from(e: wkwords_core::Error) -> Self {
        SweepError::Core(e)
    }
}

/// A reproducible check violation: re-running the check on `(word,
/// theta)` yields the same failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub check: CheckId,
    pub theta: String,
    pub word: Word,
    pub detail: String,
    pub observed: String,
}

#[derive(Debug, Clone)]
pub struct CheckStats {
    pub id: CheckId,
    /// `(word, involution)` pairs the check evaluated.
    pub tested: u64,
    /// Pairs where the check's hypothesis did not apply.
    pub skipped: u64,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExtremalKind {
    Palindrome,
    ThetaPalindrome,
}

impl ExtremalKind {
    pub fn name(self) -> &'static str {
        match self {
            ExtremalKind::Palindrome => "palindrome",
            ExtremalKind::ThetaPalindrome => "theta_palindrome",
        }
    }
}

/// One `(involution, word)` pair attaining an observed maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalWitness {
    pub kind: ExtremalKind,
    pub theta: String,
    pub word: Word,
    pub count: usize,
}

/// Observed maxima of palindrome and theta-palindrome counts in
/// theta-conjugate sets, with every pair attaining them. A report over a
/// finite range; no claim beyond it.
#[derive(Debug, Clone, Default)]
pub struct Extremal {
    pub max_palindromes: usize,
    pub max_theta_palindromes: usize,
    pub witnesses: Vec<ExtremalWitness>,
}

/// Echo of the configuration a report was produced from.
#[derive(Debug, Clone)]
pub struct ConfigEcho {
    pub alphabet: String,
    pub theta: String,
    pub involutions: Vec<String>,
    pub max_len: usize,
    pub max_power: usize,
    pub checks: Vec<CheckId>,
    pub jobs: usize,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub config: ConfigEcho,
    pub checks: Vec<CheckStats>,
    pub extremal: Extremal,
    pub wall_time_ms: u128,
}

fn validate(config: &SweepConfig, need_checks: bool) -> Result<Vec<Involution>, SweepError> {
    if config.max_len < 1 {
        return Err(SweepError::InvalidConfig("max_len must be at least 1".into()));
    }
    if config.max_power < 1 {
        return Err(SweepError::InvalidConfig("max_power must be at least 1".into()));
    }
    if config.jobs < 1 {
        return Err(SweepError::InvalidConfig("jobs must be at least 1".into()));
    }
    if need_checks && config.checks.is_empty() {
        return Err(SweepError::InvalidConfig("at least one check is required".into()));
    }
    let thetas = match &config.thetas {
        ThetaSelection::All => enumerate_involutions(&config.alphabet),
        ThetaSelection::List(list) => {
            if list.is_empty() {
                return Err(SweepError::InvalidConfig("involution list is empty".into()));
            }
            for theta in list {
                if theta.alphabet() != &config.alphabet {
                    return Err(SweepError::InvalidConfig(
                        "involution alphabet differs from sweep alphabet".into(),
                    ));
                }
            }
            list.clone()
        }
    };
    Ok(thetas)
}

struct WorkerOutput {
    // parallel to the check list
    tested: Vec<u64>,
    skipped: Vec<u64>,
    counterexamples: Vec<Counterexample>,
    max_palindromes: usize,
    palindrome_witnesses: Vec<(String, Word)>,
    max_theta_palindromes: usize,
    theta_palindrome_witnesses: Vec<(String, Word)>,
}

fn process_chunk(
    words: &[Word],
    thetas: &[Involution],
    checks: &[CheckId],
    max_power: usize,
    track_extremal: bool,
) -> Result<WorkerOutput, SweepError> {
    let mut out = WorkerOutput {
        tested: vec![0; checks.len()],
        skipped: vec![0; checks.len()],
        counterexamples: Vec::new(),
        max_palindromes: 0,
        palindrome_witnesses: Vec::new(),
        max_theta_palindromes: 0,
        theta_palindrome_witnesses: Vec::new(),
    };
    for w in words {
        for theta in thetas {
            for (slot, &check) in checks.iter().enumerate() {
                match run_check(check, w, theta, max_power)? {
                    CheckOutcome::Pass => out.tested[slot] += 1,
                    CheckOutcome::Skipped => out.skipped[slot] += 1,
                    CheckOutcome::Fail(failure) => {
                        out.tested[slot] += 1;
                        out.counterexamples.push(Counterexample {
                            check,
                            theta: theta.spec_string(),
                            word: w.clone(),
                            detail: failure.detail,
                            observed: failure.observed,
                        });
                    }
                }
            }
            if track_extremal {
                let census = theta_class_census(w, theta)?;
                let pals = census.palindromes.len();
                if pals > out.max_palindromes {
                    out.max_palindromes = pals;
                    out.palindrome_witnesses.clear();
                }
                if pals == out.max_palindromes {
                    out.palindrome_witnesses.push((theta.spec_string(), w.clone()));
                }
                let theta_pals = census.theta_palindromes.len();
                if theta_pals > out.max_theta_palindromes {
                    out.max_theta_palindromes = theta_pals;
                    out.theta_palindrome_witnesses.clear();
                }
                if theta_pals == out.max_theta_palindromes {
                    out.theta_palindrome_witnesses
                        .push((theta.spec_string(), w.clone()));
                }
            }
        }
    }
    Ok(out)
}

fn scan(
    config: &SweepConfig,
    thetas: &[Involution],
    track_extremal: bool,
) -> Result<(Vec<CheckStats>, Extremal), SweepError> {
    let words: Vec<Word> = enumerate_words(&config.alphabet, config.max_len).collect();
    let jobs = config.jobs.min(words.len()).max(1);
    let chunk_size = words.len().div_ceil(jobs);
    let checks = &config.checks;
    let max_power = config.max_power;

    let outputs: Vec<WorkerOutput> = std::thread::scope(|scope| {
        let handles: Vec<_> = words
            .chunks(chunk_size)
            .map(|chunk| {
                scope.spawn(move || process_chunk(chunk, thetas, checks, max_power, track_extremal))
            })
            .collect();
        handles
            .into_iter()
            .map(|handle| handle.join().expect("sweep worker panicked"))
            .collect::<Result<Vec<_>, _>>()
    })?;

    // merge is deterministic: tallies commute, counterexamples get sorted
    let mut stats: Vec<CheckStats> = checks
        .iter()
        .map(|&id| CheckStats {
            id,
            tested: 0,
            skipped: 0,
            counterexamples: Vec::new(),
        })
        .collect();
    let mut extremal = Extremal::default();
    let mut all_counterexamples: Vec<Counterexample> = Vec::new();
    for output in &outputs {
        for (slot, stat) in stats.iter_mut().enumerate() {
            stat.tested += output.tested[slot];
            stat.skipped += output.skipped[slot];
        }
        all_counterexamples.extend(output.counterexamples.iter().cloned());
        extremal.max_palindromes = extremal.max_palindromes.max(output.max_palindromes);
        extremal.max_theta_palindromes = extremal
            .max_theta_palindromes
            .max(output.max_theta_palindromes);
    }
    if track_extremal {
        for output in &outputs {
            if output.max_palindromes == extremal.max_palindromes {
                extremal
                    .witnesses
                    .extend(output.palindrome_witnesses.iter().map(|(theta, word)| {
                        ExtremalWitness {
                            kind: ExtremalKind::Palindrome,
                            theta: theta.clone(),
                            word: word.clone(),
                            count: extremal.max_palindromes,
                        }
                    }));
            }
            if output.max_theta_palindromes == extremal.max_theta_palindromes {
                extremal.witnesses.extend(
                    output
                        .theta_palindrome_witnesses
                        .iter()
                        .map(|(theta, word)| ExtremalWitness {
                            kind: ExtremalKind::ThetaPalindrome,
                            theta: theta.clone(),
                            word: word.clone(),
                            count: extremal.max_theta_palindromes,
                        }),
                );
            }
        }
        extremal
            .witnesses
            .sort_by(|a, b| (a.kind, &a.theta, &a.word).cmp(&(b.kind, &b.theta, &b.word)));
    }
    all_counterexamples.sort_by(|a, b| {
        (a.check, &a.theta, &a.word).cmp(&(b.check, &b.theta, &b.word))
    });
    for counterexample in all_counterexamples {
        let slot = checks
            .iter()
            .position(|&id| id == counterexample.check)
            .expect("counterexample check is configured");
        stats[slot].counterexamples.push(counterexample);
    }
    Ok((stats, extremal))
}

fn config_echo(config: &SweepConfig, thetas: &[Involution]) -> ConfigEcho {
    ConfigEcho {
        alphabet: config.alphabet.to_string(),
        theta: match &config.thetas {
            ThetaSelection::All => "ALL".to_string(),
            ThetaSelection::List(list) => list
                .iter()
                .map(Involution::spec_string)
                .collect::<Vec<_>>()
                .join(";"),
        },
        involutions: thetas.iter().map(Involution::spec_string).collect(),
        max_len: config.max_len,
        max_power: config.max_power,
        checks: config.checks.clone(),
        jobs: config.jobs,
    }
}

/// Runs every configured check over the whole range and reports tallies,
/// sorted counterexamples, and the extremal section. The report does not
/// depend on `jobs` (except for `wall_time_ms`).
pub fn run_checks(config: &SweepConfig) -> Result<SweepReport, SweepError> {
    let start = Instant::now();
    let thetas = validate(config, true)?;
    let (checks, extremal) = scan(config, &thetas, true)?;
    Ok(SweepReport {
        config: config_echo(config, &thetas),
        checks,
        extremal,
        wall_time_ms: start.elapsed().as_millis(),
    })
}

/// Computes only the extremal section; `config.checks` is ignored.
pub fn extremal_search(config: &SweepConfig) -> Result<Extremal, SweepError> {
    let thetas = validate(config, false)?;
    let stripped = SweepConfig {
        checks: Vec::new(),
        ..config.clone()
    };
    let (_, extremal) = scan(&stripped, &thetas, true)?;
    Ok(extremal)
}
