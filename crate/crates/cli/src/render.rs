//! Text and JSON renderers. JSON objects keep a fixed field order and
//! list sets in canonical order, so byte-identical output is reproducible
//! across runs; the empty word renders as a lambda in text and as the
//! empty string in JSON.

use serde_json::{json, Value};

use wkwords_core::conjugacy::{
    deficiency_witness, theta_conjugates, ConjugateSet, DeficiencyWitness, ThetaConjugateSet,
};
use wkwords_core::involution::Involution;
use wkwords_core::structure::{
    class_census, palindrome_witness, theta_class_census, theta_pal_pair_witness,
    theta_palindrome_witness, PalCensus, PalWitnessForm, PalindromeWitness, ThetaPalPairWitness,
    ThetaPalWitnessForm, ThetaPalindromeWitness,
};
use wkwords_core::word::Word;
use wkwords_core::word_ops::{is_palindrome, is_theta_palindrome, primitive_root, PrimitiveRoot};

use crate::sweep::SweepReport;

/// Text form of a word; the empty word is a lambda.
pub fn show_word(w: &Word) -> String {
    if w.is_empty() {
        "\u{3bb}".to_string()
    } else {
        w.to_string()
    }
}

fn show_words(words: &[Word]) -> String {
    if words.is_empty() {
        "(none)".to_string()
    } else {
        words.iter().map(show_word).collect::<Vec<_>>().join(" ")
    }
}

fn words_json(words: &[Word]) -> Value {
    Value::Array(words.iter().map(|w| Value::String(w.to_string())).collect())
}

fn census_json(elements: &[Word]) -> Value {
    json!({ "count": elements.len(), "elements": words_json(elements) })
}

fn pal_form_name(form: PalWitnessForm) -> &'static str {
    match form {
        PalWitnessForm::Prefix => "PREFIX_FORM",
        PalWitnessForm::Suffix => "SUFFIX_FORM",
    }
}

fn theta_pal_form_name(form: ThetaPalWitnessForm) -> &'static str {
    match form {
        ThetaPalWitnessForm::Uxu => "UXU",
        ThetaPalWitnessForm::Xuu => "XUU",
    }
}

fn deficiency_json(witness: &Option<DeficiencyWitness>) -> Value {
    match witness {
        None => Value::Null,
        Some(w) => json!({
            "head": w.head.to_string(),
            "link": w.link.to_string(),
            "repeats": w.repeats,
            "tail": w.tail.to_string(),
        }),
    }
}

fn deficiency_text(witness: &Option<DeficiencyWitness>) -> String {
    match witness {
        None => "none".to_string(),
        Some(w) => format!(
            "head={} link={} repeats={} tail={}",
            show_word(&w.head),
            show_word(&w.link),
            w.repeats,
            show_word(&w.tail)
        ),
    }
}

fn pal_witness_json(witness: &Option<PalindromeWitness>) -> Value {
    match witness {
        None => Value::Null,
        Some(w) => json!({
            "form": pal_form_name(w.form),
            "palindrome": w.palindrome.to_string(),
            "mirror": w.mirror.to_string(),
        }),
    }
}

fn theta_pal_witness_json(witness: &Option<ThetaPalindromeWitness>) -> Value {
    match witness {
        None => Value::Null,
        Some(w) => json!({
            "form": theta_pal_form_name(w.form),
            "core": w.core.to_string(),
            "flank": w.flank.to_string(),
        }),
    }
}

fn pair_witness_json(witness: &Option<ThetaPalPairWitness>) -> Value {
    match witness {
        None => Value::Null,
        Some(w) => json!({ "seed": w.seed.to_string(), "exponent": w.exponent }),
    }
}

/// The full structural record behind the `analyze` command.
pub struct Analysis {
    pub word: Word,
    pub theta: Involution,
    pub root: Option<PrimitiveRoot>,
    pub palindrome: bool,
    pub theta_palindrome: bool,
    pub class: ConjugateSet,
    pub theta_class: ThetaConjugateSet,
    pub class_census: PalCensus,
    pub theta_census: PalCensus,
    pub deficiency: Option<DeficiencyWitness>,
    pub pal_witness: Option<PalindromeWitness>,
    pub theta_pal_witness: Option<ThetaPalindromeWitness>,
    pub pair_witness: Option<ThetaPalPairWitness>,
}

impl Analysis {
    pub fn compute(word: &Word, theta: &Involution) -> wkwords_core::Result<Analysis> {
        Ok(Analysis {
            word: word.clone(),
            theta: theta.clone(),
            root: if word.is_empty() {
                None
            } else {
                Some(primitive_root(word)?)
            },
            palindrome: is_palindrome(word),
            theta_palindrome: is_theta_palindrome(word, theta)?,
            class: wkwords_core::conjugacy::conjugates(word),
            theta_class: theta_conjugates(word, theta)?,
            class_census: class_census(word, theta)?,
            theta_census: theta_class_census(word, theta)?,
            deficiency: deficiency_witness(word, theta)?,
            pal_witness: palindrome_witness(word, theta)?,
            theta_pal_witness: theta_palindrome_witness(word, theta)?,
            pair_witness: theta_pal_pair_witness(word, theta)?,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "source": self.word.to_string(),
            "theta": self.theta.spec_string(),
            "length": self.word.len(),
            "primitive": self.root.as_ref().map(|r| r.exponent == 1),
            "root": self.root.as_ref().map(|r| r.root.to_string()),
            "exponent": self.root.as_ref().map(|r| r.exponent),
            "palindrome": self.palindrome,
            "theta_palindrome": self.theta_palindrome,
            "class_size": self.class.elements.len(),
            "theta_class_size": self.theta_class.elements.len(),
            "class_elements": words_json(&self.class.elements),
            "theta_class_elements": words_json(&self.theta_class.elements),
            "class_pal_census": census_json(&self.class_census.palindromes),
            "class_theta_pal_census": census_json(&self.class_census.theta_palindromes),
            "pal_census": census_json(&self.theta_census.palindromes),
            "theta_pal_census": census_json(&self.theta_census.theta_palindromes),
            "witnesses": {
                "deficiency": deficiency_json(&self.deficiency),
                "palindrome": pal_witness_json(&self.pal_witness),
                "theta_palindrome": theta_pal_witness_json(&self.theta_pal_witness),
                "theta_pal_pair": pair_witness_json(&self.pair_witness),
            },
        })
    }

    pub fn to_text(&self) -> String {
        let mut lines = Vec::new();
        lines.push(format!("word: {}", show_word(&self.word)));
        lines.push(format!("theta: {}", self.theta.spec_string()));
        lines.push(format!("length: {}", self.word.len()));
        match &self.root {
            None => lines.push("primitive: -".to_string()),
            Some(r) => {
                lines.push(format!("primitive: {}", r.exponent == 1));
                lines.push(format!("root: {}^{}", r.root, r.exponent));
            }
        }
        lines.push(format!("palindrome: {}", self.palindrome));
        lines.push(format!("theta-palindrome: {}", self.theta_palindrome));
        lines.push(format!(
            "conjugacy class ({}): {}",
            self.class.elements.len(),
            show_words(&self.class.elements)
        ));
        lines.push(format!(
            "theta-conjugates ({}): {}",
            self.theta_class.elements.len(),
            show_words(&self.theta_class.elements)
        ));
        lines.push(format!(
            "palindromes in C(w) ({}): {}",
            self.class_census.palindromes.len(),
            show_words(&self.class_census.palindromes)
        ));
        lines.push(format!(
            "theta-palindromes in C(w) ({}): {}",
            self.class_census.theta_palindromes.len(),
            show_words(&self.class_census.theta_palindromes)
        ));
        lines.push(format!(
            "palindromes in C_theta(w) ({}): {}",
            self.theta_census.palindromes.len(),
            show_words(&self.theta_census.palindromes)
        ));
        lines.push(format!(
            "theta-palindromes in C_theta(w) ({}): {}",
            self.theta_census.theta_palindromes.len(),
            show_words(&self.theta_census.theta_palindromes)
        ));
        lines.push(format!("deficiency witness: {}", deficiency_text(&self.deficiency)));
        lines.push(match &self.pal_witness {
            None => "palindrome witness: none".to_string(),
            Some(w) => format!(
                "palindrome witness: {} palindrome={} mirror={}",
                pal_form_name(w.form),
                show_word(&w.palindrome),
                show_word(&w.mirror)
            ),
        });
        lines.push(match &self.theta_pal_witness {
            None => "theta-palindrome witness: none".to_string(),
            Some(w) => format!(
                "theta-palindrome witness: {} core={} flank={}",
                theta_pal_form_name(w.form),
                show_word(&w.core),
                show_word(&w.flank)
            ),
        });
        lines.push(match &self.pair_witness {
            None => "theta-palindrome pair witness: none".to_string(),
            Some(w) => format!(
                "theta-palindrome pair witness: seed={} exponent={}",
                show_word(&w.seed),
                w.exponent
            ),
        });
        lines.join("\n")
    }
}

pub fn conjugates_text(set: &ConjugateSet) -> String {
    set.elements
        .iter()
        .map(show_word)
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn conjugates_json(set: &ConjugateSet) -> Value {
    json!({
        "source": set.source.to_string(),
        "theta": Value::Null,
        "elements": words_json(&set.elements),
    })
}

pub fn theta_conjugates_text(set: &ThetaConjugateSet) -> String {
    set.elements
        .iter()
        .map(show_word)
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn theta_conjugates_json(set: &ThetaConjugateSet) -> Value {
    json!({
        "source": set.source.to_string(),
        "theta": set.theta.spec_string(),
        "elements": words_json(&set.elements),
        "entries": set.entries.iter().map(|e| json!({
            "split": e.split,
            "value": e.value.to_string(),
        })).collect::<Vec<_>>(),
    })
}

pub fn decompose_text(set: &ThetaConjugateSet, witness: &Option<DeficiencyWitness>) -> String {
    format!(
        "source: {}\ntheta: {}\ntheta-conjugates ({} of max {}): {}\nwitness: {}",
        show_word(&set.source),
        set.theta.spec_string(),
        set.elements.len(),
        set.source.len() + 1,
        show_words(&set.elements),
        deficiency_text(witness)
    )
}

pub fn decompose_json(set: &ThetaConjugateSet, witness: &Option<DeficiencyWitness>) -> Value {
    json!({
        "source": set.source.to_string(),
        "theta": set.theta.spec_string(),
        "elements": words_json(&set.elements),
        "witness": deficiency_json(witness),
    })
}

pub fn power_growth_text(sizes: &[usize]) -> String {
    sizes
        .iter()
        .enumerate()
        .map(|(i, size)| format!("{} {}", i + 1, size))
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn power_growth_json(word: &Word, theta: &Involution, sizes: &[usize]) -> Value {
    json!({
        "source": word.to_string(),
        "theta": theta.spec_string(),
        "max_power": sizes.len(),
        "sizes": sizes,
    })
}

pub fn involutions_text(thetas: &[Involution]) -> String {
    thetas
        .iter()
        .map(Involution::spec_string)
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn involutions_json(alphabet: &str, thetas: &[Involution]) -> Value {
    json!({
        "alphabet": alphabet,
        "count": thetas.len(),
        "involutions": thetas.iter().map(Involution::spec_string).collect::<Vec<_>>(),
    })
}

pub fn sweep_report_json(report: &SweepReport) -> Value {
    json!({
        "config": {
            "alphabet": report.config.alphabet,
            "theta": report.config.theta,
            "involutions": report.config.involutions,
            "max_len": report.config.max_len,
            "max_power": report.config.max_power,
            "checks": report.config.checks.iter().map(|c| c.name()).collect::<Vec<_>>(),
            "jobs": report.config.jobs,
        },
        "checks": report.checks.iter().map(|stat| json!({
            "id": stat.id.name(),
            "tested": stat.tested,
            "skipped": stat.skipped,
            "counterexamples": stat.counterexamples.iter().map(|c| json!({
                "check": c.check.name(),
                "theta": c.theta,
                "word": c.word.to_string(),
                "detail": c.detail,
                "observed": c.observed,
            })).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "extremal": {
            "max_pal": report.extremal.max_palindromes,
            "max_theta_pal": report.extremal.max_theta_palindromes,
            "witnesses": report.extremal.witnesses.iter().map(|w| json!({
                "kind": w.kind.name(),
                "theta": w.theta,
                "word": w.word.to_string(),
                "count": w.count,
            })).collect::<Vec<_>>(),
        },
        "wall_time_ms": report.wall_time_ms,
    })
}

pub fn sweep_report_text(report: &SweepReport) -> String {
    let mut lines = Vec::new();
    lines.push(format!("alphabet: {}", report.config.alphabet));
    lines.push(format!(
        "theta: {} ({} involutions)",
        report.config.theta,
        report.config.involutions.len()
    ));
    lines.push(format!(
        "max-len: {}  max-power: {}  jobs: {}",
        report.config.max_len, report.config.max_power, report.config.jobs
    ));
    for stat in &report.checks {
        lines.push(format!(
            "{} tested={} skipped={} counterexamples={}",
            stat.id,
            stat.tested,
            stat.skipped,
            stat.counterexamples.len()
        ));
        for c in &stat.counterexamples {
            lines.push(format!(
                "  theta={} word={}: {} ({})",
                c.theta,
                show_word(&c.word),
                c.detail,
                c.observed
            ));
        }
    }
    lines.push(format!(
        "max palindromes in C_theta(w): {}",
        report.extremal.max_palindromes
    ));
    lines.push(format!(
        "max theta-palindromes in C_theta(w): {}",
        report.extremal.max_theta_palindromes
    ));
    lines.push(format!("extremal witnesses ({}):", report.extremal.witnesses.len()));
    for w in &report.extremal.witnesses {
        lines.push(format!(
            "  {} theta={} word={} count={}",
            w.kind.name(),
            w.theta,
            show_word(&w.word),
            w.count
        ));
    }
    lines.push(format!("wall-time: {} ms", report.wall_time_ms));
    lines.join("\n")
}
