//! Command-line realizer: JSON specifications in, sentences out.

use std::fs::File;
use std::io::{self, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use rand::rngs::StdRng;
use rand::SeedableRng;
use thiserror::Error;

use realizer::io::json::{parse_spec_with, serialize_spec, SpecError};
use realizer::io::Lemmatizer;
use realizer::lang::{with_lang, Lang};
use realizer::lexicon::{self, LexiconError, Lexicons, Rules};
use realizer::realize::{Config, Realizer};

#[derive(Parser)]
#[command(name = "realize", version, about = "Realize JSON sentence specifications as text")]
struct Args {
    /// Default language of constituents without a "lang" key.
    #[arg(long, default_value = "en", value_parser = parse_lang)]
    lang: Lang,
    /// Lexicon file replacing the built-in one for --lang.
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// Rules file used with --lexicon (defaults to the built-in rules).
    #[arg(long, requires = "lexicon")]
    rules: Option<PathBuf>,
    /// Seed for oneOf choices; each input is realized with a fresh generator.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print the readings of a word form instead of realizing.
    #[arg(long, value_name = "FORM")]
    lemmatize: Option<String>,
    /// Drop HTML tags from the output.
    #[arg(long)]
    no_html: bool,
    /// Print a JSON object with the serialized specification and the text.
    #[arg(long)]
    json_out: bool,
    /// Input file; standard input when absent.
    input: Option<PathBuf>,
}

fn parse_lang(s: &str) -> Result<Lang, String> {
    Lang::parse(s).ok_or_else(|| format!("unknown language {s:?} (expected en or fr)"))
}

#[derive(Debug, Error)]
enum SetupError {
    #[error("{path}: {source}")]
    Open { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Lexicon { path: PathBuf, source: LexiconError },
    #[error("reading input: {0}")]
    Input(#[from] io::Error),
}

fn open(path: &PathBuf) -> Result<File, SetupError> {
    File::open(path).map_err(|source| SetupError::Open { path: path.clone(), source })
}

fn lexicons(args: &Args) -> Result<Lexicons, SetupError> {
    let Some(path) = &args.lexicon else { return Ok(Lexicons::builtin()) };
    let rules = match &args.rules {
        Some(r) => Rules::from_reader(BufReader::new(open(r)?), args.lang)
            .map_err(|source| SetupError::Lexicon { path: r.clone(), source })?,
        None => lexicon::builtin(args.lang).rules().clone(),
    };
    let lex = lexicon::load_lexicon(BufReader::new(open(path)?), rules)
        .map_err(|source| SetupError::Lexicon { path: path.clone(), source })?;
    Ok(Lexicons::builtin().with(lex))
}

/// One document, or one document per non-empty line.
fn documents(text: &str) -> Vec<(usize, &str)> {
    if serde_json::from_str::<serde_json::Value>(text).is_ok() {
        return vec![(1, text)];
    }
    text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()).map(|(i, l)| (i + 1, l)).collect()
}

fn realize_one(r: &Realizer, args: &Args, doc: &str) -> Result<(String, Vec<String>), SpecError> {
    let mut rng = StdRng::seed_from_u64(args.seed);
    let spec = with_lang(args.lang, || parse_spec_with(doc, &mut rng))?;
    let out = r.realize(&spec);
    let warnings = out.warnings.into_iter().map(|w| w.message).collect();
    let line = if args.json_out {
        let spec: serde_json::Value = serde_json::from_str(&serialize_spec(&spec)).unwrap_or_default();
        serde_json::json!({"spec": spec, "text": out.text}).to_string()
    } else {
        out.text
    };
    Ok((line, warnings))
}

fn run(args: &Args) -> Result<bool, SetupError> {
    let lexicons = lexicons(args)?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if let Some(form) = &args.lemmatize {
        let lem = Lemmatizer::new(lexicons.get(args.lang));
        for c in lem.lemmatize(form) {
            writeln!(out, "{}", c.expression())?;
        }
        return Ok(true);
    }
    let mut text = String::new();
    match &args.input {
        Some(p) => BufReader::new(open(p)?).read_to_string(&mut text)?,
        None => io::stdin().lock().read_to_string(&mut text)?,
    };
    let config = Config { no_html: args.no_html, ..Config::default() };
    let r = Realizer::with_lexicons(lexicons).with_config(config);
    let mut ok = true;
    for (line, doc) in documents(&text) {
        match realize_one(&r, args, doc) {
            Ok((s, warnings)) => {
                writeln!(out, "{s}")?;
                for w in warnings {
                    eprintln!("line {line}: {w}");
                }
            }
            Err(e) => {
                ok = false;
                writeln!(out)?;
                eprintln!("line {line}: {e}");
            }
        }
    }
    out.flush()?;
    Ok(ok)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("realize: {e}");
            ExitCode::from(2)
        }
    }
}

