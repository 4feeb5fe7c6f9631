//! Realization: working tree, transformations, word forms, spelling rules
//! and detokenization.

pub mod detok;
mod link;
pub mod stringify;
pub mod token;
pub mod working;

use chrono::NaiveDateTime;

use crate::io::warnings::{plain_message, warning_sentence, Issue, Warning, WarningKey};
use crate::lang::{with_lang, Lang};
use crate::lexicon::Lexicons;
use crate::morphology::spelling::apply_spelling_rules;
use crate::syntax::{Constituent, PhraseKind, Relation, TerminalKind};
use crate::transform::options::Question;
use crate::transform::transform;
use detok::{detokenize, DetokOptions};
use stringify::Env;
use token::Token;
use working::{Node, Work};

#[derive(Clone, Debug)]
pub struct Config {
    /// Narrow no-break spaces before French high punctuation.
    pub french_spacing: bool,
    /// Reference instant for relative dates.
    pub now: NaiveDateTime,
    /// Drop tags, keep their content.
    pub no_html: bool,
}

impl Default for Config {
    fn default() -> Config {
        Config { french_spacing: true, now: chrono::Local::now().naive_local(), no_html: false }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Realization {
    pub text: String,
    pub tokens: Vec<Token>,
    pub warnings: Vec<Warning>,
}

/// A question and the words it asks about.
#[derive(Clone, Debug, PartialEq)]
pub struct QuestionForm {
    pub question: Realization,
    pub answer: Option<String>,
    pub answer_tokens: Vec<Token>,
}

#[derive(Clone)]
pub struct Realizer {
    lexicons: Lexicons,
    config: Config,
}

impl Default for Realizer {
    fn default() -> Realizer {
        Realizer::new()
    }
}

/// Top-level constituents that are capitalized and punctuated.
fn is_sentence(c: &Constituent) -> bool {
    match c {
        Constituent::Phrase(p) => matches!(p.kind, PhraseKind::S | PhraseKind::SP),
        Constituent::Dependent(d) => d.rel == Relation::Root,
        Constituent::Terminal(t) => t.kind == TerminalKind::Q,
    }
}

struct Outcome {
    realization: Realization,
    answer: Option<Vec<Token>>,
    issues: Vec<(Issue, Lang)>,
}

impl Realizer {
    pub fn new() -> Realizer {
        Realizer::with_lexicons(Lexicons::builtin())
    }

    pub fn with_lexicons(lexicons: Lexicons) -> Realizer {
        Realizer { lexicons, config: Config::default() }
    }

    pub fn with_config(mut self, config: Config) -> Realizer {
        self.config = config;
        self
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn lexicons(&self) -> &Lexicons {
        &self.lexicons
    }

    pub fn realize(&self, c: &Constituent) -> Realization {
        let out = self.run(c, None);
        self.finish(out).0
    }

    /// Realizes `c` as the question `q` and gives the removed part separately.
    pub fn question(&self, c: &Constituent, q: Question) -> QuestionForm {
        let (question, answer) = self.finish(self.run(c, Some(q)));
        let answer_tokens = answer.unwrap_or_default();
        let text = (!answer_tokens.is_empty()).then(|| detokenize(&answer_tokens, &self.detok_options(None, false)));
        QuestionForm { question, answer: text, answer_tokens }
    }

    /// Question kinds that `c` supports: those whose removed part exists.
    pub fn applicable_questions(&self, c: &Constituent) -> Vec<Question> {
        Question::ALL
            .iter()
            .copied()
            .filter(|q| {
                let out = self.run(c, Some(*q));
                !out.issues.iter().any(|(i, _)| {
                    i.key == WarningKey::InapplicableOption && i.args.first().map(String::as_str) == Some(q.code())
                })
            })
            .collect()
    }

    fn detok_options(&self, terminal: Option<&str>, capitalize: bool) -> DetokOptions {
        DetokOptions {
            capitalize,
            terminal: terminal.map(str::to_string),
            french_spacing: self.config.french_spacing,
        }
    }

    fn run(&self, c: &Constituent, q: Option<Question>) -> Outcome {
        let mut work = Work::new(&self.lexicons);
        let mut root = work.build(c);
        if let Some(q) = q {
            root.props.typ.int = Some(q);
        }
        work.place_adjectives(&mut root);
        work.apply_writes(&mut root);
        let answer = transform(&mut work, &mut root);
        let env = Env { now: self.config.now, no_html: self.config.no_html };
        let tokens = apply_spelling_rules(work.tokens(&root, &env), &self.lexicons);
        let answer = answer.map(|a: Node| apply_spelling_rules(work.tokens(&a, &env), &self.lexicons));
        let sentence = is_sentence(c);
        let typ = &root.props.typ;
        let punctuated = sentence && root.props.after.is_empty() && root.props.around.is_empty();
        let terminal = punctuated.then_some(if typ.int.is_some() {
            "?"
        } else if typ.exc {
            "!"
        } else {
            "."
        });
        let capitalize = sentence && root.props.cap != Some(false);
        let empty = tokens.iter().all(|t| t.text.is_empty() && t.prefix.is_empty() && t.suffix.is_empty());
        let text = if empty {
            if sentence {
                work.issue(Issue::new(WarningKey::BadConstituent, [root.kind_code()]), root.lang);
            }
            String::new()
        } else {
            detokenize(&tokens, &self.detok_options(terminal, capitalize))
        };
        Outcome { realization: Realization { text, tokens, warnings: Vec::new() }, answer, issues: work.issues }
    }

    fn finish(&self, mut out: Outcome) -> (Realization, Option<Vec<Token>>) {
        out.realization.warnings = self.warnings(&out.issues);
        (out.realization, out.answer)
    }

    /// Each distinct issue as a sentence in the language where it arose.
    fn warnings(&self, issues: &[(Issue, Lang)]) -> Vec<Warning> {
        let mut seen: Vec<&(Issue, Lang)> = Vec::new();
        for i in issues {
            if !seen.contains(&i) {
                seen.push(i);
            }
        }
        seen.into_iter()
            .map(|(issue, lang)| {
                let message = match with_lang(*lang, || warning_sentence(issue.key, &issue.args, *lang)) {
                    Some(s) => self.run(&s, None).realization.text,
                    None => plain_message(issue.key, &issue.args, *lang),
                };
                Warning { key: issue.key, args: issue.args.clone(), lang: *lang, message }
            })
            .collect()
    }
}
