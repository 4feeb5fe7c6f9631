//! Declension and conjugation tables plus the word lists driving spelling rules.

use std::collections::{BTreeMap, HashMap};
use std::io::Read;

use serde::Deserialize;
use serde_json::Value;

use super::LexiconError;
use crate::lang::Lang;

/// Stem rule meaning "the forms are whole words".
pub const WHOLE_WORD: &str = "*";

#[derive(Clone, Debug, PartialEq)]
pub struct DeclensionTable {
    pub id: String,
    pub ending: String,
    pub forms: BTreeMap<String, String>,
}

impl DeclensionTable {
    /// True when forms are keyed by gender and number ("ms", "fp", ...).
    pub fn gendered(&self) -> bool {
        self.forms.contains_key("ms")
    }
}

/// One tense of a conjugation table; `None` marks a defective cell.
#[derive(Clone, Debug, PartialEq)]
pub enum TenseCells {
    Uniform(Option<String>),
    Persons(Vec<Option<String>>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConjugationTable {
    pub id: String,
    pub ending: String,
    pub tenses: BTreeMap<String, TenseCells>,
}

#[derive(Clone, Debug, Default, Deserialize)]
pub struct Elision {
    #[serde(default)]
    pub elidable: Vec<String>,
    /// Words that elide only before the listed followers ("si" before "il").
    #[serde(default)]
    pub conditional: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Debug, Default, Deserialize)]
pub struct AnExceptions {
    /// Vowel-initial prefixes that still take "a".
    #[serde(default)]
    pub a: Vec<String>,
    /// Consonant-initial prefixes that take "an".
    #[serde(default)]
    pub an: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Rules {
    pub lang: Lang,
    pub declension: HashMap<String, DeclensionTable>,
    pub conjugation: HashMap<String, ConjugationTable>,
    pub elision: Elision,
    pub euphony: BTreeMap<String, String>,
    pub contraction: BTreeMap<String, String>,
    pub an_exceptions: AnExceptions,
    pub adjective_pre: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRules {
    language: String,
    declension: BTreeMap<String, RawDecl>,
    conjugation: BTreeMap<String, RawConj>,
    elision: Elision,
    #[serde(default)]
    euphony: BTreeMap<String, String>,
    #[serde(default)]
    contraction: BTreeMap<String, String>,
    #[serde(default, rename = "anExceptions")]
    an_exceptions: AnExceptions,
    #[serde(default, rename = "adjectivePre")]
    adjective_pre: Vec<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDecl {
    ending: String,
    forms: BTreeMap<String, String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConj {
    ending: String,
    t: BTreeMap<String, Value>,
}

fn cell(v: &Value) -> Option<Option<String>> {
    match v {
        Value::Null => Some(None),
        Value::String(s) => Some(Some(s.clone())),
        _ => None,
    }
}

fn expected_len(tense: &str) -> Option<&'static [usize]> {
    match tense {
        "p" | "i" | "ps" | "f" | "c" | "s" | "si" => Some(&[1, 6]),
        "ip" => Some(&[1, 3]),
        "pp" => Some(&[1, 4]),
        "pr" | "b" => Some(&[1]),
        _ => None,
    }
}

fn parse_tense(table: &str, tense: &str, v: &Value) -> Result<TenseCells, LexiconError> {
    let bad = |msg: String| LexiconError::Table { table: table.to_string(), msg };
    let lens = expected_len(tense).ok_or_else(|| bad(format!("unknown tense {tense:?}")))?;
    match v {
        Value::Array(items) => {
            if !lens.contains(&items.len()) || items.len() == 1 {
                return Err(bad(format!("tense {tense} has {} cells", items.len())));
            }
            let cells = items
                .iter()
                .map(|i| cell(i).ok_or_else(|| bad(format!("tense {tense}: cell is not a string"))))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(TenseCells::Persons(cells))
        }
        other => cell(other)
            .map(TenseCells::Uniform)
            .ok_or_else(|| bad(format!("tense {tense}: expected string, null or array"))),
    }
}

impl Rules {
    pub fn from_reader(reader: impl Read, lang: Lang) -> Result<Rules, LexiconError> {
        let raw: RawRules = serde_json::from_reader(reader).map_err(|e| LexiconError::Parse {
            what: "rules file",
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        })?;
        if Lang::parse(&raw.language) != Some(lang) {
            return Err(LexiconError::Table {
                table: "language".into(),
                msg: format!("rules are for {:?}, expected {lang}", raw.language),
            });
        }
        let declension = raw
            .declension
            .into_iter()
            .map(|(id, d)| {
                let table = DeclensionTable { id: id.clone(), ending: d.ending, forms: d.forms };
                (id, table)
            })
            .collect();
        let mut conjugation = HashMap::new();
        for (id, c) in raw.conjugation {
            let mut tenses = BTreeMap::new();
            for (tense, v) in &c.t {
                tenses.insert(tense.clone(), parse_tense(&id, tense, v)?);
            }
            conjugation.insert(id.clone(), ConjugationTable { id, ending: c.ending, tenses });
        }
        Ok(Rules {
            lang,
            declension,
            conjugation,
            elision: raw.elision,
            euphony: raw.euphony,
            contraction: raw.contraction,
            an_exceptions: raw.an_exceptions,
            adjective_pre: raw.adjective_pre,
        })
    }
}
