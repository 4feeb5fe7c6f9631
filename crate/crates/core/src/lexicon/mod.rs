//! Per-language lexica: lemma and part of speech to inherent features and
//! morphology table.

mod data;
pub mod rules;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::io::Read;
use std::sync::Arc;

use serde::de::{self, Deserializer, MapAccess, Visitor};
use serde::Deserialize;
use serde_json::Value;
use thiserror::Error;

use crate::features::{code_enum, Aux, Case, Gender, Number, Person, Tense};
use crate::lang::Lang;
pub use data::builtin;
pub use rules::{ConjugationTable, DeclensionTable, Rules, TenseCells};

code_enum!(Pos {
    N => "N",
    V => "V",
    A => "A",
    D => "D",
    Adv => "Adv",
    Pro => "Pro",
    P => "P",
    C => "C",
});

impl Pos {
    fn declines(self) -> bool {
        self != Pos::V
    }
}

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("malformed {what} at line {line}, column {column}: {msg}")]
    Parse { what: &'static str, line: usize, column: usize, msg: String },
    #[error("duplicate entry ({lemma}, {pos})")]
    Duplicate { lemma: String, pos: Pos },
    #[error("entry #{index} ({lemma}, {pos}): {msg}")]
    Entry { index: usize, lemma: String, pos: String, msg: String },
    #[error("table {table}: {msg}")]
    Table { table: String, msg: String },
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Error, Clone, PartialEq)]
#[error("{lemma} ({pos}) is not in the {lang} lexicon")]
pub struct NotFound {
    pub lemma: String,
    pub pos: Pos,
    pub lang: Lang,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LexiconEntry {
    pub lemma: String,
    pub lang: Lang,
    pub pos: Pos,
    pub table: String,
    pub gender: Option<Gender>,
    pub number: Option<Number>,
    pub person: Option<Person>,
    /// Case of the citation form of a pronoun ("him" is accusative).
    pub case: Option<Case>,
    pub h_aspire: bool,
    pub aux: Option<Aux>,
    pub irregular: BTreeMap<String, String>,
}

impl LexiconEntry {
    pub fn new(lemma: &str, lang: Lang, pos: Pos, table: &str) -> LexiconEntry {
        LexiconEntry {
            lemma: lemma.to_string(),
            lang,
            pos,
            table: table.to_string(),
            gender: None,
            number: None,
            person: None,
            case: None,
            h_aspire: false,
            aux: None,
            irregular: BTreeMap::new(),
        }
    }
}

/// Mutable lexicon under construction; `freeze` makes it queryable.
pub struct LexiconBuilder {
    lang: Lang,
    rules: Rules,
    entries: HashMap<String, Vec<LexiconEntry>>,
    count: usize,
}

fn valid_irregular_key(entry: &LexiconEntry, rules: &Rules, key: &str) -> bool {
    if entry.pos == Pos::V {
        let (tense, slot) = key.split_once('-').unwrap_or((key, ""));
        let slot_ok = slot.is_empty()
            || matches!(slot, "1s" | "2s" | "3s" | "1p" | "2p" | "3p" | "ms" | "fs" | "mp" | "fp");
        return Tense::parse(tense).is_some() && slot_ok;
    }
    if matches!(key, "co" | "su") {
        return matches!(entry.pos, Pos::A | Pos::Adv);
    }
    let structural = matches!(key, "s" | "p" | "ms" | "fs" | "mp" | "fp");
    structural || rules.declension.get(&entry.table).is_some_and(|t| t.forms.contains_key(key))
}

impl LexiconBuilder {
    pub fn new(rules: Rules) -> LexiconBuilder {
        LexiconBuilder { lang: rules.lang, rules, entries: HashMap::new(), count: 0 }
    }

    fn check(&self, entry: &LexiconEntry) -> Result<(), String> {
        if entry.lang != self.lang {
            return Err(format!("entry language {} in a {} lexicon", entry.lang, self.lang));
        }
        let known = if entry.pos.declines() {
            self.rules.declension.get(&entry.table).map(|t| &t.ending)
        } else {
            self.rules.conjugation.get(&entry.table).map(|t| &t.ending)
        };
        let ending = known.ok_or_else(|| format!("unknown table {:?}", entry.table))?;
        if ending != rules::WHOLE_WORD && !entry.lemma.ends_with(ending.as_str()) {
            return Err(format!("lemma does not end with {ending:?} required by {}", entry.table));
        }
        if entry.h_aspire && entry.lang != Lang::Fr {
            return Err("h aspiré is only meaningful in French".into());
        }
        if let Some(key) = entry.irregular.keys().find(|k| !valid_irregular_key(entry, &self.rules, k)) {
            return Err(format!("irregular form key {key:?} does not fit a {}", entry.pos));
        }
        Ok(())
    }

    pub fn add_entry(&mut self, entry: LexiconEntry) -> Result<&mut Self, LexiconError> {
        let index = self.count + 1;
        self.check(&entry).map_err(|msg| LexiconError::Entry {
            index,
            lemma: entry.lemma.clone(),
            pos: entry.pos.to_string(),
            msg,
        })?;
        let slot = self.entries.entry(entry.lemma.clone()).or_default();
        if slot.iter().any(|e| e.pos == entry.pos) {
            return Err(LexiconError::Duplicate { lemma: entry.lemma, pos: entry.pos });
        }
        slot.push(entry);
        self.count += 1;
        Ok(self)
    }

    pub fn freeze(self) -> Lexicon {
        Lexicon { lang: self.lang, rules: self.rules, entries: self.entries, count: self.count }
    }
}

/// An immutable lexicon with its rules; safe to share across threads.
#[derive(Debug)]
pub struct Lexicon {
    lang: Lang,
    rules: Rules,
    entries: HashMap<String, Vec<LexiconEntry>>,
    count: usize,
}

impl Lexicon {
    pub fn lang(&self) -> Lang {
        self.lang
    }

    pub fn rules(&self) -> &Rules {
        &self.rules
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn lookup(&self, lemma: &str, pos: Pos) -> Result<&LexiconEntry, NotFound> {
        self.entries
            .get(lemma)
            .and_then(|v| v.iter().find(|e| e.pos == pos))
            .ok_or_else(|| NotFound { lemma: lemma.to_string(), pos, lang: self.lang })
    }

    /// Every entry for a lemma, in part-of-speech order.
    pub fn entries_for(&self, lemma: &str) -> Vec<&LexiconEntry> {
        let mut v: Vec<_> = self.entries.get(lemma).map(|v| v.iter().collect()).unwrap_or_default();
        v.sort_by_key(|e| e.pos);
        v
    }

    pub fn entries(&self) -> impl Iterator<Item = &LexiconEntry> {
        self.entries.values().flatten()
    }

    /// Reopens for additions, leaving `self` untouched.
    pub fn to_builder(&self) -> LexiconBuilder {
        LexiconBuilder {
            lang: self.lang,
            rules: self.rules.clone(),
            entries: self.entries.clone(),
            count: self.count,
        }
    }
}

/// JSON object read in document order so repeated keys can be reported.
struct Ordered(Vec<(String, Value)>);

impl<'de> Deserialize<'de> for Ordered {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Ordered;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an object keyed by lemma")
            }
            fn visit_map<M: MapAccess<'de>>(self, mut map: M) -> Result<Ordered, M::Error> {
                let mut out: Vec<(String, Value)> = Vec::new();
                let mut seen = std::collections::HashSet::new();
                while let Some(k) = map.next_key::<String>()? {
                    if !seen.insert(k.clone()) {
                        return Err(de::Error::custom(format!("duplicate lemma {k:?}")));
                    }
                    let v = map.next_value::<Value>()?;
                    out.push((k, v));
                }
                Ok(Ordered(out))
            }
        }
        d.deserialize_map(V)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    tab: String,
    g: Option<String>,
    n: Option<String>,
    pe: Option<i64>,
    c: Option<String>,
    aux: Option<String>,
    #[serde(default)]
    h: bool,
    #[serde(default)]
    irreg: BTreeMap<String, String>,
}

fn convert(lemma: &str, lang: Lang, pos: Pos, raw: RawEntry) -> Result<LexiconEntry, String> {
    fn opt<T>(v: Option<String>, what: &str, f: impl Fn(&str) -> Option<T>) -> Result<Option<T>, String> {
        v.map(|s| f(&s).ok_or_else(|| format!("bad {what} {s:?}"))).transpose()
    }
    let mut e = LexiconEntry::new(lemma, lang, pos, &raw.tab);
    e.gender = opt(raw.g, "gender", Gender::parse)?;
    e.number = opt(raw.n, "number", Number::parse)?;
    e.case = opt(raw.c, "case", Case::parse)?;
    e.aux = opt(raw.aux, "auxiliary", Aux::parse)?;
    e.person = raw.pe.map(|p| Person::from_int(p).ok_or(format!("bad person {p}"))).transpose()?;
    e.h_aspire = raw.h;
    e.irregular = raw.irreg;
    Ok(e)
}

/// Reads a lexicon file against already loaded rules.
pub fn load_lexicon(source: impl Read, rules: Rules) -> Result<Lexicon, LexiconError> {
    let lang = rules.lang;
    let doc: Ordered = serde_json::from_reader(source).map_err(|e| LexiconError::Parse {
        what: "lexicon",
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    let mut builder = LexiconBuilder::new(rules);
    for (index, (lemma, value)) in doc.0.into_iter().enumerate() {
        let err = |pos: &str, msg: String| LexiconError::Entry {
            index: index + 1,
            lemma: lemma.clone(),
            pos: pos.to_string(),
            msg,
        };
        let Value::Object(by_pos) = value else {
            return Err(err("-", "expected an object keyed by part of speech".into()));
        };
        for (pos_code, fields) in by_pos {
            let pos = Pos::parse(&pos_code).ok_or_else(|| err(&pos_code, "unknown part of speech".into()))?;
            let raw: RawEntry = serde_json::from_value(fields).map_err(|e| err(&pos_code, e.to_string()))?;
            let entry = convert(&lemma, lang, pos, raw).map_err(|m| err(&pos_code, m))?;
            builder.add_entry(entry).map_err(|e| match e {
                LexiconError::Entry { msg, .. } => err(&pos_code, msg),
                other => other,
            })?;
        }
    }
    Ok(builder.freeze())
}

/// Reads a rules file then a lexicon file.
pub fn load(rules: impl Read, lexicon: impl Read, lang: Lang) -> Result<Lexicon, LexiconError> {
    load_lexicon(lexicon, Rules::from_reader(rules, lang)?)
}

/// The pair of lexica a realization consults, one per language.
#[derive(Clone, Debug)]
pub struct Lexicons {
    en: Arc<Lexicon>,
    fr: Arc<Lexicon>,
}

impl Lexicons {
    pub fn new(en: Arc<Lexicon>, fr: Arc<Lexicon>) -> Lexicons {
        Lexicons { en, fr }
    }

    pub fn builtin() -> Lexicons {
        Lexicons { en: data::builtin_arc(Lang::En), fr: data::builtin_arc(Lang::Fr) }
    }

    pub fn get(&self, lang: Lang) -> &Lexicon {
        match lang {
            Lang::En => &self.en,
            Lang::Fr => &self.fr,
        }
    }

    pub fn with(mut self, lexicon: Lexicon) -> Lexicons {
        match lexicon.lang() {
            Lang::En => self.en = Arc::new(lexicon),
            Lang::Fr => self.fr = Arc::new(lexicon),
        }
        self
    }
}

impl Default for Lexicons {
    fn default() -> Self {
        Lexicons::builtin()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rules() -> Rules {
        builtin(Lang::En).rules().clone()
    }

    #[test]
    fn lookup_by_pos() {
        let en = builtin(Lang::En);
        assert_eq!(en.lookup("eat", Pos::V).unwrap().table, "v1");
        assert!(en.lookup("apple", Pos::V).is_err());
        let fr = builtin(Lang::Fr);
        assert_eq!(fr.lookup("pomme", Pos::N).unwrap().gender, Some(Gender::F));
    }

    #[test]
    fn duplicate_lemma_has_position() {
        let src = "{\n\"apple\": {\"N\": {\"tab\": \"n1\"}},\n\"apple\": {\"N\": {\"tab\": \"n1\"}}\n}";
        let err = load_lexicon(src.as_bytes(), rules()).unwrap_err();
        match err {
            LexiconError::Parse { line, msg, .. } => {
                assert_eq!(line, 3);
                assert!(msg.contains("duplicate lemma"));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn unknown_table_names_entry() {
        let src = r#"{"kiwi": {"N": {"tab": "n99"}}}"#;
        let err = load_lexicon(src.as_bytes(), rules()).unwrap_err().to_string();
        assert!(err.contains("kiwi") && err.contains("n99"), "{err}");
    }

    #[test]
    fn builder_add_and_duplicate() {
        let mut b = builtin(Lang::En).to_builder();
        b.add_entry(LexiconEntry::new("kiwi", Lang::En, Pos::N, "n1")).unwrap();
        let dup = b.add_entry(LexiconEntry::new("apple", Lang::En, Pos::N, "n1"));
        assert!(matches!(dup, Err(LexiconError::Duplicate { .. })));
        let unknown = b.add_entry(LexiconEntry::new("zzz", Lang::En, Pos::N, "nope"));
        assert!(matches!(unknown, Err(LexiconError::Entry { .. })));
        let lex = b.freeze();
        assert_eq!(lex.lookup("kiwi", Pos::N).unwrap().lemma, "kiwi");
    }

    #[test]
    fn h_aspire_only_in_french() {
        let mut b = builtin(Lang::En).to_builder();
        let mut e = LexiconEntry::new("hero", Lang::En, Pos::N, "n1");
        e.h_aspire = true;
        assert!(b.add_entry(e).is_err());
        assert!(builtin(Lang::Fr).lookup("héros", Pos::N).unwrap().h_aspire);
    }

    #[test]
    fn desk_lexica_are_desk_sized() {
        assert!(builtin(Lang::En).len() >= 1800);
        assert!(builtin(Lang::Fr).len() >= 1800);
    }
}
