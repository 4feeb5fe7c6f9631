//! Inflection from lexicon tables, plus token-adjacent spelling rules.

pub mod spelling;

use thiserror::Error;

use crate::features::{Aux, Case, Degree, FeatureBundle, Gender, Number, Person, Tense};
use crate::lang::Lang;
use crate::lexicon::rules::WHOLE_WORD;
use crate::lexicon::{Lexicon, LexiconEntry, Pos, TenseCells};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MorphError {
    #[error("{lemma} has no form for {key}")]
    NoForm { lemma: String, key: String },
    #[error("{lemma} is defective at {key}")]
    Defective { lemma: String, key: String },
    #[error("{lemma}: unknown table {table}")]
    UnknownTable { lemma: String, table: String },
}

fn stem<'a>(entry: &'a LexiconEntry, ending: &str) -> &'a str {
    if ending == WHOLE_WORD {
        ""
    } else {
        &entry.lemma[..entry.lemma.len() - ending.len()]
    }
}

fn gender_code(g: Gender) -> &'static str {
    match g {
        Gender::F => "f",
        _ => "m",
    }
}

fn pronoun_key(f: &FeatureBundle, lang: Lang, case: Case) -> Vec<String> {
    let pe = f.person();
    let n = f.number();
    let base = format!("{}{}", pe.code(), n.code());
    let mut keys = Vec::new();
    if pe == Person::Third {
        let g = match (lang, f.gender()) {
            (Lang::En, Gender::X) => "x",
            (_, g) => gender_code(g),
        };
        keys.push(format!("{base}{g}-{case}"));
    }
    keys.push(format!("{base}-{case}"));
    keys
}

/// Candidate keys from most to least specific.
fn declension_keys(lex: &Lexicon, entry: &LexiconEntry, f: &FeatureBundle) -> Result<Vec<String>, MorphError> {
    let table = lex.rules().declension.get(&entry.table).ok_or_else(|| MorphError::UnknownTable {
        lemma: entry.lemma.clone(),
        table: entry.table.clone(),
    })?;
    if entry.pos == Pos::Pro && table.forms.keys().any(|k| k.contains('-')) {
        let case = f.c.or(entry.case).unwrap_or(Case::Nom);
        return Ok(pronoun_key(f, lex.lang(), case));
    }
    let mut keys = Vec::new();
    if let Some(d) = f.f {
        if table.forms.contains_key(d.code()) || entry.irregular.contains_key(d.code()) {
            keys.push(d.code().to_string());
        }
    }
    if table.gendered() {
        keys.push(format!("{}{}", gender_code(f.gender()), f.number().code()));
    } else if table.forms.contains_key("s") {
        keys.push(f.number().code().to_string());
    }
    keys.push(String::new());
    Ok(keys)
}

/// Form of a noun, adjective, determiner, pronoun or adverb. The empty string
/// is a legal result (plural of "a").
pub fn decline(lex: &Lexicon, entry: &LexiconEntry, f: &FeatureBundle) -> Result<String, MorphError> {
    let keys = declension_keys(lex, entry, f)?;
    let table = &lex.rules().declension[&entry.table];
    for key in &keys {
        if let Some(irr) = entry.irregular.get(key) {
            return Ok(irr.clone());
        }
        if let Some(suffix) = table.forms.get(key) {
            return Ok(format!("{}{}", stem(entry, &table.ending), suffix));
        }
    }
    Err(MorphError::NoForm { lemma: entry.lemma.clone(), key: keys.join("|") })
}

/// Adjective or adverb at a degree, possibly as several words ("more", "plus").
pub fn compare(lex: &Lexicon, entry: &LexiconEntry, f: &FeatureBundle) -> Result<Vec<String>, MorphError> {
    let positive = FeatureBundle { f: None, ..f.clone() };
    let Some(degree) = f.f else {
        return decline(lex, entry, &positive).map(|w| vec![w]);
    };
    let table = lex.rules().declension.get(&entry.table);
    match lex.lang() {
        Lang::En => {
            if let Some(irr) = entry.irregular.get(degree.code()) {
                return Ok(vec![irr.clone()]);
            }
            if let Some(t) = table.filter(|t| t.forms.contains_key(degree.code())) {
                return Ok(vec![format!("{}{}", stem(entry, &t.ending), t.forms[degree.code()])]);
            }
            let marker = if degree == Degree::Co { "more" } else { "most" };
            Ok(vec![marker.to_string(), decline(lex, entry, &positive)?])
        }
        Lang::Fr => {
            let synthetic = entry
                .irregular
                .get("co")
                .map(|lemma| match lex.lookup(lemma, entry.pos) {
                    Ok(e) => decline(lex, e, &positive),
                    Err(_) => Ok(lemma.clone()),
                })
                .transpose()?;
            let mut words = Vec::new();
            if degree == Degree::Su {
                let article = match (entry.pos, f.gender(), f.number()) {
                    (Pos::Adv, _, _) => "le",
                    (_, _, Number::P) => "les",
                    (_, Gender::F, _) => "la",
                    _ => "le",
                };
                words.push(article.to_string());
            }
            match synthetic {
                Some(w) => words.push(w),
                None => {
                    words.push("plus".to_string());
                    words.push(decline(lex, entry, &positive)?);
                }
            }
            Ok(words)
        }
    }
}

fn slot_key(f: &FeatureBundle) -> String {
    format!("{}{}", f.person().code(), f.number().code())
}

fn pp_index(g: Gender, n: Number) -> usize {
    match (g, n) {
        (Gender::F, Number::S) => 1,
        (Gender::F, Number::P) => 3,
        (_, Number::P) => 2,
        _ => 0,
    }
}

/// French past participle agreement applied to a masculine singular form.
fn agree_participle(ms: &str, g: Gender, n: Number) -> String {
    let mut out = ms.to_string();
    if g == Gender::F {
        out.push('e');
    }
    if n == Number::P && !(g != Gender::F && (ms.ends_with('s') || ms.ends_with('x'))) {
        out.push('s');
    }
    out
}

/// One simple form from the table, irregular forms taking precedence.
fn simple_form(lex: &Lexicon, entry: &LexiconEntry, tense: Tense, f: &FeatureBundle) -> Result<String, MorphError> {
    let table = lex.rules().conjugation.get(&entry.table).ok_or_else(|| MorphError::UnknownTable {
        lemma: entry.lemma.clone(),
        table: entry.table.clone(),
    })?;
    let t = tense.code();
    let slot = slot_key(f);
    let key = format!("{t}-{slot}");
    let no_form = || MorphError::NoForm { lemma: entry.lemma.clone(), key: key.clone() };
    let defective = || MorphError::Defective { lemma: entry.lemma.clone(), key: key.clone() };
    let agreement = f.pp_agree;
    let finish = |ms: String| match (tense, lex.lang(), agreement) {
        (Tense::Pp, Lang::Fr, Some((g, n))) if entry.lemma != "être" => agree_participle(&ms, g, n),
        _ => ms,
    };
    if let Some(irr) = entry.irregular.get(&key).or_else(|| entry.irregular.get(t)) {
        return Ok(finish(irr.clone()));
    }
    let cells = table.tenses.get(t).ok_or_else(no_form)?;
    let stem = stem(entry, &table.ending);
    let suffix = match cells {
        TenseCells::Uniform(c) => c.as_ref().map(|s| finish(format!("{stem}{s}"))),
        TenseCells::Persons(cells) => {
            let index = match (tense, cells.len()) {
                (Tense::Pp, 4) => {
                    let (g, n) = agreement.unwrap_or((Gender::M, Number::S));
                    pp_index(g, n)
                }
                (Tense::Ip, 3) => match (f.person(), f.number()) {
                    (Person::Second, Number::S) => 0,
                    (Person::First, Number::P) => 1,
                    (Person::Second, Number::P) => 2,
                    _ if lex.lang() == Lang::En => 0,
                    _ => return Err(defective()),
                },
                _ => f.slot(),
            };
            cells.get(index).cloned().flatten().map(|s| format!("{stem}{s}"))
        }
    };
    suffix.ok_or_else(defective)
}

/// Conjugated form(s). Compound tenses yield the auxiliary then the participle.
pub fn conjugate(lex: &Lexicon, entry: &LexiconEntry, f: &FeatureBundle) -> Result<Vec<String>, MorphError> {
    let tense = f.tense();
    match (lex.lang(), tense) {
        (Lang::En, Tense::F | Tense::C) => {
            let modal = if tense == Tense::F { "will" } else { "would" };
            Ok(vec![modal.to_string(), simple_form(lex, entry, Tense::B, f)?])
        }
        (Lang::Fr, t) if t.compound_base().is_some() => {
            let aux = f.aux.or(entry.aux).unwrap_or(Aux::Av);
            let aux_lemma = if aux == Aux::Et { "être" } else { "avoir" };
            let aux_entry = lex.lookup(aux_lemma, Pos::V).map_err(|_| MorphError::NoForm {
                lemma: aux_lemma.to_string(),
                key: "entry".to_string(),
            })?;
            let base = t.compound_base().unwrap_or(Tense::P);
            let first = simple_form(lex, aux_entry, base, &FeatureBundle { pp_agree: None, ..f.clone() })?;
            let agree = match aux {
                Aux::Et => f.pp_agree.or(Some((f.gender(), f.number()))),
                Aux::Av => f.pp_agree,
            };
            let pp = simple_form(lex, entry, Tense::Pp, &FeatureBundle { pp_agree: agree, ..f.clone() })?;
            Ok(vec![first, pp])
        }
        _ => simple_form(lex, entry, tense, f).map(|w| vec![w]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::builtin;

    fn fb(pe: u8, n: Number, t: Tense) -> FeatureBundle {
        FeatureBundle {
            pe: Person::from_int(pe as i64),
            n: Some(n),
            t: Some(t),
            ..Default::default()
        }
    }

    fn conj(lang: Lang, lemma: &str, f: FeatureBundle) -> Vec<String> {
        let lex = builtin(lang);
        conjugate(lex, lex.lookup(lemma, Pos::V).unwrap(), &f).unwrap()
    }

    #[test]
    fn english_basics() {
        assert_eq!(conj(Lang::En, "eat", fb(3, Number::S, Tense::P)), ["eats"]);
        assert_eq!(conj(Lang::En, "eat", fb(3, Number::S, Tense::Ps)), ["ate"]);
        assert_eq!(conj(Lang::En, "be", fb(1, Number::S, Tense::P)), ["am"]);
        assert_eq!(conj(Lang::En, "eat", fb(2, Number::S, Tense::F)), ["will", "eat"]);
        let lex = builtin(Lang::En);
        let plural = FeatureBundle { n: Some(Number::P), ..Default::default() };
        let apple = lex.lookup("apple", Pos::N).unwrap();
        assert_eq!(decline(lex, apple, &plural).unwrap(), "apples");
        assert_eq!(decline(lex, lex.lookup("a", Pos::D).unwrap(), &plural).unwrap(), "");
        let nom = FeatureBundle { c: Some(Case::Nom), ..Default::default() };
        let him = lex.lookup("him", Pos::Pro).unwrap();
        let f = FeatureBundle { pe: him.person, n: him.number, g: him.gender, ..nom };
        assert_eq!(decline(lex, him, &f).unwrap(), "he");
    }

    #[test]
    fn english_degrees() {
        let lex = builtin(Lang::En);
        let co = FeatureBundle { f: Some(Degree::Co), ..Default::default() };
        let su = FeatureBundle { f: Some(Degree::Su), ..Default::default() };
        assert_eq!(compare(lex, lex.lookup("good", Pos::A).unwrap(), &co).unwrap(), ["better"]);
        assert_eq!(compare(lex, lex.lookup("tall", Pos::A).unwrap(), &su).unwrap(), ["tallest"]);
        assert_eq!(compare(lex, lex.lookup("red", Pos::A).unwrap(), &FeatureBundle::default()).unwrap(), ["red"]);
        let beautiful = lex.lookup("beautiful", Pos::A).unwrap();
        assert_eq!(compare(lex, beautiful, &co).unwrap(), ["more", "beautiful"]);
    }

    #[test]
    fn french_compound_and_agreement() {
        assert_eq!(conj(Lang::Fr, "donner", fb(3, Number::S, Tense::Pc)), ["a", "donné"]);
        let mut f = fb(3, Number::S, Tense::Pc);
        f.pp_agree = Some((Gender::F, Number::S));
        assert_eq!(conj(Lang::Fr, "donner", f), ["a", "donnée"]);
        let mut f = fb(3, Number::P, Tense::Pc);
        f.g = Some(Gender::F);
        assert_eq!(conj(Lang::Fr, "aller", f), ["sont", "allées"]);
        assert_eq!(conj(Lang::Fr, "manger", fb(1, Number::P, Tense::P)), ["mangeons"]);
        assert_eq!(conj(Lang::Fr, "lever", fb(1, Number::S, Tense::F)), ["lèverai"]);
        assert_eq!(conj(Lang::Fr, "appeler", fb(3, Number::P, Tense::P)), ["appellent"]);
        assert_eq!(conj(Lang::Fr, "préférer", fb(3, Number::S, Tense::P)), ["préfère"]);
        assert_eq!(conj(Lang::Fr, "être", fb(2, Number::P, Tense::P)), ["êtes"]);
        assert_eq!(conj(Lang::Fr, "prendre", fb(3, Number::P, Tense::S)), ["prennent"]);
    }

    #[test]
    fn defective_cells_are_errors() {
        let lex = builtin(Lang::Fr);
        let falloir = lex.lookup("falloir", Pos::V).unwrap();
        assert_eq!(conjugate(lex, falloir, &fb(3, Number::S, Tense::P)).unwrap(), ["faut"]);
        let err = conjugate(lex, falloir, &fb(1, Number::S, Tense::P)).unwrap_err();
        assert!(matches!(err, MorphError::Defective { .. }));
        let en = builtin(Lang::En);
        let must = en.lookup("must", Pos::V).unwrap();
        assert!(conjugate(en, must, &fb(3, Number::S, Tense::B)).is_err());
    }

    #[test]
    fn french_nouns_adjectives() {
        let lex = builtin(Lang::Fr);
        let f = |g, n| FeatureBundle { g: Some(g), n: Some(n), ..Default::default() };
        let le = lex.lookup("le", Pos::D).unwrap();
        assert_eq!(decline(lex, le, &f(Gender::F, Number::S)).unwrap(), "la");
        let cheval = lex.lookup("cheval", Pos::N).unwrap();
        assert_eq!(decline(lex, cheval, &f(Gender::M, Number::P)).unwrap(), "chevaux");
        let beau = lex.lookup("beau", Pos::A).unwrap();
        assert_eq!(decline(lex, beau, &f(Gender::F, Number::P)).unwrap(), "belles");
        let bon = lex.lookup("bon", Pos::A).unwrap();
        let co = FeatureBundle { f: Some(Degree::Co), ..f(Gender::F, Number::S) };
        assert_eq!(compare(lex, bon, &co).unwrap(), ["meilleure"]);
        let lui = lex.lookup("lui", Pos::Pro).unwrap();
        let acc = FeatureBundle { c: Some(Case::Acc), pe: Some(Person::Third), ..f(Gender::F, Number::S) };
        assert_eq!(decline(lex, lui, &acc).unwrap(), "la");
    }
}
