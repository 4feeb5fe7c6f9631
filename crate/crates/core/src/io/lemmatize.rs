//! Reverse lookup: from a word form to the lemmas and features producing it.

use std::collections::HashMap;

use crate::features::{Case, Degree, FeatureBundle, Gender, Number, Person, Tense};
use crate::lang::Lang;
use crate::lexicon::{Lexicon, LexiconEntry, Pos, TenseCells};
use crate::morphology::{compare, conjugate, decline};
use crate::par;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub lemma: String,
    pub pos: Pos,
    pub features: FeatureBundle,
}

impl Candidate {
    /// The expression notation for this reading, e.g. `N("spring").n("p")`.
    pub fn expression(&self) -> String {
        let f = &self.features;
        let mut s = format!("{}({:?})", self.pos, self.lemma);
        let mut opt = |k: &str, v: Option<&str>| {
            if let Some(v) = v {
                s.push_str(&format!(".{k}({v:?})"));
            }
        };
        opt("t", f.t.map(Tense::code));
        opt("g", f.g.map(Gender::code));
        opt("n", f.n.map(Number::code));
        opt("c", f.c.map(Case::code));
        opt("f", f.f.map(Degree::code));
        if let Some(pe) = f.pe {
            s.push_str(&format!(".pe({})", pe.index() + 1));
        }
        if let Some((g, n)) = f.pp_agree {
            s.push_str(&format!(" /* agreeing {g}{n} */"));
        }
        s
    }
}

pub struct Lemmatizer {
    lang: Lang,
    index: HashMap<String, Vec<Candidate>>,
}

fn persons() -> impl Iterator<Item = (Person, Number)> {
    [Number::S, Number::P].into_iter().flat_map(|n| Person::ALL.iter().map(move |&p| (p, n)))
}

fn verb_bundles(lex: &Lexicon, entry: &LexiconEntry) -> Vec<FeatureBundle> {
    let Some(table) = lex.rules().conjugation.get(&entry.table) else { return Vec::new() };
    let mut out = Vec::new();
    for &t in Tense::ALL {
        if t.compound_base().is_some() || (lex.lang() == Lang::En && matches!(t, Tense::F | Tense::C)) {
            continue;
        }
        let uniform = matches!(table.tenses.get(t.code()), Some(TenseCells::Uniform(_)) | None);
        let base = FeatureBundle { t: Some(t), ..Default::default() };
        if t == Tense::Pp && lex.lang() == Lang::Fr {
            for g in [Gender::M, Gender::F] {
                for n in [Number::S, Number::P] {
                    out.push(FeatureBundle { pp_agree: Some((g, n)), ..base.clone() });
                }
            }
        } else if uniform && !entry.irregular.keys().any(|k| k.starts_with(&format!("{}-", t.code()))) {
            out.push(base);
        } else {
            out.extend(persons().map(|(pe, n)| FeatureBundle { pe: Some(pe), n: Some(n), ..base.clone() }));
        }
    }
    out
}

fn gender_number(lang: Lang) -> Vec<FeatureBundle> {
    let genders: &[Option<Gender>] = match lang {
        Lang::En => &[None],
        Lang::Fr => &[Some(Gender::M), Some(Gender::F)],
    };
    let mut out = Vec::new();
    for &g in genders {
        for n in [Number::S, Number::P] {
            out.push(FeatureBundle { g, n: Some(n), ..Default::default() });
        }
    }
    out
}

fn pronoun_bundles(lex: &Lexicon, entry: &LexiconEntry) -> Vec<FeatureBundle> {
    let personal = lex.rules().declension.get(&entry.table).is_some_and(|t| t.forms.keys().any(|k| k.contains('-')));
    if !personal {
        return gender_number(lex.lang());
    }
    let mut out = Vec::new();
    for &c in Case::ALL {
        for (pe, n) in persons() {
            for &g in Gender::ALL {
                out.push(FeatureBundle { pe: Some(pe), n: Some(n), g: Some(g), c: Some(c), ..Default::default() });
            }
        }
    }
    out
}

/// Every (features, form) pair of one entry; multi-word forms are left out.
pub fn forms_of(lex: &Lexicon, entry: &LexiconEntry) -> Vec<(FeatureBundle, String)> {
    let one = |r: Result<Vec<String>, _>| match r {
        Ok(w) if w.len() == 1 => Some(w.into_iter().next().unwrap_or_default()),
        _ => None,
    };
    let bundles = match entry.pos {
        Pos::V => verb_bundles(lex, entry),
        Pos::N | Pos::D => gender_number(lex.lang()),
        Pos::Pro => pronoun_bundles(lex, entry),
        Pos::A | Pos::Adv => {
            let mut v = Vec::new();
            for b in gender_number(lex.lang()) {
                for f in [None, Some(Degree::Co), Some(Degree::Su)] {
                    v.push(FeatureBundle { f, ..b.clone() });
                }
            }
            v
        }
        Pos::P | Pos::C => return vec![(FeatureBundle::default(), entry.lemma.clone())],
    };
    bundles
        .into_iter()
        .filter_map(|b| {
            let form = match entry.pos {
                Pos::V => one(conjugate(lex, entry, &b)),
                Pos::A | Pos::Adv => one(compare(lex, entry, &b)),
                _ => decline(lex, entry, &b).ok(),
            }?;
            (!form.is_empty()).then_some((b, form))
        })
        .collect()
}

impl Lemmatizer {
    /// Builds the index by generating every form of every entry.
    pub fn new(lex: &Lexicon) -> Lemmatizer {
        let entries: Vec<&LexiconEntry> = lex.entries().collect();
        Lemmatizer::index(lex, &entries, par::map(&entries, |e| forms_of(lex, e)))
    }

    pub fn new_sequential(lex: &Lexicon) -> Lemmatizer {
        let entries: Vec<&LexiconEntry> = lex.entries().collect();
        Lemmatizer::index(lex, &entries, par::map_sequential(&entries, |e| forms_of(lex, e)))
    }

    fn index(lex: &Lexicon, entries: &[&LexiconEntry], per_entry: Vec<Vec<(FeatureBundle, String)>>) -> Lemmatizer {
        let mut index: HashMap<String, Vec<Candidate>> = HashMap::new();
        for (entry, forms) in entries.iter().zip(per_entry) {
            for (features, form) in forms {
                let list = index.entry(form).or_default();
                if !list.iter().any(|c| c.lemma == entry.lemma && c.pos == entry.pos) {
                    list.push(Candidate { lemma: entry.lemma.clone(), pos: entry.pos, features });
                }
            }
        }
        for list in index.values_mut() {
            list.sort_by(|a, b| a.pos.code().cmp(b.pos.code()).then_with(|| a.lemma.cmp(&b.lemma)));
        }
        Lemmatizer { lang: lex.lang(), index }
    }

    pub fn lang(&self) -> Lang {
        self.lang
    }

    /// Readings of `form`, ordered by part of speech; empty when unknown.
    pub fn lemmatize(&self, form: &str) -> &[Candidate] {
        self.index.get(form).or_else(|| self.index.get(&form.to_lowercase())).map_or(&[], Vec::as_slice)
    }

    pub fn len(&self) -> usize {
        self.index.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index.is_empty()
    }
}
