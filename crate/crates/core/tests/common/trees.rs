//! Random sentence trees over the built-in lexicon.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::Rng;
use realizer::io::batch::option_grid;
use realizer::lang::{with_lang, Lang};
use realizer::lexicon::{builtin, Pos};
use realizer::prelude::*;

fn pool(lang: Lang, pos: Pos) -> Vec<String> {
    let mut v: Vec<String> = builtin(lang)
        .entries()
        .filter(|e| e.pos == pos && (pos != Pos::N || lang == Lang::En || e.gender.is_some()))
        .map(|e| e.lemma.clone())
        .filter(|l| l.chars().all(char::is_alphabetic))
        .collect();
    v.sort();
    v
}

pub struct Pools {
    lang: Lang,
    nouns: Vec<String>,
    verbs: Vec<String>,
    adjectives: Vec<String>,
}

impl Pools {
    pub fn new(lang: Lang) -> Pools {
        let skip: &[&str] = match lang {
            Lang::En => &["be", "can", "could", "may", "might", "must", "shall", "should", "will", "would", "ought"],
            Lang::Fr => &["être", "avoir", "falloir", "pleuvoir", "neiger", "grêler", "bruiner", "venter"],
        };
        let verbs = pool(lang, Pos::V).into_iter().filter(|v| !skip.contains(&v.as_str())).collect();
        Pools { lang, nouns: pool(lang, Pos::N), verbs, adjectives: pool(lang, Pos::A) }
    }
}

pub struct Shape {
    pub pp: bool,
    pub decorations: bool,
    pub typ: bool,
}

fn pick<'a>(rng: &mut StdRng, v: &'a [String]) -> &'a str {
    v.choose(rng).map(String::as_str).unwrap_or("")
}

fn np(rng: &mut StdRng, p: &Pools, decorations: bool) -> Constituent {
    let dets: &[&str] = if p.lang == Lang::En { &["the", "a"] } else { &["le", "un"] };
    let mut n = N(pick(rng, &p.nouns));
    if rng.gen_bool(0.4) {
        n = n.n("p");
    }
    let mut np = NP([D(*dets.choose(rng).unwrap_or(&dets[0])), n]);
    if rng.gen_bool(0.3) {
        np = np.add(A(pick(rng, &p.adjectives)));
    }
    if decorations && rng.gen_bool(0.15) {
        np = np.tag("em");
    }
    np
}

/// Subject, verb, object and an optional prepositional phrase.
pub fn svo(rng: &mut StdRng, p: &Pools, shape: &Shape) -> Constituent {
    with_lang(p.lang, || {
        let subject = if rng.gen_bool(0.25) {
            Pro(if p.lang == Lang::En { "him" } else { "lui" }).c("nom")
        } else {
            np(rng, p, shape.decorations)
        };
        let tenses: &[&str] = if p.lang == Lang::En { &["p", "ps", "f"] } else { &["p", "i", "f", "pc", "c", "ps"] };
        let mut vp = VP([V(pick(rng, &p.verbs)).t(*tenses.choose(rng).unwrap_or(&"p")), np(rng, p, shape.decorations)]);
        if shape.pp && rng.gen_bool(0.6) {
            let preps: &[&str] =
                if p.lang == Lang::En { &["in", "on", "with", "to", "for"] } else { &["dans", "sur", "avec", "à", "pour"] };
            vp = vp.add(PP([P(*preps.choose(rng).unwrap_or(&preps[0])), np(rng, p, shape.decorations)]));
        }
        let mut s = S([subject, vp]);
        if shape.decorations && rng.gen_bool(0.1) {
            s = s.add_at(Adv(if p.lang == Lang::En { "now" } else { "maintenant" }).a(","), 0);
        }
        if shape.typ && rng.gen_bool(0.7) {
            let grid = option_grid();
            s.props_mut().typ = grid[rng.gen_range(0..grid.len())].clone();
        }
        s
    })
}
