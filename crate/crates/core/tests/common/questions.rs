//! Questions and their answers put back together.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::SeedableRng;
use realizer::prelude::*;
use realizer::realize::token::{Origin, Token};

use super::trees::{svo, Pools, Shape};

fn lemmas<'a>(tokens: impl IntoIterator<Item = &'a Token>) -> BTreeSet<String> {
    tokens.into_iter().filter(|t| t.origin == Origin::Original && !t.text.is_empty()).map(|t| t.lemma.to_lowercase()).collect()
}

/// For each seed, every applicable question with its answer must give back
/// the words of the declarative sentence. Returns (forms checked, failures).
pub fn check(seeds: impl IntoIterator<Item = u64>) -> (usize, Vec<String>) {
    let r = Realizer::new();
    let pools = [Pools::new(Lang::En), Pools::new(Lang::Fr)];
    let shape = Shape { pp: true, decorations: false, typ: false };
    let mut checked = 0;
    let mut failures = Vec::new();
    for seed in seeds {
        let s = svo(&mut StdRng::seed_from_u64(seed), &pools[(seed % 2) as usize], &shape);
        let declarative = r.realize(&s);
        let source = lemmas(&declarative.tokens);
        for q in r.applicable_questions(&s) {
            let form = r.question(&s, q);
            let mut back = lemmas(&form.question.tokens);
            back.extend(lemmas(&form.answer_tokens));
            checked += 1;
            if back != source {
                failures.push(format!("{q}: {} / {:?} vs {}", form.question.text, form.answer, declarative.text));
            }
        }
    }
    (checked, failures)
}
