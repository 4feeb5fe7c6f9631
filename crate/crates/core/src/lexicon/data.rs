use std::sync::{Arc, LazyLock};

use super::{load, Lexicon};
use crate::lang::Lang;

const EN_RULES: &str = include_str!("../../data/en/rules.json");
const EN_LEXICON: &str = include_str!("../../data/en/lexicon.json");
const FR_RULES: &str = include_str!("../../data/fr/rules.json");
const FR_LEXICON: &str = include_str!("../../data/fr/lexicon.json");

fn embedded(rules: &str, lexicon: &str, lang: Lang) -> Arc<Lexicon> {
    let lex = load(rules.as_bytes(), lexicon.as_bytes(), lang)
        .unwrap_or_else(|e| panic!("embedded {lang} lexicon is invalid: {e}"));
    Arc::new(lex)
}

static EN: LazyLock<Arc<Lexicon>> = LazyLock::new(|| embedded(EN_RULES, EN_LEXICON, Lang::En));
static FR: LazyLock<Arc<Lexicon>> = LazyLock::new(|| embedded(FR_RULES, FR_LEXICON, Lang::Fr));

pub(super) fn builtin_arc(lang: Lang) -> Arc<Lexicon> {
    match lang {
        Lang::En => Arc::clone(&EN),
        Lang::Fr => Arc::clone(&FR),
    }
}

/// The lexicon shipped with the crate.
pub fn builtin(lang: Lang) -> &'static Lexicon {
    match lang {
        Lang::En => &EN,
        Lang::Fr => &FR,
    }
}
