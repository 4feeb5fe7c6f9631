//! Rules that look at the next word: English a/an, French euphony, elision and
//! contraction. Formatting pieces never block adjacency.

use crate::lang::Lang;
use crate::lexicon::{Lexicons, Pos, Rules};
use crate::realize::token::Token;

const FRENCH_VOWELS: &str = "aàâäeéèêëiîïoôöuùûüœæ";

fn first_lower(word: &str) -> String {
    word.trim_start_matches(|c: char| !c.is_alphanumeric()).to_lowercase()
}

/// English: does the following word take "an"?
pub fn takes_an(word: &str, rules: &Rules) -> bool {
    let w = first_lower(word);
    if rules.an_exceptions.a.iter().any(|p| w.starts_with(p.as_str())) {
        return false;
    }
    if rules.an_exceptions.an.iter().any(|p| w.starts_with(p.as_str())) {
        return true;
    }
    if w.starts_with('8') || w == "11" || w == "18" || w.starts_with("11,") || w.starts_with("18,") {
        return true;
    }
    w.starts_with(['a', 'e', 'i', 'o', 'u'])
}

/// French: does the following token allow elision and euphony?
pub fn french_vowel_initial(token: &Token) -> bool {
    let w = first_lower(&token.text);
    let Some(c) = w.chars().next() else { return false };
    if c == 'h' {
        return !token.h_aspire;
    }
    if c == 'y' {
        return w == "y";
    }
    FRENCH_VOWELS.contains(c)
}

fn with_case_of(original: &str, replacement: &str) -> String {
    if original.chars().next().is_some_and(char::is_uppercase) {
        let mut c = replacement.chars();
        match c.next() {
            Some(f) => f.to_uppercase().chain(c).collect(),
            None => String::new(),
        }
    } else {
        replacement.to_string()
    }
}

fn euphony(tok: &mut Token, next: &Token, rules: &Rules) {
    let lower = tok.text.to_lowercase();
    let Some(form) = rules.euphony.get(&lower) else { return };
    let applies = match tok.pos {
        Some(Pos::A) => !tok.plural && matches!(next.pos, Some(Pos::N | Pos::A)),
        Some(Pos::D) => !tok.plural,
        _ => false,
    };
    if applies && french_vowel_initial(next) {
        tok.text = with_case_of(&tok.text, form);
    }
}

fn elide(tok: &mut Token, next: &Token, rules: &Rules) {
    let lower = tok.text.to_lowercase();
    let listed = rules.elision.elidable.contains(&lower);
    let conditional = rules
        .elision
        .conditional
        .get(&lower)
        .is_some_and(|followers| followers.iter().any(|f| *f == next.text.to_lowercase()));
    let contracts = contraction(tok, next, rules).is_some();
    if (listed || conditional) && !contracts && !tok.join_next && french_vowel_initial(next) {
        tok.text.pop();
        tok.text.push('\'');
        tok.join_next = true;
    }
}

fn contraction<'r>(tok: &Token, next: &Token, rules: &'r Rules) -> Option<&'r String> {
    let pair = format!("{} {}", tok.text.to_lowercase(), next.text.to_lowercase());
    let form = rules.contraction.get(&pair)?;
    let ok = match tok.text.to_lowercase().as_str() {
        "de" | "à" => next.pos == Some(Pos::D),
        _ => next.pos == Some(Pos::Pro) || next.pos.is_none(),
    };
    ok.then_some(form)
}

/// Applies the spelling rules of each token's language; idempotent.
/// Elision runs before contraction so that "de le arbre" keeps "de l'arbre".
pub fn apply_spelling_rules(tokens: Vec<Token>, lexicons: &Lexicons) -> Vec<Token> {
    let mut tokens: Vec<Token> = tokens.into_iter().filter(|t| !t.is_void()).collect();
    for i in 0..tokens.len().saturating_sub(1) {
        let (head, tail) = tokens.split_at_mut(i + 1);
        let (tok, next) = (&mut head[i], &tail[0]);
        let rules = lexicons.get(tok.lang).rules();
        match tok.lang {
            Lang::En => {
                if tok.pos == Some(Pos::D) && tok.text.eq_ignore_ascii_case("a") && takes_an(&next.text, rules) {
                    tok.text = with_case_of(&tok.text, "an");
                }
            }
            Lang::Fr => {
                euphony(tok, next, rules);
                elide(tok, next, rules);
            }
        }
    }
    let mut out: Vec<Token> = Vec::with_capacity(tokens.len());
    let mut it = tokens.into_iter().peekable();
    while let Some(tok) = it.next() {
        let form = match it.peek() {
            Some(next) if tok.lang == Lang::Fr => contraction(&tok, next, lexicons.get(Lang::Fr).rules()).cloned(),
            _ => None,
        };
        match form {
            Some(form) => {
                let next = it.next().expect("peeked");
                let mut merged = tok;
                merged.text = with_case_of(&merged.text, &form);
                merged.pos = next.pos;
                merged.prefix.extend(next.prefix);
                merged.suffix.extend(next.suffix);
                merged.join_next = next.join_next;
                merged.plural = next.plural;
                merged.lemma = format!("{} {}", merged.lemma, next.lemma);
                out.push(merged);
            }
            None => out.push(tok),
        }
    }
    out
}
