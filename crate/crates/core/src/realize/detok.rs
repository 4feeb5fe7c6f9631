//! Joins tokens into the final string.

use crate::lang::Lang;
use crate::realize::token::{Piece, Token};

const CLOSING: &[char] = &[',', '.', ';', ':', '!', '?', ')', ']', '}', '»', '…', '%'];
const OPENING: &[char] = &['(', '[', '{', '«', '\'', '’', '"'];
/// French puts a narrow no-break space before these.
const FRENCH_SPACED: &[char] = &['?', '!', ';', ':', '»'];
pub const NARROW_NBSP: char = '\u{202F}';

#[derive(Clone, Debug, Default)]
pub struct DetokOptions {
    pub capitalize: bool,
    /// Appended after everything, closing tags included.
    pub terminal: Option<String>,
    pub french_spacing: bool,
}

enum Atom<'a> {
    Open(&'a str),
    Close(&'a str),
    /// A word or punctuation, with the language of its token and whether the
    /// following atom is glued to it.
    Text(&'a str, Lang, bool),
}

fn atoms(tokens: &[Token]) -> Vec<Atom<'_>> {
    let mut out = Vec::new();
    for tok in tokens {
        let start = out.len();
        for p in &tok.prefix {
            out.push(piece_atom(p, tok.lang));
        }
        if !tok.text.is_empty() {
            out.push(Atom::Text(&tok.text, tok.lang, false));
        }
        for p in &tok.suffix {
            out.push(piece_atom(p, tok.lang));
        }
        if tok.join_next {
            if let Some(Atom::Text(_, _, join)) =
                out[start..].iter_mut().rev().find(|a| matches!(a, Atom::Text(..)))
            {
                *join = true;
            }
        }
    }
    out
}

fn piece_atom(p: &Piece, lang: Lang) -> Atom<'_> {
    match p {
        Piece::Tag(t) if t.starts_with("</") => Atom::Close(t),
        Piece::Tag(t) => Atom::Open(t),
        Piece::Text(s) => Atom::Text(s, lang, false),
    }
}

/// The separator between two adjacent text atoms.
fn separator(prev: &str, prev_join: bool, next: &str, lang: Lang, french_spacing: bool) -> Option<char> {
    if prev_join {
        return None;
    }
    let first = next.chars().next()?;
    if CLOSING.contains(&first) {
        let spaced = lang == Lang::Fr && french_spacing && FRENCH_SPACED.contains(&first);
        return spaced.then_some(NARROW_NBSP);
    }
    if prev.ends_with(OPENING) {
        return (lang == Lang::Fr && french_spacing && prev.ends_with('«')).then_some(NARROW_NBSP);
    }
    Some(' ')
}

fn capitalize_first_letter(s: &mut String) {
    if let Some((i, c)) = s.char_indices().find(|(_, c)| c.is_alphanumeric()) {
        if c.is_lowercase() {
            let upper: String = c.to_uppercase().collect();
            s.replace_range(i..i + c.len_utf8(), &upper);
        }
    }
}

pub fn detokenize(tokens: &[Token], opts: &DetokOptions) -> String {
    let mut out = String::new();
    // Where a space goes: after the last text or closing tag, before any
    // opening tags that follow it.
    let mut anchor = 0usize;
    let mut prev: Option<(&str, bool)> = None;
    let mut capitalized = !opts.capitalize;
    for atom in atoms(tokens) {
        match atom {
            Atom::Open(t) => out.push_str(t),
            Atom::Close(t) => {
                out.push_str(t);
                anchor = out.len();
            }
            Atom::Text(s, lang, join) => {
                if let Some((p, pj)) = prev {
                    if let Some(sep) = separator(p, pj, s, lang, opts.french_spacing) {
                        out.insert(anchor, sep);
                    }
                }
                if !capitalized && s.chars().any(char::is_alphanumeric) {
                    let mut word = s.to_string();
                    capitalize_first_letter(&mut word);
                    out.push_str(&word);
                    capitalized = true;
                } else {
                    out.push_str(s);
                }
                anchor = out.len();
                prev = Some((s, join));
            }
        }
    }
    if let Some(term) = &opts.terminal {
        let lang = tokens.last().map_or(Lang::En, |t| t.lang);
        if let Some(sep) = prev.and_then(|(p, pj)| separator(p, pj, term, lang, opts.french_spacing)) {
            if sep == NARROW_NBSP {
                out.push(sep);
            }
        }
        out.push_str(term);
    }
    out.trim().to_string()
}
