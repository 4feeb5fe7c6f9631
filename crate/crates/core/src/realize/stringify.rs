//! From the working tree to tokens: word forms, coordination commas and
//! formatting pieces.

use chrono::NaiveDateTime;

use super::token::{Piece, Token};
use super::working::{Agree, Kind, Node, Work};
use crate::features::{FeatureBundle, Gender, Number};
use crate::io::warnings::{Issue, WarningKey};
use crate::lang::Lang;
use crate::lexicon::Pos;
use crate::morphology::{compare, conjugate, decline, MorphError};
use crate::numdate::number::{format_number, NumberFormat, DEFAULT_MPRECISION};
use crate::numdate::format_date;
use crate::syntax::{Payload, PhraseKind, Props, TerminalKind};

pub struct Env {
    pub now: NaiveDateTime,
    pub no_html: bool,
}

/// Closing mark of a `.ba()` opening mark.
fn closing(open: &str) -> String {
    match open {
        "(" => ")".into(),
        "[" => "]".into(),
        "{" => "}".into(),
        "«" => "»".into(),
        "<" => ">".into(),
        other => other.into(),
    }
}

fn negative_contraction(form: &str) -> String {
    let special = match form {
        "will" => Some("won't"),
        "can" => Some("can't"),
        "am" => Some("aren't"),
        "shall" => Some("shan't"),
        _ => None,
    };
    special.map_or_else(|| format!("{form}n't"), str::to_string)
}

fn bracketed(s: &str) -> String {
    format!("[[{s}]]")
}

fn morph_issue(e: &MorphError) -> Issue {
    match e {
        MorphError::NoForm { lemma, key } => Issue::new(WarningKey::NoForm, [lemma.as_str(), key.as_str()]),
        MorphError::Defective { lemma, key } => Issue::new(WarningKey::Defective, [lemma.as_str(), key.as_str()]),
        MorphError::UnknownTable { lemma, table } => {
            Issue::new(WarningKey::UnknownTable, [lemma.as_str(), table.as_str()])
        }
    }
}

/// Puts formatting around the tokens of one constituent: `.b`/`.a` closest,
/// then `.ba`, then tags, each tag enclosing the previous ones.
fn wrap(tokens: &mut Vec<Token>, props: &Props, lang: Lang, env: &Env) {
    let tags = !env.no_html && !props.tags.is_empty();
    if props.before.is_empty() && props.after.is_empty() && props.around.is_empty() && !tags && props.cap != Some(true) {
        return;
    }
    if tokens.is_empty() {
        tokens.push(Token::new("", lang));
    }
    if props.cap == Some(true) {
        if let Some(t) = tokens.iter_mut().find(|t| !t.text.is_empty()) {
            let mut c = t.text.chars();
            if let Some(f) = c.next() {
                t.text = f.to_uppercase().chain(c).collect();
            }
        }
    }
    let last = tokens.len() - 1;
    for b in &props.before {
        tokens[0].prefix.insert(0, Piece::Text(b.clone()));
    }
    for a in &props.after {
        tokens[last].suffix.push(Piece::Text(a.clone()));
    }
    for ba in &props.around {
        tokens[0].prefix.insert(0, Piece::Text(ba.clone()));
        tokens[last].suffix.push(Piece::Text(closing(ba)));
    }
    if tags {
        for t in &props.tags {
            tokens[0].prefix.insert(0, Piece::Tag(t.open()));
            tokens[last].suffix.push(Piece::Tag(t.close()));
        }
    }
}

impl Work<'_> {
    pub fn tokens(&mut self, n: &Node, env: &Env) -> Vec<Token> {
        let mut out = match n.kind {
            Kind::T(_) => self.terminal_tokens(n, env),
            Kind::P(PhraseKind::CP) => self.coordination_tokens(n, env),
            Kind::P(_) => {
                let mut out: Vec<Token> = Vec::new();
                for c in &n.children {
                    self.append(&mut out, c, env);
                }
                out
            }
        };
        wrap(&mut out, &n.props, n.lang, env);
        out
    }

    fn append(&mut self, out: &mut Vec<Token>, c: &Node, env: &Env) {
        let mut toks = self.tokens(c, env);
        if c.hyphen {
            if let (Some(prev), Some(first)) = (out.last_mut(), toks.first_mut()) {
                prev.join_next = true;
                first.text.insert(0, '-');
            }
        }
        out.append(&mut toks);
    }

    fn coordination_tokens(&mut self, n: &Node, env: &Env) -> Vec<Token> {
        let conj = n.children.iter().find(|c| c.is_t(TerminalKind::C));
        let elems: Vec<&Node> = n.children.iter().filter(|c| !c.is_t(TerminalKind::C)).collect();
        if elems.is_empty() {
            self.issue(Issue::new(WarningKey::EmptyCoordination, Vec::<String>::new()), n.lang);
            return Vec::new();
        }
        let mut out = Vec::new();
        let count = elems.len();
        for (i, e) in elems.into_iter().enumerate() {
            let mut toks = self.tokens(e, env);
            let before_last = i + 2 == count;
            let comma = i + 1 < count && (!before_last || conj.is_none());
            if comma {
                if let Some(t) = toks.last_mut() {
                    t.suffix.push(Piece::Text(",".into()));
                }
            }
            out.append(&mut toks);
            if before_last {
                if let Some(c) = conj {
                    let mut toks = self.tokens(c, env);
                    out.append(&mut toks);
                }
            }
        }
        out
    }

    fn features(&self, n: &Node) -> FeatureBundle {
        let local = &n.props.features;
        let cell = self.pengs[n.peng];
        let taux = self.taux_of(n);
        let agreement = |id: usize| {
            let c = self.pengs[id];
            (c.g.unwrap_or(Gender::M), c.n.unwrap_or(Number::S))
        };
        let pp_agree = match n.agree {
            Agree::Subject => Some(agreement(n.peng)),
            Agree::Cell(id) => Some(agreement(id)),
            Agree::None | Agree::PrecedingObject => None,
        };
        FeatureBundle {
            pe: local.pe.or(cell.pe),
            n: local.n.or(cell.n),
            g: local.g.or(cell.g),
            t: n.tense.or(local.t).or(taux.t),
            c: local.c.or(n.case),
            aux: local.aux.or(taux.aux),
            f: local.f,
            pp_agree,
        }
    }

    fn words(&mut self, n: &Node, env: &Env) -> (Vec<String>, bool) {
        let k = match n.kind {
            Kind::T(k) => k,
            Kind::P(_) => return (Vec::new(), false),
        };
        if let Some(f) = &n.fixed {
            return (vec![f.clone()], false);
        }
        let f = self.features(n);
        let lemma = match &n.payload {
            Payload::Invalid(_) => return (vec![bracketed(&n.lemma())], false),
            Payload::Number(x) => {
                let d = &n.props.d_opt;
                let fmt = NumberFormat {
                    nat: d.nat.unwrap_or(false),
                    ord: d.ord.unwrap_or(false),
                    raw: d.raw.unwrap_or(false),
                    mprecision: d.mprecision.unwrap_or(DEFAULT_MPRECISION),
                };
                let (s, err) = format_number(*x, fmt, n.lang, f.gender());
                if let Some(e) = err {
                    self.issue(Issue::new(WarningKey::OutOfRange, [e.0.to_string()]), n.lang);
                }
                return (vec![s], false);
            }
            Payload::Date(t) => return (vec![format_date(t, &n.props.d_opt, n.lang, &env.now)], false),
            Payload::Word(w) => w.clone(),
        };
        let Some(pos) = k.pos() else { return (vec![lemma], false) };
        let Some(entry) = self.entry(n.lang, &lemma, pos) else {
            self.issue(Issue::new(WarningKey::NotFound, [lemma.as_str()]), n.lang);
            return (vec![bracketed(&lemma)], false);
        };
        let lex = self.lexicons.get(n.lang);
        let result = match pos {
            Pos::V => conjugate(lex, entry, &f),
            Pos::A | Pos::Adv => compare(lex, entry, &f),
            Pos::N | Pos::D | Pos::Pro => decline(lex, entry, &f).map(|w| vec![w]),
            Pos::P | Pos::C => Ok(vec![lemma.clone()]),
        };
        match result {
            Ok(mut words) => {
                if n.negated {
                    if let Some(w) = words.first_mut() {
                        *w = negative_contraction(w);
                    }
                }
                (words, entry.h_aspire)
            }
            Err(e) => {
                self.issue(morph_issue(&e), n.lang);
                (vec![bracketed(&lemma)], false)
            }
        }
    }

    fn terminal_tokens(&mut self, n: &Node, env: &Env) -> Vec<Token> {
        let (words, h_aspire) = self.words(n, env);
        let plural = self.features(n).number() == Number::P;
        let mut words = words;
        if n.negated && n.fixed.is_some() {
            if let Some(w) = words.first_mut() {
                *w = negative_contraction(w);
            }
        }
        words
            .into_iter()
            .map(|w| {
                let mut t = Token::new(w, n.lang).with_lemma(n.lemma());
                t.pos = n.pos();
                t.origin = n.origin;
                t.plural = plural;
                t.h_aspire = h_aspire;
                t
            })
            .collect()
    }
}
