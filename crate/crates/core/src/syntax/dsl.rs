//! Constructors named like the linguistic categories.
//!
//! ```
//! use realizer::prelude::*;
//! let s = S([Pro("him").c("nom"), VP([V("eat"), NP([D("a"), N("apple").n("p")]).tag("em")])]);
//! assert_eq!(Realizer::new().realize(&s).text, "He eats <em>apples</em>.");
//! ```
#![allow(non_snake_case)]

use chrono::NaiveDateTime;
use serde_json::Value;

use super::{Constituent, Dependent, Phrase, PhraseKind, Props, Relation, Terminal, TerminalKind};
use crate::io::warnings::{Issue, WarningKey};
use crate::lang::current_lang;

fn terminal(kind: TerminalKind, lemma: impl Into<Value>) -> Constituent {
    Constituent::Terminal(Terminal::new(kind, lemma.into()))
}

fn phrase(kind: PhraseKind, children: impl IntoIterator<Item = Constituent>) -> Constituent {
    Constituent::Phrase(Phrase { kind, children: children.into_iter().collect(), lang: current_lang(), props: Props::default() })
}

/// Builds a dependent; a head that is not a terminal and children that are
/// not dependents are reported and replaced or dropped.
pub fn dependent(rel: Relation, head: Constituent, deps: impl IntoIterator<Item = Constituent>) -> Constituent {
    let mut props = Props::default();
    let head = match head {
        Constituent::Terminal(t) => t,
        other => {
            props.issues.push(Issue::new(WarningKey::BadConstituent, ["Terminal", other.kind_code()]));
            Terminal::new(TerminalKind::Q, Value::String(String::new()))
        }
    };
    let mut kept = Vec::new();
    for d in deps {
        match d {
            Constituent::Dependent(d) => kept.push(d),
            other => props.issues.push(Issue::new(WarningKey::BadDependent, [other.kind_code()])),
        }
    }
    Constituent::Dependent(Dependent { rel, head, deps: kept, lang: current_lang(), props })
}

macro_rules! terminals {
    ($($name:ident),+) => {
        $(
            pub fn $name(lemma: impl Into<Value>) -> Constituent {
                terminal(TerminalKind::$name, lemma)
            }
        )+
    };
}

macro_rules! phrases {
    ($($name:ident),+) => {
        $(
            pub fn $name(children: impl IntoIterator<Item = Constituent>) -> Constituent {
                phrase(PhraseKind::$name, children)
            }
        )+
    };
}

macro_rules! relations {
    ($($name:ident => $rel:ident),+) => {
        $(
            pub fn $name(head: Constituent, deps: impl IntoIterator<Item = Constituent>) -> Constituent {
                dependent(Relation::$rel, head, deps)
            }
        )+
    };
}

terminals!(N, V, A, D, Adv, Pro, P, C, Q, NO, DT);
phrases!(S, SP, NP, VP, AP, AdvP, PP, CP);
relations!(root => Root, subj => Subj, comp => Comp, r#mod => Mod, det => Det, coord => Coord);

/// A date terminal from a chrono value.
pub fn DT_at(t: NaiveDateTime) -> Constituent {
    DT(t.format("%Y-%m-%dT%H:%M:%S").to_string())
}
