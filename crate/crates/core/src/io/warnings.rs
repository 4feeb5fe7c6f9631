//! Warnings are sentences realized in the language of the offending
//! constituent.

use crate::features::code_enum;
use crate::lang::Lang;
use crate::syntax::dsl::*;
use crate::syntax::Constituent;

code_enum!(WarningKey {
    BadParameter => "bad parameter",
    BadValue => "bad value",
    NotFound => "not found",
    BadPosition => "bad position",
    InapplicableOption => "inapplicable option",
    Defective => "defective",
    EmptyCoordination => "empty coordination",
    EmptyList => "empty list",
    UnknownKey => "unknown key",
    BadNumber => "bad number",
    BadDate => "bad date",
    OutOfRange => "out of range",
    BadConstituent => "bad constituent",
    NoVerb => "no verb",
    NotPronominalizable => "not pronominalizable",
    BadLanguage => "bad language",
    BadTag => "bad tag",
    BadDependent => "bad dependent",
    MixedCoordination => "mixed coordination",
    NoForm => "no form",
    BadOrdinal => "bad ordinal",
    BadPrecision => "bad precision",
    BadAttribute => "bad attribute",
    BadRelation => "bad relation",
    UnknownTable => "unknown table",
});

/// A problem recorded on a constituent, realized later as a [`Warning`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Issue {
    pub key: WarningKey,
    pub args: Vec<String>,
}

impl Issue {
    pub fn new(key: WarningKey, args: impl IntoIterator<Item = impl Into<String>>) -> Issue {
        Issue { key, args: args.into_iter().map(Into::into).collect() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Warning {
    pub key: WarningKey,
    pub args: Vec<String>,
    pub lang: Lang,
    pub message: String,
}

fn arg(args: &[String], i: usize) -> String {
    args.get(i).cloned().unwrap_or_default()
}

/// The sentence that explains `key`, or `None` for keys that only have a
/// plain-text message.
pub fn warning_sentence(key: WarningKey, args: &[String], lang: Lang) -> Option<Constituent> {
    use WarningKey::*;
    let a0 = arg(args, 0);
    let a1 = arg(args, 1);
    let neg = || crate::json!({"neg": true});
    let s = match (key, lang) {
        (BadParameter, Lang::En) => S([
            NP([D("the"), N("parameter")]),
            VP([V("be").t("ps"), Q(a0).a(","), Adv("not"), Q(a1)]),
        ])
        .typ(crate::json!({"mod": "nece"})),
        (BadParameter, Lang::Fr) => S([
            NP([D("le"), N("paramètre")]),
            VP([V("être").t("c"), Q(a0).a(","), Adv("non"), Q(a1)]),
        ])
        .typ(crate::json!({"mod": "nece"})),
        (BadValue, Lang::En) => S([
            NP([D("the"), N("value"), Q(a0)]),
            VP([V("be"), A("valid"), PP([P("for"), NP([D("the"), N("feature"), Q(a1)])])]),
        ])
        .typ(neg()),
        (BadValue, Lang::Fr) => S([
            NP([D("le"), N("valeur"), Q(a0)]),
            VP([V("être"), A("valide"), PP([P("pour"), NP([D("le"), N("trait"), Q(a1)])])]),
        ])
        .typ(neg()),
        (NotFound, Lang::En) => S([
            NP([D("the"), N("word"), Q(a0)]),
            VP([V("be"), A("absent"), PP([P("from"), NP([D("the"), Q("English"), N("lexicon")])])]),
        ]),
        (NotFound, Lang::Fr) => S([
            NP([D("le"), N("mot"), Q(a0)]),
            VP([V("être"), A("absent"), PP([P("de"), NP([D("le"), N("lexique"), A("français")])])]),
        ]),
        (BadPosition, Lang::En) => S([
            NP([D("the"), N("position"), Q(a0)]),
            VP([V("be"), PP([P("between"), CP([C("and"), Q("0"), Q(a1)])])]),
        ])
        .typ(crate::json!({"mod": "nece"})),
        (BadPosition, Lang::Fr) => S([
            NP([D("le"), N("position"), Q(a0)]),
            VP([V("être"), PP([P("entre"), CP([C("et"), Q("0"), Q(a1)])])]),
        ])
        .typ(crate::json!({"mod": "nece"})),
        (InapplicableOption, Lang::En) => S([
            NP([D("the"), N("option"), Q(a0)]),
            VP([V("be"), A("applicable"), PP([P("to"), NP([D("this"), N("sentence")])])]),
        ])
        .typ(neg()),
        (InapplicableOption, Lang::Fr) => S([
            NP([D("le"), N("option"), Q(a0)]),
            VP([V("être"), A("applicable"), PP([P("à"), NP([D("ce"), N("phrase")])])]),
        ])
        .typ(neg()),
        (Defective, Lang::En) => S([
            NP([D("the"), N("verb"), Q(a0)]),
            VP([V("be"), A("defective"), PP([P("at"), NP([D("this"), N("tense"), Q(a1)])])]),
        ]),
        (Defective, Lang::Fr) => S([
            NP([D("le"), N("verbe"), Q(a0)]),
            VP([V("être"), A("défectif"), PP([P("à"), NP([D("ce"), N("temps"), Q(a1)])])]),
        ]),
        (EmptyCoordination, Lang::En) => S([NP([D("the"), N("coordination")]), VP([V("be"), A("empty")])]),
        (EmptyCoordination, Lang::Fr) => S([NP([D("le"), N("coordination")]), VP([V("être"), A("vide")])]),
        (EmptyList, Lang::En) => S([
            NP([D("the"), N("list"), PP([P("of"), NP([N("alternative").n("p")])])]),
            VP([V("be"), A("empty")]),
        ]),
        (EmptyList, Lang::Fr) => S([
            NP([D("le"), N("liste"), PP([P("de"), NP([D("le"), N("alternative").n("p")])])]),
            VP([V("être"), A("vide")]),
        ]),
        (UnknownKey, Lang::En) => {
            S([NP([D("the"), N("option"), Q(a0)]), VP([V("be"), A("unknown")])])
        }
        (UnknownKey, Lang::Fr) => {
            S([NP([D("le"), N("option"), Q(a0)]), VP([V("être"), A("inconnu")])])
        }
        (BadNumber, Lang::En) => {
            S([Q(a0), VP([V("be"), NP([D("a"), A("valid"), N("number")])])]).typ(neg())
        }
        (BadNumber, Lang::Fr) => {
            S([Q(a0), VP([V("être"), NP([D("un"), N("nombre"), A("valide")])])]).typ(neg())
        }
        (BadDate, Lang::En) => S([Q(a0), VP([V("be"), NP([D("a"), A("valid"), N("date")])])]).typ(neg()),
        (BadDate, Lang::Fr) => S([Q(a0), VP([V("être"), NP([D("un"), N("date"), A("valide")])])]).typ(neg()),
        (OutOfRange, Lang::En) => {
            S([NP([D("the"), N("number"), Q(a0)]), VP([V("be"), AP([Adv("too"), A("large")])])])
        }
        (OutOfRange, Lang::Fr) => {
            S([NP([D("le"), N("nombre"), Q(a0)]), VP([V("être"), AP([Adv("trop"), A("grand")])])])
        }
        _ => return None,
    };
    Some(s)
}

/// Message used when a key has no sentence.
pub fn plain_message(key: WarningKey, args: &[String], lang: Lang) -> String {
    let joined = args.join(", ");
    match lang {
        Lang::En if joined.is_empty() => format!("Warning: {key}."),
        Lang::En => format!("Warning: {key} ({joined})."),
        Lang::Fr if joined.is_empty() => format!("Avertissement\u{a0}: {key}."),
        Lang::Fr => format!("Avertissement\u{a0}: {key} ({joined})."),
    }
}
