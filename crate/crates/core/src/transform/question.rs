//! Questions: the part of the clause each kind asks about, its removal, and
//! the words put in front.

use super::options::Question;
use crate::features::Case;
use crate::lang::Lang;
use crate::numdate::date::{EN_MONTHS, EN_WEEKDAYS, FR_MONTHS, FR_WEEKDAYS};
use crate::realize::token::Origin;
use crate::realize::working::{Kind, Node, Work};
use crate::syntax::{PhraseKind, TerminalKind};

/// What a question removes from the clause.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    Subject,
    /// The "by" phrase of a passive.
    Agent,
    DirectObject,
    IndirectObject,
    Place,
    Time,
    Nothing,
}

pub fn target(q: Question, passive: bool) -> Target {
    match q {
        Question::Wos if passive => Target::Agent,
        Question::Wos => Target::Subject,
        Question::Wod | Question::Wad if passive => Target::Subject,
        Question::Wod | Question::Wad => Target::DirectObject,
        Question::Woi | Question::Wai => Target::IndirectObject,
        Question::Whe => Target::Place,
        Question::Whn => Target::Time,
        _ => Target::Nothing,
    }
}

/// English subject-auxiliary inversion.
pub fn inverts(q: Question, passive: bool) -> bool {
    q != Question::Tag && target(q, passive) != Target::Subject
}

const EN_PLACE: &[&str] = &[
    "in", "on", "at", "under", "near", "behind", "above", "below", "inside", "outside", "into", "onto", "over",
    "beside", "between", "across", "along", "around", "through",
];
const EN_TIME: &[&str] = &["during", "before", "after", "since", "until", "till"];
const EN_TIME_NOUNS: &[&str] =
    &["morning", "afternoon", "evening", "night", "day", "week", "month", "year", "hour", "minute", "moment", "time"];
const FR_PLACE: &[&str] =
    &["dans", "sur", "sous", "à", "en", "chez", "devant", "derrière", "près", "vers", "entre", "contre", "parmi"];
const FR_TIME: &[&str] = &["pendant", "avant", "après", "depuis", "durant", "dès", "jusque", "lors"];
const FR_TIME_NOUNS: &[&str] =
    &["matin", "après-midi", "soir", "nuit", "jour", "journée", "semaine", "mois", "an", "année", "heure", "minute", "moment"];

fn first_lemma(n: &Node, k: TerminalKind) -> Option<String> {
    n.children.iter().find(|c| c.is_t(k)).map(Node::lemma)
}

/// Lowercased nouns below `n`; true if there is a date.
fn nouns(n: &Node, out: &mut Vec<String>) -> bool {
    if n.is_t(TerminalKind::N) {
        out.push(n.lemma().to_lowercase());
    }
    let mut dated = n.is_t(TerminalKind::DT);
    for c in &n.children {
        dated |= nouns(c, out);
    }
    dated
}

/// Place or time phrase, judged from the preposition and the noun.
pub fn classify(pp: &Node) -> Target {
    if !pp.is_p(PhraseKind::PP) {
        return Target::Nothing;
    }
    let p = first_lemma(pp, TerminalKind::P).unwrap_or_default().to_lowercase();
    let mut ns = Vec::new();
    let dated = nouns(pp, &mut ns);
    let (place, time, time_nouns, days, months): (&[&str], &[&str], &[&str], &[&str], &[&str]) = match pp.lang {
        Lang::En => (EN_PLACE, EN_TIME, EN_TIME_NOUNS, &EN_WEEKDAYS, &EN_MONTHS),
        Lang::Fr => (FR_PLACE, FR_TIME, FR_TIME_NOUNS, &FR_WEEKDAYS, &FR_MONTHS),
    };
    let timely =
        |w: &String| time_nouns.contains(&w.as_str()) || days.iter().chain(months).any(|d| d.eq_ignore_ascii_case(w));
    if dated || time.contains(&p.as_str()) || ns.iter().any(timely) {
        Target::Time
    } else if place.contains(&p.as_str()) {
        Target::Place
    } else {
        Target::Nothing
    }
}

fn is_clitic_only(n: &Node) -> bool {
    n.is_t(TerminalKind::Pro)
        && (matches!(n.props.features.c, Some(Case::Dat | Case::Tonic)) || n.fixed.is_some())
}

/// Direct object: the first nominal after the verb.
pub fn direct_object(vp: &Node) -> Option<usize> {
    let v = vp.children.iter().position(|c| c.is_t(TerminalKind::V))?;
    (v + 1..vp.children.len()).find(|&i| vp.children[i].is_nominal() && !is_clitic_only(&vp.children[i]))
}

/// Indirect object: a "to" / "à" phrase or a dative pronoun.
pub fn indirect_object(vp: &Node) -> Option<usize> {
    vp.children.iter().position(|c| {
        let to = c.is_p(PhraseKind::PP)
            && first_lemma(c, TerminalKind::P).is_some_and(|p| matches!(p.as_str(), "to" | "à"))
            && classify(c) != Target::Time;
        to || (c.is_t(TerminalKind::Pro) && c.props.features.c == Some(Case::Dat))
    })
}

fn agent(vp: &Node) -> Option<usize> {
    vp.children.iter().position(|c| {
        c.is_p(PhraseKind::PP) && c.children.first().is_some_and(|p| p.is_t(TerminalKind::P) && p.origin == Origin::Inserted)
    })
}

fn locate(s: &Node, vp: &[usize], t: Target) -> Option<Vec<usize>> {
    let in_vp = |i: usize| {
        let mut p = vp.to_vec();
        p.push(i);
        p
    };
    let v = s.at(vp);
    match t {
        Target::Subject => s.clause_parts().0.map(|i| vec![i]),
        Target::Agent => agent(v).map(in_vp),
        Target::DirectObject => direct_object(v).map(in_vp),
        Target::IndirectObject => indirect_object(v).map(in_vp),
        Target::Place | Target::Time => v
            .children
            .iter()
            .position(|c| classify(c) == t)
            .map(in_vp)
            .or_else(|| s.children.iter().position(|c| classify(c) == t).map(|i| vec![i])),
        Target::Nothing => None,
    }
}

/// Questions about a missing subject or object cannot be asked.
pub fn applicable(s: &Node, vp: &[usize], q: Question, passive: bool) -> bool {
    let t = target(q, passive);
    match t {
        Target::Subject | Target::Agent | Target::DirectObject | Target::IndirectObject => {
            locate(s, vp, t).is_some()
        }
        _ => true,
    }
}

/// Removes the questioned part and returns it.
pub fn extract(s: &mut Node, vp: &[usize], q: Question, passive: bool) -> Option<Node> {
    let path = locate(s, vp, target(q, passive))?;
    let (last, parent) = path.split_last()?;
    let removed = s.at_mut(parent).children.remove(*last);
    Some(match (target(q, passive), removed.kind) {
        (Target::Agent, Kind::P(PhraseKind::PP)) => {
            let mut pp = removed;
            match pp.head_index() {
                Some(h) => pp.children.remove(h),
                None => pp,
            }
        }
        _ => removed,
    })
}

/// Words put before the clause.
pub fn front_words(q: Question, passive: bool, lang: Lang) -> &'static [&'static str] {
    use Question::*;
    match (lang, q, passive) {
        (Lang::En, Wos, false) => &["who"],
        (Lang::En, Wos, true) => &["by", "whom"],
        (Lang::En, Wod, _) => &["who"],
        (Lang::En, Wad, _) => &["what"],
        (Lang::En, Woi, _) => &["to", "whom"],
        (Lang::En, Wai, _) => &["to", "what"],
        (Lang::En, Whe, _) => &["where"],
        (Lang::En, Whn, _) => &["when"],
        (Lang::En, Why, _) => &["why"],
        (Lang::En, How, _) => &["how"],
        (Lang::En, Muc, _) => &["how", "much"],
        (Lang::En, Yon | Tag, _) => &[],
        (Lang::Fr, Yon, _) => &["est-ce", "que"],
        (Lang::Fr, Wos, false) => &["qui"],
        (Lang::Fr, Wos, true) => &["par", "qui", "est-ce", "que"],
        (Lang::Fr, Wod, false) => &["qui", "est-ce", "que"],
        (Lang::Fr, Wod, true) => &["qui", "est-ce", "qui"],
        (Lang::Fr, Wad, false) => &["qu'est-ce", "que"],
        (Lang::Fr, Wad, true) => &["qu'est-ce", "qui"],
        (Lang::Fr, Woi, _) => &["à", "qui", "est-ce", "que"],
        (Lang::Fr, Wai, _) => &["à", "quoi", "est-ce", "que"],
        (Lang::Fr, Whe, _) => &["où", "est-ce", "que"],
        (Lang::Fr, Whn, _) => &["quand", "est-ce", "que"],
        (Lang::Fr, Why, _) => &["pourquoi", "est-ce", "que"],
        (Lang::Fr, How, _) => &["comment", "est-ce", "que"],
        (Lang::Fr, Muc, _) => &["combien", "est-ce", "que"],
        (Lang::Fr, Tag, _) => &[],
    }
}

/// Puts the question words at the start of the clause.
/// Question words go after fronted adverbials ("Now, who eats...").
pub fn prepend(work: &mut Work, s: &mut Node, q: Question, passive: bool) {
    let words = front_words(q, passive, s.lang);
    let start = s
        .children
        .iter()
        .take_while(|c| c.is_t(TerminalKind::Adv) || c.is_p(PhraseKind::AdvP) || c.is_p(PhraseKind::PP))
        .count();
    for (i, w) in words.iter().enumerate() {
        let n = work.fixed(TerminalKind::Q, w, s.lang);
        s.children.insert(start + i, n);
    }
}
