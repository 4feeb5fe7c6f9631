//! French verb groups, compound tenses, "ne ... pas" and object clitics.

use super::options::{Modality, Neg, TypeOptions};
use crate::features::{Aux, Case, Person, Tense};
use crate::lang::Lang;
use crate::lexicon::Pos;
use crate::realize::working::{Agree, Node, Work};
use crate::syntax::TerminalKind;

fn verb(work: &mut Work, lemma: &str, t: Tense) -> Node {
    let mut v = work.inserted(TerminalKind::V, lemma, Lang::Fr);
    v.tense = Some(t);
    v
}

fn modal(m: Modality) -> &'static str {
    match m {
        Modality::Poss | Modality::Perm => "pouvoir",
        Modality::Nece | Modality::Obli => "devoir",
        Modality::Will => "vouloir",
    }
}

/// Replaces the head verb of `vp` by its verb group. `aux` is the
/// auxiliary of the head verb.
pub fn chain(work: &mut Work, vp: &mut Node, opts: &TypeOptions, t: Tense, aux: Aux) {
    let Some(h) = vp.children.iter().position(|c| c.is_t(TerminalKind::V)) else { return };
    let mut main = vp.children.remove(h);
    let mut words: Vec<Node> = Vec::new();
    // Index of the element that heads the group object pronouns attach to.
    let mut host = 0;
    let mut next = t;
    if let Some(m) = opts.modality {
        words.push(verb(work, modal(m), next));
        next = Tense::B;
        host = words.len();
    }
    if opts.prog {
        words.push(verb(work, "être", next));
        for w in ["en", "train", "de"] {
            words.push(work.fixed(TerminalKind::Q, w, Lang::Fr));
        }
        next = Tense::B;
        host = words.len();
    }
    let mut agree = Agree::None;
    if opts.pas {
        words.push(verb(work, "être", next));
        next = Tense::Pp;
        agree = Agree::Subject;
    }
    main.tense = Some(next);
    main.agree = agree;
    words.push(main);

    let first_t = words[0].tense.unwrap_or(t);
    let base = first_t.compound_base().or((opts.perf && first_t.is_finite()).then_some(first_t));
    if let Some(base) = base {
        let first_aux = if words.len() == 1 { aux } else { Aux::Av };
        let lemma = if first_aux == Aux::Et { "être" } else { "avoir" };
        words[0].tense = Some(Tense::Pp);
        if words[0].agree == Agree::None {
            words[0].agree = if first_aux == Aux::Et { Agree::Subject } else { Agree::PrecedingObject };
        }
        words.insert(0, verb(work, lemma, base));
        if host > 0 {
            host += 1;
        }
    }
    words[0].finite = true;
    words[host].clitic_host = true;
    if let Some(neg) = &opts.neg {
        let ne = work.inserted(TerminalKind::Adv, "ne", Lang::Fr);
        let pas = match neg {
            Neg::Plain => work.inserted(TerminalKind::Adv, "pas", Lang::Fr),
            Neg::Contrast(w) => work.fixed(TerminalKind::Adv, w, Lang::Fr),
        };
        if words[0].tense.is_some_and(|t| !t.is_finite()) {
            words.insert(0, pas);
            words.insert(0, ne);
        } else {
            words.insert(1, pas);
            words.insert(0, ne);
        }
    }
    vp.children.splice(h..h, words);
}

/// Rank in the clitic sequence me/te/se/nous/vous < le/la/les < lui/leur < y < en.
fn rank(work: &Work, p: &Node, imperative: bool) -> u8 {
    let case = p.props.features.c.or(p.case).unwrap_or(Case::Acc);
    let pe = work.pengs[p.own_peng].pe.unwrap_or(Person::Third);
    match (p.fixed.as_deref(), pe, case, imperative) {
        (Some("y"), ..) => 3,
        (Some("en"), ..) => 4,
        (_, Person::Third, Case::Refl, _) => 0,
        (_, Person::Third, Case::Dat, _) => 2,
        (_, Person::Third, _, _) => 1,
        (_, _, _, true) => 2,
        _ => 0,
    }
}

fn is_clitic(work: &Work, c: &Node) -> bool {
    if !c.is_t(TerminalKind::Pro) || matches!(c.props.features.c, Some(Case::Tonic | Case::Nom)) {
        return false;
    }
    if matches!(c.fixed.as_deref(), Some("y" | "en")) {
        return true;
    }
    let lemma = c.lemma();
    work.entry(Lang::Fr, &lemma, Pos::Pro).is_some_and(|e| {
        let rules = work.lexicons.get(Lang::Fr).rules();
        rules.declension.get(&e.table).is_some_and(|t| t.forms.keys().any(|k| k.contains('-')))
    })
}

/// Moves object pronouns of `vp` before the host of its verb group, or after
/// it with hyphens in a positive imperative.
pub fn clitics(work: &mut Work, vp: &mut Node, imperative: bool) {
    let Some(host) = vp.children.iter().position(|c| c.clitic_host) else { return };
    let mut picked = Vec::new();
    let mut i = host + 1;
    while i < vp.children.len() {
        if is_clitic(work, &vp.children[i]) {
            picked.push(vp.children.remove(i));
        } else {
            i += 1;
        }
    }
    let affirmative_imperative = imperative && !vp.children.iter().any(|c| c.is_t(TerminalKind::Adv) && c.lemma() == "ne");
    picked.sort_by_key(|p| rank(work, p, affirmative_imperative));
    let object = picked.iter().find(|p| {
        p.fixed.is_none() && matches!(p.props.features.c.unwrap_or(Case::Acc), Case::Acc | Case::Refl)
    });
    let object_cell = object.map(|p| p.own_peng);
    for c in &mut vp.children {
        if c.agree == Agree::PrecedingObject {
            c.agree = object_cell.map_or(Agree::None, Agree::Cell);
        }
    }
    if affirmative_imperative {
        for p in &mut picked {
            p.hyphen = true;
            if work.pengs[p.own_peng].pe.unwrap_or(Person::Third) != Person::Third && p.props.features.c.is_none() {
                p.props.features.c = Some(Case::Tonic);
            }
        }
        vp.children.splice(host + 1..host + 1, picked);
    } else {
        vp.children.splice(host..host, picked);
    }
}
