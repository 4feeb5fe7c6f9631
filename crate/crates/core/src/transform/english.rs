//! English verb groups: modal < perfect "have" < progressive "be" < passive
//! "be" < verb, with do-support when negation or inversion needs an
//! auxiliary.

use super::options::{Modality, Neg, TypeOptions};
use crate::features::{Case, Person, Tense};
use crate::lang::Lang;
use crate::realize::token::Origin;
use crate::realize::working::{Node, Work};
use crate::syntax::TerminalKind;

fn modal(m: Modality, past: bool) -> &'static str {
    match (m, past) {
        (Modality::Poss, false) => "can",
        (Modality::Poss, true) => "could",
        (Modality::Perm, false) => "may",
        (Modality::Perm, true) => "might",
        (Modality::Nece, false) => "must",
        (Modality::Nece, true) => "should",
        (Modality::Will, false) | (Modality::Obli, false) => "will",
        (Modality::Will, true) | (Modality::Obli, true) => "would",
    }
}

fn verb(work: &mut Work, lemma: &str, t: Tense) -> Node {
    let mut v = work.inserted(TerminalKind::V, lemma, Lang::En);
    v.tense = Some(t);
    v
}

/// Replaces the head verb of `vp` by its full verb group. `need_aux` asks
/// for an auxiliary in front even without negation.
pub fn chain(work: &mut Work, vp: &mut Node, opts: &TypeOptions, need_aux: bool, t: Tense) {
    let Some(h) = vp.children.iter().position(|c| c.is_t(TerminalKind::V)) else { return };
    let mut main = vp.children.remove(h);
    let mut words: Vec<Node> = Vec::new();
    let mut next = t;
    let past = matches!(t, Tense::Ps | Tense::C);
    match opts.modality {
        Some(m) if m != Modality::Obli => {
            let mut w = work.fixed(TerminalKind::V, modal(m, past), Lang::En);
            w.tense = Some(t);
            words.push(w);
            next = Tense::B;
        }
        _ if matches!(t, Tense::F | Tense::C) => {
            let mut w = work.fixed(TerminalKind::V, if t == Tense::F { "will" } else { "would" }, Lang::En);
            w.tense = Some(t);
            words.push(w);
            next = Tense::B;
        }
        _ => {}
    }
    let mut lexical_first = words.is_empty();
    if opts.modality == Some(Modality::Obli) {
        words.push(verb(work, "have", next));
        words.push(work.fixed(TerminalKind::P, "to", Lang::En));
        next = Tense::B;
    }
    let auxiliaries = [(opts.perf, "have", Tense::Pp), (opts.prog, "be", Tense::Pr), (opts.pas, "be", Tense::Pp)];
    for (on, lemma, after) in auxiliaries {
        if on {
            if words.is_empty() {
                lexical_first = false;
            }
            words.push(verb(work, lemma, next));
            next = after;
        }
    }
    main.tense = Some(next);
    if words.is_empty() && main.lemma() == "be" && t != Tense::Ip {
        lexical_first = false;
    }
    words.push(main);
    if lexical_first && (opts.neg.is_some() || need_aux) {
        let first_t = words[0].tense.unwrap_or(t);
        words[0].tense = Some(Tense::B);
        words.insert(0, verb(work, "do", first_t));
    }
    words[0].finite = true;
    if let Some(neg) = &opts.neg {
        let not = match neg {
            Neg::Plain => work.inserted(TerminalKind::Adv, "not", Lang::En),
            Neg::Contrast(w) => work.fixed(TerminalKind::Adv, w, Lang::En),
        };
        words.insert(1, not);
    }
    vp.children.splice(h..h, words);
}

/// Moves the finite element of the first VP before the subject.
pub fn invert(s: &mut Node, vp: &[usize]) {
    let (subject, _) = s.clause_parts();
    let Some(subject) = subject else { return };
    let v = s.at_mut(vp);
    let Some(f) = v.children.iter().position(|c| c.finite) else { return };
    let finite = v.children.remove(f);
    s.children.insert(subject, finite);
}

/// Tag question: ", doesn't he".
pub fn tag(work: &mut Work, s: &mut Node, vp: &[usize], negative: bool) {
    let (subject, _) = s.clause_parts();
    let Some(f) = s.at(vp).children.iter().find(|c| c.finite).cloned() else { return };
    let aux_like = f.fixed.is_some() || f.lemma() == "be" || f.origin == Origin::Inserted;
    let mut aux = if aux_like { f } else { verb(work, "do", f.tense.unwrap_or(Tense::P)) };
    aux.origin = Origin::Inserted;
    aux.finite = false;
    aux.negated = !negative;
    aux.props = Default::default();
    aux.props.before.push(",".to_string());
    let mut pro = work.inserted(TerminalKind::Pro, "it", Lang::En);
    pro.props.features.c = Some(Case::Nom);
    match subject {
        Some(i) => pro.own_peng = s.children[i].peng,
        None => pro.props.features.pe = Some(Person::Second),
    }
    s.children.push(aux);
    s.children.push(pro);
}
