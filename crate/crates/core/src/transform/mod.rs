//! Sentence transformations on the working tree, in this order:
//! pronominalization, passive, question extraction, verb groups (modality,
//! aspect, negation), French clitics, then question words and inversion.

pub mod english;
pub mod french;
pub mod options;
pub mod question;

use crate::features::{Aux, Case, Tense};
use crate::io::warnings::{Issue, WarningKey};
use crate::lang::Lang;
use crate::lexicon::Pos;
use crate::realize::working::{Kind, Node, Work};
use crate::syntax::{PhraseKind, TerminalKind};
use options::{Question, TypeOptions};

/// Applies every transformation; returns the part removed by a question on
/// the outermost clause.
pub fn transform(work: &mut Work, root: &mut Node) -> Option<Node> {
    work.link(root);
    pronominalize(work, root);
    work.link(root);
    let answer = clauses(work, root, true);
    work.link(root);
    answer
}

fn clauses(work: &mut Work, n: &mut Node, top: bool) -> Option<Node> {
    for c in &mut n.children {
        clauses(work, c, false);
    }
    let answer = if n.is_p(PhraseKind::S) || n.is_p(PhraseKind::SP) { clause(work, n) } else { None };
    answer.filter(|_| top)
}

fn pronominalize(work: &mut Work, n: &mut Node) {
    if n.props.pro {
        let lang = n.lang;
        let old = std::mem::replace(n, work.phrase(PhraseKind::NP, Vec::new(), lang));
        *n = pronoun_for(work, old);
    }
    for c in &mut n.children {
        pronominalize(work, c);
    }
}

fn keep_formatting(into: &mut Node, from: &Node) {
    into.props.tags = from.props.tags.clone();
    into.props.before = from.props.before.clone();
    into.props.after = from.props.after.clone();
    into.props.around = from.props.around.clone();
    into.props.cap = from.props.cap;
}

/// The pronoun standing for `old`, sharing its agreement cell.
fn pronoun_for(work: &mut Work, mut old: Node) -> Node {
    old.props.pro = false;
    if old.is_t(TerminalKind::Pro) {
        return old;
    }
    let lang = old.lang;
    if old.is_p(PhraseKind::PP) {
        if lang == Lang::En {
            if let Some(h) = old.head_index() {
                let inner = old.children.remove(h);
                let p = pronoun_for(work, inner);
                old.children.insert(h, p);
            }
            return old;
        }
        let prep = old.children.iter().find(|c| c.is_t(TerminalKind::P)).map(Node::lemma).unwrap_or_default();
        let mut p = match prep.as_str() {
            "à" => {
                let mut p = work.inserted(TerminalKind::Pro, "lui", lang);
                p.props.features.c = Some(Case::Dat);
                if let Some(h) = old.head_index() {
                    p.own_peng = old.children[h].peng;
                }
                p
            }
            "de" => work.fixed(TerminalKind::Pro, "en", lang),
            _ => work.fixed(TerminalKind::Pro, "y", lang),
        };
        p.origin = old.origin;
        keep_formatting(&mut p, &old);
        return p;
    }
    if !old.is_nominal() {
        work.not_pronominalizable(&old);
        return old;
    }
    let mut p = work.inserted(TerminalKind::Pro, if lang == Lang::En { "it" } else { "lui" }, lang);
    p.own_peng = old.peng;
    p.origin = old.origin;
    keep_formatting(&mut p, &old);
    p
}

/// Moves the direct object to the subject place and the subject to a "by"
/// phrase at the end of the VP.
fn passivize(work: &mut Work, s: &mut Node, vp: &[usize]) -> bool {
    let Some(o) = question::direct_object(s.at(vp)) else {
        work.issue(Issue::new(WarningKey::InapplicableOption, ["pas"]), s.lang);
        return false;
    };
    let object = s.at_mut(vp).children.remove(o);
    let (subject, _) = s.clause_parts();
    let at = subject.unwrap_or(0);
    if let Some(i) = subject {
        let mut agent = s.children.remove(i);
        clear_case(&mut agent);
        let by = work.inserted(TerminalKind::P, if s.lang == Lang::En { "by" } else { "par" }, s.lang);
        let pp = work.phrase(PhraseKind::PP, vec![by, agent], s.lang);
        s.children.insert(i, object);
        s.at_mut(vp).children.push(pp);
    } else {
        s.children.insert(at, object);
    }
    true
}

fn clear_case(n: &mut Node) {
    if n.is_t(TerminalKind::Pro) {
        n.props.features.c = None;
    }
    for c in &mut n.children {
        clear_case(c);
    }
}

/// Tense and auxiliary of a head verb: local, then cell, then lexicon.
fn verb_tense(work: &Work, v: &Node) -> (Tense, Aux) {
    let cell = work.taux_of(v);
    let t = v.props.features.t.or(cell.t).unwrap_or(Tense::P);
    let entry_aux = work.entry(v.lang, &v.lemma(), Pos::V).and_then(|e| e.aux);
    let aux = v.props.features.aux.or(cell.aux).or(entry_aux).unwrap_or(Aux::Av);
    (t, aux)
}

fn overlay(base: &TypeOptions, local: &TypeOptions) -> TypeOptions {
    TypeOptions {
        neg: local.neg.clone().or_else(|| base.neg.clone()),
        pas: base.pas || local.pas,
        int: local.int.or(base.int),
        modality: local.modality.or(base.modality),
        prog: base.prog || local.prog,
        perf: base.perf || local.perf,
        exc: base.exc || local.exc,
    }
}

fn clause(work: &mut Work, s: &mut Node) -> Option<Node> {
    let opts = s.props.typ.clone();
    let lang = s.lang;
    let vps = s.clause_vps();
    let Some(first) = vps.first().cloned() else {
        if !opts.is_empty() {
            work.issue(Issue::new(WarningKey::NoVerb, [s.kind_code()]), lang);
        }
        return None;
    };
    let passive = opts.pas && passivize(work, s, &first);
    let question = opts.int.map(|q| {
        if question::applicable(s, &first, q, passive) {
            q
        } else {
            work.issue(Issue::new(WarningKey::InapplicableOption, [q.code()]), lang);
            Question::Yon
        }
    });
    let answer = question.and_then(|q| question::extract(s, &first, q, passive));
    let inversion = lang == Lang::En && question.is_some_and(|q| question::inverts(q, passive));
    let vps = s.clause_vps();
    let mut imperative = Vec::new();
    for (k, path) in vps.iter().enumerate() {
        let vp = s.at_mut(path);
        let mut o = overlay(&opts, &vp.props.typ);
        o.pas = passive;
        let Some(h) = vp.children.iter().position(|c| c.is_t(TerminalKind::V)) else {
            imperative.push(false);
            continue;
        };
        let (t, aux) = verb_tense(work, &vp.children[h]);
        imperative.push(t == Tense::Ip);
        match lang {
            Lang::En => english::chain(work, vp, &o, inversion && k == 0, t),
            Lang::Fr => french::chain(work, vp, &o, t, aux),
        }
    }
    if lang == Lang::Fr {
        for (path, imp) in vps.iter().zip(imperative) {
            french::clitics(work, s.at_mut(path), imp);
        }
    }
    if let Some(q) = question {
        let first = vps.first().cloned().unwrap_or_default();
        match (lang, q) {
            (Lang::En, Question::Tag) => english::tag(work, s, &first, opts.neg.is_some()),
            (Lang::Fr, Question::Tag) => {
                let mut n = work.fixed(TerminalKind::Q, "n'est-ce", lang);
                n.props.before.push(",".to_string());
                s.children.push(n);
                let pas = work.fixed(TerminalKind::Q, "pas", lang);
                s.children.push(pas);
            }
            _ => {}
        }
        if inversion {
            english::invert(s, &first);
        }
        question::prepend(work, s, q, passive);
    }
    answer
}

impl Node {
    pub fn kind_code(&self) -> &'static str {
        match self.kind {
            Kind::T(k) => k.code(),
            Kind::P(k) => k.code(),
        }
    }
}
