//! Aliasing of agreement cells from the structure of the working tree. Run
//! again after every structural change; aliases are recomputed from scratch.

use super::working::{CellId, Kind, Node, Peng, Work};
use crate::features::{Case, Gender, Number, Person};
use crate::lang::Lang;
use crate::syntax::{PhraseKind, TerminalKind};

/// Number of a coordination from its conjunction and its elements.
fn coordinated_number(conj: Option<&str>, elems: &[Peng]) -> Option<Number> {
    match (conj, elems) {
        (_, []) => None,
        (_, [one]) => one.n,
        (Some("or" | "ou" | "nor" | "ni"), all) => all.last().and_then(|p| p.n),
        _ => Some(Number::P),
    }
}

fn coordinated_gender(lang: Lang, elems: &[Peng]) -> Option<Gender> {
    let all_f = elems.iter().all(|p| p.g == Some(Gender::F));
    match lang {
        Lang::Fr if all_f => Some(Gender::F),
        Lang::Fr => Some(Gender::M),
        Lang::En => {
            let first = elems.first()?.g;
            elems.iter().all(|p| p.g == first).then_some(first).flatten()
        }
    }
}

impl Work<'_> {
    pub fn link(&mut self, root: &mut Node) {
        self.link_node(root, None, None);
    }

    fn link_node(&mut self, n: &mut Node, agree: Option<CellId>, case: Option<Case>) {
        n.peng = n.own_peng;
        match n.kind {
            Kind::T(k) => {
                if let (Some(c), TerminalKind::D | TerminalKind::A | TerminalKind::NO | TerminalKind::V) = (agree, k) {
                    n.peng = c;
                }
                n.case = if k == TerminalKind::Pro { case } else { None };
            }
            Kind::P(PhraseKind::NP) => {
                let head = n.head_index();
                if let Some(h) = head {
                    self.link_node(&mut n.children[h], None, case);
                    n.peng = n.children[h].peng;
                }
                let cell = n.peng;
                for (i, c) in n.children.iter_mut().enumerate() {
                    if Some(i) == head {
                        continue;
                    }
                    let agreeing = matches!(c.kind, Kind::T(TerminalKind::D | TerminalKind::A | TerminalKind::NO))
                        || c.is_p(PhraseKind::AP)
                        || (c.is_p(PhraseKind::CP) && !c.is_nominal());
                    self.link_node(c, agreeing.then_some(cell), None);
                }
            }
            Kind::P(PhraseKind::AP) => {
                for c in &mut n.children {
                    let a = if c.is_t(TerminalKind::A) || c.is_p(PhraseKind::CP) { agree } else { None };
                    self.link_node(c, a, None);
                }
                if let Some(c) = agree {
                    n.peng = c;
                }
            }
            Kind::P(PhraseKind::VP) => {
                for c in &mut n.children {
                    let a = match c.kind {
                        Kind::T(TerminalKind::V | TerminalKind::A) | Kind::P(PhraseKind::AP | PhraseKind::VP) => agree,
                        Kind::P(PhraseKind::CP) if !c.is_nominal() => agree,
                        _ => None,
                    };
                    self.link_node(c, a, Some(Case::Acc));
                }
            }
            Kind::P(PhraseKind::PP) => {
                let inner = if n.lang == Lang::Fr { Case::Tonic } else { Case::Acc };
                for c in &mut n.children {
                    self.link_node(c, None, Some(inner));
                }
                if let Some(h) = n.head_index() {
                    n.peng = n.children[h].peng;
                }
            }
            Kind::P(PhraseKind::S | PhraseKind::SP) => {
                let (subject, verbs) = n.clause_parts();
                let subject_cell = match subject {
                    Some(s) => {
                        self.link_node(&mut n.children[s], None, Some(Case::Nom));
                        n.children[s].peng
                    }
                    None => n.own_peng,
                };
                for (i, c) in n.children.iter_mut().enumerate() {
                    if Some(i) == subject {
                        continue;
                    }
                    let a = (verbs.contains(&i) || c.is_t(TerminalKind::V)).then_some(subject_cell);
                    self.link_node(c, a, None);
                }
                n.peng = subject_cell;
            }
            Kind::P(PhraseKind::CP) => {
                for c in &mut n.children {
                    self.link_node(c, agree, case);
                }
                if n.is_nominal() {
                    n.peng = self.coordination_cell(n);
                } else if let Some(c) = agree {
                    n.peng = c;
                }
            }
            Kind::P(PhraseKind::AdvP) => {
                for c in &mut n.children {
                    self.link_node(c, None, None);
                }
            }
        }
    }

    /// A fresh cell combining the elements; values written on the
    /// coordination itself win.
    fn coordination_cell(&mut self, n: &Node) -> CellId {
        let conj = n.children.iter().find(|c| c.is_t(TerminalKind::C)).map(|c| c.lemma().to_lowercase());
        let elems: Vec<Peng> =
            n.children.iter().filter(|c| !c.is_t(TerminalKind::C)).map(|c| self.pengs[c.peng]).collect();
        let explicit = self.pengs[n.own_peng];
        let pe = elems.iter().map(|p| p.pe.unwrap_or(Person::Third)).min();
        let cell = Peng {
            pe: explicit.pe.or(pe),
            n: explicit.n.or_else(|| coordinated_number(conj.as_deref(), &elems)),
            g: explicit.g.or_else(|| coordinated_gender(n.lang, &elems)),
        };
        self.new_peng(cell)
    }
}
