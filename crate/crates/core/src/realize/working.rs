//! The tree a realization works on: a private copy of the input in
//! constituent shape. Agreement cells live in [`Work`] and nodes refer to
//! them by index, so two words agree when they hold the same index.

use crate::features::{Aux, Case, FeatureBundle, Gender, Number, Person, Position, Tense};
use crate::io::warnings::{Issue, WarningKey};
use crate::lang::Lang;
use crate::lexicon::{LexiconEntry, Lexicons, Pos};
use crate::numdate::number_agreement;
use crate::realize::token::Origin;
use crate::syntax::{Constituent, Dependent, Payload, Phrase, PhraseKind, Props, Relation, Terminal, TerminalKind};

pub type CellId = usize;

/// Person, number and gender shared by agreeing words.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Peng {
    pub pe: Option<Person>,
    pub n: Option<Number>,
    pub g: Option<Gender>,
}

/// Tense and auxiliary shared by coordinated verbs.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Taux {
    pub t: Option<Tense>,
    pub aux: Option<Aux>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    T(TerminalKind),
    P(PhraseKind),
}

/// What a French past participle agrees with.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Agree {
    #[default]
    None,
    Subject,
    /// A direct object pronoun placed before the auxiliary "avoir", if any.
    PrecedingObject,
    Cell(CellId),
}

#[derive(Clone, Debug)]
pub struct Node {
    pub kind: Kind,
    pub lang: Lang,
    pub payload: Payload,
    pub props: Props,
    pub children: Vec<Node>,
    pub origin: Origin,
    /// Text set by a transformation; the lexicon is not consulted.
    pub fixed: Option<String>,
    pub own_peng: CellId,
    pub peng: CellId,
    pub own_taux: CellId,
    /// Case given by the grammatical role, below a local `c`.
    pub case: Option<Case>,
    /// Tense imposed by the verbal chain, above everything else.
    pub tense: Option<Tense>,
    pub agree: Agree,
    /// Joined to the previous word with a hyphen.
    pub hyphen: bool,
    /// Finite element of a verbal chain.
    pub finite: bool,
    /// French object pronouns go right before this element.
    pub clitic_host: bool,
    /// Realized with a contracted "not" ("doesn't").
    pub negated: bool,
}

impl Node {
    pub fn is_t(&self, k: TerminalKind) -> bool {
        self.kind == Kind::T(k)
    }

    pub fn is_p(&self, k: PhraseKind) -> bool {
        self.kind == Kind::P(k)
    }

    pub fn lemma(&self) -> String {
        self.payload.text()
    }

    pub fn pos(&self) -> Option<Pos> {
        match self.kind {
            Kind::T(k) => k.pos(),
            Kind::P(_) => None,
        }
    }

    /// Can fill a subject or object slot.
    pub fn is_nominal(&self) -> bool {
        match self.kind {
            Kind::P(PhraseKind::NP) => true,
            Kind::P(PhraseKind::CP) => {
                self.children.iter().any(|c| !c.is_t(TerminalKind::C)) && self.children.iter().all(|c| c.is_t(TerminalKind::C) || c.is_nominal())
            }
            Kind::T(TerminalKind::N | TerminalKind::Pro | TerminalKind::NO | TerminalKind::DT) => true,
            Kind::T(TerminalKind::Q) => self.origin == Origin::Original,
            _ => false,
        }
    }

    /// A VP, or a coordination of them.
    pub fn is_verbal(&self) -> bool {
        self.is_p(PhraseKind::VP) || (self.is_p(PhraseKind::CP) && self.children.iter().any(Node::is_verbal))
    }

    /// Index of the head child of a phrase.
    pub fn head_index(&self) -> Option<usize> {
        let find = |pred: &dyn Fn(&Node) -> bool| self.children.iter().position(pred);
        match self.kind {
            Kind::P(PhraseKind::NP) => find(&|c| c.is_t(TerminalKind::N))
                .or_else(|| find(&|c| c.is_t(TerminalKind::Pro)))
                .or_else(|| find(&|c| c.is_p(PhraseKind::NP) || c.is_p(PhraseKind::CP)))
                .or_else(|| find(&|c| c.is_t(TerminalKind::NO) || c.is_t(TerminalKind::DT)))
                .or_else(|| find(&|c| c.is_t(TerminalKind::Q)))
                .or(if self.children.is_empty() { None } else { Some(0) }),
            Kind::P(PhraseKind::VP) => find(&|c| c.is_t(TerminalKind::V)),
            Kind::P(PhraseKind::AP) => find(&|c| c.is_t(TerminalKind::A)),
            Kind::P(PhraseKind::AdvP) => find(&|c| c.is_t(TerminalKind::Adv)),
            Kind::P(PhraseKind::PP) => find(&|c| c.is_nominal()),
            _ => None,
        }
    }

    /// Index of the subject and of the verbal children of a clause.
    pub fn clause_parts(&self) -> (Option<usize>, Vec<usize>) {
        let mut verbs: Vec<usize> = (0..self.children.len()).filter(|&i| self.children[i].is_verbal()).collect();
        if verbs.is_empty() {
            verbs = (0..self.children.len()).filter(|&i| self.children[i].is_t(TerminalKind::V)).collect();
        }
        let limit = verbs.first().copied().unwrap_or(self.children.len());
        let subject = self.children[..limit].iter().position(Node::is_nominal);
        (subject, verbs)
    }

    /// Paths to the VPs of a clause, through coordinations.
    pub fn clause_vps(&self) -> Vec<Vec<usize>> {
        fn walk(n: &Node, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if n.is_p(PhraseKind::VP) {
                out.push(path.clone());
            } else if n.is_p(PhraseKind::CP) {
                for (i, c) in n.children.iter().enumerate() {
                    path.push(i);
                    walk(c, path, out);
                    path.pop();
                }
            }
        }
        let mut out = Vec::new();
        for i in self.clause_parts().1 {
            let mut path = vec![i];
            walk(&self.children[i], &mut path, &mut out);
        }
        out
    }

    pub fn at_mut(&mut self, path: &[usize]) -> &mut Node {
        path.iter().fold(self, |n, &i| &mut n.children[i])
    }

    pub fn at(&self, path: &[usize]) -> &Node {
        path.iter().fold(self, |n, &i| &n.children[i])
    }
}

/// Agreement cells, lexica and the problems found so far.
pub struct Work<'a> {
    pub lexicons: &'a Lexicons,
    pub pengs: Vec<Peng>,
    pub tauxs: Vec<Taux>,
    pub issues: Vec<(Issue, Lang)>,
}

fn write_peng(cell: &mut Peng, f: &FeatureBundle) {
    cell.pe = f.pe.or(cell.pe);
    cell.n = f.n.or(cell.n);
    cell.g = f.g.or(cell.g);
}

fn merge_props(into: &mut Props, from: &Props) {
    into.features = from.features.or(&into.features);
    into.pos = from.pos.or(into.pos);
    into.pro |= from.pro;
    if !from.typ.is_empty() {
        into.typ = from.typ.clone();
    }
    into.tags.extend(from.tags.iter().cloned());
    into.before.extend(from.before.iter().cloned());
    into.after.extend(from.after.iter().cloned());
    into.around.extend(from.around.iter().cloned());
    into.cap = from.cap.or(into.cap);
    if from.d_opt != Default::default() {
        into.d_opt = from.d_opt.clone();
    }
}

impl<'a> Work<'a> {
    pub fn new(lexicons: &'a Lexicons) -> Work<'a> {
        Work { lexicons, pengs: Vec::new(), tauxs: Vec::new(), issues: Vec::new() }
    }

    pub fn new_peng(&mut self, p: Peng) -> CellId {
        self.pengs.push(p);
        self.pengs.len() - 1
    }

    fn new_taux(&mut self, t: Taux) -> CellId {
        self.tauxs.push(t);
        self.tauxs.len() - 1
    }

    pub fn issue(&mut self, issue: Issue, lang: Lang) {
        self.issues.push((issue, lang));
    }

    pub fn entry(&self, lang: Lang, lemma: &str, pos: Pos) -> Option<&'a LexiconEntry> {
        self.lexicons.get(lang).lookup(lemma, pos).ok()
    }

    fn blank(&mut self, kind: Kind, payload: Payload, lang: Lang, props: Props) -> Node {
        let peng = self.new_peng(Peng::default());
        let taux = self.new_taux(Taux::default());
        Node {
            kind,
            lang,
            payload,
            props,
            children: Vec::new(),
            origin: Origin::Original,
            fixed: None,
            own_peng: peng,
            peng,
            own_taux: taux,
            case: None,
            tense: None,
            agree: Agree::None,
            hyphen: false,
            finite: false,
            clitic_host: false,
            negated: false,
        }
    }

    /// A word added by a transformation.
    pub fn inserted(&mut self, kind: TerminalKind, lemma: &str, lang: Lang) -> Node {
        let mut n = self.blank(Kind::T(kind), Payload::Word(lemma.to_string()), lang, Props::default());
        n.origin = Origin::Inserted;
        self.seed(&mut n);
        n
    }

    /// An added word with a fixed spelling.
    pub fn fixed(&mut self, kind: TerminalKind, text: &str, lang: Lang) -> Node {
        let mut n = self.inserted(kind, text, lang);
        n.fixed = Some(text.to_string());
        n
    }

    pub fn phrase(&mut self, kind: PhraseKind, children: Vec<Node>, lang: Lang) -> Node {
        let mut n = self.blank(Kind::P(kind), Payload::Word(String::new()), lang, Props::default());
        n.children = children;
        n
    }

    /// Inherent features from the lexicon, then local ones, into the own cells.
    fn seed(&mut self, n: &mut Node) {
        let mut peng = Peng::default();
        if let (Some(pos @ (Pos::N | Pos::Pro)), Payload::Word(w)) = (n.pos(), &n.payload) {
            if let Some(e) = self.entry(n.lang, w, pos) {
                peng = Peng { pe: e.person, n: e.number, g: e.gender };
            }
        }
        write_peng(&mut peng, &n.props.features);
        self.pengs[n.own_peng] = peng;
        self.tauxs[n.own_taux] = Taux { t: n.props.features.t, aux: n.props.features.aux };
    }

    fn take_issues(&mut self, props: &mut Props, lang: Lang) {
        for i in props.issues.drain(..) {
            self.issues.push((i, lang));
        }
    }

    pub fn build(&mut self, c: &Constituent) -> Node {
        match c {
            Constituent::Terminal(t) => self.build_terminal(t),
            Constituent::Phrase(p) => self.build_phrase(p),
            Constituent::Dependent(d) => self.build_dependent(d),
        }
    }

    fn build_terminal(&mut self, t: &Terminal) -> Node {
        let mut props = t.props.clone();
        self.take_issues(&mut props, t.lang);
        if let Some(i) = t.payload_issue() {
            self.issue(i, t.lang);
        }
        let mut n = self.blank(Kind::T(t.kind), t.payload.clone(), t.lang, props);
        self.seed(&mut n);
        n
    }

    fn build_phrase(&mut self, p: &Phrase) -> Node {
        let mut props = p.props.clone();
        self.take_issues(&mut props, p.lang);
        let children = p.children.iter().map(|c| self.build(c)).collect();
        let mut n = self.blank(Kind::P(p.kind), Payload::Word(String::new()), p.lang, props);
        n.children = children;
        n
    }

    /// Dependents become phrases: dependents before the head in the order
    /// given, the head, then the others.
    fn build_dependent(&mut self, d: &Dependent) -> Node {
        let mut props = d.props.clone();
        self.take_issues(&mut props, d.lang);
        let mut head = self.build_terminal(&d.head);
        if d.deps.is_empty() && d.rel != Relation::Root {
            merge_props(&mut head.props, &props);
            self.seed(&mut head);
            return head;
        }
        let mut pre = Vec::new();
        let mut post = Vec::new();
        for dep in &d.deps {
            let before = match dep.props.pos {
                Some(p) => p == Position::Pre,
                None => matches!(dependent_relation(dep), Relation::Subj | Relation::Det),
            };
            let node = self.build_dependent(dep);
            if before {
                pre.push(node)
            } else {
                post.push(node)
            }
        }
        let lang = d.lang;
        let has_subject = d.deps.iter().any(|x| dependent_relation(x) == Relation::Subj);
        let mut node = match d.head.kind {
            TerminalKind::V if d.rel == Relation::Root || has_subject => {
                let mut vp = vec![head];
                vp.extend(post);
                let vp = self.phrase(PhraseKind::VP, vp, lang);
                pre.push(vp);
                self.phrase(PhraseKind::S, pre, lang)
            }
            TerminalKind::C => {
                let mut all = vec![head];
                all.extend(pre);
                all.extend(post);
                self.phrase(PhraseKind::CP, all, lang)
            }
            k => {
                let kind = match k {
                    TerminalKind::V => PhraseKind::VP,
                    TerminalKind::A => PhraseKind::AP,
                    TerminalKind::Adv => PhraseKind::AdvP,
                    TerminalKind::P => PhraseKind::PP,
                    _ => PhraseKind::NP,
                };
                pre.push(head);
                pre.extend(post);
                self.phrase(kind, pre, lang)
            }
        };
        node.props = props;
        node
    }

    /// Own cell that receives the features written on a phrase.
    fn target_cell(n: &Node) -> CellId {
        match (n.kind, n.head_index()) {
            (Kind::P(PhraseKind::NP | PhraseKind::PP | PhraseKind::AP), Some(h)) => Self::target_cell(&n.children[h]),
            _ => n.own_peng,
        }
    }

    /// Features given on phrases go to the cell of their head; outer phrases
    /// are written first so that inner ones win.
    pub fn apply_writes(&mut self, n: &mut Node) {
        let f = n.props.features.clone();
        match n.kind {
            Kind::P(PhraseKind::S | PhraseKind::SP) => {
                let (subject, _) = n.clause_parts();
                if let Some(s) = subject {
                    let cell = Self::target_cell(&n.children[s]);
                    write_peng(&mut self.pengs[cell], &f);
                }
                for path in n.clause_vps() {
                    let vp = n.at(&path);
                    if let Some(h) = vp.head_index() {
                        let cell = vp.children[h].own_taux;
                        let taux = &mut self.tauxs[cell];
                        taux.t = f.t.or(taux.t);
                        taux.aux = f.aux.or(taux.aux);
                    }
                }
            }
            Kind::P(PhraseKind::VP) => {
                if let Some(h) = n.head_index() {
                    let taux = &mut self.tauxs[n.children[h].own_taux];
                    taux.t = f.t.or(taux.t);
                    taux.aux = f.aux.or(taux.aux);
                }
            }
            Kind::P(PhraseKind::AP | PhraseKind::AdvP) => {
                if let Some(h) = n.head_index() {
                    let head = &mut n.children[h];
                    head.props.features.f = head.props.features.f.or(f.f);
                }
                let cell = Self::target_cell(n);
                write_peng(&mut self.pengs[cell], &f);
            }
            Kind::P(PhraseKind::NP) => {
                let cell = Self::target_cell(n);
                write_peng(&mut self.pengs[cell], &f);
                self.number_agreement(n, cell);
            }
            Kind::P(_) => {
                let cell = Self::target_cell(n);
                write_peng(&mut self.pengs[cell], &f);
            }
            Kind::T(_) => {}
        }
        for c in &mut n.children {
            self.apply_writes(c);
        }
    }

    /// A number determiner sets the number of its noun.
    fn number_agreement(&mut self, np: &Node, cell: CellId) {
        if np.props.features.n.is_some() {
            return;
        }
        let Some(h) = np.head_index() else { return };
        if np.children[h].props.features.n.is_some() || !np.children[h].is_t(TerminalKind::N) {
            return;
        }
        for c in &np.children {
            if let (Kind::T(TerminalKind::NO), Payload::Number(x)) = (c.kind, &c.payload) {
                if c.props.d_opt.ord != Some(true) {
                    self.pengs[cell].n = Some(number_agreement(*x, c.lang));
                }
            }
        }
    }

    /// Orders adjectives around the noun: English ones before it, French ones
    /// after it unless listed as preposed; `pos` overrides.
    pub fn place_adjectives(&self, n: &mut Node) {
        for c in &mut n.children {
            self.place_adjectives(c);
        }
        if !n.is_p(PhraseKind::NP) {
            return;
        }
        let Some(h) = n.children.iter().position(|c| c.is_t(TerminalKind::N)) else { return };
        let rules = self.lexicons.get(n.lang).rules();
        let adjective = |c: &Node| -> Option<bool> {
            let lemma = if c.is_t(TerminalKind::A) {
                c.lemma()
            } else if c.is_p(PhraseKind::AP) {
                c.children.iter().find(|x| x.is_t(TerminalKind::A))?.lemma()
            } else {
                return None;
            };
            Some(match (c.props.pos, c.lang) {
                (Some(p), _) => p == Position::Pre,
                (None, Lang::En) => true,
                (None, Lang::Fr) => rules.adjective_pre.contains(&lemma),
            })
        };
        let children = std::mem::take(&mut n.children);
        let (mut pre, mut post, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        let mut noun_at = 0;
        for (i, c) in children.into_iter().enumerate() {
            match adjective(&c) {
                Some(true) => pre.push(c),
                Some(false) => post.push(c),
                None => {
                    if i == h {
                        noun_at = rest.len();
                    }
                    rest.push(c)
                }
            }
        }
        let tail = rest.split_off(noun_at + 1);
        let noun = rest.pop();
        n.children = rest;
        n.children.extend(pre);
        n.children.extend(noun);
        n.children.extend(post);
        n.children.extend(tail);
    }

    pub fn peng_of(&self, n: &Node) -> Peng {
        self.pengs[n.peng]
    }

    pub fn taux_of(&self, n: &Node) -> Taux {
        self.tauxs[n.own_taux]
    }

    pub(crate) fn not_pronominalizable(&mut self, n: &Node) {
        self.issue(Issue::new(WarningKey::NotPronominalizable, [n.kind_code()]), n.lang);
    }
}

/// The relation a dependent plays for placement; a coordination counts as
/// the relation of its elements.
fn dependent_relation(d: &Dependent) -> Relation {
    match d.rel {
        Relation::Coord => d.deps.first().map_or(Relation::Coord, dependent_relation),
        r => r,
    }
}
