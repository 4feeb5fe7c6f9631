//! The specification tree built by the user, in constituent or dependency
//! notation. It only records what was asked for; agreement, transformations
//! and word order are computed on a working copy at realization time.

pub mod dsl;
pub mod notation;

use chrono::NaiveDateTime;
use serde_json::{Map, Value};

use crate::features::{code_enum, Aux, Case, Degree, FeatureBundle, Gender, Number, Person, Position, Tense};
use crate::io::warnings::{Issue, WarningKey};
use crate::lang::{current_lang, Lang};
use crate::lexicon::Pos;
use crate::numdate::{parse_instant, DisplayOptions};
use crate::transform::options::{json_type_name, OptionProblem, TypeOptions};

code_enum!(TerminalKind {
    N => "N",
    V => "V",
    A => "A",
    D => "D",
    Adv => "Adv",
    Pro => "Pro",
    P => "P",
    C => "C",
    Q => "Q",
    NO => "NO",
    DT => "DT",
});

code_enum!(PhraseKind {
    S => "S",
    SP => "SP",
    NP => "NP",
    VP => "VP",
    AP => "AP",
    AdvP => "AdvP",
    PP => "PP",
    CP => "CP",
});

code_enum!(Relation {
    Root => "root",
    Subj => "subj",
    Comp => "comp",
    Mod => "mod",
    Det => "det",
    Coord => "coord",
});

impl TerminalKind {
    /// Lexicon category, if the terminal is looked up.
    pub fn pos(self) -> Option<Pos> {
        Some(match self {
            TerminalKind::N => Pos::N,
            TerminalKind::V => Pos::V,
            TerminalKind::A => Pos::A,
            TerminalKind::D => Pos::D,
            TerminalKind::Adv => Pos::Adv,
            TerminalKind::Pro => Pos::Pro,
            TerminalKind::P => Pos::P,
            TerminalKind::C => Pos::C,
            TerminalKind::Q | TerminalKind::NO | TerminalKind::DT => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Payload {
    Word(String),
    Number(f64),
    Date(NaiveDateTime),
    /// A lemma of the wrong type, kept as given and realized in brackets.
    Invalid(Value),
}

impl Payload {
    pub fn text(&self) -> String {
        match self {
            Payload::Word(w) => w.clone(),
            Payload::Number(x) => crate::numdate::number::raw_number(*x),
            Payload::Date(d) => d.format("%Y-%m-%dT%H:%M:%S").to_string(),
            Payload::Invalid(Value::String(s)) => s.clone(),
            Payload::Invalid(v) => v.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tag {
    pub name: String,
    pub attrs: Vec<(String, String)>,
}

impl Tag {
    pub fn open(&self) -> String {
        let mut s = format!("<{}", self.name);
        for (k, v) in &self.attrs {
            s.push_str(&format!(" {k}=\"{}\"", v.replace('"', "&quot;")));
        }
        s.push('>');
        s
    }

    pub fn close(&self) -> String {
        format!("</{}>", self.name)
    }
}

/// Everything set with the dot notation.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Props {
    pub features: FeatureBundle,
    pub pos: Option<Position>,
    pub pro: bool,
    pub typ: TypeOptions,
    /// In call order; each tag wraps the ones before it.
    pub tags: Vec<Tag>,
    pub before: Vec<String>,
    pub after: Vec<String>,
    pub around: Vec<String>,
    pub cap: Option<bool>,
    pub d_opt: DisplayOptions,
    pub issues: Vec<Issue>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Terminal {
    pub kind: TerminalKind,
    pub payload: Payload,
    pub lang: Lang,
    pub props: Props,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Phrase {
    pub kind: PhraseKind,
    pub children: Vec<Constituent>,
    pub lang: Lang,
    pub props: Props,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Dependent {
    pub rel: Relation,
    pub head: Terminal,
    pub deps: Vec<Dependent>,
    pub lang: Lang,
    pub props: Props,
}

#[derive(Debug, PartialEq)]
pub enum Constituent {
    Terminal(Terminal),
    Phrase(Phrase),
    Dependent(Dependent),
}

/// A deep copy made by writing the constituent out and reading it back, so
/// that nothing is shared with the original.
impl Clone for Constituent {
    fn clone(&self) -> Constituent {
        crate::io::json::from_value(&crate::io::json::to_value(self))
            .expect("a serialized constituent always reads back")
    }
}

impl Terminal {
    pub fn new(kind: TerminalKind, lemma: Value) -> Terminal {
        let payload = match (kind, lemma) {
            (TerminalKind::NO, Value::Number(n)) => Payload::Number(n.as_f64().unwrap_or(f64::NAN)),
            (TerminalKind::NO, Value::String(s)) => match s.trim().parse::<f64>() {
                Ok(x) if x.is_finite() => Payload::Number(x),
                _ => Payload::Invalid(Value::String(s)),
            },
            (TerminalKind::DT, Value::String(s)) => match parse_instant(&s) {
                Some(d) => Payload::Date(d),
                None => Payload::Invalid(Value::String(s)),
            },
            (TerminalKind::NO | TerminalKind::DT, v) => Payload::Invalid(v),
            (TerminalKind::Q, Value::String(s)) => Payload::Word(s),
            (TerminalKind::Q, v) => Payload::Word(v.to_string()),
            (_, Value::String(s)) => Payload::Word(s),
            (_, v) => Payload::Invalid(v),
        };
        Terminal { kind, payload, lang: current_lang(), props: Props::default() }
    }

    pub fn lemma(&self) -> String {
        self.payload.text()
    }

    /// The problem with the payload, if any.
    pub fn payload_issue(&self) -> Option<Issue> {
        let Payload::Invalid(v) = &self.payload else { return None };
        Some(match self.kind {
            TerminalKind::NO => Issue::new(WarningKey::BadNumber, [self.lemma()]),
            TerminalKind::DT => Issue::new(WarningKey::BadDate, [self.lemma()]),
            _ => Issue::new(WarningKey::BadParameter, ["string", json_type_name(v)]),
        })
    }
}

fn string_list(v: &Value) -> Option<Vec<String>> {
    match v {
        Value::String(s) => Some(vec![s.clone()]),
        Value::Array(a) => a.iter().map(|x| x.as_str().map(str::to_string)).collect(),
        _ => None,
    }
}

fn problem_issue(p: OptionProblem) -> Issue {
    match p {
        OptionProblem::UnknownKey(k) => Issue::new(WarningKey::UnknownKey, [k]),
        OptionProblem::BadType { expected, got, .. } => Issue::new(WarningKey::BadParameter, [expected, got]),
        OptionProblem::BadValue { key, value } => Issue::new(WarningKey::BadValue, [value, key]),
    }
}

fn parse_tag(v: &Value) -> Option<Tag> {
    match v {
        Value::String(name) => Some(Tag { name: name.clone(), attrs: Vec::new() }),
        Value::Object(o) => {
            let name = o.get("name")?.as_str()?.to_string();
            let attrs = match o.get("attrs") {
                None | Some(Value::Null) => Vec::new(),
                Some(a) => attrs_of(a)?,
            };
            Some(Tag { name, attrs })
        }
        _ => None,
    }
}

fn attrs_of(v: &Value) -> Option<Vec<(String, String)>> {
    let o = v.as_object()?;
    o.iter()
        .map(|(k, v)| match v {
            Value::String(s) => Some((k.clone(), s.clone())),
            Value::Number(_) | Value::Bool(_) => Some((k.clone(), v.to_string())),
            _ => None,
        })
        .collect()
}

fn valid_tag_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '-')
}

impl Props {
    /// Sets one dot-notation key. Invalid values are recorded as issues and
    /// otherwise ignored.
    pub fn set(&mut self, key: &str, value: Value) {
        let got = json_type_name(&value);
        let bad_param = |expected: &str| Issue::new(WarningKey::BadParameter, [expected, got]);
        let bad_value = |v: &Value, k: &str| {
            let shown = v.as_str().map_or_else(|| v.to_string(), str::to_string);
            Issue::new(WarningKey::BadValue, [shown, k.to_string()])
        };
        macro_rules! code {
            ($field:expr, $ty:ty) => {
                match &value {
                    Value::String(s) => match <$ty>::parse(s) {
                        Some(x) => $field = Some(x),
                        None => self.issues.push(bad_value(&value, key)),
                    },
                    Value::Null => $field = None,
                    _ => self.issues.push(bad_param("string")),
                }
            };
        }
        match key {
            "n" => code!(self.features.n, Number),
            "g" => code!(self.features.g, Gender),
            "t" => code!(self.features.t, Tense),
            "c" => code!(self.features.c, Case),
            "aux" => code!(self.features.aux, Aux),
            "f" => code!(self.features.f, Degree),
            "pos" => code!(self.pos, Position),
            "pe" => {
                let person = match &value {
                    Value::Number(n) => n.as_i64().and_then(Person::from_int),
                    Value::String(s) => Person::parse(s),
                    Value::Null => {
                        self.features.pe = None;
                        return;
                    }
                    _ => {
                        self.issues.push(bad_param("number"));
                        return;
                    }
                };
                match person {
                    Some(p) => self.features.pe = Some(p),
                    None => self.issues.push(bad_value(&value, key)),
                }
            }
            "pro" => match value.as_bool() {
                Some(b) => self.pro = b,
                None => self.issues.push(bad_param("boolean")),
            },
            "cap" => match value.as_bool() {
                Some(b) => self.cap = Some(b),
                None => self.issues.push(bad_param("boolean")),
            },
            "a" | "b" | "ba" => match string_list(&value) {
                Some(list) => match key {
                    "a" => self.after.extend(list),
                    "b" => self.before.extend(list),
                    _ => self.around.extend(list),
                },
                None => self.issues.push(bad_param("string")),
            },
            "tag" => {
                let tags: Option<Vec<Tag>> = match &value {
                    Value::Array(a) => a.iter().map(parse_tag).collect(),
                    v => parse_tag(v).map(|t| vec![t]),
                };
                match tags {
                    Some(tags) => {
                        for t in tags {
                            if valid_tag_name(&t.name) {
                                self.tags.push(t);
                            } else {
                                self.issues.push(Issue::new(WarningKey::BadTag, [t.name]));
                            }
                        }
                    }
                    None => self.issues.push(bad_param("string")),
                }
            }
            "typ" => match &value {
                Value::Object(o) => {
                    let problems = self.typ.merge_json(o);
                    self.issues.extend(problems.into_iter().map(problem_issue));
                }
                _ => self.issues.push(bad_param("object")),
            },
            "dOpt" => match &value {
                Value::Object(o) => {
                    let problems = self.d_opt.merge_json(o);
                    self.issues.extend(problems.into_iter().map(problem_issue));
                }
                _ => self.issues.push(bad_param("object")),
            },
            "warnings" => {
                for w in value.as_array().into_iter().flatten() {
                    let parts = string_list(w).unwrap_or_default();
                    match parts.split_first().and_then(|(k, args)| Some((WarningKey::parse(k)?, args))) {
                        Some((k, args)) => self.issues.push(Issue::new(k, args.iter().cloned())),
                        None => self.issues.push(Issue::new(WarningKey::UnknownKey, ["warnings"])),
                    }
                }
            }
            _ => self.issues.push(Issue::new(WarningKey::UnknownKey, [key])),
        }
    }

    /// The keys the wire format writes, in a stable order.
    pub fn to_json(&self) -> Map<String, Value> {
        let mut m = Map::new();
        let f = &self.features;
        let mut put = |k: &str, v: Option<&str>| {
            if let Some(v) = v {
                m.insert(k.into(), v.into());
            }
        };
        put("n", f.n.map(Number::code));
        put("g", f.g.map(Gender::code));
        put("pe", f.pe.map(Person::code));
        put("t", f.t.map(Tense::code));
        put("c", f.c.map(Case::code));
        put("aux", f.aux.map(Aux::code));
        put("f", f.f.map(Degree::code));
        put("pos", self.pos.map(Position::code));
        if self.pro {
            m.insert("pro".into(), true.into());
        }
        if let Some(c) = self.cap {
            m.insert("cap".into(), c.into());
        }
        for (k, list) in [("b", &self.before), ("a", &self.after), ("ba", &self.around)] {
            if !list.is_empty() {
                m.insert(k.into(), list.clone().into());
            }
        }
        if !self.tags.is_empty() {
            let tags = self
                .tags
                .iter()
                .map(|t| {
                    let attrs: Map<String, Value> = t.attrs.iter().map(|(k, v)| (k.clone(), v.clone().into())).collect();
                    serde_json::json!({"name": t.name, "attrs": attrs})
                })
                .collect::<Vec<_>>();
            m.insert("tag".into(), tags.into());
        }
        if !self.d_opt.is_empty() {
            m.insert("dOpt".into(), self.d_opt.to_json().into());
        }
        if !self.issues.is_empty() {
            let list = self
                .issues
                .iter()
                .map(|i| std::iter::once(i.key.code().to_string()).chain(i.args.iter().cloned()).collect::<Vec<_>>())
                .collect::<Vec<_>>();
            m.insert("warnings".into(), serde_json::to_value(list).expect("strings serialize"));
        }
        m
    }
}

macro_rules! setters {
    ($($(#[$doc:meta])* $name:ident => $key:literal),+ $(,)?) => {
        $(
            $(#[$doc])*
            pub fn $name(mut self, value: impl Into<Value>) -> Constituent {
                self.props_mut().set($key, value.into());
                self
            }
        )+
    };
}

impl Constituent {
    pub fn props(&self) -> &Props {
        match self {
            Constituent::Terminal(t) => &t.props,
            Constituent::Phrase(p) => &p.props,
            Constituent::Dependent(d) => &d.props,
        }
    }

    pub fn props_mut(&mut self) -> &mut Props {
        match self {
            Constituent::Terminal(t) => &mut t.props,
            Constituent::Phrase(p) => &mut p.props,
            Constituent::Dependent(d) => &mut d.props,
        }
    }

    pub fn lang(&self) -> Lang {
        match self {
            Constituent::Terminal(t) => t.lang,
            Constituent::Phrase(p) => p.lang,
            Constituent::Dependent(d) => d.lang,
        }
    }

    pub fn set_lang(&mut self, lang: Lang) {
        match self {
            Constituent::Terminal(t) => t.lang = lang,
            Constituent::Phrase(p) => p.lang = lang,
            Constituent::Dependent(d) => d.lang = lang,
        }
    }

    /// "N", "NP", "root"...
    pub fn kind_code(&self) -> &'static str {
        match self {
            Constituent::Terminal(t) => t.kind.code(),
            Constituent::Phrase(p) => p.kind.code(),
            Constituent::Dependent(d) => d.rel.code(),
        }
    }

    /// Sets a dot-notation key by name, as the wire format does.
    pub fn set(&mut self, key: &str, value: Value) -> &mut Constituent {
        self.props_mut().set(key, value);
        self
    }

    setters! {
        n => "n",
        g => "g",
        pe => "pe",
        t => "t",
        c => "c",
        aux => "aux",
        /// Degree of an adjective or adverb: "co" or "su".
        f => "f",
        pos => "pos",
        a => "a",
        b => "b",
        ba => "ba",
        typ => "typ",
        d_opt => "dOpt",
        cap => "cap",
    }

    pub fn pro(mut self) -> Constituent {
        self.props_mut().pro = true;
        self
    }

    pub fn tag(self, name: &str) -> Constituent {
        self.tag_with(name, Value::Null)
    }

    /// `attrs` is an object of attribute names to values.
    pub fn tag_with(mut self, name: &str, attrs: Value) -> Constituent {
        self.props_mut().set("tag", serde_json::json!({"name": name, "attrs": attrs}));
        self
    }

    /// Appends a child (phrase) or a dependent (dependency).
    pub fn add(self, child: Constituent) -> Constituent {
        let end = match &self {
            Constituent::Phrase(p) => p.children.len(),
            Constituent::Dependent(d) => d.deps.len(),
            Constituent::Terminal(_) => 0,
        };
        self.add_at(child, end)
    }

    /// Inserts at `index`; an index past the end appends with a warning.
    pub fn add_at(mut self, child: Constituent, index: usize) -> Constituent {
        self.insert(child, index);
        self
    }

    pub fn insert(&mut self, child: Constituent, index: usize) {
        let len = match self {
            Constituent::Phrase(p) => p.children.len(),
            Constituent::Dependent(d) => d.deps.len(),
            Constituent::Terminal(_) => {
                self.props_mut().issues.push(Issue::new(WarningKey::BadConstituent, ["Phrase", "Terminal"]));
                return;
            }
        };
        let at = if index > len {
            self.props_mut().issues.push(Issue::new(WarningKey::BadPosition, [index.to_string(), len.to_string()]));
            len
        } else {
            index
        };
        match self {
            Constituent::Phrase(p) => p.children.insert(at, child),
            Constituent::Dependent(d) => match child {
                Constituent::Dependent(c) => d.deps.insert(at, c),
                other => d.props.issues.push(Issue::new(WarningKey::BadDependent, [other.kind_code()])),
            },
            Constituent::Terminal(_) => unreachable!(),
        }
    }

    /// Terminals in specification order.
    pub fn terminals(&self) -> Vec<&Terminal> {
        fn walk<'a>(c: &'a Constituent, out: &mut Vec<&'a Terminal>) {
            match c {
                Constituent::Terminal(t) => out.push(t),
                Constituent::Phrase(p) => p.children.iter().for_each(|c| walk(c, out)),
                Constituent::Dependent(d) => walk_dep(d, out),
            }
        }
        fn walk_dep<'a>(d: &'a Dependent, out: &mut Vec<&'a Terminal>) {
            out.push(&d.head);
            d.deps.iter().for_each(|c| walk_dep(c, out));
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

impl From<Terminal> for Constituent {
    fn from(t: Terminal) -> Constituent {
        Constituent::Terminal(t)
    }
}

impl From<Phrase> for Constituent {
    fn from(p: Phrase) -> Constituent {
        Constituent::Phrase(p)
    }
}

impl From<Dependent> for Constituent {
    fn from(d: Dependent) -> Constituent {
        Constituent::Dependent(d)
    }
}

impl std::fmt::Display for Constituent {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&notation::expression(self))
    }
}
