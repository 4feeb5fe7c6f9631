//! The JSON wire form of a specification.
//!
//! ```json
//! {"phrase":"NP","elements":[{"terminal":"D","lemma":"a"},{"terminal":"N","lemma":"apple"}],
//!  "props":{"n":"p"},"lang":"en"}
//! ```
//!
//! Dependents are `{"dependent":"root","terminal":{...},"dependents":[...]}`.
//! A node `{"oneOf":[...]}` stands for one of its alternatives, drawn from the
//! parser's random source.

use rand::rngs::StdRng;
use rand::{Rng, RngCore, SeedableRng};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::io::warnings::{Issue, WarningKey};
use crate::lang::{with_lang, Lang};
use crate::syntax::dsl::{dependent, Q};
use crate::syntax::{Constituent, Dependent, Phrase, PhraseKind, Props, Relation, Terminal, TerminalKind};

#[derive(Debug, Error)]
pub enum SpecError {
    #[error("invalid JSON at line {line}, column {column}: {msg}")]
    Json { line: usize, column: usize, msg: String },
    #[error("{path}: {msg}")]
    Schema { path: String, msg: String },
}

struct Reader<'r> {
    rng: &'r mut dyn RngCore,
    lang: Lang,
}

fn schema(path: &str, msg: impl Into<String>) -> SpecError {
    SpecError::Schema { path: path.to_string(), msg: msg.into() }
}

fn node_lang(obj: &Map<String, Value>, path: &str, default: Lang) -> Result<Lang, SpecError> {
    match obj.get("lang") {
        None | Some(Value::Null) => Ok(default),
        Some(Value::String(s)) => Lang::parse(s).ok_or_else(|| schema(&format!("{path}.lang"), format!("unknown language {s:?}"))),
        Some(_) => Err(schema(&format!("{path}.lang"), "expected a string")),
    }
}

const NODE_KEYS: &[&str] =
    &["phrase", "terminal", "dependent", "elements", "dependents", "lemma", "props", "typ", "lang", "oneOf"];

impl Reader<'_> {
    fn node(&mut self, v: &Value, path: &str) -> Result<Constituent, SpecError> {
        let obj = v.as_object().ok_or_else(|| schema(path, "expected an object"))?;
        let lang = node_lang(obj, path, self.lang)?;
        let saved = self.lang;
        self.lang = lang;
        let out = with_lang(lang, || self.node_in_lang(obj, path));
        self.lang = saved;
        let mut node = out?;
        for k in obj.keys().filter(|k| !NODE_KEYS.contains(&k.as_str())) {
            node.props_mut().issues.push(Issue::new(WarningKey::UnknownKey, [k.as_str()]));
        }
        Ok(node)
    }

    fn node_in_lang(&mut self, obj: &Map<String, Value>, path: &str) -> Result<Constituent, SpecError> {
        let kinds = ["phrase", "terminal", "dependent", "oneOf"].iter().filter(|k| obj.contains_key(**k)).count();
        if kinds != 1 && !(obj.contains_key("dependent") && obj.contains_key("terminal") && kinds == 2) {
            return Err(schema(path, "a node needs exactly one of \"phrase\", \"terminal\", \"dependent\", \"oneOf\""));
        }
        let mut node = if let Some(alts) = obj.get("oneOf") {
            let alts = alts.as_array().ok_or_else(|| schema(&format!("{path}.oneOf"), "expected an array"))?;
            if alts.is_empty() {
                let mut q = Q("");
                q.props_mut().issues.push(Issue::new(WarningKey::EmptyList, Vec::<String>::new()));
                return Ok(q);
            }
            let i = self.rng.gen_range(0..alts.len());
            return self.node(&alts[i], &format!("{path}.oneOf[{i}]"));
        } else if let Some(kind) = obj.get("dependent") {
            self.dependent(obj, kind, path)?
        } else if let Some(kind) = obj.get("phrase") {
            self.phrase(obj, kind, path)?
        } else {
            Constituent::Terminal(self.terminal(obj, path)?)
        };
        if let Some(props) = obj.get("props") {
            self.props(&mut node, props, &format!("{path}.props"))?;
        }
        if let Some(typ) = obj.get("typ") {
            node.props_mut().set("typ", typ.clone());
        }
        Ok(node)
    }

    fn terminal(&mut self, obj: &Map<String, Value>, path: &str) -> Result<Terminal, SpecError> {
        let kind = obj.get("terminal").and_then(Value::as_str).ok_or_else(|| schema(path, "\"terminal\" must be a string"))?;
        let kind = TerminalKind::parse(kind).ok_or_else(|| schema(&format!("{path}.terminal"), format!("unknown terminal {kind:?}")))?;
        let lemma = obj.get("lemma").cloned().ok_or_else(|| schema(path, "missing \"lemma\""))?;
        Ok(Terminal::new(kind, lemma))
    }

    fn phrase(&mut self, obj: &Map<String, Value>, kind: &Value, path: &str) -> Result<Constituent, SpecError> {
        let code = kind.as_str().ok_or_else(|| schema(&format!("{path}.phrase"), "expected a string"))?;
        let kind = PhraseKind::parse(code).ok_or_else(|| schema(&format!("{path}.phrase"), format!("unknown phrase {code:?}")))?;
        let mut children = Vec::new();
        match obj.get("elements") {
            None | Some(Value::Null) => {}
            Some(Value::Array(items)) => {
                for (i, e) in items.iter().enumerate() {
                    children.push(self.node(e, &format!("{path}.elements[{i}]"))?);
                }
            }
            Some(_) => return Err(schema(&format!("{path}.elements"), "expected an array")),
        }
        Ok(Constituent::Phrase(Phrase { kind, children, lang: self.lang, props: Props::default() }))
    }

    fn dependent(&mut self, obj: &Map<String, Value>, kind: &Value, path: &str) -> Result<Constituent, SpecError> {
        let code = kind.as_str().ok_or_else(|| schema(&format!("{path}.dependent"), "expected a string"))?;
        let rel = Relation::parse(code).ok_or_else(|| schema(&format!("{path}.dependent"), format!("unknown relation {code:?}")))?;
        let head_path = format!("{path}.terminal");
        let head = obj.get("terminal").ok_or_else(|| schema(path, "missing \"terminal\""))?;
        let head = self.node(head, &head_path)?;
        if !matches!(head, Constituent::Terminal(_)) {
            return Err(schema(&head_path, "the head of a dependent must be a terminal"));
        }
        let mut deps = Vec::new();
        match obj.get("dependents") {
            None | Some(Value::Null) => {}
            Some(Value::Array(items)) => {
                for (i, e) in items.iter().enumerate() {
                    let p = format!("{path}.dependents[{i}]");
                    let d = self.node(e, &p)?;
                    if !matches!(d, Constituent::Dependent(_)) {
                        return Err(schema(&p, "expected a dependent"));
                    }
                    deps.push(d);
                }
            }
            Some(_) => return Err(schema(&format!("{path}.dependents"), "expected an array")),
        }
        Ok(dependent(rel, head, deps))
    }

    fn props(&mut self, node: &mut Constituent, props: &Value, path: &str) -> Result<(), SpecError> {
        let props = props.as_object().ok_or_else(|| schema(path, "expected an object"))?;
        for (k, v) in props {
            if k == "add" {
                let items = v.as_array().ok_or_else(|| schema(&format!("{path}.add"), "expected an array"))?;
                for (i, item) in items.iter().enumerate() {
                    let p = format!("{path}.add[{i}]");
                    let (child, pos) = match item.get("node") {
                        Some(n) => (self.node(n, &format!("{p}.node"))?, item.get("pos").and_then(Value::as_u64)),
                        None => (self.node(item, &p)?, None),
                    };
                    let end = match node {
                        Constituent::Phrase(ph) => ph.children.len(),
                        Constituent::Dependent(d) => d.deps.len(),
                        Constituent::Terminal(_) => 0,
                    };
                    node.insert(child, pos.map_or(end, |x| x as usize));
                }
            } else {
                node.props_mut().set(k, v.clone());
            }
        }
        Ok(())
    }
}

fn json_error(e: serde_json::Error) -> SpecError {
    SpecError::Json { line: e.line(), column: e.column(), msg: e.to_string() }
}

/// Reads a specification; `oneOf` choices come from `rng`.
pub fn parse_spec_with(text: &str, rng: &mut dyn RngCore) -> Result<Constituent, SpecError> {
    let v: Value = serde_json::from_str(text).map_err(json_error)?;
    from_value_with(&v, rng)
}

/// Reads a specification; `oneOf` choices come from a fixed seed.
pub fn parse_spec(text: &str) -> Result<Constituent, SpecError> {
    parse_spec_with(text, &mut StdRng::seed_from_u64(0))
}

pub fn from_value_with(v: &Value, rng: &mut dyn RngCore) -> Result<Constituent, SpecError> {
    let mut r = Reader { rng, lang: crate::lang::current_lang() };
    r.node(v, "$")
}

pub fn from_value(v: &Value) -> Result<Constituent, SpecError> {
    from_value_with(v, &mut StdRng::seed_from_u64(0))
}

fn terminal_value(t: &Terminal) -> Value {
    let mut m = Map::new();
    m.insert("terminal".into(), t.kind.code().into());
    let lemma = match &t.payload {
        crate::syntax::Payload::Number(x) => serde_json::Number::from_f64(*x).map_or(Value::Null, Value::Number),
        crate::syntax::Payload::Invalid(v) => v.clone(),
        p => Value::String(p.text()),
    };
    m.insert("lemma".into(), lemma);
    finish(m, &t.props, t.lang)
}

fn finish(mut m: Map<String, Value>, props: &Props, lang: Lang) -> Value {
    let p = props.to_json();
    if !p.is_empty() {
        m.insert("props".into(), p.into());
    }
    if !props.typ.is_empty() {
        m.insert("typ".into(), props.typ.to_json().into());
    }
    m.insert("lang".into(), lang.code().into());
    Value::Object(m)
}

fn dependent_value(d: &Dependent) -> Value {
    let mut m = Map::new();
    m.insert("dependent".into(), d.rel.code().into());
    m.insert("terminal".into(), terminal_value(&d.head));
    if !d.deps.is_empty() {
        m.insert("dependents".into(), d.deps.iter().map(dependent_value).collect::<Vec<_>>().into());
    }
    finish(m, &d.props, d.lang)
}

pub fn to_value(c: &Constituent) -> Value {
    match c {
        Constituent::Terminal(t) => terminal_value(t),
        Constituent::Phrase(p) => {
            let mut m = Map::new();
            m.insert("phrase".into(), p.kind.code().into());
            m.insert("elements".into(), p.children.iter().map(to_value).collect::<Vec<_>>().into());
            finish(m, &p.props, p.lang)
        }
        Constituent::Dependent(d) => dependent_value(d),
    }
}

pub fn serialize_spec(c: &Constituent) -> String {
    to_value(c).to_string()
}
