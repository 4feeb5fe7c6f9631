use serde_json::{Map, Value};

use crate::features::code_enum;

code_enum!(Question {
    Yon => "yon",
    Wos => "wos",
    Wod => "wod",
    Wad => "wad",
    Woi => "woi",
    Wai => "wai",
    Whe => "whe",
    Whn => "whn",
    Why => "why",
    How => "how",
    Muc => "muc",
    Tag => "tag",
});

code_enum!(Modality { Poss => "poss", Perm => "perm", Nece => "nece", Obli => "obli", Will => "will" });

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Neg {
    Plain,
    /// Replaces "not" / "pas", e.g. "never" or "jamais".
    Contrast(String),
}

/// Sentence-level flags set with `.typ(...)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TypeOptions {
    pub neg: Option<Neg>,
    pub pas: bool,
    pub int: Option<Question>,
    pub modality: Option<Modality>,
    pub prog: bool,
    pub perf: bool,
    pub exc: bool,
}

/// A problem found while reading an options object.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OptionProblem {
    UnknownKey(String),
    BadType { key: String, expected: &'static str, got: &'static str },
    BadValue { key: String, value: String },
}

pub fn json_type_name(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "boolean",
        Value::Number(_) => "number",
        Value::String(_) => "string",
        Value::Array(_) => "array",
        Value::Object(_) => "object",
    }
}

impl TypeOptions {
    pub fn is_empty(&self) -> bool {
        *self == TypeOptions::default()
    }

    /// Merges the keys of `obj` into `self`; later calls override earlier ones.
    pub fn merge_json(&mut self, obj: &Map<String, Value>) -> Vec<OptionProblem> {
        let mut problems = Vec::new();
        for (key, v) in obj {
            let bad_type = |expected| OptionProblem::BadType { key: key.clone(), expected, got: json_type_name(v) };
            let bad_value = || OptionProblem::BadValue { key: key.clone(), value: v.to_string() };
            match key.as_str() {
                "neg" => match v {
                    Value::Bool(true) => self.neg = Some(Neg::Plain),
                    Value::Bool(false) | Value::Null => self.neg = None,
                    Value::String(s) => self.neg = Some(Neg::Contrast(s.clone())),
                    _ => problems.push(bad_type("boolean")),
                },
                "pas" | "prog" | "perf" | "exc" => {
                    let Some(b) = v.as_bool() else {
                        problems.push(bad_type("boolean"));
                        continue;
                    };
                    *match key.as_str() {
                        "pas" => &mut self.pas,
                        "prog" => &mut self.prog,
                        "perf" => &mut self.perf,
                        _ => &mut self.exc,
                    } = b;
                }
                "int" => match v {
                    Value::Bool(false) | Value::Null => self.int = None,
                    Value::String(s) => match Question::parse(s) {
                        Some(q) => self.int = Some(q),
                        None => problems.push(bad_value()),
                    },
                    _ => problems.push(bad_type("string")),
                },
                "mod" => match v {
                    Value::Bool(false) | Value::Null => self.modality = None,
                    Value::String(s) => match Modality::parse(s) {
                        Some(m) => self.modality = Some(m),
                        None => problems.push(bad_value()),
                    },
                    _ => problems.push(bad_type("string")),
                },
                _ => problems.push(OptionProblem::UnknownKey(key.clone())),
            }
        }
        problems
    }

    pub fn to_json(&self) -> Map<String, Value> {
        let mut m = Map::new();
        match &self.neg {
            Some(Neg::Plain) => {
                m.insert("neg".into(), true.into());
            }
            Some(Neg::Contrast(s)) => {
                m.insert("neg".into(), s.clone().into());
            }
            None => {}
        }
        for (k, b) in [("pas", self.pas), ("prog", self.prog), ("perf", self.perf), ("exc", self.exc)] {
            if b {
                m.insert(k.into(), true.into());
            }
        }
        if let Some(q) = self.int {
            m.insert("int".into(), q.code().into());
        }
        if let Some(md) = self.modality {
            m.insert("mod".into(), md.code().into());
        }
        m
    }
}
