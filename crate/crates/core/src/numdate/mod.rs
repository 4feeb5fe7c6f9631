//! Numbers, dates and random choice.

pub mod choice;
pub mod date;
pub mod number;

use chrono::NaiveDateTime;
use serde_json::{Map, Value};

pub use choice::{one_of, one_of_with};
pub use date::{format_date, parse_instant};
pub use number::{format_number, number_agreement, number_to_words, ordinal_words};

use crate::transform::options::{json_type_name, OptionProblem};

/// Reference point for relative dates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RelativeTo {
    /// The realizer's clock.
    Now,
    At(NaiveDateTime),
}

/// `.dOpt(...)` for NO and DT terminals. Unset fields keep their defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DisplayOptions {
    pub nat: Option<bool>,
    pub ord: Option<bool>,
    pub mprecision: Option<u32>,
    pub raw: Option<bool>,
    pub year: Option<bool>,
    pub month: Option<bool>,
    pub date: Option<bool>,
    pub day: Option<bool>,
    pub hour: Option<bool>,
    pub minute: Option<bool>,
    pub second: Option<bool>,
    pub rtime: Option<RelativeTo>,
    pub det: Option<bool>,
}

const FLAGS: &[&str] = &["nat", "ord", "raw", "year", "month", "date", "day", "hour", "minute", "second", "det"];

impl DisplayOptions {
    pub fn is_empty(&self) -> bool {
        *self == DisplayOptions::default()
    }

    fn flag_mut(&mut self, key: &str) -> &mut Option<bool> {
        match key {
            "nat" => &mut self.nat,
            "ord" => &mut self.ord,
            "raw" => &mut self.raw,
            "year" => &mut self.year,
            "month" => &mut self.month,
            "date" => &mut self.date,
            "day" => &mut self.day,
            "hour" => &mut self.hour,
            "minute" => &mut self.minute,
            "second" => &mut self.second,
            "det" => &mut self.det,
            _ => unreachable!("not a flag: {key}"),
        }
    }

    fn flags(&self) -> [(&'static str, Option<bool>); 11] {
        [
            ("nat", self.nat),
            ("ord", self.ord),
            ("raw", self.raw),
            ("year", self.year),
            ("month", self.month),
            ("date", self.date),
            ("day", self.day),
            ("hour", self.hour),
            ("minute", self.minute),
            ("second", self.second),
            ("det", self.det),
        ]
    }

    pub fn merge_json(&mut self, obj: &Map<String, Value>) -> Vec<OptionProblem> {
        let mut problems = Vec::new();
        for (key, v) in obj {
            let bad_type = |expected| OptionProblem::BadType { key: key.clone(), expected, got: json_type_name(v) };
            match key.as_str() {
                k if FLAGS.contains(&k) => match v.as_bool() {
                    Some(b) => *self.flag_mut(k) = Some(b),
                    None => problems.push(bad_type("boolean")),
                },
                "mprecision" => match v.as_u64().and_then(|p| u32::try_from(p).ok()) {
                    Some(p) if p <= 12 => self.mprecision = Some(p),
                    Some(_) => problems.push(OptionProblem::BadValue { key: key.clone(), value: v.to_string() }),
                    None => problems.push(bad_type("number")),
                },
                "rtime" => match v {
                    Value::Bool(true) => self.rtime = Some(RelativeTo::Now),
                    Value::Bool(false) | Value::Null => self.rtime = None,
                    Value::String(s) => match parse_instant(s) {
                        Some(t) => self.rtime = Some(RelativeTo::At(t)),
                        None => problems.push(OptionProblem::BadValue { key: key.clone(), value: s.clone() }),
                    },
                    _ => problems.push(bad_type("string")),
                },
                _ => problems.push(OptionProblem::UnknownKey(key.clone())),
            }
        }
        if self.nat == Some(true) && self.raw == Some(true) {
            self.raw = None;
            problems.push(OptionProblem::BadValue { key: "raw".into(), value: "true".into() });
        }
        problems
    }

    pub fn to_json(&self) -> Map<String, Value> {
        let mut m = Map::new();
        for (k, b) in self.flags() {
            if let Some(b) = b {
                m.insert(k.into(), b.into());
            }
        }
        if let Some(p) = self.mprecision {
            m.insert("mprecision".into(), p.into());
        }
        match &self.rtime {
            Some(RelativeTo::Now) => {
                m.insert("rtime".into(), true.into());
            }
            Some(RelativeTo::At(t)) => {
                m.insert("rtime".into(), t.format("%Y-%m-%dT%H:%M:%S").to_string().into());
            }
            None => {}
        }
        m
    }
}
