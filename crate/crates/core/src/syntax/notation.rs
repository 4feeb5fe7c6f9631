//! The constructor notation, e.g. `NP(D("a"),N("apple").n("p"))`.

use serde_json::Value;

use super::{Constituent, Dependent, Payload, Props, Terminal};

fn lemma_literal(t: &Terminal) -> String {
    match &t.payload {
        Payload::Number(x) => crate::numdate::number::raw_number(*x),
        Payload::Invalid(v) => v.to_string(),
        other => Value::String(other.text()).to_string(),
    }
}

fn props_suffix(p: &Props) -> String {
    let mut out = String::new();
    let json = p.to_json();
    for (k, v) in &json {
        match (k.as_str(), v) {
            ("pro", _) => out.push_str(".pro()"),
            ("tag", Value::Array(tags)) => {
                for t in tags {
                    let name = t["name"].to_string();
                    match t.get("attrs") {
                        Some(Value::Object(a)) if !a.is_empty() => out.push_str(&format!(".tag({name},{})", t["attrs"])),
                        _ => out.push_str(&format!(".tag({name})")),
                    }
                }
            }
            ("a" | "b" | "ba", Value::Array(list)) => {
                for s in list {
                    out.push_str(&format!(".{k}({s})"));
                }
            }
            ("warnings", _) => {}
            _ => out.push_str(&format!(".{k}({v})")),
        }
    }
    if !p.typ.is_empty() {
        out.push_str(&format!(".typ({})", Value::Object(p.typ.to_json())));
    }
    out
}

fn terminal(t: &Terminal) -> String {
    format!("{}({}){}", t.kind.code(), lemma_literal(t), props_suffix(&t.props))
}

fn dependent(d: &Dependent) -> String {
    let mut args = vec![terminal(&d.head)];
    args.extend(d.deps.iter().map(dependent));
    format!("{}({}){}", d.rel.code(), args.join(","), props_suffix(&d.props))
}

pub fn expression(c: &Constituent) -> String {
    match c {
        Constituent::Terminal(t) => terminal(t),
        Constituent::Phrase(p) => {
            let args: Vec<String> = p.children.iter().map(expression).collect();
            format!("{}({}){}", p.kind.code(), args.join(","), props_suffix(&p.props))
        }
        Constituent::Dependent(d) => dependent(d),
    }
}
