//! Reference oracles and a random tree generator shared by the test targets.
#![allow(dead_code)]

pub mod morph;
pub mod numbers;
pub mod questions;
pub mod trees;

/// Spacing rules every realized string must follow.
pub fn hygiene(s: &str) -> Result<(), String> {
    if s != s.trim() {
        return Err(format!("outer whitespace in {s:?}"));
    }
    if s.contains("  ") {
        return Err(format!("double space in {s:?}"));
    }
    for p in [" ,", " .", " ?"] {
        if s.contains(p) {
            return Err(format!("space before {:?} in {s:?}", &p[1..]));
        }
    }
    Ok(())
}

/// Removes every `<...>` tag.
pub fn strip_tags(s: &str) -> String {
    let mut out = String::new();
    let mut inside = false;
    for c in s.chars() {
        match c {
            '<' => inside = true,
            '>' if inside => inside = false,
            _ if !inside => out.push(c),
            _ => {}
        }
    }
    out
}
