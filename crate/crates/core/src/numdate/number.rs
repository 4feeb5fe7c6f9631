use thiserror::Error;

use crate::features::{Gender, Number};
use crate::lang::Lang;

pub const MAX_WORDS: i64 = 1_000_000_000;
/// Decimals shown when `mprecision` is not given.
pub const DEFAULT_MPRECISION: u32 = 2;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{0} cannot be written in letters")]
pub struct OutOfRange(pub i64);

const EN_UNITS: [&str; 20] = [
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight", "nine", "ten", "eleven", "twelve",
    "thirteen", "fourteen", "fifteen", "sixteen", "seventeen", "eighteen", "nineteen",
];
const EN_TENS: [&str; 10] = ["", "", "twenty", "thirty", "forty", "fifty", "sixty", "seventy", "eighty", "ninety"];

const FR_UNITS: [&str; 17] = [
    "zéro", "un", "deux", "trois", "quatre", "cinq", "six", "sept", "huit", "neuf", "dix", "onze", "douze", "treize",
    "quatorze", "quinze", "seize",
];
const FR_TENS: [&str; 7] = ["", "dix", "vingt", "trente", "quarante", "cinquante", "soixante"];

fn en_below_thousand(n: i64) -> String {
    let (h, rest) = (n / 100, n % 100);
    let mut parts = Vec::new();
    if h > 0 {
        parts.push(format!("{} hundred", EN_UNITS[h as usize]));
    }
    if rest > 0 || h == 0 {
        parts.push(if rest < 20 {
            EN_UNITS[rest as usize].to_string()
        } else if rest % 10 == 0 {
            EN_TENS[(rest / 10) as usize].to_string()
        } else {
            format!("{}-{}", EN_TENS[(rest / 10) as usize], EN_UNITS[(rest % 10) as usize])
        });
    }
    parts.join(" ")
}

fn english(n: i64) -> String {
    if n == 0 {
        return "zero".into();
    }
    let mut parts = Vec::new();
    let mut rest = n;
    for (scale, name) in [(1_000_000_000, "billion"), (1_000_000, "million"), (1_000, "thousand")] {
        if rest >= scale {
            parts.push(format!("{} {name}", en_below_thousand(rest / scale)));
            rest %= scale;
        }
    }
    if rest > 0 {
        parts.push(en_below_thousand(rest));
    }
    parts.join(" ")
}

/// 0..=99 as hyphen-joined pieces; `final_` says nothing follows, which keeps
/// the plural s of quatre-vingts.
fn fr_below_hundred(n: i64, final_: bool) -> Vec<String> {
    let n = n as usize;
    if n <= 16 {
        return vec![FR_UNITS[n].into()];
    }
    if n < 20 {
        return vec!["dix".into(), FR_UNITS[n - 10].into()];
    }
    let (t, u) = (n / 10, n % 10);
    match t {
        2..=6 => {
            let mut v = vec![FR_TENS[t].to_string()];
            match u {
                0 => {}
                1 => v.extend(["et".into(), "un".into()]),
                _ => v.push(FR_UNITS[u].into()),
            }
            v
        }
        7 => {
            let mut v = vec!["soixante".to_string()];
            if u == 1 {
                v.push("et".into());
            }
            v.extend(fr_below_hundred(10 + u as i64, final_));
            v
        }
        _ => {
            let mut v = vec!["quatre".to_string()];
            let rest = n - 80;
            if rest == 0 {
                v.push(if final_ { "vingts" } else { "vingt" }.into());
            } else {
                v.push("vingt".into());
                v.extend(fr_below_hundred(rest as i64, final_));
            }
            v
        }
    }
}

fn fr_below_thousand(n: i64, final_: bool) -> Vec<String> {
    let (h, rest) = (n / 100, n % 100);
    let mut v = Vec::new();
    if h > 0 {
        if h > 1 {
            v.push(FR_UNITS[h as usize].to_string());
        }
        v.push(if h > 1 && rest == 0 && final_ { "cents" } else { "cent" }.into());
    }
    if rest > 0 || h == 0 {
        v.extend(fr_below_hundred(rest, final_));
    }
    v
}

fn french(n: i64, gender: Gender) -> String {
    if n == 0 {
        return "zéro".into();
    }
    // Groups separated by spaces; million and milliard are nouns.
    let mut groups: Vec<String> = Vec::new();
    let mut rest = n;
    for (scale, name) in [(1_000_000_000, "milliard"), (1_000_000, "million")] {
        if rest >= scale {
            let k = rest / scale;
            let plural = if k > 1 { "s" } else { "" };
            groups.push(format!("{} {name}{plural}", fr_below_thousand(k, true).join("-")));
            rest %= scale;
        }
    }
    let mut words = Vec::new();
    if rest >= 1000 {
        let k = rest / 1000;
        if k > 1 {
            words.extend(fr_below_thousand(k, false));
        }
        words.push("mille".to_string());
        rest %= 1000;
    }
    if rest > 0 {
        words.extend(fr_below_thousand(rest, true));
    }
    if gender == Gender::F && words.last().is_some_and(|w| w == "un") {
        *words.last_mut().expect("non-empty") = "une".into();
    }
    if !words.is_empty() {
        groups.push(words.join("-"));
    }
    groups.join(" ")
}

/// Cardinal in letters.
pub fn number_to_words(n: i64, lang: Lang, gender: Gender) -> Result<String, OutOfRange> {
    if n.abs() > MAX_WORDS {
        return Err(OutOfRange(n));
    }
    let words = match lang {
        Lang::En => english(n.abs()),
        Lang::Fr => french(n.abs(), gender),
    };
    Ok(match (n < 0, lang) {
        (true, Lang::En) => format!("minus {words}"),
        (true, Lang::Fr) => format!("moins {words}"),
        _ => words,
    })
}

fn english_ordinal_word(w: &str) -> String {
    match w {
        "one" => "first".into(),
        "two" => "second".into(),
        "three" => "third".into(),
        "five" => "fifth".into(),
        "eight" => "eighth".into(),
        "nine" => "ninth".into(),
        "twelve" => "twelfth".into(),
        _ if w.ends_with('y') => format!("{}ieth", &w[..w.len() - 1]),
        _ => format!("{w}th"),
    }
}

fn french_ordinal_word(w: &str) -> String {
    match w {
        "cinq" => "cinquième".into(),
        "neuf" => "neuvième".into(),
        "vingts" | "cents" | "millions" | "milliards" => format!("{}ième", &w[..w.len() - 1]),
        _ if w.ends_with('e') => format!("{}ième", &w[..w.len() - 1]),
        _ => format!("{w}ième"),
    }
}

/// Ordinal in letters: "twenty-first", "vingt-et-unième".
pub fn ordinal_words(n: i64, lang: Lang, gender: Gender) -> Result<String, OutOfRange> {
    if n == 1 && lang == Lang::Fr {
        return Ok(if gender == Gender::F { "première" } else { "premier" }.into());
    }
    let cardinal = number_to_words(n, lang, Gender::M)?;
    let split = cardinal.rfind([' ', '-']).map_or(0, |i| i + 1);
    let (head, last) = cardinal.split_at(split);
    let last = match lang {
        Lang::En => english_ordinal_word(last),
        Lang::Fr => french_ordinal_word(last),
    };
    Ok(format!("{head}{last}"))
}

fn digit_ordinal(n: i64, lang: Lang, gender: Gender) -> String {
    match lang {
        Lang::En => {
            let suffix = match (n.abs() % 100, n.abs() % 10) {
                (11..=13, _) => "th",
                (_, 1) => "st",
                (_, 2) => "nd",
                (_, 3) => "rd",
                _ => "th",
            };
            format!("{n}{suffix}")
        }
        Lang::Fr if n == 1 => if gender == Gender::F { "1re" } else { "1er" }.into(),
        Lang::Fr => format!("{n}e"),
    }
}

/// Rounds half away from zero to `places` decimals.
pub fn round_half_away(x: f64, places: u32) -> f64 {
    let factor = 10f64.powi(places as i32);
    // The nudge absorbs representation error: 2.675 is stored just below.
    let scaled = x.abs() * factor * (1.0 + 4.0 * f64::EPSILON);
    scaled.round().copysign(x) / factor
}

fn group_thousands(int_part: &str, sep: &str) -> String {
    let digits: Vec<char> = int_part.chars().collect();
    let mut out = String::new();
    for (i, c) in digits.iter().enumerate() {
        if i > 0 && (digits.len() - i).is_multiple_of(3) {
            out.push_str(sep);
        }
        out.push(*c);
    }
    out
}

#[derive(Clone, Copy, Debug, Default)]
pub struct NumberFormat {
    pub nat: bool,
    pub ord: bool,
    pub raw: bool,
    /// Maximum decimals; trailing zeros are dropped.
    pub mprecision: u32,
}

/// Digits or words per `fmt`. Words that cannot be produced fall back to
/// digits and return the error alongside.
pub fn format_number(x: f64, fmt: NumberFormat, lang: Lang, gender: Gender) -> (String, Option<OutOfRange>) {
    if fmt.raw {
        return (raw_number(x), None);
    }
    let is_int = x.fract() == 0.0 && x.abs() < 1e15;
    if fmt.nat && is_int {
        let n = x as i64;
        let words = if fmt.ord { ordinal_words(n, lang, gender) } else { number_to_words(n, lang, gender) };
        match words {
            Ok(w) => return (w, None),
            Err(e) => return (format_number(x, NumberFormat { nat: false, ..fmt }, lang, gender).0, Some(e)),
        }
    }
    if fmt.ord && is_int {
        return (digit_ordinal(x as i64, lang, gender), None);
    }
    let rounded = round_half_away(x, fmt.mprecision);
    let text = format!("{:.*}", fmt.mprecision as usize, rounded.abs());
    let (int_part, frac) = match text.split_once('.') {
        Some((i, f)) => (i.to_string(), f.trim_end_matches('0').to_string()),
        None => (text.clone(), String::new()),
    };
    let (thousands, decimal) = match lang {
        Lang::En => (",", "."),
        Lang::Fr => ("\u{a0}", ","),
    };
    let mut out = String::new();
    if rounded < 0.0 {
        out.push('-');
    }
    out.push_str(&group_thousands(&int_part, thousands));
    if !frac.is_empty() {
        out.push_str(decimal);
        out.push_str(&frac);
    }
    (out, None)
}

pub fn raw_number(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}

/// Grammatical number a quantity imposes on its noun.
pub fn number_agreement(x: f64, lang: Lang) -> Number {
    let singular = match lang {
        Lang::En => x.abs() == 1.0,
        Lang::Fr => x.abs() < 2.0,
    };
    if singular {
        Number::S
    } else {
        Number::P
    }
}
