use chrono::{DateTime, Datelike, NaiveDate, NaiveDateTime, Timelike};

use super::{DisplayOptions, RelativeTo};
use crate::lang::Lang;

/// Relative words are used within this many days of the reference.
pub const RELATIVE_WINDOW: i64 = 7;

pub const EN_WEEKDAYS: [&str; 7] = ["Monday", "Tuesday", "Wednesday", "Thursday", "Friday", "Saturday", "Sunday"];
pub const FR_WEEKDAYS: [&str; 7] = ["lundi", "mardi", "mercredi", "jeudi", "vendredi", "samedi", "dimanche"];
pub const EN_MONTHS: [&str; 12] = [
    "January", "February", "March", "April", "May", "June", "July", "August", "September", "October", "November",
    "December",
];
pub const FR_MONTHS: [&str; 12] = [
    "janvier", "février", "mars", "avril", "mai", "juin", "juillet", "août", "septembre", "octobre", "novembre",
    "décembre",
];

/// ISO-8601 date, date-time, or date-time with offset (the wall-clock time is kept).
pub fn parse_instant(s: &str) -> Option<NaiveDateTime> {
    let s = s.trim();
    if let Ok(t) = DateTime::parse_from_rfc3339(s) {
        return Some(t.naive_local());
    }
    for fmt in ["%Y-%m-%dT%H:%M:%S%.f", "%Y-%m-%dT%H:%M:%S", "%Y-%m-%dT%H:%M", "%Y-%m-%d %H:%M:%S"] {
        if let Ok(t) = NaiveDateTime::parse_from_str(s, fmt) {
            return Some(t);
        }
    }
    NaiveDate::parse_from_str(s, "%Y-%m-%d").ok().and_then(|d| d.and_hms_opt(0, 0, 0))
}

struct Fields {
    year: bool,
    month: bool,
    date: bool,
    day: bool,
    hour: bool,
    minute: bool,
    second: bool,
}

impl Fields {
    fn of(o: &DisplayOptions) -> Fields {
        let on = |f: Option<bool>| f.unwrap_or(true);
        Fields {
            year: on(o.year),
            month: on(o.month),
            date: on(o.date),
            day: on(o.day),
            hour: on(o.hour),
            minute: on(o.minute),
            second: on(o.second),
        }
    }

    fn any_time(&self) -> bool {
        self.hour || self.minute || self.second
    }
}

fn weekday(t: &NaiveDateTime, lang: Lang) -> &'static str {
    let i = t.weekday().num_days_from_monday() as usize;
    match lang {
        Lang::En => EN_WEEKDAYS[i],
        Lang::Fr => FR_WEEKDAYS[i],
    }
}

fn month_name(t: &NaiveDateTime, lang: Lang) -> &'static str {
    let i = t.month0() as usize;
    match lang {
        Lang::En => EN_MONTHS[i],
        Lang::Fr => FR_MONTHS[i],
    }
}

fn time_part(t: &NaiveDateTime, f: &Fields, nat: bool, lang: Lang) -> String {
    if lang == Lang::Fr && nat {
        let mut parts = Vec::new();
        if f.hour {
            parts.push(format!("{} h", t.hour()));
        }
        if f.minute {
            parts.push(format!("{} min", t.minute()));
        }
        if f.second {
            parts.push(format!("{} s", t.second()));
        }
        return parts.join(" ");
    }
    let mut parts = Vec::new();
    if f.hour {
        parts.push(t.hour().to_string());
    }
    if f.minute {
        parts.push(format!("{:02}", t.minute()));
    }
    if f.second {
        parts.push(format!("{:02}", t.second()));
    }
    if parts.len() == 1 && f.hour {
        parts.push("00".into());
    }
    parts.join(":")
}

fn date_part(t: &NaiveDateTime, f: &Fields, nat: bool, det: bool, lang: Lang) -> String {
    if !nat {
        let mut parts = Vec::new();
        let (d, m) = (format!("{:02}", t.day()), format!("{:02}", t.month()));
        match lang {
            Lang::En => {
                if f.month {
                    parts.push(m);
                }
                if f.date {
                    parts.push(d);
                }
            }
            Lang::Fr => {
                if f.date {
                    parts.push(d);
                }
                if f.month {
                    parts.push(m);
                }
            }
        }
        if f.year {
            parts.push(t.year().to_string());
        }
        return parts.join("/");
    }
    let mut out = String::new();
    match lang {
        Lang::En => {
            let mut md = Vec::new();
            if f.month {
                md.push(month_name(t, lang).to_string());
            }
            if f.date {
                md.push(t.day().to_string());
            }
            let mut md = md.join(" ");
            if f.year {
                md = if md.is_empty() { t.year().to_string() } else { format!("{md}, {}", t.year()) };
            }
            if f.day {
                out.push_str(weekday(t, lang));
                if !md.is_empty() {
                    out.push_str(", ");
                }
            }
            out.push_str(&md);
            if det && (f.day || f.date) {
                out = format!("on {out}");
            }
        }
        Lang::Fr => {
            let mut parts = Vec::new();
            if f.day {
                parts.push(weekday(t, lang).to_string());
            }
            if f.date {
                parts.push(if t.day() == 1 { "1er".into() } else { t.day().to_string() });
            }
            if f.month {
                parts.push(month_name(t, lang).into());
            }
            if f.year {
                parts.push(t.year().to_string());
            }
            if det && (f.day || f.date) {
                parts.insert(0, "le".into());
            }
            out = parts.join(" ");
        }
    }
    out
}

fn relative_day(t: &NaiveDateTime, reference: &NaiveDateTime, lang: Lang) -> Option<String> {
    let diff = (t.date() - reference.date()).num_days();
    let wd = weekday(t, lang);
    let words = match (lang, diff) {
        (Lang::En, 0) => "today".to_string(),
        (Lang::En, 1) => "tomorrow".into(),
        (Lang::En, -1) => "yesterday".into(),
        (Lang::En, d) if (2..=RELATIVE_WINDOW).contains(&d) => format!("next {wd}"),
        (Lang::En, d) if (-RELATIVE_WINDOW..=-2).contains(&d) => format!("last {wd}"),
        (Lang::Fr, 0) => "aujourd'hui".into(),
        (Lang::Fr, 1) => "demain".into(),
        (Lang::Fr, -1) => "hier".into(),
        (Lang::Fr, d) if (2..=RELATIVE_WINDOW).contains(&d) => format!("{wd} prochain"),
        (Lang::Fr, d) if (-RELATIVE_WINDOW..=-2).contains(&d) => format!("{wd} dernier"),
        _ => return None,
    };
    Some(words)
}

/// Wording of `t`; `now` is used when relative to the clock.
pub fn format_date(t: &NaiveDateTime, opts: &DisplayOptions, lang: Lang, now: &NaiveDateTime) -> String {
    let nat = opts.nat.unwrap_or(true);
    let det = opts.det.unwrap_or(true);
    let at = if lang == Lang::En { "at" } else { "à" };
    if let Some(rel) = &opts.rtime {
        let reference = match rel {
            RelativeTo::Now => now,
            RelativeTo::At(r) => r,
        };
        if let Some(day) = relative_day(t, reference, lang) {
            let time_asked = Fields {
                year: false,
                month: false,
                date: false,
                day: false,
                hour: opts.hour == Some(true),
                minute: opts.minute == Some(true),
                second: opts.second == Some(true),
            };
            if time_asked.any_time() {
                return format!("{day} {at} {}", time_part(t, &time_asked, nat, lang));
            }
            return day;
        }
    }
    let f = Fields::of(opts);
    let date = date_part(t, &f, nat, det, lang);
    let time = if f.any_time() { time_part(t, &f, nat, lang) } else { String::new() };
    match (date.is_empty(), time.is_empty()) {
        (false, false) if nat => format!("{date} {at} {time}"),
        (false, false) => format!("{date} {time}"),
        (false, true) => date,
        _ => time,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> NaiveDateTime {
        parse_instant(s).unwrap()
    }

    #[test]
    fn absolute() {
        let d = t("2026-10-14T10:30:05");
        let o = DisplayOptions::default();
        assert_eq!(format_date(&d, &o, Lang::En, &d), "on Wednesday, October 14, 2026 at 10:30:05");
        assert_eq!(format_date(&d, &o, Lang::Fr, &d), "le mercredi 14 octobre 2026 à 10 h 30 min 5 s");
        let only_day = DisplayOptions {
            year: Some(false),
            month: Some(false),
            date: Some(false),
            hour: Some(false),
            minute: Some(false),
            second: Some(false),
            det: Some(false),
            ..Default::default()
        };
        assert_eq!(format_date(&d, &only_day, Lang::En, &d), "Wednesday");
        let numeric = DisplayOptions { nat: Some(false), ..Default::default() };
        assert_eq!(format_date(&d, &numeric, Lang::Fr, &d), "14/10/2026 10:30:05");
    }

    #[test]
    fn relative() {
        let now = t("2026-10-14T09:00:00");
        let o = DisplayOptions { rtime: Some(RelativeTo::Now), ..Default::default() };
        assert_eq!(format_date(&t("2026-10-15"), &o, Lang::En, &now), "tomorrow");
        assert_eq!(format_date(&t("2026-10-15"), &o, Lang::Fr, &now), "demain");
        assert_eq!(format_date(&t("2026-10-12"), &o, Lang::En, &now), "last Monday");
        assert_eq!(format_date(&t("2026-10-19"), &o, Lang::Fr, &now), "lundi prochain");
        assert!(format_date(&t("2026-11-30"), &o, Lang::En, &now).contains("November"));
    }

    #[test]
    fn parses_offsets() {
        assert_eq!(t("2026-10-14T10:30:00+02:00"), t("2026-10-14T10:30:00"));
        assert_eq!(t("2026-10-14"), t("2026-10-14T00:00:00"));
    }
}
