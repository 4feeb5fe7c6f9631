mod common;

use std::time::Instant;

use chrono::NaiveDate;
use rand::rngs::StdRng;
use rand::SeedableRng;
use realizer::features::Gender;
use realizer::lang::Lang;
use realizer::numdate::date::format_date;
use realizer::numdate::{number_to_words, one_of, DisplayOptions};

use common::{morph, numbers};

#[test]
fn inflection_matches_reference_paradigms() {
    let start = Instant::now();
    let s = morph::sweep();
    let elapsed = start.elapsed();
    assert!(s.failures.is_empty(), "{} of {} differ:\n{}", s.failures.len(), s.checked, s.failures.join("\n"));
    assert!(s.checked >= 1500, "only {} assertions", s.checked);
    assert!(elapsed.as_secs_f64() < 2.0, "{elapsed:?}");
}

#[test]
fn number_names_below_a_thousand() {
    for n in 0..1000u32 {
        assert_eq!(number_to_words(n as i64, Lang::En, Gender::M).unwrap(), numbers::english(n), "{n}");
        assert_eq!(number_to_words(n as i64, Lang::Fr, Gender::M).unwrap(), numbers::french(n), "{n}");
    }
}

#[test]
fn number_names_parse_back() {
    for n in 0..10_000u64 {
        for lang in [Lang::En, Lang::Fr] {
            let w = number_to_words(n as i64, lang, Gender::M).unwrap();
            assert_eq!(numbers::parse_words(&w), Some(n), "{w}");
        }
    }
}

#[test]
fn feminine_one() {
    assert_eq!(number_to_words(1, Lang::Fr, Gender::F).unwrap(), "une");
    assert_eq!(number_to_words(41, Lang::Fr, Gender::F).unwrap(), "quarante-et-une");
    assert_eq!(number_to_words(11, Lang::Fr, Gender::F).unwrap(), "onze");
}

#[test]
fn full_dates_field_by_field() {
    let o = DisplayOptions::default();
    let mut day = NaiveDate::from_ymd_opt(1999, 12, 25).unwrap();
    for i in 0..400u32 {
        let (y, m, d) = (chrono::Datelike::year(&day), chrono::Datelike::month(&day), chrono::Datelike::day(&day));
        let t = day.and_hms_opt(i % 24, (i * 7) % 60, (i * 13) % 60).unwrap();
        let (h, min, s) = (i % 24, (i * 7) % 60, (i * 13) % 60);
        assert_eq!(format_date(&t, &o, Lang::En, &t), numbers::full_date("en", y, m, d, h, min, s));
        assert_eq!(format_date(&t, &o, Lang::Fr, &t), numbers::full_date("fr", y, m, d, h, min, s));
        day += chrono::Duration::days(37);
    }
}

#[test]
fn one_of_is_uniform() {
    let k = 5usize;
    let draws = 10_000usize;
    let mut counts = vec![0usize; k];
    let mut rng = StdRng::seed_from_u64(2024);
    for _ in 0..draws {
        counts[one_of((0..k).collect(), &mut rng).unwrap()] += 1;
    }
    let p = 1.0 / k as f64;
    let mean = draws as f64 * p;
    let sigma = (draws as f64 * p * (1.0 - p)).sqrt();
    for c in counts {
        assert!((c as f64 - mean).abs() <= 3.0 * sigma, "{c} vs {mean} ± {}", 3.0 * sigma);
    }
}
