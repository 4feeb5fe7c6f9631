//! Acceptance criteria, one line each. Exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::SeedableRng;
use realizer::features::Gender;
use realizer::io::batch::variations;
use realizer::io::json::{parse_spec, serialize_spec};
use realizer::io::lemmatize::{forms_of, Lemmatizer};
use realizer::lexicon::builtin;
use realizer::numdate::number_to_words;
use realizer::prelude::*;

use common::trees::{svo, Pools, Shape};

const GOLDEN_BUDGET: Duration = Duration::from_secs(1);
const MIN_VARIATIONS: usize = 1000;
const MIN_MORPH_ASSERTIONS: usize = 1500;
const MORPH_BUDGET: Duration = Duration::from_secs(2);
const MEDIAN_LATENCY: Duration = Duration::from_millis(5);
const RANDOM_TREES: u64 = 1000;
const QUESTION_TREES: u64 = 50;

type Outcome = Result<String, String>;

fn fr<T>(f: impl FnOnce() -> T) -> T {
    with_lang(Lang::Fr, f)
}

fn fig1() -> Constituent {
    S([Pro("him").c("nom"), VP([V("eat"), NP([D("a"), N("apple").n("p")]).tag("em")])])
}

fn plain_fig1() -> Constituent {
    S([Pro("him").c("nom"), VP([V("eat"), NP([D("a"), N("apple").n("p")])])])
}

fn apple_sentence() -> Constituent {
    S([Pro("him").c("nom"), VP([V("eat"), NP([D("a"), N("apple")])])])
}

fn donner(object_pro: bool, pp: bool, pp_pro: bool) -> Constituent {
    fr(|| {
        let mut object = NP([D("un"), N("pomme")]);
        if object_pro {
            object = object.pro();
        }
        let mut vp = VP([V("donner").t("pc"), object]);
        if pp {
            let mut p = PP([P("à"), NP([D("le"), N("fille")])]);
            if pp_pro {
                p = p.pro();
            }
            vp = vp.add(p);
        }
        S([Pro("lui").c("nom"), vp])
    })
}

fn goldens() -> Vec<(Constituent, &'static str)> {
    let fruit = |n: &str| NP([D("the"), N(n)]);
    let apple = NP([D("a"), N("apple")]);
    let red = S([fruit("apple"), VP([V("be"), A("red")])]);
    let mut clone = red.clone();
    clone.props_mut().typ.neg = Some(realizer::transform::options::Neg::Plain);
    let link = N("apple").tag_with("a", json!({"href": "https://en.wikipedia.org/wiki/Apple"}));
    vec![
        (fig1(), "He eats <em>apples</em>."),
        (
            root(V("eat"), [subj(Pro("him").c("nom"), []), comp(N("apple").n("p"), [det(D("a"), [])]).tag("em")]),
            "He eats <em>apples</em>.",
        ),
        (fig1().t("ps"), "He ate <em>apples</em>."),
        (plain_fig1().typ(json!({"neg": true})), "He does not eat apples."),
        (plain_fig1().typ(json!({"neg": true, "pas": true})), "Apples are not eaten by him."),
        (apple_sentence().typ(json!({"int": "wos"})), "Who eats an apple?"),
        (apple_sentence().typ(json!({"int": "wad"})), "What does he eat?"),
        (donner(false, false, false), "Il a donné une pomme."),
        (donner(true, false, false), "Il l'a donnée."),
        (donner(true, false, false).typ(json!({"neg": true})), "Il ne l'a pas donnée."),
        (donner(true, true, false).typ(json!({"neg": true})), "Il ne l'a pas donnée à la fille."),
        (donner(true, true, true).typ(json!({"neg": true})), "Il ne la lui a pas donnée."),
        (donner(true, true, true).typ(json!({"neg": true, "pas": true})), "Elle ne lui a pas été donnée par lui."),
        (
            S([Pro("him").c("nom"), VP([V("eat"), NP([D("a"), N("apple").n("p")]).add(A("red"))])])
                .add_at(Adv("now").a(","), 0),
            "Now, he eats red apples.",
        ),
        (
            S([CP([C("and"), fruit("apple"), fruit("orange"), fruit("banana")]), VP([V("be"), A("good")])]),
            "The apple, the orange and the banana are good.",
        ),
        (S([CP([C("and"), fruit("apple")]), VP([V("be"), A("good")])]), "The apple is good."),
        (
            S([Pro("him").c("nom"), CP([C("and"), VP([V("eat"), apple.clone()]), VP([V("love"), apple.pro()])])]),
            "He eats an apple and loves it.",
        ),
        (clone, "The apple is not red."),
        (red, "The apple is red."),
        (
            S([Pro("him").c("nom"), VP([V("eat"), NP([D("a"), link])])]),
            "He eats an <a href=\"https://en.wikipedia.org/wiki/Apple\">apple</a>.",
        ),
        (
            S([Pro("I").pe(1), VP([V("say"), Q("hello"), PP([P("to"), fr(|| NP([D("le"), N("monde")]).tag("b"))])])]),
            "I say hello to <b>le monde</b>.",
        ),
        (NP([NO(1).d_opt(json!({"nat": true})), N("plane")]), "one plane"),
        (NP([NO(3).d_opt(json!({"nat": true})), N("plane")]), "three planes"),
    ]
}

fn golden_suite() -> Outcome {
    let start = Instant::now();
    let r = Realizer::new();
    let mut wrong = Vec::new();
    let cases = goldens();
    for (c, want) in &cases {
        let got = r.realize(c).text;
        if got != *want {
            wrong.push(format!("{got:?} != {want:?}"));
        }
    }
    let warnings = [
        (r.realize(&N(23)), "The parameter should be string, not number."),
        (r.realize(&fr(|| N(23))), "Le paramètre devrait être string, non number."),
    ];
    for (out, want) in &warnings {
        if !out.text.contains("[[23]]") || out.warnings.first().map(|w| w.message.as_str()) != Some(*want) {
            wrong.push(format!("warning {:?} != {want:?}", out.warnings.first().map(|w| &w.message)));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > GOLDEN_BUDGET {
        wrong.push(format!("took {elapsed:?}"));
    }
    let total = cases.len() + warnings.len();
    if wrong.is_empty() {
        Ok(format!("{total} sentences exact in {elapsed:.2?}"))
    } else {
        Err(wrong.join("; "))
    }
}

fn variation_count() -> Outcome {
    let r = Realizer::new();
    let all = variations(&r, &fig1());
    let mut distinct = BTreeSet::new();
    for v in &all {
        common::hygiene(&v.realization.text)?;
        if v.realization.warnings.is_empty() {
            distinct.insert(v.realization.text.clone());
        }
    }
    let msg = format!("{} distinct warning-free strings from {} combinations", distinct.len(), all.len());
    if distinct.len() >= MIN_VARIATIONS {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn morphology_oracles() -> Outcome {
    let start = Instant::now();
    for n in 0..1000u32 {
        for (lang, oracle) in [(Lang::En, common::numbers::english(n)), (Lang::Fr, common::numbers::french(n))] {
            let got = number_to_words(n as i64, lang, Gender::M).map_err(|e| e.to_string())?;
            if got != oracle {
                return Err(format!("{n} {lang:?}: {got:?} != {oracle:?}"));
            }
        }
    }
    let mut forms = 0;
    for lang in [Lang::En, Lang::Fr] {
        let lex = builtin(lang);
        let lem = Lemmatizer::new(lex);
        for entry in lex.entries() {
            for (_, form) in forms_of(lex, entry) {
                forms += 1;
                if !lem.lemmatize(&form).iter().any(|c| c.lemma == entry.lemma && c.pos == entry.pos) {
                    return Err(format!("{form:?} does not lead back to {} {}", entry.pos, entry.lemma));
                }
            }
        }
    }
    Ok(format!("numbers 0-999 match in both languages; {forms} generated forms lemmatize back; {:.2?}", start.elapsed()))
}

fn unit_scale() -> Outcome {
    let start = Instant::now();
    let sweep = common::morph::sweep();
    let elapsed = start.elapsed();
    if let Some(f) = sweep.failures.first() {
        return Err(format!("{} inflection mismatches, first: {f}", sweep.failures.len()));
    }
    if sweep.checked < MIN_MORPH_ASSERTIONS || elapsed > MORPH_BUDGET {
        return Err(format!("{} assertions in {elapsed:?}", sweep.checked));
    }
    let r = Realizer::new();
    let cases = goldens();
    let mut times = Vec::new();
    for _ in 0..20 {
        for (c, _) in &cases {
            let t = Instant::now();
            r.realize(c);
            times.push(t.elapsed());
        }
    }
    times.sort();
    let median = times[times.len() / 2];
    let msg = format!("{} inflection assertions in {elapsed:.2?}; median sentence latency {median:.2?}", sweep.checked);
    if median < MEDIAN_LATENCY {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn random_tree(seed: u64, pools: &[Pools; 2]) -> Constituent {
    let shape = Shape { pp: true, decorations: true, typ: true };
    svo(&mut StdRng::seed_from_u64(seed), &pools[(seed % 2) as usize], &shape)
}

fn determinism_and_clones() -> Outcome {
    let r = Realizer::new();
    let pools = [Pools::new(Lang::En), Pools::new(Lang::Fr)];
    let mut failures = Vec::new();
    for seed in 0..RANDOM_TREES {
        let t = random_tree(seed, &pools);
        let first = r.realize(&t);
        if r.realize(&t) != first {
            failures.push(format!("seed {seed}: realizations differ"));
        }
        let snapshot = t.clone();
        let mut copy = t.clone();
        copy.props_mut().typ.neg = None;
        copy.props_mut().typ.pas = !copy.props().typ.pas;
        let copy = copy.add(Adv("today")).pro();
        r.realize(&copy);
        if t != snapshot || r.realize(&t).text != first.text {
            failures.push(format!("seed {seed}: clone changed the original"));
        }
        match parse_spec(&serialize_spec(&t)) {
            Ok(back) if r.realize(&back).text == first.text => {}
            Ok(back) => failures.push(format!("seed {seed}: round trip {:?} != {:?}", r.realize(&back).text, first.text)),
            Err(e) => failures.push(format!("seed {seed}: {e}")),
        }
    }
    if failures.is_empty() {
        Ok(format!("{RANDOM_TREES} random trees: deterministic, clone-independent, round-trip stable"))
    } else {
        Err(format!("{} failures, first: {}", failures.len(), failures[0]))
    }
}

fn question_answers() -> Outcome {
    let (checked, failures) = common::questions::check(0..QUESTION_TREES);
    if failures.is_empty() && checked > 0 {
        Ok(format!("{checked} question forms over {QUESTION_TREES} sentences recover their source words"))
    } else {
        Err(format!("{} of {checked} fail, first: {}", failures.len(), failures.first().cloned().unwrap_or_default()))
    }
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 6] = [
        ("golden sentences", golden_suite),
        ("variation count", variation_count),
        ("morphology oracles", morphology_oracles),
        ("unit-test scale and latency", unit_scale),
        ("determinism and clone independence", determinism_and_clones),
        ("question and answer extraction", question_answers),
    ];
    let mut ok = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(detail) => {
                ok = false;
                println!("criterion {}: FAIL {name}: {detail}", i + 1);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
