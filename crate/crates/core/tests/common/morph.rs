//! Paradigms computed from the lemma alone, plus reference tables of
//! irregular forms. `sweep` compares them with the library's inflection.

use realizer::features::{FeatureBundle, Gender, Number, Person, Tense};
use realizer::lang::Lang;
use realizer::lexicon::{builtin, Lexicon, Pos};
use realizer::morphology::{conjugate, decline};

/// Base, past, past participle.
pub const EN_IRREGULAR: &[(&str, &str, &str)] = &[
    ("arise", "arose", "arisen"),
    ("awake", "awoke", "awoken"),
    ("become", "became", "become"),
    ("begin", "began", "begun"),
    ("bite", "bit", "bitten"),
    ("blow", "blew", "blown"),
    ("break", "broke", "broken"),
    ("bring", "brought", "brought"),
    ("build", "built", "built"),
    ("buy", "bought", "bought"),
    ("catch", "caught", "caught"),
    ("choose", "chose", "chosen"),
    ("come", "came", "come"),
    ("cut", "cut", "cut"),
    ("dig", "dug", "dug"),
    ("do", "did", "done"),
    ("draw", "drew", "drawn"),
    ("drink", "drank", "drunk"),
    ("drive", "drove", "driven"),
    ("eat", "ate", "eaten"),
    ("fall", "fell", "fallen"),
    ("feed", "fed", "fed"),
    ("feel", "felt", "felt"),
    ("fight", "fought", "fought"),
    ("find", "found", "found"),
    ("flee", "fled", "fled"),
    ("fly", "flew", "flown"),
    ("forbid", "forbade", "forbidden"),
    ("forget", "forgot", "forgotten"),
    ("forgive", "forgave", "forgiven"),
    ("freeze", "froze", "frozen"),
    ("give", "gave", "given"),
    ("go", "went", "gone"),
    ("grow", "grew", "grown"),
    ("have", "had", "had"),
    ("hear", "heard", "heard"),
    ("hide", "hid", "hidden"),
    ("hit", "hit", "hit"),
    ("hold", "held", "held"),
    ("hurt", "hurt", "hurt"),
    ("keep", "kept", "kept"),
    ("know", "knew", "known"),
    ("lead", "led", "led"),
    ("leave", "left", "left"),
    ("lend", "lent", "lent"),
    ("let", "let", "let"),
    ("lose", "lost", "lost"),
    ("make", "made", "made"),
    ("mean", "meant", "meant"),
    ("meet", "met", "met"),
    ("mistake", "mistook", "mistaken"),
    ("overcome", "overcame", "overcome"),
    ("pay", "paid", "paid"),
    ("put", "put", "put"),
    ("read", "read", "read"),
    ("ride", "rode", "ridden"),
    ("ring", "rang", "rung"),
    ("rise", "rose", "risen"),
    ("run", "ran", "run"),
    ("say", "said", "said"),
    ("see", "saw", "seen"),
    ("sell", "sold", "sold"),
    ("send", "sent", "sent"),
    ("set", "set", "set"),
    ("shake", "shook", "shaken"),
    ("shoot", "shot", "shot"),
    ("shut", "shut", "shut"),
    ("sing", "sang", "sung"),
    ("sink", "sank", "sunk"),
    ("sit", "sat", "sat"),
    ("sleep", "slept", "slept"),
    ("slide", "slid", "slid"),
    ("speak", "spoke", "spoken"),
    ("spend", "spent", "spent"),
    ("spin", "spun", "spun"),
    ("split", "split", "split"),
    ("stand", "stood", "stood"),
    ("steal", "stole", "stolen"),
    ("stick", "stuck", "stuck"),
    ("strike", "struck", "struck"),
    ("swear", "swore", "sworn"),
    ("swim", "swam", "swum"),
    ("take", "took", "taken"),
    ("teach", "taught", "taught"),
    ("tear", "tore", "torn"),
    ("tell", "told", "told"),
    ("think", "thought", "thought"),
    ("throw", "threw", "thrown"),
    ("understand", "understood", "understood"),
    ("undertake", "undertook", "undertaken"),
    ("upset", "upset", "upset"),
    ("wake", "woke", "woken"),
    ("wear", "wore", "worn"),
    ("win", "won", "won"),
    ("withdraw", "withdrew", "withdrawn"),
    ("write", "wrote", "written"),
];

/// Verbs left out of the sweep: modals, "be", and verbs whose standard
/// forms vary between references.
const SKIP: &[&str] = &[
    "be", "can", "could", "may", "might", "must", "shall", "should", "will", "would", "ought", "lie", "get", "fit",
    "quit", "bet", "bid", "shine", "strive", "light", "hang", "bear", "dream", "learn", "burn", "spell", "spill",
    "smell", "spoil", "dwell", "lean", "leap", "kneel", "knit", "wet", "dive", "prove", "show", "sew", "mow", "swell",
    "saw", "sow", "weave", "wake", "awake", "forecast", "broadcast", "beat", "spit", "speed", "spring", "sting",
    "stink", "swing", "wring", "cling", "fling", "sling", "slink", "string", "bind", "grind", "wind", "creep",
    "sweep", "weep", "deal", "bleed", "breed", "seek", "tread", "shrink", "stride", "thrust", "cast",
    "cost", "burst", "shed", "spread", "rid", "slit", "lay", "bend", "rend",
];

fn vowel(c: char) -> bool {
    "aeiou".contains(c)
}

/// True when the ending might double its consonant ("stop" → "stopped").
fn cvc(lemma: &str) -> bool {
    let c: Vec<char> = lemma.chars().collect();
    let n = c.len();
    n >= 3 && !vowel(c[n - 1]) && !"wxy".contains(c[n - 1]) && vowel(c[n - 2]) && !vowel(c[n - 3])
}

fn ends_consonant_y(lemma: &str) -> bool {
    let c: Vec<char> = lemma.chars().collect();
    c.len() >= 2 && c[c.len() - 1] == 'y' && !vowel(c[c.len() - 2])
}

pub fn en_third_singular(lemma: &str) -> String {
    if ends_consonant_y(lemma) {
        format!("{}ies", &lemma[..lemma.len() - 1])
    } else if ["s", "x", "z", "ch", "sh", "o"].iter().any(|e| lemma.ends_with(e)) {
        format!("{lemma}es")
    } else {
        format!("{lemma}s")
    }
}

pub fn en_past(lemma: &str) -> String {
    if lemma.ends_with('e') {
        format!("{lemma}d")
    } else if ends_consonant_y(lemma) {
        format!("{}ied", &lemma[..lemma.len() - 1])
    } else {
        format!("{lemma}ed")
    }
}

pub fn en_present_participle(lemma: &str) -> String {
    if let Some(stem) = lemma.strip_suffix("ie") {
        format!("{stem}ying")
    } else if lemma.ends_with('e') && !["ee", "ye", "oe"].iter().any(|e| lemma.ends_with(e)) {
        format!("{}ing", &lemma[..lemma.len() - 1])
    } else {
        format!("{lemma}ing")
    }
}

pub const EN_IRREGULAR_NOUNS: &[(&str, &str)] = &[
    ("man", "men"),
    ("woman", "women"),
    ("child", "children"),
    ("foot", "feet"),
    ("tooth", "teeth"),
    ("mouse", "mice"),
    ("goose", "geese"),
    ("person", "people"),
    ("ox", "oxen"),
    ("sheep", "sheep"),
    ("deer", "deer"),
];

/// Same form in both numbers: mass nouns and zero plurals.
pub const EN_INVARIANT: &[&str] = &[
    "aircraft", "series", "species", "news", "bread", "butter", "furniture", "health", "honey", "milk", "money",
    "music", "oil", "rice", "salt", "software", "sugar", "water", "weather",
];

pub fn en_plural(lemma: &str) -> Option<String> {
    if EN_INVARIANT.contains(&lemma) {
        return Some(lemma.to_string());
    }
    if let Some((_, p)) = EN_IRREGULAR_NOUNS.iter().find(|(s, _)| *s == lemma) {
        return Some(p.to_string());
    }
    // Endings whose plural is lexical: -o, -f, -fe, and learned plurals.
    if ["o", "f", "fe", "is", "us", "um", "on", "a", "ex", "ix", "man", "fish"].iter().any(|e| lemma.ends_with(e)) {
        return None;
    }
    Some(if ends_consonant_y(lemma) {
        format!("{}ies", &lemma[..lemma.len() - 1])
    } else if ["s", "x", "z", "ch", "sh"].iter().any(|e| lemma.ends_with(e)) {
        format!("{lemma}es")
    } else {
        format!("{lemma}s")
    })
}

/// Regular first-group French verbs: the stem never changes.
pub fn fr_regular_er(lemma: &str) -> bool {
    let Some(stem) = lemma.strip_suffix("er") else { return false };
    if ["aller", "envoyer", "renvoyer"].contains(&lemma) || stem.ends_with('c') || stem.ends_with('g') || stem.ends_with('y')
    {
        return false;
    }
    // e or é before a final consonant group alternates (lever, céder, appeler).
    let chars: Vec<char> = stem.chars().collect();
    let last_vowel = chars.iter().rposition(|c| "aeiouyéèêëàâîïôûü".contains(*c));
    match last_vowel {
        Some(i) if i + 1 < chars.len() => !matches!(chars[i], 'e' | 'é'),
        Some(_) => true,
        None => false,
    }
}

const FR_ER: &[(&str, [&str; 6])] = &[
    ("p", ["e", "es", "e", "ons", "ez", "ent"]),
    ("i", ["ais", "ais", "ait", "ions", "iez", "aient"]),
    ("ps", ["ai", "as", "a", "âmes", "âtes", "èrent"]),
    ("f", ["erai", "eras", "era", "erons", "erez", "eront"]),
    ("c", ["erais", "erais", "erait", "erions", "eriez", "eraient"]),
    ("s", ["e", "es", "e", "ions", "iez", "ent"]),
    ("si", ["asse", "asses", "ât", "assions", "assiez", "assent"]),
];

/// Every (features, expected form) of a regular -er verb.
pub fn fr_er_paradigm(lemma: &str) -> Vec<(FeatureBundle, String)> {
    let stem = &lemma[..lemma.len() - 2];
    let mut out = Vec::new();
    for (t, endings) in FR_ER {
        for (i, e) in endings.iter().enumerate() {
            out.push((bundle(t, i), format!("{stem}{e}")));
        }
    }
    for (g, n, e) in [(Gender::M, Number::S, "é"), (Gender::F, Number::S, "ée"), (Gender::M, Number::P, "és"), (Gender::F, Number::P, "ées")] {
        let f = FeatureBundle { t: Some(Tense::Pp), pp_agree: Some((g, n)), ..Default::default() };
        out.push((f, format!("{stem}{e}")));
    }
    out.push((tense("pr"), format!("{stem}ant")));
    out.push((tense("b"), lemma.to_string()));
    for (i, e) in [(1, "e"), (3, "ons"), (4, "ez")] {
        out.push((bundle("ip", i), format!("{stem}{e}")));
    }
    out
}

fn tense(t: &str) -> FeatureBundle {
    FeatureBundle { t: Tense::parse(t), ..Default::default() }
}

/// Slot 0..6 is 1s 2s 3s 1p 2p 3p.
fn bundle(t: &str, slot: usize) -> FeatureBundle {
    FeatureBundle {
        t: Tense::parse(t),
        pe: Some(Person::ALL[slot % 3]),
        n: Some(if slot < 3 { Number::S } else { Number::P }),
        ..Default::default()
    }
}

pub fn en_paradigm(lemma: &str) -> Option<Vec<(FeatureBundle, String)>> {
    if SKIP.contains(&lemma) {
        return None;
    }
    let irregular = EN_IRREGULAR.iter().find(|(b, _, _)| *b == lemma);
    if irregular.is_none() && cvc(lemma) {
        return None;
    }
    let (past, pp) = match irregular {
        Some((_, p, pp)) => (p.to_string(), pp.to_string()),
        None => (en_past(lemma), en_past(lemma)),
    };
    let third = match lemma {
        "have" => "has".to_string(),
        _ => en_third_singular(lemma),
    };
    let mut out = Vec::new();
    for slot in 0..6 {
        out.push((bundle("p", slot), if slot == 2 { third.clone() } else { lemma.to_string() }));
        out.push((bundle("ps", slot), past.clone()));
    }
    out.push((tense("pp"), pp));
    out.push((tense("b"), lemma.to_string()));
    if !cvc(lemma) {
        out.push((tense("pr"), en_present_participle(lemma)));
    }
    Some(out)
}

pub const BE: &[(&str, [&str; 6])] = &[
    ("p", ["am", "are", "is", "are", "are", "are"]),
    ("ps", ["was", "were", "was", "were", "were", "were"]),
];
pub const ETRE: &[(&str, [&str; 6])] = &[
    ("p", ["suis", "es", "est", "sommes", "êtes", "sont"]),
    ("i", ["étais", "étais", "était", "étions", "étiez", "étaient"]),
    ("ps", ["fus", "fus", "fut", "fûmes", "fûtes", "furent"]),
    ("f", ["serai", "seras", "sera", "serons", "serez", "seront"]),
    ("c", ["serais", "serais", "serait", "serions", "seriez", "seraient"]),
    ("s", ["sois", "sois", "soit", "soyons", "soyez", "soient"]),
    ("si", ["fusse", "fusses", "fût", "fussions", "fussiez", "fussent"]),
];
pub const AVOIR: &[(&str, [&str; 6])] = &[
    ("p", ["ai", "as", "a", "avons", "avez", "ont"]),
    ("i", ["avais", "avais", "avait", "avions", "aviez", "avaient"]),
    ("ps", ["eus", "eus", "eut", "eûmes", "eûtes", "eurent"]),
    ("f", ["aurai", "auras", "aura", "aurons", "aurez", "auront"]),
    ("c", ["aurais", "aurais", "aurait", "aurions", "auriez", "auraient"]),
    ("s", ["aie", "aies", "ait", "ayons", "ayez", "aient"]),
    ("si", ["eusse", "eusses", "eût", "eussions", "eussiez", "eussent"]),
];

pub fn table_paradigm(table: &[(&str, [&str; 6])]) -> Vec<(FeatureBundle, String)> {
    let mut out = Vec::new();
    for (t, forms) in table {
        for (i, f) in forms.iter().enumerate() {
            out.push((bundle(t, i), f.to_string()));
        }
    }
    out
}

#[derive(Default)]
pub struct Sweep {
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Sweep {
    fn verb(&mut self, lex: &Lexicon, lemma: &str, paradigm: Vec<(FeatureBundle, String)>) {
        let Ok(entry) = lex.lookup(lemma, Pos::V) else { return };
        for (f, want) in paradigm {
            self.checked += 1;
            let got = conjugate(lex, entry, &f).map(|w| w.join(" "));
            if got.as_deref() != Ok(want.as_str()) {
                self.failures.push(format!("{lemma} {f:?}: got {got:?}, want {want}"));
            }
        }
    }

    fn noun(&mut self, lex: &Lexicon, lemma: &str, plural: String) {
        let Ok(entry) = lex.lookup(lemma, Pos::N) else { return };
        self.checked += 2;
        let s = FeatureBundle { n: Some(Number::S), ..Default::default() };
        let p = FeatureBundle { n: Some(Number::P), ..Default::default() };
        let got = (decline(lex, entry, &s), decline(lex, entry, &p));
        if got.0.as_deref() != Ok(lemma) || got.1.as_deref() != Ok(plural.as_str()) {
            self.failures.push(format!("{lemma}: got {got:?}, want {plural}"));
        }
    }
}

fn sorted_lemmas(lex: &Lexicon, pos: Pos) -> Vec<String> {
    let mut v: Vec<String> = lex.entries().filter(|e| e.pos == pos).map(|e| e.lemma.clone()).collect();
    v.sort();
    v
}

/// Compares every applicable oracle paradigm with the library's forms.
pub fn sweep() -> Sweep {
    let mut s = Sweep::default();
    let en = builtin(Lang::En);
    let fr = builtin(Lang::Fr);
    for lemma in sorted_lemmas(en, Pos::V) {
        if let Some(p) = en_paradigm(&lemma) {
            s.verb(en, &lemma, p);
        }
    }
    s.verb(en, "be", table_paradigm(BE));
    for lemma in sorted_lemmas(fr, Pos::V) {
        if fr_regular_er(&lemma) {
            s.verb(fr, &lemma, fr_er_paradigm(&lemma));
        }
    }
    s.verb(fr, "être", table_paradigm(ETRE));
    s.verb(fr, "avoir", table_paradigm(AVOIR));
    for lemma in sorted_lemmas(en, Pos::N) {
        if let Some(p) = en_plural(&lemma) {
            s.noun(en, &lemma, p);
        }
    }
    s
}
