use realizer::prelude::*;

fn en(c: Constituent) -> String {
    Realizer::new().realize(&c).text
}

fn fig1() -> Constituent {
    S([Pro("him").c("nom"), VP([V("eat"), NP([D("a"), N("apple").n("p")]).tag("em")])])
}

fn steps() -> Constituent {
    load_fr();
    let s = S([
        Pro("lui").c("nom"),
        VP([V("donner").t("pc"), NP([D("un"), N("pomme")]).pro(), PP([P("à"), NP([D("le"), N("fille")])])]),
    ]);
    load_en();
    s
}

#[test]
fn first_figure_both_notations() {
    assert_eq!(en(fig1()), "He eats <em>apples</em>.");
    let dep = root(V("eat"), [subj(Pro("him").c("nom"), []), comp(N("apple").n("p"), [det(D("a"), [])]).tag("em")]);
    assert_eq!(en(dep), "He eats <em>apples</em>.");
}

#[test]
fn tense_on_the_sentence() {
    assert_eq!(en(fig1().t("ps")), "He ate <em>apples</em>.");
}

#[test]
fn sentence_types() {
    assert_eq!(en(fig1().typ(json!({"neg": true}))), "He does not eat <em>apples</em>.");
    assert_eq!(en(fig1().typ(json!({"neg": true, "pas": true}))), "<em>Apples</em> are not eaten by him.");
    assert_eq!(en(fig1().typ(json!({"prog": true}))), "He is eating <em>apples</em>.");
    assert_eq!(en(fig1().typ(json!({"perf": true}))), "He has eaten <em>apples</em>.");
    assert_eq!(
        en(fig1().typ(json!({"perf": true, "prog": true, "pas": true, "neg": true}))),
        "<em>Apples</em> have not been being eaten by him."
    );
    assert_eq!(en(fig1().typ(json!({"int": "yon"}))), "Does he eat <em>apples</em>?");
    assert_eq!(en(fig1().typ(json!({"mod": "poss"}))), "He can eat <em>apples</em>.");
    assert_eq!(en(fig1().typ(json!({"mod": "poss", "pas": true, "neg": true}))), "<em>Apples</em> can not be eaten by him.");
}

#[test]
fn figure_nine_questions() {
    let s = S([Pro("him").c("nom"), VP([V("eat"), NP([D("a"), N("apple")])])]);
    let r = Realizer::new();
    let wos = r.question(&s, Question::Wos);
    assert_eq!(wos.question.text, "Who eats an apple?");
    assert_eq!(wos.answer.as_deref(), Some("he"));
    let wad = r.question(&s, Question::Wad);
    assert_eq!(wad.question.text, "What does he eat?");
    assert_eq!(wad.answer.as_deref(), Some("an apple"));
    let codes = r.applicable_questions(&s);
    assert!(codes.contains(&Question::Wos) && codes.contains(&Question::Wad));
    assert!(!codes.contains(&Question::Woi));
    assert_eq!(r.question(&s, Question::Tag).question.text, "He eats an apple, doesn't he?");
}

#[test]
fn french_table() {
    let r = Realizer::new();
    assert_eq!(r.realize(&steps()).text, "Il l'a donnée à la fille.");
    assert_eq!(r.realize(&steps().typ(json!({"neg": true}))).text, "Il ne l'a pas donnée à la fille.");
    load_fr();
    let both = S([
        Pro("lui").c("nom"),
        VP([V("donner").t("pc"), NP([D("un"), N("pomme")]).pro(), PP([P("à"), NP([D("le"), N("fille")])]).pro()]),
    ]);
    let plain = S([Pro("lui").c("nom"), VP([V("donner").t("pc"), NP([D("un"), N("pomme")])])]);
    let fig10 = S([Pro("lui").c("nom"), VP([V("donner").t("pc"), NP([D("un"), N("pomme")]).pro()])]);
    load_en();
    assert_eq!(r.realize(&plain).text, "Il a donné une pomme.");
    assert_eq!(r.realize(&fig10).text, "Il l'a donnée.");
    assert_eq!(r.realize(&both.clone().typ(json!({"neg": true}))).text, "Il ne la lui a pas donnée.");
    assert_eq!(
        r.realize(&both.typ(json!({"neg": true, "pas": true}))).text,
        "Elle ne lui a pas été donnée par lui."
    );
    assert_eq!(r.realize(&plain_question()).text, "Est-ce qu'il a donné une pomme\u{202f}?");
}

fn plain_question() -> Constituent {
    load_fr();
    let s = S([Pro("lui").c("nom"), VP([V("donner").t("pc"), NP([D("un"), N("pomme")])])]).typ(json!({"int": "yon"}));
    load_en();
    s
}

#[test]
fn reuse_and_coordination() {
    let apple = NP([D("a"), N("apple")]);
    let s = S([
        Pro("him").c("nom"),
        CP([C("and"), VP([V("eat"), apple.clone()]), VP([V("love"), apple.clone().pro()])]),
    ]);
    assert_eq!(en(s), "He eats an apple and loves it.");
    let fruit = |n: &str| NP([D("the"), N(n)]);
    let s = S([CP([C("and"), fruit("apple"), fruit("orange"), fruit("banana")]), VP([V("be"), A("good")])]);
    assert_eq!(en(s), "The apple, the orange and the banana are good.");
    assert_eq!(en(S([CP([C("and"), fruit("apple")]), VP([V("be"), A("good")])])), "The apple is good.");
    assert_eq!(en(S([CP([C("or"), fruit("apple"), fruit("orange")]), VP([V("be"), A("good")])])), "The apple or the orange is good.");
}

#[test]
fn additions_and_formatting() {
    let s = S([Pro("him").c("nom"), VP([V("eat"), NP([D("a"), N("apple").n("p")]).add(A("red"))])])
        .add_at(Adv("now").a(","), 0);
    assert_eq!(en(s), "Now, he eats red apples.");
    let link = N("apple").tag_with("a", json!({"href": "https://en.wikipedia.org/wiki/Apple"}));
    let s = S([Pro("him").c("nom"), VP([V("eat"), NP([D("a"), link])])]);
    assert_eq!(en(s), "He eats an <a href=\"https://en.wikipedia.org/wiki/Apple\">apple</a>.");
    load_fr();
    let np = NP([D("un"), N("pomme")]).add(A("rouge"));
    load_en();
    assert_eq!(en(np), "une pomme rouge");
}

#[test]
fn bilingual() {
    load_fr();
    let dest = NP([D("le"), N("monde")]).tag("b");
    load_en();
    let s = S([Pro("I").pe(1), VP([V("say"), Q("hello"), PP([P("to"), dest])])]);
    assert_eq!(en(s), "I say hello to <b>le monde</b>.");
}

#[test]
fn warnings_are_sentences() {
    let r = Realizer::new().realize(&S([NP([D("the"), N(23)]), VP([V("be")])]));
    assert!(r.text.contains("[[23]]"));
    assert_eq!(r.warnings[0].message, "The parameter should be string, not number.");
    let r = Realizer::new().realize(&N("zzzq"));
    assert_eq!(r.text, "[[zzzq]]");
    assert_eq!(r.warnings[0].message, "The word zzzq is absent from the English lexicon.");
}

#[test]
fn numbers_and_one_plane() {
    assert_eq!(en(NP([NO(1), N("plane")])), "1 plane");
    assert_eq!(en(NP([NO(3), N("plane")])), "3 planes");
    assert_eq!(en(NP([NO(1).d_opt(json!({"nat": true})), N("plane")])), "one plane");
}

#[test]
fn empty_sentence() {
    let r = Realizer::new().realize(&S(Vec::<Constituent>::new()));
    assert_eq!(r.text, "");
    assert_eq!(r.warnings.len(), 1);
}

#[test]
fn question_after_fronted_adverb() {
    let s = S([Pro("him").c("nom"), VP([V("eat"), NP([D("a"), N("apple")])])]).add_at(Adv("now").a(","), 0);
    let r = Realizer::new();
    assert_eq!(r.question(&s, Question::Wos).question.text, "Now, who eats an apple?");
    assert_eq!(r.question(&s, Question::Wad).question.text, "Now, what does he eat?");
}
