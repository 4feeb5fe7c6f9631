use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use realizer::io::batch::{realize_all, realize_all_sequential, variations, variations_sequential};
use realizer::io::Lemmatizer;
use realizer::lexicon::builtin;
use realizer::prelude::*;

fn fig1() -> Constituent {
    S([Pro("him").c("nom"), VP([V("eat"), NP([D("a"), N("apple").n("p")]).tag("em")])])
}

fn batch() -> Vec<Constituent> {
    let nouns = ["apple", "orange", "banana", "cat", "dog", "house", "book", "car"];
    let verbs = ["eat", "love", "see", "take", "find", "want", "like", "give"];
    let mut out = Vec::new();
    for (i, n) in nouns.iter().enumerate() {
        for (j, v) in verbs.iter().enumerate() {
            let s = S([NP([D("the"), N(*n)]), VP([V(*v), NP([D("a"), N(nouns[(i + j) % nouns.len()]).n("p")])])]);
            out.push(s.typ(json!({"neg": i % 2 == 0, "perf": j % 2 == 0})));
        }
    }
    out
}

fn bench(c: &mut Criterion) {
    let r = Realizer::new();
    let items = batch();
    let mut g = c.benchmark_group("batch");
    g.bench_function(BenchmarkId::new("realize_all", "parallel"), |b| b.iter(|| realize_all(&r, &items)));
    g.bench_function(BenchmarkId::new("realize_all", "sequential"), |b| b.iter(|| realize_all_sequential(&r, &items)));
    let s = fig1();
    g.bench_function(BenchmarkId::new("variations", "parallel"), |b| b.iter(|| variations(&r, &s)));
    g.bench_function(BenchmarkId::new("variations", "sequential"), |b| b.iter(|| variations_sequential(&r, &s)));
    g.finish();
    let mut g = c.benchmark_group("lemmatizer_index");
    g.sample_size(10);
    let lex = builtin(Lang::En);
    g.bench_function("parallel", |b| b.iter(|| Lemmatizer::new(lex)));
    g.bench_function("sequential", |b| b.iter(|| Lemmatizer::new_sequential(lex)));
    g.finish();
    c.bench_function("single_sentence", |b| b.iter(|| r.realize(&s)));
}

criterion_group!(benches, bench);
criterion_main!(benches);
