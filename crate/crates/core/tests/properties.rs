mod common;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;
use realizer::io::batch::{realize_all, realize_all_sequential};
use realizer::io::json::{parse_spec, serialize_spec};
use realizer::prelude::*;
use realizer::realize::Config;

use common::trees::{svo, Pools, Shape};

fn tree(seed: u64) -> Constituent {
    let lang = if seed.is_multiple_of(3) { Lang::Fr } else { Lang::En };
    let shape = Shape { pp: true, decorations: true, typ: true };
    svo(&mut StdRng::seed_from_u64(seed), &Pools::new(lang), &shape)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn realizing_twice_is_identical(seed in any::<u64>()) {
        let r = Realizer::new();
        let t = tree(seed);
        prop_assert_eq!(r.realize(&t), r.realize(&t));
    }

    #[test]
    fn clones_are_independent(seed in any::<u64>()) {
        let r = Realizer::new();
        let t = tree(seed);
        let before = r.realize(&t).text;
        let mut copy = t.clone();
        copy.props_mut().typ.neg = None;
        copy = copy.add(Adv("today")).pro();
        r.realize(&copy);
        prop_assert_eq!(r.realize(&t).text, before);
    }

    #[test]
    fn wire_round_trip(seed in any::<u64>()) {
        let r = Realizer::new();
        let t = tree(seed);
        let back = parse_spec(&serialize_spec(&t)).unwrap();
        prop_assert_eq!(r.realize(&back).text, r.realize(&t).text);
    }

    #[test]
    fn output_is_tidy(seed in any::<u64>()) {
        let out = Realizer::new().realize(&tree(seed)).text;
        prop_assert!(common::hygiene(&out).is_ok(), "{:?}", common::hygiene(&out));
    }

    #[test]
    fn tags_are_transparent(seed in any::<u64>()) {
        let t = tree(seed);
        let with = Realizer::new().realize(&t).text;
        let plain = Realizer::new().with_config(Config { no_html: true, ..Config::default() }).realize(&t).text;
        prop_assert_eq!(with.matches("<em>").count(), with.matches("</em>").count());
        prop_assert_eq!(common::strip_tags(&with), plain);
    }
}

#[test]
fn parallel_batch_matches_sequential() {
    let r = Realizer::new();
    let trees: Vec<Constituent> = (0..200).map(tree).collect();
    assert_eq!(realize_all(&r, &trees), realize_all_sequential(&r, &trees));
}

