use rand::Rng;

/// Picks one alternative uniformly; `None` for an empty list.
pub fn one_of<T, R: Rng + ?Sized>(alternatives: Vec<T>, rng: &mut R) -> Option<T> {
    if alternatives.is_empty() {
        return None;
    }
    let i = rng.gen_range(0..alternatives.len());
    alternatives.into_iter().nth(i)
}

/// Like [`one_of`] but only the chosen maker is called, so each call builds a
/// fresh value.
pub fn one_of_with<T, R: Rng + ?Sized>(makers: &[&dyn Fn() -> T], rng: &mut R) -> Option<T> {
    if makers.is_empty() {
        return None;
    }
    Some(makers[rng.gen_range(0..makers.len())]())
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn seeded_sequences_repeat() {
        let draws = |seed| {
            let mut rng = StdRng::seed_from_u64(seed);
            (0..10).map(|_| one_of(vec!["a", "b"], &mut rng).unwrap()).collect::<Vec<_>>()
        };
        assert_eq!(draws(7), draws(7));
        assert_eq!(one_of(vec![3], &mut StdRng::seed_from_u64(1)), Some(3));
        assert_eq!(one_of(Vec::<u8>::new(), &mut StdRng::seed_from_u64(1)), None);
    }

    #[test]
    fn makers_are_called_lazily() {
        let calls = std::cell::Cell::new(0);
        let a = || {
            calls.set(calls.get() + 1);
            "a"
        };
        let b = || {
            calls.set(calls.get() + 1);
            "b"
        };
        let mut rng = StdRng::seed_from_u64(3);
        one_of_with(&[&a, &b], &mut rng);
        assert_eq!(calls.get(), 1);
    }
}
