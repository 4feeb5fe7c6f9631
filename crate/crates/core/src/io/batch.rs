//! Many realizations at once: input batches and sentence-type variations.

use crate::par;
use crate::realize::{Realization, Realizer};
use crate::syntax::Constituent;
use crate::transform::options::{Modality, Neg, Question, TypeOptions};

/// Realizes each constituent; output order follows input order.
pub fn realize_all(r: &Realizer, items: &[Constituent]) -> Vec<Realization> {
    par::map(items, |c| r.realize(c))
}

pub fn realize_all_sequential(r: &Realizer, items: &[Constituent]) -> Vec<Realization> {
    par::map_sequential(items, |c| r.realize(c))
}

/// Every combination of negation, passive, progressive, perfect, modality
/// (or none) and question kind (or declarative).
pub fn option_grid() -> Vec<TypeOptions> {
    let mut out = Vec::new();
    let flags = [false, true];
    for neg in flags {
        for pas in flags {
            for prog in flags {
                for perf in flags {
                    for modality in std::iter::once(None).chain(Modality::ALL.iter().copied().map(Some)) {
                        for int in std::iter::once(None).chain(Question::ALL.iter().copied().map(Some)) {
                            out.push(TypeOptions {
                                neg: neg.then_some(Neg::Plain),
                                pas,
                                int,
                                modality,
                                prog,
                                perf,
                                exc: false,
                            });
                        }
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq)]
pub struct Variation {
    pub options: TypeOptions,
    pub realization: Realization,
}

fn vary(r: &Realizer, c: &Constituent, o: &TypeOptions) -> Variation {
    let mut c = c.clone();
    c.props_mut().typ = o.clone();
    Variation { options: o.clone(), realization: r.realize(&c) }
}

/// `c` realized under every option set of [`option_grid`].
pub fn variations(r: &Realizer, c: &Constituent) -> Vec<Variation> {
    par::map(&option_grid(), |o| vary(r, c, o))
}

pub fn variations_sequential(r: &Realizer, c: &Constituent) -> Vec<Variation> {
    par::map_sequential(&option_grid(), |o| vary(r, c, o))
}
