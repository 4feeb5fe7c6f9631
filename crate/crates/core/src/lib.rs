//! A bilingual English/French surface realizer.

pub mod features;
pub mod io;
pub mod lang;
pub mod lexicon;
pub mod morphology;
pub mod numdate;
pub mod par;
pub mod realize;
pub mod syntax;
pub mod transform;

pub use serde_json::json;

/// Everything needed to build and realize sentences.
pub mod prelude {
    pub use crate::json;
    pub use crate::lang::{load_en, load_fr, with_lang, Lang};
    pub use crate::realize::{Config, Realization, Realizer};
    pub use crate::syntax::dsl::*;
    pub use crate::syntax::Constituent;
    pub use crate::transform::options::Question;
}
