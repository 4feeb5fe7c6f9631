use std::cell::Cell;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Lang {
    #[default]
    En,
    Fr,
}

impl Lang {
    pub fn code(self) -> &'static str {
        match self {
            Lang::En => "en",
            Lang::Fr => "fr",
        }
    }

    pub fn parse(s: &str) -> Option<Lang> {
        match s {
            "en" => Some(Lang::En),
            "fr" => Some(Lang::Fr),
            _ => None,
        }
    }
}

impl fmt::Display for Lang {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

thread_local! {
    static CURRENT: Cell<Lang> = const { Cell::new(Lang::En) };
}

/// Language given to constituents built from now on in this thread.
pub fn current_lang() -> Lang {
    CURRENT.with(|c| c.get())
}

pub fn set_lang(lang: Lang) {
    CURRENT.with(|c| c.set(lang));
}

pub fn load_en() {
    set_lang(Lang::En);
}

pub fn load_fr() {
    set_lang(Lang::Fr);
}

/// Runs `f` with `lang` as the ambient language, restoring the previous one.
pub fn with_lang<T>(lang: Lang, f: impl FnOnce() -> T) -> T {
    let saved = current_lang();
    set_lang(lang);
    let out = f();
    set_lang(saved);
    out
}
