use crate::lang::Lang;
use crate::lexicon::Pos;

/// Formatting attached to a token at a constituent boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Piece {
    /// Raw markup such as `<em>` or `</em>`.
    Tag(String),
    /// A string from `.b()`, `.a()` or `.ba()`, or inserted punctuation.
    Text(String),
}

/// Where a token comes from: a terminal of the input or a word added by a
/// transformation (do-support, "not", a wh-word).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Origin {
    Original,
    Inserted,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Token {
    pub text: String,
    pub lang: Lang,
    pub lemma: String,
    pub pos: Option<Pos>,
    pub origin: Origin,
    pub plural: bool,
    pub h_aspire: bool,
    /// No space before the next token (elision apostrophes, hyphenated clitics).
    pub join_next: bool,
    pub prefix: Vec<Piece>,
    pub suffix: Vec<Piece>,
}

impl Token {
    pub fn new(text: impl Into<String>, lang: Lang) -> Token {
        let text = text.into();
        Token {
            lemma: text.clone(),
            text,
            lang,
            pos: None,
            origin: Origin::Original,
            plural: false,
            h_aspire: false,
            join_next: false,
            prefix: Vec::new(),
            suffix: Vec::new(),
        }
    }

    pub fn inserted(text: impl Into<String>, lang: Lang) -> Token {
        Token { origin: Origin::Inserted, ..Token::new(text, lang) }
    }

    pub fn with_pos(mut self, pos: Pos) -> Token {
        self.pos = Some(pos);
        self
    }

    pub fn with_lemma(mut self, lemma: impl Into<String>) -> Token {
        self.lemma = lemma.into();
        self
    }

    /// Nothing to print, not even formatting.
    pub fn is_void(&self) -> bool {
        self.text.is_empty() && self.prefix.is_empty() && self.suffix.is_empty()
    }
}
