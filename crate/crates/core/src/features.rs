//! Grammatical feature codes shared by every stage of the pipeline.


macro_rules! code_enum {
    ($(#[$meta:meta])* $name:ident { $($variant:ident => $($code:literal)|+),+ $(,)? }) => {
        $(#[$meta])*
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub enum $name { $($variant),+ }

        impl $name {
            pub const ALL: &'static [$name] = &[$($name::$variant),+];

            /// Short code used by the expression notation and the wire format.
            pub fn code(self) -> &'static str {
                match self { $($name::$variant => code_enum!(@first $($code)|+)),+ }
            }

            pub fn parse(s: &str) -> Option<Self> {
                match s { $($($code)|+ => Some($name::$variant),)+ _ => None }
            }
        }

        impl ::std::fmt::Display for $name {
            fn fmt(&self, f: &mut ::std::fmt::Formatter<'_>) -> ::std::fmt::Result {
                f.write_str(self.code())
            }
        }
    };
    (@first $first:literal $(| $rest:literal)*) => { $first };
}
pub(crate) use code_enum;

code_enum!(Person { First => "1", Second => "2", Third => "3" });
code_enum!(Number { S => "s", P => "p" });
code_enum!(
    /// `X` is the unmarked gender: English neuter, French "either".
    Gender { M => "m", F => "f", X => "x" }
);
code_enum!(Tense {
    P => "p",
    I => "i",
    Ps => "ps",
    F => "f",
    C => "c",
    S => "s",
    Si => "si",
    B => "b",
    Pr => "pr",
    Pp => "pp",
    Ip => "ip",
    Pc => "pc",
    Pq => "pq",
    Spa => "spa",
    Spq => "spq",
});
code_enum!(Case { Nom => "nom", Acc => "acc", Dat => "dat", Refl => "refl", Tonic => "tonic" });
code_enum!(Aux { Av => "av" | "avoir", Et => "êt" | "être" });
code_enum!(Degree { Co => "co", Su => "su" });
code_enum!(Position { Pre => "pre", Post => "post" });

impl Person {
    pub fn from_int(i: i64) -> Option<Person> {
        match i {
            1 => Some(Person::First),
            2 => Some(Person::Second),
            3 => Some(Person::Third),
            _ => None,
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }
}

impl Tense {
    /// French compound tenses as (auxiliary tense, _) pairs.
    pub fn compound_base(self) -> Option<Tense> {
        match self {
            Tense::Pc => Some(Tense::P),
            Tense::Pq => Some(Tense::I),
            Tense::Spa => Some(Tense::S),
            Tense::Spq => Some(Tense::Si),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        !matches!(self, Tense::B | Tense::Pr | Tense::Pp)
    }
}

/// A partial set of features. Unset fields fall back to the agreement cell,
/// then to lexicon-inherent values, then to defaults.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FeatureBundle {
    pub pe: Option<Person>,
    pub n: Option<Number>,
    pub g: Option<Gender>,
    pub t: Option<Tense>,
    pub c: Option<Case>,
    pub aux: Option<Aux>,
    pub f: Option<Degree>,
    /// Gender and number a French past participle agrees with.
    pub pp_agree: Option<(Gender, Number)>,
}

impl FeatureBundle {
    pub fn person(&self) -> Person {
        self.pe.unwrap_or(Person::Third)
    }

    pub fn number(&self) -> Number {
        self.n.unwrap_or(Number::S)
    }

    pub fn gender(&self) -> Gender {
        self.g.unwrap_or(Gender::X)
    }

    pub fn tense(&self) -> Tense {
        self.t.unwrap_or(Tense::P)
    }

    /// Index in a six-cell person/number paradigm.
    pub fn slot(&self) -> usize {
        self.person().index() + if self.number() == Number::P { 3 } else { 0 }
    }

    /// Fields of `other` fill the gaps of `self`.
    pub fn or(&self, other: &FeatureBundle) -> FeatureBundle {
        FeatureBundle {
            pe: self.pe.or(other.pe),
            n: self.n.or(other.n),
            g: self.g.or(other.g),
            t: self.t.or(other.t),
            c: self.c.or(other.c),
            aux: self.aux.or(other.aux),
            f: self.f.or(other.f),
            pp_agree: self.pp_agree.or(other.pp_agree),
        }
    }

    pub fn is_empty(&self) -> bool {
        *self == FeatureBundle::default()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_round_trip() {
        for t in Tense::ALL {
            assert_eq!(Tense::parse(t.code()), Some(*t));
        }
        assert_eq!(Aux::parse("être"), Some(Aux::Et));
        assert_eq!(Aux::Et.code(), "êt");
    }

    #[test]
    fn slot_layout() {
        let f = FeatureBundle { pe: Some(Person::First), n: Some(Number::P), ..Default::default() };
        assert_eq!(f.slot(), 3);
        assert_eq!(FeatureBundle::default().slot(), 2);
    }
}
