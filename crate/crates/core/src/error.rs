use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Unsupported family/rank combination.
    InvalidType(String),
    /// A letter outside `1..=rank`.
    LetterOutOfRange {
        letter: usize,
        rank: usize,
    },
    NotReduced,
    /// Reduced, but not a word for the longest element.
    NotLongest {
        len: usize,
        expected: usize,
    },
    /// The requested automorphism does not exist on this diagram.
    NoAutomorphism(String),
    NotSink(usize),
    IndexOutOfRange(String),
    /// A closure or search exceeded the caller's bound.
    LimitExceeded(usize),
    NotTwisted(String),
    /// Two vertices land on the same folded coordinate.
    CoordinateClash,
    Unsupported(String),
    /// A statement that holds for every input covered by the theory failed.
    TheoremViolation(String),
    NotSimple,
    NonUniqueSocle,
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidType(s) => write!(f, "invalid type: {s}"),
            Error::LetterOutOfRange { letter, rank } => {
                write!(f, "letter {letter} out of range 1..={rank}")
            }
            Error::NotReduced => write!(f, "word is not reduced"),
            Error::NotLongest { len, expected } => {
                write!(f, "word of length {len} does not represent w0 (need {expected})")
            }
            Error::NoAutomorphism(s) => write!(f, "no such diagram automorphism: {s}"),
            Error::NotSink(i) => write!(f, "{i} is not a sink"),
            Error::IndexOutOfRange(s) => write!(f, "index out of range: {s}"),
            Error::LimitExceeded(n) => write!(f, "size limit {n} exceeded"),
            Error::NotTwisted(s) => write!(f, "not a twisted adapted class: {s}"),
            Error::CoordinateClash => write!(f, "two vertices share a folded coordinate"),
            Error::Unsupported(s) => write!(f, "unsupported: {s}"),
            Error::TheoremViolation(s) => write!(f, "theorem violation: {s}"),
            Error::NotSimple => write!(f, "root is simple"),
            Error::NonUniqueSocle => write!(f, "socle is not unique"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
        }
    }
}
