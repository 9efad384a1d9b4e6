use std::fmt;

/// Errors produced by the input engine and its supporting modules.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A Devanagari scalar (or a misplaced sign) that the character table does not cover.
    #[error("unmapped character {ch:?} (U+{code:04X}) in {word:?}", code = *ch as u32)]
    UnmappedCharacter { ch: char, word: String },

    /// A phoneme sequence that cannot be rendered, e.g. a diacritic in first position.
    #[error("illegal phoneme sequence: {0}")]
    IllegalSequence(String),

    /// No phoneme code matches the roman input at `position` (byte offset).
    #[error("no phoneme code matches {input:?} at offset {position}")]
    NoSegmentation { input: String, position: usize },

    /// Corpus bytes that are not valid UTF-8.
    #[error("invalid UTF-8 at byte {valid_up_to}")]
    InvalidEncoding { valid_up_to: usize },

    /// A TSV file (table, lexicon, responses, scheme, frequencies) that does not parse.
    #[error("malformed file at line {line}: {reason}")]
    MalformedFile { line: usize, reason: String },

    /// A character table that violates one of its structural invariants.
    #[error("invalid character table: {0}")]
    InvalidTable(String),

    /// Evaluation input that lacks a response, a proposal or a weight.
    #[error("missing data: {0}")]
    MissingData(String),

    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl Error {
    pub(crate) fn malformed(line: usize, reason: impl fmt::Display) -> Self {
        Error::MalformedFile {
            line,
            reason: reason.to_string(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
