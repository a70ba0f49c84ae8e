use thiserror::Error;

/// A malformed cell token, generation line, or rule string.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message} (`{token}`)")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub token: String,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, token: &str, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            token: token.to_string(),
            message: message.into(),
        }
    }

    /// Re-anchors an error raised while parsing a fragment.
    pub fn at(mut self, line: usize, column: usize) -> Self {
        self.line = line;
        self.column = column;
        self
    }
}

/// Two rule constraints that cannot both hold.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("contradictory rule bits {bits:?}")]
pub struct Contradiction {
    pub bits: Vec<usize>,
}
