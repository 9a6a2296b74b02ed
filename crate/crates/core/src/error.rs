use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{line}:{column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{line}:{column}: unbound variable `{variable}`")]
    UnboundVariable {
        line: usize,
        column: usize,
        variable: String,
    },

    #[error("grounding failed: {0}")]
    Grounding(String),

    #[error("valuation has no value for atom `{0}`")]
    MissingAtom(String),

    /// The decision procedure refused an input with too many distinct atoms.
    #[error("entailment query mentions {atoms} atoms, limit is {limit}")]
    AtomLimit { atoms: usize, limit: usize },

    /// An enumeration would exceed its configured size bound.
    #[error("{what}: size {size} exceeds bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("{0}")]
    Invalid(String),

    #[error("{path}: {message}")]
    Io { path: String, message: String },
}

impl Error {
    /// True for the errors that come from a configured resource limit rather
    /// than from malformed input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::AtomLimit { .. } | Error::BoundExceeded { .. })
    }

    /// True for errors in reading or parsing input text.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Syntax { .. } | Error::UnboundVariable { .. } | Error::Grounding(_) | Error::Io { .. }
        )
    }

    /// Shift a position reported relative to a substring so that it is
    /// relative to the enclosing text, where the substring starts at
    /// `line`:`column`.
    pub(crate) fn rebase(self, line: usize, column: usize) -> Error {
        let shift = |l: usize, c: usize| {
            if l == 1 {
                (line, column + c - 1)
            } else {
                (line + l - 1, c)
            }
        };
        match self {
            Error::Syntax {
                line: l,
                column: c,
                message,
            } => {
                let (line, column) = shift(l, c);
                Error::Syntax { line, column, message }
            }
            Error::UnboundVariable {
                line: l,
                column: c,
                variable,
            } => {
                let (line, column) = shift(l, c);
                Error::UnboundVariable { line, column, variable }
            }
            other => other,
        }
    }
}

/// Byte offset to 1-based line and column (in chars).
pub(crate) fn position(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let line_start = before.rfind('\n').map_or(0, |i| i + 1);
    (line, text[line_start..offset].chars().count() + 1)
}

/// Line and column of the char at index `chars` within `text`.
pub(crate) fn char_position(text: &str, chars: usize) -> (usize, usize) {
    let byte = text.char_indices().nth(chars).map_or(text.len(), |(b, _)| b);
    position(text, byte)
}
