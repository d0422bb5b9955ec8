use thiserror::Error;

pub type Result<T> = std::result::Result<T, ColorError>;

/// Everything that can go wrong while parsing, resolving or evaluating colors.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ColorError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown color model `{0}`")]
    UnknownModel(String),

    #[error("invalid channel spec: {0}")]
    Spec(String),

    #[error("malformed hex code `{0}`")]
    Hex(String),

    #[error("invalid color name `{0}`")]
    InvalidName(String),

    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("unknown series scheme `{0}`")]
    UnknownScheme(String),

    #[error("undefined color `{0}`")]
    UndefinedColor(String),

    #[error("undefined color series `{0}`")]
    UndefinedSeries(String),

    #[error("{0}")]
    Range(String),

    #[error("{0}")]
    Eval(String),

    #[error("color series `{0}` has not been reset")]
    SeriesNotReset(String),

    #[error("{0}")]
    Io(String),

    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<ColorError>,
    },
}

impl ColorError {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        ColorError::Parse {
            pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn at_line(self, line: usize) -> Self {
        ColorError::Line {
            line,
            source: Box::new(self),
        }
    }

    /// Process exit code for this error: 2 parse, 3 undefined name,
    /// 4 evaluation/state/range.
    pub fn exit_code(&self) -> i32 {
        match self {
            ColorError::Parse { .. }
            | ColorError::UnknownModel(_)
            | ColorError::Spec(_)
            | ColorError::Hex(_)
            | ColorError::InvalidName(_)
            | ColorError::Syntax(_)
            | ColorError::UnknownScheme(_)
            | ColorError::Io(_) => 2,
            ColorError::UndefinedColor(_) | ColorError::UndefinedSeries(_) => 3,
            ColorError::Range(_) | ColorError::Eval(_) | ColorError::SeriesNotReset(_) => 4,
            ColorError::Line { source, .. } => source.exit_code(),
        }
    }
}
