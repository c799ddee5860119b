use thiserror::Error;

/// Errors produced by the bound computations, the oracles and the CLI.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what} = {value} is outside its domain {domain}")]
    Domain {
        what: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("root is not bracketed on [{lo}, {hi}]: f(lo) = {f_lo}, f(hi) = {f_hi}")]
    Bracket {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("no crossover found on ({lo}, {hi})")]
    WindowEmpty { lo: f64, hi: f64 },

    #[error("block length {n} exceeds the exact enumeration budget of {max}")]
    Budget { n: usize, max: usize },

    #[error("line {line}: {msg}")]
    CodeFormat { line: usize, msg: String },

    #[error("{0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain<T: num_traits::ToPrimitive>(
        what: &'static str,
        value: T,
        domain: &'static str,
    ) -> Self {
        Error::Domain {
            what,
            value: value.to_f64().unwrap_or(f64::NAN),
            domain,
        }
    }

    /// Whether the error stems from bad input rather than a failed computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Domain { .. } | Error::Budget { .. } | Error::CodeFormat { .. } | Error::Io(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
