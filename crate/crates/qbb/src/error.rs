use crate::real::ParseRealError;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole of {func} at {arg}")]
    Pole { func: &'static str, arg: String },
    #[error("series did not converge: {0}")]
    Convergence(String),
    #[error("zero search found {found} of {wanted} zeros before exhausting its budget")]
    SearchFailure { found: usize, wanted: usize, partial: Vec<String> },
    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),
    #[error(transparent)]
    Parse(#[from] ParseRealError),
    #[error("decode error: {0}")]
    Decode(String),
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
