use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("sigma(x) = a x^2 + b x + c is identically zero")]
    DegenerateSigma,

    #[error(
        "Bessel polynomials are not orthogonal on any real interval; construction refused"
    )]
    BesselRefused,

    #[error("degenerate Gauss parameter: {0}")]
    DegenerateGauss(String),

    #[error("discriminant b^2 - 4ac = {0} has no square root in Q(i)")]
    IrrationalDiscriminant(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("divergent integral: {0}")]
    Divergent(String),

    #[error("state n = {n} is not bound (bound states need n < {bound})")]
    UnboundState { n: u32, bound: String },

    #[error("argument outside domain: {0}")]
    Domain(String),

    #[error("non-finite integrand sample at x = {0}")]
    NonFinite(f64),

    #[error("requested {requested} eigenvalues but only {available} are available")]
    TooManyEigenvalues { requested: usize, available: usize },

    #[error("incompatible forms: {0}")]
    IncompatibleForms(String),
}

impl Error {
    /// Short machine-readable tag, used by the CLI error line.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DegenerateSigma => "degenerate-sigma",
            Error::BesselRefused => "bessel-refused",
            Error::DegenerateGauss(_) => "degenerate-gauss",
            Error::IrrationalDiscriminant(_) => "irrational-discriminant",
            Error::InvalidParameter(_) => "invalid-parameter",
            Error::Divergent(_) => "divergent",
            Error::UnboundState { .. } => "unbound-state",
            Error::Domain(_) => "domain",
            Error::NonFinite(_) => "non-finite",
            Error::TooManyEigenvalues { .. } => "too-many-eigenvalues",
            Error::IncompatibleForms(_) => "incompatible-forms",
        }
    }
}
