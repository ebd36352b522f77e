use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Clone, Debug, Error, PartialEq)]
pub enum Error {
    #[error("non-finite input: {0}")]
    NonFinite(f64),

    #[error("zero vector has no projective meaning")]
    ZeroVector,

    #[error("expected a proper point, got {0:?}")]
    NotProper(Vec<f64>),

    #[error("hyperplane has a non-spacelike polar point")]
    NotSpacelike,

    #[error("inconsistent inputs: arccosh argument {0} < 1")]
    ArccoshDomain(f64),

    #[error("Coxeter scheme [{p}, {q}, {r}] is not hyperbolic of signature (1,3)")]
    NotHyperbolic { p: f64, q: f64, r: f64 },

    #[error("principal vertex A3 is not outer (h33 = {0})")]
    NotOuter(f64),

    #[error("principal vertex A0 is not ideal (h00 = {0})")]
    NotIdeal(f64),

    #[error("[{p}, {q}, {r}] is not a member of the (4,4), (6,3) or (3,6) families")]
    UnsupportedScheme { p: f64, q: f64, r: f64 },

    #[error("realization failed: {0}")]
    Realization(String),

    #[error("{name} = {value} is outside its domain {domain}")]
    Domain {
        name: &'static str,
        value: f64,
        domain: &'static str,
    },

    #[error("degenerate triangle")]
    Degenerate,

    #[error("horosphere with s = {0} does not cross the segment")]
    NoCrossing(f64),

    #[error("horospheric arcs {0:?} violate the triangle inequality")]
    TriangleInequality([f64; 3]),

    #[error("inadmissible configuration: {0}")]
    Inadmissible(String),

    #[error("evaluation failed at x = {x}: {source}")]
    Evaluation { x: f64, source: Box<Error> },

    #[error("invalid argument: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn domain(name: &'static str, value: f64, domain: &'static str) -> Self {
        Error::Domain {
            name,
            value,
            domain,
        }
    }
}
