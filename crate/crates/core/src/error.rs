use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse group spec `{0}`")]
    GroupSpec(String),

    #[error("not a group: {0}")]
    InvalidTable(String),

    #[error("{what} exceeds the cap of {cap}; raise it with {flag}")]
    Capacity {
        what: String,
        cap: usize,
        flag: &'static str,
    },

    #[error("word parse error at token {index} (`{token}`): {message}")]
    Word {
        index: usize,
        token: String,
        message: String,
    },

    #[error("cannot parse element `{0}`")]
    ElementSyntax(String),

    #[error("unsupported group: {0}")]
    UnsupportedGroup(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("element does not belong to this wreath product: {0}")]
    ForeignElement(String),

    #[error("automorphism spec has eps = +1; blocks only exist for eps = -1")]
    NoBlocks,

    #[error("invalid subgroup tag: {0}")]
    InvalidTag(String),

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("invalid vertex: {0}")]
    InvalidVertex(String),

    #[error("compatibility identity violated: {0}")]
    Compatibility(String),

    #[error("independent methods disagree: {0}")]
    MethodDisagreement(String),
}
