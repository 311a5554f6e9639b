use std::fmt;

use thiserror::Error;

/// Why a measure could not be evaluated for a given soft set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Undefined {
    /// The attribute set is empty.
    EmptySoftSet,
    /// Every attribute value is empty, so every upper value is empty too.
    NullUpper,
    /// Every attribute value is empty (the Yao-style denominator vanishes).
    NullSoftSet,
    /// The complement is null, so the complement roughness is undefined.
    WholeComplement,
}

impl fmt::Display for Undefined {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Undefined::EmptySoftSet => "soft set has no attributes",
            Undefined::NullUpper => "every upper approximation is empty",
            Undefined::NullSoftSet => "every attribute value is empty",
            Undefined::WholeComplement => "complement is a null soft set",
        };
        f.write_str(s)
    }
}

/// The first property a pair relation fails when checked as an equivalence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivalenceWitness {
    Reflexive(String),
    Symmetric(String, String),
    Transitive(String, String, String),
}

impl fmt::Display for EquivalenceWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquivalenceWitness::Reflexive(x) => write!(f, "missing reflexive pair ({x},{x})"),
            EquivalenceWitness::Symmetric(x, y) => {
                write!(f, "({x},{y}) present but ({y},{x}) missing")
            }
            EquivalenceWitness::Transitive(x, y, z) => {
                write!(f, "({x},{y}) and ({y},{z}) present but ({x},{z}) missing")
            }
        }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("universe must contain at least one element")]
    EmptyUniverse,
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("blocks do not form a partition: {0}")]
    NotAPartition(String),
    #[error("relation is not an equivalence: {0}")]
    NotEquivalence(EquivalenceWitness),
    #[error("operands are defined over different universes")]
    UniverseMismatch,
    #[error("duplicate attribute name `{0}`")]
    DuplicateAttribute(String),
    #[error("invalid attribute name `{0}`: names must be nonempty and must not contain `|`")]
    InvalidAttributeName(String),
    #[error("operation requires a nonempty attribute set")]
    EmptyAttributeSet,
    #[error("accuracy of the empty set is undefined")]
    EmptySubject,
    #[error("measure undefined: {0}")]
    UndefinedMeasure(Undefined),
    #[error("beta must be greater than 1, got {0}")]
    InvalidBeta(f64),
    #[error("{what} = {value} outside [{min}, {max}]")]
    SizeOutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("granule side {block} does not divide grid {width}x{height}")]
    IndivisibleGranule {
        width: usize,
        height: usize,
        block: usize,
    },
    #[error("region `{0}` does not cover any pixel of the grid")]
    EmptyRegion(String),
    #[error("i/o failure on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Stable machine-greppable tag for this error kind.
    pub fn tag(&self) -> &'static str {
        match self {
            Error::EmptyUniverse => "E_EMPTY_UNIVERSE",
            Error::DuplicateLabel(_) => "E_DUPLICATE_LABEL",
            Error::UnknownLabel(_) => "E_UNKNOWN_LABEL",
            Error::NotAPartition(_) => "E_NOT_A_PARTITION",
            Error::NotEquivalence(_) => "E_NOT_EQUIVALENCE",
            Error::UniverseMismatch => "E_UNIVERSE_MISMATCH",
            Error::DuplicateAttribute(_) => "E_DUPLICATE_ATTRIBUTE",
            Error::InvalidAttributeName(_) => "E_INVALID_ATTRIBUTE_NAME",
            Error::EmptyAttributeSet => "E_EMPTY_ATTRIBUTE_SET",
            Error::EmptySubject => "E_EMPTY_SUBJECT",
            Error::UndefinedMeasure(_) => "E_UNDEFINED_MEASURE",
            Error::InvalidBeta(_) => "E_INVALID_BETA",
            Error::SizeOutOfRange { .. } => "E_SIZE_OUT_OF_RANGE",
            Error::IndivisibleGranule { .. } => "E_INDIVISIBLE_GRANULE",
            Error::EmptyRegion(_) => "E_EMPTY_REGION",
            Error::Io { .. } => "E_IO",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
