//! Finitely additive, modular, and probability functions on pre-semirings.
//!
//! A pre-semiring is a set with two commutative associative operations,
//! multiplication distributing over addition. A hemiring adds a neutral
//! absorbing zero, a semiring adds a unit distinct from zero. This crate
//! verifies such structures and the functions living on them by exact
//! computation: exhaustively when the carrier is finite, by seeded
//! sampling when it is not. Sampled verdicts are always labeled as such;
//! nothing sampled is ever reported as proven.
//!
//! The main entry points:
//!
//! * [`structure`]: carriers, axiom classification, structural flags.
//! * [`instances`]: a catalog of finite and symbolic carriers.
//! * [`complements`]: complemented elements, symmetric difference, the
//!   Boolean algebra sitting inside a zerosumfree semiring.
//! * [`functions`]: mapped functions and their property checks.
//! * [`theorems`]: identities, independence, conditioning, inclusion
//!   and exclusion, the induced semi-metric.
//! * [`dedekind`]: the ideal semiring of the integers and the modular
//!   functions it carries.
//! * [`enumeration`]: full enumeration of function spaces over finite
//!   carriers and sampled constancy checks over symbolic ones.
//! * [`cli`]: the `presemiring` command line and its file formats.
//!
//! Every public operation either verifies its hypotheses or reports a
//! hypothesis failure; a failed hypothesis is never conflated with a
//! refuted conclusion. All types are immutable after construction and
//! safe to share across threads.
//!
//! The `examples/` directory holds one runnable walkthrough per
//! capability; `cargo run --example probability_toolkit` is a good
//! starting point.

pub mod cli;
pub mod codomain;
pub mod complements;
pub mod dedekind;
pub mod enumeration;
pub mod functions;
pub mod instances;
pub mod intervals;
pub mod rational;
pub mod structure;
pub mod symbolic;
pub mod theorems;

pub use codomain::{CoValue, Codomain};
pub use functions::{MappedFunction, Property, PropertyReport, Verdict};
pub use structure::{AxiomReport, ClassKind, FiniteStructure, Witness};
pub use symbolic::{SymValue, SymbolicStructure};

/// Crate-wide error type.
///
/// `Hypothesis` is the one callers usually need to branch on: it means
/// the requested conclusion was never evaluated because a precondition
/// failed, which is a different outcome from a refuted conclusion.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("structural error: {0}")]
    Structure(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("hypothesis failed: {name}: {detail}")]
    Hypothesis { name: String, detail: String },

    #[error("inapplicable: {0}")]
    Inapplicable(String),

    #[error("budget exceeded: {0}")]
    Budget(String),

    #[error("bound exceeded: {0}")]
    Bound(String),

    #[error("conditioning error: {0}")]
    Conditioning(String),

    #[error("internal consistency failure: {0}")]
    Corruption(String),

    #[error("usage error: {0}")]
    Usage(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn hypothesis(name: &str, detail: impl Into<String>) -> Error {
        Error::Hypothesis {
            name: name.to_string(),
            detail: detail.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
