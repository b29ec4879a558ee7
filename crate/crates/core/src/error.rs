//! Crate-wide error type.

use thiserror::Error;

use crate::diagram::DiagramError;
use crate::fatgraph::FatgraphError;
use crate::graded::GradedError;
use crate::invariants::InvariantsError;
use crate::slice::SliceError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Fatgraph(#[from] FatgraphError),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Invariants(#[from] InvariantsError),
    #[error(transparent)]
    Slice(#[from] SliceError),
    #[error("{0}")]
    Input(String),
}

impl Error {
    /// Short machine-readable name of the error variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Diagram(e) => match e {
                DiagramError::MalformedToken(_) => "MalformedToken",
                DiagramError::OccurrenceCount { .. } => "OccurrenceCount",
                DiagramError::FlagConflict(_) => "FlagConflict",
                DiagramError::SignConflict(_) => "SignConflict",
                DiagramError::InapplicableMove(_) => "InapplicableMove",
                DiagramError::BadSignDomain { .. } => "BadSignDomain",
            },
            Error::Fatgraph(e)
            | Error::Invariants(InvariantsError::Fatgraph(e))
            | Error::Slice(SliceError::Fatgraph(e)) => match e {
                FatgraphError::Malformed(_) => "Malformed",
                FatgraphError::OddEuler => "OddEuler",
                FatgraphError::Disconnected => "Disconnected",
                FatgraphError::PathNotOnGraph => "PathNotOnGraph",
                FatgraphError::DoesNotLift(_) => "DoesNotLift",
            },
            Error::Graded(e) => match e {
                GradedError::NotSkew => "NotSkew",
                GradedError::NotNormal(_) => "NotNormal",
                GradedError::NotANormal(_) => "NotANormal",
                GradedError::WrongRing => "WrongRing",
                GradedError::RingMismatch => "RingMismatch",
                GradedError::SizeCap { .. } => "SizeCap",
                GradedError::Malformed(_) => "MalformedMatrix",
            },
            Error::Invariants(InvariantsError::ResourceLimit { .. }) => "ResourceLimit",
            Error::Slice(SliceError::BadModulus(_)) => "BadModulus",
            Error::Slice(SliceError::SizeCap { .. }) => "SizeCap",
            Error::Slice(SliceError::SearchLimit { .. }) => "SearchLimit",
            Error::Input(_) => "Input",
        }
    }
}
