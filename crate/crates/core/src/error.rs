use thiserror::Error;

use crate::oracle::LawId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown attribute `{0}`")]
    UnknownAttribute(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("operands live in different soft classes")]
    ContextMismatch,
    #[error("parameter sets do not intersect")]
    EmptyParameterIntersection,
    #[error("target attribute set does not contain the soft set's domain")]
    NotASuperset,
    #[error("point map is not total: no image for element `{0}`")]
    PartialPointMap(String),
    #[error("attribute map is not total: no image for {}", .0.iter().map(|a| format!("`{a}`")).collect::<Vec<_>>().join(", "))]
    PartialAttributeMap(Vec<String>),
    #[error("context too large to enumerate: {what} has {size} members (limit {limit})")]
    BoundsExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("no total map exists into an empty {0}")]
    EmptyTarget(&'static str),
    #[error("side condition of {law} unmet: {reason}")]
    SideConditionUnmet { law: LawId, reason: &'static str },
    #[error("{law} takes {expected} soft set argument(s), got {got}")]
    ArityMismatch {
        law: LawId,
        expected: usize,
        got: usize,
    },
    #[error("{0} is not a refutation target")]
    NotARefutationTarget(LawId),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
