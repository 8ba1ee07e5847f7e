use std::fmt;

use thiserror::Error;

use crate::lattice::Element;

/// Which partial-order axiom a relation violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderViolation {
    Reflexivity(Element),
    Antisymmetry(Element, Element),
    Transitivity(Element, Element, Element),
}

impl fmt::Display for OrderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            OrderViolation::Reflexivity(x) => write!(f, "{x} is not related to itself"),
            OrderViolation::Antisymmetry(x, y) => {
                write!(f, "{x} <= {y} and {y} <= {x} but {x} != {y}")
            }
            OrderViolation::Transitivity(x, y, z) => {
                write!(f, "{x} <= {y} <= {z} but not {x} <= {z}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(OrderViolation),
    #[error("relation is not a preorder: {0}")]
    NotAPreorder(OrderViolation),
    #[error("elements {x} and {y} have no unique {bound}")]
    NotALattice {
        x: Element,
        y: Element,
        bound: &'static str,
    },
    #[error("an order on zero elements is not a lattice")]
    EmptyLattice,
    #[error("index {index} out of range for a structure with {len} elements")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("size {requested} exceeds the limit of {limit}")]
    SizeLimitExceeded { requested: usize, limit: usize },
    #[error("table has dimension {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("multiplication is not associative: ({x}*{y})*{z} != {x}*({y}*{z})")]
    NotAssociative { x: Element, y: Element, z: Element },
    #[error("multiplication is not commutative: {x}*{y} != {y}*{x}")]
    NotCommutative { x: Element, y: Element },
    #[error("top is not a multiplicative identity: {x}*1 != {x}")]
    IdentityViolation { x: Element },
    #[error("multiplication does not distribute over joins: {x}*({y} v {z}) != {x}*{y} v {x}*{z}")]
    NotJoinDistributive { x: Element, y: Element, z: Element },
    #[error("multiplication does not preserve the empty join: {x}*0 != 0")]
    BottomNotAbsorbing { x: Element },
    #[error("lattice is not distributive: {x} ^ ({y} v {z}) != ({x} ^ {y}) v ({x} ^ {z})")]
    NotDistributive { x: Element, y: Element, z: Element },
    #[error("lattice is not modular")]
    NotModular,
    #[error("quantale is not a frame: {x}*{y} != {x} ^ {y}")]
    NotAFrame { x: Element, y: Element },
    #[error("{x} and {b} are not ordered as required ({expected})")]
    PreorderViolation {
        x: Element,
        b: Element,
        expected: &'static str,
    },
    #[error("meet of {x} and {y} is not bottom")]
    MeetNotZero { x: Element, y: Element },
    #[error("{b} is not the pseudo-complement of {a}")]
    NotPseudoComplement { a: Element, b: Element },
    #[error("element set must be nonempty")]
    EmptySet,
    #[error("exponent {value} at position {position} exceeds {max}")]
    ExponentOutOfRange {
        position: usize,
        value: u32,
        max: u32,
    },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("family of opens is not a topology: {0}")]
    NotATopology(String),
    #[error("subset {0:#b} is not an open of the topology")]
    NotAnOpen(u64),
    #[error("search exceeded its budget of {budget}")]
    SearchBudgetExceeded { budget: usize },
    #[error("corpus has no instances")]
    EmptyCorpus,
    #[error("unknown check name {0:?}")]
    UnknownCheckName(String),
    #[error("unknown search query {0:?}")]
    UnknownQuery(String),
    #[error("postcondition failed: {0}")]
    PostconditionFailed(String),
    #[error("invalid document: {0}")]
    InvalidDocument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
