//! Finite lattices and quantales, and the theory of mu-elements over them.

pub mod builders;
pub mod document;
pub mod enumerate;
pub mod error;
pub mod hasse;
pub mod lattice;
pub mod mu;
pub mod quantale;
pub mod relation;
pub mod suite;

pub use error::{Error, OrderViolation, Result};
pub use lattice::{build_lattice, Element, FiniteLattice, LatticeHom, SublatticeView, ViewKind};
pub use quantale::{build_quantale, find_injective_homs, frame_from, Quantale, QuantaleHom};
pub use relation::Relation;
