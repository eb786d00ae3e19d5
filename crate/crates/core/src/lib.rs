//! Exact combinatorics of spherical systems without simple spherical roots.
//!
//! The crate is `no_std` (with `alloc`). Everything is integer or rational
//! arithmetic; nothing here touches floating point.
//!
//! * [`dynkin`]: diagrams, Cartan pairings, positive roots, automorphisms
//! * [`rank_one`]: the rank-one table and the axioms (S) and (R)
//! * [`system`]: spherical systems, validation, colours and ρ
//! * [`lp`], [`hilbert`]: exact feasibility and Hilbert bases
//! * [`dictionary`]: localisation, quotients, decompositions, affinity
//! * [`connect`]: strong Δ-adjacency and component analysis
//! * [`families`], [`enumerate`]: the primitive catalog and exhaustive search
//! * [`appendix`]: symmetric spaces, nilpotent gradings, model spaces

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod appendix;
pub mod connect;
pub mod dictionary;
pub mod dynkin;
pub mod enumerate;
pub mod families;
pub mod hilbert;
pub mod lp;
pub mod rank_one;
pub mod system;

use alloc::string::String;
use core::fmt;

pub use dynkin::{Component, DynkinDiagram, Family, NodeId, NodeSet, Weight};
pub use system::{ColourMask, ColourSet, SphericalSystem, ValidationReport};

/// Faults raised by the library. Axiom failures are not faults; they are
/// reported through [`ValidationReport`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    InvalidDiagram(String),
    UnknownNode(String),
    /// A weight or node set does not fit the diagram.
    Shape(String),
    UnknownLabel(String),
    BadParameters(String),
    NotDistinguished,
    EmptyColourSet,
    InvalidSystem(String),
    /// Colours of one class disagree on ρ; only corrupted input gets here.
    InconsistentColour,
    BudgetExceeded(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidDiagram(s) => write!(f, "invalid diagram: {}", s),
            Error::UnknownNode(s) => write!(f, "unknown node: {}", s),
            Error::Shape(s) => write!(f, "shape mismatch: {}", s),
            Error::UnknownLabel(s) => write!(f, "unknown label: {}", s),
            Error::BadParameters(s) => write!(f, "inadmissible parameters: {}", s),
            Error::NotDistinguished => f.write_str("colour subset is not distinguished"),
            Error::EmptyColourSet => f.write_str("colour subset is empty"),
            Error::InvalidSystem(s) => write!(f, "not a valid spherical system: {}", s),
            Error::InconsistentColour => f.write_str("colour class with inconsistent ρ rows"),
            Error::BudgetExceeded(what) => write!(f, "search budget exceeded: {}", what),
        }
    }
}

impl Error {
    /// Stable machine-readable kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidDiagram(_) => "invalid_diagram",
            Error::UnknownNode(_) => "unknown_node",
            Error::Shape(_) => "shape",
            Error::UnknownLabel(_) => "unknown_label",
            Error::BadParameters(_) => "bad_parameters",
            Error::NotDistinguished => "not_distinguished",
            Error::EmptyColourSet => "empty_colour_set",
            Error::InvalidSystem(_) => "invalid_system",
            Error::InconsistentColour => "inconsistent_colour",
            Error::BudgetExceeded(_) => "budget_exceeded",
        }
    }
}
