//! Exact computation of root data for Bernstein-Sato-type invariants:
//! monomial ideals via Newton polyhedra, weighted-homogeneous spectra, and
//! central hyperplane arrangements.

pub mod aomoto;
pub mod arrangement;
pub mod error;
pub mod fracpoly;
pub mod lattice;
pub mod matrix;
pub mod monomial;
pub mod newton;
pub mod rational;
pub mod spectrum;
pub mod rootset;

pub use error::{Error, Result};
pub use rational::{rat, Rat};
pub use rootset::{RootMultiset, RootSet};
