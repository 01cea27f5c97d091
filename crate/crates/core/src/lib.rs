//! Quadratic sets, quantum binomial algebras and their PBW bases.
//!
//! A quadratic set `(X, r)` is a finite set with a bijection
//! `r: X × X -> X × X`. When `r` is involutive, nondegenerate and square-free
//! its orbits on `X × X` give `C(n,2)` binomial relations `xy = yz`, and the
//! resulting quadratic algebra `A(k, X, r)` is a quantum binomial algebra.
//! This crate checks the defining properties, counts orbits, computes
//! Hilbert functions and Koszul duals, decides PBW-ness for every degree
//! lexicographic order, and classifies small solutions.


pub mod classify;
pub mod cli;
pub mod error;
pub mod graphs;
pub mod harness;
pub mod io;
pub mod linalg;
pub mod orbits;
pub mod pbw;
pub mod quadratic_set;
pub mod relations;
pub mod word;

pub use error::{Error, Result};
pub use quadratic_set::QuadraticSet;
pub use relations::{Relation, RelationSet, RelationSpace};
