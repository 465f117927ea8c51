//! Bitableaux, the row-marked Knuth–Robinson–Schensted correspondence, and the ideals
//! `J_S = J_{s_1} ⋯ J_{s_v}` generated by products of row-initial minors of a generic
//! matrix, together with desk-scale verification sweeps for their Gröbner bases, standard
//! bases, primary decompositions, toric presentations and K-polynomials.

pub mod error;
pub mod exec;
pub mod grading;
pub mod ideals;
pub mod krs;
pub mod ktheory;
pub mod linalg;
pub mod polyring;
pub mod rees;
pub mod report;
pub mod tableaux;

pub use error::{Error, Result};
pub use exec::Exec;
pub use grading::Bidegree;
pub use polyring::{Monomial, Polynomial, Rational};
pub use tableaux::{Bitableau, Minor, Shape};
