//! Exact computation with generalized Schur operators.
//!
//! A graded lattice carries two families of linear maps, `U_i` raising rank
//! by `i` and `D_i` lowering it by `i`, subject to the commutation relation
//! `D(t')U(t) = a(tt')U(t)D(t')` for a scalar sequence `{a_m}`. Pairing
//! products of the generating series against basis elements yields the
//! generalized Schur polynomials computed here.
//!
//! * [`polyring`] sparse multivariate polynomials over the rationals
//! * [`gmodule`] basis elements, formal vectors, series application, adjoints
//! * [`instances`] Young's lattice, shifted shapes, planar binary trees, monomials
//! * [`identities`] weighted complete symmetric polynomials and identity checks
//! * [`oracle`] brute-force tableau and labeling generating functions
//! * [`cli`] the command-line front end

pub mod cli;
pub mod gmodule;
pub mod identities;
pub mod instances;
pub mod oracle;
pub mod polyring;

pub use gmodule::{ASequence, BasisElement, FormalVector, Lattice};
pub use polyring::{MultiPoly, Rational};
