//! Exact computations with triangular automorphisms of the polynomial
//! algebra `P_n = Q[x1, ..., xn]` and the free associative algebra
//! `A_n = Q<x1, ..., xn>`.
//!
//! The crate is organized bottom-up:
//!
//! * [`polynomial`], [`monomial`], [`parse`]: sparse exact arithmetic in both
//!   algebras, substitution and abelianization `A_n -> P_n`.
//! * [`endomorphism`]: automorphisms as image lists, with composition,
//!   inversion, powers, commutators and classification.
//! * [`structure`]: the antidifference solver and the constructive structure
//!   of the unitriangular group (layer factorization, commutator witnesses).
//! * [`presentation`]: the `phi(alpha, f)`/`tau_ks` generators and relation
//!   checks.
//! * [`analysis`]: two-generator subgroups, free-product certificates,
//!   element orders, diagonalization and IA levels.
//! * [`cli`]: the `triaut` command line front end.
//!
//! Composition is always left to right: `x^(phi psi) = (x^phi)^psi`.

pub mod analysis;
pub mod cli;
pub mod document;
pub mod endomorphism;
pub mod error;
pub mod group_word;
pub mod monomial;
pub mod parse;
pub mod polynomial;
pub mod presentation;
pub mod random;
pub mod scalar;
pub mod structure;

pub use endomorphism::{Class, Elementary, Endomorphism, TriangularShape};
pub use error::{Error, ParseError, Result};
pub use monomial::{Monomial, SyllableProfile};
pub use parse::parse_polynomial;
pub use polynomial::{AlgebraMode, Budget, Degree, Polynomial};
pub use scalar::Scalar;
