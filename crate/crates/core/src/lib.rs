//! Extension-based semantics for finite abstract argumentation frameworks.
//!
//! A [`Framework`] is a finite set of arguments with an attack relation.
//! The crate computes the neutrality and defence functions over sets of
//! arguments ([`operators`]), enumerates conflict-free, naive,
//! self-defending, admissible, complete, preferred, stable and grounded
//! extensions ([`semantics`]), answers credulous and sceptical
//! justification queries, and classifies frameworks structurally
//! ([`analysis`]). [`oracle`] holds an independent brute-force
//! implementation of every semantics for cross-checking.
//!
//! ```
//! use argsolve::{fixtures, semantics::{enumerate, EnumerationOptions, SemanticsKind}};
//! use argsolve::io::emit_extensions;
//!
//! let af = fixtures::floating_reinstatement();
//! let pref = enumerate(&af, SemanticsKind::Preferred, &EnumerationOptions::default()).unwrap();
//! assert_eq!(emit_extensions(&af, &pref.extensions), "[a,e]\n[b,e]\n");
//! ```

pub mod analysis;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod framework;
pub mod io;
pub mod operators;
pub mod oracle;
pub mod semantics;

pub use error::{Error, Result};
pub use framework::{ArgSet, ArgumentId, Framework};
pub use semantics::{EnumerationOptions, Extension, SemanticsKind};
