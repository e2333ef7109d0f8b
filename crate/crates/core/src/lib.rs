// SPDX-License-Identifier: Apache-2.0

//! Stable models of propositional disjunctive programs with abstract
//! constraint atoms (c-atoms).
//!
//! A c-atom `(A_d, A_c)` is kept in explicit power-set form ([`CAtom`]) and
//! compiled to its abstract representation `A*` ([`abstraction`]), a
//! family of prefixed power sets `W ⊎ V`. Stability is decided by a
//! generalized Gelfond-Lifschitz reduct ([`reduct`]), checked against a
//! conditional-satisfaction fixpoint ([`fixpoint`]) and, on programs without
//! c-atoms, against the textbook reduct ([`ordinary`]).
//!
//! ```
//! use catom::frontend::parse_program;
//! use catom::reduct::stable_models;
//!
//! let p = parse_program("p.\na :- [p, b : {p}].\nb :- [p, a : {p}].\n").unwrap();
//! let models = stable_models(&p).unwrap();
//! assert_eq!(models.len(), 2);
//! ```

pub mod abstraction;
pub mod analysis;
pub mod cli;
pub mod error;
pub mod fixpoint;
pub mod frontend;
pub mod golden;
pub mod ordinary;
pub mod program;
pub mod reduct;
mod sat;
pub mod semantics;

pub use abstraction::{build_abstract, expand, AbstractCAtom, PrefixedPowerSet};
pub use error::{Error, Result};
pub use frontend::{parse_catom, parse_program};
pub use program::{Atom, AtomSet, CAtom, HeadElement, Interpretation, Literal, Program, Rule};
pub use reduct::{gl_reduct, is_stable, stable_models};
