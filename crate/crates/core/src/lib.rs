//! Hyperideal theory for commutative multiplicative hyperrings with absorbing
//! zero, over three parametric families of hyperrings.

pub mod arith;
pub mod claims;
pub mod cli;
pub mod classify;
pub mod error;
pub mod ideal;
pub mod laws;
pub mod morphism;
pub mod ring;
pub mod set;
pub mod trace;
pub mod verdict;

pub use error::{Error, Result};
pub use ideal::{Ideal, IdealSpec, RadicalResult};
pub use ring::{AxiomReport, Element, Family, Ring, RingSpec};
pub use set::ElementSet;
pub use verdict::{Factored, Predicate, Verdict, Witness};
pub use classify::{classify, classify_all, minimal_primes, recheck, Classification};
pub use trace::ProductTrace;
pub use morphism::{quotient, GoodHom, HomSpec, Quotient};
pub use laws::{find_separating_examples, list_laws, run_all, run_law, Grid, Law, LawReport};
