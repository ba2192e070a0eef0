//! Construction, validation and analysis of finite residuated lattices and
//! hoops.
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: validated operation tables, isomorphism, canonical forms
//! * [`term`]: terms, (quasi-)equations and exhaustive satisfaction
//! * [`builders`]: Łukasiewicz and Gödel chains, ordinal sums, rotations
//! * [`congruence`]: conjugates, congruence filters, quotients
//! * [`properties`]: per-algebra decision procedures
//! * [`decomposition`]: sum-irreducible decomposition of chains
//! * [`classops`]: subalgebras, homomorphic images, variety comparison
//! * [`enumerate`]: exhaustive generation up to isomorphism
//!
//! Heavy loops go through [`par`], which uses rayon when the `parallel`
//! feature is enabled.

pub mod algebra;
pub mod builders;
pub mod classops;
pub mod congruence;
pub mod decomposition;
pub mod enumerate;
pub mod par;
pub mod properties;
pub mod term;

pub use algebra::{Elem, ElemSet, FinAlg, RawAlgebra};
