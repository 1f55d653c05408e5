//! Exact computation with finite commutative rings and finite modules:
//! construction trees (residue rings, products, quotients, idealizations),
//! ideal and submodule lattices, localization, and the classification of
//! submodules as prime / primary / S-prime / S-primary with witness
//! extraction. The `verify` module runs each structural law of the library as
//! an executable property over exhaustively generated small instances.
//!
//! Everything is exact integer arithmetic; all values are immutable after
//! construction and safe to share across threads.

pub mod caps;
pub mod classify;
pub mod construct;
pub mod error;
pub mod ideal;
pub mod localize;
pub mod module;
pub mod ring;
pub mod set;
pub mod value;
pub mod verify;

#[cfg(test)]
pub(crate) mod testutil;

pub use caps::Caps;
pub use classify::{classify, ClassificationReport, SReport, VariantVerdicts};
pub use error::{Error, MultClosedError, Result};
pub use ideal::{enumerate_ideals, enumerate_mult_closed, ideal_spectrum, Ideal, MultClosedSet, Spectrum};
pub use localize::{localize_module, localize_ring, saturate, LocalizedModule, LocalizedRing};
pub use module::{
    annihilator, enumerate_homs, enumerate_submodules, ideal_times_module, is_multiplication,
    multiplication_counterexample, p_cyclic_witness, prime_submodules, rad_submodule,
    submodule_product, torsion_part, Module, ModuleExpr, ModuleHom, ModuleKind, Submodule,
};
pub use ring::{Ring, RingExpr, RingKind};
pub use set::ElemSet;
pub use value::Value;
