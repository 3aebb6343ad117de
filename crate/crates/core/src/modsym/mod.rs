//! Weight-2 modular symbols for Gamma_0(M).
//!
//! The Manin presentation, Hecke and Atkin-Lehner action, rational newform
//! slots, exact period pairings {r, s}, and twisted central L-values. All
//! linear algebra is exact over Q.

pub mod hecke;
pub mod newform;
pub mod p1;
pub mod paths;
pub mod space;

pub use newform::{NewformSelector, NewformSlot, DEFAULT_HECKE_BOUND};
pub use p1::MatI;
pub use space::{cusps_equivalent, Cusp, ModularSymbolSpace, DEFAULT_LEVEL_BOUND};
