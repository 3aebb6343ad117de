//! Exact computation of Saito-Kurokawa Fourier coefficients of weight-2
//! rational newforms.
//!
//! The pipeline runs entirely over exact arithmetic (arbitrary-precision
//! integers and rationals; fixed-precision p-adics where weight
//! interpolation is involved):
//!
//! * [`arith`] — Kronecker/Moebius primitives, fundamental-discriminant
//!   decomposition, the divisor sets attached to half-integral matrices.
//! * [`quadform`] — binary quadratic forms of positive discriminant:
//!   reduction cycles, Heegner forms relative to a level, automorphs,
//!   genus characters.
//! * [`modsym`] — weight-2 modular symbols for Gamma_0(M): Manin
//!   presentation, Hecke/Atkin-Lehner action, rational newform slots,
//!   period pairings and twisted central L-values.
//! * [`shintani`] — half-integral-weight Fourier coefficients c_D(2)
//!   realized as genus-character cycle integrals, plus the twisted
//!   geodesic sums J(f, d, d').
//! * [`maass`] — the Maass-relation assembler: divisor sums A_T, the
//!   normalized coefficients, n_T, and coefficient providers (computed
//!   at weight 2, ingested for higher weights).
//! * [`padic`] — fixed-precision p-adic arithmetic, Iwasawa/branch
//!   logarithms, Euler stabilization factors, divided-difference
//!   weight derivatives.
//! * [`lseries`] — vanishing bookkeeping for the spinor L-function of
//!   the lift.

pub mod arith;
pub mod error;
pub mod linalg;
pub mod lseries;
pub mod maass;
pub mod modsym;
pub mod padic;
pub mod quadform;
pub mod shintani;

pub use error::Error;

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
