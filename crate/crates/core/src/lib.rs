//! Exact Clifford-algebra arithmetic in signatures Cl(p,q) with p+q ≤ 8,
//! together with the machinery built on top of it: primitive idempotents and
//! minimal left ideals, matrix spinor representations, quaternion-type tensor
//! decompositions with their restricted spinor fields, the induced Dirac
//! operator on immersed surfaces, and a generalized Weierstrass representation
//! that generates conformally immersed surfaces in R^{4,0}, R^{2,2} and
//! R^{1,3} numerically.
//!
//! The algebraic layers (`algebra` through `spinor`) work over exact scalars —
//! rationals, complex rationals, and double numbers a+eb with e² = +1 — so
//! every identity they claim is checked exactly. The numerical layers (`grid`,
//! `zs`, `weierstrass`) use double precision with explicit tolerances and
//! report their residuals instead of assuming them.

pub mod algebra;
pub mod classify;
pub mod dirac;
pub mod error;
pub mod export;
pub mod grid;
pub mod ideals;
pub mod mat;
pub mod multivector;
pub mod repr;
pub mod spinor;
pub mod verify;
pub mod weierstrass;
pub mod zeta;
pub mod zs;
pub mod scalar;

pub use error::{Error, Result};
