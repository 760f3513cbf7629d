//! Exact computation of Krasner hyperstructures and of the hyperoperation
//! induced by a coproduct on the prime spectrum of a commutative Hopf algebra
//! over a finite prime field.
//!
//! The crate is `no_std` (it needs `alloc`). Layers, bottom up:
//!
//! * [`gfarith`]: F_p, F_p[T], F_{p^k}, factorization.
//! * [`linalg`]: matrices and canonical subspaces over F_p.
//! * [`hyperkernel`]: finite hypergroups, hyperrings, quotient hyperrings.
//! * [`algkernel`]: finite-dimensional commutative algebras and their spectra.
//! * [`hopfkernel`]: Hopf structures, Hopf ideals and quotients.
//! * [`specops`]: the hyperoperation on Spec A and its law checks.
//! * [`galoisline`]: the additive and multiplicative lines over F_p, computed
//!   by definition and by Galois orbits.

#![no_std]

extern crate alloc;

pub mod algkernel;
pub mod error;
pub mod galoisline;
pub mod gfarith;
pub mod hopfkernel;
pub mod hyperkernel;
pub mod linalg;
pub mod report;
pub mod specops;

pub use error::{Error, Result};
pub use gfarith::{FpPoly, PrimeField};
pub use report::{LawReport, Verdict};
