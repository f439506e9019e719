//! Exact computations with Aut(F_n) acting on tensor powers of cocommutative
//! Hopf algebras, and the symmetric-function machinery used to decompose the
//! resulting GL(V)-modules.
//!
//! Everything is exact over ℚ. The crate is `no_std` and needs only `alloc`.

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod rational;
pub mod linalg;
pub mod hopf;
pub mod freegroup;
pub mod action;
pub mod pbw;
pub mod symfunc;
pub mod nilrep;
pub mod cokertab;

pub use rational::Rational;
