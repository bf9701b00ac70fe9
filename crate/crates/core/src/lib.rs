//! Exact characters of affine Demazure modules.
//!
//! Characters live in the group algebra of affine weights modulo `delta`.
//! Demazure characters are computed by applying Demazure operators along a
//! reduced word of a translation in the extended affine Weyl group, restricted
//! to the finite-type subalgebra and decomposed into irreducibles. The
//! [`theorems`] module checks tensor product factorizations of these
//! characters and related identities instance by instance.

pub mod branching;
pub mod cartan;
pub mod charring;
pub mod cli;
pub mod coeff;
pub mod demazure;
pub mod error;
pub mod frame;
pub mod roots;
pub mod theorems;
pub mod weight;
pub mod weylgroup;

pub use cartan::{AlgebraLabel, CartanData};
pub use charring::{Character, FiniteCharacter};
pub use coeff::Coeff;
pub use error::{Error, Result};
pub use frame::Frame;
pub use weight::{AffineWeight, FiniteWeight};
pub use weylgroup::{ExtAffineElement, ReducedWord};
