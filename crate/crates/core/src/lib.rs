//! Exact root-system, Weyl-group and Kostant computations for `SL4`, and the
//! automorphic cohomology profile of `GL2'`, the inner form of `GL4` over a
//! quaternion division algebra, with coefficients in an irreducible
//! representation `E_λ`.
//!
//! Weights are stored in simple-root coordinates as exact rationals. The
//! layers build on each other:
//!
//! * [`weights`]: the A3 weight lattice, `ρ`, dominance, duality.
//! * [`weyl`]: `W(A3) ≅ S4`, reduced words, linear and dot actions, Kostant
//!   representatives.
//! * [`kostant`]: `μ_w`, `dχ`, Levi characters, Freudenthal multiplicities and
//!   the Euler-characteristic check of Kostant's theorem.
//! * [`profile`]: the cohomological unitary dual, the pole criterion and the
//!   per-degree Eisenstein and cuspidal cohomology report.
//! * [`tables`] and [`verify`]: symbolic table recovery and grid checks used
//!   by the command line tool in [`cli`].
//!
//! ```
//! use eisprofile::{profile, weights::Weight};
//!
//! let lambda = Weight::from_fundamental_ints([0, 0, 0]);
//! let report = profile::full_report(&lambda).unwrap();
//! assert_eq!(report.j_lambda, 0);
//! ```

pub mod character;
pub mod cli;
mod freudenthal;
pub mod kostant;
pub mod profile;
pub mod tables;
pub mod verify;
pub mod weights;
pub mod weyl;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("simple root index {0} is out of range 1..=3")]
    InvalidIndex(usize),
    #[error("weight {weight} is not dominant integral: <λ, α{index}∨> = {pairing}")]
    NotDominant { weight: String, index: usize, pairing: String },
    #[error("{0} is not a Kostant representative for the Levi {{α1, α3}}")]
    NotKostant(String),
    #[error("{0} is not the highest weight of a Levi module")]
    InvalidLeviWeight(String),
    #[error("evaluation point s = {0} must be positive")]
    NonPositiveS(String),
    #[error("recovered form is not affine: {0}")]
    NotAffine(String),
    #[error("{0}")]
    Parse(String),
    #[error("report invariant violated at {0}")]
    Invariant(String),
    #[error("coordinates of {0} do not fit in 64 bits")]
    Overflow(String),
}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/weights.md")]
    mod weights {}
    #[doc = include_str!("../../../book/src/weyl-group.md")]
    mod weyl_group {}
    #[doc = include_str!("../../../book/src/kostant.md")]
    mod kostant {}
    #[doc = include_str!("../../../book/src/characters.md")]
    mod characters {}
    #[doc = include_str!("../../../book/src/profile.md")]
    mod profile {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
