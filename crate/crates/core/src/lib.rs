//! Exact evaluation and certification of the faithful `(g^2 - 1)`-dimensional
//! real representation of the hyperelliptic mapping class group of the
//! nonorientable surface `N_g`, `g >= 4`.
//!
//! The representation is assembled as `L = L1 (+) L2`:
//!
//! * `L1` (dimension `g^2 - g`) factors through the projection killing the
//!   hyperelliptic involution onto the extended mapping class group of the
//!   sphere with `g` movable punctures and one fixed puncture. It is the
//!   index-2 induced representation of a rescaled Lawrence–Krammer
//!   representation of `B_g`.
//! * `L2` (dimension `g - 1`) is a homology representation in which the
//!   hyperelliptic involution acts as `-Id`.
//!
//! Everything is computed in exact arithmetic: rationals, bivariate Laurent
//! polynomials, and certified rational intervals for irrational rescale
//! units.

pub mod algebra;
pub mod assembly;
pub mod certify;
pub mod config;
pub mod error;
pub mod garside;
pub mod homology;
pub mod induced;
pub mod lk;
pub mod model;
pub mod par;
pub mod perm;
pub mod rep;
pub mod rescale;
pub mod sample;
pub mod words;

pub use error::{Error, Result};
pub use par::Parallelism;
pub use perm::Perm;
pub use words::{parse_word, Alphabet, Family, Generator, GroupWord, PuncturePermOrient};
