//! Rhombic alternative tableaux and the bijections around them.
//!
//! The crate is organised bottom-up:
//!
//! * [`shapes`]: shape words and the maximal rhombic tiling of their region.
//! * [`tableaux`]: arrow fillings of a tiling, their statistics and the
//!   structural maps (extension, flattening, splitting, straightening).
//! * [`assemblee`]: assemblées of permutations, signed permutations, the
//!   arc diagrams of signed permutations and their statistics.
//! * [`bijections`]: the insertion, zigzag, fusion and corner bijections.
//! * [`laguerre`]: marked Laguerre histories and their bijection with signed
//!   permutations.
//! * [`verify`]: polynomial identities checked by exhaustive enumeration.
//! * [`render`]: SVG, TikZ and ASCII output.
//! * [`cli`]: the command line front end used by the `rhombic` binary.

pub mod assemblee;
pub mod bijections;
pub mod cli;
pub mod laguerre;
pub mod poly;
pub mod render;
pub mod shapes;
pub mod tableaux;
pub mod verify;
