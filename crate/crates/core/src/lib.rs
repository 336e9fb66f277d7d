//! Conway's 196884-dimensional representation of the Monster group with
//! coefficients modulo `p = 2^k - 1`.
//!
//! The crate is layered bottom up:
//!
//! * [`modp`] packs residues mod `p` into 64-bit words.
//! * [`golay`] builds the Golay code, its cocode and the grey/coloured split.
//! * [`parker`] is the Parker loop with its cocycle.
//! * [`autpl`] holds standard automorphisms of the Parker loop.
//! * [`qx`] is the extraspecial group `Q_x`, the Leech lattice mod 2 and
//!   the short vectors.
//! * [`mmrep`] is the representation itself, with [`reference`] as a slow
//!   coordinate-wise oracle.
//! * [`verify`] bundles the invariant checks into named suites and
//!   [`bench`] times the generators.

pub mod autpl;
pub mod bench;
pub mod error;
pub mod golay;
pub mod mmrep;
pub mod modp;
pub mod parker;
pub mod qx;
pub mod reference;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
