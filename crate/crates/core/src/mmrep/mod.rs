//! The 196884-dimensional representation with packed coefficients.
//!
//! Coordinates come in seven blocks. In the logical (file) order they are
//!
//! | block | size  | basis                                   |
//! |-------|-------|-----------------------------------------|
//! | A     | 300   | `(ii)_1` then `(ij)_1`, `i < j`         |
//! | B     | 276   | `X_ij` (short index 0..276)             |
//! | C     | 276   | `X^+_ij`                                |
//! | T     | 48576 | `X^+_{o·δ}`, 64 per octad               |
//! | X     | 49152 | `X^+_{d·i}`, `24k + i`                  |
//! | Z     | 49152 | `d_k^+ ⊗ i`, `24k + i`                  |
//! | Y     | 49152 | `d_k^- ⊗ i`, `24k + i`                  |
//!
//! Blocks B, C, T and X together are the 98280 short vectors, in the order
//! of [`Qx::short_index`](crate::qx::Qx::short_index). The index `k` runs
//! over codewords with bit 5 clear, see [`code_mod_omega`].

use crate::parker::Ploop;
use crate::qx::{code_mod_omega, pair_index};

/// Dimension of the representation.
pub const DIM: usize = 196884;

/// Logical offset of each block, with `DIM` appended.
pub const BLOCK_OFS: [usize; 8] = [0, 300, 576, 852, 49428, 98580, 147732, DIM];

pub const OFS_A: usize = 0;
pub const OFS_B: usize = 300;
pub const OFS_C: usize = 576;
pub const OFS_T: usize = 852;
pub const OFS_X: usize = 49428;
pub const OFS_Z: usize = 98580;
pub const OFS_Y: usize = 147732;
/// Logical offset of short index 0.
pub const OFS_SHORT: usize = OFS_B;

/// Logical index of the `A` coordinate `(ij)_1`.
#[inline]
pub fn a_index(i: usize, j: usize) -> usize {
    if i == j {
        i
    } else {
        24 + pair_index(i, j)
    }
}

/// Write `f^±` as `(-1)^sign d_k^±`; returns `(k, sign)`.
///
/// `(Ωf)^+ = f^+` and `(Ωf)^- = -f^-`.
#[inline]
pub fn dpm_index(f: Ploop, minus: bool) -> (usize, u32) {
    let c = f.code();
    let t = ((c >> 5) & 1) as u32;
    (code_mod_omega(c), f.sign() ^ (t & minus as u32))
}

pub(crate) mod kernels;
pub mod layout;
mod monomial;
mod vector;

pub use vector::MmVector;
