//! Where each logical coordinate lives in the packed word array.
//!
//! Every block is a matrix of rows, each row a run of words:
//!
//! * A, B, C: row `i`, lane `j` (both halves of the symmetric matrix are stored),
//! * T: row `μ` (suboctad), lane `o` (octad),
//! * X, Z, Y: row `24·(k mod 32) + i`, lane `k / 32`.
//!
//! With this shape the triality element combines A, B and C (and X, Y and Z)
//! lane by lane, and the Hadamard-type parts of `τ` and `ξ` only ever mix
//! whole rows.

use std::sync::OnceLock;

use crate::golay;
use crate::modp::{Modulus, MODULI};
use crate::parker::p_of;
use crate::qx::{code_from_k, pair_from_index};

use super::{BLOCK_OFS, DIM};

pub const A: usize = 0;
pub const B: usize = 1;
pub const C: usize = 2;
pub const T: usize = 3;
pub const X: usize = 4;
pub const Z: usize = 5;
pub const Y: usize = 6;

const LANES: [usize; 7] = [24, 24, 24, 759, 64, 64, 64];
const ROWS: [usize; 7] = [24, 24, 24, 64, 768, 768, 768];

/// Packed geometry for one modulus, with the sign masks used by `τ`.
pub struct Layout {
    pub m: Modulus,
    /// Words per row, by block.
    pub wpr: [usize; 7],
    /// Word offset of each block, with the total appended.
    pub off: [usize; 8],
    /// Logical index to `(word << 5) | lane`.
    pos: Vec<u32>,
    /// Second copy of an off-diagonal A, B or C entry, or `u32::MAX`.
    mirror: Vec<u32>,
    /// Valid lanes of each word of a row, by block.
    row_mask: [Vec<u64>; 7],
    /// Lane `i` of row `i` in A, B and C.
    pub diag: Vec<u64>,
    /// Lanes of row `24q + i` of X, Z, Y where `⟨d_k, i⟩ = 1`.
    pub s1: Vec<u64>,
    /// Lanes of row `24q + i` of X, Z, Y where `P(d_k) = 1`.
    pub sp: Vec<u64>,
}

impl Layout {
    /// The shared layout for `m`.
    pub fn get(m: Modulus) -> &'static Layout {
        static CELLS: [OnceLock<Layout>; 6] = [
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
            OnceLock::new(),
        ];
        let slot = MODULI.iter().position(|&p| p == m.p()).expect("valid modulus");
        CELLS[slot].get_or_init(|| Layout::build(m))
    }

    fn build(m: Modulus) -> Layout {
        let lpw = m.lanes_per_word() as usize;
        let wpr: [usize; 7] = std::array::from_fn(|b| m.words_for(LANES[b]));
        let mut off = [0usize; 8];
        for b in 0..7 {
            off[b + 1] = off[b] + ROWS[b] * wpr[b];
        }
        let row_mask: [Vec<u64>; 7] = std::array::from_fn(|b| {
            (0..wpr[b])
                .map(|w| {
                    let n = (LANES[b] - w * lpw).min(lpw);
                    m.lane_mask((1u64 << n) - 1)
                })
                .collect()
        });
        let at = |b: usize, row: usize, lane: usize| -> u32 {
            let word = off[b] + row * wpr[b] + lane / lpw;
            ((word << 5) | (lane % lpw)) as u32
        };
        let mut pos = vec![0u32; DIM];
        let mut mirror = vec![u32::MAX; BLOCK_OFS[T]];
        for i in 0..24 {
            pos[i] = at(A, i, i);
        }
        for n in 0..276 {
            let (i, j) = pair_from_index(n);
            for (b, l) in [(A, 24 + n), (B, BLOCK_OFS[B] + n), (C, BLOCK_OFS[C] + n)] {
                pos[l] = at(b, i, j);
                mirror[l] = at(b, j, i);
            }
        }
        for o in 0..golay::N_OCTADS {
            for mu in 0..64 {
                pos[BLOCK_OFS[T] + 64 * o + mu] = at(T, mu, o);
            }
        }
        for b in [X, Z, Y] {
            for k in 0..2048 {
                for i in 0..24 {
                    pos[BLOCK_OFS[b] + 24 * k + i] = at(b, 24 * (k & 31) + i, k >> 5);
                }
            }
        }

        let lane_bit = |lane: usize| m.lane_mask(1u64 << (lane % lpw));
        let mut diag = vec![0u64; 24 * wpr[A]];
        for i in 0..24 {
            diag[i * wpr[A] + i / lpw] = lane_bit(i);
        }
        let w64 = wpr[X];
        let mut s1 = vec![0u64; 768 * w64];
        let mut sp = vec![0u64; 768 * w64];
        for k in 0..2048 {
            let c = code_from_k(k);
            let lane = k >> 5;
            for i in 0..24 {
                let r = 24 * (k & 31) + i;
                let idx = r * w64 + lane / lpw;
                if golay::scalar(c, golay::point_cocode(i)) == 1 {
                    s1[idx] |= lane_bit(lane);
                }
                if p_of(c) == 1 {
                    sp[idx] |= lane_bit(lane);
                }
            }
        }
        Layout {
            m,
            wpr,
            off,
            pos,
            mirror,
            row_mask,
            diag,
            s1,
            sp,
        }
    }

    pub fn total_words(&self) -> usize {
        self.off[7]
    }

    /// Word offset of `row` in block `b`.
    #[inline]
    pub fn row(&self, b: usize, row: usize) -> usize {
        self.off[b] + row * self.wpr[b]
    }

    /// Valid-lane masks for the words of one row of block `b`.
    #[inline]
    pub fn row_mask(&self, b: usize) -> &[u64] {
        &self.row_mask[b]
    }

    /// `(word, shift)` of a logical coordinate.
    #[inline]
    pub fn locate(&self, l: usize) -> (usize, u32) {
        let x = self.pos[l];
        ((x >> 5) as usize, (x & 31) * self.m.k())
    }

    /// `(word, shift)` of the mirror copy, if the coordinate has one.
    #[inline]
    pub fn locate_mirror(&self, l: usize) -> Option<(usize, u32)> {
        match self.mirror.get(l) {
            Some(&x) if x != u32::MAX => Some(((x >> 5) as usize, (x & 31) * self.m.k())),
            _ => None,
        }
    }

    /// Visit every `(word index, lane count, logical index of lane 0, lane
    /// stride)` run of block `b`; B and C diagonals get `usize::MAX`.
    #[inline]
    fn for_runs(&self, b: usize, mut f: impl FnMut(usize, usize, &dyn Fn(usize) -> usize)) {
        let lpw = self.m.lanes_per_word() as usize;
        for row in 0..ROWS[b] {
            let r0 = self.row(b, row);
            for w in 0..self.wpr[b] {
                let lanes = (LANES[b] - w * lpw).min(lpw);
                let first = w * lpw;
                match b {
                    A => f(r0 + w, lanes, &|j| super::a_index(row, first + j)),
                    B | C => f(r0 + w, lanes, &|j| {
                        let lane = first + j;
                        if lane == row {
                            usize::MAX
                        } else {
                            BLOCK_OFS[b] + crate::qx::pair_index(row, lane)
                        }
                    }),
                    T => {
                        let l0 = BLOCK_OFS[T] + 64 * first + row;
                        f(r0 + w, lanes, &|j| l0 + 64 * j)
                    }
                    _ => {
                        let l0 = BLOCK_OFS[b] + 768 * first + row;
                        f(r0 + w, lanes, &|j| l0 + 768 * j)
                    }
                }
            }
        }
    }

    /// Canonical residues of blocks `b0..b1`, in logical order starting at
    /// `BLOCK_OFS[b0]`.
    pub fn unpack(&self, data: &[u64], b0: usize, b1: usize) -> Vec<u8> {
        let base = BLOCK_OFS[b0];
        let mut out = vec![0u8; BLOCK_OFS[b1] - base];
        let (k, p) = (self.m.k(), self.m.p() as u64);
        for b in b0..b1 {
            if b >= T {
                // Fixed stride: avoid the indirect index function.
                let stride = if b == T { 64 } else { 768 };
                let lpw = self.m.lanes_per_word() as usize;
                for row in 0..ROWS[b] {
                    let r0 = self.row(b, row);
                    for w in 0..self.wpr[b] {
                        let mut word = data[r0 + w];
                        let lanes = (LANES[b] - w * lpw).min(lpw);
                        let mut l = BLOCK_OFS[b] + stride * w * lpw + row - base;
                        for _ in 0..lanes {
                            let x = word & p;
                            word >>= k;
                            out[l] = if x == p { 0 } else { x as u8 };
                            l += stride;
                        }
                    }
                }
                continue;
            }
            self.for_runs(b, |w, lanes, idx| {
                let mut word = data[w];
                for j in 0..lanes {
                    let x = word & p;
                    word >>= k;
                    let l = idx(j);
                    if l != usize::MAX {
                        out[l - base] = if x == p { 0 } else { x as u8 };
                    }
                }
            });
        }
        out
    }

    /// Overwrite blocks `b0..b1` from canonical residues in logical order.
    pub fn pack(&self, bytes: &[u8], b0: usize, b1: usize, data: &mut [u64]) {
        let base = BLOCK_OFS[b0];
        let k = self.m.k();
        for b in b0..b1 {
            if b >= T {
                let stride = if b == T { 64 } else { 768 };
                let lpw = self.m.lanes_per_word() as usize;
                for row in 0..ROWS[b] {
                    let r0 = self.row(b, row);
                    for w in 0..self.wpr[b] {
                        let lanes = (LANES[b] - w * lpw).min(lpw);
                        let l0 = BLOCK_OFS[b] + stride * w * lpw + row - base;
                        let mut word = 0u64;
                        for j in (0..lanes).rev() {
                            word = (word << k) | bytes[l0 + stride * j] as u64;
                        }
                        data[r0 + w] = word;
                    }
                }
                continue;
            }
            self.for_runs(b, |w, lanes, idx| {
                let mut word = 0u64;
                for j in (0..lanes).rev() {
                    word <<= k;
                    let l = idx(j);
                    if l != usize::MAX {
                        word |= bytes[l - base] as u64;
                    }
                }
                data[w] = word;
            });
        }
    }

    /// Clear the padding lanes of every row of the given blocks.
    pub fn clean(&self, data: &mut [u64], blocks: &[usize]) {
        for &b in blocks {
            let w = self.wpr[b];
            let last = self.row_mask[b][w - 1];
            if last == self.m.valid_mask() {
                continue;
            }
            for r in 0..ROWS[b] {
                data[self.row(b, r) + w - 1] &= last;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_are_distinct_and_inside_blocks() {
        for m in Modulus::all() {
            let lay = Layout::get(m);
            let mut seen = std::collections::HashSet::new();
            for l in 0..DIM {
                let (w, s) = lay.locate(l);
                assert!(seen.insert((w, s)), "p={} l={l}", m.p());
                let b = BLOCK_OFS.iter().rposition(|&o| o <= l).unwrap();
                assert!(lay.off[b] <= w && w < lay.off[b + 1]);
                if let Some(ms) = lay.locate_mirror(l) {
                    assert!(seen.insert(ms));
                }
            }
            // Only the diagonals of B and C are left over in the padded shape.
            let lanes: usize = (0..7).map(|b| LANES[b] * ROWS[b]).sum();
            assert_eq!(seen.len() + 48, lanes);
        }
    }
}
