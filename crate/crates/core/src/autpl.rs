//! Standard automorphisms of the Parker loop.
//!
//! An automorphism is stored as `δ·[π]`: a permutation `π` of the 24 points
//! lying in `M_24`, a cocode element `δ`, and the quadratic form `q` of the
//! lift `[π]` that fixes every `(b_i, 0)`. It maps
//! `(d, λ) ↦ (d^π, λ + ⟨d, δ⟩ + q(d))`.

use std::fmt;

use crate::error::{Error, Result};
use crate::golay::{self, Code, Cocode, Vec24};
use crate::parker::{theta2, Ploop};

/// A permutation of the 24 points: `images[i]` is the image of point `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Perm24(pub [u8; 24]);

impl Perm24 {
    pub fn identity() -> Perm24 {
        Perm24(std::array::from_fn(|i| i as u8))
    }

    /// Check that the images form a permutation of `0..24`.
    pub fn new(images: [u8; 24]) -> Result<Perm24> {
        let mut seen = 0u32;
        for &x in &images {
            if x >= 24 {
                return Err(Error::InvalidPermutation(images.to_vec()));
            }
            seen |= 1 << x;
        }
        if seen != 0xffffff {
            return Err(Error::InvalidPermutation(images.to_vec()));
        }
        Ok(Perm24(images))
    }

    /// Parse a slice of images.
    pub fn from_slice(images: &[u8]) -> Result<Perm24> {
        let arr: [u8; 24] = images
            .try_into()
            .map_err(|_| Error::InvalidPermutation(images.to_vec()))?;
        Perm24::new(arr)
    }

    #[inline]
    pub fn apply_point(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// Image of a set of points.
    pub fn apply_vec(&self, v: Vec24) -> Vec24 {
        let mut r = 0;
        let mut w = v;
        while w != 0 {
            let i = w.trailing_zeros() as usize;
            r |= 1 << self.0[i];
            w &= w - 1;
        }
        r
    }

    /// First `self`, then `other`.
    pub fn then(&self, other: &Perm24) -> Perm24 {
        Perm24(std::array::from_fn(|i| other.0[self.0[i] as usize]))
    }

    pub fn inverse(&self) -> Perm24 {
        let mut r = [0u8; 24];
        for (i, &x) in self.0.iter().enumerate() {
            r[x as usize] = i as u8;
        }
        Perm24(r)
    }

    /// Whether the permutation maps the Golay code onto itself.
    pub fn in_m24(&self) -> bool {
        golay::basis().iter().all(|&b| golay::is_codeword(self.apply_vec(b)))
    }
}

impl fmt::Debug for Perm24 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{:?}", self.0)
    }
}

/// A few elements of `M_24`, used to generate random elements for tests.
pub const M24_SAMPLES: [[u8; 24]; 4] = [
    [13, 23, 0, 9, 11, 18, 10, 5, 15, 12, 16, 7, 3, 6, 19, 1, 20, 17, 22, 4, 14, 8, 2, 21],
    [23, 14, 21, 11, 12, 18, 16, 9, 17, 22, 5, 0, 6, 4, 15, 8, 2, 7, 19, 20, 13, 10, 3, 1],
    [22, 8, 9, 0, 16, 6, 10, 13, 5, 23, 3, 7, 11, 18, 14, 4, 21, 1, 19, 17, 15, 20, 12, 2],
    [12, 22, 3, 18, 13, 20, 17, 2, 23, 21, 5, 10, 14, 15, 9, 7, 16, 19, 4, 11, 0, 1, 6, 8],
];

/// A standard automorphism `δ·[π]` of the Parker loop.
#[derive(Clone, PartialEq, Eq)]
pub struct StdAut {
    perm: Perm24,
    diag: Cocode,
    /// `q_[π]` as a 4096-bit table.
    q: [u64; 64],
    /// Images of the basis codewords, in code coordinates.
    code_img: [Code; 12],
    /// Images of the unit cocode vectors.
    cocode_img: [Cocode; 12],
}

impl StdAut {
    pub fn identity() -> StdAut {
        StdAut::from_perm(Perm24::identity()).expect("identity is in M_24")
    }

    /// The lift `[π]` fixing every `(b_i, 0)`.
    pub fn from_perm(perm: Perm24) -> Result<StdAut> {
        if !perm.in_m24() {
            return Err(Error::NotInM24(perm.0.to_vec()));
        }
        let basis = golay::basis();
        let code_img: [Code; 12] =
            std::array::from_fn(|i| golay::compress(perm.apply_vec(basis[i])).expect("checked"));
        let cocode_img: [Cocode; 12] = std::array::from_fn(|k| {
            golay::syndrome(perm.apply_vec(golay::lightest_rep(1 << k)))
        });
        let mut aut = StdAut {
            perm,
            diag: 0,
            q: [0; 64],
            code_img,
            cocode_img,
        };
        aut.q = aut.build_q();
        Ok(aut)
    }

    /// Fill in `q` from the basis recursion
    /// `q(d + b_i) = q(d) + θ(d^π, b_i^π) + θ(d, b_i)` with `q(b_i) = 0`.
    fn build_q(&self) -> [u64; 64] {
        let mut q = [0u64; 64];
        for c in 1..4096u16 {
            let top = 15 - c.leading_zeros() as usize;
            let rest = c ^ (1 << top);
            let bit = q_bit(&q, rest)
                ^ theta2(self.image_code(rest), self.code_img[top])
                ^ theta2(rest, 1 << top);
            q[(c >> 6) as usize] |= (bit as u64) << (c & 63);
        }
        q
    }

    /// The diagonal automorphism `d ↦ d·(-1)^{⟨d,δ⟩}`.
    pub fn from_cocode(delta: Cocode) -> StdAut {
        let mut a = StdAut::identity();
        a.diag = delta & 0xfff;
        a
    }

    /// `δ·[π]` for a permutation and a diagonal part.
    pub fn new(delta: Cocode, perm: Perm24) -> Result<StdAut> {
        let mut a = StdAut::from_perm(perm)?;
        a.diag = delta & 0xfff;
        Ok(a)
    }

    pub fn perm(&self) -> &Perm24 {
        &self.perm
    }

    pub fn diag(&self) -> Cocode {
        self.diag
    }

    /// `q_[π](d)`.
    #[inline]
    pub fn q(&self, d: Code) -> u32 {
        q_bit(&self.q, d)
    }

    /// `d^π` in code coordinates.
    #[inline]
    pub fn image_code(&self, d: Code) -> Code {
        let mut r = 0;
        let mut w = d & 0xfff;
        while w != 0 {
            r ^= self.code_img[w.trailing_zeros() as usize];
            w &= w - 1;
        }
        r
    }

    /// `δ^π` for a cocode element.
    #[inline]
    pub fn image_cocode(&self, d: Cocode) -> Cocode {
        let mut r = 0;
        let mut w = d & 0xfff;
        while w != 0 {
            r ^= self.cocode_img[w.trailing_zeros() as usize];
            w &= w - 1;
        }
        r
    }

    /// Image of a loop element.
    #[inline]
    pub fn apply(&self, a: Ploop) -> Ploop {
        let d = a.code();
        let s = a.sign() ^ golay::scalar(d, self.diag) ^ self.q(d);
        Ploop::new(self.image_code(d), s)
    }

    /// The automorphism "first `self`, then `other`".
    ///
    /// With `self = δ·[π]` and `other = δ′·[π′]` the product is
    /// `(δ + δ′^{π⁻¹} + ϑ)·[ππ′]`, where `⟨b_i, ϑ⟩ = q_[π′](b_i^π)`.
    pub fn compose(&self, other: &StdAut) -> StdAut {
        let perm = self.perm.then(&other.perm);
        let mut r = StdAut::from_perm(perm).expect("M_24 is closed");
        let mut delta = self.diag;
        for (i, &bi) in self.code_img.iter().enumerate() {
            let bit = golay::scalar(bi, other.diag) ^ other.q(bi);
            delta ^= (bit as Cocode) << i;
        }
        r.diag = delta;
        r
    }

    /// 0 if the automorphism fixes `Ω`, 1 if it maps `Ω` to `-Ω`.
    pub fn parity(&self) -> u32 {
        self.apply(Ploop::OMEGA).sign()
    }
}

#[inline]
fn q_bit(q: &[u64; 64], d: Code) -> u32 {
    ((q[(d >> 6) as usize & 63] >> (d & 63)) & 1) as u32
}

impl fmt::Debug for StdAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{:03x}*{:?}", self.diag, self.perm)
    }
}
