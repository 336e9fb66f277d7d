//! Packed arithmetic on residues modulo `p = 2^k - 1`.
//!
//! A 64-bit word holds `floor(64 / k)` lanes of `k` bits each; lane `j`
//! occupies bits `j*k .. (j+1)*k`. The all-ones lane value `p` is a second
//! encoding of zero, so negation is a bitwise complement, halving is a
//! right rotation inside the lane, and the carry out of the top bit of a
//! lane is added back into its bottom bit. Unused high bits of a word are
//! always zero.

use crate::error::{Error, Result};

/// The supported moduli.
pub const MODULI: [u32; 6] = [3, 7, 15, 31, 127, 255];

/// A modulus `p = 2^k - 1` together with the lane masks used by the kernels.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Modulus {
    p: u32,
    k: u32,
    lanes: u32,
    /// All bits of all valid lanes.
    valid: u64,
    /// Bit 0 of every valid lane.
    lsb: u64,
    /// Bit `k-1` of every valid lane.
    msb: u64,
}

impl Modulus {
    pub fn new(p: u32) -> Result<Self> {
        if !MODULI.contains(&p) {
            return Err(Error::InvalidModulus(p));
        }
        let k = (p + 1).trailing_zeros();
        let lanes = 64 / k;
        let mut lsb = 0u64;
        for j in 0..lanes {
            lsb |= 1u64 << (j * k);
        }
        let valid = if lanes * k == 64 {
            u64::MAX
        } else {
            (1u64 << (lanes * k)) - 1
        };
        Ok(Modulus {
            p,
            k,
            lanes,
            valid,
            lsb,
            msb: lsb << (k - 1),
        })
    }

    /// All six supported moduli, smallest first.
    pub fn all() -> impl Iterator<Item = Modulus> {
        MODULI.iter().map(|&p| Modulus::new(p).expect("listed modulus"))
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Number of residues stored in one 64-bit word.
    #[inline]
    pub fn lanes_per_word(&self) -> u32 {
        self.lanes
    }

    /// Number of words needed for `count` residues.
    #[inline]
    pub fn words_for(&self, count: usize) -> usize {
        count.div_ceil(self.lanes as usize)
    }

    /// Mask covering every bit of every valid lane.
    #[inline]
    pub fn valid_mask(&self) -> u64 {
        self.valid
    }

    /// Lane-wise sum with end-around carry.
    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let low = self.valid ^ self.msb;
        let s_low = (a & low) + (b & low);
        let x = a ^ b;
        let s = s_low ^ (x & self.msb);
        let cin = s_low & self.msb;
        let carry = ((a & b) | (x & cin)) & self.msb;
        s + (carry >> (self.k - 1))
    }

    /// Lane-wise negation (complement inside valid lanes).
    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        a ^ self.valid
    }

    /// Lane-wise difference `a - b`.
    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        self.add(a, b ^ self.valid)
    }

    /// Lane-wise halving: rotate each lane right by one bit.
    #[inline]
    pub fn halve(&self, a: u64) -> u64 {
        ((a >> 1) & (self.valid ^ self.msb)) | ((a & self.lsb) << (self.k - 1))
    }

    /// Lane-wise doubling: rotate each lane left by one bit.
    #[inline]
    pub fn double(&self, a: u64) -> u64 {
        ((a << 1) & (self.valid ^ self.lsb)) | ((a & self.msb) >> (self.k - 1))
    }

    /// Hadamard step: `(c(a+b), c(a-b))` with `c = 1/2` if `half` else `c = 1`.
    #[inline]
    pub fn butterfly(&self, a: u64, b: u64, half: bool) -> (u64, u64) {
        let s = self.add(a, b);
        let d = self.sub(a, b);
        if half {
            (self.halve(s), self.halve(d))
        } else {
            (s, d)
        }
    }

    /// Negate exactly the lanes selected by `mask` (a union of whole lanes).
    #[inline]
    pub fn neg_masked(&self, a: u64, mask: u64) -> u64 {
        a ^ mask
    }

    /// Broadcast a lane pattern: all-ones in lane `j` iff bit `j` of `bits` is set.
    pub fn lane_mask(&self, bits: u64) -> u64 {
        let lane = (1u64 << self.k) - 1;
        let mut m = 0u64;
        for j in 0..self.lanes {
            if (bits >> j) & 1 != 0 {
                m |= lane << (j * self.k);
            }
        }
        m
    }

    /// Reduce an arbitrary integer into `0..p`.
    #[inline]
    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    /// Map a lane value (possibly the alias `p`) to its canonical residue.
    #[inline]
    pub fn canon(&self, lane: u32) -> u32 {
        if lane == self.p {
            0
        } else {
            lane
        }
    }

    /// Multiplicative inverse of 2 modulo `p`.
    #[inline]
    pub fn half_unit(&self) -> u32 {
        (self.p + 1) / 2
    }

    /// Extract lane `j` of word `w` (not canonicalised).
    #[inline]
    pub fn get_lane(&self, w: u64, j: u32) -> u32 {
        ((w >> (j * self.k)) & self.p as u64) as u32
    }

    /// Multiply every lane of `a` by the scalar `c` (double-and-add).
    pub fn mul_scalar(&self, a: u64, c: u32) -> u64 {
        let c = c % self.p;
        let mut acc = 0u64;
        let mut pow = a;
        let mut c = c;
        while c != 0 {
            if c & 1 != 0 {
                acc = self.add(acc, pow);
            }
            pow = self.double(pow);
            c >>= 1;
        }
        acc
    }
}

/// A sequence of residues packed into 64-bit words.
#[derive(Clone, Debug)]
pub struct PackedField {
    modulus: Modulus,
    count: usize,
    words: Vec<u64>,
}

impl PackedField {
    /// Pack values `0..p-1`. The value `p` itself is rejected; pass 0 instead.
    pub fn pack(values: &[u32], m: Modulus) -> Result<Self> {
        let mut words = vec![0u64; m.words_for(values.len())];
        let lpw = m.lanes_per_word() as usize;
        for (idx, &v) in values.iter().enumerate() {
            if v >= m.p() {
                return Err(Error::ValueOutOfRange { value: v, p: m.p() });
            }
            words[idx / lpw] |= (v as u64) << ((idx % lpw) as u32 * m.k());
        }
        Ok(PackedField {
            modulus: m,
            count: values.len(),
            words,
        })
    }

    /// Read the residues back, mapping the alias `p` to 0.
    pub fn unpack(&self) -> Vec<u32> {
        let lpw = self.modulus.lanes_per_word() as usize;
        (0..self.count)
            .map(|idx| {
                let lane = self
                    .modulus
                    .get_lane(self.words[idx / lpw], (idx % lpw) as u32);
                self.modulus.canon(lane)
            })
            .collect()
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.count
    }

    pub fn is_empty(&self) -> bool {
        self.count == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    fn check(&self, other: &PackedField) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(self.modulus.p(), other.modulus.p()));
        }
        if self.count != other.count {
            return Err(Error::LengthMismatch(self.count, other.count));
        }
        Ok(())
    }

    fn zip_map(&self, other: &PackedField, f: impl Fn(u64, u64) -> u64) -> PackedField {
        PackedField {
            modulus: self.modulus,
            count: self.count,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    fn map(&self, f: impl Fn(u64) -> u64) -> PackedField {
        PackedField {
            modulus: self.modulus,
            count: self.count,
            words: self.words.iter().map(|&a| f(a)).collect(),
        }
    }

    /// Mask of the valid lanes of word `i`, excluding lanes past `count`.
    fn used_mask(&self, i: usize) -> u64 {
        let m = &self.modulus;
        let lpw = m.lanes_per_word() as usize;
        let used = (self.count - i * lpw).min(lpw) as u32;
        if used == m.lanes_per_word() {
            m.valid_mask()
        } else {
            (1u64 << (used * m.k())) - 1
        }
    }

    pub fn add(&self, other: &PackedField) -> Result<PackedField> {
        self.check(other)?;
        let m = self.modulus;
        Ok(self.zip_map(other, |a, b| m.add(a, b)))
    }

    pub fn neg(&self) -> PackedField {
        let mut out = self.map(|a| a);
        for i in 0..out.words.len() {
            out.words[i] ^= self.used_mask(i);
        }
        out
    }

    pub fn halve(&self) -> PackedField {
        let m = self.modulus;
        self.map(|a| m.halve(a))
    }

    pub fn butterfly(
        &self,
        other: &PackedField,
        half: bool,
    ) -> Result<(PackedField, PackedField)> {
        self.check(other)?;
        let m = self.modulus;
        let s = self.zip_map(other, |a, b| m.butterfly(a, b, half).0);
        // Lanes past `count` stay zero because 0 - 0 = 0 needs no complement.
        let mut d = self.zip_map(other, |a, b| m.butterfly(a, b, half).1);
        for i in 0..d.words.len() {
            d.words[i] &= self.used_mask(i) | !m.valid_mask();
            d.words[i] &= m.valid_mask();
        }
        Ok((s, d))
    }

    /// Equality of the represented residues (the alias `p` equals 0).
    pub fn equals(&self, other: &PackedField) -> bool {
        self.modulus == other.modulus && self.count == other.count && self.unpack() == other.unpack()
    }
}
