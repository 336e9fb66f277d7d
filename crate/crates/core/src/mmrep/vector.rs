use std::io::{Read, Write};

use rand::Rng;

use crate::error::{Error, Result};
use crate::modp::Modulus;
use crate::word::Atom;

use super::layout::Layout;
use super::{kernels, monomial, DIM};

/// A vector of the representation, packed per block.
#[derive(Clone)]
pub struct MmVector {
    m: Modulus,
    data: Vec<u64>,
}

const MAGIC: &[u8; 4] = b"MMV1";

fn block_range(start: usize, end: usize) -> (usize, usize) {
    let find = |x: usize| {
        super::BLOCK_OFS
            .iter()
            .position(|&o| o == x)
            .expect("range must start and end on block boundaries")
    };
    (find(start), find(end))
}

impl MmVector {
    pub fn zero(m: Modulus) -> MmVector {
        MmVector {
            m,
            data: vec![0; Layout::get(m).total_words()],
        }
    }

    /// A uniformly random vector.
    pub fn random<R: Rng + ?Sized>(m: Modulus, rng: &mut R) -> MmVector {
        let v: Vec<u8> = (0..DIM).map(|_| rng.gen_range(0..m.p()) as u8).collect();
        MmVector::from_bytes(m, &v)
    }

    /// Build from residues in logical order.
    pub fn from_logical(m: Modulus, values: &[u32]) -> Result<MmVector> {
        if values.len() != DIM {
            return Err(Error::LengthMismatch(DIM, values.len()));
        }
        let mut bytes = Vec::with_capacity(DIM);
        for &x in values {
            if x >= m.p() {
                return Err(Error::ValueOutOfRange { value: x, p: m.p() });
            }
            bytes.push(x as u8);
        }
        Ok(MmVector::from_bytes(m, &bytes))
    }

    /// Residues in logical order.
    pub fn to_logical(&self) -> Vec<u32> {
        self.to_bytes().into_iter().map(u32::from).collect()
    }

    /// Pack canonical residues (all `< p`) given in logical order.
    pub(crate) fn from_bytes(m: Modulus, bytes: &[u8]) -> MmVector {
        let mut v = MmVector::zero(m);
        v.store_range(bytes, 0, DIM);
        v
    }

    pub(crate) fn to_bytes(&self) -> Vec<u8> {
        self.load_range(0, DIM)
    }

    /// Canonical residues of the logical coordinates `start..end`, which
    /// must be block boundaries.
    pub(crate) fn load_range(&self, start: usize, end: usize) -> Vec<u8> {
        let (b0, b1) = block_range(start, end);
        Layout::get(self.m).unpack(&self.data, b0, b1)
    }

    /// Overwrite the logical coordinates `start..end`, which must be block
    /// boundaries.
    pub(crate) fn store_range(&mut self, bytes: &[u8], start: usize, end: usize) {
        let (b0, b1) = block_range(start, end);
        Layout::get(self.m).pack(bytes, b0, b1, &mut self.data);
    }

    pub fn modulus(&self) -> Modulus {
        self.m
    }

    pub(crate) fn data_mut(&mut self) -> &mut [u64] {
        &mut self.data
    }

    /// Coordinate `l` in logical order.
    pub fn get(&self, l: usize) -> u32 {
        assert!(l < DIM, "coordinate {l} out of range");
        let (w, s) = Layout::get(self.m).locate(l);
        self.m.canon(((self.data[w] >> s) & self.m.p() as u64) as u32)
    }

    pub fn set(&mut self, l: usize, value: u32) -> Result<()> {
        if l >= DIM {
            return Err(Error::LengthMismatch(DIM, l));
        }
        if value >= self.m.p() {
            return Err(Error::ValueOutOfRange { value, p: self.m.p() });
        }
        let lay = Layout::get(self.m);
        let p = self.m.p() as u64;
        let mut put = |(w, s): (usize, u32)| {
            self.data[w] = (self.data[w] & !(p << s)) | ((value as u64) << s);
        };
        put(lay.locate(l));
        if let Some(ws) = lay.locate_mirror(l) {
            put(ws);
        }
        Ok(())
    }

    /// `self += other`.
    pub fn add(&mut self, other: &MmVector) -> Result<()> {
        if self.m != other.m {
            return Err(Error::ModulusMismatch(self.m.p(), other.m.p()));
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = self.m.add(*a, b);
        }
        Ok(())
    }

    /// `self *= c`.
    pub fn scale(&mut self, c: u32) {
        for a in self.data.iter_mut() {
            *a = self.m.mul_scalar(*a, c);
        }
    }

    /// The invariant form `Σ w_l v_l²` with weight 2 on the off-diagonal
    /// `(ij)_1` and weight 1 elsewhere.
    pub fn norm(&self) -> u32 {
        let p = self.m.p() as u64;
        let mut s = 0u64;
        for (l, x) in self.to_bytes().into_iter().enumerate() {
            let sq = (x as u64 * x as u64) % p;
            s += if (24..300).contains(&l) { 2 * sq } else { sq };
        }
        (s % p) as u32
    }

    pub fn apply_atom(&mut self, atom: &Atom) {
        match atom {
            Atom::T(e) => kernels::tau(self, *e),
            Atom::L(e) => kernels::xi(self, *e),
            _ => monomial::apply(self, atom),
        }
    }

    pub fn apply_word(&mut self, word: &[Atom]) {
        for a in word {
            self.apply_atom(a);
        }
    }

    /// Write in the `MMV1` format.
    pub fn write_to<W: Write>(&self, mut w: W) -> Result<()> {
        let io = |e: std::io::Error| Error::BadVectorFile(e.to_string());
        w.write_all(MAGIC).map_err(io)?;
        w.write_all(&[self.m.p() as u8]).map_err(io)?;
        w.write_all(&(DIM as u32).to_le_bytes()).map_err(io)?;
        w.write_all(&self.to_bytes()).map_err(io)?;
        Ok(())
    }

    /// Read the `MMV1` format.
    pub fn read_from<R: Read>(mut r: R) -> Result<MmVector> {
        let bad = |s: &str| Error::BadVectorFile(s.to_string());
        let mut head = [0u8; 9];
        r.read_exact(&mut head).map_err(|_| bad("truncated header"))?;
        if &head[..4] != MAGIC {
            return Err(bad("missing MMV1 magic"));
        }
        let m = Modulus::new(head[4] as u32)?;
        let n = u32::from_le_bytes([head[5], head[6], head[7], head[8]]) as usize;
        if n != DIM {
            return Err(Error::LengthMismatch(DIM, n));
        }
        let mut body = vec![0u8; DIM];
        r.read_exact(&mut body).map_err(|_| bad("truncated body"))?;
        let mut rest = [0u8; 1];
        if r.read(&mut rest).map_err(|e| bad(&e.to_string()))? != 0 {
            return Err(bad("trailing data"));
        }
        if let Some(&x) = body.iter().find(|&&x| x as u32 >= m.p()) {
            return Err(Error::ValueOutOfRange { value: x as u32, p: m.p() });
        }
        Ok(MmVector::from_bytes(m, &body))
    }
}

impl PartialEq for MmVector {
    fn eq(&self, other: &MmVector) -> bool {
        self.m == other.m && self.to_bytes() == other.to_bytes()
    }
}

impl Eq for MmVector {}

impl std::fmt::Debug for MmVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let v = self.to_bytes();
        write!(f, "MmVector(p={}, A[0..4]={:?}, ..)", self.m.p(), &v[..4])
    }
}
