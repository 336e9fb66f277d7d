//! A slow, coordinate-by-coordinate implementation of the generators.
//!
//! Every action here is written straight from its definition on basis
//! vectors, with no packing and no precomputed tables beyond the short
//! vector list. The short block is moved by conjugation in `Q_x` followed
//! by [`Qx::short_index`]. It serves as an oracle for [`crate::mmrep`] and
//! as the scalar baseline in benchmarks.

use crate::autpl::StdAut;
use crate::error::{Error, Result};
use crate::golay::{self, OMEGA};
use crate::mmrep::{a_index, dpm_index, DIM, OFS_A, OFS_SHORT, OFS_T, OFS_X, OFS_Y, OFS_Z};
use crate::modp::Modulus;
use crate::parker::{p_of, Ploop};
use crate::qx::{code_from_k, conj_by_gen, conj_by_xi, pair_from_index, xi24_matrix, NGen, Qx, N_SHORT};
use crate::word::Atom;

/// A vector of the representation as plain residues in logical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefVector {
    m: Modulus,
    v: Vec<u32>,
}

impl RefVector {
    pub fn zero(m: Modulus) -> RefVector {
        RefVector { m, v: vec![0; DIM] }
    }

    /// Wrap residues given in logical order.
    pub fn from_values(m: Modulus, v: Vec<u32>) -> Result<RefVector> {
        if v.len() != DIM {
            return Err(Error::LengthMismatch(DIM, v.len()));
        }
        if let Some(&bad) = v.iter().find(|&&x| x >= m.p()) {
            return Err(Error::ValueOutOfRange { value: bad, p: m.p() });
        }
        Ok(RefVector { m, v })
    }

    pub fn modulus(&self) -> Modulus {
        self.m
    }

    pub fn values(&self) -> &[u32] {
        &self.v
    }

    /// The invariant quadratic form, with weight 2 on the `(ij)_1`, `i ≠ j`.
    pub fn norm(&self) -> u32 {
        let p = self.m.p() as u64;
        let mut s = 0u64;
        for (l, &x) in self.v.iter().enumerate() {
            let w = if (24..300).contains(&l) { 2 } else { 1 };
            s = (s + w * (x as u64 * x as u64 % p)) % p;
        }
        s as u32
    }

    pub fn apply_word(&mut self, word: &[Atom]) {
        for a in word {
            self.apply_atom(a);
        }
    }

    pub fn apply_atom(&mut self, atom: &Atom) {
        match atom {
            Atom::X(e) => {
                let e = *e;
                self.monomial(
                    |i| (i, 0),
                    |f, minus| (e.inv() * f, minus),
                    &NGen::X(e),
                )
            }
            Atom::Y(e) => {
                let e = *e;
                let ec = e.code();
                self.monomial(
                    |i| (i, golay::scalar(ec, golay::point_cocode(i))),
                    |f, minus| (if minus { e.inv() * f * e } else { f * e }, minus),
                    &NGen::Y(e),
                )
            }
            Atom::Z(e) => {
                let e = *e;
                let ec = e.code();
                self.monomial(
                    |i| (i, golay::scalar(ec, golay::point_cocode(i))),
                    |f, minus| (if minus { f * e } else { e.inv() * f * e }, minus),
                    &NGen::Z(e),
                )
            }
            Atom::D(d) => self.automorphism(&StdAut::from_cocode(*d)),
            Atom::P(a) => self.automorphism(a),
            Atom::T(e) => self.tau(*e),
            Atom::L(e) => self.xi(*e),
        }
    }

    fn automorphism(&mut self, a: &StdAut) {
        let odd = a.parity() == 1;
        self.monomial(
            |i| (a.perm().apply_point(i), 0),
            |f, minus| (a.apply(f), minus ^ odd),
            &NGen::Aut(Box::new(a.clone())),
        )
    }

    fn neg(&self, x: u32) -> u32 {
        neg_mod(self.m.p(), x)
    }

    /// Apply a monomial generator given by its action on the 24 points,
    /// on the loop part of `4096_x` and by conjugation on `Q_x`.
    fn monomial(
        &mut self,
        point: impl Fn(usize) -> (usize, u32),
        ploop: impl Fn(Ploop, bool) -> (Ploop, bool),
        g: &NGen,
    ) {
        let old = self.v.clone();
        let put = |dst: &mut Vec<u32>, l: usize, x: u32, s: u32| {
            dst[l] = if s & 1 == 1 { self.neg(x) } else { x };
        };
        let mut new = vec![0u32; DIM];
        for i in 0..24 {
            for j in i..24 {
                let (i2, si) = point(i);
                let (j2, sj) = point(j);
                put(&mut new, OFS_A + a_index(i2, j2), old[OFS_A + a_index(i, j)], si ^ sj);
            }
        }
        for n in 0..N_SHORT {
            let r = Qx::from_short_index(n).expect("index in range");
            let (n2, s) = conj_by_gen(r, g).short_index().expect("conjugates of short elements are short");
            put(&mut new, OFS_SHORT + n2, old[OFS_SHORT + n], s);
        }
        for (minus, ofs) in [(false, OFS_Z), (true, OFS_Y)] {
            for k in 0..2048 {
                let f = Ploop::new(code_from_k(k), 0);
                let (f2, minus2) = ploop(f, minus);
                let (k2, sf) = dpm_index(f2, minus2);
                let ofs2 = if minus2 { OFS_Y } else { OFS_Z };
                for i in 0..24 {
                    let (i2, si) = point(i);
                    put(&mut new, ofs2 + 24 * k2 + i2, old[ofs + 24 * k + i], sf ^ si);
                }
            }
        }
        self.v = new;
    }

    fn tau(&mut self, e: u8) {
        let m = self.m;
        let h = m.half_unit() as i64;
        let red = |x: i64| m.reduce(x);
        let old = self.v.clone();
        let inv2 = e == 2;
        for n in 0..276 {
            let (i, j) = pair_from_index(n);
            let la = OFS_A + a_index(i, j);
            let (lb, lc) = (OFS_SHORT + n, OFS_SHORT + 276 + n);
            let (a, b, c) = (old[la] as i64, old[lb] as i64, old[lc] as i64);
            // Images of the basis vectors (ij)_1, X_ij, X^+_ij as (a, b, c) triples.
            let (ia, ib, ic): ([i64; 3], [i64; 3], [i64; 3]) = if !inv2 {
                ([0, 1, -1], [h, h, h], [h, -h, -h])
            } else {
                ([0, 1, 1], [h, h, -h], [-h, h, -h])
            };
            for t in 0..3 {
                let val = red(a * ia[t] + b * ib[t] + c * ic[t]);
                self.v[[la, lb, lc][t]] = val;
            }
        }
        for k in 0..2048 {
            let c = code_from_k(k);
            let sp = p_of(c);
            for i in 0..24 {
                let s1 = golay::scalar(c, golay::point_cocode(i));
                let (lx, lz, ly) = (OFS_X + 24 * k + i, OFS_Z + 24 * k + i, OFS_Y + 24 * k + i);
                let pp = m.p();
                let sg = |x: u32, s: u32| if s == 1 { neg_mod(pp, x) } else { x };
                if !inv2 {
                    self.v[ly] = sg(old[lx], s1);
                    self.v[lz] = sg(old[ly], s1 ^ sp);
                    self.v[lx] = sg(old[lz], sp);
                } else {
                    self.v[lz] = sg(old[lx], sp);
                    self.v[lx] = sg(old[ly], s1);
                    self.v[ly] = sg(old[lz], s1 ^ sp);
                }
            }
        }
        let inv8 = (h * h % m.p() as i64) * h % m.p() as i64;
        for o in 0..golay::N_OCTADS {
            let base = OFS_T + 64 * o;
            let half_size = |mu: usize| (golay::suboctad_set(o, mu).count_ones() / 2) & 1;
            let mut col: Vec<i64> = (0..64).map(|mu| old[base + mu] as i64).collect();
            if inv2 {
                for (mu, x) in col.iter_mut().enumerate() {
                    if half_size(mu) == 1 {
                        *x = -*x;
                    }
                }
            }
            for nu in 0..64 {
                let mut s = 0i64;
                for (mu, &x) in col.iter().enumerate() {
                    let sign = (golay::twist6(mu as u8) & nu as u8).count_ones() & 1;
                    s += if sign == 1 { -x } else { x };
                }
                let mut val = red(red(s) as i64 * inv8);
                if !inv2 && half_size(nu) == 1 {
                    val = self.neg(val);
                }
                self.v[base + nu] = val;
            }
        }
    }

    fn xi(&mut self, e: u8) {
        let m = self.m;
        let p = m.p() as i64;
        let h = m.half_unit() as i64;
        let quarter = h * h % p;
        let mat = xi24_matrix(e as u32);
        let old = self.v.clone();

        // A: S ↦ Mᵀ S M with M = ½ mat.
        let s = |i: usize, j: usize| old[OFS_A + a_index(i, j)] as i64;
        for i in 0..24 {
            for j in i..24 {
                let mut acc = 0i64;
                for a in 0..24 {
                    if mat[a][i] == 0 {
                        continue;
                    }
                    for b in 0..24 {
                        acc += (mat[a][i] * mat[b][j]) as i64 * s(a, b);
                    }
                }
                self.v[OFS_A + a_index(i, j)] = m.reduce(m.reduce(acc) as i64 * quarter);
            }
        }

        for n in 0..N_SHORT {
            let r = Qx::from_short_index(n).expect("index in range");
            let (n2, sg) = conj_by_xi(r, e as u32).short_index().expect("short");
            let x = old[OFS_SHORT + n];
            self.v[OFS_SHORT + n2] = if sg == 1 { self.neg(x) } else { x };
        }

        // 4096 ⊗ 24 in the basis (g_0^κ d h)^[σ], d even over g_1..g_5.
        let mut acc = vec![0i64; 2 * 2048 * 24];
        let idx = |minus: bool, k: usize, i: usize| (minus as usize) * 49152 + 24 * k + i;
        for minus in [false, true] {
            let ofs = if minus { OFS_Y } else { OFS_Z };
            for k in 0..2048 {
                let c = code_from_k(k);
                // Label in the ξ basis: the representative whose grey bits 1..5 have even weight.
                let (cp, s_in) = if (c & 0x3e).count_ones() & 1 == 1 {
                    (c ^ OMEGA, minus as u32)
                } else {
                    (c, 0)
                };
                let kappa = (cp & 1) as u32;
                let d = (cp & 0x3e) as u8;
                let hc = cp & 0xfc0;
                let sigma = minus as u32;
                let (kappa2, sigma2) = if e == 1 {
                    (sigma, kappa ^ sigma ^ 1)
                } else {
                    (kappa ^ sigma ^ 1, kappa)
                };
                for ebits in 0..32u8 {
                    let ev = ebits << 1;
                    if ev.count_ones() & 1 == 1 {
                        continue;
                    }
                    let w2 = if e == 1 { golay::w2_grey(ev) } else { golay::w2_grey(d) };
                    let sgn = golay::bilinear_grey(d, ev) ^ w2 ^ 1 ^ s_in;
                    let target = Ploop::new(hc | ev as u16 | kappa2 as u16, 0);
                    let (k2, s_out) = dpm_index(target, sigma2 == 1);
                    let sgn = sgn ^ s_out;
                    for i in 0..24 {
                        let x = old[ofs + 24 * k + i] as i64;
                        let x = if sgn == 1 { -x } else { x };
                        let col = i & !3;
                        for j in col..col + 4 {
                            acc[idx(sigma2 == 1, k2, j)] += x * mat[i][j] as i64;
                        }
                    }
                }
            }
        }
        // Factor ¼ from the sum and ½ from ξ_24.
        let eighth = quarter * h % p;
        for minus in [false, true] {
            let ofs = if minus { OFS_Y } else { OFS_Z };
            for t in 0..49152 {
                self.v[ofs + t] = m.reduce(m.reduce(acc[idx(minus, 0, 0) + t]) as i64 * eighth);
            }
        }
    }
}

#[inline]
fn neg_mod(p: u32, x: u32) -> u32 {
    if x == 0 {
        0
    } else {
        p - x
    }
}
