//! Packed kernels for the triality element `τ` and for `ξ`.

use std::sync::OnceLock;

use crate::golay;
use crate::modp::Modulus;
use crate::qx::{short_table, xi24_matrix, N_SHORT};

use super::layout::{Layout, A, B, C, T, X, Y, Z};
use super::vector::MmVector;
use super::{a_index, OFS_SHORT, OFS_Z};

/// Parity of `|S|/2` for the suboctad with index `mu`.
#[inline]
fn half_size_parity(mu: usize) -> bool {
    let w = mu.count_ones();
    ((w + (w & 1)) / 2) & 1 == 1
}

pub(crate) fn tau(v: &mut MmVector, e: u8) {
    for stage in 0..3 {
        tau_stage(v, e, stage);
    }
}

/// One independent part of `τ^e`: 0 is A, B, C; 1 is X, Z, Y; 2 is T.
pub(crate) fn tau_stage(v: &mut MmVector, e: u8, stage: u8) {
    let m = v.modulus();
    let lay = Layout::get(m);
    let data = v.data_mut();
    let inv = e == 2;
    match stage {
        0 => tau_abc(m, lay, data, inv),
        1 => tau_xzy(lay, data, inv),
        _ => tau_t(m, lay, data, inv),
    }
}

fn tau_abc(m: Modulus, lay: &Layout, data: &mut [u64], inv: bool) {
    let wa = lay.wpr[A];
    for i in 0..24 {
        let (ra, rb, rc) = (lay.row(A, i), lay.row(B, i), lay.row(C, i));
        for w in 0..wa {
            let mask = lay.row_mask(A)[w];
            let dm = lay.diag[i * wa + w];
            let (a, b, c) = (data[ra + w], data[rb + w], data[rc + w]);
            let u = m.halve(m.add(b, c));
            let d = m.halve(m.sub(b, c));
            let (a2, b2, c2) = if inv {
                (d, m.add(a, u), m.sub(a, u))
            } else {
                (u, m.add(a, d), m.sub(d, a))
            };
            data[ra + w] = ((a2 & !dm) | (a & dm)) & mask;
            data[rb + w] = b2 & !dm & mask;
            data[rc + w] = c2 & !dm & mask;
        }
    }
}

fn tau_xzy(lay: &Layout, data: &mut [u64], inv: bool) {
    let w64 = lay.wpr[X];
    for r in 0..768 {
        let (rx, rz, ry) = (lay.row(X, r), lay.row(Z, r), lay.row(Y, r));
        for w in 0..w64 {
            let s1 = lay.s1[r * w64 + w];
            let sp = lay.sp[r * w64 + w];
            let (x, z, y) = (data[rx + w], data[rz + w], data[ry + w]);
            if inv {
                data[rz + w] = x ^ sp;
                data[rx + w] = y ^ s1;
                data[ry + w] = z ^ s1 ^ sp;
            } else {
                data[ry + w] = x ^ s1;
                data[rz + w] = y ^ s1 ^ sp;
                data[rx + w] = z ^ sp;
            }
        }
    }
}

fn tau_t(m: Modulus, lay: &Layout, data: &mut [u64], inv: bool) {
    // T: τ = y_τ x_τ and τ² = x_τ y_τ, where x_τ is the sign (-1)^{|S|/2}
    // and y_τ the Hadamard transform in γ-coordinates, scaled by 1/8.
    let wt = lay.wpr[T];
    let valid = m.valid_mask();
    let base = lay.off[T];
    let mut col = [0u64; 64];
    for w in 0..wt {
        for (mu, c) in col.iter_mut().enumerate() {
            let x = data[base + mu * wt + w];
            *c = if inv && half_size_parity(mu) { x ^ valid } else { x };
        }
        let mut tmp: [u64; 64] = std::array::from_fn(|mu| col[golay::twist6(mu as u8) as usize]);
        hadamard(m, &mut tmp, 3);
        let mask = lay.row_mask(T)[w];
        for (nu, &x) in tmp.iter().enumerate() {
            let x = if !inv && half_size_parity(nu) { x ^ valid } else { x };
            data[base + nu * wt + w] = x & mask;
        }
    }
}

/// In-place Walsh–Hadamard transform on `len = 2^n` words; the first
/// `halvings` layers also divide by 2.
#[inline]
fn hadamard(m: Modulus, v: &mut [u64], halvings: u32) {
    let mut bit = 1;
    let mut layer = 0;
    while bit < v.len() {
        for i in 0..v.len() {
            if i & bit == 0 {
                let (a, b) = m.butterfly(v[i], v[i | bit], layer < halvings);
                v[i] = a;
                v[i | bit] = b;
            }
        }
        bit <<= 1;
        layer += 1;
    }
}

/// Signed destinations of the short vectors under `ξ^e`: `index | sign << 31`.
fn xi_short_table(e: u8) -> &'static [u32] {
    static TABLES: [OnceLock<Vec<u32>>; 2] = [OnceLock::new(), OnceLock::new()];
    TABLES[(e - 1) as usize].get_or_init(|| {
        short_table()
            .iter()
            .map(|&r| {
                let (n, s) = crate::qx::conj_by_xi(r, e as u32)
                    .short_index()
                    .expect("ξ preserves short vectors");
                n as u32 | s << 31
            })
            .collect()
    })
}

pub(crate) fn xi(v: &mut MmVector, e: u8) {
    for stage in 0..3 {
        xi_stage(v, e, stage);
    }
}

/// One independent part of `ξ^e`: 0 is A, 1 the short vectors, 2 is Z and Y.
pub(crate) fn xi_stage(v: &mut MmVector, e: u8, stage: u8) {
    match stage {
        0 => xi_a(v, e),
        1 => xi_short(v, e),
        _ => loop_part(v, e),
    }
}

/// A: S ↦ ξ_24ᵀ S ξ_24.
fn xi_a(v: &mut MmVector, e: u8) {
    let m = v.modulus();
    let p = m.p();
    let old = v.load_range(0, 300);
    let mat = xi24_matrix(e as u32);
    let s = |i: usize, j: usize| old[a_index(i, j)] as i64;
    let h = m.half_unit() as i64;
    let quarter = h * h % p as i64;
    let mut new = vec![0u8; 300];
    for i in 0..24 {
        for j in i..24 {
            let (bi, bj) = (i & !3, j & !3);
            let mut acc = 0i64;
            for a in bi..bi + 4 {
                for b in bj..bj + 4 {
                    acc += (mat[a][i] * mat[b][j]) as i64 * s(a, b);
                }
            }
            new[a_index(i, j)] = m.reduce(m.reduce(acc) as i64 * quarter) as u8;
        }
    }
    v.store_range(&new, 0, 300);
}

/// Short vectors: a signed permutation.
fn xi_short(v: &mut MmVector, e: u8) {
    let p = v.modulus().p();
    let table = xi_short_table(e);
    let old = v.load_range(OFS_SHORT, OFS_Z);
    let mut new = vec![0u8; N_SHORT];
    for (n, &t) in table.iter().enumerate() {
        let x = old[n];
        new[(t & 0x7fff_ffff) as usize] = if t >> 31 == 1 && x != 0 { p as u8 - x } else { x };
    }
    v.store_range(&new, OFS_SHORT, OFS_Z);
}

/// `ξ` on `4096_x ⊗ 24_x`.
///
/// In the basis `(g_0^κ d h)^[σ]`, with `d` an even product of
/// `g_1..g_5` and `h` coloured, `ξ` fixes `h` and acts on `(κ, d, σ)` by a
/// 16-point Hadamard transform in `d` combined with a permutation of
/// `(κ, σ)`. Our basis uses `d_k` with grey bit 5 clear, which differs
/// from that basis by a factor `Ω` (and a sign on `d^-`). All lanes of a
/// row share the coloured part `h`, so only rows are mixed.
fn loop_part(v: &mut MmVector, e: u8) {
    let m = v.modulus();
    let lay = Layout::get(m);
    let data = v.data_mut();
    let valid = m.valid_mask();
    let w64 = lay.wpr[X];
    let blocks = [Z, Y];

    // Row of (κ, a) in our basis and whether σ = - picks up a sign.
    let place = |kappa: usize, a: usize| -> (usize, bool) {
        if a.count_ones() & 1 == 0 {
            (kappa | a << 1, false)
        } else {
            ((kappa ^ 1) | (a ^ 0xf) << 1, true)
        }
    };
    let grey = |a: usize| ((a << 1) | ((a.count_ones() as usize & 1) << 5)) as u8;
    let twist = |a: usize| if a.count_ones() & 1 == 1 { a ^ 0xf } else { a };

    let mut src = [[0u64; 32]; 2];
    let mut dst = [[0u64; 32]; 2];
    for i in 0..24 {
        for w in 0..w64 {
            for (sg, &b) in blocks.iter().enumerate() {
                for q in 0..32 {
                    src[sg][q] = data[lay.row(b, 24 * q + i) + w];
                }
            }
            for (kappa2, sigma2) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                let (kappa, sigma) = if e == 1 {
                    (kappa2 ^ sigma2 ^ 1, kappa2)
                } else {
                    (sigma2, kappa2 ^ sigma2 ^ 1)
                };
                let x: [u64; 16] = std::array::from_fn(|a| {
                    let (q, flip) = place(kappa, a);
                    let mut val = src[sigma][q];
                    if flip && sigma == 1 {
                        val ^= valid;
                    }
                    if e == 2 && golay::w2_grey(grey(a)) == 1 {
                        val ^= valid;
                    }
                    val
                });
                let mut t: [u64; 16] = std::array::from_fn(|a| x[twist(a)]);
                hadamard(m, &mut t, 2);
                for (b, &y) in t.iter().enumerate() {
                    let neg = if e == 1 { golay::w2_grey(grey(b)) == 0 } else { true };
                    let (q, flip) = place(kappa2, b);
                    let neg = neg ^ (flip && sigma2 == 1);
                    dst[sigma2][q] = if neg { y ^ valid } else { y };
                }
            }
            for (sg, &b) in blocks.iter().enumerate() {
                for q in 0..32 {
                    data[lay.row(b, 24 * q + i) + w] = dst[sg][q];
                }
            }
        }
    }

    // ξ_24 on the point index: ½·M per column of the MOG.
    for &b in &blocks {
        for q in 0..32 {
            for col in 0..6 {
                let r0 = lay.row(b, 24 * q + 4 * col);
                for w in 0..w64 {
                    let vals: [u64; 4] = std::array::from_fn(|r| data[r0 + r * w64 + w]);
                    let out = xi4(m, vals, e);
                    for r in 0..4 {
                        data[r0 + r * w64 + w] = out[r];
                    }
                }
            }
        }
    }
    lay.clean(data, &blocks);
}

/// `v ↦ v·(½M)` for exponent 1 and `v ↦ v·(½Mᵀ)` for exponent 2.
#[inline]
fn xi4(m: Modulus, v: [u64; 4], e: u8) -> [u64; 4] {
    let valid = m.valid_mask();
    if e == 1 {
        let mut w = [v[0] ^ valid, v[2], v[1], v[3]];
        hadamard(m, &mut w, 1);
        w
    } else {
        let mut h = v;
        hadamard(m, &mut h, 1);
        [h[0] ^ valid, h[2], h[1], h[3]]
    }
}
