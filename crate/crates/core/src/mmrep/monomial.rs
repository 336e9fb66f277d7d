//! Generators of `N_x0` that act monomially: `x_e`, `y_e`, `z_e` and the
//! standard automorphisms `δ·[π]`.
//!
//! Each one is applied to the unpacked logical vector as a signed
//! permutation. The maps are worked out block by block from the structure
//! of the short vectors, so no general classification is needed except on
//! the 552 entries of B and C.

use crate::autpl::StdAut;
use crate::golay;
use crate::parker::{a_of, Ploop};
use crate::qx::{code_from_k, code_mod_omega, conj_by_gen, short_table, NGen, Qx, OFS_T as SH_T, OFS_X as SH_X};
use crate::word::Atom;

use super::vector::MmVector;
use super::{a_index, dpm_index, DIM, OFS_SHORT, OFS_Y, OFS_Z};

struct Out<'a> {
    new: &'a mut [u8],
    p: u8,
}

impl Out<'_> {
    #[inline]
    fn put(&mut self, dst: usize, x: u8, sign: u32) {
        self.new[dst] = if sign & 1 == 1 && x != 0 { self.p - x } else { x };
    }
}

pub(crate) fn apply(v: &mut MmVector, atom: &Atom) {
    let m = v.modulus();
    let old = v.to_bytes();
    let mut new = vec![0u8; DIM];
    let mut out = Out {
        new: &mut new,
        p: m.p() as u8,
    };
    match atom {
        Atom::X(e) => {
            out.new[..OFS_SHORT].copy_from_slice(&old[..OFS_SHORT]);
            out.new[OFS_SHORT..OFS_Z].copy_from_slice(&old[OFS_SHORT..OFS_Z]);
            x_signs(&mut out, *e);
            let ei = e.inv();
            loop_part(&old, &mut out, |f, minus| (ei * f, minus), &[(0, 0); 24], true);
        }
        Atom::Y(e) => {
            let signs = point_signs(*e);
            a_part(&old, &mut out, &signs);
            y_short(&old, &mut out, *e);
            let (e, ei) = (*e, e.inv());
            loop_part(
                &old,
                &mut out,
                |f, minus| (if minus { ei * f * e } else { f * e }, minus),
                &signs,
                false,
            );
        }
        Atom::Z(e) => {
            // z_e = y_{ē} x_{ē} on the short part.
            let signs = point_signs(*e);
            a_part(&old, &mut out, &signs);
            let (e, ei) = (*e, e.inv());
            y_short(&old, &mut out, ei);
            x_signs(&mut out, ei);
            loop_part(
                &old,
                &mut out,
                |f, minus| (if minus { f * e } else { ei * f * e }, minus),
                &signs,
                false,
            );
        }
        Atom::D(d) => automorphism(&old, &mut out, &StdAut::from_cocode(*d)),
        Atom::P(a) => automorphism(&old, &mut out, a),
        Atom::T(_) | Atom::L(_) => unreachable!("not monomial"),
    }
    *v = MmVector::from_bytes(m, &new);
}

/// `(-1)^{⟨e, i⟩}` for the 24 points, as `(image, sign)` pairs fixing each point.
fn point_signs(e: Ploop) -> [(u8, u8); 24] {
    let ev = golay::expand(e.code());
    std::array::from_fn(|i| (i as u8, ((ev >> i) & 1) as u8))
}

/// A block under a monomial action on the 24 points.
fn a_part(old: &[u8], out: &mut Out, pts: &[(u8, u8); 24]) {
    for i in 0..24 {
        for j in i..24 {
            let (i2, si) = pts[i];
            let (j2, sj) = pts[j];
            let (i2, j2) = (i2 as usize, j2 as usize);
            out.put(a_index(i2, j2), old[a_index(i, j)], (si ^ sj) as u32);
        }
    }
}

/// Multiply the short part of `out` in place by the signs of conjugation with `x_e`.
fn x_signs(out: &mut Out, e: Ploop) {
    let g = Qx::from_loop(e);
    let p = out.p;
    for (n, r) in short_table().iter().enumerate() {
        if r.comm_sign(g) == 1 {
            let x = &mut out.new[OFS_SHORT + n];
            if *x != 0 {
                *x = p - *x;
            }
        }
    }
}

/// B and C by explicit conjugation and classification.
fn bc_by_conj(old: &[u8], out: &mut Out, g: &NGen) {
    for (n, &r) in short_table()[..SH_T].iter().enumerate() {
        let (n2, s) = conj_by_gen(r, g).short_index().expect("short");
        out.put(OFS_SHORT + n2, old[OFS_SHORT + n], s);
    }
}

/// The points `o_0 < … < o_7` of an octad.
fn octad_points(o: usize) -> [usize; 8] {
    let mut pts = [0usize; 8];
    let mut v = golay::octad(o);
    for p in pts.iter_mut() {
        *p = v.trailing_zeros() as usize;
        v &= v - 1;
    }
    pts
}

/// Short part under `y_e`.
///
/// On `X^+_{o·δ}` it shifts the suboctad by `A(o, e)` with sign `⟨e, δ⟩`;
/// on `X^+_{d·i}` it multiplies `d` by `e` on the right.
fn y_short(old: &[u8], out: &mut Out, e: Ploop) {
    bc_by_conj(old, out, &NGen::Y(e));
    let ec = e.code();
    let ev = golay::expand(ec);
    for o in 0..golay::N_OCTADS {
        let oc = golay::octad_code(o);
        let shift = golay::suboctad_index(o, a_of(oc, ec)).expect("A(o,e) lies in o");
        let pts = octad_points(o);
        let mut mask = 0usize;
        for j in 1..7 {
            mask |= ((((ev >> pts[0]) ^ (ev >> pts[j])) & 1) as usize) << (j - 1);
        }
        let base = OFS_SHORT + SH_T + 64 * o;
        for mu in 0..64 {
            let s = (mu & mask).count_ones() & 1;
            out.put(base + (mu ^ shift), old[base + mu], s);
        }
    }
    for k in 0..2048 {
        let g = Ploop::new(code_from_k(k), 0) * e;
        let (k2, s) = dpm_index(g, false);
        let (src, dst) = (OFS_SHORT + SH_X + 24 * k, OFS_SHORT + SH_X + 24 * k2);
        for i in 0..24 {
            out.put(dst + i, old[src + i], s);
        }
    }
}

/// The `4096 ⊗ 24` part: `d^± ⊗ i ↦ (image of d)^{±'} ⊗ (image of i)`.
fn loop_part(
    old: &[u8],
    out: &mut Out,
    ploop: impl Fn(Ploop, bool) -> (Ploop, bool),
    pts: &[(u8, u8); 24],
    fixed_points: bool,
) {
    for (minus, ofs) in [(false, OFS_Z), (true, OFS_Y)] {
        for k in 0..2048 {
            let (f2, minus2) = ploop(Ploop::new(code_from_k(k), 0), minus);
            let (k2, sf) = dpm_index(f2, minus2);
            let dst = if minus2 { OFS_Y } else { OFS_Z } + 24 * k2;
            let src = ofs + 24 * k;
            for i in 0..24 {
                let (i2, si) = if fixed_points { (i as u8, 0) } else { pts[i] };
                out.put(dst + i2 as usize, old[src + i], sf ^ si as u32);
            }
        }
    }
}

fn automorphism(old: &[u8], out: &mut Out, a: &StdAut) {
    let perm = a.perm();
    let pts: [(u8, u8); 24] = std::array::from_fn(|i| (perm.0[i], 0));
    let odd = a.parity();
    a_part(old, out, &pts);
    bc_by_conj(old, out, &NGen::Aut(Box::new(a.clone())));

    // T: the octad moves with its loop sign, the suboctad index moves linearly.
    for o in 0..golay::N_OCTADS {
        let img = a.apply(Ploop::new(golay::octad_code(o), 0));
        let o2 = golay::octad_index(img.code()).expect("M_24 permutes octads");
        let pts8 = octad_points(o);
        let lin: [usize; 6] = std::array::from_fn(|j| {
            let s = perm.apply_vec((1 << pts8[0]) | (1 << pts8[j + 1]));
            golay::suboctad_index(o2, golay::syndrome(s)).expect("image lies in the image octad")
        });
        let (src, dst) = (OFS_SHORT + SH_T + 64 * o, OFS_SHORT + SH_T + 64 * o2);
        for mu in 0..64usize {
            let mut mu2 = 0;
            for (j, &l) in lin.iter().enumerate() {
                if (mu >> j) & 1 != 0 {
                    mu2 ^= l;
                }
            }
            let w = mu.count_ones();
            let n = ((w + (w & 1)) / 2) & 1;
            out.put(dst + mu2, old[src + mu], img.sign() ^ (n & odd));
        }
    }

    // X: X^+_{d·i} ↦ ± X^+_{d^π·i^π}; the factor Ω^m of the stored element picks up Ω^π.
    let table = &short_table()[SH_X..];
    for k in 0..2048 {
        let c = code_from_k(k);
        let img = a.apply(Ploop::new(c, 0));
        let k2 = code_mod_omega(img.code());
        for i in 0..24 {
            let mbit = (table[24 * k + i].code() != c) as u32;
            out.put(
                OFS_SHORT + SH_X + 24 * k2 + perm.0[i] as usize,
                old[OFS_SHORT + SH_X + 24 * k + i],
                img.sign() ^ (mbit & odd),
            );
        }
    }

    loop_part(old, out, |f, minus| (a.apply(f), minus ^ (odd == 1)), &pts, false);
}
