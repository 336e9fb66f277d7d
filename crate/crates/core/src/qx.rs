//! The extraspecial group `Q_x`, the Leech lattice mod 2 and its short vectors.
//!
//! A [`Qx`] element `(-1)^s x̃_c x_δ` is stored in 25 bits: the sign in bit
//! 24, the code part `c` in bits 12..23 and the cocode part `δ` in bits
//! 0..11. In these polarized coordinates the product needs no cocycle.
//! The usual generators are recovered by `x_d = x̃_d x_{θ(d)}` for a
//! positive loop element `d`.
//!
//! Leech lattice vectors are integer vectors scaled so that the scalar
//! product is `Σ u_i v_i / 8` and the type of a vector is `Σ u_i² / 16`.

use std::fmt;
use std::ops::Mul;
use std::sync::OnceLock;

use crate::autpl::StdAut;
use crate::error::{Error, Result};
use crate::golay::{self, Code, Cocode, OMEGA};
use crate::parker::{a_of, c_of, p_of, theta, Ploop};

/// Number of short vectors of `Λ/2Λ`.
pub const N_SHORT: usize = 98280;
/// Offsets of the four kinds inside the short vector index.
pub const OFS_B: usize = 0;
pub const OFS_C: usize = 276;
pub const OFS_T: usize = 552;
pub const OFS_X: usize = 552 + 48576;

/// An element of `Q_x` in polarized coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Qx(pub u32);

impl Qx {
    pub const ONE: Qx = Qx(0);
    /// The central element `x = x_{-1}`.
    pub const X: Qx = Qx(1 << 24);

    #[inline]
    pub fn new(sign: u32, code: Code, cocode: Cocode) -> Qx {
        Qx(((sign & 1) << 24) | ((code as u32 & 0xfff) << 12) | (cocode as u32 & 0xfff))
    }

    #[inline]
    pub fn sign(self) -> u32 {
        (self.0 >> 24) & 1
    }

    #[inline]
    pub fn code(self) -> Code {
        ((self.0 >> 12) & 0xfff) as Code
    }

    #[inline]
    pub fn cocode(self) -> Cocode {
        (self.0 & 0xfff) as Cocode
    }

    /// The image in `Λ/2Λ` (the element modulo the centre).
    #[inline]
    pub fn leech_mod2(self) -> u32 {
        self.0 & 0xffffff
    }

    #[inline]
    pub fn negate(self) -> Qx {
        Qx(self.0 ^ (1 << 24))
    }

    #[inline]
    pub fn signed(self, bit: u32) -> Qx {
        Qx(self.0 ^ ((bit & 1) << 24))
    }

    /// Sign of the square: `a² = x^{⟨c, δ⟩}`.
    #[inline]
    pub fn square_sign(self) -> u32 {
        golay::scalar(self.code(), self.cocode())
    }

    #[inline]
    pub fn inv(self) -> Qx {
        self.signed(self.square_sign())
    }

    /// Sign of the commutator `[a, b]`.
    #[inline]
    pub fn comm_sign(self, b: Qx) -> u32 {
        golay::scalar(self.code(), b.cocode()) ^ golay::scalar(b.code(), self.cocode())
    }

    /// `g⁻¹ a g`.
    #[inline]
    pub fn conj(self, g: Qx) -> Qx {
        self.signed(self.comm_sign(g))
    }

    /// `x_d x_δ` for a loop element `d` and a cocode element `δ`.
    #[inline]
    pub fn from_x(d: Ploop, delta: Cocode) -> Qx {
        Qx::new(d.sign(), d.code(), theta(d.code()) ^ delta)
    }

    /// Inverse of [`Qx::from_x`].
    #[inline]
    pub fn to_x(self) -> (Ploop, Cocode) {
        (
            Ploop::new(self.code(), self.sign()),
            self.cocode() ^ theta(self.code()),
        )
    }

    /// `x_δ` for a cocode element.
    #[inline]
    pub fn from_cocode(delta: Cocode) -> Qx {
        Qx::new(0, 0, delta)
    }

    /// `x_d` for a loop element.
    #[inline]
    pub fn from_loop(d: Ploop) -> Qx {
        Qx::from_x(d, 0)
    }

    /// Type of the image in `Λ/2Λ`: 0, 2, 3 or 4.
    pub fn leech_type(self) -> u32 {
        if self.leech_mod2() == 0 {
            0
        } else if self.square_sign() == 1 {
            3
        } else if self.is_short() {
            2
        } else {
            4
        }
    }

    /// Whether the image in `Λ/2Λ` has type 2.
    pub fn is_short(self) -> bool {
        classify(self).is_some()
    }

    /// Signed short index: `(index, sign)` with `self = (-1)^sign X_index`.
    pub fn short_index(self) -> Result<(usize, u32)> {
        classify(self).ok_or(Error::NotShort(self.0))
    }

    /// The element `X_index` with positive sign.
    pub fn from_short_index(index: usize) -> Result<Qx> {
        short_table()
            .get(index)
            .copied()
            .ok_or(Error::BadShortIndex(index as u32))
    }

    /// An integer representative of the image in `Λ/2Λ`.
    pub fn leech_vector(self) -> [i32; 24] {
        let (d, eps) = self.to_x();
        let c = golay::expand(d.code());
        let mut u = [0i32; 24];
        let twos = if c.count_ones() % 8 == 0 { c } else { c ^ 0xffffff };
        for (i, x) in u.iter_mut().enumerate() {
            *x = 2 * ((twos >> i) & 1) as i32;
        }
        let rep = golay::lightest_rep(eps);
        for i in 0..24 {
            if (rep >> i) & 1 != 0 {
                for (j, x) in u.iter_mut().enumerate() {
                    *x += if j == i { -3 } else { 1 };
                }
            }
        }
        u
    }
}

impl Mul for Qx {
    type Output = Qx;
    #[inline]
    fn mul(self, b: Qx) -> Qx {
        let s = golay::scalar(b.code(), self.cocode());
        Qx((self.0 ^ b.0) ^ (s << 24))
    }
}

impl fmt::Debug for Qx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}x~{:03x}*d{:03x}",
            if self.sign() == 1 { "-" } else { "" },
            self.code(),
            self.cocode()
        )
    }
}

/// Lexicographic number of the pair `i < j` (0..276).
#[inline]
pub fn pair_index(i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    i * 23 - i * i.saturating_sub(1) / 2 + (j - i - 1)
}

/// The pair with the given lexicographic number.
pub fn pair_from_index(n: usize) -> (usize, usize) {
    static T: OnceLock<Vec<(u8, u8)>> = OnceLock::new();
    let t = T.get_or_init(|| {
        let mut v = Vec::with_capacity(276);
        for i in 0..24u8 {
            for j in i + 1..24 {
                v.push((i, j));
            }
        }
        v
    });
    let (i, j) = t[n];
    (i as usize, j as usize)
}

/// Canonical representative of `{c, c + Ω}`: the one with bit 5 clear.
#[inline]
pub fn code_mod_omega(c: Code) -> usize {
    let c = if c & 0x20 != 0 { c ^ OMEGA } else { c };
    (((c >> 6) << 5) | (c & 0x1f)) as usize
}

/// The codeword with bit 5 clear encoded by `k` (0..2048).
#[inline]
pub fn code_from_k(k: usize) -> Code {
    (((k >> 5) << 6) | (k & 0x1f)) as Code
}

/// `m(c, i) = P(c) + ⟨c, i⟩`: `x_c x_i` is short iff it vanishes.
#[inline]
fn x_kind_m(c: Code, i: usize) -> u32 {
    p_of(c) ^ golay::scalar(c, golay::point_cocode(i))
}

fn classify(a: Qx) -> Option<(usize, u32)> {
    let (d, eps) = a.to_x();
    let c = d.code();
    let lam = d.sign();
    let rep = golay::lightest_rep(eps);
    let w = rep.count_ones();
    if w & 1 == 1 {
        if w != 1 {
            return None;
        }
        let i = rep.trailing_zeros() as usize;
        if x_kind_m(c, i) != 0 {
            return None;
        }
        return Some((OFS_X + 24 * code_mod_omega(c) + i, lam));
    }
    if c == 0 || c == OMEGA {
        if w != 2 {
            return None;
        }
        let i = rep.trailing_zeros() as usize;
        let j = 31 - rep.leading_zeros() as usize;
        let base = if c == 0 { OFS_B } else { OFS_C };
        return Some((base + pair_index(i, j), lam));
    }
    let o = golay::octad_index(c)
        .or_else(|_| golay::octad_index(c ^ OMEGA))
        .ok()?;
    let mu = golay::suboctad_index(o, eps).ok()?;
    let idx = OFS_T + 64 * o + mu;
    // The table entry carries the right power of Ω for this suboctad.
    if short_table()[idx].code() != c {
        return None;
    }
    Some((idx, lam))
}

/// The positive short elements `X_0, …, X_98279`.
pub fn short_table() -> &'static [Qx] {
    static T: OnceLock<Vec<Qx>> = OnceLock::new();
    T.get_or_init(|| {
        let mut t = Vec::with_capacity(N_SHORT);
        for n in 0..276 {
            let (i, j) = pair_from_index(n);
            t.push(Qx::from_x(Ploop::ONE, golay::syndrome(1 << i | 1 << j)));
        }
        for n in 0..276 {
            let (i, j) = pair_from_index(n);
            t.push(Qx::from_x(Ploop::OMEGA, golay::syndrome(1 << i | 1 << j)));
        }
        for o in 0..golay::N_OCTADS {
            let oc = golay::octad_code(o);
            for mu in 0..64 {
                let s = golay::suboctad_set(o, mu);
                let n = (s.count_ones() / 2) & 1;
                let c = if n == 1 { oc ^ OMEGA } else { oc };
                t.push(Qx::from_x(Ploop::new(c, 0), golay::syndrome(s)));
            }
        }
        for k in 0..2048 {
            let c0 = code_from_k(k);
            for i in 0..24 {
                let c = if x_kind_m(c0, i) == 1 { c0 ^ OMEGA } else { c0 };
                t.push(Qx::from_x(Ploop::new(c, 0), golay::point_cocode(i)));
            }
        }
        t
    })
}

/// Whether an integer vector lies in the (scaled) Leech lattice.
pub fn in_leech(u: &[i32; 24]) -> bool {
    let m = u[0].rem_euclid(2);
    if u.iter().any(|&x| x.rem_euclid(2) != m) {
        return false;
    }
    let mut set = 0u32;
    for (i, &x) in u.iter().enumerate() {
        if (x - m).rem_euclid(4) == 2 {
            set |= 1 << i;
        }
    }
    let sum: i32 = u.iter().sum();
    golay::is_codeword(set) && (sum - 4 * m).rem_euclid(8) == 0
}

/// Scalar product of two lattice vectors, times 8.
#[inline]
pub fn dot8(u: &[i32; 24], v: &[i32; 24]) -> i64 {
    u.iter().zip(v).map(|(&a, &b)| a as i64 * b as i64).sum()
}

/// `Σ u_i² / 16`, the type of a lattice vector.
pub fn vector_type(u: &[i32; 24]) -> i64 {
    dot8(u, u) / 16
}

/// Class in `Λ/2Λ` of a lattice vector, as 24 polarized bits.
///
/// The vector is peeled apart into pieces whose classes are known: an odd
/// vector first loses `λ_0 = (-3, 1, …, 1)`, then the points congruent to
/// 2 mod 4 form a codeword `d` and `2·d` maps to `x_d x_Ω^{|d|/4}`, then the
/// points congruent to 4 mod 8 form an even set `δ` with `4·δ` mapping to
/// `x_δ x_Ω^{|δ|/2}`, and finally `8·t` maps to `x_Ω^{Σ t}`.
pub fn leech_class(u: &[i32; 24]) -> Result<u32> {
    if !in_leech(u) {
        return Err(Error::Parse {
            pos: 0,
            msg: format!("{u:?} is not in the Leech lattice"),
        });
    }
    let mut v = *u;
    let mut acc = 0u32;
    if v[0].rem_euclid(2) == 1 {
        for (i, x) in v.iter_mut().enumerate() {
            *x -= if i == 0 { -3 } else { 1 };
        }
        acc ^= Qx::from_cocode(golay::point_cocode(0)).leech_mod2();
    }
    let mut d = 0u32;
    for (i, &x) in v.iter().enumerate() {
        if x.rem_euclid(4) == 2 {
            d |= 1 << i;
        }
    }
    let dc = golay::compress(d)?;
    for (i, x) in v.iter_mut().enumerate() {
        *x -= 2 * ((d >> i) & 1) as i32;
    }
    acc ^= Qx::from_loop(Ploop::new(dc, 0)).leech_mod2();
    if (d.count_ones() / 4) & 1 == 1 {
        acc ^= Qx::from_loop(Ploop::OMEGA).leech_mod2();
    }
    let mut e = 0u32;
    for (i, &x) in v.iter().enumerate() {
        if x.rem_euclid(8) == 4 {
            e |= 1 << i;
        }
    }
    for (i, x) in v.iter_mut().enumerate() {
        *x -= 4 * ((e >> i) & 1) as i32;
    }
    acc ^= Qx::from_cocode(golay::syndrome(e)).leech_mod2();
    if (e.count_ones() / 2) & 1 == 1 {
        acc ^= Qx::from_loop(Ploop::OMEGA).leech_mod2();
    }
    let t: i32 = v.iter().map(|&x| x / 8).sum();
    if t & 1 != 0 {
        acc ^= Qx::from_loop(Ploop::OMEGA).leech_mod2();
    }
    Ok(acc)
}

/// Enumerate all 196560 minimal vectors of the Leech lattice.
pub fn minimal_vectors() -> Vec<[i32; 24]> {
    let mut out = Vec::with_capacity(196560);
    for i in 0..24 {
        for j in i + 1..24 {
            for (si, sj) in [(4, 4), (4, -4), (-4, 4), (-4, -4)] {
                let mut u = [0; 24];
                u[i] = si;
                u[j] = sj;
                out.push(u);
            }
        }
    }
    for o in 0..golay::N_OCTADS {
        let oc = golay::octad(o);
        let pts: Vec<usize> = (0..24).filter(|&i| (oc >> i) & 1 != 0).collect();
        for signs in 0..256u32 {
            if signs.count_ones() % 2 != 0 {
                continue;
            }
            let mut u = [0; 24];
            for (k, &p) in pts.iter().enumerate() {
                u[p] = if (signs >> k) & 1 != 0 { -2 } else { 2 };
            }
            out.push(u);
        }
    }
    for c in 0..4096u16 {
        let set = golay::expand(c);
        for i in 0..24 {
            let mut u = [0; 24];
            for (j, x) in u.iter_mut().enumerate() {
                let neg = (set >> j) & 1 != 0;
                *x = if neg { -1 } else { 1 };
                if j == i {
                    *x *= -3;
                }
            }
            out.push(u);
        }
    }
    out
}

/// A generator of `N` acting on `Q_x` by conjugation.
#[derive(Clone, Debug)]
pub enum NGen {
    X(Ploop),
    Y(Ploop),
    Z(Ploop),
    Aut(Box<StdAut>),
}

/// `g⁻¹ a g` for a generator `g` of `N` normalizing `Q_x`.
pub fn conj_by_gen(a: Qx, g: &NGen) -> Qx {
    match g {
        NGen::X(e) => a.conj(Qx::from_loop(*e)),
        NGen::Y(e) => conj_yz(a, *e, false),
        NGen::Z(e) => conj_yz(a, *e, true),
        NGen::Aut(pi) => {
            let (d, eps) = a.to_x();
            Qx::from_loop(pi.apply(d)) * Qx::from_cocode(pi.image_cocode(eps))
        }
    }
}

fn conj_yz(a: Qx, e: Ploop, swap: bool) -> Qx {
    let z = Qx::from_loop(if swap { -Ploop::OMEGA } else { Ploop::OMEGA });
    let y = Qx::from_loop(if swap { Ploop::OMEGA } else { -Ploop::OMEGA });
    let pow = |g: Qx, n: u32| if n & 1 == 1 { g } else { Qx::ONE };
    let (d, eps) = a.to_x();
    let c = d.code();
    let ec = e.code();
    let img_d = pow(z, c_of(c, ec)) * Qx::from_x(Ploop::new(c, 0), a_of(c, ec));
    let img_d = img_d.signed(d.sign());
    let img_even = |delta: Cocode| pow(y, golay::scalar(ec, delta)) * Qx::from_cocode(delta);
    let img_eps = if golay::cocode_parity(eps) == 0 {
        img_even(eps)
    } else {
        let i = golay::lightest_rep(eps).trailing_zeros() as usize;
        let pi = golay::point_cocode(i);
        let img_i = pow(z, p_of(ec) ^ golay::scalar(ec, pi)) * Qx::from_loop(e) * Qx::from_cocode(pi);
        img_i * img_even(eps ^ pi)
    };
    img_d * img_eps
}

/// `ξ^{-e} a ξ^{e}` for the exponent `e ∈ {1, 2}`.
///
/// The code part splits into grey `d` and coloured `h`, the cocode part
/// into grey `ε` and coloured `η`; `f = γ⁻¹(ε)`. Exponent 1 sends the
/// element to `(-1)^{w₂(f) + ⟨⟨d,f⟩⟩} x̃_f x̃_h x_{γ(d) + ε} x_η` and
/// exponent 2 to `(-1)^{w₂(d) + ⟨⟨d,f⟩⟩} x̃_{d+f} x̃_h x_{γ(d)} x_η`.
#[inline]
pub fn conj_by_xi(a: Qx, exp: u32) -> Qx {
    let (d, h) = golay::grey_split(a.code());
    let c = a.cocode();
    let eps = (c & 0x3f) as u8;
    let eta = c & 0xfc0;
    let f = golay::twist6(eps);
    let gd = golay::twist6(d) as Cocode;
    let form = golay::bilinear_grey(d, f);
    let hc = (h as Code) << 6;
    match exp % 3 {
        0 => a,
        1 => Qx::new(
            a.sign() ^ golay::w2_grey(f) ^ form,
            hc | f as Code,
            gd ^ eps as Cocode ^ eta,
        ),
        _ => Qx::new(
            a.sign() ^ golay::w2_grey(d) ^ form,
            hc | (d ^ f) as Code,
            gd ^ eta,
        ),
    }
}

/// The 4×4 block of `2 ξ_24` for exponent 1; exponent 2 uses its transpose.
pub const XI4: [[i32; 4]; 4] = [[-1, -1, -1, -1], [1, 1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1]];

/// `2 ξ_24` as a 24×24 integer matrix acting on row vectors.
pub fn xi24_matrix(exp: u32) -> [[i32; 24]; 24] {
    let mut m = [[0i32; 24]; 24];
    for n in 0..6 {
        for r in 0..4 {
            for s in 0..4 {
                m[4 * n + r][4 * n + s] = if exp % 3 == 1 { XI4[r][s] } else { XI4[s][r] };
            }
        }
    }
    if exp % 3 == 0 {
        for (i, row) in m.iter_mut().enumerate() {
            *row = [0; 24];
            row[i] = 2;
        }
    }
    m
}

/// Apply `ξ_24^{exp}` to a lattice vector: `u ↦ u·ξ_24`.
pub fn xi24_apply(u: &[i32; 24], exp: u32) -> Option<[i32; 24]> {
    let m = xi24_matrix(exp);
    let mut r = [0i32; 24];
    for j in 0..24 {
        let s: i32 = (0..24).map(|i| u[i] * m[i][j]).sum();
        if s % 2 != 0 {
            return None;
        }
        r[j] = s / 2;
    }
    Some(r)
}
