//! The binary Golay code built from the MOG and the hexacode.
//!
//! Point `m + 4n` of the 24-point set sits in MOG row `m`, column `n`, and
//! is bit `m + 4n` of a [`Vec24`]. Codewords are stored as 12-bit
//! coordinates over a fixed basis `b_0..b_11`: the six grey words
//! `g_0..g_5` followed by six coloured words lifted from the hexacode.
//!
//! Cocode elements are stored by their pairings with the basis: bit `k`
//! of a [`Cocode`] is `|v ∩ b_k| mod 2` for any representative `v`. The
//! scalar product of a codeword and a cocode element is then a plain
//! parity of `code & cocode`. Bits 0..5 form the grey part of a cocode
//! element and bits 6..11 its coloured part.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// A subset of the 24 points, one bit per point.
pub type Vec24 = u32;
/// A Golay codeword in basis coordinates (12 bits).
pub type Code = u16;
/// A cocode element in pairing coordinates (12 bits).
pub type Cocode = u16;

/// The all-ones codeword in basis coordinates.
pub const OMEGA: Code = 0x3f;
/// The cocode element represented by any single MOG column or by row 0.
pub const OMEGA_COCODE: Cocode = 0x3f;
/// Number of octads.
pub const N_OCTADS: usize = 759;

const ROW0: Vec24 = 0x111111;

/// The three generators of the hexacode, one 2-bit digit per column
/// (0, 1, α = 2, ᾱ = 3).
pub const HEXACODE_GENERATORS: [[u8; 6]; 3] = [[1, 0, 0, 1, 3, 2], [0, 1, 0, 1, 2, 3], [0, 0, 1, 1, 1, 1]];

/// Product in F_4 with digits encoded as 0, 1, α = 2, ᾱ = 3.
pub fn f4_mul(a: u8, b: u8) -> u8 {
    const LOG: [u8; 4] = [0, 0, 1, 2];
    if a == 0 || b == 0 {
        return 0;
    }
    [1, 2, 3][((LOG[a as usize] + LOG[b as usize]) % 3) as usize]
}

/// Value of the MOG point in row `m`, column `n`.
#[inline]
pub fn point(row: usize, col: usize) -> usize {
    row + 4 * col
}

/// The hexacode word of `v`: digit `n` is the F_4-sum of the row labels
/// of the points of `v` in column `n` (row 0 counts as 0).
pub fn hexacode_value(v: Vec24) -> [u8; 6] {
    let mut h = [0u8; 6];
    for (n, digit) in h.iter_mut().enumerate() {
        for m in 1..4 {
            if (v >> point(m, n)) & 1 != 0 {
                *digit ^= m as u8;
            }
        }
    }
    h
}

/// The coloured word lifted from a hexacode word: a nonzero digit `v` in
/// column `n` becomes the two points of rows `{1,2,3} \ {v}` there.
pub fn hexacode_lift(h: &[u8; 6]) -> Vec24 {
    let mut v = 0;
    for (n, &digit) in h.iter().enumerate() {
        for m in 1..4u8 {
            if digit != 0 && digit != m {
                v |= 1 << point(m as usize, n);
            }
        }
    }
    v
}

fn column_parities_match(v: Vec24) -> bool {
    let top = (v & ROW0).count_ones() & 1;
    (0..6).all(|n| ((v >> (4 * n)) & 0xf).count_ones() & 1 == top)
}

/// Membership test by the MOG rule: the hexacode value lies in the
/// hexacode and every column has the parity of row 0.
pub fn is_codeword(v: Vec24) -> bool {
    v < 1 << 24 && column_parities_match(v) && tables().hexacode.contains(&pack_hex(&hexacode_value(v)))
}

fn pack_hex(h: &[u8; 6]) -> u16 {
    h.iter().enumerate().fold(0, |acc, (n, &d)| acc | (d as u16) << (2 * n))
}

/// Precomputed data for the code and the cocode.
struct Tables {
    basis: [Vec24; 12],
    /// Echelon rows used by `compress`: (vector, coordinates).
    echelon: Vec<(Vec24, Code)>,
    /// All 64 hexacode words, packed two bits per digit.
    hexacode: Vec<u16>,
    /// Expanded codewords indexed by coordinates.
    words: Vec<Vec24>,
    /// Lightest representative of every cocode element.
    lightest: Vec<Vec24>,
    /// Octads sorted by their 24-bit value.
    octads: Vec<Vec24>,
    /// Octad number of each codeword, or `u16::MAX`.
    octad_of: Vec<u16>,
    /// Per octad: echelon rows of the six spanning suboctads.
    sub_echelon: Vec<[(Cocode, u8); 6]>,
}

fn tables() -> &'static Tables {
    static T: OnceLock<Tables> = OnceLock::new();
    T.get_or_init(build_tables)
}

fn build_tables() -> Tables {
    let mut hexacode = Vec::with_capacity(64);
    for c in 0..64u32 {
        let mut h = [0u8; 6];
        for (j, gen) in HEXACODE_GENERATORS.iter().enumerate() {
            let scalar = ((c >> (2 * j)) & 3) as u8;
            for n in 0..6 {
                h[n] ^= f4_mul(scalar, gen[n]);
            }
        }
        hexacode.push(pack_hex(&h));
    }
    hexacode.sort_unstable();
    hexacode.dedup();

    let omega_inf: Vec24 = ROW0;
    let mut basis = [0 as Vec24; 12];
    for (i, b) in basis.iter_mut().take(6).enumerate() {
        *b = omega_inf ^ (0xf << (4 * i));
    }
    for (j, gen) in HEXACODE_GENERATORS.iter().enumerate() {
        basis[6 + j] = hexacode_lift(gen);
        let alpha_gen: [u8; 6] = std::array::from_fn(|n| f4_mul(2, gen[n]));
        basis[9 + j] = hexacode_lift(&alpha_gen);
    }

    let mut words = vec![0 as Vec24; 4096];
    for c in 1..4096usize {
        let low = c.trailing_zeros() as usize;
        words[c] = words[c & (c - 1)] ^ basis[low];
    }

    let mut echelon: Vec<(Vec24, Code)> = Vec::new();
    for (i, &b) in basis.iter().enumerate() {
        let (mut v, mut c) = (b, 1u16 << i);
        for &(ev, ec) in &echelon {
            if v & (1 << (31 - ev.leading_zeros())) != 0 {
                v ^= ev;
                c ^= ec;
            }
        }
        assert!(v != 0, "basis vectors must be independent");
        // Keep rows fully reduced so each pivot occurs in one row only.
        let pivot = 1 << (31 - v.leading_zeros());
        for row in echelon.iter_mut() {
            if row.0 & pivot != 0 {
                row.0 ^= v;
                row.1 ^= c;
            }
        }
        echelon.push((v, c));
    }

    let mut lightest = vec![u32::MAX; 4096];
    lightest[0] = 0;
    let syn = |v: Vec24| -> usize {
        basis
            .iter()
            .enumerate()
            .fold(0, |acc, (k, &b)| acc | ((((v & b).count_ones() & 1) as usize) << k))
    };
    for i in 0..24 {
        lightest[syn(1 << i)] = 1 << i;
    }
    for i in 0..24 {
        for j in i + 1..24 {
            lightest[syn(1 << i | 1 << j)] = 1 << i | 1 << j;
        }
    }
    for i in 0..24 {
        for j in i + 1..24 {
            for k in j + 1..24 {
                let v = 1 << i | 1 << j | 1 << k;
                lightest[syn(v)] = v;
            }
        }
    }
    // Every tetrad class has exactly one member through point 0.
    for j in 1..24 {
        for k in j + 1..24 {
            for l in k + 1..24 {
                let v = 1 | 1 << j | 1 << k | 1 << l;
                let s = syn(v);
                if lightest[s] == u32::MAX {
                    lightest[s] = v;
                }
            }
        }
    }

    let mut octads: Vec<Vec24> = words.iter().copied().filter(|w| w.count_ones() == 8).collect();
    octads.sort_unstable();
    let mut octad_of = vec![u16::MAX; 4096];
    for (c, &w) in words.iter().enumerate() {
        if let Ok(i) = octads.binary_search(&w) {
            octad_of[c] = i as u16;
        }
    }

    let sub_echelon = octads
        .iter()
        .map(|&o| {
            let pts = points_of(o);
            let mut rows: Vec<(Cocode, u8)> = Vec::new();
            for j in 1..7 {
                let (mut s, mut mu) = (syn(1 << pts[0] | 1 << pts[j]) as Cocode, 1u8 << (j - 1));
                for &(rs, rm) in &rows {
                    if s & (1 << (15 - rs.leading_zeros())) != 0 {
                        s ^= rs;
                        mu ^= rm;
                    }
                }
                let pivot = 1 << (15 - s.leading_zeros());
                for row in rows.iter_mut() {
                    if row.0 & pivot != 0 {
                        row.0 ^= s;
                        row.1 ^= mu;
                    }
                }
                rows.push((s, mu));
            }
            std::array::from_fn(|i| rows[i])
        })
        .collect();

    Tables {
        basis,
        echelon,
        hexacode,
        words,
        lightest,
        octads,
        octad_of,
        sub_echelon,
    }
}

fn points_of(v: Vec24) -> Vec<usize> {
    (0..24).filter(|&i| (v >> i) & 1 != 0).collect()
}

/// The twelve basis codewords `b_0..b_11`.
pub fn basis() -> &'static [Vec24; 12] {
    &tables().basis
}

/// The grey basis word `g_i`: row 0 without column `i`, plus all of column `i`.
pub fn g(i: usize) -> Vec24 {
    tables().basis[i]
}

/// Codeword with the given basis coordinates.
#[inline]
pub fn expand(c: Code) -> Vec24 {
    tables().words[(c & 0xfff) as usize]
}

/// Basis coordinates of a codeword.
pub fn compress(v: Vec24) -> Result<Code> {
    let mut w = v;
    let mut c = 0;
    for &(ev, ec) in &tables().echelon {
        if w & (1 << (31 - ev.leading_zeros())) != 0 {
            w ^= ev;
            c ^= ec;
        }
    }
    if w != 0 || v >= 1 << 24 {
        return Err(Error::NotACodeword(v));
    }
    Ok(c)
}

/// Weight of a codeword given in coordinates.
#[inline]
pub fn code_weight(c: Code) -> u32 {
    expand(c).count_ones()
}

/// The cocode element of an arbitrary subset.
#[inline]
pub fn syndrome(v: Vec24) -> Cocode {
    let b = &tables().basis;
    let mut s = 0;
    for (k, &bk) in b.iter().enumerate() {
        s |= (((v & bk).count_ones() & 1) as Cocode) << k;
    }
    s
}

/// A minimum-weight representative; for tetrads, the one through point 0.
#[inline]
pub fn lightest_rep(d: Cocode) -> Vec24 {
    tables().lightest[(d & 0xfff) as usize]
}

/// Minimum weight of a cocode element (0..=4).
#[inline]
pub fn cocode_weight(d: Cocode) -> u32 {
    lightest_rep(d).count_ones()
}

/// Parity of a cocode element, i.e. `|δ| mod 2`.
#[inline]
pub fn cocode_parity(d: Cocode) -> u32 {
    (d & 0x3f).count_ones() & 1
}

/// Scalar product `⟨d, δ⟩ = |d ∩ δ| mod 2`.
#[inline]
pub fn scalar(c: Code, d: Cocode) -> u32 {
    (c & d).count_ones() & 1
}

/// Cocode element of the single point `i`.
#[inline]
pub fn point_cocode(i: usize) -> Cocode {
    syndrome(1 << i)
}

/// Split a codeword into its grey part (over `g_0..g_5`) and coloured part
/// (over `b_6..b_11`), both as 6-bit values.
#[inline]
pub fn grey_split(c: Code) -> (u8, u8) {
    ((c & 0x3f) as u8, (c >> 6) as u8)
}

/// Change between coordinates over `γ_0..γ_5` and pairing coordinates of
/// a grey cocode element. The map is its own inverse.
#[inline]
pub fn twist6(mu: u8) -> u8 {
    if mu.count_ones() & 1 == 1 {
        mu ^ 0x3f
    } else {
        mu
    }
}

/// The grey projection of `v`: column `n` is set iff rows 1 to 3 of
/// column `n` contain at least two points of `v`. Result over `γ_0..γ_5`.
pub fn gamma(v: Vec24) -> u8 {
    let mut r = 0;
    for n in 0..6 {
        if ((v >> (4 * n + 1)) & 7).count_ones() >= 2 {
            r |= 1 << n;
        }
    }
    r
}

/// `γ` of a codeword, as a cocode element in pairing coordinates.
#[inline]
pub fn gamma_code(c: Code) -> Cocode {
    twist6(gamma(expand(c))) as Cocode
}

/// `w` of a grey codeword: its weight over `g_0..g_5`.
pub fn w_code(c: Code) -> Result<u32> {
    if c >> 6 != 0 {
        return Err(Error::NotGrey(c));
    }
    Ok(c.count_ones())
}

/// `w` of a grey cocode element: its weight over `γ_0..γ_5`.
pub fn w_cocode(d: Cocode) -> Result<u32> {
    if d >> 6 != 0 {
        return Err(Error::NotGrey(d));
    }
    Ok(twist6(d as u8).count_ones())
}

/// `C(w, 2) mod 2` for a weight `w`.
#[inline]
pub fn w2_of_weight(w: u32) -> u32 {
    (w >> 1) & 1
}

/// `w_2` of a grey codeword given by its six grey bits.
#[inline]
pub fn w2_grey(e: u8) -> u32 {
    w2_of_weight(e.count_ones())
}

/// The symplectic form `⟨⟨d, e⟩⟩ = ⟨e, γ(d)⟩` on grey codewords given by
/// their six grey bits.
#[inline]
pub fn bilinear_grey(d: u8, e: u8) -> u32 {
    ((d.count_ones() * e.count_ones()) + (d & e).count_ones()) & 1
}

/// Number of the octad `c` (0..759), ordered by 24-bit value.
pub fn octad_index(c: Code) -> Result<usize> {
    match tables().octad_of[(c & 0xfff) as usize] {
        u16::MAX => Err(Error::NotAnOctad(c)),
        i => Ok(i as usize),
    }
}

/// The octad with the given number, as a 24-bit set.
pub fn octad(i: usize) -> Vec24 {
    tables().octads[i]
}

/// The octad with the given number, in code coordinates.
pub fn octad_code(i: usize) -> Code {
    compress(octad(i)).expect("octads are codewords")
}

/// Index 0..64 of an even cocode element inside octad number `o`.
///
/// With the points `o_0 < … < o_7` of the octad, a suboctad is an even
/// subset `S` not containing `o_7` (complement it otherwise); bit `j-1` of
/// the index records whether `o_j ∈ S` for `j = 1..6`.
pub fn suboctad_index(o: usize, d: Cocode) -> Result<usize> {
    let mut s = d;
    let mut mu = 0u8;
    for &(rs, rm) in &tables().sub_echelon[o] {
        if s & (1 << (15 - rs.leading_zeros())) != 0 {
            s ^= rs;
            mu ^= rm;
        }
    }
    if s != 0 {
        return Err(Error::NotInOctad {
            octad: octad_code(o),
            cocode: d,
        });
    }
    Ok(mu as usize)
}

/// The subset of octad `o` with suboctad index `mu`.
pub fn suboctad_set(o: usize, mu: usize) -> Vec24 {
    let mut pts = [0usize; 8];
    let oct = octad(o);
    let mut n = 0;
    for i in 0..24 {
        if (oct >> i) & 1 != 0 {
            pts[n] = i;
            n += 1;
        }
    }
    let mut s = 0;
    for j in 1..7 {
        if (mu >> (j - 1)) & 1 != 0 {
            s |= 1 << pts[j];
        }
    }
    if mu.count_ones() & 1 == 1 {
        s |= 1 << pts[0];
    }
    s
}

/// Cocode element of the suboctad with index `mu` of octad `o`.
#[inline]
pub fn suboctad_cocode(o: usize, mu: usize) -> Cocode {
    syndrome(suboctad_set(o, mu))
}

/// Render a 24-bit set as the 4×6 MOG picture, one row per line.
pub fn mog_picture(v: Vec24) -> String {
    let mut s = String::new();
    for m in 0..4 {
        for n in 0..6 {
            s.push(if (v >> point(m, n)) & 1 != 0 { '1' } else { '0' });
        }
        if m < 3 {
            s.push('\n');
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexacode_has_64_words_of_expected_weights() {
        let t = tables();
        assert_eq!(t.hexacode.len(), 64);
        let mut hist = [0; 7];
        for &h in &t.hexacode {
            hist[(0..6).filter(|n| (h >> (2 * n)) & 3 != 0).count()] += 1;
        }
        assert_eq!(hist, [1, 0, 0, 0, 45, 0, 18]);
    }

    #[test]
    fn g0_matches_its_mog_picture() {
        assert_eq!(mog_picture(g(0)), "011111\n100000\n100000\n100000");
        assert!(is_codeword(g(0)));
        assert!(is_codeword(0xffffff));
        assert!(is_codeword(0));
        assert_eq!(expand(OMEGA), 0xffffff);
    }

    #[test]
    fn basis_is_independent_and_round_trips() {
        for c in 0..4096u16 {
            assert!(is_codeword(expand(c)));
            assert_eq!(compress(expand(c)).unwrap(), c);
        }
        assert_eq!(compress(1), Err(Error::NotACodeword(1)));
    }

    #[test]
    fn code_weights() {
        let mut hist = [0u32; 25];
        for c in 0..4096u16 {
            hist[code_weight(c) as usize] += 1;
        }
        assert_eq!((hist[0], hist[8], hist[12], hist[16], hist[24]), (1, 759, 2576, 759, 1));
    }

    #[test]
    fn cocode_weights_and_syndrome_kernel() {
        let mut hist = [0u32; 5];
        for d in 0..4096u16 {
            let r = lightest_rep(d);
            assert_eq!(syndrome(r), d);
            hist[r.count_ones() as usize] += 1;
        }
        assert_eq!(hist, [1, 24, 276, 2024, 1771]);
        for c in 0..4096u16 {
            assert_eq!(syndrome(expand(c)), 0);
        }
    }

    #[test]
    fn grey_pairings() {
        for m in 0..6 {
            for n in 0..6 {
                let gamma_n = point_cocode(point(0, n));
                assert_eq!(scalar(1 << m, gamma_n), (m != n) as u32);
            }
        }
        assert_eq!(point_cocode(0), twist6(1) as Cocode);
        assert_eq!(syndrome(ROW0), OMEGA_COCODE);
        for n in 0..6 {
            assert_eq!(syndrome(0xf << (4 * n)), OMEGA_COCODE);
        }
    }

    #[test]
    fn gamma_is_additive_over_grey() {
        for i in 0..6 {
            assert_eq!(gamma(g(i)), 1 << i);
        }
        for d in 0..4096u16 {
            for e in 0..64u16 {
                assert_eq!(gamma(expand(d ^ e)), gamma(expand(d)) ^ gamma(expand(e)));
            }
        }
    }

    #[test]
    fn w_and_w2() {
        let sizes: Vec<u32> = (0..64u16).map(|e| code_weight(e)).collect();
        for e in 0..64u16 {
            let w = w_code(e).unwrap();
            assert_eq!(sizes[e as usize], [0, 8, 8, 12, 16, 16, 24][w as usize]);
        }
        let w2: Vec<u32> = (0..7).map(w2_of_weight).collect();
        assert_eq!(w2, vec![0, 0, 1, 1, 0, 0, 1]);
        assert_eq!(w_code(OMEGA).unwrap(), 6);
        assert_eq!(w_cocode(OMEGA_COCODE).unwrap(), 6);
        assert!(w_code(0x40).is_err());
    }

    #[test]
    fn symplectic_form() {
        for d in 0..64u8 {
            assert_eq!(bilinear_grey(d, d), 0);
            for e in 0..64u8 {
                let direct = scalar(e as Code, gamma_code(d as Code));
                assert_eq!(bilinear_grey(d, e), direct);
                assert_eq!(bilinear_grey(d, e), bilinear_grey(e, d));
                assert_eq!(bilinear_grey(d, e), (w2_grey(d) + w2_grey(e) + w2_grey(d ^ e)) & 1);
            }
        }
    }

    #[test]
    fn octads_and_suboctads() {
        let mut seen = 0;
        for c in 0..4096u16 {
            if let Ok(o) = octad_index(c) {
                assert_eq!(octad(o), expand(c));
                seen += 1;
            }
        }
        assert_eq!(seen, 759);
        for o in 0..N_OCTADS {
            assert_eq!(suboctad_index(o, 0).unwrap(), 0);
            let mut seen = [false; 64];
            for mu in 0..64 {
                let d = suboctad_cocode(o, mu);
                assert_eq!(cocode_parity(d), 0);
                let back = suboctad_index(o, d).unwrap();
                assert_eq!(back, mu);
                seen[mu] = true;
            }
            assert!(seen.iter().all(|&b| b));
        }
        assert!(suboctad_index(0, point_cocode(0)).is_err());
    }
}
