use std::collections::BTreeMap;

use monster_core::golay::*;

/// All codewords spanned by the basis, computed by plain XOR.
fn span() -> Vec<Vec24> {
    let b = basis();
    (0..4096u32)
        .map(|c| (0..12).filter(|&i| c >> i & 1 == 1).fold(0, |acc, i| acc ^ b[i]))
        .collect()
}

fn histogram(ws: impl Iterator<Item = u32>) -> BTreeMap<u32, u32> {
    let mut h = BTreeMap::new();
    for w in ws {
        *h.entry(w).or_insert(0) += 1;
    }
    h
}

#[test]
fn membership_test_agrees_with_the_span() {
    let words = span();
    let mut in_span = vec![false; 1 << 24];
    for &w in &words {
        in_span[w as usize] = true;
    }
    let mut count = 0;
    for v in 0..1u32 << 24 {
        let c = is_codeword(v);
        assert_eq!(c, in_span[v as usize], "{v:#08x}");
        count += c as u32;
    }
    assert_eq!(count, 4096);
}

#[test]
fn code_weight_histogram() {
    let h = histogram(span().iter().map(|w| w.count_ones()));
    let expect: BTreeMap<u32, u32> = [(0, 1), (8, 759), (12, 2576), (16, 759), (24, 1)].into();
    assert_eq!(h, expect);
    assert_eq!(histogram((0..4096u16).map(code_weight)), expect);
}

/// Minimum weights of cocode elements found by enumerating every subset of
/// at most four points.
#[test]
fn cocode_weights_by_enumeration() {
    let mut best = vec![u32::MAX; 4096];
    let mut visit = |v: Vec24| {
        let s = syndrome(v) as usize;
        best[s] = best[s].min(v.count_ones());
    };
    visit(0);
    for a in 0..24 {
        visit(1 << a);
        for b in a + 1..24 {
            visit(1 << a | 1 << b);
            for c in b + 1..24 {
                visit(1 << a | 1 << b | 1 << c);
                for d in c + 1..24 {
                    visit(1 << a | 1 << b | 1 << c | 1 << d);
                }
            }
        }
    }
    for d in 0..4096u16 {
        assert_eq!(cocode_weight(d), best[d as usize], "cocode {d:#05x}");
        let r = lightest_rep(d);
        assert_eq!(syndrome(r), d);
        assert_eq!(r.count_ones(), best[d as usize]);
    }
    let expect: BTreeMap<u32, u32> = [(0, 1), (1, 24), (2, 276), (3, 2024), (4, 1771)].into();
    assert_eq!(histogram(best.into_iter()), expect);
}

#[test]
fn syndrome_is_linear_with_the_code_as_kernel() {
    for w in span() {
        assert_eq!(syndrome(w), 0);
    }
    for a in [0x123456u32, 0xfedcba, 0x800001] {
        for b in [0x0f0f0f, 0x1, 0xabcdef] {
            assert_eq!(syndrome(a ^ b), syndrome(a) ^ syndrome(b));
        }
    }
}

#[test]
fn expand_and_compress_are_inverse() {
    for c in 0..4096u16 {
        assert_eq!(compress(expand(c)).unwrap(), c);
    }
    assert!(compress(1).is_err());
}

#[test]
fn first_grey_basis_word_and_omega() {
    // Row 0 is 011111 and column 0 holds ones in rows 1 to 3.
    let mut g0 = 0;
    for col in 1..6 {
        g0 |= 1 << point(0, col);
    }
    for row in 1..4 {
        g0 |= 1 << point(row, 0);
    }
    assert_eq!(expand(1), g0);
    assert!(is_codeword(g0));
    assert!(is_codeword(0) && is_codeword(0xffffff));
    let sum = (0..6).fold(0, |acc, i| acc ^ g(i));
    assert_eq!(sum, 0xffffff);
    assert_eq!(expand(OMEGA), 0xffffff);
    assert_eq!(grey_split(OMEGA), (0x3f, 0));
}

#[test]
fn lightest_rep_of_omega_is_a_column_or_row_zero() {
    let r = lightest_rep(OMEGA_COCODE);
    assert_eq!(r.count_ones(), 4);
    let row0: Vec24 = (0..6).map(|c| 1 << point(0, c)).sum();
    let cols: Vec<Vec24> = (0..6).map(|c| 0xf << (4 * c)).collect();
    assert!(r == row0 || cols.contains(&r), "{r:#08x}");
}

#[test]
fn coloured_words_have_even_columns_and_empty_row_zero() {
    for h in 1..64u16 {
        let v = expand(h << 6);
        for col in 0..6 {
            assert_eq!(v >> point(0, col) & 1, 0);
            assert_eq!(((v >> (4 * col)) & 0xf).count_ones() % 2, 0);
        }
    }
}

#[test]
fn gamma_on_grey_words() {
    assert_eq!(gamma(0), 0);
    for i in 0..6 {
        assert_eq!(gamma(g(i)), 1 << i);
    }
    for d in 0..4096u16 {
        for e in 0..64u16 {
            assert_eq!(gamma(expand(d ^ e)), gamma(expand(d)) ^ gamma(expand(e)));
        }
    }
    // ⟨g_m, γ_n⟩ = 1 - δ_mn.
    for m in 0..6 {
        for n in 0..6 {
            let gamma_n = twist6(1 << n) as Cocode;
            assert_eq!(scalar(1 << m, gamma_n), (m != n) as u32);
        }
    }
}

#[test]
fn scalar_product_by_intersection() {
    for i in 0..24 {
        assert_eq!(scalar(OMEGA, point_cocode(i)), 1);
    }
    for c in (0..4096u16).step_by(7) {
        assert_eq!(scalar(c, 0), 0);
        for d in (0..4096u16).step_by(97) {
            let parity = (expand(c) & lightest_rep(d)).count_ones() & 1;
            assert_eq!(scalar(c, d), parity);
        }
    }
}

#[test]
fn grey_weights() {
    let sizes = [0, 8, 8, 12, 16, 16, 24];
    for e in 0..64u16 {
        let w = w_code(e).unwrap();
        assert_eq!(expand(e).count_ones(), sizes[w as usize]);
        assert_eq!(w2_grey(e as u8), (w * (w.saturating_sub(1)) / 2) % 2);
    }
    assert_eq!(w_code(OMEGA).unwrap(), 6);
    assert_eq!(w_cocode(OMEGA_COCODE).unwrap(), 6);
    assert_eq!(w2_grey(0x3f), 1);
    assert!(w_code(1 << 6).is_err());
}

#[test]
fn grey_form_is_symplectic() {
    for d in 0..64u8 {
        assert_eq!(bilinear_grey(d, d), 0);
        for e in 0..64u8 {
            assert_eq!(bilinear_grey(d, e), bilinear_grey(e, d));
            assert_eq!(bilinear_grey(d, e), w2_grey(d) ^ w2_grey(e) ^ w2_grey(d ^ e));
            assert_eq!(bilinear_grey(d, e), scalar(e as Code, gamma_code(d as Code)));
        }
    }
}

#[test]
fn octads_and_suboctads() {
    let octads: Vec<Code> = (0..4096u16).filter(|&c| code_weight(c) == 8).collect();
    assert_eq!(octads.len(), N_OCTADS);
    let mut seen = vec![false; N_OCTADS];
    for &c in &octads {
        let o = octad_index(c).unwrap();
        assert!(!seen[o]);
        seen[o] = true;
        assert_eq!(octad_code(o), c);
        assert_eq!(suboctad_index(o, 0).unwrap(), 0);
    }
    assert!(octad_index(0).is_err());
    let mut pairs = 0;
    for o in 0..N_OCTADS {
        let oc = octad(o);
        for mu in 0..64 {
            let s = suboctad_set(o, mu);
            assert_eq!(s & !oc, 0);
            assert_eq!(s.count_ones() % 2, 0);
            let d = suboctad_cocode(o, mu);
            assert_eq!(suboctad_index(o, d).unwrap(), mu);
            assert_eq!(suboctad_index(o, d ^ syndrome(oc)).unwrap(), mu);
            pairs += 1;
        }
        // An odd cocode element is never a suboctad.
        assert!(suboctad_index(o, point_cocode(0)).is_err());
    }
    assert_eq!(pairs, 48576);
}
