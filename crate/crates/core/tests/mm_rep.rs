use monster_core::autpl::StdAut;
use monster_core::golay;
use monster_core::mmrep::{a_index, dpm_index, MmVector, DIM, OFS_A, OFS_SHORT, OFS_T, OFS_X, OFS_Y, OFS_Z};
use monster_core::modp::Modulus;
use monster_core::parker::{a_of, Ploop};
use monster_core::qx::{code_from_k, conj_by_xi, short_table, xi24_matrix, N_SHORT};
use monster_core::reference::RefVector;
use monster_core::verify::{random_atom, random_aut, random_ploop, stream};
use monster_core::word::{parse_word, Atom};
use monster_core::Error;
use rand::Rng;

fn m(p: u32) -> Modulus {
    Modulus::new(p).unwrap()
}

fn applied(v: &MmVector, word: &[Atom]) -> MmVector {
    let mut w = v.clone();
    w.apply_word(word);
    w
}

fn neg(p: u32, x: u32) -> u32 {
    (p - x) % p
}

fn basis(m: Modulus, l: usize) -> MmVector {
    let mut v = MmVector::zero(m);
    v.set(l, 1).unwrap();
    v
}

/// The single nonzero coordinate of `v` as `(index, value)`.
fn single(v: &MmVector) -> Option<(usize, u32)> {
    let x = v.to_logical();
    let nz: Vec<usize> = (0..DIM).filter(|&l| x[l] != 0).collect();
    match nz[..] {
        [l] => Some((l, x[l])),
        // Off-diagonal A entries are stored once in the logical order.
        _ => None,
    }
}

#[test]
fn vector_arithmetic() {
    for md in Modulus::all() {
        let p = md.p();
        let mut rng = stream(3, p as u64);
        let v = MmVector::random(md, &mut rng);
        let mut w = v.clone();
        w.add(&MmVector::zero(md)).unwrap();
        assert_eq!(w, v);
        let mut s = v.clone();
        s.scale(p - 1);
        let x = v.to_logical();
        let expect: Vec<u32> = x.iter().map(|&a| neg(p, a)).collect();
        assert_eq!(s.to_logical(), expect);
        let mut sum = v.clone();
        sum.add(&s).unwrap();
        assert_eq!(sum, MmVector::zero(md));
    }
    let mut a = MmVector::zero(m(3));
    assert_eq!(a.add(&MmVector::zero(m(7))), Err(Error::ModulusMismatch(3, 7)));
}

#[test]
fn random_vectors_depend_only_on_the_seed() {
    let a = MmVector::random(m(31), &mut stream(9, 0));
    let b = MmVector::random(m(31), &mut stream(9, 0));
    let c = MmVector::random(m(31), &mut stream(10, 0));
    assert_eq!(a, b);
    assert_ne!(a, c);
}

#[test]
fn logical_round_trip_and_errors() {
    let md = m(15);
    let v = MmVector::random(md, &mut stream(1, 1));
    let x = v.to_logical();
    assert_eq!(MmVector::from_logical(md, &x).unwrap(), v);
    for l in [0, 23, 24, 299, 300, 852, 49428, 98580, 147732, DIM - 1] {
        assert!(x[l] < 15);
        assert_eq!(v.get(l), x[l]);
    }
    assert_eq!(MmVector::from_logical(md, &x[1..]), Err(Error::LengthMismatch(DIM, DIM - 1)));
    let mut bad = x.clone();
    bad[7] = 15;
    assert_eq!(MmVector::from_logical(md, &bad), Err(Error::ValueOutOfRange { value: 15, p: 15 }));
    let mut w = v.clone();
    assert!(w.set(DIM, 0).is_err());
    assert!(w.set(0, 15).is_err());
}

#[test]
fn identity_atoms() {
    for md in [m(3), m(255)] {
        let v = MmVector::random(md, &mut stream(2, md.p() as u64));
        assert_eq!(applied(&v, &[]), v);
        assert_eq!(applied(&v, &[Atom::X(Ploop::ONE)]), v);
        assert_eq!(applied(&v, &[Atom::Y(Ploop::ONE)]), v);
        assert_eq!(applied(&v, &[Atom::D(0)]), v);
        assert_eq!(applied(&v, &[Atom::P(Box::new(StdAut::identity()))]), v);
        assert_eq!(applied(&v, &parse_word("").unwrap()), v);
        assert_eq!(applied(&v, &parse_word("t1*t1*t1").unwrap()), v);
        assert_eq!(applied(&v, &parse_word("l2*l2*l2").unwrap()), v);
    }
}

#[test]
fn x_minus_one_negates_exactly_the_4096_part() {
    for md in Modulus::all() {
        let p = md.p();
        let v = MmVector::random(md, &mut stream(4, p as u64));
        let w = applied(&v, &parse_word("x1000").unwrap());
        let (x, y) = (v.to_logical(), w.to_logical());
        for l in 0..DIM {
            let expect = if l >= OFS_Z { neg(p, x[l]) } else { x[l] };
            assert_eq!(y[l], expect, "p = {p}, coordinate {l}");
        }
    }
}

#[test]
fn xyz_is_the_identity() {
    let mut rng = stream(5, 0);
    for md in Modulus::all() {
        let v = MmVector::random(md, &mut rng);
        for _ in 0..3 {
            let d = random_ploop(&mut rng);
            assert_eq!(applied(&v, &[Atom::X(d), Atom::Y(d), Atom::Z(d)]), v, "d = {d:?}");
        }
    }
}

/// `y_e` maps `X^+_{d·δ}` to `(-1)^{⟨e,δ⟩} X^+_{d·δδ′}` with `δ′ = A(d, e)`.
#[test]
fn y_on_the_octad_block() {
    let md = m(127);
    let p = md.p();
    let mut rng = stream(6, 0);
    let mut samples = 0;
    for _ in 0..100 {
        let e = random_ploop(&mut rng);
        let v = MmVector::random(md, &mut rng);
        let w = applied(&v, &[Atom::Y(e)]);
        for _ in 0..100 {
            let o = rng.gen_range(0..golay::N_OCTADS);
            let mu = rng.gen_range(0..64);
            let d = golay::octad_code(o);
            let delta = golay::suboctad_cocode(o, mu);
            let mu2 = golay::suboctad_index(o, delta ^ a_of(d, e.code())).unwrap();
            let x = v.get(OFS_T + 64 * o + mu);
            let expect = if golay::scalar(e.code(), delta) == 1 { neg(p, x) } else { x };
            assert_eq!(w.get(OFS_T + 64 * o + mu2), expect, "e = {e:?}, octad {o}, suboctad {mu}");
            samples += 1;
        }
    }
    assert_eq!(samples, 10_000);
}

/// An even diagonal automorphism multiplies `d^± ⊗ i` by `(-1)^{⟨d,δ⟩}`
/// and leaves A alone.
#[test]
fn even_diagonal_on_the_4096_part() {
    let md = m(7);
    let mut rng = stream(7, 0);
    for _ in 0..5 {
        let delta = loop {
            let d = rng.gen::<u16>() & 0xfff;
            if golay::cocode_parity(d) == 0 {
                break d;
            }
        };
        let v = MmVector::random(md, &mut rng);
        let w = applied(&v, &[Atom::D(delta)]);
        for l in 0..300 {
            assert_eq!(w.get(OFS_A + l), v.get(OFS_A + l));
        }
        for k in 0..2048 {
            let s = golay::scalar(code_from_k(k), delta);
            for ofs in [OFS_Z, OFS_Y] {
                for i in 0..24 {
                    let x = v.get(ofs + 24 * k + i);
                    let expect = if s == 1 { neg(7, x) } else { x };
                    assert_eq!(w.get(ofs + 24 * k + i), expect);
                }
            }
        }
    }
}

#[test]
fn automorphism_operators_compose() {
    let mut rng = stream(8, 0);
    for md in [m(3), m(31)] {
        for _ in 0..4 {
            let (a, b) = (random_aut(&mut rng), random_aut(&mut rng));
            let v = MmVector::random(md, &mut rng);
            let lhs = applied(&v, &[Atom::P(Box::new(a.compose(&b)))]);
            let rhs = applied(&v, &[Atom::P(Box::new(a)), Atom::P(Box::new(b))]);
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn tau_on_a_fixes_the_diagonal_and_follows_the_dictionary() {
    for md in Modulus::all() {
        let p = md.p();
        for i in 0..24 {
            let v = basis(md, a_index(i, i));
            assert_eq!(applied(&v, &[Atom::T(1)]), v);
        }
        // (ij)_1 ↦ X_ij - X^+_ij ↦ X_ij + X^+_ij ↦ (ij)_1.
        for n in [0, 1, 100, 275] {
            let v = basis(md, 24 + n);
            let w = applied(&v, &[Atom::T(1)]);
            let x = w.to_logical();
            assert_eq!((x[300 + n], x[576 + n]), (1, p - 1));
            assert_eq!(x.iter().filter(|&&a| a != 0).count(), 2);
            let w2 = applied(&w, &[Atom::T(1)]);
            let x = w2.to_logical();
            assert_eq!((x[300 + n], x[576 + n]), (1, 1));
            assert_eq!(x.iter().filter(|&&a| a != 0).count(), 2);
            assert_eq!(applied(&w2, &[Atom::T(1)]), v);
        }
    }
}

/// `τ` maps `X^+_{d·i}` to `(-1)^{⟨d,i⟩} d^- ⊗ i`.
#[test]
fn tau_on_the_x_block() {
    let md = m(31);
    let mut rng = stream(9, 0);
    for _ in 0..200 {
        let n = rng.gen_range(0..49152);
        let (k, i) = (n / 24, n % 24);
        let r = short_table()[OFS_X - OFS_SHORT + n];
        let c = r.code();
        let (k2, s) = dpm_index(Ploop::new(c, 0), true);
        let sign = s ^ golay::scalar(c, golay::point_cocode(i));
        let w = applied(&basis(md, OFS_X + n), &[Atom::T(1)]);
        let expect = if sign == 1 { 30 } else { 1 };
        assert_eq!(single(&w), Some((OFS_Y + 24 * k2 + i, expect)), "k = {k}, i = {i}");
    }
}

/// `ξ` on A is `S ↦ Mᵀ S M` with `M` the block diagonal matrix `½ XI4`.
#[test]
fn xi_on_the_a_block() {
    let mat = xi24_matrix(1);
    assert_eq!(&mat[0][..4], &[-1, -1, -1, -1]);
    for md in [m(3), m(15), m(255)] {
        let p = md.p() as i64;
        let v = MmVector::random(md, &mut stream(10, md.p() as u64));
        let s = |i: usize, j: usize| v.get(a_index(i, j)) as i64;
        for e in 1..=2u32 {
            let mat = xi24_matrix(e);
            let w = applied(&v, &[Atom::L(e as u8)]);
            let inv4 = (1..p).find(|&x| 4 * x % p == 1).unwrap();
            for i in 0..24 {
                for j in i..24 {
                    let mut acc = 0i64;
                    for a in 0..24 {
                        for b in 0..24 {
                            acc += (mat[a][i] * mat[b][j]) as i64 * s(a, b);
                        }
                    }
                    let expect = (acc.rem_euclid(p) * inv4 % p) as u32;
                    assert_eq!(w.get(a_index(i, j)), expect, "p = {p}, e = {e}, ({i},{j})");
                }
            }
        }
    }
}

#[test]
fn xi_moves_each_short_basis_vector_to_one_coordinate() {
    let mut rng = stream(11, 0);
    for md in [m(3), m(255)] {
        let p = md.p();
        for t in 0..150 {
            // Cover every block of short vectors.
            let n = match t {
                0..=9 => t,
                10..=19 => 276 + t,
                _ => rng.gen_range(0..N_SHORT),
            };
            let e = if t % 2 == 0 { 1 } else { 2 };
            let (n2, s) = conj_by_xi(short_table()[n], e).short_index().unwrap();
            let w = applied(&basis(md, OFS_SHORT + n), &[Atom::L(e as u8)]);
            let expect = if s == 1 { p - 1 } else { 1 };
            assert_eq!(single(&w), Some((OFS_SHORT + n2, expect)), "short index {n}, exponent {e}");
        }
    }
}

#[test]
fn norm_examples() {
    for md in Modulus::all() {
        assert_eq!(MmVector::zero(md).norm(), 0);
        assert_eq!(basis(md, OFS_T + 1234).norm(), 1);
        assert_eq!(basis(md, 24 + 7).norm(), 2 % md.p());
        let mut rng = stream(12, md.p() as u64);
        let v = MmVector::random(md, &mut rng);
        let r = RefVector::from_values(md, v.to_logical()).unwrap();
        assert_eq!(v.norm(), r.norm());
        for tag in ['x', 'y', 'z', 'd', 'p', 't', 'l'] {
            let a = random_atom(&mut rng, tag);
            assert_eq!(applied(&v, std::slice::from_ref(&a)).norm(), v.norm(), "{a}");
        }
    }
}

/// Packed kernels and the scalar reference give identical results.
#[test]
fn lanes_agree_with_the_reference() {
    let mut rng = stream(13, 0);
    for md in Modulus::all() {
        let v = MmVector::random(md, &mut rng);
        let r = RefVector::from_values(md, v.to_logical()).unwrap();
        let mut atoms = parse_word("t1*t2*l1*l2*x1000*y1fff*z0*d800").unwrap();
        for tag in ['x', 'y', 'z', 'd', 'p'] {
            atoms.push(random_atom(&mut rng, tag));
        }
        for a in atoms {
            let w = applied(&v, std::slice::from_ref(&a));
            let mut r2 = r.clone();
            r2.apply_atom(&a);
            assert_eq!(w.to_logical(), r2.values(), "p = {}, {a}", md.p());
        }
    }
}

#[test]
fn vector_files_round_trip() {
    for md in Modulus::all() {
        let v = MmVector::random(md, &mut stream(14, md.p() as u64));
        let mut buf = Vec::new();
        v.write_to(&mut buf).unwrap();
        assert_eq!(buf.len(), 9 + DIM);
        assert_eq!(&buf[..5], &[b'M', b'M', b'V', b'1', md.p() as u8]);
        assert_eq!(&buf[5..9], &(DIM as u32).to_le_bytes());
        let back = MmVector::read_from(&buf[..]).unwrap();
        assert_eq!(back, v);
        let mut again = Vec::new();
        back.write_to(&mut again).unwrap();
        assert_eq!(again, buf);
    }
}

#[test]
fn malformed_vector_files_are_rejected() {
    let v = MmVector::random(m(7), &mut stream(15, 0));
    let mut good = Vec::new();
    v.write_to(&mut good).unwrap();

    let mut bad_magic = good.clone();
    bad_magic[0] = b'X';
    assert!(matches!(MmVector::read_from(&bad_magic[..]), Err(Error::BadVectorFile(_))));

    let mut bad_p = good.clone();
    bad_p[4] = 5;
    assert_eq!(MmVector::read_from(&bad_p[..]), Err(Error::InvalidModulus(5)));

    let mut bad_len = good.clone();
    bad_len[5] = 0;
    assert!(matches!(MmVector::read_from(&bad_len[..]), Err(Error::LengthMismatch(..))));

    assert!(matches!(MmVector::read_from(&good[..100]), Err(Error::BadVectorFile(_))));
    assert!(matches!(MmVector::read_from(&good[..3]), Err(Error::BadVectorFile(_))));

    let mut trailing = good.clone();
    trailing.push(0);
    assert!(matches!(MmVector::read_from(&trailing[..]), Err(Error::BadVectorFile(_))));

    let mut big = good.clone();
    big[9 + 1000] = 7;
    assert_eq!(MmVector::read_from(&big[..]), Err(Error::ValueOutOfRange { value: 7, p: 7 }));
}
