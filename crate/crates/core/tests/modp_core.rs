use monster_core::modp::{Modulus, PackedField};
use monster_core::Error;
use proptest::prelude::*;

const PS: [u32; 6] = [3, 7, 15, 31, 127, 255];

fn m(p: u32) -> Modulus {
    Modulus::new(p).unwrap()
}

/// A modulus and two equally long residue sequences.
fn pairs() -> impl Strategy<Value = (u32, Vec<u32>, Vec<u32>)> {
    (prop::sample::select(PS.to_vec()), 0usize..200).prop_flat_map(|(p, n)| {
        (
            Just(p),
            prop::collection::vec(0..p, n),
            prop::collection::vec(0..p, n),
        )
    })
}

fn inverse_of_two(p: u32) -> u64 {
    (p as u64 + 1) / 2
}

proptest! {
    #[test]
    fn round_trip((p, a, _b) in pairs()) {
        let f = PackedField::pack(&a, m(p)).unwrap();
        prop_assert_eq!(f.unpack(), a);
    }

    #[test]
    fn add_matches_scalar((p, a, b) in pairs()) {
        let (fa, fb) = (PackedField::pack(&a, m(p)).unwrap(), PackedField::pack(&b, m(p)).unwrap());
        let expect: Vec<u32> = a.iter().zip(&b).map(|(&x, &y)| (x + y) % p).collect();
        prop_assert_eq!(fa.add(&fb).unwrap().unpack(), expect);
    }

    #[test]
    fn neg_and_halve_match_scalar((p, a, _b) in pairs()) {
        let f = PackedField::pack(&a, m(p)).unwrap();
        let neg: Vec<u32> = a.iter().map(|&x| (p - x) % p).collect();
        prop_assert_eq!(f.neg().unpack(), neg);
        prop_assert!(f.neg().neg().equals(&f));
        let half: Vec<u32> = a.iter().map(|&x| (x as u64 * inverse_of_two(p) % p as u64) as u32).collect();
        prop_assert_eq!(f.halve().unpack(), half);
    }

    #[test]
    fn butterfly_matches_scalar((p, a, b) in pairs(), half in any::<bool>()) {
        let (fa, fb) = (PackedField::pack(&a, m(p)).unwrap(), PackedField::pack(&b, m(p)).unwrap());
        let (s, d) = fa.butterfly(&fb, half).unwrap();
        let c = if half { inverse_of_two(p) } else { 1 };
        let pp = p as u64;
        let es: Vec<u32> = a.iter().zip(&b).map(|(&x, &y)| ((x + y) as u64 * c % pp) as u32).collect();
        let ed: Vec<u32> = a.iter().zip(&b).map(|(&x, &y)| ((x + p - y) as u64 * c % pp) as u32).collect();
        prop_assert_eq!(s.unpack(), es);
        prop_assert_eq!(d.unpack(), ed);
        // Halving on the way in and doubling on the way back is the identity.
        let (s, d) = fa.butterfly(&fb, true).unwrap();
        let (x, y) = s.butterfly(&d, false).unwrap();
        prop_assert!(x.equals(&fa) && y.equals(&fb));
    }
}

#[test]
fn small_examples() {
    let f = |p: u32, v: &[u32]| PackedField::pack(v, m(p)).unwrap();
    assert_eq!(f(3, &[0]).words()[0], 0);
    assert_eq!(f(7, &[5]).words()[0], 0b101);
    assert_eq!(f(7, &[5]).unpack(), vec![5]);
    assert_eq!(PackedField::pack(&[7], m(7)).unwrap_err(), Error::ValueOutOfRange { value: 7, p: 7 });
    assert_eq!(f(3, &[2]).add(&f(3, &[2])).unwrap().unpack(), vec![1]);
    assert_eq!(f(7, &[6]).add(&f(7, &[1])).unwrap().unpack(), vec![0]);
    assert_eq!(f(255, &[200]).add(&f(255, &[100])).unwrap().unpack(), vec![45]);
    assert_eq!(f(15, &[5]).neg().words()[0], 0b1010);
    assert_eq!(f(3, &[0]).neg().unpack(), vec![0]);
    assert_eq!(f(7, &[1]).halve().unpack(), vec![4]);
    assert_eq!(f(7, &[6]).halve().unpack(), vec![3]);
    let (s, d) = f(7, &[3]).butterfly(&f(7, &[5]), false).unwrap();
    assert_eq!((s.unpack(), d.unpack()), (vec![1], vec![5]));
    let (s, d) = f(3, &[1]).butterfly(&f(3, &[1]), true).unwrap();
    assert_eq!((s.unpack(), d.unpack()), (vec![1], vec![0]));
    assert_eq!(f(3, &[1]).add(&f(7, &[1])).unwrap_err(), Error::ModulusMismatch(3, 7));
    assert!(Modulus::new(5).is_err());
    assert_eq!(Modulus::all().map(|m| m.p()).collect::<Vec<_>>(), PS.to_vec());
}

fn lane0(m: &Modulus, w: u64) -> u64 {
    m.canon(m.get_lane(w, 0)) as u64
}

/// Every pair of lane values, including the alias `p` for zero.
#[test]
fn word_operations_on_every_lane_pair() {
    for p in PS {
        let md = m(p);
        let pp = p as u64;
        for x in 0..=p as u64 {
            for y in 0..=p as u64 {
                let (a, b) = (x % pp, y % pp);
                assert_eq!(lane0(&md, md.add(x, y)), (a + b) % pp);
                assert_eq!(lane0(&md, md.sub(x, y)), (a + pp - b) % pp);
                let (s, d) = md.butterfly(x, y, true);
                let h = inverse_of_two(p);
                assert_eq!(lane0(&md, s), (a + b) * h % pp);
                assert_eq!(lane0(&md, d), (a + pp - b) * h % pp);
            }
            let a = x % pp;
            assert_eq!(lane0(&md, md.neg(x)), (pp - a) % pp);
            assert_eq!(lane0(&md, md.halve(x)), a * inverse_of_two(p) % pp);
            assert_eq!(lane0(&md, md.double(x)), 2 * a % pp);
        }
    }
}
