use std::collections::HashSet;

use monster_core::autpl::{Perm24, StdAut};
use monster_core::golay::{self, Cocode};
use monster_core::parker::Ploop;
use monster_core::verify::{random_aut, random_perm, random_ploop, stream};
use rand::Rng;

fn same_action(a: &StdAut, f: impl Fn(Ploop) -> Ploop) -> bool {
    (0..8192u16).all(|x| a.apply(Ploop(x)) == f(Ploop(x)))
}

#[test]
fn compose_agrees_with_sequential_application_on_every_element() {
    let mut rng = stream(31, 0);
    for _ in 0..1000 {
        let (a, b) = (random_aut(&mut rng), random_aut(&mut rng));
        let c = a.compose(&b);
        assert!(same_action(&c, |x| b.apply(a.apply(x))), "{a:?} then {b:?}");
        assert_eq!(c.parity(), a.parity() ^ b.parity());
    }
}

/// The diagonal part of `[π][π′]` found by searching all 4096 candidates.
#[test]
fn product_of_lifts_against_exhaustive_search() {
    let mut rng = stream(32, 0);
    for _ in 0..16 {
        let (p, q) = (random_perm(&mut rng), random_perm(&mut rng));
        let (a, b) = (StdAut::from_perm(p).unwrap(), StdAut::from_perm(q).unwrap());
        let pq = p.then(&q);
        let found: Vec<Cocode> = (0..4096u16)
            .filter(|&d| {
                let c = StdAut::new(d, pq).unwrap();
                (0..12).all(|i| {
                    let x = Ploop::new(1 << i, 0);
                    c.apply(x) == b.apply(a.apply(x))
                })
            })
            .collect();
        assert_eq!(found.len(), 1);
        let theta = found[0];
        assert_eq!(a.compose(&b).diag(), theta);
        for i in 0..12 {
            let bi = a.image_code(1 << i);
            assert_eq!(golay::scalar(1 << i, theta), b.q(bi), "basis vector {i}");
        }
    }
}

#[test]
fn sign_of_a_product_of_lifts() {
    let mut rng = stream(33, 0);
    for _ in 0..200 {
        let a = StdAut::from_perm(random_perm(&mut rng)).unwrap();
        let b = StdAut::from_perm(random_perm(&mut rng)).unwrap();
        for _ in 0..50 {
            let x = random_ploop(&mut rng);
            let d = x.code();
            let expect = Ploop::new(b.image_code(a.image_code(d)), x.sign() ^ a.q(d) ^ b.q(a.image_code(d)));
            assert_eq!(b.apply(a.apply(x)), expect);
        }
    }
}

#[test]
fn homomorphism_on_random_triples() {
    let mut rng = stream(34, 0);
    let auts: Vec<StdAut> = (0..100).map(|_| random_aut(&mut rng)).collect();
    for _ in 0..100_000 {
        let a = &auts[rng.gen_range(0..auts.len())];
        let (x, y) = (random_ploop(&mut rng), random_ploop(&mut rng));
        assert_eq!(a.apply(x * y), a.apply(x) * a.apply(y));
        assert_eq!(a.apply(Ploop::MINUS_ONE), Ploop::MINUS_ONE);
    }
}

#[test]
fn identity_is_neutral() {
    let mut rng = stream(35, 0);
    let id = StdAut::identity();
    assert!(same_action(&id, |x| x));
    for _ in 0..20 {
        let a = random_aut(&mut rng);
        assert!(a.compose(&id) == a && id.compose(&a) == a);
    }
}

#[test]
fn diagonals() {
    for d in [0u16, 1, 0x3f, 0x800, 0xabc, 0xfff] {
        for e in [0u16, 0x40, 0x555, 0xfff] {
            let c = StdAut::from_cocode(d).compose(&StdAut::from_cocode(e));
            assert_eq!(c.diag(), d ^ e);
            assert_eq!(c.perm(), &Perm24::identity());
        }
        assert_eq!(StdAut::from_cocode(d).parity(), golay::cocode_parity(d));
    }
}

/// Exactly 4096 distinct automorphisms lie over one permutation.
#[test]
fn diagonals_over_one_permutation_act_differently() {
    let p = random_perm(&mut stream(36, 0));
    let probes: Vec<Ploop> = (0..12).map(|i| Ploop::new(1 << i, 0)).collect();
    let mut actions = HashSet::new();
    for d in 0..4096u16 {
        let a = StdAut::new(d, p).unwrap();
        let act: Vec<Ploop> = probes.iter().map(|&x| a.apply(x)).collect();
        assert!(actions.insert(act), "diagonal {d:#05x}");
    }
    assert_eq!(actions.len(), 4096);
}

#[test]
fn non_m24_permutations_are_rejected() {
    let mut t = Perm24::identity().0;
    t.swap(3, 17);
    let p = Perm24::new(t).unwrap();
    assert!(!p.in_m24());
    let err = StdAut::from_perm(p).unwrap_err();
    assert!(err.to_string().contains("17"), "{err}");
}
