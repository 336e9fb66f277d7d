//! Timing helpers for `mm bench` and the performance criterion.

use std::time::{Duration, Instant};

use rand::Rng;

use crate::mmrep::kernels;
use crate::mmrep::MmVector;
use crate::modp::Modulus;
use crate::reference::RefVector;
use crate::verify::{random_atom, stream};
use crate::word::Atom;

/// Published per-operation costs: `(p, milliseconds)`.
pub const REFERENCE_MS: [(u32, f64); 2] = [(3, 0.73), (255, 1.35)];

/// Mean and minimum wall time over a number of repetitions.
#[derive(Debug, Clone, Copy)]
pub struct Timing {
    pub mean: Duration,
    pub min: Duration,
    pub reps: usize,
}

impl Timing {
    pub fn mean_ms(&self) -> f64 {
        self.mean.as_secs_f64() * 1e3
    }

    pub fn min_ms(&self) -> f64 {
        self.min.as_secs_f64() * 1e3
    }
}

/// Time `f` `reps` times after one untimed warm-up call.
pub fn time(reps: usize, mut f: impl FnMut()) -> Timing {
    let reps = reps.max(1);
    f();
    let mut total = Duration::ZERO;
    let mut min = Duration::MAX;
    for _ in 0..reps {
        let t = Instant::now();
        f();
        let d = t.elapsed();
        total += d;
        min = min.min(d);
    }
    Timing {
        mean: total / reps as u32,
        min,
        reps,
    }
}

/// Labels and atoms for each generator class: `x y z d p t1 t2 l1 l2`.
pub fn atom_classes<R: Rng + ?Sized>(rng: &mut R) -> Vec<(String, Atom)> {
    let mut out = Vec::new();
    for tag in ['x', 'y', 'z', 'd', 'p'] {
        out.push((tag.to_string(), random_atom(rng, tag)));
    }
    for a in [Atom::T(1), Atom::T(2), Atom::L(1), Atom::L(2)] {
        out.push((a.to_string(), a));
    }
    out
}

/// Per-atom timings on one random vector.
pub fn atom_timings(m: Modulus, seed: u64, reps: usize) -> Vec<(String, Timing)> {
    let mut rng = stream(seed, 0xd00 + m.p() as u64);
    let mut v = MmVector::random(m, &mut rng);
    atom_classes(&mut rng)
        .into_iter()
        .map(|(label, atom)| {
            let t = time(reps, || v.apply_atom(&atom));
            (label, t)
        })
        .collect()
}

/// A random word `x_d y_e ν_δ π ξ^e`, the typical shape of a group element
/// written as an element of `G_x0` times a power of `ξ`.
pub fn gx0_word<R: Rng + ?Sized>(rng: &mut R) -> Vec<Atom> {
    let mut w: Vec<Atom> = ['x', 'y', 'd', 'p'].iter().map(|&t| random_atom(rng, t)).collect();
    w.push(Atom::L(rng.gen_range(1..=2)));
    w
}

/// Time of one random `G_x0` word times a power of `ξ`.
pub fn word_timing(m: Modulus, seed: u64, reps: usize) -> (Vec<Atom>, Timing) {
    let mut rng = stream(seed, 0xe00 + m.p() as u64);
    let mut v = MmVector::random(m, &mut rng);
    let w = gx0_word(&mut rng);
    let t = time(reps, || v.apply_word(&w));
    (w, t)
}

/// Timings of the independent stages of `τ` and `ξ`.
pub fn breakdown(m: Modulus, seed: u64, reps: usize) -> Vec<(String, Timing)> {
    let mut rng = stream(seed, 0xf00 + m.p() as u64);
    let mut v = MmVector::random(m, &mut rng);
    let mut out = Vec::new();
    for (stage, label) in ["A/B/C", "X/Z/Y", "T"].iter().enumerate() {
        let t = time(reps, || kernels::tau_stage(&mut v, 1, stage as u8));
        out.push((format!("t1 {label}"), t));
    }
    for (stage, label) in ["A", "short", "Z/Y"].iter().enumerate() {
        let t = time(reps, || kernels::xi_stage(&mut v, 1, stage as u8));
        out.push((format!("l1 {label}"), t));
    }
    out
}

/// Packed and reference timings of the same word that uses every kind of
/// atom once.
pub fn speedup(m: Modulus, seed: u64, reps: usize) -> (Timing, Timing) {
    let mut rng = stream(seed, 0x1000 + m.p() as u64);
    let word: Vec<Atom> = atom_classes(&mut rng).into_iter().map(|(_, a)| a).collect();
    let mut v = MmVector::random(m, &mut rng);
    let mut r = RefVector::from_values(m, v.to_logical()).expect("valid residues");
    let packed = time(reps, || v.apply_word(&word));
    let reference = time(reps, || r.apply_word(&word));
    (packed, reference)
}
