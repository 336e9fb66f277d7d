//! Invariant suites shared by the `mm verify` command and the acceptance test.
//!
//! Every suite returns a [`Report`] made of named [`Check`]s. A check counts
//! the cases it looked at and the failures, and keeps the first
//! counterexample as text. Randomness comes from a single 64-bit seed: each
//! check draws from its own ChaCha8 stream `ChaCha8Rng::seed_from_u64(seed)`
//! with `set_stream(tag)`, so a counterexample can be reproduced from the
//! seed and the check alone.
//!
//! The sample size of every randomized check can be overridden. With an
//! override of 0 only the exhaustive checks run.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::autpl::{Perm24, StdAut, M24_SAMPLES};
use crate::error::{Error, Result};
use crate::golay::{self, Cocode, OMEGA, OMEGA_COCODE};
use crate::mmrep::{a_index, MmVector, DIM, OFS_B, OFS_C, OFS_SHORT, OFS_T, OFS_Y, OFS_Z};
use crate::modp::Modulus;
use crate::parker::{a_of, c_of, p_of, theta, theta2, Ploop};
use crate::qx::{self, conj_by_gen, conj_by_xi, short_table, NGen, Qx, N_SHORT};
use crate::reference::RefVector;
use crate::word::{format_word, Atom};

/// One named property with its tally.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub count: u64,
    pub failures: u64,
    pub first: Option<String>,
    /// Extra lines printed with the check, such as histograms or timings.
    pub notes: Vec<String>,
}

impl Check {
    pub fn new(name: impl Into<String>) -> Check {
        Check {
            name: name.into(),
            count: 0,
            failures: 0,
            first: None,
            notes: Vec::new(),
        }
    }

    /// Count one case; `what` describes it and is only evaluated on failure.
    #[inline]
    pub fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.count += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "[{tag}] {}: {} checked, {} failed", self.name, self.count, self.failures)?;
        for n in &self.notes {
            write!(f, "\n       {n}")?;
        }
        if let Some(c) = &self.first {
            write!(f, "\n       first counterexample: {c}")?;
        }
        Ok(())
    }
}

/// The result of one suite.
#[derive(Debug, Clone)]
pub struct Report {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    /// Look up a check by name.
    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ==", self.suite)?;
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed()).count();
        write!(
            f,
            "{}: {} checks, {} failed",
            if failed == 0 { "ok" } else { "FAILED" },
            self.checks.len(),
            failed
        )
    }
}

/// The available suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Golay,
    Cocycle,
    Loop,
    AutPl,
    Qx,
    Leech,
    RepRelations,
    RepNorm,
    Xi,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Golay,
        Suite::Cocycle,
        Suite::Loop,
        Suite::AutPl,
        Suite::Qx,
        Suite::Leech,
        Suite::Xi,
        Suite::RepRelations,
        Suite::RepNorm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Golay => "golay",
            Suite::Cocycle => "cocycle",
            Suite::Loop => "loop",
            Suite::AutPl => "autpl",
            Suite::Qx => "qx",
            Suite::Leech => "leech",
            Suite::RepRelations => "rep-relations",
            Suite::RepNorm => "rep-norm",
            Suite::Xi => "xi",
        }
    }

    pub fn run(self, cfg: &Config) -> Report {
        let checks = match self {
            Suite::Golay => golay_suite(),
            Suite::Cocycle => cocycle_suite(cfg),
            Suite::Loop => loop_suite(cfg),
            Suite::AutPl => autpl_suite(cfg),
            Suite::Qx => qx_suite(cfg),
            Suite::Leech => leech_suite(cfg),
            Suite::RepRelations => per_modulus(cfg, rep_relations),
            Suite::RepNorm => per_modulus(cfg, rep_norm),
            Suite::Xi => xi_suite(cfg),
        };
        Report { suite: self, checks }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unknown { kind: "suite", name: s.to_string() })
    }
}

/// Run a suite by name; `all` runs every suite in turn.
pub fn run_named(name: &str, cfg: &Config) -> Result<Vec<Report>> {
    if name == "all" {
        return Ok(Suite::ALL.iter().map(|s| s.run(cfg)).collect());
    }
    let suite: Suite = name.parse()?;
    Ok(vec![suite.run(cfg)])
}

/// Parameters shared by all suites.
#[derive(Debug, Clone)]
pub struct Config {
    /// Moduli for the representation suites.
    pub moduli: Vec<Modulus>,
    pub seed: u64,
    /// Overrides the sample count of every randomized check.
    pub samples: Option<u64>,
}

impl Default for Config {
    fn default() -> Config {
        Config {
            moduli: Modulus::all().collect(),
            seed: 1,
            samples: None,
        }
    }
}

impl Config {
    fn n(&self, default: u64) -> u64 {
        self.samples.unwrap_or(default)
    }
}

/// The random stream of one check.
pub fn stream(seed: u64, tag: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(tag);
    r
}

pub fn random_ploop<R: Rng + ?Sized>(rng: &mut R) -> Ploop {
    Ploop(rng.gen::<u16>() & 0x1fff)
}

pub fn random_cocode<R: Rng + ?Sized>(rng: &mut R) -> Cocode {
    rng.gen::<u16>() & 0xfff
}

pub fn random_qx<R: Rng + ?Sized>(rng: &mut R) -> Qx {
    Qx(rng.gen::<u32>() & 0x1ff_ffff)
}

/// A product of a few of the sample `M_24` permutations and their inverses.
pub fn random_perm<R: Rng + ?Sized>(rng: &mut R) -> Perm24 {
    let mut p = Perm24::identity();
    for _ in 0..rng.gen_range(1..8) {
        let s = Perm24(M24_SAMPLES[rng.gen_range(0..M24_SAMPLES.len())]);
        p = p.then(&if rng.gen() { s.inverse() } else { s });
    }
    p
}

/// A standard automorphism with a random diagonal part.
pub fn random_aut<R: Rng + ?Sized>(rng: &mut R) -> StdAut {
    StdAut::new(random_cocode(rng), random_perm(rng)).expect("products of M_24 elements")
}

/// A random atom whose tag is one of `x y z d p t l`.
pub fn random_atom<R: Rng + ?Sized>(rng: &mut R, tag: char) -> Atom {
    match tag {
        'x' => Atom::X(random_ploop(rng)),
        'y' => Atom::Y(random_ploop(rng)),
        'z' => Atom::Z(random_ploop(rng)),
        'd' => Atom::D(random_cocode(rng)),
        'p' => Atom::P(Box::new(random_aut(rng))),
        't' => Atom::T(rng.gen_range(1..=2)),
        'l' => Atom::L(rng.gen_range(1..=2)),
        _ => panic!("unknown atom tag {tag:?}"),
    }
}

/// `x_r` for `r ∈ Q_x` written as a word `x_d · d_δ`.
pub fn qx_word(r: Qx) -> Vec<Atom> {
    let (d, delta) = r.to_x();
    vec![Atom::X(d), Atom::D(delta)]
}

/// The permutation action of an atom on `Q_x`, where it has one.
fn conj_action(atom: &Atom) -> Option<Box<dyn Fn(Qx) -> Qx>> {
    let g = match atom {
        Atom::X(e) => NGen::X(*e),
        Atom::Y(e) => NGen::Y(*e),
        Atom::Z(e) => NGen::Z(*e),
        Atom::D(d) => NGen::Aut(Box::new(StdAut::from_cocode(*d))),
        Atom::P(a) => NGen::Aut(a.clone()),
        Atom::L(e) => {
            let e = *e as u32;
            return Some(Box::new(move |r| conj_by_xi(r, e)));
        }
        Atom::T(_) => return None,
    };
    Some(Box::new(move |r| conj_by_gen(r, &g)))
}

fn neg(p: u32, x: u32) -> u32 {
    if x == 0 {
        0
    } else {
        p - x
    }
}

fn hist_line(hist: &[u64]) -> String {
    hist.iter()
        .enumerate()
        .filter(|(_, &n)| n > 0)
        .map(|(w, n)| format!("{w}^{n}"))
        .collect::<Vec<_>>()
        .join(" ")
}

// ---------------------------------------------------------------------------
// golay

pub fn golay_code_weights() -> Check {
    let mut c = Check::new("code weight distribution");
    let t = Instant::now();
    let mut hist = [0u64; 25];
    for d in 0..4096u16 {
        hist[golay::code_weight(d) as usize] += 1;
    }
    let line = hist_line(&hist);
    c.record(line == "0^1 8^759 12^2576 16^759 24^1", || line.clone());
    c.note(format!("{line} ({:.1} ms)", t.elapsed().as_secs_f64() * 1e3));
    c
}

pub fn golay_cocode_weights() -> Check {
    let mut c = Check::new("cocode weight distribution");
    let mut hist = [0u64; 25];
    for d in 0..4096u16 {
        let r = golay::lightest_rep(d);
        c.record(golay::syndrome(r) == d, || format!("representative of {d:#05x}"));
        hist[r.count_ones() as usize] += 1;
    }
    let line = hist_line(&hist);
    c.record(line == "0^1 1^24 2^276 3^2024 4^1771", || line.clone());
    c.note(line);
    c
}

fn golay_suite() -> Vec<Check> {
    let mut basis = Check::new("basis and grey/coloured split");
    let b = golay::basis();
    let row0: u32 = (0..6).map(|n| 1u32 << golay::point(0, n)).sum();
    let col0: u32 = 0xf;
    basis.record(b[0] == col0 ^ row0, || "b_0 is not g_0".into());
    let sum = (0..6).fold(0, |acc, i| acc ^ golay::g(i));
    basis.record(sum == 0xffffff, || "g_0 + ... + g_5 is not Ω".into());
    for (i, &v) in b.iter().enumerate() {
        basis.record(golay::is_codeword(v) && golay::compress(v) == Ok(1 << i), || format!("b_{i}"));
    }
    for h in 0..64u16 {
        let v = golay::expand(h << 6);
        let cols_ok = (0..6).all(|n| matches!(((v >> (4 * n)) & 0xf).count_ones(), 0 | 2));
        basis.record(v & row0 == 0 && cols_ok, || format!("coloured word {h:#x}"));
    }
    for d in 0..4096u16 {
        let (g, h) = golay::grey_split(d);
        let v = golay::expand(g as u16) ^ golay::expand((h as u16) << 6);
        basis.record(v == golay::expand(d), || format!("split of {d:#05x}"));
    }

    let mut even = Check::new("even codewords pair trivially with ω");
    for d in 0..4096u16 {
        let row_par = (golay::expand(d) & row0).count_ones() & 1;
        even.record(row_par == golay::scalar(d, OMEGA_COCODE), || format!("{d:#05x}"));
    }

    let mut gamma = Check::new("γ is additive over grey words");
    for i in 0..6 {
        gamma.record(golay::gamma(golay::g(i)) == 1 << i, || format!("γ(g_{i})"));
    }
    let images: std::collections::HashSet<u8> = (0..64u16).map(|e| golay::gamma(golay::expand(e))).collect();
    gamma.record(images.len() == 64, || "γ is not injective on the grey words".into());
    for d in 0..4096u16 {
        for e in 0..64u16 {
            let ok = golay::gamma(golay::expand(d ^ e)) == golay::gamma(golay::expand(d)) ^ golay::gamma(golay::expand(e));
            gamma.record(ok, || format!("d = {d:#05x}, e = {e:#x}"));
        }
    }

    // The coloured subspace is spanned by the lifts of the weight-4 hexacode words.
    let mut rank = Check::new("coloured subspace generated by weight-4 hexacode lifts");
    let mut words = Vec::new();
    for a in 0..4u8 {
        for b2 in 0..4u8 {
            for c2 in 0..4u8 {
                let g = golay::HEXACODE_GENERATORS;
                let h: [u8; 6] = std::array::from_fn(|n| {
                    golay::f4_mul(a, g[0][n]) ^ golay::f4_mul(b2, g[1][n]) ^ golay::f4_mul(c2, g[2][n])
                });
                words.push(h);
            }
        }
    }
    let lifts: Vec<u16> = words
        .iter()
        .filter(|h| h.iter().filter(|&&x| x != 0).count() == 4)
        .map(|h| golay::compress(golay::hexacode_lift(h)).expect("lifts are codewords"))
        .collect();
    rank.note(format!("{} weight-4 hexacode words", lifts.len()));
    rank.record(lifts.iter().all(|&c| c & 0x3f == 0), || "a lift has a grey component".into());
    rank.record(gf2_rank(&lifts) == 6, || format!("rank {}", gf2_rank(&lifts)));

    vec![golay_code_weights(), golay_cocode_weights(), basis, even, gamma, rank]
}

fn gf2_rank(rows: &[u16]) -> u32 {
    let mut basis: Vec<u16> = Vec::new();
    for &r in rows {
        let mut x = r;
        for &b in &basis {
            x = x.min(x ^ b);
        }
        if x != 0 {
            basis.push(x);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len() as u32
}

// ---------------------------------------------------------------------------
// cocycle and loop

/// `θ(d, d) = P(d)` and `θ(d, e) + θ(e, d) = C(d, e)` over all pairs.
pub fn cocycle_pairs() -> Check {
    let mut c = Check::new("θ(d,d) = P(d), θ(d,e) + θ(e,d) = C(d,e), all 2^24 pairs");
    for d in 0..4096u16 {
        c.record(theta2(d, d) == p_of(d), || format!("θ({d:#05x},{d:#05x})"));
        for e in 0..4096u16 {
            c.record(theta2(d, e) ^ theta2(e, d) == c_of(d, e), || format!("d = {d:#05x}, e = {e:#05x}"));
        }
    }
    c
}

/// `θ(d+e, f) + θ(d, f) + θ(e, f) = A(d, e, f)` on random triples.
pub fn cocycle_associator(seed: u64, n: u64) -> Check {
    let mut c = Check::new("θ(d+e,f) + θ(d,f) + θ(e,f) = A(d,e,f)");
    let mut rng = stream(seed, 0x101);
    for _ in 0..n {
        let (d, e, f) = (rng.gen::<u16>() & 0xfff, rng.gen::<u16>() & 0xfff, rng.gen::<u16>() & 0xfff);
        let lhs = theta2(d ^ e, f) ^ theta2(d, f) ^ theta2(e, f);
        c.record(lhs == golay::scalar(f, a_of(d, e)), || format!("{d:#05x} {e:#05x} {f:#05x}"));
    }
    c
}

/// The grey/coloured clauses of the distinguished cocycle.
pub fn cocycle_grey_coloured() -> Check {
    let mut c = Check::new("grey/coloured cocycle clauses");
    c.record(theta(OMEGA) == 0, || "θ(Ω) ≠ 0".into());
    for d in 0..4096u16 {
        c.record(theta(d ^ OMEGA) == theta(d), || format!("θ({d:#05x} + Ω)"));
    }
    for e in 0..64u16 {
        // θ(e) for grey e: (w(e) - 1)·γ(e) + w2(e)·ω.
        let w = e.count_ones();
        let mut expect = if w % 2 == 0 { golay::gamma_code(e) } else { 0 };
        if golay::w2_of_weight(w) == 1 {
            expect ^= OMEGA_COCODE;
        }
        c.record(theta(e) == expect, || format!("θ of grey {e:#x}"));
        for hc in 0..64u16 {
            let h = hc << 6;
            c.record(theta2(e, h) == 0, || format!("θ(grey {e:#x}, coloured {h:#05x})"));
            c.record(
                theta2(h, e) == golay::scalar(e, golay::gamma_code(h)),
                || format!("θ(coloured {h:#05x}, grey {e:#x})"),
            );
        }
    }
    c
}

/// Row 0 of `θ(e_m)`, `e_m = g_0 + … + g_m`, printed column by column.
///
/// The five published strings occur for `m = 0..4`; `e_5 = Ω` gives zero.
pub fn cocycle_row0() -> Check {
    let mut c = Check::new("row 0 of θ(e_m), m = 0..5");
    let expected = ["000000", "001111", "111111", "111100", "000000", "000000"];
    let mut got = Vec::new();
    for (m, &want) in expected.iter().enumerate() {
        let e: u16 = (1 << (m + 1)) - 1;
        let t = theta(e);
        // Pairing coordinates to γ coordinates; bit n of these is column n.
        let cols = golay::twist6(t as u8);
        let s: String = (0..6).map(|n| if (cols >> n) & 1 == 1 { '1' } else { '0' }).collect();
        c.record(t >> 6 == 0 && s == want, || format!("m = {m}: {s}, expected {want}"));
        got.push(s);
    }
    c.note(got.join(" "));
    c
}

fn cocycle_suite(cfg: &Config) -> Vec<Check> {
    let mut v = vec![cocycle_pairs()];
    let n = cfg.n(1_000_000);
    if n > 0 {
        v.push(cocycle_associator(cfg.seed, n));
    }
    v.push(cocycle_grey_coloured());
    v.push(cocycle_row0());
    let mut pc = Check::new("P(d+e) = P(d) + P(e) + C(d,e), A(d,d) = 0");
    for d in 0..4096u16 {
        pc.record(a_of(d, d) == 0, || format!("A({d:#05x},{d:#05x})"));
        for e in 0..4096u16 {
            pc.record(p_of(d ^ e) == p_of(d) ^ p_of(e) ^ c_of(d, e), || format!("{d:#05x} {e:#05x}"));
        }
    }
    v.push(pc);
    v
}

/// `d² = (-1)^{|d|/4}` over the whole loop.
pub fn loop_squares() -> Check {
    let mut c = Check::new("d² = (-1)^{|d|/4}, d·d̄ = 1");
    for x in 0..8192u16 {
        let a = Ploop(x);
        let w = golay::code_weight(a.code());
        c.record(a * a == Ploop::new(0, (w / 4) & 1), || format!("{a:?}"));
        c.record(a * a.inv() == Ploop::ONE && a.inv().inv() == a, || format!("inverse of {a:?}"));
    }
    c.record(Ploop::OMEGA.inv() == Ploop::OMEGA, || "Ω̄ ≠ Ω".into());
    for d in 0..4096u16 {
        if golay::code_weight(d) == 12 {
            let a = Ploop::new(d, 0);
            c.record(a.inv() == -a, || format!("dodecad {a:?}"));
        }
    }
    c
}

/// Commutators and associators of random loop elements.
pub fn loop_identities(seed: u64, n: u64) -> Check {
    let mut c = Check::new("[d,e] = (-1)^C(d,e), (de)f = d(ef)·(-1)^A(d,e,f)");
    let mut rng = stream(seed, 0x201);
    for _ in 0..n {
        let (a, b, f) = (random_ploop(&mut rng), random_ploop(&mut rng), random_ploop(&mut rng));
        let cm = c_of(a.code(), b.code());
        c.record(a * b == (b * a).signed(cm), || format!("commutator {a:?} {b:?}"));
        let asc = golay::scalar(f.code(), a_of(a.code(), b.code()));
        c.record((a * b) * f == (a * (b * f)).signed(asc), || format!("associator {a:?} {b:?} {f:?}"));
        let cc = c_of(a.code() ^ b.code(), f.code()) ^ c_of(a.code(), f.code()) ^ c_of(b.code(), f.code());
        c.record(cc == asc, || format!("C(d+e,f) for {a:?} {b:?} {f:?}"));
        // Diassociativity: any two elements generate a group.
        c.record((a * b) * a == a * (b * a) && (a * a) * b == a * (a * b), || format!("{a:?} {b:?}"));
    }
    c
}

fn loop_suite(cfg: &Config) -> Vec<Check> {
    let mut v = vec![loop_squares()];
    let n = cfg.n(1_000_000);
    if n > 0 {
        v.push(loop_identities(cfg.seed, n));
    }
    v
}

// ---------------------------------------------------------------------------
// automorphisms

/// Composition checked against sequential application on all 8192 elements,
/// and the composition formula against a brute-force oracle.
pub fn autpl_compose(seed: u64, n: u64) -> Check {
    let mut c = Check::new("compose = sequential application on all 8192 loop elements");
    let mut rng = stream(seed, 0x301);
    for _ in 0..n {
        let (a, b) = (random_aut(&mut rng), random_aut(&mut rng));
        let ab = a.compose(&b);
        let mut bad = None;
        for x in 0..8192u16 {
            if ab.apply(Ploop(x)) != b.apply(a.apply(Ploop(x))) {
                bad = Some(x);
                break;
            }
        }
        c.record(bad.is_none(), || format!("{a:?} then {b:?} at {:#06x}", bad.unwrap_or(0)));
        // Oracle: [ππ′] fixes every (b_i, 0), so the diagonal part of the
        // composite is read off from the signs of the images of the basis.
        let lift = StdAut::from_perm(a.perm().then(b.perm())).expect("M_24 is closed");
        let mut delta: Cocode = 0;
        for i in 0..12 {
            let img = b.apply(a.apply(Ploop::new(1 << i, 0)));
            delta |= ((img.sign() ^ lift.apply(Ploop::new(1 << i, 0)).sign()) as Cocode) << i;
        }
        c.record(ab.diag() == delta && ab.perm() == lift.perm(), || format!("diagonal of {a:?} then {b:?}"));
        c.record(ab.parity() == a.parity() ^ b.parity(), || format!("parity of {a:?} then {b:?}"));
    }
    c
}

fn autpl_suite(cfg: &Config) -> Vec<Check> {
    let mut out = Vec::new();
    let n = cfg.n(1000);
    if n > 0 {
        out.push(autpl_compose(cfg.seed, n));
    }

    let mut diag = Check::new("4096 distinct automorphisms over each sample permutation");
    for p in M24_SAMPLES {
        let base = StdAut::from_perm(Perm24(p)).expect("sample");
        let mut seen = vec![false; 4096];
        for delta in 0..4096u16 {
            let a = StdAut::from_cocode(delta).compose(&base);
            let sig = (0..12).fold(0usize, |acc, i| acc | (a.apply(Ploop::new(1 << i, 0)).sign() as usize) << i);
            diag.record(!seen[sig], || format!("δ = {delta:#05x} over {p:?}"));
            seen[sig] = true;
        }
    }
    out.push(diag);

    let mut basics = Check::new("lifts fix the basis, fix ±1; diagonals; parity");
    for p in M24_SAMPLES {
        let a = StdAut::from_perm(Perm24(p)).expect("sample");
        for i in 0..12 {
            let img = a.apply(Ploop::new(1 << i, 0));
            basics.record(
                img.sign() == 0 && golay::expand(img.code()) == a.perm().apply_vec(golay::basis()[i]),
                || format!("b_{i} under {p:?}"),
            );
        }
        basics.record(a.apply(Ploop::MINUS_ONE) == Ploop::MINUS_ONE, || format!("-1 under {p:?}"));
        basics.record(a.compose(&StdAut::identity()) == a, || format!("identity on the right of {p:?}"));
    }
    for delta in 0..4096u16 {
        let a = StdAut::from_cocode(delta);
        basics.record(a.parity() == golay::cocode_parity(delta), || format!("parity of δ = {delta:#05x}"));
        let d = Ploop::new(0x9a5, 0);
        basics.record(a.apply(d) == d.signed(golay::scalar(d.code(), delta)), || format!("δ = {delta:#05x}"));
        let e = delta.wrapping_mul(77) & 0xfff;
        basics.record(
            a.compose(&StdAut::from_cocode(e)) == StdAut::from_cocode(delta ^ e),
            || format!("ν_δ ν_ε for δ = {delta:#05x}"),
        );
    }
    out.push(basics);

    let n = cfg.n(100_000);
    if n > 0 {
        let mut hom = Check::new("apply is a loop homomorphism; composition law of the q forms");
        let mut rng = stream(cfg.seed, 0x302);
        let auts: Vec<StdAut> = (0..64).map(|_| random_aut(&mut rng)).collect();
        let lifts: Vec<StdAut> = (0..64)
            .map(|_| StdAut::from_perm(random_perm(&mut rng)).expect("M_24"))
            .collect();
        for _ in 0..n {
            let a = &auts[rng.gen_range(0..auts.len())];
            let (x, y) = (random_ploop(&mut rng), random_ploop(&mut rng));
            hom.record(a.apply(x * y) == a.apply(x) * a.apply(y), || format!("{a:?} on {x:?}, {y:?}"));
            let (p, q) = (&lifts[rng.gen_range(0..64)], &lifts[rng.gen_range(0..64)]);
            let d = x.code();
            let expect = Ploop::new(q.image_code(p.image_code(d)), x.sign() ^ p.q(d) ^ q.q(p.image_code(d)));
            hom.record(q.apply(p.apply(x)) == expect, || format!("{p:?} then {q:?} on {x:?}"));
        }
        out.push(hom);
    }
    out
}

// ---------------------------------------------------------------------------
// Q_x and the Leech lattice

/// Commutator and squaring signs against exact integer representatives.
pub fn qx_contracts(seed: u64, n: u64) -> Check {
    let mut c = Check::new("commutators and squares match the Leech lattice");
    let mut rng = stream(seed, 0x401);
    for _ in 0..n {
        let (a, b) = (random_qx(&mut rng), random_qx(&mut rng));
        let (u, v) = (a.leech_vector(), b.leech_vector());
        let ok = qx::in_leech(&u)
            && a.comm_sign(b) as i64 == (qx::dot8(&u, &v) / 8).rem_euclid(2)
            && (a * a).sign() as i64 == qx::vector_type(&u).rem_euclid(2);
        c.record(ok, || format!("{a:?}, {b:?}"));
    }
    c
}

/// Exhaustive scan of all classes: type histogram and the short index.
pub fn qx_short_scan() -> Check {
    let mut c = Check::new("short classes by exhaustive scan; short_index bijective");
    let mut hist = [0u64; 5];
    let mut hit = vec![false; N_SHORT];
    for cls in 0..1u32 << 24 {
        let r = Qx(cls);
        let t = r.leech_type();
        hist[t as usize] += 1;
        if t == 2 {
            match r.short_index() {
                Ok((n, s)) => {
                    let back = Qx::from_short_index(n).expect("in range").signed(s);
                    c.record(back == r && !hit[n], || format!("class {cls:#08x} -> {n}"));
                    hit[n] = true;
                }
                Err(e) => c.record(false, || format!("class {cls:#08x}: {e}")),
            }
        } else {
            c.record(r.short_index().is_err(), || format!("non-short class {cls:#08x} has an index"));
        }
    }
    c.record(hist[2] == N_SHORT as u64, || format!("{} short classes", hist[2]));
    c.record(hist == [1, 0, 98280, 8386560, 8292375], || format!("type histogram {hist:?}"));
    c.record(hit.iter().all(|&h| h), || "some index is never hit".into());
    for n in 0..N_SHORT {
        let a = Qx::from_short_index(n).expect("in range");
        c.record(a.short_index() == Ok((n, 0)) && a.negate().short_index() == Ok((n, 1)), || format!("index {n}"));
    }
    c.note(format!(
        "types 0..4: {hist:?}; short counts 276 + 276 + 48576 + 49152 = {}",
        hist[2]
    ));
    c
}

fn qx_suite(cfg: &Config) -> Vec<Check> {
    let mut out = Vec::new();
    let n = cfg.n(1_000_000);
    if n > 0 {
        out.push(qx_contracts(cfg.seed, n));
    }
    out.push(qx_short_scan());

    let mut ex = Check::new("sample images in Λ/2Λ");
    let g0 = Qx::from_loop(Ploop::new(1, 0)).leech_vector();
    let expect: [i32; 24] = std::array::from_fn(|i| if (golay::g(0) >> i) & 1 != 0 { 2 } else { 0 });
    ex.record(g0 == expect, || format!("λ of g_0 is {g0:?}"));
    let gamma0 = Qx::from_cocode(golay::point_cocode(0)).leech_vector();
    ex.record(gamma0[0] == -3 && gamma0[1..].iter().all(|&x| x == 1), || format!("λ of γ_0 is {gamma0:?}"));
    for n in 0..276 {
        let r = Qx::from_short_index(n).expect("in range");
        ex.record(r.leech_type() == 2, || format!("λ_ij with index {n}"));
    }
    out.push(ex);

    let n = cfg.n(100_000);
    if n > 0 {
        let mut mul = Check::new("x_d x_e = x_{de} x_{A(d,e)}; conjugation by N respects products");
        let mut rng = stream(cfg.seed, 0x402);
        for i in 0..n {
            let (d, e) = (random_ploop(&mut rng), random_ploop(&mut rng));
            let lhs = Qx::from_loop(d) * Qx::from_loop(e);
            let rhs = Qx::from_loop(d * e) * Qx::from_cocode(a_of(d.code(), e.code()));
            mul.record(lhs == rhs, || format!("{d:?} {e:?}"));
            let g = match i % 4 {
                0 => NGen::X(e),
                1 => NGen::Y(e),
                2 => NGen::Z(e),
                _ => NGen::Aut(Box::new(random_aut(&mut rng))),
            };
            let (a, b) = (random_qx(&mut rng), random_qx(&mut rng));
            let ok = conj_by_gen(a * b, &g) == conj_by_gen(a, &g) * conj_by_gen(b, &g)
                && conj_by_gen(a, &g).leech_type() == a.leech_type();
            mul.record(ok, || format!("{g:?} on {a:?}, {b:?}"));
        }
        out.push(mul);
    }
    out
}

/// `ξ_24` is orthogonal, has order 3 and maps `Λ` into itself.
pub fn xi24_lattice() -> Check {
    let mut c = Check::new("ξ_24 orthogonal of order 3, Λ-invariant");
    for e in 1..=2u32 {
        let m = qx::xi24_matrix(e);
        for i in 0..24 {
            for j in 0..24 {
                let dot: i32 = (0..24).map(|k| m[i][k] * m[j][k]).sum();
                c.record(dot == if i == j { 4 } else { 0 }, || format!("exponent {e}: rows {i}, {j}"));
            }
        }
    }
    // Three applications give the identity on a basis of R^24.
    for i in 0..24 {
        let mut u = [0i32; 24];
        u[i] = 8;
        let w = qx::xi24_apply(&u, 1).and_then(|u| qx::xi24_apply(&u, 1)).and_then(|u| qx::xi24_apply(&u, 1));
        c.record(w == Some(u), || format!("ξ_24³ on e_{i}"));
        c.record(qx::xi24_apply(&qx::xi24_apply(&u, 1).unwrap_or(u), 2) == Some(u), || format!("ξ_24 ξ_24² on e_{i}"));
    }
    // λ_γi ↦ λ_gi − λ_γi ↦ −λ_gi ↦ λ_γi.
    for i in 0..6 {
        let lg = Qx::from_loop(Ploop::new(1 << i, 0)).leech_vector();
        let lgam = Qx::from_cocode(golay::point_cocode(golay::point(0, i))).leech_vector();
        let step1: [i32; 24] = std::array::from_fn(|k| lg[k] - lgam[k]);
        let step2: [i32; 24] = std::array::from_fn(|k| -lg[k]);
        c.record(qx::xi24_apply(&lgam, 1) == Some(step1), || format!("ξ_24 on λ_γ{i}"));
        c.record(qx::xi24_apply(&step1, 1) == Some(step2), || format!("ξ_24 on λ_g{i} - λ_γ{i}"));
        c.record(qx::xi24_apply(&step2, 1) == Some(lgam), || format!("ξ_24 on -λ_g{i}"));
    }
    // The minimal vectors generate Λ, so their images decide invariance.
    for v in qx::minimal_vectors() {
        for e in 1..=2 {
            let ok = qx::xi24_apply(&v, e).map(|w| qx::in_leech(&w) && qx::vector_type(&w) == 2);
            c.record(ok == Some(true), || format!("exponent {e} on {v:?}"));
        }
    }
    c
}

fn leech_suite(cfg: &Config) -> Vec<Check> {
    let mut out = Vec::new();
    let mut mins = Check::new("196560 minimal vectors cover the short classes twice");
    let vs = qx::minimal_vectors();
    mins.record(vs.len() == 196560, || format!("{} minimal vectors", vs.len()));
    let mut hits = vec![0u8; 1 << 24];
    for v in &vs {
        let ok = qx::in_leech(v) && qx::vector_type(v) == 2;
        mins.record(ok, || format!("{v:?}"));
        if let Ok(cls) = qx::leech_class(v) {
            hits[cls as usize] = hits[cls as usize].saturating_add(1);
        }
    }
    for (cls, &h) in hits.iter().enumerate() {
        let short = Qx(cls as u32).is_short();
        mins.record((h == 2) == short && (h == 0 || h == 2), || format!("class {cls:#08x} hit {h} times"));
    }
    out.push(mins);

    let n = cfg.n(100_000);
    if n > 0 {
        let mut reps = Check::new("integer representatives lie in Λ and in their class");
        let mut rng = stream(cfg.seed, 0x501);
        for _ in 0..n {
            let a = random_qx(&mut rng);
            let u = a.leech_vector();
            reps.record(qx::in_leech(&u) && qx::leech_class(&u) == Ok(a.leech_mod2()), || format!("{a:?}"));
        }
        out.push(reps);
    }
    out.push(xi24_lattice());
    out
}

// ---------------------------------------------------------------------------
// ξ

/// `conj_by_xi` has order 3 on all of `Q_x`.
pub fn xi_order_three() -> Check {
    let mut c = Check::new("conj_by_xi has order 3 on all 2^25 elements");
    let t = Instant::now();
    for a in 0..1u32 << 25 {
        let a = Qx(a);
        let b = conj_by_xi(a, 1);
        let ok = conj_by_xi(conj_by_xi(b, 1), 1) == a && conj_by_xi(b, 2) == a;
        c.record(ok, || format!("{a:?}"));
    }
    let secs = t.elapsed().as_secs_f64();
    c.note(format!("{secs:.2} s"));
    c.record(secs < 10.0, || format!("took {secs:.2} s"));
    c
}

/// `conj_by_xi` agrees with `ξ_24` modulo `2Λ`.
pub fn xi_compat(seed: u64, n: u64) -> Check {
    let mut c = Check::new("conj_by_xi matches ξ_24 mod 2Λ");
    let mut rng = stream(seed, 0x601);
    for _ in 0..n {
        let a = random_qx(&mut rng);
        for e in 1..=2u32 {
            let img = qx::xi24_apply(&a.leech_vector(), e);
            let cls = img.and_then(|u| qx::leech_class(&u).ok());
            c.record(cls == Some(conj_by_xi(a, e).leech_mod2()), || format!("{a:?}, exponent {e}"));
        }
    }
    c
}

fn xi_suite(cfg: &Config) -> Vec<Check> {
    let mut out = vec![xi_order_three()];
    let mut grey = Check::new("x_{g_i} ↦ x_{γ_i} ↦ (-1)^{w2} x_{g_i} x_{γ_i} ↦ x_{g_i}");
    for i in 0..6 {
        let gi = Qx::new(0, 1 << i, 0);
        let gam = Qx::from_cocode(golay::point_cocode(golay::point(0, i)));
        let x1 = conj_by_xi(gi, 1);
        let x2 = conj_by_xi(x1, 1);
        grey.record(x1 == gam, || format!("i = {i}: {x1:?}"));
        grey.record(x2 == gi * gam, || format!("i = {i}: {x2:?}"));
        grey.record(conj_by_xi(x2, 1) == gi, || format!("i = {i}"));
    }
    for hc in 0..64u16 {
        let h = Qx::from_loop(Ploop::new(hc << 6, 0)) * Qx::from_cocode(golay::gamma_code(hc << 6));
        grey.record(conj_by_xi(h, 1) == h, || format!("coloured {hc:#x}"));
    }
    out.push(grey);
    let n = cfg.n(100_000);
    if n > 0 {
        out.push(xi_compat(cfg.seed, n));
    }
    let n = cfg.n(100);
    if n > 0 {
        out.extend(per_modulus(cfg, |m, seed, _| {
            let mut c = Check::new(format!("ξ³ = 1 on random vectors, p = {}", m.p()));
            let mut rng = stream(seed, 0x602 + m.p() as u64);
            let word = [Atom::L(1), Atom::L(1), Atom::L(1)];
            for i in 0..n {
                let v = MmVector::random(m, &mut rng);
                let mut w = v.clone();
                w.apply_word(&word);
                c.record(w == v, || format!("vector {i}"));
            }
            vec![c]
        }));
    }
    out
}

// ---------------------------------------------------------------------------
// the representation

/// Run `f` for each configured modulus in parallel and collect the checks in
/// modulus order.
fn per_modulus(cfg: &Config, f: impl Fn(Modulus, u64, Option<u64>) -> Vec<Check> + Sync) -> Vec<Check> {
    let f = &f;
    std::thread::scope(|s| {
        let handles: Vec<_> = cfg
            .moduli
            .iter()
            .map(|&m| s.spawn(move || f(m, cfg.seed, cfg.samples)))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("suite thread panicked"))
            .collect()
    })
}

fn run(v: &MmVector, word: &[Atom]) -> MmVector {
    let mut w = v.clone();
    w.apply_word(word);
    w
}

fn first_diff(a: &MmVector, b: &MmVector) -> String {
    let (x, y) = (a.to_logical(), b.to_logical());
    match (0..DIM).find(|&l| x[l] != y[l]) {
        Some(l) => format!("coordinate {l}: {} vs {}", x[l], y[l]),
        None => "equal".into(),
    }
}

/// Named relations `lhs = rhs` between words, with fresh random parameters.
pub fn relations<R: Rng + ?Sized>(rng: &mut R) -> Vec<(&'static str, Vec<Atom>, Vec<Atom>)> {
    let d = random_ploop(rng);
    let e = random_ploop(rng);
    let delta = random_cocode(rng);
    let (dc, ec) = (d.code(), e.code());
    let mut out = vec![
        ("τ³ = 1", vec![Atom::T(1); 3], vec![]),
        ("τ τ² = 1", vec![Atom::T(1), Atom::T(2)], vec![]),
        ("ξ³ = 1", vec![Atom::L(1); 3], vec![]),
        ("ξ ξ² = 1", vec![Atom::L(1), Atom::L(2)], vec![]),
        ("x_d y_d z_d = 1", vec![Atom::X(d), Atom::Y(d), Atom::Z(d)], vec![]),
        ("x_d τ = τ y_d", vec![Atom::X(d), Atom::T(1)], vec![Atom::T(1), Atom::Y(d)]),
        ("x_d τ² = τ² z_d", vec![Atom::X(d), Atom::T(2)], vec![Atom::T(2), Atom::Z(d)]),
    ];
    let comm = if golay::scalar(dc, delta) == 1 {
        vec![Atom::X(Ploop::MINUS_ONE)]
    } else {
        vec![]
    };
    out.push((
        "[x_d, ν_δ] = x^⟨d,δ⟩",
        vec![Atom::X(d.inv()), Atom::D(delta), Atom::X(d), Atom::D(delta)],
        comm,
    ));
    out.push((
        "x_d x_e = x_de ν_A(d,e)",
        vec![Atom::X(d), Atom::X(e)],
        vec![Atom::X(d * e), Atom::D(a_of(dc, ec))],
    ));
    let mut rhs = vec![Atom::D(a_of(dc, ec))];
    if c_of(dc, ec) == 1 {
        rhs.push(Atom::Z(Ploop::MINUS_ONE));
    }
    out.push((
        "[x_d, y_e] = z^C(d,e) x_A(d,e)",
        vec![Atom::X(d.inv()), Atom::Y(e.inv()), Atom::X(d), Atom::Y(e)],
        rhs,
    ));
    let odd = if golay::cocode_parity(delta) == 1 { delta } else { delta ^ 1 };
    out.push(("ν_δ τ = τ² ν_δ for odd δ", vec![Atom::D(odd), Atom::T(1)], vec![Atom::T(2), Atom::D(odd)]));
    let r = random_qx(rng);
    let mut lhs = vec![Atom::L(2)];
    lhs.extend(qx_word(r));
    lhs.push(Atom::L(1));
    out.push(("ξ⁻¹ x_r ξ = x_(ξ-image of r)", lhs, qx_word(conj_by_xi(r, 1))));
    out
}

/// The relations on `n` random vectors.
pub fn rep_relation_check(m: Modulus, seed: u64, n: u64) -> Check {
    let mut c = Check::new(format!("relations, p = {}", m.p()));
    let mut rng = stream(seed, 0x700 + m.p() as u64);
    for i in 0..n {
        let v = MmVector::random(m, &mut rng);
        for (name, lhs, rhs) in relations(&mut rng) {
            let (a, b) = (run(&v, &lhs), run(&v, &rhs));
            c.record(a == b, || {
                format!(
                    "{name} on vector {i}: {} vs {}; {}",
                    format_word(&lhs),
                    format_word(&rhs),
                    first_diff(&a, &b)
                )
            });
        }
    }
    c
}

/// `n` random atoms act on the short block as the signed permutation of
/// conjugation in `Q_x`.
pub fn rep_intertwining_check(m: Modulus, seed: u64, n: u64) -> Check {
    let mut c = Check::new(format!("short block matches conjugation in Q_x, p = {}", m.p()));
    let mut rng = stream(seed, 0x800 + m.p() as u64);
    let tags = ['x', 'y', 'z', 'd', 'p', 'l'];
    let p = m.p();
    for i in 0..n {
        let atom = random_atom(&mut rng, tags[i as usize % tags.len()]);
        let act = conj_action(&atom).expect("monomial on the short block");
        let v = MmVector::random(m, &mut rng);
        let (x, y) = (v.to_logical(), run(&v, std::slice::from_ref(&atom)).to_logical());
        let mut bad = None;
        for (n0, &r) in short_table().iter().enumerate() {
            let ok = match act(r).short_index() {
                Ok((n2, s)) => {
                    let want = if s == 1 { neg(p, x[OFS_SHORT + n0]) } else { x[OFS_SHORT + n0] };
                    y[OFS_SHORT + n2] == want
                }
                Err(_) => false,
            };
            if !ok {
                bad = Some(n0);
                break;
            }
        }
        c.record(bad.is_none(), || format!("{atom} at short index {}", bad.unwrap_or(0)));
    }
    c
}

/// `τ` maps each `(ij)_1` to `X_ij - X^+_ij` and fixes each `(ii)_1`.
pub fn rep_tau_dictionary(m: Modulus) -> Check {
    let mut c = Check::new(format!("τ on (ij)_1 is X_ij - X^+_ij, all 276 pairs, p = {}", m.p()));
    for n in 0..276 {
        let (i, j) = qx::pair_from_index(n);
        let mut v = MmVector::zero(m);
        v.set(a_index(i, j), 1).expect("in range");
        v.apply_atom(&Atom::T(1));
        let mut want = MmVector::zero(m);
        want.set(OFS_B + n, 1).expect("in range");
        want.set(OFS_C + n, m.p() - 1).expect("in range");
        c.record(v == want, || format!("({i}{j})_1: {}", first_diff(&v, &want)));
    }
    for i in 0..24 {
        let mut v = MmVector::zero(m);
        v.set(a_index(i, i), 1).expect("in range");
        let w = run(&v, &[Atom::T(1)]);
        c.record(w == v, || format!("({i}{i})_1 not fixed"));
    }
    c
}

/// The packed vectors agree with the scalar reference on random atoms.
pub fn rep_reference_check(m: Modulus, seed: u64, n: u64) -> Check {
    let mut c = Check::new(format!("packed kernels agree with the reference, p = {}", m.p()));
    let mut rng = stream(seed, 0x900 + m.p() as u64);
    let tags = ['x', 'y', 'z', 'd', 'p', 't', 'l'];
    for i in 0..n {
        let atom = random_atom(&mut rng, tags[i as usize % tags.len()]);
        let v = MmVector::random(m, &mut rng);
        let mut r = RefVector::from_values(m, v.to_logical()).expect("valid residues");
        r.apply_atom(&atom);
        let w = run(&v, std::slice::from_ref(&atom));
        let ok = w.to_logical() == r.values();
        c.record(ok, || format!("{atom} on vector {i}"));
    }
    c
}

fn rep_relations(m: Modulus, seed: u64, samples: Option<u64>) -> Vec<Check> {
    let n = |d: u64| samples.unwrap_or(d);
    let mut out = Vec::new();
    let mut basics = Check::new(format!("x_1 = 1, x_-1 negates Z and Y, p = {}", m.p()));
    let mut rng = stream(seed, 0xa00 + m.p() as u64);
    let v = MmVector::random(m, &mut rng);
    basics.record(run(&v, &[Atom::X(Ploop::ONE)]) == v, || "x_1".into());
    basics.record(run(&v, &[Atom::D(0)]) == v, || "ν_0".into());
    let (x, y) = (v.to_logical(), run(&v, &[Atom::X(Ploop::MINUS_ONE)]).to_logical());
    for l in 0..DIM {
        let want = if l >= OFS_Z { neg(m.p(), x[l]) } else { x[l] };
        basics.record(y[l] == want, || format!("coordinate {l}"));
    }
    out.push(basics);
    out.push(rep_tau_dictionary(m));
    if n(100) > 0 {
        out.push(rep_relation_check(m, seed, n(100)));
        out.push(rep_intertwining_check(m, seed, n(100)));
    }
    if n(8) > 0 {
        out.push(rep_reference_check(m, seed, n(8)));
    }
    out
}

/// The weighted norm is preserved by every kind of atom.
pub fn rep_norm_check(m: Modulus, seed: u64, n: u64) -> Check {
    let mut c = Check::new(format!("norm invariant under every atom, p = {}", m.p()));
    let mut rng = stream(seed, 0xb00 + m.p() as u64);
    for i in 0..n {
        let mut v = MmVector::random(m, &mut rng);
        let before = v.norm();
        for tag in ['x', 'y', 'z', 'd', 'p', 't', 'l'] {
            let atom = random_atom(&mut rng, tag);
            v.apply_atom(&atom);
            let after = v.norm();
            c.record(after == before, || format!("{atom} on vector {i}: {before} -> {after}"));
        }
        for atom in [Atom::T(1), Atom::T(2), Atom::L(1), Atom::L(2)] {
            v.apply_atom(&atom);
            c.record(v.norm() == before, || format!("{atom} on vector {i}"));
        }
    }
    c
}

fn rep_norm(m: Modulus, seed: u64, samples: Option<u64>) -> Vec<Check> {
    let mut out = Vec::new();
    let mut basics = Check::new(format!("norm of zero and of basis vectors, p = {}", m.p()));
    basics.record(MmVector::zero(m).norm() == 0, || "zero vector".into());
    for (l, w) in [(0usize, 1u32), (30, 2), (OFS_B, 1), (OFS_T, 1), (OFS_Z + 5, 1), (OFS_Y, 1)] {
        let mut v = MmVector::zero(m);
        v.set(l, 1).expect("in range");
        basics.record(v.norm() == w % m.p(), || format!("basis vector {l}"));
    }
    out.push(basics);
    let n = samples.unwrap_or(100);
    if n > 0 {
        out.push(rep_norm_check(m, seed, n));
    }
    out
}

/// Check every relation of [`relations`] against the reference instead of
/// the packed code, on one vector.
pub fn reference_relations(m: Modulus, seed: u64) -> Check {
    let mut c = Check::new(format!("relations on the reference, p = {}", m.p()));
    let mut rng = stream(seed, 0xc00 + m.p() as u64);
    let v = MmVector::random(m, &mut rng);
    let r = RefVector::from_values(m, v.to_logical()).expect("valid");
    for (name, lhs, rhs) in relations(&mut rng) {
        let (mut a, mut b) = (r.clone(), r.clone());
        a.apply_word(&lhs);
        b.apply_word(&rhs);
        c.record(a == b, || name.to_string());
    }
    c
}

/// One line describing the configuration, for report headers.
pub fn describe(cfg: &Config) -> String {
    let ps: Vec<String> = cfg.moduli.iter().map(|m| m.p().to_string()).collect();
    format!(
        "seed {}, moduli {}, samples {}",
        cfg.seed,
        ps.join(","),
        cfg.samples.map_or("default".to_string(), |n| n.to_string())
    )
}
