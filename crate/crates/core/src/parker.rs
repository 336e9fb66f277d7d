//! The Parker loop: codewords with a sign, multiplied through a cocycle.
//!
//! The cocycle is stored as the map `d ↦ θ(d)` into the cocode, with
//! `θ(d, e) = ⟨e, θ(d)⟩`. It is built from the Golay basis by setting
//! `θ(b_i, b_j)` to 0 for `i < j`, to `P(b_i)` for `i = j` and to
//! `C(b_i, b_j)` for `i > j`, then extending with the associator.

use std::fmt;
use std::ops::{Mul, Neg};
use std::sync::OnceLock;

use crate::golay::{self, Code, Cocode};

/// Bit carrying the sign of a loop element.
pub const SIGN: u16 = 0x1000;

fn theta_table() -> &'static [Cocode] {
    static T: OnceLock<Vec<Cocode>> = OnceLock::new();
    T.get_or_init(build_cocycle)
}

/// Build the table of `θ(d)` for all 4096 codewords.
pub fn build_cocycle() -> Vec<Cocode> {
    let basis = golay::basis();
    let mut base = [0 as Cocode; 12];
    for (i, t) in base.iter_mut().enumerate() {
        let bi = basis[i];
        for (j, &bj) in basis.iter().enumerate() {
            let bit = if j > i {
                0
            } else if j == i {
                (bi.count_ones() / 4) & 1
            } else {
                ((bi & bj).count_ones() / 2) & 1
            };
            // θ(b_i, b_j) = ⟨b_j, θ(b_i)⟩ is bit j of θ(b_i).
            *t |= (bit as Cocode) << j;
        }
    }
    let mut theta = vec![0 as Cocode; 4096];
    for c in 1..4096usize {
        let top = 15 - (c as u16).leading_zeros() as usize;
        let rest = c ^ (1 << top);
        let assoc = golay::syndrome(golay::expand(rest as Code) & basis[top]);
        theta[c] = theta[rest] ^ base[top] ^ assoc;
    }
    theta
}

/// `θ(d)` as a cocode element.
#[inline]
pub fn theta(d: Code) -> Cocode {
    theta_table()[(d & 0xfff) as usize]
}

/// `θ(d, e) = ⟨e, θ(d)⟩`.
#[inline]
pub fn theta2(d: Code, e: Code) -> u32 {
    golay::scalar(e, theta(d))
}

/// `P(d) = |d| / 4 mod 2`.
#[inline]
pub fn p_of(d: Code) -> u32 {
    (golay::code_weight(d) >> 2) & 1
}

/// `C(d, e) = |d ∩ e| / 2 mod 2`.
#[inline]
pub fn c_of(d: Code, e: Code) -> u32 {
    ((golay::expand(d) & golay::expand(e)).count_ones() >> 1) & 1
}

/// `A(d, e)`: the cocode element of `d ∩ e`, so that
/// `A(d, e, f) = ⟨f, A(d, e)⟩ = |d ∩ e ∩ f| mod 2`.
#[inline]
pub fn a_of(d: Code, e: Code) -> Cocode {
    golay::syndrome(golay::expand(d) & golay::expand(e))
}

/// An element `(d, λ)` of the Parker loop: 12 code bits and a sign in bit 12.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Ploop(pub u16);

impl Ploop {
    pub const ONE: Ploop = Ploop(0);
    pub const MINUS_ONE: Ploop = Ploop(SIGN);
    pub const OMEGA: Ploop = Ploop(golay::OMEGA);

    #[inline]
    pub fn new(code: Code, sign: u32) -> Ploop {
        Ploop((code & 0xfff) | ((sign as u16 & 1) << 12))
    }

    #[inline]
    pub fn code(self) -> Code {
        self.0 & 0xfff
    }

    #[inline]
    pub fn sign(self) -> u32 {
        (self.0 >> 12) as u32 & 1
    }

    /// The inverse `(-1)^{P(d)} d`.
    #[inline]
    pub fn inv(self) -> Ploop {
        Ploop(self.0 ^ ((p_of(self.code()) as u16) << 12))
    }

    /// `d²`, which is `(-1)^{P(d)}`.
    #[inline]
    pub fn square(self) -> Ploop {
        self * self
    }

    /// Flip the sign when `bit` is 1.
    #[inline]
    pub fn signed(self, bit: u32) -> Ploop {
        Ploop(self.0 ^ ((bit as u16 & 1) << 12))
    }
}

impl Mul for Ploop {
    type Output = Ploop;
    #[inline]
    fn mul(self, rhs: Ploop) -> Ploop {
        let s = self.sign() ^ rhs.sign() ^ theta2(self.code(), rhs.code());
        Ploop::new(self.code() ^ rhs.code(), s)
    }
}

impl Neg for Ploop {
    type Output = Ploop;
    #[inline]
    fn neg(self) -> Ploop {
        Ploop(self.0 ^ SIGN)
    }
}

impl fmt::Debug for Ploop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{:03x}", if self.sign() == 1 { "-" } else { "" }, self.code())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golay::{gamma_code, scalar, twist6, w2_of_weight, OMEGA, OMEGA_COCODE};

    #[test]
    fn grey_basis_has_trivial_cocycle() {
        for i in 0..6 {
            assert_eq!(theta(1 << i), 0);
        }
        assert_eq!(theta(OMEGA), 0);
        for d in 0..4096u16 {
            assert_eq!(theta(d ^ OMEGA), theta(d));
        }
    }

    #[test]
    fn row0_of_partial_sums() {
        // e_m = g_0 + ... + g_m; θ(e_m) is grey and lies in row 0.
        let expected = [0b000000, 0b001111, 0b111111, 0b111100, 0b000000];
        for (m, &row) in expected.iter().enumerate() {
            let e: Code = (1 << (m + 1)) - 1;
            let t = theta(e);
            assert_eq!(t >> 6, 0);
            // Bit n of the pattern is column n, written left to right.
            let gamma_coords = twist6(t as u8);
            let printed = (0..6).fold(0u8, |acc, n| acc << 1 | ((gamma_coords >> n) & 1));
            assert_eq!(printed, row, "m = {m}");
        }
    }

    #[test]
    fn grey_theta_formula() {
        for e in 0..64u16 {
            let w = e.count_ones();
            let mut expect = 0;
            // The coefficient w - 1 of γ(e) is odd exactly when w is even.
            if w % 2 == 0 {
                expect ^= gamma_code(e);
            }
            if w2_of_weight(w) == 1 {
                expect ^= OMEGA_COCODE;
            }
            assert_eq!(theta(e), expect, "e = {e:#x}");
        }
    }

    #[test]
    fn cocycle_clauses_on_basis_pairs() {
        for d in 0..4096u16 {
            assert_eq!(theta2(d, d), p_of(d));
        }
        for d in (0..4096u16).step_by(7) {
            for e in 0..4096u16 {
                assert_eq!(theta2(d, e) ^ theta2(e, d), c_of(d, e));
            }
        }
    }

    #[test]
    fn grey_coloured_clauses() {
        for e in 0..64u16 {
            for hc in 0..64u16 {
                let h = hc << 6;
                assert_eq!(theta2(e, h), 0);
                assert_eq!(theta2(h, e), scalar(e, gamma_code(h)));
            }
        }
    }

    #[test]
    fn loop_basics() {
        let d = Ploop::new(0x123, 0);
        assert_eq!(d * Ploop::ONE, d);
        assert_eq!(d * Ploop::MINUS_ONE, -d);
        assert_eq!(Ploop::OMEGA.inv(), Ploop::OMEGA);
        for c in 0..4096u16 {
            for s in 0..2 {
                let a = Ploop::new(c, s);
                assert_eq!(a * a.inv(), Ploop::ONE);
                assert_eq!(a.square(), Ploop::new(0, p_of(c)));
            }
        }
    }
}
