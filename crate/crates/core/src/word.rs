//! Generator atoms and words.
//!
//! Grammar: `atom ('*' atom)*`, where an atom is one of
//!
//! * `x<hex>`, `y<hex>`, `z<hex>`: a Parker loop element (13 bits, sign in bit 12),
//! * `d<hex>`: the diagonal automorphism of a cocode element (12 bits),
//! * `p[i0,...,i23]`: the standard automorphism lifting a permutation in `M_24`,
//! * `t1`, `t2`: the triality element `τ` and its square,
//! * `l1`, `l2`: the element `ξ` and its square.
//!
//! The empty string is the empty word.

use std::fmt;
use std::str::FromStr;

use crate::autpl::{Perm24, StdAut};
use crate::error::{Error, Result};
use crate::golay::Cocode;
use crate::parker::Ploop;

/// One generator of the group acting on the representation.
#[derive(Clone, PartialEq, Eq)]
pub enum Atom {
    X(Ploop),
    Y(Ploop),
    Z(Ploop),
    D(Cocode),
    P(Box<StdAut>),
    T(u8),
    L(u8),
}

impl Atom {
    /// Single-letter tag used in the text form.
    pub fn tag(&self) -> char {
        match self {
            Atom::X(_) => 'x',
            Atom::Y(_) => 'y',
            Atom::Z(_) => 'z',
            Atom::D(_) => 'd',
            Atom::P(_) => 'p',
            Atom::T(_) => 't',
            Atom::L(_) => 'l',
        }
    }

    /// The automorphism lifting a permutation, with trivial diagonal part.
    pub fn perm(images: [u8; 24]) -> Result<Atom> {
        Ok(Atom::P(Box::new(StdAut::from_perm(Perm24::new(images)?)?)))
    }

    /// An atom whose product with `self` is the identity, where one exists
    /// among atoms.
    pub fn inverse(&self) -> Option<Atom> {
        match self {
            Atom::X(d) => Some(Atom::X(d.inv())),
            Atom::Y(d) => Some(Atom::Y(d.inv())),
            Atom::Z(d) => Some(Atom::Z(d.inv())),
            Atom::D(d) => Some(Atom::D(*d)),
            Atom::T(e) => Some(Atom::T(3 - e)),
            Atom::L(e) => Some(Atom::L(3 - e)),
            Atom::P(_) => None,
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::X(d) | Atom::Y(d) | Atom::Z(d) => write!(f, "{}{:x}", self.tag(), d.0),
            Atom::D(d) => write!(f, "d{:x}", d),
            Atom::P(a) => {
                let imgs: Vec<String> = a.perm().0.iter().map(|x| x.to_string()).collect();
                write!(f, "p[{}]", imgs.join(","))
            }
            Atom::T(e) | Atom::L(e) => write!(f, "{}{}", self.tag(), e),
        }
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::P(a) if a.diag() != 0 => write!(f, "{:?}", a),
            _ => write!(f, "{}", self),
        }
    }
}

/// Render a word in the text form.
pub fn format_word(word: &[Atom]) -> String {
    word.iter().map(|a| a.to_string()).collect::<Vec<_>>().join("*")
}

fn parse_err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        pos,
        msg: msg.into(),
    }
}

fn parse_hex(text: &str, pos: usize, max: u32) -> Result<u32> {
    if text.is_empty() {
        return Err(parse_err(pos, "expected a hexadecimal number"));
    }
    let v = u32::from_str_radix(text, 16)
        .map_err(|_| parse_err(pos, format!("bad hexadecimal number '{text}'")))?;
    if v > max {
        return Err(parse_err(pos, format!("value {v:#x} exceeds {max:#x}")));
    }
    Ok(v)
}

fn parse_atom(text: &str, pos: usize) -> Result<Atom> {
    let mut chars = text.chars();
    let tag = chars
        .next()
        .ok_or_else(|| parse_err(pos, "empty atom"))?;
    let rest = chars.as_str();
    match tag {
        'x' | 'y' | 'z' => {
            let v = Ploop(parse_hex(rest, pos + 1, 0x1fff)? as u16);
            Ok(match tag {
                'x' => Atom::X(v),
                'y' => Atom::Y(v),
                _ => Atom::Z(v),
            })
        }
        'd' => Ok(Atom::D(parse_hex(rest, pos + 1, 0xfff)? as Cocode)),
        't' | 'l' => {
            let e = match rest {
                "1" => 1,
                "2" => 2,
                _ => return Err(parse_err(pos + 1, format!("exponent must be 1 or 2, got '{rest}'"))),
            };
            Ok(if tag == 't' { Atom::T(e) } else { Atom::L(e) })
        }
        'p' => {
            let inner = rest
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| parse_err(pos + 1, "expected p[i0,...,i23]"))?;
            let mut imgs = Vec::with_capacity(24);
            for part in inner.split(',') {
                let part = part.trim();
                let v: u8 = part
                    .parse()
                    .map_err(|_| parse_err(pos + 2, format!("bad point '{part}'")))?;
                imgs.push(v);
            }
            let perm = Perm24::from_slice(&imgs)?;
            Ok(Atom::P(Box::new(StdAut::from_perm(perm)?)))
        }
        _ => Err(parse_err(pos, format!("unknown generator '{tag}'"))),
    }
}

/// Parse a word; positions in errors are byte offsets into `text`.
pub fn parse_word(text: &str) -> Result<Vec<Atom>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut atoms = Vec::new();
    let mut start = 0;
    // Split on '*' outside brackets (permutations contain commas only, but be safe).
    let mut depth = 0;
    for (i, ch) in text.char_indices().chain(std::iter::once((text.len(), '*'))) {
        match ch {
            '[' => depth += 1,
            ']' => depth -= 1,
            '*' if depth == 0 => {
                let piece = &text[start..i];
                let lead = piece.len() - piece.trim_start().len();
                atoms.push(parse_atom(piece.trim(), start + lead)?);
                start = i + 1;
            }
            _ => {}
        }
    }
    Ok(atoms)
}

impl FromStr for Atom {
    type Err = Error;
    fn from_str(s: &str) -> Result<Atom> {
        parse_atom(s.trim(), 0)
    }
}
