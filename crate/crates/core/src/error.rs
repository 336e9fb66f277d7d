use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported modulus {0}; expected one of 3, 7, 15, 31, 127, 255")]
    InvalidModulus(u32),
    #[error("value {value} out of range for modulus {p}")]
    ValueOutOfRange { value: u32, p: u32 },
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("bit vector {0:#08x} is not a Golay codeword")]
    NotACodeword(u32),
    #[error("code element {0:#05x} is not grey")]
    NotGrey(u16),
    #[error("code element {0:#05x} is not an octad")]
    NotAnOctad(u16),
    #[error("cocode element {cocode:#05x} is not an even subset of octad {octad:#05x}")]
    NotInOctad { octad: u16, cocode: u16 },
    #[error("not a permutation of 0..23: {0:?}")]
    InvalidPermutation(Vec<u8>),
    #[error("permutation {0:?} does not preserve the Golay code")]
    NotInM24(Vec<u8>),
    #[error("element {0:#08x} of Q_x is not short")]
    NotShort(u32),
    #[error("short vector index {0} out of range")]
    BadShortIndex(u32),
    #[error("unsupported generator for this operation: {0}")]
    UnsupportedAtom(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown {kind} {name:?}")]
    Unknown { kind: &'static str, name: String },
    #[error("malformed vector file: {0}")]
    BadVectorFile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
