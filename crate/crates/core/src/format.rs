//! On-disk formats for keys and cipher streams.
//!
//! Every symbol is stored in its own byte with the high bit clear.
//!
//! Stream file:
//!
//! ```text
//! offset  size  field
//!      0     4  magic "RSKC"
//!      4     1  version (1)
//!      5     4  chunk_count, u32 big-endian
//!      9     8  original_len, u64 big-endian (payload symbols)
//!     17   127  codeword 0
//!    ...        one 127-byte codeword per chunk
//! ```
//!
//! Key file: exactly 63 bytes, one symbol each.

use thiserror::Error;

use crate::gf::Gf;
use crate::keychain::{chunk_count_for, CipherStream, Key, CHUNK_LEN};
use crate::rs::{Codeword, N};

pub const MAGIC: [u8; 4] = *b"RSKC";
pub const VERSION: u8 = 1;
pub const HEADER_LEN: usize = 17;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("file is {got} bytes, shorter than the {needed}-byte header")]
    Truncated { needed: usize, got: usize },
    #[error("bad magic {0:02x?}, not a stream file")]
    BadMagic([u8; 4]),
    #[error("unsupported stream version {0}")]
    UnsupportedVersion(u8),
    #[error("header says {chunk_count} chunks but original length {original_len} needs {expected}")]
    ChunkCount {
        chunk_count: u32,
        original_len: u64,
        expected: u64,
    },
    #[error("expected {expected} body bytes for the declared chunks, found {got}")]
    BodyLength { expected: u64, got: u64 },
    #[error("byte 0x{byte:02x} at offset {offset} has its high bit set")]
    HighBit { offset: usize, byte: u8 },
    #[error("key file must be {CHUNK_LEN} bytes, got {got}")]
    KeyLength { got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StreamFileHeader {
    pub chunk_count: u32,
    pub original_len: u64,
}

impl StreamFileHeader {
    pub fn to_bytes(&self) -> [u8; HEADER_LEN] {
        let mut out = [0u8; HEADER_LEN];
        out[..4].copy_from_slice(&MAGIC);
        out[4] = VERSION;
        out[5..9].copy_from_slice(&self.chunk_count.to_be_bytes());
        out[9..].copy_from_slice(&self.original_len.to_be_bytes());
        out
    }

    /// Parses and validates the header at the start of `bytes`.
    pub fn parse(bytes: &[u8]) -> Result<StreamFileHeader, FormatError> {
        if bytes.len() < HEADER_LEN {
            return Err(FormatError::Truncated {
                needed: HEADER_LEN,
                got: bytes.len(),
            });
        }
        let magic: [u8; 4] = bytes[..4].try_into().unwrap();
        if magic != MAGIC {
            return Err(FormatError::BadMagic(magic));
        }
        if bytes[4] != VERSION {
            return Err(FormatError::UnsupportedVersion(bytes[4]));
        }
        let chunk_count = u32::from_be_bytes(bytes[5..9].try_into().unwrap());
        let original_len = u64::from_be_bytes(bytes[9..17].try_into().unwrap());
        let expected = chunk_count_for(original_len);
        if expected != chunk_count as u64 {
            return Err(FormatError::ChunkCount {
                chunk_count,
                original_len,
                expected,
            });
        }
        Ok(StreamFileHeader {
            chunk_count,
            original_len,
        })
    }
}

/// Header followed by the codewords.
///
/// Panics if the stream has more than `u32::MAX` chunks.
pub fn serialize_stream(stream: &CipherStream) -> Vec<u8> {
    let header = StreamFileHeader {
        chunk_count: u32::try_from(stream.chunk_count()).expect("chunk count fits in u32"),
        original_len: stream.original_len(),
    };
    let mut out = Vec::with_capacity(HEADER_LEN + stream.chunk_count() * N);
    out.extend_from_slice(&header.to_bytes());
    for cw in stream.codewords() {
        out.extend(cw.symbols().iter().map(|s| s.value()));
    }
    out
}

pub fn parse_stream(bytes: &[u8]) -> Result<CipherStream, FormatError> {
    let header = StreamFileHeader::parse(bytes)?;
    let body = &bytes[HEADER_LEN..];
    let expected = header.chunk_count as u64 * N as u64;
    if body.len() as u64 != expected {
        return Err(FormatError::BodyLength {
            expected,
            got: body.len() as u64,
        });
    }

    let codewords = body
        .chunks_exact(N)
        .enumerate()
        .map(|(c, raw)| {
            let base = HEADER_LEN + c * N;
            let symbols = symbols_from_bytes(raw, base)?;
            Ok(Codeword::from_slice(&symbols).expect("N bytes"))
        })
        .collect::<Result<Vec<_>, FormatError>>()?;

    Ok(CipherStream::new(header.original_len, codewords).expect("header validated chunk count"))
}

pub fn serialize_key(key: &Key) -> [u8; CHUNK_LEN] {
    key.to_bytes()
}

pub fn parse_key(bytes: &[u8]) -> Result<Key, FormatError> {
    if bytes.len() != CHUNK_LEN {
        return Err(FormatError::KeyLength { got: bytes.len() });
    }
    let symbols = symbols_from_bytes(bytes, 0)?;
    Ok(Key::new(symbols.try_into().expect("CHUNK_LEN symbols")))
}

fn symbols_from_bytes(raw: &[u8], base: usize) -> Result<Vec<Gf>, FormatError> {
    raw.iter()
        .enumerate()
        .map(|(i, &byte)| {
            Gf::new(byte).map_err(|_| FormatError::HighBit {
                offset: base + i,
                byte,
            })
        })
        .collect()
}
