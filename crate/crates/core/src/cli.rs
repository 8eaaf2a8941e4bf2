//! The commands behind the `rskc` binary.
//!
//! Each command reads and writes whole files. Exit codes: 0 on success,
//! 1 for usage, I/O and format errors, 2 when a codeword cannot be decoded.

use std::fmt::{self, Write as _};
use std::fs;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use thiserror::Error;

use crate::channel::{self, derive_seed, ChannelError, ChannelSpec};
use crate::format::{self, FormatError};
use crate::gf::Gf;
use crate::keychain::{self, CipherError, Key, KeyChain, KeyChainStats, CHUNK_LEN};
use crate::rs::{self, DecodeFailure};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_DECODE_FAILURE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Format {
        path: PathBuf,
        #[source]
        source: FormatError,
    },
    #[error(transparent)]
    Cipher(#[from] CipherError),
    #[error(transparent)]
    Channel(#[from] ChannelError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Cipher(CipherError::Decode { .. }) => EXIT_DECODE_FAILURE,
            _ => EXIT_ERROR,
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    fs::read(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    fs::write(path, bytes).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn format_err(path: &Path) -> impl FnOnce(FormatError) -> CliError + '_ {
    move |source| CliError::Format {
        path: path.to_owned(),
        source,
    }
}

pub fn read_key(path: &Path) -> Result<Key, CliError> {
    format::parse_key(&read(path)?).map_err(format_err(path))
}

pub fn read_stream(path: &Path) -> Result<keychain::CipherStream, CliError> {
    format::parse_stream(&read(path)?).map_err(format_err(path))
}

/// 63 uniform symbols, from `seed` when given and OS entropy otherwise.
pub fn generate_key(seed: Option<u64>) -> Key {
    let mut rng = match seed {
        Some(s) => ChaCha20Rng::seed_from_u64(s),
        None => ChaCha20Rng::from_os_rng(),
    };
    let symbols: [Gf; CHUNK_LEN] = std::array::from_fn(|_| Gf::from_u7(rng.random_range(0..128)));
    Key::new(symbols)
}

pub fn keygen(seed: Option<u64>, out: &Path) -> Result<(), CliError> {
    write(out, &format::serialize_key(&generate_key(seed)))
}

pub fn encrypt(key: &Path, input: &Path, out: &Path) -> Result<(), CliError> {
    let key = read_key(key)?;
    let plaintext = read(input)?;
    let (stream, _) = keychain::encrypt_stream(&plaintext, &key)?;
    write(out, &format::serialize_stream(&stream))
}

/// Writes the output only once the whole stream has decrypted.
pub fn decrypt(key: &Path, input: &Path, out: &Path) -> Result<(), CliError> {
    let key = read_key(key)?;
    let stream = read_stream(input)?;
    let plaintext = keychain::decrypt_stream(&stream, &key)?;
    write(out, &plaintext)
}

/// Corrupts exactly `errors` symbols of every codeword. Codeword `i` uses
/// the channel seed `derive_seed(seed, i)`. The header is left alone.
pub fn corrupt(input: &Path, out: &Path, errors: usize, seed: u64) -> Result<(), CliError> {
    let mut stream = read_stream(input)?;
    for (i, cw) in stream.codewords_mut().iter_mut().enumerate() {
        let spec = ChannelSpec::exact(errors, derive_seed(seed, i as u64));
        *cw = channel::inject_errors(cw, &spec)?.0;
    }
    write(out, &format::serialize_stream(&stream))
}

/// Per-chunk decode outcome in an [`InspectReport`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChunkStatus {
    Corrected(usize),
    Failed(rs::FailureReason),
}

/// Result of a read-only dry run over a stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InspectReport {
    pub original_len: u64,
    pub chunks: Vec<ChunkStatus>,
    /// Keys recoverable by the receiver; stops at the first failed chunk.
    pub chain: KeyChain,
    pub stats: KeyChainStats,
}

impl InspectReport {
    pub fn first_failure(&self) -> Option<usize> {
        self.chunks
            .iter()
            .position(|c| matches!(c, ChunkStatus::Failed(_)))
    }
}

impl fmt::Display for InspectReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "chunks: {}", self.chunks.len())?;
        writeln!(f, "original length: {}", self.original_len)?;
        for (i, c) in self.chunks.iter().enumerate() {
            match c {
                ChunkStatus::Corrected(n) => writeln!(f, "chunk {i}: corrected {n}")?,
                ChunkStatus::Failed(reason) => writeln!(f, "chunk {i}: FAILED ({reason})")?,
            }
        }
        writeln!(f, "key chain ({} keys):", self.chain.len())?;
        for (i, k) in self.chain.keys().iter().enumerate() {
            let hex = k.to_bytes().iter().fold(String::new(), |mut s, b| {
                let _ = write!(s, "{b:02x}");
                s
            });
            writeln!(f, "  key {i}: {hex}")?;
        }
        if let Some(i) = self.first_failure() {
            writeln!(f, "key chain truncated at chunk {i}")?;
        }
        writeln!(f, "key distances: {:?}", self.stats.distances)?;
        write!(f, "distinct keys: {}", self.stats.distinct_keys)
    }
}

/// Decodes every chunk without decrypting. Unlike [`decrypt`] a failed
/// chunk does not stop the scan, though no key past it can be recovered.
pub fn inspect(key: &Path, input: &Path) -> Result<InspectReport, CliError> {
    let key = read_key(key)?;
    let stream = read_stream(input)?;
    Ok(inspect_stream(&stream, &key))
}

pub fn inspect_stream(stream: &keychain::CipherStream, key: &Key) -> InspectReport {
    let mut chain = KeyChain::new(*key);
    let mut chunks = Vec::with_capacity(stream.chunk_count());
    let mut broken = false;

    for received in stream.codewords() {
        match rs::decode(received) {
            Ok(decoded) => {
                chunks.push(ChunkStatus::Corrected(decoded.report.corrected_count()));
                if !broken {
                    chain.advance(&decoded.codeword);
                }
            }
            Err(DecodeFailure { reason, .. }) => {
                chunks.push(ChunkStatus::Failed(reason));
                broken = true;
            }
        }
    }

    let stats = chain.stats();
    InspectReport {
        original_len: stream.original_len(),
        chunks,
        chain,
        stats,
    }
}
