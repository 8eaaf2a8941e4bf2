//! Chunked XOR cipher whose key is refreshed from Reed-Solomon parity.
//!
//! The plaintext is split into 63-symbol chunks. Chunk `i` is XORed with
//! key `k_i`, the ciphertext chunk is RS-encoded into codeword `cw_i`, and
//! the next key is `k_{i+1} = k_i ⊕ parity(cw_i)[0..63]`. The 64th parity
//! symbol is transmitted but does not feed the key.
//!
//! The receiver decodes each codeword first and evolves its key from the
//! corrected parity, so both ends walk the same key chain as long as every
//! codeword stays within the correction radius. A chunk that fails to
//! decode ends the stream: every later key depends on it.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::gf::Gf;
use crate::rs::{self, Codeword, DecodeFailure, DecodeReport, K};

/// Symbols per key and per plaintext chunk.
pub const CHUNK_LEN: usize = K;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CipherError {
    #[error("byte 0x{byte:02x} at offset {offset} is not 7-bit ASCII")]
    NonAscii { offset: usize, byte: u8 },
    #[error("key must be {CHUNK_LEN} symbols, got {got}")]
    KeyLength { got: usize },
    #[error("key byte 0x{byte:02x} at offset {offset} is not a 7-bit symbol")]
    KeySymbol { offset: usize, byte: u8 },
    #[error("chunk payload of {got} symbols exceeds {CHUNK_LEN}")]
    ChunkLength { got: usize },
    #[error("original length {original_len} needs {expected} chunks, stream has {chunk_count}")]
    StreamLength {
        original_len: u64,
        chunk_count: usize,
        expected: u64,
    },
    #[error("chunk {chunk}: {failure}")]
    Decode {
        chunk: usize,
        #[source]
        failure: Box<DecodeFailure>,
    },
    #[error("key chain is empty")]
    EmptyKeyChain,
}

/// A 63-symbol shared key.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Key([Gf; CHUNK_LEN]);

impl Key {
    pub const fn new(symbols: [Gf; CHUNK_LEN]) -> Key {
        Key(symbols)
    }

    /// One symbol per byte; every byte must be below 128.
    pub fn from_bytes(bytes: &[u8]) -> Result<Key, CipherError> {
        if bytes.len() != CHUNK_LEN {
            return Err(CipherError::KeyLength { got: bytes.len() });
        }
        let mut symbols = [Gf::ZERO; CHUNK_LEN];
        for (offset, (s, &byte)) in symbols.iter_mut().zip(bytes).enumerate() {
            *s = Gf::new(byte).map_err(|_| CipherError::KeySymbol { offset, byte })?;
        }
        Ok(Key(symbols))
    }

    pub fn to_bytes(&self) -> [u8; CHUNK_LEN] {
        self.0.map(Gf::value)
    }

    pub fn symbols(&self) -> &[Gf; CHUNK_LEN] {
        &self.0
    }

    /// Number of positions where the keys differ.
    pub fn distance(&self, other: &Key) -> usize {
        self.0.iter().zip(other.0.iter()).filter(|(a, b)| a != b).count()
    }
}

impl fmt::Debug for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Key").field(&self.0).finish()
    }
}

/// A zero-padded plaintext or ciphertext chunk.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct MessageChunk {
    symbols: [Gf; CHUNK_LEN],
    payload_len: usize,
}

impl MessageChunk {
    /// Pads `payload` with zeros up to 63 symbols.
    pub fn new(payload: &[Gf]) -> Result<MessageChunk, CipherError> {
        if payload.len() > CHUNK_LEN {
            return Err(CipherError::ChunkLength { got: payload.len() });
        }
        let mut symbols = [Gf::ZERO; CHUNK_LEN];
        symbols[..payload.len()].copy_from_slice(payload);
        Ok(MessageChunk {
            symbols,
            payload_len: payload.len(),
        })
    }

    /// A chunk whose symbols are all payload.
    pub fn full(symbols: [Gf; CHUNK_LEN]) -> MessageChunk {
        MessageChunk {
            symbols,
            payload_len: CHUNK_LEN,
        }
    }

    pub fn symbols(&self) -> &[Gf; CHUNK_LEN] {
        &self.symbols
    }

    pub fn payload_len(&self) -> usize {
        self.payload_len
    }

    pub fn payload(&self) -> &[Gf] {
        &self.symbols[..self.payload_len]
    }

    fn xor_key(&self, key: &Key) -> MessageChunk {
        let mut symbols = self.symbols;
        for (s, &k) in symbols.iter_mut().zip(key.0.iter()) {
            *s += k;
        }
        MessageChunk {
            symbols,
            payload_len: self.payload_len,
        }
    }
}

impl fmt::Debug for MessageChunk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("MessageChunk")
            .field("symbols", &self.symbols)
            .field("payload_len", &self.payload_len)
            .finish()
    }
}

/// Chunks needed for `len` payload symbols.
pub fn chunk_count_for(len: u64) -> u64 {
    len.div_ceil(CHUNK_LEN as u64)
}

/// The transmitted artifact: payload length plus one codeword per chunk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CipherStream {
    original_len: u64,
    codewords: Vec<Codeword>,
}

impl CipherStream {
    pub fn new(original_len: u64, codewords: Vec<Codeword>) -> Result<CipherStream, CipherError> {
        let expected = chunk_count_for(original_len);
        if expected != codewords.len() as u64 {
            return Err(CipherError::StreamLength {
                original_len,
                chunk_count: codewords.len(),
                expected,
            });
        }
        Ok(CipherStream {
            original_len,
            codewords,
        })
    }

    pub fn original_len(&self) -> u64 {
        self.original_len
    }

    pub fn chunk_count(&self) -> usize {
        self.codewords.len()
    }

    pub fn codewords(&self) -> &[Codeword] {
        &self.codewords
    }

    /// Codewords are mutable in place (e.g. to model a channel); the count
    /// is fixed.
    pub fn codewords_mut(&mut self) -> &mut [Codeword] {
        &mut self.codewords
    }

    /// Payload symbols carried by chunk `index`.
    fn payload_len(&self, index: usize) -> usize {
        let before = (index * CHUNK_LEN) as u64;
        (self.original_len - before).min(CHUNK_LEN as u64) as usize
    }
}

/// Keys in use order: `keys()[0]` is the initial key, `keys()[i]` encrypts
/// chunk `i`, and the last key is the one a following chunk would use.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyChain(Vec<Key>);

impl KeyChain {
    pub fn new(initial: Key) -> KeyChain {
        KeyChain(vec![initial])
    }

    pub fn keys(&self) -> &[Key] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn current(&self) -> &Key {
        self.0.last().expect("chain always holds the initial key")
    }

    /// Evolves the current key with `cw` and appends the result.
    pub fn advance(&mut self, cw: &Codeword) -> &Key {
        let next = evolve_key(self.current(), cw);
        self.0.push(next);
        self.current()
    }

    pub fn stats(&self) -> KeyChainStats {
        KeyChainStats::from_keys(&self.0).expect("chain is nonempty")
    }
}

/// Change counts along a key chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyChainStats {
    /// Symbols that differ between consecutive keys.
    pub distances: Vec<usize>,
    pub distinct_keys: usize,
}

impl KeyChainStats {
    pub fn from_keys(keys: &[Key]) -> Result<KeyChainStats, CipherError> {
        if keys.is_empty() {
            return Err(CipherError::EmptyKeyChain);
        }
        Ok(KeyChainStats {
            distances: keys.windows(2).map(|w| w[0].distance(&w[1])).collect(),
            distinct_keys: keys.iter().collect::<HashSet<_>>().len(),
        })
    }
}

/// Maps ASCII bytes to field symbols one-for-one.
pub fn text_to_symbols(text: &[u8]) -> Result<Vec<Gf>, CipherError> {
    text.iter()
        .enumerate()
        .map(|(offset, &byte)| Gf::new(byte).map_err(|_| CipherError::NonAscii { offset, byte }))
        .collect()
}

/// Splits into 63-symbol chunks, zero-padding the last one.
pub fn chunk_message(symbols: &[Gf]) -> Vec<MessageChunk> {
    symbols
        .chunks(CHUNK_LEN)
        .map(|c| MessageChunk::new(c).expect("chunks are at most CHUNK_LEN"))
        .collect()
}

pub fn encrypt_chunk(chunk: &MessageChunk, key: &Key) -> MessageChunk {
    chunk.xor_key(key)
}

pub fn decrypt_chunk(chunk: &MessageChunk, key: &Key) -> MessageChunk {
    chunk.xor_key(key)
}

/// `k ⊕ cw[63..126]`: the key folded with the first 63 parity symbols.
pub fn evolve_key(key: &Key, cw: &Codeword) -> Key {
    let mut next = key.0;
    for (k, &p) in next.iter_mut().zip(cw.parity()) {
        *k += p;
    }
    Key(next)
}

/// Sender side. Returns the stream and every key used, plus the key that
/// would encrypt a further chunk.
pub fn encrypt_stream(plaintext: &[u8], initial: &Key) -> Result<(CipherStream, KeyChain), CipherError> {
    let symbols = text_to_symbols(plaintext)?;
    let mut chain = KeyChain::new(*initial);
    let mut codewords = Vec::with_capacity(symbols.len().div_ceil(CHUNK_LEN));

    for chunk in chunk_message(&symbols) {
        let cipher = encrypt_chunk(&chunk, chain.current());
        let cw = rs::encode(cipher.symbols()).expect("chunk is K symbols");
        chain.advance(&cw);
        codewords.push(cw);
    }

    let stream = CipherStream::new(symbols.len() as u64, codewords)?;
    Ok((stream, chain))
}

/// Everything the receiver learns from a stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decryption {
    pub plaintext: Vec<u8>,
    pub chain: KeyChain,
    pub reports: Vec<DecodeReport>,
}

/// Receiver side, keeping the reconstructed key chain and per-chunk
/// decode reports.
pub fn decrypt_stream_detailed(stream: &CipherStream, initial: &Key) -> Result<Decryption, CipherError> {
    let mut chain = KeyChain::new(*initial);
    let mut plaintext = Vec::with_capacity(stream.original_len() as usize);
    let mut reports = Vec::with_capacity(stream.chunk_count());

    for (chunk, received) in stream.codewords().iter().enumerate() {
        let decoded = rs::decode(received).map_err(|failure| CipherError::Decode {
            chunk,
            failure: Box::new(failure),
        })?;
        let cipher = MessageChunk::full(decoded.message());
        let plain = decrypt_chunk(&cipher, chain.current());
        chain.advance(&decoded.codeword);

        let payload = &plain.symbols()[..stream.payload_len(chunk)];
        plaintext.extend(payload.iter().map(|s| s.value()));
        reports.push(decoded.report);
    }

    Ok(Decryption {
        plaintext,
        chain,
        reports,
    })
}

/// Receiver side: decode, decrypt and strip padding.
pub fn decrypt_stream(stream: &CipherStream, initial: &Key) -> Result<Vec<u8>, CipherError> {
    decrypt_stream_detailed(stream, initial).map(|d| d.plaintext)
}
