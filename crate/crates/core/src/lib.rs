//! A symmetric chunk cipher in which Reed-Solomon RS(127, 63) over GF(2^7)
//! both protects the ciphertext against symbol errors and drives the key
//! schedule: the parity of each transmitted codeword is folded into the key
//! for the next chunk.
//!
//! ```
//! use rs_keychain::keychain::{decrypt_stream, encrypt_stream};
//! use rs_keychain::cli::generate_key;
//!
//! let key = generate_key(Some(7));
//! let (stream, chain) = encrypt_stream(b"attack at dawn", &key).unwrap();
//! assert_eq!(chain.len(), 2);
//! assert_eq!(decrypt_stream(&stream, &key).unwrap(), b"attack at dawn");
//! ```
//!
//! Modules, bottom up: [`gf`] field arithmetic, [`rs`] the codec,
//! [`keychain`] the cipher, [`channel`] a seeded error channel, [`format`]
//! file layouts and [`cli`] the command implementations.

pub mod channel;
pub mod cli;
pub mod format;
pub mod gf;
pub mod keychain;
pub mod rs;
pub mod vectors;

pub use gf::{Gf, GfPoly};
pub use keychain::{CipherStream, Key, KeyChain};
pub use rs::{Codeword, DecodeReport};
