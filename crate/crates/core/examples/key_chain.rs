//! How the key evolves from chunk to chunk, and how a one-symbol change in
//! the plaintext reshapes every later key.
//!
//!     cargo run --example key_chain

use rs_keychain::cli::generate_key;
use rs_keychain::keychain::encrypt_stream;

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn main() {
    let key = generate_key(Some(1));
    let text = b"The quick brown fox jumps over the lazy dog. ".repeat(5);

    let (stream, chain) = encrypt_stream(&text, &key).unwrap();
    println!("{} bytes -> {} chunks, {} keys", text.len(), stream.chunk_count(), chain.len());
    for (i, k) in chain.keys().iter().enumerate() {
        println!("key {i}: {}", hex(&k.to_bytes()));
    }
    let stats = chain.stats();
    println!("symbols changed per step: {:?}", stats.distances);
    println!("distinct keys: {}", stats.distinct_keys);

    let mut tweaked = text.clone();
    tweaked[70] ^= 1;
    let (_, other) = encrypt_stream(&tweaked, &key).unwrap();
    for (i, (a, b)) in chain.keys().iter().zip(other.keys()).enumerate() {
        println!("key {i} after flipping byte 70: {} symbols differ", a.distance(b));
    }
}
