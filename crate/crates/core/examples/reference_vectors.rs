//! Reproduces the reference two-chunk example step by step, checking each
//! intermediate value against the stored vectors.
//!
//!     cargo run --example reference_vectors

use rs_keychain::keychain::{
    chunk_message, decrypt_stream, encrypt_chunk, encrypt_stream, evolve_key, text_to_symbols, Key,
};
use rs_keychain::rs;
use rs_keychain::vectors;

fn show(name: &str, values: impl IntoIterator<Item = u8>) {
    let v: Vec<u8> = values.into_iter().collect();
    println!("{name} ({} symbols): {:?}", v.len(), v);
}

fn main() {
    let key = Key::from_bytes(&vectors::INITIAL_KEY).unwrap();
    let symbols = text_to_symbols(vectors::MESSAGE).unwrap();
    let chunks = chunk_message(&symbols);
    println!("message: {}", String::from_utf8_lossy(vectors::MESSAGE));
    println!("chunks: {} (payloads {} and {})", chunks.len(), chunks[0].payload_len(), chunks[1].payload_len());

    let c1 = encrypt_chunk(&chunks[0], &key);
    show("cipher chunk 1", c1.symbols().map(|s| s.value()));
    assert_eq!(c1.symbols().map(|s| s.value()), vectors::CIPHER_CHUNK_1);

    let cw1 = rs::encode(c1.symbols()).unwrap();
    show("codeword 1 parity", cw1.parity().iter().map(|s| s.value()));
    assert_eq!(cw1.symbols().map(|s| s.value()), vectors::CODEWORD_1);

    let k1 = evolve_key(&key, &cw1);
    show("key 1", k1.to_bytes());
    assert_eq!(k1.to_bytes(), vectors::KEY_1);

    let c2 = encrypt_chunk(&chunks[1], &k1);
    show("cipher chunk 2", c2.symbols().map(|s| s.value()));
    assert_eq!(c2.symbols().map(|s| s.value()), vectors::CIPHER_CHUNK_2);

    let cw2 = rs::encode(c2.symbols()).unwrap();
    show("codeword 2 parity", cw2.parity().iter().map(|s| s.value()));
    assert_eq!(cw2.symbols().map(|s| s.value()), vectors::CODEWORD_2);

    let (stream, chain) = encrypt_stream(vectors::MESSAGE, &key).unwrap();
    assert_eq!(chain.keys()[1], k1);
    let plain = decrypt_stream(&stream, &key).unwrap();
    println!("receiver recovered: {}", String::from_utf8_lossy(&plain));
    println!("all reference values reproduced");
}
