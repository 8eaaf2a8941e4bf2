//! The on-disk formats: write a key file and a stream file, inspect the
//! header, corrupt the stream, and read everything back.
//!
//!     cargo run --example stream_files

use std::fs;

use rs_keychain::cli;
use rs_keychain::format::{StreamFileHeader, HEADER_LEN};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::temp_dir().join(format!("rskc-example-{}", std::process::id()));
    fs::create_dir_all(&dir)?;
    let key = dir.join("key");
    let plain = dir.join("plain.txt");
    let stream = dir.join("stream.rskc");
    let noisy = dir.join("noisy.rskc");
    let out = dir.join("out.txt");

    cli::keygen(Some(2024), &key)?;
    fs::write(&plain, "Stream files hold a 17-byte header and 127 bytes per chunk.\n".repeat(3))?;
    cli::encrypt(&key, &plain, &stream)?;

    let bytes = fs::read(&stream)?;
    let header = StreamFileHeader::parse(&bytes)?;
    println!("magic {:?}, {header:?}, file size {}", std::str::from_utf8(&bytes[..4])?, bytes.len());
    println!("first codeword bytes: {:02x?}", &bytes[HEADER_LEN..HEADER_LEN + 16]);

    cli::corrupt(&stream, &noisy, 20, 1)?;
    println!("{}", cli::inspect(&key, &noisy)?);

    cli::decrypt(&key, &noisy, &out)?;
    println!("decrypted matches: {}", fs::read(&out)? == fs::read(&plain)?);

    cli::corrupt(&stream, &noisy, 45, 1)?;
    match cli::decrypt(&key, &noisy, &out) {
        Ok(()) => println!("unexpected success"),
        Err(e) => println!("45 errors per codeword: {e} (exit code {})", e.exit_code()),
    }

    fs::remove_dir_all(&dir)?;
    Ok(())
}
