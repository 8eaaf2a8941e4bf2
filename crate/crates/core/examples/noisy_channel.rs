//! Empirical decoder failure rate against the number of symbol errors per
//! codeword, and a noisy end-to-end transfer.
//!
//!     cargo run --release --example noisy_channel

use rs_keychain::channel::{derive_seed, inject_errors, sweep_decode_failure_rate, ChannelSpec, ErrorModel};
use rs_keychain::cli::generate_key;
use rs_keychain::keychain::{decrypt_stream_detailed, encrypt_stream};

fn main() {
    let grid: Vec<ErrorModel> = [0, 8, 16, 24, 30, 32, 33, 34, 36, 40, 48, 64]
        .into_iter()
        .map(ErrorModel::ExactCount)
        .chain([0.1, 0.25, 0.3].map(ErrorModel::SymbolProbability))
        .collect();
    let rows = sweep_decode_failure_rate(&grid, 1000, 99).unwrap();
    println!("{:<26} {:>9} {:>14}", "errors", "failures", "miscorrected");
    for row in &rows {
        println!(
            "{:<26} {:>9.3} {:>14.3}",
            format!("{:?}", row.model),
            row.failure_fraction(),
            row.miscorrection_fraction()
        );
    }

    let key = generate_key(Some(5));
    let text = b"Noisy channels are no obstacle while every codeword keeps 32 or fewer bad symbols.".repeat(4);
    let (mut stream, sender) = encrypt_stream(&text, &key).unwrap();
    for (i, cw) in stream.codewords_mut().iter_mut().enumerate() {
        let spec = ChannelSpec::exact((10 + 7 * i).min(32), derive_seed(7, i as u64));
        *cw = inject_errors(cw, &spec).unwrap().0;
    }
    let received = decrypt_stream_detailed(&stream, &key).unwrap();
    let corrected: Vec<usize> = received.reports.iter().map(|r| r.corrected_count()).collect();
    println!("corrected per chunk: {corrected:?}");
    println!("plaintext intact: {}", received.plaintext == text);
    println!("key chains agree: {}", received.chain == sender);
}
