//! Encode a chunk with RS(127, 63), damage it, and watch the decoder
//! locate and repair the errors. Past 32 errors decoding fails.
//!
//!     cargo run --example reed_solomon

use rs_keychain::channel::{inject_errors, ChannelSpec};
use rs_keychain::rs::{self, K, T};
use rs_keychain::Gf;

fn main() {
    let message: Vec<Gf> = b"Reed-Solomon over GF(128) protects sixty-three symbols at once."
        .iter()
        .map(|&b| Gf::from_u7(b))
        .collect();
    assert_eq!(message.len(), K);

    let cw = rs::encode(&message).unwrap();
    println!("parity: {:?}", cw.parity());
    println!("syndromes all zero: {}", rs::syndromes(&cw).iter().all(|s| s.is_zero()));

    for errors in [0, 5, T, T + 1, 40] {
        let (received, planted) = inject_errors(&cw, &ChannelSpec::exact(errors, 2024)).unwrap();
        match rs::decode(&received) {
            Ok(d) => {
                println!(
                    "{errors:>2} errors: corrected {} at {:?}, original restored: {}",
                    d.report.corrected_count(),
                    d.report.error_positions,
                    d.codeword == cw
                );
                assert_eq!(d.report.error_positions, planted);
            }
            Err(f) => println!("{errors:>2} errors: {f}"),
        }
    }

    // The decoder stages can be driven one at a time.
    let (received, _) = inject_errors(&cw, &ChannelSpec::exact(3, 7)).unwrap();
    let s = rs::syndromes(&received);
    let locator = rs::berlekamp_massey(&s);
    let positions = rs::chien_search(&locator).unwrap();
    let values = rs::forney(&locator, &s, &positions).unwrap();
    println!("locator degree {:?}, positions {positions:?}, values {values:?}", locator.degree());
}
