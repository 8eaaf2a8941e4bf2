use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use rs_keychain::format::{self, HEADER_LEN};
use rs_keychain::rs::N;
use rs_keychain::vectors;
use tempfile::TempDir;

fn rskc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rskc"))
        .args(args)
        .output()
        .expect("run rskc")
}

struct Sandbox {
    dir: TempDir,
}

impl Sandbox {
    fn new() -> Sandbox {
        Sandbox {
            dir: TempDir::new().unwrap(),
        }
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn file(&self, name: &str, bytes: &[u8]) -> PathBuf {
        let p = self.path(name);
        fs::write(&p, bytes).unwrap();
        p
    }

    fn run(&self, args: &[&str]) -> Output {
        let owned: Vec<String> = args
            .iter()
            .map(|a| match a.strip_prefix('@') {
                Some(name) => self.path(name).to_string_lossy().into_owned(),
                None => a.to_string(),
            })
            .collect();
        let refs: Vec<&str> = owned.iter().map(String::as_str).collect();
        rskc(&refs)
    }
}

fn read(p: &Path) -> Vec<u8> {
    fs::read(p).unwrap()
}

fn golden(sb: &Sandbox) {
    sb.file("key", &vectors::INITIAL_KEY);
    sb.file("msg", vectors::MESSAGE);
    let out = sb.run(&["encrypt", "--key", "@key", "--in", "@msg", "--out", "@stream"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn keygen_is_seeded() {
    let sb = Sandbox::new();
    for name in ["a", "b"] {
        let out = sb.run(&["keygen", "--seed", "42", "--out", &format!("@{name}")]);
        assert_eq!(out.status.code(), Some(0));
    }
    let a = read(&sb.path("a"));
    assert_eq!(a, read(&sb.path("b")));
    assert_eq!(a.len(), 63);
    assert!(a.iter().all(|&b| b < 128));

    sb.run(&["keygen", "--seed", "43", "--out", "@c"]);
    assert_ne!(a, read(&sb.path("c")));

    let out = sb.run(&["keygen", "--out", "@d"]);
    assert!(out.status.success());
    assert_eq!(read(&sb.path("d")).len(), 63);
}

#[test]
fn keygen_unwritable_path() {
    let out = rskc(&["keygen", "--out", "/nonexistent-dir/key"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn encrypt_golden_message() {
    let sb = Sandbox::new();
    golden(&sb);
    let bytes = read(&sb.path("stream"));
    assert_eq!(bytes.len(), HEADER_LEN + 2 * N);
    assert_eq!(&bytes[..4], b"RSKC");
    assert_eq!(&bytes[HEADER_LEN + 63..HEADER_LEN + N], &vectors::CODEWORD_1[63..]);
    assert_eq!(&bytes[HEADER_LEN + N..], &vectors::CODEWORD_2[..]);

    let out = sb.run(&["decrypt", "--key", "@key", "--in", "@stream", "--out", "@plain"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(read(&sb.path("plain")), vectors::MESSAGE);
}

#[test]
fn encrypt_sizes() {
    let sb = Sandbox::new();
    sb.file("key", &vectors::INITIAL_KEY);
    sb.file("empty", b"");
    sb.file("full", &[b'z'; 63]);
    sb.run(&["encrypt", "--key", "@key", "--in", "@empty", "--out", "@s0"]);
    sb.run(&["encrypt", "--key", "@key", "--in", "@full", "--out", "@s1"]);

    let s0 = read(&sb.path("s0"));
    assert_eq!(s0, format::StreamFileHeader { chunk_count: 0, original_len: 0 }.to_bytes());
    assert_eq!(read(&sb.path("s1")).len(), HEADER_LEN + 127);

    for (s, original) in [("s0", &b""[..]), ("s1", &[b'z'; 63][..])] {
        let out = sb.run(&["decrypt", "--key", "@key", "--in", &format!("@{s}"), "--out", "@p"]);
        assert!(out.status.success());
        assert_eq!(read(&sb.path("p")), original);
    }
}

#[test]
fn encrypt_rejects_non_ascii() {
    let sb = Sandbox::new();
    sb.file("key", &vectors::INITIAL_KEY);
    sb.file("msg", "naïve".as_bytes());
    let out = sb.run(&["encrypt", "--key", "@key", "--in", "@msg", "--out", "@s"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 2"));
    assert!(!sb.path("s").exists());
}

#[test]
fn bad_key_file() {
    let sb = Sandbox::new();
    sb.file("key", &[1; 62]);
    sb.file("msg", b"hello");
    let out = sb.run(&["encrypt", "--key", "@key", "--in", "@msg", "--out", "@s"]);
    assert_eq!(out.status.code(), Some(1));
    let mut high = vectors::INITIAL_KEY;
    high[3] = 0x90;
    sb.file("key", &high);
    let out = sb.run(&["encrypt", "--key", "@key", "--in", "@msg", "--out", "@s"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset 3"));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(rskc(&[]).status.code(), Some(1));
    assert_eq!(rskc(&["encrypt", "--key", "k"]).status.code(), Some(1));
    assert_eq!(rskc(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(rskc(&["--help"]).status.code(), Some(0));
}

#[test]
fn corrupted_header_is_format_error() {
    let sb = Sandbox::new();
    golden(&sb);
    let mut bytes = read(&sb.path("stream"));
    bytes[0] = b'Q';
    sb.file("bad", &bytes);
    let out = sb.run(&["decrypt", "--key", "@key", "--in", "@bad", "--out", "@p"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!sb.path("p").exists());
    let out = sb.run(&["corrupt", "--in", "@bad", "--out", "@c", "--errors", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn corrupt_counts_and_determinism() {
    let sb = Sandbox::new();
    golden(&sb);
    let clean = read(&sb.path("stream"));

    sb.run(&["corrupt", "--in", "@stream", "--out", "@c0", "--errors", "0", "--seed", "9"]);
    assert_eq!(read(&sb.path("c0")), clean);

    sb.run(&["corrupt", "--in", "@stream", "--out", "@c5", "--errors", "5", "--seed", "9"]);
    sb.run(&["corrupt", "--in", "@stream", "--out", "@c5b", "--errors", "5", "--seed", "9"]);
    let c5 = read(&sb.path("c5"));
    assert_eq!(c5, read(&sb.path("c5b")));
    assert_eq!(&c5[..HEADER_LEN], &clean[..HEADER_LEN]);
    let changed = c5.iter().zip(&clean).filter(|(a, b)| a != b).count();
    assert_eq!(changed, 10);

    let out = sb.run(&["corrupt", "--in", "@stream", "--out", "@x", "--errors", "128"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn decrypt_through_correctable_noise() {
    let sb = Sandbox::new();
    golden(&sb);
    for errors in [1, 17, 32] {
        for seed in 0..3 {
            let (e, s) = (errors.to_string(), seed.to_string());
            let out = sb.run(&["corrupt", "--in", "@stream", "--out", "@noisy", "--errors", &e, "--seed", &s]);
            assert!(out.status.success());
            let out = sb.run(&["decrypt", "--key", "@key", "--in", "@noisy", "--out", "@plain"]);
            assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
            assert_eq!(read(&sb.path("plain")), vectors::MESSAGE);
        }
    }
}

#[test]
fn decrypt_beyond_radius_fails_cleanly() {
    let sb = Sandbox::new();
    golden(&sb);
    // Corrupt only the second codeword with 40 errors.
    let mut bytes = read(&sb.path("stream"));
    let noisy = {
        let c = sb.file("clean", &bytes);
        sb.run(&["corrupt", "--in", &c.to_string_lossy(), "--out", "@all40", "--errors", "40", "--seed", "1"]);
        read(&sb.path("all40"))
    };
    bytes[HEADER_LEN + N..].copy_from_slice(&noisy[HEADER_LEN + N..]);
    sb.file("one40", &bytes);

    let out = sb.run(&["decrypt", "--key", "@key", "--in", "@one40", "--out", "@plain"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("chunk 1"));
    assert!(!sb.path("plain").exists());

    let out = sb.run(&["inspect", "--key", "@key", "--in", "@one40"]);
    assert_eq!(out.status.code(), Some(2));
    let report = String::from_utf8_lossy(&out.stdout);
    assert!(report.contains("chunk 0: corrected 0"));
    assert!(report.contains("chunk 1: FAILED"));
    assert!(report.contains("key chain (2 keys)"));
}

#[test]
fn inspect_golden() {
    let sb = Sandbox::new();
    golden(&sb);
    let out = sb.run(&["inspect", "--key", "@key", "--in", "@stream"]);
    assert_eq!(out.status.code(), Some(0));
    let report = String::from_utf8_lossy(&out.stdout);
    assert!(report.contains("chunks: 2"));
    assert!(report.contains("chunk 0: corrected 0"));
    assert!(report.contains("chunk 1: corrected 0"));
    assert!(report.contains("key 1: 7c21215a"));
    assert!(report.contains("key chain (3 keys)"));

    sb.run(&["corrupt", "--in", "@stream", "--out", "@noisy", "--errors", "7", "--seed", "2"]);
    let out = sb.run(&["inspect", "--key", "@key", "--in", "@noisy"]);
    let noisy = String::from_utf8_lossy(&out.stdout);
    assert!(noisy.contains("chunk 0: corrected 7"));
    assert!(noisy.contains("key 1: 7c21215a"));
}

#[test]
fn inspect_single_chunk() {
    let sb = Sandbox::new();
    sb.file("key", &vectors::INITIAL_KEY);
    sb.file("msg", b"short");
    sb.run(&["encrypt", "--key", "@key", "--in", "@msg", "--out", "@s"]);
    let out = sb.run(&["inspect", "--key", "@key", "--in", "@s"]);
    let report = String::from_utf8_lossy(&out.stdout);
    assert!(report.contains("key chain (2 keys)"));
    let distances = report.lines().find(|l| l.starts_with("key distances")).unwrap();
    assert_eq!(distances.matches(',').count(), 0);
}
