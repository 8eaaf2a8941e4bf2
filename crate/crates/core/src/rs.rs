//! Systematic Reed-Solomon RS(127, 63) over GF(2^7).
//!
//! A codeword is 63 message symbols followed by 64 parity symbols. It is
//! read as a polynomial with the first symbol as the highest-degree
//! coefficient, so symbol `j` is the coefficient of `x^(126 - j)`. The
//! generator polynomial has the 64 consecutive roots `α^1 ..= α^64`.
//!
//! Decoding is bounded-distance: syndromes, Berlekamp-Massey for the error
//! locator Λ(x), Chien search for its roots and Forney's formula for the
//! error values. Up to [`T`] symbol errors are always corrected. Beyond that
//! the decoder usually reports failure, but it can land on a different valid
//! codeword (miscorrection); no decoder can rule that out.

use std::fmt;
use std::sync::LazyLock;

use thiserror::Error;

use crate::gf::{Gf, GfPoly};

/// Codeword length.
pub const N: usize = 127;
/// Message symbols per codeword.
pub const K: usize = 63;
/// Parity symbols per codeword.
pub const PARITY_LEN: usize = N - K;
/// Guaranteed correction radius in symbols.
pub const T: usize = PARITY_LEN / 2;
/// Exponent of the first generator root, `α^FIRST_ROOT`.
pub const FIRST_ROOT: i64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error("expected {expected} symbols, got {got}")]
    Length { expected: usize, got: usize },
}

/// One RS(127, 63) codeword: message symbols `0..63`, parity `63..127`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Codeword([Gf; N]);

impl Codeword {
    pub const fn new(symbols: [Gf; N]) -> Codeword {
        Codeword(symbols)
    }

    pub const fn zero() -> Codeword {
        Codeword([Gf::ZERO; N])
    }

    pub fn from_slice(symbols: &[Gf]) -> Result<Codeword, CodecError> {
        let symbols: [Gf; N] = symbols.try_into().map_err(|_| CodecError::Length {
            expected: N,
            got: symbols.len(),
        })?;
        Ok(Codeword(symbols))
    }

    pub fn symbols(&self) -> &[Gf; N] {
        &self.0
    }

    pub fn symbols_mut(&mut self) -> &mut [Gf; N] {
        &mut self.0
    }

    /// The systematic part.
    pub fn message(&self) -> &[Gf] {
        &self.0[..K]
    }

    pub fn parity(&self) -> &[Gf] {
        &self.0[K..]
    }

    /// Symbol-wise sum.
    pub fn xor(&self, other: &Codeword) -> Codeword {
        let mut out = *self;
        for (a, &b) in out.0.iter_mut().zip(other.0.iter()) {
            *a += b;
        }
        out
    }

    /// Number of positions where the two words differ.
    pub fn distance(&self, other: &Codeword) -> usize {
        self.0.iter().zip(other.0.iter()).filter(|(a, b)| a != b).count()
    }
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// The monic degree-64 generator `g(x) = ∏ (x - α^i)` for
/// `i = FIRST_ROOT ..= FIRST_ROOT + 63`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorPoly(GfPoly);

impl GeneratorPoly {
    pub fn build() -> GeneratorPoly {
        let g = (0..PARITY_LEN as i64).fold(GfPoly::one(), |g, i| {
            &g * &GfPoly::new(vec![Gf::alpha_pow(FIRST_ROOT + i), Gf::ONE])
        });
        GeneratorPoly(g)
    }

    /// Ascending coefficients, `poly().coeff(64) == 1`.
    pub fn poly(&self) -> &GfPoly {
        &self.0
    }
}

static GENERATOR: LazyLock<GeneratorPoly> = LazyLock::new(GeneratorPoly::build);

pub fn generator() -> &'static GeneratorPoly {
    &GENERATOR
}

/// Systematic encoding: the message followed by the remainder of
/// `m(x) * x^64` divided by `g(x)`.
pub fn encode(message: &[Gf]) -> Result<Codeword, CodecError> {
    if message.len() != K {
        return Err(CodecError::Length {
            expected: K,
            got: message.len(),
        });
    }
    let g = generator().poly();

    // Division LFSR; parity[0] holds the highest-degree remainder term.
    let mut parity = [Gf::ZERO; PARITY_LEN];
    for &m in message {
        let feedback = m + parity[0];
        parity.copy_within(1.., 0);
        parity[PARITY_LEN - 1] = Gf::ZERO;
        if !feedback.is_zero() {
            for (i, p) in parity.iter_mut().enumerate() {
                *p += feedback * g.coeff(PARITY_LEN - 1 - i);
            }
        }
    }

    let mut cw = [Gf::ZERO; N];
    cw[..K].copy_from_slice(message);
    cw[K..].copy_from_slice(&parity);
    Ok(Codeword(cw))
}

/// `S_i = r(α^(FIRST_ROOT + i))` for `i` in `0..64`.
pub fn syndromes(received: &Codeword) -> [Gf; PARITY_LEN] {
    let mut out = [Gf::ZERO; PARITY_LEN];
    for (i, s) in out.iter_mut().enumerate() {
        let x = Gf::alpha_pow(FIRST_ROOT + i as i64);
        *s = received.0.iter().fold(Gf::ZERO, |acc, &c| acc * x + c);
    }
    out
}

/// Shortest LFSR connection polynomial Λ(x), with Λ(0) = 1, generating the
/// syndrome sequence.
pub fn berlekamp_massey(syndromes: &[Gf]) -> GfPoly {
    let mut current = GfPoly::one();
    let mut previous = GfPoly::one();
    let mut len = 0usize;
    let mut shift = 1usize;
    let mut prev_discrepancy = Gf::ONE;

    for n in 0..syndromes.len() {
        let discrepancy = (1..=len).fold(syndromes[n], |d, i| {
            d + current.coeff(i) * syndromes[n - i]
        });
        if discrepancy.is_zero() {
            shift += 1;
            continue;
        }
        let factor = discrepancy * prev_discrepancy.inv().expect("nonzero discrepancy");
        let updated = &current + &previous.scale(factor).shift(shift);
        if 2 * len <= n {
            previous = std::mem::replace(&mut current, updated);
            len = n + 1 - len;
            prev_discrepancy = discrepancy;
            shift = 1;
        } else {
            current = updated;
            shift += 1;
        }
    }
    current
}

/// Polynomial degree of codeword symbol `index`.
#[inline]
fn degree_of(index: usize) -> i64 {
    (N - 1 - index) as i64
}

/// Codeword indices `j` whose locator `α^(126 - j)` has its inverse as a
/// root of Λ. Fails unless the number of roots equals deg Λ and deg Λ ≤ T.
pub fn chien_search(locator: &GfPoly) -> Result<Vec<usize>, FailureReason> {
    let degree = locator.degree().unwrap_or(0);
    if degree > T {
        return Err(FailureReason::TooManyErrors { degree });
    }
    if degree == 0 {
        return Ok(Vec::new());
    }
    let positions: Vec<usize> = (0..N)
        .filter(|&j| locator.eval(Gf::alpha_pow(-degree_of(j))).is_zero())
        .collect();
    if positions.len() != degree {
        return Err(FailureReason::RootCountMismatch {
            degree,
            roots: positions.len(),
        });
    }
    Ok(positions)
}

/// Error values at `positions` by Forney's formula,
/// `e = X^(1 - FIRST_ROOT) Ω(X⁻¹) / Λ'(X⁻¹)` with `Ω = S·Λ mod x^64`.
pub fn forney(
    locator: &GfPoly,
    syndromes: &[Gf],
    positions: &[usize],
) -> Result<Vec<Gf>, FailureReason> {
    let syndrome_poly = GfPoly::new(syndromes.to_vec());
    let evaluator = (&syndrome_poly * locator).truncate(PARITY_LEN);
    let derivative = locator.derivative();

    positions
        .iter()
        .map(|&position| {
            let x = Gf::alpha_pow(degree_of(position));
            let x_inv = Gf::alpha_pow(-degree_of(position));
            let denom = derivative.eval(x_inv);
            let denom_inv = denom
                .inv()
                .map_err(|_| FailureReason::ZeroDerivative { position })?;
            let scale = x.pow(1 - FIRST_ROOT).expect("nonzero locator");
            let value = scale * evaluator.eval(x_inv) * denom_inv;
            if value.is_zero() {
                return Err(FailureReason::ZeroMagnitude { position });
            }
            Ok(value)
        })
        .collect()
}

/// What the decoder did to one codeword.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DecodeReport {
    /// Corrected codeword indices, ascending. Empty on failure.
    pub error_positions: Vec<usize>,
    pub success: bool,
}

impl DecodeReport {
    pub fn clean() -> DecodeReport {
        DecodeReport {
            error_positions: Vec::new(),
            success: true,
        }
    }

    pub fn failed() -> DecodeReport {
        DecodeReport::default()
    }

    pub fn corrected_count(&self) -> usize {
        self.error_positions.len()
    }
}

/// A successfully decoded codeword.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub codeword: Codeword,
    pub report: DecodeReport,
}

impl Decoded {
    pub fn message(&self) -> [Gf; K] {
        self.codeword.message().try_into().expect("K symbols")
    }
}

/// Why a received word could not be decoded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum FailureReason {
    #[error("error locator degree {degree} exceeds the correction radius")]
    TooManyErrors { degree: usize },
    #[error("error locator of degree {degree} has {roots} roots in the field")]
    RootCountMismatch { degree: usize, roots: usize },
    #[error("locator derivative vanishes at position {position}")]
    ZeroDerivative { position: usize },
    #[error("zero error value at position {position}")]
    ZeroMagnitude { position: usize },
    #[error("corrected word still has nonzero syndromes")]
    ResidualSyndrome,
}

/// Decode failure, carrying the untouched received word.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("decode failed: {reason}")]
pub struct DecodeFailure {
    pub reason: FailureReason,
    pub received: Codeword,
}

impl DecodeFailure {
    pub fn report(&self) -> DecodeReport {
        DecodeReport::failed()
    }
}

/// Bounded-distance decode of one received word.
#[allow(clippy::result_large_err)]
pub fn decode(received: &Codeword) -> Result<Decoded, DecodeFailure> {
    let fail = |reason| DecodeFailure {
        reason,
        received: *received,
    };

    let s = syndromes(received);
    if s.iter().all(|x| x.is_zero()) {
        return Ok(Decoded {
            codeword: *received,
            report: DecodeReport::clean(),
        });
    }

    let locator = berlekamp_massey(&s);
    let positions = chien_search(&locator).map_err(fail)?;
    let values = forney(&locator, &s, &positions).map_err(fail)?;

    let mut corrected = *received;
    for (&p, &v) in positions.iter().zip(values.iter()) {
        corrected.0[p] += v;
    }
    if syndromes(&corrected).iter().any(|x| !x.is_zero()) {
        return Err(fail(FailureReason::ResidualSyndrome));
    }

    Ok(Decoded {
        codeword: corrected,
        report: DecodeReport {
            error_positions: positions,
            success: true,
        },
    })
}
