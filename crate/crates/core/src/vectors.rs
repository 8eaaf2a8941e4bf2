//! A worked reference example: a 92-symbol ASCII message encrypted in two
//! chunks, with every intermediate value.
//!
//! These are used as golden vectors by the test suite and the examples.

/// The plaintext, 92 ASCII bytes (two chunks, the second holding 29).
pub const MESSAGE: &[u8; 92] =
    b"rajasthan university and shri mata vaishno devi university are two good university in india.";

/// Initial shared key.
pub const INITIAL_KEY: [u8; 63] = [
    12, 4, 5, 6, 7, 3, 3, 5, 6, 4, 4, 6, 7, 4, 3, 5,
    6, 6, 7, 7, 2, 4, 2, 2, 5, 4, 6, 7, 3, 3, 2, 6,
    7, 8, 7, 8, 8, 8, 9, 9, 4, 7, 1, 7, 9, 4, 5, 9,
    0, 2, 5, 9, 0, 3, 5, 6, 2, 6, 3, 0, 1, 5, 3,
];

/// First plaintext chunk XOR the initial key.
pub const CIPHER_CHUNK_1: [u8; 63] = [
    126, 101, 111, 103, 116, 119, 107, 100, 104, 36, 113, 104, 110, 114, 102, 119,
    117, 111, 115, 126, 34, 101, 108, 102, 37, 119, 110, 117, 106, 35, 111, 103,
    115, 105, 39, 126, 105, 97, 122, 97, 106, 104, 33, 99, 108, 114, 108, 41,
    117, 108, 108, 127, 101, 113, 118, 111, 118, 127, 35, 97, 115, 96, 35,
];

/// RS(127,63) encoding of [`CIPHER_CHUNK_1`].
pub const CODEWORD_1: [u8; 127] = [
    126, 101, 111, 103, 116, 119, 107, 100, 104, 36, 113, 104, 110, 114, 102, 119,
    117, 111, 115, 126, 34, 101, 108, 102, 37, 119, 110, 117, 106, 35, 111, 103,
    115, 105, 39, 126, 105, 97, 122, 97, 106, 104, 33, 99, 108, 114, 108, 41,
    117, 108, 108, 127, 101, 113, 118, 111, 118, 127, 35, 97, 115, 96, 35, 112,
    37, 36, 92, 90, 82, 123, 31, 99, 21, 33, 41, 95, 109, 101, 100, 26,
    95, 19, 93, 78, 86, 105, 18, 13, 123, 91, 96, 116, 38, 43, 119, 22,
    11, 74, 46, 10, 0, 54, 79, 43, 80, 48, 52, 108, 2, 105, 76, 2,
    6, 21, 6, 36, 102, 8, 11, 97, 24, 22, 4, 58, 101, 58, 65,
];

/// Key for the second chunk: initial key XOR the first 63 parity symbols of [`CODEWORD_1`].
pub const KEY_1: [u8; 63] = [
    124, 33, 33, 90, 93, 81, 120, 26, 101, 17, 37, 47, 88, 105, 102, 97,
    28, 89, 20, 90, 76, 82, 107, 16, 8, 127, 93, 103, 119, 37, 41, 113,
    17, 3, 77, 38, 2, 8, 63, 70, 47, 87, 49, 51, 101, 6, 108, 69,
    2, 4, 16, 15, 36, 101, 13, 13, 99, 30, 21, 4, 59, 96, 57,
];

/// Zero-padded second plaintext chunk XOR [`KEY_1`].
pub const CIPHER_CHUNK_2: [u8; 63] = [
    8, 86, 78, 122, 58, 62, 23, 126, 69, 100, 75, 70, 46, 12, 20, 18,
    117, 45, 109, 122, 37, 60, 75, 121, 102, 27, 52, 6, 89, 37, 41, 113,
    17, 3, 77, 38, 2, 8, 63, 70, 47, 87, 49, 51, 101, 6, 108, 69,
    2, 4, 16, 15, 36, 101, 13, 13, 99, 30, 21, 4, 59, 96, 57,
];

/// RS(127,63) encoding of [`CIPHER_CHUNK_2`].
pub const CODEWORD_2: [u8; 127] = [
    8, 86, 78, 122, 58, 62, 23, 126, 69, 100, 75, 70, 46, 12, 20, 18,
    117, 45, 109, 122, 37, 60, 75, 121, 102, 27, 52, 6, 89, 37, 41, 113,
    17, 3, 77, 38, 2, 8, 63, 70, 47, 87, 49, 51, 101, 6, 108, 69,
    2, 4, 16, 15, 36, 101, 13, 13, 99, 30, 21, 4, 59, 96, 57, 94,
    14, 111, 123, 43, 3, 99, 76, 76, 54, 76, 37, 6, 15, 104, 97, 23,
    103, 33, 0, 70, 71, 23, 106, 26, 50, 29, 85, 3, 71, 33, 0, 95,
    78, 34, 125, 53, 1, 32, 50, 112, 9, 38, 49, 67, 56, 84, 23, 45,
    127, 51, 51, 29, 33, 47, 16, 10, 10, 118, 71, 79, 60, 13, 124,
];

