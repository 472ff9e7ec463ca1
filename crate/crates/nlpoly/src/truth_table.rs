//! Packed truth tables of Boolean functions and the canonical point order.
//!
//! A function on n variables is evaluated on the 2^n points of the Boolean
//! cube listed in the canonical order: point index p encodes the coordinates
//! (x_1, ..., x_n) as a binary number with x_1 in the most significant bit
//! and x_n in the least significant bit, so points read 00..0, 00..1, ...,
//! 11..1.

use crate::error::{Error, Result};
use crate::rng::SplitMix64;

/// Hard cap on the variable count of a packed truth table (16 MiB of bits).
pub const MAX_VARS: u32 = 24;

/// One input point of the Boolean cube in the canonical order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BooleanPoint {
    n: u32,
    index: u32,
}

impl BooleanPoint {
    pub fn new(n: u32, index: u32) -> Self {
        assert!(
            (1..=MAX_VARS).contains(&n),
            "variable count {n} out of range"
        );
        assert!(
            index < 1u32 << n,
            "point index {index} out of range for n={n}"
        );
        Self { n, index }
    }

    pub fn var_count(&self) -> u32 {
        self.n
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    /// Value of the coordinate x_j (1-based), i.e. bit n-j of the index.
    pub fn coordinate(&self, j: u32) -> bool {
        assert!(j >= 1 && j <= self.n, "coordinate x{j} out of range");
        (self.index >> (self.n - j)) & 1 == 1
    }
}

/// Evaluation vector of a Boolean function, packed 64 points per word:
/// point p lives in word p/64 at bit p%64.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: u32,
    words: Vec<u64>,
}

/// In-word pattern of the point-index bit at position b (b < 6): a set bit
/// at word position k means k has bit b set.
const COORD_PATTERNS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

fn word_count(n: u32) -> usize {
    if n >= 6 {
        1 << (n - 6)
    } else {
        1
    }
}

impl TruthTable {
    /// The constant-zero function on n variables.
    pub fn zero(n: u32) -> Self {
        assert!(
            (1..=MAX_VARS).contains(&n),
            "variable count {n} out of range"
        );
        Self {
            n,
            words: vec![0; word_count(n)],
        }
    }

    /// The constant-one function on n variables.
    pub fn ones(n: u32) -> Self {
        let mut tt = Self::zero(n);
        let full = tt.last_word_mask();
        for w in tt.words.iter_mut() {
            *w = full;
        }
        tt
    }

    pub fn from_fn(n: u32, mut f: impl FnMut(BooleanPoint) -> bool) -> Self {
        let mut tt = Self::zero(n);
        for p in 0..tt.num_points() {
            tt.set(p, f(BooleanPoint::new(n, p as u32)));
        }
        tt
    }

    /// Random function with its 2^n table bits drawn from consecutive
    /// splitmix64 words, most significant bit first.
    pub fn random(rng: &mut SplitMix64, n: u32) -> Self {
        let mut tt = Self::zero(n);
        let mask = tt.last_word_mask();
        for w in tt.words.iter_mut() {
            *w = rng.next_u64().reverse_bits() & mask;
        }
        tt
    }

    fn last_word_mask(&self) -> u64 {
        if self.n >= 6 {
            u64::MAX
        } else {
            (1u64 << (1 << self.n)) - 1
        }
    }

    pub fn var_count(&self) -> u32 {
        self.n
    }

    pub fn num_points(&self) -> usize {
        1 << self.n
    }

    pub fn get(&self, p: usize) -> bool {
        assert!(p < self.num_points(), "point {p} out of range");
        (self.words[p >> 6] >> (p & 63)) & 1 == 1
    }

    pub fn set(&mut self, p: usize, value: bool) {
        assert!(p < self.num_points(), "point {p} out of range");
        let bit = 1u64 << (p & 63);
        if value {
            self.words[p >> 6] |= bit;
        } else {
            self.words[p >> 6] &= !bit;
        }
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn from_words(n: u32, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), word_count(n));
        Self { n, words }
    }

    /// Number of points where the function is 1.
    pub fn weight(&self) -> u32 {
        self.words.iter().map(|w| w.count_ones()).sum()
    }

    /// Hamming distance between two tables of the same variable count.
    pub fn distance(&self, other: &Self) -> u32 {
        assert_eq!(
            self.n, other.n,
            "distance requires equal variable counts ({} vs {})",
            self.n, other.n
        );
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones())
            .sum()
    }

    /// Pointwise XOR (sum over F_2) of two functions.
    pub fn xor(&self, other: &Self) -> Self {
        assert_eq!(
            self.n, other.n,
            "xor requires equal variable counts ({} vs {})",
            self.n, other.n
        );
        let words = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| a ^ b)
            .collect();
        Self { n: self.n, words }
    }

    /// XORs in the coordinate function whose value at point p is bit b of p
    /// (the variable x_{n-b}). Used to walk through affine functions
    /// incrementally.
    pub fn xor_coordinate(&mut self, b: u32) {
        assert!(b < self.n, "coordinate bit {b} out of range");
        if b < 6 {
            let pattern = COORD_PATTERNS[b as usize] & self.last_word_mask();
            for w in self.words.iter_mut() {
                *w ^= pattern;
            }
        } else {
            for (i, w) in self.words.iter_mut().enumerate() {
                if (i >> (b - 6)) & 1 == 1 {
                    *w = !*w;
                }
            }
        }
    }

    /// Parses a '0'/'1' string, leftmost character = point 0. The length
    /// must be a power of two, at least 2.
    pub fn from_binary_str(s: &str) -> Result<Self> {
        let len = s.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::Parse(format!(
                "binary truth table length must be a power of two >= 2, got {len}"
            )));
        }
        let n = len.trailing_zeros();
        if n > MAX_VARS {
            return Err(Error::SizeLimit(format!(
                "binary truth table for n={n} exceeds the n<={MAX_VARS} cap"
            )));
        }
        let mut tt = Self::zero(n);
        for (p, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => tt.set(p, true),
                other => {
                    return Err(Error::Parse(format!(
                        "invalid character {other:?} in binary truth table"
                    )))
                }
            }
        }
        Ok(tt)
    }

    pub fn to_binary_string(&self) -> String {
        (0..self.num_points())
            .map(|p| if self.get(p) { '1' } else { '0' })
            .collect()
    }

    /// Parses a hex string; each nibble encodes 4 consecutive points with
    /// the earliest point in the most significant bit. The length must be
    /// 2^n/4 nibbles, so n >= 2.
    pub fn from_hex_str(s: &str) -> Result<Self> {
        let len = s.len();
        if len < 1 || !len.is_power_of_two() {
            return Err(Error::Parse(format!(
                "hex truth table length must be a power of two >= 1 nibble, got {len}"
            )));
        }
        let n = (len * 4).trailing_zeros();
        if n > MAX_VARS {
            return Err(Error::SizeLimit(format!(
                "hex truth table for n={n} exceeds the n<={MAX_VARS} cap"
            )));
        }
        let mut tt = Self::zero(n);
        for (i, c) in s.chars().enumerate() {
            let nib = c.to_digit(16).ok_or_else(|| {
                Error::Parse(format!("invalid character {c:?} in hex truth table"))
            })?;
            for j in 0..4 {
                if (nib >> (3 - j)) & 1 == 1 {
                    tt.set(4 * i + j, true);
                }
            }
        }
        Ok(tt)
    }

    pub fn to_hex_string(&self) -> Result<String> {
        if self.n < 2 {
            return Err(Error::Invalid(
                "hex rendering needs at least 2 variables (one full nibble)".into(),
            ));
        }
        let mut out = String::with_capacity(self.num_points() / 4);
        for i in 0..self.num_points() / 4 {
            let mut nib = 0u32;
            for j in 0..4 {
                if self.get(4 * i + j) {
                    nib |= 1 << (3 - j);
                }
            }
            out.push(char::from_digit(nib, 16).unwrap().to_ascii_uppercase());
        }
        Ok(out)
    }
}

impl std::fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.n <= 8 {
            write!(f, "TruthTable(n={}, {})", self.n, self.to_binary_string())
        } else {
            write!(f, "TruthTable(n={}, weight={})", self.n, self.weight())
        }
    }
}
