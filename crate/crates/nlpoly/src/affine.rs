//! Affine Boolean functions a_0 + a_1 x_1 + ... + a_n x_n and the
//! brute-force nonlinearity oracle.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::truth_table::TruthTable;

/// Size cap for the brute-force oracle (2^(2n+1) bit operations).
pub const BRUTE_FORCE_MAX_VARS: u32 = 16;

/// Coefficient tuple (a_0, a_1, ..., a_n) of an affine function.
///
/// The tuple is packed into an index with a_0 at bit n and a_j at bit n-j,
/// the same layout used to index nonlinearity-polynomial evaluations; the
/// low n bits therefore form the linear part in the point-index convention.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AffineFunction {
    n: u32,
    index: u32,
}

impl AffineFunction {
    pub fn from_index(n: u32, index: u32) -> Self {
        assert!(
            index < 1u32 << (n + 1),
            "affine index out of range for n={n}"
        );
        Self { n, index }
    }

    /// Builds from the coefficient tuple (a_0, ..., a_n); entries must be 0/1.
    pub fn from_coeffs(coeffs: &[u8]) -> Self {
        assert!(coeffs.len() >= 2, "need at least (a_0, a_1)");
        let n = (coeffs.len() - 1) as u32;
        let mut index = 0u32;
        for (j, &c) in coeffs.iter().enumerate() {
            assert!(c <= 1, "coefficients must be bits");
            if c == 1 {
                index |= if j == 0 { 1 << n } else { 1 << (n - j as u32) };
            }
        }
        Self { n, index }
    }

    pub fn zero(n: u32) -> Self {
        Self { n, index: 0 }
    }

    pub fn var_count(&self) -> u32 {
        self.n
    }

    /// Packed form; doubles as the evaluation index of the nonlinearity
    /// polynomial at this coefficient tuple.
    pub fn index(&self) -> u32 {
        self.index
    }

    /// Coefficient a_j, with j = 0 for the constant term.
    pub fn coeff(&self, j: u32) -> bool {
        assert!(j <= self.n, "coefficient a_{j} out of range");
        let bit = if j == 0 { self.n } else { self.n - j };
        (self.index >> bit) & 1 == 1
    }

    pub fn constant_term(&self) -> bool {
        self.coeff(0)
    }

    /// Linear part (a_1..a_n) as a mask in the point-index convention.
    pub fn linear_mask(&self) -> u32 {
        self.index & ((1 << self.n) - 1)
    }

    pub fn with_flipped_constant(&self) -> Self {
        Self {
            n: self.n,
            index: self.index ^ (1 << self.n),
        }
    }

    pub fn coeffs(&self) -> Vec<u8> {
        (0..=self.n).map(|j| self.coeff(j) as u8).collect()
    }

    /// Assignment mask with plain bit j = a_j, the layout polynomial
    /// evaluation over the variables a_0..a_n uses.
    pub fn var_mask(&self) -> u64 {
        let mut mask = 0u64;
        for j in 0..=self.n {
            if self.coeff(j) {
                mask |= 1 << j;
            }
        }
        mask
    }

    pub fn from_var_mask(n: u32, mask: u64) -> Self {
        assert!(mask < 1u64 << (n + 1), "assignment mask out of range");
        let mut index = 0u32;
        for j in 0..=n {
            if (mask >> j) & 1 == 1 {
                index |= if j == 0 { 1 << n } else { 1 << (n - j) };
            }
        }
        Self { n, index }
    }

    /// Truth table: value at point p is a_0 XOR the parity of the linear
    /// part restricted to p.
    pub fn truth_table(&self) -> TruthTable {
        let mut tt = if self.constant_term() {
            TruthTable::ones(self.n)
        } else {
            TruthTable::zero(self.n)
        };
        let lin = self.linear_mask();
        for b in 0..self.n {
            if (lin >> b) & 1 == 1 {
                tt.xor_coordinate(b);
            }
        }
        tt
    }

    /// Rendering like "1+x1+x3"; "0" for the zero function.
    pub fn anf_string(&self) -> String {
        let mut terms = Vec::new();
        if self.constant_term() {
            terms.push("1".to_string());
        }
        for j in 1..=self.n {
            if self.coeff(j) {
                terms.push(format!("x{j}"));
            }
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join("+")
        }
    }

    /// Rendering like "(1,0,1,0)".
    pub fn tuple_string(&self) -> String {
        let inner: Vec<String> = self.coeffs().iter().map(|c| c.to_string()).collect();
        format!("({})", inner.join(","))
    }
}

impl fmt::Display for AffineFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.anf_string())
    }
}

impl fmt::Debug for AffineFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AffineFunction{}", self.tuple_string())
    }
}

/// Minimum distance from `tt` to every affine function, plus the full set
/// of minimizers, by explicit enumeration of all 2^(n+1) candidates.
pub fn brute_force_nonlinearity(tt: &TruthTable) -> Result<(u32, BTreeSet<AffineFunction>)> {
    let n = tt.var_count();
    if n > BRUTE_FORCE_MAX_VARS {
        return Err(Error::SizeLimit(format!(
            "brute-force search is capped at n<={BRUTE_FORCE_MAX_VARS}, got n={n}"
        )));
    }
    let mut best = u32::MAX;
    let mut argmin = BTreeSet::new();
    for index in 0..1u32 << (n + 1) {
        let alpha = AffineFunction::from_index(n, index);
        let d = tt.distance(&alpha.truth_table());
        if d < best {
            best = d;
            argmin.clear();
        }
        if d == best {
            argmin.insert(alpha);
        }
    }
    Ok((best, argmin))
}
