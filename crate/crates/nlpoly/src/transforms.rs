//! Fast butterfly transforms over the Boolean cube: Möbius (truth table <->
//! ANF), Walsh, and the signed subset transforms behind the numerical
//! normal form. All integer arithmetic is exact 64-bit signed.

use std::collections::BTreeSet;

use crate::affine::AffineFunction;
use crate::anf::AnfPolynomial;
use crate::error::{Error, Result};
use crate::nlp::OpCounters;
use crate::truth_table::TruthTable;

/// In-word mask of positions whose point-index bit b is clear (b < 6).
const LOW_HALF_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

/// XOR subset-sum butterfly on a packed bit vector, level 0 first. Applying
/// it twice is the identity, which makes it both directions of the Möbius
/// transform.
fn xor_subset_butterfly(words: &mut [u64], n: u32) {
    for b in 0..n.min(6) {
        let shift = 1usize << b;
        let mask = LOW_HALF_MASKS[b as usize];
        for w in words.iter_mut() {
            *w ^= (*w & mask) << shift;
        }
    }
    for b in 6..n {
        let half = 1usize << (b - 6);
        for chunk in words.chunks_mut(half * 2) {
            let (lo, hi) = chunk.split_at_mut(half);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h ^= *l;
            }
        }
    }
}

/// ANF of a Boolean function by the fast Möbius transform, O(n 2^n) bit
/// operations on packed words.
pub fn mobius(tt: &TruthTable) -> AnfPolynomial {
    let n = tt.var_count();
    let mut words = tt.words().to_vec();
    xor_subset_butterfly(&mut words, n);
    let masks = (0..tt.num_points())
        .filter(|&u| (words[u >> 6] >> (u & 63)) & 1 == 1)
        .map(|u| u as u32);
    AnfPolynomial::from_monomial_masks(n, masks)
}

/// Truth table of an ANF via the same butterfly (the transform is an
/// involution on the packed coefficient vector).
pub fn mobius_inverse(anf: &AnfPolynomial) -> TruthTable {
    let n = anf.var_count();
    let mut tt = TruthTable::zero(n);
    for mask in anf.monomial_masks() {
        tt.set(mask as usize, true);
    }
    let mut words = tt.words().to_vec();
    xor_subset_butterfly(&mut words, n);
    TruthTable::from_words(n, words)
}

/// Walsh spectrum: entry a is the sum over all points u of
/// (-1)^(f(u) XOR a.u), with a.u the parity of the AND of the two masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalshSpectrum {
    n: u32,
    values: Vec<i64>,
}

impl WalshSpectrum {
    pub fn var_count(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn value(&self, a: usize) -> i64 {
        self.values[a]
    }

    pub fn max_abs(&self) -> i64 {
        self.values.iter().map(|v| v.abs()).max().unwrap()
    }
}

pub fn walsh_spectrum(tt: &TruthTable) -> WalshSpectrum {
    walsh_spectrum_counted(tt, &mut OpCounters::default())
}

/// Walsh butterfly with instrumented integer additions/subtractions.
pub fn walsh_spectrum_counted(tt: &TruthTable, counters: &mut OpCounters) -> WalshSpectrum {
    let n = tt.var_count();
    let size = tt.num_points();
    let mut values: Vec<i64> = (0..size).map(|p| 1 - 2 * tt.get(p) as i64).collect();
    for b in 0..n {
        let half = 1usize << b;
        for chunk in values.chunks_mut(half * 2) {
            let (lo, hi) = chunk.split_at_mut(half);
            for (z, o) in lo.iter_mut().zip(hi.iter_mut()) {
                let zv = *z;
                let ov = *o;
                *z = zv + ov;
                *o = zv - ov;
                counters.sums += 2;
            }
        }
    }
    WalshSpectrum { n, values }
}

/// Nonlinearity from the Walsh spectrum: 2^(n-1) - max|W|/2.
pub fn fwt_nonlinearity(tt: &TruthTable) -> u32 {
    let spectrum = walsh_spectrum(tt);
    let n = tt.var_count();
    ((1i64 << (n - 1)) - spectrum.max_abs() / 2) as u32
}

/// Nonlinearity plus the full closest-affine set, decoded from the
/// spectrum: the distance to the linear function with mask a is
/// (2^n - W(a))/2, and flipping the constant term complements it.
pub fn fwt_closest_affine(tt: &TruthTable) -> (u32, BTreeSet<AffineFunction>) {
    let spectrum = walsh_spectrum(tt);
    let n = tt.var_count();
    let full = 1i64 << n;
    let mut best = i64::MAX;
    let mut argmin = BTreeSet::new();
    for a0 in 0..2u32 {
        for (a, &w) in spectrum.values().iter().enumerate() {
            let d = if a0 == 0 {
                (full - w) / 2
            } else {
                (full + w) / 2
            };
            if d < best {
                best = d;
                argmin.clear();
            }
            if d == best {
                argmin.insert(AffineFunction::from_index(n, (a0 << n) | a as u32));
            }
        }
    }
    (best as u32, argmin)
}

/// Multilinear polynomial with exact integer coefficients over m Boolean
/// variables; coefficient u belongs to the product of the variables in the
/// mask u. Houses numerical normal forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerPolynomial {
    m: u32,
    coeffs: Vec<i64>,
}

fn infer_log2_len(len: usize) -> u32 {
    assert!(
        len >= 1 && len.is_power_of_two(),
        "length must be a power of two"
    );
    len.trailing_zeros()
}

impl IntegerPolynomial {
    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        let m = infer_log2_len(coeffs.len());
        Self { m, coeffs }
    }

    pub fn var_count(&self) -> u32 {
        self.m
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Values at all 2^m points by the subset-sum (zeta) butterfly; exact
    /// inverse of [`nnf_from_values`].
    pub fn evaluate_all(&self) -> Vec<i64> {
        let mut values = self.coeffs.clone();
        for b in 0..self.m {
            let half = 1usize << b;
            for chunk in values.chunks_mut(half * 2) {
                let (lo, hi) = chunk.split_at_mut(half);
                for (z, o) in lo.iter().zip(hi.iter_mut()) {
                    *o += *z;
                }
            }
        }
        values
    }
}

/// Coefficients of the unique multilinear polynomial interpolating the given
/// values on {0,1}^m, by the signed Möbius butterfly in O(m 2^m) integer
/// operations.
pub fn nnf_from_values(values: &[i64]) -> IntegerPolynomial {
    let m = infer_log2_len(values.len());
    let mut coeffs = values.to_vec();
    for b in 0..m {
        let half = 1usize << b;
        for chunk in coeffs.chunks_mut(half * 2) {
            let (lo, hi) = chunk.split_at_mut(half);
            for (z, o) in lo.iter().zip(hi.iter_mut()) {
                *o -= *z;
            }
        }
    }
    IntegerPolynomial { m, coeffs }
}

/// Self-check variant of [`nnf_from_values`]: the direct double summation
/// sign-weighted over the subset lattice, O(3^m), capped at m <= 12.
pub fn nnf_from_values_direct(values: &[i64]) -> Result<IntegerPolynomial> {
    let m = infer_log2_len(values.len());
    if m > 12 {
        return Err(Error::SizeLimit(format!(
            "direct interpolation is capped at m<=12, got m={m}"
        )));
    }
    let mut coeffs = vec![0i64; values.len()];
    for (u, c) in coeffs.iter_mut().enumerate() {
        let sign_u = if (u.count_ones() & 1) == 1 { -1 } else { 1 };
        // Walk every subset a of u.
        let mut a = u;
        let mut acc = 0i64;
        loop {
            let sign_a = if (a.count_ones() & 1) == 1 { -1 } else { 1 };
            acc += sign_a * values[a];
            if a == 0 {
                break;
            }
            a = (a - 1) & u;
        }
        *c = sign_u as i64 * acc;
    }
    Ok(IntegerPolynomial { m, coeffs })
}

/// NNF of a Boolean function (its 0/1 truth table read as integers).
pub fn nnf_from_truth_table(tt: &TruthTable) -> IntegerPolynomial {
    let values: Vec<i64> = (0..tt.num_points()).map(|p| tt.get(p) as i64).collect();
    nnf_from_values(&values)
}
