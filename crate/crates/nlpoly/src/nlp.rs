//! The nonlinearity polynomial: an integer polynomial in a_0..a_n whose
//! value at each 0/1 coefficient tuple is the Hamming distance from f to
//! the affine function with those coefficients.
//!
//! Coefficients are indexed like [`AffineFunction`] packs its tuple: index
//! i < 2^n is the monomial over a_1..a_n with a_j at bit n-j, and index
//! i >= 2^n multiplies that monomial by a_0. Three independent constructors
//! are provided: the in-place butterfly (the fast route), the closed-form
//! coefficient formula, and the sum of interpolated affine indicators.

use std::collections::BTreeSet;

use crate::affine::AffineFunction;
use crate::error::{Error, Result};
use crate::transforms::nnf_from_values;
use crate::truth_table::TruthTable;

/// Exact counts of the integer operations performed by the butterflies:
/// `sums` are additions, `doublings` are multiply-by-(-2) / shift steps
/// (with or without an added constant).
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCounters {
    pub sums: u64,
    pub doublings: u64,
}

/// Coefficient vector of the nonlinearity polynomial, length 2^(n+1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NlpCoefficients {
    n: u32,
    coeffs: Vec<i64>,
}

/// Evaluations of the nonlinearity polynomial at all 2^(n+1) coefficient
/// tuples; entry e is the distance from f to the affine function with
/// packed index e.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NlpEvaluations {
    n: u32,
    values: Vec<i64>,
}

impl NlpCoefficients {
    /// In-place butterfly construction, n 2^(n-1) sums and n 2^(n-1) + 2^n
    /// doublings. Level i merges blocks of size 2^(i+1): the low half of a
    /// block accumulates the high half, then each high entry x+2^i becomes
    /// 2^i - 2c (at the block head) or -2c; the a_0 half is filled last.
    pub fn from_butterfly(tt: &TruthTable, counters: &mut OpCounters) -> Self {
        let n = tt.var_count();
        let size = tt.num_points();
        let mut c = vec![0i64; size * 2];
        for (p, slot) in c.iter_mut().take(size).enumerate() {
            *slot = tt.get(p) as i64;
        }
        for i in 0..n {
            let half = 1usize << i;
            let block = half << 1;
            let mut b = 0;
            while b < size {
                for x in b..b + half {
                    let old = c[x + half];
                    c[x] += old;
                    counters.sums += 1;
                    c[x + half] = if x == b {
                        half as i64 - 2 * old
                    } else {
                        -2 * old
                    };
                    counters.doublings += 1;
                }
                b += block;
            }
        }
        c[size] = size as i64 - 2 * c[0];
        counters.doublings += 1;
        for i in 1..size {
            c[size + i] = -2 * c[i];
            counters.doublings += 1;
        }
        Self { n, coeffs: c }
    }

    /// Closed-form coefficients: the constant term is the weight of f, and
    /// the coefficient of a nonzero monomial v with linear part vt is
    /// (-1)^w(v) 2^(w(v)-1) (2S - T), where S sums f over the superset cone
    /// of vt and T = 2^(n - w(vt)) is the cone size. Superset sums for all
    /// vt come from one O(n 2^n) butterfly.
    pub fn from_closed_form(tt: &TruthTable) -> Result<Self> {
        let n = tt.var_count();
        if n > 16 {
            return Err(Error::SizeLimit(format!(
                "closed-form construction is capped at n<=16, got n={n}"
            )));
        }
        let size = tt.num_points();
        let mut cone_sums: Vec<i64> = (0..size).map(|p| tt.get(p) as i64).collect();
        for b in 0..n {
            let half = 1usize << b;
            for chunk in cone_sums.chunks_mut(half * 2) {
                let (lo, hi) = chunk.split_at_mut(half);
                for (z, o) in lo.iter_mut().zip(hi.iter()) {
                    *z += *o;
                }
            }
        }
        let mut coeffs = vec![0i64; size * 2];
        coeffs[0] = cone_sums[0];
        for (v, slot) in coeffs.iter_mut().enumerate().skip(1) {
            let vt = v & (size - 1);
            let weight_v = if v >= size {
                vt.count_ones() + 1
            } else {
                vt.count_ones()
            };
            let cone_size = 1i64 << (n - vt.count_ones());
            let magnitude = (2 * cone_sums[vt] - cone_size) << (weight_v - 1);
            *slot = if weight_v & 1 == 1 {
                -magnitude
            } else {
                magnitude
            };
        }
        Ok(Self { n, coeffs })
    }

    /// Oracle construction: interpolate each affine-plus-bit indicator
    /// a_0 + a.x(p) + f(p) as a Boolean function of (a_0..a_n) and sum the
    /// resulting integer coefficient vectors.
    pub fn from_nnf_sum(tt: &TruthTable) -> Result<Self> {
        let n = tt.var_count();
        if n > 8 {
            return Err(Error::SizeLimit(format!(
                "interpolation-sum construction is capped at n<=8, got n={n}"
            )));
        }
        let size = tt.num_points();
        let len = size * 2;
        let mut acc = vec![0i64; len];
        let mut values = vec![0i64; len];
        for p in 0..size {
            let fp = tt.get(p) as u32;
            for (e, v) in values.iter_mut().enumerate() {
                let a0 = (e >> n) as u32 & 1;
                let lin = e & (size - 1);
                *v = (a0 ^ ((lin & p).count_ones() & 1) ^ fp) as i64;
            }
            let term = nnf_from_values(&values);
            for (a, c) in acc.iter_mut().zip(term.coeffs()) {
                *a += *c;
            }
        }
        Ok(Self { n, coeffs: acc })
    }

    pub fn var_count(&self) -> u32 {
        self.n
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Subset-sum (zeta) butterfly over the n+1 index bits, (n+1) 2^n sums.
    pub fn evaluate_all(&self, counters: &mut OpCounters) -> NlpEvaluations {
        let mut values = self.coeffs.clone();
        for b in 0..=self.n {
            let half = 1usize << b;
            for chunk in values.chunks_mut(half * 2) {
                let (lo, hi) = chunk.split_at_mut(half);
                for (z, o) in lo.iter().zip(hi.iter_mut()) {
                    *o += *z;
                    counters.sums += 1;
                }
            }
        }
        NlpEvaluations { n: self.n, values }
    }
}

impl NlpEvaluations {
    pub fn var_count(&self) -> u32 {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Distance from f to one affine function.
    pub fn value_at(&self, alpha: &AffineFunction) -> i64 {
        assert_eq!(alpha.var_count(), self.n, "dimension mismatch");
        self.values[alpha.index() as usize]
    }

    pub fn min_value(&self) -> i64 {
        *self.values.iter().min().unwrap()
    }

    /// Minimum value and all minimizing coefficient tuples, decoded in
    /// ascending evaluation index.
    pub fn closest(&self) -> (u32, BTreeSet<AffineFunction>) {
        let best = self.min_value();
        let argmin = self
            .values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == best)
            .map(|(e, _)| AffineFunction::from_index(self.n, e as u32))
            .collect();
        (best as u32, argmin)
    }
}

/// Nonlinearity and full closest-affine set via butterfly construction and
/// fast evaluation, O(n 2^n) integer operations end to end.
pub fn nonlinearity(tt: &TruthTable) -> (u32, BTreeSet<AffineFunction>) {
    let mut scratch = OpCounters::default();
    let coeffs = NlpCoefficients::from_butterfly(tt, &mut scratch);
    let evals = coeffs.evaluate_all(&mut scratch);
    evals.closest()
}

/// Value-only variant of [`nonlinearity`].
pub fn nonlinearity_value(tt: &TruthTable) -> u32 {
    let mut scratch = OpCounters::default();
    let coeffs = NlpCoefficients::from_butterfly(tt, &mut scratch);
    let evals = coeffs.evaluate_all(&mut scratch);
    evals.min_value() as u32
}
